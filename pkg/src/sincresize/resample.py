"""Apply filter banks to sequences and, separably, to images."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .filterbank import DEFAULT_EPSILON, FilterBank, build_filter_bank
from .kernels import KernelSpec, SincCoshGaussian

__all__ = [
    "Image",
    "ResizeOptions",
    "extend_indices",
    "resample_1d",
    "resample_axis",
    "resize_planes",
    "resize_image",
    "quantize",
    "srgb_decode",
    "srgb_encode",
]

DEFAULT_KERNEL = SincCoshGaussian(0.31, 0.0)


@dataclass(frozen=True)
class Image:
    """Planar 8-bit raster, ``planes`` shaped ``(channels, height, width)``."""

    planes: np.ndarray

    def __post_init__(self):
        planes = np.ascontiguousarray(self.planes, dtype=np.uint8)
        if planes.ndim != 3 or planes.shape[0] not in (1, 3):
            raise ValueError(f"planes must have shape (1|3, h, w), got {planes.shape}")
        if planes.shape[1] < 1 or planes.shape[2] < 1:
            raise ValueError("image dimensions must be >= 1")
        object.__setattr__(self, "planes", planes)

    @property
    def channels(self) -> int:
        return self.planes.shape[0]

    @property
    def height(self) -> int:
        return self.planes.shape[1]

    @property
    def width(self) -> int:
        return self.planes.shape[2]

    def __eq__(self, other):
        if not isinstance(other, Image):
            return NotImplemented
        return self.planes.shape == other.planes.shape and np.array_equal(self.planes, other.planes)

    __hash__ = None


@dataclass(frozen=True)
class ResizeOptions:
    edge: str = "clamp"
    normalize: bool = True
    epsilon: float = DEFAULT_EPSILON
    alignment: str = "origin"
    linearize: bool = False


def extend_indices(idx, length: int, edge: str = "clamp") -> np.ndarray:
    """Map arbitrary integer positions into ``[0, length)``.

    ``clamp`` replicates the border sample; ``reflect`` mirrors about the
    border sample without repeating it (``c b | a b c d | c b``).
    """
    idx = np.asarray(idx, dtype=np.int64)
    if edge == "clamp" or length == 1:
        if edge not in ("clamp", "reflect"):
            raise ValueError(f"edge must be 'clamp' or 'reflect', got {edge!r}")
        return np.clip(idx, 0, length - 1)
    if edge == "reflect":
        period = 2 * (length - 1)
        m = np.mod(idx, period)
        return np.where(m < length, m, period - m)
    raise ValueError(f"edge must be 'clamp' or 'reflect', got {edge!r}")


def resample_axis(data: np.ndarray, bank: FilterBank, axis: int, edge: str = "clamp") -> np.ndarray:
    """Resample ``data`` along ``axis`` with ``bank``; float64 result."""
    data = np.asarray(data, dtype=np.float64)
    if data.shape[axis] != bank.in_len:
        raise ValueError(
            f"bank expects {bank.in_len} samples along axis {axis}, got {data.shape[axis]}"
        )
    moved = np.moveaxis(data, axis, 0)
    anchors, ks, cs = bank.dense()
    src = extend_indices(anchors[:, None] - ks, bank.in_len, edge)
    shape = (len(anchors),) + (1,) * (moved.ndim - 1)
    out = np.zeros((len(anchors),) + moved.shape[1:])
    # fixed tap order keeps results bit-reproducible
    for j in range(ks.shape[1]):
        out += cs[:, j].reshape(shape) * moved[src[:, j]]
    return np.moveaxis(out, 0, axis)


def resample_1d(signal, bank: FilterBank, edge: str = "clamp") -> np.ndarray:
    """``out[n] = sum_k coeff_k * s[anchor_n - k]`` with edge extension."""
    signal = np.asarray(signal, dtype=np.float64)
    if signal.ndim != 1:
        raise ValueError("resample_1d expects a 1D signal")
    return resample_axis(signal, bank, 0, edge)


def srgb_decode(code: np.ndarray) -> np.ndarray:
    """8-bit sRGB code values to linear light scaled to [0, 255]."""
    c = np.asarray(code, dtype=np.float64) / 255.0
    lin = np.where(c <= 0.04045, c / 12.92, ((c + 0.055) / 1.055) ** 2.4)
    return lin * 255.0


def srgb_encode(linear: np.ndarray) -> np.ndarray:
    x = np.clip(np.asarray(linear, dtype=np.float64) / 255.0, 0.0, 1.0)
    c = np.where(x <= 0.0031308, 12.92 * x, 1.055 * x ** (1.0 / 2.4) - 0.055)
    return c * 255.0


def quantize(values: np.ndarray) -> np.ndarray:
    """Round half away from zero, then clamp to ``[0, 255]``."""
    v = np.asarray(values, dtype=np.float64)
    r = np.sign(v) * np.floor(np.abs(v) + 0.5)
    return np.clip(r, 0, 255).astype(np.uint8)


def resize_planes(
    planes: np.ndarray,
    out_w: int,
    out_h: int,
    spec: KernelSpec = DEFAULT_KERNEL,
    options: ResizeOptions = ResizeOptions(),
    order: str = "columns-first",
) -> np.ndarray:
    """Float-domain separable resize of ``(channels, h, w)`` data.

    The vertical pass (along columns) runs before the horizontal pass
    unless ``order='rows-first'``.
    """
    planes = np.asarray(planes, dtype=np.float64)
    _, h, w = planes.shape
    if out_w < 1 or out_h < 1:
        raise ValueError(f"output size must be >= 1, got {out_w}x{out_h}")
    vbank = build_filter_bank(spec, h, out_h, options.epsilon, options.normalize, options.alignment)
    hbank = build_filter_bank(spec, w, out_w, options.epsilon, options.normalize, options.alignment)
    if order == "columns-first":
        tmp = resample_axis(planes, vbank, 1, options.edge)
        return resample_axis(tmp, hbank, 2, options.edge)
    if order == "rows-first":
        tmp = resample_axis(planes, hbank, 2, options.edge)
        return resample_axis(tmp, vbank, 1, options.edge)
    raise ValueError(f"order must be 'columns-first' or 'rows-first', got {order!r}")


def resize_image(
    img: Image,
    out_w: int,
    out_h: int,
    spec: KernelSpec = DEFAULT_KERNEL,
    options: ResizeOptions = ResizeOptions(),
) -> Image:
    """Resize ``img`` to ``out_w`` x ``out_h``.

    Filtering happens in float64 on code values (or on linear light with
    ``options.linearize``); the result is rounded half away from zero and
    clamped to 8 bits.
    """
    data = img.planes.astype(np.float64)
    if options.linearize:
        data = srgb_decode(data)
    out = resize_planes(data, out_w, out_h, spec, options)
    if options.linearize:
        out = srgb_encode(out)
    return Image(quantize(out))
