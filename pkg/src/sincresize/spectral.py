"""Fourier transforms of the kernels and sampled response tables."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from .kernels import KernelSpec, ParameterError, SincCoshGaussian, eval_kernel, support

__all__ = [
    "DB_FLOOR",
    "ResponseGrid",
    "p_s",
    "said_transform",
    "numeric_transform",
    "kernel_transform",
    "response_grid",
    "to_db",
]

DB_FLOOR = -200.0

_SERIES_OMEGA = math.pi / 17.0
_SERIES_N = np.arange(1, 23, dtype=float)
# exp(-2 w^2 n^2): the Fourier coefficients of the Gaussian density
# periodized with period 17.
_SERIES_DECAY = np.exp(-2.0 * _SERIES_OMEGA**2 * _SERIES_N**2) / (math.pi * _SERIES_N)


def p_s(f, eta: float):
    """Scaled Gaussian-cosine integral from which the kernel transform is built.

    ``P(f; eta) = exp(eta/2) / sqrt(2 pi) * integral_0^f exp(-x^2/2) cos(sqrt(eta) x) dx``,
    evaluated with a 22-term sine series of period 17 and saturated to
    +-1/2 for ``|f| > 8``.
    """
    if not (0.0 <= eta < 2.0):
        raise ParameterError(f"eta must lie in [0, 2), got {eta}")
    f = np.asarray(f, dtype=float)
    gain = _SERIES_DECAY * np.cosh(2.0 * _SERIES_OMEGA * _SERIES_N * math.sqrt(eta))
    series = f / 17.0 + np.sum(np.sin(2.0 * _SERIES_OMEGA * f[..., None] * _SERIES_N) * gain, axis=-1)
    out = np.where(f > 8.0, 0.5, np.where(f < -8.0, -0.5, series))
    return float(out) if out.ndim == 0 else out


def said_transform(f, chi: float, eta: float = 0.0):
    """Closed-form frequency response of :class:`SincCoshGaussian`."""
    SincCoshGaussian(chi, eta)  # validates parameters
    f = np.asarray(f, dtype=float)
    scale = (2.0 - eta) / (math.sqrt(2.0) * chi)
    out = np.asarray(p_s((2.0 * f + 1.0) * scale, eta)) - np.asarray(
        p_s((2.0 * f - 1.0) * scale, eta)
    )
    return float(out) if out.ndim == 0 else out


def _simpson_weights(n_intervals: int, h: float) -> np.ndarray:
    w = np.ones(n_intervals + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w * (h / 3.0)


def numeric_transform(spec: KernelSpec, f, epsilon: float = 1e-9):
    """Frequency response by quadrature, ``2 * int_0^R h(t) cos(2 pi f t) dt``.

    ``R`` is the support radius at ``epsilon``. Composite Simpson with
    panels of width at most 1/256 (sub-intervals of 1/512).
    """
    radius = support(spec, epsilon).radius
    n = 2 * max(1, math.ceil(256.0 * radius))
    h = radius / n
    t = np.linspace(0.0, radius, n + 1)
    values = np.asarray(eval_kernel(spec, t), dtype=float)
    # left limit at the truncation point (matters for kernels with a jump there)
    values[-1] = eval_kernel(spec, np.nextafter(radius, 0.0))
    weights = _simpson_weights(n, h) * values
    f = np.asarray(f, dtype=float)
    out = 2.0 * np.sum(np.cos(2.0 * np.pi * f.reshape(-1, 1) * t) * weights, axis=1)
    return float(out[0]) if f.ndim == 0 else out.reshape(f.shape)


def kernel_transform(spec: KernelSpec, f, epsilon: float = 1e-9):
    """Frequency response through the closed form when one exists, else quadrature."""
    if isinstance(spec, SincCoshGaussian):
        return said_transform(f, spec.chi, spec.eta)
    return numeric_transform(spec, f, epsilon)


def to_db(linear) -> np.ndarray:
    mag = np.abs(np.asarray(linear, dtype=float))
    with np.errstate(divide="ignore"):
        db = 20.0 * np.log10(mag)
    return np.maximum(db, DB_FLOOR)


@dataclass(frozen=True)
class ResponseGrid:
    """Sampled impulse or frequency response."""

    abscissa: np.ndarray
    linear: np.ndarray
    db: np.ndarray

    def __post_init__(self):
        if not (len(self.abscissa) == len(self.linear) == len(self.db)):
            raise ValueError("response grid columns differ in length")
        if np.any(np.diff(self.abscissa) <= 0):
            raise ValueError("abscissa must be strictly increasing")

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("x,linear,db\n")
        for x, v, d in zip(self.abscissa, self.linear, self.db):
            buf.write(f"{x:.17g},{v + 0.0:.17g},{d:.17g}\n")
        return buf.getvalue()


def response_grid(
    spec: KernelSpec,
    mode: str = "frequency",
    x_max: float = 1.5,
    n_points: int = 301,
    epsilon: float = 1e-9,
) -> ResponseGrid:
    """Impulse (``h(t)``) or frequency (``H(f)``) response on ``[0, x_max]``."""
    if n_points < 2:
        raise ValueError(f"n_points must be >= 2, got {n_points}")
    if not x_max > 0:
        raise ValueError(f"x_max must be positive, got {x_max}")
    x = np.linspace(0.0, x_max, n_points)
    if mode == "impulse":
        linear = np.asarray(eval_kernel(spec, x), dtype=float)
    elif mode == "frequency":
        linear = np.asarray(kernel_transform(spec, x, epsilon), dtype=float)
    else:
        raise ValueError(f"mode must be 'impulse' or 'frequency', got {mode!r}")
    return ResponseGrid(abscissa=x, linear=linear, db=to_db(linear))
