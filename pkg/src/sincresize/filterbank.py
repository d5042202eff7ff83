"""Precomputed polyphase coefficient arrays for 1D resampling.

Output sample ``n`` is ``sum_k coeff_k * s[anchor_n - k]`` with
``coeff_k = beta * h(beta * (k + alpha_n))``. A bank holds one such tap
set per output sample, stored in output order, and is shared by every
row (or column) of an image.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from .kernels import KernelSpec, eval_kernel, support

__all__ = [
    "DEFAULT_EPSILON",
    "DegenerateFilterError",
    "PhaseFilter",
    "FilterBank",
    "phase_coefficients",
    "build_filter_bank",
    "phase_offsets",
]

DEFAULT_EPSILON = 1e-4


class DegenerateFilterError(ValueError):
    """No tap survives the truncation rule, or the taps sum to zero."""


@dataclass(frozen=True)
class PhaseFilter:
    anchor: int
    alpha: float
    k: np.ndarray
    coeff: np.ndarray

    @property
    def taps(self):
        return list(zip(self.k.tolist(), self.coeff.tolist()))


@dataclass(frozen=True)
class FilterBank:
    phases: tuple
    beta: float
    normalized: bool
    in_len: int

    def __len__(self):
        return len(self.phases)

    def dense(self):
        """Padded ``(anchors, k, coeff)`` arrays, shape ``(out_len, max_taps)``.

        Padding entries carry ``k = 0`` and ``coeff = 0``.
        """
        width = max(len(p.k) for p in self.phases)
        n = len(self.phases)
        ks = np.zeros((n, width), dtype=np.int64)
        cs = np.zeros((n, width))
        anchors = np.empty(n, dtype=np.int64)
        for i, p in enumerate(self.phases):
            ks[i, : len(p.k)] = p.k
            cs[i, : len(p.k)] = p.coeff
            anchors[i] = p.anchor
        return anchors, ks, cs

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("n,anchor,alpha,k,coeff\n")
        for n, p in enumerate(self.phases):
            for k, c in zip(p.k.tolist(), p.coeff.tolist()):
                buf.write(f"{n},{p.anchor},{p.alpha:.17g},{k},{c + 0.0:.17g}\n")
        return buf.getvalue()


def phase_coefficients(
    spec: KernelSpec,
    alpha: float,
    beta: float,
    epsilon: float = DEFAULT_EPSILON,
    normalize: bool = True,
) -> PhaseFilter:
    """Taps ``beta * h(beta * (k + alpha))`` for one fractional phase.

    Taps with ``|h| < epsilon`` are dropped. The returned filter has
    ``anchor = 0``.
    """
    if not (0.0 <= alpha < 1.0):
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    if not (0.0 < beta <= 1.0):
        raise ValueError(f"beta must lie in (0, 1], got {beta}")
    radius = support(spec, epsilon).radius
    reach = math.ceil(radius / beta + 1.0)
    k = np.arange(-reach, reach + 1)
    h = np.asarray(eval_kernel(spec, beta * (k + alpha)), dtype=float)
    keep = np.abs(h) >= epsilon
    if not keep.any():
        raise DegenerateFilterError(
            f"no tap of {spec!r} reaches epsilon={epsilon} at alpha={alpha}, beta={beta}"
        )
    k = k[keep]
    coeff = beta * h[keep]
    if normalize:
        total = coeff.sum()
        if total == 0.0:
            raise DegenerateFilterError(f"taps of {spec!r} sum to zero at alpha={alpha}")
        coeff = coeff / total
    k.flags.writeable = False
    coeff.flags.writeable = False
    return PhaseFilter(anchor=0, alpha=float(alpha), k=k, coeff=coeff)


def phase_offsets(in_len: int, out_len: int, alignment: str = "origin"):
    """Integer anchors and fractional phases for every output index.

    ``origin`` maps output ``n`` to input coordinate ``n * in/out``;
    ``center`` maps it to ``(n + 1/2) * in/out - 1/2``. Both are computed
    exactly in integer arithmetic.
    """
    n = np.arange(out_len, dtype=np.int64)
    if alignment == "origin":
        num = n * in_len
        den = out_len
    elif alignment == "center":
        num = (2 * n + 1) * in_len - out_len
        den = 2 * out_len
    else:
        raise ValueError(f"alignment must be 'origin' or 'center', got {alignment!r}")
    anchors = num // den
    alphas = (num - anchors * den) / den
    return anchors, alphas


def build_filter_bank(
    spec: KernelSpec,
    in_len: int,
    out_len: int,
    epsilon: float = DEFAULT_EPSILON,
    normalize: bool = True,
    alignment: str = "origin",
) -> FilterBank:
    """Filter bank resampling ``in_len`` samples to ``out_len``.

    ``beta = min(1, out_len / in_len)`` so downscaling stretches the
    kernel to cut off at the output Nyquist rate. Phases that share a
    fractional offset share one coefficient computation.
    """
    if in_len < 1 or out_len < 1:
        raise ValueError(f"lengths must be >= 1, got in={in_len}, out={out_len}")
    beta = min(1.0, out_len / in_len)
    anchors, alphas = phase_offsets(in_len, out_len, alignment)
    cache = {}
    phases = []
    for anchor, alpha in zip(anchors.tolist(), alphas.tolist()):
        proto = cache.get(alpha)
        if proto is None:
            proto = cache[alpha] = phase_coefficients(spec, alpha, beta, epsilon, normalize)
        phases.append(PhaseFilter(anchor=anchor, alpha=alpha, k=proto.k, coeff=proto.coeff))
    return FilterBank(phases=tuple(phases), beta=beta, normalized=normalize, in_len=in_len)
