"""DC-response errors, response distances, parameter fitting and PSNR."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .filterbank import phase_coefficients
from .kernels import KernelSpec, SincCoshGaussian
from .resample import Image
from .spectral import kernel_transform, said_transform

__all__ = [
    "ANALYSIS_EPSILON",
    "PSNR_CAP",
    "DcErrorCurve",
    "FitResult",
    "dc_response",
    "dc_response_spectral",
    "response_distance",
    "fit_parameters",
    "psnr",
]

ANALYSIS_EPSILON = 1e-9
PSNR_CAP = 99.0

CHI_RANGE = (0.05, 0.70)
ETA_RANGE = (0.0, 1.40)
COARSE_STEPS = (66, 57)


@dataclass(frozen=True)
class DcErrorCurve:
    beta: float
    t_grid: np.ndarray
    error: np.ndarray

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("t,error\n")
        for t, e in zip(self.t_grid, self.error):
            buf.write(f"{t:.17g},{e + 0.0:.17g}\n")
        return buf.getvalue()


@dataclass(frozen=True)
class FitResult:
    chi: float
    eta: float
    residual: float
    evaluations: int

    def report(self) -> str:
        return f"{self.chi:.6f},{self.eta:.6f},{self.residual:.6e},{self.evaluations}"

    @property
    def kernel(self) -> SincCoshGaussian:
        return SincCoshGaussian(self.chi, self.eta)


def dc_response(
    spec: KernelSpec, beta: float, n_t: int = 201, epsilon: float = ANALYSIS_EPSILON
) -> DcErrorCurve:
    """Error of the partition of unity, ``beta * sum_k h(beta (t - k)) - 1``, on ``t in [0, 1)``.

    Taps are used unnormalized so the error is exposed rather than repaired.
    """
    if n_t < 2:
        raise ValueError(f"n_t must be >= 2, got {n_t}")
    t = np.arange(n_t) / n_t
    err = np.array(
        [phase_coefficients(spec, ti, beta, epsilon, normalize=False).coeff.sum() - 1.0 for ti in t]
    )
    return DcErrorCurve(beta=float(beta), t_grid=t, error=err)


def dc_response_spectral(
    spec: KernelSpec, beta: float, n_harmonics: int, t, epsilon: float = ANALYSIS_EPSILON
):
    """Same error through its Fourier series, ``H(0) + 2 sum_n H(n/beta) cos(2 pi n t) - 1``."""
    if n_harmonics < 1:
        raise ValueError(f"n_harmonics must be >= 1, got {n_harmonics}")
    n = np.arange(1, n_harmonics + 1)
    h0 = kernel_transform(spec, 0.0, epsilon)
    hn = np.asarray(kernel_transform(spec, n / beta, epsilon))
    t = np.asarray(t, dtype=float)
    out = h0 + 2.0 * np.sum(np.cos(2.0 * np.pi * t[..., None] * n) * hn, axis=-1) - 1.0
    return float(out) if out.ndim == 0 else out


def _grid(f_max, n_points):
    if n_points < 2:
        raise ValueError(f"n_points must be >= 2, got {n_points}")
    return np.linspace(0.0, f_max, n_points)


def response_distance(
    a: KernelSpec, b: KernelSpec, f_max: float = 1.5, n_points: int = 301
) -> float:
    """RMS of ``|H_a(f) - H_b(f)|`` on a uniform grid over ``[0, f_max]``."""
    f = _grid(f_max, n_points)
    d = np.asarray(kernel_transform(a, f)) - np.asarray(kernel_transform(b, f))
    return float(np.sqrt(np.mean(d * d)))


def fit_parameters(
    target: KernelSpec,
    f_max: float = 1.5,
    coarse_steps=COARSE_STEPS,
    refine_iters: int = 400,
    n_points: int = 301,
) -> FitResult:
    """Closest sinc-cosh-Gaussian kernel to ``target`` in frequency response.

    A coarse grid over ``chi in [0.05, 0.7]``, ``eta in [0, 1.4]`` picks the
    start (ties go to the smallest ``(chi, eta)``), then Nelder-Mead
    refines it for at most ``refine_iters`` iterations.
    """
    if isinstance(coarse_steps, int):
        coarse_steps = (coarse_steps, coarse_steps)
    n_chi, n_eta = coarse_steps
    if n_chi < 2 or n_eta < 2:
        raise ValueError(f"coarse grid needs >= 2 steps per axis, got {coarse_steps}")
    f = _grid(f_max, n_points)
    reference = np.asarray(kernel_transform(target, f))

    def objective(chi, eta):
        d = said_transform(f, chi, eta) - reference
        return math.sqrt(float(np.mean(d * d)))

    chis = np.linspace(*CHI_RANGE, n_chi)
    etas = np.linspace(*ETA_RANGE, n_eta)
    values = np.array([[objective(c, e) for e in etas] for c in chis])
    i, j = np.unravel_index(np.argmin(values), values.shape)
    best = (float(chis[i]), float(etas[j]), float(values[i, j]))
    evaluations = values.size

    if refine_iters > 0:
        lo = (1e-3, 0.0)
        hi = (2.0, 1.98)

        d_chi = chis[1] - chis[0]
        d_eta = etas[1] - etas[0]
        start = np.array(best[:2])
        simplex = np.array([start, start + (d_chi, 0.0), start + (0.0, d_eta)])
        simplex = np.clip(simplex, lo, hi)
        res = minimize(
            lambda p: objective(p[0], p[1]),
            start,
            method="Nelder-Mead",
            bounds=list(zip(lo, hi)),
            options={
                "maxiter": refine_iters,
                "initial_simplex": simplex,
                "xatol": 1e-10,
                "fatol": 1e-15,
            },
        )
        evaluations += int(res.nfev)
        if res.fun < best[2]:
            best = (float(res.x[0]), float(res.x[1]), float(res.fun))
    return FitResult(chi=best[0], eta=best[1], residual=best[2], evaluations=evaluations)


def psnr(a: Image, b: Image) -> float:
    """Peak signal-to-noise ratio in dB over all samples, capped at 99 dB."""
    pa = a.planes if isinstance(a, Image) else np.asarray(a)
    pb = b.planes if isinstance(b, Image) else np.asarray(b)
    if pa.shape != pb.shape:
        raise ValueError(f"image shapes differ: {pa.shape} vs {pb.shape}")
    diff = pa.astype(np.float64) - pb.astype(np.float64)
    mse = float(np.mean(diff * diff))
    if mse == 0.0:
        return PSNR_CAP
    return min(PSNR_CAP, 10.0 * math.log10(255.0**2 / mse))
