"""Interpolation kernel families.

Every kernel is an immutable value object. ``eval_kernel`` evaluates it
(scalars or numpy arrays) and ``support`` reports how far it has to be
sampled before the values drop below a tolerance.

The text syntax shared with the command line is::

    said:chi=0.31,eta=0      sinc * cosh * Gaussian family
    lanczos:3
    bspline3                 interpolating cubic B-spline
    bspline3:raw             plain cubic B-spline basis function
    mitchell:b=0.3333,c=0.3333
    bharris:3                Blackman-Harris windowed sinc, N = 6
    tent
    box:r=16                 truncated sinc
    nearest
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

__all__ = [
    "ParameterError",
    "SincCoshGaussian",
    "Lanczos",
    "CubicBSpline",
    "MitchellNetravali",
    "BlackmanHarrisSinc",
    "Tent",
    "Box",
    "Nearest",
    "KernelSpec",
    "SupportInfo",
    "eval_kernel",
    "support",
    "parse_kernel",
    "format_kernel",
    "sinc",
    "SUPPORT_STEP",
]

SUPPORT_STEP = 1.0 / 64.0

_SQRT3 = math.sqrt(3.0)
_CARDINAL_POLE = _SQRT3 - 2.0

BH4_TERMS = (0.35875, 0.48829, 0.14128, 0.01168)
BH3_TERMS = (0.42323, 0.49755, 0.07922)


class ParameterError(ValueError):
    """A kernel parameter lies outside its domain."""


def _sinpi(t):
    # argument reduction keeps sin(pi*n) exactly zero at integers
    t = np.asarray(t, dtype=float)
    n = np.rint(t)
    s = np.sin(np.pi * (t - n))
    return np.where(np.fmod(n, 2.0) == 0.0, s, -s)


def sinc(t):
    """Normalized sinc, ``sin(pi t) / (pi t)`` with ``sinc(0) = 1``."""
    t = np.asarray(t, dtype=float)
    zero = t == 0.0
    safe = np.where(zero, 1.0, t)
    return np.where(zero, 1.0, _sinpi(safe) / (np.pi * safe))


def _bspline3(a):
    # a = |t|
    return np.where(
        a <= 1.0,
        2.0 / 3.0 - a * a + 0.5 * a**3,
        np.where(a <= 2.0, (2.0 - a) ** 3 / 6.0, 0.0),
    )


@dataclass(frozen=True)
class SincCoshGaussian:
    """Two-parameter kernel ``sinc(t) cosh(sqrt(2 eta) pi chi t / (2-eta)) exp(-(pi chi t / (2-eta))^2)``.

    ``chi`` sets the width of the transition band and ``eta`` the height
    of the single sidelobe. Text tag: ``said``.
    """

    chi: float
    eta: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.chi) and self.chi > 0.0):
            raise ParameterError(f"chi must be positive, got {self.chi}")
        if not (0.0 <= self.eta < 2.0):
            raise ParameterError(f"eta must lie in [0, 2), got {self.eta}")

    interpolating = True
    compact_radius = None

    @property
    def _rates(self):
        c = math.pi * self.chi / (2.0 - self.eta)
        b = math.sqrt(2.0 * self.eta) * c
        return b, c

    def _cosh_gauss(self, a):
        b, c = self._rates
        g = -((c * a) ** 2)
        # cosh(x) e^g written to avoid overflow of cosh on its own
        return 0.5 * (np.exp(b * a + g) + np.exp(-b * a + g))

    def evaluate(self, t):
        a = np.abs(np.asarray(t, dtype=float))
        return sinc(a) * self._cosh_gauss(a)

    def envelope(self, a):
        return self._cosh_gauss(a) * np.minimum(1.0, 1.0 / (np.pi * np.maximum(a, 1e-300)))

    def envelope_settled(self, a):
        """True once the bound ``exp(b a - c^2 a^2) / (pi a)`` is decreasing."""
        b, c = self._rates
        return a >= b / (2.0 * c * c)


@dataclass(frozen=True)
class Lanczos:
    """``sinc(t) sinc(t / m)`` on ``|t| < m``."""

    m: int

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 1:
            raise ParameterError(f"Lanczos order must be a positive integer, got {self.m}")

    interpolating = True

    @property
    def compact_radius(self):
        return float(self.m)

    def evaluate(self, t):
        a = np.abs(np.asarray(t, dtype=float))
        return np.where(a < self.m, sinc(a) * sinc(a / self.m), 0.0)


@dataclass(frozen=True)
class CubicBSpline:
    """Cubic B-spline kernel.

    With ``interpolating=True`` (the default) this is the cardinal cubic
    spline, i.e. the B-spline combined with its inverse sampling filter so
    that the kernel passes through the samples. It has infinite support
    with geometric decay ``(2 - sqrt 3)^|t|``. With ``interpolating=False``
    it is the plain centered basis function on ``|t| <= 2``.
    """

    interpolating: bool = True

    @property
    def compact_radius(self):
        return None if self.interpolating else 2.0

    def evaluate(self, t):
        a = np.abs(np.asarray(t, dtype=float))
        if not self.interpolating:
            return _bspline3(a)
        base = np.floor(a)
        out = np.zeros_like(a)
        for j in (-1.0, 0.0, 1.0, 2.0):
            k = base + j
            out = out + _SQRT3 * _CARDINAL_POLE ** np.abs(k) * _bspline3(np.abs(a - k))
        exact = a == base
        return np.where(exact, np.where(a == 0.0, 1.0, 0.0), out)

    def envelope(self, a):
        return np.minimum(1.0, _SQRT3 * abs(_CARDINAL_POLE) ** np.maximum(a - 2.0, 0.0))

    def envelope_settled(self, a):
        return True


@dataclass(frozen=True)
class MitchellNetravali:
    """Mitchell-Netravali (B, C) piecewise cubic on ``|t| < 2``."""

    b: float = 1.0 / 3.0
    c: float = 1.0 / 3.0

    def __post_init__(self):
        if not (math.isfinite(self.b) and math.isfinite(self.c)):
            raise ParameterError("Mitchell-Netravali B and C must be finite")

    compact_radius = 2.0

    @property
    def interpolating(self):
        return self.b == 0.0

    def evaluate(self, t):
        x = np.abs(np.asarray(t, dtype=float))
        b, c = self.b, self.c
        inner = ((12 - 9 * b - 6 * c) * x**3 + (-18 + 12 * b + 6 * c) * x**2 + (6 - 2 * b)) / 6
        outer = (
            (-b - 6 * c) * x**3 + (6 * b + 30 * c) * x**2 + (-12 * b - 48 * c) * x + (8 * b + 24 * c)
        ) / 6
        return np.where(x < 1.0, inner, np.where(x < 2.0, outer, 0.0))


@dataclass(frozen=True)
class BlackmanHarrisSinc:
    """Sinc windowed by a Blackman-Harris window spanning ``|t| < half_width``.

    ``terms`` selects the 3-term (-67 dB) or the 4-term minimum
    (-92 dB) coefficient set.
    """

    half_width: int
    terms: int = 3

    def __post_init__(self):
        if int(self.half_width) != self.half_width or self.half_width < 1:
            raise ParameterError(
                f"Blackman-Harris half width must be a positive integer, got {self.half_width}"
            )
        if self.terms not in (3, 4):
            raise ParameterError(f"Blackman-Harris window has 3 or 4 terms, got {self.terms}")

    interpolating = True

    @property
    def compact_radius(self):
        return float(self.half_width)

    def evaluate(self, t):
        a = np.abs(np.asarray(t, dtype=float))
        coeffs = BH3_TERMS if self.terms == 3 else BH4_TERMS
        phase = np.pi * a / self.half_width
        # the published coefficients sum to 1 only to rounding; pin w(0) = 1
        window = sum(w * np.cos(i * phase) for i, w in enumerate(coeffs)) / sum(coeffs)
        return np.where(a < self.half_width, sinc(a) * window, 0.0)


@dataclass(frozen=True)
class Tent:
    """Linear interpolation kernel ``1 - |t|``."""

    interpolating = True
    compact_radius = 1.0

    def evaluate(self, t):
        a = np.abs(np.asarray(t, dtype=float))
        return np.where(a < 1.0, 1.0 - a, 0.0)


@dataclass(frozen=True)
class Box:
    """Ideal lowpass (sinc) truncated at ``truncation_radius``."""

    truncation_radius: float = 16.0

    def __post_init__(self):
        if not (math.isfinite(self.truncation_radius) and self.truncation_radius > 0.0):
            raise ParameterError(
                f"truncation radius must be positive, got {self.truncation_radius}"
            )

    interpolating = True
    compact_radius = None

    def evaluate(self, t):
        a = np.abs(np.asarray(t, dtype=float))
        return np.where(a < self.truncation_radius, sinc(a), 0.0)

    def envelope(self, a):
        return np.where(
            a < self.truncation_radius, np.minimum(1.0, 1.0 / (np.pi * np.maximum(a, 1e-300))), 0.0
        )

    def envelope_settled(self, a):
        return True


@dataclass(frozen=True)
class Nearest:
    """Pixel replication; the value at ``|t| = 1/2`` is 1/2 to keep the kernel even."""

    interpolating = True
    compact_radius = 0.5

    def evaluate(self, t):
        a = np.abs(np.asarray(t, dtype=float))
        return np.where(a < 0.5, 1.0, np.where(a == 0.5, 0.5, 0.0))


KernelSpec = Union[
    SincCoshGaussian,
    Lanczos,
    CubicBSpline,
    MitchellNetravali,
    BlackmanHarrisSinc,
    Tent,
    Box,
    Nearest,
]

_KERNEL_TYPES = (
    SincCoshGaussian,
    Lanczos,
    CubicBSpline,
    MitchellNetravali,
    BlackmanHarrisSinc,
    Tent,
    Box,
    Nearest,
)


@dataclass(frozen=True)
class SupportInfo:
    radius: float
    compact: bool


def _check_spec(spec):
    if not isinstance(spec, _KERNEL_TYPES):
        raise ParameterError(f"not a kernel spec: {spec!r}")


def eval_kernel(spec: KernelSpec, t):
    """Evaluate ``spec`` at ``t``.

    Returns a float for scalar input and an array otherwise.
    """
    _check_spec(spec)
    value = spec.evaluate(t)
    if np.ndim(value) == 0:
        return float(value)
    return value


def support(spec: KernelSpec, epsilon: float = 1e-4) -> SupportInfo:
    """Radius beyond which ``|h(t)| < epsilon``.

    Compact kernels report their exact support. Other kernels are scanned
    outward on a grid of step 1/64 using an upper envelope of ``|h|``; the
    radius is the grid point just past the last one where the envelope
    reaches ``epsilon``, so every ``|t|`` beyond it is below tolerance.
    """
    _check_spec(spec)
    if not (0.0 < epsilon < 1.0):
        raise ParameterError(f"epsilon must lie in (0, 1), got {epsilon}")
    return _support(spec, float(epsilon))


@lru_cache(maxsize=512)
def _support(spec, epsilon):
    if spec.compact_radius is not None:
        return SupportInfo(radius=float(spec.compact_radius), compact=True)

    step = SUPPORT_STEP
    last = 0
    j = 0
    block = 1024
    while True:
        idx = np.arange(j + 1, j + block + 1)
        a = idx * step
        above = np.nonzero(spec.envelope(a) >= epsilon)[0]
        if above.size:
            last = int(idx[above[-1]])
        j += block
        end = j * step
        if spec.envelope(end) < epsilon and spec.envelope_settled(end) and last < j - block // 2:
            break
        if j > 64 * 65536:
            raise ParameterError("kernel never drops below epsilon; increase epsilon")
    return SupportInfo(radius=(last + 1) * step, compact=False)


def _kv(body):
    out = {}
    for part in body.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ParameterError(f"expected key=value, got {part!r}")
        key, value = part.split("=", 1)
        out[key.strip().lower()] = value.strip()
    return out


def _number(text, what):
    try:
        return float(text)
    except ValueError:
        raise ParameterError(f"{what}: not a number: {text!r}") from None


def _integer(text, what):
    try:
        return int(text)
    except ValueError:
        raise ParameterError(f"{what}: not an integer: {text!r}") from None


def parse_kernel(text: str) -> KernelSpec:
    """Parse the kernel text syntax, e.g. ``said:chi=0.31,eta=0`` or ``lanczos:3``."""
    name, _, body = text.strip().partition(":")
    name = name.lower()
    if name in ("said", "scg"):
        kv = _kv(body)
        unknown = set(kv) - {"chi", "eta"}
        if unknown or "chi" not in kv:
            raise ParameterError(f"said kernel needs chi=..[,eta=..], got {text!r}")
        return SincCoshGaussian(_number(kv["chi"], "chi"), _number(kv.get("eta", "0"), "eta"))
    if name == "lanczos":
        return Lanczos(_integer(body or "3", "lanczos order"))
    if name == "bspline3":
        if body in ("", "cardinal"):
            return CubicBSpline(interpolating=True)
        if body == "raw":
            return CubicBSpline(interpolating=False)
        raise ParameterError(f"bspline3 accepts ':raw' or ':cardinal', got {text!r}")
    if name == "mitchell":
        kv = _kv(body)
        if set(kv) - {"b", "c"}:
            raise ParameterError(f"mitchell kernel takes b=..,c=.., got {text!r}")
        return MitchellNetravali(
            _number(kv.get("b", str(1.0 / 3.0)), "b"), _number(kv.get("c", str(1.0 / 3.0)), "c")
        )
    if name == "bharris":
        width, _, rest = body.partition(",")
        kv = _kv(rest)
        if set(kv) - {"terms"}:
            raise ParameterError(f"bharris kernel takes HALF_WIDTH[,terms=3|4], got {text!r}")
        return BlackmanHarrisSinc(
            _integer(width or "3", "half width"), _integer(kv.get("terms", "3"), "terms")
        )
    if name == "tent" and not body:
        return Tent()
    if name == "box":
        kv = _kv(body)
        if set(kv) - {"r"}:
            raise ParameterError(f"box kernel takes r=.., got {text!r}")
        return Box(_number(kv.get("r", "16"), "r"))
    if name == "nearest" and not body:
        return Nearest()
    raise ParameterError(f"unknown kernel spec {text!r}")


def format_kernel(spec: KernelSpec) -> str:
    """Inverse of :func:`parse_kernel`."""
    if isinstance(spec, SincCoshGaussian):
        return f"said:chi={spec.chi!r},eta={spec.eta!r}"
    if isinstance(spec, Lanczos):
        return f"lanczos:{spec.m}"
    if isinstance(spec, CubicBSpline):
        return "bspline3" if spec.interpolating else "bspline3:raw"
    if isinstance(spec, MitchellNetravali):
        return f"mitchell:b={spec.b!r},c={spec.c!r}"
    if isinstance(spec, BlackmanHarrisSinc):
        suffix = "" if spec.terms == 3 else f",terms={spec.terms}"
        return f"bharris:{spec.half_width}{suffix}"
    if isinstance(spec, Tent):
        return "tent"
    if isinstance(spec, Box):
        return f"box:r={spec.truncation_radius!r}"
    if isinstance(spec, Nearest):
        return "nearest"
    raise ParameterError(f"not a kernel spec: {spec!r}")
