import math

import numpy as np
import pytest

from sincresize.kernels import (
    SUPPORT_STEP,
    BlackmanHarrisSinc,
    Box,
    CubicBSpline,
    Lanczos,
    MitchellNetravali,
    Nearest,
    ParameterError,
    SincCoshGaussian,
    Tent,
    eval_kernel,
    format_kernel,
    parse_kernel,
    support,
)

ALL_KERNELS = [
    SincCoshGaussian(0.31, 0.0),
    SincCoshGaussian(0.212, 0.65),
    SincCoshGaussian(0.1, 1.2),
    Lanczos(2),
    Lanczos(5),
    CubicBSpline(),
    CubicBSpline(interpolating=False),
    MitchellNetravali(1 / 3, 1 / 3),
    BlackmanHarrisSinc(3),
    BlackmanHarrisSinc(3, terms=4),
    Tent(),
    Box(16.0),
    Nearest(),
]

CHI_GRID = np.round(np.arange(0.1, 0.61, 0.05), 10)
ETA_GRID = np.round(np.arange(0.0, 1.21, 0.1), 10)


def test_said_at_origin_is_one():
    assert eval_kernel(SincCoshGaussian(0.31, 0.0), 0.0) == 1.0


def test_said_at_three_is_zero():
    for chi, eta in [(0.31, 0.0), (0.2, 0.65), (0.6, 1.5)]:
        assert eval_kernel(SincCoshGaussian(chi, eta), 3.0) == 0.0


def test_said_half_sample_hand_value():
    expected = math.sin(math.pi * 0.5) / (math.pi * 0.5) * math.exp(-((math.pi * 0.31 * 0.25) ** 2))
    got = eval_kernel(SincCoshGaussian(0.31, 0.0), 0.5)
    assert got == pytest.approx(expected, rel=1e-14)
    assert got == pytest.approx(0.5999, abs=1e-4)


def test_tent_value():
    assert eval_kernel(Tent(), 0.7) == pytest.approx(0.3, abs=1e-15)


@pytest.mark.parametrize(
    "bad",
    [
        lambda: SincCoshGaussian(0.0, 0.0),
        lambda: SincCoshGaussian(-0.1, 0.0),
        lambda: SincCoshGaussian(0.3, 2.0),
        lambda: SincCoshGaussian(0.3, -0.1),
        lambda: Lanczos(0),
        lambda: Lanczos(2.5),
        lambda: BlackmanHarrisSinc(0),
        lambda: BlackmanHarrisSinc(3, terms=5),
        lambda: Box(0.0),
    ],
)
def test_parameter_domain_errors(bad):
    with pytest.raises(ParameterError):
        bad()


def test_interpolation_zeros_on_grid():
    n = np.arange(1, 11, dtype=float)
    for chi in CHI_GRID:
        for eta in ETA_GRID:
            h = eval_kernel(SincCoshGaussian(chi, eta), n)
            assert np.max(np.abs(h)) < 1e-12, (chi, eta)


@pytest.mark.parametrize("spec", ALL_KERNELS, ids=format_kernel)
def test_evenness(spec):
    t = np.random.default_rng(7).uniform(-12, 12, 1000)
    assert np.array_equal(eval_kernel(spec, t), eval_kernel(spec, -t))


def test_gaussian_envelope_bound():
    t = np.random.default_rng(3).uniform(-20, 20, 2000)
    for chi in CHI_GRID:
        for eta in ETA_GRID:
            c = math.pi * chi / (2 - eta)
            bound = np.exp(math.sqrt(2 * eta) * c * np.abs(t) - (c * t) ** 2)
            h = eval_kernel(SincCoshGaussian(chi, eta), t)
            assert np.all(np.abs(h) <= bound * (1 + 1e-12))


@pytest.mark.parametrize(
    "spec", [s for s in ALL_KERNELS if s.compact_radius is not None], ids=format_kernel
)
def test_compact_kernels_vanish_outside_support(spec):
    r = support(spec, 1e-6).radius
    t = np.concatenate([r + np.linspace(1e-9, 10, 500), [r + 1e-12]])
    assert np.all(eval_kernel(spec, t) == 0.0)
    assert np.all(eval_kernel(spec, -t) == 0.0)


@pytest.mark.parametrize(
    "spec", [s for s in ALL_KERNELS if s.interpolating], ids=format_kernel
)
def test_interpolating_kernels_hit_samples(spec):
    assert eval_kernel(spec, 0.0) == 1.0
    n = np.arange(1, 12, dtype=float)
    assert np.max(np.abs(eval_kernel(spec, n))) < 1e-12


def test_compact_support_values():
    assert support(Tent(), 1e-6).radius == 1.0 and support(Tent(), 1e-6).compact
    info = support(Lanczos(3), 1e-6)
    assert info.radius == 3.0 and info.compact
    assert not support(SincCoshGaussian(0.31, 0), 1e-3).compact
    assert not support(Box(16), 1e-3).compact


def _fine_envelope_radius(chi, eta, eps, step=1 / 1024, t_max=40.0):
    # independent outward scan of |sinc| <= 1/(pi t) times cosh * gauss
    t = np.arange(1, int(t_max / step)) * step
    c = math.pi * chi / (2 - eta)
    env = np.cosh(math.sqrt(2 * eta) * c * t) * np.exp(-((c * t) ** 2)) * np.minimum(1, 1 / (np.pi * t))
    return t[np.nonzero(env >= eps)[0][-1]] + step


@pytest.mark.parametrize("chi,eta,eps", [(0.31, 0.0, 1e-3), (0.31, 0.0, 1e-6), (0.212, 0.65, 1e-4)])
def test_said_support_follows_envelope(chi, eta, eps):
    spec = SincCoshGaussian(chi, eta)
    r = support(spec, eps).radius
    oracle = _fine_envelope_radius(chi, eta, eps)
    assert (r / SUPPORT_STEP) == int(r / SUPPORT_STEP)
    assert oracle <= r <= oracle + SUPPORT_STEP
    t = r + np.linspace(0, 20, 20001)
    assert np.all(np.abs(eval_kernel(spec, t)) < eps)


def test_said_support_reference_value():
    # env(t) = exp(-(pi*0.31*t/2)^2) / (pi t) crosses 1e-3 at 4.26472 (brentq)
    assert support(SincCoshGaussian(0.31, 0.0), 1e-3).radius == 4.265625


def test_cardinal_spline_support_is_safe():
    spec = CubicBSpline()
    r = support(spec, 1e-6).radius
    t = r + np.linspace(0, 10, 5001)
    assert np.all(np.abs(eval_kernel(spec, t)) < 1e-6)


def test_cardinal_spline_matches_bspline_expansion():
    # h(t) = sum_k sqrt(3) (sqrt(3)-2)^|k| B3(t - k)
    t = np.linspace(-6, 6, 1201)
    raw = CubicBSpline(interpolating=False)
    z = math.sqrt(3) - 2
    ref = sum(math.sqrt(3) * z ** abs(k) * eval_kernel(raw, t - k) for k in range(-30, 31))
    assert np.max(np.abs(eval_kernel(CubicBSpline(), t) - ref)) < 1e-14


def test_raw_bspline_formula():
    raw = CubicBSpline(interpolating=False)
    assert eval_kernel(raw, 0.0) == pytest.approx(2 / 3)
    assert eval_kernel(raw, 1.0) == pytest.approx(1 / 6)
    assert eval_kernel(raw, 1.5) == pytest.approx(0.5**3 / 6)
    assert eval_kernel(raw, 2.0) == 0.0


def test_mitchell_values():
    mn = MitchellNetravali(1 / 3, 1 / 3)
    assert eval_kernel(mn, 0.0) == pytest.approx(8 / 9)
    assert eval_kernel(mn, 1.0) == pytest.approx(1 / 18)
    assert eval_kernel(mn, 2.0) == 0.0


def test_blackman_harris_window_edges():
    for terms in (3, 4):
        spec = BlackmanHarrisSinc(3, terms)
        assert eval_kernel(spec, 0.0) == pytest.approx(1.0, abs=1e-12)
        assert eval_kernel(spec, 2.999999) == pytest.approx(0.0, abs=1e-6)


def test_nearest_half_point():
    assert eval_kernel(Nearest(), 0.49) == 1.0
    assert eval_kernel(Nearest(), 0.5) == 0.5
    assert eval_kernel(Nearest(), 0.51) == 0.0


@pytest.mark.parametrize(
    "text,spec",
    [
        ("said:chi=0.31,eta=0", SincCoshGaussian(0.31, 0.0)),
        ("lanczos:3", Lanczos(3)),
        ("bspline3", CubicBSpline()),
        ("bspline3:raw", CubicBSpline(interpolating=False)),
        ("mitchell:b=0.3333,c=0.3333", MitchellNetravali(0.3333, 0.3333)),
        ("bharris:3", BlackmanHarrisSinc(3)),
        ("bharris:3,terms=4", BlackmanHarrisSinc(3, 4)),
        ("tent", Tent()),
        ("box:r=16", Box(16.0)),
        ("nearest", Nearest()),
    ],
)
def test_parse_and_format(text, spec):
    assert parse_kernel(text) == spec
    assert parse_kernel(format_kernel(spec)) == spec


@pytest.mark.parametrize(
    "text", ["said", "said:eta=0", "said:chi=x", "said:chi=0.3,eta=2", "lanczos:0", "foo", "tent:1"]
)
def test_parse_rejects(text):
    with pytest.raises(ParameterError):
        parse_kernel(text)
