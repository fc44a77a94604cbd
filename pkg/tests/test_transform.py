import math
from fractions import Fraction

import pytest

from dunklcalc.harmonic import hermite_poly
from dunklcalc.integrate import pizzetti_mean
from dunklcalc.operators import DunklContext
from dunklcalc.poly import Poly, parse_poly
from dunklcalc.roots import build_root_system
from dunklcalc.transform import (
    KernelSeries1D,
    QuadratureError,
    bessel_j,
    dunkl_kernel_z2d,
    dunkl_transform_gauss_poly,
    hankel_identity_residual,
    hankel_numeric,
    hecke_residual,
    hermite_eigen_residual,
    kernel_coefficients,
    kernel_eigen_residual,
    normalized_bessel,
    scaled_normalized_bessel,
    sphere_pairing,
    sphere_pairing_residual,
    transform_multiplication_residual,
    truncation_order,
    z2_kappas,
)

Q = Fraction


def make_ctx(system, kappas):
    return DunklContext(build_root_system(system, kappas))


def test_bessel_half_integer_closed_form():
    for x in (0.5, 1.0, 3.0):
        want = math.sqrt(2.0 / (math.pi * x)) * math.sin(x)
        assert abs(bessel_j(0.5, x) - want) <= 1e-12 * abs(want)
    # accuracy degrades with the leading series terms as the argument grows
    want = math.sqrt(2.0 / (math.pi * 10.0)) * math.sin(10.0)
    assert abs(bessel_j(0.5, 10.0) - want) <= 1e-10 * abs(want)


def test_normalized_bessel_at_zero():
    for nu in (-0.5, 0.0, 1.0, 2.5):
        want = math.exp(-nu * math.log(2.0) - math.lgamma(nu + 1.0))
        assert normalized_bessel(nu, 0.0) == pytest.approx(want, rel=1e-15)


def test_bessel_argument_range_guard():
    with pytest.raises(ValueError):
        normalized_bessel(1.0, 31.0)
    # extended range available on request
    assert normalized_bessel(1.0, 31.0, max_arg=40.0) == pytest.approx(
        bessel_j(1.0, 31.0, max_arg=40.0) / 31.0, rel=1e-9
    )


def test_bessel_radial_derivative_identity():
    # (1/r) d/dr of the normalized function steps the order up with a sign
    r, h = 2.0, 1e-5
    for nu in (0.0, 0.5, 1.25, 3.0):
        fd = (normalized_bessel(nu, r + h) - normalized_bessel(nu, r - h)) / (2 * h * r)
        assert abs(fd + normalized_bessel(nu + 1, r)) <= 1e-6


def test_scaled_normalized_bessel_matches_gamma_form():
    for lam in (Q(-1, 2), Q(0), Q(1), Q(5, 2)):
        for shift in (0, 1, 3):
            for t in (0.0, 0.7, 2.0, 5.0):
                got = scaled_normalized_bessel(lam, shift, t)
                want = math.exp(
                    float(lam) * math.log(2.0) + math.lgamma(float(lam) + 1.0)
                ) * normalized_bessel(float(lam) + shift, t)
                assert got == pytest.approx(want, rel=1e-12, abs=1e-15)


def test_kernel_coefficients_exponential_at_zero_multiplicity():
    coeffs = kernel_coefficients(Q(0), 10)
    for n, a in enumerate(coeffs):
        assert a == Q(1, math.factorial(n))


def test_kernel_series_recursion_residual():
    for kappa in (Q(0), Q(1, 2), Q(3, 2)):
        assert KernelSeries1D.build(kappa, 80).recursion_residual() <= 1e-12


def test_kernel_reduces_to_exponential():
    for xv in (-2.0, -0.5, 0.0, 1.0, 2.0):
        for yv in (-2.0, -0.5, 0.0, 1.0, 2.0):
            got = dunkl_kernel_z2d([Q(0), Q(0)], (xv, 0.5), (yv, 1.0))
            want = math.exp(xv * yv + 0.5)
            assert abs(got - want) <= 1e-12 * abs(want)


def test_kernel_exponential_at_transform_argument():
    # complex second argument, as used by the transform pairing
    import cmath

    for xv in (-2.0, -0.5, 0.0, 1.0, 2.0):
        for yv in (-2.0, -0.5, 0.0, 1.0, 2.0):
            got = dunkl_kernel_z2d([Q(0)], (xv,), (-1j * yv,))
            want = cmath.exp(-1j * xv * yv)
            assert abs(got - want) <= 1e-12


def test_kernel_normalization_at_origin():
    for kappas in ([Q(1, 2)], [Q(1), Q(3, 2)]):
        zero = (0.0,) * len(kappas)
        y = tuple(1.0 + i for i in range(len(kappas)))
        assert dunkl_kernel_z2d(kappas, zero, y) == pytest.approx(1.0)


def test_kernel_eigen_property():
    for kappa in (Q(0), Q(1, 2), Q(1), Q(3, 2)):
        for x, y in [(0.5, 0.5), (1.0, 1.5), (2.0, 2.0)]:
            assert kernel_eigen_residual(kappa, x, y) <= 1e-12


def test_truncation_order_monotone_and_guarded():
    assert truncation_order(0.0) == 8
    assert truncation_order(5.0) <= truncation_order(10.0)
    with pytest.raises(Exception):
        truncation_order(80.0)


def test_z2_kappas_validation():
    rs = build_root_system("b:d=2", [1, 2])
    with pytest.raises(ValueError):
        z2_kappas(rs)
    rs = build_root_system("z2:d=2", ["1", "3/2"])
    assert z2_kappas(rs) == (Q(1), Q(3, 2))


GRIDS = {
    1: [(0.0,), (0.5,), (1.0,), (2.0,), (3.5,), (5.0,)],
    2: [(0.0, 0.0), (0.5, 0.0), (1.0, 1.0), (2.0, 1.0), (0.0, 2.5), (3.0, 4.0)],
}

KAPPA_RUNS = {
    1: [("0",), ("1/2",), ("1",), ("3/2",)],
    2: [("0", "0"), ("1/2", "1"), ("3/2", "0")],
}


def _test_polys(d):
    if d == 1:
        return [Poly.monomial(1, (m,)) for m in range(5)]
    return [
        Poly.const(2, 1),
        parse_poly("x1", 2),
        parse_poly("x1*x2 - x2^2", 2),
        parse_poly("x1^3 + 2*x1*x2^2", 2),
        parse_poly("x1^2*x2^2 - x1^4", 2),
    ]


def test_sphere_pairing_identity_grid():
    for d, runs in KAPPA_RUNS.items():
        for kappas in runs:
            ctx = make_ctx(f"z2:d={d}", kappas)
            for p in _test_polys(d):
                for y in GRIDS[d]:
                    assert sphere_pairing_residual(ctx, p, y) <= 1e-9, (d, kappas, str(p), y)


def test_sphere_pairing_constant_gives_bessel_profile():
    for d, runs in KAPPA_RUNS.items():
        for kappas in runs:
            ctx = make_ctx(f"z2:d={d}", kappas)
            lam = ctx.constants.bessel_index
            for y in GRIDS[d]:
                t = math.sqrt(sum(v * v for v in y))
                lhs = sphere_pairing(ctx, Poly.const(d, 1), y)
                assert abs(lhs - scaled_normalized_bessel(lam, 0, t)) <= 1e-9


def test_sphere_pairing_harmonic_profile():
    # harmonic p picks a single Bessel factor against p(-iy)
    ctx = make_ctx("z2:d=2", ["1/2", "1"])
    p = parse_poly("x1*x2", 2)
    lam = ctx.constants.bessel_index
    for y in GRIDS[2]:
        t = math.sqrt(sum(v * v for v in y))
        lhs = sphere_pairing(ctx, p, y)
        rhs = scaled_normalized_bessel(lam, 2, t) * p.evaluate(tuple(-1j * v for v in y))
        assert abs(lhs - rhs) <= 1e-9


def test_sphere_pairing_at_origin_is_pizzetti():
    for kappas in KAPPA_RUNS[2]:
        ctx = make_ctx("z2:d=2", kappas)
        for p in _test_polys(2):
            got = sphere_pairing(ctx, p, (0.0, 0.0))
            assert abs(got - float(pizzetti_mean(ctx, p))) <= 1e-12


def test_gaussian_transform_fixed_point():
    for d, runs in KAPPA_RUNS.items():
        for kappas in runs:
            ctx = make_ctx(f"z2:d={d}", kappas)
            for y in GRIDS[d]:
                if math.sqrt(sum(v * v for v in y)) > 3.0:
                    continue
                got = dunkl_transform_gauss_poly(ctx, Poly.const(d, 1), y)
                want = math.exp(-sum(v * v for v in y) / 2.0)
                assert abs(got - want) <= 1e-10 * abs(want)


def test_hecke_identity_grid():
    for d, runs in KAPPA_RUNS.items():
        for kappas in runs:
            ctx = make_ctx(f"z2:d={d}", kappas)
            for p in _test_polys(d):
                for y in GRIDS[d]:
                    assert hecke_residual(ctx, p, y) <= 1e-8, (d, kappas, str(p), y)


def test_hecke_rank_one_example():
    ctx = make_ctx("z2:d=1", ["1/2"])
    for y in (0.5, 1.0, 2.0):
        assert hecke_residual(ctx, parse_poly("x1", 1), (y,)) <= 1e-9


def test_hermite_eigenfunction_property():
    for d, runs in KAPPA_RUNS.items():
        for kappas in runs:
            ctx = make_ctx(f"z2:d={d}", kappas)
            for p in _test_polys(d):
                for y in GRIDS[d]:
                    assert hermite_eigen_residual(ctx, p, y) <= 1e-8


def test_harmonic_equivalence_characterizations():
    # for harmonic p the transform of p times the Gaussian is the plain
    # rotation of the same function
    ctx = make_ctx("z2:d=2", ["1/2", "1"])
    p = parse_poly("x1*x2", 2)
    assert hermite_poly(ctx, p) == p
    for y in GRIDS[2]:
        lhs = dunkl_transform_gauss_poly(ctx, p, y)
        rhs = (-1 + 0j) * float(p.evaluate(y)) * math.exp(-sum(v * v for v in y) / 2)
        assert abs(lhs - rhs) <= 1e-8


def test_hankel_gaussian_fixed_point():
    for lam in (-0.5, 0.0, 0.5, 1.0, 2.5):
        for s in (0.5, 1.0, 2.0, 3.0):
            got = hankel_numeric(lambda r: math.exp(-r * r / 2.0), lam, s, tol=1e-13)
            want = math.exp(-s * s / 2.0)
            assert abs(got - want) <= 1e-10 * want, (lam, s)


def test_hankel_zero_argument():
    got = hankel_numeric(lambda r: math.exp(-r * r / 2.0), 1.0, 0.0, tol=1e-13)
    assert got == pytest.approx(1.0, rel=1e-10)


def test_hankel_tail_guard():
    with pytest.raises(QuadratureError):
        hankel_numeric(lambda r: 1.0, 1.0, 1.0, tol=1e-13, rate=1e-9)


def test_hankel_radial_multiplier_identity():
    ctx = make_ctx("z2:d=1", ["3/2"])
    p = parse_poly("x1", 1)
    assert hankel_identity_residual(ctx, p, 1, (1.0,)) <= 1e-8
    ctx2 = make_ctx("z2:d=2", ["1/2", "1"])
    assert hankel_identity_residual(ctx2, parse_poly("x1", 2), 1, (1.0, 0.5)) <= 1e-8


def test_multiplication_rule():
    grid = [0.5, 1.0, 2.0]
    ctx0 = make_ctx("z2:d=1", ["0"])
    assert transform_multiplication_residual(ctx0, Poly.const(1, 1), grid) <= 1e-10
    ctx_half = make_ctx("z2:d=1", ["1/2"])
    assert transform_multiplication_residual(ctx_half, Poly.const(1, 1), grid) <= 1e-8
    ctx1 = make_ctx("z2:d=1", ["1"])
    assert transform_multiplication_residual(ctx1, Poly.monomial(1, (2,)), grid) <= 1e-8


def test_truncation_doubling_stability():
    ctx = make_ctx("z2:d=2", ["1/2", "1"])
    p = parse_poly("x1*x2 - x2^2", 2)
    y = (1.0, 1.0)
    v1 = dunkl_transform_gauss_poly(ctx, p, y, n_terms=60)
    v2 = dunkl_transform_gauss_poly(ctx, p, y, n_terms=120)
    assert abs(v1 - v2) <= 1e-12 * max(abs(v2), 1e-30)
    s1 = sphere_pairing(ctx, p, y, n_terms=40)
    s2 = sphere_pairing(ctx, p, y, n_terms=80)
    assert abs(s1 - s2) <= 1e-12 * max(abs(s2), 1e-30)
    k1 = dunkl_kernel_z2d(z2_kappas(ctx.rs), (1.0, 1.0), y, n_terms=40)
    k2 = dunkl_kernel_z2d(z2_kappas(ctx.rs), (1.0, 1.0), y, n_terms=80)
    assert abs(k1 - k2) <= 1e-12 * abs(k2)
