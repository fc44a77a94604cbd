import random
from fractions import Fraction

import pytest

from dunklcalc.operators import DunklContext, poly_of_dunkl
from dunklcalc.poly import Poly, norm_sq_poly, parse_poly
from dunklcalc.radial import (
    RadialProfile,
    WeightedFunction,
    hobson_lhs,
    hobson_residual,
    hobson_rhs,
    inv_r_ddr,
    parse_profile,
    weighted_dunkl_apply,
)
from dunklcalc.roots import build_root_system
from dunklcalc.verify import random_homogeneous

Q = Fraction


def make_ctx(system, kappas):
    return DunklContext(build_root_system(system, kappas))


def test_profile_canonical_form():
    p = RadialProfile.make(4, 0, {-1: Q(1), 0: Q(2)})
    assert p.base_exponent == 2  # minimal exponent present
    assert p.coeff_map() == {0: Q(1), 1: Q(2)}
    assert RadialProfile.make(0, -1, {0: Q(0)}).is_zero()


def test_inv_r_ddr_examples():
    assert inv_r_ddr(RadialProfile.power(2)) == RadialProfile.make(0, 0, {0: Q(2)})
    s = Q(7, 2)
    assert inv_r_ddr(RadialProfile.power(s)) == RadialProfile.power(s - 2).scale(s)
    gauss = RadialProfile.gaussian(Q(-1, 2))
    assert inv_r_ddr(gauss) == gauss.scale(-1)
    # powers only ever shift by two
    phi = RadialProfile.power_gauss(Q(-3), Q(-1))
    assert inv_r_ddr(phi, 3).exponents() == [Q(-9), Q(-7), Q(-5), Q(-3)]


def test_weighted_apply_gaussian():
    ctx = make_ctx("z2:d=1", ["1/2"])
    w = WeightedFunction.of_profile(1, RadialProfile.gaussian(Q(-1, 2)))
    image = weighted_dunkl_apply(ctx, [1], w)
    expected = WeightedFunction(
        1, [(parse_poly("-x1", 1), RadialProfile.gaussian(Q(-1, 2)))]
    )
    assert image == expected


def test_weighted_apply_pure_polynomial_consistency():
    from dunklcalc.operators import dunkl_apply

    ctx = make_ctx("b:d=2", ["1", "2"])
    p = parse_poly("x1^2*x2 - x2^3", 2)
    w = WeightedFunction(2, [(p, RadialProfile.power(0))])
    image = weighted_dunkl_apply(ctx, (1, -2), w)
    expected = WeightedFunction(
        2, [(dunkl_apply(ctx, (1, -2), p), RadialProfile.power(0))]
    )
    assert image == expected


def test_weighted_apply_classical_chain_rule():
    ctx = make_ctx("z2:d=2", ["0", "0"])
    s = Q(5, 2)
    w = WeightedFunction.of_profile(2, RadialProfile.power(s))
    image = weighted_dunkl_apply(ctx, (1, 0), w)
    expected = WeightedFunction(
        2, [(parse_poly("x1", 2).scale(s), RadialProfile.power(s - 2))]
    )
    assert image == expected


def test_weighted_function_canonical_equality():
    # |x|^2 r^0 and 1 * r^2 describe the same function
    a = WeightedFunction(2, [(norm_sq_poly(2), RadialProfile.power(0))])
    b = WeightedFunction(2, [(Poly.const(2, 1), RadialProfile.power(2))])
    assert a == b
    assert (a - b).is_zero()
    assert a.as_polynomial() == norm_sq_poly(2)


def test_as_polynomial_rejects_profiles():
    w = WeightedFunction.of_profile(2, RadialProfile.power(3))
    with pytest.raises(ArithmeticError):
        w.as_polynomial()
    g = WeightedFunction.of_profile(2, RadialProfile.gaussian(-1))
    with pytest.raises(ArithmeticError):
        g.as_polynomial()
    assert g.as_polynomial(-1) == Poly.const(2, 1)


def test_hobson_hand_computed_gaussian():
    # d=1 rank one: p = x^2, profile exp(-r^2/2): p(D) f = (x^2 - 1 - 2k) f
    for kappa in (Q(0), Q(1, 2), Q(3, 2)):
        ctx = make_ctx("z2:d=1", [kappa])
        lhs = hobson_lhs(ctx, parse_poly("x1^2", 1), RadialProfile.gaussian(Q(-1, 2)))
        expected = WeightedFunction(
            1,
            [(
                parse_poly("x1^2", 1) - Poly.const(1, 1 + 2 * kappa),
                RadialProfile.gaussian(Q(-1, 2)),
            )],
        )
        assert lhs == expected


def test_hobson_degree_one_power_profile():
    # degree-1 p against r^2: single term, (1/r d/dr) r^2 = 2
    ctx = make_ctx("b:d=2", ["1", "2"])
    p = parse_poly("2*x1 - x2", 2)
    lhs = hobson_lhs(ctx, p, RadialProfile.power(2))
    assert lhs == WeightedFunction(2, [(p.scale(2), RadialProfile.power(0))])


def test_hobson_constant():
    ctx = make_ctx("a:d=3", ["1"])
    phi = RadialProfile.power_gauss(3, -1)
    res = hobson_residual(ctx, Poly.const(3, Q(5, 7)), phi)
    assert res.is_zero()


def test_hobson_classical_cross_check():
    # kappa = 0, phi = r^(2N): the weighted route must match the purely
    # polynomial evaluation of p(D) on |x|^(2N)
    ctx = make_ctx("z2:d=3", ["0", "0", "0"])
    rng = random.Random(23)
    for m, n_power in [(2, 2), (3, 3), (4, 3)]:
        p = random_homogeneous(rng, 3, m)
        via_weighted = hobson_lhs(ctx, p, RadialProfile.power(2 * n_power))
        direct = poly_of_dunkl(ctx, p, norm_sq_poly(3) ** n_power)
        assert via_weighted.as_polynomial() == direct


def test_hobson_polynomial_profile_cross_check_weighted():
    # same two-route comparison with nonzero multiplicities
    ctx = make_ctx("b:d=2", ["1", "2"])
    rng = random.Random(37)
    for m, n_power in [(1, 1), (2, 2), (3, 2), (4, 3)]:
        p = random_homogeneous(rng, 2, m)
        via_weighted = hobson_lhs(ctx, p, RadialProfile.power(2 * n_power))
        direct = poly_of_dunkl(ctx, p, norm_sq_poly(2) ** n_power)
        assert via_weighted.as_polynomial() == direct


def test_hobson_residual_zero_across_profiles():
    rng = random.Random(29)
    for system, kappas in [("z2:d=2", ["1", "3/2"]), ("b:d=2", ["1", "2"]), ("a:d=3", ["1"])]:
        ctx = make_ctx(system, kappas)
        lam = ctx.constants.bessel_index
        profiles = [
            RadialProfile.power(2),
            RadialProfile.power(4),
            RadialProfile.power(Q(7, 2)),
            RadialProfile.power(-2 * lam),
            RadialProfile.power(-2 * lam - Q(1, 3)),
            RadialProfile.gaussian(Q(-1, 2)),
            RadialProfile.gaussian(-1),
            RadialProfile.power_gauss(3, -1),
        ]
        for profile in profiles:
            for m in (0, 1, 2, 3, 4, 5):
                p = random_homogeneous(rng, ctx.dim, m)
                assert hobson_residual(ctx, p, profile).is_zero(), (system, str(profile), str(p))
        ctx.clear_radial_cache()


def test_hobson_linearity():
    ctx = make_ctx("z2:d=2", ["1", "0"])
    rng = random.Random(31)
    p = random_homogeneous(rng, 2, 3)
    q = random_homogeneous(rng, 2, 3)
    phi = RadialProfile.gaussian(-1)
    combined = hobson_lhs(ctx, p.scale(2) + q.scale(Q(-1, 3)), phi)
    assert combined == hobson_lhs(ctx, p, phi).scale(2) + hobson_lhs(ctx, q, phi).scale(Q(-1, 3))


def test_hobson_linearity_in_profile():
    ctx = make_ctx("b:d=2", ["1", "2"])
    rng = random.Random(33)
    p = random_homogeneous(rng, 2, 3)
    phi1 = RadialProfile.power(2)
    phi2 = RadialProfile.power(4)
    mixed = RadialProfile.make(2, 0, {0: Q(3), 1: Q(-1, 2)})  # 3 r^2 - 1/2 r^4
    for side in (hobson_lhs, hobson_rhs):
        assert side(ctx, p, mixed) == side(ctx, p, phi1).scale(3) + side(
            ctx, p, phi2
        ).scale(Q(-1, 2))


def test_hobson_rhs_requires_homogeneous():
    ctx = make_ctx("z2:d=1", ["1"])
    with pytest.raises(ValueError):
        hobson_rhs(ctx, parse_poly("x1 + 1", 1), RadialProfile.power(2))


def test_closure_exponent_parity_and_rate():
    # Dunkl applications never change the gaussian rate and only shift the
    # exponent by even steps
    ctx = make_ctx("b:d=2", ["1", "2"])
    w = WeightedFunction.of_profile(2, RadialProfile.power_gauss(Q(7, 2), Q(-1, 2)))
    for _ in range(4):
        w = weighted_dunkl_apply(ctx, (1, Q(1, 2)), w)
    for (s, a), _poly in w.parts.items():
        assert a == Q(-1, 2)
        assert (s - Q(7, 2)) % 2 == 0


def _profile_second_derivative(profile: RadialProfile) -> RadialProfile:
    # f'' for f = sum c r^t exp(a r^2):
    # t(t-1) r^(t-2) + 2a(2t+1) r^t + 4a^2 r^(t+2), coefficient-wise
    s, a = profile.base_exponent, profile.gauss_coeff
    out = {}
    for j, c in profile.coeffs:
        t = s + 2 * j
        if t * (t - 1):
            out[j - 1] = out.get(j - 1, Q(0)) + c * t * (t - 1)
        if a:
            out[j] = out.get(j, Q(0)) + c * 2 * a * (2 * t + 1)
            out[j + 1] = out.get(j + 1, Q(0)) + c * 4 * a * a
    return RadialProfile.make(s, a, out)


def test_radial_laplacian_specialization():
    # For p = |x|^2 the expansion reduces to f'' + (d - 1 + 2 gamma)/r f'
    for system, kappas in [("z2:d=2", ["1", "3/2"]), ("b:d=2", ["1", "2"]), ("z2:d=1", ["2"])]:
        ctx = make_ctx(system, kappas)
        d = ctx.dim
        gamma = ctx.constants.total_multiplicity
        for profile in [
            RadialProfile.power(4),
            RadialProfile.power(Q(7, 2)),
            RadialProfile.gaussian(Q(-1, 2)),
            RadialProfile.power_gauss(3, -1),
        ]:
            lhs = hobson_lhs(ctx, norm_sq_poly(d), profile)
            expected = WeightedFunction(
                d,
                [
                    (Poly.const(d, 1), _profile_second_derivative(profile)),
                    (Poly.const(d, d - 1 + 2 * gamma), inv_r_ddr(profile)),
                ],
            )
            assert lhs == expected


def test_parse_profile():
    assert parse_profile("r^(-3)*exp(-1/2*r^2)") == RadialProfile.power_gauss(
        -3, Q(-1, 2)
    )
    assert parse_profile("r^2") == RadialProfile.power(2)
    assert parse_profile("exp(-1*r^2)") == RadialProfile.gaussian(-1)
    assert parse_profile("r^2 - 2*r^4") == RadialProfile.make(
        2, 0, {0: Q(1), 1: Q(-2)}
    )
    assert parse_profile("1/2*r^(7/2)") == RadialProfile.power(Q(7, 2)).scale(Q(1, 2))
    with pytest.raises(ValueError):
        parse_profile("r^2 + r^3")  # mixed parity cannot merge
    with pytest.raises(ValueError):
        parse_profile("r^2 + exp(-1*r^2)")  # mixed rates cannot merge
    with pytest.raises(ValueError):
        parse_profile("r^^2")
