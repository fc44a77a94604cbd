from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dunklcalc.roots import (
    RootSystemError,
    build_root_system,
    constants,
    dot,
    reflect,
    weight_eval,
)

Q = Fraction


def test_z2_single_root_constants():
    rs = build_root_system("z2:d=1", [Q(1, 2)])
    assert rs.positive_roots == ((Q(1),),)
    c = constants(rs)
    assert c.total_multiplicity == Q(1, 2)
    assert c.bessel_index == 0


def test_b2_orbit_sizes_and_constants():
    # two short positive roots and two long ones
    rs = build_root_system("b:d=2", [1, 2])
    assert sorted(len(o) for o in rs.orbits) == [2, 2]
    c = constants(rs)
    assert c.total_multiplicity == 2 * 1 + 2 * 2 == 6
    assert c.bessel_index == 6


def test_a2_in_r3_constants():
    rs = build_root_system("a:d=3", [1])
    assert len(rs.positive_roots) == 3
    assert len(rs.orbits) == 1
    c = constants(rs)
    assert c.total_multiplicity == 3
    assert c.bessel_index == Q(7, 2)


def test_zero_multiplicity_constants():
    rs = build_root_system("z2:d=3", [0, 0, 0])
    c = constants(rs)
    assert c.total_multiplicity == 0
    assert c.bessel_index == Q(1, 2)


def test_z2d2_mixed_constants():
    rs = build_root_system("z2:d=2", ["1", "3/2"])
    c = constants(rs)
    assert c.total_multiplicity == Q(5, 2)
    assert c.bessel_index == Q(5, 2)


def test_d4_single_orbit():
    rs = build_root_system("d:d=4", [Q(1, 2)])
    assert len(rs.positive_roots) == 12
    assert len(rs.orbits) == 1
    assert constants(rs).total_multiplicity == 6


def test_reflect_examples():
    assert reflect((Q(1),), (Q(3),)) == (Q(-3),)
    a, b = Q(5), Q(-7, 3)
    assert reflect((Q(1), Q(-1)), (a, b)) == (b, a)


def test_reflect_zero_root_rejected():
    with pytest.raises(RootSystemError):
        reflect((Q(0), Q(0)), (Q(1), Q(2)))


rational = st.builds(Q, st.integers(-9, 9), st.integers(1, 5))
vec3 = st.tuples(rational, rational, rational)


@given(vec3, vec3)
def test_reflect_involution_and_isometry(alpha, x):
    if all(c == 0 for c in alpha):
        return
    assert reflect(alpha, reflect(alpha, x)) == x
    y = (Q(1), Q(-2), Q(1, 3))
    assert dot(reflect(alpha, x), reflect(alpha, y)) == dot(x, y)


@given(vec3, st.integers(1, 7))
def test_reflect_scale_invariant(alpha, c):
    if all(v == 0 for v in alpha):
        return
    scaled = tuple(Q(c) * v for v in alpha)
    x = (Q(2), Q(-1, 2), Q(5))
    assert reflect(alpha, x) == reflect(scaled, x)


def test_custom_closure_failure():
    with pytest.raises(RootSystemError, match="not closed"):
        build_root_system([(1, 0), (0, 1), (1, 1)], [1, 1, 1])


def test_non_reduced_rejected():
    with pytest.raises(RootSystemError, match="not reduced"):
        build_root_system([(1, 0), (2, 0)], [1, 1])


def test_negative_multiplicity_rejected():
    with pytest.raises(RootSystemError, match="negative"):
        build_root_system("z2:d=2", [1, -1])


def test_per_root_multiplicity_must_be_orbit_constant():
    # the two long roots of b2 lie in one orbit
    rs = build_root_system("b:d=2", [1, 1])
    roots = [list(r) for r in rs.positive_roots]
    per_root = [Q(1)] * len(roots)
    long_orbit = max(rs.orbits, key=lambda o: sum(abs(c) for c in rs.positive_roots[o[0]]))
    per_root[long_orbit[0]] = Q(2)
    with pytest.raises(RootSystemError, match="orbit"):
        build_root_system(roots, per_root)


def test_per_root_multiplicities_accepted_when_constant():
    rs = build_root_system([(1, 0), (0, 1)], [Q(1, 2), Q(3)])
    assert rs.multiplicities == (Q(1, 2), Q(3))


def test_multiplicity_count_mismatch():
    with pytest.raises(RootSystemError, match="expected"):
        build_root_system("b:d=2", [1, 2, 3])


def test_rotated_sign_flip_system():
    # an orthogonal pair away from the coordinate axes is still valid
    rs = build_root_system([(3, 4), (-4, 3)], [1, 2])
    assert len(rs.orbits) == 2


def test_weight_eval():
    rs = build_root_system("z2:d=1", [2])
    assert weight_eval(rs, (3.0,)) == pytest.approx(9.0)
    rs0 = build_root_system("z2:d=2", [0, 0])
    assert weight_eval(rs0, (0.3, -0.7)) == 1.0
    rs1 = build_root_system("z2:d=2", [1, 0])
    assert weight_eval(rs1, (0.0, 5.0)) == 0.0


def test_catalog_name_errors():
    with pytest.raises(RootSystemError):
        build_root_system("z2", [1])
    with pytest.raises(RootSystemError):
        build_root_system("a:d=1", [1])


def test_bessel_index_lower_bound():
    # total multiplicity >= 0 and d >= 1 force the index above -1/2
    cases = [
        ("z2:d=1", [0]),
        ("z2:d=1", [2]),
        ("z2:d=3", [0, 0, 0]),
        ("a:d=3", [Q(1, 2)]),
        ("b:d=3", [0, Q(1, 2)]),
        ("d:d=4", [Q(3, 2)]),
    ]
    for system, kappas in cases:
        assert constants(build_root_system(system, kappas)).bessel_index >= Q(-1, 2)


def test_closure_exhaustive_on_catalog():
    for system, kappas in [
        ("z2:d=2", [1, 1]),
        ("a:d=3", [1]),
        ("b:d=2", [1, 2]),
        ("b:d=3", [1, 2]),
        ("d:d=4", [1]),
    ]:
        rs = build_root_system(system, kappas)
        table = set(rs.positive_roots)
        for alpha in rs.positive_roots:
            for beta in rs.positive_roots:
                image = reflect(alpha, beta)
                assert image in table or tuple(-c for c in image) in table


def test_custom_file_loading(tmp_path):
    path = tmp_path / "system.json"
    path.write_text(
        '{"dim": 2, "roots": [["1", "0"], ["0", "1"]], "multiplicities": ["1/2", "2"]}'
    )
    rs = build_root_system(f"custom:{path}")
    assert rs.multiplicities == (Q(1, 2), Q(2))
