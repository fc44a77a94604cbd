"""Projection onto Dunkl-harmonic polynomials and generalized Hermite data.

A polynomial is harmonic for the deformed Laplacian when the operator kills
it exactly.  The Clebsch projection of a homogeneous polynomial is computed
by its explicit series (the normative route) and, as a cross-check, by the
Maxwell form that pushes p(D) through a negative power of the norm; the two
must agree whenever the homogeneity constant is nonzero.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .operators import DunklContext, dunkl_laplacian_sq
from .poly import Poly, divide_exact_by_norm_sq, norm_sq_poly
from .radial import RadialProfile, WeightedFunction, weighted_poly_of_dunkl
from .util import pochhammer


class MaxwellDegenerateError(ValueError):
    """The Maxwell projection route degenerates when the index is zero.

    With a vanishing homogeneity constant the negative norm power collapses
    to the constant 1 and p(D) of it is zero for positive degree, so only
    the series route defines the projection there.
    """


def is_k_harmonic(ctx: DunklContext, p: Poly) -> bool:
    return dunkl_laplacian_sq(ctx, p).is_zero()


def _series_denominator(ctx: DunklContext, m: int, j: int) -> Fraction:
    lam = ctx.constants.bessel_index
    poch = pochhammer(-lam - m + 1, j)
    if poch == 0:
        raise ArithmeticError(
            "projection series denominator vanished; the Bessel index "
            f"{lam} is outside the admissible range"
        )
    return Fraction(4**j * factorial(j)) * poch


def clebsch_project_series(ctx: DunklContext, p: Poly) -> Poly:
    """Series form of the projection onto harmonic polynomials.

    Sums norm-power multiples of Laplacian powers of p with reciprocal
    Pochhammer denominators.  For an admissible system the denominators
    never vanish, and the output is harmonic and fixes harmonic input.
    """
    if not p.is_homogeneous():
        raise ValueError("projection needs homogeneous input")
    if p.is_zero():
        return p
    m = p.degree()
    r2 = norm_sq_poly(ctx.dim)
    result = p
    lap_power = p
    r2_power = Poly.const(ctx.dim, 1)
    for j in range(1, m // 2 + 1):
        lap_power = dunkl_laplacian_sq(ctx, lap_power)
        r2_power = r2_power * r2
        result = result + (r2_power * lap_power).scale(1 / _series_denominator(ctx, m, j))
    return result


def clebsch_project_maxwell(ctx: DunklContext, p: Poly) -> Poly:
    """Maxwell form of the projection, cross-checked against the series.

    Evaluates p(D) on the norm raised to minus twice the Bessel index in
    the weighted radial calculus, scales back by the complementary power,
    and extracts the polynomial.  Because the k-fold radial derivative of
    r^(-2 lam) is (-2)^k (lam)_k r^(-2 lam - 2k), the raw extraction comes
    out (-1)^m 2^m (lam)_m times the projection and is normalized by that
    constant here; it is nonzero whenever the Bessel index is.  Exact
    disagreement with the series route is an internal invariant violation.
    """
    if not p.is_homogeneous():
        raise ValueError("projection needs homogeneous input")
    if p.is_zero():
        return p
    lam = ctx.constants.bessel_index
    m = p.degree()
    if lam == 0 and m >= 1:
        raise MaxwellDegenerateError(
            "Maxwell projection route is degenerate at Bessel index 0; "
            "use the series route"
        )
    profile = RadialProfile.power(-2 * lam)
    image = weighted_poly_of_dunkl(ctx, p, profile)
    restored = image.shift_r_power(2 * lam + 2 * m)
    sign = -1 if m % 2 else 1
    result = restored.as_polynomial().scale(
        Fraction(sign) / (2**m * pochhammer(lam, m))
    )
    series = clebsch_project_series(ctx, p)
    if result != series:
        raise ArithmeticError(
            "Maxwell projection disagrees with the series projection"
        )
    return result


class HarmonicDecomposition:
    """p as a sum of norm powers times harmonic polynomials.

    components holds (j, h_j) with p equal to the sum of |x|^(2j) h_j and
    each h_j harmonic of degree deg(p) - 2j; zero components are omitted.
    """

    def __init__(self, dim: int, components: list[tuple[int, Poly]]):
        self.dim = dim
        self.components = tuple(components)

    def recompose(self) -> Poly:
        r2 = norm_sq_poly(self.dim)
        total = Poly.zero(self.dim)
        for j, h in self.components:
            total = total + r2**j * h
        return total


def harmonic_decompose(ctx: DunklContext, p: Poly) -> HarmonicDecomposition:
    """Peel harmonic layers off a homogeneous polynomial.

    Projects, removes the harmonic part, divides the exactly-divisible
    remainder by the squared norm, and recurses; the division failing would
    mean the projector is broken, hence the hard error.
    """
    if not p.is_homogeneous():
        raise ValueError("decomposition needs homogeneous input")
    components: list[tuple[int, Poly]] = []
    current = p
    j = 0
    while not current.is_zero():
        h = clebsch_project_series(ctx, current)
        if not h.is_zero():
            components.append((j, h))
        remainder = current - h
        if remainder.is_zero():
            break
        current = divide_exact_by_norm_sq(remainder)
        j += 1
    return HarmonicDecomposition(ctx.dim, components)


def hermite_poly(ctx: DunklContext, p: Poly) -> Poly:
    """Generalized Hermite polynomial attached to homogeneous p.

    The alternating sum over j of Laplacian powers of p divided by 4^j j!;
    harmonic input is returned unchanged.
    """
    if not p.is_homogeneous():
        raise ValueError("Hermite construction needs homogeneous input")
    if p.is_zero():
        return p
    result = p
    lap_power = p
    for j in range(1, p.degree() // 2 + 1):
        lap_power = dunkl_laplacian_sq(ctx, lap_power)
        sign = -1 if j % 2 else 1
        result = result + lap_power.scale(Fraction(sign, 4**j * factorial(j)))
    return result


def rodrigues_residual(ctx: DunklContext, p: Poly) -> WeightedFunction:
    """Rodrigues form against the Laplacian series for the Hermite polynomial.

    Applies p(D) to exp(-r^2), scales by (-1/2)^deg, and subtracts the
    series Hermite polynomial carried on the same gaussian; the canonical
    residual is zero exactly when the two constructions agree.
    """
    if not p.is_homogeneous():
        raise ValueError("Rodrigues check needs homogeneous input")
    if p.is_zero():
        return WeightedFunction.zero(ctx.dim)
    m = p.degree()
    gauss = RadialProfile.gaussian(-1)
    image = weighted_poly_of_dunkl(ctx, p, gauss).scale(Fraction(-1, 2) ** m)
    expected = WeightedFunction(ctx.dim, [(hermite_poly(ctx, p), gauss)])
    return (image - expected).canonical()


def gaussian_series_residual(ctx: DunklContext, p: Poly) -> WeightedFunction:
    """p(D) on the unit-rate gaussian versus its alternating expansion.

    Checks p(D) exp(-r^2/2) = sum_j (-1)^(m-j)/(2^j j!) exp(-r^2/2) Lap^j p
    for homogeneous p of degree m, a direct specialization of the radial
    expansion that the Hermite transform theory relies on.
    """
    if not p.is_homogeneous():
        raise ValueError("gaussian expansion check needs homogeneous input")
    if p.is_zero():
        return WeightedFunction.zero(ctx.dim)
    m = p.degree()
    gauss = RadialProfile.gaussian(Fraction(-1, 2))
    image = weighted_poly_of_dunkl(ctx, p, gauss)
    series = Poly.zero(ctx.dim)
    lap_power = p
    for j in range(m // 2 + 1):
        if j:
            lap_power = dunkl_laplacian_sq(ctx, lap_power)
        sign = -1 if (m - j) % 2 else 1
        series = series + lap_power.scale(Fraction(sign, 2**j * factorial(j)))
    expected = WeightedFunction(ctx.dim, [(series, gauss)])
    return (image - expected).canonical()
