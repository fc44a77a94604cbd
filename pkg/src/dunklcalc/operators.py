"""Dunkl operators and the operator identities of their first-order calculus.

The context object pairs a root system with its derived constants and owns
the memo tables that make repeated applications cheap: the reflection
difference quotient of a monomial and the image of a monomial under each
coordinate operator are both pure functions of the exponent vector, so they
are computed once per context.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .poly import (
    ExactDivisionError,
    Poly,
    classical_laplacian,
    compose_reflection,
    divide_exact_by_linear,
    partial_derivative,
    Exponent,
)
from .roots import DunklConstants, RootSystem, constants


class DunklContext:
    """A root system together with caches for operator application.

    The cached data are pure functions of the system, so sharing a context
    across threads for reads is safe once it has been used single-threaded.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.constants: DunklConstants = constants(rs)
        self._kappa = rs.kappa_by_root()
        self._active = [i for i, k in enumerate(self._kappa) if k != 0]
        self._quotients: dict[tuple[int, Exponent], Poly] = {}
        self._coord_images: dict[tuple[int, Exponent], Poly] = {}
        self._laplacian_images: dict[Exponent, Poly] = {}
        self._radial_cache: dict = {}

    @property
    def dim(self) -> int:
        return self.rs.dim

    def clear_radial_cache(self) -> None:
        """Drop memoized weighted-calculus nodes (they are per profile)."""
        self._radial_cache.clear()

    # -- monomial-level building blocks ------------------------------------

    def _quotient(self, root_index: int, e: Exponent) -> Poly:
        """(x^e - x^e composed with r_alpha) / <alpha, x>, exact."""
        key = (root_index, e)
        cached = self._quotients.get(key)
        if cached is None:
            alpha = self.rs.positive_roots[root_index]
            mono = Poly.monomial(self.dim, e)
            diff = mono - compose_reflection(mono, alpha)
            cached = divide_exact_by_linear(diff, alpha)
            self._quotients[key] = cached
        return cached

    def _coord_image(self, j: int, e: Exponent) -> Poly:
        """D_j applied to the monomial x^e."""
        key = (j, e)
        cached = self._coord_images.get(key)
        if cached is None:
            acc: dict[Exponent, Fraction] = {}
            if e[j]:
                f = tuple(v - 1 if i == j else v for i, v in enumerate(e))
                acc[f] = Fraction(e[j])
            for idx in self._active:
                aj = self.rs.positive_roots[idx][j]
                if aj:
                    factor = self._kappa[idx] * aj
                    for f, c in self._quotient(idx, e).terms.items():
                        s = acc.get(f, 0) + factor * c
                        if s:
                            acc[f] = s
                        else:
                            acc.pop(f, None)
            cached = Poly(self.dim, acc)
            self._coord_images[key] = cached
        return cached

    def _laplacian_image(self, e: Exponent) -> Poly:
        cached = self._laplacian_images.get(e)
        if cached is None:
            acc = Poly.zero(self.dim)
            for j in range(self.dim):
                acc = acc + apply_coord(self, j, self._coord_image(j, e))
            cached = acc
            self._laplacian_images[e] = cached
        return cached


def apply_coord(ctx: DunklContext, j: int, p: Poly) -> Poly:
    """D_j p via the per-monomial cache."""
    acc: dict[Exponent, Fraction] = {}
    for e, c in p.terms.items():
        for f, w in ctx._coord_image(j, e).terms.items():
            s = acc.get(f, 0) + c * w
            if s:
                acc[f] = s
            else:
                acc.pop(f, None)
    return Poly(ctx.dim, acc)


def dunkl_apply(ctx: DunklContext, xi: Sequence, p: Poly) -> Poly:
    """The Dunkl operator in direction xi applied to p.

    This is the directional derivative plus, for every positive root, the
    multiplicity times <alpha, xi> times the reflection difference quotient.
    It lowers the degree of homogeneous input by exactly one and is linear
    in xi, so it is assembled from the coordinate operators.
    """
    xi = [Fraction(c) for c in xi]
    if len(xi) != ctx.dim:
        raise ValueError("direction has wrong dimension")
    acc: dict[Exponent, Fraction] = {}
    for j, coeff in enumerate(xi):
        if not coeff:
            continue
        for e, c in p.terms.items():
            for f, w in ctx._coord_image(j, e).terms.items():
                s = acc.get(f, 0) + coeff * c * w
                if s:
                    acc[f] = s
                else:
                    acc.pop(f, None)
    return Poly(ctx.dim, acc)


def dunkl_laplacian_sq(ctx: DunklContext, p: Poly) -> Poly:
    """Sum of squared coordinate Dunkl operators (the defining route)."""
    acc: dict[Exponent, Fraction] = {}
    for e, c in p.terms.items():
        for f, w in ctx._laplacian_image(e).terms.items():
            s = acc.get(f, 0) + c * w
            if s:
                acc[f] = s
            else:
                acc.pop(f, None)
    return Poly(ctx.dim, acc)


dunkl_laplacian = dunkl_laplacian_sq


def dunkl_laplacian_expr(ctx: DunklContext, p: Poly) -> Poly:
    """The Dunkl Laplacian through its explicit second-order expression.

    Per positive root the combination 2 d_alpha p - <alpha,alpha> times the
    reflection difference quotient vanishes on the root hyperplane, so it
    divides exactly by <alpha, x> once more; summing the results over the
    roots with multiplicity weights and adding the classical Laplacian must
    reproduce dunkl_laplacian_sq.  Both routes are kept as cross-checks of
    each other.
    """
    result = classical_laplacian(p)
    for idx in ctx._active:
        alpha = ctx.rs.positive_roots[idx]
        norm = sum((a * a for a in alpha), Fraction(0))
        inner = Poly.zero(ctx.dim)
        for e, c in p.terms.items():
            inner = inner + ctx._quotient(idx, e).scale(c)
        numerator = partial_derivative(p, alpha).scale(2) - inner.scale(norm)
        result = result + divide_exact_by_linear(numerator, alpha).scale(ctx._kappa[idx])
    return result


def dunkl_laplacian_invariant(ctx: DunklContext, p: Poly) -> Poly:
    """Second-order restriction of the Laplacian, valid for invariant p.

    For polynomials fixed by the reflection group the difference terms drop
    and the Laplacian reduces to the classical one plus first-order root
    terms; the per-root division is exact precisely in that case, so feeding
    a non-invariant polynomial raises ExactDivisionError.
    """
    result = classical_laplacian(p)
    for idx in ctx._active:
        alpha = ctx.rs.positive_roots[idx]
        numerator = partial_derivative(p, alpha).scale(2 * ctx._kappa[idx])
        result = result + divide_exact_by_linear(numerator, alpha)
    return result


def poly_of_dunkl(ctx: DunklContext, p: Poly, target: Poly) -> Poly:
    """Substitute the coordinate Dunkl operators into p and apply to target.

    Monomial by monomial, the operator factors are applied right to left in
    coordinate order; since the operators commute the order is a convention,
    which the test suite permutes on small cases.
    """
    if p.dim != target.dim:
        raise ValueError("polynomial and target dimensions differ")
    result = Poly.zero(ctx.dim)
    for e, c in p.terms.items():
        w = target
        for j in reversed(range(ctx.dim)):
            for _ in range(e[j]):
                w = apply_coord(ctx, j, w)
        result = result + w.scale(c)
    return result


def commutator_residual(ctx: DunklContext, xi: Sequence, eta: Sequence, p: Poly) -> Poly:
    """D_xi D_eta p - D_eta D_xi p; identically zero for valid systems."""
    return dunkl_apply(ctx, xi, dunkl_apply(ctx, eta, p)) - dunkl_apply(
        ctx, eta, dunkl_apply(ctx, xi, p)
    )


def mult_commutator_residual(ctx: DunklContext, power: int, coord: int, p: Poly) -> Poly:
    """Residual of the commutator of a Laplacian power with a coordinate.

    Checks [Lap^power, x_coord .] p = 2 * power * D_coord Lap^(power-1) p,
    the identity that drives the inductive proof of the radial expansion.
    coord is 0-based; power must be at least 1.
    """
    if power < 1:
        raise ValueError("power must be at least 1")
    x = Poly.variable(ctx.dim, coord + 1)
    lhs = x * p
    for _ in range(power):
        lhs = dunkl_laplacian_sq(ctx, lhs)
    rhs_a = p
    for _ in range(power):
        rhs_a = dunkl_laplacian_sq(ctx, rhs_a)
    rhs_a = x * rhs_a
    lower = p
    for _ in range(power - 1):
        lower = dunkl_laplacian_sq(ctx, lower)
    rhs_b = apply_coord(ctx, coord, lower).scale(2 * power)
    return lhs - rhs_a - rhs_b


def adjoint_formula_residual(ctx: DunklContext, p: Poly, target: Poly) -> Poly:
    """p(D) versus iterated half-Laplacian commutators with multiplication.

    For homogeneous p of degree m, p(D) equals 1/m! times the m-fold
    commutator of Lap/2 with multiplication by p.  The nested commutator is
    expanded binomially, which is valid for arbitrary operators.
    """
    if not p.is_homogeneous():
        raise ValueError("adjoint expansion needs homogeneous input")
    if p.is_zero():
        return Poly.zero(ctx.dim)
    m = p.degree()

    def half_lap_power(q: Poly, k: int) -> Poly:
        for _ in range(k):
            q = dunkl_laplacian_sq(ctx, q).scale(Fraction(1, 2))
        return q

    acc = Poly.zero(ctx.dim)
    for i in range(m + 1):
        inner = half_lap_power(target, m - i)
        term = half_lap_power(p * inner, i)
        sign = -1 if (m - i) % 2 else 1
        acc = acc + term.scale(Fraction(sign * comb(m, i)))
    expansion = acc.scale(Fraction(1, factorial(m)))
    return poly_of_dunkl(ctx, p, target) - expansion
