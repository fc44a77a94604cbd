"""Floating-point verification of transform-side identities for sign-flip groups.

For the group of coordinate sign flips the Dunkl kernel factors into
one-dimensional power series whose coefficients follow from the eigenvalue
property of the operators, so kernel pairings against spheres and Gaussians
reduce to exact rational moments summed with floating-point kernel weights.
The module confirms, within stated tolerances, the spherical pairing
formula, the Bochner-Hecke identity for the weighted Gaussian, the Hankel
picture of transforms of radial multiples, the Hermite eigenfunction
property, and the multiplication rule of the transform.

Normalization convention: spherical pairings are reported on the scale of
the normalized mean (surface measure divided out), which differs from the
mass-normalized transform by the single factor 2^lam Gamma(lam+1).  That
factor is cancelled algebraically between both sides of each identity
before any floating-point arithmetic, so Gamma values at rational
arguments never enter the exact part of the computation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .harmonic import hermite_poly
from .integrate import gaussian_moment, sphere_oracle_z2d
from .operators import DunklContext, apply_coord, dunkl_laplacian_sq
from .poly import Poly, homogeneous_components, norm_sq_poly
from .roots import RootSystem, build_root_system
from .util import pochhammer

_PHASES = (1 + 0j, -1j, -1 + 0j, 1j)  # (-i)^m for m mod 4

BESSEL_SERIES_MAX = 30.0


class TruncationError(RuntimeError):
    """The requested truncation bound cannot be met within the term cap."""


class QuadratureError(RuntimeError):
    """Numeric integration could not reach the requested tolerance."""


# -- Bessel functions -------------------------------------------------------


def normalized_bessel(nu: float, x: float, *, max_arg: float = BESSEL_SERIES_MAX) -> float:
    """J_nu(x) / x^nu by the ascending series, continuous at x = 0.

    The series is evaluated with log-Gamma terms and is accurate to full
    precision for |x| <= max_arg; larger arguments raise, because leading
    term growth would spoil the cancellation.
    """
    if nu < -0.5:
        raise ValueError("order must be at least -1/2")
    if x < 0:
        raise ValueError("argument must be non-negative")
    if x > max_arg:
        raise ValueError(f"argument {x} outside validated range (<= {max_arg})")
    if x == 0.0:
        return math.exp(-nu * math.log(2.0) - math.lgamma(nu + 1.0))
    log_half_x = math.log(x / 2.0)
    total = 0.0
    for j in range(500):
        term = math.exp(
            2 * j * log_half_x
            - nu * math.log(2.0)
            - math.lgamma(j + 1.0)
            - math.lgamma(nu + j + 1.0)
        )
        signed = -term if j % 2 else term
        total += signed
        if term < 1e-18 * max(1.0, abs(total)) and 2 * j > x:
            return total
    raise TruncationError("Bessel series did not converge")


def bessel_j(nu: float, x: float, *, max_arg: float = BESSEL_SERIES_MAX) -> float:
    """Bessel function of the first kind via the ascending series."""
    if x == 0.0:
        if nu > 0:
            return 0.0
        if nu == 0:
            return 1.0
        raise ValueError("J_nu diverges at 0 for negative order")
    return normalized_bessel(nu, x, max_arg=max_arg) * x**nu


def scaled_normalized_bessel(lam: Fraction, shift: int, t: float) -> float:
    """2^lam Gamma(lam+1) J_(lam+shift)(t) / t^(lam+shift).

    The prefactor turns every series coefficient into a rational number,
    1 / (2^shift 4^i i! (lam+1)_(shift+i)), so the value is a float sum of
    exactly represented rationals; this is the form in which the spherical
    pairing identities are checked.
    """
    if shift < 0:
        raise ValueError("shift must be non-negative")
    coeff = Fraction(1, 2**shift) / pochhammer(lam + 1, shift)
    u = (t / 2.0) ** 2
    upow = 1.0
    total = 0.0
    for i in range(500):
        term = float(coeff) * upow
        total += term
        if abs(term) < 1e-18 * max(1.0, abs(total)) and 2 * i > t:
            return total
        coeff = -coeff / ((i + 1) * (lam + 1 + shift + i))
        upow *= u
    raise TruncationError("scaled Bessel series did not converge")


# -- kernel series ----------------------------------------------------------


def z2_kappas(rs: RootSystem) -> tuple[Fraction, ...]:
    """Per-coordinate multiplicities of a sign-flip system.

    Raises ValueError unless every positive root is a multiple of a
    standard basis vector and each coordinate carries exactly one root.
    """
    kappas: dict[int, Fraction] = {}
    by_root = rs.kappa_by_root()
    for root, kappa in zip(rs.positive_roots, by_root):
        support = [i for i, c in enumerate(root) if c]
        if len(support) != 1:
            raise ValueError("kernel factorization needs a sign-flip system")
        if support[0] in kappas:
            raise ValueError("repeated coordinate root")
        kappas[support[0]] = kappa
    if sorted(kappas) != list(range(rs.dim)):
        raise ValueError("each coordinate needs exactly one root")
    return tuple(kappas[i] for i in range(rs.dim))


def kernel_coefficients(kappa: Fraction, order: int) -> list[Fraction]:
    """Exact coefficients a_0..a_order of the one-dimensional kernel series.

    a_0 = 1 and a_n = a_(n-1) / (n + 2 kappa [n odd]), the unique solution
    of the eigenvalue property of the rank-one Dunkl operator applied to a
    power series in the product of the two arguments.
    """
    kappa = Fraction(kappa)
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        div = Fraction(n) + (2 * kappa if n % 2 else 0)
        coeffs.append(coeffs[-1] / div)
    return coeffs


@dataclass(frozen=True)
class KernelSeries1D:
    """Float view of the one-dimensional kernel coefficients."""

    kappa: Fraction
    order: int
    coefficients: tuple[float, ...]

    @classmethod
    def build(cls, kappa, order: int) -> "KernelSeries1D":
        exact = kernel_coefficients(Fraction(kappa), order)
        return cls(Fraction(kappa), order, tuple(float(c) for c in exact))

    def recursion_residual(self) -> float:
        """Largest relative defect of the defining recursion."""
        worst = 0.0
        kap = float(self.kappa)
        for n in range(1, self.order + 1):
            div = n + (2 * kap if n % 2 else 0.0)
            defect = abs(self.coefficients[n] * div - self.coefficients[n - 1])
            worst = max(worst, defect / max(abs(self.coefficients[n - 1]), 1e-300))
        return worst


def truncation_order(max_abs_arg: float, *, tol: float = 1e-16, cap: int = 120) -> int:
    """Smallest order with max_abs_arg^N / N! below tol (at least 8)."""
    m = abs(max_abs_arg)
    for n in range(8, cap + 1):
        if m == 0.0 or n * math.log(m) - math.lgamma(n + 1.0) < math.log(tol):
            return n
    raise TruncationError(
        f"cannot reach truncation bound {tol} for argument {max_abs_arg} "
        f"within {cap} terms"
    )


def dunkl_kernel_z2d(
    kappas: Sequence[Fraction],
    x: Sequence[float],
    y: Sequence[complex],
    *,
    n_terms: int | None = None,
) -> complex:
    """Product-form Dunkl kernel of a sign-flip system.

    Each coordinate contributes the series sum of a_n (x_j y_j)^n; at zero
    multiplicity the factor is exp(x_j y_j) and the kernel value at x = 0
    is 1 for any y.
    """
    if len(kappas) != len(x) or len(x) != len(y):
        raise ValueError("dimension mismatch")
    big = max((abs(xj) * abs(yj) for xj, yj in zip(x, y)), default=0.0)
    order = n_terms if n_terms is not None else truncation_order(big)
    value = 1 + 0j
    for kappa, xj, yj in zip(kappas, x, y):
        coeffs = kernel_coefficients(Fraction(kappa), order)
        z = complex(xj) * complex(yj)
        zpow = 1 + 0j
        factor = 0j
        for a in coeffs:
            factor += float(a) * zpow
            zpow *= z
        value *= factor
    return value


def kernel_eigen_residual(
    kappa, x: float, y: float, *, n_terms: int | None = None
) -> float:
    """Relative defect of D applied to the kernel against its eigenvalue.

    Recomputes sum a_n (n + 2 kappa [n odd]) x^(n-1) y^n versus y times the
    kernel series at a real sample point.
    """
    kappa = Fraction(kappa)
    order = n_terms if n_terms is not None else truncation_order(abs(x * y))
    coeffs = kernel_coefficients(kappa, order)
    lhs = 0.0
    rhs = 0.0
    for n, a in enumerate(coeffs):
        rhs += float(a) * x**n * y**n
        if n >= 1:
            mult = n + (2 * float(kappa) if n % 2 else 0.0)
            lhs += float(a) * mult * x ** (n - 1) * y**n
    rhs *= y
    return abs(lhs - rhs) / max(abs(rhs), 1e-300)


# -- spherical pairing ------------------------------------------------------

_SPHERE_MEAN_CACHE: dict[tuple[tuple[Fraction, ...], tuple[int, ...]], Fraction] = {}


def _sphere_mean(kappas: tuple[Fraction, ...], exponents: tuple[int, ...]) -> Fraction:
    key = (kappas, exponents)
    value = _SPHERE_MEAN_CACHE.get(key)
    if value is None:
        value = sphere_oracle_z2d(kappas, exponents)
        _SPHERE_MEAN_CACHE[key] = value
    return value


def sphere_pairing(
    ctx: DunklContext, p: Poly, y: Sequence[float], *, n_terms: int | None = None
) -> complex:
    """Normalized spherical mean of p times the kernel at -i y.

    The kernel product is expanded into monomials and every even monomial
    is paired with the exact Dirichlet mean; the rational weight of each
    term is assembled exactly and rounded once.
    """
    kappas = z2_kappas(ctx.rs)
    d = ctx.dim
    if len(y) != d:
        raise ValueError("evaluation point has wrong dimension")
    big = max((abs(v) for v in y), default=0.0)
    order = n_terms if n_terms is not None else truncation_order(big)
    coeff_lists = [kernel_coefficients(k, order) for k in kappas]
    zpows: list[list[complex]] = []
    for yj in y:
        z = -1j * yj
        row = [1 + 0j]
        for _ in range(order):
            row.append(row[-1] * z)
        zpows.append(row)

    total = 0j
    for e, c in p.terms.items():
        index_choices = [
            [n for n in range(order + 1) if (n + e[j]) % 2 == 0]
            for j in range(d)
        ]
        for combo in itertools.product(*index_choices):
            exponents = tuple(e[j] + combo[j] for j in range(d))
            weight = c
            for j, n in enumerate(combo):
                weight *= coeff_lists[j][n]
            weight *= _sphere_mean(kappas, exponents)
            phase = 1 + 0j
            for j, n in enumerate(combo):
                phase *= zpows[j][n]
            total += float(weight) * phase
    return total


def sphere_pairing_rhs(ctx: DunklContext, p: Poly, y: Sequence[float]) -> complex:
    """Bessel-series side of the spherical pairing identity."""
    if not p.is_homogeneous():
        raise ValueError("spherical pairing identity needs homogeneous input")
    if p.is_zero():
        return 0j
    m = p.degree()
    lam = ctx.constants.bessel_index
    t = math.sqrt(sum(float(v) ** 2 for v in y))
    acc = 0.0
    lap_power = p
    for j in range(m // 2 + 1):
        if j:
            lap_power = dunkl_laplacian_sq(ctx, lap_power)
        coeff = (-1.0 if j % 2 else 1.0) / (2**j * factorial(j))
        acc += coeff * scaled_normalized_bessel(lam, m - j, t) * float(
            lap_power.evaluate(tuple(float(v) for v in y))
        )
    return _PHASES[m % 4] * acc


def sphere_pairing_residual(
    ctx: DunklContext, p: Poly, y: Sequence[float], *, n_terms: int | None = None
) -> float:
    return abs(sphere_pairing(ctx, p, y, n_terms=n_terms) - sphere_pairing_rhs(ctx, p, y))


# -- Gaussian transforms ----------------------------------------------------

_CTX_1D: dict[Fraction, DunklContext] = {}
_MOMENT_1D: dict[tuple[Fraction, int], Fraction] = {}


def _moment_1d(kappa: Fraction, exponent: int) -> Fraction:
    """Exact normalized Gaussian moment of x^exponent for one coordinate."""
    if exponent % 2:
        return Fraction(0)
    key = (kappa, exponent)
    value = _MOMENT_1D.get(key)
    if value is None:
        ctx = _CTX_1D.get(kappa)
        if ctx is None:
            ctx = DunklContext(build_root_system("z2:d=1", [kappa]))
            _CTX_1D[kappa] = ctx
        value = gaussian_moment(ctx, Poly.monomial(1, (exponent,)))
        _MOMENT_1D[key] = value
    return value


def _gauss_factor(
    kappa: Fraction, exponent: int, t: float, n_terms: int | None
) -> complex:
    """One-coordinate factor sum_n a_n (-i t)^n moment(exponent + n)."""
    z = -1j * t
    acc = 0j
    zpow = 1 + 0j
    biggest = 0.0
    coeffs = kernel_coefficients(kappa, n_terms) if n_terms is not None else None
    limit = n_terms if n_terms is not None else 400
    running = Fraction(1)
    for n in range(limit + 1):
        if n:
            div = Fraction(n) + (2 * kappa if n % 2 else 0)
            running /= div
        a = coeffs[n] if coeffs is not None else running
        if (exponent + n) % 2 == 0:
            term = float(a * _moment_1d(kappa, exponent + n)) * zpow
            acc += term
            biggest = max(biggest, abs(term))
            if n_terms is None and abs(term) < 1e-18 * max(1.0, biggest) and n > abs(t) ** 2:
                return acc
        zpow *= z
    if n_terms is None:
        raise TruncationError("gaussian transform series did not converge")
    return acc


def dunkl_transform_gauss_poly(
    ctx: DunklContext, p: Poly, y: Sequence[float], *, n_terms: int | None = None
) -> complex:
    """Mass-normalized transform of p times the unit-rate Gaussian.

    Expands the kernel per coordinate and pairs every term with the exact
    one-dimensional Gaussian moments, which is valid precisely because both
    the weight and the kernel factorize over coordinates for sign-flip
    systems.
    """
    kappas = z2_kappas(ctx.rs)
    if len(y) != ctx.dim:
        raise ValueError("evaluation point has wrong dimension")
    factor_cache: dict[tuple[int, int], complex] = {}

    def factor(j: int, exponent: int) -> complex:
        key = (j, exponent)
        if key not in factor_cache:
            factor_cache[key] = _gauss_factor(kappas[j], exponent, float(y[j]), n_terms)
        return factor_cache[key]

    total = 0j
    for e, c in p.terms.items():
        value = float(c) + 0j
        for j, g in enumerate(e):
            value *= factor(j, g)
        total += value
    return total


def hecke_residual(
    ctx: DunklContext, p: Poly, y: Sequence[float], *, n_terms: int | None = None
) -> float:
    """Bochner-Hecke defect for homogeneous p at the point y.

    Compares the kernel-expansion transform of p times the Gaussian with
    the closed form: the phase (-i)^m times the Gaussian at y times the
    alternating Laplacian series of p evaluated at y.
    """
    if not p.is_homogeneous():
        raise ValueError("Bochner-Hecke identity needs homogeneous input")
    if p.is_zero():
        return 0.0
    m = p.degree()
    lhs = dunkl_transform_gauss_poly(ctx, p, y, n_terms=n_terms)
    yf = tuple(float(v) for v in y)
    acc = 0.0
    lap_power = p
    for j in range(m // 2 + 1):
        if j:
            lap_power = dunkl_laplacian_sq(ctx, lap_power)
        coeff = (-1.0 if j % 2 else 1.0) / (2**j * factorial(j))
        acc += coeff * float(lap_power.evaluate(yf))
    rhs = _PHASES[m % 4] * math.exp(-sum(v**2 for v in yf) / 2.0) * acc
    return abs(lhs - rhs)


def hermite_eigen_residual(
    ctx: DunklContext, p: Poly, y: Sequence[float], *, n_terms: int | None = None
) -> float:
    """Transform eigenvalue defect of the Hermite function built from p.

    The Hermite function (Hermite polynomial times the Gaussian) must be an
    eigenfunction of the transform with eigenvalue (-i)^deg(p).
    """
    if not p.is_homogeneous():
        raise ValueError("Hermite eigenfunction check needs homogeneous input")
    if p.is_zero():
        return 0.0
    m = p.degree()
    h = hermite_poly(ctx, p)
    lhs = dunkl_transform_gauss_poly(ctx, h, y, n_terms=n_terms)
    yf = tuple(float(v) for v in y)
    rhs = _PHASES[m % 4] * math.exp(-sum(v**2 for v in yf) / 2.0) * float(h.evaluate(yf))
    return abs(lhs - rhs)


# -- Hankel transform by quadrature ----------------------------------------


def _gaussian_tail_bound(r: float, power: float, rate: float) -> float:
    """Upper bound for the integral of t^power e^(-rate t^2) over (r, inf)."""
    slack = rate - (power - 1.0) / (2.0 * r * r)
    if slack <= 0.0:
        return math.inf
    return 0.5 * r ** (power - 1.0) * math.exp(-rate * r * r) / slack


def _adaptive_simpson(
    f: Callable[[float], float], a: float, b: float, tol: float
) -> float:
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) * (fa + 4.0 * fm + fb) / 6.0

    def recurse(a, fa, b, fb, m, fm, whole, tol, depth):
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) * (fa + 4.0 * flm + fm) / 6.0
        right = (b - m) * (fm + 4.0 * frm + fb) / 6.0
        delta = left + right - whole
        if abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0
        if depth <= 0:
            raise QuadratureError("adaptive quadrature tolerance not reached")
        return recurse(a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) + recurse(
            m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1
        )

    return recurse(a, fa, b, fb, m, fm, whole, tol, 40)


def hankel_numeric(
    f0: Callable[[float], float],
    nu: float,
    s: float,
    *,
    tol: float = 1e-12,
    amplitude: float = 1.0,
    power: int = 0,
    rate: float = 0.5,
) -> float:
    """Hankel transform of order nu of a Gaussian-type profile at s.

    Integrates f0(r) J_nu(r s)/(r s)^nu r^(2 nu + 1) over (0, inf) by
    adaptive Simpson on a finite window.  amplitude, power and rate
    describe the envelope |f0(r)| <= amplitude r^(2 power) e^(-rate r^2)
    from which the cutoff is chosen so the discarded tail stays below tol;
    the Bessel factor is bounded by its value at zero.  The cutoff, not a
    fixed window, keeps the Bessel series argument as small as the envelope
    allows.
    """
    if s < 0:
        raise ValueError("transform variable must be non-negative")
    j_bound = math.exp(-nu * math.log(2.0) - math.lgamma(nu + 1.0))
    env_power = 2.0 * power + 2.0 * nu + 1.0
    cutoff = 6.0
    while True:
        tail = amplitude * j_bound * _gaussian_tail_bound(cutoff, env_power, rate)
        if tail < 0.25 * tol:
            break
        cutoff += 0.5
        if cutoff > 60.0:
            raise QuadratureError("gaussian tail bound cannot reach the tolerance")
    arg_limit = max(BESSEL_SERIES_MAX, cutoff * s + 1.0)

    def integrand(r: float) -> float:
        if r == 0.0:
            return 0.0 if 2.0 * nu + 1.0 > 0 else f0(0.0) * j_bound
        return (
            f0(r)
            * normalized_bessel(nu, r * s, max_arg=arg_limit)
            * r ** (2.0 * nu + 1.0)
        )

    return _adaptive_simpson(integrand, 0.0, cutoff, 0.5 * tol)


def hankel_identity_residual(
    ctx: DunklContext,
    p: Poly,
    radial_power: int,
    y: Sequence[float],
    *,
    quad_tol: float = 1e-12,
    n_terms: int | None = None,
) -> float:
    """Transform of p times a radial Gaussian profile versus its Hankel form.

    The transform of p(x) r^(2 radial_power) e^(-r^2/2) is computed once by
    kernel expansion (absorbing the radial factor into the polynomial) and
    once through the Hankel transforms of the profile at shifted Bessel
    orders weighted by Laplacian powers of p.
    """
    if not p.is_homogeneous():
        raise ValueError("radial multiplier identity needs homogeneous input")
    if p.is_zero():
        return 0.0
    m = p.degree()
    lam = float(ctx.constants.bessel_index)
    lifted = norm_sq_poly(ctx.dim) ** radial_power * p
    lhs = dunkl_transform_gauss_poly(ctx, lifted, y, n_terms=n_terms)

    def f0(r: float) -> float:
        return r ** (2 * radial_power) * math.exp(-r * r / 2.0)

    yf = tuple(float(v) for v in y)
    t = math.sqrt(sum(v**2 for v in yf))
    acc = 0.0
    lap_power = p
    for j in range(m // 2 + 1):
        if j:
            lap_power = dunkl_laplacian_sq(ctx, lap_power)
        coeff = (-1.0 if j % 2 else 1.0) / (2**j * factorial(j))
        hank = hankel_numeric(
            f0, lam + m - j, t, tol=quad_tol, power=radial_power, rate=0.5
        )
        acc += coeff * hank * float(lap_power.evaluate(yf))
    rhs = _PHASES[m % 4] * acc
    return abs(lhs - rhs)


# -- multiplication rule ----------------------------------------------------


def transform_multiplication_residual(
    ctx: DunklContext,
    q: Poly,
    ys: Sequence[float],
    *,
    n_terms: int | None = None,
) -> float:
    """Defect of the rule: transform of x f equals i D applied to transform f.

    One-dimensional only.  f is q(x) times the unit Gaussian; its transform
    is again polynomial times Gaussian with exactly computable (complex
    rational) coefficients, so the right side is evaluated through the
    exact Dunkl derivative of that closed form while the left side comes
    from the kernel expansion.  Returns the largest absolute defect on the
    grid.
    """
    if ctx.dim != 1:
        raise ValueError("multiplication rule check is one-dimensional")
    real = Poly.zero(1)
    imag = Poly.zero(1)
    for degree, component in homogeneous_components(q):
        series = Poly.zero(1)
        lap_power = component
        for j in range(degree // 2 + 1):
            if j:
                lap_power = dunkl_laplacian_sq(ctx, lap_power)
            series = series + lap_power.scale(Fraction(-1 if j % 2 else 1, 2**j * factorial(j)))
        rot = degree % 4
        if rot == 0:
            real = real + series
        elif rot == 1:
            imag = imag - series
        elif rot == 2:
            real = real - series
        else:
            imag = imag + series

    x = Poly.variable(1, 1)
    d_real = apply_coord(ctx, 0, real) - x * real
    d_imag = apply_coord(ctx, 0, imag) - x * imag
    lifted = x * q

    worst = 0.0
    for y in ys:
        lhs = dunkl_transform_gauss_poly(ctx, lifted, (y,), n_terms=n_terms)
        gauss = math.exp(-y * y / 2.0)
        rhs = 1j * complex(
            float(d_real.evaluate((y,))), float(d_imag.evaluate((y,)))
        ) * gauss
        worst = max(worst, abs(lhs - rhs))
    return worst
