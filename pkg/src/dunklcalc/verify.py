"""Named verification suites with deterministic, JSON-serializable reports.

Each suite checks one family of identities of the calculus on randomized
inputs drawn from a seeded generator, so identical arguments produce byte
identical reports.  Exact suites report the literal residual "0" on
success and the canonical form of the offending residual on failure;
numeric suites report values together with absolute and relative defects
against per-case tolerances.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .harmonic import (
    MaxwellDegenerateError,
    clebsch_project_maxwell,
    clebsch_project_series,
    gaussian_series_residual,
    harmonic_decompose,
    hermite_poly,
    rodrigues_residual,
)
from .integrate import gaussian_moment, pizzetti_mean, sphere_oracle_z2d
from .operators import (
    DunklContext,
    adjoint_formula_residual,
    commutator_residual,
    dunkl_laplacian_expr,
    dunkl_laplacian_invariant,
    dunkl_laplacian_sq,
    mult_commutator_residual,
)
from .poly import (
    Poly,
    classical_laplacian,
    compose_reflection,
    homogeneous_components,
    norm_sq_poly,
)
from .radial import RadialProfile, WeightedFunction, hobson_residual
from .roots import build_root_system
from .transform import (
    KernelSeries1D,
    dunkl_kernel_z2d,
    dunkl_transform_gauss_poly,
    hankel_identity_residual,
    hankel_numeric,
    hecke_residual,
    hermite_eigen_residual,
    kernel_eigen_residual,
    scaled_normalized_bessel,
    sphere_pairing,
    sphere_pairing_residual,
    transform_multiplication_residual,
    z2_kappas,
)
from .util import parse_rational, pochhammer


@dataclass
class CaseResult:
    name: str
    status: str  # pass | fail | skipped
    residual: str | float
    detail: str = ""
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "status": self.status,
            "residual": self.residual,
            "detail": self.detail,
        }
        out.update(self.extras)
        return out


@dataclass
class VerificationReport:
    suite: str
    system: str
    seed: int
    cases: list[CaseResult]
    tolerance: float | None = None

    @property
    def passed(self) -> bool:
        return all(case.status != "fail" for case in self.cases)

    def to_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "system": self.system,
            "seed": self.seed,
            "passed": self.passed,
        }
        if self.tolerance is not None:
            out["tolerance"] = self.tolerance
        out["cases"] = [c.to_dict() for c in sorted(self.cases, key=lambda c: c.name)]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        n_pass = sum(c.status == "pass" for c in self.cases)
        n_fail = sum(c.status == "fail" for c in self.cases)
        n_skip = sum(c.status == "skipped" for c in self.cases)
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"[{verdict}] suite={self.suite} system={self.system} "
            f"pass={n_pass} fail={n_fail} skipped={n_skip}"
        )


# -- shared helpers ----------------------------------------------------------

_CONTEXTS: dict[tuple[str, tuple[str, ...]], DunklContext] = {}


def get_context(system: str, kappas: Sequence) -> DunklContext:
    """Build (and cache) the operator context for a named system."""
    key = (system, tuple(str(k) for k in kappas))
    ctx = _CONTEXTS.get(key)
    if ctx is None:
        values = [parse_rational(str(k)) for k in kappas]
        ctx = DunklContext(build_root_system(system, values))
        _CONTEXTS[key] = ctx
    return ctx


def _zero_kappa_context(ctx: DunklContext) -> DunklContext:
    rs = ctx.rs
    zeros = [Fraction(0)] * len(rs.multiplicities)
    return DunklContext(build_root_system([list(r) for r in rs.positive_roots], zeros))


def monomials_of_degree(dim: int, degree: int) -> list[tuple[int, ...]]:
    if degree == 0:
        return [(0,) * dim]
    out = []
    for combo in itertools.combinations_with_replacement(range(dim), degree):
        e = [0] * dim
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(set(out))


def random_homogeneous(rng: random.Random, dim: int, degree: int, max_terms: int = 4) -> Poly:
    monos = monomials_of_degree(dim, degree)
    count = min(len(monos), rng.randint(1, max_terms))
    picks = rng.sample(monos, count)
    terms = {}
    for e in picks:
        c = rng.choice([-4, -3, -2, -1, 1, 2, 3, 4])
        den = rng.choice([1, 1, 2, 3])
        terms[e] = Fraction(c, den)
    return Poly(dim, terms)


def random_poly(rng: random.Random, dim: int, max_degree: int) -> Poly:
    total = Poly.zero(dim)
    for degree in rng.sample(range(max_degree + 1), min(3, max_degree + 1)):
        total = total + random_homogeneous(rng, dim, degree)
    if total.is_zero():
        total = Poly.const(dim, 1)
    return total


def random_direction(rng: random.Random, dim: int) -> tuple[Fraction, ...]:
    while True:
        vec = tuple(
            Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2])) for _ in range(dim)
        )
        if any(vec):
            return vec


def _poly_case(name: str, residual: Poly, detail: str = "") -> CaseResult:
    if residual.is_zero():
        return CaseResult(name, "pass", "0", detail)
    return CaseResult(name, "fail", str(residual), detail)


def _weighted_case(name: str, residual: WeightedFunction, detail: str = "") -> CaseResult:
    if residual.is_zero():
        return CaseResult(name, "pass", "0", detail)
    return CaseResult(name, "fail", str(residual), detail)


def _equal_case(name: str, got, want, detail: str = "") -> CaseResult:
    if got == want:
        return CaseResult(name, "pass", "0", detail)
    return CaseResult(name, "fail", f"{got} != {want}", detail)


def _numeric_case(
    name: str,
    residual: float,
    tol: float,
    detail: str = "",
    extras: dict | None = None,
    kind: str = "abs",
) -> CaseResult:
    """Numeric case; kind says whether the residual is absolute or relative."""
    status = "pass" if residual <= tol else "fail"
    extras = dict(extras or {})
    extras.setdefault("abs_residual", residual if kind == "abs" else None)
    extras.setdefault("rel_residual", residual if kind == "rel" else None)
    extras.setdefault("tolerance_used", tol)
    return CaseResult(name, status, residual, detail, extras)


# -- exact suites ------------------------------------------------------------


def hobson_suite(
    system: str,
    kappas: Sequence,
    *,
    seed: int = 0,
    degree: int = 6,
    count_per_profile: int = 8,
    tolerance: float | None = None,
) -> VerificationReport:
    """Radial expansion of p(D): residual must be exactly zero.

    Runs every supported profile shape against random homogeneous
    polynomials of each degree up to the bound.
    """
    ctx = get_context(system, kappas)
    rng = random.Random(seed)
    lam = ctx.constants.bessel_index
    profiles = [
        ("r^2", RadialProfile.power(2)),
        ("r^4", RadialProfile.power(4)),
        ("r^(7-2)", RadialProfile.power(Fraction(7, 2))),
        ("r^(-2lam)", RadialProfile.power(-2 * lam)),
        ("gauss-half", RadialProfile.gaussian(Fraction(-1, 2))),
        ("gauss-one", RadialProfile.gaussian(-1)),
        ("r^3*gauss-one", RadialProfile.power_gauss(3, -1)),
    ]
    cases: list[CaseResult] = []
    for pname, profile in profiles:
        degrees = list(range(min(degree, count_per_profile - 1) + 1))
        while len(degrees) < count_per_profile:
            degrees.append(rng.randint(1, degree))
        for i, m in enumerate(degrees):
            p = random_homogeneous(rng, ctx.dim, m)
            res = hobson_residual(ctx, p, profile)
            cases.append(
                _weighted_case(
                    f"{pname}/{i:02d}-deg{m}", res, detail=f"p={p}, profile={profile}"
                )
            )
        ctx.clear_radial_cache()
    return VerificationReport("hobson", system, seed, cases)


def commutativity_suite(
    system: str,
    kappas: Sequence,
    *,
    seed: int = 0,
    degree: int = 6,
    count: int = 15,
    tolerance: float | None = None,
) -> VerificationReport:
    """Pairwise commutativity of the operators in random directions."""
    ctx = get_context(system, kappas)
    rng = random.Random(seed)
    cases = []
    for i in range(count):
        xi = random_direction(rng, ctx.dim)
        eta = random_direction(rng, ctx.dim)
        p = random_poly(rng, ctx.dim, degree)
        res = commutator_residual(ctx, xi, eta, p)
        cases.append(_poly_case(f"pair/{i:02d}", res, detail=f"xi={xi}, eta={eta}"))
    p = random_poly(rng, ctx.dim, degree)
    xi = random_direction(rng, ctx.dim)
    cases.append(
        _poly_case("equal-directions", commutator_residual(ctx, xi, xi, p))
    )
    return VerificationReport("commutativity", system, seed, cases)


def laplacian_routes_suite(
    system: str,
    kappas: Sequence,
    *,
    seed: int = 0,
    degree: int = 6,
    count: int = 100,
    tolerance: float | None = None,
) -> VerificationReport:
    """Squared-operator route against the explicit second-order expression."""
    ctx = get_context(system, kappas)
    rng = random.Random(seed)
    cases = []
    for i in range(count):
        p = random_poly(rng, ctx.dim, degree)
        res = dunkl_laplacian_sq(ctx, p) - dunkl_laplacian_expr(ctx, p)
        cases.append(_poly_case(f"routes/{i:03d}", res))
    zero_ctx = _zero_kappa_context(ctx)
    for i in range(5):
        p = random_poly(rng, ctx.dim, degree)
        res = dunkl_laplacian_sq(zero_ctx, p) - classical_laplacian(p)
        cases.append(_poly_case(f"classical-limit/{i}", res))
    r2 = norm_sq_poly(ctx.dim)
    invariant = Poly.const(ctx.dim, 1)
    for j in range(1, 4):
        invariant = invariant * r2
        res = dunkl_laplacian_sq(ctx, invariant) - dunkl_laplacian_invariant(
            ctx, invariant
        )
        cases.append(_poly_case(f"invariant-restriction/r^{2 * j}", res))
    return VerificationReport("laplacian-routes", system, seed, cases)


def laplacian_commutator_suite(
    system: str,
    kappas: Sequence,
    *,
    seed: int = 0,
    degree: int = 4,
    tolerance: float | None = None,
) -> VerificationReport:
    """[Lap^j, x_l .] = 2 j D_l Lap^(j-1) on random polynomials, j <= 3."""
    ctx = get_context(system, kappas)
    rng = random.Random(seed)
    cases = []
    for power in (1, 2, 3):
        for coord in range(ctx.dim):
            p = random_poly(rng, ctx.dim, degree)
            res = mult_commutator_residual(ctx, power, coord, p)
            cases.append(
                _poly_case(f"power{power}/x{coord + 1}", res, detail=f"p={p}")
            )
    return VerificationReport("laplacian-commutator", system, seed, cases)


def adjoint_formula_suite(
    system: str,
    kappas: Sequence,
    *,
    seed: int = 0,
    degree: int = 4,
    tolerance: float | None = None,
) -> VerificationReport:
    """p(D) against the iterated half-Laplacian commutator form, m <= 4."""
    ctx = get_context(system, kappas)
    rng = random.Random(seed)
    cases = []
    for m in range(degree + 1):
        p = random_homogeneous(rng, ctx.dim, m, max_terms=3)
        target = random_poly(rng, ctx.dim, 4)
        res = adjoint_formula_residual(ctx, p, target)
        cases.append(_poly_case(f"deg{m}", res, detail=f"p={p}"))
    res = adjoint_formula_residual(
        ctx, norm_sq_poly(ctx.dim), random_poly(rng, ctx.dim, 4)
    )
    cases.append(_poly_case("norm-square", res))
    return VerificationReport("adjoint-formula", system, seed, cases)


def projection_suite(
    system: str,
    kappas: Sequence,
    *,
    seed: int = 0,
    degree: int = 5,
    tolerance: float | None = None,
) -> VerificationReport:
    """Harmonicity, idempotence, route agreement, and decomposition."""
    ctx = get_context(system, kappas)
    rng = random.Random(seed)
    lam = ctx.constants.bessel_index
    cases = []
    for m in range(degree + 1):
        for i in range(2):
            p = random_homogeneous(rng, ctx.dim, m, max_terms=3)
            name = f"deg{m}/{i}"
            h = clebsch_project_series(ctx, p)
            cases.append(
                _poly_case(f"{name}/harmonic", dunkl_laplacian_sq(ctx, h))
            )
            cases.append(
                _poly_case(f"{name}/idempotent", clebsch_project_series(ctx, h) - h)
            )
            if lam == 0 and m >= 1:
                cases.append(
                    CaseResult(
                        f"{name}/maxwell",
                        "skipped",
                        "0",
                        "Maxwell route degenerates at Bessel index 0; series "
                        "route is normative",
                    )
                )
            else:
                try:
                    maxwell = clebsch_project_maxwell(ctx, p)
                    cases.append(_poly_case(f"{name}/maxwell", maxwell - h))
                except (ArithmeticError, MaxwellDegenerateError) as exc:
                    cases.append(
                        CaseResult(f"{name}/maxwell", "fail", str(exc), f"p={p}")
                    )
            decomposition = harmonic_decompose(ctx, p)
            cases.append(
                _poly_case(
                    f"{name}/recompose", decomposition.recompose() - p,
                    detail=f"{len(decomposition.components)} components",
                )
            )
            for j, component in decomposition.components:
                cases.append(
                    _poly_case(
                        f"{name}/component{j}-harmonic",
                        dunkl_laplacian_sq(ctx, component),
                    )
                )
    return VerificationReport("projection", system, seed, cases)


def pizzetti_suite(
    system: str,
    kappas: Sequence,
    *,
    seed: int = 0,
    degree: int = 8,
    tolerance: float | None = None,
) -> VerificationReport:
    """Spherical-mean series against the Dirichlet oracle and invariances."""
    ctx = get_context(system, kappas)
    rng = random.Random(seed)
    cases = []
    try:
        coordinate_kappas = z2_kappas(ctx.rs)
    except ValueError:
        coordinate_kappas = None

    if coordinate_kappas is not None:
        half = degree // 2
        for beta in itertools.product(range(half + 1), repeat=ctx.dim):
            if sum(beta) > half:
                continue
            exponents = tuple(2 * b for b in beta)
            mean = pizzetti_mean(ctx, Poly.monomial(ctx.dim, exponents))
            oracle = sphere_oracle_z2d(coordinate_kappas, exponents)
            label = "x^(" + ",".join(str(e) for e in exponents) + ")"
            cases.append(
                _equal_case(f"oracle/{label}", mean, oracle, detail=f"mean={mean}")
            )
        for i in range(3):
            exponents = [rng.choice([0, 1, 2, 3]) for _ in range(ctx.dim)]
            if all(e % 2 == 0 for e in exponents):
                exponents[0] += 1
            mean = pizzetti_mean(ctx, Poly.monomial(ctx.dim, tuple(exponents)))
            cases.append(_equal_case(f"odd/{i}", mean, Fraction(0)))

    zero_ctx = _zero_kappa_context(ctx)
    for a in range(degree // 2 + 1):
        e = [0] * ctx.dim
        e[0] = 2 * a
        mean = pizzetti_mean(zero_ctx, Poly.monomial(ctx.dim, tuple(e)))
        classical = pochhammer(Fraction(1, 2), a) / pochhammer(Fraction(ctx.dim, 2), a)
        cases.append(_equal_case(f"classical/x1^{2 * a}", mean, classical))

    for i in range(4):
        p = random_poly(rng, ctx.dim, min(degree, 6))
        mean = pizzetti_mean(ctx, p)
        for k, alpha in enumerate(ctx.rs.positive_roots):
            reflected = pizzetti_mean(ctx, compose_reflection(p, alpha))
            cases.append(_equal_case(f"invariance/{i}/root{k}", reflected, mean))

    lam = ctx.constants.bessel_index
    for i in range(4):
        p = random_poly(rng, ctx.dim, min(degree, 6))
        lhs = gaussian_moment(ctx, p)
        rhs = Fraction(0)
        for d_part, component in homogeneous_components(p):
            if d_part % 2 == 0:
                l = d_part // 2
                rhs += pizzetti_mean(ctx, component) * 2**l * pochhammer(lam + 1, l)
        cases.append(_equal_case(f"gaussian-consistency/{i}", lhs, rhs))

    cases.append(
        CaseResult(
            "sign-convention",
            "pass",
            "0",
            "series implemented with positive coefficients 1/(4^l l! (lam+1)_l); "
            "forced by the exact Dirichlet oracle and by positivity of means of "
            "even monomials, and matches the classical unweighted limit",
        )
    )
    return VerificationReport("pizzetti", system, seed, cases)


def hermite_suite(
    system: str,
    kappas: Sequence,
    *,
    seed: int = 0,
    degree: int = 5,
    tolerance: float | None = None,
) -> VerificationReport:
    """Rodrigues form, Gaussian expansion, and fixed points on harmonics."""
    ctx = get_context(system, kappas)
    rng = random.Random(seed)
    cases = []
    for m in range(degree + 1):
        p = random_homogeneous(rng, ctx.dim, m, max_terms=3)
        cases.append(
            _weighted_case(f"rodrigues/deg{m}", rodrigues_residual(ctx, p), f"p={p}")
        )
        cases.append(
            _weighted_case(
                f"gauss-series/deg{m}", gaussian_series_residual(ctx, p), f"p={p}"
            )
        )
        h = clebsch_project_series(ctx, p)
        if not h.is_zero():
            cases.append(
                _poly_case(f"fixed-on-harmonic/deg{m}", hermite_poly(ctx, h) - h)
            )
    return VerificationReport("hermite", system, seed, cases)


def mean_value_suite(
    system: str,
    kappas: Sequence,
    *,
    seed: int = 0,
    degree: int = 4,
    tolerance: float | None = None,
) -> VerificationReport:
    """Spherical mean of projected harmonics equals the value at the origin."""
    ctx = get_context(system, kappas)
    rng = random.Random(seed)
    cases = []
    for m in range(degree + 1):
        for i in range(2):
            p = random_homogeneous(rng, ctx.dim, m, max_terms=3)
            h = clebsch_project_series(ctx, p)
            name = f"deg{m}/{i}"
            if h.is_zero():
                cases.append(
                    CaseResult(name, "skipped", "0", "projection is zero")
                )
                continue
            mean = pizzetti_mean(ctx, h)
            cases.append(
                _equal_case(name, mean, h.constant_term(), detail=f"h={h}")
            )
    return VerificationReport("mean-value", system, seed, cases)


# -- numeric transform suite -------------------------------------------------

SPHERE_TOL = 1e-9
HECKE_TOL = 1e-8
HERMITE_TOL = 1e-8
KERNEL_TOL = 1e-12
HANKEL_FIXED_TOL = 1e-10
RADIAL_IDENTITY_TOL = 1e-8
MULTIPLICATION_TOL = 1e-8
DOUBLING_TOL = 1e-12

_GRIDS = {
    1: [(0.0,), (0.5,), (1.0,), (2.0,), (3.5,), (5.0,)],
    2: [(0.0, 0.0), (0.5, 0.0), (1.0, 1.0), (2.0, 1.0), (0.0, 2.5), (3.0, 4.0)],
}


def transforms_suite(
    system: str,
    kappas: Sequence,
    *,
    seed: int = 0,
    degree: int = 4,
    tolerance: float | None = None,
) -> VerificationReport:
    """Numeric verification battery for sign-flip systems (d = 1 or 2)."""
    ctx = get_context(system, kappas)
    coordinate_kappas = z2_kappas(ctx.rs)
    if ctx.dim not in _GRIDS:
        raise ValueError("transform suite supports dimensions 1 and 2")
    rng = random.Random(seed)
    lam = ctx.constants.bessel_index
    grid = _GRIDS[ctx.dim]
    cases: list[CaseResult] = []

    def tol(default: float) -> float:
        return tolerance if tolerance is not None else default

    # Kernel sanity: zero multiplicity reduces to the exponential.
    worst = 0.0
    zero_kappas = tuple(Fraction(0) for _ in range(ctx.dim))
    for xv in (-2.0, -1.0, 0.0, 1.0, 2.0):
        for yv in (-2.0, -1.0, 0.0, 1.0, 2.0):
            x = (xv,) * ctx.dim
            y = (yv,) * ctx.dim
            kernel = dunkl_kernel_z2d(zero_kappas, x, y)
            exact = math.exp(sum(a * b for a, b in zip(x, y)))
            worst = max(worst, abs(kernel - exact) / max(abs(exact), 1e-300))
    cases.append(
        _numeric_case("kernel/exponential-limit", worst, tol(KERNEL_TOL), kind="rel")
    )

    worst = max(
        abs(dunkl_kernel_z2d(coordinate_kappas, (0.0,) * ctx.dim, y) - 1.0)
        for y in grid
    )
    cases.append(_numeric_case("kernel/value-at-zero", worst, tol(KERNEL_TOL)))

    for j, kappa in enumerate(coordinate_kappas):
        series = KernelSeries1D.build(kappa, 60)
        cases.append(
            _numeric_case(
                f"kernel/recursion/coord{j + 1}",
                series.recursion_residual(),
                tol(KERNEL_TOL),
                kind="rel",
            )
        )
        worst = max(
            kernel_eigen_residual(kappa, xv, yv)
            for xv in (0.5, 1.0, 2.0)
            for yv in (0.5, 1.5)
        )
        cases.append(
            _numeric_case(
                f"kernel/eigen-property/coord{j + 1}", worst, tol(KERNEL_TOL),
                kind="rel",
            )
        )

    # Spherical pairing identity.
    test_polys = []
    for m in range(degree + 1):
        if ctx.dim == 1:
            test_polys.append((m, Poly.monomial(1, (m,))))
        else:
            test_polys.append((m, random_homogeneous(rng, ctx.dim, m, max_terms=3)))
    for m, p in test_polys:
        for i, y in enumerate(grid):
            res = sphere_pairing_residual(ctx, p, y)
            cases.append(
                _numeric_case(
                    f"sphere/deg{m}/y{i}", res, tol(SPHERE_TOL), detail=f"p={p}, y={y}"
                )
            )

    one = Poly.const(ctx.dim, 1)
    for i, y in enumerate(grid):
        t = math.sqrt(sum(v * v for v in y))
        lhs = sphere_pairing(ctx, one, y)
        rhs = scaled_normalized_bessel(lam, 0, t)
        cases.append(
            _numeric_case(
                f"sphere/bessel-profile/y{i}",
                abs(lhs - rhs),
                tol(SPHERE_TOL),
                extras={"lhs": [lhs.real, lhs.imag], "rhs": [rhs, 0.0]},
            )
        )

    harmonic = Poly.variable(ctx.dim, 1)
    if ctx.dim >= 2:
        harmonic = Poly.variable(ctx.dim, 1) * Poly.variable(ctx.dim, 2)
    m = harmonic.degree()
    for i, y in enumerate(grid):
        t = math.sqrt(sum(v * v for v in y))
        lhs = sphere_pairing(ctx, harmonic, y)
        rhs = scaled_normalized_bessel(lam, m, t) * harmonic.evaluate(
            tuple(-1j * v for v in y)
        )
        cases.append(
            _numeric_case(
                f"sphere/harmonic-profile/y{i}",
                abs(lhs - rhs),
                tol(SPHERE_TOL),
                detail=f"p={harmonic}",
            )
        )

    # Pizzetti by substituting the origin.
    even = norm_sq_poly(ctx.dim)
    res = abs(
        sphere_pairing(ctx, even, (0.0,) * ctx.dim) - float(pizzetti_mean(ctx, even))
    )
    cases.append(_numeric_case("sphere/origin-mean", res, tol(SPHERE_TOL)))

    # Gaussian transform: fixed point and Bochner-Hecke.  The relative-error
    # form of the fixed point is checked where double precision can support
    # it: the value decays like exp(-|y|^2/2) while the summation noise grows
    # like exp(+|y|^2/2), so beyond |y| ~ 3 only the absolute residuals
    # (covered by the degree-0 Bochner-Hecke cases) remain meaningful.
    for i, y in enumerate(grid):
        if math.sqrt(sum(v * v for v in y)) > 3.0:
            continue
        lhs = dunkl_transform_gauss_poly(ctx, one, y)
        rhs = math.exp(-sum(v * v for v in y) / 2.0)
        rel = abs(lhs - rhs) / max(abs(rhs), 1e-300)
        cases.append(
            _numeric_case(
                f"gauss/fixed-point/y{i}",
                rel,
                tol(1e-10),
                extras={"lhs": [lhs.real, lhs.imag], "rhs": [rhs, 0.0]},
                kind="rel",
            )
        )
    for m, p in test_polys:
        for i, y in enumerate(grid):
            res = hecke_residual(ctx, p, y)
            cases.append(
                _numeric_case(
                    f"hecke/deg{m}/y{i}", res, tol(HECKE_TOL), detail=f"p={p}, y={y}"
                )
            )
            res = hermite_eigen_residual(ctx, p, y)
            cases.append(
                _numeric_case(
                    f"hermite-eigen/deg{m}/y{i}",
                    res,
                    tol(HERMITE_TOL),
                    detail=f"p={p}, y={y}",
                )
            )

    # Hankel transform: Gaussian fixed point and the radial multiplier form.
    nu = float(lam)
    for s in (0.5, 1.0, 2.0, 3.0):
        value = hankel_numeric(lambda r: math.exp(-r * r / 2.0), nu, s, tol=1e-13)
        expected = math.exp(-s * s / 2.0)
        rel = abs(value - expected) / abs(expected)
        cases.append(
            _numeric_case(
                f"hankel/gauss-fixed/s{s}",
                rel,
                tol(HANKEL_FIXED_TOL),
                extras={"lhs": [value, 0.0], "rhs": [expected, 0.0]},
                kind="rel",
            )
        )
    value = hankel_numeric(lambda r: math.exp(-r * r / 2.0), nu, 0.0, tol=1e-13)
    cases.append(
        _numeric_case("hankel/zero-limit", abs(value - 1.0), tol(HANKEL_FIXED_TOL))
    )
    p = Poly.variable(ctx.dim, 1)
    y_point = (1.0,) + (0.0,) * (ctx.dim - 1)
    res = hankel_identity_residual(ctx, p, 1, y_point)
    cases.append(
        _numeric_case(
            "hankel/radial-multiplier", res, tol(RADIAL_IDENTITY_TOL), detail="p=x1"
        )
    )

    # Multiplication rule (one-dimensional statement).
    if ctx.dim == 1:
        mult_grid = [0.5, 1.0, 2.0]
        for label, kap, q in (
            ("kappa0-gauss", "0", Poly.const(1, 1)),
            ("kappa-half-gauss", "1/2", Poly.const(1, 1)),
            ("kappa1-x2gauss", "1", Poly.monomial(1, (2,))),
        ):
            small_ctx = get_context("z2:d=1", (kap,))
            res = transform_multiplication_residual(small_ctx, q, mult_grid)
            cases.append(
                _numeric_case(
                    f"multiplication/{label}", res, tol(MULTIPLICATION_TOL)
                )
            )
        res = transform_multiplication_residual(ctx, Poly.monomial(1, (1,)), mult_grid)
        cases.append(
            _numeric_case("multiplication/run-kappa", res, tol(MULTIPLICATION_TOL))
        )

    # Truncation-doubling stability, probed on values that stay away from
    # zero (the constant and the first coordinate) so relative comparison
    # is meaningful.
    y_small = tuple(2.0 / math.sqrt(ctx.dim) for _ in range(ctx.dim))
    for label, p_stab in (("one", one), ("x1", Poly.variable(ctx.dim, 1))):
        v1 = dunkl_transform_gauss_poly(ctx, p_stab, y_small, n_terms=60)
        v2 = dunkl_transform_gauss_poly(ctx, p_stab, y_small, n_terms=120)
        rel = abs(v1 - v2) / max(abs(v2), 1e-300)
        cases.append(
            _numeric_case(
                f"stability/gauss-doubling/{label}", rel, tol(DOUBLING_TOL), kind="rel"
            )
        )
        s1 = sphere_pairing(ctx, p_stab, y_small, n_terms=40)
        s2 = sphere_pairing(ctx, p_stab, y_small, n_terms=80)
        rel = abs(s1 - s2) / max(abs(s2), 1e-300)
        cases.append(
            _numeric_case(
                f"stability/sphere-doubling/{label}", rel, tol(DOUBLING_TOL), kind="rel"
            )
        )
    k1 = dunkl_kernel_z2d(coordinate_kappas, (1.0,) * ctx.dim, y_small, n_terms=40)
    k2 = dunkl_kernel_z2d(coordinate_kappas, (1.0,) * ctx.dim, y_small, n_terms=80)
    rel = abs(k1 - k2) / max(abs(k2), 1e-300)
    cases.append(
        _numeric_case("stability/kernel-doubling", rel, tol(DOUBLING_TOL), kind="rel")
    )

    return VerificationReport("transforms", system, seed, cases, tolerance=tolerance)


# -- registry ----------------------------------------------------------------

SuiteFn = Callable[..., VerificationReport]

SUITES: dict[str, SuiteFn] = {
    "hobson": hobson_suite,
    "commutativity": commutativity_suite,
    "laplacian-routes": laplacian_routes_suite,
    "laplacian-commutator": laplacian_commutator_suite,
    "adjoint-formula": adjoint_formula_suite,
    "projection": projection_suite,
    "pizzetti": pizzetti_suite,
    "hermite": hermite_suite,
    "mean-value": mean_value_suite,
    "transforms": transforms_suite,
}

# Default runs per suite when no system is requested on the command line.
EXACT_DEFAULT_RUNS: list[tuple[str, tuple[str, ...]]] = [
    ("z2:d=1", ("1/2",)),
    ("z2:d=2", ("1", "3/2")),
    ("z2:d=2", ("0", "0")),
    ("z2:d=3", ("1/2", "0", "2")),
    ("a:d=3", ("1",)),
    ("b:d=2", ("1", "2")),
    ("b:d=3", ("3/2", "1/2")),
    ("d:d=4", ("1/2",)),
]

TRANSFORM_DEFAULT_RUNS: list[tuple[str, tuple[str, ...]]] = [
    ("z2:d=1", ("0",)),
    ("z2:d=1", ("1/2",)),
    ("z2:d=1", ("1",)),
    ("z2:d=1", ("3/2",)),
    ("z2:d=2", ("0", "0")),
    ("z2:d=2", ("1/2", "1",)),
    ("z2:d=2", ("3/2", "0",)),
    ("z2:d=2", ("1", "3/2",)),
]

PIZZETTI_DEFAULT_RUNS: list[tuple[str, tuple[str, ...]]] = [
    ("z2:d=1", ("0",)),
    ("z2:d=1", ("1/2",)),
    ("z2:d=1", ("2",)),
    ("z2:d=2", ("1", "0")),
    ("z2:d=2", ("1/2", "3/2")),
    ("z2:d=3", ("1", "1/2", "0")),
    ("z2:d=3", ("2", "3/2", "1")),
    ("z2:d=4", ("1/2", "0", "1", "3/2")),
    ("z2:d=4", ("2", "1/2", "0", "1")),
]


def default_runs(suite: str) -> list[tuple[str, tuple[str, ...]]]:
    if suite == "transforms":
        return TRANSFORM_DEFAULT_RUNS
    if suite == "pizzetti":
        return PIZZETTI_DEFAULT_RUNS
    return EXACT_DEFAULT_RUNS
