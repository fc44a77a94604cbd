"""Sparse multivariate polynomials over the rationals.

Terms live in a dict keyed by exponent tuples with nonzero Fraction
coefficients, so equality is exact structural equality of canonical forms.
Besides ring arithmetic the module provides the two primitives the Dunkl
calculus leans on: substitution of a reflection and exact division by the
linear form <a, x> of a root (and by the squared norm, which the harmonic
decomposition needs).
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Mapping, Sequence

Exponent = tuple[int, ...]


class PolyError(ValueError):
    pass


class PolyParseError(PolyError):
    """Syntax error in polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ExactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder.

    Raised when a caller-side invariant is broken (a numerator that should
    vanish on a hyperplane does not), so it signals a bug, not bad input.
    """


class Poly:
    """Immutable sparse polynomial; do not mutate `terms` after creation."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[Exponent, Fraction] | None = None):
        if dim < 1:
            raise PolyError("dimension must be positive")
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != dim:
                    raise PolyError(f"exponent {e} has wrong length for dim {dim}")
                if c:
                    clean[e] = Fraction(c)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "Poly":
        return cls(dim)

    @classmethod
    def const(cls, dim: int, value) -> "Poly":
        return cls(dim, {(0,) * dim: Fraction(value)})

    @classmethod
    def variable(cls, dim: int, index: int) -> "Poly":
        """The coordinate x_index with a 1-based index."""
        if not 1 <= index <= dim:
            raise PolyError(f"variable index {index} out of range 1..{dim}")
        e = tuple(1 if i == index - 1 else 0 for i in range(dim))
        return cls(dim, {e: Fraction(1)})

    @classmethod
    def monomial(cls, dim: int, exponents: Sequence[int], coeff=1) -> "Poly":
        return cls(dim, {tuple(exponents): Fraction(coeff)})

    # -- ring arithmetic ---------------------------------------------------

    def _require_same_dim(self, other: "Poly") -> None:
        if self.dim != other.dim:
            raise PolyError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.dim, other)
        self._require_same_dim(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.dim, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.dim, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._require_same_dim(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.dim, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, factor) -> "Poly":
        factor = Fraction(factor)
        if not factor:
            return Poly(self.dim)
        return Poly(self.dim, {e: c * factor for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PolyError("polynomial powers must be non-negative integers")
        result = Poly.const(self.dim, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.dim == other.dim and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.dim, other)
        return NotImplemented

    __hash__ = None

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.dim, Fraction(0))

    def evaluate(self, point: Sequence):
        """Evaluate at a point; exact for Fraction input, numeric otherwise."""
        if len(point) != self.dim:
            raise PolyError("point has wrong dimension")
        total = None
        for e, c in self.terms.items():
            val = c * prod(x**k for x, k in zip(point, e) if k)
            total = val if total is None else total + val
        return Fraction(0) if total is None else total

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self.dim}, {format_poly(self)!r})"


def linear_form(coeffs: Sequence) -> Poly:
    """The polynomial <c, x> for a coefficient vector c."""
    dim = len(coeffs)
    terms: dict[Exponent, Fraction] = {}
    for i, c in enumerate(coeffs):
        c = Fraction(c)
        if c:
            terms[tuple(1 if j == i else 0 for j in range(dim))] = c
    return Poly(dim, terms)


def norm_sq_poly(dim: int) -> Poly:
    """x_1^2 + ... + x_d^2."""
    return Poly(
        dim,
        {tuple(2 if j == i else 0 for j in range(dim)): Fraction(1) for i in range(dim)},
    )


def partial_derivative(p: Poly, direction: Sequence) -> Poly:
    """Directional derivative <xi, grad> p, exact."""
    out: dict[Exponent, Fraction] = {}
    direction = [Fraction(c) for c in direction]
    if len(direction) != p.dim:
        raise PolyError("direction has wrong dimension")
    for e, c in p.terms.items():
        for i, xi in enumerate(direction):
            if xi and e[i]:
                f = tuple(v - 1 if j == i else v for j, v in enumerate(e))
                s = out.get(f, 0) + c * xi * e[i]
                if s:
                    out[f] = s
                else:
                    out.pop(f, None)
    return Poly(p.dim, out)


def partial_coord(p: Poly, index: int) -> Poly:
    """Partial derivative in coordinate index (0-based)."""
    out: dict[Exponent, Fraction] = {}
    for e, c in p.terms.items():
        if e[index]:
            f = tuple(v - 1 if j == index else v for j, v in enumerate(e))
            out[f] = out.get(f, 0) + c * e[index]
    return Poly(p.dim, out)


def classical_laplacian(p: Poly) -> Poly:
    out: dict[Exponent, Fraction] = {}
    for e, c in p.terms.items():
        for i, k in enumerate(e):
            if k >= 2:
                f = tuple(v - 2 if j == i else v for j, v in enumerate(e))
                s = out.get(f, 0) + c * k * (k - 1)
                if s:
                    out[f] = s
                else:
                    out.pop(f, None)
    return Poly(p.dim, out)


def reflection_variable_images(alpha: Sequence[Fraction], dim: int) -> list[Poly]:
    """Images of the coordinates under the reflection in alpha^perp.

    Entry i is the linear polynomial (r_alpha x)_i.
    """
    alpha = [Fraction(a) for a in alpha]
    norm = sum(a * a for a in alpha)
    if norm == 0:
        raise PolyError("cannot reflect in a zero root")
    images = []
    for i in range(dim):
        coeffs = [Fraction(0)] * dim
        coeffs[i] = Fraction(1)
        factor = 2 * alpha[i] / norm
        for j in range(dim):
            coeffs[j] -= factor * alpha[j]
        images.append(linear_form(coeffs))
    return images


def compose_reflection(p: Poly, alpha: Sequence) -> Poly:
    """Substitute the reflection in alpha^perp into p; an involution."""
    images = reflection_variable_images(alpha, p.dim)

    # Most systems of interest reflect by signed coordinate permutations, in
    # which case monomials map to signed monomials and no expansion is needed.
    signed: list[tuple[int, int]] | None = []
    for img in images:
        if len(img.terms) == 1:
            (e, c), = img.terms.items()
            if sum(e) == 1 and abs(c) == 1:
                signed.append((e.index(1), 1 if c > 0 else -1))
                continue
        signed = None
        break
    if signed is not None:
        out: dict[Exponent, Fraction] = {}
        for e, c in p.terms.items():
            f = [0] * p.dim
            sign = 1
            for i, k in enumerate(e):
                if k:
                    target, s = signed[i]
                    f[target] += k
                    if s < 0 and k % 2:
                        sign = -sign
            key = tuple(f)
            v = out.get(key, 0) + sign * c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return Poly(p.dim, out)

    result = Poly.zero(p.dim)
    power_cache: list[dict[int, Poly]] = [dict() for _ in range(p.dim)]

    def power(i: int, k: int) -> Poly:
        if k not in power_cache[i]:
            power_cache[i][k] = images[i] ** k
        return power_cache[i][k]

    for e, c in p.terms.items():
        factor = Poly.const(p.dim, c)
        for i, k in enumerate(e):
            if k:
                factor = factor * power(i, k)
        result = result + factor
    return result


def divide_exact_by_linear(p: Poly, alpha: Sequence) -> Poly:
    """Quotient q with q * <alpha, x> == p, else ExactDivisionError.

    Works by synthetic division along the pivot coordinate where alpha has
    its largest entry; the loop strips the top pivot degree each pass, so a
    nonzero remainder surfaces as a leftover of pivot degree zero.
    """
    alpha = [Fraction(a) for a in alpha]
    if len(alpha) != p.dim:
        raise PolyError("root has wrong dimension")
    if all(a == 0 for a in alpha):
        raise PolyError("cannot divide by a zero form")
    pivot = max(range(p.dim), key=lambda i: abs(alpha[i]))
    ak = alpha[pivot]

    rem = dict(p.terms)
    quot: dict[Exponent, Fraction] = {}
    while rem:
        top = max(e[pivot] for e in rem)
        if top == 0:
            raise ExactDivisionError(
                f"{format_poly(p)} is not divisible by the linear form of "
                f"({', '.join(str(a) for a in alpha)}); remainder "
                f"{format_poly(Poly(p.dim, rem))}"
            )
        level = [(e, c) for e, c in rem.items() if e[pivot] == top]
        for e, c in level:
            qe = tuple(v - 1 if j == pivot else v for j, v in enumerate(e))
            qc = c / ak
            quot[qe] = quot.get(qe, 0) + qc
            for i, ai in enumerate(alpha):
                if ai:
                    f = tuple(v + 1 if j == i else v for j, v in enumerate(qe))
                    s = rem.get(f, 0) - qc * ai
                    if s:
                        rem[f] = s
                    else:
                        rem.pop(f, None)
    return Poly(p.dim, {e: c for e, c in quot.items() if c})


def try_divide_norm_sq(p: Poly) -> Poly | None:
    """Quotient of p by x_1^2+...+x_d^2, or None when not divisible.

    Solves the coefficient equations in lexicographic order: the leading
    unknown of each equation is the quotient coefficient under the x_1^2
    shift, so the triangular sweep below is the exact linear solve.
    """
    if p.is_zero():
        return p
    rem = dict(p.terms)
    quot: dict[Exponent, Fraction] = {}
    while rem:
        e = max(rem)
        if e[0] < 2:
            return None
        c = rem[e]
        qe = (e[0] - 2,) + e[1:]
        quot[qe] = c
        for i in range(p.dim):
            f = tuple(v + 2 if j == i else v for j, v in enumerate(qe))
            s = rem.get(f, 0) - c
            if s:
                rem[f] = s
            else:
                rem.pop(f, None)
    return Poly(p.dim, quot)


def divide_exact_by_norm_sq(p: Poly) -> Poly:
    q = try_divide_norm_sq(p)
    if q is None:
        raise ExactDivisionError(
            f"{format_poly(p)} is not divisible by the squared norm"
        )
    return q


def homogeneous_components(p: Poly) -> list[tuple[int, Poly]]:
    """Split into homogeneous parts, listed by increasing degree."""
    buckets: dict[int, dict[Exponent, Fraction]] = {}
    for e, c in p.terms.items():
        buckets.setdefault(sum(e), {})[e] = c
    return [(d, Poly(p.dim, terms)) for d, terms in sorted(buckets.items())]


# -- text form -------------------------------------------------------------
#
# term   := factor ('*' factor)*
# factor := integer ('/' integer)? | 'x' index ('^' exponent)?
# terms joined by '+' / '-'; whitespace free; variables are 1-based.


def _grlex_sort_key(e: Exponent):
    return (sum(e), e)


def format_poly(p: Poly) -> str:
    """Canonical text: graded-lexicographic descending term order."""
    if not p.terms:
        return "0"
    pieces = []
    for e in sorted(p.terms, key=_grlex_sort_key, reverse=True):
        c = p.terms[e]
        var_part = "*".join(
            f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}"
            for i, k in enumerate(e)
            if k
        )
        mag = abs(c)
        if not var_part:
            body = str(mag)
        elif mag == 1:
            body = var_part
        else:
            body = f"{mag}*{var_part}"
        pieces.append(("-" if c < 0 else "+", body))
    sign, first = pieces[0]
    text = ("-" if sign == "-" else "") + first
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def parse_poly(text: str, dim: int) -> Poly:
    """Parse polynomial text into a canonical Poly with the given dimension."""
    s = text.replace("−", "-")
    n = len(s)
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < n and s[pos].isspace():
            pos += 1

    def read_int(what: str) -> int:
        nonlocal pos
        start = pos
        while pos < n and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise PolyParseError(f"expected {what}", start)
        return int(s[start:pos])

    def read_factor() -> tuple[Fraction, list[int]]:
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise PolyParseError("unexpected end of input", pos)
        ch = s[pos]
        if ch == "x":
            var_pos = pos
            pos += 1
            index = read_int("variable index")
            if not 1 <= index <= dim:
                raise PolyParseError(
                    f"variable x{index} out of range 1..{dim}", var_pos
                )
            exp = 1
            skip_ws()
            if pos < n and s[pos] == "^":
                pos += 1
                skip_ws()
                exp = read_int("exponent")
            exps = [0] * dim
            exps[index - 1] = exp
            return Fraction(1), exps
        if ch.isdigit():
            num = read_int("number")
            skip_ws()
            if pos < n and s[pos] == "/":
                slash = pos
                pos += 1
                skip_ws()
                den = read_int("denominator")
                if den == 0:
                    raise PolyParseError("zero denominator", slash)
                return Fraction(num, den), [0] * dim
            return Fraction(num), [0] * dim
        raise PolyParseError(f"unexpected character {ch!r}", pos)

    def read_term() -> tuple[Fraction, Exponent]:
        nonlocal pos
        coeff, exps = read_factor()
        while True:
            skip_ws()
            if pos < n and s[pos] == "*":
                pos += 1
                c2, e2 = read_factor()
                coeff *= c2
                exps = [a + b for a, b in zip(exps, e2)]
            else:
                return coeff, tuple(exps)

    terms: dict[Exponent, Fraction] = {}
    skip_ws()
    if pos >= n:
        raise PolyParseError("empty input", pos)
    sign = 1
    if s[pos] in "+-":
        sign = -1 if s[pos] == "-" else 1
        pos += 1
    while True:
        coeff, e = read_term()
        total = terms.get(e, 0) + sign * coeff
        if total:
            terms[e] = total
        else:
            terms.pop(e, None)
        skip_ws()
        if pos >= n:
            break
        if s[pos] == "+":
            sign = 1
        elif s[pos] == "-":
            sign = -1
        else:
            raise PolyParseError(f"expected '+' or '-', got {s[pos]!r}", pos)
        pos += 1
    return Poly(dim, terms)
