"""Small exact-arithmetic helpers shared across the package."""

from __future__ import annotations

from fractions import Fraction


def pochhammer(a: Fraction | int, n: int) -> Fraction:
    """Rising factorial a(a+1)...(a+n-1); the empty product (n=0) is 1."""
    if n < 0:
        raise ValueError("pochhammer needs a non-negative count")
    out = Fraction(1)
    a = Fraction(a)
    for i in range(n):
        out *= a + i
    return out


def parse_rational(text: str) -> Fraction:
    """Parse 'p', 'p/q' or a decimal into an exact Fraction.

    Accepts the unicode minus sign so values copied from formatted output
    round-trip.
    """
    cleaned = text.strip().replace("−", "-")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc
