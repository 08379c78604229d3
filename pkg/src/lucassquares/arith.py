"""Integer square detection, w-square classification, and the Jacobi symbol.

These are the primitive predicates the verification harness is built on:
`square_witness` realizes every "equals w times a perfect square" test, and
`jacobi` evaluates the quadratic-residue symbol used by the residue-class
checks.  All functions are pure and arbitrary precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "SQUAREFREE_COEFFS",
    "SquareClass",
    "isqrt",
    "is_square",
    "square_witness",
    "square_class",
    "jacobi",
]

# The square-free coefficients the classification theorems range over.
SQUAREFREE_COEFFS = (1, 2, 3, 5, 6, 10, 15)


@dataclass(frozen=True)
class SquareClass:
    """A value written as w * x**2 with w square-free from SQUAREFREE_COEFFS."""

    w: int
    x: int

    def __post_init__(self) -> None:
        if self.w not in SQUAREFREE_COEFFS:
            raise ValueError(f"w must be one of {SQUAREFREE_COEFFS}, got {self.w}")
        if self.x < 0:
            raise ValueError(f"witness x must be nonnegative, got {self.x}")

    @property
    def value(self) -> int:
        return self.w * self.x * self.x


def isqrt(n: int) -> int:
    """Floor of the square root of a nonnegative integer.

    The result r satisfies r**2 <= n < (r + 1)**2.  Negative input is an
    error rather than a value.
    """
    if not isinstance(n, int):
        raise ValueError("isqrt requires an integer")
    if n < 0:
        raise ValueError(f"isqrt requires a nonnegative integer, got {n}")
    return math.isqrt(n)


def is_square(n: int) -> bool:
    """True iff n is a perfect square (negative numbers never are)."""
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def square_witness(n: int, w: int) -> int | None:
    """Return x >= 0 with n = w * x**2 exactly, or None if no such x exists.

    Negative n yields None rather than an error so that search loops over
    signed expressions stay branch-free; n = 0 yields 0.  w must be a
    positive integer (it need not be square-free here; callers pass products
    like w * U_m when testing two-term equations).
    """
    if not isinstance(w, int) or w < 1:
        raise ValueError(f"w must be a positive integer, got {w}")
    if n < 0:
        return None
    q, r = divmod(n, w)
    if r:
        return None
    x = math.isqrt(q)
    return x if x * x == q else None


def square_class(n: int) -> SquareClass | None:
    """Classify n as w * x**2 for the smallest fitting w in SQUAREFREE_COEFFS.

    Returns None when n is negative or no coefficient from the fixed set
    fits.  For n >= 1 the representation is unique when it exists (the
    square-free part of n is unique); n = 0 classifies as (w=1, x=0).
    """
    if n < 0:
        return None
    for w in SQUAREFREE_COEFFS:
        x = square_witness(n, w)
        if x is not None:
            return SquareClass(w, x)
    return None


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a / n) for odd positive n, in {-1, 0, 1}.

    Computed by the standard reciprocity loop: strip factors of two from the
    numerator (each contributing by n mod 8), swap with the quadratic
    reciprocity sign (n mod 4, a mod 4), and reduce.  (a / 1) = 1 by the
    empty-product convention; the value is 0 iff gcd(a, n) > 1.
    """
    if not isinstance(a, int) or not isinstance(n, int):
        raise ValueError("jacobi requires integers")
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi requires a positive odd n, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0
