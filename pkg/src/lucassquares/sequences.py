"""Exact and modular evaluation of the Lucas sequence pair U_n(P, Q), V_n(P, Q).

The two sequences share the recurrence X_{n+2} = P*X_{n+1} + Q*X_n with
starting values U_0 = 0, U_1 = 1 and V_0 = 2, V_1 = P.  Parameters are
restricted to P >= 1 and Q in {1, -1} with positive discriminant
P**2 + 4*Q (this rejects exactly (P, Q) = (1, -1) and (2, -1)).

Negative indices are defined by

    U_{-n} = -U_n / (-Q)**n        V_{-n} = V_n / (-Q)**n

so for Q = 1 they read U_{-n} = (-1)**(n+1) * U_n, V_{-n} = (-1)**n * V_n,
and for Q = -1 simply U_{-n} = -U_n, V_{-n} = V_n.

`pair_at` evaluates (U_n, V_n) in O(log |n|) big-integer operations by
division-free index doubling; `seq_range` streams consecutive indices by the
plain recurrence (and doubles as an independent cross-check of the doubling
path); `u_mod` and `v_mod` run the same doubling entirely in modular
arithmetic, so congruences at indices like 10**6 never materialize the
exact values.  Everything is arbitrary precision and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "INDEX_LIMIT",
    "SequenceParams",
    "IndexedPair",
    "ModularPair",
    "u",
    "v",
    "pair_at",
    "u_mod",
    "v_mod",
    "pair_mod",
    "seq_range",
]

# Indices must fit in a signed machine word; beyond that even the modular
# path is outside this toolkit's intended desk scale.
INDEX_LIMIT = 2**63


@dataclass(frozen=True)
class SequenceParams:
    """Parameter pair (P, Q) selecting one Lucas sequence family."""

    P: int
    Q: int

    def __post_init__(self) -> None:
        if not isinstance(self.P, int) or not isinstance(self.Q, int):
            raise ValueError("P and Q must be integers")
        if self.P < 1:
            raise ValueError(f"P must be >= 1, got {self.P}")
        if self.Q not in (1, -1):
            raise ValueError(f"Q must be 1 or -1, got {self.Q}")
        if self.P * self.P + 4 * self.Q <= 0:
            raise ValueError(
                f"discriminant P**2 + 4*Q = {self.P * self.P + 4 * self.Q} "
                f"must be positive (P={self.P}, Q={self.Q} is rejected)"
            )

    @property
    def discriminant(self) -> int:
        """P**2 + 4*Q, always positive for valid parameters."""
        return self.P * self.P + 4 * self.Q


@dataclass(frozen=True)
class IndexedPair:
    """One index n with its exact values U_n and V_n.

    Satisfies v**2 - (P**2 + 4*Q) * u**2 = 4 * (-Q)**n for the parameters
    it was produced under (the producer knows P and Q; the pair itself
    stores only the values).
    """

    n: int
    u: int
    v: int


@dataclass(frozen=True)
class ModularPair:
    """Residues of U_n and V_n modulo a fixed modulus >= 2."""

    n: int
    modulus: int
    u_res: int
    v_res: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not (0 <= self.u_res < self.modulus and 0 <= self.v_res < self.modulus):
            raise ValueError("residues must lie in [0, modulus)")


def _check_index(n: int) -> None:
    if not isinstance(n, int):
        raise ValueError("index must be an integer")
    if abs(n) >= INDEX_LIMIT:
        raise ValueError(f"index magnitude must be below 2**63, got {n}")


def _u_pair(P: int, Q: int, n: int) -> tuple[int, int]:
    """Return (U_n, U_{n+1}) for n >= 0 by division-free doubling.

    Walks the bits of n most significant first, maintaining (a, b) =
    (U_k, U_{k+1}) and using U_{2k} = U_k * (2*U_{k+1} - P*U_k) and
    U_{2k+1} = U_{k+1}**2 + Q*U_k**2.
    """
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - P * a)
        d = b * b + Q * a * a
        if bit == "1":
            a, b = d, P * d + Q * c
        else:
            a, b = c, d
    return a, b


def _u_pair_mod(P: int, Q: int, n: int, modulus: int) -> tuple[int, int]:
    """Return (U_n mod modulus, U_{n+1} mod modulus) for n >= 0."""
    a, b = 0, 1 % modulus
    P %= modulus
    Q %= modulus
    for bit in bin(n)[2:]:
        c = a * (2 * b - P * a) % modulus
        d = (b * b + Q * a * a) % modulus
        if bit == "1":
            a, b = d, (P * d + Q * c) % modulus
        else:
            a, b = c, d
    return a, b


def pair_at(params: SequenceParams, n: int) -> IndexedPair:
    """Exact (U_n, V_n) at any integer index in O(log |n|) operations."""
    _check_index(n)
    k = abs(n)
    a, b = _u_pair(params.P, params.Q, k)
    uk = a
    vk = 2 * b - params.P * a
    if n < 0:
        if params.Q == 1:
            if k % 2 == 0:
                uk = -uk
            else:
                vk = -vk
        else:
            uk = -uk
    return IndexedPair(n, uk, vk)


def u(params: SequenceParams, n: int) -> int:
    """Exact U_n at any integer index."""
    return pair_at(params, n).u


def v(params: SequenceParams, n: int) -> int:
    """Exact V_n at any integer index."""
    return pair_at(params, n).v


def _check_modular_args(n: int, modulus: int) -> None:
    _check_index(n)
    if n < 0:
        raise ValueError(f"modular evaluation requires n >= 0, got {n}")
    if not isinstance(modulus, int) or modulus < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {modulus}")


def u_mod(params: SequenceParams, n: int, modulus: int) -> int:
    """U_n mod modulus for n >= 0, computed entirely in modular arithmetic."""
    _check_modular_args(n, modulus)
    return _u_pair_mod(params.P, params.Q, n, modulus)[0]


def v_mod(params: SequenceParams, n: int, modulus: int) -> int:
    """V_n mod modulus for n >= 0, computed entirely in modular arithmetic."""
    _check_modular_args(n, modulus)
    a, b = _u_pair_mod(params.P, params.Q, n, modulus)
    return (2 * b - params.P * a) % modulus


def pair_mod(params: SequenceParams, n: int, modulus: int) -> ModularPair:
    """Both residues (U_n, V_n) mod modulus in one doubling pass, n >= 0."""
    _check_modular_args(n, modulus)
    a, b = _u_pair_mod(params.P, params.Q, n, modulus)
    return ModularPair(n, modulus, a, (2 * b - params.P * a) % modulus)


def seq_range(params: SequenceParams, n_lo: int, n_hi: int) -> Iterator[IndexedPair]:
    """Yield IndexedPair for every index from n_lo through n_hi inclusive.

    Values are produced by the plain three-term recurrence, which makes this
    the natural oracle against the doubling path and the cheapest way to
    tabulate a contiguous block of the sequence.
    """
    _check_index(n_lo)
    _check_index(n_hi)
    if n_lo > n_hi:
        raise ValueError(f"empty range: n_lo={n_lo} > n_hi={n_hi}")
    P, Q = params.P, params.Q
    ua = u(params, n_lo)
    ub = u(params, n_lo + 1)
    for n in range(n_lo, n_hi + 1):
        yield IndexedPair(n, ua, 2 * ub - P * ua)
        ua, ub = ub, P * ub + Q * ua
