"""Residues of 2**(2**j) and two independent oracles for I(n, m) mod N.

``I(n, m) = 1 + 2**(2**n) + 2**(2**(n+1)) + ... + 2**(2**(n+m))`` has
``m + 2`` summands.  :func:`i_sum_mod` reduces every tower exponent modulo
``s = ord_N(2)``; :func:`i_sum_exact_mod` builds the literal integer and
knows nothing about ``s``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .modmath import Residue, multiplicative_order, pow_mod

DEFAULT_BUDGET = 10**7
EXACT_CAP = 16


class BudgetError(RuntimeError):
    """Term-wise summation would exceed the term budget."""


@dataclass(frozen=True)
class TowerContext:
    N: int
    s: int

    def __post_init__(self):
        if self.N < 3 or self.N % 2 == 0:
            raise ValueError(f"N must be odd and >= 3, got {self.N}")
        if self.s < 1 or pow(2, self.s, self.N) != 1:
            raise ValueError(f"2**{self.s} is not 1 mod {self.N}")

    @classmethod
    def for_modulus(cls, N: int) -> TowerContext:
        return cls(N, multiplicative_order(2, N))


@dataclass(frozen=True)
class SumSpec:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"tower start n must be >= 1, got {self.n}")
        if self.m < 0:
            raise ValueError(f"m must be nonnegative, got {self.m}")

    @property
    def summands(self) -> int:
        return self.m + 2


def tower_residue(j: int, ctx: TowerContext) -> Residue:
    """``2**(2**j) mod N``, with the exponent ``2**j`` reduced mod ``s``."""
    return pow_mod(2, pow(2, j, ctx.s), ctx.N)


def _check_budget(spec: SumSpec, budget: int) -> None:
    if spec.summands > budget:
        raise BudgetError(
            f"I({spec.n}, {spec.m}) has {spec.summands} summands, budget is {budget}"
        )


def i_sum_mod(spec: SumSpec, ctx: TowerContext, budget: int = DEFAULT_BUDGET) -> Residue:
    """Term-wise ``I(n, m) mod N``.

    The exponent ``2**(n+j) mod s`` is advanced by one modular doubling per
    term.  Powers of 2 for exponents already seen are memoised, since the
    exponent sequence takes at most ``s`` distinct values.
    """
    _check_budget(spec, budget)
    N, s = ctx.N, ctx.s
    cache: dict[int, int] = {}
    e = pow(2, spec.n, s)
    acc = 1
    for _ in range(spec.m + 1):
        term = cache.get(e)
        if term is None:
            term = cache[e] = pow_mod(2, e, N).value
        acc += term
        e = (e << 1) % s
    return Residue(acc % N, N)


def i_sum_exact_mod(spec: SumSpec, N: int) -> Residue:
    """Build ``I(n, m)`` as an exact integer, then reduce mod ``N``.

    Limited to ``n + m <= 16`` so the top summand has at most 65536 bits.
    """
    if spec.n + spec.m > EXACT_CAP:
        raise ValueError(f"n + m must be <= {EXACT_CAP}, got {spec.n + spec.m}")
    if N < 2:
        raise ValueError(f"modulus must be >= 2, got {N}")
    term = 2
    for _ in range(spec.n):
        term *= term
    total = 1 + term
    for _ in range(spec.m):
        term *= term
        total += term
    return Residue(total % N, N)


def block_sum_check(kl: int, kb: int, t: int, N: int) -> Residue:
    """Predicted residue of ``I(n, l + t*a)``: ``(kl + t*kb) mod N``.

    ``t`` may be huge; it is reduced mod ``N`` first.
    """
    return Residue((int(kl) + (t % N) * int(kb)) % N, N)
