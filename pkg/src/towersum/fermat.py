"""Sums of Fermat numbers ``F_k = 2**(2**k) + 1`` modulo N.

Since ``F_n + ... + F_{n+m} = I(n, m) + m``, every ``m`` with
``N | I(n, m)`` gives ``F_n + ... + F_{n+m} == m (mod N)``.  The sums here
are accumulated term by term so that this identity can be tested rather
than assumed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .modmath import Residue
from .mersenne import Theorem2Witness
from .tower import DEFAULT_BUDGET, BudgetError, TowerContext, block_sum_check, tower_residue


@dataclass(frozen=True)
class FermatSumSpec:
    n: int
    m: int
    N: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.m < 0:
            raise ValueError(f"m must be nonnegative, got {self.m}")
        if self.N < 3 or self.N % 2 == 0:
            raise ValueError(f"N must be odd and >= 3, got {self.N}")


def fermat_number_mod(k: int, ctx: TowerContext) -> Residue:
    return Residue((tower_residue(k, ctx).value + 1) % ctx.N, ctx.N)


def fermat_sum_mod(
    spec: FermatSumSpec, ctx: TowerContext | None = None, budget: int = DEFAULT_BUDGET
) -> Residue:
    """``(F_n + F_{n+1} + ... + F_{n+m}) mod N``, one term at a time."""
    if spec.m + 1 > budget:
        raise BudgetError(f"{spec.m + 1} Fermat terms exceed budget {budget}")
    if ctx is None:
        ctx = TowerContext.for_modulus(spec.N)
    elif ctx.N != spec.N:
        raise ValueError("context modulus does not match the sum's modulus")
    N = ctx.N
    acc = 0
    for k in range(spec.n, spec.n + spec.m + 1):
        acc = (acc + fermat_number_mod(k, ctx).value) % N
    return Residue(acc, N)


def verify_corollary3(
    w: Theorem2Witness, k: int, i: int, budget: int = DEFAULT_BUDGET
) -> bool:
    """True iff ``F_{kq} + ... + F_{kq+m} == q - 1 + r*q (mod N)`` for ``m = m0 + i*q*N``.

    Sums over more than ``budget`` terms use the block residue of
    ``I(kq, m)`` plus ``m`` instead of term-wise accumulation.
    """
    if k < 1 or i < 0:
        raise ValueError("need k >= 1 and i >= 0")
    N = w.N
    m = w.m(i)
    expected = (w.q - 1 + w.r * w.q) % N
    if m + 1 <= budget:
        ctx = TowerContext(N, w.s)
        got = fermat_sum_mod(FermatSumSpec(k * w.q, m, N), ctx, budget).value
    else:
        block = block_sum_check(w.kl % N, w.kb % N, w.r + i * N, N).value
        got = (block + m) % N
    return got == expected
