"""Witness construction and verification for N | I(n, m).

For odd ``N`` let ``s = ord_N(2)`` and, when ``s`` is odd, ``a = ord_s(2)``.
Every ``n`` that is a positive multiple of ``a`` satisfies
``2**(2**n) == 2 (mod N)``, so the tower terms of ``I(n, m)`` repeat the
terms of ``I(0, m)``.  After the head block ``j = 0..l`` (``l`` the largest
integer with ``2**l < s``) the exponents ``2**j mod s`` cycle with period
``a``, each full cycle contributing ``kb``; hence

    I(n, l + t*a) == kl + t*kb (mod N).

Solving ``kl + r*kb == 0 (mod N)`` gives the family
``m = l + r*a + i*N*a``.
"""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from .modmath import NoSolutionError, Residue, multiplicative_order, solve_linear_congruence
from .tower import (
    DEFAULT_BUDGET,
    SumSpec,
    TowerContext,
    block_sum_check,
    i_sum_mod,
)

SCAN_CAP = 10**6
TERM_WISE = "term-wise"
BLOCK = "block"


class Reason(str, enum.Enum):
    S_EVEN = "s_even"
    S_IS_ONE = "s_is_one"
    D_NOT_DIVIDING_KL = "d_not_dividing_kl"
    # Mersenne chain failures
    P_COMPOSITE = "p_composite"
    N_COMPOSITE = "N_composite"


@dataclass(frozen=True)
class OrderChain:
    N: int
    s: int
    a: int | None = None

    @property
    def s_odd(self) -> bool:
        return self.s % 2 == 1

    def valid_n(self, count: int) -> list[int]:
        """The first ``count`` tower starts ``n`` with ``2**n == 1 (mod s)``."""
        if self.a is None:
            return []
        return [self.a * k for k in range(1, count + 1)]


@dataclass(frozen=True)
class Inapplicability:
    N: int
    reason: Reason
    detail: str = ""

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Witness:
    chain: OrderChain
    l: int
    b: int
    kl_res: Residue
    kb_res: Residue
    d: int
    r: int

    @property
    def N(self) -> int:
        return self.chain.N

    @property
    def s(self) -> int:
        return self.chain.s

    @property
    def a(self) -> int:
        return self.chain.a

    @property
    def m0(self) -> int:
        return self.l + self.r * self.a

    @property
    def period(self) -> int:
        return self.N * self.a

    def m(self, i: int) -> int:
        return m_family(self, i)


@dataclass(frozen=True)
class CheckRecord:
    n: int
    m: int
    residue: Residue
    method: str

    @property
    def passed(self) -> bool:
        return self.residue.value == 0


@dataclass
class VerificationReport:
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]


def derive_order_chain(N: int, s: int | None = None) -> OrderChain:
    """Compute ``s = ord_N(2)`` and, for odd ``s > 1``, ``a = ord_s(2)``.

    ``s`` must be supplied for moduli beyond the trial-division range.
    """
    if N < 3 or N % 2 == 0:
        raise ValueError(f"N must be odd and >= 3, got {N}")
    if s is None:
        s = multiplicative_order(2, N)
    elif s < 1 or pow(2, s, N) != 1:
        raise ValueError(f"supplied s = {s} does not satisfy 2**s == 1 (mod {N})")
    a = multiplicative_order(2, s) if s % 2 == 1 and s > 1 else None
    return OrderChain(N, s, a)


def _head_and_block(chain: OrderChain) -> tuple[int, int, int, int]:
    N, s, a = chain.N, chain.s, chain.a
    l = (s - 1).bit_length() - 1
    b = pow(2, l + 1, s)
    kl = 1
    for j in range(l + 1):
        kl += pow(2, pow(2, j, s), N)
    kb = 0
    e = b
    for _ in range(a):
        kb += pow(2, e, N)
        e = (e << 1) % s
    return l, b, kl % N, kb % N


def build_witness(N: int, s: int | None = None) -> Witness | Inapplicability:
    chain = derive_order_chain(N, s)
    if not chain.s_odd:
        return Inapplicability(N, Reason.S_EVEN, f"ord_{N}(2) = {chain.s} is even")
    if chain.s == 1:
        return Inapplicability(N, Reason.S_IS_ONE, f"ord_{N}(2) = 1")
    l, b, kl, kb = _head_and_block(chain)
    d = gcd(kb, N)
    try:
        # least nonnegative r; r = 0 is kept when kl == 0 (mod N)
        r = solve_linear_congruence(kb, -kl, N).offset
    except NoSolutionError:
        return Inapplicability(
            N, Reason.D_NOT_DIVIDING_KL, f"d = gcd(kb, N) = {d} does not divide kl = {kl} (mod {N})"
        )
    return Witness(chain, l, b, Residue(kl, N), Residue(kb, N), d, r)


def m_family(w: Witness, i: int) -> int:
    if i < 0:
        raise ValueError("family index must be nonnegative")
    return w.m0 + i * w.period


def verify_witness(
    w: Witness, n_multiples: int, i_max: int, budget: int = DEFAULT_BUDGET
) -> VerificationReport:
    """Check ``I(n, m) == 0 (mod N)`` over ``n = a..n_multiples*a`` and ``i = 0..i_max``.

    Term-wise summation is used while ``m + 2`` fits in ``budget``; larger
    ``m`` fall back to the block residue with ``t = r + i*N``.  Failures
    are recorded, never raised.
    """
    ctx = TowerContext(w.N, w.s)
    report = VerificationReport()
    for n in w.chain.valid_n(n_multiples):
        for i in range(i_max + 1):
            m = m_family(w, i)
            if m + 2 <= budget:
                residue = i_sum_mod(SumSpec(n, m), ctx, budget)
                method = TERM_WISE
            else:
                residue = block_sum_check(w.kl_res, w.kb_res, w.r + i * w.N, w.N)
                method = BLOCK
            report.checks.append(CheckRecord(n, m, residue, method))
    return report


def _scan_one(N: int, budget: int) -> tuple[int, Witness | Inapplicability]:
    result = build_witness(N)
    if isinstance(result, Witness):
        report = verify_witness(result, 2, 1, budget)
        if not report.passed:
            raise RuntimeError(f"witness for N = {N} failed verification: {report.failures}")
    return N, result


def scan(
    start: int, stop: int, workers: int | None = None, budget: int = DEFAULT_BUDGET
) -> list[tuple[int, Witness | Inapplicability]]:
    """Witness or inapplicability for every odd ``N`` in ``[start, stop]``.

    Every emitted witness has passed ``verify_witness(w, 2, 1)``.  With
    ``workers > 1`` the moduli are processed in a process pool; output is
    always in ascending ``N``.
    """
    if not 3 <= start <= stop <= SCAN_CAP:
        raise ValueError(f"scan range must satisfy 3 <= from <= to <= {SCAN_CAP}")
    moduli = range(start | 1, stop + 1, 2)
    if workers and workers > 1 and len(moduli) > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_scan_one, moduli, [budget] * len(moduli), chunksize=8))
    return [_scan_one(N, budget) for N in moduli]
