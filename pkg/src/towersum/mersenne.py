"""Double Mersenne chains ``q -> p = 2**q - 1 -> N = 2**p - 1``.

When both ``p`` and ``N`` are prime the witness parameters are known in
closed form: ``s = p``, ``a = q``, ``l = q - 1`` and ``b = 1``, so no
generic order computation modulo ``N`` is needed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .modmath import NoSolutionError, Residue, factorize, solve_linear_congruence
from .tower import DEFAULT_BUDGET
from .theorem1 import (
    Inapplicability,
    OrderChain,
    Reason,
    VerificationReport,
    Witness,
    verify_witness,
)

Q_CAP = 7
LUCAS_LEHMER_CAP = 521


class UnsupportedWidthError(ValueError):
    pass


def is_prime_small(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def lucas_lehmer(p: int) -> bool:
    """Decide primality of ``2**p - 1`` for an odd prime ``p <= 521``."""
    if p < 3 or p > LUCAS_LEHMER_CAP:
        raise ValueError(f"p must lie in [3, {LUCAS_LEHMER_CAP}], got {p}")
    if not is_prime_small(p):
        raise ValueError(f"Lucas-Lehmer needs a prime exponent, {p} is composite")
    M = (1 << p) - 1
    x = 4
    for _ in range(p - 2):
        x = x * x - 2
        # fold: 2**p == 1 (mod M)
        x = (x & M) + (x >> p)
        if x >= M:
            x -= M
    return x == 0


@dataclass(frozen=True)
class MersenneChain:
    q: int
    p: int
    N: int
    p_prime: bool
    N_prime: bool

    @property
    def admissible(self) -> bool:
        return self.p_prime and self.N_prime


def mersenne_chain(q: int) -> MersenneChain:
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if q > Q_CAP:
        raise UnsupportedWidthError(f"q = {q} puts N = 2**(2**q - 1) - 1 beyond 128 bits")
    p = (1 << q) - 1
    N = (1 << p) - 1
    p_prime = is_prime_small(p)
    # composite p forces composite N
    N_prime = p_prime and lucas_lehmer(p)
    return MersenneChain(q, p, N, p_prime, N_prime)


@dataclass(frozen=True)
class Theorem2Witness:
    chain: MersenneChain
    kl: int
    kb: int
    r: int

    @property
    def q(self) -> int:
        return self.chain.q

    @property
    def N(self) -> int:
        return self.chain.N

    @property
    def s(self) -> int:
        return self.chain.p

    @property
    def a(self) -> int:
        return self.chain.q

    @property
    def l(self) -> int:
        return self.chain.q - 1

    @property
    def b(self) -> int:
        return 1

    @property
    def m0(self) -> int:
        return self.q - 1 + self.r * self.q

    @property
    def period(self) -> int:
        return self.q * self.N

    def m(self, i: int) -> int:
        return self.m0 + i * self.period

    def to_witness(self) -> Witness:
        """The equivalent generic witness, with the closed-form order chain."""
        N = self.N
        return Witness(
            chain=OrderChain(N, self.s, self.a),
            l=self.l,
            b=self.b,
            kl_res=Residue(self.kl % N, N),
            kb_res=Residue(self.kb % N, N),
            d=1,
            r=self.r,
        )


def theorem2_witness(q: int) -> Theorem2Witness | Inapplicability:
    chain = mersenne_chain(q)
    if not chain.p_prime:
        return Inapplicability(chain.N, Reason.P_COMPOSITE, f"p = {chain.p} is composite")
    if not chain.N_prime:
        return Inapplicability(chain.N, Reason.N_COMPOSITE, f"N = 2**{chain.p} - 1 is composite")
    N = chain.N
    kb = sum(1 << (1 << j) for j in range(q))
    kl = 1 + kb
    if kb % N == 0:
        return Inapplicability(N, Reason.D_NOT_DIVIDING_KL, "N divides kb")
    try:
        r = solve_linear_congruence(kb % N, -kl % N, N).offset
    except NoSolutionError:  # pragma: no cover - N prime and kb != 0 always solvable
        return Inapplicability(N, Reason.D_NOT_DIVIDING_KL, "no r solves kl + r*kb == 0")
    return Theorem2Witness(chain, kl, kb, r)


def theorem2_verify(
    w: Theorem2Witness, k_max: int, i_max: int, budget: int = DEFAULT_BUDGET
) -> VerificationReport:
    """Check ``N | I(k*q, m0 + i*q*N)`` for ``k = 1..k_max``, ``i = 0..i_max``."""
    return verify_witness(w.to_witness(), k_max, i_max, budget)
