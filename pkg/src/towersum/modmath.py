"""Exact modular arithmetic for odd moduli up to 2**127 - 1.

Python integers are arbitrary precision, so products of two reduced
operands never overflow; the width cap is kept as an explicit contract so
that every modulus handled by the package stays within 128 bits.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

MODULUS_CAP = (1 << 127) - 1
ORDER_CAP = 1 << 63


class InvalidModulusError(ValueError):
    """Modulus below 2."""


class WidthError(ValueError):
    """Operand or modulus beyond the supported width."""


class NoSolutionError(ArithmeticError):
    """A congruence or system of congruences has no solution."""


class NotCoprimeError(ValueError):
    pass


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidModulusError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} is not reduced mod {self.modulus}")

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


@dataclass(frozen=True)
class CongruenceClass:
    """The progression ``offset + i*modulus`` for ``i >= 0``."""

    offset: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidModulusError(f"modulus must be >= 1, got {self.modulus}")
        if not 0 <= self.offset < self.modulus:
            raise ValueError(f"{self.offset} is not reduced mod {self.modulus}")

    def __contains__(self, x: int) -> bool:
        return x % self.modulus == self.offset

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("progression index must be nonnegative")
        return self.offset + i * self.modulus

    def __str__(self) -> str:
        return f"{self.offset} (mod {self.modulus})"


def _check_modulus(modulus: int) -> None:
    if modulus < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {modulus}")
    if modulus > MODULUS_CAP:
        raise WidthError(f"modulus exceeds 2**127 - 1: {modulus}")


def mul_mod(x: int, y: int, modulus: int) -> Residue:
    _check_modulus(modulus)
    return Residue((x * y) % modulus, modulus)


def pow_mod(base: int, exponent: int, modulus: int) -> Residue:
    """Return ``base**exponent mod modulus``; ``pow_mod(b, 0, m)`` is ``1 mod m``."""
    _check_modulus(modulus)
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    # builtin three-argument pow is left-to-right square-and-multiply
    return Residue(pow(base, exponent, modulus), modulus)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    if a == 0 and b == 0:
        raise ValueError("egcd(0, 0) is undefined")
    x0, x1, y0, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


def solve_linear_congruence(coeff: int, target: int, modulus: int) -> CongruenceClass:
    """Solve ``coeff * x == target (mod modulus)``.

    Returns the full solution class ``x0 (mod modulus // g)`` with
    ``g = gcd(coeff, modulus)`` and ``x0`` the least nonnegative solution.
    Raises :class:`NoSolutionError` when ``g`` does not divide ``target``.
    """
    _check_modulus(modulus)
    coeff %= modulus
    target %= modulus
    g, x, _ = egcd(coeff, modulus)
    if target % g:
        raise NoSolutionError(
            f"{coeff}*x = {target} (mod {modulus}) has no solution: gcd {g} does not divide {target}"
        )
    reduced = modulus // g
    return CongruenceClass((x * (target // g)) % reduced, reduced)


def _merge(c1: CongruenceClass, c2: CongruenceClass) -> CongruenceClass:
    g, p, _ = egcd(c1.modulus, c2.modulus)
    diff = c2.offset - c1.offset
    if diff % g:
        raise NoSolutionError(f"inconsistent classes {c1} and {c2}")
    lcm = c1.modulus // g * c2.modulus
    step = (diff // g * p) % (c2.modulus // g)
    return CongruenceClass((c1.offset + c1.modulus * step) % lcm, lcm)


def crt(classes: Iterable[CongruenceClass]) -> CongruenceClass:
    """Combine congruence classes into one class modulo the lcm of their moduli.

    Moduli need not be coprime; inconsistent offsets raise
    :class:`NoSolutionError`.
    """
    combined = reduce(_merge, classes, CongruenceClass(0, 1))
    if combined.modulus > MODULUS_CAP:
        raise WidthError(f"combined modulus exceeds 2**127 - 1: {combined.modulus}")
    return combined


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of ``n >= 1``."""
    if n < 1:
        raise ValueError("can only factor positive integers")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    # candidates 6k +- 1
    p, step = 5, 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def carmichael_lambda(factors: dict[int, int]) -> int:
    """Carmichael's function from a factorization."""
    lam = 1
    for p, e in factors.items():
        if p == 2:
            part = 1 if e == 1 else 2 if e == 2 else 1 << (e - 2)
        else:
            part = (p - 1) * p ** (e - 1)
        lam = lam * part // egcd(lam, part)[0]
    return lam


def multiplicative_order(base: int, modulus: int) -> int:
    """Least positive ``s`` with ``base**s == 1 (mod modulus)``.

    The modulus is factored by trial division, so it is restricted to
    ``modulus <= 2**63``.
    """
    _check_modulus(modulus)
    if modulus > ORDER_CAP:
        raise WidthError("generic order computation is limited to moduli <= 2**63")
    if egcd(base, modulus)[0] != 1:
        raise NotCoprimeError(f"gcd({base}, {modulus}) > 1")
    order = carmichael_lambda(factorize(modulus))
    for p in factorize(order):
        while order % p == 0 and pow(base, order // p, modulus) == 1:
            order //= p
    return order
