import math

import pytest
from hypothesis import given, settings, strategies as st

from towersum.modmath import (
    MODULUS_CAP,
    CongruenceClass,
    InvalidModulusError,
    NoSolutionError,
    NotCoprimeError,
    Residue,
    WidthError,
    crt,
    egcd,
    factorize,
    mul_mod,
    multiplicative_order,
    pow_mod,
    solve_linear_congruence,
)

moduli = st.integers(2, MODULUS_CAP)


def brute_order(base, N):
    x, k = base % N, 1
    while x != 1:
        x = x * base % N
        k += 1
    return k


def test_residue_invariant():
    assert Residue(0, 2).value == 0
    with pytest.raises(ValueError):
        Residue(5, 5)
    with pytest.raises(InvalidModulusError):
        Residue(0, 1)


def test_congruence_class():
    c = CongruenceClass(94, 124)
    assert c[0] == 94 and c[2] == 342
    assert 218 in c and 219 not in c
    with pytest.raises(ValueError):
        CongruenceClass(124, 124)


def test_mul_mod_examples():
    assert mul_mod(3, 4, 5) == Residue(2, 5)
    assert mul_mod(2**64, 2**64, 2**127 - 1).value == 2
    with pytest.raises(InvalidModulusError):
        mul_mod(1, 1, 1)
    with pytest.raises(WidthError):
        mul_mod(1, 1, 2**127)


@given(st.data())
def test_mul_mod_matches_exact_product(data):
    m = data.draw(moduli)
    x = data.draw(st.integers(0, m - 1))
    y = data.draw(st.integers(0, m - 1))
    assert mul_mod(x, y, m).value == (x * y) % m
    assert mul_mod(x, 1, m).value == x


def test_pow_mod_examples():
    assert pow_mod(2, 0, 7).value == 1
    assert pow_mod(2, 5, 31).value == 1
    assert pow_mod(2, 21, 889).value == 1


@given(st.integers(0, 50), st.integers(0, 60), st.integers(0, 60), st.integers(2, 10**6))
def test_pow_mod_exponent_addition(b, e1, e2, m):
    lhs = pow_mod(b, e1 + e2, m)
    rhs = mul_mod(pow_mod(b, e1, m).value, pow_mod(b, e2, m).value, m)
    assert lhs == rhs


@given(st.integers(0, 30), st.integers(0, 40), st.integers(2, 1000))
def test_pow_mod_against_repeated_multiplication(b, e, m):
    acc = 1 % m
    for _ in range(e):
        acc = acc * b % m
    assert pow_mod(b, e, m).value == acc


def test_egcd_examples():
    g, x, y = egcd(44, 127)
    assert (g, x, y) == (1, 26, -9)
    assert 26 * 44 - 9 * 127 == 1
    assert egcd(278, 217)[0] == 1
    assert egcd(0, 5)[0] == 5
    with pytest.raises(ValueError):
        egcd(0, 0)


@given(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30))
def test_egcd_bezout(a, b):
    if a == 0 and b == 0:
        return
    g, x, y = egcd(a, b)
    assert g == math.gcd(a, b) >= 1
    assert a * x + b * y == g


def test_linear_congruence_examples():
    assert solve_linear_congruence(30, 8, 31) == CongruenceClass(23, 31)
    assert solve_linear_congruence(22, 104, 127) == CongruenceClass(74, 127)
    assert solve_linear_congruence(4, 0, 7) == CongruenceClass(0, 7)
    assert solve_linear_congruence(6, 4, 10) == CongruenceClass(4, 5)
    with pytest.raises(NoSolutionError):
        solve_linear_congruence(6, 4, 9)


@settings(max_examples=300)
@given(st.data())
def test_linear_congruence_brute_force(data):
    m = data.draw(st.integers(2, 400))
    c = data.draw(st.integers(0, m - 1))
    t = data.draw(st.integers(0, m - 1))
    sols = [x for x in range(m) if (c * x - t) % m == 0]
    if not sols:
        with pytest.raises(NoSolutionError):
            solve_linear_congruence(c, t, m)
        return
    cls = solve_linear_congruence(c, t, m)
    assert cls.offset == sols[0]
    assert (c * cls.offset - t) % m == 0
    assert sols == [x for x in range(m) if x in cls]


def test_linear_congruence_exhaustive_prime_modulus():
    m = 9973
    for c, t in [(1, 5), (17, 9972), (9972, 1), (123, 0)]:
        x0 = solve_linear_congruence(c, t, m).offset
        assert x0 == next(x for x in range(m) if (c * x - t) % m == 0)


def test_crt_examples():
    combined = crt([CongruenceClass(5, 7), CongruenceClass(60, 127)])
    # 1076 solves both congruences but is not reduced: 1076 = 187 + 889
    assert combined == CongruenceClass(187, 889)
    assert 1076 in combined
    assert crt([CongruenceClass(3, 7), CongruenceClass(0, 31)]) == CongruenceClass(31, 217)
    assert crt([CongruenceClass(0, 1), CongruenceClass(4, 9)]) == CongruenceClass(4, 9)
    assert crt([CongruenceClass(1, 4), CongruenceClass(3, 6)]) == CongruenceClass(9, 12)
    with pytest.raises(NoSolutionError):
        crt([CongruenceClass(1, 4), CongruenceClass(2, 6)])


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(1, 40), st.integers(0, 10**6)), min_size=1, max_size=3))
def test_crt_brute_force(pairs):
    classes = [CongruenceClass(o % m, m) for m, o in pairs]
    lcm = math.lcm(*(c.modulus for c in classes))
    sols = [x for x in range(lcm) if all(x in c for c in classes)]
    if not sols:
        with pytest.raises(NoSolutionError):
            crt(classes)
        return
    out = crt(classes)
    assert out == CongruenceClass(sols[0], lcm)
    for c in classes:
        assert out.offset % c.modulus == c.offset


def test_factorize():
    assert factorize(1) == {}
    assert factorize(2**31 - 2) == {2: 1, 3: 2, 7: 1, 11: 1, 31: 1, 151: 1, 331: 1}
    assert factorize(889) == {7: 1, 127: 1}


def test_multiplicative_order_examples():
    assert multiplicative_order(2, 31) == 5
    assert multiplicative_order(2, 127) == 7
    assert multiplicative_order(2, 217) == 15
    assert multiplicative_order(2, 2**31 - 1) == 31
    with pytest.raises(NotCoprimeError):
        multiplicative_order(3, 21)
    with pytest.raises(WidthError):
        multiplicative_order(2, 2**127 - 1)


def test_multiplicative_order_exhaustive():
    for N in range(3, 10**4, 2):
        s = multiplicative_order(2, N)
        assert pow(2, s, N) == 1
        for p in factorize(s):
            assert pow(2, s // p, N) != 1
    for N in range(3, 2000, 2):
        assert multiplicative_order(2, N) == brute_order(2, N)
