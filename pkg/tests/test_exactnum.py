import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from unrx import exactnum as en


# --------------------------------------------------------------- is_prime

@pytest.mark.parametrize("n,expected", [(2683, True), (1, False), (286855, False), (0, False), (2, True)])
def test_is_prime_examples(n, expected):
    assert en.is_prime(n) is expected


def test_is_prime_matches_sieve_below_20000():
    for n in range(20000):
        assert en.is_prime(n) == sympy.isprime(n), n


@pytest.mark.parametrize("n", [
    3215031751,            # strong pseudoprime to bases 2, 3, 5, 7
    3825123056546413051,   # strong pseudoprime to the first nine prime bases
    2**61 - 1, 2**89 - 1, 2**127 - 1,
    (2**61 - 1) * (2**67 - 1),
    170141183460469231731687303715884105727 * 3,
])
def test_is_prime_hard_cases(n):
    assert en.is_prime(n) == sympy.isprime(n)


@given(st.integers(min_value=2, max_value=2**128))
@settings(max_examples=300, deadline=None)
def test_is_prime_vs_sympy(n):
    assert en.is_prime(n) == sympy.isprime(n)


# -------------------------------------------------------------- factorize

def test_factorize_examples():
    assert list(en.factorize(17 * 23 * 43 * 101)) == [(17, 1), (23, 1), (43, 1), (101, 1)]
    f = en.factorize(-12)
    assert f.sign == -1 and list(f) == [(2, 2), (3, 1)]
    assert list(en.factorize(23328)) == [(2, 5), (3, 6)]


def test_factorize_zero_rejected():
    with pytest.raises(ValueError):
        en.factorize(0)


def test_factorize_semiprime_beyond_trial_division():
    p, q = 1_000_003, 998_244_353
    assert list(en.factorize(p * q)) == [(p, 1), (q, 1)]
    big = (2**61 - 1) * 1_000_000_007
    assert list(en.factorize(big)) == [(1_000_000_007, 1), (2**61 - 1, 1)]


def test_factorize_budget_exceeded():
    n = (2**61 - 1) * (2**67 - 1)  # no small factor, rho needs far more than 10 steps
    with pytest.raises(en.FactorizationBudgetExceeded):
        en.factorize(n, rho_budget=10)


@given(st.integers(min_value=-10**12, max_value=10**12).filter(lambda n: n != 0))
@settings(max_examples=400, deadline=None)
def test_factorize_reconstructs(n):
    fac = en.factorize(n)
    assert fac.value() == n
    primes = fac.primes()
    assert primes == sorted(set(primes))
    assert all(en.is_prime(p) for p in primes)
    assert dict(fac) == sympy.factorint(abs(n)) or abs(n) == 1


# -------------------------------------------------------- squarefree part

def test_squarefree_examples():
    assert en.squarefree_part(18) == 2
    assert en.squarefree_part(-75) == -3
    assert en.squarefree_part(1) == 1


@given(st.integers(min_value=-10**10, max_value=10**10).filter(lambda n: n != 0))
@settings(max_examples=300, deadline=None)
def test_squarefree_part_times_square(n):
    s = en.squarefree_part(n)
    assert n % s == 0
    r = n // s
    assert r > 0 and math.isqrt(r) ** 2 == r
    assert all(e == 1 for _, e in en.factorize(s))


def test_squarefree_rational():
    assert en.squarefree_part_rational(Fraction(8, 27)) == 6
    assert en.squarefree_part_rational(Fraction(-1, 4)) == -1


# ----------------------------------------------------------------- jacobi

def test_jacobi_examples():
    assert en.jacobi(286855, 17) == -1
    assert en.jacobi(3, 7) == -1
    for m in (1, 3, 5, 99, 10001):
        assert en.jacobi(1, m) == 1
    assert en.jacobi(0, 1) == 1
    assert en.jacobi(0, 9) == 0
    assert en.jacobi(-1, 7) == -1 and en.jacobi(-1, 5) == 1


def test_jacobi_rejects_even_modulus():
    with pytest.raises(ValueError):
        en.jacobi(3, 8)


def test_jacobi_brute_force_small_primes():
    for p in list(sympy.primerange(3, 600)):
        squares = {x * x % p for x in range(1, p)}
        for a in range(p):
            expected = 0 if a == 0 else (1 if a in squares else -1)
            assert en.jacobi(a, p) == expected


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9), st.integers(0, 5 * 10**5))
@settings(max_examples=400, deadline=None)
def test_jacobi_multiplicative(a, b, k):
    m = 2 * k + 1
    assert en.jacobi(a, m) * en.jacobi(b, m) == en.jacobi(a * b, m)
    assert en.jacobi(a, m) == sympy.jacobi_symbol(a % m, m)


@given(st.integers(1, 10**4), st.integers(0, 10**4))
@settings(max_examples=200, deadline=None)
def test_jacobi_periodic_mod_4delta(delta, k):
    # (delta / m) only depends on m mod 4*delta for odd positive m coprime to delta
    m = 2 * k + 1
    if math.gcd(m, delta) != 1:
        return
    m2 = m + 4 * delta * 7
    assert en.jacobi(delta, m) == en.jacobi(delta, m2)
    assert en.jacobi(-delta, m) == en.jacobi(-delta, m2)


# -------------------------------------------------------------------- crt

def test_crt_examples():
    assert en.crt([(1, 2), (2, 3)]) == (5, 6)
    assert en.crt([(385 % 32, 32), (385 % 729, 729)]) == (385, 23328)
    assert en.crt([(0, 5)]) == (0, 5)


def test_crt_non_coprime():
    with pytest.raises(en.NonCoprimeModuli):
        en.crt([(1, 4), (3, 6)])


@given(st.lists(st.integers(2, 200), min_size=1, max_size=5), st.randoms(use_true_random=False))
@settings(max_examples=200, deadline=None)
def test_crt_reduces(mods, rnd):
    chosen = []
    for m in mods:
        if all(math.gcd(m, c) == 1 for c in chosen):
            chosen.append(m)
    cong = [(rnd.randrange(-1000, 1000), m) for m in chosen]
    r, M = en.crt(cong)
    assert M == math.prod(chosen) and 0 <= r < M
    for a, m in cong:
        assert (r - a) % m == 0


# -------------------------------------------------------------- valuation

def test_valuation_examples():
    assert en.valuation(23328, 2) == 5
    assert en.valuation(7, 7) == 1
    assert en.valuation(54, 3) == 3
    assert en.valuation(Fraction(4, 27), 3) == -3


def test_prime_to_part():
    assert en.prime_to_part(286855 * 54, [2, 3]) == 286855
    assert en.prime_to_part(-48, [2]) == 3


def test_divisors_and_lcm():
    assert en.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert en.lcm(4, 6, 10) == 60
    rnd = random.Random(1)
    for _ in range(50):
        n = rnd.randrange(1, 10**6)
        assert en.divisors(n) == sympy.divisors(n)
