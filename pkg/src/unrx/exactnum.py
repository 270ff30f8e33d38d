"""Exact integer arithmetic and elementary number theory.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`;
both are arbitrary precision and immutable, so every function here is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

TRIAL_DIVISION_LIMIT = 10**6
DEFAULT_RHO_BUDGET = 10**8

# Deterministic Miller-Rabin witnesses; correct for n < 3.317e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


class FactorizationBudgetExceeded(ArithmeticError):
    """A composite cofactor survived the configured factoring effort."""

    def __init__(self, cofactor: int, steps: int):
        super().__init__(f"could not split composite {cofactor} within {steps} rho steps")
        self.cofactor = cofactor
        self.steps = steps


class NonCoprimeModuli(ValueError):
    pass


@dataclass(frozen=True)
class PrimeFactorization:
    """Signed factorization ``sign * prod(p**e)`` with primes increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __iter__(self):
        return iter(self.factors)


@lru_cache(maxsize=None)
def small_primes(limit: int = TRIAL_DIVISION_LIMIT) -> tuple[int, ...]:
    """All primes below ``limit`` (sieve of Eratosthenes)."""
    if limit < 3:
        return ()
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge method A parameters.
    D = 5
    while True:
        j = jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
        if D == 13 and math.isqrt(n) ** 2 == n:
            return False
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    inv2 = (n + 1) // 2
    U, V, Qk = 0, 2, 1
    for bit in bin(d)[2:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test: deterministic Miller-Rabin below 3.3e24, BPSW above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 43 * 43:
        return True
    if n < _MR_DETERMINISTIC_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def _brent_rho(n: int, c: int, budget: int) -> tuple[int | None, int]:
    """One run of Pollard-Brent with f(x) = x^2 + c. Returns (factor, steps used)."""
    y, r, q, g = 2, 1, 1, 1
    m = 128
    steps = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            steps += min(m, r - k)
            g = math.gcd(q, n)
            k += m
            if steps > budget:
                return None, steps
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return (g if g != n else None), steps


def _split_composite(n: int, budget: int) -> tuple[int, int]:
    spent = 0
    c = 1
    while spent <= budget:
        d, used = _brent_rho(n, c, budget - spent)
        spent += used
        if d is not None:
            return d, spent
        c += 1
    raise FactorizationBudgetExceeded(n, spent)


def factorize(n: int, rho_budget: int = DEFAULT_RHO_BUDGET) -> PrimeFactorization:
    """Complete factorization of a nonzero integer.

    Trial division by primes below 10**6, then Pollard-Brent rho sharing one
    step budget across all cofactors. Raises FactorizationBudgetExceeded
    rather than returning a partial answer.
    """
    if n == 0:
        raise ValueError("cannot factorize 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict[int, int] = {}
    checkpoint = 1000
    for p in small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
        if p > checkpoint:
            checkpoint *= 10
            if n == 1 or is_prime(n):
                break
    spent = 0
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d, used = _split_composite(m, rho_budget - spent)
        spent += used
        stack.extend((d, m // d))
    return PrimeFactorization(sign, tuple(sorted(found.items())))


def squarefree_part(n: int, rho_budget: int = DEFAULT_RHO_BUDGET) -> int:
    """Signed product of the primes dividing ``n`` to an odd power."""
    fac = factorize(n, rho_budget)
    out = fac.sign
    for p, e in fac:
        if e % 2:
            out *= p
    return out


def squarefree_part_rational(x: Fraction | int, rho_budget: int = DEFAULT_RHO_BUDGET) -> int:
    """Squarefree integer in the same square class as the nonzero rational ``x``."""
    x = Fraction(x)
    return squarefree_part(x.numerator * x.denominator, rho_budget)


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a/m) for odd positive m."""
    if m <= 0 or m % 2 == 0:
        raise ValueError("jacobi symbol needs an odd positive modulus")
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol; for p = 2 returns 1 on odd a and 0 otherwise."""
    if p == 2:
        return a % 2
    return jacobi(a, p)


def crt(congruences: list[tuple[int, int]]) -> tuple[int, int]:
    """Combine ``x = r_i mod m_i`` for pairwise coprime moduli."""
    residue, modulus = 0, 1
    for r, m in congruences:
        if m <= 0:
            raise ValueError("moduli must be positive")
        if math.gcd(modulus, m) != 1:
            raise NonCoprimeModuli(f"{m} shares a factor with {modulus}")
        k = (r - residue) * pow(modulus, -1, m) % m
        residue += modulus * k
        modulus *= m
    return residue % modulus, modulus


def valuation(n: int | Fraction, p: int) -> int:
    """p-adic valuation of a nonzero integer or rational."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    if isinstance(n, Fraction):
        return valuation(n.numerator, p) - valuation(n.denominator, p)
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def prime_to_part(n: int, primes) -> int:
    """|n| with every prime of ``primes`` removed."""
    n = abs(n)
    for p in primes:
        while n % p == 0:
            n //= p
    return n


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def is_rational_square(x: Fraction | int) -> bool:
    x = Fraction(x)
    return x >= 0 and is_square(x.numerator) and is_square(x.denominator)


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def divisors(n: int, rho_budget: int = DEFAULT_RHO_BUDGET) -> list[int]:
    """Positive divisors of a nonzero integer, ascending."""
    divs = [1]
    for p, e in factorize(n, rho_budget):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
