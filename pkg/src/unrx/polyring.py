"""Dense univariate polynomials over Q and over prime fields.

:class:`Poly` holds exact rational coefficients in ascending degree order
(entries are ``int`` whenever integral, otherwise ``Fraction``). An
"integer polynomial" is simply a ``Poly`` whose coefficients are all ints;
:meth:`Poly.primitive` produces the content-1, positive-leading model.

:class:`ModPoly` is a polynomial over F_p with coefficients in ``[0, p)``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import exactnum
from .exactnum import is_rational_square, is_square, valuation


class LeadingDrop(ValueError):
    """The prime divides the leading coefficient, so reduction loses degree."""


class NotIrreducible(ValueError):
    pass


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    return c


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class Poly:
    """Polynomial over Q, coefficients ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = tuple(_trim([_norm(c) for c in coeffs]))

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def from_roots(cls, roots) -> Poly:
        out = cls([1])
        for r in roots:
            out = out * cls([-r, 1])
        return out

    # -- basic structure ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if mono and c == 1:
                body = mono
            elif mono and c == -1:
                body = "-" + mono
            else:
                body = f"{c}*{mono}" if mono else str(c)
                if isinstance(c, Fraction) and mono:
                    body = f"({c})*{mono}"
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ")

    # -- ring operations ---------------------------------------------------
    @staticmethod
    def _coerce(other) -> Poly:
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        out, base = Poly([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.degree
        inv = Fraction(1) / other.lc
        quo = [Fraction(0)] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] * inv
            if c:
                quo[i - d] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - d + j] -= c * b
        return Poly(quo), Poly(rem[:d] if d > 0 else [])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc) if isinstance(acc, Fraction) else acc

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> Poly:
        return self * (Fraction(1) / self.lc)

    def reverse(self, degree: int | None = None) -> Poly:
        """X^d f(1/X) for the formal degree ``d`` (defaults to the actual degree)."""
        d = self.degree if degree is None else degree
        coeffs = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return Poly(reversed(coeffs[: d + 1]))

    def compose(self, other: Poly) -> Poly:
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    # -- content -------------------------------------------------------------
    def content(self) -> Fraction:
        """Positive rational c with f / c primitive integral (sign ignored)."""
        if not self.coeffs:
            return Fraction(0)
        den = math.lcm(*(Fraction(c).denominator for c in self.coeffs))
        num = math.gcd(*(int(c * den) for c in self.coeffs))
        return Fraction(num, den)

    def primitive(self) -> Poly:
        """Primitive integral model with positive leading coefficient."""
        return normalize_content(self)[0]

    def mod(self, p: int) -> ModPoly:
        """Reduction mod p; denominators must be prime to p."""
        out = []
        for c in self.coeffs:
            c = Fraction(c)
            if c.denominator % p == 0:
                raise ValueError(f"coefficient {c} is not {p}-integral")
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        return ModPoly(p, out)


RatPolynomial = Poly
IntPolynomial = Poly


def normalize_content(f: Poly) -> tuple[Poly, Fraction]:
    """Return (primitive integer polynomial, c) with f = c * primitive, lc > 0."""
    if f.is_zero():
        return Poly(), Fraction(0)
    c = f.content()
    if f.lc < 0:
        c = -c
    return Poly(int(Fraction(a) / c) for a in f.coeffs), c


def substitute_affine(f: Poly, a, b) -> Poly:
    """Exact coefficients of f(aX + b)."""
    if a == 0:
        raise ValueError("affine substitution needs a != 0")
    return f.compose(Poly([b, a]))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over Q (zero if both are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic() if not f.is_zero() else f


def squarefree_part_poly(f: Poly) -> Poly:
    g = poly_gcd(f, f.derivative())
    return f.exact_div(g) if g.degree > 0 else f


def sylvester_resultant(f: Poly, g: Poly, deg_f: int | None = None, deg_g: int | None = None) -> Fraction:
    """Resultant as the Sylvester determinant with formal degrees (Bareiss)."""
    m = f.degree if deg_f is None else deg_f
    n = g.degree if deg_g is None else deg_g
    size = m + n
    if size == 0:
        return Fraction(1)
    fa = [Fraction(f[m - i]) for i in range(m + 1)]
    ga = [Fraction(g[n - i]) for i in range(n + 1)]
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + fa + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + ga + [Fraction(0)] * (size - n - 1 - i))
    return _det(rows)


def _det(rows: list[list[Fraction]]) -> Fraction:
    rows = [r[:] for r in rows]
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        pv = rows[col][col]
        det *= pv
        for r in range(col + 1, n):
            factor = rows[r][col] / pv
            if factor:
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return det


def _int_content(coeffs: Sequence[int]) -> int:
    return math.gcd(*coeffs) if coeffs else 0


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (ascending)."""
    r = a[:]
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, bj in enumerate(b):
            r[shift + j] -= c * bj
        _trim(r)
        e -= 1
    scale = lb**e
    return [x * scale for x in r]


def _subresultant_int(A: list[int], B: list[int]) -> int:
    # Cohen, Algorithm 3.3.7.
    if not A or not B:
        return 0
    a, b = _int_content(A), _int_content(B)
    A = [x // a for x in A]
    B = [x // b for x in B]
    dA, dB = len(A) - 1, len(B) - 1
    g = h = s = 1
    t = a**dB * b**dA
    if dA < dB:
        A, B = B, A
        dA, dB = dB, dA
        if dA % 2 and dB % 2:
            s = -1
    while dB > 0:
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = _prem(A, B)
        A = B
        dA = dB
        if not R:
            return 0
        denom = g * h**delta
        B = [x // denom for x in R]
        dB = len(B) - 1
        g = A[-1]
        num = g**delta
        if delta == 0:
            h = h * num
        else:
            hd = h ** (delta - 1)
            h = num // hd
    h = B[-1] ** dA // h ** (dA - 1) if dA >= 1 else 1
    return s * t * h


def resultant(f: Poly, g: Poly) -> Fraction | int:
    """Resultant of two nonzero polynomials via the subresultant PRS."""
    if f.is_zero() or g.is_zero():
        return 0
    fi, cf = normalize_content(f)
    gi, cg = normalize_content(g)
    r = _subresultant_int(list(fi.coeffs), list(gi.coeffs))
    out = Fraction(r) * cf ** g.degree * cg ** f.degree
    return _norm(out)


def discriminant(f: Poly):
    """(-1)^(d(d-1)/2) res(f, f') / lc(f)."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return 1
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return _norm(Fraction(sign * resultant(f, f.derivative())) / f.lc)


def formal_discriminant(f: Poly, degree: int):
    """Discriminant of f regarded as a polynomial of formal degree ``degree``.

    A leading-coefficient drop by one multiplies by the square of the new
    leading coefficient; a drop by two or more gives zero.
    """
    d = f.degree
    if d > degree:
        raise ValueError("actual degree exceeds formal degree")
    if d == degree:
        return discriminant(f) if degree >= 1 else 1
    if d == degree - 1:
        base = discriminant(f) if d >= 1 else 1
        return _norm(f.lc**2 * Fraction(base))
    return 0


# -- Sturm sequences ---------------------------------------------------------

NEG_INF = "-inf"
POS_INF = "+inf"


def sturm_chain(f: Poly) -> list[Poly]:
    f = squarefree_part_poly(f)
    chain = [f, f.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_at(p: Poly, x) -> int:
    if x == POS_INF:
        return _sign(p.lc)
    if x == NEG_INF:
        return _sign(p.lc) * (-1 if p.degree % 2 else 1)
    return _sign(p(x))


def _variations(chain: list[Poly], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(f: Poly, a=NEG_INF, b=POS_INF) -> int:
    """Number of distinct real roots of f in (a, b]."""
    if f.degree < 1:
        return 0
    chain = sturm_chain(f)
    return _variations(chain, a) - _variations(chain, b)


# -- rational roots ----------------------------------------------------------

def rational_roots(f: Poly, rho_budget: int = exactnum.DEFAULT_RHO_BUDGET) -> list[Fraction]:
    """Distinct rational roots, ascending, by the rational root test."""
    if f.degree < 1:
        return []
    g = f.primitive()
    roots = []
    k = 0
    while g[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
        g = Poly(g.coeffs[k:])
    if g.degree < 1:
        return roots
    a0, an = g[0], g.lc
    nums = exactnum.divisors(a0, rho_budget)
    dens = exactnum.divisors(an, rho_budget)
    d = g.degree
    seen = set()
    for q in dens:
        for p in nums:
            if math.gcd(p, q) != 1:
                continue
            for s in (p, -p):
                if (s, q) in seen:
                    continue
                seen.add((s, q))
                if sum(c * s**i * q ** (d - i) for i, c in enumerate(g.coeffs)) == 0:
                    roots.append(Fraction(s, q))
    return sorted(roots)


# -- polynomials over F_p ------------------------------------------------------

class ModPoly:
    """Polynomial over F_p, coefficients ascending in [0, p)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        self.p = p
        self.coeffs = tuple(_trim([c % p for c in coeffs]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __eq__(self, other) -> bool:
        return isinstance(other, ModPoly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"ModPoly({self.p}, {list(self.coeffs)})"

    def __str__(self) -> str:
        return str(Poly(self.symmetric_coeffs())) + f" (mod {self.p})"

    def symmetric_coeffs(self) -> list[int]:
        """Coefficients lifted to the symmetric range (-p/2, p/2]."""
        h = self.p // 2
        return [c - self.p if c > h else c for c in self.coeffs]

    def __add__(self, other: ModPoly) -> ModPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self.coeffs, other.coeffs
        return ModPoly(self.p, ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)))

    def __neg__(self) -> ModPoly:
        return ModPoly(self.p, (-c for c in self.coeffs))

    def __sub__(self, other: ModPoly) -> ModPoly:
        return self + (-other)

    def __mul__(self, other) -> ModPoly:
        if isinstance(other, int):
            return ModPoly(self.p, (c * other for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return ModPoly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ModPoly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other: ModPoly) -> tuple[ModPoly, ModPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        d = other.degree
        inv = pow(other.lc, -1, p)
        quo = [0] * max(len(rem) - d, 0)
        b = other.coeffs
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] * inv % p
            if c:
                quo[i - d] = c
                for j in range(d + 1):
                    rem[i - d + j] = (rem[i - d + j] - c * b[j]) % p
        return ModPoly(p, quo), ModPoly(p, rem[:d])

    def __floordiv__(self, other: ModPoly) -> ModPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: ModPoly) -> ModPoly:
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def monic(self) -> ModPoly:
        return self * pow(self.lc, -1, self.p)

    def derivative(self) -> ModPoly:
        return ModPoly(self.p, (i * c for i, c in enumerate(self.coeffs) if i > 0))

    def powmod(self, e: int, modulus: ModPoly) -> ModPoly:
        out = ModPoly(self.p, [1])
        base = self % modulus
        while e:
            if e & 1:
                out = out * base % modulus
            base = base * base % modulus
            e >>= 1
        return out

    def to_poly(self) -> Poly:
        return Poly(self.coeffs)


def mod_gcd(a: ModPoly, b: ModPoly) -> ModPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def _pth_root(f: ModPoly) -> ModPoly:
    p = f.p
    return ModPoly(p, f.coeffs[::p])


def squarefree_decomposition(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Yun-style squarefree decomposition of a monic polynomial over F_p."""
    p = f.p
    out: list[tuple[ModPoly, int]] = []
    c = mod_gcd(f, f.derivative())
    w = f // c
    i = 1
    while w.degree > 0:
        y = mod_gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        for g, e in squarefree_decomposition(_pth_root(c)):
            out.append((g, e * p))
    return out


def distinct_degree_factorization(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Split a monic squarefree polynomial into products of equal-degree irreducibles."""
    p = f.p
    out = []
    x = ModPoly(p, [0, 1])
    h = x
    d = 1
    while f.degree >= 2 * d:
        h = h.powmod(p, f)
        g = mod_gcd(f, h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
        d += 1
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def equal_degree_factorization(f: ModPoly, d: int, rng: random.Random) -> list[ModPoly]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    p = f.p
    n = f.degree
    if n == d:
        return [f]
    while True:
        a = ModPoly(p, [rng.randrange(p) for _ in range(n)])
        if a.degree < 1:
            continue
        if p == 2:
            t = a
            acc = a
            for _ in range(d - 1):
                t = t * t % f
                acc = acc + t
            b = acc
        else:
            b = a.powmod((p**d - 1) // 2, f) - ModPoly(p, [1])
        g = mod_gcd(f, b)
        if 0 < g.degree < n:
            return equal_degree_factorization(g, d, rng) + equal_degree_factorization(f // g, d, rng)


def factor_mod_p(f: ModPoly, seed: int | random.Random = 0) -> tuple[int, list[tuple[ModPoly, int]]]:
    """Complete factorization over F_p: (leading unit, [(monic irreducible, multiplicity)]).

    Factors are sorted by (degree, coefficients) so output is reproducible.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    unit = f.lc
    result = []
    if f.degree > 0:
        for part, mult in squarefree_decomposition(f.monic()):
            for block, d in distinct_degree_factorization(part):
                for g in equal_degree_factorization(block, d, rng):
                    result.append((g, mult))
    result.sort(key=lambda gm: (gm[0].degree, gm[0].coeffs, gm[1]))
    return unit, result


@dataclass(frozen=True)
class FactorPattern:
    """Degrees and multiplicities of the irreducible factors mod p."""

    prime: int
    factors: tuple[tuple[int, int], ...]

    @property
    def separable(self) -> bool:
        return all(m == 1 for _, m in self.factors)

    @property
    def degree(self) -> int:
        return sum(d * m for d, m in self.factors)

    def cycle_type(self) -> tuple[int, ...]:
        """Frobenius cycle lengths (meaningful only when separable)."""
        return tuple(sorted((d for d, m in self.factors for _ in range(m)), reverse=True))


def factor_pattern(f: Poly, p: int, seed: int = 0) -> FactorPattern:
    """Factorization pattern of the primitive part of f modulo p."""
    g = f.primitive()
    if g.lc % p == 0:
        raise LeadingDrop(f"{p} divides the leading coefficient {g.lc}")
    _, facs = factor_mod_p(g.mod(p), seed)
    return FactorPattern(p, tuple(sorted((h.degree, m) for h, m in facs)))


def is_separable_mod(f: Poly, p: int) -> bool:
    g = f.primitive().mod(p)
    return g.degree >= 0 and mod_gcd(g, g.derivative()).degree == 0


def good_primes(f: Poly, count: int, start: int = 2) -> list[int]:
    """First ``count`` primes p >= start not dividing lc * disc of the primitive model."""
    g = f.primitive()
    bad = abs(Fraction(discriminant(g)).numerator * g.lc) if g.degree >= 1 else 1
    out = []
    p = start
    while len(out) < count:
        if exactnum.is_prime(p) and bad % p != 0:
            out.append(p)
        p += 1
    return out


def irreducible_over_q(f: Poly, prime_budget: int = 60) -> bool | None:
    """Decide irreducibility over Q by factor-degree patterns.

    Returns True when the patterns at good primes leave no room for a proper
    factor, False when a rational root is found, and None otherwise.
    """
    g = f.primitive()
    n = g.degree
    if n <= 1:
        return n == 1
    if rational_roots_exist(g):
        return False
    possible = set(range(1, n))
    for p in good_primes(g, prime_budget):
        degs = [d for d, m in factor_pattern(g, p).factors for _ in range(m)]
        sums = {0}
        for d in degs:
            sums |= {s + d for s in sums}
        possible &= sums
        if not possible:
            return True
    if n <= 3:
        return True
    if n == 4 and not _has_quadratic_factor(g):
        return True
    return None


def rational_roots_exist(f: Poly) -> bool:
    return bool(rational_roots(f))


def _has_quadratic_factor(f: Poly) -> bool:
    """Exact search for a monic integer quadratic factor of a quartic."""
    a4 = f.lc
    # F(x) = a4^3 f(x / a4) is monic with integer coefficients.
    F = [f[i] * a4 ** (3 - i) if i <= 3 else 1 for i in range(5)]
    A0, A1, A2, A3 = F[0], F[1], F[2], F[3]
    if A0 == 0:
        return True
    for b in exactnum.divisors(A0):
        for bs in (b, -b):
            d = A0 // bs
            # a^2 - A3 a + (A2 - b - d) = 0 for a + c = A3, b + d + a c = A2
            disc = A3 * A3 - 4 * (A2 - bs - d)
            if not is_square(disc):
                continue
            r = math.isqrt(disc)
            for num in (A3 + r, A3 - r):
                if num % 2:
                    continue
                a = num // 2
                c = A3 - a
                if a * d + bs * c == A1:
                    return True
    return False


def quartic_galois_group(f: Poly) -> str:
    """Galois group of an irreducible quartic: one of S4, A4, D4, V4, C4."""
    g = f.primitive()
    if g.degree != 4:
        raise ValueError("quartic_galois_group needs a degree-4 polynomial")
    if rational_roots(g) or _has_quadratic_factor(g):
        raise NotIrreducible(str(g))
    m = g.monic()
    a, b, c, d = m[3], m[2], m[1], m[0]
    resolvent = Poly([-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1])
    disc = Fraction(discriminant(g))
    square_disc = is_rational_square(disc)
    roots = rational_roots(resolvent)
    if not roots:
        return "A4" if square_disc else "S4"
    if len(roots) == 3:
        return "V4"
    r = roots[0]

    def splits_over(u, v) -> bool:
        # x^2 + u x + v splits over Q(sqrt(disc))
        delta = Fraction(u * u - 4 * v)
        return delta == 0 or is_rational_square(delta) or is_rational_square(delta * disc)

    if splits_over(-r, d) and splits_over(a, b - r):
        return "C4"
    return "D4"


def lift_symmetric(c: int, p: int) -> int:
    c %= p
    return c - p if c > p // 2 else c


def content_valuation(f: Poly, p: int) -> int:
    """Minimum p-adic valuation of the nonzero coefficients."""
    return min(valuation(c, p) for c in f.coeffs if c != 0)
