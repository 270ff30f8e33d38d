"""Permutations, small subgroup closures, and the double cover 2.S_n^+.

The cover is modelled inside the real Clifford algebra with generators
e_1..e_n, e_i^2 = 1 and e_i e_j = -e_j e_i. A transposition (a b) lifts to
(e_a - e_b)/sqrt(2); the projection back to S_n is the twisted conjugation
v -> alpha(x) v x^-1 on the span of the e_i.

Points are 1-based in every public signature and 0-based inside.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd


class Overflow(RuntimeError):
    pass


class NotTransposition(ValueError):
    pass


class NotGroupElement(ValueError):
    pass


# ---------------------------------------------------------------- permutations


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i]`` is the 0-based image of point i+1.

    Products compose right to left: ``(s * t)(x) = s(t(x))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("not a bijection")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> Permutation:
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)(cyc[:1])):
                img[a - 1] = b - 1
        return cls(tuple(img))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        if a == b:
            raise ValueError("a transposition needs two distinct points")
        return cls.from_cycles(n, [(a, b)])

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        if other.n != self.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __pow__(self, e: int) -> Permutation:
        base = self if e >= 0 else self.inverse()
        out = Permutation.identity(self.n)
        for _ in range(abs(e)):
            out = out * base
        return out

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.images[i]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, j in enumerate(self.images) if i != j)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        out = 1
        for c in self.cycles():
            out = out * len(c) // gcd(out, len(c))
        return out

    def is_involution(self) -> bool:
        return not self.is_identity() and (self * self).is_identity()

    def __str__(self) -> str:
        cs = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cs) if cs else "()"


@dataclass(frozen=True)
class CycleType:
    lengths: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.lengths)

    def count(self, length: int) -> int:
        return self.lengths.count(length)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.lengths)) + "]"


def cycle_type(sigma: Permutation) -> CycleType:
    return CycleType(tuple(sorted((len(c) for c in sigma.cycles(include_fixed=True)), reverse=True)))


def sign(sigma: Permutation) -> int:
    return -1 if (sigma.n - len(sigma.cycles(include_fixed=True))) % 2 else 1


def parity(sigma: Permutation) -> str:
    return "even" if sign(sigma) == 1 else "odd"


def transposition_count(sigma: Permutation) -> int:
    """Number d of disjoint transpositions of an involution."""
    if not sigma.is_involution():
        raise ValueError(f"{sigma} is not an involution")
    return len(sigma.cycles())


def closure(generators: list[Permutation], bound: int = 10**6) -> list[Permutation]:
    """Elements of the generated subgroup in breadth-first order from the identity."""
    if not generators:
        raise ValueError("need at least one generator to fix n")
    n = generators[0].n
    if any(g.n != n for g in generators):
        raise ValueError("generators act on different degrees")
    ident = Permutation.identity(n)
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = g * x
            if y not in seen:
                if len(seen) >= bound:
                    raise Overflow(f"subgroup has more than {bound} elements")
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def check_condition_i(inertia_gen: Permutation, decomp_gens: list[Permutation], n: int | None = None) -> bool:
    """Decomposition group inside <(a,b)> x Alt(complement of {a,b})?

    The target is itself a group, so testing the generators suffices.
    """
    cyc = inertia_gen.cycles()
    if len(cyc) != 1 or len(cyc[0]) != 2:
        raise NotTransposition(f"{inertia_gen} is not a transposition")
    if n is not None and inertia_gen.n != n:
        raise ValueError("degree mismatch")
    a, b = cyc[0]
    rest = [i for i in range(1, inertia_gen.n + 1) if i not in (a, b)]
    for g in decomp_gens:
        if {g(a), g(b)} != {a, b}:
            return False
        on_rest = Permutation(tuple(rest.index(g(i)) for i in rest))
        if sign(on_rest) != 1:
            return False
    return True


def check_condition_ii(inertia_gen: Permutation, decomp_gens: list[Permutation], bound: int = 10**6) -> bool:
    """Inertia of type 4j+1 transpositions and every involution of D of type 0,1 mod 4."""
    if transposition_count(inertia_gen) % 4 != 1:
        return False
    for g in closure([inertia_gen, *decomp_gens], bound):
        if g.is_involution() and transposition_count(g) % 4 not in (0, 1):
            return False
    return True


# ------------------------------------------------------------- Q(sqrt 2)


@dataclass(frozen=True)
class QSqrt2:
    """a + b*sqrt(2) with rational a, b."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __add__(self, o: QSqrt2) -> QSqrt2:
        return QSqrt2(self.a + o.a, self.b + o.b)

    def __neg__(self) -> QSqrt2:
        return QSqrt2(-self.a, -self.b)

    def __sub__(self, o: QSqrt2) -> QSqrt2:
        return self + (-o)

    def __mul__(self, o: QSqrt2) -> QSqrt2:
        return QSqrt2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}*sqrt2"
        return f"{self.a}+{self.b}*sqrt2"


# ---------------------------------------------------------------- Clifford


@lru_cache(maxsize=None)
def _prefix_parity(b: int) -> int:
    """Bit i set iff an odd number of bits of b lie below i."""
    out, acc, i = 0, 0, 0
    while b >> i:
        if acc:
            out |= 1 << i
        acc ^= b >> i & 1
        i += 1
    # every higher bit sees the full parity of b
    return out | (-(1 << i) if acc else 0)


def _blade_sign(a: int, b: int) -> int:
    """Sign of e_A e_B = +-e_(A xor B) for generators squaring to +1."""
    return -1 if (a & _prefix_parity(b)).bit_count() & 1 else 1


class CliffordElement:
    """sqrt(2)^-k * sum c_M e_M with integer c_M, blades M given as bitmasks.

    The representation is canonical: k is lowered by 2 while every c_M is
    even, so equal elements compare equal.
    """

    __slots__ = ("n", "terms", "k")

    def __init__(self, n: int, terms: dict[int, int], k: int = 0):
        terms = {m: c for m, c in terms.items() if c}
        while terms and all(c % 2 == 0 for c in terms.values()):
            terms = {m: c // 2 for m, c in terms.items()}
            k -= 2
        if not terms:
            k = 0
        self.n = n
        self.terms = terms
        self.k = k

    @classmethod
    def scalar(cls, n: int, c: int = 1) -> CliffordElement:
        return cls(n, {0: c})

    @classmethod
    def generator(cls, n: int, i: int) -> CliffordElement:
        return cls(n, {1 << (i - 1): 1})

    def __eq__(self, other) -> bool:
        return isinstance(other, CliffordElement) and self.k == other.k and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.k, frozenset(self.terms.items())))

    def __neg__(self) -> CliffordElement:
        return CliffordElement(self.n, {m: -c for m, c in self.terms.items()}, self.k)

    def __mul__(self, other: CliffordElement) -> CliffordElement:
        out: dict[int, int] = {}
        get = out.get
        for mb, cb in other.terms.items():
            pb = _prefix_parity(mb)
            for ma, ca in self.terms.items():
                m = ma ^ mb
                c = ca * cb
                out[m] = get(m, 0) + (-c if (ma & pb).bit_count() & 1 else c)
        return CliffordElement(self.n, out, self.k + other.k)

    def is_scalar(self, value: int | None = None) -> bool:
        if set(self.terms) - {0}:
            return False
        if value is None:
            return True
        return self == CliffordElement.scalar(self.n, value)

    def coefficients(self) -> dict[tuple[int, ...], QSqrt2]:
        """Blade (1-based index tuple) -> exact coefficient in Q(sqrt 2)."""
        out = {}
        for m, c in sorted(self.terms.items()):
            blade = tuple(i + 1 for i in range(self.n) if m >> i & 1)
            if self.k % 2 == 0:
                out[blade] = QSqrt2(Fraction(c) / Fraction(2) ** (self.k // 2))
            else:
                out[blade] = QSqrt2(Fraction(0), Fraction(c) / Fraction(2) ** ((self.k + 1) // 2))
        return out

    def grade_involution(self) -> CliffordElement:
        return CliffordElement(self.n, {m: (-c if m.bit_count() & 1 else c) for m, c in self.terms.items()}, self.k)

    def reversal(self) -> CliffordElement:
        def s(m):
            r = m.bit_count()
            return -1 if (r * (r - 1) // 2) & 1 else 1

        return CliffordElement(self.n, {m: s(m) * c for m, c in self.terms.items()}, self.k)

    def __repr__(self) -> str:
        return f"CliffordElement(n={self.n}, k={self.k}, terms={self.terms})"

    def __str__(self) -> str:
        parts = []
        for blade, c in self.coefficients().items():
            name = "*".join(f"e{i}" for i in blade) or "1"
            parts.append(f"({c})*{name}")
        return " + ".join(parts) if parts else "0"


def _transposition_lift(n: int, a: int, b: int) -> CliffordElement:
    return CliffordElement(n, {1 << (a - 1): 1, 1 << (b - 1): -1}, 1)


def canonical_transpositions(sigma: Permutation) -> list[tuple[int, int]]:
    """(a1 ... ak) = (a1 a2)(a2 a3)...(a_{k-1} ak), cycles in order of least point."""
    out = []
    for cyc in sigma.cycles():
        out.extend(zip(cyc, cyc[1:]))
    return out


def lift(sigma: Permutation) -> CliffordElement:
    return times_lift(CliffordElement.scalar(sigma.n), sigma)


def times_lift(x: CliffordElement, sigma: Permutation) -> CliffordElement:
    """x * lift(sigma), one two-term generator at a time."""
    for a, b in canonical_transpositions(sigma):
        x = x * _transposition_lift(sigma.n, a, b)
    return x


def _check_group_element(x: CliffordElement) -> None:
    parities = {m.bit_count() & 1 for m in x.terms}
    if len(parities) != 1 or not (x * x.reversal()).is_scalar(1):
        raise NotGroupElement("not a product of unit vectors")


def _twisted_image(terms: dict[int, int], n: int, i: int) -> int | None:
    """j with alpha(x) e_i = e_j x, or None when no basis vector works."""
    bi = 1 << i
    m0 = next(iter(terms))
    for j in range(n):
        bj = 1 << j
        if m0 ^ bi ^ bj not in terms:
            continue
        below_j = bj - 1
        ok = True
        for m, c in terms.items():
            mp = m ^ bi ^ bj
            cp = terms.get(mp)
            if cp is None:
                ok = False
                break
            # alpha(x) e_i at blade m^bi versus e_j x at blade mp^bj = m^bi
            left = m.bit_count() + (m >> (i + 1)).bit_count()
            right = (mp & below_j).bit_count()
            if (c if (left - right) % 2 == 0 else -c) != cp:
                ok = False
                break
        if ok:
            return j
    return None


def project(x: CliffordElement) -> Permutation:
    """Image in S_n under v -> alpha(x) v x^-1, checked on every basis vector.

    Runs in O(n * terms); x is assumed invertible (true for every lift).
    """
    if not x.terms or len({m.bit_count() & 1 for m in x.terms}) != 1:
        raise NotGroupElement("not a parity-homogeneous nonzero element")
    img = []
    for i in range(x.n):
        j = _twisted_image(x.terms, x.n, i)
        if j is None:
            raise NotGroupElement("twisted conjugation does not permute the basis")
        img.append(j)
    try:
        return Permutation(tuple(img))
    except ValueError:
        raise NotGroupElement("twisted conjugation is not bijective on the basis") from None


def clifford_order(x: CliffordElement) -> int:
    _check_group_element(x)
    limit = 4 * factorial(x.n)
    one = CliffordElement.scalar(x.n)
    y = x
    k = 1
    while y != one:
        y = y * x
        k += 1
        if k > limit:
            raise NotGroupElement("order exceeds 4*n!")
    return k


def clifford_commutator(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """x^-1 y^-1 x y, using x^-1 = reversal(x) for products of unit vectors."""
    _check_group_element(x)
    _check_group_element(y)
    return x.reversal() * y.reversal() * x * y


def _involutions(n: int):
    """All involutions of S_n as lists of disjoint pairs."""
    def rec(points):
        if len(points) < 2:
            yield []
            return
        first, rest = points[0], points[1:]
        yield from rec(rest)
        for k, b in enumerate(rest):
            for tail in rec(rest[:k] + rest[k + 1 :]):
                yield [(first, b)] + tail
    for pairs in rec(list(range(1, n + 1))):
        if pairs:
            yield Permutation.from_cycles(n, pairs)


def selftest(n: int, samples: int = 10_000, seed: int = 0, exhaustive_limit: int = 8) -> dict:
    """Check the cover laws; exhaustive for n <= exhaustive_limit, sampled above.

    Laws: projection of lift is the identity, lift is a section up to the
    central sign, involutions lift to order 2 exactly when d = 0, 1 mod 4,
    lifts of disjoint transpositions commute up to -1.
    """
    import itertools
    import random

    rng = random.Random(seed)
    results = {"n": n, "exhaustive": n <= exhaustive_limit}
    failures: dict[str, int] = {}

    def perms():
        if n <= exhaustive_limit:
            for p in itertools.permutations(range(n)):
                yield Permutation(p)
        else:
            for _ in range(samples):
                img = list(range(n))
                rng.shuffle(img)
                yield Permutation(tuple(img))

    checked = 0
    for s in perms():
        checked += 1
        if project(lift(s)) != s:
            failures["projection"] = failures.get("projection", 0) + 1
    results["projection_checked"] = checked

    one = CliffordElement.scalar(n)
    pairs = 0
    for _ in range(samples if n > 1 else 0):
        a, b = list(range(n)), list(range(n))
        rng.shuffle(a)
        rng.shuffle(b)
        s, t = Permutation(tuple(a)), Permutation(tuple(b))
        z, w = times_lift(lift(s), t), lift(s * t)
        pairs += 1
        if z != w and z != -w:
            failures["section"] = failures.get("section", 0) + 1
    results["section_checked"] = pairs

    invs = 0
    def random_involution():
        pts = rng.sample(range(1, n + 1), n)
        d = rng.randint(1, n // 2)
        return Permutation.from_cycles(n, [tuple(pts[2 * k : 2 * k + 2]) for k in range(d)])

    source = _involutions(n) if n <= exhaustive_limit else (random_involution() for _ in range(samples))
    for s in source:
        invs += 1
        sq = lift(s) * lift(s)
        d = transposition_count(s)
        expected = one if d % 4 in (0, 1) else -one
        if sq != expected:
            failures["involution_order"] = failures.get("involution_order", 0) + 1
    results["involutions_checked"] = invs

    comms = 0
    for a, b, c, d in itertools.permutations(range(1, min(n, 6) + 1), 4):
        x = lift(Permutation.transposition(n, a, b))
        y = lift(Permutation.transposition(n, c, d))
        comms += 1
        if clifford_commutator(x, y) != -one:
            failures["commutator"] = failures.get("commutator", 0) + 1
    results["commutators_checked"] = comms
    if n >= 2 and clifford_order(-one) != 2:
        failures["center"] = 1
    results["failures"] = failures
    results["passed"] = not failures
    return results
