import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from unrx import exactnum as en
from unrx.polyring import (
    LeadingDrop,
    ModPoly,
    NotIrreducible,
    Poly,
    discriminant,
    distinct_degree_factorization,
    factor_mod_p,
    factor_pattern,
    formal_discriminant,
    irreducible_over_q,
    normalize_content,
    quartic_galois_group,
    rational_roots,
    resultant,
    sturm_count,
    substitute_affine,
    sylvester_resultant,
)

x = sympy.symbols("x")


def to_sympy(f: Poly):
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c
                                     for c in f.coeffs])), x)


int_coeffs = st.lists(st.integers(-50, 50), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


# -------------------------------------------------------------- resultant

def test_resultant_examples():
    assert resultant(Poly([-1, 0, 1]), Poly([-2, 1])) == 3
    assert resultant(Poly([-1, 0, 0, 1]), Poly([-1, 0, 1])) == 0
    for b, c in [(3, 5), (-2, 7), (0, -4)]:
        f = Poly([c, b, 1])
        assert resultant(f, f.derivative()) == -(b * b - 4 * c)


@given(int_coeffs, int_coeffs)
@settings(max_examples=150, deadline=None)
def test_resultant_matches_sylvester(a, b):
    f, g = Poly(a), Poly(b)
    assert Fraction(resultant(f, g)) == sylvester_resultant(f, g)


def test_resultant_rational_coefficients():
    f = Poly([Fraction(1, 2), 3, Fraction(-2, 3)])
    g = Poly([5, Fraction(7, 4)])
    assert Fraction(resultant(f, g)) == sylvester_resultant(f, g)


# ----------------------------------------------------------- discriminant

def residue_poly(n):
    return Poly([i + 1 for i in range(n - 1)])


def test_discriminant_examples():
    assert discriminant(residue_poly(7)) == 2 * 7**4 * 6**3
    assert discriminant(Poly([1, 0, 1])) == -4


@pytest.mark.parametrize("n", range(7, 32, 4))
def test_residue_discriminant_formula(n):
    expected = (-1) ** ((n + 1) // 2) * 2 * n ** (n - 3) * (n - 1) ** (n - 4)
    assert discriminant(residue_poly(n)) == expected


@given(int_coeffs)
@settings(max_examples=150, deadline=None)
def test_discriminant_vs_sympy(c):
    f = Poly(c)
    if f.degree < 1:
        return
    assert Fraction(discriminant(f)) == Fraction(str(sympy.discriminant(to_sympy(f))))


def test_formal_discriminant_degree_drop():
    f = Poly([3, -1, 2])  # degree 2, viewed in degree 3
    assert formal_discriminant(f, 3) == 4 * discriminant(f)
    assert formal_discriminant(Poly([1, 1]), 3) == 0


# ----------------------------------------------------------- factor mod p

def test_factor_mod_p_examples():
    _, facs = factor_mod_p(ModPoly(5, [1, 0, 1]))
    assert sorted(tuple(g.coeffs) for g, _ in facs) == [(2, 1), (3, 1)]
    p = 11
    coeffs = [0] * p
    coeffs[0], coeffs[p - 1] = -pow(2, (p + 1) // 2, p), 1
    _, facs = factor_mod_p(ModPoly(p, coeffs))
    assert sorted(g.degree for g, _ in facs) == [5, 5]
    got = sorted(tuple(g.coeffs) for g, _ in facs)
    want = sorted(tuple(ModPoly(p, [s * 8, 0, 0, 0, 0, 1]).coeffs) for s in (1, -1))
    assert got == want


def sextic_fiber():
    g = Poly([62208, 0, -5940, 0, 53, 0, 1])
    h = Poly([0, 1600, 0, -172, 0, 3])
    return g - h * 385


def test_factor_sextic_fiber_mod_3():
    _, facs = factor_mod_p(sextic_fiber().mod(3))
    as_text = sorted((tuple(g.symmetric_coeffs()), m) for g, m in facs)
    assert as_text == [((-1, 1), 1), ((0, 1), 1), ((1, 1), 4)]
    pat = factor_pattern(sextic_fiber(), 3)
    assert sorted(pat.factors) == [(1, 1), (1, 1), (1, 4)] and not pat.separable


def _random_modpoly(rnd, p, deg):
    return ModPoly(p, [rnd.randrange(p) for _ in range(deg)] + [rnd.randrange(1, p)])


def test_factor_mod_p_reconstruction_and_irreducibility():
    rnd = random.Random(7)
    primes = list(sympy.primerange(2, 10**4))
    for _ in range(250):
        p = rnd.choice(primes[:40] if rnd.random() < 0.5 else primes)
        f = _random_modpoly(rnd, p, rnd.randrange(1, 10))
        unit, facs = factor_mod_p(f, rnd)
        prod = ModPoly(p, [unit])
        for g, m in facs:
            assert g.lc == 1 and g.degree >= 1
            # one distinct-degree bucket of degree deg(g) means g is irreducible
            ddf = distinct_degree_factorization(g)
            assert [d for _, d in ddf] == [g.degree]
            for _ in range(m):
                prod = prod * g
        assert prod == f


def test_factor_mod_p_vs_sympy():
    rnd = random.Random(3)
    for _ in range(60):
        p = rnd.choice([2, 3, 5, 7, 11, 101, 9973])
        f = _random_modpoly(rnd, p, rnd.randrange(1, 9))
        _, facs = factor_mod_p(f)
        sp = sympy.Poly(list(reversed(f.coeffs)), x, modulus=p)
        _, sfacs = sp.factor_list()
        ours = sorted((g.degree, m) for g, m in facs)
        theirs = sorted((g.degree(), m) for g, m in sfacs)
        assert ours == theirs


def test_factor_pattern_examples():
    pat = factor_pattern(Poly([-1, 0, 0, 0, 0, 0, 1]), 7)
    assert pat.factors == ((1, 1),) * 6 and pat.separable
    with pytest.raises(LeadingDrop):
        factor_pattern(Poly([1, 0, 3]), 3)


@given(int_coeffs, st.sampled_from([3, 5, 7, 11, 13, 101]))
@settings(max_examples=200, deadline=None)
def test_disc_vanishes_iff_not_separable(c, p):
    f = Poly(c).primitive()
    if f.degree < 2 or f.lc % p == 0 or discriminant(f) == 0:
        return
    d = Fraction(discriminant(f))
    pat = factor_pattern(f, p)
    assert pat.degree == f.degree
    assert (d.numerator % p == 0) == (not pat.separable)


# ------------------------------------------------------------------ sturm

def test_sturm_examples():
    assert sturm_count(Poly([1, 0, 1])) == 0
    assert sturm_count(Poly([-1, 0, 1])) == 2
    assert sturm_count(Poly([-1, 0, 1]), Fraction(-1), Fraction(1)) == 1  # half-open (a, b]
    assert sturm_count(Poly([0, 0, 1])) == 1  # repeated root counted once


@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6), min_size=1, max_size=4),
       st.integers(0, 2))
@settings(max_examples=150, deadline=None)
def test_sturm_counts_known_roots(roots, complex_pairs):
    f = Poly.from_roots(roots)
    for k in range(complex_pairs):
        f = f * Poly([k * k + 1, 2 * k, 1])  # (X + k)^2 + 1
    assert sturm_count(f) == len(set(roots))
    # each separating interval holds exactly one root
    pts = sorted(set(roots))
    probes = [pts[0] - 1] + [(a + b) / 2 for a, b in zip(pts, pts[1:])] + [pts[-1] + 1]
    assert sturm_count(f, probes[0], probes[-1]) == len(pts)
    for a, b in zip(probes, probes[1:]):
        assert sturm_count(f, a, b) == 1


# ---------------------------------------------------------- substitutions

def test_substitute_affine_examples():
    assert substitute_affine(Poly([0, 0, 1]), 2, 1) == Poly([1, 4, 4])


@given(int_coeffs, st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(lambda a: a != 0),
       st.fractions(min_value=-9, max_value=9, max_denominator=5))
@settings(max_examples=150, deadline=None)
def test_substitute_affine_roundtrip(c, a, b):
    f = Poly(c)
    g = substitute_affine(f, a, b)
    assert substitute_affine(g, 1 / a, -b / a) == f


def test_sextic_fiber_quartic_after_shift():
    F = substitute_affine(sextic_fiber(), 3, -1)
    G, content = normalize_content(F)
    assert en.valuation(content, 3) == 4
    _, facs = factor_mod_p(G.mod(3))
    lin = sorted((tuple(g.symmetric_coeffs()), m) for g, m in facs)
    assert lin == [((-1, 1), 1), ((0, 1), 1), ((1, 1), 2)]


def test_normalize_content_sign():
    G, c = normalize_content(Poly([Fraction(-2, 3), 0, Fraction(-4, 3)]))
    assert G == Poly([1, 0, 2]) and c == Fraction(-2, 3)


# ---------------------------------------------------------- rational data

def test_rational_roots():
    f = Poly.from_roots([Fraction(1, 2), Fraction(-3), Fraction(1, 2)]) * 6
    assert rational_roots(f) == [Fraction(-3), Fraction(1, 2)]


def test_irreducible_over_q():
    assert irreducible_over_q(Poly([-2, 0, 0, 0, 1])) is True
    assert irreducible_over_q(Poly([1, 0, 0, 0, 1])) is True
    assert irreducible_over_q(Poly([-1, 0, 0, 0, 1])) is False


# --------------------------------------------------- quartic Galois groups

def frobenius_oracle(coeffs, limit=3000):
    """Name the group from the cycle types seen at good primes (sympy factoring)."""
    sp = sympy.Poly(list(reversed(coeffs)), x)
    disc = int(sympy.discriminant(sp))
    lc = coeffs[-1]
    types = set()
    for p in sympy.primerange(3, limit):
        if disc % p == 0 or lc % p == 0:
            continue
        _, facs = sympy.Poly(list(reversed(coeffs)), x, modulus=p).factor_list()
        types.add(tuple(sorted(g.degree() for g, _ in facs)))
    has4, has3, has211 = (4,) in types, (1, 3) in types, (1, 1, 2) in types
    if has4 and has3:
        return "S4"
    if has3:
        return "A4"
    if has4:
        return "D4" if has211 else "C4"
    return "V4"


@pytest.mark.parametrize("coeffs,expected", [
    ([1, 0, 0, 0, 1], "V4"),
    ([1, 1, 1, 1, 1], "C4"),
    ([-2, 0, 0, 0, 1], "D4"),
    ([1, 1, 0, 0, 1], "S4"),
    ([-3, 0, 4, -8, 1], None),
    ([4, 0, 0, 8, 1], None),
    ([12, 8, 0, 0, 1], "A4"),  # x^4 + 8x + 12
    ([5, 0, 5, 0, 1], None),
])
def test_quartic_galois_group(coeffs, expected):
    f = Poly(coeffs)
    try:
        got = quartic_galois_group(f)
    except NotIrreducible:
        assert sympy.Poly(list(reversed(coeffs)), x).is_irreducible is False
        return
    oracle = frobenius_oracle(coeffs)
    assert got == oracle
    if expected is not None:
        assert got == expected


def test_quartic_reducible_rejected():
    with pytest.raises(NotIrreducible):
        quartic_galois_group(Poly([-1, 0, 0, 0, 1]))
    with pytest.raises(NotIrreducible):
        quartic_galois_group(Poly([2, 0, 3, 0, 1]))  # (x^2+1)(x^2+2)


def test_quartic_random_vs_oracle():
    rnd = random.Random(11)
    seen = 0
    while seen < 12:
        c = [rnd.randrange(-6, 7) for _ in range(4)] + [1]
        if not sympy.Poly(list(reversed(c)), x).is_irreducible:
            continue
        seen += 1
        assert quartic_galois_group(Poly(c)) == frobenius_oracle(c, 1500)
