import math
from fractions import Fraction

import mpmath
import pytest
import sympy
from sympy.polys.numberfields.galoisgroups import galois_group

from unrx import exactnum as en
from unrx import families as fam
from unrx.families import CERTIFIED, REFUTED, UNKNOWN
from unrx.localarith import UNRAMIFIED, ramified_quadratic_residue
from unrx.polyring import ModPoly, Poly, discriminant

X = sympy.symbols("x")


def tech1_t_values(n, count, start=1):
    out, t = [], start
    while len(out) < count:
        if math.gcd(t, n * (n - 1)) == 1:
            out.append(t)
        t += 1
    return out


# -------------------------------------------------------------------- build

def test_build_tech1_coefficients():
    inst = fam.build("tech1", 11, 3)
    const = Fraction(11) ** 5 * Fraction(5) ** -11 * 3**10
    assert inst.poly == Poly([const] + [0] * 9 + [-1, 1])
    assert inst.model.is_integral() and inst.model.content() == 1 and inst.model.lc > 0
    assert inst.poly == inst.model * inst.content


def test_build_tech2_coefficients():
    inst = fam.build("tech2", 10, 7)
    const = Fraction(9) ** -5 * Fraction(5) ** 9 * Fraction(7) ** -10
    assert inst.poly == Poly([const] + [0] * 8 + [-1, 1])
    assert inst.branch_points[2] == Fraction(9**9, 10**10)


def test_build_rejections():
    with pytest.raises(fam.BadCongruence):
        fam.build("tech1", 10, 3)
    with pytest.raises(fam.NotCoprime):
        fam.build("tech1", 11, 2)  # gcd(2, 110) = 2
    with pytest.raises(fam.NotCoprime):
        fam.build("tech2", 10, 3)
    assert not fam.admissible("tech1", 11, 5) and fam.admissible("tech1", 11, 7)


def test_worst_lattice():
    assert fam.worst([CERTIFIED, UNKNOWN]) == UNKNOWN
    assert fam.worst([UNKNOWN, REFUTED, CERTIFIED]) == REFUTED
    assert fam.worst([]) == CERTIFIED


# ----------------------------------------------------------------- clause i

@pytest.mark.parametrize("n", [7, 11, 15, 19, 23])
def test_clause_i_reduction_identity_tech1(n):
    for t in tech1_t_values(n, 4):
        inst = fam.build("tech1", n, t)
        R = fam.clause_i_rescaled(inst)
        # R is (n-1)/2)^n f((n-1)/2)^-1 X) exactly
        m = Fraction(n - 1, 2)
        assert R == inst.poly.compose(Poly([0, 1 / m])) * m**n
        for p in en.factorize(n - 1).primes():
            got = R.mod(p)
            if p > 2:
                want = ModPoly(p, [pow(t, n - 1, p)] + [0] * (n - 1) + [1])
            else:
                want = ModPoly(2, [1] + [0] * (n - 2) + [1, 1])
            assert got == want


def test_clause_i_tech1_n11():
    v = fam.verify_clause_i(fam.build("tech1", 11, 3))
    assert v.verdict == CERTIFIED
    assert [e["prime"] for e in v.primes] == ["2", "5"]
    assert all(e["reduction_identity"] for e in v.primes)


def test_clause_i_tech2_n10():
    v = fam.verify_clause_i(fam.build("tech2", 10, 7))
    assert v.verdict == CERTIFIED and [e["prime"] for e in v.primes] == ["2", "5"]
    R = fam.clause_i_rescaled(fam.build("tech2", 10, 7))
    inst = fam.build("tech2", 10, 7)
    c = 9**5 * 7**10
    assert R == inst.poly.compose(Poly([0, 5])) * Fraction(c, 5**9)


# ---------------------------------------------------------------- clause ii

def test_residue_polynomial_discriminant_formula():
    for n in range(7, 32, 4):
        d = int(discriminant(fam.residue_polynomial(n)))
        assert d == (-1) ** ((n + 1) // 2) * 2 * n ** (n - 3) * (n - 1) ** (n - 4)


def test_clause_ii_tech1_n11_matches_oracle():
    for t in tech1_t_values(11, 6):
        inst = fam.build("tech1", 11, t)
        v = fam.verify_clause_ii(inst)
        assert v.verdict == CERTIFIED, v.notes
        d = int(discriminant(inst.model))
        sym = sympy.factorint(abs(d))
        odd = sorted(q for q, e in sym.items() if e % 2 and q not in (2, 5, 11))
        reported = sorted(int(e["prime"]) for e in v.primes if e["disc_multiplicity"] % 2)
        assert reported == odd
        for e in v.primes:
            q = int(e["prime"])
            if e["disc_multiplicity"] % 2:
                assert e["certificate"]["verdict"] == "ramified_tame"
                assert e["certificate"]["inertia_cycle_type"] == [2] + [1] * 9
                assert sympy.jacobi_symbol(5, q) == 1 == e["split_symbol"]
                assert e["condition_i"] and e["frobenius_parity"] == 1


def test_clause_ii_even_multiplicity_not_fatal():
    # disc of the t = 9 model contains 29^2
    inst = fam.build("tech1", 11, 9)
    v = fam.verify_clause_ii(inst)
    entry = next(e for e in v.primes if e["prime"] == "29")
    assert entry["disc_multiplicity"] == 2
    assert entry["verdict"] in (CERTIFIED, UNKNOWN)
    if entry["verdict"] == UNKNOWN:
        assert entry["footnote_even_multiplicity"]
    assert v.verdict == CERTIFIED


def test_clause_ii_budget_exceeded_is_unknown():
    # disc of the t = 47 model has a 28-digit semiprime cofactor
    inst = fam.build("tech1", 11, 47)
    v = fam.verify_clause_ii(inst, rho_budget=1000)
    assert v.verdict == UNKNOWN and not v.primes
    assert any("budget" in note for note in v.notes)
    rep = fam.verify("tech1", 11, 47, rho_budget=1000)
    assert rep.verdict == UNKNOWN and rep.disc_factorization is None


# --------------------------------------------------------------- clause iii

def test_clause_iii_tech1_n11():
    v = fam.verify_clause_iii(fam.build("tech1", 11, 3))
    e = v.primes[0]
    assert v.verdict == CERTIFIED
    assert e["newton_polygon"] == [("-1/2", 10), ("0", 1)]
    assert e["residue_matches"] and e["residue_separable"] and e["residue_degree_odd"]
    assert e["residue_degree"] == 5 and e["inertia_transpositions"] == 5 and e["condition_ii"]


def test_clause_iii_tech2_square_branch():
    v = fam.verify_clause_iii(fam.build("tech2", 10, 7))
    assert v.verdict == CERTIFIED
    assert [e["prime"] for e in v.primes] == ["3"] and v.primes[0]["verdict"] == UNRAMIFIED


def test_clause_iii_tech2_prime_branch():
    v = fam.verify_clause_iii(fam.build("tech2", 14, 3))
    e = v.primes[0]
    assert v.verdict == CERTIFIED and e["half_integral"]
    assert e["inertia_transpositions"] == 7
    for chk in e["quadratic_extensions"]:
        counts = chk["root_counts"]
        assert counts[1] <= 2 and counts[3] <= 2
        assert counts[2] in (0, 14) and counts[4] in (0, 14)


def test_clause_iii_tech2_root_counts_brute_force():
    # count solutions of X^(p+1) = c in F_p and in F_(p^2) = F_p[i]/(i^2 - r) by enumeration
    p = 13
    r = next(a for a in range(2, p) if pow(a, (p - 1) // 2, p) == p - 1)

    def mul(u, w):
        return ((u[0] * w[0] + r * u[1] * w[1]) % p, (u[0] * w[1] + u[1] * w[0]) % p)

    def power(u, e):
        out = (1, 0)
        for _ in range(e):
            out = mul(out, u)
        return out

    inst = fam.build("tech2", 14, 3)
    v = fam.verify_clause_iii(inst)
    nonres = next(a for a in range(2, p) if en.jacobi(a, p) == -1)
    for chk, alpha in zip(v.primes[0]["quadratic_extensions"], (1, nonres)):
        res = ramified_quadratic_residue(inst.poly, p, alpha, inst.t, invert=True).monic()
        assert res.degree == p + 1 and all(c == 0 for c in res.coeffs[1:p + 1])
        c = -res.coeffs[0] % p
        brute1 = sum(1 for x in range(p) if pow(x, p + 1, p) == c)
        brute2 = sum(1 for a in range(p) for b in range(p) if power((a, b), p + 1) == (c, 0))
        assert chk["root_counts"][1] == brute1
        assert chk["root_counts"][2] == brute2


def test_clause_iii_preconditions():
    with pytest.raises(fam.PreconditionUnmet):
        fam.verify_clause_iii(fam.build("tech1", 15, 1))
    with pytest.raises(fam.PreconditionUnmet):
        fam.verify_clause_iii(fam.build("tech2", 22, 1))


# -------------------------------------------------------------- archimedean

def mp_real_roots(poly: Poly) -> int:
    mpmath.mp.dps = 60
    roots = mpmath.polyroots([mpmath.mpf(int(c)) for c in reversed(poly.coeffs)], maxsteps=400, extraprec=400)
    return sum(1 for r in roots if abs(mpmath.im(r)) < mpmath.mpf(10) ** -30)


@pytest.mark.parametrize("t", [1, 3, 7, 13, 97, 1003])
def test_archimedean_tech1_n11(t):
    inst = fam.build("tech1", 11, t)
    r, k, sign = fam.archimedean_check(inst)
    assert r == mp_real_roots(inst.model)
    if t >= 3:
        assert (r, k, sign) == (1, 5, "imaginary")


@pytest.mark.parametrize("t", [1, 7, 11, 101, 1003])
def test_archimedean_tech2_n10(t):
    inst = fam.build("tech2", 10, t)
    r, k, sign = fam.archimedean_check(inst)
    assert r == mp_real_roots(inst.model)
    # 0 real roots only while the constant exceeds the branch value (n-1)^(n-1)/n^n
    assert (r == 0) == (inst.constant > Fraction(9**9, 10**10))


def test_archimedean_toy():
    assert fam.archimedean_check(Poly([-1, 0, 1])) == (2, 0, "real")


# ------------------------------------------------------------------- S_n

def test_certify_sn_examples():
    assert fam.certify_sn(fam.build("tech1", 11, 3).model)["verdict"] == "Certified"
    assert fam.certify_sn(Poly([-1, 0, 0, 0, 0, 1]))["verdict"] == "Inconclusive"
    assert fam.certify_sn(Poly([-1] + [0] * 6 + [1]))["verdict"] == "Inconclusive"


@pytest.mark.parametrize("coeffs", [
    [1, 1, 0, 0, 0, 1],        # x^5 + x + 1 (reducible)
    [-1, -1, 0, 0, 0, 1],      # x^5 - x - 1: S5
    [2, 0, 0, 0, 0, 1],        # x^5 + 2: F20
    [-3, 0, 0, 0, 1, 0, 1],    # sextic
    [1, -3, 0, 1],             # x^3 - 3x + 1: C3
    [-2, 0, 0, 1],             # x^3 - 2: S3
    [1, 1, -4, -4, 1, 1],      # x^5 + x^4 - 4x^3 - 4x^2 + x + 1 (C5 if irreducible)
])
def test_certify_sn_never_false_positive(coeffs):
    f = Poly(coeffs)
    res = fam.certify_sn(f)
    sp = sympy.Poly(list(reversed(coeffs)), X)
    if not sp.is_irreducible:
        assert res["verdict"] == "Inconclusive"
        return
    G, _ = galois_group(sp)
    is_sym = G.order() == math.factorial(sp.degree())
    if res["verdict"] == "Certified":
        assert is_sym
    else:
        assert not is_sym


# ------------------------------------------------------------------ verify

def test_verify_tech1_report_shape():
    rep = fam.verify("tech1", 11, 3)
    d = rep.to_dict()
    assert d["verdict"] == CERTIFIED
    assert [c["clause"] for c in d["clauses"]] == ["i", "ii", "iii"]
    assert d["real_roots"] == 1 and d["quadratic_subfield"] == "imaginary"
    assert d["sn"]["verdict"] == "Certified"


def test_verify_tech2_report():
    rep = fam.verify("tech2", 10, 7)
    assert rep.verdict == CERTIFIED


def test_soundness_sweep_tech1_n11():
    """No non-unramified claim at a prime whose disc multiplicity is 0 or where the oracle sees even valuation only."""
    factored = 0
    for t in tech1_t_values(11, 20):
        inst = fam.build("tech1", 11, t)
        rep = fam.verify("tech1", 11, t)
        if rep.disc_factorization is None:
            assert rep.clauses[1].verdict == UNKNOWN
            continue
        factored += 1
        d = Fraction(discriminant(inst.model))
        for clause in rep.clauses:
            for e in clause.primes:
                cert = e.get("certificate", e)
                q = int(e["prime"])
                v = en.valuation(d, q)
                if cert.get("verdict") == "ramified_tame":
                    assert v % 2 == 1, (t, q, v)
                if cert.get("verdict") == UNRAMIFIED:
                    assert v % 2 == 0, (t, q, v)
        # the set of primes carrying a ramification claim is exactly the odd-multiplicity primes off n(n-1)
        odd = {q for q, e in en.factorize(abs(d.numerator)) if e % 2 and q not in (2, 5, 11)}
        claimed = {int(e["prime"]) for e in rep.clauses[1].primes
                   if e.get("certificate", {}).get("verdict") == "ramified_tame"}
        assert claimed == odd
    assert factored >= 18
