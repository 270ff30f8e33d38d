"""Critical data of rational functions and the seed search for S_n fibers.

For f = g/h of degree n with 2n-2 distinct rational critical values the
discriminant of S*g - T*h factors as an integer times the linear forms
beta_i*T - alpha_i*S, one per critical value gamma_i = alpha_i/beta_i. The
functions below find those forms, the fixed prime divisors of the
discriminant, a p-adic neighbourhood of a seed on which every fixed prime is
unramified, and the quadratic-residue data attached to each form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from . import exactnum as en
from .localarith import UNRAMIFIED, Perturbation, certify_unramified
from .polyring import (
    Poly,
    discriminant,
    formal_discriminant,
    normalize_content,
    poly_gcd,
    quartic_galois_group,
    rational_roots,
)

INFINITY = "infinity"


class NotGeneric(ValueError):
    pass


class SearchExhausted(RuntimeError):
    def __init__(self, prime: int, transcript: list):
        super().__init__(f"no unramified seed found at p = {prime}")
        self.prime = prime
        self.transcript = transcript


class DependentForms(ValueError):
    pass


class NotCoprime(ValueError):
    def __init__(self, index: int, prime: int):
        super().__init__(f"D_{index} shares the prime {prime} with 2*prod(Delta_j)")
        self.index = index
        self.prime = prime


@dataclass(frozen=True)
class RationalFunctionQ:
    g: Poly
    h: Poly

    def __post_init__(self):
        if self.h.is_zero():
            raise ValueError("denominator is zero")
        if poly_gcd(self.g, self.h).degree > 0:
            raise ValueError("numerator and denominator are not coprime")

    @property
    def n(self) -> int:
        return max(self.g.degree, self.h.degree)

    def fiber(self, t: int, s: int) -> Poly:
        """s*g - t*h, whose roots are the preimages of t/s."""
        return self.g * s - self.h * t


@dataclass(frozen=True)
class CriticalPoint:
    alpha: int
    beta: int
    eta: Fraction | str
    q: Poly
    delta: int

    @property
    def gamma(self) -> Fraction | str:
        return INFINITY if self.beta == 0 else Fraction(self.alpha, self.beta)

    def to_dict(self) -> dict:
        return {
            "gamma": str(self.gamma),
            "eta": str(self.eta),
            "q": [str(c) for c in self.q.coeffs],
            "delta": str(self.delta),
            "delta_factorization": [[str(p), e] for p, e in en.factorize(self.delta)] if abs(self.delta) > 1 else [],
        }


@dataclass(frozen=True)
class AffineForm:
    """u*T + v*S + w, with ``nu`` the constant divided out of the original."""

    u: int
    v: int
    w: int = 0
    nu: int = 1

    def __call__(self, t: int, s: int) -> int:
        return self.u * t + self.v * s + self.w

    def __str__(self) -> str:
        return f"{self.u}*T + {self.v}*S + {self.w}"

    def to_dict(self) -> dict:
        return {"u": str(self.u), "v": str(self.v), "w": str(self.w), "nu": str(self.nu)}


@dataclass
class SeedReport:
    fixed_primes: list[int]
    local: dict[int, dict]
    base: tuple[int, int]
    modulus: int
    t0: int
    s0: int
    records: list[dict] = field(default_factory=list)
    twisting: dict = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)
    verdict: bool = False

    def to_dict(self) -> dict:
        return {
            "fixed_primes": [str(p) for p in self.fixed_primes],
            "local": {str(p): v for p, v in self.local.items()},
            "base": [str(self.base[0]), str(self.base[1])],
            "modulus": str(self.modulus),
            "t0": str(self.t0),
            "s0": str(self.s0),
            "records": self.records,
            "twisting_precondition": self.twisting,
            "errors": self.errors,
            "verdict": self.verdict,
        }


# ------------------------------------------------------------- critical data


def _gamma_pair(value: Fraction | str) -> tuple[int, int]:
    if value == INFINITY:
        return 1, 0
    value = Fraction(value)
    return value.numerator, value.denominator


def _value_at(f: RationalFunctionQ, eta: Fraction | str) -> Fraction | str:
    if eta == INFINITY:
        dg, dh = f.g.degree, f.h.degree
        if dg > dh:
            return INFINITY
        if dg < dh:
            return Fraction(0)
        return Fraction(f.g.lc) / Fraction(f.h.lc)
    hv = f.h(eta)
    return INFINITY if hv == 0 else Fraction(f.g(eta)) / Fraction(hv)


def critical_data(f: RationalFunctionQ) -> list[CriticalPoint]:
    """All critical points, sorted by eta with infinity last.

    Requires the generic shape: 2n-2 simple rational critical points in
    P^1 with pairwise distinct values. Raises NotGeneric otherwise.
    """
    n = f.n
    if n < 3:
        raise NotGeneric("degree below 3 leaves no residue polynomial")
    W = f.g.derivative() * f.h - f.g * f.h.derivative()
    if W.is_zero():
        raise NotGeneric("constant function")
    at_infinity = 2 * n - 2 - W.degree
    if at_infinity > 1:
        raise NotGeneric(f"critical point at infinity of multiplicity {at_infinity}")
    roots = rational_roots(W)
    if len(roots) + at_infinity != 2 * n - 2:
        raise NotGeneric(f"only {len(roots) + at_infinity} of {2 * n - 2} critical points are rational and simple")
    etas: list[Fraction | str] = sorted(roots) + ([INFINITY] if at_infinity else [])
    points = []
    for eta in etas:
        gamma = _value_at(f, eta)
        a, b = _gamma_pair(gamma)
        P = f.fiber(a, b)
        if eta == INFINITY:
            if P.degree != n - 2:
                raise NotGeneric("fiber over the value at infinity is not doubly ramified there")
            q = P
        else:
            lin2 = Poly([-eta, 1]) ** 2
            q, r = divmod(P, lin2)
            if not r.is_zero() or q.degree != n - 2:
                raise NotGeneric(f"fiber over {gamma} is not doubly ramified at {eta}")
            if q(eta) == 0:
                raise NotGeneric(f"critical point {eta} has multiplicity above 2")
        q, _ = normalize_content(q)
        dq = discriminant(q) if q.degree >= 1 else 1
        if dq == 0:
            raise NotGeneric(f"residue polynomial over {gamma} is not separable")
        points.append(CriticalPoint(a, b, eta, q, en.squarefree_part_rational(Fraction(dq))))
    gammas = [(p.alpha, p.beta) for p in points]
    if len(set(gammas)) != len(gammas):
        raise NotGeneric("critical values are not pairwise distinct")
    return points


def residue_groups(points: list[CriticalPoint]) -> list[str]:
    """Galois group of each residue polynomial q_i (quartic case only)."""
    return [quartic_galois_group(p.q) if p.q.degree == 4 else "n/a" for p in points]


# --------------------------------------------------------- discriminant forms


def disc_at(f: RationalFunctionQ, t: int, s: int) -> int:
    """Formal discriminant of s*g - t*h at degree n (roots at infinity count)."""
    return int(formal_discriminant(f.fiber(t, s), f.n))


def homogenized_discriminant(f: RationalFunctionQ, points: Optional[list[CriticalPoint]] = None,
                             samples: int = 6) -> tuple[int, list[AffineForm]]:
    points = points if points is not None else critical_data(f)
    forms = [AffineForm(p.beta, -p.alpha) for p in points]
    prod = lambda t, s: math.prod(L(t, s) for L in forms)  # noqa: E731
    t, s = 1, 1
    while prod(t, s) == 0:
        t += 1
    value = disc_at(f, t, s)
    content, rem = divmod(value, prod(t, s))
    if rem:
        raise AssertionError("discriminant is not divisible by the product of the forms")
    for k in range(samples):
        t, s = 3 * k + 2, 2 * k - 1
        if disc_at(f, t, s) != content * prod(t, s):
            raise AssertionError(f"discriminant identity fails at ({t}, {s})")
    return content, forms


def fixed_prime_divisors(content: int, forms: list[AffineForm]) -> list[int]:
    """Primes dividing content * prod(forms) at every integer point."""
    if not forms:
        raise ValueError("need at least one form")
    candidates = set(en.factorize(content).primes()) if abs(content) > 1 else set()
    for A, B in combinations(forms, 2):
        r = A.u * B.v - A.v * B.u
        if abs(r) > 1:
            candidates |= set(en.factorize(r).primes())
    # the forms can cover all p+1 points of P^1(F_p) only when p < #forms
    candidates |= set(en.small_primes(len(forms) + 1))
    fixed = []
    for p in sorted(candidates):
        if content % p == 0 or all(
            math.prod(L(t, s) for L in forms) % p == 0 for t in range(p) for s in range(p)
        ):
            fixed.append(p)
    return fixed


# -------------------------------------------------------------- seed search


def _local_family(f: RationalFunctionQ, t: int, s: int, p: int, e: int) -> tuple[Poly, Poly]:
    """Fiber family over the p-adic ball around t/s (or s/t) of radius p^-e."""
    pe = p**e
    if s % p:
        r = t * pow(s, -1, pe) % pe
        return f.fiber(r, 1), -f.h
    r = s * pow(t, -1, pe) % pe
    return f.g * r - f.h, f.g


def certify_class(f, forms, t, s, p, e, depth=8, seed=0) -> dict:
    """Is every fiber over (t + p^e*k)/(s + p^e*l) unramified at p?"""
    record: dict = {"prime": str(p), "t": str(t), "s": str(s), "exponent": e}
    vals = [L(t, s) for L in forms]
    if any(v == 0 for v in vals):
        record.update(ok=False, reason="seed is a critical value")
        return record
    vmax = max(en.valuation(v, p) for v in vals)
    record["max_form_valuation"] = vmax
    if vmax >= e:
        record.update(ok=False, reason=f"form valuations not constant (need exponent > {vmax})")
        return record
    base, direction = _local_family(f, t, s, p, e)
    cert = certify_unramified(base, p, depth, Perturbation(direction, e), disc_valuation_constant=True, seed=seed)
    record["certificate"] = cert.to_dict()
    record["ok"] = cert.verdict == UNRAMIFIED
    return record


def unramified_seed_search(
    f: RationalFunctionQ,
    fixed: list[int],
    forms: list[AffineForm],
    t_bound: int = 2000,
    max_exponent: int = 12,
    depth: int = 8,
    base: Optional[tuple[int, int]] = None,
    modulus: Optional[int] = None,
    seed: int = 0,
) -> tuple[tuple[int, int], int, dict[int, dict]]:
    """Find (t0, s0) and N = prod p^e_p with all fibers over the ball unramified on ``fixed``.

    With ``base`` and ``modulus`` given the pair is only checked (accept
    mode); otherwise t = 0, 1, 2, ... (s = 1) is scanned per prime and the
    first t certifying at the smallest exponent wins. Results are combined
    by CRT.
    """
    local: dict[int, dict] = {}
    if base is not None and modulus is not None:
        for p in fixed:
            e = en.valuation(modulus, p) if modulus % p == 0 else 0
            rec = certify_class(f, forms, base[0], base[1], p, e, depth, seed) if e else {
                "prime": str(p), "ok": False, "reason": "modulus prime to p"}
            local[p] = rec
            if not rec["ok"]:
                raise SearchExhausted(p, [rec])
        return base, modulus, local
    congruences = []
    for p in fixed:
        found = None
        tried = []
        for e in range(1, max_exponent + 1):
            for t in range(min(t_bound, p**e)):
                rec = certify_class(f, forms, t, 1, p, e, depth, seed)
                if rec["ok"]:
                    found = rec
                    break
                if len(tried) < 20:
                    tried.append({k: v for k, v in rec.items() if k != "certificate"})
            if found:
                break
        if not found:
            raise SearchExhausted(p, tried)
        local[p] = found
        congruences.append((int(found["t"]), p ** found["exponent"]))
    t0, N = en.crt(congruences) if congruences else (0, 1)
    return (t0, 1), N, local


# ------------------------------------------------------- transformed forms


def transformed_forms(forms: list[AffineForm], N: int, t0: int, s0: int) -> list[AffineForm]:
    """lambda_i(N*T + t0, N*S + s0) divided by its constant divisor nu_i."""
    if N == 0:
        raise ValueError("N must be nonzero")
    out = []
    for L in forms:
        u, v, w = L.u * N, L.v * N, L(t0, s0)
        nu = math.gcd(math.gcd(u, v), w) or 1
        out.append(AffineForm(u // nu, v // nu, w // nu, nu))
    for A, B in combinations(out, 2):
        if A.u * B.v - A.v * B.u == 0 and A.u * B.w - A.w * B.u == 0 and A.v * B.w - A.w * B.v == 0:
            raise DependentForms(f"{A} and {B} are proportional")
    return out


# -------------------------------------------------------------- parity data


def reciprocity_product(delta: int, D: int) -> tuple[int, list[tuple[int, int]]]:
    """(Delta/D) as sign * prod (D/p) over odd p | Delta, via quadratic reciprocity.

    Returns (value, [(p, (D/p)) ...]); D must be odd, positive, coprime to Delta.
    """
    fac = en.factorize(delta)
    sign = 1
    if fac.sign < 0 and D % 4 == 3:
        sign = -sign
    symbols = []
    for p, e in fac:
        if e % 2 == 0:
            continue
        if p == 2:
            if D % 8 in (3, 5):
                sign = -sign
            continue
        s = en.jacobi(D, p)
        symbols.append((p, s))
        if (p % 4 == 3) and (D % 4 == 3):
            sign = -sign
        sign *= s
    return sign, symbols


def parity_check(
    tilde: list[AffineForm],
    deltas: list[int],
    t0: int,
    s0: int,
    fixed: list[int],
) -> list[dict]:
    """Per form: D_i, coprimality, and the Jacobi symbol (Delta_i / D_i)."""
    bad = 2 * math.prod(abs(d) for d in deltas)
    records = []
    for i, (L, delta) in enumerate(zip(tilde, deltas), start=1):
        value = L(t0, s0)
        D = en.prime_to_part(value, fixed)
        g = math.gcd(D, bad)
        if g != 1:
            p = min(en.factorize(g).primes())
            raise NotCoprime(i, p)
        direct = en.jacobi(delta, D)
        via, symbols = reciprocity_product(delta, D)
        if direct != via:
            raise AssertionError(f"reciprocity mismatch at i = {i}")
        records.append(
            {
                "index": i,
                "form": L.to_dict(),
                "value": str(value),
                "sign": 1 if value > 0 else -1,
                "D": str(D),
                "delta": str(delta),
                "legendre": [[str(p), s] for p, s in symbols],
                "product": direct,
                "passes": direct == 1,
            }
        )
    return records


def prime_witness_search(
    D: int,
    delta: int,
    modulus: int,
    bound: int = 10**8,
    avoid: int = 1,
    max_candidates: int = 10**6,
) -> Optional[int]:
    """Least prime l <= bound with l = D mod modulus, gcd(l, avoid) = 1 and (delta/l) = 1."""
    r = D % modulus
    if math.gcd(r, modulus) != 1:
        return None
    ell = r if r > 1 else r + modulus
    checked = 0
    while ell <= bound and checked < max_candidates:
        if math.gcd(ell, avoid) == 1 and en.is_prime(ell) and en.jacobi(delta, ell) == 1:
            return ell
        ell += modulus
        checked += 1
    return None


def twisting_precondition(tilde: list[AffineForm]) -> dict:
    """Forms that are constantly 3 mod 4 force a ramified prime p = 3 mod 4."""
    idx = [i for i, L in enumerate(tilde, start=1) if L.u % 4 == 0 and L.v % 4 == 0 and L.w % 4 == 3]
    return {"forms_constant_3_mod_4": idx, "holds": bool(idx)}


# ------------------------------------------------------------ orchestration


def verify_seed(
    f: RationalFunctionQ,
    t0: int,
    s0: int,
    base: Optional[tuple[int, int]] = None,
    modulus: Optional[int] = None,
    depth: int = 8,
    witness_bound: Optional[int] = None,
    seed: int = 0,
) -> SeedReport:
    if math.gcd(t0, s0) != 1:
        raise ValueError("t0 and s0 must be coprime")
    points = critical_data(f)
    content, forms = homogenized_discriminant(f, points)
    fixed = fixed_prime_divisors(content, forms)
    report = SeedReport(fixed, {}, base or (0, 1), modulus or 1, t0, s0)
    try:
        base, N, local = unramified_seed_search(f, fixed, forms, depth=depth, base=base, modulus=modulus, seed=seed)
    except SearchExhausted as exc:
        report.errors.append(str(exc))
        report.local = {exc.prime: {"transcript": exc.transcript}}
        return report
    report.base, report.modulus, report.local = base, N, local
    T, S = N * t0 + base[0], N * s0 + base[1]
    if math.gcd(T, S) != 1:
        report.errors.append("fiber coordinates are not coprime")
        return report
    tilde = transformed_forms(forms, N, *base)
    deltas = [p.delta for p in points]
    try:
        records = parity_check(tilde, deltas, t0, s0, fixed)
    except NotCoprime as exc:
        report.errors.append(str(exc))
        return report
    for rec, L, orig in zip(records, tilde, forms):
        rec["gamma"] = str(points[rec["index"] - 1].gamma)
        rec["fiber_sign"] = 1 if orig(T, S) > 0 else -1
        if witness_bound is not None:
            mod = 4 * math.prod(abs(d) for d in deltas)
            ell = prime_witness_search(int(rec["D"]), int(rec["delta"]), mod, witness_bound, avoid=mod)
            rec["witness"] = str(ell) if ell is not None else None
    report.records = records
    report.twisting = twisting_precondition(tilde)
    report.verdict = all(r["passes"] for r in records) and all(v["ok"] for v in local.values())
    return report
