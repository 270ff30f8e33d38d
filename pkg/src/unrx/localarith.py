"""Local (p-adic) analysis of splitting fields of integer polynomials.

Certificates are sound but incomplete: every verdict other than ``unknown``
is backed by a transcript of mod-p factorizations that a reader can replay.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactnum import jacobi, lcm, valuation
from .polyring import (
    ModPoly,
    Poly,
    discriminant,
    factor_mod_p,
    lift_symmetric,
    normalize_content,
)

UNRAMIFIED = "unramified"
RAMIFIED_TAME = "ramified_tame"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of the points (i, v_p(a_i)).

    ``zero_multiplicity`` is the exact power of X that was factored out
    before building the hull.
    """

    prime: int
    vertices: tuple[tuple[int, Fraction], ...]
    zero_multiplicity: int = 0

    @property
    def segments(self) -> tuple[tuple[Fraction, int], ...]:
        out = []
        for (i0, v0), (i1, v1) in zip(self.vertices, self.vertices[1:]):
            out.append((Fraction(v1 - v0, i1 - i0), i1 - i0))
        return tuple(out)

    def root_valuations(self) -> list[tuple[Fraction, int]]:
        """(valuation, count) of the nonzero roots, one entry per segment."""
        return [(-s, n) for s, n in self.segments]


def newton_polygon(f: Poly, p: int) -> NewtonPolygon:
    k = 0
    while f[k] == 0:
        k += 1
    pts = [(i - k, Fraction(valuation(Fraction(c), p))) for i, c in enumerate(f.coeffs) if i >= k and c != 0]
    hull: list[tuple[int, Fraction]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly below the chord
            if (y1 - y0) * (pt[0] - x0) >= (pt[1] - y0) * (x1 - x0):
                hull.pop()
            else:
                break
        hull.append(pt)
    return NewtonPolygon(p, tuple(hull), k)


@dataclass
class LocalCertificate:
    """Verdict on ramification at one prime, with the evidence behind it."""

    prime: int
    verdict: str
    cycle_type: Optional[tuple[int, ...]] = None
    frobenius: Optional[dict] = None
    disc_valuation: Optional[int] = None
    transcript: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {"prime": str(self.prime), "verdict": self.verdict, "transcript": self.transcript}
        if self.cycle_type is not None:
            out["inertia_cycle_type"] = list(self.cycle_type)
        if self.frobenius is not None:
            out["frobenius"] = self.frobenius
        if self.disc_valuation is not None:
            out["disc_valuation"] = self.disc_valuation
        return out


def render_factorization(facs: list[tuple[ModPoly, int]]) -> str:
    parts = []
    for g, m in sorted(facs, key=lambda gm: (gm[0].degree, gm[1], abs(lift_symmetric(gm[0].coeffs[0], gm[0].p)))):
        body = str(Poly(g.symmetric_coeffs()))
        if g.degree > 0 and len([c for c in g.coeffs if c]) > 1:
            body = f"({body})"
        parts.append(body + (f"^{m}" if m > 1 else ""))
    return "*".join(parts) if parts else "1"


def _pattern_entry(facs) -> list[list]:
    return [[g.symmetric_coeffs(), m] for g, m in facs]


class _Unstable(Exception):
    pass


class _Unresolved(Exception):
    pass


@dataclass(frozen=True)
class Perturbation:
    """The one-parameter family f + p**exponent * k * direction, k any p-adic integer."""

    direction: Poly
    exponent: int


@dataclass
class _Deferred:
    poly: Poly
    tail: Optional[Poly]
    root: int
    depth: int
    label: str


def _content_val(G: Poly, p: int) -> Optional[int]:
    vals = [valuation(c, p) for c in G.coeffs if c != 0]
    return min(vals) if vals else None


def _strip(G: Poly, tail: Optional[Poly], p: int) -> tuple[Poly, Optional[Poly], int]:
    j = _content_val(G, p)
    if tail is not None:
        jt = _content_val(tail, p)
        if jt is not None and jt <= j:
            raise _Unstable(f"perturbation reaches the reduction (valuation {jt} <= content {j})")
        tail = Poly(c // p**j for c in tail.coeffs)
    return Poly(c // p**j for c in G.coeffs), tail, j


def _expand(G, tail, p, depth, label, top, transcript, deferred, rng, expected=None):
    G, tail, j = _strip(G, tail, p)
    reduced = G.mod(p)
    unit, facs = factor_mod_p(reduced, rng)
    entry = {
        "level": label,
        "content_stripped": j,
        "reduction": render_factorization(facs),
        "pattern": _pattern_entry(facs),
        "degree": reduced.degree,
    }
    transcript.append(entry)
    if expected is not None and reduced.degree != expected:
        raise _Unresolved(f"residue disc at {label} holds {reduced.degree} roots, expected {expected}")
    if top:
        drop = G.degree - reduced.degree
        entry["roots_at_infinity"] = drop
        if drop >= 2:
            n = max(G.degree, tail.degree if tail is not None else 0)
            R = G.reverse(n)
            Rt = tail.reverse(n) if tail is not None else None
            _handle_cluster(R, Rt, 0, drop, p, depth, f"{label}|X->1/X", transcript, deferred, rng)
    for g, m in facs:
        if m == 1:
            continue
        if g.degree > 1:
            raise _Unresolved(f"repeated factor of degree {g.degree} at {label}")
        c = lift_symmetric(-g.coeffs[0], p)
        _handle_cluster(G, tail, c, m, p, depth, label, transcript, deferred, rng)


def _substitute(G, tail, c, p):
    shift = Poly([c, p])
    return G.compose(shift), (tail.compose(shift) if tail is not None else None)


def _handle_cluster(G, tail, c, size, p, depth, label, transcript, deferred, rng):
    if size == 2 and p != 2:
        deferred.append(_Deferred(G, tail, c, depth, label))
        return
    if depth <= 0:
        raise _Unresolved(f"cluster of {size} roots near {c} at {label} with no depth left")
    sub, sub_tail = _substitute(G, tail, c, p)
    _expand(sub, sub_tail, p, depth - 1, f"{label}|X={c}+{p}Y", False, transcript, deferred, rng, expected=size)


def certify_unramified(
    f: Poly,
    p: int,
    depth: int = 3,
    perturbation: Optional[Perturbation] = None,
    disc_valuation_constant: bool = False,
    seed: int = 0,
    split_budget: int = 2,
) -> LocalCertificate:
    """Try to certify that the splitting field of f is unramified at p.

    Repeated linear factors mod p are resolved by substituting X = c + pY and
    reducing again, up to ``depth`` substitutions. A single leftover double
    root at odd p is decided by the parity of v_p(disc f).

    With a ``perturbation`` the certificate covers the whole family
    f + p^e*k*P: every reduction in the transcript must be independent of k.
    The discriminant valuation is then taken as constant only when
    v_p(disc f) < e or the caller vouches for it via
    ``disc_valuation_constant``. If k leaks into a reduction, the family is
    split into its p subfamilies (at most ``split_budget`` times in a row)
    and each is certified separately.
    """
    rng = random.Random(seed)
    F, content = normalize_content(f)
    tail = None
    if perturbation is not None:
        scaled = perturbation.direction * (Fraction(p) ** perturbation.exponent / content)
        if not scaled.is_integral():
            raise ValueError("perturbation must be integral relative to the content of f")
        tail = scaled
    transcript: list[dict] = []
    deferred: list[_Deferred] = []
    cert = LocalCertificate(p, UNKNOWN, transcript=transcript)
    try:
        _expand(F, tail, p, depth, "X", True, transcript, deferred, rng)
        while len(deferred) > 1 and all(d.depth > 0 for d in deferred):
            pending, deferred[:] = deferred[:], []
            for d in pending:
                sub, sub_tail = _substitute(d.poly, d.tail, d.root, p)
                _expand(sub, sub_tail, p, d.depth - 1, f"{d.label}|X={d.root}+{p}Y", False, transcript, deferred, rng, expected=2)
        if len(deferred) > 1:
            raise _Unresolved(f"{len(deferred)} independent double roots")
    except _Unstable as exc:
        transcript.append({"note": f"not stable: {exc}"})
        if split_budget <= 0:
            return cert
        P, e = perturbation.direction, perturbation.exponent
        parts = []
        for r in range(p):
            sub = certify_unramified(
                f + P * (r * p**e), p, depth, Perturbation(P, e + 1),
                disc_valuation_constant, seed, split_budget - 1,
            )
            parts.append({"class": f"k = {r} mod {p}", "verdict": sub.verdict, "transcript": sub.transcript})
            if sub.verdict != UNRAMIFIED:
                transcript.append({"split": parts})
                return cert
        transcript.append({"split": parts})
        cert.verdict = UNRAMIFIED
        return cert
    except _Unresolved as exc:
        transcript.append({"note": f"unresolved: {exc}"})
        return cert

    v = valuation(Fraction(discriminant(F)), p) if F.degree >= 2 else 0
    cert.disc_valuation = v
    if deferred and perturbation is not None and not disc_valuation_constant:
        e = perturbation.exponent - valuation(content, p)
        if v >= e:
            transcript.append({"note": f"disc valuation {v} not constant on the family (needs exponent > {v})"})
            return cert
    if deferred:
        d = deferred[0]
        transcript.append({"level": d.label, "double_root": d.root, "disc_valuation": v, "disc_valuation_even": v % 2 == 0})
        if v % 2 == 0:
            cert.verdict = UNRAMIFIED
        else:
            cert.verdict = RAMIFIED_TAME
            cert.cycle_type = (2,) + (1,) * (F.degree - 2)
        return cert
    if v % 2:
        raise AssertionError(f"unramified certificate at {p} contradicts odd disc valuation {v}")
    cert.verdict = UNRAMIFIED
    return cert


def tame_inertia_cycle_type(f: Poly, q: int, seed: int = 0) -> LocalCertificate:
    """Certify transposition inertia at an odd prime q not dividing lc(f).

    Requires exactly one double linear factor mod q, everything else simple,
    and odd v_q(disc f); the two roots then form a ramified quadratic factor
    over Q_q while the cofactor stays unramified.
    """
    F = f.primitive()
    if q == 2 or F.lc % q == 0:
        raise ValueError("tame_inertia_cycle_type needs an odd prime not dividing lc")
    _, facs = factor_mod_p(F.mod(q), seed)
    transcript = [{"level": "X", "reduction": render_factorization(facs), "pattern": _pattern_entry(facs)}]
    cert = LocalCertificate(q, UNKNOWN, transcript=transcript)
    repeated = [(g, m) for g, m in facs if m > 1]
    if not repeated:
        cert.verdict = UNRAMIFIED
        cert.disc_valuation = 0
        return cert
    if len(repeated) != 1 or repeated[0][1] != 2 or repeated[0][0].degree != 1:
        transcript.append({"note": "reduction is not a single double root"})
        return cert
    v = valuation(Fraction(discriminant(F)), q)
    cert.disc_valuation = v
    if v % 2 == 0:
        transcript.append({"note": f"disc valuation {v} is even; no claim"})
        return cert
    cofactor = [(g, m) for g, m in facs if m == 1]
    degrees = sorted((g.degree for g, _ in cofactor), reverse=True)
    product = ModPoly(q, [1])
    for g, _ in cofactor:
        product = product * g
    moved = sum(d - 1 for d in degrees)
    cof_disc = Fraction(discriminant(product.to_poly())) if product.degree >= 1 else Fraction(1)
    cert.verdict = RAMIFIED_TAME
    cert.cycle_type = (2,) + (1,) * (F.degree - 2)
    cert.frobenius = {
        "cofactor_cycle_type": degrees,
        "parity": 1 if moved % 2 == 0 else -1,
        "cofactor_disc_symbol": jacobi(cof_disc.numerator * cof_disc.denominator, q),
    }
    return cert


def residue_degree_at_n(p: int) -> int:
    """lcm of the degrees of the irreducible factors of X^(p-1) - 2^((p+1)/2) over F_p."""
    if p % 4 != 3:
        raise ValueError("needs a prime p = 3 mod 4")
    coeffs = [0] * p
    coeffs[0] = -pow(2, (p + 1) // 2, p)
    coeffs[p - 1] = 1
    _, facs = factor_mod_p(ModPoly(p, coeffs))
    return lcm(*(g.degree for g, _ in facs))


def residue_degree_odd_at_n(p: int) -> bool:
    return residue_degree_at_n(p) % 2 == 1


def frobenius_parity(delta: int, q: int) -> int:
    """Sign of Frobenius at q on a residue extension of discriminant class delta."""
    if q == 2 or q < 3:
        raise ValueError("frobenius_parity needs an odd prime")
    return jacobi(delta, q)


def ramified_quadratic_residue(f: Poly, p: int, alpha: int, scale=1, invert: bool = False) -> ModPoly:
    """Residue polynomial of f(pi*scale*X) over Q_p(pi), pi^2 = alpha*p.

    With ``invert`` the substitution is X -> 1/(pi*scale*X) (times the
    matching power of X). The lowest pi-adic valuation among the terms is
    divided out and the surviving terms are reduced mod p.
    """
    if invert:
        f = f.reverse()
    ap = Fraction(alpha * p)
    terms = []
    for k, a in enumerate(f.coeffs):
        if a == 0:
            continue
        rational = Fraction(a) * Fraction(scale) ** k * ap ** (k // 2)
        terms.append((k, rational, 2 * valuation(rational, p) + k % 2))
    m = min(v for _, _, v in terms)
    out = [0] * (f.degree + 1)
    for k, rational, v in terms:
        if v != m:
            continue
        unit = rational / ap ** ((m - k % 2) // 2)
        out[k] = unit.numerator * pow(unit.denominator, -1, p) % p
    return ModPoly(p, out)
