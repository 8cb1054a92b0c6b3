"""Exact real-rootedness certificates via Sturm sequences."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

from .graph import Graph, VertexSet, bits, find_claw
from .gpoly import GraphPolys
from .poly import RatPoly, UniPoly, gcd

ISOLATION_BITS = 20


def _frac_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class SturmCertificate:
    poly: UniPoly
    squarefree_part: RatPoly
    sturm_chain_length: int
    distinct_real_roots: int
    degree_squarefree: int
    all_real: bool
    isolating_intervals: Optional[tuple[tuple[Fraction, Fraction], ...]] = None
    chain: tuple[RatPoly, ...] = field(default=(), repr=False, compare=False)

    def to_dict(self) -> dict:
        out = {
            "poly": str(self.poly),
            "poly_coefficients": list(self.poly.coeffs),
            "squarefree_part": str(self.squarefree_part),
            "sturm_chain_length": self.sturm_chain_length,
            "distinct_real_roots": self.distinct_real_roots,
            "degree_squarefree": self.degree_squarefree,
            "all_real": self.all_real,
            "isolating_intervals": None,
        }
        if self.isolating_intervals is not None:
            out["isolating_intervals"] = [[_frac_text(a), _frac_text(b)]
                                          for a, b in self.isolating_intervals]
        return out


def sturm_chain(p: RatPoly) -> list[RatPoly]:
    chain = [p, p.derivative()]
    while chain[-1]:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _variations(signs) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def variations_at(chain: list[RatPoly], x: Fraction) -> int:
    return _variations(_sign(q(x)) for q in chain)


def _variations_at_infinity(chain: list[RatPoly], positive: bool) -> int:
    signs = []
    for q in chain:
        s = _sign(q.lead)
        if not positive and q.degree % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def squarefree(p: RatPoly) -> RatPoly:
    """``p / gcd(p, p')``, made monic."""
    if p.degree < 1:
        return p.monic()
    return (p // gcd(p, p.derivative())).monic()


def sturm_count(p: UniPoly) -> SturmCertificate:
    """Count distinct real roots of ``p`` and decide real-rootedness.

    ``p`` is real-rooted iff its squarefree part has as many distinct real
    roots as its degree.  Signs at infinity are read off leading coefficients,
    so nothing is evaluated numerically.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no Sturm certificate")
    sf = squarefree(RatPoly.from_uni(p))
    chain = sturm_chain(sf)
    roots = _variations_at_infinity(chain, False) - _variations_at_infinity(chain, True)
    deg = int(sf.degree)
    return SturmCertificate(p, sf, len(chain), roots, deg, roots == deg, None, tuple(chain))


def root_bound(p: RatPoly) -> Fraction:
    """Cauchy bound: every root has absolute value strictly below it."""
    lc = p.lead
    return 1 + max((abs(c / lc) for c in p.coeffs[:-1]), default=Fraction(0))


def _split_point(sf: RatPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """Midpoint of (lo, hi), nudged off any exact root."""
    k = 1
    mid = (lo + hi) / 2
    while sf(mid) == 0:
        k += 1
        mid = lo + (hi - lo) * k / (2 * k - 1)
    return mid


def isolate_roots(cert: SturmCertificate, bits_: int = ISOLATION_BITS) -> SturmCertificate:
    """Attach disjoint rational intervals, one per distinct real root.

    Each interval ``(lo, hi)`` has ``sf(lo) * sf(hi) < 0``, except that an
    exact rational root found on the way is reported as ``(r, r)``.  Widths
    are at most ``2**-bits_`` times the Cauchy bound.
    """
    sf = cert.squarefree_part
    chain = list(cert.chain) or sturm_chain(sf)
    if cert.degree_squarefree < 1 or cert.distinct_real_roots == 0:
        return replace(cert, isolating_intervals=())
    bound = root_bound(sf)
    target = bound / 2**bits_
    out: list[tuple[Fraction, Fraction]] = []

    def count(lo, hi):
        return variations_at(chain, lo) - variations_at(chain, hi)

    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = count(lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append(_refine(sf, lo, hi, target))
            continue
        mid = _split_point(sf, lo, hi)
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    return replace(cert, isolating_intervals=tuple(out))


def _refine(sf: RatPoly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    slo = _sign(sf(lo))
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = _sign(sf(mid))
        if s == 0:
            return mid, mid
        if s == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


@dataclass(frozen=True)
class ClawCertificate:
    claw_free: bool
    witness: Optional[VertexSet]
    cert: Optional[SturmCertificate]
    theorem_holds: Optional[bool]

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "claw_free": self.claw_free,
            "witness": None if self.witness is None else list(bits(self.witness)),
            "cert": None if self.cert is None else self.cert.to_dict(),
            "theorem_holds": self.theorem_holds,
        }


def certify_claw_free(g: Graph, memo: Optional[GraphPolys] = None,
                      intervals: bool = False) -> ClawCertificate:
    """Real-rootedness certificate for ``I(G, x)`` plus the claw test.

    ``theorem_holds`` is only meaningful for claw-free graphs; a False there
    would contradict the real-rootedness theorem and signals a bug.
    """
    engine = memo if memo is not None else GraphPolys(g)
    witness = find_claw(g)
    cert = sturm_count(engine.independence())
    if intervals:
        cert = isolate_roots(cert)
    if witness is None:
        return ClawCertificate(True, None, cert, cert.all_real)
    return ClawCertificate(False, witness, cert, None)
