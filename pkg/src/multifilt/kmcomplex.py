"""Homology lengths of the Kirby-Mehran complex and first local cohomology of the Rees algebra.

All lengths are colength differences lambda(A/B) = colength(B) - colength(A),
with B <= A asserted first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .filtration import add, box_points, diag, geq, scale, sub
from .hilbert import HilbertPoly, delta, hilbert_function
from .ideals import UnsupportedBackendError, quotient_length
from .filtration import ratliff_rush
from .report import TheoremReport


class NotRegularSequenceError(ValueError):
    pass


@dataclass(frozen=True)
class KMHomologyProfile:
    n: tuple
    l: int
    k: int
    lengths: tuple  # lambda(H_0), ..., lambda(H_k)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * v for i, v in enumerate(self.lengths))


def km_homology(F, y, l: int, n, k: int | None = None) -> KMHomologyProfile:
    """lambda(H_i(C.(y^[l], F(n)))) for i = 0..k (k = len(y) by default).

    H_0 = R/(F(n + k l e), y^[l]),  H_k = (F(n + l e) : (y^[l]))/F(n) and, for
    k = 2, H_1 = ((y^[l]) ∩ F(n + 2 l e))/((y^[l]) F(n + l e)).
    """
    ring = F.ring
    y = list(y)
    if k is None:
        k = len(y)
    if k != len(y) or k not in (1, 2):
        raise ValueError("complex length must equal the number of elements, 1 or 2")
    if l < 1:
        raise ValueError("l must be >= 1")
    if not ring.is_regular_sequence(y):
        raise NotRegularSequenceError(f"{[ring.format_monomial(m) for m in y]} is not a regular sequence")
    s = F.s
    yl = ring.ideal([_power(ring, m, l) for m in y])
    le = diag(s, l)
    h0 = (F(add(n, scale(k, le))) + yl).colength()
    top = F(add(n, le)).colon(yl)
    hk = quotient_length(top, F(n))
    if k == 1:
        return KMHomologyProfile(tuple(n), l, k, (h0, hk))
    big = yl.intersect(F(add(n, scale(2, le))))
    h1 = quotient_length(big, yl * F(add(n, le)))
    return KMHomologyProfile(tuple(n), l, k, (h0, h1, hk))


def _power(ring, m, l):
    out = m
    for _ in range(l - 1):
        out = ring.mul(out, m)
    return out


# Huneke analogue ----------------------------------------------------------------


@dataclass(frozen=True)
class HunekeCheck:
    n: tuple
    lhs: int
    quotient: int
    homology: tuple

    @property
    def rhs(self) -> int:
        return self.quotient - sum((-1) ** i * self.homology[i] for i in range(2, len(self.homology)))

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def huneke_identity_check(F, A, P: HilbertPoly, n) -> HunekeCheck:
    """Both sides of Delta^d(P - H)(n) = lambda(F(n+de)/J F(n+(d-1)e)) - sum_{i>=2} (-1)^i lambda(H_i)."""
    d = A.d
    s = F.s
    lhs = delta(lambda m: P(m) - hilbert_function(F, m), d, n)
    quot = quotient_length(F(add(n, diag(s, d))), A.J * F(add(n, diag(s, d - 1))))
    prof = km_homology(F, A.y, 1, n)
    return HunekeCheck(tuple(n), lhs, quot, prof.lengths)


def huneke_report(F, A, P: HilbertPoly, box: int = 4, lo: int = 0) -> TheoremReport:
    rep = TheoremReport("huneke-analogue")
    rep.hypothesis("Cohen-Macaulay ring", F.ring.is_cohen_macaulay)
    rep.hypothesis("certified complete reduction", A.certified, f"window {A.window}")
    rep.hypothesis("y is a regular sequence", F.ring.is_regular_sequence(list(A.y)))
    if rep.verdict != "consistent":
        return rep
    bad = [c.n for c in (huneke_identity_check(F, A, P, n) for n in box_points(F.s, box, lo))
           if not c.holds]
    rep.conclusion(f"identity at every n in [{lo},{box}]^{F.s}", not bad)
    if bad:
        rep.notes.append(f"fails at {bad[:5]}")
    return rep


def euler_characteristic_check(F, y, n) -> bool:
    """Delta^k H(n) equals the alternating sum of homology lengths (l = 1)."""
    prof = km_homology(F, y, 1, n)
    return delta(lambda m: hilbert_function(F, m), prof.k, n) == prof.euler_characteristic


# first local cohomology -------------------------------------------------------


def rees_h1(F, n) -> int:
    """lambda(F̆(n)/F(n)), the length of the degree-n part of H^1 of the Rees algebra."""
    ring = F.ring
    if ring.dimension < 2:
        raise UnsupportedBackendError("H^1 of the Rees algebra is only identified for d >= 2")
    if not ring.is_cohen_macaulay:
        raise UnsupportedBackendError("H^1 of the Rees algebra is only identified for Cohen-Macaulay rings")
    if min(n) < 0:
        raise ValueError("n must be >= 0")
    return quotient_length(ratliff_rush(F, n), F(n))


def h1_vanishing_on_box(F, box: int = 6) -> bool:
    """rees_h1(n) = 0 for every n in [0, box]^s; every point is computed."""
    return all(rees_h1(F, n) == 0 for n in box_points(F.s, box))


def good_reduction_intersection(F, A, box: int = 6, good_box: int = 6, margin: int = 3) -> TheoremReport:
    """(y1) ∩ F(n) = y1 F(n - e) and lambda(H_2) = 0 on [e, box]^s under the stated hypotheses."""
    from .reduction import is_good
    rep = TheoremReport("good-reduction-intersection")
    rep.hypothesis("H^1 of the Rees algebra vanishes", h1_vanishing_on_box(F, box), f"[0,{box}]^{F.s}")
    rep.hypothesis("complete reduction is good", A.certified and is_good(A, F, good_box, margin),
                   f"[{good_box},{good_box + margin}]^{F.s}")
    if rep.verdict != "consistent":
        return rep
    ring = F.ring
    e = diag(F.s)
    y1 = ring.principal(A.y[0])
    pts = [n for n in box_points(F.s, box) if geq(n, e)]
    rep.conclusion(f"(y1) ∩ F(n) = y1 F(n-e) on [1,{box}]^{F.s}",
                   all(y1.intersect(F(n)) == F(sub(n, e)).times(A.y[0]) for n in pts))
    if A.d == 2:
        rep.conclusion(f"lambda(H_2) = 0 on [0,{box}]^{F.s}",
                       all(km_homology(F, A.y, 1, n).lengths[2] == 0 for n in box_points(F.s, box)))
    return rep
