"""Postulation regions and verifiers for the reduction-vector correspondence theorems."""

from __future__ import annotations

import itertools

from .filtration import add, diag
from .hilbert import HilbertPoly, fit_polynomial, hilbert_function
from .kmcomplex import h1_vanishing_on_box
from .reduction import (complete_reduction_number, is_good, joint_reduction_number_zero,
                        reduction_number_from_region, reduction_vectors, search_joint_reductions,
                        search_monomial_reductions, single_graded_reduction_number)
from .region import Region, clip_below, region_from_predicate, shift_corners
from .report import TheoremReport


def postulation_region(F, P: HilbertPoly, box: int = 6, margin: int = 3) -> Region:
    """Region of n with H(m) = P(m) for every m in [n, box + margin]^s."""
    return region_from_predicate(lambda n: P(n) == hilbert_function(F, n), F.s, box, margin)


def negative_postulation_points(F, P: HilbertPoly, box: int = 6, margin: int = 3) -> list:
    """Windowed postulation vectors with a negative coordinate.

    Any such vector lies below one with a single coordinate equal to -1 and
    the rest in N, so it suffices to search [-1, box]^s.
    """
    s = F.s
    shift = diag(s, -1)
    R = region_from_predicate(lambda m: P(add(m, shift)) == hilbert_function(F, add(m, shift)),
                              s, box + 1, margin - 1 if margin > 0 else 0)
    return [c for c in shift_corners(R.corners, shift) if min(c) < 0]


def _default_reductions(F, box, margin, limit):
    return list(itertools.islice(search_monomial_reductions(F, box=box, margin=margin), limit))


# dimension one ----------------------------------------------------------------


def verify_dim1_correspondence(F, A, box: int = 6, margin: int = 3, P: HilbertPoly | None = None,
                               others=None, max_others: int = 6) -> TheoremReport:
    """Postulation vectors equal reduction vectors, and neither depends on A."""
    rep = TheoremReport("dim1-correspondence")
    rep.hypothesis("dimension one", F.ring.dimension == 1)
    rep.hypothesis("Cohen-Macaulay ring", F.ring.is_cohen_macaulay)
    rep.hypothesis("certified complete reduction", A is not None and A.certified)
    if P is None:
        P = fit_polynomial(F, 1)
    post = postulation_region(F, P, box, margin)
    red = reduction_vectors(A, F, box, margin) if A is not None and A.certified else None
    rep.notes.append(f"P(F): {post.describe()}")
    if red is not None:
        rep.notes.append(f"R_A(F): {red.describe()}")
    if rep.verdict != "consistent":
        if red is not None and red.corners != post.corners:
            rep.notes.append("regions differ")
        return rep
    rep.conclusion("P(F) = R_A(F) on the box", post.corners == red.corners)
    rep.conclusion("no postulation vector outside N^s", not negative_postulation_points(F, P, box, margin))
    if others is None:
        others = _default_reductions(F, box, margin, max_others)
    r = reduction_number_from_region(red)
    same_regions = all(reduction_vectors(B, F, box, margin).corners == red.corners for B in others)
    same_numbers = all(complete_reduction_number(B, F, box, margin) == r for B in others)
    rep.conclusion(f"R_A(F) independent of A ({len(others)} reductions searched)", same_regions)
    rep.conclusion("r_A(F) independent of A", same_numbers)
    return rep


# dimension two ----------------------------------------------------------------


def bijection_sets(F, A, P, box, margin):
    """({n + e : n in P(F)} corners, corners of R_A(F) ∩ {r >= e}) on the box."""
    s = F.s
    e = diag(s)
    post = postulation_region(F, P, box, margin)
    red = reduction_vectors(A, F, box + 1, margin)
    return shift_corners(post.corners, e), clip_below(red.corners, e)


def verify_dim2_bijection(F, A, box: int = 6, margin: int = 3, P: HilbertPoly | None = None,
                          others=None) -> TheoremReport:
    """n -> n + e maps P(F) onto {r in R_A(F) : r >= e}."""
    rep = TheoremReport("dim2-bijection")
    rep.hypothesis("dimension two", F.ring.dimension == 2)
    rep.hypothesis("Cohen-Macaulay ring", F.ring.is_cohen_macaulay)
    rep.hypothesis("monomial complete reduction available", A is not None and A.certified)
    if rep.verdict == "consistent":
        rep.hypothesis("complete reduction is good", is_good(A, F, box, margin), f"[{box},{box + margin}]^{F.s}")
    if rep.verdict == "consistent":
        rep.hypothesis("H^1 of the Rees algebra vanishes", h1_vanishing_on_box(F, box), f"[0,{box}]^{F.s}")
    if rep.verdict != "consistent":
        return rep
    if P is None:
        P = fit_polynomial(F, 2)
    shifted, red = bijection_sets(F, A, P, box, margin)
    rep.notes.append(f"P(F) + e corners {list(shifted)}; R_A(F) ∩ {{r >= e}} corners {list(red)}")
    rep.conclusion("P(F) + e = R_A(F) ∩ {r >= e} on the box", shifted == red)
    rep.conclusion("no postulation vector outside N^s", not negative_postulation_points(F, P, box, margin))
    for B in others or ():
        if B.certified and is_good(B, F, box, margin):
            agree = bijection_sets(F, B, P, box, margin)[1] == red
            rep.notes.append(f"reduction {B.describe(F.ring)}: {'agrees' if agree else 'differs'}")
    return rep


def cm_conditions(F, box: int = 6, margin: int = 3, P: HilbertPoly | None = None,
                  reductions=None, max_reductions: int = 8) -> dict:
    """Truth values of the Rees-algebra CM conditions; None means undetermined."""
    if P is None:
        P = fit_polynomial(F, 2)
    post = postulation_region(F, P, box, margin)
    h1 = h1_vanishing_on_box(F, box)
    if reductions is None:
        reductions = _default_reductions(F, box, margin, max_reductions)
    good = [A for A in reductions if A.certified and is_good(A, F, box, margin)]
    numbers = [complete_reduction_number(A, F, box, margin) for A in good]
    slices = [single_graded_reduction_number(F, i, box, margin)[0] for i in range(F.s)]
    joint = None
    if F.s == 2:
        joints = list(itertools.islice(search_joint_reductions(F, (1, 1), box=box, margin=margin), 8))
        joint = next((JR for JR in joints if joint_reduction_number_zero(JR, F, box)), None)
    c2 = post.is_everything()
    c3 = (all(r <= 1 for r in numbers) and h1) if good else None
    c3p = (any(r <= 1 for r in numbers) and h1) if good else None
    c4 = all(r is not None and r <= 1 for r in slices) and joint is not None if F.s == 2 else None
    return {
        "postulation": post,
        "h1_vanishes": h1,
        "good_reductions": good,
        "reduction_numbers": numbers,
        "slice_reduction_numbers": slices,
        "joint_reduction": joint,
        "(2)": c2, "(3)": c3, "(3')": c3p, "(4)": c4,
    }


def verify_dim2_equivalences(F, box: int = 6, margin: int = 3, P: HilbertPoly | None = None,
                             reductions=None) -> TheoremReport:
    """Check that conditions (2), (3), (3'), (4) of the CM criterion agree.

    Condition (1), Cohen-Macaulayness of the Rees algebra, is never decided
    directly; it is reported as implied or refuted by the others.
    """
    rep = TheoremReport("dim2-cm-equivalences")
    rep.hypothesis("dimension two", F.ring.dimension == 2)
    rep.hypothesis("Cohen-Macaulay ring", F.ring.is_cohen_macaulay)
    rep.hypothesis("bigraded filtration", F.s == 2)
    if rep.verdict != "consistent":
        return rep
    c = cm_conditions(F, box, margin, P, reductions)
    rep.notes.append(f"H^1 vanishes on [0,{box}]^2: {c['h1_vanishes']}")
    rep.notes.append(f"good reductions found: {len(c['good_reductions'])}, numbers {c['reduction_numbers']}")
    rep.notes.append(f"slice reduction numbers: {c['slice_reduction_numbers']}")
    jr = c["joint_reduction"]
    rep.notes.append("joint reduction of type e with number zero: "
                     + (jr.describe(F.ring) if jr else "none found among monomial candidates"))
    for key in ("(2)", "(3)", "(3')", "(4)"):
        rep.notes.append(f"condition {key}: {c[key]}")
    known = [c[k] for k in ("(2)", "(3)", "(3')", "(4)") if c[k] is not None]
    rep.conclusion("determined conditions agree", len(set(known)) <= 1)
    if known and all(known):
        rep.notes.append("condition (1): implied, the Rees algebra is Cohen-Macaulay")
    elif known and not any(known):
        rep.notes.append("condition (1): refuted, the Rees algebra is not Cohen-Macaulay")
    if c["h1_vanishes"] and c["good_reductions"]:
        rep.conclusion("with H^1 = 0: P(F) = N^2 iff r_A <= 1 for the good reductions found",
                       c["(2)"] == all(r <= 1 for r in c["reduction_numbers"]))
    rep.notes.append("quantifiers over reductions range over monomial candidates only")
    return rep
