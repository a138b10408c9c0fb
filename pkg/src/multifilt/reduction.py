"""Complete reductions, reduction vectors and joint reductions.

A complete reduction is stored as one row per base ideal: row i holds
x_i1, ..., x_id in I_i, and y_j is the product down column j.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .filtration import Filtration, add, box_points, diag, geq, sub, unit
from .ideals import is_infinite, iter_monomials_in
from .region import Region, region_from_predicate


class NotCertifiedError(ValueError):
    pass


def _product_ideal(ring, elems):
    return ring.ideal(elems)


def _monomial_product(ring, ms):
    out = None
    for m in ms:
        out = m if out is None else ring.mul(out, m)
    return out


@dataclass(frozen=True)
class CompleteReduction:
    rows: tuple       # rows[i][j] = x_ij in I_i
    y: tuple
    J: object
    certified: bool
    window: tuple     # (box, margin) used for the completeness certificate

    @property
    def s(self) -> int:
        return len(self.rows)

    @property
    def d(self) -> int:
        return len(self.y)

    def describe(self, ring) -> str:
        fm = ring.format_monomial
        return "(" + ";".join(",".join(fm(m) for m in row) for row in self.rows) + ")"

    def to_dict(self, ring) -> dict:
        fm = ring.format_monomial
        return {"matrix": [[fm(m) for m in row] for row in self.rows],
                "y": [fm(m) for m in self.y],
                "certified": self.certified, "window": list(self.window)}


def make_complete_reduction(F: Filtration, rows, box: int = 6, margin: int = 3) -> CompleteReduction:
    """Validate membership, build y and J, and run the completeness certificate.

    The certificate asks J F(n) = F(n + e) for every n in [box, box + margin]^s.
    """
    ring = F.ring
    rows = tuple(tuple(row) for row in rows)
    if len(rows) != F.s:
        raise ValueError(f"need one row per base ideal ({F.s}), got {len(rows)}")
    d = len(rows[0])
    if any(len(r) != d for r in rows):
        raise ValueError("rows of a complete reduction must have equal length")
    for i, row in enumerate(rows):
        for m in row:
            if not F.ideals[i].member(m):
                raise ValueError(f"{ring.format_monomial(m)} is not in base ideal #{i + 1}")
    y = tuple(_monomial_product(ring, [rows[i][j] for i in range(F.s)]) for j in range(d))
    J = ring.ideal(y)
    ok = _certify(F, J, box, margin)
    return CompleteReduction(rows, y, J, ok, (box, margin))


def _certify(F, J, box, margin) -> bool:
    if is_infinite(J.colength()):
        return False
    e = diag(F.s)
    return all(J * F(n) == F(add(n, e)) for n in box_points(F.s, box + margin, box))


def _require(A: CompleteReduction):
    if not A.certified:
        raise NotCertifiedError("complete reduction failed its completeness certificate")


# reduction vectors ------------------------------------------------------------


def is_reduction_at(A: CompleteReduction, F: Filtration, n) -> bool:
    return A.J * F(n) == F(add(n, diag(F.s)))


def reduction_vectors(A: CompleteReduction, F: Filtration, box: int = 6, margin: int = 3) -> Region:
    _require(A)
    return region_from_predicate(lambda n: is_reduction_at(A, F, n), F.s, box, margin)


def reduction_number_from_region(region: Region) -> int:
    if region.is_empty():
        raise NotCertifiedError("no reduction vector inside the box")
    return min(max(c) for c in region.corners)


def complete_reduction_number(A: CompleteReduction, F: Filtration, box: int = 6, margin: int = 3) -> int:
    """min over region corners of the largest coordinate."""
    return reduction_number_from_region(reduction_vectors(A, F, box, margin))


def complete_reduction_number_scan(A: CompleteReduction, F: Filtration, box: int = 6, margin: int = 3) -> int:
    """Least k with J F(m) = F(m + e) for every m in [k, box + margin]^s, by direct scanning."""
    _require(A)
    for k in range(box + 1):
        if all(is_reduction_at(A, F, m) for m in box_points(F.s, box + margin, k)):
            return k
    raise NotCertifiedError("no reduction vector inside the box")


def _intersection_holds(F, y1, m) -> bool:
    ring = F.ring
    lhs = F(m).intersect(ring.principal(y1))
    return lhs == F(sub(m, diag(F.s))).times(y1)


def good_region(A: CompleteReduction, F: Filtration, box: int = 6, margin: int = 3) -> Region:
    """Region where F(m) ∩ (y1) = y1 F(m - e); only m >= e are tested."""
    _require(A)
    e = diag(F.s)
    return region_from_predicate(lambda m: not geq(m, e) or _intersection_holds(F, A.y[0], m),
                                 F.s, box, margin)


def is_good(A: CompleteReduction, F: Filtration, box: int = 6, margin: int = 3) -> bool:
    """Windowed version of 'for all large m': the property holds on [box, box + margin]^s."""
    _require(A)
    return all(_intersection_holds(F, A.y[0], m) for m in box_points(F.s, box + margin, max(box, 1)))


# search ---------------------------------------------------------------------


def _entry_key(ring, m):
    return ring.monomial_key(m)


def _candidates(ring, ideal, bound):
    return sorted(iter_monomials_in(ideal, bound), key=ring.monomial_key)


def default_degree_bound(F: Filtration) -> int:
    return max(F.ring.degree(g) for I in F.ideals for g in I.generators)


def search_monomial_reductions(F: Filtration, d: int | None = None, degree_bound: int | None = None,
                               box: int = 6, margin: int = 3):
    """Yield every certified monomial complete reduction, cheapest first.

    Candidate entries are monomials of I_i of degree <= degree_bound.  Order:
    total degree of the matrix, then the entries compared row by row.
    """
    ring = F.ring
    if d is None:
        d = ring.dimension
    if d not in (1, 2):
        raise ValueError("d must be 1 or 2")
    if degree_bound is None:
        degree_bound = default_degree_bound(F)
    per_ideal = [_candidates(ring, I, degree_bound) for I in F.ideals]
    per_row = [list(itertools.product(c, repeat=d)) for c in per_ideal]
    viable = []
    for rows in itertools.product(*per_row):
        y = [_monomial_product(ring, [rows[i][j] for i in range(F.s)]) for j in range(d)]
        if d == 2 and not ring.is_regular_sequence(y):
            continue
        if is_infinite(ring.ideal(y).colength()):
            continue
        deg = sum(ring.degree(m) for row in rows for m in row)
        viable.append((deg, tuple(ring.monomial_key(m) for row in rows for m in row), rows))
    viable.sort(key=lambda t: (t[0], t[1]))
    for _, _, rows in viable:
        A = make_complete_reduction(F, rows, box, margin)
        if A.certified:
            yield A


def search_monomial_reduction(F: Filtration, d: int | None = None, degree_bound: int | None = None,
                              box: int = 6, margin: int = 3):
    """First certified monomial complete reduction, or None."""
    return next(search_monomial_reductions(F, d, degree_bound, box, margin), None)


# induced reductions of the base ideals ------------------------------------------


def induced_reductions_check(A: CompleteReduction, F: Filtration, bound: int = 6) -> list:
    """For each i, the least n <= bound with J_i I_i^n = I_i^(n+1), or None."""
    ring = F.ring
    out = []
    for i, row in enumerate(A.rows):
        Ji = ring.ideal(row)
        I = F.ideals[i]
        least = next((n for n in range(bound + 1) if Ji * I.power(n) == I.power(n + 1)), None)
        out.append(least)
    return out


# joint reductions -------------------------------------------------------------


@dataclass(frozen=True)
class JointReduction:
    q: tuple
    elements: tuple   # elements[i] holds q_i monomials of I_i

    def describe(self, ring) -> str:
        return "(" + ";".join(",".join(ring.format_monomial(m) for m in row) for row in self.elements) + ")"


def make_joint_reduction(F: Filtration, elements) -> JointReduction:
    elements = tuple(tuple(row) for row in elements)
    if len(elements) != F.s:
        raise ValueError("need one (possibly empty) row per base ideal")
    for i, row in enumerate(elements):
        for m in row:
            if not F.ideals[i].member(m):
                raise ValueError(f"{F.ring.format_monomial(m)} is not in base ideal #{i + 1}")
    return JointReduction(tuple(len(r) for r in elements), elements)


def _joint_holds(JR: JointReduction, F: Filtration, n) -> bool:
    total = None
    for i, row in enumerate(JR.elements):
        if not row:
            continue
        prev = F(sub(n, unit(F.s, i)))
        for m in row:
            part = prev.times(m)
            total = part if total is None else total + part
    return total == F(n)


def joint_reduction_number_zero(JR: JointReduction, F: Filtration, box: int = 6) -> bool:
    """sum_ij x_ij F(n - e_i) = F(n) for every n in the box with n >= sum of e_i over q_i != 0."""
    floor = tuple(int(q > 0) for q in JR.q)
    return all(_joint_holds(JR, F, n) for n in box_points(F.s, box) if geq(n, floor))


def search_joint_reductions(F: Filtration, q, degree_bound: int | None = None, box: int = 6,
                            margin: int = 3):
    """Yield monomial joint reductions of type q certified on [box, box + margin]^s."""
    ring = F.ring
    if degree_bound is None:
        degree_bound = default_degree_bound(F)
    per_row = [list(itertools.combinations(_candidates(ring, I, degree_bound), qi))
               for I, qi in zip(F.ideals, q)]
    combos = []
    for rows in itertools.product(*per_row):
        flat = [m for row in rows for m in row]
        if is_infinite(ring.ideal(flat).colength()):
            continue
        combos.append((sum(ring.degree(m) for m in flat), tuple(ring.monomial_key(m) for m in flat), rows))
    combos.sort(key=lambda t: (t[0], t[1]))
    for _, _, rows in combos:
        JR = JointReduction(tuple(q), rows)
        if all(_joint_holds(JR, F, n) for n in box_points(F.s, box + margin, box)):
            yield JR


# one-graded slices --------------------------------------------------------------


def slice_reduction_number(F: Filtration, i: int, elems, box: int = 6, margin: int = 3):
    """r_K of the slice G(n) = F(n e_i) for K = (elems); None if K is not a reduction on the window."""
    ring = F.ring
    K = ring.ideal(elems)
    G = F.slice(i)
    top = box + margin
    ok = [K * G(n) == G(n + 1) for n in range(top + 1)]
    if not all(ok[box:]):
        return None
    r = top
    while r > 0 and ok[r - 1]:
        r -= 1
    return r


def single_graded_reduction_number(F: Filtration, i: int, box: int = 6, margin: int = 3,
                                   degree_bound: int | None = None):
    """Least r_K(F^(i)) over monomial minimal reductions K of the slice, with the minimiser.

    Returns (r, K generators) or (None, None) when the search finds nothing.
    """
    ring = F.ring
    d = ring.dimension
    G1 = F(unit(F.s, i))
    if degree_bound is None:
        degree_bound = max(ring.degree(g) for g in G1.generators)
    best = (None, None)
    for elems in itertools.combinations(_candidates(ring, G1, degree_bound), d):
        if d == 2 and not ring.is_regular_sequence(elems):
            continue
        if is_infinite(ring.ideal(elems).colength()):
            continue
        r = slice_reduction_number(F, i, elems, box, margin)
        if r is not None and (best[0] is None or r < best[0]):
            best = (r, elems)
    return best
