import random

import pytest

from multifilt import (Filtration, PolyRing, SemigroupRing, complete_reduction_number, induced_reductions_check,
                       is_good, is_reduction_at, joint_reduction_number_zero, make_complete_reduction,
                       make_joint_reduction, reduction_vectors, search_joint_reductions, search_monomial_reduction,
                       search_monomial_reductions, single_graded_reduction_number)
from multifilt.filtration import box_points
from multifilt.reduction import NotCertifiedError, complete_reduction_number_scan, slice_reduction_number

from oracles import random_simplex_pair

R = PolyRing(2)
m = R.maximal_ideal()
S = SemigroupRing((3, 4, 5))
X2, Y2, X3, Y3 = (2, 0), (0, 2), (3, 0), (0, 3)


@pytest.fixture(scope="module")
def ex6b():
    F = Filtration([m ** 2, m ** 3])
    return F, make_complete_reduction(F, [[X2, Y2], [X3, Y3]])


def test_complete_reduction_structure(ex6b):
    F, A = ex6b
    assert A.certified and A.s == 2 and A.d == 2
    assert A.y == ((5, 0), (0, 5))
    assert A.describe(R) == "(x^2,y^2;x^3,y^3)"
    assert A.to_dict(R)["y"] == ["x^5", "y^5"]


def test_reduction_vectors_ex6b(ex6b):
    F, A = ex6b
    region = reduction_vectors(A, F, 6, 3)
    assert set(region.corners) == {(2, 0), (1, 1), (0, 2)}
    assert complete_reduction_number(A, F) == 1 == complete_reduction_number_scan(A, F)
    assert not is_reduction_at(A, F, (0, 0))


def test_semigroup_reduction():
    F = Filtration([S.ideal([3, 4]), S.ideal([3])])
    A = make_complete_reduction(F, [[3], [3]])
    assert A.certified and A.y == (6,)
    assert reduction_vectors(A, F).corners == ((2, 0),)
    assert complete_reduction_number(A, F) == 2
    assert is_good(A, F)
    assert induced_reductions_check(A, F) == [2, 0]


def test_non_cm_reduction_number_zero():
    Q = PolyRing(2, ((2, 0), (1, 1)))
    F = Filtration([Q.ideal([(1, 0), (0, 1)]), Q.ideal([(0, 1)])])
    A = make_complete_reduction(F, [[(0, 1)], [(0, 1)]])
    assert reduction_vectors(A, F).corners == ((0, 0),)
    assert complete_reduction_number(A, F) == 0


def test_malformed_reductions_rejected():
    F = Filtration([m ** 2, m ** 3])
    with pytest.raises(ValueError):
        make_complete_reduction(F, [[(1, 0), Y2], [X3, Y3]])
    with pytest.raises(ValueError):
        make_complete_reduction(F, [[X2, Y2]])
    with pytest.raises(ValueError):
        make_complete_reduction(F, [[X2, Y2], [X3]])


def test_uncertified_reduction_refused():
    F = Filtration([m ** 2, m ** 3])
    A = make_complete_reduction(F, [[X2, (1, 1)], [X3, Y3]])
    assert not A.certified
    with pytest.raises(NotCertifiedError):
        reduction_vectors(A, F)


def test_search_finds_cheapest_first():
    F = Filtration([m ** 2, m ** 3])
    A = search_monomial_reduction(F)
    assert A is not None and A.certified
    assert A.describe(R) == "(x^2,y^2;x^3,y^3)"
    Fs = Filtration([S.ideal([3, 4]), S.ideal([3])])
    assert search_monomial_reduction(Fs).y == (6,)


def test_closure_pair_has_no_monomial_reduction():
    F = Filtration([R.ideal([(1, 0), (0, 2)]), R.ideal([(2, 0), (0, 1)])], "integral-closure")
    assert search_monomial_reduction(F, degree_bound=2, box=4, margin=2) is None


def test_every_search_result_is_certified_on_window():
    F = Filtration([m, R.ideal([X2, (1, 1), Y2])])
    found = list(search_monomial_reductions(F, degree_bound=2, box=4, margin=2))
    assert found
    for A in found:
        assert all(A.J * F(n) == F((n[0] + 1, n[1] + 1)) for n in box_points(2, 6, 4))


def test_joint_reduction_ex6b():
    F = Filtration([m ** 2, m ** 3])
    JR = make_joint_reduction(F, [[X2], [Y3]])
    assert JR.q == (1, 1)
    assert joint_reduction_number_zero(JR, F)
    assert JR.describe(R) == "(x^2;y^3)"
    first = next(search_joint_reductions(F, (1, 1), box=4, margin=2))
    assert joint_reduction_number_zero(first, F, 4)
    with pytest.raises(ValueError):
        make_joint_reduction(F, [[(1, 0)], [Y3]])


def test_slice_reduction_numbers_ex6b():
    F = Filtration([m ** 2, m ** 3])
    # (x^2, y^2) != m^2, but (x^2, y^2) m^(2n) = m^(2n+2) for n >= 1
    assert slice_reduction_number(F, 0, [X2, Y2]) == 1
    assert single_graded_reduction_number(F, 0)[0] == 1
    assert single_graded_reduction_number(F, 1)[0] == 1
    G = Filtration([m ** 2, R.ideal([X2, Y2])])
    assert slice_reduction_number(G, 1, [X2, (1, 1)]) is None


def test_region_number_matches_scan_on_random_pairs():
    rng = random.Random(5)
    checked = 0
    while checked < 12:
        g1, g2 = random_simplex_pair(rng, 3, bias=1.0)
        F = Filtration([R.ideal(g1), R.ideal(g2)])
        A = search_monomial_reduction(F, box=4, margin=2)
        if A is None:
            continue
        region = reduction_vectors(A, F, 4, 2)
        pts = set(region.points())
        # upward closed inside the box, and corners are exactly the minimal points
        for n in pts:
            assert all(p in pts for p in box_points(2, 4) if p[0] >= n[0] and p[1] >= n[1])
        assert complete_reduction_number(A, F, 4, 2) == complete_reduction_number_scan(A, F, 4, 2)
        checked += 1
