import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from multifilt import (Filtration, PolyRing, SemigroupRing, UnsupportedBackendError, fit_polynomial,
                       good_reduction_intersection, h1_vanishing_on_box, huneke_identity_check, km_homology,
                       make_complete_reduction, rees_h1, search_monomial_reduction)
from multifilt.filtration import box_points
from multifilt.kmcomplex import NotRegularSequenceError, euler_characteristic_check, huneke_report

from oracles import random_simplex_pair

R = PolyRing(2)
m = R.maximal_ideal()
S = SemigroupRing((3, 4, 5))


def test_homology_profile_ex6b():
    F = Filtration([m ** 2, m ** 3])
    prof = km_homology(F, [(5, 0), (0, 5)], 1, (1, 1))
    assert prof.k == 2 and len(prof.lengths) == 3
    # H_0 = R/(F(3,3) + (x^5, y^5)) = R/m^15 + (x^5,y^5) = R/(x^5, y^5)
    assert prof.lengths[0] == 25
    assert prof.lengths[2] == 0


def test_euler_characteristic_matches_difference():
    F = Filtration([m ** 2, m ** 3])
    G = Filtration([m ** 2, R.ideal([(2, 0), (0, 2)])])
    T = Filtration([S.ideal([3, 4]), S.ideal([3])])
    for n in box_points(2, 3):
        assert euler_characteristic_check(F, [(5, 0), (0, 5)], n)
        assert euler_characteristic_check(G, [(4, 0), (0, 4)], n)
        assert euler_characteristic_check(T, [6], n)


def test_refuses_non_regular_sequence():
    F = Filtration([m ** 2, m ** 3])
    with pytest.raises(NotRegularSequenceError):
        km_homology(F, [(5, 0), (2, 3)], 1, (0, 0))
    with pytest.raises(ValueError):
        km_homology(F, [(5, 0), (0, 5)], 0, (0, 0))


def test_huneke_identity_examples():
    for F, rows in [(Filtration([m ** 2, m ** 3]), [[(2, 0), (0, 2)], [(3, 0), (0, 3)]]),
                    (Filtration([m ** 2, R.ideal([(2, 0), (0, 2)])]), [[(2, 0), (0, 2)], [(2, 0), (0, 2)]]),
                    (Filtration([S.ideal([3, 4]), S.ideal([3])]), [[3], [3]])]:
        A = make_complete_reduction(F, rows)
        P = fit_polynomial(F)
        assert all(huneke_identity_check(F, A, P, n).holds for n in box_points(2, 4))
        assert huneke_report(F, A, P).verdict == "consistent"


def test_huneke_report_not_applicable_for_non_cm():
    Q = PolyRing(2, ((2, 0), (1, 1)))
    F = Filtration([Q.ideal([(1, 0), (0, 1)]), Q.ideal([(0, 1)])])
    A = make_complete_reduction(F, [[(0, 1)], [(0, 1)]])
    assert huneke_report(F, A, fit_polynomial(F, 1)).verdict == "not-applicable"


@st.composite
def simplex_pairs(draw):
    return random_simplex_pair(random.Random(draw(st.integers(0, 10 ** 6))), 4)


@given(simplex_pairs())
@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_huneke_identity_property(pair):
    F = Filtration([R.ideal(pair[0]), R.ideal(pair[1])])
    A = search_monomial_reduction(F, box=4, margin=2)
    if A is None:
        return
    P = fit_polynomial(F, 2)
    for n in box_points(2, 3):
        c = huneke_identity_check(F, A, P, n)
        assert c.holds, (pair, n, c)


def test_rees_h1_examples():
    G = Filtration([m ** 2, R.ideal([(2, 0), (0, 2)])])
    assert rees_h1(G, (0, 1)) == 1
    assert [rees_h1(G, (0, k)) for k in range(4)] == [0, 1, 2, 3]
    assert not h1_vanishing_on_box(G, 3)
    F = Filtration([m ** 2, m ** 3])
    assert h1_vanishing_on_box(F, 6)


def test_rees_h1_refusals():
    with pytest.raises(UnsupportedBackendError):
        rees_h1(Filtration([S.ideal([3, 4]), S.ideal([3])]), (1, 1))
    Q = PolyRing(2, ((2, 0), (1, 1)))
    with pytest.raises(UnsupportedBackendError):
        rees_h1(Filtration([Q.ideal([(1, 0), (0, 1)])]), (1,))
    with pytest.raises(ValueError):
        rees_h1(Filtration([m ** 2, m ** 3]), (-1, 0))


def test_good_reduction_intersection():
    F = Filtration([m ** 2, m ** 3])
    A = make_complete_reduction(F, [[(2, 0), (0, 2)], [(3, 0), (0, 3)]])
    assert good_reduction_intersection(F, A, 5, 5, 3).verdict == "consistent"
    G = Filtration([m ** 2, R.ideal([(2, 0), (0, 2)])])
    B = make_complete_reduction(G, [[(2, 0), (0, 2)], [(2, 0), (0, 2)]])
    assert good_reduction_intersection(G, B, 4, 4, 2).verdict == "not-applicable"
