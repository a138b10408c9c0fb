import pytest

from multifilt import (Filtration, PolyRing, SemigroupRing, fit_polynomial, hilbert_function,
                       make_complete_reduction, postulation_region, reduction_vectors, verify_dim1_correspondence,
                       verify_dim2_bijection, verify_dim2_equivalences)
from multifilt.postulation import bijection_sets, cm_conditions, negative_postulation_points

R = PolyRing(2)
m = R.maximal_ideal()
S = SemigroupRing((3, 4, 5))
SQ = [(2, 0), (0, 2)]


@pytest.fixture(scope="module")
def ex5():
    F = Filtration([S.ideal([3, 4]), S.ideal([3])])
    return F, make_complete_reduction(F, [[3], [3]]), fit_polynomial(F, 1)


@pytest.fixture(scope="module")
def ex6a():
    F = Filtration([m ** 2, R.ideal(SQ)])
    return F, make_complete_reduction(F, [SQ, SQ]), fit_polynomial(F, 2)


@pytest.fixture(scope="module")
def ex6b():
    F = Filtration([m ** 2, m ** 3])
    return F, make_complete_reduction(F, [SQ, [(3, 0), (0, 3)]]), fit_polynomial(F, 2)


def test_dim1_correspondence_semigroup(ex5):
    F, A, P = ex5
    assert postulation_region(F, P).corners == ((2, 0),)
    rep = verify_dim1_correspondence(F, A, P=P)
    assert rep.verdict == "consistent"
    assert not negative_postulation_points(F, P)


def test_dim1_non_cm_regions_differ():
    Q = PolyRing(2, ((2, 0), (1, 1)))
    F = Filtration([Q.ideal([(1, 0), (0, 1)]), Q.ideal([(0, 1)])])
    P = fit_polynomial(F, 1)
    A = make_complete_reduction(F, [[(0, 1)], [(0, 1)]])
    assert P((0, 0)) == 1 and hilbert_function(F, (0, 0)) == 0
    assert reduction_vectors(A, F).corners == ((0, 0),)
    assert postulation_region(F, P).corners != ((0, 0),)
    rep = verify_dim1_correspondence(F, A, P=P)
    assert rep.verdict == "not-applicable"
    assert "regions differ" in rep.notes


def test_negative_postulation_vectors():
    # for k[[x]] with F(n) = (x^n), P(-1) = -1 while H(-1) = H(0) = 0
    F = Filtration([PolyRing(1).maximal_ideal()])
    P = fit_polynomial(F, 1)
    assert negative_postulation_points(F, P) == []
    # a "polynomial" equal to H everywhere, including the clamped negative part, is caught
    G = Filtration([m ** 2, m ** 3])
    assert set(negative_postulation_points(G, lambda n: hilbert_function(G, n))) == {(-1, -1)}


def test_bijection_ex6b(ex6b):
    F, A, P = ex6b
    assert postulation_region(F, P).corners == ((0, 0),)
    shifted, red = bijection_sets(F, A, P, 6, 3)
    assert shifted == red == ((1, 1),)
    assert verify_dim2_bijection(F, A, P=P, others=[A]).verdict == "consistent"


def test_bijection_needs_h1_vanishing(ex6a):
    F, A, P = ex6a
    assert P((0, 1)) == 3 and hilbert_function(F, (0, 1)) == 4
    assert postulation_region(F, P).corners == ((1, 0),)
    shifted, red = bijection_sets(F, A, P, 6, 3)
    assert shifted == ((2, 1),) and red == ((1, 1),)
    assert verify_dim2_bijection(F, A, P=P).verdict == "not-applicable"


def test_cm_conditions_ex6b(ex6b):
    F, A, P = ex6b
    c = cm_conditions(F, 6, 3, P, [A])
    assert c["(2)"] and c["(3)"] and c["(3')"] and c["(4)"]
    assert c["slice_reduction_numbers"] == [1, 1]
    assert c["joint_reduction"] is not None
    assert verify_dim2_equivalences(F, 6, 3, P, [A]).verdict == "consistent"


def test_cm_conditions_ex6a(ex6a):
    F, A, P = ex6a
    c = cm_conditions(F, 5, 3, P, [A])
    assert c["(2)"] is False and not c["h1_vanishes"]
    rep = verify_dim2_equivalences(F, 5, 3, P, [A])
    assert rep.verdict == "consistent"
    assert any("refuted" in n for n in rep.notes)


def test_equivalences_not_applicable_in_dim1(ex5):
    F, _, P = ex5
    assert verify_dim2_equivalences(F, P=P).verdict == "not-applicable"
