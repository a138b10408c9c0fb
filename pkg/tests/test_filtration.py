import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multifilt import Filtration, NotAdmissibleError, PolyRing, SemigroupRing, check_admissible_window, ratliff_rush
from multifilt.filtration import StabilizationError, box_points, minimal_points, plus

R = PolyRing(2)
m = R.maximal_ideal()


def test_negative_indices_clamp():
    F = Filtration([m ** 2, m ** 3])
    assert F((-3, 2)) == F((0, 2)) == m ** 6
    assert F((-1, -1)).is_unit()
    assert plus((-2, 5, 0)) == (0, 5, 0)


def test_rejects_non_m_primary_and_mixed_rings():
    with pytest.raises(NotAdmissibleError):
        Filtration([R.ideal([(1, 0)]), R.ideal([(0, 1)])])
    with pytest.raises(ValueError):
        Filtration([m, PolyRing(2, ((3, 0),)).maximal_ideal()])
    with pytest.raises(ValueError):
        Filtration([m], kind="bogus")
    with pytest.raises(NotAdmissibleError):
        Filtration([SemigroupRing((3, 4, 5)).maximal_ideal()], kind="integral-closure")


@pytest.mark.parametrize("kind", ["powers", "integral-closure", "ratliff-rush"])
def test_filtration_axioms_on_box(kind):
    F = Filtration([R.ideal([(1, 0), (0, 2)]), R.ideal([(2, 0), (0, 2)])], kind)
    assert F.check_invariants(4) == []


def test_closure_pair_equals_powers():
    I, J = R.ideal([(1, 0), (0, 2)]), R.ideal([(2, 0), (0, 1)])
    F = Filtration([I, J], "integral-closure")
    assert all(F(n) == F.power_product(n) for n in box_points(2, 5))


def test_ratliff_rush_of_parameter_ideal_in_example():
    F = Filtration([m ** 2, R.ideal([(2, 0), (0, 2)])])
    assert ratliff_rush(F, (0, 1)) == m ** 2
    assert ratliff_rush(F, (0, 0)).is_unit()
    G = Filtration([m ** 2, m ** 3])
    assert all(ratliff_rush(G, n) == G(n) for n in box_points(2, 3))


def test_ratliff_rush_chain_cap():
    F = Filtration([m ** 2, R.ideal([(2, 0), (0, 2)])])
    with pytest.raises(StabilizationError):
        ratliff_rush(F, (0, 3), k_margin=3, k_max=1)


def test_admissibility_window():
    F = Filtration([m ** 2, m ** 3])
    rep = check_admissible_window(F, 5)
    assert rep.ok and rep.thresholds == (0, 0)
    G = Filtration([R.ideal([(1, 0), (0, 2)]), R.ideal([(2, 0), (0, 1)])], "integral-closure")
    assert check_admissible_window(G, 5).ok


def test_slice():
    F = Filtration([m ** 2, m ** 3])
    S = F.slice(1)
    assert S(2) == m ** 6 and S((0,)).is_unit()


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=8))
@settings(max_examples=60)
def test_minimal_points_is_antichain(pts):
    mins = minimal_points(pts)
    for p in pts:
        assert any(all(a >= b for a, b in zip(p, c)) for c in mins)
    for a in mins:
        for b in mins:
            assert a == b or not all(x >= y for x, y in zip(a, b))
