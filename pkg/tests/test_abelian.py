import pytest
from hypothesis import given
from hypothesis import strategies as st

from qlift.abelian import AbelianGroup, Character, LiftingSpec, YDDatum, admissible, cartan_type, datum_search
from qlift.exactnum import zeta


def test_group_basics():
    G = AbelianGroup((3, 9))
    assert G.order == 27 and G.exponent == 9 and G.rank == 2
    g = G.element((1, 2))
    assert G.mul(g, G.inv(g)) == G.identity
    assert G.elem_order(g) == 9
    assert len(list(G.elements())) == 27


def test_invariant_factors_must_chain():
    with pytest.raises(ValueError):
        AbelianGroup((4, 6))


def test_smith_normal_form_reduces_relations():
    # <a, b | 2a, 3b> is cyclic of order 6
    G, images = AbelianGroup.from_relations(2, [[2, 0], [0, 3]])
    assert G.invariant_factors == (6,)
    assert G.elem_order(images[0]) == 2
    assert G.elem_order(images[1]) == 3


@given(st.lists(st.integers(0, 8), min_size=2, max_size=2), st.lists(st.integers(0, 8), min_size=2, max_size=2))
def test_characters_are_homomorphisms(c, e):
    G = AbelianGroup((3, 9))
    chi = Character(G, tuple(c))
    g, h = G.element(e), G.element((2, 5))
    assert chi(G.mul(g, h)) == chi(g) * chi(h)
    assert (chi * chi)(g) == chi(g) ** 2
    assert chi(G.identity) == 1


def test_braiding_of_small_b2_datum(z3z3_b2):
    d = z3z3_b2.datum
    q = zeta(3)
    assert d.braiding == ((q * q, q), (1, q))
    assert cartan_type(d) == "B2"
    assert d.n == 3


def test_a2_example_datum_on_cyclic_group_of_order_49(z49_a2):
    d = z49_a2.datum
    q = zeta(7)
    assert d.b(1, 1) == q and d.b(2, 2) == q
    assert d.b(1, 2) * d.b(2, 1) == q**-1
    assert d.chi2(d.g2) == zeta(7) ** 8 == q


def test_cartan_type_rejects_generic_data():
    d = YDDatum.from_exponents((5,), (1,), (1,), (1,), (1,))
    assert cartan_type(d) == "other"


def test_datum_json_round_trip(z9z9_b2):
    d = z9z9_b2.datum
    assert YDDatum.from_json(d.to_json()) == d
    assert LiftingSpec.from_json(z9z9_b2.to_json()) == z9z9_b2


def test_datum_search_small_group(z3z3_b2):
    found = datum_search(AbelianGroup((3, 3)), "B2", 3)
    assert len(found) == 288
    assert z3z3_b2.datum in found
    assert all(cartan_type(d) == "B2" and d.n == 3 for d in found)
    assert datum_search(AbelianGroup((3, 3)), "B2", 5) == []


def test_datum_search_cyclic_49(z49_a2):
    found = datum_search(AbelianGroup((49,)), "A2", 7)
    assert z49_a2.datum in found


def test_admissibility(z3z3_b2, z9z9_b2):
    assert admissible(z9z9_b2) == []
    # on Z3 x Z3 every g_i^3 = 1, so every deformation is forced to vanish
    assert admissible(z3z3_b2) == []
    assert admissible(z3z3_b2.replace(mu1=1))
    assert admissible(z3z3_b2.replace(gamma=zeta(3)))
    bad = LiftingSpec(z3z3_b2.datum, "A2")
    assert admissible(bad) and "Cartan type" in admissible(bad)[0]


def test_a2_gammas_only_when_conditions_hold(z3z3_a2, z49_a2):
    assert admissible(z3z3_a2) == []
    assert admissible(z3z3_a2.replace(gamma2=zeta(3))) == []
    assert admissible(z49_a2.replace(gamma1=1))
