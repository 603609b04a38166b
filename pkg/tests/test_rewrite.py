import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qlift.builders import (
    build_trinomial_algebra,
    build_b2_uplus,
    build_biproduct,
    build_corrupted_trinomial,
    build_s_variant_algebra,
    build_skew_lemma_algebra,
)
from qlift.exactnum import as_cyclotomic, zeta
from qlift.rewrite import (
    InfiniteDimensional,
    Presentation,
    UnknownSymbol,
    confluence_check,
    enumerate_basis,
    quotient_by,
    term,
)


@pytest.fixture(scope="module")
def trinomial():
    return build_trinomial_algebra(zeta(5), 0, 2)


@pytest.fixture(scope="module")
def biproduct(z3z3_b2):
    return build_biproduct(z3z3_b2.datum, "B2")


def test_swap_rules_apply(trinomial):
    q = zeta(5)
    assert trinomial.parse_word("x z") == q * trinomial.parse_word("z x")
    assert trinomial.parse_word("x t") == q * trinomial.parse_word("t x") + 2 * trinomial.parse_word("z^2")


def test_normal_words_are_fixed(trinomial):
    w = trinomial.parse_word("t^2 z x^3")
    assert len(w.terms) == 1


def test_unknown_symbol(trinomial):
    with pytest.raises(UnknownSymbol):
        trinomial.parse_word("x y")


@given(st.lists(st.sampled_from(["t", "z", "x"]), max_size=5), st.lists(st.sampled_from(["t", "z", "x"]), max_size=5), st.lists(st.sampled_from(["t", "z", "x"]), max_size=4))
def test_multiplication_is_associative(a, b, c):
    A = build_trinomial_algebra(zeta(5), 0, 2)
    ea, eb, ec = (A.parse_word(" ".join(w)) if w else A.one() for w in (a, b, c))
    assert (ea * eb) * ec == ea * (eb * ec)


def test_group_sweeps_left(biproduct):
    P = biproduct
    g1 = P.grouplike(P.group_aliases["g1"])
    x1 = P.gen("x1")
    chi = P.characters[P.index("x1")]
    assert x1 * g1 == chi(P.group_aliases["g1"]) ** -1 * g1 * x1


@pytest.mark.parametrize(
    "build",
    [
        lambda d: build_trinomial_algebra(zeta(5), 3, 2),
        lambda d: build_trinomial_algebra(as_cyclotomic(2), 1, -1),
        lambda d: build_s_variant_algebra(zeta(7), 3),
        lambda d: build_skew_lemma_algebra(zeta(5), zeta(5, 2)),
        lambda d: build_b2_uplus(d),
        lambda d: build_biproduct(d, "B2"),
    ],
    ids=["trinomial-q5", "trinomial-q2", "s-variant", "skew-lemma", "b2-uplus", "b2-biproduct"],
)
def test_built_in_presentations_are_confluent(build, z3z3_b2):
    rep = confluence_check(build(z3z3_b2.datum))
    assert rep.confluent, rep.failures


def test_corrupted_fixture_names_its_overlap():
    rep = confluence_check(build_corrupted_trinomial(zeta(5)))
    assert not rep.confluent
    assert rep.failures[0]["overlap"] == "x z t"


def test_quotient_basis(biproduct, z3z3_b2):
    with pytest.raises(InfiniteDimensional):
        enumerate_basis(biproduct)
    rels = [(biproduct.index(s), 3, []) for s in ("x1", "x2", "z", "u")]
    Q = quotient_by(biproduct, rels)
    assert confluence_check(Q).confluent
    dim, monos = enumerate_basis(Q)
    assert dim == 729 == sum(1 for _ in monos)


def test_json_round_trip(biproduct):
    data = json.loads(json.dumps(biproduct.to_json()))
    P = Presentation.from_json(data)
    assert P.names == biproduct.names
    w = "x1 x2 z x1 g1"
    assert str(P.parse_element(w)) == str(biproduct.parse_element(w))


def test_raw_terms_reduce(trinomial):
    t, z, x = range(3)
    a = trinomial.raw([term(1, (x, t)), term(-zeta(5), (t, x))])
    assert a == 2 * trinomial.parse_word("z z")


def test_skew_lemma_identities():
    # YX = a XY + Z, ZX = b XZ, YZ = b ZY; then Y X^n = a^n X^n Y + (n)_{b/a}-type sum of X^(n-1) Z
    alpha, beta = zeta(7), zeta(7, 3)
    P = build_skew_lemma_algebra(alpha, beta)
    X, Y, Z = P.gen("X"), P.gen("Y"), P.gen("Z")
    for n in range(1, 9):
        coeff = sum((alpha ** (n - 1 - k) * beta**k for k in range(n)), as_cyclotomic(0))
        assert Y * X**n == alpha**n * X**n * Y + coeff * X ** (n - 1) * Z
