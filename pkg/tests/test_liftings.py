import itertools

import pytest

from qlift.abelian import AbelianGroup, LiftingSpec, admissible, datum_search
from qlift.builders import InadmissibleSpec
from qlift.liftings import (
    a2_isomorphism_probe,
    build_lifting,
    dimension,
    expected_dimension,
    quasi_iso_witness,
    verify_relations,
)


@pytest.fixture(scope="module")
def z7z7_b2():
    d = datum_search(AbelianGroup((7, 7)), "B2", 7)[0]
    return LiftingSpec(d, "B2")


def test_small_b2_relations(z3z3_b2):
    rep = verify_relations(z3z3_b2)
    assert rep.ok, [c for c in rep.checks if c["status"] != "pass"]
    assert rep.dimension == 729
    assert all(c["anchor"] for c in rep.checks)


def test_relations_at_n7(z7z7_b2):
    rep = verify_relations(z7z7_b2)
    assert rep.ok
    assert {c["name"] for c in rep.checks} >= {"a1c", "da2", "da1", "cd", "x1x2n"}


def test_relations_with_deformation(z9z9_b2):
    rep = verify_relations(z9z9_b2)
    assert rep.ok
    assert rep.dimension == 6561


def test_inadmissible_spec_is_rejected(z3z3_b2):
    with pytest.raises(InadmissibleSpec):
        build_lifting(z3z3_b2.replace(mu1=1))


def test_dimensions(z3z3_b2, z9z9_b2, z3z3_a2):
    assert dimension(z3z3_b2) == 729
    assert dimension(z9z9_b2) == 6561
    assert dimension(z3z3_a2) == expected_dimension(z3z3_a2) == 243


def _b2_specs(datum):
    out = [LiftingSpec(datum, "B2", *p) for p in itertools.product([0, 1], repeat=4)]
    return [s for s in out if not admissible(s)]


def test_b2_witness_chains(z9z9_b2):
    specs = _b2_specs(z9z9_b2.datum)
    assert len(specs) == 16
    for a, b in [(specs[0], specs[-1]), (specs[-1], specs[3]), (specs[5], specs[10])]:
        w = quasi_iso_witness(a, b)
        assert w.ok, w.to_json()
        assert 1 <= len(w.steps) <= 3


def test_identity_witness(z9z9_b2):
    w = quasi_iso_witness(z9z9_b2, z9z9_b2)
    assert w.ok and w.steps == []


def test_a2_gamma_paths(z3z3_a2):
    zero = z3z3_a2.replace(gamma1=0, gamma2=0)
    for g1, g2 in [(1, 0), (0, 1), (2, 0)]:
        w = quasi_iso_witness(zero, z3z3_a2.replace(gamma1=g1, gamma2=g2))
        assert w is not None and w.ok
    w = quasi_iso_witness(z3z3_a2.replace(gamma1=1, gamma2=0), z3z3_a2.replace(gamma1=0, gamma2=1))
    assert w.ok and len(w.steps) == 2


def test_a2_both_gammas_has_no_witness(z3z3_a2):
    zero = z3z3_a2.replace(gamma1=0, gamma2=0)
    assert quasi_iso_witness(z3z3_a2.replace(gamma1=1, gamma2=1), zero) is None


@pytest.mark.slow
def test_probe_separates_lambdas(z49_a2):
    d = z49_a2.datum
    assert a2_isomorphism_probe(1, 1, d)
    assert not a2_isomorphism_probe(1, 2, d)
