from pathlib import Path

import pytest
from hypothesis import settings

from qlift.abelian import LiftingSpec

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def load_spec(name: str) -> LiftingSpec:
    import json

    return LiftingSpec.from_json(json.loads((FIXTURES / name).read_text()))


@pytest.fixture(scope="session")
def z3z3_b2():
    return load_spec("b2_n3_z3z3.json")


@pytest.fixture(scope="session")
def z9z9_b2():
    return load_spec("b2_n3_z9z9.json")


@pytest.fixture(scope="session")
def z49_a2():
    return load_spec("a2_n7_z49.json")


@pytest.fixture(scope="session")
def z3z3_a2():
    return load_spec("a2_n3_z3z3.json")
