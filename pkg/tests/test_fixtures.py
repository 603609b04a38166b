"""Shipped fixtures must be exactly what the generator produces from datum_search."""

import pytest

from qlift.fixtures import all_files

from .conftest import FIXTURES


@pytest.fixture(scope="module")
def regenerated():
    return all_files()


def test_every_fixture_regenerates(regenerated):
    for name, text in regenerated.items():
        assert (FIXTURES / name).read_text() == text, name
