import pathlib

import pytest

from hopforder import CoefficientRing, build_bundle, load_document

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / f"{name}.json")


def load(name: str):
    return load_document(fixture_path(name))


def bundle_for(name: str):
    doc = load(name)
    return build_bundle(doc.hopf, doc.ring)


@pytest.fixture
def z_ring():
    return CoefficientRing.integers()


@pytest.fixture
def z3_ring():
    return CoefficientRing.localized_at(3)
