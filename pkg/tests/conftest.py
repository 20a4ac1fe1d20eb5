import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mosaic_lab.catalog import enumerate_lattices, enumerate_ortholattices, named

FIXTURES = Path(__file__).parent / "fixtures"
DATA = Path(__file__).parent.parent / "src" / "mosaic_lab" / "data"


@pytest.fixture(scope="session")
def pentagon():
    return named("pentagon")


@pytest.fixture(scope="session")
def hexagon():
    return named("hexagon")


@pytest.fixture(scope="session")
def lattices_upto_6():
    return [l for n in range(1, 7) for l in enumerate_lattices(n)]


@pytest.fixture(scope="session")
def ortholattices_upto_8():
    return [p for n in range(1, 9) for p in enumerate_ortholattices(n)]


@pytest.fixture(scope="session")
def ortholattices_upto_4():
    return [p for n in range(1, 5) for p in enumerate_ortholattices(n)]
