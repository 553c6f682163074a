import pytest

from pytamari.Families import hook_tamari, two_row_tamari
from pytamari.FiniteLattice import FiniteLattice
from pytamari.Verifications import example_lattice


@pytest.fixture
def thirteen() -> FiniteLattice:
    """The 13-element semidistributive lattice whose rowmotion is a single orbit."""
    return example_lattice()


@pytest.fixture
def pentagon() -> FiniteLattice:
    """N_5 with bottom 0, the chain 0 < 1 < 2 < 4 and the side element 3."""
    return FiniteLattice(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], labels=["0", "x", "y", "z", "1"])


@pytest.fixture
def diamond() -> FiniteLattice:
    """M_3, which is not semidistributive."""
    return FiniteLattice(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


@pytest.fixture
def hook_332() -> FiniteLattice:
    return hook_tamari(3, 3, 2)


@pytest.fixture
def two_row_33() -> FiniteLattice:
    return two_row_tamari(3, 3, 0)
