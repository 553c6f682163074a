import pytest

from pytamari.ClosedForms import two_row_points
from pytamari.Families import (
    grid_embedding,
    hook_delta,
    hook_nu,
    hook_nu_hat,
    hook_tamari,
    two_row_delta,
    two_row_embedding,
    two_row_factors,
    two_row_nu,
    two_row_nu_hat,
    two_row_tamari,
    two_row_triples,
)
from pytamari.LatticePath import IncrementVector


def test_hook_parameters() -> None:
    assert str(hook_nu(4, 7)) == "EN^3E^6N"
    assert str(hook_nu(1, 3)) == "E^3N"
    assert hook_delta(3, 3, 1) == IncrementVector((0, 1, 0))
    assert hook_delta(1, 3, 0) == IncrementVector((0,))
    assert str(hook_nu_hat(3, 3, 1)) == "E^2N^2EN"
    assert str(hook_nu_hat(3, 3, 0)) == "E^3N^3"


@pytest.mark.parametrize(("a", "b", "k"), [(1, 3, 1), (2, 2, 2), (0, 2, 0), (2, 0, 0)])
def test_hook_parameters_out_of_range(a: int, b: int, k: int) -> None:
    with pytest.raises(ValueError, match="hook family"):
        hook_delta(a, b, k)


@pytest.mark.parametrize(("a", "b", "k"), [(1, 1, 0), (1, 4, 0), (2, 3, 1), (3, 3, 2), (4, 2, 1)])
def test_hook_size(a: int, b: int, k: int) -> None:
    assert hook_tamari(a, b, k).size == a * b + 1


def test_two_row_parameters() -> None:
    assert str(two_row_nu(3, 3)) == "E^3NE^3N"
    assert str(two_row_nu(0, 1)) == "NEN"
    assert two_row_delta(3, 3, 2) == IncrementVector((2, 0))
    assert str(two_row_nu_hat(3, 3, 2)) == "E^4NE^2N"
    with pytest.raises(ValueError, match="out of range"):
        two_row_delta(3, 3, 4)
    with pytest.raises(ValueError, match="a, b >= 0"):
        two_row_nu(-1, 3)


@pytest.mark.parametrize(("a", "b"), [(0, 1), (2, 1), (1, 3), (3, 3)])
def test_two_row_size(a: int, b: int) -> None:
    assert two_row_tamari(a, b, 0).size == (a + 1) * (b + 1) + a * (a + 1) // 2


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_two_row_embedding_fills_the_staircase(k: int) -> None:
    lattice = two_row_tamari(3, 3, k)
    embedding = two_row_embedding(lattice, 3, 3, k)
    assert sorted(embedding.coordinates) == two_row_points(3, 3, k)


def test_two_row_triples_are_distinct() -> None:
    lattice = two_row_tamari(2, 2, 1)
    triples = two_row_triples(lattice, 2, 2, 1)
    assert len(set(triples)) == lattice.size
    assert all(0 <= triple.height <= 2 for triple in triples)


def test_grid_embedding() -> None:
    assert grid_embedding(1, 3).coordinates == ((0, 0), (0, 1), (0, 2))
    with pytest.raises(ValueError, match="at least one element"):
        grid_embedding(0, 2)


def test_two_row_factors() -> None:
    chains, chains_embedding, rest, rest_embedding = two_row_factors(3, 3, 2)
    assert chains.size == 8
    assert chains_embedding.rightmost_table(3) == (1, 1, 1, 1)
    assert rest.size == 14
    assert rest_embedding.rightmost_table(3) == (1, 2, 3, 4)
    with pytest.raises(ValueError, match="k >= 1"):
        two_row_factors(3, 3, 0)
