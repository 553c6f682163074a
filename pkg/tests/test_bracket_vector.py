import pytest

from pytamari.AltTamari import build_alt_tamari, enumerate_nu_paths
from pytamari.BracketVector import (
    BracketVector,
    HookCoords,
    TwoRowTriple,
    bracket_vector,
    componentwise_leq,
    fixed_positions,
    hook_coords,
    nu_hat,
    two_row_triple,
)
from pytamari.LatticePath import IncrementVector, LatticePath


def test_nu_hat() -> None:
    nu = LatticePath("EN^2E^2N")
    assert nu_hat(nu, IncrementVector.full(nu)) == nu
    assert str(nu_hat(nu, IncrementVector.zero(nu))) == "E^3N^3"
    assert str(nu_hat(nu, "1,0")) == "E^2N^2EN"
    assert str(nu_hat("E^3NE^3N", "0,0")) == "E^6N^2"


def test_fixed_positions() -> None:
    assert fixed_positions("EN^2E^2N") == (1, 2, 5, 6)
    assert fixed_positions("E^4NE^2N") == (4, 7, 8)


def test_bracket_vectors_of_the_extremes() -> None:
    assert str(bracket_vector("EN", "EN")) == "(0,[0],[1])"
    assert str(bracket_vector("EN", "NE")) == "(1,[0],[1])"
    assert bracket_vector("EN^2E^2N", "N^3E^3").entries == (3, 0, 1, 3, 3, 2, 3)


def test_bracket_vector_rejects_paths_below_the_base() -> None:
    with pytest.raises(ValueError, match="weakly above"):
        bracket_vector("EN^2E^2N", "E^2N^2EN")
    with pytest.raises(ValueError, match="weakly above"):
        bracket_vector("EN", "NNE")


def test_componentwise_order_realises_the_tamari_order() -> None:
    lattice = build_alt_tamari("EN^2E^2N")
    vectors = [bracket_vector("EN^2E^2N", lattice.payload(element)) for element in range(lattice.size)]
    assert len(set(vectors)) == lattice.size
    for x in range(lattice.size):
        for y in range(lattice.size):
            assert componentwise_leq(vectors[x], vectors[y]) == lattice.leq(x, y)


def test_componentwise_leq_rejects_different_bases() -> None:
    with pytest.raises(ValueError, match="different base paths"):
        componentwise_leq(bracket_vector("EN", "EN"), bracket_vector("NE", "NE"))


@pytest.mark.parametrize(
    ("entries", "fixed"),
    [((1, 0, 1), (1, 0)), ((1, 0, 2), (1, 2)), ((0, 0), (1, 2))],
)
def test_bracket_vector_validation(entries: tuple[int, ...], fixed: tuple[int, ...]) -> None:
    with pytest.raises(ValueError, match="Fixed position"):
        BracketVector(entries, fixed)


def test_to_json() -> None:
    assert bracket_vector("EN", "NE").to_json() == {"entries": [1, 0, 1], "fixed_positions": [1, 2]}


def test_hook_coords() -> None:
    base = "E^4N^3E^3N"
    assert hook_coords(bracket_vector(base, "N^2ENE^2NE^4"), 4, 7, 3) == HookCoords(2, 4)
    assert hook_coords(bracket_vector(base, "EN^3E^6N"), 4, 7, 3) == HookCoords(0, 0)
    with pytest.raises(ValueError, match="not a bracket vector relative to"):
        hook_coords(bracket_vector(base, base), 4, 7, 2)
    with pytest.raises(ValueError, match="No alt hook-Tamari lattice"):
        hook_coords(bracket_vector(base, base), 1, 7, 3)


def test_hook_coords_cover_the_hook_shape() -> None:
    base = nu_hat("EN^2E^2N", "1,0")
    coords = sorted(hook_coords(bracket_vector(base, path), 3, 3, 1) for path in enumerate_nu_paths("EN^2E^2N"))
    assert coords[0] == HookCoords(0, 0)
    assert coords[-1] == HookCoords(3, 2)
    assert HookCoords(2, 2) not in coords
    assert HookCoords(3, 0) not in coords
    assert len(set(coords)) == 10


def test_two_row_triple() -> None:
    vector = bracket_vector("E^4NE^2N", "NE^2NE^4")
    assert two_row_triple(vector, 3, 3, 2) == TwoRowTriple(3, 4, 0)
    assert two_row_triple(bracket_vector("E^4NE^2N", "E^3NE^3N"), 3, 3, 2) == TwoRowTriple(0, 0, 0)
    with pytest.raises(ValueError, match="No alt 2-row-Tamari lattice"):
        two_row_triple(vector, 3, 3, 4)


def test_hook_coords_order() -> None:
    assert HookCoords(0, 5) < HookCoords(1, 0)
    assert max(HookCoords(2, 1), HookCoords(2, 3)) == HookCoords(2, 3)
