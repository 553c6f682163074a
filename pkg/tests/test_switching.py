import pytest

from pytamari.ClosedForms import coordinate_covers, two_row_hasse_prediction
from pytamari.Families import two_row_embedding, two_row_factors, two_row_tamari
from pytamari.FiniteLattice import FiniteLattice
from pytamari.Switching import StarElement, SwitchEmbedding, check_switching, star_compose, star_embedding


@pytest.fixture
def grid() -> FiniteLattice:
    return FiniteLattice.product_of_chains(2, 3)


def test_embedding_accessors(grid: FiniteLattice) -> None:
    embedding = SwitchEmbedding.from_payloads(grid)
    assert len(embedding) == 6
    assert embedding[grid.top] == (1, 2)
    assert embedding.element_at(1, 0) == 3
    assert embedding.element_at(5, 5) is None
    assert embedding.rows() == {0: [0, 3], 1: [1, 4], 2: [2, 5]}
    assert embedding.rightmost_table(2) == (1, 1, 1)
    assert embedding.shifted(2)[0] == (2, 0)
    assert embedding.to_json()[:2] == [[0, 0], [0, 1]]
    with pytest.raises(ValueError, match="No element lies on the row"):
        embedding.rightmost(3)


def test_from_payloads_needs_coordinates() -> None:
    lattice = FiniteLattice(2, [(0, 1)], payloads=["low", "high"])
    with pytest.raises(TypeError, match="carries no coordinates"):
        SwitchEmbedding.from_payloads(lattice)


def test_check_switching(grid: FiniteLattice) -> None:
    embedding = SwitchEmbedding.from_payloads(grid)
    assert check_switching(grid, embedding, 2)
    assert not check_switching(grid, embedding, 1)
    assert not check_switching(grid, SwitchEmbedding(embedding.coordinates[:5]), 2)


def test_check_switching_logs_the_failing_condition(grid: FiniteLattice, caplog: pytest.LogCaptureFixture) -> None:
    flipped = SwitchEmbedding(((0, 0), (0, 1), (0, 2), (2, 0), (1, 1), (1, 2)))
    with caplog.at_level("DEBUG"):
        assert not check_switching(grid, flipped, 2)
    assert "cover direction" in caplog.text


def test_check_switching_rejects_shared_points(grid: FiniteLattice, caplog: pytest.LogCaptureFixture) -> None:
    crowded = SwitchEmbedding(((0, 0), (0, 1), (0, 2), (1, 0), (1, 0), (1, 2)))
    with caplog.at_level("DEBUG"):
        assert not check_switching(grid, crowded, 2)
    assert "share a point" in caplog.text


def test_two_row_lattices_have_the_switching_property() -> None:
    for k in range(4):
        lattice = two_row_tamari(3, 3, k)
        assert check_switching(lattice, two_row_embedding(lattice, 3, 3, k), 3)


def test_star_compose_grids(grid: FiniteLattice) -> None:
    embedding = SwitchEmbedding.from_payloads(grid)
    composed = star_compose(grid, embedding, grid, embedding, 2)
    assert composed.size == 12
    assert len(composed.covers()) == 2 * len(grid.covers()) + 3
    composed_embedding = star_embedding(composed)
    assert sorted(composed_embedding.coordinates) == [(x, y) for x in range(4) for y in range(3)]
    assert str(composed.payload(composed.top)) == "B(1,2)"
    assert composed.payload(0) == StarElement("A", 0, (0, 0), (0, 0))


def test_star_compose_rejects_factors_without_the_property(grid: FiniteLattice) -> None:
    tall = FiniteLattice.product_of_chains(2, 4)
    with pytest.raises(ValueError, match="Factor B does not have the 2-switching property"):
        star_compose(grid, SwitchEmbedding.from_payloads(grid), tall, SwitchEmbedding.from_payloads(tall), 2)


@pytest.mark.parametrize(("a", "b", "k"), [(2, 2, 1), (3, 3, 2), (3, 3, 3), (2, 3, 1)])
def test_star_composition_reproduces_the_two_row_lattices(a: int, b: int, k: int) -> None:
    chains, chains_embedding, rest, rest_embedding = two_row_factors(a, b, k)
    forward = star_compose(chains, chains_embedding, rest, rest_embedding, a)
    backward = star_compose(rest, rest_embedding, chains, chains_embedding, a, names=("B", "A"))
    for composed, target_k in ((forward, 0), (backward, k)):
        coordinates = star_embedding(composed).coordinates
        assert coordinate_covers(composed, coordinates) == two_row_hasse_prediction(a, b, target_k)
