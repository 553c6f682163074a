import json

import pytest

from pytamari.FiniteLattice import FiniteLattice, LatticeError


def test_pentagon_order(pentagon: FiniteLattice) -> None:
    assert pentagon.bottom == 0
    assert pentagon.top == 4
    assert pentagon.leq(1, 2)
    assert not pentagon.leq(1, 3)
    assert pentagon.meet(2, 3) == 0
    assert pentagon.join(1, 3) == 4
    assert pentagon.upset(1) == frozenset({1, 2, 4})
    assert pentagon.downset(2) == frozenset({0, 1, 2})


def test_meet_all_and_join_all(pentagon: FiniteLattice) -> None:
    assert pentagon.meet_all([]) == pentagon.top
    assert pentagon.join_all([]) == pentagon.bottom
    assert pentagon.meet_all([4, 2, 1]) == 1
    assert pentagon.join_all([1, 3]) == 4


def test_pentagon_rowmotion(pentagon: FiniteLattice) -> None:
    assert pentagon.is_semidistributive()
    assert pentagon.rowmotion_map() == (4, 3, 1, 2, 0)
    assert pentagon.orbit_decomposition().orbits == ((0, 4), (1, 3, 2))
    for element in range(pentagon.size):
        assert pentagon.rowmotion_inverse(pentagon.rowmotion(element)) == element


def test_rowmotion_map_is_computed_once(pentagon: FiniteLattice, monkeypatch: pytest.MonkeyPatch) -> None:
    images = pentagon.rowmotion_map()

    def fail(_self: FiniteLattice, _element: int) -> int:
        msg = "rowmotion recomputed"
        raise AssertionError(msg)

    monkeypatch.setattr(FiniteLattice, "rowmotion", fail)
    assert pentagon.rowmotion_map() is images
    assert pentagon.orbit_decomposition().sizes == (2, 3)


def test_pop_operators(pentagon: FiniteLattice) -> None:
    assert pentagon.pop_down(4) == 0
    assert pentagon.pop_down(2) == 1
    assert pentagon.pop_up(0) == 4
    assert pentagon.pop_up(1) == 2


def test_diamond_is_not_semidistributive(diamond: FiniteLattice) -> None:
    assert not diamond.is_semidistributive()
    with pytest.raises(LatticeError, match="semidistributive"):
        diamond.rowmotion(0)


def test_trusted_semidistributive_skips_the_check(diamond: FiniteLattice) -> None:
    trusted = FiniteLattice(5, diamond.covers(), trusted_semidistributive=True)
    assert trusted.is_semidistributive()


def test_thirteen_element_orbit(thirteen: FiniteLattice) -> None:
    element = thirteen.index_of("m")
    trace = []
    for _ in range(thirteen.size):
        trace.append(thirteen.label(element))
        element = thirteen.rowmotion(element)
    assert "".join(trace) == "mgbjihckedlfa"
    assert thirteen.label(element) == "m"
    assert thirteen.orbit_decomposition().sizes == (13,)


def test_thirteen_element_operators(thirteen: FiniteLattice) -> None:
    def label_of(element: int) -> str:
        return thirteen.label(element)

    index = thirteen.index_of
    assert label_of(thirteen.pop_down(index("m"))) == "g"
    assert label_of(thirteen.pop_down(index("b"))) == "a"
    assert label_of(thirteen.meet(index("i"), index("l"))) == "g"
    assert label_of(thirteen.rowmotion(index("b"))) == "j"


@pytest.mark.parametrize(
    ("size", "covers", "message"),
    [
        (0, [], "at least one element"),
        (2, [(0, 2)], "outside"),
        (2, [(1, 1)], "cover itself"),
        (2, [(0, 1), (1, 0)], "cycle"),
        (3, [(0, 1), (1, 2), (0, 2)], "transitively reduced"),
        (3, [(0, 2), (1, 2)], "bottom"),
        (4, [(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)], "transitively reduced"),
    ],
)
def test_invalid_cover_graphs(size: int, covers: list[tuple[int, int]], message: str) -> None:
    with pytest.raises(LatticeError, match=message):
        FiniteLattice(size, covers)


def test_missing_unique_join() -> None:
    # 1 and 2 have the two minimal upper bounds 3 and 4
    covers = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    with pytest.raises(LatticeError, match="unique"):
        FiniteLattice(6, covers)


def test_payloads_and_labels() -> None:
    chain = FiniteLattice(2, [(0, 1)], payloads=["low", "high"])
    assert chain.index_of("high") == 1
    assert chain.labels == ("low", "high")
    with pytest.raises(ValueError, match="payload"):
        chain.index_of("middle")
    with pytest.raises(ValueError, match="payloads"):
        FiniteLattice(2, [(0, 1)], payloads=["only"])
    with pytest.raises(ValueError, match="no payloads"):
        FiniteLattice(1, []).payload(0)


def test_product_of_chains() -> None:
    grid = FiniteLattice.product_of_chains(3, 2)
    assert grid.size == 6
    assert grid.payload(grid.bottom) == (0, 0)
    assert grid.payload(grid.top) == (2, 1)
    assert grid.orbit_decomposition().sizes == (6,)
    with pytest.raises(ValueError, match="at least one element"):
        FiniteLattice.product_of_chains(0, 2)


def test_from_labeled_covers_rejects_unknown_labels() -> None:
    with pytest.raises(ValueError, match="Unknown element label"):
        FiniteLattice.from_labeled_covers("ab", [("a", "c")])


def test_exports(pentagon: FiniteLattice) -> None:
    dot = pentagon.to_dot("pentagon")
    assert dot.startswith("digraph pentagon {")
    assert dot.count("->") == 5
    data = pentagon.to_json()
    assert data["size"] == 5
    assert data["elements"] == ["0", "x", "y", "z", "1"]
    assert json.loads(json.dumps(data))["covers"] == [[0, 1], [0, 3], [1, 2], [2, 4], [3, 4]]


def test_orbit_decomposition_is_cached(pentagon: FiniteLattice) -> None:
    first = pentagon.orbit_decomposition()
    assert pentagon.orbit_decomposition() is first
    assert first.order == 6
    assert first.orbit_of(2) == (1, 3, 2)
    assert first.to_json() == {"orbits": [[0, 4], [1, 3, 2]], "sizes": [2, 3], "order": 6}
