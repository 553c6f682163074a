from __future__ import annotations

import pytest

from pytamari.utils import ensure_computed


def mock_fetch_table(obj: MockTable, *args: object, **kwargs: object) -> list[int]:
    obj.fetch_count += 1
    return [obj.base * value for value in range(obj.size)]


class MockTable:
    def __init__(self, base: int = 2, size: int = 3) -> None:
        self.base = base
        self.size = size
        self.fetch_count = 0
        self._table: list[int] | None = None

    @ensure_computed("_table", mock_fetch_table)  # type: ignore[arg-type]
    def value(self, index: int) -> int:
        assert self._table is not None
        if not 0 <= index < len(self._table):
            msg = "Table index out of range"
            raise IndexError(msg)
        return self._table[index]


def test_ensure_computed_fetches_when_not_present() -> None:
    table = MockTable()
    assert table._table is None  # noqa: SLF001
    assert table.value(2) == 4
    assert table._table == [0, 2, 4]  # noqa: SLF001


def test_ensure_computed_does_not_fetch_twice() -> None:
    table = MockTable()
    table.value(0)
    table.value(1)
    assert table.fetch_count == 1


def test_ensure_computed_does_not_fetch_when_present() -> None:
    table = MockTable()
    table._table = [7]  # noqa: SLF001
    assert table.value(0) == 7
    assert table.fetch_count == 0


def test_ensure_computed_raises_index_error() -> None:
    table = MockTable()
    with pytest.raises(IndexError):
        table.value(3)


def test_ensure_computed_with_fetch_args() -> None:
    class Scaled:
        def __init__(self) -> None:
            self.factor = 5
            self._value: str | None = None

        @ensure_computed("_value", lambda obj, factor, mark: f"{factor}{mark}", ["factor", "!"])
        def value(self) -> str:
            assert self._value is not None
            return self._value

    assert Scaled().value() == "5!"


def test_ensure_computed_with_fetch_kwargs() -> None:
    class Labeled:
        _label: str | None = None

        @ensure_computed("_label", lambda obj, suffix: f"lattice{suffix}", suffix="-13")
        def label(self) -> str:
            assert self._label is not None
            return self._label

    assert Labeled().label() == "lattice-13"


def test_ensure_computed_preserves_metadata() -> None:
    assert MockTable.value.__name__ == "value"
