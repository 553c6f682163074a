"""
Planar embeddings, the n-switching property and the star composition of two lattices.

A lattice has the n-switching property when its elements sit on lattice points (x, y) so that the left column
(0, 0) ⋖ (0, 1) ⋖ … ⋖ (0, n) is present and nothing else lies on x = 0, every cover is a unit step up or a step
to the right, and elements on a common row are ordered by their x-coordinate. Two such lattices A and B glue into
A * B: the rightmost element of A on each row y = m is covered by the leftmost element (0, m) of B.

Examples
--------
>>> from pytamari.FiniteLattice import FiniteLattice
>>> from pytamari.Switching import SwitchEmbedding, check_switching, star_compose
>>> grid = FiniteLattice.product_of_chains(2, 3)
>>> embedding = SwitchEmbedding.from_payloads(grid)
>>> check_switching(grid, embedding, 2)
True
>>> star_compose(grid, embedding, grid, embedding, 2).size
12

See Also
--------
pytamari.Families.two_row_embedding
pytamari.Families.grid_embedding
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from pytamari.FiniteLattice import FiniteLattice

Point = tuple[int, int]


@dataclass(frozen=True)
class StarElement:
    """
    Provenance of an element of a star composition.

    side:
        Name of the factor the element comes from.
    source:
        Element id inside that factor.
    local:
        Coordinates inside the factor.
    coordinates:
        Coordinates inside the composition, with the second factor shifted to the right.
    """

    side: str
    source: int
    local: Point
    coordinates: Point

    def __str__(self) -> str:
        return f"{self.side}({self.local[0]},{self.local[1]})"


@dataclass(frozen=True)
class SwitchEmbedding:
    """Planar coordinates (x, y) of the elements of a lattice, indexed by element id."""

    coordinates: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.coordinates)

    def __getitem__(self, element: int) -> Point:
        return self.coordinates[element]

    def element_at(self, x: int, y: int) -> int | None:
        """The element placed at (x, y), or None."""
        for element, point in enumerate(self.coordinates):
            if point == (x, y):
                return element
        return None

    def rows(self) -> dict[int, list[int]]:
        """Elements grouped by y-coordinate, each row sorted by x."""
        rows: dict[int, list[int]] = defaultdict(list)
        for element, (_, y) in enumerate(self.coordinates):
            rows[y].append(element)
        return {y: sorted(members, key=lambda element: self.coordinates[element][0]) for y, members in rows.items()}

    def rightmost(self, m: int) -> int:
        """
        The x-coordinate x_m of the rightmost element on the row y = m.

        Raises
        ------
        ValueError
            If the row is empty.
        """
        xs = [x for x, y in self.coordinates if y == m]
        if not xs:
            msg = f"No element lies on the row y = {m}."
            raise ValueError(msg)
        return max(xs)

    def rightmost_table(self, n: int) -> tuple[int, ...]:
        """The staircase (x_0, x_1, …, x_n)."""
        return tuple(self.rightmost(m) for m in range(n + 1))

    def shifted(self, dx: int) -> SwitchEmbedding:
        return SwitchEmbedding(tuple((x + dx, y) for x, y in self.coordinates))

    def to_json(self) -> list[list[int]]:
        return [list(point) for point in self.coordinates]

    @classmethod
    def from_payloads(cls, lattice: FiniteLattice) -> SwitchEmbedding:
        """
        Read the embedding from the payloads of ``lattice``.

        Payloads must be coordinate pairs or :class:`StarElement` records.

        Raises
        ------
        TypeError
            If a payload carries no coordinates.
        """
        points = []
        for element in range(lattice.size):
            payload = lattice.payload(element)
            if isinstance(payload, StarElement):
                points.append(payload.coordinates)
            elif isinstance(payload, tuple) and len(payload) == 2:  # noqa: PLR2004
                points.append((int(payload[0]), int(payload[1])))
            else:
                msg = f"Payload {payload!r} of element {element} carries no coordinates."
                raise TypeError(msg)
        return cls(tuple(points))


def _fail(condition: str, detail: Any) -> bool:  # noqa: ANN401
    logging.debug("Switching condition %s fails: %s", condition, detail)
    return False


def check_switching(lattice: FiniteLattice, embedding: SwitchEmbedding, n: int) -> bool:  # noqa: PLR0911
    """
    Check the n-switching property of ``lattice`` under ``embedding``.

    Parameters
    ----------
    lattice : FiniteLattice
        A lattice; it must be semidistributive.
    embedding : SwitchEmbedding
        One point per element.
    n : int
        Height of the left column.

    Returns
    -------
    bool
        True when the embedding is injective with nonnegative coordinates, the left column is exactly
        (0, 0) ⋖ … ⋖ (0, n), every cover is a unit step up or a step to the right, each row is a chain ordered by
        x, and the rightmost table x_0 ≤ … ≤ x_n is weakly increasing. The failing condition is logged at debug
        level.
    """
    if len(embedding) != lattice.size:
        return _fail("placement", f"{len(embedding)} points for {lattice.size} elements")
    if len(set(embedding.coordinates)) != lattice.size:
        return _fail("placement", "two elements share a point")
    if any(x < 0 or y < 0 for x, y in embedding.coordinates):
        return _fail("placement", "negative coordinate")
    if not lattice.is_semidistributive():
        return _fail("semidistributivity", "lattice is not semidistributive")

    column = sorted(y for x, y in embedding.coordinates if x == 0)
    if column != list(range(n + 1)):
        return _fail("left column", f"x = 0 holds rows {column}, expected 0..{n}")
    for m in range(1, n + 1):
        low, high = embedding.element_at(0, m - 1), embedding.element_at(0, m)
        if high not in lattice.upper_covers(low):  # type: ignore[arg-type]
            return _fail("left column", f"(0,{m - 1}) is not covered by (0,{m})")

    for low, high in lattice.covers():
        (c1, d1), (c2, d2) = embedding[low], embedding[high]
        if not ((c2 - c1, d2 - d1) == (0, 1) or (d1 == d2 and c2 > c1)):
            return _fail("cover direction", f"({c1},{d1}) ⋖ ({c2},{d2})")

    for y, members in embedding.rows().items():
        for left, right in zip(members, members[1:]):
            if not lattice.leq(left, right):
                return _fail("row order", f"row {y} is not a chain ordered by x")

    table = embedding.rightmost_table(n)
    if any(later < earlier for earlier, later in zip(table, table[1:])):
        return _fail("staircase", f"rightmost table {table}")
    return True


def star_compose(  # noqa: PLR0913
    first: FiniteLattice,
    first_embedding: SwitchEmbedding,
    second: FiniteLattice,
    second_embedding: SwitchEmbedding,
    n: int,
    names: Sequence[str] = ("A", "B"),
) -> FiniteLattice:
    """
    The star composition ``first * second``.

    The elements are the disjoint union of both factors, first factor first. Besides the covers of each factor,
    the rightmost element (x_m, m) of ``first`` is covered by (0, m) of ``second`` for m = 0 … n. The second
    factor is placed to the right of the first one, so the composition carries a planar embedding again; read it
    with :func:`star_embedding`.

    Parameters
    ----------
    first, second : FiniteLattice
        The factors.
    first_embedding, second_embedding : SwitchEmbedding
        Their embeddings; both must have the n-switching property.
    n : int
        Height of the left columns.
    names : Sequence[str]
        Provenance names of the two factors. Pass the same names when composing in the opposite order so that
        both compositions tag elements alike.

    Raises
    ------
    ValueError
        If a factor does not have the n-switching property.
    """
    for label, lattice, embedding in (
        (names[0], first, first_embedding),
        (names[1], second, second_embedding),
    ):
        if not check_switching(lattice, embedding, n):
            msg = f"Factor {label} does not have the {n}-switching property."
            raise ValueError(msg)
    offset = first.size
    shift = max(x for x, _ in first_embedding.coordinates) + 1
    payloads = [
        StarElement(names[0], element, first_embedding[element], first_embedding[element])
        for element in range(first.size)
    ]
    for element, (x, y) in enumerate(second_embedding.coordinates):
        payloads.append(StarElement(names[1], element, (x, y), (x + shift, y)))
    covers = list(first.covers())
    covers.extend((offset + low, offset + high) for low, high in second.covers())
    for m in range(n + 1):
        rightmost = first_embedding.element_at(first_embedding.rightmost(m), m)
        leftmost = second_embedding.element_at(0, m)
        covers.append((rightmost, offset + leftmost))  # type: ignore[operator, arg-type]
    logging.debug("Star composition %s * %s with %d + %d elements", names[0], names[1], first.size, second.size)
    return FiniteLattice(first.size + second.size, covers, payloads=payloads)


def star_embedding(lattice: FiniteLattice) -> SwitchEmbedding:
    """The planar embedding carried by the payloads of a star composition."""
    return SwitchEmbedding.from_payloads(lattice)
