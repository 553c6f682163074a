"""
Finite lattices given by their cover relations.

Elements are the integers ``0 .. size-1``. Each element carries an optional payload (a lattice path, a
coordinate pair, a provenance tag) and a label used in exports. Order tests, meets and joins run on reachability
bitsets indexed by a fixed linear extension of the cover graph, so the greatest common lower bound of two
elements is the highest set bit of the intersection of their down-sets.

Examples
--------
>>> from pytamari.FiniteLattice import FiniteLattice
>>> square = FiniteLattice.product_of_chains(2, 2)
>>> square.size
4
>>> square.meet(1, 2) == square.bottom
True
>>> square.orbit_decomposition().sizes
(2, 2)

See Also
--------
pytamari.AltTamari.build_alt_tamari
pytamari.Switching.star_compose
"""

from __future__ import annotations

import logging
import math
from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass
from typing import Any

import networkx as nx

from pytamari.utils import ensure_computed


class LatticeError(ValueError):
    """Raised when a cover graph does not describe a (semidistributive) lattice."""


@dataclass(frozen=True)
class OrbitDecomposition:
    """
    The rowmotion orbits of a lattice.

    Each orbit starts at its smallest element id and lists the elements in rowmotion order. Orbits are sorted by
    size and then by that representative.
    """

    orbits: tuple[tuple[int, ...], ...]
    positions: tuple[tuple[int, int], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(orbit) for orbit in self.orbits)

    @property
    def order(self) -> int:
        """The order of rowmotion, the least common multiple of the orbit sizes."""
        result = 1
        for size in self.sizes:
            result = result * size // math.gcd(result, size)
        return result

    def orbit_of(self, element: int) -> tuple[int, ...]:
        return self.orbits[self.positions[element][0]]

    def to_json(self) -> dict[str, Any]:
        return {
            "orbits": [list(orbit) for orbit in self.orbits],
            "sizes": list(self.sizes),
            "order": self.order,
        }


class FiniteLattice:
    __slots__ = [  # noqa: RUF023
        "_down",
        "_index",
        "_labels",
        "_lower",
        "_order",
        "_orbits",
        "_payloads",
        "_position",
        "_rowmotion",
        "_semidistributive",
        "_up",
        "_upper",
    ]

    def __init__(  # noqa: PLR0913
        self,
        size: int,
        covers: Iterable[tuple[int, int]],
        payloads: Sequence[Hashable] | None = None,
        labels: Sequence[str] | None = None,
        *,
        validate: bool = True,
        trusted_semidistributive: bool = False,
    ) -> None:
        """
        A finite lattice described by its cover relations.

        size (int):
            Number of elements. Elements are the ids ``0 .. size-1``.
        covers (Iterable[tuple[int, int]]):
            Pairs ``(low, high)`` with ``low`` covered by ``high``.
        payloads (Sequence):
            Optional hashable payload per element, such as the lattice path it stands for.
        labels (Sequence[str]):
            Optional export label per element. Defaults to ``str(payload)`` or the element id.
        validate (bool):
            Check that the cover graph is transitively reduced and that every pair has a unique meet and join.
        trusted_semidistributive (bool):
            Skip the semidistributivity check before rowmotion, for families already known to be semidistributive.
        """
        if size < 1:
            msg = "A lattice has at least one element."
            raise LatticeError(msg)
        upper: list[set[int]] = [set() for _ in range(size)]
        lower: list[set[int]] = [set() for _ in range(size)]
        for low, high in covers:
            if not (0 <= low < size and 0 <= high < size):
                msg = f"Cover ({low}, {high}) refers to an element outside 0..{size - 1}."
                raise LatticeError(msg)
            if low == high:
                msg = f"Element {low} cannot cover itself."
                raise LatticeError(msg)
            upper[low].add(high)
            lower[high].add(low)
        self._upper: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(items)) for items in upper)
        self._lower: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(items)) for items in lower)

        graph = nx.DiGraph()
        graph.add_nodes_from(range(size))
        graph.add_edges_from((low, high) for low in range(size) for high in self._upper[low])
        if not nx.is_directed_acyclic_graph(graph):
            msg = "The cover graph contains a cycle."
            raise LatticeError(msg)
        order = list(nx.lexicographical_topological_sort(graph))
        position = [0] * size
        for pos, element in enumerate(order):
            position[element] = pos
        down = [0] * size
        for element in order:
            bits = 1 << position[element]
            for below in self._lower[element]:
                bits |= down[below]
            down[element] = bits
        up = [0] * size
        for element in reversed(order):
            bits = 1 << position[element]
            for above in self._upper[element]:
                bits |= up[above]
            up[element] = bits
        self._order: tuple[int, ...] = tuple(order)
        self._position: tuple[int, ...] = tuple(position)
        self._down: tuple[int, ...] = tuple(down)
        self._up: tuple[int, ...] = tuple(up)

        if payloads is not None and len(payloads) != size:
            msg = f"Expected {size} payloads, got {len(payloads)}."
            raise ValueError(msg)
        self._payloads: tuple[Hashable, ...] | None = tuple(payloads) if payloads is not None else None
        self._index: dict[Hashable, int] = (
            {payload: element for element, payload in enumerate(self._payloads)} if self._payloads else {}
        )
        if labels is not None:
            if len(labels) != size:
                msg = f"Expected {size} labels, got {len(labels)}."
                raise ValueError(msg)
            self._labels: tuple[str, ...] = tuple(labels)
        elif self._payloads is not None:
            self._labels = tuple(str(payload) for payload in self._payloads)
        else:
            self._labels = tuple(str(element) for element in range(size))

        self._semidistributive: bool | None = True if trusted_semidistributive else None
        self._orbits: OrbitDecomposition | None = None
        self._rowmotion: tuple[int, ...] | None = None
        if validate:
            self._validate()
        logging.debug("Built lattice with %d elements and %d covers", size, graph.number_of_edges())

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteLattice(size={self.size}, covers={len(self.covers())})"

    @property
    def size(self) -> int:
        return len(self._order)

    @property
    def bottom(self) -> int:
        return self._order[0]

    @property
    def top(self) -> int:
        return self._order[-1]

    @property
    def payloads(self) -> tuple[Hashable, ...] | None:
        return self._payloads

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def payload(self, element: int) -> Any:  # noqa: ANN401
        if self._payloads is None:
            msg = "This lattice carries no payloads."
            raise ValueError(msg)
        return self._payloads[element]

    def label(self, element: int) -> str:
        return self._labels[element]

    def index_of(self, payload: Hashable) -> int:
        """The element carrying ``payload``."""
        try:
            return self._index[payload]
        except KeyError as e:
            msg = f"No element carries the payload {payload!r}."
            raise ValueError(msg) from e

    def upper_covers(self, element: int) -> tuple[int, ...]:
        return self._upper[element]

    def lower_covers(self, element: int) -> tuple[int, ...]:
        return self._lower[element]

    def covers(self) -> list[tuple[int, int]]:
        """All cover pairs ``(low, high)`` in increasing order."""
        return [(low, high) for low in range(self.size) for high in self._upper[low]]

    def leq(self, x: int, y: int) -> bool:
        return (self._down[y] >> self._position[x]) & 1 == 1

    def upset(self, element: int) -> frozenset[int]:
        return frozenset(self._members(self._up[element]))

    def downset(self, element: int) -> frozenset[int]:
        return frozenset(self._members(self._down[element]))

    def meet(self, x: int, y: int) -> int:
        """
        The greatest lower bound of ``x`` and ``y``.

        >>> chain = FiniteLattice(3, [(0, 1), (1, 2)])
        >>> chain.meet(2, 1)
        1
        """
        common = self._down[x] & self._down[y]
        return self._order[common.bit_length() - 1]

    def join(self, x: int, y: int) -> int:
        """The least upper bound of ``x`` and ``y``."""
        common = self._up[x] & self._up[y]
        return self._order[(common & -common).bit_length() - 1]

    def meet_all(self, elements: Iterable[int]) -> int:
        """The meet of a family of elements; the empty meet is the top."""
        result = self.top
        for element in elements:
            result = self.meet(result, element)
        return result

    def join_all(self, elements: Iterable[int]) -> int:
        """The join of a family of elements; the empty join is the bottom."""
        result = self.bottom
        for element in elements:
            result = self.join(result, element)
        return result

    @ensure_computed("_semidistributive", lambda lattice: _semidistributive_verdict(lattice))
    def is_semidistributive(self) -> bool:
        """
        Check meet- and join-semidistributivity.

        For every ``x <= y`` the set of ``z`` with ``z ∧ y = x`` must have a unique maximal element and the set of
        ``z`` with ``z ∨ x = y`` a unique minimal element. The verdict is computed once per lattice.
        """
        return bool(self._semidistributive)

    def pop_down(self, element: int) -> int:
        """The meet of ``element`` with every element it covers."""
        return self.meet_all((element, *self._lower[element]))

    def pop_up(self, element: int) -> int:
        """The join of ``element`` with every element covering it."""
        return self.join_all((element, *self._upper[element]))

    def rowmotion(self, element: int) -> int:
        """
        Rowmotion: the maximal ``y`` with ``element ∧ y`` equal to :meth:`pop_down` of ``element``.

        Raises
        ------
        LatticeError
            If the lattice is not semidistributive or the maximal candidate is not unique.
        """
        self._require_semidistributive()
        target = self.pop_down(element)
        candidates = 0
        for y in self._members(self._up[target]):
            if self.meet(element, y) == target:
                candidates |= 1 << self._position[y]
        best = self._order[candidates.bit_length() - 1]
        if candidates & ~self._down[best]:
            msg = f"Rowmotion of {self.label(element)} has no unique maximal candidate."
            raise LatticeError(msg)
        return best

    def rowmotion_inverse(self, element: int) -> int:
        """Inverse rowmotion: the minimal ``y`` with ``element ∨ y`` equal to :meth:`pop_up` of ``element``."""
        self._require_semidistributive()
        target = self.pop_up(element)
        candidates = 0
        for y in self._members(self._down[target]):
            if self.join(element, y) == target:
                candidates |= 1 << self._position[y]
        best = self._order[(candidates & -candidates).bit_length() - 1]
        if candidates & ~self._up[best]:
            msg = f"Inverse rowmotion of {self.label(element)} has no unique minimal candidate."
            raise LatticeError(msg)
        return best

    @ensure_computed("_rowmotion", lambda lattice: _rowmotion_images(lattice))
    def rowmotion_map(self) -> tuple[int, ...]:
        """Rowmotion images of all elements, indexed by element id."""
        assert self._rowmotion is not None
        return self._rowmotion

    @ensure_computed("_orbits", lambda lattice: _decompose_orbits(lattice))
    def orbit_decomposition(self) -> OrbitDecomposition:
        """The rowmotion orbits, computed once per lattice."""
        assert self._orbits is not None
        return self._orbits

    def to_dot(self, name: str = "lattice") -> str:
        """
        Render the cover graph as Graphviz DOT text, bottom to top.

        >>> print(FiniteLattice(2, [(0, 1)], labels=["a", "b"]).to_dot())
        digraph lattice {
          rankdir=BT;
          0 [label="a"];
          1 [label="b"];
          0 -> 1;
        }
        """
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        append = lines.append
        for element in range(self.size):
            label = self._labels[element].replace('"', '\\"')
            append(f'  {element} [label="{label}"];')
        for low, high in self.covers():
            append(f"  {low} -> {high};")
        append("}")
        return "\n".join(lines)

    def to_json(self) -> dict[str, Any]:
        return {
            "size": self.size,
            "elements": list(self._labels),
            "covers": [list(pair) for pair in self.covers()],
        }

    @classmethod
    def product_of_chains(cls, p: int, q: int) -> FiniteLattice:
        """
        The product C_p × C_q with payloads ``(x, y)``, ``0 <= x < p`` and ``0 <= y < q``.

        The element id of ``(x, y)`` is ``x * q + y``.
        """
        if p < 1 or q < 1:
            msg = f"Chains need at least one element, got C_{p} × C_{q}."
            raise ValueError(msg)
        points = [(x, y) for x in range(p) for y in range(q)]
        covers = []
        for x, y in points:
            if x + 1 < p:
                covers.append((x * q + y, (x + 1) * q + y))
            if y + 1 < q:
                covers.append((x * q + y, x * q + y + 1))
        return cls(
            len(points),
            covers,
            payloads=points,
            labels=[f"({x},{y})" for x, y in points],
        )

    @classmethod
    def from_labeled_covers(cls, labels: Sequence[str], covers: Iterable[tuple[str, str]]) -> FiniteLattice:
        """
        Build a lattice from covers written with element labels.

        >>> diamond = FiniteLattice.from_labeled_covers("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
        >>> diamond.label(diamond.join(1, 2))
        'd'
        """
        index = {label: element for element, label in enumerate(labels)}
        try:
            pairs = [(index[low], index[high]) for low, high in covers]
        except KeyError as e:
            msg = f"Unknown element label {e.args[0]!r}."
            raise ValueError(msg) from e
        return cls(len(labels), pairs, payloads=list(labels), labels=list(labels))

    def _members(self, bits: int) -> list[int]:
        members = []
        while bits:
            lowest = bits & -bits
            members.append(self._order[lowest.bit_length() - 1])
            bits ^= lowest
        return members

    def _require_semidistributive(self) -> None:
        if not self.is_semidistributive():
            msg = "Rowmotion needs a semidistributive lattice."
            raise LatticeError(msg)

    def _validate(self) -> None:
        everything = (1 << self.size) - 1
        if self._up[self.bottom] != everything:
            msg = "The lattice has no unique bottom element."
            raise LatticeError(msg)
        if self._down[self.top] != everything:
            msg = "The lattice has no unique top element."
            raise LatticeError(msg)
        for element in range(self.size):
            mask = 0
            for above in self._upper[element]:
                mask |= 1 << self._position[above]
            for above in self._upper[element]:
                if self._up[above] & mask != 1 << self._position[above]:
                    msg = f"Cover {self.label(element)} ⋖ {self.label(above)} is not transitively reduced."
                    raise LatticeError(msg)
        for x in range(self.size):
            for y in range(x + 1, self.size):
                common = self._down[x] & self._down[y]
                if self._down[self._order[common.bit_length() - 1]] != common:
                    msg = f"{self.label(x)} and {self.label(y)} have no unique meet."
                    raise LatticeError(msg)
                common = self._up[x] & self._up[y]
                if self._up[self._order[(common & -common).bit_length() - 1]] != common:
                    msg = f"{self.label(x)} and {self.label(y)} have no unique join."
                    raise LatticeError(msg)


def _semidistributive_verdict(lattice: FiniteLattice) -> bool:
    order, position = lattice._order, lattice._position  # noqa: SLF001
    down, up = lattice._down, lattice._up  # noqa: SLF001
    for fixed in range(lattice.size):
        meets: dict[int, int] = {}
        joins: dict[int, int] = {}
        for z in range(lattice.size):
            bit = 1 << position[z]
            meet = lattice.meet(z, fixed)
            meets[meet] = meets.get(meet, 0) | bit
            join = lattice.join(z, fixed)
            joins[join] = joins.get(join, 0) | bit
        for bits in meets.values():
            if bits & ~down[order[bits.bit_length() - 1]]:
                logging.debug("Meet-semidistributivity fails below %s", lattice.label(fixed))
                return False
        for bits in joins.values():
            if bits & ~up[order[(bits & -bits).bit_length() - 1]]:
                logging.debug("Join-semidistributivity fails above %s", lattice.label(fixed))
                return False
    return True


def _rowmotion_images(lattice: FiniteLattice) -> tuple[int, ...]:
    return tuple(lattice.rowmotion(element) for element in range(lattice.size))


def _decompose_orbits(lattice: FiniteLattice) -> OrbitDecomposition:
    images = lattice.rowmotion_map()
    seen = [False] * lattice.size
    orbits = []
    for start in range(lattice.size):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        current = images[start]
        while current != start:
            if seen[current]:
                msg = "Rowmotion is not a bijection on this lattice."
                raise LatticeError(msg)
            orbit.append(current)
            seen[current] = True
            current = images[current]
        orbits.append(tuple(orbit))
    orbits.sort(key=lambda orbit: (len(orbit), orbit[0]))
    positions = [(0, 0)] * lattice.size
    for index, members in enumerate(orbits):
        for phase, element in enumerate(members):
            positions[element] = (index, phase)
    return OrbitDecomposition(tuple(orbits), tuple(positions))
