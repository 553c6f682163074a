"""
Statistics on lattice elements and their sums over rowmotion orbits.

A statistic is homomesic when its average is the same on every orbit and homometric when orbits of equal size
carry equal sums. Both verdicts are decided in exact rational arithmetic.

Examples
--------
>>> from pytamari.Families import hook_tamari
>>> from pytamari.Statistics import orbit_stat_report
>>> lattice = hook_tamari(2, 2, 0)
>>> report = orbit_stat_report(lattice, lattice.orbit_decomposition(), "ddeg")
>>> report.sizes, report.sums
((2, 3), (2, 3))
>>> report.homomesic
True
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import networkx as nx

from pytamari.FiniteLattice import FiniteLattice, OrbitDecomposition  # noqa: TC001
from pytamari.LatticePath import LatticePath

FenceNode = tuple[str, int]
Antichain = frozenset[FenceNode]
APEX: FenceNode = ("apex", 0)


@dataclass(frozen=True)
class PathStats:
    """Peaks (``NE`` factors), valleys (``EN`` factors) and the area between a path and its bound."""

    peak: int
    val: int
    area: int


def ddeg(lattice: FiniteLattice, element: int) -> int:
    """The down-degree: the number of elements covered by ``element``."""
    return len(lattice.lower_covers(element))


def path_stats(mu: str | LatticePath, nu: str | LatticePath) -> PathStats:
    """
    Peak, valley and area statistics of a ν-path.

    The area counts the unit cells between μ and ν row by row.

    Raises
    ------
    ValueError
        If μ is not weakly above ν.

    Examples
    --------
    >>> path_stats("NENE^2N", "EN^2E^2N")
    PathStats(peak=2, val=2, area=1)
    """
    mu = mu if isinstance(mu, LatticePath) else LatticePath(mu)
    nu = nu if isinstance(nu, LatticePath) else LatticePath(nu)
    if not mu.is_weakly_above(nu):
        msg = f"{mu} is not a ν-path for ν = {nu}."
        raise ValueError(msg)
    area = sum(bound - x for x, bound in zip(mu.north_positions, nu.north_positions))
    return PathStats(mu.peaks, mu.valleys, area)


def _path_statistic(field: str) -> Callable[[FiniteLattice, int], int]:
    def statistic(lattice: FiniteLattice, element: int) -> int:
        nu = lattice.payload(lattice.bottom)
        return int(getattr(path_stats(lattice.payload(element), nu), field))

    return statistic


STATISTICS: dict[str, Callable[[FiniteLattice, int], int]] = {
    "ddeg": ddeg,
    "peak": _path_statistic("peak"),
    "val": _path_statistic("val"),
    "area": _path_statistic("area"),
}


def _statistic(name: str) -> Callable[[FiniteLattice, int], int]:
    try:
        return STATISTICS[name]
    except KeyError as e:
        msg = f"Unknown statistic '{name}'. Expected one of: {', '.join(STATISTICS)}."
        raise ValueError(msg) from e


def statistic_values(lattice: FiniteLattice, name: str) -> tuple[int, ...]:
    """
    Tabulate a registered statistic over all elements, indexed by element id.

    The path statistics measure against the payload of the bottom element, which is ν for lattices built by
    :func:`pytamari.AltTamari.build_alt_tamari`.
    """
    statistic = _statistic(name)
    return tuple(statistic(lattice, element) for element in range(lattice.size))


@dataclass(frozen=True)
class StatReport:
    """Orbit sums of one statistic with the homomesy and homometry verdicts."""

    statistic: str
    sizes: tuple[int, ...]
    sums: tuple[int, ...]

    @property
    def averages(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(total, size) for total, size in zip(self.sums, self.sizes))

    @property
    def homomesic(self) -> bool:
        return len(set(self.averages)) <= 1

    @property
    def average(self) -> Fraction | None:
        """The common orbit average, or None when the statistic is not homomesic."""
        return self.averages[0] if self.homomesic and self.sizes else None

    @property
    def homometric(self) -> bool:
        by_size: dict[int, set[int]] = {}
        for size, total in zip(self.sizes, self.sums):
            by_size.setdefault(size, set()).add(total)
        return all(len(totals) == 1 for totals in by_size.values())

    def size_sum_pairs(self) -> list[tuple[int, int]]:
        """The (size, sum) pairs as a sorted multiset."""
        return sorted(zip(self.sizes, self.sums))

    def to_json(self) -> dict[str, Any]:
        average = self.average
        return {
            "statistic": self.statistic,
            "orbits": [{"size": size, "sum": total} for size, total in zip(self.sizes, self.sums)],
            "homomesic": self.homomesic,
            "average": str(average) if average is not None else None,
            "homometric": self.homometric,
        }

    def to_table(self) -> str:
        """
        An aligned text table with one line per orbit.

        >>> print(StatReport("ddeg", (2, 3), (2, 3)).to_table())
        orbit  size  ddeg  average
        0         2     2        1
        1         3     3        1
        homomesic: yes  homometric: yes
        """
        header = ("orbit", "size", self.statistic, "average")
        rows = [
            (str(index), str(size), str(total), str(average))
            for index, (size, total, average) in enumerate(zip(self.sizes, self.sums, self.averages))
        ]
        widths = [max(len(row[column]) for row in [header, *rows]) for column in range(len(header))]
        lines = [
            "  ".join(
                cell.ljust(widths[column]) if column == 0 else cell.rjust(widths[column])
                for column, cell in enumerate(row)
            )
            for row in [header, *rows]
        ]
        lines.append(
            f"homomesic: {'yes' if self.homomesic else 'no'}  homometric: {'yes' if self.homometric else 'no'}"
        )
        return "\n".join(lines)


def orbit_stat_report(
    lattice: FiniteLattice,
    decomposition: OrbitDecomposition | None = None,
    statistic: str = "ddeg",
) -> StatReport:
    """
    Sum a registered statistic over every rowmotion orbit.

    Parameters
    ----------
    lattice : FiniteLattice
        A semidistributive lattice.
    decomposition : OrbitDecomposition | None
        Its orbit decomposition; computed when None.
    statistic : str
        A name from :data:`STATISTICS`.

    Raises
    ------
    ValueError
        If the statistic is unknown or the decomposition does not partition the lattice.
    """
    values = statistic_values(lattice, statistic)
    decomposition = lattice.orbit_decomposition() if decomposition is None else decomposition
    if sum(decomposition.sizes) != lattice.size:
        msg = "The orbit decomposition does not match the lattice."
        raise ValueError(msg)
    sums = tuple(sum(values[element] for element in orbit) for orbit in decomposition.orbits)
    report = StatReport(statistic, decomposition.sizes, sums)
    if not report.homometric:
        logging.info("Statistic %s is not homometric on a lattice with %d elements", statistic, lattice.size)
    return report


def fence_poset(a: int, b: int) -> nx.DiGraph:
    """
    The two-segment fence: chains of a − 1 and b − 1 elements below a common maximum.

    Edges point from an element to the element covering it.
    """
    if a < 1 or b < 1:
        msg = f"The fence needs a, b >= 1, got (a, b) = ({a}, {b})."
        raise ValueError(msg)
    fence = nx.DiGraph()
    fence.add_node(APEX)
    for side, length in (("left", a - 1), ("right", b - 1)):
        chain = [(side, i) for i in range(1, length + 1)]
        nx.add_path(fence, [*chain, APEX])
    return fence


def fence_antichains(fence: nx.DiGraph) -> list[Antichain]:
    """All antichains of ``fence``, empty antichain first."""
    closure = nx.transitive_closure_dag(fence)
    nodes = sorted(fence.nodes)
    antichains: list[Antichain] = [frozenset()]
    for node in nodes:
        antichains.extend(
            antichain | {node}
            for antichain in list(antichains)
            if all(not closure.has_edge(node, other) and not closure.has_edge(other, node) for other in antichain)
        )
    return sorted(antichains, key=lambda antichain: (len(antichain), sorted(antichain)))


def antichain_rowmotion(fence: nx.DiGraph, antichain: Antichain) -> Antichain:
    """The minimal elements of the complement of the order ideal generated by ``antichain``."""
    ideal = set(antichain)
    for node in antichain:
        ideal |= nx.ancestors(fence, node)
    rest = set(fence.nodes) - ideal
    return frozenset(node for node in rest if not any(below in rest for below in fence.predecessors(node)))


def _fence_stats(fence: nx.DiGraph, antichain: Antichain) -> tuple[int, int]:
    ideal = set(antichain)
    for node in antichain:
        ideal |= nx.ancestors(fence, node)
    return len(antichain), len(ideal)


def fence_orbit_table(a: int, b: int) -> list[tuple[int, int, int]]:
    """
    Antichain rowmotion orbits of the two-segment fence.

    Returns
    -------
    list[tuple[int, int, int]]
        One sorted (size, sum of antichain sizes, sum of ideal sizes) row per orbit.

    Examples
    --------
    >>> fence_orbit_table(2, 2)
    [(2, 2, 2), (3, 3, 5)]
    """
    fence = fence_poset(a, b)
    seen: set[Antichain] = set()
    table = []
    for start in fence_antichains(fence):
        if start in seen:
            continue
        size = chi = chi_hat = 0
        current = start
        while current not in seen:
            seen.add(current)
            antichain_size, ideal_size = _fence_stats(fence, current)
            size += 1
            chi += antichain_size
            chi_hat += ideal_size
            current = antichain_rowmotion(fence, current)
        table.append((size, chi, chi_hat))
    return sorted(table)


def hook_dyck_antichain(a: int, b: int, s: int, t: int) -> Antichain:
    """
    The fence antichain matched with the element (s, t) of the hook-Dyck lattice H_{δ(0)}(a, b).

    A grid point (s, t) with s < a picks the s-th element of the left chain and the t-th element of the right
    chain, 0 meaning none; the top element (a, b − 1) picks the apex. The antichain size equals the down-degree
    and the ideal size equals the area.

    >>> sorted(hook_dyck_antichain(3, 2, 2, 1))
    [('left', 2), ('right', 1)]
    """
    if (s, t) == (a, b - 1):
        return frozenset({APEX})
    if not (0 <= s <= a - 1 and 0 <= t <= b - 1):
        msg = f"({s}, {t}) is not an element of the hook-Dyck lattice for (a, b) = ({a}, {b})."
        raise ValueError(msg)
    chosen = set()
    if s > 0:
        chosen.add(("left", s))
    if t > 0:
        chosen.add(("right", t))
    return frozenset(chosen)


def antichain_statistics(a: int, b: int, antichain: Antichain) -> tuple[int, int]:
    """The antichain size and the size of the order ideal it generates."""
    return _fence_stats(fence_poset(a, b), antichain)
