from fractions import Fraction

import pytest

from pytamari.Families import hook_tamari
from pytamari.FiniteLattice import FiniteLattice
from pytamari.Statistics import (
    APEX,
    PathStats,
    StatReport,
    antichain_rowmotion,
    antichain_statistics,
    ddeg,
    fence_antichains,
    fence_orbit_table,
    fence_poset,
    hook_dyck_antichain,
    orbit_stat_report,
    path_stats,
    statistic_values,
)


def test_ddeg(pentagon: FiniteLattice) -> None:
    assert [ddeg(pentagon, element) for element in range(pentagon.size)] == [0, 1, 1, 1, 2]


def test_pentagon_ddeg_report(pentagon: FiniteLattice) -> None:
    report = orbit_stat_report(pentagon, statistic="ddeg")
    assert report.sizes == (2, 3)
    assert report.sums == (2, 3)
    assert report.homomesic
    assert report.average == 1


def test_path_stats() -> None:
    assert path_stats("EN^2E^2N", "EN^2E^2N") == PathStats(peak=1, val=2, area=0)
    assert path_stats("N^3E^3", "EN^2E^2N") == PathStats(peak=1, val=0, area=5)
    with pytest.raises(ValueError, match="not a ν-path"):
        path_stats("E^2N^2EN", "EN^2E^2N")


def test_statistic_values() -> None:
    lattice = hook_tamari(2, 2, 0)
    assert sum(statistic_values(lattice, "area")) == 7
    assert sum(statistic_values(lattice, "ddeg")) == len(lattice.covers())
    with pytest.raises(ValueError, match="Unknown statistic"):
        statistic_values(lattice, "height")


def test_report_verdicts() -> None:
    report = StatReport("x", (2, 2), (1, 3))
    assert not report.homometric
    assert not report.homomesic
    assert report.average is None
    assert report.averages == (Fraction(1, 2), Fraction(3, 2))
    assert report.size_sum_pairs() == [(2, 1), (2, 3)]


def test_report_to_json() -> None:
    assert StatReport("ddeg", (2, 3), (2, 3)).to_json() == {
        "statistic": "ddeg",
        "orbits": [{"size": 2, "sum": 2}, {"size": 3, "sum": 3}],
        "homomesic": True,
        "average": "1",
        "homometric": True,
    }


def test_orbit_stat_report_rejects_foreign_decomposition(pentagon: FiniteLattice) -> None:
    grid = FiniteLattice.product_of_chains(2, 2)
    with pytest.raises(ValueError, match="does not match"):
        orbit_stat_report(pentagon, grid.orbit_decomposition(), "ddeg")


def test_hook_area_is_not_homometric_for_middle_k(caplog: pytest.LogCaptureFixture) -> None:
    lattice = hook_tamari(3, 3, 1)
    with caplog.at_level("INFO"):
        report = orbit_stat_report(lattice, statistic="area")
    assert not report.homometric
    assert "not homometric" in caplog.text


def test_fence_poset() -> None:
    fence = fence_poset(3, 2)
    assert fence.number_of_nodes() == 4
    assert set(fence.edges) == {(("left", 1), ("left", 2)), (("left", 2), APEX), (("right", 1), APEX)}
    assert fence_poset(1, 1).number_of_nodes() == 1
    with pytest.raises(ValueError, match="a, b >= 1"):
        fence_poset(0, 2)


def test_fence_antichains() -> None:
    antichains = fence_antichains(fence_poset(2, 2))
    assert len(antichains) == 5
    assert antichains[0] == frozenset()
    assert frozenset({("left", 1), ("right", 1)}) in antichains


def test_antichain_rowmotion() -> None:
    fence = fence_poset(2, 2)
    assert antichain_rowmotion(fence, frozenset()) == frozenset({("left", 1), ("right", 1)})
    assert antichain_rowmotion(fence, frozenset({APEX})) == frozenset()
    assert antichain_rowmotion(fence, frozenset({("left", 1)})) == frozenset({("right", 1)})


def test_fence_orbit_table_matches_the_hook_dyck_lattice() -> None:
    assert fence_orbit_table(2, 2) == [(2, 2, 2), (3, 3, 5)]
    lattice = hook_tamari(3, 3, 0)
    assert sorted(size for size, _, _ in fence_orbit_table(3, 3)) == sorted(lattice.orbit_decomposition().sizes)


def test_hook_dyck_antichain() -> None:
    assert hook_dyck_antichain(3, 2, 3, 1) == frozenset({APEX})
    assert hook_dyck_antichain(3, 2, 0, 0) == frozenset()
    assert hook_dyck_antichain(3, 2, 1, 0) == frozenset({("left", 1)})
    with pytest.raises(ValueError, match="not an element"):
        hook_dyck_antichain(3, 2, 3, 0)


def test_antichain_statistics() -> None:
    assert antichain_statistics(3, 2, frozenset({("left", 2)})) == (1, 2)
    assert antichain_statistics(3, 2, frozenset({APEX})) == (1, 4)
    assert antichain_statistics(3, 2, frozenset()) == (0, 0)
