"""
Alt ν-Tamari lattices.

For a path ν and an increment vector δ of ν, the alt ν-Tamari lattice Tam_δ(ν) lives on the ν-paths, the paths
with the endpoints of ν that stay weakly above it. Its covers are δ-rotations: at a valley ``EN`` of μ with
valley point x, find the first later point y with the same δ-altitude and move the east step before x to y.
The zero vector gives the ν-Dyck lattice and δ_i = ν_i gives the ν-Tamari lattice.

Examples
--------
>>> from pytamari.AltTamari import build_alt_tamari
>>> build_alt_tamari("EN^2E^2N", "0,0,0").size
10
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from pytamari.FiniteLattice import FiniteLattice, LatticeError
from pytamari.LatticePath import AltProfile, IncrementVector, LatticePath, RunLengthEncoding
from pytamari.utils import check_element_guard


def _as_path(path: str | LatticePath | RunLengthEncoding) -> LatticePath:
    if isinstance(path, RunLengthEncoding):
        return path.to_path()
    return path if isinstance(path, LatticePath) else LatticePath(path)


def _as_delta(delta: str | Iterable[int] | IncrementVector, nu: LatticePath) -> IncrementVector:
    delta = delta if isinstance(delta, IncrementVector) else IncrementVector.parse(delta)
    return delta.aligned(nu)


def top_path(nu: str | LatticePath) -> LatticePath:
    """The maximal ν-path 1^ν = N^n E^m."""
    nu = _as_path(nu)
    return LatticePath("N" * nu.north_count + "E" * nu.east_count)


def count_nu_paths(nu: str | LatticePath) -> int:
    """
    Count the ν-paths without enumerating them.

    >>> count_nu_paths("E^3NE^3N")
    22
    """
    nu = _as_path(nu)
    ways = [1]
    for bound in nu.north_positions:
        running = 0
        extended = []
        for x in range(bound + 1):
            running += ways[x] if x < len(ways) else 0
            extended.append(running)
        ways = extended
    return sum(ways)


def enumerate_nu_paths(nu: str | LatticePath) -> list[LatticePath]:
    """
    All ν-paths in canonical order.

    The order is ascending in the tuple of x-coordinates of the north steps, so the top path 1^ν comes first and
    ν itself comes last.

    Examples
    --------
    >>> [str(path) for path in enumerate_nu_paths("EN")]
    ['NE', 'EN']
    """
    nu = _as_path(nu)
    bounds = nu.north_positions
    east_count = nu.east_count

    def extend(prefix: list[int], floor: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == len(bounds):
            yield tuple(prefix)
            return
        for x in range(floor, bounds[len(prefix)] + 1):
            prefix.append(x)
            yield from extend(prefix, x)
            prefix.pop()

    return [LatticePath.from_north_positions(positions, east_count) for positions in extend([], 0)]


def delta_altitude(
    nu: str | LatticePath,
    delta: str | Iterable[int] | IncrementVector,
    mu: str | LatticePath,
) -> AltProfile:
    """
    The δ-altitude of every lattice point of μ.

    The origin has altitude 0, an east step lowers the altitude by one and the i-th north step raises it by δ_i.

    Parameters
    ----------
    nu : str | LatticePath
        The bounding path.
    delta : str | Iterable[int] | IncrementVector
        An increment vector of ν.
    mu : str | LatticePath
        A ν-path.

    Returns
    -------
    AltProfile
        One value per lattice point of μ.

    Raises
    ------
    ValueError
        If δ is not an increment vector of ν or μ is not weakly above ν.
    """
    nu, mu = _as_path(nu), _as_path(mu)
    delta = _as_delta(delta, nu)
    if not mu.is_weakly_above(nu):
        msg = f"{mu} is not a ν-path for ν = {nu}."
        raise ValueError(msg)
    return AltProfile(_altitudes(mu, delta.values))


def _altitudes(mu: LatticePath, increments: tuple[int, ...]) -> tuple[int, ...]:
    values = [0]
    north = 0
    for step in mu:
        if step == "E":
            values.append(values[-1] - 1)
        else:
            values.append(values[-1] + increments[north])
            north += 1
    return tuple(values)


def _rotations(mu: LatticePath, altitude: tuple[int, ...]) -> list[LatticePath]:
    steps = mu.steps
    rotations = []
    for j in range(len(steps) - 1):
        if steps[j] != "E" or steps[j + 1] != "N":
            continue
        valley = j + 1
        end = next(
            (point for point in range(valley + 1, len(steps) + 1) if altitude[point] == altitude[valley]),
            None,
        )
        if end is None:
            msg = f"The altitude of {mu} never returns to the level of its valley at point {valley}."
            raise LatticeError(msg)
        rotations.append(LatticePath(steps[:j] + steps[valley:end] + "E" + steps[end:]))
    return rotations


def delta_covers(
    nu: str | LatticePath,
    delta: str | Iterable[int] | IncrementVector,
    mu: str | LatticePath,
) -> list[LatticePath]:
    """
    The δ-rotations of μ, one per valley, with valleys taken from left to right.

    Examples
    --------
    >>> [str(path) for path in delta_covers("EN^2E^2N", "0,0,0", "EN^2E^2N")]
    ['NENE^2N', 'EN^2ENE']
    """
    mu = _as_path(mu)
    return _rotations(mu, delta_altitude(nu, delta, mu).values)


def build_alt_tamari(
    nu: str | LatticePath | RunLengthEncoding,
    delta: str | Iterable[int] | IncrementVector | None = None,
    *,
    max_elements: int | str | None = None,
    validate: bool = True,
    trusted_semidistributive: bool = False,
) -> FiniteLattice:
    """
    Build the alt ν-Tamari lattice Tam_δ(ν).

    Parameters
    ----------
    nu : str | LatticePath | RunLengthEncoding
        The bounding path.
    delta : str | Iterable[int] | IncrementVector | None
        The increment vector. None selects δ = ν, the ν-Tamari lattice.
    max_elements : int | str | None
        Element guard; see :func:`pytamari.utils.prepare_max_elements`.
    validate : bool
        Verify the lattice axioms while constructing.
    trusted_semidistributive : bool
        Skip the semidistributivity check before rowmotion.

    Returns
    -------
    FiniteLattice
        The lattice whose payloads are the ν-paths in canonical order. The bottom element carries ν.

    Raises
    ------
    ElementLimitError
        If the number of ν-paths exceeds the element guard.
    LatticeError
        If a δ-rotation leaves the set of ν-paths or the lattice axioms fail.
    """
    nu = _as_path(nu)
    delta = IncrementVector.full(nu) if delta is None else _as_delta(delta, nu)
    check_element_guard(count_nu_paths(nu), max_elements)
    paths = enumerate_nu_paths(nu)
    index = {path: element for element, path in enumerate(paths)}
    covers = []
    for element, mu in enumerate(paths):
        for rotation in _rotations(mu, _altitudes(mu, delta.values)):
            if rotation not in index:
                msg = f"The δ-rotation {rotation} of {mu} is not a ν-path."
                raise LatticeError(msg)
            covers.append((element, index[rotation]))
    return FiniteLattice(
        len(paths),
        covers,
        payloads=paths,
        validate=validate,
        trusted_semidistributive=trusted_semidistributive,
    )
