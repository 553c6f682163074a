"""
ν-bracket vectors.

The bracket vector of a ν-path μ relative to a base path is an integer vector indexed by the lattice points of the
base path. The fixed position f_i is the last point of the base path at height i and always holds i. The other
positions are filled class by class: for i = 0, 1, …, n the value i is written into the g_i − 1 free positions
nearest to the left of f_i, where g_i is the number of lattice points of μ at height i. Comparing bracket vectors
componentwise realises the Tamari order of the base path.

Examples
--------
>>> from pytamari.BracketVector import bracket_vector
>>> bracket_vector("E^4NE^2N", "NE^2NE^4").entries
(2, 2, 2, 2, 0, 1, 1, 1, 2)

See Also
--------
pytamari.Families.hook_coordinates
pytamari.Families.two_row_embedding
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

from pytamari.LatticePath import IncrementVector, LatticePath, RunLengthEncoding


@dataclass(frozen=True)
class BracketVector:
    """A bracket vector together with the fixed positions of its base path."""

    entries: tuple[int, ...]
    fixed_positions: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(later <= earlier for earlier, later in zip(self.fixed_positions, self.fixed_positions[1:])):
            msg = f"Fixed positions {self.fixed_positions} must be strictly increasing."
            raise ValueError(msg)
        for value, position in enumerate(self.fixed_positions):
            if not 0 <= position < len(self.entries) or self.entries[position] != value:
                msg = f"Fixed position {position} must hold {value} in {self.entries}."
                raise ValueError(msg)

    def __str__(self) -> str:
        fixed = set(self.fixed_positions)
        return "(" + ",".join(f"[{entry}]" if i in fixed else str(entry) for i, entry in enumerate(self.entries)) + ")"

    def to_json(self) -> dict[str, Any]:
        return {"entries": list(self.entries), "fixed_positions": list(self.fixed_positions)}


@dataclass(frozen=True, order=True)
class HookCoords:
    """Simplified coordinates (s, t) of an element of an alt hook-Tamari lattice."""

    s: int
    t: int


@dataclass(frozen=True)
class TwoRowTriple:
    """Simplified coordinates of an element of an alt 2-row-Tamari lattice: the height a − s and the 2-counts."""

    height: int
    u: int
    v: int


def nu_hat(
    nu: str | LatticePath | RunLengthEncoding,
    delta: str | Iterable[int] | IncrementVector,
) -> LatticePath:
    """
    The path ν̂ = (Σν_i − Σδ_i, δ_1, …, δ_n).

    Tam_δ(ν) is the interval above ν in the Tamari lattice of ν̂.

    Examples
    --------
    >>> str(nu_hat("EN^3E^6N", "0,0,3,0"))
    'E^4N^3E^3N'
    >>> str(nu_hat("(3,3,0)", "2,0"))
    'E^4NE^2N'
    """
    if isinstance(nu, RunLengthEncoding):
        encoding = nu
    else:
        encoding = (nu if isinstance(nu, LatticePath) else LatticePath(nu)).run_lengths
    delta = delta if isinstance(delta, IncrementVector) else IncrementVector.parse(delta)
    delta = delta.aligned(encoding)
    first = sum(encoding.values) - sum(delta.values)
    return RunLengthEncoding((first, *delta.values)).to_path()


def fixed_positions(base: str | LatticePath) -> tuple[int, ...]:
    """The index of the last lattice point at each height of ``base``."""
    base = base if isinstance(base, LatticePath) else LatticePath(base)
    positions = [0] * (base.north_count + 1)
    for index, height in enumerate(base.heights):
        positions[height] = index
    return tuple(positions)


def bracket_vector(base: str | LatticePath, mu: str | LatticePath) -> BracketVector:
    """
    The bracket vector of μ relative to ``base``.

    Parameters
    ----------
    base : str | LatticePath
        The base path; μ must share its endpoint and stay weakly above it.
    mu : str | LatticePath
        The path to encode.

    Returns
    -------
    BracketVector
        The vector with the fixed positions of ``base``.

    Raises
    ------
    ValueError
        If μ has a different endpoint or goes below ``base``.

    Examples
    --------
    >>> str(bracket_vector("EN^2E^2N", "NENE^2N"))
    '(1,[0],[1],2,2,[2],[3])'
    """
    base = base if isinstance(base, LatticePath) else LatticePath(base)
    mu = mu if isinstance(mu, LatticePath) else LatticePath(mu)
    if mu.endpoint != base.endpoint or not mu.is_weakly_above(base):
        msg = f"{mu} does not stay weakly above {base}."
        raise ValueError(msg)
    fixed = fixed_positions(base)
    entries: list[int | None] = [None] * (len(base) + 1)
    for value, position in enumerate(fixed):
        entries[position] = value
    counts = Counter(mu.heights)
    for value, position in enumerate(fixed):
        remaining = counts[value] - 1
        cursor = position - 1
        while remaining > 0:
            if cursor < 0:
                msg = f"{mu} does not stay weakly above {base}."
                raise ValueError(msg)
            if entries[cursor] is None:
                entries[cursor] = value
                remaining -= 1
            cursor -= 1
    return BracketVector(tuple(entry for entry in entries if entry is not None), fixed)


def componentwise_leq(first: BracketVector, second: BracketVector) -> bool:
    """
    Compare two bracket vectors with the same base entry by entry.

    Raises
    ------
    ValueError
        If the vectors differ in length or fixed positions.
    """
    if len(first.entries) != len(second.entries) or first.fixed_positions != second.fixed_positions:
        msg = "Bracket vectors over different base paths cannot be compared."
        raise ValueError(msg)
    return all(x <= y for x, y in zip(first.entries, second.entries))


def _hook_shape_contains(a: int, b_len: int, k: int, s: int, t: int) -> bool:
    if not 0 <= t <= b_len - 1 or s < 0:
        return False
    if s <= a - 2:
        return True
    if s == a - 1:
        return t <= b_len - 1 - k
    return s == a and t >= b_len - 1 - k


def hook_coords(vector: BracketVector, a: int, b_len: int, k: int) -> HookCoords:
    """
    Read the simplified coordinates (s, t) of an element of H_{δ(k)}(a, b_len).

    The vector must be taken relative to ν̂(k) = E^{b−k} N^{a−1} E^k N. It has the shape
    (α, s, 0, 1, …, a−2, β, a−1, a) with fixed entries 0 … a; the word αβ consists of a's followed by
    (a−1)'s and t counts its a's. For a = 1 the word is the prefix γ of 1's and 0's.

    Raises
    ------
    ValueError
        If the parameters are out of range or the vector does not have this shape.

    Examples
    --------
    >>> vector = bracket_vector("E^4N^3E^3N", "N^2ENE^2NE^4")
    >>> hook_coords(vector, 4, 7, 3)
    HookCoords(s=2, t=4)
    """
    if a < 1 or b_len < 1 or not 0 <= k <= b_len - 1 or (a == 1 and k != 0):
        msg = f"No alt hook-Tamari lattice for (a, b, k) = ({a}, {b_len}, {k})."
        raise ValueError(msg)
    base = LatticePath("E" * (b_len - k) + "N" * (a - 1) + "E" * k + "N")
    if vector.fixed_positions != fixed_positions(base):
        msg = f"{vector} is not a bracket vector relative to {base}."
        raise ValueError(msg)
    entries = vector.entries
    s = entries[b_len - k - 1]
    word = entries[: b_len - k - 1] + entries[b_len - k + a - 1 : a + b_len - 1]
    t = word.count(a)
    if word != (a,) * t + (a - 1,) * (len(word) - t) or not _hook_shape_contains(a, b_len, k, s, t):
        msg = f"{vector} does not have the hook shape for (a, b, k) = ({a}, {b_len}, {k})."
        raise ValueError(msg)
    return HookCoords(s, t)


def two_row_triple(vector: BracketVector, a: int, b_len: int, k: int) -> TwoRowTriple:
    """
    Read the simplified coordinates of an element of T_{δ(k)}(a, b_len).

    The vector must be taken relative to ν̂(k) = E^{a+b−k} N E^k N. It has the shape (α, 0^s, 0, β, 1, 2), where
    α is nonzero, and the word αβ is a run of 2's followed by 1's. The triple holds a − s and the numbers of 2's
    in α and in β.

    Raises
    ------
    ValueError
        If the parameters are out of range or the vector does not have this shape.

    Examples
    --------
    >>> two_row_triple(bracket_vector("E^4NE^2N", "NE^2NE^4"), 3, 3, 2)
    TwoRowTriple(height=3, u=4, v=0)
    """
    if a < 0 or b_len < 0 or not 0 <= k <= b_len:
        msg = f"No alt 2-row-Tamari lattice for (a, b, k) = ({a}, {b_len}, {k})."
        raise ValueError(msg)
    base = LatticePath("E" * (a + b_len - k) + "N" + "E" * k + "N")
    if vector.fixed_positions != fixed_positions(base):
        msg = f"{vector} is not a bracket vector relative to {base}."
        raise ValueError(msg)
    first_fixed = a + b_len - k
    head = vector.entries[:first_fixed]
    s = head.count(0)
    alpha = head[: len(head) - s]
    beta = vector.entries[first_fixed + 1 : first_fixed + 1 + k]
    word = alpha + beta
    twos = word.count(2)
    u = alpha.count(2)
    v = twos - u
    if 0 in alpha or word != (2,) * twos + (1,) * (len(word) - twos) or s > a or (v > 0 and u != a + b_len - k - s):
        msg = f"{vector} does not have the 2-row shape for (a, b, k) = ({a}, {b_len}, {k})."
        raise ValueError(msg)
    return TwoRowTriple(a - s, u, v)
