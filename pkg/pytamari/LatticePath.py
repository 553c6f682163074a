"""
Lattice paths made of unit north (N) and east (E) steps.

A :class:`LatticePath` is used both for the bounding path ν and for the ν-paths μ above it. Paths are written
with exponents for repeated steps, so ``"EN^2E^2N"`` is the path E,N,N,E,E,N. A path can also be given by its
run-length encoding ``"(ν_0,ν_1,…,ν_n)"``, where ν_0 counts the initial east steps and ν_i the east steps
following the i-th north step.

Examples
--------
>>> from pytamari.LatticePath import LatticePath
>>> nu = LatticePath("EN^2E^2N")
>>> nu.steps
'ENNEEN'
>>> nu.run_lengths
RunLengthEncoding(values=(1, 0, 2, 0))
>>> str(LatticePath("(3,3,0)"))
'E^3NE^3N'

See Also
--------
pytamari.AltTamari.enumerate_nu_paths
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Final

from pytamari.utils import parse_int_list

_PATH_PATTERN: Final[re.Pattern] = re.compile(r"^(?:[NE](?:\^[0-9]+)?)*$")
_TOKEN_PATTERN: Final[re.Pattern] = re.compile(r"([NE])(?:\^([0-9]+))?")
_RUN_LENGTH_PATTERN: Final[re.Pattern] = re.compile(r"^\(\s*[0-9]+(?:\s*,\s*[0-9]+)*\s*\)$")


class LatticePath:
    __slots__ = ["_steps"]

    def __init__(self, path: str | LatticePath | Iterable[str] = "") -> None:
        """
        A path in the square lattice starting at the origin.

        path (str, LatticePath, Iterable[str]):
            Either path text such as ``"E^3NE^4N"``, a run-length form such as ``"(3,4,0)"``, another
            LatticePath, or an iterable of single ``"N"``/``"E"`` steps. The empty string is the empty path.
        """
        if isinstance(path, LatticePath):
            self._steps: str = path.steps
        elif isinstance(path, str):
            self._steps = self.extract(path)
        else:
            steps = "".join(path)
            if any(step not in "NE" for step in steps):
                msg = f"Invalid step in {steps!r}. Only 'N' and 'E' are allowed."
                raise ValueError(msg)
            self._steps = steps

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticePath):
            return NotImplemented
        return self._steps == other._steps

    def __hash__(self) -> int:
        return hash(self._steps)

    def __lt__(self, other: object) -> bool:
        """
        Order paths by endpoint and then by the x-coordinates of their N steps.

        Within one set of ν-paths this is the canonical element order.
        """
        if not isinstance(other, LatticePath):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __le__(self, other: object) -> bool:
        if not isinstance(other, LatticePath):
            return NotImplemented
        return self.sort_key <= other.sort_key

    def __gt__(self, other: object) -> bool:
        if not isinstance(other, LatticePath):
            return NotImplemented
        return self.sort_key > other.sort_key

    def __ge__(self, other: object) -> bool:
        if not isinstance(other, LatticePath):
            return NotImplemented
        return self.sort_key >= other.sort_key

    def __len__(self) -> int:
        return len(self._steps)

    def __iter__(self) -> Iterator[str]:
        return iter(self._steps)

    def __getitem__(self, index: int) -> str:
        return self._steps[index]

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"LatticePath('{self.to_string()}')"

    @property
    def steps(self) -> str:
        """The step sequence as a string over ``N`` and ``E``."""
        return self._steps

    @property
    def north_count(self) -> int:
        return self._steps.count("N")

    @property
    def east_count(self) -> int:
        return self._steps.count("E")

    @property
    def endpoint(self) -> tuple[int, int]:
        """The endpoint (number of E steps, number of N steps)."""
        return self.east_count, self.north_count

    @property
    def north_positions(self) -> tuple[int, ...]:
        """The x-coordinate of every N step, in order."""
        positions = []
        x = 0
        for step in self._steps:
            if step == "E":
                x += 1
            else:
                positions.append(x)
        return tuple(positions)

    @property
    def sort_key(self) -> tuple[tuple[int, int], tuple[int, ...]]:
        return self.endpoint, self.north_positions

    @property
    def heights(self) -> tuple[int, ...]:
        """The y-coordinate of every lattice point of the path, origin included."""
        return (0, *itertools.accumulate(1 if step == "N" else 0 for step in self._steps))

    @property
    def run_lengths(self) -> RunLengthEncoding:
        values = [0]
        for step in self._steps:
            if step == "E":
                values[-1] += 1
            else:
                values.append(0)
        return RunLengthEncoding(tuple(values))

    @property
    def peaks(self) -> int:
        """Number of ``NE`` factors."""
        return sum(1 for i in range(len(self._steps) - 1) if self._steps[i : i + 2] == "NE")

    @property
    def valleys(self) -> int:
        """Number of ``EN`` factors."""
        return sum(1 for i in range(len(self._steps) - 1) if self._steps[i : i + 2] == "EN")

    @classmethod
    def from_north_positions(cls, positions: Iterable[int], east_count: int) -> LatticePath:
        """Build the path whose N steps sit at the given weakly increasing x-coordinates."""
        parts = []
        x = 0
        for position in positions:
            if position < x or position > east_count:
                msg = f"North positions must be weakly increasing within 0..{east_count}."
                raise ValueError(msg)
            parts.append("E" * (position - x) + "N")
            x = position
        parts.append("E" * (east_count - x))
        return cls("".join(parts))

    def is_weakly_above(self, other: LatticePath) -> bool:
        """
        Check whether this path stays weakly above ``other``.

        Both paths must share their endpoint; then the path is weakly above exactly when each of its N steps is
        taken no further right than the matching N step of ``other``.
        """
        if self.endpoint != other.endpoint:
            return False
        return all(mine <= theirs for mine, theirs in zip(self.north_positions, other.north_positions))

    def to_string(self) -> str:
        """
        The canonical run-length text of the path.

        Examples
        --------
        >>> LatticePath("ENNEEN").to_string()
        'EN^2E^2N'
        """
        return "".join(
            step if count == 1 else f"{step}^{count}"
            for step, count in ((step, len(list(group))) for step, group in itertools.groupby(self._steps))
        )

    @staticmethod
    def verify(path: str) -> bool:
        """
        Verify that a string is valid path text.

        Parameters
        ----------
        path : str
            The text to check, either in step/exponent form or in run-length form.

        Returns
        -------
        bool
            True when the text is accepted by :meth:`extract`.
        """
        if not isinstance(path, str):
            msg = "path must be a string"
            raise TypeError(msg)
        text = "".join(path.split())
        if _RUN_LENGTH_PATTERN.match(text):
            return True
        if not _PATH_PATTERN.match(text):
            return False
        return all(not exponent or int(exponent) > 0 for _, exponent in _TOKEN_PATTERN.findall(text))

    @staticmethod
    def extract(path: str) -> str:
        """
        Expand path text into its step sequence.

        Parameters
        ----------
        path : str
            Step/exponent text such as ``"E^3NE^4N"`` or run-length text such as ``"(3,4,0)"``.

        Returns
        -------
        str
            The expanded steps.

        Raises
        ------
        ValueError
            On a malformed character or a zero exponent.
        """
        text = "".join(path.split())
        if _RUN_LENGTH_PATTERN.match(text):
            return RunLengthEncoding(parse_int_list(text)).to_path().steps
        if not _PATH_PATTERN.match(text):
            msg = f"Invalid path text '{path}'. Expected steps N/E with optional positive exponents."
            raise ValueError(msg)
        steps = []
        for step, exponent in _TOKEN_PATTERN.findall(text):
            count = 1 if not exponent else int(exponent)
            if count == 0:
                msg = f"Zero exponent in path text '{path}'."
                raise ValueError(msg)
            steps.append(step * count)
        return "".join(steps)


def parse_path(text: str) -> LatticePath:
    """
    Parse path text into a :class:`LatticePath`.

    Examples
    --------
    >>> parse_path("E^3NE^4N").steps
    'EEENEEEEN'
    """
    if not isinstance(text, str):
        msg = f"Path text must be a string, not {type(text).__name__}."
        raise TypeError(msg)
    return LatticePath(text)


@dataclass(frozen=True)
class RunLengthEncoding:
    """The sequence (ν_0, …, ν_n) of east-step runs around the n north steps of a path."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values:
            msg = "A run-length encoding has at least the entry ν_0."
            raise ValueError(msg)
        if any(value < 0 for value in self.values):
            msg = f"Run lengths must be nonnegative: {self.values}."
            raise ValueError(msg)

    def __str__(self) -> str:
        return "(" + ",".join(str(value) for value in self.values) + ")"

    @property
    def north_count(self) -> int:
        return len(self.values) - 1

    @property
    def east_count(self) -> int:
        return sum(self.values)

    def to_path(self) -> LatticePath:
        return LatticePath("N".join("E" * value for value in self.values))


@dataclass(frozen=True)
class IncrementVector:
    """An increment vector (δ_1, …, δ_n) with 0 ≤ δ_i ≤ ν_i for a given ν."""

    values: tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(str(value) for value in self.values)

    @classmethod
    def parse(cls, text: str | Iterable[int]) -> IncrementVector:
        """
        Build an increment vector from a comma list.

        >>> IncrementVector.parse("2,0")
        IncrementVector(values=(2, 0))
        """
        return cls(parse_int_list(text))

    @classmethod
    def zero(cls, nu: LatticePath | RunLengthEncoding) -> IncrementVector:
        """The all-zero vector, selecting the ν-Dyck lattice."""
        return cls((0,) * _run_lengths(nu).north_count)

    @classmethod
    def full(cls, nu: LatticePath | RunLengthEncoding) -> IncrementVector:
        """The vector δ_i = ν_i, selecting the ν-Tamari lattice."""
        return cls(_run_lengths(nu).values[1:])

    @classmethod
    def all_for(cls, nu: LatticePath | RunLengthEncoding) -> Iterator[IncrementVector]:
        """Every increment vector of ν in lexicographic order."""
        for values in itertools.product(*(range(value + 1) for value in _run_lengths(nu).values[1:])):
            yield cls(tuple(values))

    def aligned(self, nu: LatticePath | RunLengthEncoding) -> IncrementVector:
        """
        Complete a short vector with leading zeros and validate it against ν.

        Leading entries may only be omitted where they are forced, that is where ν_i = 0, so ``(2,0)`` stands for
        ``(0,2,0)`` when ν = EN^2E^2N.

        >>> IncrementVector((2, 0)).aligned(LatticePath("EN^2E^2N"))
        IncrementVector(values=(0, 2, 0))
        """
        bounds = _run_lengths(nu).values[1:]
        missing = len(bounds) - len(self.values)
        if missing > 0 and all(bound == 0 for bound in bounds[:missing]):
            padded = IncrementVector((0,) * missing + self.values)
        else:
            padded = self
        padded.validate(nu)
        return padded

    def validate(self, nu: LatticePath | RunLengthEncoding) -> None:
        """
        Check the vector against ν.

        Raises
        ------
        ValueError
            If the length differs from the number of N steps of ν or an entry leaves 0..ν_i.
        """
        bounds = _run_lengths(nu).values[1:]
        if len(self.values) != len(bounds):
            msg = f"Increment vector {self} has {len(self.values)} entries, ν has {len(bounds)} north steps."
            raise ValueError(msg)
        for i, (value, bound) in enumerate(zip(self.values, bounds), start=1):
            if not 0 <= value <= bound:
                msg = f"Increment δ_{i} = {value} is outside 0..{bound}."
                raise ValueError(msg)


@dataclass(frozen=True)
class AltProfile:
    """The δ-altitude of every lattice point along a path, starting at the origin."""

    values: tuple[int, ...]

    @property
    def final(self) -> int:
        return self.values[-1]


def _run_lengths(nu: LatticePath | RunLengthEncoding) -> RunLengthEncoding:
    return nu if isinstance(nu, RunLengthEncoding) else nu.run_lengths
