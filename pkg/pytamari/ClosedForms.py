"""
Closed-form predictions for the hook and 2-row families.

Each prediction is computed from the parameters alone, without building a lattice, so that the engine in
:mod:`pytamari.FiniteLattice` can be compared against it:

- the rowmotion orbit census, order and statistic orbit sums of H_{δ(k)}(a, b);
- the cyclic sieving polynomial of H_{δ(k)}(a, b) and its evaluation at roots of unity;
- the orbit census and down-degree sums of T_{δ(k)}(a, b) with the piecewise rowmotion of T_{δ(0)}(a, b);
- the congruence solution sets that pair up the elements (x, a) of a 2-row orbit;
- the expected Hasse diagrams of both families in simplified coordinates.

Examples
--------
>>> from pytamari.ClosedForms import hook_prediction, two_row_prediction
>>> hook_prediction(2, 2, 0).orbit_sizes
(2, 3)
>>> two_row_prediction(3, 3).sizes
(4, 6, 12)
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from pytamari.BracketVector import HookCoords
from pytamari.FiniteLattice import FiniteLattice, OrbitDecomposition  # noqa: TC001

Point = tuple[int, int]
DEFAULT_TOLERANCE = 1e-6


def _ceil_half(value: int) -> int:
    return -(-value // 2)


def _check_hook_range(a: int, b: int, k: int) -> None:
    if a < 1 or b < 1 or not 0 <= k <= b - 1 or (a == 1 and k != 0):
        msg = f"No alt hook-Tamari lattice for (a, b, k) = ({a}, {b}, {k})."
        raise ValueError(msg)


@dataclass(frozen=True)
class HookPrediction:
    """
    The predicted rowmotion behaviour of H_{δ(k)}(a, b).

    With g = gcd(a, b) and ℓ = lcm(a, b) there are g − 1 orbits of size ℓ and one orbit of size ℓ + 1. The sum
    tables list one value per orbit, aligned with ``orbit_sizes``. Area sums are only known for k = 0 and
    k = b − 1 and are None otherwise.
    """

    a: int
    b: int
    k: int
    g: int
    ell: int
    orbit_sizes: tuple[int, ...]
    order: int
    ddeg_sums: tuple[int, ...]
    peak_sums: tuple[int, ...]
    val_sums: tuple[int, ...]
    area_sums: tuple[int, ...] | None

    @property
    def element_count(self) -> int:
        return self.a * self.b + 1

    def sums(self, statistic: str) -> tuple[int, ...] | None:
        """
        The predicted orbit sums of a statistic, None when no closed form is known.

        Raises
        ------
        ValueError
            If the statistic has no hook prediction.
        """
        tables = {"ddeg": self.ddeg_sums, "peak": self.peak_sums, "val": self.val_sums, "area": self.area_sums}
        try:
            return tables[statistic]
        except KeyError as e:
            msg = f"No hook prediction for statistic '{statistic}'. Expected one of: {', '.join(tables)}."
            raise ValueError(msg) from e

    def size_sum_pairs(self, statistic: str) -> list[tuple[int, int]] | None:
        sums = self.sums(statistic)
        return None if sums is None else sorted(zip(self.orbit_sizes, sums))

    def to_json(self) -> dict[str, Any]:
        return {
            "a": self.a,
            "b": self.b,
            "k": self.k,
            "g": self.g,
            "l": self.ell,
            "orbit_sizes": list(self.orbit_sizes),
            "order": self.order,
            "sums": {
                name: None if sums is None else list(sums)
                for name, sums in (
                    ("ddeg", self.ddeg_sums),
                    ("peak", self.peak_sums),
                    ("val", self.val_sums),
                    ("area", self.area_sums),
                )
            },
        }


def _integral(value: Fraction) -> int:
    if value.denominator != 1:
        msg = f"Expected an integral orbit sum, got {value}."
        raise ArithmeticError(msg)
    return int(value)


def hook_prediction(a: int, b: int, k: int) -> HookPrediction:
    """
    Orbit census, rowmotion order and statistic orbit sums of H_{δ(k)}(a, b).

    On an orbit of size ℓ the down-degree sums to (2ab − a − b)/g, peaks to (3ab − 2a − 2b)/g and valleys to
    (2ab − a − b)/g; the orbit of size ℓ + 1 adds 1, 2 and 1. The area sums to ℓ((a + b − 2)/2 + 1/a) when
    k = b − 1 and ℓ(a + b − 2)/2 when k = 0, with a − 1 and a + b − 1 added on the orbit of size ℓ + 1.

    Raises
    ------
    ValueError
        If (a, b, k) is out of range.

    Examples
    --------
    >>> prediction = hook_prediction(2, 3, 0)
    >>> prediction.orbit_sizes, prediction.order
    ((7,), 7)
    """
    _check_hook_range(a, b, k)
    g = math.gcd(a, b)
    ell = a * b // g
    orbit_sizes = (ell,) * (g - 1) + (ell + 1,)
    order = ell * (ell + 1) if g > 1 else ell + 1

    def table(base: Fraction, extra: Fraction) -> tuple[int, ...]:
        return (_integral(base),) * (g - 1) + (_integral(base + extra),)

    ddeg_sums = table(Fraction(2 * a * b - a - b, g), Fraction(1))
    peak_sums = table(Fraction(3 * a * b - 2 * a - 2 * b, g), Fraction(2))
    val_sums = table(Fraction(2 * a * b - a - b, g), Fraction(1))
    area_sums: tuple[int, ...] | None = None
    if k == b - 1:
        area_sums = table(ell * (Fraction(a + b - 2, 2) + Fraction(1, a)), Fraction(a - 1))
    elif k == 0:
        area_sums = table(ell * Fraction(a + b - 2, 2), Fraction(a + b - 1))
    return HookPrediction(a, b, k, g, ell, orbit_sizes, order, ddeg_sums, peak_sums, val_sums, area_sums)


@dataclass(frozen=True)
class CspPolynomial:
    """A polynomial with nonnegative integer coefficients, stored as an exponent to coefficient map."""

    coefficients: dict[int, int] = field(default_factory=dict)

    def __str__(self) -> str:
        terms = []
        for exponent in sorted(self.coefficients):
            coefficient = self.coefficients[exponent]
            if exponent == 0:
                terms.append(str(coefficient))
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                terms.append(power if coefficient == 1 else f"{coefficient}{power}")
        return " + ".join(terms) if terms else "0"

    def at_one(self) -> int:
        return sum(self.coefficients.values())

    def to_json(self) -> dict[str, int]:
        return {str(exponent): self.coefficients[exponent] for exponent in sorted(self.coefficients)}


def hook_csp_polynomial(a: int, b: int) -> CspPolynomial:
    """
    f(q) = Σ_{j=0}^{ℓ} q^{jℓ} + (g − 1) Σ_{j=0}^{ℓ−1} q^{j(ℓ+1)}.

    >>> str(hook_csp_polynomial(2, 2))
    '2 + q^2 + q^3 + q^4'
    >>> hook_csp_polynomial(1, 1).at_one()
    2
    """
    if a < 1 or b < 1:
        msg = f"The hook family needs a, b >= 1, got (a, b) = ({a}, {b})."
        raise ValueError(msg)
    g = math.gcd(a, b)
    ell = a * b // g
    coefficients: dict[int, int] = {}
    for j in range(ell + 1):
        coefficients[j * ell] = coefficients.get(j * ell, 0) + 1
    if g > 1:
        for j in range(ell):
            coefficients[j * (ell + 1)] = coefficients.get(j * (ell + 1), 0) + g - 1
    return CspPolynomial(coefficients)


def evaluate_at_root(polynomial: CspPolynomial, order: int, d: int) -> complex:
    """
    Evaluate at ω^d with ω = exp(2πi / order).

    Exponents are reduced modulo the order before the complex exponential is taken.

    >>> round(evaluate_at_root(hook_csp_polynomial(2, 2), 6, 3).real, 6)
    3.0
    """
    if order < 1:
        msg = f"The order must be positive, got {order}."
        raise ValueError(msg)
    if not polynomial.coefficients:
        return 0j
    exponents = np.array(sorted(polynomial.coefficients), dtype=np.int64)
    weights = np.array([polynomial.coefficients[int(exponent)] for exponent in exponents], dtype=np.float64)
    angles = 2 * np.pi * ((d * exponents) % order) / order
    return complex(np.sum(weights * np.exp(1j * angles)))


def fixed_point_count(decomposition: OrbitDecomposition, d: int) -> int:
    """The number of elements fixed by Row^d: the total size of the orbits whose size divides d."""
    return sum(size for size in decomposition.sizes if d % size == 0)


def hook_fixed_points(a: int, b: int, d: int) -> int:
    """
    Fixed points of Row^d on H_{δ(k)}(a, b), read off the predicted census.

    >>> [hook_fixed_points(2, 2, d) for d in range(6)]
    [5, 0, 2, 3, 2, 0]
    """
    return sum(size for size in hook_prediction(a, b, 0).orbit_sizes if d % size == 0)


def csp_counterexample(
    decomposition: OrbitDecomposition,
    polynomial: CspPolynomial,
    order: int | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> int | None:
    """
    The first exponent d in 0 … order − 1 where |Fix(Row^d)| and f(ω^d) disagree, or None.

    Parameters
    ----------
    decomposition : OrbitDecomposition
        The rowmotion orbits.
    polynomial : CspPolynomial
        The candidate sieving polynomial.
    order : int | None
        The order of rowmotion; the least common multiple of the orbit sizes when None.
    tolerance : float
        Allowed distance between the integer count and the complex evaluation.
    """
    order = decomposition.order if order is None else order
    for d in range(order):
        expected = fixed_point_count(decomposition, d)
        value = evaluate_at_root(polynomial, order, d)
        if abs(value - expected) > tolerance:
            logging.warning(
                "Cyclic sieving fails at d = %d: %d fixed points, f(ω^d) = %.6f%+.6fi",
                d,
                expected,
                value.real,
                value.imag,
            )
            return d
    return None


def csp_verify(
    lattice: FiniteLattice,
    polynomial: CspPolynomial,
    order: int | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> bool:
    """Check that rowmotion on ``lattice`` and ``polynomial`` exhibit the cyclic sieving phenomenon."""
    return csp_counterexample(lattice.orbit_decomposition(), polynomial, order, tolerance) is None


def chain_product_rowmotion(a: int, b: int, x: int, y: int) -> Point:
    """
    Rowmotion on C_a × C_b: ((x − 1) mod a, (y − 1) mod b).

    >>> chain_product_rowmotion(3, 2, 0, 1)
    (2, 0)
    """
    if not (0 <= x < a and 0 <= y < b):
        msg = f"({x}, {y}) is not an element of C_{a} × C_{b}."
        raise ValueError(msg)
    return (x - 1) % a, (y - 1) % b


def hook_contraction(a: int, point: HookCoords) -> Point:
    """The edge contraction onto C_a × C_b: s is capped at a − 1."""
    return min(point.s, a - 1), point.t


def hook_w(a: int, b: int, k: int) -> HookCoords:
    """
    The join-irreducible element w(k) = (a, b − 1 − k), the one element whose rowmotion the contraction misses.

    Its rowmotion image is (a − 1, b − 1 − k).
    """
    _check_hook_range(a, b, k)
    return HookCoords(a, b - 1 - k)


def hook_points(a: int, b: int, k: int) -> list[HookCoords]:
    """
    The simplified coordinates of H_{δ(k)}(a, b), sorted.

    These are the grid points s ≤ a − 2, the column s = a − 1 up to t = b − 1 − k and the column s = a from
    t = b − 1 − k on.
    """
    _check_hook_range(a, b, k)
    points = [HookCoords(s, t) for s in range(a - 1) for t in range(b)]
    points.extend(HookCoords(a - 1, t) for t in range(b - k))
    points.extend(HookCoords(a, t) for t in range(b - 1 - k, b))
    return sorted(points)


def hook_hasse_prediction(a: int, b: int, k: int) -> set[tuple[HookCoords, HookCoords]]:
    """
    The predicted cover relations of H_{δ(k)}(a, b) in simplified coordinates.

    Every point is covered by the point above it, when present, and by the nearest point to its right.

    >>> len(hook_hasse_prediction(2, 2, 1))
    5
    """
    points = set(hook_points(a, b, k))
    covers = set()
    for point in points:
        above = HookCoords(point.s, point.t + 1)
        if above in points:
            covers.add((point, above))
        right = [other for other in points if other.t == point.t and other.s > point.s]
        if right:
            covers.add((point, min(right)))
    return covers


@dataclass(frozen=True)
class TwoRowPrediction:
    """
    The predicted orbit census of T_{δ(k)}(a, b) with the down-degree sum of every orbit.

    ``orbits`` holds one (kind, size, ddeg sum) row per orbit, where kind names the family O1 … O4 of the
    orbit, or "small" for a + b < 2. ``quotient`` and ``remainder`` are the s and r in b = s(a + 1) + r.
    """

    a: int
    b: int
    quotient: int
    remainder: int
    orbits: tuple[tuple[str, int, int], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(sorted(size for _, size, _ in self.orbits))

    @property
    def element_count(self) -> int:
        return (self.a + 1) * (self.b + 1) + self.a * (self.a + 1) // 2

    def size_sum_pairs(self) -> list[tuple[int, int]]:
        return sorted((size, total) for _, size, total in self.orbits)

    def to_json(self) -> dict[str, Any]:
        return {
            "a": self.a,
            "b": self.b,
            "s": self.quotient,
            "r": self.remainder,
            "orbits": [{"kind": kind, "size": size, "ddeg": total} for kind, size, total in self.orbits],
        }


_SMALL_TWO_ROW = {(0, 0): (1, 0), (0, 1): (2, 1), (1, 0): (3, 2)}


def two_row_prediction(a: int, b: int) -> TwoRowPrediction:
    """
    Orbit census and down-degree orbit sums of T_{δ(k)}(a, b), the same for every k.

    With b = s(a + 1) + r there are ⌈(a − r)/2⌉ orbits O1 of size a + 2b + 2 − r and ⌈(r − 1)/2⌉ orbits O2
    of size 2a + 2b + 3 − r. An orbit O3 of size (a − r)/2 + b + 1 exists when a and r are even, an orbit O4 of
    size (3 − r)/2 + a + b when a is even and r odd, and both when a and r are odd. The down-degree sums are
    2|O1| − 4 − 2s, 2|O2| − 6 − 2s, 2|O3| − 2 − s and 2|O4| − 3 − s.

    Examples
    --------
    >>> two_row_prediction(1, 1).orbits
    (('O3', 2, 2), ('O4', 3, 3))
    >>> two_row_prediction(0, 0).orbits
    (('small', 1, 0),)
    """
    if a < 0 or b < 0:
        msg = f"The 2-row family needs a, b >= 0, got (a, b) = ({a}, {b})."
        raise ValueError(msg)
    s, r = divmod(b, a + 1)
    if a + b < 2:  # noqa: PLR2004
        size, total = _SMALL_TWO_ROW[(a, b)]
        return TwoRowPrediction(a, b, s, r, (("small", size, total),))
    orbits: list[tuple[str, int, int]] = []
    size = a + 2 * b + 2 - r
    orbits.extend(("O1", size, 2 * size - 4 - 2 * s) for _ in range(_ceil_half(a - r)))
    size = 2 * a + 2 * b + 3 - r
    orbits.extend(("O2", size, 2 * size - 6 - 2 * s) for _ in range(_ceil_half(r - 1)))
    if a % 2 == r % 2:
        size = (a - r) // 2 + b + 1
        orbits.append(("O3", size, 2 * size - 2 - s))
    if r % 2 == 1:
        size = (3 - r) // 2 + a + b
        orbits.append(("O4", size, 2 * size - 3 - s))
    return TwoRowPrediction(a, b, s, r, tuple(orbits))


def two_row_rowmotion_formula(a: int, b: int, x: int, y: int) -> Point:
    """
    Rowmotion on T_{δ(0)}(a, b) in the coordinates (x, y), 0 ≤ y ≤ a and 0 ≤ x ≤ y + b.

    >>> two_row_rowmotion_formula(3, 3, 0, 0)
    (6, 3)
    >>> two_row_rowmotion_formula(3, 3, 6, 3)
    (5, 3)
    """
    if not (0 <= y <= a and 0 <= x <= y + b):
        msg = f"({x}, {y}) is not an element of T(a, b) for (a, b) = ({a}, {b})."
        raise ValueError(msg)
    if x == 0 and y == 0:
        return a + b, a
    if x == 0:
        return y + b - 1, y - 1
    if y == 0 or x == y + b:
        return x - 1, a
    return x - 1, y - 1


def two_row_points(a: int, b: int, k: int) -> list[Point]:
    """
    The planar coordinates of T_{δ(k)}(a, b).

    Row y holds x = 0 … b − k + y and, for k ≥ 1, also x = a + b − k + 1 … a + b.
    """
    if a < 0 or b < 0 or not 0 <= k <= b:
        msg = f"No alt 2-row-Tamari lattice for (a, b, k) = ({a}, {b}, {k})."
        raise ValueError(msg)
    points: list[Point] = []
    for y in range(a + 1):
        points.extend((x, y) for x in range(b - k + y + 1))
        if k:
            points.extend((x, y) for x in range(a + b - k + 1, a + b + 1))
    return sorted(points)


def two_row_hasse_prediction(a: int, b: int, k: int) -> set[tuple[Point, Point]]:
    """
    The predicted cover relations of T_{δ(k)}(a, b) in planar coordinates.

    Consecutive points of a row cover one another and a point is covered by the point directly above it.

    >>> sorted(two_row_hasse_prediction(0, 1, 1))
    [((0, 0), (1, 0))]
    """
    points = set(two_row_points(a, b, k))
    covers = set()
    rows: dict[int, list[int]] = {}
    for x, y in points:
        rows.setdefault(y, []).append(x)
        if (x, y + 1) in points:
            covers.add(((x, y), (x, y + 1)))
    for y, xs in rows.items():
        ordered = sorted(xs)
        covers.update(((left, y), (right, y)) for left, right in zip(ordered, ordered[1:]))
    return covers


def coordinate_covers(lattice: FiniteLattice, coordinates: tuple[Any, ...]) -> set[tuple[Any, Any]]:
    """The cover relations of ``lattice`` written with the given per-element coordinates."""
    return {(coordinates[low], coordinates[high]) for low, high in lattice.covers()}


@dataclass(frozen=True)
class CongruenceSolutions:
    """
    Solution pairs (x1 ≤ x2) of x1 + x2 ≡ a + b − 2 (mod a + 1) on the representative interval, for 0 ≤ b ≤ a.

    Only the families that apply to the parities of a and b are filled; the others are empty.
    """

    a: int
    b: int
    x1: tuple[Point, ...] = ()
    x2: tuple[Point, ...] = ()
    y1: tuple[Point, ...] = ()
    y2: tuple[Point, ...] = ()
    z1: tuple[Point, ...] = ()
    z2: tuple[Point, ...] = ()

    @property
    def combined(self) -> tuple[Point, ...]:
        return tuple(sorted({*self.x1, *self.x2, *self.y1, *self.y2, *self.z1, *self.z2}))


def congruence_solution_sets(a: int, b: int) -> CongruenceSolutions:
    """
    The closed-form solution sets of the 2-row congruence.

    For b > 0 the union is Y1 ∪ Z1, Y2 ∪ Z1, Y1 ∪ Z2 or Y2 ∪ Z2 according to the parities of b and a − b;
    for b = 0 it is X1 (a even) or X2 (a odd).

    Raises
    ------
    ValueError
        Unless 0 <= b <= a.

    Examples
    --------
    >>> solutions = congruence_solution_sets(3, 3)
    >>> solutions.y1, solutions.z1
    (((4, 4), (3, 5)), ((2, 2),))
    >>> congruence_solution_sets(2, 0).x1
    ((0, 0),)
    """
    if not 0 <= b <= a:
        msg = f"The congruence sets need 0 <= b <= a, got (a, b) = ({a}, {b})."
        raise ValueError(msg)
    if b == 0:
        if a % 2 == 0:
            half = (a - 2) // 2
            return CongruenceSolutions(a, b, x1=tuple((half - m, half + m) for m in range(half + 1)))
        return CongruenceSolutions(
            a, b, x2=tuple(((a - 3) // 2 - m, (a - 1) // 2 + m) for m in range((a - 3) // 2 + 1))
        )
    y1: tuple[Point, ...] = ()
    y2: tuple[Point, ...] = ()
    z1: tuple[Point, ...] = ()
    z2: tuple[Point, ...] = ()
    if b % 2 == 1:
        centre = a + (b - 1) // 2
        y1 = tuple((centre - m, centre + m) for m in range((b - 1) // 2 + 1))
    else:
        y2 = tuple((a + (b - 2) // 2 - m, a + b // 2 + m) for m in range((b - 2) // 2 + 1))
    if (a - b) % 2 == 0:
        centre = (a + b) // 2 - 1
        z1 = tuple((centre - m, centre + m) for m in range((a - b) // 2 + 1))
    else:
        z2 = tuple(((a + b - 3) // 2 - m, (a + b - 1) // 2 + m) for m in range((a - b - 1) // 2 + 1))
    return CongruenceSolutions(a, b, y1=y1, y2=y2, z1=z1, z2=z2)


def representative_interval(a: int, b: int) -> range:
    """The x-range b − 1 … a + b − 1 for b > 0 and 0 … a − 1 for b = 0."""
    return range(b - 1, a + b) if b > 0 else range(a)


def brute_force_congruence(a: int, b: int) -> tuple[Point, ...]:
    """
    Every pair x1 ≤ x2 of the representative interval with x1 + x2 ≡ a + b − 2 (mod a + 1).

    >>> brute_force_congruence(3, 3)
    ((2, 2), (3, 5), (4, 4))
    """
    interval = representative_interval(a, b)
    return tuple((x1, x2) for x1 in interval for x2 in interval if x1 <= x2 and (x1 + x2 - (a + b - 2)) % (a + 1) == 0)


def orbit_sizes_from_solutions(a: int, b: int) -> tuple[int, ...]:
    """
    Orbit sizes of T_{δ(0)}(a, b) derived from the congruence pairs, for 0 ≤ b ≤ a and a + b ≥ 2.

    A pair x1 < x2 gives an orbit of size x1 + x2 + 4 and a pair x1 = x2 one of size x1 + 2; for b = 0 the orbit
    through (a − 1, a) adds a size a + 2.

    >>> orbit_sizes_from_solutions(3, 3)
    (4, 6, 12)
    """
    if a + b < 2:  # noqa: PLR2004
        msg = f"Orbit sizes from solutions need a + b >= 2, got (a, b) = ({a}, {b})."
        raise ValueError(msg)
    sizes = [x1 + 2 if x1 == x2 else x1 + x2 + 4 for x1, x2 in congruence_solution_sets(a, b).combined]
    if b == 0:
        sizes.append(a + 2)
    return tuple(sorted(sizes))
