"""
The hook and 2-row families of alt ν-Tamari lattices.

The hook family H_{δ(k)}(a, b) uses ν = E N^{a−1} E^{b−1} N, whose Young diagram is the hook (b, 1^{a−1}),
with the increment vector δ(k) = (0, …, 0, k, 0), 0 ≤ k ≤ b − 1. The 2-row family T_{δ(k)}(a, b) uses
ν = E^a N E^b N with δ(k) = (k, 0), 0 ≤ k ≤ b. Both families come with simplified coordinates read off
their bracket vectors.

Examples
--------
>>> from pytamari.Families import hook_tamari, two_row_tamari
>>> hook_tamari(2, 2, 1).size
5
>>> two_row_tamari(3, 3, 2).size
22
"""

from __future__ import annotations

from typing import Any

from pytamari.AltTamari import build_alt_tamari
from pytamari.BracketVector import HookCoords, TwoRowTriple, bracket_vector, hook_coords, nu_hat, two_row_triple
from pytamari.FiniteLattice import FiniteLattice
from pytamari.LatticePath import IncrementVector, LatticePath
from pytamari.Switching import SwitchEmbedding


def _check_hook(a: int, b: int, k: int) -> None:
    if a < 1 or b < 1:
        msg = f"The hook family needs a, b >= 1, got (a, b) = ({a}, {b})."
        raise ValueError(msg)
    if not 0 <= k <= b - 1 or (a == 1 and k != 0):
        msg = f"k = {k} is out of range for the hook family with (a, b) = ({a}, {b})."
        raise ValueError(msg)


def _check_two_row(a: int, b: int, k: int) -> None:
    if a < 0 or b < 0:
        msg = f"The 2-row family needs a, b >= 0, got (a, b) = ({a}, {b})."
        raise ValueError(msg)
    if not 0 <= k <= b:
        msg = f"k = {k} is out of range for the 2-row family with (a, b) = ({a}, {b})."
        raise ValueError(msg)


def hook_nu(a: int, b: int) -> LatticePath:
    """
    ν = E N^{a−1} E^{b−1} N.

    >>> str(hook_nu(4, 7))
    'EN^3E^6N'
    """
    _check_hook(a, b, 0)
    return LatticePath("E" + "N" * (a - 1) + "E" * (b - 1) + "N")


def hook_delta(a: int, b: int, k: int) -> IncrementVector:
    """δ(k) = (0, …, 0, k, 0) with k in position a − 1; (0) when a = 1."""
    _check_hook(a, b, k)
    if a == 1:
        return IncrementVector((0,))
    return IncrementVector((0,) * (a - 2) + (k, 0))


def hook_nu_hat(a: int, b: int, k: int) -> LatticePath:
    """ν̂(k) = E^{b−k} N^{a−1} E^k N."""
    return nu_hat(hook_nu(a, b), hook_delta(a, b, k))


def hook_tamari(a: int, b: int, k: int, **kwargs: Any) -> FiniteLattice:  # noqa: ANN401
    """Build H_{δ(k)}(a, b); keyword arguments go to :func:`pytamari.AltTamari.build_alt_tamari`."""
    return build_alt_tamari(hook_nu(a, b), hook_delta(a, b, k), **kwargs)


def hook_coordinates(lattice: FiniteLattice, a: int, b: int, k: int) -> tuple[HookCoords, ...]:
    """
    The simplified coordinates (s, t) of every element of H_{δ(k)}(a, b), indexed by element id.

    >>> [(point.s, point.t) for point in hook_coordinates(hook_tamari(2, 2, 1), 2, 2, 1)]
    [(2, 1), (2, 0), (1, 0), (0, 1), (0, 0)]
    """
    base = hook_nu_hat(a, b, k)
    return tuple(
        hook_coords(bracket_vector(base, lattice.payload(element)), a, b, k) for element in range(lattice.size)
    )


def two_row_nu(a: int, b: int) -> LatticePath:
    """
    ν = E^a N E^b N.

    >>> str(two_row_nu(3, 3))
    'E^3NE^3N'
    """
    _check_two_row(a, b, 0)
    return LatticePath("E" * a + "N" + "E" * b + "N")


def two_row_delta(a: int, b: int, k: int) -> IncrementVector:
    """δ(k) = (k, 0)."""
    _check_two_row(a, b, k)
    return IncrementVector((k, 0))


def two_row_nu_hat(a: int, b: int, k: int) -> LatticePath:
    """ν̂(k) = E^{a+b−k} N E^k N."""
    return nu_hat(two_row_nu(a, b), two_row_delta(a, b, k))


def two_row_tamari(a: int, b: int, k: int, **kwargs: Any) -> FiniteLattice:  # noqa: ANN401
    """Build T_{δ(k)}(a, b); keyword arguments go to :func:`pytamari.AltTamari.build_alt_tamari`."""
    return build_alt_tamari(two_row_nu(a, b), two_row_delta(a, b, k), **kwargs)


def two_row_triples(lattice: FiniteLattice, a: int, b: int, k: int) -> tuple[TwoRowTriple, ...]:
    """The simplified triples (a − s, u, v) of every element of T_{δ(k)}(a, b), indexed by element id."""
    base = two_row_nu_hat(a, b, k)
    return tuple(
        two_row_triple(bracket_vector(base, lattice.payload(element)), a, b, k) for element in range(lattice.size)
    )


def two_row_embedding(lattice: FiniteLattice, a: int, b: int, k: int) -> SwitchEmbedding:
    """
    The planar embedding of T_{δ(k)}(a, b) on the staircase S(a, b).

    An element with triple (y, u, v) sits on the row y. Elements with v = 0 fill the row from x = 0 by u; those
    with v > 0 sit at x = a + b − k + v, so the pentagon of each row lies at the k-th square from the right. For
    k = 0 the rows are 0 … b + y.

    >>> two_row_embedding(two_row_tamari(0, 1, 1), 0, 1, 1).coordinates
    ((1, 0), (0, 0))
    """
    return SwitchEmbedding(
        tuple(
            (triple.u if triple.v == 0 else a + b - k + triple.v, triple.height)
            for triple in two_row_triples(lattice, a, b, k)
        )
    )


def grid_embedding(p: int, q: int) -> SwitchEmbedding:
    """
    The embedding of :meth:`FiniteLattice.product_of_chains` ``(p, q)``: the element ``x * q + y`` sits at (x, y).

    >>> grid_embedding(2, 2).coordinates
    ((0, 0), (0, 1), (1, 0), (1, 1))
    """
    if p < 1 or q < 1:
        msg = f"Chains need at least one element, got C_{p} × C_{q}."
        raise ValueError(msg)
    return SwitchEmbedding(tuple((x, y) for x in range(p) for y in range(q)))


def two_row_factors(
    a: int,
    b: int,
    k: int,
) -> tuple[FiniteLattice, SwitchEmbedding, FiniteLattice, SwitchEmbedding]:
    """
    The switching factors A_k = C_k × C_{a+1} and B_k = T_{δ(0)}(a, b − k) with their embeddings.

    A_k * B_k reproduces T_{δ(0)}(a, b) and B_k * A_k reproduces T_{δ(k)}(a, b); both factors have the
    a-switching property.

    Raises
    ------
    ValueError
        Unless 1 <= k <= b.
    """
    _check_two_row(a, b, k)
    if k < 1:
        msg = "The switching factors need k >= 1."
        raise ValueError(msg)
    chains = FiniteLattice.product_of_chains(k, a + 1)
    rest = two_row_tamari(a, b - k, 0)
    return chains, grid_embedding(k, a + 1), rest, two_row_embedding(rest, a, b - k, 0)
