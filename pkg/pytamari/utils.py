from __future__ import annotations

import os
from collections.abc import Iterable, Sequence
from functools import wraps
from typing import Any, Callable, TypeVar, cast

T = TypeVar("T")
SelfType = TypeVar("SelfType")

DEFAULT_MAX_ELEMENTS = 50_000
MAX_ELEMENTS_ENV = "TAMARI_MAX_ELEMENTS"


class ElementLimitError(ValueError):
    """Raised when a construction would exceed the configured element guard."""


def prepare_max_elements(value: int | str | None = None) -> int:
    """
    Resolve the element guard used by lattice construction.

    Parameters
    ----------
    value : int | str | None
        An explicit bound. When None, the ``TAMARI_MAX_ELEMENTS`` environment variable is consulted and
        :data:`DEFAULT_MAX_ELEMENTS` is used when it is unset.

    Returns
    -------
    int
        The positive element bound.

    Raises
    ------
    ValueError
        If the bound is not a positive integer or has an unsupported type.

    Examples
    --------
    >>> prepare_max_elements(2000)
    2000
    >>> prepare_max_elements("17")
    17
    """
    if value is None:
        value = os.environ.get(MAX_ELEMENTS_ENV)
        if value is None or not value.strip():
            return DEFAULT_MAX_ELEMENTS
    if isinstance(value, bool):
        msg = "Invalid element bound type. Expected int, str or None."
        raise ValueError(msg)  # noqa: TRY004
    if isinstance(value, int):
        bound = value
    elif isinstance(value, str):
        try:
            bound = int(value.strip())
        except ValueError as e:
            msg = f"Element bound '{value}' is not an integer."
            raise ValueError(msg) from e
    else:
        msg = "Invalid element bound type. Expected int, str or None."
        raise ValueError(msg)  # noqa: TRY004
    if bound <= 0:
        msg = f"Element bound must be positive, got {bound}."
        raise ValueError(msg)
    return bound


def check_element_guard(count: int, max_elements: int | str | None = None) -> None:
    """Raise :class:`ElementLimitError` when ``count`` exceeds the resolved guard."""
    bound = prepare_max_elements(max_elements)
    if count > bound:
        msg = f"{count} elements exceed the element guard of {bound} (set {MAX_ELEMENTS_ENV} to raise it)."
        raise ElementLimitError(msg)


def parse_int_list(text: str | Iterable[int]) -> tuple[int, ...]:
    """
    Parse a comma separated list of integers such as ``"2,0"``.

    Parameters
    ----------
    text : str | Iterable[int]
        Either the textual list (surrounding parentheses are allowed) or an iterable of ints.

    Returns
    -------
    tuple[int, ...]
        The parsed values. The empty string gives the empty tuple.

    Raises
    ------
    ValueError
        If an entry is not an integer.

    Examples
    --------
    >>> parse_int_list("2, 0")
    (2, 0)
    >>> parse_int_list("(1,0,2,0)")
    (1, 0, 2, 0)
    """
    if not isinstance(text, str):
        return tuple(int(value) for value in text)
    stripped = text.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
    if not stripped.strip():
        return ()
    values = []
    for item in stripped.split(","):
        try:
            values.append(int(item.strip()))
        except ValueError as e:  # noqa: PERF203
            msg = f"'{item.strip()}' is not an integer in list '{text}'."
            raise ValueError(msg) from e
    return tuple(values)


def ensure_computed(
    cache_attr: str,
    fetch_func: Callable[..., T],
    fetch_args: Sequence[str] = (),
    **fetch_kwargs: Any,  # noqa: ANN401
) -> Callable[[Callable[..., T]], Callable[..., T]]:
    """
    A decorator that ensures a cached attribute is populated before the method runs.

    If the attribute doesn't exist or is None, ``fetch_func`` is called with the object itself followed by the
    values of ``fetch_args`` (attribute names of the object, or literal values when no such attribute exists)
    and the result is stored on the object.

    Parameters
    ----------
    cache_attr : str
        Name of the attribute holding the cached value.
    fetch_func : Callable
        Function computing the value. It receives the decorated object as first argument.
    fetch_args : Sequence[str]
        Further argument names to pass to ``fetch_func``.
    **fetch_kwargs : Any
        Keyword arguments passed to ``fetch_func``.

    Returns
    -------
    Callable
        A decorator wrapping the original method.

    Example
    -------
    @ensure_computed("_orbits", decompose_orbits)
    def orbit_decomposition(self):
        return self._orbits
    """

    def decorator(method: Callable[..., T]) -> Callable[..., T]:
        @wraps(method)
        def wrapper(
            self: SelfType,
            *args: Any,  # noqa: ANN401
            **kwargs: Any,  # noqa: ANN401
        ) -> T:
            if getattr(self, cache_attr, None) is None:
                func_params = [getattr(self, arg) if hasattr(self, arg) else arg for arg in fetch_args]
                setattr(self, cache_attr, fetch_func(self, *func_params, **fetch_kwargs))
            return method(self, *args, **kwargs)

        return cast(Callable[..., T], wrapper)

    return decorator
