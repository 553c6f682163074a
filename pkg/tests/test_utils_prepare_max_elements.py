from __future__ import annotations

from typing import cast

import pytest

from pytamari import utils


def test_prepare_max_elements_with_int() -> None:
    assert utils.prepare_max_elements(2000) == 2000


def test_prepare_max_elements_with_string() -> None:
    assert utils.prepare_max_elements(" 17 ") == 17


def test_prepare_max_elements_default(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(utils.MAX_ELEMENTS_ENV, raising=False)
    assert utils.prepare_max_elements() == utils.DEFAULT_MAX_ELEMENTS


def test_prepare_max_elements_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(utils.MAX_ELEMENTS_ENV, "300")
    assert utils.prepare_max_elements() == 300
    assert utils.prepare_max_elements(12) == 12


def test_prepare_max_elements_with_blank_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(utils.MAX_ELEMENTS_ENV, "  ")
    assert utils.prepare_max_elements() == utils.DEFAULT_MAX_ELEMENTS


@pytest.mark.parametrize("value", [0, -3, "0", "many"])
def test_prepare_max_elements_with_invalid_value(value: int | str) -> None:
    with pytest.raises(ValueError):  # noqa: PT011
        utils.prepare_max_elements(value)


@pytest.mark.parametrize("value", [True, 1.5, [10]])
def test_prepare_max_elements_with_invalid_type(value: object) -> None:
    with pytest.raises(ValueError, match="Invalid element bound type"):
        utils.prepare_max_elements(cast(int, value))


def test_check_element_guard() -> None:
    utils.check_element_guard(10, 10)
    with pytest.raises(utils.ElementLimitError, match="11 elements exceed the element guard of 10"):
        utils.check_element_guard(11, 10)


def test_element_limit_error_is_a_value_error() -> None:
    assert issubclass(utils.ElementLimitError, ValueError)


@pytest.mark.parametrize(
    ("text", "expected"),
    [("2,0", (2, 0)), ("(1, 0, 2, 0)", (1, 0, 2, 0)), ("", ()), ("()", ()), (" 7 ", (7,)), ([3, 1], (3, 1))],
)
def test_parse_int_list(text: str, expected: tuple[int, ...]) -> None:
    assert utils.parse_int_list(text) == expected


def test_parse_int_list_rejects_non_integers() -> None:
    with pytest.raises(ValueError, match="'x' is not an integer in list '1,x'"):
        utils.parse_int_list("1,x")
