# pylint: disable=missing-docstring
from fractions import Fraction

import pytest
from colorama import Back, Fore, Style
from pytest import raises

from tripoly.util.helper import (
    format_rational,
    parse_range,
    print_color,
    print_fcolor,
    print_verdict,
)


class TestFormatRational:
    @pytest.mark.parametrize(
        "value, expected",
        [(0, "0"), (7, "7"), (Fraction(-3, 4), "-3/4"), (Fraction(10, 5), "2"), (-2, "-2")],
    )
    def test_format_rational(self, value, expected):
        assert format_rational(value) == expected


class TestParseRange:
    def test_closed_range(self):
        assert parse_range("3..10") == (3, 10)

    def test_open_range(self):
        assert parse_range("120..") == (120, None)

    def test_empty_range(self):
        assert parse_range("5..5") == (5, 5)

    @pytest.mark.parametrize("text", ["3", "..4", "a..b", "-1..3", "3..x"])
    def test_malformed_range(self, text):
        with raises(ValueError, match="is not of the form A..B"):
            parse_range(text)

    def test_decreasing_range(self):
        with raises(ValueError, match="with A <= B"):
            parse_range("9..2")


class TestPrintColor:
    def test_print_fcolor(self, capsys):
        print_fcolor(Fore.YELLOW, "CONJECTURE")
        assert capsys.readouterr().out == f"{Fore.YELLOW}CONJECTURE{Style.RESET_ALL}\n"

    def test_print_color(self, capsys):
        print_color(Back.BLUE, Fore.WHITE, "text")
        assert capsys.readouterr().out == f"{Back.BLUE}{Fore.WHITE}text{Style.RESET_ALL}\n"

    def test_print_verdict(self, capsys):
        print_verdict(True, "PASS")
        print_verdict(False, "FAIL")
        passed, failed = capsys.readouterr().out.splitlines()
        assert passed == f"{Fore.GREEN}PASS{Style.RESET_ALL}"
        assert failed == f"{Back.RED}{Fore.WHITE}FAIL{Style.RESET_ALL}"
