"""This module contains helper functions that are shared by different modules."""

from fractions import Fraction
from typing import Optional, Tuple, Union

from colorama import Back, Fore, Style
from colorama.ansi import AnsiBack, AnsiFore


def print_color(back: Optional[AnsiBack], fore: Optional[AnsiFore], message: str):
    """Print string with colors and reset the color afterwards."""
    color = ""
    if back:
        color += back
    if fore:
        color += fore
    print(color + message + Style.RESET_ALL)


def print_fcolor(fore: AnsiFore, message: str):
    """Print string with colored font and reset the color afterwards."""
    print_color(None, fore, message)


def print_verdict(passed: bool, message: str):
    """Print message in green if passed, else in red."""
    print_color(None if passed else Back.RED, Fore.GREEN if passed else Fore.WHITE, message)


def format_rational(value: Union[int, Fraction]) -> str:
    """Exact text of a rational, "p/q" or "p"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_range(text: str) -> Tuple[int, Optional[int]]:
    """Parse a half-open index range "A..B"; "A.." leaves the end open.

    Raises
    ------
    ValueError
        If text is not of the form "A..B" with 0 <= A <= B.

    """
    start, separator, end = text.partition("..")
    if not separator or not start.strip().isdigit():
        raise ValueError(f"Range '{text}' is not of the form A..B")
    first = int(start)
    if not end.strip():
        return first, None
    if not end.strip().isdigit() or int(end) < first:
        raise ValueError(f"Range '{text}' is not of the form A..B with A <= B")
    return first, int(end)
