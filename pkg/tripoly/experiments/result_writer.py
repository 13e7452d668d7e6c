"""This module formats experiment results as text."""

from typing import Dict, Iterable, List

from tripoly.experiments.growth import GrowthReport
from tripoly.experiments.heuristic import HeuristicReport
from tripoly.experiments.ratio import RatioMatrix
from tripoly.experiments.scan import ScanEntry
from tripoly.util.helper import format_rational

CONJECTURE_MARKER = "CONJECTURE (Conjecture 7.1)"
MISSING = "-"


def growth_lines(report: GrowthReport) -> List[str]:
    """Human readable growth report; conjectural rates carry the conjecture marker."""
    lines = [
        f"expression: {report.expression!r}",
        f"a^yv(2,4): {format_rational(report.base_value)}",
        f"segments: {report.segments}",
        f"rate: {report.rounded_rate}",
    ]
    if report.conjectural:
        lines.append(CONJECTURE_MARKER)
    return lines


def heuristic_lines(report: HeuristicReport) -> List[str]:
    return [
        f"expression: {report.expression!r}",
        f"[y^1]T(m): {format_rational(report.first_coefficient)}",
        f"m(4): {format_rational(report.m_at_four)}",
        f"ratio: {format_rational(report.ratio)}",
    ]


def scan_lines(entries: Iterable[ScanEntry]) -> List[str]:
    """One "(rate, record, apex)" tuple per line."""
    return [entry.line() for entry in entries]


def format_ratio_matrix(k: int, matrix: RatioMatrix) -> str:
    """Matrix rows with right-aligned exact fractions, preceded by the hull segment count."""
    cells = [
        [MISSING if value is None else format_rational(value) for value in row] for row in matrix
    ]
    width = max((len(cell) for row in cells for cell in row), default=1)
    rows = ["[" + " ".join(cell.rjust(width) for cell in row) + "]" for row in cells]
    return f"({k},\n" + "\n".join(f"  {row}" for row in rows) + "\n)"


def format_ratio_matrices(matrices: Dict[int, RatioMatrix]) -> str:
    return "\n".join(format_ratio_matrix(k, matrices[k]) for k in sorted(matrices))
