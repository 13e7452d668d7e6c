#!/usr/bin/python3
"""This module is the command line interface of tripoly.

Every subcommand prints human readable text, or one JSON document with --json. The exit status is
0 on success, 1 if a TripolyError occurred and 2 on usage errors.

"""

import os
import sys
from argparse import ArgumentParser, ArgumentTypeError, Namespace
from logging import DEBUG, getLogger
from typing import Callable, Dict, List, Optional

from colorama import Fore
from yaml import YAMLError

from tripoly.algebra.hat import hat_m, hat_t
from tripoly.algebra.polynomial import BasisTag, TaggedPoly
from tripoly.algebra.transform import apply_M, apply_T, vee, wedge
from tripoly.experiments.exceptions import ExperimentError
from tripoly.experiments.growth import growth_rate, round_rate
from tripoly.experiments.heuristic import heuristic_diagnostic
from tripoly.experiments.order_type_db import database_file_name
from tripoly.experiments.ratio import ratio_experiment
from tripoly.experiments.result_writer import (
    CONJECTURE_MARKER,
    format_ratio_matrices,
    growth_lines,
    heuristic_lines,
    scan_lines,
)
from tripoly.experiments.scan import scan_pipeline
from tripoly.fastmod.fastcheck import fastcheck
from tripoly.fastmod.transform import FastRoute
from tripoly.geometry.point_set import read_point_file
from tripoly.nearedge.expression import Leaf
from tripoly.nearedge.expression_parser import parse_expression
from tripoly.nearedge.joint_polynomial import (
    count_glued_polygon,
    count_triangulations,
    joint_poly,
)
from tripoly.oracle.brute_force import brute_joint_poly, fixed_floor_poly
from tripoly.oracle.region_counter import count_all_triangulations
from tripoly.util.aggregating_logger import AggregatingLogger, name_to_level
from tripoly.util.configuration import Configuration, InvalidConfigurationError
from tripoly.util.exceptions import TripolyError
from tripoly.util.helper import parse_range, print_fcolor, print_verdict
from tripoly.util.json_handling import dumps
from tripoly.util.log_aggregator import Aggregator
from tripoly.util.time_measurement import TimeMeasurement

JOINT_TAGS = ("xu", "xv", "yu", "yv")


def _record_range(text: str):
    try:
        return parse_range(text)
    except ValueError as error:
        raise ArgumentTypeError(str(error)) from error


def _index_list(text: str):
    try:
        return tuple(int(index) for index in text.split(","))
    except ValueError as error:
        raise ArgumentTypeError(f"'{text}' is not a comma separated list of indices") from error


def _positive(text: str) -> int:
    if not text.isdigit() or int(text) < 1:
        raise ArgumentTypeError(f"'{text}' is not a positive integer")
    return int(text)


def split_top_level(text: str) -> List[str]:
    """Split at commas that are not enclosed in parentheses."""
    parts, depth, current = [], 0, []
    for character in text:
        if character == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
            continue
        if character == "(":
            depth += 1
        elif character == ")":
            depth -= 1
        current.append(character)
    parts.append("".join(current).strip())
    return [part for part in parts if part]


def _add_database_arguments(parser: ArgumentParser):
    parser.add_argument("--db", help="Order type database file or directory")
    parser.add_argument("--n", type=_positive, required=True, help="Points per record")
    parser.add_argument("--width", type=int, choices=[8, 16], help="Bits per coordinate")
    parser.add_argument("--range", type=_record_range, default=(0, None), metavar="A..B")
    parser.add_argument("--workers", type=_positive, help="Worker processes")
    parser.add_argument("--strict", action="store_true", help="Fail on degenerate records")


def _create_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="tripoly", description="Exact triangulation polynomials")
    parser.add_argument("--config", help="Path to configuration file")
    parser.add_argument("--json", action="store_true", help="Print one JSON document")
    parser.add_argument(
        "--log-level", type=str.upper, choices=sorted(name_to_level), help="Override log level"
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    transform = commands.add_parser("transform", help="Apply 𝓜 (t2m) or 𝓣 (m2t)")
    transform.add_argument("--dir", choices=["m2t", "t2m"], required=True)
    transform.add_argument("--poly", required=True)

    operation = commands.add_parser("op", help="Convex or concave sum of two polynomials")
    operator = operation.add_mutually_exclusive_group(required=True)
    operator.add_argument("--vee", action="store_true", help="t1 ∨ t2 in the y basis")
    operator.add_argument("--wedge", action="store_true", help="m1 ∧ m2 in the x basis")
    operation.add_argument("first")
    operation.add_argument("second")

    hat = commands.add_parser("hat", help="Hat series of a t- or m-polynomial")
    kind = hat.add_mutually_exclusive_group(required=True)
    kind.add_argument("--t", action="store_true", help="Polynomial in y")
    kind.add_argument("--m", action="store_true", help="Polynomial in x")
    hat.add_argument("--poly", required=True)
    hat.add_argument("--order", type=_positive, help="Truncation order")

    joint = commands.add_parser("jp", help="Joint triangulation polynomial of a near-edge")
    joint.add_argument("--expr", required=True)
    joint.add_argument("--tags", choices=JOINT_TAGS, default="yu")

    count = commands.add_parser("count", help="Number of triangulations of a near-edge")
    source = count.add_mutually_exclusive_group(required=True)
    source.add_argument("--expr")
    source.add_argument("--points", help="Point file of a standalone near-edge")

    glue = commands.add_parser("glue", help="Triangulations of a polygon with glued near-edges")
    glue.add_argument("--edges", required=True, help="Comma separated expressions")

    growth = commands.add_parser("growth", help="Growth rate of the twin chains of a near-edge")
    growth.add_argument("--expr", required=True)

    heuristic = commands.add_parser("heuristic", help="[y^1]𝓣(m) against m(4) for a chain")
    heuristic.add_argument("--expr", required=True)

    oracle = commands.add_parser("oracle", help="Brute force counts of a point file")
    oracle.add_argument("mode", choices=["count", "jp", "tl"])
    oracle.add_argument("--points", required=True)
    oracle.add_argument("--floor", type=_index_list, help="Floor point indices, e.g. 0,2,4")

    scan = commands.add_parser("scan", help="Rank database near-edges by growth rate")
    _add_database_arguments(scan)
    scan.add_argument("--koch", type=int, required=True, help="Koch stage s")
    scan.add_argument("--top", type=_positive, help="Number of entries printed")
    scan.add_argument("--checkpoint", help="Directory to resume from and to save progress to")

    ratio = commands.add_parser("ratio", help="Coefficient ratio bounds of fixed-floor polynomials")
    _add_database_arguments(ratio)

    check = commands.add_parser("fastcheck", help="Compare the modular path with the exact one")
    check.add_argument("--deg", type=_positive, required=True)
    check.add_argument("--trials", type=_positive, required=True)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--route", choices=[route.value for route in FastRoute])
    return parser


def _parse_arguments(argv: List[str]) -> Namespace:
    parser = _create_parser()
    arguments = parser.parse_args(argv)
    if arguments.command == "oracle" and arguments.mode == "tl" and arguments.floor is None:
        parser.error("oracle tl requires --floor")
    return arguments


def _load_configuration(arguments: Namespace) -> Configuration:
    if arguments.config is None:
        config = Configuration.default()
    else:
        try:
            config = Configuration.create_from_yaml(arguments.config)
        except (OSError, YAMLError) as error:
            raise InvalidConfigurationError(
                message=f"Can't read '{arguments.config}': {error}"
            ) from error
    if arguments.log_level is not None:
        config["logger"]["level"] = arguments.log_level
    config.verify(getLogger("Tripoly"))
    return config


def _emit(arguments: Namespace, document: dict, lines: List[str]):
    if arguments.json:
        print(dumps(document))
        return
    for line in lines:
        if line == CONJECTURE_MARKER:
            print_fcolor(Fore.YELLOW, line)
        else:
            print(line)


def _counting_options(config: Configuration) -> dict:
    return {
        "max_points": config.max_points,
        "hull_check_max_points": config["hull_check_max_points"],
        "epsilon_start": config.epsilon_start,
        "max_halvings": config.max_halvings,
    }


def _transform(arguments: Namespace, _: Configuration) -> int:
    if arguments.dir == "t2m":
        result = apply_M(TaggedPoly.parse(arguments.poly, BasisTag.Y))
    else:
        result = apply_T(TaggedPoly.parse(arguments.poly, BasisTag.X))
    _emit(arguments, {"direction": arguments.dir, "result": result}, [str(result)])
    return 0


def _operation(arguments: Namespace, _: Configuration) -> int:
    tag, operator = (BasisTag.Y, vee) if arguments.vee else (BasisTag.X, wedge)
    first = TaggedPoly.parse(arguments.first, tag)
    result = operator(first, TaggedPoly.parse(arguments.second, tag))
    name = "vee" if arguments.vee else "wedge"
    _emit(arguments, {"operation": name, "result": result}, [str(result)])
    return 0


def _hat(arguments: Namespace, config: Configuration) -> int:
    order = arguments.order or config["laurent_order"]
    if arguments.t:
        series = hat_t(TaggedPoly.parse(arguments.poly, BasisTag.Y), order)
    else:
        series = hat_m(TaggedPoly.parse(arguments.poly, BasisTag.X), order)
    document = {"order": order, "series": series, "terms": series.as_dict()}
    _emit(arguments, document, [str(series)])
    return 0


def _joint(arguments: Namespace, config: Configuration) -> int:
    expression = parse_expression(arguments.expr)
    tags = (BasisTag(arguments.tags[0]), BasisTag(arguments.tags[1]))
    result = joint_poly(expression, tags, config.max_points)
    document = {"expression": repr(expression), "tags": arguments.tags, "result": result}
    _emit(arguments, document, [str(result)])
    return 0


def _count(arguments: Namespace, config: Configuration) -> int:
    if arguments.points is not None:
        expression = Leaf(read_point_file(arguments.points), source=arguments.points)
    else:
        expression = parse_expression(arguments.expr)
    count = count_triangulations(expression, **_counting_options(config))
    _emit(arguments, {"expression": repr(expression), "count": count}, [str(count)])
    return 0


def _glue(arguments: Namespace, config: Configuration) -> int:
    edges = [parse_expression(text) for text in split_top_level(arguments.edges)]
    count = count_glued_polygon(edges, config.max_points)
    _emit(arguments, {"edges": [repr(edge) for edge in edges], "count": count}, [str(count)])
    return 0


def _growth(arguments: Namespace, config: Configuration) -> int:
    report = growth_rate(parse_expression(arguments.expr), config.max_points)
    document = {
        "expression": repr(report.expression),
        "base_value": report.base_value,
        "segments": report.segments,
        "rate": report.rounded_rate,
        "rate_digits": report.rate,
        "conjectural": report.conjectural,
    }
    _emit(arguments, document, growth_lines(report))
    return 0


def _heuristic(arguments: Namespace, config: Configuration) -> int:
    report = heuristic_diagnostic(parse_expression(arguments.expr), config.max_points)
    document = {
        "expression": repr(report.expression),
        "first_coefficient": report.first_coefficient,
        "m_at_four": report.m_at_four,
        "ratio": report.ratio,
    }
    _emit(arguments, document, heuristic_lines(report))
    return 0


def _oracle(arguments: Namespace, config: Configuration) -> int:
    points = read_point_file(arguments.points).points
    if arguments.mode == "count":
        result = count_all_triangulations(points, config.max_points)
    elif arguments.mode == "jp":
        result = brute_joint_poly(points, config.max_points)
    else:
        result = fixed_floor_poly(points, arguments.floor, config.max_points)
    _emit(arguments, {"mode": arguments.mode, "result": result}, [str(result)])
    return 0


def _database_path(arguments: Namespace, config: Configuration) -> str:
    path = arguments.db or config.db_directory
    if path is None:
        raise ExperimentError("No order type database given, use --db or set TRIPOLY_DB_DIR")
    if os.path.isdir(path):
        path = os.path.join(path, database_file_name(arguments.n, arguments.width))
    return path


def _scan(arguments: Namespace, config: Configuration) -> int:
    entries = scan_pipeline(
        _database_path(arguments, config),
        arguments.n,
        arguments.koch,
        top=arguments.top,
        record_range=arguments.range,
        workers=arguments.workers or config["workers"],
        width=arguments.width,
        checkpoint_directory=arguments.checkpoint,
        strict=arguments.strict,
        max_points=config.max_points,
    )
    lines = scan_lines(entries)
    if any(entry.conjectural for entry in entries):
        lines.append(CONJECTURE_MARKER)
    document = {
        "entries": [
            {
                "rate": round_rate(entry.rate),
                "record": entry.record,
                "apex": entry.apex,
                "base_value": entry.base_value,
                "segments": entry.segments,
                "conjectural": entry.conjectural,
            }
            for entry in entries
        ]
    }
    _emit(arguments, document, lines)
    return 0


def _ratio(arguments: Namespace, config: Configuration) -> int:
    matrices = ratio_experiment(
        _database_path(arguments, config),
        arguments.n,
        record_range=arguments.range,
        workers=arguments.workers or config["workers"],
        width=arguments.width,
        strict=arguments.strict,
        max_points=config.max_points,
    )
    lines = [format_ratio_matrices(matrices)] if matrices else []
    _emit(arguments, dict(sorted(matrices.items())), lines)
    return 0


def _fastcheck(arguments: Namespace, config: Configuration) -> int:
    route = FastRoute(arguments.route) if arguments.route else config.fast_route
    report = fastcheck(arguments.deg, arguments.trials, arguments.seed, route, config.field)
    if arguments.json:
        print(dumps(report._asdict()))
    else:
        print(
            f"degree {report.degree}, {report.trials} trials, modulus {report.modulus}, "
            f"route {report.route.value}"
        )
        for name, failures in report.failures.items():
            nanoseconds = report.nanoseconds.get(name, 0.0)
            print_verdict(not failures, f"{name}: {failures} failures, {nanoseconds:.0f} ns")
    return 0 if report.passed else 1


COMMANDS: Dict[str, Callable[[Namespace, Configuration], int]] = {
    "transform": _transform,
    "op": _operation,
    "hat": _hat,
    "jp": _joint,
    "count": _count,
    "glue": _glue,
    "growth": _growth,
    "heuristic": _heuristic,
    "oracle": _oracle,
    "scan": _scan,
    "ratio": _ratio,
    "fastcheck": _fastcheck,
}


def _log_times(logger):
    for name, nanoseconds in sorted(TimeMeasurement.mean_nanoseconds().items()):
        logger.info(f"Mean time of {name}: {nanoseconds:.0f} ns")


def run(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return the exit status."""
    try:
        arguments = _parse_arguments(sys.argv[1:] if argv is None else argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else 2
    logger = getLogger("Tripoly")
    try:
        config = _load_configuration(arguments)
        AggregatingLogger.setup(config)
        logger = AggregatingLogger.create("Tripoly")
        TimeMeasurement.TIME_MEASUREMENT_ENABLED = config["measure_time"]
        if logger.isEnabledFor(DEBUG):
            logger.debug(f"Running '{arguments.command}'")
        status = COMMANDS[arguments.command](arguments, config)
        if config["measure_time"]:
            _log_times(logger)
        return status
    except TripolyError as error:
        logger.error(f"{type(error).__name__}: {error}")
        return 1
    finally:
        Aggregator.exit()


def main():
    """Start tripoly from the command line."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
