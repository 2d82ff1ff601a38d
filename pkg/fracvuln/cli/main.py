"""
==========================
Year: 2026
==========================
Command line entry point. Results go to stdout or --output, log messages go to stderr.

Exit codes: 0 on success (an indistinguishable comparison included), 1 for input errors, 2 for configuration and
parameter errors.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional, Tuple

from fracvuln.cli.commands import run_analyze, run_attack, run_boxcover, run_compare, run_generate, run_rank
from fracvuln.cli.output import render, write_output
from fracvuln.core.generators import GeneratorKind, GeneratorSpec
from fracvuln.core.graph import Graph
from fracvuln.core.load import load_config, load_graph_by_name, parse_edge_list, read_edge_list
from fracvuln.core.model import (AnalysisConfig, ConfigError, FracVulnError, OutputFormat, ParameterError,
                                 parse_option)

logger = logging.getLogger("fracvuln")

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_CONFIG_ERROR = 2


def _analysis_options():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug output")
    parser.add_argument("--config", default=None, help="named configuration or path to a .json file")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--runs", type=int, default=None, help="box-covering runs per box size")
    parser.add_argument("--pmax", type=int, default=None, help="largest exponent tried by compare")
    parser.add_argument("--fraction", type=float, default=None, help="fraction of vertices removed by attack")
    parser.add_argument("--fit-lo", type=int, default=None, help="smallest box size in the fit")
    parser.add_argument("--fit-hi", type=int, default=None, help="largest box size in the fit")
    parser.add_argument("--format", default=None, choices=[f.value for f in OutputFormat])
    parser.add_argument("--output", default=None, help="write the result to this file instead of stdout")
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fracvuln",
                                     description="Fractal-dimension-weighted vulnerability analysis of networks.")
    commands = parser.add_subparsers(dest="command", required=True)
    options = _analysis_options()
    graph_help = "edge-list file, '-' for stdin or @name for a bundled graph"

    analyze = commands.add_parser("analyze", parents=[options], help="vulnerability report of one graph")
    analyze.add_argument("graph", help=graph_help)

    compare = commands.add_parser("compare", parents=[options], help="which of two graphs is more vulnerable")
    compare.add_argument("graph_a", help=graph_help)
    compare.add_argument("graph_b", help=graph_help)
    compare.add_argument("--normalized", action="store_true", default=None, help="compare normalized betweenness")
    compare.add_argument("--plot", default=None, help="write the b_p curves to this PNG file")

    attack = commands.add_parser("attack", parents=[options], help="recalculated-betweenness attack")
    attack.add_argument("graph", help=graph_help)

    boxcover = commands.add_parser("boxcover", parents=[options], help="box-counting curve and fractal dimension")
    boxcover.add_argument("graph", help=graph_help)
    boxcover.add_argument("--plot", default=None, help="write the log-log curve to this PNG file")

    rank = commands.add_parser("rank", parents=[options], help="rank several graphs by every metric")
    rank.add_argument("graphs", nargs="+", help=graph_help)

    generate = commands.add_parser("generate", parents=[options], help="write a seeded random graph")
    generate.add_argument("kind", choices=[kind.value for kind in GeneratorKind])
    generate.add_argument("--n", type=int, required=True, help="number of vertices")
    generate.add_argument("--k", type=float, default=None, help="mean degree (er)")
    generate.add_argument("--m", type=int, default=None, help="links per new vertex (ba)")
    generate.add_argument("--m-values", type=int, nargs="+", default=[2, 3], help="link counts (ba-mixed)")
    generate.add_argument("--m-probs", type=float, nargs="+", default=[0.6, 0.4], help="their probabilities")
    return parser


def configure_logging(verbosity: int):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def build_config(args) -> AnalysisConfig:
    config = load_config(args.config) if args.config is not None else AnalysisConfig()
    changes = {}
    if args.seed is not None:
        changes['seed'] = args.seed
    if args.runs is not None:
        changes['box_runs'] = args.runs
    if args.pmax is not None:
        changes['p_max'] = args.pmax
    if args.fraction is not None:
        changes['attack_fraction'] = args.fraction
    if args.fit_lo is not None or args.fit_hi is not None:
        changes['fit_range'] = (args.fit_lo, args.fit_hi)
    if args.format is not None:
        changes['output_format'] = parse_option(OutputFormat, args.format)
    if getattr(args, "normalized", None):
        changes['normalized_compare'] = True
    return config.copy(**changes).validate()


def read_graph(source: str) -> Tuple[str, Graph]:
    """
    :return: (name, graph) for a file path, '-' for stdin or '@name' for a bundled graph.
    """
    if source == "-":
        return "stdin", parse_edge_list(sys.stdin.buffer.read())
    if source.startswith("@"):
        return source[1:], load_graph_by_name(source[1:])
    return os.path.splitext(os.path.basename(source))[0], read_edge_list(source)


def _generator_spec(args, config: AnalysisConfig) -> GeneratorSpec:
    kind = GeneratorKind(args.kind)
    mean_degree = args.k
    if kind == GeneratorKind.BA:
        if args.m is None:
            raise ParameterError("ba needs --m")
        mean_degree = 2.0 * args.m
    elif kind == GeneratorKind.ER and args.k is None:
        raise ParameterError("er needs --k")
    return GeneratorSpec(kind, args.n, config.seed, mean_degree, tuple(args.m_values), tuple(args.m_probs))


def run(args) -> int:
    config = build_config(args)
    if args.command == "generate":
        write_output(run_generate(_generator_spec(args, config)), args.output)
        return EXIT_OK
    if args.command == "analyze":
        name, g = read_graph(args.graph)
        result = run_analyze(g, config, name)
    elif args.command == "compare":
        name_a, g_a = read_graph(args.graph_a)
        name_b, g_b = read_graph(args.graph_b)
        result = run_compare(g_a, g_b, config, (name_a, name_b), args.plot)
    elif args.command == "attack":
        name, g = read_graph(args.graph)
        result = run_attack(g, config, name)
    elif args.command == "boxcover":
        name, g = read_graph(args.graph)
        result = run_boxcover(g, config, name, args.plot)
    else:
        result = run_rank([read_graph(source) for source in args.graphs], config)
    write_output(render(result, config.output_format), args.output)
    return result.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (None, 0) else EXIT_CONFIG_ERROR
    configure_logging(args.verbose)
    try:
        return run(args)
    except (ConfigError, ParameterError) as e:
        logger.error("%s", e)
        return EXIT_CONFIG_ERROR
    except (FracVulnError, OSError) as e:
        logger.error("%s", e)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
