import argparse
import json
import logging
import sys
from functools import wraps
from typing import Callable, List, Optional, Sequence

from walk_partitions.walk_partitions.digraph import Digraph
from walk_partitions.walk_partitions.dressing import cycle_dress, partition_check, walk_dress
from walk_partitions.walk_partitions.enumeration import all_walks, irreducible_cycles, \
    irreducible_walks
from walk_partitions.walk_partitions.graph_io.graph_schema import GraphFileException, \
    build_digraph, build_weighted_digraph
from walk_partitions.walk_partitions.graph_io.graph_store_on_disk import GraphStoreOnDisk
from walk_partitions.walk_partitions.reduction import annotate, cycle_reduce, walk_reduce
from walk_partitions.walk_partitions.settings import get_settings
from walk_partitions.walk_partitions.signature import DressingSignature, kmax, \
    parse_signature
from walk_partitions.walk_partitions.syntax_tree import prime_factorize
from walk_partitions.walk_partitions.utils.format_str import FormatStr
from walk_partitions.walk_partitions.walk import Walk, nest_all
from walk_partitions.walk_partitions.walksum.walk_sum import SingularMatrixException, \
    diagnostics, resolvent_entry, resummation_terms, resummed_walk_sum, truncated_walk_sum

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN_ERROR = 2

graph_store = GraphStoreOnDisk()


class UsageException(Exception):
    """
    Command line arguments are missing or inconsistent.
    """
    pass


class ArgumentParser(argparse.ArgumentParser):
    """
    Argument parser that reports usage errors with exit status 1.
    """

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def input_error(func: Callable[[argparse.Namespace], str]) -> Callable[[argparse.Namespace], int]:
    """
    Decorator that wraps a command to handle possible errors.
    :param func: Command that returns its output as a string.
    :return: Wrapped command that prints the output and returns the exit status.
    """

    @wraps(func)
    def wrapper(args: argparse.Namespace) -> int:
        try:
            output = func(args)
        except UsageException as err:
            print(f"usage error: {err}", file=sys.stderr)
            return EXIT_USAGE
        except FileNotFoundError as err:
            print(f"error: no such file '{err.filename}'", file=sys.stderr)
            return EXIT_DOMAIN_ERROR
        except GraphFileException as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_DOMAIN_ERROR
        except SingularMatrixException as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_DOMAIN_ERROR
        except (KeyError, ValueError) as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_DOMAIN_ERROR
        if output:
            print(output)
        return EXIT_OK

    return wrapper


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names
               if getattr(args, name) is None]
    if missing:
        raise UsageException(f"'{args.command}' requires {', '.join(missing)}")


def _load_graph(args: argparse.Namespace) -> Digraph:
    _require(args, "graph")
    return build_digraph(graph_store.read_graph(args.graph))


def _optional_graph(args: argparse.Namespace, *walks: Walk) -> None:
    if args.graph is not None:
        graph = _load_graph(args)
        for w in walks:
            graph.check_walk(w)


def _signature(args: argparse.Namespace) -> DressingSignature:
    _require(args, "signature")
    return parse_signature(args.signature)


@input_error
def factor(args: argparse.Namespace) -> str:
    """
    Method prints the prime factorization of a walk as a syntax tree.
    :param args: Walk and output options.
    :return: Tree as bracket text, JSON or DOT.
    """
    w = Walk.parse(args.walk)
    _optional_graph(args, w)
    tree = prime_factorize(w)
    if args.dot:
        return FormatStr.tree_dot(tree)
    if args.json:
        return FormatStr.tree_json(tree)
    return FormatStr.tree(tree)


@input_error
def nest(args: argparse.Namespace) -> str:
    """
    Method nests the given walks from left to right; prints 0 when a nesting is not
    defined.
    """
    walks = [Walk.parse(text) for text in args.walks]
    _optional_graph(args, *walks)
    result = nest_all(*walks)
    if args.json:
        return json.dumps({"walk": str(result), "zero": result.is_zero})
    return FormatStr.walk(result)


@input_error
def reduce_walk(args: argparse.Namespace) -> str:
    """
    Method prints the K-irreducible core of a walk, or the level reduction of a cycle
    when --cycle-level is given.
    """
    w = Walk.parse(args.walk)
    signature = _signature(args)
    _optional_graph(args, w)
    if args.cycle_level is None:
        result = walk_reduce(w, signature)
    else:
        result = cycle_reduce(w, signature, args.cycle_level)
    if args.json:
        return json.dumps({"walk": str(w), "signature": str(signature), "core": str(result)})
    return FormatStr.walk(result)


@input_error
def annotate_walk(args: argparse.Namespace) -> str:
    w = Walk.parse(args.walk)
    signature = _signature(args)
    _optional_graph(args, w)
    rows = annotate(w, signature)
    if args.json:
        return json.dumps([row.model_dump() for row in rows], indent=2)
    return FormatStr.annotation_table(rows)


@input_error
def enumerate_walks(args: argparse.Namespace) -> str:
    """
    Method enumerates all walks, the K-irreducible walks, or the (K, level)-irreducible
    cycles off --from, up to an explicit --max-len.
    :param args: Kind of enumeration and its options.
    :return: Walks one per line, or a JSON list.
    """
    graph = _load_graph(args)
    _require(args, "max_len", "source")
    if args.kind == "walks":
        _require(args, "target")
        walks = all_walks(graph, args.source, args.target, args.max_len)
    elif args.kind == "irreducible":
        _require(args, "target")
        walks = irreducible_walks(graph, args.source, args.target, _signature(args),
                                  args.max_len)
    else:
        walks = irreducible_cycles(graph, args.source, _signature(args), args.level,
                                   args.max_len)
    logger.info("Enumerated %d %s up to length %d", len(walks), args.kind, args.max_len)
    if args.json:
        return json.dumps([str(w) for w in walks])
    return FormatStr.walks(walks)


@input_error
def dress(args: argparse.Namespace) -> str:
    """
    Method prints the dressing of an irreducible walk, or of an irreducible cycle when
    --cycle-level is given, up to an explicit --max-len.
    """
    graph = _load_graph(args)
    _require(args, "max_len")
    signature = _signature(args)
    w = Walk.parse(args.walk)
    if args.cycle_level is None:
        walks = walk_dress(w, signature, graph, args.max_len)
    else:
        walks = cycle_dress(w, signature, args.cycle_level, graph, args.max_len)
    logger.info("Dressing of %s under %s holds %d walks up to length %d", w, signature,
                len(walks), args.max_len)
    if args.json:
        return json.dumps([str(x) for x in walks])
    return FormatStr.walks(walks)


@input_error
def check_partition(args: argparse.Namespace) -> str:
    graph = _load_graph(args)
    _require(args, "max_len")
    report = partition_check(graph, _signature(args), args.max_len)
    if args.json:
        return report.model_dump_json(indent=2)
    return FormatStr.report_table(report)


@input_error
def maximal_signature(args: argparse.Namespace) -> str:
    signature = kmax(_load_graph(args))
    if args.json:
        return json.dumps({"signature": list(signature.entries)})
    return str(signature)


@input_error
def walksum(args: argparse.Namespace) -> str:
    """
    Method prints the walk sum from --from to --to. The resummed mode sums dressed
    irreducible walks (K_max of the graph when no signature is given), the truncated mode
    sums all walks up to --max-len and the inverse mode solves (I - A) directly.
    :param args: Mode and its options.
    :return: Scalar value, or the weight block as JSON with diagnostics.
    """
    _require(args, "graph", "source", "target")
    wg = build_weighted_digraph(graph_store.read_graph(args.graph))
    signature = None
    dressed = None
    if args.mode == "resummed":
        maximal = kmax(wg.base)
        signature = _signature(args) if args.signature else maximal
        if signature != maximal:
            _require(args, "max_len")
        terms = resummation_terms(wg, args.source, args.target, signature, args.max_len or 0)
        term_count = len(terms)
        dressed = {v for term in terms for v in term.vertices}
        result = resummed_walk_sum(wg, args.source, args.target, signature,
                                   args.max_len or 0, terms)
    elif args.mode == "truncated":
        _require(args, "max_len")
        term_count = len(all_walks(wg.base, args.source, args.target, args.max_len))
        result = truncated_walk_sum(wg, args.source, args.target, args.max_len)
    else:
        term_count = 0
        result = resolvent_entry(wg, args.source, args.target)
    if args.json or result.shape != (1, 1):
        return FormatStr.matrix_json(
            result, diagnostics(wg, args.mode, term_count, signature, dressed))
    return FormatStr.scalar(result[0, 0])


COMMANDS = {
    "factor": factor,
    "nest": nest,
    "reduce": reduce_walk,
    "annotate": annotate_walk,
    "enumerate": enumerate_walks,
    "dress": dress,
    "partition-check": check_partition,
    "kmax": maximal_signature,
    "walksum": walksum,
}


def build_parser() -> ArgumentParser:
    """
    Method builds the parser of all subcommands.
    :return: Argument parser.
    """
    common = ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--graph", help="JSON graph file")
    common.add_argument("--signature", help="dressing signature, e.g. 2,0")
    common.add_argument("--max-len", type=int, dest="max_len", help="length bound")

    parser = ArgumentParser(prog="walk-partitions",
                            description="Walks on digraphs: factorization, reduction, "
                                        "dressing and resummed walk sums.")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="overrides WALK_PARTITIONS_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True,
                                       parser_class=ArgumentParser)

    sub = subparsers.add_parser("factor", parents=[common], help="prime factorization")
    sub.add_argument("walk")
    sub.add_argument("--dot", action="store_true", help="Graphviz output")

    sub = subparsers.add_parser("nest", parents=[common], help="nest walks left to right")
    sub.add_argument("walks", nargs="+")

    for name, help_text in (("reduce", "K-irreducible core of a walk"),
                            ("annotate", "local depths and resummability")):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("walk")
        if name == "reduce":
            sub.add_argument("--cycle-level", type=int, dest="cycle_level")

    sub = subparsers.add_parser("enumerate", parents=[common], help="enumerate walk sets")
    sub.add_argument("kind", choices=["walks", "irreducible", "cycles"])
    sub.add_argument("--from", dest="source")
    sub.add_argument("--to", dest="target")
    sub.add_argument("--level", type=int, default=0)

    sub = subparsers.add_parser("dress", parents=[common], help="dressing of a walk")
    sub.add_argument("walk")
    sub.add_argument("--cycle-level", type=int, dest="cycle_level")

    subparsers.add_parser("partition-check", parents=[common],
                          help="verify the partition of walks into dressed classes")
    subparsers.add_parser("kmax", parents=[common], help="maximal dressing signature")

    sub = subparsers.add_parser("walksum", parents=[common], help="weighted walk sums")
    sub.add_argument("--from", dest="source")
    sub.add_argument("--to", dest="target")
    sub.add_argument("--mode", choices=["resummed", "truncated", "inverse"],
                     default="resummed")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Method parses the arguments, configures logging and dispatches to the command.
    :param argv: Arguments without the program name.
    :return: Exit status: 0 success, 1 usage error, 2 domain error.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (None, 0) else EXIT_USAGE
    settings = get_settings()
    logging.basicConfig(level=args.log_level or settings.log_level, format=settings.log_format,
                        stream=sys.stderr)
    return COMMANDS[args.command](args)


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
