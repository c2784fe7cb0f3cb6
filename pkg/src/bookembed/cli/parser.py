# Why does this file exist, and why not put this in `__main__`?
#
# You might be tempted to import things from `__main__` later,
# but that will cause problems: the code will get executed twice:
#
# - When you run `python -m bookembed` python will execute
#   `__main__.py` as a script. That means there won't be any
#   `bookembed.__main__` in `sys.modules`.
# - When you import `__main__` it will get executed again (as a module) because
#   there's no `bookembed.__main__` in `sys.modules`.

"""Module that contains the command line application."""

import argparse

from bookembed.utils import get_version

FORMATS = ("json", "svg", "edgelist")

SUPPORTED_FORMATS = {
    "embed": {"json", "svg", "edgelist"},
    "generate": {"edgelist"},
    "augment": {"json", "edgelist"},
    "render": {"svg"},
}

GENERATORS = ("xtree", "ext-xtree", "grid", "subdivide", "random")


def check_args(parser: argparse.ArgumentParser, opts: argparse.Namespace) -> None:
    """
    Additional checks for command line arguments.

    Arguments:
        parser: An argument parser.
        opts: Parsed options.
    """
    if not opts.subcommand:
        parser.error("the following arguments are required: COMMAND")

    subparsers = [
        action
        for action in parser._actions  # noqa: WPS437 (protected attribute)
        if isinstance(action, argparse._SubParsersAction)  # noqa: WPS437
    ][0].choices

    supported = SUPPORTED_FORMATS.get(opts.subcommand)
    if opts.output_format and supported is not None and opts.output_format not in supported:
        subparsers[opts.subcommand].error(
            f"argument -f/--format: {opts.output_format} is not supported, use one of {', '.join(sorted(supported))}",
        )

    if opts.subcommand == "generate":
        if opts.kind in {"xtree", "ext-xtree"} and opts.depth is None:
            subparsers["generate"].error("the following arguments are required: --depth")
        elif opts.kind == "grid" and (opts.rows is None or opts.cols is None):
            subparsers["generate"].error("the following arguments are required: --rows, --cols")
        elif opts.kind == "random" and opts.nodes is None:
            subparsers["generate"].error("the following arguments are required: --nodes")


def get_parser() -> argparse.ArgumentParser:
    """
    Return a parser for the command-line options and arguments.

    Returns:
        An argument parser.
    """
    usage = "%(prog)s [GLOBAL_OPTS...] COMMAND [COMMAND_OPTS...]"  # noqa: WPS323 (%-formatting)
    description = "Command-line tool and Python library to build two-page book embeddings of nicely planar graphs."
    parser = argparse.ArgumentParser(add_help=False, usage=usage, description=description, prog="bookembed")

    main_help = "Show this help message and exit. Commands also accept the -h/--help option."
    subcommand_help = "Show this help message and exit."

    global_options = parser.add_argument_group(title="Global options")
    global_options.add_argument("-h", "--help", action="help", help=main_help)
    global_options.add_argument(
        "-V",
        "--version",
        action="version",
        version=f"%(prog)s {get_version()}",  # noqa: WPS323 (%-formatting)
        help="Show the current version of the program and exit.",
    )
    global_options.add_argument(
        "-i",
        "--input",
        dest="input_path",
        default="-",
        help="Input file path, or '-' for the standard input. Default: '-'.",
    )
    global_options.add_argument(
        "-o",
        "--output",
        dest="output_path",
        default="-",
        help="Output file path, or '-' for the standard output. Default: '-'.",
    )
    global_options.add_argument(
        "-f",
        "--format",
        dest="output_format",
        default=None,
        choices=FORMATS,
        help="Output format. Default depends on the command: "
        "json for embed and augment, edgelist for generate, svg for render.",
    )
    global_options.add_argument(
        "-s",
        "--seed",
        dest="seed",
        default=None,
        type=int,
        help="Random seed, used by the random generator only.",
    )
    global_options.add_argument(
        "-L",
        "--log-level",
        dest="log_level",
        default=None,
        help="Log level to use",
        choices=("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"),
        type=str.upper,
    )
    global_options.add_argument(
        "-P",
        "--log-path",
        dest="log_path",
        default=None,
        help="Log path to use. Can be a directory or a file.",
    )

    # ========= SUBPARSERS ========= #
    subparsers = parser.add_subparsers(dest="subcommand", title="Commands", metavar="", prog="bookembed")

    def subparser(command: str, text: str, **kwargs) -> argparse.ArgumentParser:  # noqa: WPS430 (nested function)
        sub = subparsers.add_parser(command, add_help=False, help=text, description=text, **kwargs)
        sub.add_argument("-h", "--help", action="help", help=subcommand_help)
        return sub

    embed_parser = subparser("embed", "Lay out a nicely planar graph on at most two pages.")
    subparser("verify", "Verify a layout report: list crossing edges on a same page.")
    oracle_parser = subparser("oracle", "Compute the exact page number of a small graph.")
    generate_parser = subparser("generate", "Generate a graph as an edge list.")
    subparser("augment", "Augment a 2-connected nicely planar graph into a triangulation.")
    subparser("render", "Render a layout report (or the layout of an edge list) as SVG.")

    # ========= REUSABLE OPTIONS ========= #
    def add_budget_argument(_parser):  # noqa: WPS430
        _parser.add_argument(
            "-b",
            "--budget",
            dest="budget",
            type=int,
            default=None,
            help="Node budget of the Hamiltonian search. Default: from the configuration.",
        )

    # ========= EMBED PARSER ========= #
    embed_parser.add_argument(
        "-H",
        "--homeomorphic",
        dest="homeomorphic",
        action="store_true",
        help="Subdivide every edge once first, so that any planar graph can be laid out.",
    )
    add_budget_argument(embed_parser)

    # ========= ORACLE PARSER ========= #
    oracle_parser.add_argument(
        "-n",
        "--max-n",
        dest="max_n",
        type=int,
        default=None,
        help="Maximum number of vertices accepted. Default: from the configuration (9).",
    )
    oracle_parser.add_argument(
        "-w",
        "--workers",
        dest="workers",
        type=int,
        default=None,
        help="Number of worker processes. Default: from the configuration (1).",
    )

    # ========= GENERATE PARSER ========= #
    generate_parser.add_argument("kind", choices=GENERATORS, help="The kind of graph to generate.")
    generate_parser.add_argument("-d", "--depth", dest="depth", type=int, help="Depth of the X-tree.")
    generate_parser.add_argument("-r", "--rows", dest="rows", type=int, help="Number of rows of the grid.")
    generate_parser.add_argument("-c", "--cols", dest="cols", type=int, help="Number of columns of the grid.")
    generate_parser.add_argument(
        "-e",
        "--per-edge",
        dest="per_edge",
        type=int,
        default=1,
        help="Number of vertices added on each edge of the input graph (subdivide). Default: 1.",
    )
    generate_parser.add_argument(
        "-n",
        "--nodes",
        dest="nodes",
        type=int,
        help="Number of vertices of the random nicely planar block.",
    )

    return parser
