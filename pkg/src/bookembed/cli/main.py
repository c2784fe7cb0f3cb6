"""The main CLI function."""

import sys
from pathlib import Path
from typing import List, Optional

from loguru import logger

from bookembed import enable_logger
from bookembed.cli.commands.augment import augment
from bookembed.cli.commands.embed import embed
from bookembed.cli.commands.generate import generate
from bookembed.cli.commands.oracle import oracle
from bookembed.cli.commands.render import render
from bookembed.cli.commands.verify import verify
from bookembed.cli.context import Context
from bookembed.cli.parser import check_args, get_parser
from bookembed.exceptions import EXIT_INPUT_ERROR, BookEmbedException
from bookembed.utils import load_configuration

commands = {
    "embed": embed,
    "verify": verify,
    "oracle": oracle,
    "generate": generate,
    "augment": augment,
    "render": render,
}


def main(args: Optional[List[str]] = None) -> int:
    """
    Run the main program.

    This function is executed when you type `bookembed` or `python -m bookembed`.

    Arguments:
        args: Arguments passed from the command line.

    Returns:
        An exit code.
    """
    parser = get_parser()
    opts = parser.parse_args(args=args)
    kwargs = opts.__dict__  # noqa: WPS609 (special attribute)

    log_level = kwargs.pop("log_level")
    log_path = kwargs.pop("log_path")

    if log_path:
        log_path = Path(log_path)
        if log_path.is_dir():
            log_path = log_path / "bookembed-{time}.log"
        enable_logger(sink=log_path, level=log_level or "WARNING")
    elif log_level:
        enable_logger(sink=sys.stderr, level=log_level)

    logger.debug("Checking arguments")
    check_args(parser, opts)

    context = Context(
        load_configuration(),
        input_path=kwargs.pop("input_path"),
        output_path=kwargs.pop("output_path"),
        output_format=kwargs.pop("output_format"),
        seed=kwargs.pop("seed"),
    )
    logger.info(f"Context instantiated: {context!r}")

    subcommand = kwargs.pop("subcommand")
    logger.debug("Running subcommand " + subcommand)
    try:
        return commands[subcommand](context, **kwargs)  # type: ignore
    except BookEmbedException as error:
        print(str(error), file=sys.stderr)
        return error.code
    except OSError as error:  # noqa: WPS440 (variable overlap)
        print(f"[ERROR] {error}", file=sys.stderr)
        return EXIT_INPUT_ERROR
