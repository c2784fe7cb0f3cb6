"""
bookembed package.

Command-line tool and library to build two-page book embeddings of nicely planar graphs.
"""

import sys

from loguru import logger

from bookembed.exceptions import BookEmbedException
from bookembed.graph import CyclicOrder, FaceSet, Graph, RotationSystem, build_graph, validate_embedding
from bookembed.layout import BookLayout, assign_pages, conflict_graph, verify_layout
from bookembed.oracle import pagenumber_oracle
from bookembed.pipeline import Embedder, HomeomorphicLayout, homeomorphic_two_page, two_page_embed

logger.disable("bookembed")


def enable_logger(sink=sys.stderr, level="WARNING"):
    """
    Enable the logging of messages.

    Configure the `logger` variable imported from `loguru`.

    Arguments:
        sink (file): An opened file pointer, or stream handler. Default to standard error.
        level (str): The log level to use. Possible values are TRACE, DEBUG, INFO, WARNING, ERROR, CRITICAL.
            Default to WARNING.
    """
    logger.remove()
    logger.configure(handlers=[{"sink": sink, "level": level}])
    logger.enable("bookembed")


__all__ = [
    "BookEmbedException",
    "BookLayout",
    "CyclicOrder",
    "Embedder",
    "FaceSet",
    "Graph",
    "HomeomorphicLayout",
    "RotationSystem",
    "assign_pages",
    "build_graph",
    "conflict_graph",
    "enable_logger",
    "homeomorphic_two_page",
    "pagenumber_oracle",
    "two_page_embed",
    "validate_embedding",
    "verify_layout",
]
