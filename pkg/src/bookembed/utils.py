"""
Utils module.

This module contains simple utility functions: version lookup, configuration loading,
and input/output helpers used by the command line.
"""

import sys
import textwrap
from pathlib import Path
from typing import Any, Dict

import toml
from appdirs import user_config_dir
from loguru import logger

from bookembed.types import PathOrStr

try:
    from importlib.metadata import PackageNotFoundError, version
except ImportError:  # pragma: no cover
    from importlib_metadata import PackageNotFoundError, version  # type: ignore  # noqa: WPS433,WPS440

DEFAULT_CONFIG = """
    [search]
    hamiltonian_budget = 5000000

    [oracle]
    max_n = 9
    workers = 1

    [layout]
    outerplanar_shortcut = true

    [render]
    spacing = 40
    margin = 30
    vertex_radius = 4
    font_size = 11
    page_colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]
"""


def get_version() -> str:
    """
    Return the current `bookembed` version.

    Returns:
        The current `bookembed` version.
    """
    try:
        return version("bookembed")
    except PackageNotFoundError:
        return "0.0.0"


def load_configuration() -> Dict[str, Any]:
    """
    Return dict from TOML formatted string or file.

    Returns:
        The dict configuration.
    """
    config_dict = {}
    config_dict["DEFAULT"] = toml.loads(DEFAULT_CONFIG)

    # Check for configuration file
    config_file_path = Path(user_config_dir("bookembed")) / "config.toml"

    if config_file_path.exists():
        try:
            config_dict["USER"] = toml.load(config_file_path)
        except Exception as error:  # noqa: W0703 (too broad exception)
            logger.error(f"Failed to load configuration file: {error}")
    else:
        # Write initial configuration file if it does not exist
        try:
            config_file_path.parent.mkdir(parents=True, exist_ok=True)
            with config_file_path.open("w") as fd:
                fd.write(textwrap.dedent(DEFAULT_CONFIG).lstrip("\n"))
        except OSError as error:
            logger.debug(f"Could not write initial configuration file: {error}")
    return config_dict


def get_setting(config: Dict[str, Any], section: str, key: str) -> Any:
    """
    Return a setting, preferring the user value over the default one.

    Arguments:
        config: A configuration as returned by [`load_configuration`][bookembed.utils.load_configuration].
        section: The TOML table name.
        key: The key in the table.

    Returns:
        The setting value.
    """
    user_section = config.get("USER", {}).get(section, {})
    if key in user_section:
        return user_section[key]
    return config["DEFAULT"][section][key]


def read_input(path: PathOrStr) -> str:
    """
    Read a whole text input.

    Arguments:
        path: The file path, or `-` for the standard input.

    Returns:
        The text.
    """
    if str(path) == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def write_output(text: str, path: PathOrStr) -> None:
    """
    Write a whole text output.

    Arguments:
        text: The text to write. A final newline is added if missing.
        path: The file path, or `-` for the standard output.
    """
    if not text.endswith("\n"):
        text += "\n"
    if str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
