"""The context handed to every CLI command."""

from typing import Any, Dict, Optional

from bookembed.graph import Graph
from bookembed.serialization import parse_edge_list
from bookembed.utils import get_setting, read_input, write_output


class Context:
    """Input, output and configuration of a command invocation."""

    def __init__(
        self,
        config: Dict[str, Any],
        input_path: str = "-",
        output_path: str = "-",
        output_format: Optional[str] = None,
        seed: Optional[int] = None,
    ) -> None:
        """
        Initialize the object.

        Arguments:
            config: The configuration, as returned by [`load_configuration`][bookembed.utils.load_configuration].
            input_path: The input file path, or `-` for the standard input.
            output_path: The output file path, or `-` for the standard output.
            output_format: The requested output format, if any.
            seed: The random seed, if any.
        """
        self.config = config
        self.input_path = input_path
        self.output_path = output_path
        self.output_format = output_format
        self.seed = seed

    def __repr__(self) -> str:
        return f"Context(input={self.input_path!r}, output={self.output_path!r}, format={self.output_format!r})"

    def setting(self, section: str, key: str) -> Any:
        """
        Return a configuration setting.

        Arguments:
            section: The TOML table name.
            key: The key in the table.

        Returns:
            The user value if any, else the default value.
        """
        return get_setting(self.config, section, key)

    def format(self, default: str) -> str:
        """
        Return the requested output format, or a default one.

        Arguments:
            default: The default format of the command.

        Returns:
            The output format.
        """
        return self.output_format or default

    def render_settings(self) -> Dict[str, Any]:
        """
        Return the drawing settings of the configuration.

        Returns:
            Keyword arguments for [`emit_svg`][bookembed.svg.emit_svg].
        """
        return {
            key: self.setting("render", key) for key in ("spacing", "margin", "vertex_radius", "font_size", "page_colors")
        }

    def read(self) -> str:
        """
        Read the whole input.

        Returns:
            The input text.
        """
        return read_input(self.input_path)

    def read_graph(self) -> Graph:
        """
        Read a graph in the edge-list format from the input.

        Returns:
            The graph.
        """
        return parse_edge_list(self.read())

    def write(self, text: str) -> None:
        """
        Write the whole output.

        Arguments:
            text: The output text.
        """
        write_output(text, self.output_path)
