"""Complex type annotations."""

from pathlib import Path
from typing import Dict, Tuple, Union

Edge = Tuple[int, int]
PageMap = Dict[Edge, int]
SubdivisionMap = Dict[Edge, Tuple[int, ...]]
PathOrStr = Union[Path, str]
Triangle = Tuple[int, int, int]
