"""Tests suite for `bookembed`."""

from pathlib import Path

TESTS_DIR = Path(__file__).parent
TESTS_DATA_DIR = TESTS_DIR / "data"
GRAPHS_DIR = TESTS_DATA_DIR / "graphs"

K4_FILE = GRAPHS_DIR / "k4.txt"
OCTAHEDRON_FILE = GRAPHS_DIR / "octahedron.txt"
K5_FILE = GRAPHS_DIR / "k5.txt"
BOWTIE_FILE = GRAPHS_DIR / "bowtie.txt"
EARED_TRIANGLE_FILE = GRAPHS_DIR / "eared-triangle.txt"
CUBE_FILE = GRAPHS_DIR / "cube.txt"
