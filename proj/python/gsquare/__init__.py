"""List coloring of squares of sparse graphs.

Rationals come back as fractions.Fraction; graphs are 0-based and simple.
"""

from ._gsquare import *  # noqa: F401,F403
from ._gsquare import Error, GuardError, ParseError, Graph, parse_graph

__all__ = [name for name in dir() if not name.startswith("_")]


def read_graph(path):
    """Graph and header comment lines of an edge-list file."""
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read())
