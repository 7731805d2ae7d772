"""Important vertex separators and multiway cut above the isolating-cut bound.

Vertex sets are passed and returned as sorted lists of integer ids.
"""

from ._core import (
    Error,
    Graph,
    ParseError,
    binomial_bound,
    compare,
    enumerate_important,
    is_important,
    is_minimal,
    is_separator,
    lower_bound_m,
    make_undeletable,
    min_separator,
    neighborhood,
    normalize,
    parse_graph_file,
    project,
    read_graph_file,
    smallest_important_separator,
    solve_above_guarantee,
    solve_budget,
)

__all__ = [
    "Error",
    "Graph",
    "ParseError",
    "binomial_bound",
    "compare",
    "enumerate_important",
    "is_important",
    "is_minimal",
    "is_separator",
    "lower_bound_m",
    "make_undeletable",
    "min_separator",
    "neighborhood",
    "normalize",
    "parse_graph_file",
    "project",
    "read_graph_file",
    "smallest_important_separator",
    "solve_above_guarantee",
    "solve_budget",
]
