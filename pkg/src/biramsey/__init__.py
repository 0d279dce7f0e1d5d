"""P4-free colorings of complete bipartite graphs, bipartite Ramsey numbers of
P4, star arboricity, and balanced monochromatic components."""

from .coloring import (
    BipartiteColoring,
    ColoringError,
    CompleteColoring,
    Side,
    from_matrix,
    new_coloring,
    parse,
    serialize,
    transpose,
)

__all__ = [
    "BipartiteColoring",
    "ColoringError",
    "CompleteColoring",
    "Side",
    "from_matrix",
    "new_coloring",
    "parse",
    "serialize",
    "transpose",
]
