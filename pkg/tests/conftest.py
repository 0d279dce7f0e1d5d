import itertools
import random
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import strategies as st

from biramsey.coloring import BipartiteColoring

GOLDEN = Path(__file__).parent / "golden"


def random_coloring(rng: random.Random, m: int, n: int, r: int) -> BipartiteColoring:
    rows = tuple(tuple(rng.randrange(r) for _ in range(n)) for _ in range(m))
    return BipartiteColoring(m, n, r, rows)


def all_colorings(m: int, n: int, r: int):
    for flat in itertools.product(range(r), repeat=m * n):
        yield BipartiteColoring(m, n, r, tuple(flat[i * n:(i + 1) * n] for i in range(m)))


@st.composite
def colorings(draw, max_side=5, max_colors=4, min_colors=1):
    m = draw(st.integers(1, max_side))
    n = draw(st.integers(1, max_side))
    r = draw(st.integers(min_colors, max_colors))
    cells = draw(st.lists(st.integers(0, r - 1), min_size=m * n, max_size=m * n))
    return BipartiteColoring(m, n, r, tuple(tuple(cells[i * n:(i + 1) * n]) for i in range(m)))


# -- independent oracles ------------------------------------------------------


def naive_p4_count(c: BipartiteColoring) -> int:
    """Number of monochromatic paths y1-x1-y2-x2 (each P4 counted twice)."""
    rows = c.colors
    count = 0
    for x1, x2 in itertools.permutations(range(c.m), 2):
        for y1, y2 in itertools.permutations(range(c.n), 2):
            if rows[x1][y1] == rows[x1][y2] == rows[x2][y2]:
                count += 1
    return count


def color_graph(c: BipartiteColoring, color: int) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(("x", i) for i in range(c.m))
    g.add_nodes_from(("y", j) for j in range(c.n))
    g.add_edges_from((("x", i), ("y", j)) for i, j, col in c.edges() if col == color)
    return g


def nx_components(c: BipartiteColoring):
    """Nontrivial monochromatic components as (color, xs, ys, edges) via networkx."""
    out = set()
    for color in range(c.r):
        g = color_graph(c, color)
        for comp in nx.connected_components(g):
            if len(comp) < 2:
                continue
            xs = tuple(sorted(v for s, v in comp if s == "x"))
            ys = tuple(sorted(v for s, v in comp if s == "y"))
            out.add((color, xs, ys, g.subgraph(comp).number_of_edges()))
    return out


def nx_max_connected_matching(c: BipartiteColoring) -> int:
    best = 0
    for color in range(c.r):
        g = color_graph(c, color)
        for comp in nx.connected_components(g):
            if len(comp) < 2:
                continue
            sub = g.subgraph(comp)
            top = {v for v in comp if v[0] == "x"}
            best = max(best, len(nx.bipartite.hopcroft_karp_matching(sub, top_nodes=top)) // 2)
    return best


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)
