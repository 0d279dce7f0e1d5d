"""Monochromatic structure of a bipartite coloring.

Components, P4 detection, per-color star-forest statistics, connected
matchings and monochromatic bicliques.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .coloring import BipartiteColoring, Side


@dataclass(frozen=True, order=True)
class ComponentSummary:
    color: int
    x_vertices: tuple[int, ...]
    y_vertices: tuple[int, ...]
    edge_count: int

    @property
    def size(self) -> int:
        return len(self.x_vertices) + len(self.y_vertices)

    def is_complete(self) -> bool:
        """True when the component is a complete biclique between its sides."""
        return self.edge_count == len(self.x_vertices) * len(self.y_vertices)


@dataclass(frozen=True)
class ColorClassStats:
    color: int
    component_count: int  # isolated vertices count as trivial stars
    edge_count: int
    is_star_forest: bool


@dataclass(frozen=True)
class P4Witness:
    """A monochromatic path on four vertices.

    ``path`` lists the vertices in order as ``(side, index)`` pairs.
    """

    color: int
    path: tuple[tuple[Side, int], ...]


@dataclass(frozen=True)
class MatchingWitness:
    color: int
    edges: tuple[tuple[int, int], ...]
    component: ComponentSummary
    component_id: int

    @property
    def size(self) -> int:
        return len(self.edges)


# -- components ------------------------------------------------------------


def component_of(
    c: BipartiteColoring,
    color: int,
    xs: Iterable[int] = (),
    ys: Iterable[int] = (),
    x_scope: Iterable[int] | None = None,
    y_scope: Iterable[int] | None = None,
) -> tuple[frozenset[int], frozenset[int]]:
    """Vertices reachable from the seeds using edges of ``color``.

    The search is confined to the sub-biclique ``x_scope`` x ``y_scope``
    (the whole graph by default).  Seeds must lie inside the scope.
    """
    x_ok = set(range(c.m)) if x_scope is None else set(x_scope)
    y_ok = set(range(c.n)) if y_scope is None else set(y_scope)
    seen_x, seen_y = set(xs), set(ys)
    queue = deque([(Side.X, i) for i in seen_x] + [(Side.Y, j) for j in seen_y])
    rows = c.colors
    while queue:
        side, v = queue.popleft()
        if side is Side.X:
            for j in y_ok:
                if j not in seen_y and rows[v][j] == color:
                    seen_y.add(j)
                    queue.append((Side.Y, j))
        else:
            for i in x_ok:
                if i not in seen_x and rows[i][v] == color:
                    seen_x.add(i)
                    queue.append((Side.X, i))
    return frozenset(seen_x), frozenset(seen_y)


def _summary(c: BipartiteColoring, color: int, xs, ys) -> ComponentSummary:
    xs, ys = tuple(sorted(xs)), tuple(sorted(ys))
    edges = sum(1 for i in xs for j in ys if c.colors[i][j] == color)
    return ComponentSummary(color, xs, ys, edges)


def monochromatic_components(
    c: BipartiteColoring, include_singletons: bool = False
) -> list[ComponentSummary]:
    """All monochromatic components, sorted by color then vertex sets."""
    out = []
    for color in range(c.r):
        seen_x: set[int] = set()
        seen_y: set[int] = set()
        for i in range(c.m):
            if i in seen_x:
                continue
            xs, ys = component_of(c, color, xs=[i])
            seen_x |= xs
            seen_y |= ys
            if ys or include_singletons:
                out.append(_summary(c, color, xs, ys))
        if include_singletons:
            for j in range(c.n):
                if j not in seen_y:
                    out.append(ComponentSummary(color, (), (j,), 0))
    out.sort()
    return out


def largest_component(c: BipartiteColoring) -> ComponentSummary:
    """A component of maximum total size; ties go to the earliest in sort order."""
    comps = monochromatic_components(c)
    best = max(comp.size for comp in comps)
    return next(comp for comp in comps if comp.size == best)


# -- P4 and star forests ---------------------------------------------------


def _degrees(c: BipartiteColoring, color: int) -> tuple[list[int], list[int]]:
    dx = [0] * c.m
    dy = [0] * c.n
    for i, j, col in c.edges():
        if col == color:
            dx[i] += 1
            dy[j] += 1
    return dx, dy


def find_p4(c: BipartiteColoring) -> P4Witness | None:
    """Return a monochromatic P4 if one exists.

    A bipartite color class contains a P4 exactly when some edge has both
    endpoints of degree at least two; that edge is the middle of the path.
    """
    rows = c.colors
    for color in range(c.r):
        dx, dy = _degrees(c, color)
        for i, j, col in c.edges():
            if col != color or dx[i] < 2 or dy[j] < 2:
                continue
            j2 = next(b for b in range(c.n) if b != j and rows[i][b] == color)
            i2 = next(a for a in range(c.m) if a != i and rows[a][j] == color)
            path = ((Side.Y, j2), (Side.X, i), (Side.Y, j), (Side.X, i2))
            return P4Witness(color, path)
    return None


def color_class_stats(c: BipartiteColoring) -> list[ColorClassStats]:
    comps = monochromatic_components(c, include_singletons=True)
    stats = []
    for color in range(c.r):
        mine = [comp for comp in comps if comp.color == color]
        dx, dy = _degrees(c, color)
        star_forest = not any(
            col == color and dx[i] >= 2 and dy[j] >= 2 for i, j, col in c.edges()
        )
        stats.append(
            ColorClassStats(
                color=color,
                component_count=len(mine),
                edge_count=sum(comp.edge_count for comp in mine),
                is_star_forest=star_forest,
            )
        )
    return stats


# -- connected matchings ---------------------------------------------------


def _max_matching(adj: dict[int, list[int]]) -> dict[int, int]:
    """Maximum bipartite matching by augmenting paths; returns y -> x."""
    match_y: dict[int, int] = {}

    def augment(x: int, visited: set[int]) -> bool:
        for y in adj[x]:
            if y in visited:
                continue
            visited.add(y)
            if y not in match_y or augment(match_y[y], visited):
                match_y[y] = x
                return True
        return False

    for x in sorted(adj):
        augment(x, set())
    return match_y


def max_connected_matching(c: BipartiteColoring) -> MatchingWitness:
    """Largest matching contained in a single monochromatic component."""
    best = None
    for cid, comp in enumerate(monochromatic_components(c)):
        if min(len(comp.x_vertices), len(comp.y_vertices)) <= (best.size if best else 0):
            continue
        adj = {
            i: [j for j in comp.y_vertices if c.colors[i][j] == comp.color]
            for i in comp.x_vertices
        }
        match_y = _max_matching(adj)
        if best is None or len(match_y) > best.size:
            edges = tuple(sorted((x, y) for y, x in match_y.items()))
            best = MatchingWitness(comp.color, edges, comp, cid)
    return best


# -- bi-equivalence --------------------------------------------------------


def is_biequivalence(c: BipartiteColoring) -> bool:
    """True when every nontrivial monochromatic component is a complete biclique."""
    return all(comp.is_complete() for comp in monochromatic_components(c))


def largest_mono_biclique(c: BipartiteColoring) -> ComponentSummary | None:
    """Best complete-biclique component by (min side, total size, color).

    Returns None when no component is a complete biclique.
    """
    best = None
    best_key = None
    for comp in monochromatic_components(c):
        if not comp.is_complete():
            continue
        key = (
            -min(len(comp.x_vertices), len(comp.y_vertices)),
            -comp.size,
            comp.color,
        )
        if best_key is None or key < best_key:
            best, best_key = comp, key
    return best


# -- path-length bound -----------------------------------------------------

BOUND_TOLERANCE = 1e-12


@dataclass(frozen=True)
class MatchingBoundReport:
    r: int
    n: int
    fraction: float  # connected matching size / n guaranteed by the path bound
    path_vertices: float
    matching_size: float
    lower_fraction: float  # 1/(2r-1)
    upper_fraction: float | None  # 1/(2r-4), defined for r >= 4
    lower_holds: bool
    upper_holds: bool | None


def grs_matching_bound(r: int, n: int = 1) -> MatchingBoundReport:
    """Evaluate the majority-color path bound and compare it with 1/(2r-1), 1/(2r-4).

    A balanced bipartite graph on 2n vertices with n^2/r edges has a path on
    (1 - sqrt(1 - 2/r)) n vertices, so a connected matching of half that.
    Comparisons are strict with margin ``BOUND_TOLERANCE``.
    """
    if not isinstance(r, int) or r < 3:
        raise ValueError(f"r must be an integer >= 3, got {r!r}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n!r}")
    root = math.sqrt(1.0 - 2.0 / r)
    # 1 - sqrt(1 - x) = x / (1 + sqrt(1 - x)) avoids cancellation for large r
    path_fraction = (2.0 / r) / (1.0 + root)
    fraction = path_fraction / 2.0
    lower = 1.0 / (2 * r - 1)
    upper = 1.0 / (2 * r - 4) if r >= 4 else None
    return MatchingBoundReport(
        r=r,
        n=n,
        fraction=fraction,
        path_vertices=path_fraction * n,
        matching_size=fraction * n,
        lower_fraction=lower,
        upper_fraction=upper,
        lower_holds=fraction - lower > BOUND_TOLERANCE,
        upper_holds=None if upper is None else upper - fraction > BOUND_TOLERANCE,
    )
