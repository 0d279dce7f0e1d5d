"""Explicit colorings: the K_{5,5} four-coloring, the star coloring of K_{2r-4}
and its bipartite double, extremal P4-free colorings, and blow-ups."""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import BipartiteColoring, CompleteColoring, ColoringError, new_complete_coloring

# Color classes of the P4-free 4-coloring of K_{5,5}.  "A1B1A2" is the path
# with edges A1B1, B1A2; "B5;A1A3A5" is the star with center B5.
FIGURE1_CLASSES = (
    ("A1B1A2", "A3B3A4", "B2A5B4"),
    ("A1B4A4", "A2B2A3", "B1A5B3"),
    ("A2B5A4", "B1A3B4", "B2A1B3"),
    ("B1A4B2", "B3A2B4", "B5;A1A3A5"),
)


def _vertices(word: str) -> list[tuple[str, int]]:
    return [(word[k], int(word[k + 1]) - 1) for k in range(0, len(word), 2)]


def class_edges(spec: str) -> list[tuple[int, int]]:
    """Edges ``(a, b)`` (0-based A- and B-indices) of a path or star spec."""
    if ";" in spec:
        center, leaves = spec.split(";")
        (side, c), = _vertices(center)
        pairs = [((side, c), leaf) for leaf in _vertices(leaves)]
    else:
        vs = _vertices(spec)
        pairs = list(zip(vs, vs[1:]))
    edges = []
    for (s1, i1), (s2, i2) in pairs:
        if s1 == s2:
            raise ValueError(f"edge inside one side in {spec!r}")
        edges.append((i1, i2) if s1 == "A" else (i2, i1))
    return edges


def figure1_k55() -> BipartiteColoring:
    """The P4-free 4-coloring of K_{5,5}; rows are A1..A5, columns B1..B5."""
    matrix = [[-1] * 5 for _ in range(5)]
    for color, specs in enumerate(FIGURE1_CLASSES):
        for spec in specs:
            for a, b in class_edges(spec):
                if matrix[a][b] != -1:
                    raise ColoringError(f"edge A{a + 1}B{b + 1} colored twice")
                matrix[a][b] = color
    if any(-1 in row for row in matrix):
        raise ColoringError("color classes do not cover K_{5,5}")
    return BipartiteColoring(5, 5, 4, tuple(map(tuple, matrix)))


def complete_star_coloring(r: int) -> CompleteColoring:
    """(r-1)-coloring of K_{2r-4}: r-2 classes of two disjoint (r-3)-edge stars
    plus one perfect matching.

    Vertex X_k (1-based, indices mod 2r-4 with residue 0 meaning X_{2r-4}) is
    stored at position k-1.  Class i-1 (i = 1..r-2) has stars centered at X_i
    with leaves X_{i+1}..X_{i+r-3} and at X_{i+r-2} with leaves
    X_{i+r-1}..X_{i+2r-5}; class r-2 is {X_1 X_{r-1}, ..., X_{r-2} X_{2r-4}}.
    """
    if not isinstance(r, int) or r < 4:
        raise ValueError(f"complete star coloring needs r >= 4, got {r!r}")
    t = 2 * r - 4

    def pos(k: int) -> int:
        return (k - 1) % t

    matrix = [[-1] * t for _ in range(t)]

    def paint(u: int, v: int, color: int) -> None:
        if u == v or matrix[u][v] != -1:
            raise ColoringError(f"edge X{u + 1}X{v + 1} colored twice")
        matrix[u][v] = matrix[v][u] = color

    for i in range(1, r - 1):
        for center, first in ((i, i + 1), (i + r - 2, i + r - 1)):
            for leaf in range(first, first + r - 3):
                paint(pos(center), pos(leaf), i - 1)
    for i in range(1, r - 1):
        paint(pos(i), pos(i + r - 2), r - 2)
    if any(matrix[u][v] == -1 for u in range(t) for v in range(t) if u != v):
        raise ColoringError("star coloring does not cover K_t")
    return new_complete_coloring(t, r - 1, matrix)


def complete_classes_are_star_forests(g: CompleteColoring) -> bool:
    """Every color class of K_t is a star forest: each edge has an endpoint of degree 1."""
    deg = [[0] * g.t for _ in range(g.s)]
    for u in range(g.t):
        for v in range(g.t):
            if u != v:
                deg[g.colors[u][v]][u] += 1
    return all(
        min(deg[g.colors[u][v]][u], deg[g.colors[u][v]][v]) == 1
        for u in range(g.t)
        for v in range(u + 1, g.t)
    )


def bipartite_double(g: CompleteColoring) -> BipartiteColoring:
    """K_{t,t} coloring: A_iB_j gets the color of X_iX_j, A_iB_i the new color s."""
    rows = tuple(
        tuple(g.s if i == j else g.colors[i][j] for j in range(g.t)) for i in range(g.t)
    )
    return BipartiteColoring(g.t, g.t, g.s + 1, rows)


def one_factorization_k33() -> BipartiteColoring:
    """K_{3,3} colored by its three perfect matchings: color (i + j) mod 3."""
    return BipartiteColoring(3, 3, 3, tuple(tuple((i + j) % 3 for j in range(3)) for i in range(3)))


def extremal_p4free(r: int) -> BipartiteColoring:
    """A P4-free r-coloring of K_{l,l} with l = f(r) - 1."""
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")
    if r == 1:
        return BipartiteColoring(1, 1, 1, ((0,),))
    if r == 2:
        return BipartiteColoring(2, 2, 2, ((0, 1), (1, 0)))
    if r == 3:
        return one_factorization_k33()
    if r == 4:
        return figure1_k55()
    return bipartite_double(complete_star_coloring(r))


# -- blow-ups ----------------------------------------------------------------


@dataclass(frozen=True)
class BlowUpSpec:
    base: BipartiteColoring
    x_sizes: tuple[int, ...]
    y_sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.x_sizes) != self.base.m or len(self.y_sizes) != self.base.n:
            raise ValueError("blow-up sizes must match the base coloring's sides")
        if any(not isinstance(s, int) or s < 1 for s in self.x_sizes + self.y_sizes):
            raise ValueError("blow-up sizes must be positive integers")

    @classmethod
    def uniform(cls, base: BipartiteColoring, k: int) -> "BlowUpSpec":
        return cls(base, (k,) * base.m, (k,) * base.n)


@dataclass(frozen=True)
class BlowUp:
    """A blown-up coloring with the base vertex each new vertex came from."""

    coloring: BipartiteColoring
    x_origin: tuple[int, ...]
    y_origin: tuple[int, ...]

    def x_block(self, u: int) -> tuple[int, ...]:
        return tuple(i for i, o in enumerate(self.x_origin) if o == u)

    def y_block(self, v: int) -> tuple[int, ...]:
        return tuple(j for j, o in enumerate(self.y_origin) if o == v)


def blow_up(spec: BlowUpSpec) -> BlowUp:
    """Replace base vertex u by x_sizes[u] copies (likewise on Y); block (u, v)
    takes the base color of uv."""
    x_origin = tuple(u for u, s in enumerate(spec.x_sizes) for _ in range(s))
    y_origin = tuple(v for v, s in enumerate(spec.y_sizes) for _ in range(s))
    base = spec.base.colors
    rows = tuple(tuple(base[u][v] for v in y_origin) for u in x_origin)
    coloring = BipartiteColoring(len(x_origin), len(y_origin), spec.base.r, rows)
    return BlowUp(coloring, x_origin, y_origin)


def near_equal_parts(total: int, parts: int = 3) -> tuple[int, ...]:
    """Split ``total`` into ``parts`` sizes differing by at most one, largest first."""
    q, rem = divmod(total, parts)
    return (q + 1,) * rem + (q,) * (parts - rem)


def biequivalence_sharpness(m: int, n: int) -> BipartiteColoring:
    """Blow-up of the K_{3,3} 1-factorization into near-equal parts.

    A bi-equivalence 3-coloring of K_{m,n} whose largest monochromatic
    biclique is ceil(m/3) x ceil(n/3).
    """
    if m < 3 or n < 3:
        raise ValueError(f"need m, n >= 3, got ({m}, {n})")
    spec = BlowUpSpec(one_factorization_k33(), near_equal_parts(m), near_equal_parts(n))
    return blow_up(spec).coloring
