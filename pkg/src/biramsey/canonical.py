"""Canonical forms of bipartite colorings up to isomorphism.

The acting group permutes X, permutes Y, permutes colors, and swaps the two
sides when m == n.  The canonical form is the lexicographically smallest
row-major matrix in the orbit.

For a fixed order of the rows and a fixed color relabeling, the best column
order is obtained by sorting columns as top-to-bottom tuples.  So the search
branches only over row orders and color permutations, one row at a time,
keeping the partial states whose sorted prefix is minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .coloring import BipartiteColoring

MAX_CELLS = 64
MAX_COLORS = 8


class CanonicalFormTooLarge(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CanonicalForm:
    m: int
    n: int
    r: int
    cells: tuple[int, ...]

    def coloring(self) -> BipartiteColoring:
        rows = tuple(self.cells[i * self.n:(i + 1) * self.n] for i in range(self.m))
        return BipartiteColoring(self.m, self.n, self.r, rows)

    def __str__(self) -> str:
        rows = (" ".join(map(str, self.cells[i * self.n:(i + 1) * self.n])) for i in range(self.m))
        return f"{self.m} {self.n} {self.r}\n" + "\n".join(rows) + "\n"


def _min_over_rows(rows: tuple[tuple[int, ...], ...], r: int) -> tuple[int, ...]:
    m, n = len(rows), len(rows[0])
    # identical rows are interchangeable: branch on distinct contents only
    contents = sorted(set(rows))
    counts = [rows.count(row) for row in contents]

    # state: (color relabeling, chosen content ids, remaining counts)
    states = [(p, (), tuple(counts)) for p in permutations(range(r))]
    best_prefix: tuple[int, ...] = ()
    for depth in range(m):
        level_best = None
        survivors = []
        for p, chosen, left in states:
            for k, cnt in enumerate(left):
                if not cnt:
                    continue
                order = chosen + (k,)
                relabeled = [tuple(p[contents[q][j]] for q in order) for j in range(n)]
                relabeled.sort()
                # row-major prefix of the first depth+1 rows
                prefix = tuple(col[d] for d in range(depth + 1) for col in relabeled)
                if level_best is not None and prefix > level_best:
                    continue
                if level_best is None or prefix < level_best:
                    level_best = prefix
                    survivors = []
                nxt = left[:k] + (cnt - 1,) + left[k + 1:]
                survivors.append((p, order, nxt))
        states = list(dict.fromkeys(survivors))
        best_prefix = level_best
    return best_prefix


def canonical_form(c: BipartiteColoring) -> CanonicalForm:
    """Lexicographically minimal matrix over row, column and color permutations
    (plus transposition when the sides have equal size)."""
    if c.m * c.n > MAX_CELLS or c.r > MAX_COLORS:
        raise CanonicalFormTooLarge(
            f"canonical form limited to m*n <= {MAX_CELLS} and r <= {MAX_COLORS}"
        )
    best = _min_over_rows(c.colors, c.r)
    if c.m == c.n:
        best = min(best, _min_over_rows(tuple(zip(*c.colors)), c.r))
    return CanonicalForm(c.m, c.n, c.r, best)


def is_isomorphic(a: BipartiteColoring, b: BipartiteColoring) -> bool:
    if (a.m, a.n, a.r) != (b.m, b.n, b.r):
        return False
    return canonical_form(a) == canonical_form(b)
