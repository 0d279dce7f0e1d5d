"""Exhaustive search for P4-free colorings of K_{m,n}.

Edges are colored in row-major order.  A partial coloring stays feasible as
long as every color class is a star forest: an edge (x, y) of color c may be
added when not both endpoints already have c-edges, and the endpoint that
does have c-edges is a star center (all its c-neighbours are leaves).  Per
color the kernel keeps the neighbourhood of each vertex as a bitmask and a
bitmask of the vertices of degree >= 2, so each test is a few integer ops.

Symmetry breaking, all as lex-leader constraints on the row-major order:

* ``colors`` -- colors are introduced in increasing order of first use;
* ``full``   -- additionally rows, and columns read top to bottom, are
  lexicographically nondecreasing (double-lex).

Every orbit of colorings under row, column and color permutations has its
lex-least member satisfying all of these at once, so pruning never removes
an isomorphism class.
"""

from __future__ import annotations

import enum
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .analysis import find_p4
from .canonical import CanonicalForm, canonical_form
from .coloring import BipartiteColoring


class SymmetryMode(str, enum.Enum):
    COLORS = "colors"
    FULL = "full"


class Status(str, enum.Enum):
    FOUND = "FOUND"
    EXHAUSTED = "EXHAUSTED"
    UNKNOWN = "UNKNOWN"  # node budget ran out


PRUNING_RULES = {
    SymmetryMode.COLORS: (
        "star-forest: every color class stays P4-free after each assignment",
        "color first-use: colors appear in increasing index order along row-major assignment",
    ),
    SymmetryMode.FULL: (
        "star-forest: every color class stays P4-free after each assignment",
        "color first-use: colors appear in increasing index order along row-major assignment",
        "row lex: each row is lexicographically >= the previous row",
        "column lex: each column (top to bottom) is lexicographically >= the previous column",
    ),
}


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


@dataclass(frozen=True)
class SearchOutcome:
    m: int
    n: int
    r: int
    status: Status
    witness: BipartiteColoring | None
    nodes_explored: int
    wall_time: float
    symmetry_mode: SymmetryMode
    budget: int | None = None
    workers: int = 1

    @property
    def pruning_rules(self) -> tuple[str, ...]:
        return PRUNING_RULES[self.symmetry_mode]

    def report(self) -> dict:
        from .coloring import serialize

        return {
            "m": self.m,
            "n": self.n,
            "r": self.r,
            "status": self.status.value,
            "witness": serialize(self.witness) if self.witness else None,
            "nodes_explored": self.nodes_explored,
            "wall_time": round(self.wall_time, 6),
            "symmetry_mode": self.symmetry_mode.value,
            "budget": self.budget,
            "workers": self.workers,
            "pruning_rules": list(self.pruning_rules) if self.status is Status.EXHAUSTED else [],
        }


class _BudgetHit(Exception):
    pass


# -- kernel ------------------------------------------------------------------


def _run(m, n, r, full, prefix=(), mode="first", budget=None, split_depth=None):
    """Depth-first search below ``prefix`` (a legal row-major partial assignment).

    mode: "first" stops at the first complete coloring, "all" collects every
    complete coloring, "split" collects the partial assignments of length
    ``split_depth`` instead of descending further.
    Returns ``(nodes, results)``; nodes counts calls below the prefix.
    """
    N = m * n
    a = [-1] * N
    rowm = [[0] * m for _ in range(r)]
    colm = [[0] * n for _ in range(r)]
    xd2 = [0] * r
    yd2 = [0] * r
    results = []
    nodes = 0
    limit = math.inf if budget is None else budget
    stop_at = split_depth if mode == "split" else N

    def place(k, c):
        """Assign color c to cell k if legal; return undo info or None."""
        i, j = divmod(k, n)
        A = rowm[c][i]
        B = colm[c][j]
        if A:
            if B or A & yd2[c]:
                return None
        elif B and B & xd2[c]:
            return None
        undo = (c, i, j, A, B, xd2[c], yd2[c])
        if A and not A & (A - 1):
            xd2[c] |= 1 << i
        if B and not B & (B - 1):
            yd2[c] |= 1 << j
        rowm[c][i] = A | (1 << j)
        colm[c][j] = B | (1 << i)
        a[k] = c
        return undo

    def unplace(k, undo):
        c, i, j, A, B, ox, oy = undo
        rowm[c][i] = A
        colm[c][j] = B
        xd2[c] = ox
        yd2[c] = oy
        a[k] = -1

    # replay the prefix, recomputing the symmetry bookkeeping
    used = 0
    roweq = False
    coleq = (1 << n) - 2  # bit j: column j equals column j-1 on rows so far
    for k, c in enumerate(prefix):
        i, j = divmod(k, n)
        if j == 0:
            roweq = i > 0
        if place(k, c) is None:
            raise ValueError("prefix is not a legal partial assignment")
        if full:
            if i > 0:
                roweq = roweq and c == a[k - n]
            if j > 0 and (coleq >> j) & 1 and c != a[k - 1]:
                coleq &= ~(1 << j)
        used = max(used, c + 1)

    def rec(k, used, roweq, coleq):
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise _BudgetHit
        if k == stop_at:
            results.append(tuple(a[:k]))
            return mode == "first"
        i, j = divmod(k, n)
        if j == 0:
            roweq = i > 0
        lo = 0
        if full:
            if roweq:
                lo = a[k - n]
            if j > 0 and (coleq >> j) & 1 and a[k - 1] > lo:
                lo = a[k - 1]
        hi = used + 1 if used < r else r
        for c in range(lo, hi):
            rm = rowm[c]
            cm = colm[c]
            A = rm[i]
            B = cm[j]
            if A:
                if B or A & yd2[c]:
                    continue
            elif B and B & xd2[c]:
                continue
            ox = xd2[c]
            oy = yd2[c]
            if A and not A & (A - 1):
                xd2[c] = ox | (1 << i)
            if B and not B & (B - 1):
                yd2[c] = oy | (1 << j)
            rm[i] = A | (1 << j)
            cm[j] = B | (1 << i)
            a[k] = c
            if full:
                nre = roweq and i > 0 and c == a[k - n]
                nce = coleq & ~(1 << j) if j > 0 and (coleq >> j) & 1 and c != a[k - 1] else coleq
            else:
                nre, nce = False, coleq
            hit = rec(k + 1, used + 1 if c == used else used, nre, nce)
            rm[i] = A
            cm[j] = B
            xd2[c] = ox
            yd2[c] = oy
            a[k] = -1
            if hit:
                return True
        return False

    if sys.getrecursionlimit() < N + 100:
        sys.setrecursionlimit(N + 100)
    k0 = len(prefix)
    # the prefix root is not counted, so split counts add up to a single run
    nodes = -1 if k0 else 0
    rec(k0, used, roweq, coleq)
    return nodes, results


def _to_coloring(m, n, r, flat) -> BipartiteColoring:
    return BipartiteColoring(m, n, r, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(m)))


def _split_worker(args):
    m, n, r, full, prefix, mode, budget = args
    try:
        nodes, results = _run(m, n, r, full, prefix, mode, budget)
        return nodes, results, False
    except _BudgetHit:
        return budget, [], True


def _search(m, n, r, symmetry, mode, budget, workers):
    """Run the kernel, optionally splitting after the first row across workers.

    Returns ``(nodes, results, budget_hit)``.
    """
    full = SymmetryMode(symmetry) is SymmetryMode.FULL
    if workers <= 1 or m == 1:
        try:
            nodes, results = _run(m, n, r, full, (), mode, budget)
            return nodes, results, False
        except _BudgetHit:
            return budget + 1, [], True
    try:
        nodes, prefixes = _run(m, n, r, full, (), "split", budget, split_depth=n)
    except _BudgetHit:
        return budget + 1, [], True
    # the prefix leaves were counted in the split pass and are roots below
    jobs = [(m, n, r, full, p, mode, budget) for p in prefixes]
    results = []
    hit = False
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for sub_nodes, sub_results, sub_hit in pool.map(_split_worker, jobs):
            nodes += sub_nodes
            hit = hit or sub_hit
            results.extend(sub_results)
    if budget is not None and nodes > budget:
        hit = True
    if mode == "first":
        results = results[:1]
    return nodes, results, hit


def exists_p4free(
    m: int,
    n: int,
    r: int,
    budget: int | None = None,
    symmetry: SymmetryMode | str = SymmetryMode.FULL,
    workers: int = 1,
) -> SearchOutcome:
    """Search for a P4-free r-coloring of K_{m,n}.

    ``budget`` caps the number of search nodes; running out gives status
    UNKNOWN, never EXHAUSTED.
    """
    for name, v in (("m", m), ("n", n), ("r", r)):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")
    symmetry = SymmetryMode(symmetry)
    start = time.perf_counter()
    nodes, results, hit = _search(m, n, r, symmetry, "first", budget, workers)
    elapsed = time.perf_counter() - start
    if results:
        status, witness = Status.FOUND, _to_coloring(m, n, r, results[0])
    elif hit:
        status, witness = Status.UNKNOWN, None
    else:
        status, witness = Status.EXHAUSTED, None
    return SearchOutcome(m, n, r, status, witness, nodes, elapsed, symmetry, budget, workers)


def enumerate_p4free(
    m: int,
    n: int,
    r: int,
    budget: int | None = None,
    symmetry: SymmetryMode | str = SymmetryMode.FULL,
    workers: int = 1,
) -> tuple[list[BipartiteColoring], int]:
    """All complete P4-free colorings surviving the symmetry pruning.

    Returns ``(colorings, nodes)``.  Raises BudgetExceeded.
    """
    nodes, results, hit = _search(m, n, r, SymmetryMode(symmetry), "all", budget, workers)
    if hit:
        raise BudgetExceeded(f"node budget {budget} exhausted enumerating ({m},{n},{r})", nodes)
    return [_to_coloring(m, n, r, flat) for flat in results], nodes


def p4free_iso_classes(
    m: int,
    n: int,
    r: int,
    budget: int | None = None,
    symmetry: SymmetryMode | str = SymmetryMode.FULL,
    workers: int = 1,
) -> list[CanonicalForm]:
    """Canonical forms of all P4-free r-colorings of K_{m,n}, sorted."""
    colorings, _ = enumerate_p4free(m, n, r, budget, symmetry, workers)
    return sorted({canonical_form(c) for c in colorings})


def count_p4free_iso_classes(
    m: int,
    n: int,
    r: int,
    budget: int | None = None,
    symmetry: SymmetryMode | str = SymmetryMode.FULL,
    workers: int = 1,
) -> int:
    return len(p4free_iso_classes(m, n, r, budget, symmetry, workers))


# -- Ramsey numbers and star arboricity ------------------------------------


@dataclass(frozen=True)
class RamseyResult:
    """f(r): witness at f(r) - 1 and exhaustion at f(r).

    ``value`` is None when the exhaustion search ran out of budget; then
    ``lower_bound`` is the best proven bound f(r) >= lower_bound.
    """

    r: int
    value: int | None
    lower_bound: int
    witness: BipartiteColoring | None
    witness_source: str
    exhaustion: SearchOutcome | None
    searches: tuple[SearchOutcome, ...] = field(default=(), repr=False)


def bipartite_ramsey_f(
    r: int,
    budget: int | None = None,
    symmetry: SymmetryMode | str = SymmetryMode.FULL,
    workers: int = 1,
    seed_lower_bound: bool | None = None,
) -> RamseyResult:
    """Smallest l such that every r-coloring of K_{l,l} has a monochromatic P4.

    Searches l = 1, 2, ... until a search is exhausted.  With
    ``seed_lower_bound`` (default for r >= 5) the explicit extremal
    construction, checked for P4-freeness, replaces the searches below
    its size.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")
    if seed_lower_bound is None:
        seed_lower_bound = r >= 5
    witness = None
    source = "none"
    size = 1
    if seed_lower_bound:
        from .constructions import extremal_p4free

        witness = extremal_p4free(r)
        if find_p4(witness) is not None:
            raise AssertionError("extremal construction contains a monochromatic P4")
        source = "construction"
        size = witness.m + 1
    searches = []
    while True:
        out = exists_p4free(size, size, r, budget, symmetry, workers)
        searches.append(out)
        if out.status is Status.FOUND:
            witness, source = out.witness, "search"
            size += 1
            continue
        value = size if out.status is Status.EXHAUSTED else None
        return RamseyResult(r, value, size, witness, source, out, tuple(searches))


@dataclass(frozen=True)
class ArboricityResult:
    m: int
    n: int
    value: int
    witness: BipartiteColoring
    exhaustion: SearchOutcome | None  # at value - 1; None when value == 1


def star_arboricity(
    m: int,
    n: int,
    budget: int | None = None,
    symmetry: SymmetryMode | str = SymmetryMode.FULL,
    workers: int = 1,
) -> ArboricityResult:
    """Minimum number of star forests partitioning the edges of K_{m,n}."""
    previous = None
    r = 1
    while True:
        out = exists_p4free(m, n, r, budget, symmetry, workers)
        if out.status is Status.FOUND:
            return ArboricityResult(m, n, r, out.witness, previous)
        if out.status is Status.UNKNOWN:
            raise BudgetExceeded(f"node budget {budget} exhausted at r = {r}", out.nodes_explored)
        previous = out
        r += 1


# -- brute-force oracle ----------------------------------------------------


def _all_matrices(m, n, r, start, stop):
    idx = np.arange(start, stop, dtype=np.int64)
    cells = np.empty((len(idx), m * n), dtype=np.int8)
    for k in range(m * n - 1, -1, -1):
        cells[:, k] = idx % r
        idx //= r
    return cells.reshape(-1, m, n)


def _p4free_mask(mats: np.ndarray, r: int) -> np.ndarray:
    ok = np.ones(len(mats), dtype=bool)
    for c in range(r):
        hit = mats == c
        deg_x = hit.sum(axis=2) >= 2
        deg_y = hit.sum(axis=1) >= 2
        ok &= ~(hit & deg_x[:, :, None] & deg_y[:, None, :]).any(axis=(1, 2))
    return ok


def brute_force_p4free(m: int, n: int, r: int, chunk: int = 1 << 18) -> np.ndarray:
    """Every P4-free r-coloring of K_{m,n}, by plain enumeration of all r^(mn) matrices.

    Returns an int8 array of shape (count, m, n).
    """
    total = r ** (m * n)
    found = []
    for start in range(0, total, chunk):
        mats = _all_matrices(m, n, r, start, min(total, start + chunk))
        found.append(mats[_p4free_mask(mats, r)])
    return np.concatenate(found) if found else np.empty((0, m, n), dtype=np.int8)


def _relabel_first_use(mats: np.ndarray, r: int) -> np.ndarray:
    flat = mats.reshape(len(mats), -1)
    rows = np.arange(len(flat))
    mapping = np.full((len(flat), r), -1, dtype=np.int16)
    nxt = np.zeros(len(flat), dtype=np.int16)
    for k in range(flat.shape[1]):
        col = flat[:, k]
        fresh = mapping[rows, col] < 0
        mapping[rows[fresh], col[fresh]] = nxt[fresh]
        nxt += fresh
    return mapping[rows[:, None], flat].astype(np.int8).reshape(mats.shape)


def _sort_lines(mats: np.ndarray, r: int, axis: int) -> np.ndarray:
    """Sort columns (axis=2) or rows (axis=1) of each matrix as base-r numbers."""
    if axis == 1:
        return np.swapaxes(_sort_lines(np.swapaxes(mats, 1, 2), r, 2), 1, 2)
    m = mats.shape[1]
    weights = (r ** np.arange(m - 1, -1, -1, dtype=np.int64))[None, :, None]
    keys = (mats.astype(np.int64) * weights).sum(axis=1)
    order = np.argsort(keys, axis=1, kind="stable")
    return np.take_along_axis(mats, order[:, None, :], axis=2)


def brute_force_iso_count(m: int, n: int, r: int) -> tuple[bool, int]:
    """(exists, number of isomorphism classes) of P4-free r-colorings, by brute force.

    Orbit-preserving reductions (color relabeling, row and column sorting)
    shrink the enumerated set before canonical deduplication.
    """
    mats = brute_force_p4free(m, n, r)
    if not len(mats):
        return False, 0
    for _ in range(2):
        mats = _relabel_first_use(mats, r)
        mats = _sort_lines(mats, r, 2)
        mats = _sort_lines(mats, r, 1)
    mats = np.unique(mats.reshape(len(mats), -1), axis=0).reshape(-1, m, n)
    forms = {canonical_form(_to_coloring(m, n, r, [int(v) for v in flat.ravel()])) for flat in mats}
    return True, len(forms)
