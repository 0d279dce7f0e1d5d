"""Edge colorings of complete bipartite graphs K_{m,n}.

Rows of the color matrix are the vertices of side X, columns the vertices
of side Y.  Colors are 0-based indices in ``range(r)``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Sequence


class ColoringError(ValueError):
    """Raised for malformed or out-of-range coloring data."""


class Side(str, enum.Enum):
    X = "X"
    Y = "Y"

    def other(self) -> "Side":
        return Side.Y if self is Side.X else Side.X


@dataclass(frozen=True)
class BipartiteColoring:
    """An r-coloring of the edges of K_{m,n}, stored as an m x n matrix."""

    m: int
    n: int
    r: int
    colors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _check_positive(m=self.m, n=self.n, r=self.r)
        if len(self.colors) != self.m:
            raise ColoringError(f"expected {self.m} rows, got {len(self.colors)}")
        for i, row in enumerate(self.colors):
            if len(row) != self.n:
                raise ColoringError(
                    f"row {i} has length {len(row)}, expected {self.n}"
                )
            for j, c in enumerate(row):
                if not isinstance(c, int) or isinstance(c, bool):
                    raise ColoringError(f"entry ({i},{j}) is not an integer: {c!r}")
                if not 0 <= c < self.r:
                    raise ColoringError(
                        f"color {c} at ({i},{j}) out of range [0, {self.r})"
                    )

    def __getitem__(self, edge: tuple[int, int]) -> int:
        i, j = edge
        return self.colors[i][j]

    def size(self, side: Side) -> int:
        return self.m if side is Side.X else self.n

    def edges(self):
        """Yield ``(i, j, color)`` in row-major order."""
        for i, row in enumerate(self.colors):
            for j, c in enumerate(row):
                yield i, j, c

    def flat(self) -> tuple[int, ...]:
        return tuple(c for row in self.colors for c in row)

    def with_colors(self, r: int) -> "BipartiteColoring":
        """Same matrix, declared with ``r`` colors."""
        return BipartiteColoring(self.m, self.n, r, self.colors)


@dataclass(frozen=True)
class CompleteColoring:
    """An s-coloring of the edges of the complete graph K_t.

    ``colors[i][j]`` is the color of edge {i, j}; the diagonal holds -1 and
    is never read.
    """

    t: int
    s: int
    colors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _check_positive(t=self.t, s=self.s)
        if len(self.colors) != self.t or any(len(r) != self.t for r in self.colors):
            raise ColoringError(f"complete coloring matrix must be {self.t}x{self.t}")
        for i in range(self.t):
            for j in range(i + 1, self.t):
                c = self.colors[i][j]
                if c != self.colors[j][i]:
                    raise ColoringError(f"asymmetric entry at ({i},{j})")
                if not 0 <= c < self.s:
                    raise ColoringError(
                        f"color {c} at ({i},{j}) out of range [0, {self.s})"
                    )

    def __getitem__(self, edge: tuple[int, int]) -> int:
        i, j = edge
        if i == j:
            raise KeyError("diagonal of a complete coloring has no edge")
        return self.colors[i][j]


def _check_positive(**values: int) -> None:
    for name, v in values.items():
        if not isinstance(v, int) or v < 1:
            raise ColoringError(f"{name} must be a positive integer, got {v!r}")


def new_coloring(m: int, n: int, r: int, matrix: Sequence[Sequence[int]]) -> BipartiteColoring:
    """Validate ``matrix`` and build a coloring of K_{m,n} with ``r`` colors."""
    return BipartiteColoring(m, n, r, tuple(tuple(row) for row in matrix))


def from_matrix(matrix: Sequence[Sequence[int]], r: int | None = None) -> BipartiteColoring:
    """Build a coloring from a rectangular matrix, inferring sizes.

    ``r`` defaults to ``max entry + 1``.
    """
    rows = tuple(tuple(int(c) for c in row) for row in matrix)
    if not rows or not rows[0]:
        raise ColoringError("matrix must be nonempty")
    if r is None:
        r = max(max(row) for row in rows) + 1
    return BipartiteColoring(len(rows), len(rows[0]), r, rows)


def transpose(c: BipartiteColoring) -> BipartiteColoring:
    return BipartiteColoring(c.n, c.m, c.r, tuple(zip(*c.colors)))


def new_complete_coloring(t: int, s: int, matrix: Sequence[Sequence[int]]) -> CompleteColoring:
    rows = tuple(
        tuple(-1 if i == j else int(v) for j, v in enumerate(row))
        for i, row in enumerate(matrix)
    )
    return CompleteColoring(t, s, rows)


# -- serialization ---------------------------------------------------------


def serialize(c: BipartiteColoring) -> str:
    """Canonical text form: header ``m n r`` then one line per X-vertex."""
    lines = [f"{c.m} {c.n} {c.r}"]
    lines.extend(" ".join(str(v) for v in row) for row in c.colors)
    return "\n".join(lines) + "\n"


def to_dict(c: BipartiteColoring) -> dict:
    return {"m": c.m, "n": c.n, "r": c.r, "colors": [list(row) for row in c.colors]}


def to_json(c: BipartiteColoring) -> str:
    return json.dumps(to_dict(c))


def from_dict(data: dict) -> BipartiteColoring:
    try:
        m, n, r, colors = data["m"], data["n"], data["r"], data["colors"]
    except (KeyError, TypeError) as exc:
        raise ColoringError(f"missing field in coloring object: {exc}") from None
    if not isinstance(colors, list) or not all(isinstance(row, list) for row in colors):
        raise ColoringError("'colors' must be a list of lists")
    return BipartiteColoring(m, n, r, tuple(tuple(row) for row in colors))


def _parse_int(token: str, where: str) -> int:
    # int() would accept "+3", " 3", "3_0"; the format is plain decimal
    if not token.isdigit() or not token.isascii():
        raise ColoringError(f"non-integer token {token!r} in {where}")
    return int(token)


def parse(text: str) -> BipartiteColoring:
    """Parse the canonical text format (or its JSON alternative)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ColoringError(f"invalid JSON: {exc}") from None
        return from_dict(data)

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ColoringError("empty input")
    header = lines[0].split(" ")
    if len(header) != 3:
        raise ColoringError(f"malformed header {lines[0]!r}: expected 'm n r'")
    m, n, r = (_parse_int(tok, "header") for tok in header)
    _check_positive(m=m, n=n, r=r)
    body = lines[1:]
    if len(body) != m:
        raise ColoringError(f"expected {m} rows, got {len(body)}")
    rows = []
    for i, line in enumerate(body):
        tokens = line.split(" ")
        if len(tokens) != n:
            raise ColoringError(f"row {i} has {len(tokens)} entries, expected {n}")
        rows.append(tuple(_parse_int(tok, f"row {i}") for tok in tokens))
    return BipartiteColoring(m, n, r, tuple(rows))


def serialize_complete(g: CompleteColoring) -> str:
    lines = [f"{g.t} {g.s}"]
    for i, row in enumerate(g.colors):
        lines.append(" ".join("-" if i == j else str(v) for j, v in enumerate(row)))
    return "\n".join(lines) + "\n"


def parse_complete(text: str) -> CompleteColoring:
    lines = text.rstrip("\n").split("\n")
    header = lines[0].split(" ")
    if len(header) != 2:
        raise ColoringError(f"malformed header {lines[0]!r}: expected 't s'")
    t, s = (_parse_int(tok, "header") for tok in header)
    if len(lines) - 1 != t:
        raise ColoringError(f"expected {t} rows, got {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:]):
        tokens = line.split(" ")
        if len(tokens) != t:
            raise ColoringError(f"row {i} has {len(tokens)} entries, expected {t}")
        if tokens[i] != "-":
            raise ColoringError(f"row {i}: diagonal entry must be '-', got {tokens[i]!r}")
        rows.append([-1 if i == j else _parse_int(tok, f"row {i}") for j, tok in enumerate(tokens)])
    return new_complete_coloring(t, s, rows)
