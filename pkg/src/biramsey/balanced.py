"""Balanced monochromatic components for colorings with at most three colors.

``find_balanced_component`` returns a monochromatic component meeting X in at
least m/r and Y in at least n/r vertices, built by the r = 1, 2, 3 case
analysis.  Each intermediate set is recorded as a trace step, and
``replay_trace`` re-derives every step from the coloring alone.  Threshold
tests are integer comparisons of the form ``r * |S| >= m``.

Trace step names (coordinates are those of the working coloring, which is
the transpose of the input when a ``transpose`` step is present):

    whole            r = 1, the whole graph
    largest[S]       largest component of scope S (K = whole graph, K1 = [X1, Y - Y1])
    adequate[S]      that component already meets the bar in scope S
    biclique[S]      [X1, S_Y - Y1] or [S_X - X1, Y1], monochromatic in the other color
    component[S]     the component of scope S containing biclique[S]
    K1               the sub-biclique [X1, Y - Y1]
    B1*[covers X1]   B1 contains X1; its full-graph component
    biclique[C1]     [X1 - B1, B1 cap (Y - Y1)], monochromatic in the third color
    C1               component of K1 containing biclique[C1]
    B1*, C1*         full-graph components containing B1 and C1
    biclique[A]      [X - (B1* u C1*), B1 cap (Y - Y1)], in the first color
    result           the returned component, in input coordinates
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import component_of, monochromatic_components
from .coloring import BipartiteColoring, transpose


class UnsupportedColorCount(ValueError):
    """Raised for r >= 4, where balanced components need not exist."""


class ProofStepError(AssertionError):
    """A step of the case analysis found its precondition violated."""


class TraceReplayError(ValueError):
    pass


@dataclass(frozen=True)
class TraceStep:
    name: str
    color: int | None = None
    x: tuple[int, ...] = ()
    y: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return {"step": self.name, "color": self.color, "x": list(self.x), "y": list(self.y)}

    @classmethod
    def from_dict(cls, d: dict) -> "TraceStep":
        return cls(d["step"], d.get("color"), tuple(d.get("x", ())), tuple(d.get("y", ())))

    def __str__(self) -> str:
        if self.color is None and not self.x and not self.y:
            return self.name
        col = "" if self.color is None else f" color {self.color}"
        return f"{self.name}{col}: X={list(self.x)} Y={list(self.y)}"


@dataclass(frozen=True)
class BalancedWitness:
    color: int
    x_set: tuple[int, ...]
    y_set: tuple[int, ...]
    trace: tuple[TraceStep, ...] = field(default=(), compare=False)

    def meets_bound(self, c: BipartiteColoring) -> bool:
        return c.r * len(self.x_set) >= c.m and c.r * len(self.y_set) >= c.n


@dataclass(frozen=True)
class BalancedScore:
    """Best component under the score min(r|x| - m, r|y| - n)."""

    color: int
    x_set: tuple[int, ...]
    y_set: tuple[int, ...]
    score: int

    @property
    def satisfied(self) -> bool:
        return self.score >= 0

    @property
    def min_side(self) -> int:
        return min(len(self.x_set), len(self.y_set))


def _sorted(s) -> tuple[int, ...]:
    return tuple(sorted(s))


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise ProofStepError(what)


def _largest_in(c: BipartiteColoring, xs: frozenset, ys: frozenset, colors):
    """Largest monochromatic component of the sub-biclique xs x ys.

    Ties: smallest color, then lexicographically smallest (x, y) sets.
    """
    best = None
    for color in colors:
        seen: set[int] = set()
        for i in sorted(xs):
            if i in seen:
                continue
            cx, cy = component_of(c, color, xs=[i], x_scope=xs, y_scope=ys)
            seen |= cx
            if not cy:
                continue
            key = (-(len(cx) + len(cy)), color, _sorted(cx), _sorted(cy))
            if best is None or key < best[0]:
                best = (key, color, cx, cy)
    _require(best is not None, "sub-biclique has no edges")
    return best[1], best[2], best[3]


def _two_color_case(c, xs, ys, colors, trace, scope):
    """Component of the sub-biclique xs x ys meeting both of its sides in half.

    The sub-biclique may use only two colors.  Returns ``(color, x, y)``.
    """
    color, x1, y1 = _largest_in(c, xs, ys, colors)
    trace.append(TraceStep(f"largest[{scope}]", color, _sorted(x1), _sorted(y1)))
    _require(2 * (len(x1) + len(y1)) >= len(xs) + len(ys), "largest component below half")
    if 2 * len(x1) >= len(xs) and 2 * len(y1) >= len(ys):
        trace.append(TraceStep(f"adequate[{scope}]", color, _sorted(x1), _sorted(y1)))
        return color, x1, y1
    # exactly one side is deficient; the biclique between the component's
    # part of the other side and the rest of the deficient side avoids `color`
    if 2 * len(y1) < len(ys):
        bx, by = x1, ys - y1
    else:
        bx, by = xs - x1, y1
    found = {c.colors[i][j] for i in bx for j in by}
    _require(len(found) == 1 and color not in found, "biclique is not in the other color")
    other = found.pop()
    trace.append(TraceStep(f"biclique[{scope}]", other, _sorted(bx), _sorted(by)))
    cx, cy = component_of(c, other, xs=bx, ys=by, x_scope=xs, y_scope=ys)
    _require(2 * len(cx) > len(xs) and 2 * len(cy) > len(ys), "biclique component not balanced")
    trace.append(TraceStep(f"component[{scope}]", other, _sorted(cx), _sorted(cy)))
    return other, cx, cy


def _three_color_case(c: BipartiteColoring, first, trace: list[TraceStep]):
    X = frozenset(range(c.m))
    a, x1, y1 = first
    trace.append(TraceStep("largest[K]", a, _sorted(x1), _sorted(y1)))
    _require(3 * (len(x1) + len(y1)) >= c.m + c.n, "largest component below (m+n)/3")
    if 3 * len(x1) >= c.m and 3 * len(y1) >= c.n:
        trace.append(TraceStep("adequate[K]", a, _sorted(x1), _sorted(y1)))
        return a, x1, y1
    _require(3 * len(y1) < c.n and 3 * len(x1) > c.m, "deficient side is not Y")

    y_rest = frozenset(range(c.n)) - y1
    k1_colors = sorted({c.colors[i][j] for i in x1 for j in y_rest})
    _require(a not in k1_colors, "K1 uses the first component's color")
    trace.append(TraceStep("K1", None, _sorted(x1), _sorted(y_rest)))
    b, bx, by = _two_color_case(c, x1, y_rest, k1_colors, trace, "K1")
    _require(3 * len(by) > c.n, "B1 meets Y - Y1 in at most n/3")

    b_star = component_of(c, b, xs=bx, ys=by)
    if not x1 - bx:
        trace.append(TraceStep("B1*[covers X1]", b, _sorted(b_star[0]), _sorted(b_star[1])))
        return b, *b_star

    bi_x = x1 - bx
    found = {c.colors[i][j] for i in bi_x for j in by}
    _require(len(found) == 1 and not found & {a, b}, "[X1 - B1, B1 cap Y'] not in the third color")
    third = found.pop()
    trace.append(TraceStep("biclique[C1]", third, _sorted(bi_x), _sorted(by)))
    cx1, cy1 = component_of(c, third, xs=bi_x, ys=by, x_scope=x1, y_scope=y_rest)
    trace.append(TraceStep("C1", third, _sorted(cx1), _sorted(cy1)))
    c_star = component_of(c, third, xs=cx1, ys=cy1)
    trace.append(TraceStep("B1*", b, _sorted(b_star[0]), _sorted(b_star[1])))
    trace.append(TraceStep("C1*", third, _sorted(c_star[0]), _sorted(c_star[1])))
    if 3 * len(b_star[0]) >= c.m:
        return b, *b_star
    if 3 * len(c_star[0]) >= c.m:
        return third, *c_star

    rest_x = X - b_star[0] - c_star[0]
    found = {c.colors[i][j] for i in rest_x for j in by}
    _require(found == {a}, "fallback biclique is not in the first color")
    _require(3 * len(rest_x) > c.m, "fallback biclique too small on X")
    trace.append(TraceStep("biclique[A]", a, _sorted(rest_x), _sorted(by)))
    return a, *component_of(c, a, xs=rest_x, ys=by)


def find_balanced_component(c: BipartiteColoring) -> BalancedWitness:
    """Monochromatic component with r|x| >= m and r|y| >= n, for r <= 3."""
    if c.r >= 4:
        raise UnsupportedColorCount(
            f"r = {c.r}: for r >= 4 some colorings have no balanced monochromatic "
            "component; use brute_force_balanced to inspect the best one"
        )
    X, Y = frozenset(range(c.m)), frozenset(range(c.n))
    trace: list[TraceStep] = []
    transposed = False
    if c.r == 1:
        trace.append(TraceStep("whole", 0, _sorted(X), _sorted(Y)))
        color, xs, ys = 0, X, Y
    elif c.r == 2:
        color, xs, ys = _two_color_case(c, X, Y, range(2), trace, "K")
    else:
        a, x1, y1 = _largest_in(c, X, Y, range(3))
        if 3 * len(y1) >= c.n and 3 * len(x1) < c.m:
            transposed = True
            trace.append(TraceStep("transpose"))
            color, ys, xs = _three_color_case(transpose(c), (a, y1, x1), trace)
        else:
            color, xs, ys = _three_color_case(c, (a, x1, y1), trace)
    trace.append(TraceStep("result", color, _sorted(xs), _sorted(ys)))
    witness = BalancedWitness(color, _sorted(xs), _sorted(ys), tuple(trace))
    _require(witness.meets_bound(c), "result does not meet the m/r, n/r bar")
    return witness


# -- replay ------------------------------------------------------------------


def replay_trace(c: BipartiteColoring, witness: BalancedWitness) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Re-derive the witness from its trace and the coloring.

    Each component step is recomputed from its recorded seeds and scope and
    must equal what was recorded; each biclique step must be monochromatic
    and built from earlier sets as the case analysis prescribes.  The final
    choice is re-made from the replayed sets.  Returns ``(color, x, y)`` in
    input coordinates.
    """
    steps = list(witness.trace)
    if not steps or steps[-1].name != "result":
        raise TraceReplayError("trace must end with a result step")
    work = c
    if steps[0].name == "transpose":
        work = transpose(c)
        steps = steps[1:]
    X, Y = frozenset(range(work.m)), frozenset(range(work.n))
    scopes = {"K": (X, Y)}
    comp: dict[str, tuple] = {}
    chosen = None

    def fail(step, why):
        raise TraceReplayError(f"step {step.name!r}: {why}")

    def same(step, color, xs, ys):
        if (step.color, step.x, step.y) != (color, _sorted(xs), _sorted(ys)):
            fail(step, "recorded sets do not replay")

    def mono(step):
        found = {work.colors[i][j] for i in step.x for j in step.y}
        if not step.x or not step.y or found != {step.color}:
            fail(step, "not a monochromatic biclique")

    prev = None
    for step in steps[:-1]:
        name = step.name
        scope = name[name.find("[") + 1:-1] if "[" in name else None
        if name == "whole":
            same(step, 0, X, Y)
            chosen = (0, X, Y)
        elif name.startswith("largest["):
            sx, sy = scopes[scope]
            cx, cy = component_of(work, step.color, xs=step.x[:1], x_scope=sx, y_scope=sy)
            same(step, step.color, cx, cy)
            comp["largest", scope] = (step.color, cx, cy)
        elif name.startswith("adequate["):
            color, cx, cy = comp["largest", scope]
            same(step, color, cx, cy)
            comp["sub", scope] = (color, cx, cy)
        elif name == "K1":
            _, x1, y1 = comp["largest", "K"]
            same(step, None, x1, Y - y1)
            scopes["K1"] = (x1, Y - y1)
        elif name in ("biclique[K]", "biclique[K1]"):
            mono(step)
            sx, sy = scopes[scope]
            _, x1, y1 = comp["largest", scope]
            if (frozenset(step.x), frozenset(step.y)) not in ((x1, sy - y1), (sx - x1, y1)):
                fail(step, "biclique is not built from the largest component")
            comp["biclique", scope] = (step.color, *component_of(
                work, step.color, xs=step.x, ys=step.y, x_scope=sx, y_scope=sy))
        elif name.startswith("component["):
            same(step, *comp["biclique", scope])
            comp["sub", scope] = comp["biclique", scope]
        elif name == "B1*[covers X1]":
            b, bx, by = comp["sub", "K1"]
            if scopes["K1"][0] - bx:
                fail(step, "B1 does not cover X1")
            same(step, b, *component_of(work, b, xs=bx, ys=by))
            chosen = (b, frozenset(step.x), frozenset(step.y))
        elif name == "biclique[C1]":
            mono(step)
            b, bx, by = comp["sub", "K1"]
            if (frozenset(step.x), frozenset(step.y)) != (scopes["K1"][0] - bx, by):
                fail(step, "biclique is not [X1 - B1, B1 cap (Y - Y1)]")
        elif name == "C1":
            sx, sy = scopes["K1"]
            if prev is None or prev.name != "biclique[C1]":
                fail(step, "must follow biclique[C1]")
            same(step, prev.color, *component_of(work, prev.color, xs=prev.x, ys=prev.y, x_scope=sx, y_scope=sy))
            comp["C1"] = (step.color, frozenset(step.x), frozenset(step.y))
        elif name == "B1*":
            b, bx, by = comp["sub", "K1"]
            same(step, b, *component_of(work, b, xs=bx, ys=by))
            comp["B1*"] = (b, frozenset(step.x), frozenset(step.y))
        elif name == "C1*":
            col, cx, cy = comp["C1"]
            same(step, col, *component_of(work, col, xs=cx, ys=cy))
            comp["C1*"] = (col, frozenset(step.x), frozenset(step.y))
            if 3 * len(comp["B1*"][1]) >= work.m:
                chosen = comp["B1*"]
            elif 3 * len(comp["C1*"][1]) >= work.m:
                chosen = comp["C1*"]
        elif name == "biclique[A]":
            mono(step)
            a = comp["largest", "K"][0]
            _, by = comp["sub", "K1"][1:]
            rest = X - comp["B1*"][1] - comp["C1*"][1]
            if step.color != a or (frozenset(step.x), frozenset(step.y)) != (rest, by):
                fail(step, "biclique is not [X - (B1* u C1*), B1 cap (Y - Y1)]")
            chosen = (a, *component_of(work, a, xs=step.x, ys=step.y))
        else:
            fail(step, "unknown step")
        prev = step

    if chosen is None:
        chosen = comp.get(("sub", "K"))
    if chosen is None:
        raise TraceReplayError("trace does not determine a result")
    color, xs, ys = chosen
    if work is not c:
        xs, ys = ys, xs
    result = (color, _sorted(xs), _sorted(ys))
    final = steps[-1]
    if (final.color, final.x, final.y) != result:
        raise TraceReplayError("result step does not match the replayed component")
    if result != (witness.color, witness.x_set, witness.y_set):
        raise TraceReplayError("witness sets do not match the replayed component")
    return result


# -- brute force -------------------------------------------------------------


def brute_force_balanced(c: BipartiteColoring) -> BalancedScore:
    """Scan all monochromatic components for the best balance score.

    Score is min(r|x| - m, r|y| - n); nonnegative means the m/r, n/r bar is
    met.  Ties go to the earliest component in sorted order.
    """
    best = None
    for comp in monochromatic_components(c):
        score = min(c.r * len(comp.x_vertices) - c.m, c.r * len(comp.y_vertices) - c.n)
        if best is None or score > best.score:
            best = BalancedScore(comp.color, comp.x_vertices, comp.y_vertices, score)
    return best
