"""JSON certificates and an independent checker for them.

The checker only reads the coloring and the certificate; it never searches
and never runs the balanced finder.
"""

from __future__ import annotations

import json

from .analysis import ComponentSummary, MatchingWitness, P4Witness, component_of
from .balanced import BalancedWitness, TraceReplayError, TraceStep, replay_trace
from .coloring import BipartiteColoring, Side


class CertificateError(ValueError):
    """A certificate failed validation; the message names the failed invariant."""


def p4_to_dict(w: P4Witness) -> dict:
    return {"type": "p4", "color": w.color, "path": [[side.value, v] for side, v in w.path]}


def component_to_dict(comp: ComponentSummary) -> dict:
    return {
        "type": "component",
        "color": comp.color,
        "x": list(comp.x_vertices),
        "y": list(comp.y_vertices),
        "edge_count": comp.edge_count,
    }


def matching_to_dict(w: MatchingWitness) -> dict:
    return {
        "type": "matching",
        "color": w.color,
        "edges": [list(e) for e in w.edges],
        "component_id": w.component_id,
        "component": {"x": list(w.component.x_vertices), "y": list(w.component.y_vertices)},
    }


def balanced_to_dict(w: BalancedWitness) -> dict:
    return {
        "type": "balanced",
        "color": w.color,
        "x": list(w.x_set),
        "y": list(w.y_set),
        "trace": [step.as_dict() for step in w.trace],
    }


def dumps(cert: dict) -> str:
    return json.dumps(cert, indent=2) + "\n"


def loads(text: str) -> dict:
    try:
        cert = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"certificate is not valid JSON: {exc}") from None
    if not isinstance(cert, dict) or "type" not in cert:
        raise CertificateError("certificate must be an object with a 'type' field")
    return cert


# -- checks ------------------------------------------------------------------


def _fail(invariant: str) -> None:
    raise CertificateError(invariant)


def _index(value, bound: int, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < bound:
        _fail(f"{what}: index {value!r} out of range [0, {bound})")
    return value


def _color(c: BipartiteColoring, cert: dict) -> int:
    return _index(cert.get("color"), c.r, "color")


def _vertex_sets(c: BipartiteColoring, xs, ys) -> tuple[set[int], set[int]]:
    if not isinstance(xs, list) or not isinstance(ys, list):
        _fail("vertex sets must be lists")
    xset = {_index(v, c.m, "x vertex") for v in xs}
    yset = {_index(v, c.n, "y vertex") for v in ys}
    if len(xset) != len(xs) or len(yset) != len(ys):
        _fail("vertex sets contain duplicates")
    return xset, yset


def _check_component(c: BipartiteColoring, color: int, xs: set, ys: set) -> None:
    if not xs or not ys:
        _fail("component must contain an edge")
    seed = min(xs)
    cx, cy = component_of(c, color, xs=[seed])
    if (set(cx), set(cy)) != (xs, ys):
        _fail("vertex sets are not exactly one monochromatic component")


def check_p4(c: BipartiteColoring, cert: dict) -> None:
    color = _color(c, cert)
    path = cert.get("path")
    if not isinstance(path, list) or len(path) != 4:
        _fail("path must list exactly four vertices")
    verts = []
    for item in path:
        if not isinstance(item, list) or len(item) != 2 or item[0] not in ("X", "Y"):
            _fail("path vertices must be [side, index] pairs")
        side = Side(item[0])
        verts.append((side, _index(item[1], c.size(side), f"{side.value} vertex")))
    if len(set(verts)) != 4:
        _fail("path vertices are not distinct")
    for (s1, v1), (s2, v2) in zip(verts, verts[1:]):
        if s1 is s2:
            _fail("consecutive path vertices must be on opposite sides")
        i, j = (v1, v2) if s1 is Side.X else (v2, v1)
        if c.colors[i][j] != color:
            _fail(f"edge X{i}-Y{j} does not have color {color}")


def check_component(c: BipartiteColoring, cert: dict) -> None:
    color = _color(c, cert)
    xs, ys = _vertex_sets(c, cert.get("x"), cert.get("y"))
    _check_component(c, color, xs, ys)
    edges = sum(1 for i in xs for j in ys if c.colors[i][j] == color)
    if cert.get("edge_count") != edges:
        _fail("edge_count does not match the component")


def check_matching(c: BipartiteColoring, cert: dict) -> None:
    color = _color(c, cert)
    comp = cert.get("component")
    if not isinstance(comp, dict):
        _fail("matching certificate needs its component")
    xs, ys = _vertex_sets(c, comp.get("x"), comp.get("y"))
    _check_component(c, color, xs, ys)
    edges = cert.get("edges")
    if not isinstance(edges, list) or not edges:
        _fail("matching must have at least one edge")
    used_x, used_y = set(), set()
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            _fail("edges must be [x, y] pairs")
        i, j = _index(e[0], c.m, "x vertex"), _index(e[1], c.n, "y vertex")
        if c.colors[i][j] != color:
            _fail(f"matching edge X{i}-Y{j} does not have color {color}")
        if i in used_x or j in used_y:
            _fail("matching edges are not pairwise disjoint")
        if i not in xs or j not in ys:
            _fail("matching edge outside the component")
        used_x.add(i)
        used_y.add(j)


def check_balanced(c: BipartiteColoring, cert: dict) -> None:
    color = _color(c, cert)
    xs, ys = _vertex_sets(c, cert.get("x"), cert.get("y"))
    _check_component(c, color, xs, ys)
    if c.r * len(xs) < c.m:
        _fail(f"r*|x| = {c.r * len(xs)} < m = {c.m}")
    if c.r * len(ys) < c.n:
        _fail(f"r*|y| = {c.r * len(ys)} < n = {c.n}")
    trace = cert.get("trace")
    if trace:
        try:
            steps = tuple(TraceStep.from_dict(s) for s in trace)
        except (KeyError, TypeError, AttributeError):
            _fail("trace steps are malformed")
        w = BalancedWitness(color, tuple(sorted(xs)), tuple(sorted(ys)), steps)
        try:
            replay_trace(c, w)
        except (TraceReplayError, KeyError, TypeError, IndexError) as exc:
            _fail(f"trace does not replay: {exc}")


CHECKERS = {
    "p4": check_p4,
    "component": check_component,
    "matching": check_matching,
    "balanced": check_balanced,
}


def verify(c: BipartiteColoring, cert: dict) -> None:
    """Raise CertificateError unless ``cert`` is valid for ``c``."""
    kind = cert.get("type")
    if kind not in CHECKERS:
        _fail(f"unknown certificate type {kind!r}")
    CHECKERS[kind](c, cert)
