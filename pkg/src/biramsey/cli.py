"""Command-line interface.

Exit codes: 0 OK/FOUND, 1 NOT_FOUND (including an exhausted search), 2 ERROR,
3 BUDGET_EXCEEDED.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import analysis, balanced, certificates, constructions
from .coloring import ColoringError, parse, serialize, serialize_complete, to_dict
from .search import (
    BudgetExceeded,
    Status,
    SymmetryMode,
    bipartite_ramsey_f,
    exists_p4free,
    p4free_iso_classes,
    star_arboricity,
)

EXIT_CODES = {"OK": 0, "NOT_FOUND": 1, "ERROR": 2, "BUDGET_EXCEEDED": 3}


@dataclass
class CommandReport:
    command: str
    parameters: dict
    status: str = "OK"
    payload: dict = field(default_factory=dict)
    wall_time: float = 0.0
    lines: list[str] = field(default_factory=list)  # human-readable rendering
    stdout_text: str | None = None  # raw output replacing the text rendering
    format: str = "text"

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def as_dict(self) -> dict:
        d = asdict(self)
        for key in ("lines", "stdout_text", "format"):
            d.pop(key)
        d["wall_time"] = round(self.wall_time, 6)
        return d


class CommandError(Exception):
    pass


def _read_coloring(path: str):
    try:
        return parse(Path(path).read_text())
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}") from None
    except ColoringError as exc:
        raise CommandError(f"{path}: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


def _comp_dict(comp: analysis.ComponentSummary) -> dict:
    return {"color": comp.color, "x": list(comp.x_vertices), "y": list(comp.y_vertices), "edges": comp.edge_count}


def _fmt_comp(comp) -> str:
    return f"color {comp.color}: X={list(comp.x_vertices)} Y={list(comp.y_vertices)} edges={comp.edge_count}"


# -- commands ----------------------------------------------------------------


def cmd_analyze(args, rep: CommandReport) -> None:
    c = _read_coloring(args.file)
    comps = analysis.monochromatic_components(c)
    stats = analysis.color_class_stats(c)
    largest = analysis.largest_component(c)
    matching = analysis.max_connected_matching(c)
    p4 = analysis.find_p4(c)
    rep.payload = {
        "m": c.m,
        "n": c.n,
        "r": c.r,
        "components": [_comp_dict(k) for k in comps],
        "color_classes": [asdict(s) for s in stats],
        "largest_component": _comp_dict(largest),
        "max_connected_matching": certificates.matching_to_dict(matching),
        "p4": certificates.p4_to_dict(p4) if p4 else None,
        "biequivalence": analysis.is_biequivalence(c),
    }
    rep.lines.append(f"K_{{{c.m},{c.n}}} with {c.r} colors")
    for s in stats:
        nontrivial = sum(1 for k in comps if k.color == s.color)
        rep.lines.append(
            f"color {s.color}: {nontrivial} nontrivial components, {s.component_count} with "
            f"singletons, {s.edge_count} edges, star forest: {'yes' if s.is_star_forest else 'no'}"
        )
    rep.lines.append("components:")
    rep.lines.extend("  " + _fmt_comp(k) for k in comps)
    rep.lines.append(f"largest component: {_fmt_comp(largest)} (size {largest.size})")
    rep.lines.append(
        f"max connected matching: size {matching.size} in color {matching.color}: {list(map(list, matching.edges))}"
    )
    if p4:
        path = " ".join(f"{side.value}{v}" for side, v in p4.path)
        rep.lines.append(f"monochromatic P4: color {p4.color}: {path}")
    else:
        rep.lines.append("monochromatic P4: none")
    if args.out and p4:
        _write(args.out, certificates.dumps(certificates.p4_to_dict(p4)))


def cmd_balanced(args, rep: CommandReport) -> None:
    c = _read_coloring(args.file)
    oracle = balanced.brute_force_balanced(c)
    if c.r <= 3:
        w = balanced.find_balanced_component(c)
        cert = certificates.balanced_to_dict(w)
        certificates.verify(c, cert)
        rep.payload = {"r": c.r, "witness": cert, "oracle_score": oracle.score}
        rep.lines.append(f"balanced component: color {w.color} X={list(w.x_set)} Y={list(w.y_set)}")
        rep.lines.append(f"bar: {c.r}*{len(w.x_set)} >= {c.m}, {c.r}*{len(w.y_set)} >= {c.n}")
        rep.lines.append("trace:")
        rep.lines.extend(f"  {step}" for step in w.trace)
        _write(args.out, certificates.dumps(cert))
        return
    rep.payload = {
        "r": c.r,
        "best": {"color": oracle.color, "x": list(oracle.x_set), "y": list(oracle.y_set)},
        "score": oracle.score,
        "bar_met": oracle.satisfied,
    }
    rep.lines.append(
        f"r = {c.r}: best component color {oracle.color} meets X in {len(oracle.x_set)} "
        f"and Y in {len(oracle.y_set)} (score {oracle.score})"
    )
    rep.lines.append(f"m/r, n/r bar {'met' if oracle.satisfied else 'NOT met'}")
    if not oracle.satisfied:
        rep.status = "NOT_FOUND"


def cmd_search(args, rep: CommandReport) -> None:
    m, n, r = args.m, args.n, args.r
    if args.count_iso:
        try:
            forms = p4free_iso_classes(m, n, r, args.budget, args.symmetry, args.workers)
        except BudgetExceeded as exc:
            rep.status = "BUDGET_EXCEEDED"
            rep.payload = {"nodes_explored": exc.nodes}
            rep.lines.append(str(exc))
            return
        rep.payload = {"iso_classes": len(forms), "canonical_forms": [str(f) for f in forms]}
        rep.lines.append(f"P4-free {r}-colorings of K_{{{m},{n}}} up to isomorphism: {len(forms)}")
        for f in forms:
            rep.lines.append(str(f).rstrip("\n"))
        return
    out = exists_p4free(m, n, r, args.budget, args.symmetry, args.workers)
    rep.payload = out.report()
    rep.lines.append(f"({m},{n},{r}): {out.status.value} after {out.nodes_explored} nodes")
    if out.status is Status.FOUND:
        rep.lines.append(serialize(out.witness).rstrip("\n"))
        _write(args.out, serialize(out.witness))
    elif out.status is Status.EXHAUSTED:
        rep.status = "NOT_FOUND"
        rep.lines.append("no P4-free coloring; pruning rules relied upon:")
        rep.lines.extend(f"  {rule}" for rule in out.pruning_rules)
    else:
        rep.status = "BUDGET_EXCEEDED"


def _construct(kind: str, params: list[str]):
    def ints(count):
        if len(params) != count:
            raise CommandError(f"construct {kind} takes {count} integer argument(s)")
        try:
            return [int(p) for p in params]
        except ValueError:
            raise CommandError(f"construct {kind}: arguments must be integers") from None

    if kind == "figure1":
        ints(0)
        return constructions.figure1_k55(), True
    if kind == "extremal":
        (r,) = ints(1)
        return constructions.extremal_p4free(r), True
    if kind == "double":
        (r,) = ints(1)
        return constructions.bipartite_double(constructions.complete_star_coloring(r)), True
    if kind == "complete-star":
        (r,) = ints(1)
        return constructions.complete_star_coloring(r), True
    if kind == "biequiv":
        m, n = ints(2)
        return constructions.biequivalence_sharpness(m, n), False
    if kind == "blowup":
        if len(params) != 2:
            raise CommandError("construct blowup takes FILE K")
        base = _read_coloring(params[0])
        try:
            k = int(params[1])
        except ValueError:
            raise CommandError("construct blowup: K must be an integer") from None
        return constructions.blow_up(constructions.BlowUpSpec.uniform(base, k)).coloring, False
    raise CommandError(f"unknown construction {kind!r}")


def cmd_construct(args, rep: CommandReport) -> None:
    try:
        obj, claims_p4free = _construct(args.kind, args.params)
    except ValueError as exc:
        raise CommandError(str(exc)) from None
    if isinstance(obj, constructions.CompleteColoring):
        text = serialize_complete(obj)
        valid = constructions.complete_classes_are_star_forests(obj)
        rep.payload = {"t": obj.t, "s": obj.s, "star_forest_classes": valid, "coloring": text}
        rep.lines.append(f"K_{obj.t} with {obj.s} colors; every class a star forest: {'yes' if valid else 'no'}")
    else:
        text = serialize(obj)
        p4 = analysis.find_p4(obj)
        valid = p4 is None
        rep.payload = {"m": obj.m, "n": obj.n, "r": obj.r, "p4_free": valid, "coloring": to_dict(obj)}
        rep.lines.append(f"K_{{{obj.m},{obj.n}}} with {obj.r} colors; P4-free: {'yes' if valid else 'no'}")
        if args.kind == "biequiv":
            big = analysis.largest_mono_biclique(obj)
            rep.payload["largest_biclique"] = [len(big.x_vertices), len(big.y_vertices)]
            rep.lines.append(f"largest monochromatic biclique: {len(big.x_vertices)}x{len(big.y_vertices)}")
    if claims_p4free and not valid:
        rep.status = "ERROR"
        rep.lines.append("construction failed its validation")
    if args.out:
        _write(args.out, text)
    else:
        rep.stdout_text = text


def cmd_verify(args, rep: CommandReport) -> None:
    c = _read_coloring(args.file)
    try:
        cert = certificates.loads(Path(args.certificate).read_text())
    except OSError as exc:
        raise CommandError(f"cannot read {args.certificate}: {exc.strerror}") from None
    try:
        certificates.verify(c, cert)
    except certificates.CertificateError as exc:
        rep.status = "ERROR"
        rep.payload = {"valid": False, "failed_invariant": str(exc)}
        rep.lines.append(f"INVALID {cert.get('type')} certificate: {exc}")
        return
    rep.payload = {"valid": True, "type": cert["type"]}
    rep.lines.append(f"OK: {cert['type']} certificate is valid")


def cmd_star_arboricity(args, rep: CommandReport) -> None:
    try:
        res = star_arboricity(args.m, args.n, args.budget, args.symmetry, args.workers)
    except BudgetExceeded as exc:
        rep.status = "BUDGET_EXCEEDED"
        rep.lines.append(str(exc))
        return
    rep.payload = {
        "m": res.m,
        "n": res.n,
        "value": res.value,
        "witness": serialize(res.witness),
        "exhaustion": res.exhaustion.report() if res.exhaustion else None,
    }
    rep.lines.append(f"st(K_{{{res.m},{res.n}}}) = {res.value}")
    rep.lines.append(serialize(res.witness).rstrip("\n"))
    _write(args.out, serialize(res.witness))


def cmd_ramsey_f(args, rep: CommandReport) -> None:
    res = bipartite_ramsey_f(args.r, args.budget, args.symmetry, args.workers)
    rep.payload = {
        "r": res.r,
        "value": res.value,
        "lower_bound": res.lower_bound,
        "witness_source": res.witness_source,
        "witness": serialize(res.witness) if res.witness else None,
        "exhaustion": res.exhaustion.report() if res.exhaustion else None,
    }
    if res.value is None:
        rep.status = "BUDGET_EXCEEDED"
        rep.lines.append(
            f"f({res.r}) >= {res.lower_bound} (witness from {res.witness_source}); "
            f"exhaustion at K_{{{res.lower_bound},{res.lower_bound}}} UNKNOWN within budget"
        )
    else:
        rep.lines.append(f"f({res.r}) = {res.value}")
        rep.lines.append(f"witness at K_{{{res.value - 1},{res.value - 1}}} ({res.witness_source}):")
        if res.witness:
            rep.lines.append(serialize(res.witness).rstrip("\n"))
        rep.lines.append(
            f"K_{{{res.value},{res.value}}}: EXHAUSTED after {res.exhaustion.nodes_explored} nodes"
        )
    if res.witness:
        _write(args.out, serialize(res.witness))


COMMANDS = {
    "analyze": cmd_analyze,
    "balanced": cmd_balanced,
    "search": cmd_search,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "star-arboricity": cmd_star_arboricity,
    "ramsey-f": cmd_ramsey_f,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="FILE", help="write the coloring or certificate here")
    common.add_argument("--budget", type=int, default=None, help="search node cap")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--symmetry", choices=[s.value for s in SymmetryMode], default="full")

    parser = argparse.ArgumentParser(
        prog="biramsey",
        description="P4-free colorings, bipartite Ramsey numbers and balanced components of K_{m,n}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="monochromatic structure of a coloring")
    p.add_argument("file")
    p = sub.add_parser("balanced", parents=[common], help="balanced monochromatic component")
    p.add_argument("file")
    p = sub.add_parser("search", parents=[common], help="search for a P4-free coloring")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--count-iso", action="store_true", help="count isomorphism classes")
    p = sub.add_parser("construct", parents=[common], help="emit an explicit coloring")
    p.add_argument("kind", choices=("figure1", "extremal", "blowup", "biequiv", "complete-star", "double"))
    p.add_argument("params", nargs="*")
    p = sub.add_parser("verify", parents=[common], help="check a certificate against a coloring")
    p.add_argument("file")
    p.add_argument("certificate")
    p = sub.add_parser("star-arboricity", parents=[common], help="st(K_{m,n}) by search")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p = sub.add_parser("ramsey-f", parents=[common], help="bipartite Ramsey number f(r) of P4")
    p.add_argument("r", type=int)
    return parser


def run(argv: list[str] | None = None) -> CommandReport:
    args = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k not in ("command", "format")}
    rep = CommandReport(args.command, params, format=args.format)
    start = time.perf_counter()
    try:
        for name in ("m", "n", "r"):
            if name in params and params[name] < 1:
                raise CommandError(f"{name} must be positive")
        if args.workers < 1 or (args.budget is not None and args.budget < 0):
            raise CommandError("--workers must be >= 1 and --budget >= 0")
        COMMANDS[args.command](args, rep)
    except (CommandError, ColoringError) as exc:
        rep.status = "ERROR"
        rep.payload = {"error": str(exc)}
        rep.lines = [f"error: {exc}"]
    rep.wall_time = time.perf_counter() - start
    return rep


def main(argv: list[str] | None = None) -> int:
    rep = run(argv)
    if rep.format == "json":
        print(json.dumps(rep.as_dict(), indent=2))
    elif rep.stdout_text is not None and rep.status == "OK":
        sys.stdout.write(rep.stdout_text)
        for line in rep.lines:
            print(line, file=sys.stderr)
    else:
        stream = sys.stderr if rep.status == "ERROR" else sys.stdout
        for line in rep.lines:
            print(line, file=stream)
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
