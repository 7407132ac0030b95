"""Command-line front end.

Commands: gen, verify, realize, dim, condense, sweep, profile, es.
Digraphs travel as edge-list text (first line the vertex count, then one
"u v" arc per line, '#' comments allowed), realizers and profiles as JSON.

Exit codes: 0 success, 1 negative answer on a valid run (invalid realizer,
dimension not pinned down), 2 input error, 3 internal invariant breach.
The environment variable MAJDIM_BUDGET overrides the default search node
budget; --budget overrides both.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import constructions, profiles, solver
from .digraph import (
    BadParams,
    Digraph,
    DigraphError,
    EdgeListError,
    acyclic_tournament,
    build,
    condense,
    cycle,
    disjoint_union,
    empty,
    from_edge_list,
    has_induced_two_path,
    is_acyclic_tournament,
    is_transitive,
    path,
    single_arc,
    subset_family,
    to_dot,
    to_edge_list,
)
from .realizer import (
    Realizer,
    RealizerError,
    realizer_from_json,
    realizer_to_json,
    verify,
)


class ParseError(ValueError):
    """Input file failed to parse."""


class SelfVerifyFailed(RuntimeError):
    """A construction emitted a realizer that does not verify: a bug."""


def _default_budget() -> int:
    raw = os.environ.get("MAJDIM_BUDGET")
    if raw is None:
        return solver.DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"MAJDIM_BUDGET is not an integer: {raw!r}")


def _read(path_str: str) -> str:
    try:
        return Path(path_str).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path_str}: {exc}")


def _load_digraph(path_str: str) -> Digraph:
    try:
        return from_edge_list(_read(path_str))
    except (EdgeListError, DigraphError) as exc:
        raise ParseError(f"{path_str}: {exc}")


def _load_realizer(path_str: str) -> Realizer:
    try:
        return realizer_from_json(_read(path_str))
    except (json.JSONDecodeError, RealizerError) as exc:
        raise ParseError(f"{path_str}: {exc}")


def _load_profile(path_str: str) -> profiles.Profile:
    try:
        return profiles.profile_from_json(_read(path_str))
    except (json.JSONDecodeError, profiles.ProfileError) as exc:
        raise ParseError(f"{path_str}: {exc}")


def _load_points(path_str: str) -> list[tuple[int, int]]:
    points = []
    for lineno, raw in enumerate(_read(path_str).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"{path_str}:{lineno}: expected 'x y', got {raw!r}")
        try:
            points.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ParseError(f"{path_str}:{lineno}: bad point {raw!r}")
    return points


_FAMILY_BUILDERS = {
    "empty": (empty, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "tournament": (acyclic_tournament, 1),
    "single-arc": (single_arc, 1),
    "subset-family": (subset_family, 2),
}


def _family_digraph(family: str, params: list[int]) -> Digraph:
    builder, arity = _FAMILY_BUILDERS[family]
    if len(params) != arity:
        raise ParseError(f"family {family} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


# --- commands ---------------------------------------------------------------


def _cmd_gen(args) -> int:
    D = _family_digraph(args.family, args.params)
    sys.stdout.write(to_dot(D) if args.dot else to_edge_list(D))
    return 0


def _cmd_verify(args) -> int:
    D = _load_digraph(args.digraph)
    f = _load_realizer(args.realizer)
    report = verify(D, f)
    if report.valid:
        print(json.dumps({"valid": True}))
        return 0
    print(
        json.dumps(
            {
                "valid": False,
                "violations": [
                    {"u": w.u, "v": w.v, "expected": w.expected, "margin": w.margin}
                    for w in report.violations
                ],
            }
        )
    )
    return 1


def _emit_realizer(D: Digraph, f: Realizer) -> int:
    if not verify(D, f).valid:
        raise SelfVerifyFailed("constructed realizer failed self-verification")
    print(realizer_to_json(f))
    return 0


def _cmd_realize(args) -> int:
    method = args.method
    if method in ("path", "cycle", "tournament", "empty"):
        if len(args.params) != 1:
            raise ParseError(f"realize {method} takes exactly one parameter n")
        n = args.params[0]
        if method == "path":
            return _emit_realizer(path(n), constructions.realize_path(n))
        if method == "cycle":
            return _emit_realizer(cycle(n), constructions.realize_cycle(n))
        if method == "tournament":
            D = acyclic_tournament(n)
            return _emit_realizer(D, constructions.realize_acyclic_tournament(D))
        D = empty(n)
        return _emit_realizer(D, constructions.realize_empty(D))
    if args.params:
        raise ParseError(f"realize {method} takes digraph files, not parameters")
    if not args.digraph:
        raise ParseError(f"realize {method} needs at least one --digraph file")
    if method == "generic":
        if len(args.digraph) != 1:
            raise ParseError("realize generic takes exactly one --digraph file")
        D = _load_digraph(args.digraph[0])
        return _emit_realizer(D, constructions.generic_realizer(D))
    if method == "union":
        if len(args.digraph) < 2:
            raise ParseError("realize union needs at least two --digraph files")
        parts = [_load_digraph(p) for p in args.digraph]
        pairs = [(D, constructions.generic_realizer(D)) for D in parts]
        return _emit_realizer(disjoint_union(parts), constructions.union_realizer(pairs))
    if method == "condense-lift":
        if len(args.digraph) != 1:
            raise ParseError("realize condense-lift takes exactly one --digraph file")
        D = _load_digraph(args.digraph[0])
        cr = condense(D)
        f_star = constructions.generic_realizer(cr.condensed)
        return _emit_realizer(D, constructions.condense_lift(D, cr, f_star))
    raise ParseError(f"unknown realize method {method!r}")


def _dimension_payload(result: solver.DimensionResult) -> dict:
    payload: dict = {}
    if result.known:
        payload["dimension"] = result.dimension
    else:
        payload["unknown"] = {"lower": result.lower, "upper": result.upper}
    payload["per_d"] = [
        {"d": d, "verdict": outcome.verdict.value, "nodes": outcome.nodes_explored}
        for d, outcome in result.per_d
    ]
    return payload


def _cmd_dim(args) -> int:
    D = _load_digraph(args.digraph)
    result = solver.dimension(D, max_d=args.max_d, budget=args.budget)
    print(json.dumps(_dimension_payload(result)))
    return 0 if result.known else 1


def _cmd_condense(args) -> int:
    D = _load_digraph(args.digraph)
    cr = condense(D)
    if args.dot:
        sys.stdout.write(to_dot(cr.condensed, name="condensed"))
        return 0
    print(
        json.dumps(
            {
                "classes": cr.condensed.n,
                "representative": {str(v): cr.representative[v] for v in range(D.n)},
                "class_of": {str(v): cr.class_of[v] for v in range(D.n)},
                "condensed": {"n": cr.condensed.n, "arcs": cr.condensed.sorted_arcs()},
            }
        )
    )
    return 0


@dataclass(frozen=True)
class SweepRow:
    """One digraph's entry in a sweep: code, size, dimension, predicates."""

    digraph_code: str
    n: int
    arc_count: int
    dimension: int | None
    lower: int
    upper: int
    transitive: bool
    induced_two_path: bool
    dim1_condensation: bool


def _arc_code(arcs) -> str:
    return ";".join(f"{u}>{v}" for u, v in sorted(arcs))


def _canonical_code(D: Digraph) -> str:
    best = None
    for perm in itertools.permutations(range(D.n)):
        code = _arc_code((perm[u], perm[v]) for u, v in D.arcs)
        if best is None or code < best:
            best = code
    return best if best is not None else ""


def _all_labeled_digraphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product(range(3), repeat=len(pairs)):
        arcs = []
        for (u, v), s in zip(pairs, states):
            if s == 1:
                arcs.append((u, v))
            elif s == 2:
                arcs.append((v, u))
        yield build(n, arcs)


def _sweep_row(D: Digraph, code: str, budget: int, max_d: int | None) -> SweepRow:
    result = solver.dimension(D, max_d=max_d, budget=budget)
    cr = condense(D)
    row = SweepRow(
        digraph_code=code,
        n=D.n,
        arc_count=len(D.arcs),
        dimension=result.dimension,
        lower=result.lower,
        upper=result.upper,
        transitive=is_transitive(D),
        induced_two_path=has_induced_two_path(D),
        dim1_condensation=bool(cr.condensed.arcs) and is_acyclic_tournament(cr.condensed),
    )
    if row.dimension is not None:
        if row.dimension > 2 * row.arc_count or (row.dimension == 0) != (row.arc_count == 0):
            raise SelfVerifyFailed(f"sweep row breaks dimension bounds: {row}")
    return row


def _cmd_sweep(args) -> int:
    n = args.n
    limit = 5 if args.dedup else 4
    if not (0 <= n <= limit):
        raise ParseError(f"sweep supports n <= {limit} {'with' if args.dedup else 'without'} --dedup")
    rows: list[SweepRow] = []
    seen: set[str] = set()
    for D in _all_labeled_digraphs(n):
        if args.dedup:
            code = _canonical_code(D)
            if code in seen:
                continue
            seen.add(code)
        else:
            code = _arc_code(D.arcs)
        rows.append(_sweep_row(D, code, args.budget, args.max_d))

    fields = [
        "digraph_code", "n", "arc_count", "dimension", "lower", "upper",
        "transitive", "induced_two_path", "dim1_condensation",
    ]
    if args.csv:
        print(",".join(fields))
        for r in rows:
            vals = [getattr(r, f) for f in fields]
            print(",".join("" if v is None else str(v) for v in vals))
    else:
        for r in rows:
            print(json.dumps({f: getattr(r, f) for f in fields}))

    known = [r for r in rows if r.dimension is not None]
    summary = {
        "rows": len(rows),
        "unknown_rows": len(rows) - len(known),
        "dim_le2_all_transitive": all(r.transitive for r in known if r.dimension <= 2),
        "dim_le2_no_induced_two_path": all(
            not r.induced_two_path for r in known if r.dimension <= 2
        ),
        "dim1_iff_condensed_acyclic_tournament": all(
            (r.dimension == 1) == r.dim1_condensation for r in known
        ),
        "dim0_iff_empty": all((r.dimension == 0) == (r.arc_count == 0) for r in known),
    }
    line = json.dumps({"summary": summary})
    if args.csv:
        print(line, file=sys.stderr)
    else:
        print(line)
    checks = [v for k, v in summary.items() if k.startswith("dim")]
    return 0 if all(checks) else 3


def _cmd_profile(args) -> int:
    sub = args.subcommand
    if sub == "from-realizer":
        f = _load_realizer(args.file)
        print(profiles.profile_to_json(profiles.realizer_to_profile(f)))
        return 0
    R = _load_profile(args.file)
    if sub == "margin":
        m = R.alternatives
        margins = [
            [profiles.majority_margin(R, a, b) for b in range(m)] for a in range(m)
        ]
        print(json.dumps({"alternatives": m, "margins": margins}))
        return 0
    if sub == "digraph":
        D = profiles.majority_digraph(R)
        print(json.dumps({"n": D.n, "arcs": D.sorted_arcs()}))
        return 0
    if sub == "to-realizer":
        print(realizer_to_json(profiles.profile_to_realizer(R)))
        return 0
    raise ParseError(f"unknown profile subcommand {sub!r}")


def _cmd_es(args) -> int:
    points = _load_points(args.points)
    try:
        kind, witness = solver.es_chain_or_antichain(points)
    except solver.EmptyInput as exc:
        raise ParseError(str(exc))
    print(json.dumps({"kind": kind, "size": len(witness), "witness": [list(p) for p in witness]}))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="majdim",
        description="Weak majority dimension toolkit: verify realizers, build them, "
        "compute exact dimensions, condense digraphs, and relate profiles to realizers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a named digraph family as an edge list")
    p.add_argument("family", choices=sorted(_FAMILY_BUILDERS))
    p.add_argument("params", nargs="+", type=int)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of an edge list")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="check a realizer against a digraph")
    p.add_argument("digraph")
    p.add_argument("realizer")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("realize", help="construct a realizer (self-verified before emit)")
    p.add_argument(
        "method",
        choices=["path", "cycle", "tournament", "empty", "generic", "union", "condense-lift"],
    )
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--digraph", "-d", action="append", default=[], metavar="FILE")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("dim", help="exact weak majority dimension by complete search")
    p.add_argument("digraph")
    p.add_argument("--max-d", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("condense", help="homogeneous-class condensation")
    p.add_argument("digraph")
    p.add_argument("--dot", action="store_true", help="emit the condensed digraph as DOT")
    p.set_defaults(func=_cmd_condense)

    p = sub.add_parser("sweep", help="dimensions of every labeled digraph on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--max-d", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--dedup", action="store_true", help="one row per isomorphism class")
    p.add_argument("--csv", action="store_true", help="CSV rows instead of JSON lines")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("profile", help="majority margins and realizer correspondence")
    p.add_argument("subcommand", choices=["margin", "digraph", "to-realizer", "from-realizer"])
    p.add_argument("file")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("es", help="longest chain or antichain of planar points")
    p.add_argument("points", help="text file with one 'x y' point per line")
    p.set_defaults(func=_cmd_es)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "budget") and args.budget is None:
        try:
            args.budget = _default_budget()
        except ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except (ParseError, DigraphError, RealizerError, BadParams,
            constructions.ConstructionError, profiles.ProfileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SelfVerifyFailed as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
