"""Command-line front end.

Exit codes: 0 success (or "isomorphic"), 1 "not isomorphic" / failed check,
2 usage, parse or guard errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators as gen
from .hgio import FormatError, emit_hg, read_hg, read_witness, write_witness
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    bipartite_representation,
    degree_sequence,
    disjoint_union,
    dual,
    exposed_vertices,
    hyperedge_sizes,
    is_graph,
    two_section,
)
from .invariants import PARAMS, compute, invariant_report
from .iso import METHODS, MethodDisagreement, WitnessError, decide, verify_witness
from .partition import coarsest_partition, parameters
from .rational import format_rational

FAMILIES = ("cycle", "complete", "path", "star", "gem", "union", "fixture-H4u", "fixture-G4u",
            "fixture-K4+gem*", "fixture-K4*+gem", "random-regular")


class UsageError(Exception):
    pass


def _int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {tok!r}") from None


def build_family(family: str, params: list[str], seed: int | None) -> Hypergraph:
    def need(k):
        if len(params) != k:
            raise UsageError(f"'{family}' takes {k} parameter(s), got {len(params)}")

    if family in ("cycle", "complete", "path", "star"):
        need(1)
        return getattr(gen, family)(_int(params[0], "size"))
    if family == "gem":
        need(0)
        return gen.gem()
    if family.startswith("fixture-"):
        need(0)
        return gen.k_uniform_r_regular_fixture(family[len("fixture-"):])
    if family == "random-regular":
        need(2)
        return gen.random_regular(_int(params[0], "n"), _int(params[1], "r"), seed=0 if seed is None else seed)
    if family == "union":
        if not params:
            raise UsageError("'union' needs at least one part such as cycle:3")
        parts = []
        for spec in params:
            name, _, args = spec.partition(":")
            parts.append(build_family(name, [a for a in args.split(",") if a], seed))
        return disjoint_union(*parts)
    raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _emit(h: Hypergraph, out: str | None) -> None:
    text = emit_hg(h)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    _emit(build_family(args.family, args.params, args.seed), args.output)
    return 0


def cmd_info(args) -> int:
    h = read_hg(args.file)
    info = {
        "n": h.n,
        "m": h.m,
        "is_graph": is_graph(h),
        "degrees": list(degree_sequence(h)),
        "hyperedge_sizes": list(hyperedge_sizes(h)),
        "exposed": exposed_vertices(h),
    }
    if args.json:
        print(json.dumps(info))
    else:
        for k, v in info.items():
            print(f"{k}: {json.dumps(v)}")
    return 0


def cmd_partition(args) -> int:
    h = read_hg(args.file)
    p = coarsest_partition(h)
    params = parameters(p, h)
    if args.json:
        print(json.dumps({"vertex_classes": [list(c) for c in p.vertex_classes],
                          "edge_classes": [list(c) for c in p.edge_classes],
                          **params.as_dict()}))
        return 0
    for i, c in enumerate(p.vertex_classes):
        print(f"V{i}: {' '.join(map(str, c))}")
    for j, c in enumerate(p.edge_classes):
        print(f"X{j}: {' '.join(map(str, c))}")
    print(f"v={list(params.v)}")
    print(f"a={list(params.a)}")
    print(f"D={[list(r) for r in params.D]}")
    print(f"U={[list(r) for r in params.U]}")
    return 0


def cmd_iso(args) -> int:
    g, h = read_hg(args.file_a), read_hg(args.file_b)
    verdict = decide(g, h, args.method, args.limit)
    print(f"iso: {'true' if verdict.result else 'false'}")
    print(f"method: {verdict.method}")
    if verdict.reason:
        print(f"reason: {verdict.reason}")
    if args.witness and verdict.witness is not None:
        write_witness(verdict.witness, args.witness)
        print(f"witness_file: {args.witness}")
    if verdict.shared_parameters is not None:
        print(f"shared_parameters: {json.dumps(verdict.shared_parameters.as_dict())}")
    return 0 if verdict.result else 1


def cmd_verify_witness(args) -> int:
    path = args.witness_file or args.witness
    if not path:
        raise UsageError("a witness file is required (positional or --witness)")
    g, h = read_hg(args.file_a), read_hg(args.file_b)
    ok = verify_witness(g, h, read_witness(path))
    print(f"witness: {'valid' if ok else 'invalid'}")
    return 0 if ok else 1


def cmd_invariant(args) -> int:
    h = read_hg(args.file)
    if args.param:
        val = compute(args.param, h, args.limit)
        if args.json:
            print(json.dumps({"param": args.param, "value": str(val), "provenance": PARAMS.get(args.param, None)
                              and PARAMS[args.param].provenance}))
        else:
            print(val)
        return 0
    report = invariant_report(h, args.limit)
    if args.json:
        print(json.dumps(report.as_dict(), indent=1))
    else:
        print("\n".join(report.lines()))
    return 0


def _transform(fn):
    def run(args) -> int:
        _emit(fn(read_hg(args.file)), args.output)
        return 0
    return run


def cmd_paper_suite(args) -> int:
    from .paper_suite import format_table, run_suite

    rows = run_suite()
    print(format_table(rows))
    return 0 if all(r.ok for r in rows) else 1


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fractiso", description="Fractional (hyper)graph isomorphism toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a named graph or hypergraph in .hg format")
    p.add_argument("family", help=", ".join(FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("info", help="sizes, degrees and hyperedge sizes")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("partition", help="coarsest equitable partition and its parameters")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("iso", help="decide fractional isomorphism")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--method", choices=METHODS, default="partition")
    p.add_argument("--witness", help="write the witness to this path")
    p.add_argument("--limit", type=int, default=None, help="LP size guard (default 30)")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("verify-witness", help="check a witness file exactly")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("witness_file", nargs="?")
    p.add_argument("--witness")
    p.set_defaults(func=cmd_verify_witness)

    p = sub.add_parser("invariant", help="fractional parameters as exact rationals")
    p.add_argument("file")
    p.add_argument("--param", help=", ".join(PARAMS))
    p.add_argument("--limit", type=int, default=None, help="vertex guard for set enumeration (default 20)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariant)

    for name, fn, text in (("dual", dual, "dual hypergraph"),
                           ("two-section", two_section, "2-section graph"),
                           ("bipartite", bipartite_representation, "bipartite representation")):
        p = sub.add_parser(name, help=f"write the {text}")
        p.add_argument("file")
        p.add_argument("-o", "--output")
        p.set_defaults(func=_transform(fn))

    p = sub.add_parser("paper-suite", help="check the reference examples (expected vs computed)")
    p.set_defaults(func=cmd_paper_suite)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except MethodDisagreement as exc:
        print(f"error: methods disagree: {exc}", file=sys.stderr)
        return 2
    except (UsageError, FormatError, HypergraphError, WitnessError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
