"""The ``.hg`` text format and the JSON witness document.

``.hg`` layout: first non-comment line ``n m``, then ``m`` lines each holding
the sorted vertex indices of one hyperedge (``-`` for an empty hyperedge).
Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import json
from pathlib import Path

from .hypergraph import Hypergraph, HypergraphError, make
from .rational import RationalMatrix, format_rational, parse_rational


class FormatError(HypergraphError):
    pass


def parse_hg(text: str) -> Hypergraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty .hg input: missing 'n m' header")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"bad header {lines[0]!r}: expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"bad header {lines[0]!r}: expected two integers") from None
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} hyperedges, found {len(body)}")
    edges = []
    for k, ln in enumerate(body, start=2):
        if ln == "-":
            edges.append(())
            continue
        try:
            edge = [int(tok) for tok in ln.split()]
        except ValueError:
            raise FormatError(f"hyperedge line {k}: {ln!r} is not a list of integers") from None
        edges.append(edge)
    try:
        return make(n, edges)
    except HypergraphError as exc:
        raise FormatError(str(exc)) from None


def emit_hg(h: Hypergraph) -> str:
    out = [f"{h.n} {h.m}"]
    out.extend(" ".join(map(str, e)) if e else "-" for e in h.edges)
    return "\n".join(out) + "\n"


def read_hg(path) -> Hypergraph:
    return parse_hg(Path(path).read_text())


def write_hg(h: Hypergraph, path) -> None:
    Path(path).write_text(emit_hg(h))


def matrix_to_json(mat: RationalMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in mat.row(i)] for i in range(mat.rows)]


def matrix_from_json(rows, size: int) -> RationalMatrix:
    if len(rows) != size or any(len(r) != size for r in rows):
        raise FormatError(f"witness block must be {size}x{size}")
    return RationalMatrix.from_rows([[parse_rational(str(x)) for x in r] for r in rows], size)


def witness_to_dict(w) -> dict:
    return {"n": w.S1.rows, "m": w.S2.rows, "S1": matrix_to_json(w.S1), "S2": matrix_to_json(w.S2)}


def witness_from_dict(doc: dict):
    from .iso import IsoWitness

    try:
        n, m = int(doc["n"]), int(doc["m"])
        return IsoWitness(matrix_from_json(doc["S1"], n), matrix_from_json(doc["S2"], m))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed witness document: {exc}") from None


def write_witness(w, path) -> None:
    Path(path).write_text(json.dumps(witness_to_dict(w), indent=1) + "\n")


def read_witness(path):
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"witness file is not JSON: {exc}") from None
    return witness_from_dict(doc)
