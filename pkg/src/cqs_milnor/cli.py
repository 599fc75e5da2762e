"""Command-line front end.

Subcommands print compact JSON on stdout (``graph --format dot`` prints
Graphviz DOT).  Exit codes: 0 success, 1 validation error, 2 usage error;
errors are one JSON line ``{"error": ..., "reason": ...}`` on stderr.

    cqs-milnor hj 4 1
    cqs-milnor components 4 1
    cqs-milnor report 4 1 [k ...]
    cqs-milnor graph 4 1 1 2 1 --format dot
    cqs-milnor reduce -- 2 1 2
    cqs-milnor recognize -- -2 -2 -2
    cqs-milnor verify --max-n 10
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .chains import enumerate_components, is_component_chain
from .milnor import all_reports, homotopy_description, milnor_link_graph, milnor_report
from .plumbing import (
    LensSpace,
    NotRecognized,
    PlumbingGraph,
    linear_chain,
    recognize_lens,
    reduce,
)
from .quotient import QuotientSingularity, embedding_dimension, hj_data, invariant_exponents
from .verify import verify

__all__ = ["run", "main", "export_dot", "graph_to_json"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _node_token(label) -> str:
    if isinstance(label, tuple):
        text = "_".join(str(x) for x in label)
    else:
        text = str(label)
    return re.sub(r"[^A-Za-z0-9_]", "_", text)


def export_dot(G: PlumbingGraph) -> str:
    """Undirected DOT text; vertices ``v<id>``, arrows as point nodes ``arr_<label>``."""
    lines = ["graph plumbing {"]
    for v, w in G.weights.items():
        lines.append(f'  v{v} [label="{w}"];')
    arrows = sorted(G.arrows, key=lambda a: (a[0], repr(a[1])))
    for _, label in arrows:
        lines.append(f"  arr_{_node_token(label)} [shape=point];")
    for u, v in G.edges:
        lines.append(f"  v{u} -- v{v};")
    for v, label in arrows:
        lines.append(f"  v{v} -- arr_{_node_token(label)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(G: PlumbingGraph) -> dict:
    def plain(label):
        return list(label) if isinstance(label, tuple) else label

    return {
        "vertices": [{"id": v, "weight": w} for v, w in G.weights.items()],
        "edges": [list(e) for e in G.edges],
        "arrows": [
            {"vertex": v, "label": plain(label)}
            for v, label in sorted(G.arrows, key=lambda a: (a[0], repr(a[1])))
        ],
    }


def _recognition_json(res) -> dict:
    if isinstance(res, LensSpace):
        return {"type": "lens", "n": res.n, "q": res.q}
    if isinstance(res, NotRecognized):
        return {"type": "not_recognized", "reason": res.reason}
    return {"type": "s1xs2"}


def _singularity(args) -> QuotientSingularity:
    return QuotientSingularity(args.n, args.q)


def _component(X: QuotientSingularity, k: Sequence[int]) -> tuple[int, ...]:
    k = tuple(k)
    if not is_component_chain(k, hj_data(X)):
        raise ValueError(f"k={list(k)} is not a component chain of {X} (a={list(hj_data(X))})")
    return k


def _cmd_hj(args):
    X = _singularity(args)
    return _dumps({"n": X.n, "q": X.q, "a": list(hj_data(X)), "e": embedding_dimension(X)})


def _cmd_invariants(args):
    X = _singularity(args)
    return _dumps({"n": X.n, "q": X.q, "exponents": [list(p) for p in invariant_exponents(X)]})


def _cmd_components(args):
    X = _singularity(args)
    return _dumps({"components": [list(k) for k in enumerate_components(X)]})


def _report_json(rep) -> dict:
    out = rep.as_dict()
    out["homotopy"] = {str(d): c for d, c in homotopy_description(rep)["cells"].items()}
    return out


def _cmd_report(args):
    X = _singularity(args)
    if args.k:
        return _dumps(_report_json(milnor_report(X, _component(X, args.k))))
    return _dumps({"n": X.n, "q": X.q, "reports": [_report_json(r) for r in all_reports(X)]})


def _cmd_graph(args):
    X = _singularity(args)
    k = _component(X, args.k)
    G = milnor_link_graph(hj_data(X), k)
    if args.format == "dot":
        return export_dot(G).rstrip("\n")
    return _dumps({"n": X.n, "q": X.q, "k": list(k), "graph": graph_to_json(G)})


def _cmd_reduce(args):
    R = reduce(linear_chain(args.weights))
    return _dumps({"input": list(args.weights), "reduced": list(R.as_chain()[0])})


def _cmd_recognize(args):
    return _dumps(_recognition_json(recognize_lens(linear_chain(args.weights))))


def _cmd_verify(args):
    summary = verify(args.max_n)
    args._failed = summary["failed"] > 0
    return _dumps(summary)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cqs-milnor", description="Milnor fibres of cyclic quotient singularities")
    p.add_argument("--output", "-o", help="write the result to this file instead of stdout")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def nq(sp):
        sp.add_argument("n", type=int)
        sp.add_argument("q", type=int)

    sp = sub.add_parser("hj", help="HJ data a = [n/(n-q)] and embedding dimension")
    nq(sp)
    sp.set_defaults(func=_cmd_hj)
    sp = sub.add_parser("invariants", help="exponents of the invariant monomials")
    nq(sp)
    sp.set_defaults(func=_cmd_invariants)
    sp = sub.add_parser("components", help="chains k <= a representing zero")
    nq(sp)
    sp.set_defaults(func=_cmd_components)
    sp = sub.add_parser("report", help="Milnor fibre report(s)")
    nq(sp)
    sp.add_argument("k", type=int, nargs="*")
    sp.set_defaults(func=_cmd_report)
    sp = sub.add_parser("graph", help="plumbing graph of M for component k")
    nq(sp)
    sp.add_argument("k", type=int, nargs="+")
    sp.add_argument("--format", choices=("json", "dot"), default="json")
    sp.set_defaults(func=_cmd_graph)
    sp = sub.add_parser("reduce", help="reduce a linear chain by blow-downs and 0-absorption")
    sp.add_argument("weights", type=int, nargs="+")
    sp.set_defaults(func=_cmd_reduce)
    sp = sub.add_parser("recognize", help="recognise a linear chain as a lens space")
    sp.add_argument("weights", type=int, nargs="+")
    sp.set_defaults(func=_cmd_recognize)
    sp = sub.add_parser("verify", help="run the self-check suites")
    sp.add_argument("--max-n", type=int, default=10)
    sp.set_defaults(func=_cmd_verify)
    return p


def _fail(kind: str, reason: str, code: int) -> int:
    print(_dumps({"error": kind, "reason": " ".join(reason.split())}), file=sys.stderr)
    return code


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail("usage", str(exc), 2)
    try:
        text = args.func(args)
    except ValueError as exc:
        return _fail("validation", str(exc), 1)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 1 if getattr(args, "_failed", False) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
