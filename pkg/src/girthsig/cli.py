"""Command-line interface: ``girthsig VERB ...``.

Exit status: 0 ok, 2 usage or parse error, 3 resource limit, 4 a
vertex-transitive girth-6 cubic graph that fits no case of the classification.
Input is graph6 lines or JSON documents, read from files or stdin.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from . import families
from .automorphisms import automorphism_group, find_isomorphism, transitivity
from .classify import ClassificationResult, classify, survey
from .errors import GraphError, PreconditionError, ResourceLimitError
from .girth import arc_type, girth_report
from .graph import is_simple, regular_degree
from .io import GraphDocument, ParseError, dumps_document, read_documents, to_graph6
from .schemes import contract_girth_cycles, random_scheme, truncate
from .search import DEFAULT_NODE_CAP

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_ANOMALY = 0, 2, 3, 4


class UsageError(Exception):
    pass


# parameters -------------------------------------------------------------------


def parse_range(text: str) -> list[int]:
    """``"7"``, ``"7..12"`` (inclusive) or a comma list of either."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                a, b = int(lo), int(hi)
                if b < a:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(a, b + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"not an integer or range: {part!r}") from None
    return out


def _ints(text: str, count: int, what: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be {count} comma-separated integers") from None
    if len(vals) != count:
        raise UsageError(f"{what} must be {count} comma-separated integers")
    return vals


def _generate(args) -> list[GraphDocument]:
    fam = args.family.lower()
    params = args.params
    try:
        if fam in ("psi", "sigma", "delta", "sdw"):
            if len(params) != 1:
                raise UsageError(f"gen {fam} takes one parameter (n or a range like 7..12)")
            fn = getattr(families, fam)
            return [GraphDocument(fn(n), name=f"{fam}({n})") for n in parse_range(params[0])]
        if fam == "gp":
            if len(params) != 2:
                raise UsageError("gen gp takes n and k")
            docs = []
            for n in parse_range(params[0]):
                for k in parse_range(params[1]):
                    docs.append(GraphDocument(families.gp(n, k), name=f"gp({n},{k})"))
            return docs
        if fam == "named":
            if not params:
                raise UsageError("gen named takes one or more graph names")
            return [GraphDocument(families.named_graph(p), name=p) for p in params]
        if fam == "gl23":
            return [GraphDocument(families.gl23_cayley(), name="Cay(GL(2,3))")]
        if fam == "hex-torus":
            from .torus import hex_torus

            if args.basis is None:
                raise UsageError("gen hex-torus needs --basis a,b,c,d")
            basis = _ints(args.basis, 4, "--basis")
            return [GraphDocument.of(hex_torus(basis), name=f"hex-torus({args.basis})")]
        if fam == "truncations":
            from .corpus import random_truncation_instances

            count = int(params[0]) if params else 10
            insts = random_truncation_instances(count, seed=args.seed)
            return [GraphDocument(i.base, i.scheme, name=i.name) for i in insts]
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    except (PreconditionError, GraphError) as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown family {args.family!r}; choose psi, sigma, delta, sdw, gp, named, "
                     "gl23, hex-torus or truncations")


# input/output -------------------------------------------------------------------


def _read_inputs(paths: Sequence[str]) -> list[GraphDocument]:
    docs: list[GraphDocument] = []
    if not paths or paths == ["-"]:
        docs.extend(read_documents(sys.stdin))
        return docs
    for p in paths:
        if p == "-":
            docs.extend(read_documents(sys.stdin))
            continue
        try:
            with open(p, encoding="utf-8") as fh:
                docs.extend(read_documents(fh))
        except OSError as exc:
            raise UsageError(f"cannot read {p}: {exc.strerror}") from None
        except ParseError as exc:
            raise ParseError(f"{p}: {exc}") from None
    return docs


def _emit_graphs(docs: Iterable[GraphDocument], fmt: str) -> None:
    out = sys.stdout
    for d in docs:
        if fmt == "graph6":
            try:
                out.write(to_graph6(d.graph) + "\n")
            except GraphError as exc:
                raise UsageError(f"{exc}") from None
        else:
            out.write(dumps_document(d) + "\n")


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n")


def _note(args, text: str) -> None:
    if not args.quiet:
        sys.stderr.write(text + "\n")


def _batch(fn: Callable, items: list, workers: int) -> list:
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _girth_json(g):
    return None if g == math.inf else g


# analyses -------------------------------------------------------------------------


def analyze_graph(item) -> dict:
    g, name = item
    rep = girth_report(g)
    sig = rep.signature
    out = {
        "n": g.n,
        "m": g.m,
        "girth": _girth_json(rep.girth),
        "girth_cycles": rep.cycle_count,
        "signature": list(sig.signature) if sig.signature is not None else None,
        "girth_regular": sig.girth_regular,
        "girth_edge_regular": sig.girth_edge_regular,
        "eps_histogram": {str(k): v for k, v in sorted(Counter(rep.eps).items())},
    }
    if not sig.girth_regular:
        out["vertex_signatures"] = {",".join(map(str, s)): c for s, c in sorted(sig.distribution.items())}
    if rep.acyclic:
        out["advisory"] = "acyclic: girth is infinite"
    if regular_degree(g) == 3 and is_simple(g) and rep.girth == 6:
        types = Counter()
        symmetric = 0
        for a in g.arcs():
            t = arc_type(g, a, rep.eps)
            types[(t.type_uv, t.type_vu)] += 1
            symmetric += t.symmetric
        out["arc_types"] = [{"T_uv": [list(x) for x in k[0]], "T_vu": [list(x) for x in k[1]], "arcs": c}
                            for k, c in sorted(types.items())]
        out["symmetric_arcs"] = symmetric
    if name:
        out["name"] = name
    return out


def _human_analysis(rep: dict) -> str:
    g = "inf" if rep["girth"] is None else rep["girth"]
    sig = tuple(rep["signature"]) if rep["signature"] is not None else "not girth-regular"
    hist = " ".join(f"{k}:{v}" for k, v in rep["eps_histogram"].items())
    head = f"{rep.get('name') or 'graph'}: n={rep['n']} m={rep['m']} girth={g} signature={sig}"
    return head + f"\n  eps histogram {hist}" + (f"\n  {rep['advisory']}" if "advisory" in rep else "")


def _classify_item(item):
    g, cap = item
    return classify(g.without_labels(), cap)


def _result_json(r: ClassificationResult, name) -> dict:
    out = {"outcome": r.outcome, "case": r.case,
           "signature": list(r.signature) if r.signature is not None else None,
           "aut_order": r.aut_order, "summary": r.summary()}
    for attr in ("family", "n", "ell", "scheme_arc_transitive", "reason", "detail"):
        if hasattr(r, attr):
            out[attr] = getattr(r, attr)
    if hasattr(r, "label"):
        out["label"] = r.label
    if getattr(r, "base", None) is not None:
        out["base"] = json.loads(dumps_document(GraphDocument(r.base, r.scheme)))
    if name:
        out["name"] = name
    return out


def _aut_item(item):
    g, cap = item
    grp = automorphism_group(g, cap)
    tr = transitivity(g, grp)
    return {"n": g.n, "order": grp.order, "generators": [list(p) for p in grp.generators],
            "vertex_orbits": tr.vertex_orbits, "edge_orbits": tr.edge_orbits, "arc_orbits": tr.arc_orbits,
            "vertex_transitive": tr.vertex_transitive, "edge_transitive": tr.edge_transitive,
            "arc_transitive": tr.arc_transitive}


# verbs -------------------------------------------------------------------------------


def cmd_gen(args) -> int:
    _emit_graphs(_generate(args), args.format)
    return EXIT_OK


def cmd_analyze(args) -> int:
    docs = _read_inputs(args.inputs)
    reports = _batch(analyze_graph, [(d.graph, d.name) for d in docs], args.workers)
    for rep in reports:
        _emit_json(rep)
        _note(args, _human_analysis(rep))
    return EXIT_OK


def cmd_classify(args) -> int:
    docs = _read_inputs(args.inputs)
    results = _batch(_classify_item, [(d.graph, args.cap) for d in docs], args.workers)
    status = EXIT_OK
    for d, r in zip(docs, results):
        _emit_json(_result_json(r, d.name))
        _note(args, f"{d.name or 'graph'}: {r.summary()}")
        if r.anomaly:
            status = EXIT_ANOMALY
    return status


def cmd_truncate(args) -> int:
    rng = random.Random(args.seed)
    out = []
    for d in _read_inputs(args.inputs):
        scheme = d.scheme
        if scheme is None:
            scheme = random_scheme(d.graph, rng)
            _note(args, f"{d.name or 'graph'}: no scheme given, using a random scheme (seed {args.seed})")
        try:
            out.append(GraphDocument(truncate(d.graph, scheme), name=d.name and f"Tr({d.name})"))
        except (GraphError, PreconditionError) as exc:
            raise UsageError(str(exc)) from None
    _emit_graphs(out, args.format)
    return EXIT_OK


def cmd_contract(args) -> int:
    out = []
    for d in _read_inputs(args.inputs):
        try:
            con = contract_girth_cycles(d.graph.without_labels())
        except PreconditionError as exc:
            raise UsageError(str(exc)) from None
        out.append(GraphDocument(con.base, con.scheme, name=d.name and f"base({d.name})"))
    fmt = "doc" if args.format == "graph6" and not all(is_simple(d.graph) for d in out) else args.format
    if fmt != args.format:
        _note(args, "contracted bases have parallel edges; writing documents instead of graph6")
    _emit_graphs(out, fmt)
    return EXIT_OK


def cmd_aut(args) -> int:
    docs = _read_inputs(args.inputs)
    for d, res in zip(docs, _batch(_aut_item, [(d.graph, args.cap) for d in docs], args.workers)):
        if d.name:
            res["name"] = d.name
        _emit_json(res)
        _note(args, f"{d.name or 'graph'}: |Aut| = {res['order']}, vertex-transitive={res['vertex_transitive']}, "
                    f"arc-transitive={res['arc_transitive']}")
    return EXIT_OK


def cmd_iso(args) -> int:
    docs = _read_inputs(args.inputs)
    if len(docs) != 2:
        raise UsageError(f"iso needs exactly two graphs, got {len(docs)}")
    a, b = (d.graph.without_labels() for d in docs)
    w = find_isomorphism(a, b, args.cap)
    _emit_json({"isomorphic": w is not None, "witness": list(w) if w is not None else None})
    _note(args, "isomorphic" if w is not None else "not isomorphic")
    return EXIT_OK


def cmd_survey(args) -> int:
    docs = _read_inputs(args.inputs)
    table = survey([d.graph.without_labels() for d in docs], workers=args.workers, cap=args.cap)
    sys.stdout.write(table.render() + "\n")
    return EXIT_OK


# parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("graph6", "doc"), default="doc",
                        help="graph output format (default: doc)")
    common.add_argument("--seed", type=int, default=0, help="seed for any randomness (default: 0)")
    common.add_argument("--cap", type=int, default=DEFAULT_NODE_CAP, help="search-tree node budget")
    common.add_argument("--quiet", action="store_true", help="suppress human-readable notes on stderr")
    common.add_argument("--workers", type=int, default=1, help="processes for batch work (default: 1)")

    p = argparse.ArgumentParser(prog="girthsig", description="Girth signatures of cubic graphs.")
    sub = p.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate graphs")
    g.add_argument("family")
    g.add_argument("params", nargs="*")
    g.add_argument("--basis", help="hex-torus lattice basis a,b,c,d")
    g.set_defaults(func=cmd_gen)

    for verb, fn, helptext in [
        ("analyze", cmd_analyze, "girth, eps table, signature and arc types"),
        ("classify", cmd_classify, "classify cubic vertex-transitive girth-6 graphs"),
        ("truncate", cmd_truncate, "truncate graphs by their scheme"),
        ("contract", cmd_contract, "contract the girth cycles of (0,1,1) graphs"),
        ("aut", cmd_aut, "automorphism group order and transitivity"),
        ("iso", cmd_iso, "isomorphism test for two graphs"),
        ("survey", cmd_survey, "tally graphs by girth and signature"),
    ]:
        sp = sub.add_parser(verb, parents=[common], help=helptext)
        sp.add_argument("inputs", nargs="*", help="files of graph6 lines or documents (default: stdin)")
        sp.set_defaults(func=fn)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        sys.stderr.write(f"girthsig {args.verb}: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        sys.stderr.write(f"girthsig {args.verb}: resource limit: {exc}\n")
        return EXIT_RESOURCE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
