"""The nine acceptance criteria, each printing one PASS/FAIL line."""

import random
import time

import pytest

from conftest import cubic_corpus, naive_girth_and_eps, random_cubic, random_multigraph, small_corpus
from girthsig import families
from girthsig.automorphisms import are_isomorphic, automorphism_group, canonical_label, scheme_automorphisms, transitivity
from girthsig.classify import (
    DesarguesGraph,
    TorusMapSkeleton,
    TruncatedSixRegular,
    TruncatedTriangulation,
    classify,
)
from girthsig.corpus import generic_hex_tori, random_truncation_instances, truncated_triangle_maps
from girthsig.girth import check_signature_laws, edge_girth_counts, girth_cycles, girth_report
from girthsig.schemes import contract_girth_cycles


@pytest.fixture
def report(capsys):
    def emit(number, title, failures, elapsed, limit=None):
        ok = not failures and (limit is None or elapsed < limit)
        budget = f" (limit {limit:.0f}s)" if limit else ""
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} [{elapsed:.2f}s{budget}]"
        if failures:
            line += " :: " + "; ".join(failures[:5])
        with capsys.disabled():
            print("\n" + line)
        assert not failures, failures
        assert limit is None or elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"

    return emit


def sig(g):
    return girth_report(g).signature.signature


def test_criterion_1_family_signatures(report):
    t = time.perf_counter()
    bad = []
    expect = {7: (8, 8, 8), 8: (6, 6, 6), 9: (4, 5, 5)}
    for n in range(7, 41):
        want = expect.get(n, (3, 4, 5))
        if sig(families.psi(n)) != want:
            bad.append(f"psi({n})")
    if sig(families.sigma(3)) != (4, 4, 4):
        bad.append("sigma(3)")
    if sig(families.delta(3)) != (4, 5, 5):
        bad.append("delta(3)")
    for n in range(4, 21):
        for name, fn in (("sigma", families.sigma), ("delta", families.delta)):
            if sig(fn(n)) != (2, 3, 3):
                bad.append(f"{name}({n})")
    report(1, "family signatures", bad, time.perf_counter() - t, 10)


def test_criterion_2_automorphism_orders(report):
    t = time.perf_counter()
    cases = [(f"delta({n})", families.delta(n), 6 * n) for n in range(3, 13)]
    cases += [(f"sigma({n})", families.sigma(n), 12 * n) for n in range(4, 13)]
    cases += [("sigma(3)", families.sigma(3), 216), ("psi(7)", families.psi(7), 336), ("psi(8)", families.psi(8), 96)]
    cases += [(f"psi({n})", families.psi(n), 2 * n) for n in range(9, 21)]
    bad = []
    for name, g, want in cases:
        got = automorphism_group(g).order
        if got != want:
            bad.append(f"{name}: {got} != {want}")
    report(2, "automorphism orders", bad, time.perf_counter() - t, 60)


def test_criterion_3_named_isomorphisms(report):
    t = time.perf_counter()

    def same(a, b):
        return canonical_label(a).edges == canonical_label(b).edges

    bad = []
    if not same(families.psi(9), families.delta(3)):
        bad.append("psi(9) vs delta(3)")
    for n in range(3, 11):
        if not same(families.sigma(n), families.sdw(n)):
            bad.append(f"sigma({n}) vs sdw({n})")
    if not same(families.gp(8, 3), families.psi(8)):
        bad.append("gp(8,3) vs psi(8)")
    if not same(families.gp(10, 3), families.named_graph("Desargues")):
        bad.append("gp(10,3) vs Desargues")
    report(3, "named isomorphisms", bad, time.perf_counter() - t)


def test_criterion_4_extremal_graphs(report):
    t = time.perf_counter()
    bad = []
    for name, g_want in [("K4", 3), ("K33", 4), ("Petersen", 5), ("Heawood", 6), ("TutteCoxeter", 8), ("Tutte12Cage", 12)]:
        rep = girth_report(families.named_graph(name))
        cmax = 2 ** (g_want // 2)
        if rep.girth != g_want or rep.signature.signature != (cmax, cmax, cmax):
            bad.append(f"{name}: girth {rep.girth}, signature {rep.signature}")
    report(4, "extremal c = 2^floor(g/2)", bad, time.perf_counter() - t)


def test_criterion_5_table_rows(report):
    t = time.perf_counter()
    bad = []
    for name, g_want, s_want in [("Coxeter", 7, (4, 4, 4)), ("TutteCoxeter", 8, (16, 16, 16)), ("BiggsSmith", 9, (8, 8, 8))]:
        rep = girth_report(families.named_graph(name))
        if (rep.girth, rep.signature.signature) != (g_want, s_want):
            bad.append(f"{name}: {rep.girth} {rep.signature}")
    g = families.gl23_cayley()
    rep = girth_report(g)
    tr = transitivity(g)
    if (rep.girth, rep.signature.signature) != (8, (6, 6, 6)) or not tr.vertex_transitive or tr.arc_transitive:
        bad.append(f"GL(2,3) Cayley graph: {rep.girth} {rep.signature} {tr}")
    report(5, "table rows", bad, time.perf_counter() - t, 120)


def test_criterion_6_truncation_round_trips(report):
    t = time.perf_counter()
    bad = []
    insts = random_truncation_instances(20, seed=0)
    classified = 0
    for inst in insts:
        if inst.base.n > 12:
            bad.append(f"{inst.name}: base has {inst.base.n} vertices")
        tg = inst.truncation()
        rep = girth_report(tg)
        if rep.girth != 6:
            bad.append(f"{inst.name}: truncation girth {rep.girth}")
            continue
        con = contract_girth_cycles(tg)
        if not are_isomorphic(con.base, inst.base):
            bad.append(f"{inst.name}: recovered base differs")
        if rep.signature.signature == (0, 1, 1) and scheme_automorphisms(con.base, con.scheme).arc_transitive:
            classified += 1
            r = classify(tg)
            if not isinstance(r, TruncatedSixRegular):
                bad.append(f"{inst.name}: {r.summary()}")
    if classified == 0:
        bad.append("no instance had an arc-transitive recovered scheme")
    report(6, f"truncation round trips (20 instances, {classified} arc-transitive)", bad, time.perf_counter() - t)


def _law_corpus():
    out = dict(cubic_corpus())
    out.update({k: v for k, v in small_corpus().items()})
    for inst in random_truncation_instances(10, seed=1):
        out[inst.name] = inst.truncation()
    for basis, m in generic_hex_tori(5, seed=0):
        out[f"torus{basis}"] = m.graph
    for name, _, tm in truncated_triangle_maps(((7, True, 7), (7, False, 8))):
        out[name] = tm.graph
    rng = random.Random(2024)
    for i in range(60):
        out[f"random-cubic-acc-{i}"] = random_cubic(rng.choice([8, 12, 16, 20, 26, 32]), rng)
    return out


def test_criterion_7_signature_laws(report):
    t = time.perf_counter()
    bad = []
    corpus = _law_corpus()
    for name, g in corpus.items():
        rep = girth_report(g)
        if rep.acyclic or rep.girth in (1, 2):
            continue
        cubic = g.degrees() == [3] * g.n
        if sum(rep.eps) != rep.girth * rep.cycle_count:
            bad.append(f"{name}: sum eps")
        through = [0] * g.n
        for c in girth_cycles(g):
            for v in c:
                through[v] += 1
        for v in range(g.n):
            s = sum(rep.eps[a.edge] for a in g.out(v))
            if s != 2 * through[v]:
                bad.append(f"{name}: vertex {v} parity")
                break
        if not cubic:
            continue
        for vs in rep.signature.distribution:
            pv = check_signature_laws(vs, rep.girth)
            if not (pv.results["parity"] and pv.results["triangle"]):
                bad.append(f"{name}: local laws {vs}")
        if rep.signature.girth_regular:
            lr = check_signature_laws(rep.signature.signature, rep.girth)
            if not lr.ok:
                bad.append(f"{name}: {lr.violated}")
    report(7, f"signature laws on {len(corpus)} graphs", bad, time.perf_counter() - t)


def test_criterion_8_classifier_sweep(report):
    t = time.perf_counter()
    jobs = []
    for n in range(7, 26):
        want = {7: "Heawood", 8: "MoebiusKantor"}.get(n, f"Psi({n})")
        jobs.append((f"psi({n})", families.psi(n), ("a", want)))
    for n in range(3, 16):
        jobs.append((f"sigma({n})", families.sigma(n), ("a", "Pappus" if n == 3 else f"Sigma({n})")))
        jobs.append((f"delta({n})", families.delta(n), ("a", "Psi(9)" if n == 3 else f"Delta({n})")))
    jobs.append(("Desargues", families.named_graph("Desargues"), ("d", None)))
    for basis, m in generic_hex_tori(12, seed=0):
        jobs.append((f"hex-torus{basis}", m.graph.without_labels(), ("a", "GenericTorus")))
    for name, m, tm in truncated_triangle_maps():
        jobs.append((name, tm.graph, ("b", m.map_type[1])))
    truncs = random_truncation_instances(12, seed=0)
    for inst in truncs:
        want = ("c", None) if inst.arc_transitive_construction else ("-", "not-vertex-transitive")
        jobs.append((inst.name, inst.truncation(), want))
    bad = []
    anomalies = 0
    for name, g, (case, detail) in jobs:
        r = classify(g)
        anomalies += r.anomaly
        if case == "a":
            ok = isinstance(r, TorusMapSkeleton) and r.label == detail
        elif case == "b":
            ok = isinstance(r, TruncatedTriangulation) and r.ell == detail
        elif case == "c":
            ok = isinstance(r, TruncatedSixRegular) and r.scheme_arc_transitive
        elif case == "d":
            ok = isinstance(r, DesarguesGraph)
        else:
            ok = getattr(r, "reason", None) == detail
        if not ok:
            bad.append(f"{name}: {r.summary()}")
    if anomalies:
        bad.append(f"{anomalies} anomalies")
    n_c = sum(1 for i in truncs if i.arc_transitive_construction)
    report(8, f"classifier sweep ({len(jobs)} graphs, {n_c} of case c)", bad, time.perf_counter() - t, 600)


def test_criterion_9_oracle_equivalence(report):
    t = time.perf_counter()
    corpus = {k: g for k, g in small_corpus().items() if g.n <= 16}
    corpus.update({k: g for k, g in cubic_corpus().items() if g.n <= 16})
    rng = random.Random(99)
    for i in range(100):
        corpus[f"random-multigraph-{i}"] = random_multigraph(rng)
    bad = []
    for name, g in corpus.items():
        gg, naive = naive_girth_and_eps(g)
        if edge_girth_counts(g) != naive:
            bad.append(name)
    report(9, f"optimized eps equals naive enumeration on {len(corpus)} graphs", bad, time.perf_counter() - t)
