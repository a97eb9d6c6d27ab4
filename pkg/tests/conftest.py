import itertools
import random

import networkx as nx
import pytest

from girthsig import families
from girthsig.graph import MultiGraph


def to_nx(g: MultiGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.ends)
    return h


def naive_girth_and_eps(g: MultiGraph):
    """Shortest-cycle length and per-edge counts by exhaustive search.

    Enumerates every simple cycle (as an edge set) by unpruned DFS over edge
    ids, which also handles parallel edges; meant for tiny graphs only.
    """
    inc = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.ends):
        inc[u].append((e, v))
        if u != v:
            inc[v].append((e, u))
    cycles = set()
    for e, (u, v) in enumerate(g.ends):
        if u == v:
            cycles.add(frozenset([e]))
    for s in range(g.n):
        stack = [(s, (s,), ())]
        while stack:
            x, verts, edges = stack.pop()
            for e, y in inc[x]:
                if e in edges or g.ends[e][0] == g.ends[e][1]:
                    continue
                if y == s and len(edges) >= 1:
                    cycles.add(frozenset(edges + (e,)))
                elif y not in verts and y > s:
                    stack.append((y, verts + (y,), edges + (e,)))
    if not cycles:
        return None, [0] * g.m
    gg = min(len(c) for c in cycles)
    eps = [0] * g.m
    for c in cycles:
        if len(c) == gg:
            for e in c:
                eps[e] += 1
    return gg, eps


def random_cubic(n: int, rng: random.Random) -> MultiGraph:
    h = nx.random_regular_graph(3, n, seed=rng.randrange(2**31))
    return MultiGraph(n, sorted(h.edges()))


def random_multigraph(rng: random.Random, max_n: int = 8, max_m: int = 14) -> MultiGraph:
    n = rng.randint(1, max_n)
    m = rng.randint(0, max_m)
    return MultiGraph(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])


def shuffled(g: MultiGraph, rng: random.Random) -> MultiGraph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    ends = [(perm[u], perm[v]) for u, v in g.ends]
    rng.shuffle(ends)
    return MultiGraph(g.n, ends)


def small_corpus():
    """Named small graphs (at most 16 vertices) for oracle comparisons."""
    out = {
        "K4": families.complete_graph(4),
        "K33": families.complete_bipartite(3, 3),
        "K5": families.complete_graph(5),
        "Petersen": families.named_graph("Petersen"),
        "Heawood": families.named_graph("Heawood"),
        "MoebiusKantor": families.named_graph("MoebiusKantor"),
        "cube": families.gp(4, 1),
        "prism5": families.gp(5, 1),
        "gp(7,2)": families.gp(7, 2),
        "gp(8,3)": families.gp(8, 3),
        "C7": families.cycle_graph(7),
        "sdw(1)": families.sdw(1),
        "sdw(2)": families.sdw(2),
        "sigma(2)": families.sigma(2),
        "delta(1)": families.delta(1),
        "delta(2)": families.delta(2),
        "theta": MultiGraph(2, [(0, 1), (0, 1), (0, 1)]),
        "loop+edge": MultiGraph(2, [(0, 0), (0, 1), (1, 1)]),
    }
    for n in range(3, 9):
        out[f"psi({n})"] = families.psi(n)
    rng = random.Random(7)
    for i, n in enumerate([8, 10, 12, 14, 16, 16]):
        out[f"random-cubic-{i}"] = random_cubic(n, rng)
    return out


@pytest.fixture(scope="session")
def small_graphs():
    return small_corpus()


def cubic_corpus():
    """Cubic graphs used by the law and identity sweeps."""
    out = {}
    for n in range(7, 41):
        out[f"psi({n})"] = families.psi(n)
    for n in range(3, 21):
        out[f"sigma({n})"] = families.sigma(n)
        out[f"delta({n})"] = families.delta(n)
    for name in families.NAMED_GRAPHS:
        out[name] = families.named_graph(name)
    out["gl23"] = families.gl23_cayley()
    for n, k in [(5, 2), (7, 2), (8, 3), (10, 2), (10, 3), (12, 5), (13, 5), (24, 5)]:
        out[f"gp({n},{k})"] = families.gp(n, k)
    rng = random.Random(11)
    for i, n in enumerate([10, 14, 20, 26, 32, 40, 50, 64]):
        out[f"random-cubic-{i}"] = random_cubic(n, rng)
    return out


@pytest.fixture(scope="session")
def cubic_graphs():
    return cubic_corpus()
