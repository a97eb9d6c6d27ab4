"""Graph generators: Cayley graphs, the three dihedral families, SDW(n, 3),
generalized Petersen graphs, LCF graphs and a catalogue of named cubic graphs.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

from .errors import PreconditionError
from .graph import MultiGraph, simple_graph
from .groups import (
    DP3Element,
    GroupTable,
    dihedral_group,
    dihedral_z3_group,
    matrix_group,
    tau,
)

__all__ = [
    "cayley",
    "cayley_walk",
    "psi",
    "sigma",
    "delta",
    "psi_connection",
    "sigma_connection",
    "delta_connection",
    "psi_face_word",
    "sigma_face_word",
    "delta_face_word",
    "sdw",
    "sigma_to_sdw",
    "gp",
    "lcf",
    "complete_graph",
    "complete_bipartite",
    "cycle_graph",
    "gl23_connection",
    "gl23_cayley",
    "NAMED_GRAPHS",
    "named_graph",
]


def _connection_indices(group: GroupTable, connection) -> list[int]:
    idx = []
    for s in connection:
        try:
            idx.append(group.index(s))
        except KeyError:
            raise PreconditionError(f"connection element {s!r} is not in the group") from None
    return idx


def cayley(group: GroupTable, connection: Sequence) -> MultiGraph:
    """Cay(G, S): vertices are group elements, ``g ~ h`` iff ``g h^-1`` in S.

    ``connection`` lists group elements.  Vertex ``i`` is ``group.elements[i]``
    and the graph keeps the elements as vertex labels.
    """
    S = _connection_indices(group, connection)
    Sset = set(S)
    if len(Sset) != len(S):
        raise PreconditionError("connection set has repeated elements")
    if group.identity in Sset:
        raise PreconditionError("connection set contains the identity")
    bad = [group.elements[s] for s in S if group.inverse[s] not in Sset]
    if bad:
        raise PreconditionError(f"connection set is not inverse-closed: {bad!r} lack inverses")
    pairs = []
    for g in range(group.order):
        for s in S:
            # g h^-1 = s  <=>  h = s^-1 g
            h = group.mul[group.inverse[s]][g]
            if g < h:
                pairs.append((g, h))
    return simple_graph(group.order, pairs, labels=group.elements)


def cayley_walk(group: GroupTable, start: int, word: Sequence) -> list[int]:
    """Vertices visited from ``start`` when following the arcs named by ``word``.

    The arc from ``g`` labelled ``s`` ends at ``s^-1 g``.
    """
    seq = [start]
    g = start
    for s in _connection_indices(group, word):
        g = group.mul[group.inverse[s]][g]
        seq.append(g)
    return seq


# the three families --------------------------------------------------------


def psi_connection(n: int):
    return [tau(0, n), tau(1, n), tau(3, n)]


def psi_face_word(n: int):
    return psi_connection(n) * 2


def psi(n: int) -> MultiGraph:
    """Cay(D_n, {tau_0, tau_1, tau_3}), order 2n."""
    if n < 1:
        raise PreconditionError("psi(n) needs n >= 1")
    return cayley(dihedral_group(n), list(dict.fromkeys(psi_connection(n))))


def delta_connection(n: int):
    k = 3 // gcd(3, n)
    return [tau(0, 3 * n), tau(k, 3 * n), tau(n, 3 * n)]


def delta_face_word(n: int):
    return delta_connection(n) * 2


def delta(n: int) -> MultiGraph:
    """Cay(D_3n, {tau_0, tau_k, tau_n}) with k = 3/gcd(3, n), order 6n."""
    if n < 1:
        raise PreconditionError("delta(n) needs n >= 1")
    return cayley(dihedral_group(3 * n), list(dict.fromkeys(delta_connection(n))))


def sigma_connection(n: int):
    return [DP3Element(tau(1, n), 0), DP3Element(tau(0, n), 1), DP3Element(tau(0, n), 2)]


def sigma_face_word(n: int):
    t10, t0p, t0m = sigma_connection(n)
    return [t0p, t0p, t10, t0m, t0m, t10]


def sigma(n: int) -> MultiGraph:
    """Cay(D_n x Z_3, {tau_1^0, tau_0^+, tau_0^-}), order 6n."""
    if n < 1:
        raise PreconditionError("sigma(n) needs n >= 1")
    return cayley(dihedral_z3_group(n), list(dict.fromkeys(sigma_connection(n))))


def sdw(n: int) -> MultiGraph:
    """Split depleted wreath graph SDW(n, 3) on Z_n x Z_3 x Z_2.

    Vertex ``(i, u, b)`` has index ``6i + 2u + b``.
    """
    if n < 1:
        raise PreconditionError("sdw(n) needs n >= 1")

    def idx(i, u, b):
        return 6 * (i % n) + 2 * (u % 3) + b

    pairs = []
    for i in range(n):
        for u in range(3):
            pairs.append((idx(i, u, 0), idx(i, u + 1, 1)))
            pairs.append((idx(i, u, 0), idx(i, u - 1, 1)))
            pairs.append((idx(i, u, 1), idx(i + 1, u, 0)))
    labels = [(i, u, b) for i in range(n) for u in range(3) for b in range(2)]
    return simple_graph(6 * n, pairs, labels=labels)


def sigma_to_sdw(n: int, literal: bool = False) -> list[int]:
    """Vertex isomorphism Sigma_n -> SDW(n, 3) as an index list.

    The map (rho_i, u) -> (i, u, 1), (tau_i, u) -> (i, u, 0) is an isomorphism
    for the right-multiplication Cayley graph (g ~ g s).  Our Cayley graphs
    join g to s g, so by default the map is applied to g^-1, which gives
    (rho_i, u) -> (-i, -u, 1) and (tau_i, u) -> (i, -u, 0).  ``literal=True``
    returns the unadjusted map.
    """
    G = dihedral_z3_group(n)
    perm = []
    for k, x in enumerate(G.elements):
        y = x if literal else G.elements[G.inverse[k]]
        d, u = y.dihedral, y.z
        perm.append(6 * d.index + 2 * u + (0 if d.reflection else 1))
    return perm


# classical constructions ---------------------------------------------------


def gp(n: int, k: int) -> MultiGraph:
    """Generalized Petersen graph: outer cycle 0..n-1, spokes, inner star polygon."""
    if n < 3 or not (1 <= k and 2 * k < n):
        raise PreconditionError("gp(n, k) needs n >= 3 and 1 <= k < n/2")
    pairs = []
    for i in range(n):
        pairs.append((i, (i + 1) % n))
        pairs.append((i, n + i))
        pairs.append((n + i, n + (i + k) % n))
    return simple_graph(2 * n, pairs)


def lcf(n: int, shifts: Sequence[int], repeats: int = 1) -> MultiGraph:
    """Hamiltonian cubic graph from LCF notation ``[shifts]^repeats``."""
    seq = list(shifts) * repeats
    if len(seq) != n:
        raise PreconditionError("LCF sequence length must equal the vertex count")
    pairs = [(i, (i + 1) % n) for i in range(n)]
    pairs += [(i, (i + s) % n) for i, s in enumerate(seq)]
    return simple_graph(n, pairs)


def complete_graph(n: int) -> MultiGraph:
    return simple_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return simple_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle_graph(n: int) -> MultiGraph:
    return simple_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gl23_connection():
    """The three 2x2 matrices over GF(3) of the girth-8 Cayley graph."""
    return [((0, 1), (1, 0)), ((1, 2), (2, 0)), ((0, 2), (2, 2))]


def gl23_cayley() -> MultiGraph:
    """Cay(GL(2,3), S) for the connection set above (48 vertices).

    The group is the closure of S under multiplication mod 3; S is already
    inverse-closed (the first matrix is an involution, the other two are
    mutually inverse), which :func:`cayley` checks.
    """
    S = gl23_connection()
    group = matrix_group(S, 3)
    return cayley(group, S)


def _coxeter() -> MultiGraph:
    # Z_7 x {a, b, c, d}: d_i joins a_i, b_i, c_i; a, b, c run around
    # 7-cycles with steps 1, 2, 3.
    pairs = []
    for i in range(7):
        a, b, c, d = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        pairs += [(d, a), (d, b), (d, c)]
        pairs.append((a, 4 * ((i + 1) % 7)))
        pairs.append((b, 4 * ((i + 2) % 7) + 1))
        pairs.append((c, 4 * ((i + 3) % 7) + 2))
    return simple_graph(28, pairs)


def _biggs_smith() -> MultiGraph:
    # 17 "H" units (centres x_j ~ y_j); the four leaves of unit j lie on
    # 17-cycles of steps 1, 4 (hanging off x_j) and 2, 8 (off y_j).
    pairs = []
    steps = (1, 4, 2, 8)

    def v(kind, j):
        return 6 * (j % 17) + kind

    for j in range(17):
        pairs.append((v(0, j), v(1, j)))
        pairs += [(v(0, j), v(2, j)), (v(0, j), v(3, j))]
        pairs += [(v(1, j), v(4, j)), (v(1, j), v(5, j))]
        for t, step in enumerate(steps):
            pairs.append((v(2 + t, j), v(2 + t, j + step)))
    return simple_graph(102, pairs)


def _tutte_coxeter() -> MultiGraph:
    # incidence graph of duads and synthemes of a 6-set
    from itertools import combinations

    duads = list(combinations(range(6), 2))
    synthemes = []
    for a, b in duads:
        if a != 0:
            continue
        rest = [x for x in range(6) if x not in (a, b)]
        c = rest[0]
        for d in rest[1:]:
            e, f = [x for x in rest if x not in (c, d)]
            synthemes.append(frozenset([(a, b), (c, d), (e, f)]))
    pairs = []
    for j, syn in enumerate(synthemes):
        for du in syn:
            pairs.append((duads.index(du), 15 + j))
    return simple_graph(30, pairs)


_TUTTE_12_CAGE_LCF = [17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17]

NAMED_GRAPHS = {
    "K4": lambda: complete_graph(4),
    "K33": lambda: complete_bipartite(3, 3),
    "Petersen": lambda: gp(5, 2),
    "Heawood": lambda: lcf(14, [5, -5], 7),
    "MoebiusKantor": lambda: lcf(16, [5, -5], 8),
    "Pappus": lambda: lcf(18, [5, 7, -7, 7, -7, -5], 3),
    "Desargues": lambda: lcf(20, [5, -5, 9, -9], 5),
    "Coxeter": _coxeter,
    "TutteCoxeter": _tutte_coxeter,
    "BiggsSmith": _biggs_smith,
    "Tutte12Cage": lambda: lcf(126, _TUTTE_12_CAGE_LCF, 7),
}

_ALIASES = {k.lower(): k for k in NAMED_GRAPHS}
_ALIASES.update({"k3,3": "K33", "k_4": "K4", "mobiuskantor": "MoebiusKantor", "tutte8cage": "TutteCoxeter"})


def named_graph(name: str) -> MultiGraph:
    key = _ALIASES.get(name.lower().replace("-", "").replace("_", "").replace(" ", ""), name)
    if key not in NAMED_GRAPHS:
        raise KeyError(f"unknown graph {name!r}; valid names: {', '.join(NAMED_GRAPHS)}")
    return NAMED_GRAPHS[key]()
