"""Map generators: hexagonal tori, torus embeddings of the dihedral families,
and orientably-regular maps built from a finite group.
"""

from __future__ import annotations

import random
from math import gcd
from typing import Sequence

from .errors import PreconditionError
from .families import (
    cayley,
    cayley_walk,
    delta_connection,
    delta_face_word,
    psi_connection,
    psi_face_word,
    sigma_connection,
    sigma_face_word,
)
from .graph import Arc, MultiGraph
from .groups import GroupTable, closure, dihedral_group, dihedral_z3_group
from .maps import CombMap, map_from_walks, walk_from_vertices
from .schemes import _canonical_cycle

__all__ = [
    "hermite_basis",
    "hex_torus",
    "cayley_face_map",
    "psi_map",
    "sigma_map",
    "delta_map",
    "regular_map",
    "projective_linear_group",
    "triangle_generators",
]


def _ext_gcd(a: int, b: int):
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def hermite_basis(basis: Sequence[int]) -> tuple[int, int, int]:
    """Lattice spanned by rows (p, q), (r, s) as ``(a, b, c)``: rows (a, b), (0, c)
    with a, c > 0 and 0 <= b < c."""
    p, q, r, s = basis
    det = p * s - q * r
    if det == 0:
        raise PreconditionError("basis vectors are linearly dependent (zero determinant)")
    g, x, y = _ext_gcd(p, r)
    row1 = (g, x * q + y * s)
    c = abs(det) // g
    return g, row1[1] % c, c


def hex_torus(basis: Sequence[int]) -> CombMap:
    """Hexagonal tessellation of the torus R^2 / L, L spanned by two vectors.

    Coordinates are those of the triangular lattice Z^2.  Black vertex
    B(x, y) is joined to the white vertices W(x, y), W(x-1, y), W(x, y-1); the
    face at (x, y) is B(x,y) W(x,y) B(x+1,y) W(x+1,y-1) B(x+1,y-1) W(x,y-1).
    The map has 2|det| vertices and |det| hexagonal faces.  Degenerate
    lattices whose quotient is not polyhedral raise :class:`GraphError`.
    """
    a, b, c = hermite_basis(basis)
    N = a * c

    def rep(x, y):
        k = x // a
        x -= k * a
        y -= k * b
        return x * c + (y % c)

    ends = []
    for x in range(a):
        for y in range(c):
            r = rep(x, y)
            blk = 2 * r
            ends.append((blk, 2 * rep(x, y) + 1))
            ends.append((blk, 2 * rep(x - 1, y) + 1))
            ends.append((blk, 2 * rep(x, y - 1) + 1))
    labels = [None] * (2 * N)
    for x in range(a):
        for y in range(c):
            r = rep(x, y)
            labels[2 * r] = ("B", x, y)
            labels[2 * r + 1] = ("W", x, y)
    g = MultiGraph(2 * N, ends, labels=labels)

    def e(x, y, t):
        return 3 * rep(x, y) + t

    faces = []
    for x in range(a):
        for y in range(c):
            faces.append((
                Arc(e(x, y, 0), 0),
                Arc(e(x + 1, y, 1), 1),
                Arc(e(x + 1, y, 2), 0),
                Arc(e(x + 1, y - 1, 0), 1),
                Arc(e(x + 1, y - 1, 1), 0),
                Arc(e(x, y, 2), 1),
            ))
    return map_from_walks(g, faces)


def cayley_face_map(group: GroupTable, connection, word) -> CombMap:
    """Map on Cay(G, S) whose faces follow ``word`` from every vertex."""
    g = cayley(group, connection)
    seen = set()
    faces = []
    for start in range(group.order):
        verts = cayley_walk(group, start, word)
        if verts[-1] != start:
            raise PreconditionError("face word does not multiply to the identity")
        cyc = verts[:-1]
        key = _canonical_cycle(cyc)
        if key in seen:
            continue
        seen.add(key)
        faces.append(walk_from_vertices(g, cyc))
    return map_from_walks(g, faces)


def psi_map(n: int) -> CombMap:
    """Psi_n on the torus with n hexagonal faces."""
    return cayley_face_map(dihedral_group(n), list(dict.fromkeys(psi_connection(n))), psi_face_word(n))


def sigma_map(n: int) -> CombMap:
    """Sigma_n on the torus with 3n hexagonal faces."""
    return cayley_face_map(dihedral_z3_group(n), sigma_connection(n), sigma_face_word(n))


def delta_map(n: int) -> CombMap:
    """Delta_n on the torus with 3n hexagonal faces."""
    return cayley_face_map(dihedral_group(3 * n), list(dict.fromkeys(delta_connection(n))), delta_face_word(n))


# regular maps --------------------------------------------------------------


def regular_map(group: GroupTable, rot: int, flip: int) -> CombMap:
    """Orientably-regular map with darts = group elements.

    ``rot`` (element index) turns a dart about its vertex and ``flip`` (an
    involution) reverses it.  Vertices are the cosets g<rot>, edges the pairs
    {g, g*flip}, and faces follow g -> g*flip*rot.
    """
    mul = group.mul
    N = group.order
    if mul[flip][flip] != group.identity or flip == group.identity:
        raise PreconditionError("flip must be an involution")
    vertex = [-1] * N
    nv = 0
    for g in range(N):
        if vertex[g] < 0:
            x = g
            while vertex[x] < 0:
                vertex[x] = nv
                x = mul[x][rot]
            nv += 1
    arc_of = {}
    ends = []
    for g in range(N):
        if g in arc_of:
            continue
        h = mul[g][flip]
        j = len(ends)
        ends.append((vertex[g], vertex[h]))
        arc_of[g] = Arc(j, 0)
        arc_of[h] = Arc(j, 1)
    graph = MultiGraph(nv, ends)
    step = mul[flip][rot]
    seen = set()
    faces = []
    for g in range(N):
        if g in seen:
            continue
        walk = []
        x = g
        while x not in seen:
            seen.add(x)
            walk.append(arc_of[x])
            x = mul[x][step]
        faces.append(walk)
    return map_from_walks(graph, faces)


def projective_linear_group(p: int, special: bool = True) -> GroupTable:
    """PSL(2, p) (``special``) or PGL(2, p) as matrices modulo scalars."""
    if p < 3:
        raise PreconditionError("p must be an odd prime")

    def norm(m):
        (a, b), (c, d) = m
        lead = a if a % p else c
        inv = pow(lead, -1, p)
        if special:
            # scalars of SL(2, p) are +-1
            cand = [((a % p, b % p), (c % p, d % p)), ((-a % p, -b % p), (-c % p, -d % p))]
            return min(cand)
        return ((a * inv % p, b * inv % p), (c * inv % p, d * inv % p))

    def mul(x, y):
        (a, b), (c, d) = x
        (e, f), (g, h) = y
        return norm(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    gens = [norm(((1, 1), (0, 1))), norm(((0, p - 1), (1, 0)))]
    if not special:
        # a non-square determinant element
        r = next(x for x in range(2, p) if pow(x, (p - 1) // 2, p) == p - 1)
        gens.append(norm(((r, 0), (0, 1))))
    ident = norm(((1, 0), (0, 1)))
    return closure(gens, mul, identity=ident)


def triangle_generators(group: GroupTable, ell: int, rng: random.Random | None = None, limit: int = 20000):
    """Find (rot, flip) with rot of order ``ell``, flip an involution,
    flip*rot of order 3, generating the whole group; None if not found."""
    rng = rng or random.Random(0)
    N = group.order
    orders = [group.element_order(i) for i in range(N)]
    rots = [i for i in range(N) if orders[i] == ell]
    flips = [i for i in range(N) if orders[i] == 2]
    if not rots or not flips:
        return None
    for _ in range(limit):
        r = rng.choice(rots)
        f = rng.choice(flips)
        if orders[group.mul[f][r]] != 3:
            continue
        sub = closure([group.elements[r], group.elements[f]],
                      lambda x, y: group.elements[group.mul[group.index(x)][group.index(y)]],
                      identity=group.elements[group.identity])
        if sub.order == N:
            return r, f
    return None
