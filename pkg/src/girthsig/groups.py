"""Finite-group arithmetic for Cayley constructions.

Dihedral groups use rotations ``rho_i`` and reflections ``tau_i = rho^i tau``
with indices modulo ``n``; the products are

    rho_i rho_j = rho_{i+j}    rho_i tau_j = tau_{i+j}
    tau_i rho_j = tau_{i-j}    tau_i tau_j = rho_{i-j}

Generic groups are realised as explicit multiplication tables by closing a
generating set under a supplied multiplication.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, NamedTuple, Sequence

from .errors import ResourceLimitError

__all__ = [
    "DihedralElement",
    "DP3Element",
    "rho",
    "tau",
    "dih_mul",
    "dih_inv",
    "dp3_mul",
    "dp3_inv",
    "GroupTable",
    "closure",
    "dihedral_group",
    "dihedral_z3_group",
    "cyclic_group",
    "matmul_mod",
    "matrix_group",
    "DEFAULT_CLOSURE_CAP",
]

DEFAULT_CLOSURE_CAP = 10**6


class DihedralElement(NamedTuple):
    reflection: bool
    index: int

    def __str__(self):
        return f"{'tau' if self.reflection else 'rho'}{self.index}"


class DP3Element(NamedTuple):
    """Element of D_n x Z_3; ``z`` is 0, 1 (``+``) or 2 (``-``)."""

    dihedral: DihedralElement
    z: int

    def __str__(self):
        return f"{self.dihedral}^{'0+-'[self.z]}"


def rho(i: int, n: int) -> DihedralElement:
    return DihedralElement(False, i % n)


def tau(i: int, n: int) -> DihedralElement:
    return DihedralElement(True, i % n)


def dih_mul(x: DihedralElement, y: DihedralElement, n: int) -> DihedralElement:
    if not x.reflection:
        return DihedralElement(y.reflection, (x.index + y.index) % n)
    return DihedralElement(not y.reflection, (x.index - y.index) % n)


def dih_inv(x: DihedralElement, n: int) -> DihedralElement:
    if x.reflection:
        return x
    return DihedralElement(False, (-x.index) % n)


def dp3_mul(x: DP3Element, y: DP3Element, n: int) -> DP3Element:
    return DP3Element(dih_mul(x.dihedral, y.dihedral, n), (x.z + y.z) % 3)


def dp3_inv(x: DP3Element, n: int) -> DP3Element:
    return DP3Element(dih_inv(x.dihedral, n), (-x.z) % 3)


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its multiplication table.

    ``elements[i]`` is the element with index ``i``; ``mul[i][j]`` is the
    index of ``elements[i] * elements[j]``.
    """

    elements: tuple
    mul: tuple
    identity: int
    inverse: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        return self._lookup()[x]

    def _lookup(self) -> dict:
        cache = self.__dict__.get("_index")
        if cache is None:
            cache = {x: i for i, x in enumerate(self.elements)}
            object.__setattr__(self, "_index", cache)
        return cache

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.mul[x][i]
            k += 1
        return k

    def check_axioms(self, samples: int | None = None) -> bool:
        """Identity and inverse laws everywhere; associativity on all triples
        when ``samples`` is None, otherwise on the first ``samples`` indices."""
        N = self.order
        e = self.identity
        for i in range(N):
            if self.mul[e][i] != i or self.mul[i][e] != i:
                return False
            if self.mul[i][self.inverse[i]] != e or self.mul[self.inverse[i]][i] != e:
                return False
        r = range(N) if samples is None else range(min(N, samples))
        mul = self.mul
        for a in r:
            for b in r:
                ab = mul[a][b]
                for c in r:
                    if mul[ab][c] != mul[a][mul[b][c]]:
                        return False
        return True


def closure(
    generators: Sequence[Hashable],
    mul: Callable,
    identity: Hashable | None = None,
    cap: int = DEFAULT_CLOSURE_CAP,
) -> GroupTable:
    """Close ``generators`` under ``mul`` and tabulate the resulting group.

    Elements are indexed in breadth-first discovery order starting from the
    identity (computed as a power of the first generator when not supplied).
    """
    gens = list(dict.fromkeys(generators))
    if not gens:
        raise ValueError("at least one generator is required")
    if identity is None:
        x = gens[0]
        prev = x
        steps = 0
        while True:
            nxt = mul(prev, x)
            steps += 1
            if nxt == x:
                identity = prev
                break
            prev = nxt
            if steps > cap:
                raise ResourceLimitError("could not find identity within cap")
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = mul(x, s)
            if y not in index:
                if len(elements) >= cap:
                    raise ResourceLimitError(f"group closure exceeded {cap} elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    N = len(elements)
    table = tuple(tuple(index[mul(x, y)] for y in elements) for x in elements)
    inverse = [0] * N
    for i in range(N):
        row = table[i]
        for j in range(N):
            if row[j] == 0:
                inverse[i] = j
                break
    return GroupTable(tuple(elements), table, 0, tuple(inverse))


def _tabulate(elements, mul) -> GroupTable:
    index = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(index[mul(x, y)] for y in elements) for x in elements)
    e = next(i for i, x in enumerate(elements) if all(table[i][j] == j for j in range(len(elements))))
    inverse = tuple(table[i].index(e) for i in range(len(elements)))
    return GroupTable(tuple(elements), table, e, inverse)


def dihedral_group(n: int) -> GroupTable:
    """D_n of order 2n, indexed rotations first then reflections."""
    if n < 1:
        raise ValueError("n must be positive")
    elements = [rho(i, n) for i in range(n)] + [tau(i, n) for i in range(n)]
    return _tabulate(elements, lambda x, y: dih_mul(x, y, n))


def dihedral_z3_group(n: int) -> GroupTable:
    """D_n x Z_3 of order 6n; the Z_3 component varies fastest."""
    if n < 1:
        raise ValueError("n must be positive")
    dih = [rho(i, n) for i in range(n)] + [tau(i, n) for i in range(n)]
    elements = [DP3Element(d, z) for d in dih for z in range(3)]
    return _tabulate(elements, lambda x, y: dp3_mul(x, y, n))


def cyclic_group(n: int) -> GroupTable:
    return _tabulate(list(range(n)), lambda x, y: (x + y) % n)


def matmul_mod(p: int):
    """Multiplication of square matrices (tuples of row tuples) modulo ``p``."""

    def mul(a, b):
        k = len(a)
        return tuple(
            tuple(sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(k))
            for i in range(k)
        )

    return mul


def matrix_group(generators, p: int, cap: int = DEFAULT_CLOSURE_CAP) -> GroupTable:
    gens = [tuple(tuple(int(x) % p for x in row) for row in m) for m in generators]
    k = len(gens[0])
    ident = tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
    return closure(gens, matmul_mod(p), identity=ident, cap=cap)
