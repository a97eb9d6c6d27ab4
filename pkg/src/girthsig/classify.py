"""Classification of cubic vertex-transitive graphs of girth 6 by signature.

A connected cubic vertex-transitive graph of girth 6 is one of

* (a) the skeleton of a {6,3} torus map: Psi(n), Sigma(n), Delta(n) or a
  generic torus skeleton with signature (2, 2, 2);
* (b) the truncation of an arc-transitive {3, l} map with l >= 7;
* (c) the truncation of a 6-regular graph with an arc-transitive scheme;
* (d) the Desargues graph.

:func:`classify` runs cheap structural gates first, then the automorphism
group, then dispatches on the signature and confirms each answer with an
explicit construction or isomorphism.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .automorphisms import (
    GeneratedGroup,
    automorphism_group,
    are_isomorphic,
    canonical_label,
    scheme_automorphisms,
    transitivity,
)
from .errors import GraphError, PreconditionError, ResourceLimitError
from .families import delta, named_graph, psi, sigma
from .girth import girth, girth_cycles, girth_report
from .graph import MultiGraph, is_connected, regular_degree
from .maps import CombMap, faces_from_girth_cycles, reconstruct_triangulation
from .schemes import DihedralScheme, contract_girth_cycles, truncate
from .search import DEFAULT_NODE_CAP

__all__ = [
    "NOT_CUBIC",
    "NOT_CONNECTED",
    "WRONG_GIRTH",
    "NOT_VERTEX_TRANSITIVE",
    "ANOMALY",
    "ClassificationResult",
    "TorusMapSkeleton",
    "TruncatedTriangulation",
    "TruncatedSixRegular",
    "DesarguesGraph",
    "NotApplicable",
    "CLASSIFIED_SIGNATURES",
    "classify",
    "identify_family",
    "SurveyRow",
    "SurveyFailure",
    "SurveyTable",
    "survey",
    "CorollaryReport",
    "verify_corollary",
]

NOT_CUBIC = "not-cubic"
NOT_CONNECTED = "not-connected"
WRONG_GIRTH = "girth≠6"
NOT_VERTEX_TRANSITIVE = "not-vertex-transitive"
ANOMALY = "unclassifiable-anomaly"

CLASSIFIED_SIGNATURES = frozenset({
    (8, 8, 8), (6, 6, 6), (4, 5, 5), (4, 4, 4), (3, 4, 5),
    (2, 3, 3), (2, 2, 2), (1, 1, 2), (0, 1, 1),
})


@dataclass(frozen=True, eq=False)
class ClassificationResult:
    """Common base of the classifier outcomes."""

    signature: tuple | None = None
    aut_order: int | None = None

    case: str | None = None
    outcome: str = ""

    @property
    def anomaly(self) -> bool:
        return False

    def summary(self) -> str:
        return f"{self.outcome} {self.signature}" if self.signature is not None else self.outcome


@dataclass(frozen=True, eq=False)
class TorusMapSkeleton(ClassificationResult):
    """Case (a).  ``family`` is one of Psi, Sigma, Delta (with ``n``),
    Heawood, MoebiusKantor, Pappus or GenericTorus."""

    family: str = ""
    n: int | None = None
    map: CombMap | None = None
    case: str = "a"
    outcome: str = "TorusMapSkeleton"

    @property
    def label(self) -> str:
        return f"{self.family}({self.n})" if self.n is not None else self.family

    def summary(self) -> str:
        return f"TorusMapSkeleton {self.label} {self.signature}"


@dataclass(frozen=True, eq=False)
class TruncatedTriangulation(ClassificationResult):
    """Case (b): the truncation of a {3, ell} map."""

    ell: int = 0
    map: CombMap | None = None
    case: str = "b"
    outcome: str = "TruncatedTriangulation"

    def summary(self) -> str:
        return f"TruncatedTriangulation ell={self.ell}"


@dataclass(frozen=True, eq=False)
class TruncatedSixRegular(ClassificationResult):
    """Case (c): the truncation of a 6-regular base with a dihedral scheme."""

    base: MultiGraph | None = None
    scheme: DihedralScheme | None = None
    scheme_arc_transitive: bool = False
    case: str = "c"
    outcome: str = "TruncatedSixRegular"

    def summary(self) -> str:
        return (f"TruncatedSixRegular base n={self.base.n} m={self.base.m} "
                f"scheme-arc-transitive={self.scheme_arc_transitive}")


@dataclass(frozen=True, eq=False)
class DesarguesGraph(ClassificationResult):
    case: str = "d"
    outcome: str = "DesarguesGraph"


@dataclass(frozen=True, eq=False)
class NotApplicable(ClassificationResult):
    reason: str = ""
    detail: str = ""
    outcome: str = "NotApplicable"

    @property
    def anomaly(self) -> bool:
        return self.reason == ANOMALY

    def summary(self) -> str:
        return f"NotApplicable {self.reason}" + (f" ({self.detail})" if self.detail else "")


# family fixtures -------------------------------------------------------------


@lru_cache(maxsize=256)
def _certificate(kind: str, n: int = 0) -> tuple:
    if kind == "Psi":
        g = psi(n)
    elif kind == "Sigma":
        g = sigma(n)
    elif kind == "Delta":
        g = delta(n)
    else:
        g = named_graph(kind)
    return canonical_label(g.without_labels()).edges


def _matches(cert: tuple, kind: str, n: int = 0) -> bool:
    return cert == _certificate(kind, n)


def _candidates(nv: int, sig: tuple) -> list[tuple[str, int | None, str, int]]:
    """(label family, label n, fixture kind, fixture n) pairs a signature admits."""
    if sig == (8, 8, 8) and nv == 14:
        return [("Heawood", None, "Psi", 7)]
    if sig == (6, 6, 6) and nv == 16:
        return [("MoebiusKantor", None, "Psi", 8)]
    if sig == (4, 5, 5) and nv == 18:
        return [("Psi", 9, "Psi", 9)]
    if sig == (4, 4, 4) and nv == 18:
        return [("Pappus", None, "Sigma", 3)]
    if sig == (4, 4, 4) and nv == 20:
        return [("Desargues", None, "Desargues", 0)]
    if sig == (3, 4, 5) and nv % 2 == 0 and nv // 2 >= 10:
        return [("Psi", nv // 2, "Psi", nv // 2)]
    if sig == (2, 3, 3) and nv % 6 == 0 and nv // 6 >= 4:
        n = nv // 6
        return [("Delta", n, "Delta", n), ("Sigma", n, "Sigma", n)]
    return []


def identify_family(g: MultiGraph, sig: Sequence[int]) -> str | None:
    """Name the family member ``g`` equals by canonical form, or None.

    Only the candidates the signature admits are tried, so (2, 2, 2) torus
    skeletons and truncations always give None.
    """
    cands = _candidates(g.n, tuple(sig))
    if not cands:
        return None
    cert = canonical_label(g.without_labels()).edges
    for fam, n, kind, kn in cands:
        if _matches(cert, kind, kn):
            return f"{fam}({n})" if n is not None else fam
    return None


# classifier ------------------------------------------------------------------


def classify(g: MultiGraph, cap: int = DEFAULT_NODE_CAP) -> ClassificationResult:
    """Decide which case of the girth-6 classification ``g`` falls under."""
    if regular_degree(g) != 3:
        return NotApplicable(reason=NOT_CUBIC)
    if not is_connected(g):
        return NotApplicable(reason=NOT_CONNECTED)
    gg = girth(g)
    if gg != 6:
        return NotApplicable(reason=WRONG_GIRTH, detail=f"girth {gg}")
    grp = automorphism_group(g, cap)
    if not transitivity(g, grp).vertex_transitive:
        return NotApplicable(reason=NOT_VERTEX_TRANSITIVE, aut_order=grp.order)
    rep = girth_report(g)
    sig = rep.signature.signature
    if sig is None:
        # vertex-transitive graphs are girth-regular
        return NotApplicable(reason=ANOMALY, detail="vertex-transitive but not girth-regular",
                             aut_order=grp.order)
    try:
        return _dispatch(g, sig, grp, cap)
    except (GraphError, PreconditionError) as exc:
        return NotApplicable(reason=ANOMALY, signature=sig, aut_order=grp.order, detail=str(exc))


def _dispatch(g: MultiGraph, sig: tuple, grp: GeneratedGroup, cap: int) -> ClassificationResult:
    order = grp.order
    common = dict(signature=sig, aut_order=order)

    def anomaly(why):
        return NotApplicable(reason=ANOMALY, detail=why, **common)

    if sig not in CLASSIFIED_SIGNATURES:
        return anomaly(f"signature {sig} is outside the classification")

    if sig in ((8, 8, 8), (6, 6, 6), (4, 5, 5), (4, 4, 4), (3, 4, 5), (2, 3, 3)):
        cands = _candidates(g.n, sig)
        if sig == (2, 3, 3) and len(cands) == 2:
            n = g.n // 6
            # the automorphism order picks which candidate to try first
            if order == 12 * n:
                cands = cands[::-1]
        cert = canonical_label(g.without_labels(), cap).edges
        for fam, n, kind, kn in cands:
            if _matches(cert, kind, kn):
                if fam == "Desargues":
                    return DesarguesGraph(**common)
                return TorusMapSkeleton(family=fam, n=n, **common)
        return anomaly(f"no family member with signature {sig} on {g.n} vertices matches")

    if sig == (2, 2, 2):
        m = faces_from_girth_cycles(g)
        if m.euler_characteristic != 0:
            return anomaly(f"girth-cycle map has Euler characteristic {m.euler_characteristic}")
        return TorusMapSkeleton(family="GenericTorus", map=m, **common)

    if sig == (1, 1, 2):
        m = reconstruct_triangulation(g, verify=True)
        mt = m.map_type
        if mt is None or mt[0] != 3:
            return anomaly("reconstructed map is not a regular triangulation")
        if mt[1] < 7:
            return anomaly(f"reconstructed valence {mt[1]} is below 7")
        return TruncatedTriangulation(ell=mt[1], map=m, **common)

    # (0, 1, 1)
    con = contract_girth_cycles(g)
    if regular_degree(con.base) != 6:
        return anomaly("contracted base is not 6-regular")
    if not are_isomorphic(truncate(con.base, con.scheme), g.without_labels(), cap):
        return anomaly("truncation of the contracted base does not reproduce the input")
    sg = scheme_automorphisms(con.base, con.scheme, cap)
    return TruncatedSixRegular(base=con.base, scheme=con.scheme,
                               scheme_arc_transitive=sg.arc_transitive, **common)


# survey ----------------------------------------------------------------------


@dataclass(frozen=True)
class SurveyRow:
    girth: float | int
    signature: tuple | None
    members: int
    vertex_transitive: int
    symmetric: int | None

    def cells(self) -> list[str]:
        g = "inf" if self.girth == math.inf else str(self.girth)
        sig = "irregular" if self.signature is None else "(" + ", ".join(map(str, self.signature)) + ")"
        sym = "-" if self.symmetric is None else str(self.symmetric)
        return [g, sig, str(self.vertex_transitive), sym]


@dataclass(frozen=True)
class SurveyFailure:
    index: int
    error: str


@dataclass
class SurveyTable:
    rows: list[SurveyRow] = field(default_factory=list)
    failures: list[SurveyFailure] = field(default_factory=list)

    def row(self, girth_value, signature) -> SurveyRow | None:
        for r in self.rows:
            if r.girth == girth_value and r.signature == tuple(signature):
                return r
        return None

    def render(self) -> str:
        head = ["girth", "signature", "VT", "symmetric"]
        body = [r.cells() for r in self.rows]
        widths = [max(len(x) for x in col) for col in zip(head, *body)] if body else [len(h) for h in head]
        lines = ["  ".join(c.ljust(w) for c, w in zip(head, widths)).rstrip()]
        for cells in body:
            lines.append("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
        for f in self.failures:
            lines.append(f"# graph {f.index}: {f.error}")
        return "\n".join(lines)


def _survey_one(args):
    g, cap = args
    try:
        rep = girth_report(g)
        grp = automorphism_group(g, cap)
        tr = transitivity(g, grp)
        return ("ok", rep.girth, rep.signature.signature, tr.vertex_transitive, tr.arc_transitive)
    except (GraphError, PreconditionError, ResourceLimitError) as exc:
        return ("error", f"{type(exc).__name__}: {exc}")


def survey(corpus: Iterable[MultiGraph], workers: int = 1, cap: int = DEFAULT_NODE_CAP) -> SurveyTable:
    """Tally graphs by (girth, signature).

    Each row counts the vertex-transitive members and, when the signature has
    all entries equal, the arc-transitive ones (otherwise ``symmetric`` is
    None, since arc-transitivity forces equal entries).  Graphs that fail are
    listed in ``failures`` and left out of the counts.  Rows are ordered by
    girth then signature.
    """
    jobs = [(g, cap) for g in corpus]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_survey_one, jobs))
    else:
        results = [_survey_one(j) for j in jobs]
    members: Counter = Counter()
    vt: Counter = Counter()
    sym: Counter = Counter()
    failures = []
    for i, res in enumerate(results):
        if res[0] == "error":
            failures.append(SurveyFailure(i, res[1]))
            continue
        _, gg, sig, is_vt, is_at = res
        key = (gg, sig)
        members[key] += 1
        vt[key] += is_vt
        sym[key] += is_at

    def order(key):
        gg, sig = key
        return (gg, sig is None, sig or ())

    rows = []
    for key in sorted(members, key=order):
        gg, sig = key
        equal = sig is not None and len(set(sig)) == 1
        rows.append(SurveyRow(gg, sig, members[key], vt[key], sym[key] if equal else None))
    return SurveyTable(rows, failures)


# torus corollary -------------------------------------------------------------


@dataclass(frozen=True)
class CorollaryReport:
    """Which branch of the torus dichotomy holds for a {6,3} map skeleton."""

    branch: str  # "family", "faces-only" or "neither"
    family: str | None
    holds: bool
    extra_cycles: int


def verify_corollary(m: CombMap) -> CorollaryReport:
    """Check that a {6,3} torus skeleton is a family member or has no
    6-cycles besides its faces."""
    if m.map_type != (6, 3) or m.euler_characteristic != 0:
        raise PreconditionError(f"needs a {{6,3}} torus map, got type {m.map_type}, "
                                f"Euler characteristic {m.euler_characteristic}")
    g = m.graph.without_labels()
    gg = girth(g)
    if gg < 6:
        raise PreconditionError(f"skeleton girth {gg} is below 6")
    cycles = set(girth_cycles(g))
    faces = {_canonical_vertex_cycle(c) for c in m.face_vertex_cycles()}
    extra = len(cycles - faces)
    sig = girth_report(g).signature.signature
    fam = identify_family(g, sig) if sig is not None else None
    if fam is not None and sig != (2, 2, 2):
        return CorollaryReport("family", fam, True, extra)
    if cycles == faces:
        return CorollaryReport("faces-only", None, True, 0)
    return CorollaryReport("neither", None, False, extra)


def _canonical_vertex_cycle(c: Sequence[int]) -> tuple:
    k = len(c)
    i = min(range(k), key=lambda j: c[j])
    fwd = tuple(c[(i + j) % k] for j in range(k))
    if fwd[1] > fwd[-1]:
        fwd = (fwd[0],) + tuple(reversed(fwd[1:]))
    return fwd
