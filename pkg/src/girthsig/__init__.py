"""Girth-cycle signatures of cubic graphs.

Build graphs (multigraphs with first-class arcs), count girth cycles per edge,
compute automorphism groups, truncate graphs by dihedral schemes, work with
combinatorial maps, and classify cubic vertex-transitive graphs of girth 6.
"""

from .errors import GraphError, PreconditionError, ResourceLimitError
from .graph import (
    Arc,
    MultiGraph,
    build_graph,
    components,
    disjoint_union,
    head,
    is_connected,
    is_regular,
    is_simple,
    out_arcs,
    predicates,
    regular_degree,
    reverse_arc,
    simple_graph,
    tail,
)
from .groups import (
    DihedralElement,
    DP3Element,
    GroupTable,
    closure,
    cyclic_group,
    dih_inv,
    dih_mul,
    dihedral_group,
    dihedral_z3_group,
    dp3_inv,
    dp3_mul,
    matrix_group,
    rho,
    tau,
)
from .families import (
    NAMED_GRAPHS,
    cayley,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    delta,
    gl23_cayley,
    gl23_connection,
    gp,
    lcf,
    named_graph,
    psi,
    sdw,
    sigma,
    sigma_to_sdw,
)
from .girth import (
    ArcType,
    GirthReport,
    LawReport,
    SignatureReport,
    arc_type,
    cayley_signature,
    check_signature_laws,
    edge_girth_counts,
    girth,
    girth_cycles,
    girth_report,
    graph_signature,
    vertex_signatures,
)
from .schemes import (
    Contraction,
    DihedralScheme,
    arbitrary_scheme,
    contract_girth_cycles,
    random_scheme,
    scheme_from_rotations,
    truncate,
)
from .maps import (
    CombMap,
    euler_characteristic,
    faces_from_girth_cycles,
    map_from_walks,
    map_truncation,
    reconstruct_triangulation,
)
from .torus import (
    delta_map,
    hex_torus,
    projective_linear_group,
    psi_map,
    regular_map,
    sigma_map,
    triangle_generators,
)
from .automorphisms import (
    CanonicalForm,
    GeneratedGroup,
    SchemeGroup,
    Transitivity,
    are_isomorphic,
    automorphism_group,
    canonical_label,
    find_isomorphism,
    scheme_automorphisms,
    swap_automorphism,
    transitivity,
)
from .classify import (
    ClassificationResult,
    DesarguesGraph,
    NotApplicable,
    TorusMapSkeleton,
    TruncatedSixRegular,
    TruncatedTriangulation,
    classify,
    identify_family,
    survey,
    verify_corollary,
)
from .io import from_graph6, dumps_document, loads_document, to_graph6

__version__ = "0.1.0"
