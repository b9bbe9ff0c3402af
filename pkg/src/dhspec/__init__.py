"""Directed hypergraph spectra.

Exact sparse hypermatrix representations of directed uniform and
non-uniform hypergraphs (adjacency, Laplacian, signless Laplacian and
their totals), eigenpair certificates, spectral-radius bounds, and the
connectivity/irreducibility hierarchy.
"""

__version__ = "0.1.0"

from .errors import (
    BadArity,
    BadSupportSize,
    DhspecError,
    DimensionMismatch,
    DimensionTooLargeForExhaustiveSearch,
    DuplicateVertexSet,
    EmptyTailOrHead,
    NegativeEntry,
    NoCommonVertex,
    NoConvergence,
    NoEdges,
    NonpositiveDiagonal,
    NotAPartition,
    NotHPlus,
    NotSymmetric,
    NotUniform,
    OddOrder,
    ParseError,
    RankTooSmall,
    TooFewVertices,
    UndirectedCollision,
    ValidationError,
    VertexOutOfRange,
    ZeroVector,
)
from .hypergraph import (
    DegreeProfile,
    DirectedEdge,
    DirectedHypergraph,
    RankCorank,
    UndirectedHypergraph,
    degree_profile,
    fingerprint,
    format_dhg,
    is_out_regular,
    is_strongly_connected,
    parse_dhg,
    rank_corank,
    underlying_undirected,
    validate,
    vertex_digraph,
)
from .hypermatrix import (
    GershgorinDisk,
    Hypermatrix,
    IrreducibilityReport,
    as_exact_vector,
    as_float_vector,
    diagonal_matrix,
    diagonal_similarity,
    format_ht,
    gershgorin_disks,
    identity_matrix,
    in_disk_union,
    is_exact_vector,
    is_supersymmetric,
    is_weak_star_irreducible,
    is_weakly_irreducible,
    parse_ht,
    power_vector,
    reducibility_report,
    reducible_witness,
    shao_product,
    symmetrize,
    weak_graph,
    weak_star_graph,
)
from .builders import (
    BuiltTensor,
    EdgeNormalizer,
    TENSOR_KINDS,
    build,
    degree_tensor,
    direct_symmetrized_adjacency,
    edge_in_entries,
    edge_normalizer,
    edge_out_entries,
    in_adjacency,
    in_degree_identity_check,
    laplacian,
    out_adjacency,
    signless_laplacian,
    total_adjacency,
    total_laplacian,
    total_signless,
    undirected_adjacency,
)
from .spectra import (
    BoundsReport,
    CopositivityProbe,
    EigenCertificate,
    LaplacianCheckReport,
    RadiusResult,
    SignlessCheckReport,
    SolverOptions,
    StructuralVector,
    SubadditivityReport,
    ZMaxResult,
    bounds_record,
    certificate_record,
    colliding_edges,
    common_vertex_zero_pair,
    copositivity_probe,
    degree_bounds,
    edge_zero_vector,
    gershgorin_bounds,
    gershgorin_modulus_bound,
    h_plus_nonnegativity,
    isospectral_identity_check,
    laplacian_theorem_checks,
    nqz_spectral_radius,
    refined_degree_bounds,
    row_sum_bounds,
    signless_theorem_checks,
    sshopm_max_z,
    support_zero_vector,
    verify_h_eigenpair,
    verify_z_eigenpair,
    z_eigenpair_probe,
    zmax_subadditivity_check,
)
