"""Exact invariants of A_n quiver orientations: cluster complexes,
picture-space homology, group presentations, and the cohomology ring."""

from .quiver import (
    AlmostPositiveRoot,
    ConsistencyError,
    NegativeProjective,
    Root,
    SignVector,
    all_positive_roots,
    cluster_compatible,
    euler_form,
    ext_dim,
    ext_orthogonal,
    hom_dim,
    hom_orthogonal,
    noncrossing,
    projective_root,
)
from .wide import (
    LocalQuiver,
    concat_minimal,
    is_relative_projective,
    local_quiver,
    perp_simples_within,
    phi_plus,
)
from .weights import (
    Block,
    ballot,
    blocks,
    catalan,
    cut_set_cell,
    cut_set_of,
    degree,
    enumerate_admissible_weights,
    enumerate_basic_weights,
    enumerate_blocks,
    enumerate_hom_orth_sets_of_weight,
    generic_decomposition,
    is_admissible,
    is_basic,
    parse_weight,
    resolution_set,
)
from .chains import (
    Cell,
    Chain,
    GradedComplex,
    all_cells,
    boundary,
    build_complex,
    complex_to_json,
    enumerate_cells,
    subquotient_complex,
)
from .homology import (
    HomologySummary,
    InvalidComplexError,
    SnfResult,
    betti_fast,
    betti_fast_table,
    euler_characteristic,
    homology_of,
    matrix_rank,
    smith_normal_form,
)
from .ring import (
    BasisElement,
    DualBlock,
    RingElement,
    UNIT,
    cup,
    dual_block_basis,
    pair_with_homology,
    pairing_matrix,
    ring_rank,
)
from .presentation import (
    GroupWord,
    Presentation,
    export_gap,
    g0_presentation,
    parse_presentation,
    restrict_word,
    u_presentation,
)
from .geometry import (
    ClusterComplex,
    Wall,
    build_cluster_complex,
    count_top_simplices,
    in_domain,
    link_of,
    picture_stats,
    realize,
    render_picture_svg,
    wall_label,
    walls,
)
from .verify import CheckResult, verify_orientation

__version__ = "0.1.0"
