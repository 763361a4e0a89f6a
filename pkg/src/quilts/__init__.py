"""Exact-arithmetic library for quilts of alternating sign matrices.

Finite ranked posets, Boolean-growth maps and their graphs, the quilt
lattice with its symmetries and embeddings, and three independent counting
engines that reproduce the published enumeration tables.
"""

from .asm import (
    AsmMatrix,
    CsmMatrix,
    MonotoneTriangle,
    asm_to_csm,
    csm_to_asm,
    csm_to_mt,
    mt_to_csm,
)
from .dedekind import (
    DedekindGraph,
    DedekindMap,
    build_dedekind_graph,
    count_dedekind_maps,
    dedekind_numbers,
    enumerate_dedekind_maps,
)
from .embed import (
    boolean_restrict,
    chain_collapse,
    chain_quilt_from_matrix,
    check_matroid_quotient,
    check_matroid_rank,
    dedekind_to_quilt,
    flag_matroid_to_quilt,
    iota_embed,
    matrix_rank,
    matroid_to_quilt,
    psi_embed,
    quilt_from_matrix,
    theta_merge,
    theta_split,
)
from .enumeration import (
    AntichainProfile,
    BinomialPolynomial,
    BooleanBoundReport,
    antichain_quilt_count,
    antichain_quilt_profile,
    asm_count_rect,
    asm_count_square,
    boolean_bound_check,
    chain_antichain_closed_form,
    chain_quilt_polynomial,
    chain_quilt_values,
    count_quilts_bruteforce,
    d1_count,
    enumerate_fundamental,
    enumerate_quilts,
    faulhaber_evaluate,
    faulhaber_polynomial,
    fundamental_counts,
    fundamental_topset_table,
    lower_bound_family,
    mt_top_set_count,
    rect_asm_leading_coefficient,
    sequence_terms,
    standard_count,
    standardize,
)
from .errors import (
    PosetError,
    QuiltsError,
    QuiltValidationError,
    TractabilityError,
    Violation,
)
from .expr import eval_expr, parse_poset_expr, render_expr
from .poset import (
    Completion,
    PlainOrder,
    RankedPoset,
    convex_cut_sets,
    count_antichains,
    count_maximal_chains,
    dedekind_macneille_completion,
    disjoint_union,
    is_isomorphic,
    make_antichain,
    make_boolean,
    make_chain,
    orders_isomorphic,
    plain_order,
    poset_from_json,
    product,
)
from .quilt import (
    Quilt,
    boolean_complement,
    bottom_quilt,
    chain_reversal,
    covers_up,
    csm_to_quilt,
    d4_orbit,
    difference_graph,
    find_violation,
    from_jump_sets,
    gamma_map,
    join,
    jump_sets,
    meet,
    mt_form,
    phi_map,
    quilt_from_json,
    quilt_rank,
    quilt_to_csm,
    restrict_to_chains,
    switch,
    top_quilt,
    validate_quilt,
)

__version__ = "0.1.0"
