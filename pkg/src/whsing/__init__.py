"""Graded invariants of weighted homogeneous surface singularities.

From Seifert invariants (b0, (alpha_i, omega_i)) of a negative-definite
star-shaped resolution graph: Hilbert series of the graded coordinate ring,
geometric genus, per-degree counts of minimal generators of the maximal
ideal, embedding dimension, and the parameter strata where those counts jump.
"""

from .arith import cf_evaluate, convergents, frac_str, neg_cf_expand, parse_frac
from .embdim import (
    AnalyzeOptions,
    DegreeReport,
    EmbdimReport,
    NotApplicable,
    classify_degree,
    closed_form_automorphic,
    closed_form_minimal_rational,
    closed_form_o1,
    closed_form_o_small,
    convergent_characterization_check,
    f_alpha_beta,
    full_report,
    graph_class_flags,
    q_at_params,
    q_generic,
    reduce_to_binary,
    sample_params,
    splice_ed_range,
    topologicality_minors,
)
from .errors import (
    ConsistencyError,
    InadmissibleParams,
    InvalidLeg,
    NotNegativeDefinite,
    OracleCapExceeded,
    TooManyLegs,
    ValidationError,
)
from .graph import (
    GroupData,
    SeifertData,
    StarGraph,
    build_graph,
    canonical_cycle,
    dual_basis,
    dual_pairing,
    fundamental_cycle,
    group_data,
)
from .monomials import DegreeCombinatorics, m_poincare, x_set
from .oracle import (
    enumerate_monomials,
    mu_is_trivial,
    oracle_m_generators,
    oracle_q,
    verify_psi_transport,
)
from .series import (
    DolgachevReport,
    PoincarePolynomial,
    SeriesBundle,
    dolgachev_check,
    gamma,
    geometric_genus,
    h1_polynomial,
    hilbert_series,
    l_max_default,
    rational_form,
    s_value,
    series_bundle,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyzeOptions",
    "ConsistencyError",
    "DegreeCombinatorics",
    "DegreeReport",
    "DolgachevReport",
    "EmbdimReport",
    "GroupData",
    "InadmissibleParams",
    "InvalidLeg",
    "NotApplicable",
    "NotNegativeDefinite",
    "OracleCapExceeded",
    "PoincarePolynomial",
    "SeifertData",
    "SeriesBundle",
    "StarGraph",
    "TooManyLegs",
    "ValidationError",
    "build_graph",
    "canonical_cycle",
    "cf_evaluate",
    "classify_degree",
    "closed_form_automorphic",
    "closed_form_minimal_rational",
    "closed_form_o1",
    "closed_form_o_small",
    "convergent_characterization_check",
    "convergents",
    "dolgachev_check",
    "dual_basis",
    "dual_pairing",
    "enumerate_monomials",
    "f_alpha_beta",
    "frac_str",
    "full_report",
    "fundamental_cycle",
    "gamma",
    "geometric_genus",
    "graph_class_flags",
    "group_data",
    "h1_polynomial",
    "hilbert_series",
    "l_max_default",
    "m_poincare",
    "mu_is_trivial",
    "neg_cf_expand",
    "oracle_m_generators",
    "oracle_q",
    "parse_frac",
    "q_at_params",
    "q_generic",
    "rational_form",
    "reduce_to_binary",
    "s_value",
    "sample_params",
    "series_bundle",
    "splice_ed_range",
    "topologicality_minors",
    "verify_psi_transport",
    "x_set",
]
