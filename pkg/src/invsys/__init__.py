"""Exact inverse-system calculator for Artinian quotients of power-series rings.

Everything is exact: coefficients are rationals or prime-field residues,
linear algebra is reduced row echelon over the coefficient field, and all
operations are pure and deterministic.
"""

from .errors import (
    CharacteristicError,
    DegreeCapError,
    FrameMismatchError,
    InvSysError,
    NotArtinError,
    ParseError,
    SingularCurveError,
)
from .poly import (
    ACTIONS,
    CONT,
    DER,
    Fp,
    Poly,
    Ring,
    apply_action,
    apply_cont,
    apply_der,
    check_action,
    format_poly,
    gen_pol,
    parse_poly,
    sigma,
    top_form,
)
from .linalg import (
    Echelon,
    Frame,
    SubspaceBasis,
    contains_space,
    member_space,
    perp_space,
    quotient_dim,
    span_of,
    sum_space,
)
from .artin import (
    ArtinStatus,
    IdealHandle,
    analyze_artin,
    cm_type,
    contains_power_of_maximal,
    eq_ideal,
    hilbert,
    ideal_min_gens,
    is_ag,
    is_level,
    socle_ideal,
    truncation_span,
)
from .duality import (
    SubmoduleHandle,
    closure_span,
    colon_inv_syst,
    eq_mod_ih,
    hilbert_via_inverse_system,
    ideal_ann,
    inv_syst,
    is_level_dual,
    member_ih,
    min_gens_ih,
    sub_mod_ih,
)
from .elliptic import (
    ClassificationRow,
    RowReport,
    classification_table,
    default_ring,
    ideal_wj,
    j_invariant,
    verify_row,
    weierstrass_ab,
    weierstrass_j,
)

__version__ = "0.1.0"

__all__ = [
    "ACTIONS",
    "ArtinStatus",
    "CharacteristicError",
    "ClassificationRow",
    "CONT",
    "DER",
    "DegreeCapError",
    "Echelon",
    "Fp",
    "Frame",
    "FrameMismatchError",
    "IdealHandle",
    "InvSysError",
    "NotArtinError",
    "ParseError",
    "Poly",
    "Ring",
    "RowReport",
    "SingularCurveError",
    "SubmoduleHandle",
    "SubspaceBasis",
    "analyze_artin",
    "apply_action",
    "apply_cont",
    "apply_der",
    "check_action",
    "classification_table",
    "closure_span",
    "cm_type",
    "colon_inv_syst",
    "contains_power_of_maximal",
    "contains_space",
    "default_ring",
    "eq_ideal",
    "eq_mod_ih",
    "format_poly",
    "gen_pol",
    "hilbert",
    "hilbert_via_inverse_system",
    "ideal_ann",
    "ideal_min_gens",
    "ideal_wj",
    "inv_syst",
    "is_ag",
    "is_level",
    "is_level_dual",
    "j_invariant",
    "member_ih",
    "member_space",
    "min_gens_ih",
    "parse_poly",
    "perp_space",
    "quotient_dim",
    "sigma",
    "socle_ideal",
    "span_of",
    "sub_mod_ih",
    "sum_space",
    "top_form",
    "truncation_span",
    "verify_row",
    "weierstrass_ab",
    "weierstrass_j",
]
