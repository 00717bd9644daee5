//! Degree-two dual canonical basis combinatorics: partial noncrossing
//! pairings, the bijection θ with two-column tableaux, the product expansion
//! of `Δ_I Δ_J`, legal paths, and the signed inverse expansion.

mod legal_path;
mod matrix;
mod pairing;

pub use legal_path::{
    check_non_nesting, check_strand_surgery, legal_paths, legal_paths_from, signed_path_sum,
    tl_inverse_expansion, LegalPath, LemmaAudit, PathState, Swap,
};
pub use matrix::{default_order, is_identity, transition_matrices, transition_matrices_for, TransitionMatrix};
pub use pairing::{
    compatible_pairings, crosses, expand_product, nested_under, noncrossing_matchings, paren_matching,
    sigma_minus, theta_inverse, PartialNoncrossingPairing, Strand,
};
