//! Singularity invariants of plane curves and foliations.
//!
//! Every `k`-th Milnor, Tjurina and polar number is a colength computed by
//! [`crate::stdbasis`]; the closed forms in [`closed`] are independent of
//! that engine so each can check the other.

mod checks;
pub mod closed;
mod germ;
mod index;

pub use checks::{
    check_conjecture1, foliation_milnor_k_bound, foliation_milnor_k_decomposed, gsv_theorem_check,
    milnor_bound_check, milnor_k_report, polar_gsv_check, quasihomogeneous_identity_check, ratio_check,
    second_type_milnor_check, teissier_k_check, Assertions, BoundReport, CheckReport, CheckRow, Conjecture1Report,
    InvariantReport, QuasiHomogeneousReport, RatioReport, TeissierReport,
};
pub use closed::{
    dim_mk_plus_f_closed, ell_k, ell_k_rational, milnor_k_closed, reduced_singularity_invariants,
    weighted_homogeneous_weights, ReducedSingularityKind, WeightData,
};
pub use germ::{
    foliation_milnor_k, foliation_tjurina_k, intersection_number, is_invariant, is_quasihomogeneous_foliation,
    milnor_k, tjurina_k, CurveGerm, Foliation,
};
pub use index::{gsv_branches, gsv_index, polar_intersection_k, GsvBranches, PolarSampling, PolarValue};
