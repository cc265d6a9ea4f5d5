//! Brute-force ground truth over small prime fields.
//!
//! Everything here works with explicit matrices: representations are built
//! from symbols plus point choices, classified back to symbols through Hom
//! dimension measurements, and extensions are enumerated either by gluing
//! matrices or by walking submodules.

pub mod classify;
pub mod extensions;
pub mod matrix;
pub mod pointed;
pub mod poly;
pub mod repr;
pub mod sub;
pub mod sweep;

pub use classify::{classify, classify_pointed, OracleCtx};
pub use extensions::{
    enumerate_class, ext_middle_terms, ext_middle_terms_sub, hall_number, hall_profile,
    EnumBudget, GlueMode,
};
pub use matrix::{Fp, Mat, Subspace};
pub use poly::Point;
pub use repr::{build_indec, euler_form, ext_dim_repr, hom_dim_repr, IndecSpec, Rep};
pub use pointed::{
    build_pointed_table, green_frame_check, pointed_ext_dim, pointed_variants, PointedExtTable,
    PointedFactorizations, PointedSymbol,
};
pub use sweep::{build_ext_table, verify_pair, verify_sweep, ExtTable, VerifyReport, VerifyStatus};
