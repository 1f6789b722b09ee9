//! Exact construction of truncated power-series solutions of Schroeder's
//! equation `F∘φ = φ'(0)F` for polynomial self-maps of ℂⁿ fixing 0, and of
//! its power variant `F∘φ = φ'(0)^k F`.
//!
//! All arithmetic is over the Gaussian rationals, so every identity the
//! library claims can be checked with literal equality.

pub mod cli;
pub mod comp_op;
pub mod engine;
pub mod error;
pub mod jet;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod polymap;
pub mod scalar;

pub use comp_op::{build, detect_products, project_first_n, truncation_degree, TruncatedCompOp};
pub use engine::{
    analyze, detect_resonance, lift_chain, solve, solve_power, validate_map, validate_map_with,
    verify, AnalysisReport, EigenRecord, Mode, SchroederSolution, SpectralData, VerifyReport,
};
pub use error::{Error, Result};
pub use jet::Jet;
pub use linalg::ExactMatrix;
pub use monomial::{basis_size, compare_monomials, enumerate_monomials, MultiIndex};
pub use polymap::{compose, conjugate_map, monomial_power, PolyMap, PowerTable};
pub use scalar::Scalar;
