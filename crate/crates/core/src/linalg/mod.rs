//! Exact dense linear algebra over the Gaussian rationals.

mod incremental;
mod jordan;
mod matrix;

pub use incremental::{corner_blocks, incremental_jordanize};
pub use jordan::{
    blocks_from_rank_sequence, distinct_diagonal, jordan_chains_triangular, jordan_matrix,
    rank_sequence_oracle, transition_to_jordan_triangular, JordanBasis, JordanChain,
};
pub use matrix::{
    axpy, dot, is_zero_vec, rank_of_vectors, scale_vec, unit_vec, EchelonSpan, ExactMatrix, Rref,
};
