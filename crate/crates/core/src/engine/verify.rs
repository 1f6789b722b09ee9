use crate::error::{Error, Result};
use crate::linalg::{rank_of_vectors, ExactMatrix};
use crate::monomial::{enumerate_monomials, MultiIndex};
use crate::polymap::PolyMap;
use crate::scalar::Scalar;

/// First nonzero coefficient of the residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// 1-based component index.
    pub component: usize,
    pub monomial: MultiIndex,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checked_degree: u32,
    /// Largest `d ≤ checked_degree` through which `F∘φ − B·F` vanishes.
    pub residual_degree: u32,
    pub failure: Option<Failure>,
    pub derivative_rank: usize,
    pub component_rank: usize,
    pub dim: usize,
}

impl VerifyReport {
    /// Linearly dependent components; this includes `F = 0`.
    pub fn degenerate(&self) -> bool {
        self.component_rank < self.dim
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none() && !self.degenerate()
    }
}

/// Checks `F∘φ = B·F` through degree `k_check`.
pub fn verify(phi: &PolyMap, f: &PolyMap, b: &ExactMatrix, k_check: u32) -> Result<VerifyReport> {
    let n = phi.dim();
    if f.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: f.dim() });
    }
    if b.rows() != n || b.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.rows() });
    }
    let have = phi.truncation().min(f.truncation());
    if have < k_check {
        return Err(Error::InsufficientTruncation { have, need: k_check });
    }
    let phi = phi.truncate(k_check);
    let f = f.truncate(k_check);
    let residual = f.compose_map(&phi)?.try_sub(&f.apply_matrix(b)?)?;

    let mut failure: Option<Failure> = None;
    for (j, c) in residual.components().iter().enumerate() {
        if let Some((alpha, v)) = c.leading_term() {
            let better = failure.as_ref().is_none_or(|cur| {
                alpha.degree() < cur.monomial.degree()
            });
            if better {
                failure = Some(Failure { component: j + 1, monomial: alpha.clone(), value: v.clone() });
            }
        }
    }
    let residual_degree = failure.as_ref().map_or(k_check, |fl| fl.monomial.degree() - 1);
    Ok(VerifyReport {
        checked_degree: k_check,
        residual_degree,
        failure,
        derivative_rank: f.linear_part().rank(),
        component_rank: component_rank(&f),
        dim: n,
    })
}

/// Rank of the coefficient matrix with one row per component.
pub fn component_rank(f: &PolyMap) -> usize {
    let basis = enumerate_monomials(f.dim(), f.truncation());
    let rows: Vec<Vec<Scalar>> = f.components().iter().map(|c| c.to_vector(&basis)).collect();
    rank_of_vectors(&rows)
}
