//! The composition operator `f ↦ f∘φ` compressed to monomials of degree
//! at most K.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::monomial::MultiIndex;
use crate::polymap::{PolyMap, PowerTable};
use crate::scalar::Scalar;

/// `U`: column `j` holds the coefficients of `φ^{α_j}` on the basis.
#[derive(Clone, Debug)]
pub struct TruncatedCompOp {
    pub basis: Vec<MultiIndex>,
    pub u: ExactMatrix,
    pub degree: u32,
    pub dim: usize,
}

impl TruncatedCompOp {
    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, alpha: &MultiIndex) -> Option<usize> {
        self.basis.binary_search(alpha).ok()
    }
}

pub fn build(phi: &PolyMap, k: u32) -> Result<TruncatedCompOp> {
    if k == 0 {
        return Err(Error::InvalidArgument("truncation degree must be at least 1".into()));
    }
    if phi.truncation() < k {
        return Err(Error::InsufficientTruncation { have: phi.truncation(), need: k });
    }
    let table = PowerTable::new(phi, k);
    Ok(from_table(&table, phi.dim()))
}

pub(crate) fn from_table(table: &PowerTable, dim: usize) -> TruncatedCompOp {
    let basis = table.basis().to_vec();
    let cols: Vec<Vec<Scalar>> =
        (0..basis.len()).map(|j| table.power_at(j).to_vector(&basis)).collect();
    let u = ExactMatrix::from_columns(&cols).expect("square");
    TruncatedCompOp { basis, u, degree: table.truncation(), dim }
}

/// The first `n` coordinates, i.e. the gradient at 0 of the represented
/// function.
pub fn project_first_n(v: &[Scalar], n: usize) -> Vec<Scalar> {
    v[..n.min(v.len())].to_vec()
}

fn check_spectrum(eigs: &[Scalar]) -> Result<(BigRational, BigRational)> {
    if eigs.is_empty() {
        return Err(Error::UnsupportedSpectrum("empty spectrum".into()));
    }
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for e in eigs {
        let a = e.abs_sq();
        if a.is_zero() {
            return Err(Error::UnsupportedSpectrum(format!("eigenvalue {e} is zero")));
        }
        if a >= BigRational::one() {
            return Err(Error::UnsupportedSpectrum(format!(
                "eigenvalue {e} has modulus at least 1"
            )));
        }
        if lo.as_ref().is_none_or(|l| &a < l) {
            lo = Some(a.clone());
        }
        if hi.as_ref().is_none_or(|h| &a > h) {
            hi = Some(a);
        }
    }
    Ok((lo.unwrap(), hi.unwrap()))
}

/// Smallest `B` with `(max |λ|²)^B < min |λ|²`: no product of `B` or more
/// eigenvalues can be an eigenvalue.
pub fn magnitude_bound(eigs: &[Scalar]) -> Result<u32> {
    let (lo, hi) = check_spectrum(eigs)?;
    let mut b = 1;
    let mut p = hi.clone();
    while p >= lo {
        p *= &hi;
        b += 1;
    }
    Ok(b)
}

/// All `(μ, Σk)` with `μ = Π λ_i^{k_i}` an element of `eigs` and
/// `2 ≤ Σk < B`.
pub fn detect_products(eigs: &[Scalar]) -> Result<Vec<(Scalar, u32)>> {
    let bound = magnitude_bound(eigs)?;
    let mut distinct: Vec<Scalar> = Vec::new();
    for e in eigs {
        if !distinct.contains(e) {
            distinct.push(e.clone());
        }
    }
    let mut hits = Vec::new();
    // walk exponent tuples, nondecreasing in the eigenvalue index
    fn walk(
        distinct: &[Scalar],
        from: usize,
        prod: &Scalar,
        deg: u32,
        bound: u32,
        hits: &mut Vec<(Scalar, u32)>,
    ) {
        if deg >= 2 && distinct.contains(prod) {
            hits.push((prod.clone(), deg));
        }
        if deg + 1 >= bound {
            return;
        }
        for i in from..distinct.len() {
            walk(distinct, i, &(prod * &distinct[i]), deg + 1, bound, hits);
        }
    }
    walk(&distinct, 0, &Scalar::one(), 0, bound, &mut hits);
    Ok(hits)
}

/// Largest total degree of a product of eigenvalues that is again an
/// eigenvalue, and at least 1.
pub fn truncation_degree(eigs: &[Scalar]) -> Result<u32> {
    Ok(detect_products(eigs)?.into_iter().map(|(_, d)| d).max().unwrap_or(1).max(1))
}
