//! Multi-indices and the graded monomial order used to index coefficient
//! vectors and the rows/columns of the composition matrix.
//!
//! Within a fixed total degree the monomial with the larger exponent at the
//! first differing position comes first, so for two variables the basis
//! reads `z1, z2, z1², z1z2, z2², z1³, …`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    exps: Vec<u32>,
}

impl MultiIndex {
    pub fn new(exps: Vec<u32>) -> Self {
        MultiIndex { exps }
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex { exps: vec![0; n] }
    }

    /// The exponent of `z_i` alone (zero-based `i`).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        MultiIndex { exps }
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn get(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// `self + other`, assuming equal dimensions.
    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.dim(), other.dim());
        MultiIndex::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    /// `self − e_i`, or `None` when the `i`-th exponent is zero.
    pub fn decrement(&self, i: usize) -> Option<MultiIndex> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(MultiIndex::new(exps))
    }

    /// Index of the last variable with a positive exponent.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

impl fmt::Display for MultiIndex {
    /// Renders as a monomial, e.g. `z1^2*z3`, or `1` for the constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "z{}", i + 1)?;
            } else {
                write!(f, "z{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

fn graded_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b) {
            if x != y {
                // larger exponent sorts earlier
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| graded_cmp(&self.exps, &other.exps))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn compare_monomials(a: &MultiIndex, b: &MultiIndex) -> Result<Ordering> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    Ok(graded_cmp(&a.exps, &b.exps))
}

/// All monomials of degree exactly `d` in `n` variables, in monomial order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<MultiIndex> {
    fn rec(n: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if pos + 1 == n {
            cur[pos] = left;
            out.push(MultiIndex::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(n, pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out
}

/// Monomials with `1 ≤ |α| ≤ max_degree`, sorted by the graded order.
pub fn enumerate_monomials(n: usize, max_degree: u32) -> Vec<MultiIndex> {
    (1..=max_degree).flat_map(|d| monomials_of_degree(n, d)).collect()
}

/// `C(n + K, n) − 1`, the number of nonconstant monomials through degree K.
pub fn basis_size(n: usize, max_degree: u32) -> usize {
    let mut c: u128 = 1;
    for j in 1..=n as u128 {
        c = c * (max_degree as u128 + j) / j;
    }
    (c - 1) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    #[test]
    fn displayed_basis_order() {
        assert_eq!(compare_monomials(&m(&[1, 0]), &m(&[0, 1])).unwrap(), Ordering::Less);
        assert_eq!(compare_monomials(&m(&[2, 0]), &m(&[1, 1])).unwrap(), Ordering::Less);
        assert_eq!(compare_monomials(&m(&[1, 1]), &m(&[0, 2])).unwrap(), Ordering::Less);
        assert_eq!(compare_monomials(&m(&[1, 0]), &m(&[1, 0])).unwrap(), Ordering::Equal);
        assert_eq!(compare_monomials(&m(&[0, 1]), &m(&[2, 0])).unwrap(), Ordering::Less);
    }

    #[test]
    fn dimension_mismatch() {
        assert!(compare_monomials(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_monomials(2, 2),
            vec![m(&[1, 0]), m(&[0, 1]), m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]
        );
        assert_eq!(enumerate_monomials(1, 3), vec![m(&[1]), m(&[2]), m(&[3])]);
        let deg1 = enumerate_monomials(3, 1);
        assert_eq!(deg1, vec![m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])]);
        assert_eq!(deg1.len(), basis_size(3, 1));
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(basis_size(2, 2), 5);
        assert_eq!(basis_size(4, 2), 14);
        assert_eq!(basis_size(1, 12), 12);
        for n in 1..5 {
            for k in 1..6 {
                assert_eq!(enumerate_monomials(n, k).len(), basis_size(n, k));
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(m(&[2, 0, 1]).to_string(), "z1^2*z3");
        assert_eq!(m(&[0, 0]).to_string(), "1");
    }
}
