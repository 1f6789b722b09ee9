//! Jordanization of a lower-triangular matrix one appended row at a time,
//! starting from an upper-left corner that is already in Jordan form.

use crate::error::{Error, Result};
use crate::linalg::jordan::{JordanBasis, JordanChain};
use crate::linalg::matrix::{dot, unit_vec, ExactMatrix};
use crate::scalar::Scalar;

/// Splits a lower-triangular Jordan matrix into `(λ, start, length)` blocks.
pub fn corner_blocks(c: &ExactMatrix) -> Result<Vec<(Scalar, usize, usize)>> {
    let n = c.rows();
    for i in 0..n {
        for j in 0..n {
            let v = c.get(i, j);
            let ok = if i == j {
                true
            } else if i == j + 1 {
                v.is_zero() || (v.is_one() && c.get(i, i) == c.get(j, j))
            } else {
                v.is_zero()
            };
            if !ok {
                return Err(Error::NotJordanCorner(format!("entry ({}, {}) = {v}", i + 1, j + 1)));
            }
        }
    }
    let mut blocks: Vec<(Scalar, usize, usize)> = Vec::new();
    for i in 0..n {
        if i > 0 && c.get(i, i - 1).is_one() {
            blocks.last_mut().expect("block open").2 += 1;
        } else {
            blocks.push((c.get(i, i).clone(), i, 1));
        }
    }
    Ok(blocks)
}

/// Runs the row-append Jordanization of `u`, whose `n × n` corner must be a
/// lower-triangular Jordan matrix. Each corner block is tracked to the
/// chain that extends it.
pub fn incremental_jordanize(u: &ExactMatrix, n: usize) -> Result<JordanBasis> {
    if !u.is_square() {
        return Err(Error::NotSquare { rows: u.rows(), cols: u.cols() });
    }
    if !u.is_lower_triangular() {
        return Err(Error::NotTriangular(" (expected lower triangular)"));
    }
    if n > u.rows() {
        return Err(Error::DimensionMismatch { expected: u.rows(), found: n });
    }
    let blocks = corner_blocks(&u.submatrix(n, n))?;

    let mut chains: Vec<JordanChain> = Vec::new();
    let mut origin: Vec<Option<usize>> = Vec::new();
    for (j, (lambda, start, len)) in blocks.iter().enumerate() {
        let vectors = (0..*len).rev().map(|i| unit_vec(n, start + i)).collect();
        chains.push(JordanChain { eigenvalue: lambda.clone(), vectors });
        origin.push(Some(j));
    }

    for p in n..u.rows() {
        append_row(&mut chains, &mut origin, &u.row(p)[..p], u.get(p, p));
    }

    let mut provenance = vec![usize::MAX; blocks.len()];
    for (c, o) in origin.iter().enumerate() {
        if let Some(j) = o {
            provenance[*j] = c;
        }
    }
    Ok(JordanBasis { chains, provenance, corner_blocks: blocks })
}

/// Extends every chain by one coordinate for the row `(r, μ)`.
fn append_row(chains: &mut Vec<JordanChain>, origin: &mut Vec<Option<usize>>, r: &[Scalar], mu: &Scalar) {
    let p = r.len();
    let mut eligible: Vec<usize> = Vec::new();
    let mut firsts: Vec<Scalar> = Vec::with_capacity(chains.len());

    for (idx, chain) in chains.iter_mut().enumerate() {
        let a: Vec<Scalar> = chain.vectors.iter().map(|v| dot(r, v)).collect();
        let len = a.len();
        let mut c = Vec::with_capacity(len);
        if &chain.eigenvalue != mu {
            let inv = (mu - &chain.eigenvalue).inv().expect("distinct eigenvalues");
            let mut prev = Scalar::zero();
            for ai in &a {
                let ci = &(&prev - ai) * &inv;
                c.push(ci.clone());
                prev = ci;
            }
        } else {
            for i in 0..len {
                c.push(if i + 1 < len { a[i + 1].clone() } else { Scalar::zero() });
            }
            if !a[0].is_zero() {
                eligible.push(idx);
            }
        }
        for (v, ci) in chain.vectors.iter_mut().zip(c) {
            v.push(ci);
        }
        firsts.push(a[0].clone());
    }

    if eligible.is_empty() {
        chains.push(JordanChain { eigenvalue: mu.clone(), vectors: vec![unit_vec(p + 1, p)] });
        origin.push(None);
        return;
    }

    // longest eligible chain grows; ties go to a chain without provenance,
    // then to the earliest
    let absorber = *eligible
        .iter()
        .max_by(|&&x, &&y| {
            chains[x]
                .len()
                .cmp(&chains[y].len())
                .then_with(|| origin[y].is_some().cmp(&origin[x].is_some()))
                .then_with(|| y.cmp(&x))
        })
        .expect("nonempty");

    let abs_vectors = chains[absorber].vectors.clone();
    let abs_first = firsts[absorber].clone();
    let abs_first_inv = abs_first.inv().expect("eligible");
    for &s in &eligible {
        if s == absorber {
            continue;
        }
        let ratio = &firsts[s] * &abs_first_inv;
        for (i, v) in chains[s].vectors.iter_mut().enumerate() {
            for (x, y) in v.iter_mut().zip(&abs_vectors[i]) {
                if !y.is_zero() {
                    *x -= &ratio * y;
                }
            }
        }
    }

    let mut head = vec![Scalar::zero(); p + 1];
    head[p] = abs_first;
    chains[absorber].vectors.insert(0, head);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::jordan::jordan_matrix;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    fn bordered(corner: &ExactMatrix, row: &[Scalar], mu: Scalar) -> ExactMatrix {
        let n = corner.rows();
        let mut m = ExactMatrix::zeros(n + 1, n + 1);
        for (i, ri) in row.iter().enumerate().take(n) {
            for j in 0..n {
                m.set(i, j, corner.get(i, j).clone());
            }
            m.set(n, i, ri.clone());
        }
        m.set(n, n, mu);
        m
    }

    #[test]
    fn one_block_merges_when_last_entry_nonzero() {
        let l = q(1, 3);
        let j = jordan_matrix(&[(l.clone(), 2)]);
        let m = bordered(&j, &[Scalar::zero(), Scalar::one()], l.clone());
        let b = incremental_jordanize(&m, 2).unwrap();
        assert_eq!(b.block_sizes(&l), vec![3]);
        assert!(b.chains.iter().all(|c| c.is_chain_of(&m)));
        assert!(b.workhorse_holds());
    }

    #[test]
    fn one_block_splits_otherwise() {
        let l = q(1, 3);
        let j = jordan_matrix(&[(l.clone(), 2)]);
        let m = bordered(&j, &[Scalar::one(), Scalar::zero()], l.clone());
        let b = incremental_jordanize(&m, 2).unwrap();
        assert_eq!(b.block_sizes(&l), vec![2, 1]);
        let m = bordered(&j, &[Scalar::one(), Scalar::one()], q(1, 5));
        let b = incremental_jordanize(&m, 2).unwrap();
        assert_eq!(b.block_sizes(&l), vec![2]);
        assert_eq!(b.block_sizes(&q(1, 5)), vec![1]);
        assert!(b.chains.iter().all(|c| c.is_chain_of(&m)));
        assert!(b.workhorse_holds());
    }

    #[test]
    fn zero_row_adds_singleton() {
        let j = jordan_matrix(&[(q(1, 2), 1), (q(1, 4), 2)]);
        let m = bordered(&j, &[Scalar::zero(), Scalar::zero(), Scalar::zero()], q(1, 4));
        let b = incremental_jordanize(&m, 3).unwrap();
        assert_eq!(b.chains.len(), 3);
        assert_eq!(b.block_sizes(&q(1, 4)), vec![2, 1]);
        assert_eq!(b.provenance, vec![0, 1]);
    }

    #[test]
    fn corner_must_be_jordan() {
        let c = ExactMatrix::from_ratios(&[&[(1, 4), (0, 1)], &[(1, 8), (1, 4)]]);
        assert!(matches!(incremental_jordanize(&c, 2), Err(Error::NotJordanCorner(_))));
        let up = ExactMatrix::from_ratios(&[&[(1, 4), (1, 1)], &[(0, 1), (1, 4)]]);
        assert!(matches!(incremental_jordanize(&up, 1), Err(Error::NotTriangular(_))));
    }
}
