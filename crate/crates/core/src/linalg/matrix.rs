use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix over the Gaussian rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = ExactMatrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch { expected: c, found: bad.len() });
        }
        Ok(ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Square matrix from small integer ratios `(num, den)`, handy in tests.
    pub fn from_ratios(rows: &[&[(i64, i64)]]) -> Self {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(n, d)| Scalar::ratio(n, d)).collect())
                .collect(),
        )
        .expect("ragged rows")
    }

    pub fn from_columns(cols: &[Vec<Scalar>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = ExactMatrix::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            if col.len() != r {
                return Err(Error::DimensionMismatch { expected: r, found: col.len() });
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diag(&self) -> Vec<Scalar> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = ExactMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Upper-left `r × c` block.
    pub fn submatrix(&self, r: usize, c: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(r, c);
        for i in 0..r {
            for j in 0..c {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(())
    }

    pub fn mat_mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    /// `self − λ·I`.
    pub fn shifted(&self, lambda: &Scalar) -> ExactMatrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i) - lambda;
            m.set(i, i, v);
        }
        m
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, p: u32) -> Result<ExactMatrix> {
        self.require_square()?;
        let mut acc = ExactMatrix::identity(self.rows);
        for _ in 0..p {
            acc = acc.mat_mul(self)?;
        }
        Ok(acc)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_triangular(&self) -> bool {
        self.is_lower_triangular() || self.is_upper_triangular()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Gauss–Jordan elimination choosing the first nonzero entry of each
    /// column as pivot.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let sub = &f * m.get(r, j);
                    if !sub.is_zero() {
                        let v = m.get(i, j) - &sub;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// A basis of the null space: one vector per free column, with a 1 in
    /// that column. Empty iff the matrix is injective.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(r, f);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<ExactMatrix> {
        self.require_square()?;
        let n = self.rows;
        let mut aug = ExactMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one());
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, matrix.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    /// Solves `self · X = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.require_square()?;
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: rhs.rows });
        }
        let n = self.rows;
        let mut aug = ExactMatrix::zeros(n, n + rhs.cols);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                aug.set(i, n + j, rhs.get(i, j).clone());
            }
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut x = ExactMatrix::zeros(n, rhs.cols);
        for i in 0..n {
            for j in 0..rhs.cols {
                x.set(i, j, matrix.get(i, n + j).clone());
            }
        }
        Ok(x)
    }

    pub fn solve_vec(&self, b: &[Scalar]) -> Result<Vec<Scalar>> {
        let rhs = ExactMatrix::from_columns(&[b.to_vec()])?;
        Ok(self.solve(&rhs)?.column(0))
    }

    /// Some `x` with `self · x = b` for any shape, free variables set to 0;
    /// `None` if the system is inconsistent.
    pub fn particular_solution(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let mut aug = ExactMatrix::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += c·x`.
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += c * xi;
        }
    }
}

pub fn scale_vec(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Rank of a list of equal-length vectors.
pub fn rank_of_vectors(vs: &[Vec<Scalar>]) -> usize {
    let mut span = EchelonSpan::new();
    vs.iter().filter(|v| span.insert(v)).count()
}

/// An incrementally grown subspace kept in echelon form, for independence
/// tests.
#[derive(Clone, Debug, Default)]
pub struct EchelonSpan {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if !w[*p].is_zero() {
                let c = -w[*p].clone();
                axpy(&mut w, &c, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Adds `v`; returns whether it was independent of the current span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero");
        let w = scale_vec(&w, &inv);
        // keep earlier rows reduced at the new pivot
        for (_, row) in &mut self.rows {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy(row, &c, &w);
            }
        }
        self.rows.push((p, w));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_kernel_is_empty() {
        assert!(ExactMatrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn rank_and_inverse_examples() {
        let d = ExactMatrix::diagonal(&[Scalar::ratio(1, 2), Scalar::ratio(1, 4)]);
        assert_eq!(d.rank(), 2);
        let a = ExactMatrix::from_ratios(&[&[(1, 1), (1, 1)], &[(0, 1), (1, 1)]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, ExactMatrix::from_ratios(&[&[(1, 1), (-1, 1)], &[(0, 1), (1, 1)]]));
        assert_eq!(inv.mat_mul(&a).unwrap(), ExactMatrix::identity(2));
    }

    #[test]
    fn singular_inputs_signal_error() {
        let s = ExactMatrix::from_ratios(&[&[(1, 1), (2, 1)], &[(2, 1), (4, 1)]]);
        assert!(matches!(s.inverse(), Err(Error::Singular)));
        assert!(matches!(s.solve_vec(&[Scalar::one(), Scalar::one()]), Err(Error::Singular)));
        let r = ExactMatrix::zeros(2, 3);
        assert!(matches!(r.inverse(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn solve_round_trip() {
        let a = ExactMatrix::from_rows(vec![
            vec![Scalar::complex(1, 2, 1, 1), Scalar::from_int(3)],
            vec![Scalar::from_int(-1), Scalar::complex(0, 1, 2, 3)],
        ])
        .unwrap();
        let b = vec![Scalar::one(), Scalar::i()];
        let x = a.solve_vec(&b).unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), b);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = ExactMatrix::from_ratios(&[
            &[(1, 1), (2, 1), (3, 1)],
            &[(2, 1), (4, 1), (6, 1)],
            &[(1, 2), (0, 1), (1, 1)],
        ]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&a.mul_vec(&k[0]).unwrap()));
        assert_eq!(a.rank() + k.len(), 3);
    }

    #[test]
    fn echelon_span_tracks_dimension() {
        let mut s = EchelonSpan::new();
        assert!(s.insert(&[Scalar::one(), Scalar::one(), Scalar::zero()]));
        assert!(s.insert(&[Scalar::zero(), Scalar::one(), Scalar::one()]));
        assert!(!s.insert(&[Scalar::one(), Scalar::from_int(2), Scalar::one()]));
        assert!(s.contains(&[Scalar::one(), Scalar::zero(), -Scalar::one()]));
        assert!(s.insert(&[Scalar::zero(), Scalar::zero(), Scalar::one()]));
        assert_eq!(s.dim(), 3);
    }

    #[test]
    fn triangularity() {
        let l = ExactMatrix::from_ratios(&[&[(1, 1), (0, 1)], &[(3, 1), (1, 1)]]);
        assert!(l.is_lower_triangular());
        assert!(!l.is_upper_triangular());
        assert!(l.transpose().is_upper_triangular());
    }

    #[test]
    fn particular_solution_rectangular() {
        let a = ExactMatrix::from_ratios(&[&[(1, 1), (2, 1), (0, 1)], &[(2, 1), (4, 1), (1, 1)]]);
        let b = vec![Scalar::from_int(3), Scalar::from_int(7)];
        let x = a.particular_solution(&b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), b);
        let bad = ExactMatrix::from_ratios(&[&[(1, 1)], &[(2, 1)]]);
        assert!(bad.particular_solution(&[Scalar::one(), Scalar::one()]).unwrap().is_none());
    }
}
