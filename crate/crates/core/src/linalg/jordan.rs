//! Jordan chains of triangular matrices.

use crate::error::{Error, Result};
use crate::linalg::matrix::{axpy, is_zero_vec, scale_vec, EchelonSpan, ExactMatrix};
use crate::scalar::Scalar;

/// Vectors `v_1 … v_k` with `(M−λ)v_1 = 0` and `(M−λ)v_i = v_{i−1}`.
/// Stored eigenvector first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanChain {
    pub eigenvalue: Scalar,
    pub vectors: Vec<Vec<Scalar>>,
}

impl JordanChain {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn eigenvector(&self) -> &[Scalar] {
        &self.vectors[0]
    }

    /// The vector farthest from the eigenvector.
    pub fn top(&self) -> &[Scalar] {
        &self.vectors[self.vectors.len() - 1]
    }

    /// Replays the chain relations against `m`.
    pub fn is_chain_of(&self, m: &ExactMatrix) -> bool {
        let shifted = m.shifted(&self.eigenvalue);
        let mut prev: Option<&Vec<Scalar>> = None;
        for v in &self.vectors {
            if is_zero_vec(v) {
                return false;
            }
            let Ok(image) = shifted.mul_vec(v) else {
                return false;
            };
            let ok = match prev {
                None => is_zero_vec(&image),
                Some(p) => &image == p,
            };
            if !ok {
                return false;
            }
            prev = Some(v);
        }
        true
    }
}

/// A chain basis for a square matrix, optionally recording which block of
/// a protected upper-left corner each chain grew out of.
#[derive(Clone, Debug)]
pub struct JordanBasis {
    pub chains: Vec<JordanChain>,
    /// `provenance[j]` is the chain extending corner block `j`.
    pub provenance: Vec<usize>,
    /// Corner blocks as `(λ, first coordinate, length)`.
    pub corner_blocks: Vec<(Scalar, usize, usize)>,
}

impl JordanBasis {
    pub fn size(&self) -> usize {
        self.chains.first().map_or(0, |c| c.vectors[0].len())
    }

    /// Columns are the chain vectors, each chain listed top first, so that
    /// `P⁻¹·M·P` is a lower-triangular Jordan matrix.
    pub fn transition(&self) -> ExactMatrix {
        let cols: Vec<Vec<Scalar>> =
            self.chains.iter().flat_map(|c| c.vectors.iter().rev().cloned()).collect();
        ExactMatrix::from_columns(&cols).expect("equal lengths")
    }

    pub fn jordan_matrix(&self) -> ExactMatrix {
        let blocks: Vec<(Scalar, usize)> =
            self.chains.iter().map(|c| (c.eigenvalue.clone(), c.len())).collect();
        jordan_matrix(&blocks)
    }

    /// Chain lengths for `λ`, longest first.
    pub fn block_sizes(&self, lambda: &Scalar) -> Vec<usize> {
        let mut v: Vec<usize> =
            self.chains.iter().filter(|c| &c.eigenvalue == lambda).map(JordanChain::len).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Coordinates of `v` on corner block `j`.
    pub fn project_block(&self, j: usize, v: &[Scalar]) -> Vec<Scalar> {
        let (_, start, len) = &self.corner_blocks[j];
        v[*start..start + len].to_vec()
    }

    /// For every corner block `j` with chain `c`: the `i`-th vector of `c`
    /// counted from the top projects onto block `j` as its `i`-th unit
    /// vector, for `i ≤ n_j`.
    pub fn workhorse_holds(&self) -> bool {
        self.corner_blocks.iter().enumerate().all(|(j, (lambda, _, len))| {
            let chain = &self.chains[self.provenance[j]];
            if &chain.eigenvalue != lambda || chain.len() < *len {
                return false;
            }
            let d = chain.len();
            (0..*len).all(|i| {
                let q = self.project_block(j, &chain.vectors[d - 1 - i]);
                q.iter().enumerate().all(|(r, x)| if r == i { x.is_one() } else { x.is_zero() })
            })
        })
    }
}

/// Lower-triangular Jordan matrix with the given blocks on the diagonal.
pub fn jordan_matrix(blocks: &[(Scalar, usize)]) -> ExactMatrix {
    let n: usize = blocks.iter().map(|b| b.1).sum();
    let mut m = ExactMatrix::zeros(n, n);
    let mut s = 0;
    for (lambda, len) in blocks {
        for i in 0..*len {
            m.set(s + i, s + i, lambda.clone());
            if i > 0 {
                m.set(s + i, s + i - 1, Scalar::one());
            }
        }
        s += len;
    }
    m
}

/// `dim ker (M−λ)^p` for `p = 1 … size`.
pub fn rank_sequence_oracle(m: &ExactMatrix, lambda: &Scalar) -> Result<Vec<usize>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let shifted = m.shifted(lambda);
    let mut power = ExactMatrix::identity(n);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        power = power.mat_mul(&shifted)?;
        out.push(n - power.rank());
    }
    Ok(out)
}

/// Block lengths encoded by a kernel-dimension sequence, longest first.
pub fn blocks_from_rank_sequence(dims: &[usize]) -> Vec<usize> {
    let at_least = |p: usize| -> usize {
        // blocks of length ≥ p
        let hi = dims.get(p - 1).copied().unwrap_or(*dims.last().unwrap_or(&0));
        let lo = if p >= 2 { dims.get(p - 2).copied().unwrap_or(hi) } else { 0 };
        hi - lo
    };
    let mut out = Vec::new();
    for p in (1..=dims.len()).rev() {
        let exact = at_least(p) - if p < dims.len() { at_least(p + 1) } else { 0 };
        out.extend(std::iter::repeat_n(p, exact));
    }
    out
}

fn check_triangular(m: &ExactMatrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if !m.is_triangular() {
        return Err(Error::NotTriangular(""));
    }
    Ok(())
}

/// A maximal independent family of chains of `m` for `λ`, longest first,
/// normalized so each eigenvector has leading coordinate 1 and every
/// higher vector vanishes at that coordinate.
pub fn jordan_chains_triangular(m: &ExactMatrix, lambda: &Scalar) -> Result<Vec<JordanChain>> {
    check_triangular(m)?;
    if !m.diag().contains(lambda) {
        return Ok(Vec::new());
    }
    let n = m.rows();
    let shifted = m.shifted(lambda);

    // kernels of (M−λ)^p until they stop growing
    let mut kernels: Vec<Vec<Vec<Scalar>>> = vec![Vec::new()];
    let mut power = ExactMatrix::identity(n);
    for _ in 0..n {
        power = power.mat_mul(&shifted)?;
        let k = power.kernel_basis();
        if k.len() == kernels.last().map_or(0, Vec::len) {
            break;
        }
        kernels.push(k);
    }
    let height = kernels.len() - 1;

    let apply = |v: &[Scalar], times: usize| -> Vec<Scalar> {
        let mut w = v.to_vec();
        for _ in 0..times {
            w = shifted.mul_vec(&w).expect("square");
        }
        w
    };

    let mut tops: Vec<(Vec<Scalar>, usize)> = Vec::new();
    for p in (1..=height).rev() {
        let mut span = EchelonSpan::new();
        for v in &kernels[p - 1] {
            span.insert(v);
        }
        for (t, l) in &tops {
            span.insert(&apply(t, l - p));
        }
        for v in &kernels[p] {
            if span.insert(v) {
                tops.push((v.clone(), p));
            }
        }
    }

    Ok(tops.into_iter().map(|(t, len)| normalized_chain(&shifted, lambda, t, len)).collect())
}

fn build_chain(shifted: &ExactMatrix, top: &[Scalar], len: usize) -> Vec<Vec<Scalar>> {
    let mut vs = vec![top.to_vec()];
    for _ in 1..len {
        let next = shifted.mul_vec(vs.last().unwrap()).expect("square");
        vs.push(next);
    }
    vs.reverse();
    vs
}

fn normalized_chain(shifted: &ExactMatrix, lambda: &Scalar, top: Vec<Scalar>, len: usize) -> JordanChain {
    let mut t = top;
    let mut vs = build_chain(shifted, &t, len);
    let pivot = vs[0].iter().position(|x| !x.is_zero()).expect("nonzero eigenvector");
    let s = vs[0][pivot].inv().expect("nonzero");
    t = scale_vec(&t, &s);
    vs = build_chain(shifted, &t, len);
    for m in 2..=len {
        let c = vs[m - 1][pivot].clone();
        if !c.is_zero() {
            // v_{len−m+1} = (M−λ)^{m−1} t; removing it from t clears v_m at the pivot
            let shift = vs[len - m].clone();
            axpy(&mut t, &-c, &shift);
            vs = build_chain(shifted, &t, len);
        }
    }
    JordanChain { eigenvalue: lambda.clone(), vectors: vs }
}

/// Distinct diagonal entries in order of first appearance.
pub fn distinct_diagonal(m: &ExactMatrix) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::new();
    for d in m.diag() {
        if !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

/// Chain basis for a triangular `a` with `T·a·T⁻¹ = J` lower-triangular
/// Jordan, where `T` is the inverse of the basis' transition matrix.
/// Blocks are ordered by the leading coordinate of their top vector, so a
/// diagonal input gives `T = I`.
pub fn transition_to_jordan_triangular(a: &ExactMatrix) -> Result<(JordanBasis, ExactMatrix)> {
    check_triangular(a)?;
    let mut chains = Vec::new();
    for lambda in distinct_diagonal(a) {
        chains.extend(jordan_chains_triangular(a, &lambda)?);
    }
    chains.sort_by_key(|c| c.top().iter().position(|x| !x.is_zero()));
    let basis = JordanBasis { chains, provenance: Vec::new(), corner_blocks: Vec::new() };
    let j = basis.jordan_matrix();
    Ok((basis, j))
}
