use crate::comp_op::detect_products;
use crate::error::{Error, Result};
use crate::linalg::{corner_blocks, distinct_diagonal, transition_to_jordan_triangular, ExactMatrix};
use crate::polymap::{conjugate_map, PolyMap};
use crate::scalar::Scalar;

/// Everything derived from `φ'(0)` that the rest of the pipeline needs.
#[derive(Clone, Debug)]
pub struct SpectralData {
    pub dim: usize,
    /// `φ'(0)` of the input map.
    pub linear_part: ExactMatrix,
    /// Distinct eigenvalues in the order they appear on the Jordan diagonal.
    pub eigenvalues: Vec<Scalar>,
    /// `(λ_j, n_j)` in coordinate order of `ψ`.
    pub blocks: Vec<(Scalar, usize)>,
    /// `M` with `M·φ'(0)ᵗ·M⁻¹` lower-triangular Jordan.
    pub transition: ExactMatrix,
    /// `D` with `ψ = D∘φ∘D⁻¹`, so `ψ'(0)` is upper-triangular Jordan.
    pub conjugator: ExactMatrix,
    pub psi: PolyMap,
    pub resonance: Vec<Scalar>,
}

impl SpectralData {
    /// First coordinate of each block.
    pub fn block_starts(&self) -> Vec<usize> {
        let mut s = 0;
        self.blocks
            .iter()
            .map(|(_, n)| {
                let start = s;
                s += n;
                start
            })
            .collect()
    }

    /// `ψ'(0)ᵗ`, the lower-triangular Jordan matrix.
    pub fn jordan(&self) -> ExactMatrix {
        crate::linalg::jordan_matrix(&self.blocks)
    }
}

pub fn validate_map(phi: &PolyMap) -> Result<SpectralData> {
    validate_map_with(phi, None)
}

/// As [`validate_map`], first conjugating by `conj` when given, so that
/// maps with a non-triangular linear part can be handled.
pub fn validate_map_with(phi: &PolyMap, conj: Option<&ExactMatrix>) -> Result<SpectralData> {
    let n = phi.dim();
    let a = phi.linear_part();
    let (user_d, phi_c) = match conj {
        Some(d) => {
            if d.rows() != n || d.cols() != n {
                return Err(Error::DimensionMismatch { expected: n, found: d.rows() });
            }
            (d.clone(), conjugate_map(phi, d)?)
        }
        None => (ExactMatrix::identity(n), phi.clone()),
    };
    let a_c = phi_c.linear_part();
    if !a_c.is_triangular() {
        return Err(Error::NotTriangular(" (linear part; supply a conjugator)"));
    }
    if a_c.diag().iter().any(Scalar::is_zero) {
        return Err(Error::SingularLinearPart);
    }
    let eig_all = a_c.diag();
    let resonance = detect_resonance(&eig_all)?;

    let (basis, j) = transition_to_jordan_triangular(&a_c.transpose())?;
    let p = basis.transition();
    let transition = p.inverse()?;
    let d_jordan = p.transpose();
    let conjugator = d_jordan.mat_mul(&user_d)?;
    let psi = conjugate_map(phi, &conjugator)?;
    debug_assert_eq!(psi.linear_part(), j.transpose());

    let blocks = corner_blocks(&j)?.into_iter().map(|(l, _, len)| (l, len)).collect();
    Ok(SpectralData {
        dim: n,
        linear_part: a,
        eigenvalues: distinct_diagonal(&j),
        blocks,
        transition,
        conjugator,
        psi,
        resonance,
    })
}

/// Eigenvalues equal to a product of at least two eigenvalues.
pub fn detect_resonance(eigs: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut out: Vec<Scalar> = Vec::new();
    for (mu, _) in detect_products(eigs)? {
        if !out.contains(&mu) {
            out.push(mu);
        }
    }
    // report in spectrum order
    let mut ordered: Vec<Scalar> = Vec::new();
    for e in eigs {
        if out.contains(e) && !ordered.contains(e) {
            ordered.push(e.clone());
        }
    }
    Ok(ordered)
}
