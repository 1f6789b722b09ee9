use crate::comp_op::{build, project_first_n, truncation_degree, TruncatedCompOp};
use crate::error::Result;
use crate::linalg::{rank_of_vectors, ExactMatrix, JordanChain};
use crate::polymap::PolyMap;
use crate::scalar::Scalar;

use super::spectral::{validate_map_with, SpectralData};

/// Kernel dimensions for one eigenvalue `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenRecord {
    pub eigenvalue: Scalar,
    pub resonant: bool,
    /// `dim ker(φ'(0)ᵗ − μ)`
    pub d_orig: usize,
    /// `dim ker(U − μ)`
    pub d_ker: usize,
    /// `dim Q(ker(U − μ))`
    pub d_proj: usize,
    pub full_rank_possible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub dim: usize,
    pub blocks: Vec<(Scalar, usize)>,
    pub resonance: Vec<Scalar>,
    pub records: Vec<EigenRecord>,
    pub verdict: bool,
    /// Truncation degree K.
    pub degree: u32,
    /// Size N of U.
    pub size: usize,
    /// Jordan blocks of `φ'(0)` whose normalized chain system has no
    /// solution in `U`. Can be nonempty even when `verdict` holds: the
    /// projected kernels only see eigenvectors, not whole chains.
    pub obstructed_blocks: Vec<usize>,
}

impl AnalysisReport {
    pub fn record(&self, mu: &Scalar) -> Option<&EigenRecord> {
        self.records.iter().find(|r| &r.eigenvalue == mu)
    }

    /// Whether a solution with invertible `F'(0)` exists: the kernel
    /// criterion holds and every block's chain system is solvable.
    pub fn full_rank_exists(&self) -> bool {
        self.verdict && self.obstructed_blocks.is_empty()
    }
}

pub fn analyze(phi: &PolyMap) -> Result<AnalysisReport> {
    analyze_with(phi, None)
}

pub fn analyze_with(phi: &PolyMap, conj: Option<&ExactMatrix>) -> Result<AnalysisReport> {
    let sd = validate_map_with(phi, conj)?;
    let k = truncation_degree(&sd.eigenvalues)?;
    let op = build(&sd.psi.pad_to(k).truncate(k), k)?;
    Ok(report_for(&sd, &op))
}

/// For each Jordan block `(λ, s)` of `ψ'(0)` starting at `t`, a chain
/// `w_1 … w_s` of `U` (eigenvector first) whose projections are the
/// corner's own chain `e_{t+s−1}, …, e_t`, or `None` if there is none.
/// A full-rank solution exists iff every block has one: normalizing
/// `F'(0) = I` turns its components into exactly such chains.
pub(crate) fn normalized_block_chains(sd: &SpectralData, op: &TruncatedCompOp) -> Vec<Option<JordanChain>> {
    let n = sd.dim;
    let size = op.size();
    sd.blocks
        .iter()
        .zip(sd.block_starts())
        .map(|((lambda, len), start)| {
            let len = *len;
            let shifted = op.u.shifted(lambda);
            let mut sys = ExactMatrix::zeros(len * (size + n), len * size);
            let mut rhs = vec![Scalar::zero(); len * (size + n)];
            for i in 0..len {
                // (U − λ) w_i − w_{i−1} = 0
                for r in 0..size {
                    for c in 0..=r {
                        let v = shifted.get(r, c);
                        if !v.is_zero() {
                            sys.set(i * size + r, i * size + c, v.clone());
                        }
                    }
                    if i > 0 {
                        sys.set(i * size + r, (i - 1) * size + r, -Scalar::one());
                    }
                }
                // Q w_i = e_{start+len−1−i}
                let row0 = len * size + i * n;
                for r in 0..n {
                    sys.set(row0 + r, i * size + r, Scalar::one());
                }
                rhs[row0 + start + len - 1 - i] = Scalar::one();
            }
            let x = sys.particular_solution(&rhs).expect("shapes agree")?;
            let vectors = x.chunks(size).map(<[Scalar]>::to_vec).collect();
            Some(JordanChain { eigenvalue: lambda.clone(), vectors })
        })
        .collect()
}

pub(crate) fn report_for(sd: &SpectralData, op: &TruncatedCompOp) -> AnalysisReport {
    report_and_chains(sd, op).0
}

pub(crate) fn report_and_chains(
    sd: &SpectralData,
    op: &TruncatedCompOp,
) -> (AnalysisReport, Vec<Option<JordanChain>>) {
    let n = sd.dim;
    let jordan = sd.jordan();
    let records: Vec<EigenRecord> = sd
        .eigenvalues
        .iter()
        .map(|mu| {
            let d_orig = n - jordan.shifted(mu).rank();
            let kernel = op.u.shifted(mu).kernel_basis();
            let projected: Vec<Vec<Scalar>> = kernel.iter().map(|v| project_first_n(v, n)).collect();
            let d_proj = rank_of_vectors(&projected);
            EigenRecord {
                eigenvalue: mu.clone(),
                resonant: sd.resonance.contains(mu),
                d_orig,
                d_ker: kernel.len(),
                d_proj,
                full_rank_possible: d_proj == d_orig,
            }
        })
        .collect();
    let chains = normalized_block_chains(sd, op);
    let report = AnalysisReport {
        dim: n,
        blocks: sd.blocks.clone(),
        resonance: sd.resonance.clone(),
        verdict: records.iter().all(|r| r.full_rank_possible),
        records,
        degree: op.degree,
        size: op.size(),
        obstructed_blocks: chains
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(j, _)| j)
            .collect(),
    };
    (report, chains)
}
