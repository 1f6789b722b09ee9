use std::fmt;

use crate::comp_op::{from_table, truncation_degree, TruncatedCompOp};
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::linalg::{incremental_jordanize, ExactMatrix, JordanChain};
use crate::polymap::{conjugate_map, PolyMap, PowerTable};
use crate::scalar::Scalar;

use super::analysis::{report_and_chains, AnalysisReport};
use super::spectral::{validate_map_with, SpectralData};
use super::verify::verify;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Require an invertible `F'(0)`.
    FullRank,
    /// Only require linearly independent components.
    Independent,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::FullRank => "full-rank",
            Mode::Independent => "independent",
        })
    }
}

/// Where a component of the Jordan-frame solution came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInfo {
    pub eigenvalue: Scalar,
    pub block: usize,
    /// 1-based position inside the block; the last one is an eigenfunction.
    pub position: usize,
}

#[derive(Clone, Debug)]
pub struct SchroederSolution {
    /// `F` in the coordinates of the input map.
    pub map: PolyMap,
    /// The same solution for `ψ = D∘φ∘D⁻¹`; `map = D⁻¹·frame∘D`.
    pub frame: PolyMap,
    pub conjugator: ExactMatrix,
    /// Labels for the components of `frame`.
    pub components: Vec<ComponentInfo>,
    pub derivative: ExactMatrix,
    pub mode: Mode,
    /// The exponent k in `F∘φ = φ'(0)^k F`.
    pub power: u32,
    pub degree: u32,
    /// Degree through which the residual was checked to vanish.
    pub residual_degree: u32,
    pub component_rank: usize,
    pub analysis: AnalysisReport,
}

pub fn default_degree(k: u32) -> u32 {
    k.max(10)
}

pub fn solve(phi: &PolyMap, k_out: Option<u32>, mode: Mode) -> Result<SchroederSolution> {
    solve_with(phi, k_out, mode, None)
}

/// Output degree, ψ padded to it, the power table, and U.
pub(crate) struct Prepared {
    pub sd: SpectralData,
    pub k_out: u32,
    pub table: PowerTable,
    pub op: TruncatedCompOp,
    pub report: AnalysisReport,
    /// Per block, a chain of `U` projecting onto the corner's own chain.
    pub chains: Vec<Option<JordanChain>>,
}

pub(crate) fn prepare(phi: &PolyMap, k_out: Option<u32>, conj: Option<&ExactMatrix>) -> Result<Prepared> {
    let sd = validate_map_with(phi, conj)?;
    let k = truncation_degree(&sd.eigenvalues)?;
    let k_out = k_out.unwrap_or_else(|| default_degree(k));
    if k_out < k {
        return Err(Error::InvalidArgument(format!(
            "output degree {k_out} is below the truncation degree {k}"
        )));
    }
    let psi = sd.psi.pad_to(k_out);
    let table = PowerTable::new(&psi, k_out);
    let op = if k == k_out {
        from_table(&table, sd.dim)
    } else {
        crate::comp_op::build(&psi, k)?
    };
    let (report, chains) = report_and_chains(&sd, &op);
    Ok(Prepared { sd, k_out, table, op, report, chains })
}

pub fn solve_with(
    phi: &PolyMap,
    k_out: Option<u32>,
    mode: Mode,
    conj: Option<&ExactMatrix>,
) -> Result<SchroederSolution> {
    let prep = prepare(phi, k_out, conj)?;
    if mode == Mode::FullRank && !prep.report.full_rank_exists() {
        return Err(Error::NoFullRank(Box::new(prep.report)));
    }
    let (frame, components) = frame_solution(&prep, mode)?;
    finish(phi, &prep, frame, components, mode, 1)
}

/// The Jordan-frame solution. In full-rank mode block `j` uses its
/// normalized chain, so the frame has `F'(0) = I`; otherwise it takes the
/// `n_j` vectors nearest the eigenvector of the chain extending it.
pub(crate) fn frame_solution(prep: &Prepared, mode: Mode) -> Result<(PolyMap, Vec<ComponentInfo>)> {
    let sd = &prep.sd;
    let n = sd.dim;
    let basis = match mode {
        Mode::FullRank => None,
        Mode::Independent => Some(incremental_jordanize(&prep.op.u, n)?),
    };
    let mut comps: Vec<Option<Jet>> = vec![None; n];
    let mut info: Vec<Option<ComponentInfo>> = vec![None; n];
    for (j, ((lambda, len), start)) in sd.blocks.iter().zip(sd.block_starts()).enumerate() {
        let tail = match (mode, &prep.chains[j]) {
            (Mode::FullRank, Some(chain)) => chain.clone(),
            (Mode::FullRank, None) => return Err(Error::NoFullRank(Box::new(prep.report.clone()))),
            (Mode::Independent, _) => {
                let basis = basis.as_ref().expect("built for independent mode");
                let chain = &basis.chains[basis.provenance[j]];
                JordanChain { eigenvalue: lambda.clone(), vectors: chain.vectors[..*len].to_vec() }
            }
        };
        let lifted = lift_with_table(&prep.table, &prep.op, &tail, prep.k_out)?;
        // (C−λ) f_i = f_{i+1} inside the block; the eigenfunction comes last
        for (i, g) in lifted.into_iter().enumerate() {
            let pos = start + len - 1 - i;
            comps[pos] = Some(g);
            info[pos] = Some(ComponentInfo { eigenvalue: lambda.clone(), block: j, position: len - i });
        }
    }
    let frame = PolyMap::new(comps.into_iter().map(|c| c.expect("every slot filled")).collect())?;
    Ok((frame, info.into_iter().map(|c| c.expect("every slot filled")).collect()))
}

pub(crate) fn finish(
    phi: &PolyMap,
    prep: &Prepared,
    frame: PolyMap,
    components: Vec<ComponentInfo>,
    mode: Mode,
    power: u32,
) -> Result<SchroederSolution> {
    let d = &prep.sd.conjugator;
    let map = conjugate_map(&frame, &d.inverse()?)?;
    let b = prep.sd.linear_part.pow(power)?;
    let check = verify(&phi.pad_to(prep.k_out), &map, &b, prep.k_out)?;
    assert!(check.failure.is_none(), "solution residual must vanish: {:?}", check.failure);
    let derivative = map.linear_part();
    if mode == Mode::FullRank {
        assert_eq!(check.derivative_rank, prep.sd.dim, "full-rank solution with singular F'(0)");
    }
    Ok(SchroederSolution {
        map,
        frame,
        conjugator: d.clone(),
        components,
        derivative,
        mode,
        power,
        degree: prep.k_out,
        residual_degree: check.residual_degree,
        component_rank: check.component_rank,
        analysis: prep.report.clone(),
    })
}

/// Extends a chain of `U` to jets `g_1 … g_s` through `k_out` with
/// `(C_ψ−λ)g_1 = 0` and `(C_ψ−λ)g_i = g_{i−1}`. `psi` must have an
/// upper-triangular linear part.
pub fn lift_chain(psi: &PolyMap, op: &TruncatedCompOp, chain: &JordanChain, k_out: u32) -> Result<Vec<Jet>> {
    if k_out < op.degree {
        return Err(Error::InvalidArgument("output degree below the matrix degree".into()));
    }
    let table = PowerTable::new(&psi.pad_to(k_out), k_out);
    lift_with_table(&table, op, chain, k_out)
}

pub(crate) fn lift_with_table(
    table: &PowerTable,
    op: &TruncatedCompOp,
    chain: &JordanChain,
    k_out: u32,
) -> Result<Vec<Jet>> {
    let dim = op.dim;
    let lambda = &chain.eigenvalue;
    let mut out: Vec<Jet> = Vec::with_capacity(chain.len());
    for v in &chain.vectors {
        if v.len() != op.size() {
            return Err(Error::DimensionMismatch { expected: op.size(), found: v.len() });
        }
        let rhs = out.last().cloned().unwrap_or_else(|| Jet::zero(dim, k_out));
        let mut g = Jet::zero(dim, k_out);
        // acc = Σ g_β ψ^β over the β fixed so far
        let mut acc = Jet::zero(dim, k_out);
        for (pos, gamma) in table.basis().iter().enumerate() {
            let coeff = if pos < op.size() {
                v[pos].clone()
            } else {
                let power = table.power_at(pos);
                let diag = power.coeff(gamma);
                let denom = &diag - lambda;
                if denom.is_zero() {
                    return Err(Error::DiagonalCollision { degree: gamma.degree() });
                }
                &(&rhs.coeff(gamma) - &acc.coeff(gamma)) / &denom
            };
            if !coeff.is_zero() {
                acc.add_scaled(table.power_at(pos), &coeff);
                g.add_term(gamma.clone(), &coeff);
            }
        }
        out.push(g);
    }
    Ok(out)
}
