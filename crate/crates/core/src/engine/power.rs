use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::linalg::{jordan_matrix, transition_to_jordan_triangular, ExactMatrix};
use crate::polymap::PolyMap;

use super::solve::{finish, frame_solution, prepare, solve_with, ComponentInfo, Mode, SchroederSolution};

/// Solves `G∘φ = φ'(0)^k G` with linearly independent components.
pub fn solve_power(phi: &PolyMap, k: u32, k_out: Option<u32>) -> Result<SchroederSolution> {
    solve_power_with(phi, k, k_out, Mode::Independent, None)
}

/// For `k = 1` this is [`solve_with`] in the given mode. For `k > 1` no
/// full-rank solution exists and `mode` is ignored.
pub fn solve_power_with(
    phi: &PolyMap,
    k: u32,
    k_out: Option<u32>,
    mode: Mode,
    conj: Option<&ExactMatrix>,
) -> Result<SchroederSolution> {
    match k {
        0 => return Err(Error::InvalidArgument("k must be at least 1".into())),
        1 => return solve_with(phi, k_out, mode, conj),
        _ => {}
    }
    let prep = prepare(phi, k_out, conj)?;
    let (frame, _) = frame_solution(&prep, Mode::Independent)?;
    let sd = &prep.sd;
    let mut comps: Vec<Jet> = Vec::with_capacity(sd.dim);
    let mut info = Vec::with_capacity(sd.dim);
    // lowest degree at which every h_i can be nonzero
    let mut suggested = prep.k_out + 1;
    for (j, ((lambda, s), start)) in sd.blocks.iter().zip(sd.block_starts()).enumerate() {
        let s = *s;
        let f: Vec<&Jet> = (0..s).map(|i| frame.component(start + i)).collect();
        let fs_pow = pow_jet(f[s - 1], k - 1)?;
        let low = |g: &Jet| g.min_degree().unwrap_or(prep.k_out + 1);
        for fi in &f {
            suggested = suggested.max(low(fi) + (k - 1) * low(f[s - 1]));
        }
        // h_i = f_i · f_s^{k−1} / λ^{(k−1)(s−i)}
        let h: Vec<Jet> = (0..s)
            .map(|i| {
                let scale = lambda.powu((k - 1) * (s - 1 - i) as u32).inv()?;
                Ok(f[i].mul(&fs_pow)?.scale(&scale))
            })
            .collect::<Result<_>>()?;

        let jk = jordan_matrix(&[(lambda.clone(), s)]).pow(k)?;
        let (basis, l) = transition_to_jordan_triangular(&jk)?;
        let lk = lambda.powu(k);
        assert_eq!(l, jordan_matrix(&[(lk.clone(), s)]), "J^k is a single Jordan block");
        let t = basis.transition().inverse()?;
        // G = Tᵗ·H
        for r in 0..s {
            let mut g = Jet::zero(sd.dim, prep.k_out);
            for (c, hc) in h.iter().enumerate() {
                g.add_scaled(hc, t.get(c, r));
            }
            comps.push(g);
            info.push(ComponentInfo { eigenvalue: lk.clone(), block: j, position: r + 1 });
        }
    }
    let frame = PolyMap::new(comps)?;
    let sol = finish(phi, &prep, frame, info, Mode::Independent, k)?;
    // G is exact through k_out, but products of high-order eigenfunctions
    // can truncate to zero there
    if sol.component_rank < sd.dim {
        return Err(Error::DegeneratePower { degree: prep.k_out, suggested });
    }
    assert!(sol.derivative.rank() < sd.dim, "G'(0) must be singular for k > 1");
    Ok(sol)
}

fn pow_jet(f: &Jet, e: u32) -> Result<Jet> {
    let mut acc = Jet::constant(f.dim(), f.truncation(), crate::scalar::Scalar::one());
    for _ in 0..e {
        acc = acc.mul(f)?;
    }
    Ok(acc)
}
