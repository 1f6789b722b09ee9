//! Floating-point spot check that `|φ(z)| < |z|` on random points of the
//! unit ball. Advisory only: a finite jet cannot decide the property.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::polymap::PolyMap;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct SampleReport {
    pub samples: usize,
    pub violations: usize,
    /// Largest observed `|φ(z)| / |z|`.
    pub worst_ratio: f64,
}

type C64 = (f64, f64);

fn cmul(a: C64, b: C64) -> C64 {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn norm(z: &[C64]) -> f64 {
    z.iter().map(|c| c.0 * c.0 + c.1 * c.1).sum::<f64>().sqrt()
}

fn eval(phi: &PolyMap, z: &[C64]) -> Vec<C64> {
    phi.components()
        .iter()
        .map(|c| {
            let mut acc = (0.0, 0.0);
            for (alpha, coeff) in c.terms() {
                let mut term = Scalar::to_f64_pair(coeff);
                for (i, &e) in alpha.exponents().iter().enumerate() {
                    for _ in 0..e {
                        term = cmul(term, z[i]);
                    }
                }
                acc.0 += term.0;
                acc.1 += term.1;
            }
            acc
        })
        .collect()
}

pub fn sample_self_map(phi: &PolyMap, count: usize, seed: u64) -> SampleReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = phi.dim();
    let mut violations = 0;
    let mut worst: f64 = 0.0;
    let mut taken = 0;
    while taken < count {
        let z: Vec<C64> = (0..n).map(|_| (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let r = norm(&z);
        if r == 0.0 || r >= 1.0 {
            continue;
        }
        taken += 1;
        let ratio = norm(&eval(phi, &z)) / r;
        worst = worst.max(ratio);
        if ratio >= 1.0 {
            violations += 1;
        }
    }
    SampleReport { samples: count, violations, worst_ratio: worst }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ExactMatrix;

    #[test]
    fn contraction_has_no_violations() {
        let phi = PolyMap::linear(&ExactMatrix::diagonal(&[Scalar::ratio(1, 2), Scalar::ratio(1, 4)]), 1)
            .unwrap();
        let r = sample_self_map(&phi, 200, 7);
        assert_eq!(r.violations, 0);
        assert!(r.worst_ratio <= 0.5 + 1e-12);
    }

    #[test]
    fn expansion_is_flagged() {
        let phi = PolyMap::linear(&ExactMatrix::diagonal(&[Scalar::from_int(2)]), 1).unwrap();
        assert_eq!(sample_self_map(&phi, 50, 1).violations, 50);
    }
}
