mod common;

use proptest::prelude::*;
use rand::Rng;

use common::*;
use schroeder::linalg::{
    incremental_jordanize, jordan_chains_triangular, rank_of_vectors, transition_to_jordan_triangular, JordanChain,
};
use schroeder::{analyze, build, validate_map, ExactMatrix, PolyMap, Scalar};

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// `(M − λ)v` by hand, without the library's shifted/mul_vec.
fn apply_shifted(m: &ExactMatrix, lambda: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows())
        .map(|i| {
            let mut acc = Scalar::zero();
            for (j, x) in v.iter().enumerate() {
                let mut e = m.get(i, j).clone();
                if i == j {
                    e = &e - lambda;
                }
                acc += &e * x;
            }
            acc
        })
        .collect()
}

fn replay(m: &ExactMatrix, c: &JordanChain) -> bool {
    let zero = vec![Scalar::zero(); m.rows()];
    let mut prev = zero.clone();
    for v in &c.vectors {
        if v == &zero || apply_shifted(m, &c.eigenvalue, v) != prev {
            return false;
        }
        prev = v.clone();
    }
    true
}

fn bordered(seed: u64, max: usize) -> (ExactMatrix, usize) {
    let mut r = rng(seed);
    let size = r.gen_range(1..=max);
    random_bordered_jordan(&mut r, size)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chains_replay_and_span(seed in 0u64..1_000_000) {
        let (m, n) = bordered(seed, 8);
        let basis = incremental_jordanize(&m, n).unwrap();
        let mut all = Vec::new();
        for c in &basis.chains {
            prop_assert!(replay(&m, c));
            all.extend(c.vectors.iter().cloned());
        }
        prop_assert_eq!(rank_of_vectors(&all), m.rows());
        for lambda in eigenvalues(&m) {
            let chains = jordan_chains_triangular(&m, &lambda).unwrap();
            let mut vs = Vec::new();
            for c in &chains {
                prop_assert!(replay(&m, c));
                vs.extend(c.vectors.iter().cloned());
            }
            prop_assert_eq!(rank_of_vectors(&vs), vs.len());
        }
    }

    #[test]
    fn block_multisets_match_oracle(seed in 0u64..1_000_000) {
        let (m, n) = bordered(seed, 8);
        let basis = incremental_jordanize(&m, n).unwrap();
        for lambda in eigenvalues(&m) {
            let oracle = sorted(oracle_blocks(&m, &lambda));
            prop_assert_eq!(basis.block_sizes(&lambda), oracle.clone());
            let direct: Vec<usize> = jordan_chains_triangular(&m, &lambda).unwrap().iter().map(JordanChain::len).collect();
            prop_assert_eq!(sorted(direct), oracle);
        }
    }

    #[test]
    fn original_blocks_survive(seed in 0u64..1_000_000) {
        let (m, n) = bordered(seed, 8);
        let basis = incremental_jordanize(&m, n).unwrap();
        for (j, (lambda, _, len)) in basis.corner_blocks.iter().enumerate() {
            let c = &basis.chains[basis.provenance[j]];
            prop_assert_eq!(&c.eigenvalue, lambda);
            prop_assert!(c.len() >= *len);
        }
        prop_assert!(basis.workhorse_holds());
    }

    /// A strictly smaller projected kernel forces some original block at
    /// that eigenvalue to have grown.
    #[test]
    fn strict_projection_means_growth(seed in 0u64..1_000_000) {
        let (m, n) = bordered(seed, 7);
        if n == 0 {
            return Ok(());
        }
        let basis = incremental_jordanize(&m, n).unwrap();
        let corner = m.submatrix(n, n);
        for lambda in eigenvalues(&corner) {
            let d_orig = n - corner.shifted(&lambda).rank();
            let kernel = m.shifted(&lambda).kernel_basis();
            let projected: Vec<Vec<Scalar>> = kernel.iter().map(|v| v[..n].to_vec()).collect();
            let d_proj = rank_of_vectors(&projected);
            prop_assert!(d_proj <= d_orig);
            if d_proj < d_orig {
                let grew = basis.corner_blocks.iter().enumerate().any(|(j, (l, _, len))| {
                    l == &lambda && basis.chains[basis.provenance[j]].len() > *len
                });
                prop_assert!(grew);
            }
        }
    }

    /// Block-triangular input, brought to lower-triangular form by a known
    /// block-diagonal conjugation, keeps its Jordan structure.
    #[test]
    fn conjugated_block_triangular(seed in 0u64..1_000_000) {
        let mut r = rng(seed);
        let size = r.gen_range(2..=6);
        let l = random_lower(&mut r, size);
        let mut s = ExactMatrix::identity(size);
        let mut i = 0;
        while i + 1 < size {
            if r.gen_bool(0.6) {
                // [[1, a], [b, 1]] with ab ≠ 1
                let a = small_entry(&mut r, 0.2);
                let mut b = small_entry(&mut r, 0.2);
                if (&a * &b).is_one() {
                    b = Scalar::zero();
                }
                s.set(i, i + 1, a);
                s.set(i + 1, i, b);
                i += 2;
            } else {
                i += 1;
            }
        }
        let s_inv = s.inverse().unwrap();
        let m = s.mat_mul(&l).unwrap().mat_mul(&s_inv).unwrap();
        let back = s_inv.mat_mul(&m).unwrap().mat_mul(&s).unwrap();
        prop_assert!(back.is_lower_triangular());
        let basis = incremental_jordanize(&back, 0).unwrap();
        for lambda in eigenvalues(&l) {
            prop_assert_eq!(basis.block_sizes(&lambda), sorted(oracle_blocks(&m, &lambda)));
        }
    }

    #[test]
    fn transition_conjugates_to_jordan(seed in 0u64..1_000_000) {
        let mut r = rng(seed);
        let size = r.gen_range(1..=6);
        let a = random_lower(&mut r, size);
        let (basis, j) = transition_to_jordan_triangular(&a).unwrap();
        let p = basis.transition();
        // A·P = P·J
        prop_assert_eq!(a.mat_mul(&p).unwrap(), p.mat_mul(&j).unwrap());
    }
}

/// The converse of `strict_projection_means_growth` fails: here the
/// length-2 block at 1/4 grows to length 4 while the projected kernel
/// still fills ker(φ'(0)ᵗ − 1/4).
#[test]
fn growth_without_strict_projection() {
    let phi: PolyMap = "z1/4 + z2, z2/4 + z3*z4, z3/2 + z4, z4/2".parse().unwrap();
    let sd = validate_map(&phi).unwrap();
    let op = build(&sd.psi.pad_to(2), 2).unwrap();
    let basis = incremental_jordanize(&op.u, 4).unwrap();
    let quarter = q(1, 4);
    let j = basis.corner_blocks.iter().position(|(l, _, _)| l == &quarter).unwrap();
    assert_eq!(basis.corner_blocks[j].2, 2);
    assert_eq!(basis.chains[basis.provenance[j]].len(), 4);
    let r = analyze(&phi).unwrap();
    let rec = r.record(&quarter).unwrap();
    assert_eq!((rec.d_orig, rec.d_proj), (1, 1));
}
