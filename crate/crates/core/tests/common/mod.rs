#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use schroeder::linalg::{blocks_from_rank_sequence, distinct_diagonal, jordan_matrix, rank_sequence_oracle};
use schroeder::{ExactMatrix, Jet, MultiIndex, PolyMap, Scalar};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

pub fn obstructed_map() -> PolyMap {
    "z1/2, z2/4 + z1^2/16".parse().unwrap()
}

pub fn diagonal_map() -> PolyMap {
    "z1/2, z2/4".parse().unwrap()
}

pub fn jordan_map() -> PolyMap {
    "z1/2, z2/4 + z3/8 + z1^2/8, z3/4, z4/8".parse().unwrap()
}

/// Small Gaussian rational, zero with probability about `zero_bias`.
pub fn small_entry(r: &mut StdRng, zero_bias: f64) -> Scalar {
    if r.gen_bool(zero_bias) {
        return Scalar::zero();
    }
    let choices = [
        Scalar::one(),
        -Scalar::one(),
        q(1, 2),
        q(-2, 3),
        Scalar::from_int(2),
        Scalar::i(),
        Scalar::complex(1, 2, -1, 3),
    ];
    choices[r.gen_range(0..choices.len())].clone()
}

pub fn small_eigenvalue(r: &mut StdRng) -> Scalar {
    let choices = [q(1, 2), q(1, 3), q(1, 4), Scalar::complex(0, 1, 1, 2), q(-1, 2)];
    choices[r.gen_range(0..choices.len())].clone()
}

/// Lower-triangular matrix whose upper-left `n × n` corner is a random
/// lower Jordan matrix.
pub fn random_bordered_jordan(r: &mut StdRng, size: usize) -> (ExactMatrix, usize) {
    let n = r.gen_range(0..=size);
    let mut blocks = Vec::new();
    let mut left = n;
    while left > 0 {
        let len = r.gen_range(1..=left.min(3));
        blocks.push((small_eigenvalue(r), len));
        left -= len;
    }
    let corner = jordan_matrix(&blocks);
    let mut m = ExactMatrix::zeros(size, size);
    for i in 0..size {
        for j in 0..=i {
            let v = if i < n {
                corner.get(i, j).clone()
            } else if i == j {
                small_eigenvalue(r)
            } else {
                small_entry(r, 0.6)
            };
            m.set(i, j, v);
        }
    }
    (m, n)
}

pub fn random_lower(r: &mut StdRng, size: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(size, size);
    for i in 0..size {
        for j in 0..=i {
            let v = if i == j { small_eigenvalue(r) } else { small_entry(r, 0.5) };
            m.set(i, j, v);
        }
    }
    m
}

pub fn oracle_blocks(m: &ExactMatrix, lambda: &Scalar) -> Vec<usize> {
    blocks_from_rank_sequence(&rank_sequence_oracle(m, lambda).unwrap())
}

pub fn eigenvalues(m: &ExactMatrix) -> Vec<Scalar> {
    distinct_diagonal(m)
}

pub fn monomial(e: &[u32]) -> MultiIndex {
    MultiIndex::new(e.to_vec())
}

/// Polynomial map with the given upper-triangular linear part plus random
/// higher-order terms of degree 2..=max_degree.
pub fn map_with_linear_part(r: &mut StdRng, a: &ExactMatrix, max_degree: u32, density: f64) -> PolyMap {
    let n = a.rows();
    let mut comps = PolyMap::linear(a, max_degree).unwrap().into_components();
    for c in comps.iter_mut() {
        let mut extra = Vec::new();
        for alpha in schroeder::enumerate_monomials(n, max_degree) {
            if alpha.degree() >= 2 && r.gen_bool(density) {
                extra.push((alpha, small_entry(r, 0.0)));
            }
        }
        let add = Jet::from_terms(n, max_degree, extra).unwrap();
        *c = c.try_add(&add).unwrap();
    }
    PolyMap::new(comps).unwrap()
}

/// Upper Jordan matrix on `n` coordinates with eigenvalues drawn from
/// powers of 1/2, so that resonances are frequent.
pub fn resonant_jordan_part(r: &mut StdRng, n: usize) -> ExactMatrix {
    let mut blocks = Vec::new();
    let mut left = n;
    while left > 0 {
        let len = r.gen_range(1..=left.min(2));
        let lambda = [q(1, 2), q(1, 4), q(1, 8)][r.gen_range(0..3)].clone();
        blocks.push((lambda, len));
        left -= len;
    }
    jordan_matrix(&blocks).transpose()
}
