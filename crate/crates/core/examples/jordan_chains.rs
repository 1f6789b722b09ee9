// Jordan chains of U two ways: kernels of powers, and row by row starting
// from the Jordan corner, which also tracks which chain extends each block
// of φ'(0).

use schroeder::linalg::{incremental_jordanize, jordan_chains_triangular, JordanBasis};
use schroeder::{build, PolyMap, Scalar};

pub fn run_example() -> JordanBasis {
    let phi: PolyMap = "z1/2, z2/4 + z1^2/16".parse().unwrap();
    let op = build(&phi, 2).unwrap();
    let quarter = Scalar::ratio(1, 4);
    for chain in jordan_chains_triangular(&op.u, &quarter).unwrap() {
        println!("λ = 1/4 chain of length {}: {:?}", chain.len(), chain.vectors);
    }
    let basis = incremental_jordanize(&op.u, 2).unwrap();
    for (j, &c) in basis.provenance.iter().enumerate() {
        let chain = &basis.chains[c];
        println!(
            "block {} of φ'(0) (λ = {}) is extended by a chain of length {}",
            j + 1,
            chain.eigenvalue,
            chain.len()
        );
    }
    basis
}

#[allow(dead_code)]
fn main() {
    run_example();
}
