// Maps whose linear part is not triangular: pass a conjugator D making
// D φ'(0) D⁻¹ triangular. The solution is returned in the original
// coordinates.

use schroeder::engine::solve_with;
use schroeder::{ExactMatrix, Mode, PolyMap, SchroederSolution};

pub fn run_example() -> SchroederSolution {
    // φ'(0) = [[5/12, 1/12], [1/12, 5/12]] has eigenvalues 1/2 and 1/3
    let phi: PolyMap = "5/12*z1 + 1/12*z2 + z1*z2, 1/12*z1 + 5/12*z2".parse().unwrap();
    let d = ExactMatrix::from_ratios(&[&[(1, 1), (1, 1)], &[(1, 1), (-1, 1)]]);
    let sol = solve_with(&phi, Some(8), Mode::FullRank, Some(&d)).unwrap();
    println!("φ = {phi}");
    for (j, c) in sol.map.components().iter().enumerate() {
        println!("  F{} = {}", j + 1, c.truncate(3));
    }
    println!("F'(0) = {:?}", sol.derivative);
    sol
}

#[allow(dead_code)]
fn main() {
    run_example();
}
