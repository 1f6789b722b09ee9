// One variable: the solution is the Koenigs function of φ.

use schroeder::{solve, Mode, PolyMap, SchroederSolution};

pub fn run_example() -> SchroederSolution {
    let phi: PolyMap = "z1/2 + z1^2".parse().unwrap();
    let sol = solve(&phi, Some(8), Mode::FullRank).unwrap();
    println!("φ = {phi}");
    println!("F = {}", sol.map.component(0));
    println!("F∘φ = F/2 through degree {}", sol.residual_degree);
    sol
}

#[allow(dead_code)]
fn main() {
    run_example();
}
