// F∘φ = φ'(0)^k F. For k > 1 the solutions exist but never have full
// rank.

use schroeder::{solve_power, PolyMap, SchroederSolution};

pub fn run_example() -> Vec<SchroederSolution> {
    let maps = ["z1/2, z2/4", "z1/4 + z2, z2/4 + z1^2"];
    let mut out = Vec::new();
    for text in maps {
        let phi: PolyMap = text.parse().unwrap();
        for k in [2, 3] {
            let sol = solve_power(&phi, k, Some(8)).unwrap();
            println!("φ = {phi}, k = {k}");
            for (j, c) in sol.map.components().iter().enumerate() {
                    println!("  G{} = {} + O(5)", j + 1, c.truncate(4));
            }
            println!("  rank G'(0) = {}, component rank = {}", sol.derivative.rank(), sol.component_rank);
            out.push(sol);
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    run_example();
}
