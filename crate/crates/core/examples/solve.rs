// Construct truncated Schroeder solutions and show when full rank fails.

use schroeder::{solve, Error, Mode, PolyMap, SchroederSolution};

pub fn run_example() -> (SchroederSolution, SchroederSolution) {
    let jordan: PolyMap = "z1/2, z2/4 + z3/8 + z1^2/8, z3/4, z4/8".parse().unwrap();
    let full = solve(&jordan, Some(6), Mode::FullRank).expect("full-rank solution exists");
    println!("F for φ = {jordan}:");
    for (j, c) in full.map.components().iter().enumerate() {
        println!("  F{} = {c}", j + 1);
    }
    println!("  F'(0) = {:?}", full.derivative);
    println!("  residual vanishes through degree {}", full.residual_degree);

    let blocked: PolyMap = "z1/2, z2/4 + z1^2/16".parse().unwrap();
    match solve(&blocked, None, Mode::FullRank) {
        Err(Error::NoFullRank(report)) => {
            let bad: Vec<String> = report
                .records
                .iter()
                .filter(|r| !r.full_rank_possible)
                .map(|r| r.eigenvalue.to_string())
                .collect();
            println!("no full-rank solution for {blocked}; obstructed at μ = {}", bad.join(", "));
        }
        other => panic!("expected NoFullRank, got {other:?}"),
    }
    let indep = solve(&blocked, None, Mode::Independent).unwrap();
    println!("independent components instead: {}", indep.map);
    (full, indep)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
