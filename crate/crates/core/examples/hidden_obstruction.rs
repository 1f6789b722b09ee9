// Equal kernel dimensions are not always enough. Here every eigenvector
// of φ'(0)ᵗ lifts to U, yet the length-2 block at 1/4 has no chain of U
// with the right gradients, so no full-rank solution exists.

use schroeder::{analyze, solve, AnalysisReport, Error, Mode, PolyMap};

pub fn run_example() -> AnalysisReport {
    let phi: PolyMap = "z1/4 + z2, z2/4 + z3*z4, z3/2 + z4, z4/2".parse().unwrap();
    let report = analyze(&phi).unwrap();
    println!("φ = {phi}");
    for r in &report.records {
        println!("  μ = {}: d_orig={} d_ker={} d_proj={}", r.eigenvalue, r.d_orig, r.d_ker, r.d_proj);
    }
    println!("kernel criterion: {}", report.verdict);
    println!("obstructed blocks: {:?}", report.obstructed_blocks);
    match solve(&phi, Some(4), Mode::FullRank) {
        Err(Error::NoFullRank(_)) => println!("full-rank solve: none exists"),
        other => panic!("unexpected: {other:?}"),
    }
    let indep = solve(&phi, Some(4), Mode::Independent).unwrap();
    println!("independent solution: {}", indep.map.truncate(2));
    report
}

#[allow(dead_code)]
fn main() {
    run_example();
}
