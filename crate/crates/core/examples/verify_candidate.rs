// Check a hand-written candidate against F∘φ = B·F.

use schroeder::{verify, PolyMap, VerifyReport};

pub fn run_example() -> (VerifyReport, VerifyReport) {
    let phi: PolyMap = "z1/2, z2/4 + z3/8 + z1^2/8, z3/4, z4/8".parse().unwrap();
    let f: PolyMap = "z1, z2, z3 + z1^2, z4".parse().unwrap();
    let good = verify(&phi.pad_to(10), &f.pad_to(10), &phi.linear_part(), 10).unwrap();
    println!("F = {f}: residual vanishes through degree {}", good.residual_degree);

    // a wrong multiple of z1^2 shows up at degree 2
    let g: PolyMap = "z1, z2, z3 + z1^2/2, z4".parse().unwrap();
    let bad = verify(&phi.pad_to(10), &g.pad_to(10), &phi.linear_part(), 10).unwrap();
    let fail = bad.failure.as_ref().unwrap();
    println!(
        "G = {g}: component {} has residual {} at {}",
        fail.component, fail.value, fail.monomial
    );
    (good, bad)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
