// The composition operator f ↦ f∘φ as a matrix on monomials.

use schroeder::{build, truncation_degree, validate_map, PolyMap, TruncatedCompOp};

pub fn run_example() -> TruncatedCompOp {
    let phi: PolyMap = "z1/2, z2/4 + z1^2/16".parse().unwrap();
    let sd = validate_map(&phi).unwrap();
    let k = truncation_degree(&sd.eigenvalues).unwrap();
    let op = build(&phi, k).unwrap();
    let labels: Vec<String> = op.basis.iter().map(ToString::to_string).collect();
    println!("φ = {phi}, K = {k}");
    println!("basis: {}", labels.join(", "));
    println!("U = {:?}", op.u);
    println!("lower triangular: {}", op.u.is_lower_triangular());
    op
}

#[allow(dead_code)]
fn main() {
    run_example();
}
