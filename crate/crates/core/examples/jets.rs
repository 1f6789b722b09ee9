// Truncated power series: products, composition and linear conjugation.

use schroeder::parse::parse_jet;
use schroeder::{compose, conjugate_map, ExactMatrix, Jet, PolyMap, Scalar};

pub fn run_example() -> (Jet, Jet, PolyMap) {
    // products drop everything above the truncation degree
    let a = parse_jet(2, 3, "z1 + z2").unwrap();
    let b = parse_jet(2, 3, "z1 - z2 + z1^2").unwrap();
    let prod = a.mul(&b).unwrap();
    println!("({a}) * ({b}) = {prod}   [through degree 3]");

    // f∘φ
    let phi: PolyMap = "z1/2 + z2^2, z2/3".parse().unwrap();
    let f = parse_jet(2, 3, "z1*z2").unwrap();
    let fphi = compose(&f, &phi.pad_to(3)).unwrap();
    println!("f = {f}, φ = {phi}: f∘φ = {fphi}");

    // D∘φ∘D⁻¹ with D swapping and rescaling the coordinates
    let d = ExactMatrix::from_rows(vec![
        vec![Scalar::zero(), Scalar::from_int(2)],
        vec![Scalar::one(), Scalar::zero()],
    ])
    .unwrap();
    let conj = conjugate_map(&phi, &d).unwrap();
    println!("D φ D⁻¹ = {conj}, linear part {:?}", conj.linear_part());
    (prod, fphi, conj)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
