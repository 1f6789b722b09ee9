// Decide full-rank solvability for three small maps.

use schroeder::{analyze, PolyMap};

pub fn run_example() -> Vec<(String, bool)> {
    let maps = [
        ("z1/2, z2/4 + z1^2/16", "resonance blocks a full-rank solution"),
        ("z1/2, z2/4", "same resonance, but harmless"),
        ("z1/2, z2/4 + z3/8 + z1^2/8, z3/4, z4/8", "a 1/4 Jordan block of length 2"),
    ];
    let mut out = Vec::new();
    for (text, note) in maps {
        let phi: PolyMap = text.parse().expect("valid map");
        let report = analyze(&phi).expect("valid spectrum");
        println!("φ = ({text})  -- {note}");
        println!("  K = {}, N = {}", report.degree, report.size);
        for r in &report.records {
            println!(
                "  μ = {:<5} resonant={:<5} d_orig={} d_ker={} d_proj={} full_rank_possible={}",
                r.eigenvalue.to_string(),
                r.resonant,
                r.d_orig,
                r.d_ker,
                r.d_proj,
                r.full_rank_possible
            );
        }
        println!("  verdict: {}", if report.verdict { "YES" } else { "NO" });
        out.push((text.to_string(), report.verdict));
    }
    out
}

#[allow(dead_code)]
fn main() {
    run_example();
}
