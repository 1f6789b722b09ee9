mod common;

use rand::rngs::StdRng;
use rand::Rng;

use common::*;
use schroeder::engine::{solve_power_with, solve_with};
use schroeder::linalg::rank_of_vectors;
use schroeder::{
    analyze, build, compose, enumerate_monomials, solve, solve_power, truncation_degree, Error, ExactMatrix, Jet,
    Mode, PolyMap, SchroederSolution, Scalar,
};

/// `F∘φ − A^k·F` through degree `k_out`, computed without `verify`.
fn residual_vanishes(phi: &PolyMap, sol: &SchroederSolution) -> bool {
    let k_out = sol.degree;
    let phi = phi.pad_to(k_out);
    let b = phi.linear_part().pow(sol.power).unwrap();
    let n = phi.dim();
    (0..n).all(|i| {
        let lhs = compose(sol.map.component(i), &phi).unwrap();
        let mut rhs = Jet::zero(n, k_out);
        for j in 0..n {
            rhs = rhs.try_add(&sol.map.component(j).scale(b.get(i, j))).unwrap();
        }
        lhs.try_sub(&rhs).unwrap().is_zero()
    })
}

fn rank_of(components: &[&Jet]) -> usize {
    let Some(first) = components.first() else { return 0 };
    let basis = enumerate_monomials(first.dim(), first.truncation());
    rank_of_vectors(&components.iter().map(|c| c.to_vector(&basis)).collect::<Vec<_>>())
}

fn jet_rank(f: &PolyMap) -> usize {
    rank_of(&f.components().iter().collect::<Vec<_>>())
}

/// Random map on 1..=3 coordinates. Half the time the linear part is a
/// resonant Jordan matrix, otherwise a random upper-triangular one.
fn random_map(r: &mut StdRng) -> PolyMap {
    let n = r.gen_range(1..=3);
    let a = if r.gen_bool(0.5) { resonant_jordan_part(r, n) } else { random_lower(r, n).transpose() };
    map_with_linear_part(r, &a, 3, 0.3)
}

fn small_degree(phi: &PolyMap) -> u32 {
    let a = phi.linear_part();
    let eigs: Vec<Scalar> = (0..a.rows()).map(|i| a.get(i, i).clone()).collect();
    truncation_degree(&eigs).unwrap() + 1
}

#[test]
fn independent_solutions_always_exist_and_vanish() {
    let mut r = rng(101);
    for _ in 0..60 {
        let phi = random_map(&mut r);
        let sol = solve(&phi, Some(small_degree(&phi)), Mode::Independent).unwrap();
        assert_eq!(sol.component_rank, phi.dim());
        assert_eq!(jet_rank(&sol.map), phi.dim());
        assert_eq!(sol.residual_degree, sol.degree);
        assert!(residual_vanishes(&phi, &sol), "{phi}");
    }
}

#[test]
fn full_rank_outcome_matches_analysis() {
    let mut r = rng(102);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..80 {
        let phi = random_map(&mut r);
        let report = analyze(&phi).unwrap();
        let a = phi.linear_part();
        let diagonal = a == ExactMatrix::diagonal(&a.diag());
        match solve(&phi, Some(small_degree(&phi)), Mode::FullRank) {
            Ok(sol) => {
                yes += 1;
                assert!(report.verdict);
                assert!(report.full_rank_exists());
                assert!(sol.derivative.inverse().is_ok());
                assert!(residual_vanishes(&phi, &sol));
            }
            Err(Error::NoFullRank(rep)) => {
                no += 1;
                assert_eq!(*rep, report);
                assert!(!report.full_rank_exists());
                if diagonal {
                    assert!(!report.verdict, "diagonal linear part: verdict and solve must agree for {phi}");
                }
            }
            Err(e) => panic!("{phi}: {e}"),
        }
        if !report.verdict {
            assert!(!report.obstructed_blocks.is_empty());
        }
    }
    assert!(yes > 10 && no > 10, "yes={yes} no={no}");
}

/// The kernel criterion says YES but the length-2 block at 1/4 admits no
/// chain of U projecting onto its own chain.
#[test]
fn verdict_yes_without_full_rank_solution() {
    let phi: PolyMap = "z1/4 + z2, z2/4 + z3*z4, z3/2 + z4, z4/2".parse().unwrap();
    let report = analyze(&phi).unwrap();
    assert!(report.verdict);
    assert_eq!(report.obstructed_blocks, vec![0]);
    assert!(matches!(solve(&phi, None, Mode::FullRank), Err(Error::NoFullRank(_))));
    let sol = solve(&phi, None, Mode::Independent).unwrap();
    assert_eq!(sol.component_rank, 4);
    assert!(sol.derivative.rank() < 4);
}

#[test]
fn nonresonant_spectra_give_full_rank() {
    let mut r = rng(103);
    let mut tried = 0;
    while tried < 40 {
        let n = r.gen_range(1..=3);
        let a = random_lower(&mut r, n).transpose();
        let phi = map_with_linear_part(&mut r, &a, 3, 0.3);
        let report = analyze(&phi).unwrap();
        if !report.resonance.is_empty() {
            continue;
        }
        tried += 1;
        assert!(report.verdict && report.full_rank_exists());
        assert!(report.records.iter().all(|e| e.full_rank_possible));
        let sol = solve(&phi, Some(small_degree(&phi)), Mode::FullRank).unwrap();
        assert_eq!(sol.derivative.rank(), n);
    }
}

#[test]
fn counted_resonances_block_full_rank() {
    let mut r = rng(104);
    let mut hits = 0;
    for _ in 0..80 {
        let phi = random_map(&mut r);
        let report = analyze(&phi).unwrap();
        for e in &report.records {
            if e.resonant && e.d_ker == e.d_orig {
                hits += 1;
                assert!(!e.full_rank_possible);
                assert!(!report.verdict);
            }
            assert_eq!(e.full_rank_possible, e.d_proj == e.d_orig);
        }
    }
    assert!(hits > 10, "only {hits}");
}

#[test]
fn powers_of_eigenvalues_sit_on_the_diagonal() {
    let mut r = rng(105);
    for _ in 0..20 {
        let phi = random_map(&mut r);
        let op = build(&phi.pad_to(3), 3).unwrap();
        let diag = op.u.diag();
        let a = phi.linear_part();
        for i in 0..phi.dim() {
            for p in 1..=3 {
                assert!(diag.contains(&a.get(i, i).powu(p)));
            }
        }
    }
}

#[test]
fn power_solutions_are_singular_but_independent() {
    let mut r = rng(106);
    let mut retried = 0;
    for _ in 0..20 {
        let phi = random_map(&mut r);
        let n = phi.dim();
        for k in 2..=3 {
            let sol = match solve_power(&phi, k, Some(small_degree(&phi) + 1)) {
                Ok(sol) => sol,
                Err(Error::DegeneratePower { degree, suggested }) => {
                    retried += 1;
                    assert!(suggested > degree);
                    solve_power(&phi, k, Some(suggested)).unwrap()
                }
                Err(e) => panic!("{phi}: {e}"),
            };
            assert_eq!(sol.power, k);
            assert_eq!(sol.component_rank, n);
            assert_eq!(jet_rank(&sol.map), n);
            assert!(sol.derivative.rank() < n);
            assert!(residual_vanishes(&phi, &sol), "{phi}, k = {k}");
            // the mode is ignored for k > 1
            let again = solve_power_with(&phi, k, Some(sol.degree), Mode::FullRank, None).unwrap();
            assert_eq!(again.map, sol.map);
        }
    }
    assert!(retried > 0);
}

#[test]
fn low_degree_power_solution_is_refused() {
    // the only 1/4 eigenfunction is z1², so its square needs degree 4
    let phi = obstructed_map();
    match solve_power(&phi, 2, Some(3)) {
        Err(Error::DegeneratePower { degree: 3, suggested }) => {
            assert!(suggested >= 4);
            let sol = solve_power(&phi, 2, Some(suggested)).unwrap();
            assert_eq!(sol.component_rank, 2);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn eigenvalue_groups_are_independent() {
    let mut r = rng(107);
    for _ in 0..30 {
        let phi = random_map(&mut r);
        let sol = solve(&phi, Some(small_degree(&phi)), Mode::Independent).unwrap();
        let mut seen: Vec<Scalar> = Vec::new();
        for c in &sol.components {
            if !seen.contains(&c.eigenvalue) {
                seen.push(c.eigenvalue.clone());
            }
        }
        for mu in &seen {
            let group: Vec<&Jet> = sol
                .components
                .iter()
                .enumerate()
                .filter(|(_, c)| &c.eigenvalue == mu)
                .map(|(i, _)| sol.frame.component(i))
                .collect();
            assert_eq!(rank_of(&group), group.len());
        }
        assert_eq!(jet_rank(&sol.frame), phi.dim());
    }
}

#[test]
fn conjugated_solutions_transport_back() {
    let phi: PolyMap = "5/12*z1 + 1/12*z2 + z1*z2, 1/12*z1 + 5/12*z2".parse().unwrap();
    let d = ExactMatrix::from_rows(vec![
        vec![Scalar::one(), Scalar::one()],
        vec![Scalar::one(), -Scalar::one()],
    ])
    .unwrap();
    assert!(matches!(solve(&phi, None, Mode::FullRank), Err(Error::NotTriangular(_))));
    let sol = solve_with(&phi, Some(6), Mode::FullRank, Some(&d)).unwrap();
    assert!(residual_vanishes(&phi, &sol));
    assert_eq!(sol.derivative, ExactMatrix::identity(2));
}

#[test]
fn bad_inputs_are_rejected() {
    let singular: PolyMap = "z1/2, z1^2".parse().unwrap();
    assert!(matches!(solve(&singular, None, Mode::Independent), Err(Error::SingularLinearPart)));
    let expanding: PolyMap = "2*z1".parse().unwrap();
    assert!(matches!(analyze(&expanding), Err(Error::UnsupportedSpectrum(_))));
    let shifted: Result<PolyMap, _> = "1 + z1/2".parse();
    assert!(shifted.is_err() || analyze(&shifted.unwrap()).is_err());
    let jordan = jordan_map();
    assert!(matches!(solve(&jordan, Some(1), Mode::Independent), Err(Error::InvalidArgument(_))));
    assert!(matches!(solve_power(&jordan, 0, None), Err(Error::InvalidArgument(_))));
}
