mod common;

use common::{connected, graph, named};
use num_bigint::BigInt;
use num_traits::Zero;
use pairwalk_core::algebra::{
    algebraic_difference, characteristic_polynomial, factor_linear_quadratic, hamiltonian, krylov_min_poly,
    AlgebraicNumber, HamiltonianKind,
};
use pairwalk_core::numeric::{eigendecompose, GROUP_TOL};
use pairwalk_core::transfer::{Analyzer, QuantumState, StateForm};
use pairwalk_core::{Family, Graph};
use proptest::prelude::*;

fn kind() -> impl Strategy<Value = HamiltonianKind> {
    prop::sample::select(HamiltonianKind::ALL.to_vec())
}

fn state(n: usize) -> impl Strategy<Value = QuantumState> {
    let all: Vec<QuantumState> = StateForm::ALL.iter().flat_map(|f| QuantumState::all(*f, n)).collect();
    prop::sample::select(all)
}

fn graph_and_state(g: impl Strategy<Value = Graph>) -> impl Strategy<Value = (Graph, QuantumState)> {
    g.prop_flat_map(|g| (Just(g), state(g.order())))
}

fn nonzero_laplacian_eigenvalues(g: &Graph) -> Vec<AlgebraicNumber> {
    let h = hamiltonian(g, HamiltonianKind::Laplacian);
    let spectrum = factor_linear_quadratic(&characteristic_polynomial(&h), None).unwrap();
    spectrum.roots().into_iter().filter(|x| !matches!(x, AlgebraicNumber::Integer(0))).collect()
}

fn edge_supports(g: &Graph) -> Vec<Vec<AlgebraicNumber>> {
    let an = Analyzer::new(g, HamiltonianKind::Laplacian).unwrap();
    g.edges().map(|(a, b)| an.support(&QuantumState::pair(a, b).unwrap()).unwrap()).collect()
}

fn same_values(x: &[AlgebraicNumber], y: &[AlgebraicNumber]) -> bool {
    x.len() == y.len() && x.iter().zip(y).all(|(a, b)| a.same_value(b))
}

#[test]
fn edge_transitive_supports_are_all_nonzero_eigenvalues() {
    let mut graphs: Vec<Graph> = (3..=8).map(|n| named(Family::Cycle, &[n])).collect();
    graphs.extend((2..=8).map(|n| named(Family::Complete, &[n])));
    for g in graphs {
        let all = nonzero_laplacian_eigenvalues(&g);
        for s in edge_supports(&g) {
            assert!(same_values(&s, &all), "{:?}: {s:?} vs {all:?}", g.edges().collect::<Vec<_>>());
        }
    }
}

#[test]
fn cycle_edge_support_has_half_the_vertices() {
    for n in 3..=12 {
        for s in edge_supports(&named(Family::Cycle, &[n])) {
            assert_eq!(s.len(), n / 2, "C{n}");
        }
    }
}

#[test]
fn path_edge_support_has_at_least_half_the_vertices() {
    for n in 3..=12 {
        for s in edge_supports(&named(Family::Path, &[n])) {
            assert!(2 * s.len() >= n, "P{n}: {}", s.len());
        }
    }
}

#[test]
fn quadratic_difference_against_numeric_difference() {
    let a = AlgebraicNumber::quadratic(4, 2, 2);
    let b = AlgebraicNumber::quadratic(4, -2, 2);
    let d = algebraic_difference(&a, &b).unwrap().unwrap();
    assert_eq!(d.radicand, Some(2));
    assert_eq!(d.integer_surd_multiple(), Some(2));
    let exact = 2.0 * 2f64.sqrt();
    assert!((a.approx() - b.approx() - exact).abs() < 1e-12);
    let c = AlgebraicNumber::quadratic(2, 2, 3);
    assert_eq!(algebraic_difference(&a, &c).unwrap(), None);
}

proptest! {
    #[test]
    fn min_poly_divides_charpoly((g, s) in graph_and_state(graph(1, 10)), k in kind()) {
        let h = hamiltonian(&g, k);
        let m = krylov_min_poly(&h, &s.vector(g.order()).unwrap()).unwrap();
        prop_assert!(m.divides(&characteristic_polynomial(&h)));
        prop_assert!(m.is_monic());
    }

    #[test]
    fn zero_in_laplacian_support((g, s) in graph_and_state(connected(2, 10))) {
        let h = hamiltonian(&g, HamiltonianKind::Laplacian);
        let m = krylov_min_poly(&h, &s.vector(g.order()).unwrap()).unwrap();
        let at_zero = m.eval_int(0);
        match s.form {
            StateForm::Pair => prop_assert!(!at_zero.is_zero()),
            StateForm::Plus | StateForm::Vertex => prop_assert_eq!(at_zero, BigInt::zero()),
        }
    }

    #[test]
    fn factors_reassemble_the_charpoly(g in graph(1, 12), k in kind()) {
        let h = hamiltonian(&g, k);
        let p = characteristic_polynomial(&h);
        let f = factor_linear_quadratic(&p, Some(k.eigenvalue_range(g.order()))).unwrap();
        prop_assert_eq!(f.product(), p);
        let total: usize = f.factors.iter().map(|x| x.multiplicity * x.poly.degree().unwrap()).sum();
        prop_assert_eq!(total, g.order());
    }

    #[test]
    fn exact_support_matches_numeric_support((g, s) in graph_and_state(graph(1, 12)), k in kind()) {
        let an = Analyzer::new(&g, k).unwrap();
        let exact: Vec<f64> = an.support(&s).unwrap().iter().map(|x| x.approx()).collect();
        let h = hamiltonian(&g, k);
        let numeric = eigendecompose(&h, GROUP_TOL).support(&s.vector(g.order()).unwrap(), 1e-8).unwrap();
        prop_assert_eq!(exact.len(), numeric.len());
        for (x, y) in exact.iter().zip(&numeric) {
            prop_assert!((x - y).abs() < 1e-8, "{} vs {}", x, y);
        }
    }

    #[test]
    fn differences_agree_with_floats(p1 in -20i64..20, q1 in 1i64..6, p2 in -20i64..20, q2 in -6i64..6, d in prop::sample::select(vec![2i64, 3, 5, 6, 7])) {
        // (p + q sqrt d) / 2 is an algebraic integer when p and q are both even.
        let a = AlgebraicNumber::quadratic(2 * p1, 2 * q1, d);
        let b = if q2 == 0 { AlgebraicNumber::Integer(p2) } else { AlgebraicNumber::quadratic(2 * p2, 2 * q2, d) };
        let diff = algebraic_difference(&a, &b).unwrap().unwrap();
        let r = *diff.rational.numer() as f64 / *diff.rational.denom() as f64;
        let m = *diff.surd.numer() as f64 / *diff.surd.denom() as f64;
        prop_assert!((r + m * (d as f64).sqrt() - (a.approx() - b.approx())).abs() < 1e-9);
    }
}
