mod common;

use std::f64::consts::{PI, SQRT_2};

use common::{connected, graph, named};
use num_complex::Complex64;
use pairwalk_core::algebra::{hamiltonian, HamiltonianKind, IntMatrix};
use pairwalk_core::graph::enumerate_all;
use pairwalk_core::numeric::{eigendecompose, fidelity_curve, jacobi, transition, GROUP_TOL};
use pairwalk_core::transfer::{QuantumState, StateForm};
use pairwalk_core::{Family, Graph};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn laplacian(g: &Graph) -> IntMatrix {
    hamiltonian(g, HamiltonianKind::Laplacian)
}

fn vector(s: &QuantumState, n: usize) -> Vec<i64> {
    s.vector(n).unwrap()
}

fn pair_vector(a: usize, b: usize, n: usize) -> Vec<i64> {
    vector(&QuantumState::pair(a, b).unwrap(), n)
}

fn quarter(rows: [[i32; 6]; 6]) -> Vec<f64> {
    rows.iter().flatten().map(|&x| x as f64 / 4.0).collect()
}

#[test]
fn worked_example_idempotents() {
    let d = eigendecompose(&laplacian(&named(Family::Figure1, &[])), GROUP_TOL);
    let s3 = 3f64.sqrt();
    let want = [0.0, 3.0 - s3, 2.0, 4.0, 3.0 + s3];
    let got = d.eigenvalues();
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() < 1e-9, "{got:?}");
    }
    let e2 = quarter([
        [1, 0, 0, -1, 1, -1],
        [0, 2, -2, 0, 0, 0],
        [0, -2, 2, 0, 0, 0],
        [-1, 0, 0, 1, -1, 1],
        [1, 0, 0, -1, 1, -1],
        [-1, 0, 0, 1, -1, 1],
    ]);
    let e4 = quarter([
        [1, 0, 0, -1, -1, 1],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 1, 1, -1],
        [-1, 0, 0, 1, 1, -1],
        [1, 0, 0, -1, -1, 1],
    ]);
    for (r, want) in [(2, e2), (3, e4)] {
        let got = &d.groups()[r].projector;
        let worst = got.iter().zip(&want).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        assert!(worst < 1e-9, "group {r}: {worst}");
    }
}

#[test]
fn path4_curve_peaks_at_the_transfer_time() {
    let h = laplacian(&named(Family::Path, &[4]));
    let curve = fidelity_curve(&h, &pair_vector(0, 1, 4), &pair_vector(2, 3, 4), 2.0 * PI, 100_000).unwrap();
    let (t, f) = curve.iter().copied().fold((0.0, 0.0), |best, p| if p.1 > best.1 { p } else { best });
    assert!(f >= 1.0 - 1e-6, "max {f}");
    assert!((t - PI / SQRT_2).abs() < 1e-3, "argmax {t}");
}

#[test]
fn cycle6_curves_stay_away_from_one() {
    let g = named(Family::Cycle, &[6]);
    let h = laplacian(&g);
    let edges: Vec<_> = g.edges().collect();
    for &(a, b) in &edges {
        for &(c, d) in &edges {
            if (a, b) == (c, d) {
                continue;
            }
            let curve = fidelity_curve(&h, &pair_vector(a, b, 6), &pair_vector(c, d, 6), 2.0 * PI, 10_000).unwrap();
            let max = curve.iter().map(|p| p.1).fold(0.0, f64::max);
            assert!(max <= 1.0 - 1e-3, "({a},{b}) -> ({c},{d}): {max}");
        }
    }
}

#[test]
fn complement_preserves_pair_fidelity() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in 2..=6 {
        for g in enumerate_all(n).unwrap().into_iter().filter(Graph::is_connected) {
            let (d, e) = (eigendecompose(&laplacian(&g), GROUP_TOL), eigendecompose(&laplacian(&g.complement()), GROUP_TOL));
            let states = QuantumState::all(StateForm::Pair, n);
            for s1 in &states {
                for s2 in &states {
                    let t = rng.gen_range(0.0..10.0);
                    let (v1, v2) = (vector(s1, n), vector(s2, n));
                    let (x, y) = (d.fidelity(&v1, &v2, t).unwrap(), e.fidelity(&v1, &v2, t).unwrap());
                    assert!((x - y).abs() < 1e-8, "{s1} {s2} t={t}: {x} vs {y}");
                }
            }
        }
    }
}

#[test]
fn regular_laplacian_is_a_phase_times_negated_adjacency() {
    let mut rng = StdRng::seed_from_u64(12);
    for n in 2..=7 {
        for g in enumerate_all(n).unwrap() {
            let k = g.degree(0);
            if (0..n).any(|v| g.degree(v) != k) {
                continue;
            }
            let t = rng.gen_range(0.0..10.0);
            let ul = transition(&laplacian(&g), t);
            let ua = transition(&hamiltonian(&g, HamiltonianKind::Adjacency), t);
            let phase = Complex64::from_polar(1.0, t * k as f64);
            for i in 0..n {
                for j in 0..n {
                    assert!((ul.get(i, j) - phase * ua.get(i, j).conj()).norm() < 1e-9);
                }
            }
        }
    }
}

#[test]
fn bipartite_signature_conjugates_laplacians() {
    let mut rng = StdRng::seed_from_u64(13);
    for n in 2..=7 {
        for g in enumerate_all(n).unwrap() {
            let Some(side) = g.bipartition() else { continue };
            let t = rng.gen_range(0.0..10.0);
            let ul = transition(&laplacian(&g), t);
            let us = transition(&hamiltonian(&g, HamiltonianKind::SignlessLaplacian), t);
            let sign = |v: usize| if side[v] { -1.0 } else { 1.0 };
            for i in 0..n {
                for j in 0..n {
                    assert!((ul.get(i, j) * sign(i) * sign(j) - us.get(i, j)).norm() < 1e-8);
                }
            }
        }
    }
}

fn kind() -> impl Strategy<Value = HamiltonianKind> {
    prop::sample::select(HamiltonianKind::ALL.to_vec())
}

proptest! {
    #[test]
    fn transition_is_unitary_and_symmetric(g in graph(1, 12), k in kind(), t in 0.0f64..20.0) {
        let u = transition(&hamiltonian(&g, k), t);
        prop_assert!(u.unitarity_defect() < 1e-9);
        prop_assert!(u.symmetry_defect() < 1e-9);
    }

    #[test]
    fn idempotents_resolve_the_identity(g in graph(1, 12), k in kind()) {
        let h = hamiltonian(&g, k);
        let d = eigendecompose(&h, GROUP_TOL);
        let n = g.order();
        for i in 0..n {
            for j in 0..n {
                let id: f64 = d.groups().iter().map(|e| e.projector[i * n + j]).sum();
                prop_assert!((id - (i == j) as u8 as f64).abs() < 1e-9);
                let back: f64 = d.groups().iter().map(|e| e.value * e.projector[i * n + j]).sum();
                prop_assert!((back - h.get(i, j) as f64).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn product_walk_is_a_tensor_product(g in graph(1, 4), h in graph(1, 3), t in 0.0f64..10.0) {
        let p = g.cartesian_product(&h).unwrap();
        let lhs = transition(&laplacian(&p), t);
        let rhs = transition(&laplacian(&g), t).kron(&transition(&laplacian(&h), t));
        prop_assert!(lhs.max_distance(&rhs) < 1e-8);
    }

    #[test]
    fn fidelity_matches_matrix_action(g in connected(2, 9), t in 0.0f64..10.0, a in 0usize..9, b in 0usize..9, c in 0usize..9) {
        let n = g.order();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assume!(a != b && b != c);
        let (v1, v2) = (pair_vector(a, b, n), pair_vector(b, c, n));
        let d = eigendecompose(&laplacian(&g), GROUP_TOL);
        let u = d.transition(t);
        let x: Vec<Complex64> = v1.iter().map(|&x| Complex64::new(x as f64, 0.0)).collect();
        let ux = u.apply(&x);
        let amp: Complex64 = ux.iter().zip(&v2).map(|(z, &w)| z * w as f64).sum();
        let direct = amp.norm_sqr() / 4.0;
        prop_assert!((d.fidelity(&v1, &v2, t).unwrap() - direct).abs() < 1e-10);
        prop_assert!((d.fidelity(&v1, &v1, 0.0).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn jacobi_diagonalises_symmetric_matrices(n in 1usize..9, entries in prop::collection::vec(-5i32..6, 81)) {
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let x = entries[i * 9 + j] as f64;
                a[i * n + j] = x;
                a[j * n + i] = x;
            }
        }
        let (values, vectors) = jacobi(&a, n);
        for k in 0..n {
            for i in 0..n {
                let av: f64 = (0..n).map(|j| a[i * n + j] * vectors[j * n + k]).sum();
                prop_assert!((av - values[k] * vectors[i * n + k]).abs() < 1e-9);
            }
            for l in 0..n {
                let dot: f64 = (0..n).map(|i| vectors[i * n + k] * vectors[i * n + l]).sum();
                prop_assert!((dot - (k == l) as u8 as f64).abs() < 1e-9);
            }
        }
    }
}
