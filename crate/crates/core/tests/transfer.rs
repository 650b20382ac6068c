mod common;

use std::f64::consts::PI;

use common::{connected, connected_upto, edge_list, named};
use pairwalk_core::algebra::{AlgebraicNumber, HamiltonianKind};
use pairwalk_core::graph::automorphisms;
use pairwalk_core::transfer::{
    any_state, transitivity_compose, Analyzer, ExactTime, Periodicity, QuantumState, StateAnalysis, StateForm,
    Verdict,
};
use pairwalk_core::{Error, Family, Graph};
use proptest::prelude::*;

fn laplacian(g: &Graph) -> Analyzer {
    Analyzer::new(g, HamiltonianKind::Laplacian).unwrap()
}

fn pair(a: usize, b: usize) -> QuantumState {
    QuantumState::pair(a, b).unwrap()
}

fn analysed(an: &Analyzer, form: StateForm) -> Vec<StateAnalysis> {
    QuantumState::all(form, an.graph().order())
        .iter()
        .map(|s| an.analyze_state(s).unwrap())
        .collect()
}

fn max_on_grid(an: &Analyzer, d1: &StateAnalysis, d2: &StateAnalysis) -> f64 {
    an.spectrum()
        .fidelity_curve(&d1.vector, &d2.vector, 2.0 * PI, 10_000)
        .unwrap()
        .iter()
        .map(|p| p.1)
        .fold(0.0, f64::max)
}

/// Symmetry, monogamy, period doubling and numeric certification for every
/// ordered pair of pair states on connected graphs up to six vertices.
#[test]
fn pair_transfer_invariants() {
    let mut transfers = 0;
    let mut rejected_candidates = 0;
    for g in connected_upto(6) {
        let an = laplacian(&g);
        let states = analysed(&an, StateForm::Pair);
        for (i, d1) in states.iter().enumerate() {
            let mut partners = 0;
            for (j, d2) in states.iter().enumerate() {
                if i == j {
                    continue;
                }
                let forward = an.pst_decide_analyzed(d1, d2).unwrap();
                let backward = an.pst_decide_analyzed(d2, d1).unwrap();
                assert_eq!(forward.as_ref().map(|v| v.time), backward.as_ref().map(|v| v.time));
                let Some(v) = forward else {
                    let cert = an.cospectrality_of(d1, d2).unwrap();
                    if cert.strongly_cospectral && d1.periodicity.is_periodic() {
                        let max = max_on_grid(&an, d1, d2);
                        assert!(max <= 1.0 - 1e-3, "{:?} {} {}: {max}", edge_list(&g), d1.state, d2.state);
                        rejected_candidates += 1;
                    }
                    continue;
                };
                partners += 1;
                transfers += 1;
                assert!(v.fidelity >= 1.0 - 1e-8);
                let Periodicity::Periodic { period, .. } = d1.periodicity else {
                    panic!("transfer from a state that is not periodic");
                };
                assert_eq!(period, v.time.doubled());
            }
            assert!(partners <= 1, "{:?} {} has {partners} partners", edge_list(&g), d1.state);
        }
    }
    assert!(transfers > 0 && rejected_candidates > 0);
}

#[test]
fn periodic_supports_are_spread_by_at_least_one() {
    for g in connected_upto(7) {
        let an = laplacian(&g);
        for d in analysed(&an, StateForm::Pair) {
            if !d.periodicity.is_periodic() {
                continue;
            }
            for w in d.support.windows(2) {
                assert!(w[1].approx() - w[0].approx() >= 1.0 - 1e-12, "{:?} {}", edge_list(&g), d.state);
            }
        }
    }
}

#[test]
fn automorphic_images_share_supports() {
    for g in connected_upto(6) {
        let an = laplacian(&g);
        let auts = automorphisms(&g).unwrap();
        for s in QuantumState::all(StateForm::Pair, g.order()) {
            let m = an.min_poly(&s).unwrap();
            for p in &auts {
                assert_eq!(an.min_poly(&pair(p[s.a], p[s.b.unwrap()])).unwrap(), m);
            }
        }
    }
}

#[test]
fn k4_minus_an_edge() {
    let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let an = laplacian(&g);
    let found = an.find_partner(&pair(0, 2), &any_state).unwrap().expect("a partner");
    assert!(found.state.same_state(&pair(1, 2)));
    assert!(found.verdict.fidelity >= 1.0 - 1e-8);
    // Oracle: the top of the first peak of the fidelity curve.
    let n = 4;
    let curve = an
        .spectrum()
        .fidelity_curve(&pair(0, 2).vector(n).unwrap(), &pair(1, 2).vector(n).unwrap(), 2.0 * PI, 200_001)
        .unwrap();
    let start = curve.iter().position(|p| p.1 >= 1.0 - 1e-6).expect("grid reaches one");
    let mut top = start;
    while curve[top + 1].1 >= curve[top].1 {
        top += 1;
    }
    let t = curve[top].0;
    assert!((t - found.verdict.time.approx()).abs() < 1e-4, "{t} vs {}", found.verdict.time);
}

#[test]
fn adjacency_vertex_transfer_on_small_paths() {
    let an = Analyzer::new(&named(Family::Path, &[2]), HamiltonianKind::Adjacency).unwrap();
    let v = an.pst_decide(&QuantumState::vertex(0), &QuantumState::vertex(1)).unwrap().unwrap();
    assert_eq!(v.time, ExactTime::new(1, 2, 1));
    let an = Analyzer::new(&named(Family::Path, &[3]), HamiltonianKind::Adjacency).unwrap();
    let v = an.pst_decide(&QuantumState::vertex(0), &QuantumState::vertex(2)).unwrap().unwrap();
    assert_eq!(v.time, ExactTime::new(1, 1, 2));
    assert!(an.pst_decide(&QuantumState::vertex(0), &QuantumState::vertex(1)).unwrap().is_none());
}

#[test]
fn composition_needs_pair_reports_at_one_time() {
    let fig4 = named(Family::Figure3, &[]).complement();
    let an = laplacian(&fig4);
    let r1 = an.report(&pair(3, 5), &any_state).unwrap();
    let r2 = an.report(&pair(2, 3), &any_state).unwrap();
    let c = transitivity_compose(&r1, &r2).unwrap();
    assert!(c.source.same_state(&pair(2, 5)) && c.partner.same_state(&pair(0, 4)));
    assert_eq!(c.time, ExactTime::new(1, 2, 1));
    let p4 = laplacian(&named(Family::Path, &[4]));
    let other = p4.report(&pair(0, 1), &any_state).unwrap();
    assert!(matches!(transitivity_compose(&r1, &other), Err(Error::NoPivot)));
    let signless = Analyzer::new(&named(Family::Cycle, &[4]), HamiltonianKind::SignlessLaplacian).unwrap();
    let plus = signless.report(&QuantumState::plus(0, 1).unwrap(), &any_state).unwrap();
    assert!(matches!(plus.verdict, Verdict::Pst { .. }));
    assert!(matches!(transitivity_compose(&plus, &plus), Err(Error::NotPairForm)));
}

#[test]
fn reports_agree_with_decisions() {
    let an = laplacian(&named(Family::Path, &[4]));
    let r = an.report(&pair(0, 1), &any_state).unwrap();
    assert!(r.mixed_field);
    let Verdict::Pst { partner, time } = r.verdict else { panic!("P4 end edge transfers") };
    assert!(partner.same_state(&pair(2, 3)));
    assert_eq!(time.exact_string(), "pi/sqrt(2)");
    assert!(r.support.iter().any(|x| matches!(x, AlgebraicNumber::Integer(2))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fixed_exactly_for_twins(g in connected(2, 12), a in 0usize..12, b in 0usize..12) {
        let n = g.order();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let an = laplacian(&g);
        let fixed = matches!(an.periodicity(&pair(a, b)).unwrap(), Periodicity::Fixed);
        prop_assert_eq!(fixed, g.twins(a, b).unwrap());
    }

    #[test]
    fn pair_and_plus_never_transfer(g in connected(2, 10), a in 0usize..10, b in 0usize..10, c in 0usize..10, d in 0usize..10) {
        let n = g.order();
        let (a, b, c, d) = (a % n, b % n, c % n, d % n);
        prop_assume!(a != b && c != d);
        let an = laplacian(&g);
        let plus = QuantumState::plus(c, d).unwrap();
        prop_assert!(an.pst_decide(&pair(a, b), &plus).unwrap().is_none());
    }

    #[test]
    fn partners_are_symmetric(g in connected(2, 9), a in 0usize..9, b in 0usize..9) {
        let n = g.order();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let an = laplacian(&g);
        if let Some(p) = an.find_partner(&pair(a, b), &any_state).unwrap() {
            let back = an.find_partner(&p.state, &any_state).unwrap().expect("partner transfers back");
            prop_assert!(back.state.same_state(&pair(a, b)));
            prop_assert_eq!(back.verdict.time, p.verdict.time);
        }
    }
}
