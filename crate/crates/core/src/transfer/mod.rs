//! Exact decisions on supports, strong cospectrality, periodicity and
//! perfect state transfer.
//!
//! Every decision is made from Krylov minimal polynomials in integer
//! arithmetic. The floating-point decomposition held by [`Analyzer`] is used
//! only to certify: a positive transfer verdict whose fidelity at the exact
//! time falls short of `1 - PST_FIDELITY_TOL` is a [`Error::Consistency`].

mod state;
mod time;

use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::{
    algebraic_difference, distinct_eigenvalue_count, factor_linear_quadratic, hamiltonian, krylov_min_poly,
    AlgebraicNumber, HamiltonianKind, IntMatrix, IntPolynomial,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numeric::{eigendecompose, EigenDecomposition, GROUP_TOL};

pub use state::{QuantumState, StateForm};
pub use time::ExactTime;

/// Largest allowed shortfall of the fidelity at an exact transfer time.
pub const PST_FIDELITY_TOL: f64 = 1e-8;

/// How the sign-split of a common support looks for two states.
#[derive(Debug, Clone)]
pub struct CospectralityCertificate {
    /// `E_r s1 = E_r s2`.
    pub lambda_plus: Vec<AlgebraicNumber>,
    /// `E_r s1 = -E_r s2`.
    pub lambda_minus: Vec<AlgebraicNumber>,
    pub strongly_cospectral: bool,
}

#[derive(Debug, Clone)]
pub enum Periodicity {
    /// Singleton integer support: `U(t) s` is a phase times `s` for all `t`.
    Fixed,
    /// Minimum period `2 pi / (g sqrt(radicand))`. `mixed` marks supports
    /// holding both integers and irrational quadratics.
    Periodic { period: ExactTime, g: u64, radicand: u64, mixed: bool },
    NonPeriodic,
}

impl Periodicity {
    /// True for fixed states too.
    pub fn is_periodic(&self) -> bool {
        !matches!(self, Periodicity::NonPeriodic)
    }
}

/// Exact data of one state, reusable across many pairwise decisions.
#[derive(Debug, Clone)]
pub struct StateAnalysis {
    pub state: QuantumState,
    pub vector: Vec<i64>,
    pub min_poly: IntPolynomial,
    /// Ascending.
    pub support: Vec<AlgebraicNumber>,
    pub periodicity: Periodicity,
}

/// A decided perfect state transfer `s1 -> s2`.
#[derive(Debug, Clone)]
pub struct PstVerdict {
    pub time: ExactTime,
    /// Whether `s2` was negated so that the largest support eigenvalue lies
    /// in `lambda_plus`; the certificate is stated after that normalisation.
    pub sign_flipped: bool,
    pub certificate: CospectralityCertificate,
    /// Numeric fidelity at `time`.
    pub fidelity: f64,
}

/// A transfer partner, oriented so that no sign flip is needed where the
/// form allows it (pair states are reversed instead).
#[derive(Debug, Clone)]
pub struct Partner {
    pub state: QuantumState,
    pub verdict: PstVerdict,
}

impl Partner {
    /// Reverses a pair-state candidate whose sign had to be flipped.
    pub fn oriented(candidate: QuantumState, mut verdict: PstVerdict) -> Self {
        let state = if verdict.sign_flipped && candidate.form == StateForm::Pair {
            verdict.sign_flipped = false;
            candidate.reversed()
        } else {
            candidate
        };
        Partner { state, verdict }
    }
}

#[derive(Debug, Clone)]
pub enum Verdict {
    Fixed,
    Pst { partner: QuantumState, time: ExactTime },
    PeriodicOnly { period: ExactTime },
    NonPeriodic,
}

/// Full per-state result.
#[derive(Debug, Clone)]
pub struct TransferReport {
    pub state: QuantumState,
    pub min_poly: IntPolynomial,
    pub support: Vec<AlgebraicNumber>,
    pub verdict: Verdict,
    pub certificate: Option<CospectralityCertificate>,
    pub mixed_field: bool,
}

/// A transfer predicted by chaining two transfers through a pivot vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComposedTransfer {
    pub source: QuantumState,
    pub partner: QuantumState,
    pub time: ExactTime,
}

/// Decision engine for one graph and Hamiltonian.
#[derive(Debug, Clone)]
pub struct Analyzer {
    graph: Graph,
    kind: HamiltonianKind,
    h: IntMatrix,
    spectrum: EigenDecomposition,
}

impl Analyzer {
    /// Builds `H` and its numeric decomposition, checking that the number of
    /// numerically distinct eigenvalues matches the exact count.
    pub fn new(graph: &Graph, kind: HamiltonianKind) -> Result<Self> {
        let h = hamiltonian(graph, kind);
        let spectrum = eigendecompose(&h, GROUP_TOL);
        let exact = distinct_eigenvalue_count(&h);
        if spectrum.groups().len() != exact {
            return Err(Error::Consistency(format!(
                "{} numeric eigenvalue groups but {exact} distinct exact eigenvalues",
                spectrum.groups().len()
            )));
        }
        Ok(Analyzer {
            graph: *graph,
            kind,
            h,
            spectrum,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn kind(&self) -> HamiltonianKind {
        self.kind
    }

    pub fn hamiltonian(&self) -> &IntMatrix {
        &self.h
    }

    pub fn spectrum(&self) -> &EigenDecomposition {
        &self.spectrum
    }

    pub fn min_poly(&self, s: &QuantumState) -> Result<IntPolynomial> {
        krylov_min_poly(&self.h, &s.vector(self.graph.order())?)
    }

    /// Distinct roots of `m`, ascending.
    pub fn roots_of(&self, m: &IntPolynomial) -> Result<Vec<AlgebraicNumber>> {
        let range = self.kind.eigenvalue_range(self.graph.order());
        Ok(factor_linear_quadratic(m, Some(range))?.roots())
    }

    pub fn analyze_state(&self, s: &QuantumState) -> Result<StateAnalysis> {
        let vector = s.vector(self.graph.order())?;
        let min_poly = krylov_min_poly(&self.h, &vector)?;
        let support = self.roots_of(&min_poly)?;
        let periodicity = periodicity_of(&support);
        Ok(StateAnalysis {
            state: *s,
            vector,
            min_poly,
            support,
            periodicity,
        })
    }

    pub fn support(&self, s: &QuantumState) -> Result<Vec<AlgebraicNumber>> {
        self.roots_of(&self.min_poly(s)?)
    }

    pub fn periodicity(&self, s: &QuantumState) -> Result<Periodicity> {
        Ok(periodicity_of(&self.support(s)?))
    }

    /// Fixed pair state. Under the Laplacian the answer is cross-checked
    /// against twin endpoints.
    pub fn is_fixed(&self, s: &QuantumState) -> Result<bool> {
        let b = match (s.form, s.b) {
            (StateForm::Pair, Some(b)) => b,
            _ => return Err(Error::NotPairForm),
        };
        let fixed = self.min_poly(s)?.degree() == Some(1);
        if self.kind == HamiltonianKind::Laplacian && fixed != self.graph.twins(s.a, b)? {
            return Err(Error::Consistency(format!("{s}: fixed = {fixed} disagrees with twin test")));
        }
        Ok(fixed)
    }

    pub fn strong_cospectrality(&self, s1: &QuantumState, s2: &QuantumState) -> Result<CospectralityCertificate> {
        let (d1, d2) = (self.analyze_state(s1)?, self.analyze_state(s2)?);
        self.cospectrality_of(&d1, &d2)
    }

    /// Certificate for two analysed states. Supports that differ give empty
    /// `lambda` sets.
    pub fn cospectrality_of(&self, d1: &StateAnalysis, d2: &StateAnalysis) -> Result<CospectralityCertificate> {
        let n = self.graph.order();
        if d1.vector.len() != n || d2.vector.len() != n {
            return Err(Error::Dimension {
                expected: n,
                got: d1.vector.len().max(d2.vector.len()),
            });
        }
        let diff: Vec<i64> = d1.vector.iter().zip(&d2.vector).map(|(x, y)| x - y).collect();
        let sum: Vec<i64> = d1.vector.iter().zip(&d2.vector).map(|(x, y)| x + y).collect();
        if diff.iter().all(|&x| x == 0) || sum.iter().all(|&x| x == 0) {
            return Err(Error::DegenerateStates);
        }
        if d1.min_poly != d2.min_poly {
            return Ok(CospectralityCertificate {
                lambda_plus: Vec::new(),
                lambda_minus: Vec::new(),
                strongly_cospectral: false,
            });
        }
        let m_diff = krylov_min_poly(&self.h, &diff)?;
        let m_sum = krylov_min_poly(&self.h, &sum)?;
        let mut cert = CospectralityCertificate {
            lambda_plus: Vec::new(),
            lambda_minus: Vec::new(),
            strongly_cospectral: true,
        };
        for theta in &d1.support {
            let plus = !theta.is_root_of(&m_diff);
            let minus = !theta.is_root_of(&m_sum);
            match (plus, minus) {
                (true, false) => cert.lambda_plus.push(theta.clone()),
                (false, true) => cert.lambda_minus.push(theta.clone()),
                (false, false) => cert.strongly_cospectral = false,
                (true, true) => {
                    return Err(Error::Consistency(format!(
                        "{theta} in both sign classes for {} and {}",
                        d1.state, d2.state
                    )))
                }
            }
        }
        Ok(cert)
    }

    pub fn pst_decide(&self, s1: &QuantumState, s2: &QuantumState) -> Result<Option<PstVerdict>> {
        let (d1, d2) = (self.analyze_state(s1)?, self.analyze_state(s2)?);
        self.pst_decide_analyzed(&d1, &d2)
    }

    /// Perfect state transfer between two analysed states, certified by the
    /// numeric fidelity at the exact time.
    pub fn pst_decide_analyzed(&self, d1: &StateAnalysis, d2: &StateAnalysis) -> Result<Option<PstVerdict>> {
        let mut cert = self.cospectrality_of(d1, d2)?;
        if !cert.strongly_cospectral {
            return Ok(None);
        }
        let Periodicity::Periodic { g, radicand, .. } = d1.periodicity else {
            return Ok(None);
        };
        let theta0 = d1.support.last().expect("nonzero state has nonempty support");
        let sign_flipped = cert.lambda_minus.iter().any(|x| x.same_value(theta0));
        if sign_flipped {
            core::mem::swap(&mut cert.lambda_plus, &mut cert.lambda_minus);
        }
        for (set, parity) in [(&cert.lambda_plus, 0), (&cert.lambda_minus, 1)] {
            for theta in set {
                let m = surd_multiple(theta0, theta, radicand as i64)
                    .ok_or_else(|| Error::Consistency(format!("{theta0} - {theta} left the field")))?;
                if (m / g as i64).rem_euclid(2) != parity {
                    return Ok(None);
                }
            }
        }
        let time = ExactTime::half_period(g, radicand);
        let fidelity = self.spectrum.fidelity(&d1.vector, &d2.vector, time.approx())?;
        if fidelity < 1.0 - PST_FIDELITY_TOL {
            return Err(Error::Consistency(format!(
                "{} -> {} at {time}: exact transfer but fidelity {fidelity}",
                d1.state, d2.state
            )));
        }
        Ok(Some(PstVerdict {
            time,
            sign_flipped,
            certificate: cert,
            fidelity,
        }))
    }

    /// The unique state of the same form that `s` transfers to perfectly,
    /// among candidates accepted by `filter`.
    pub fn find_partner(&self, s: &QuantumState, filter: &dyn Fn(&QuantumState) -> bool) -> Result<Option<Partner>> {
        let d = self.analyze_state(s)?;
        self.find_partner_analyzed(&d, filter)
    }

    fn find_partner_analyzed(
        &self,
        d: &StateAnalysis,
        filter: &dyn Fn(&QuantumState) -> bool,
    ) -> Result<Option<Partner>> {
        if !matches!(d.periodicity, Periodicity::Periodic { .. }) {
            return Ok(None);
        }
        let mut found: Option<Partner> = None;
        for c in QuantumState::all(d.state.form, self.graph.order()) {
            if c.same_state(&d.state) || !filter(&c) {
                continue;
            }
            let mc = self.min_poly(&c)?;
            if mc != d.min_poly {
                continue;
            }
            let dc = StateAnalysis {
                state: c,
                vector: c.vector(self.graph.order())?,
                min_poly: mc,
                support: d.support.clone(),
                periodicity: d.periodicity.clone(),
            };
            let Some(verdict) = self.pst_decide_analyzed(d, &dc)? else {
                continue;
            };
            if let Some(prev) = &found {
                return Err(Error::Consistency(format!(
                    "{} transfers to both {} and {c}",
                    d.state, prev.state
                )));
            }
            found = Some(Partner::oriented(c, verdict));
        }
        Ok(found)
    }

    /// Support, periodicity and (among candidates accepted by `filter`)
    /// transfer partner of `s`.
    pub fn report(&self, s: &QuantumState, filter: &dyn Fn(&QuantumState) -> bool) -> Result<TransferReport> {
        let d = self.analyze_state(s)?;
        let partner = self.find_partner_analyzed(&d, filter)?;
        let mixed_field = matches!(d.periodicity, Periodicity::Periodic { mixed: true, .. });
        let (verdict, certificate) = match (partner, &d.periodicity) {
            (Some(p), _) => (
                Verdict::Pst {
                    partner: p.state,
                    time: p.verdict.time,
                },
                Some(p.verdict.certificate),
            ),
            (None, Periodicity::Fixed) => (Verdict::Fixed, None),
            (None, Periodicity::Periodic { period, .. }) => (Verdict::PeriodicOnly { period: *period }, None),
            (None, Periodicity::NonPeriodic) => (Verdict::NonPeriodic, None),
        };
        Ok(TransferReport {
            state: d.state,
            min_poly: d.min_poly,
            support: d.support,
            verdict,
            certificate,
            mixed_field,
        })
    }
}

/// Periodicity read off an exact support (ascending).
///
/// Opaque roots make a state non-periodic. Otherwise the state is periodic
/// exactly when every difference `theta_0 - theta_r` is an integer multiple
/// of `sqrt(radicand)` for one common squarefree radicand (`1` when the
/// support is integral); the minimum period is `2 pi / (g sqrt(radicand))`
/// with `g` the gcd of those multiples.
pub fn periodicity_of(support: &[AlgebraicNumber]) -> Periodicity {
    if support.is_empty() || support.iter().any(AlgebraicNumber::is_opaque) {
        return Periodicity::NonPeriodic;
    }
    if support.len() == 1 {
        return match support[0] {
            AlgebraicNumber::Integer(_) => Periodicity::Fixed,
            _ => Periodicity::NonPeriodic,
        };
    }
    let mut radicands = support.iter().filter_map(AlgebraicNumber::radicand);
    let radicand = match radicands.next() {
        None => 1,
        Some(r) if radicands.all(|x| x == r) => r,
        Some(_) => return Periodicity::NonPeriodic,
    };
    let theta0 = support.last().expect("nonempty");
    let mut g = 0i64;
    for theta in &support[..support.len() - 1] {
        match surd_multiple(theta0, theta, radicand) {
            Some(m) => g = g.gcd(&m),
            None => return Periodicity::NonPeriodic,
        }
    }
    let (g, radicand) = (g.unsigned_abs(), radicand as u64);
    Periodicity::Periodic {
        period: ExactTime::period(g, radicand),
        g,
        radicand,
        mixed: radicand > 1 && support.iter().any(AlgebraicNumber::is_integer),
    }
}

/// `m` with `a - b = m sqrt(radicand)`, for `radicand = 1` meaning an
/// integer difference.
fn surd_multiple(a: &AlgebraicNumber, b: &AlgebraicNumber, radicand: i64) -> Option<i64> {
    let d = algebraic_difference(a, b).ok()??;
    if radicand == 1 {
        return d.radicand.is_none().then(|| d.integer_surd_multiple()).flatten();
    }
    if !d.rational.numer().is_zero() || !d.surd.is_integer() {
        return None;
    }
    Some(d.surd.to_integer())
}

/// Chains `(a,b) -> (alpha,beta)` and `(b,c) -> (beta,gamma)` at a common
/// time into the predicted `(a,c) -> (alpha,gamma)`.
///
/// Source pairs must share exactly one vertex, as must the partners.
pub fn transitivity_compose(r1: &TransferReport, r2: &TransferReport) -> Result<ComposedTransfer> {
    let (Verdict::Pst { partner: p1, time: t1 }, Verdict::Pst { partner: p2, time: t2 }) = (&r1.verdict, &r2.verdict)
    else {
        return Err(Error::NoPivot);
    };
    if t1 != t2 {
        return Err(Error::NoPivot);
    }
    let (s1, s2) = (r1.state, r2.state);
    if [s1, s2, *p1, *p2].iter().any(|s| s.form != StateForm::Pair) {
        return Err(Error::NotPairForm);
    }
    let (a, c) = pivot_ends(&s1, &s2).ok_or(Error::NoPivot)?;
    let (alpha, gamma) = pivot_ends(p1, p2).ok_or(Error::NoPivot)?;
    Ok(ComposedTransfer {
        source: QuantumState::pair(a, c)?,
        partner: QuantumState::pair(alpha, gamma)?,
        time: *t1,
    })
}

/// The two non-shared endpoints when `x` and `y` share exactly one vertex.
fn pivot_ends(x: &QuantumState, y: &QuantumState) -> Option<(usize, usize)> {
    let (xa, xb) = (x.a, x.b?);
    let (ya, yb) = (y.a, y.b?);
    let shared: Vec<usize> = [xa, xb].into_iter().filter(|v| *v == ya || *v == yb).collect();
    if shared.len() != 1 {
        return None;
    }
    let p = shared[0];
    let a = if xa == p { xb } else { xa };
    let c = if ya == p { yb } else { ya };
    Some((a, c))
}

/// Accepts every candidate.
pub fn any_state(_: &QuantumState) -> bool {
    true
}
