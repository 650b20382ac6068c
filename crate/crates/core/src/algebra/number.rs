use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;

use num_rational::Ratio;
use num_traits::Zero;
#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;

use crate::algebra::factor::numeric_roots;
use crate::algebra::poly::IntPolynomial;
use crate::error::{Error, Result};

/// An exact eigenvalue.
#[derive(Clone, Debug)]
pub enum AlgebraicNumber {
    Integer(i64),
    /// `(p + q*sqrt(radicand)) / 2` with `q != 0`, squarefree `radicand > 1`
    /// and `p^2 - q^2 radicand` divisible by 4 (an algebraic integer).
    Quadratic { p: i64, q: i64, radicand: i64 },
    /// A root of an unfactored residual, known only numerically.
    Opaque { factor: IntPolynomial, approx: f64 },
}

/// `a - b = rational + surd * sqrt(radicand)`; `radicand` is `None` when both
/// inputs are integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldDifference {
    pub rational: Ratio<i64>,
    pub surd: Ratio<i64>,
    pub radicand: Option<i64>,
}

impl FieldDifference {
    /// `Some(m)` when the difference is exactly `m * sqrt(radicand)` with
    /// integer `m` (taking `radicand = 1` for integer differences).
    pub fn integer_surd_multiple(&self) -> Option<i64> {
        match self.radicand {
            None => self.rational.is_integer().then(|| self.rational.to_integer()),
            Some(_) => (*self.rational.numer() == 0 && self.surd.is_integer()).then(|| self.surd.to_integer()),
        }
    }
}

impl AlgebraicNumber {
    /// Builds `(p + q sqrt(d)) / 2` from an arbitrary positive non-square
    /// `d`, pulling square factors out of the radicand.
    pub fn quadratic(p: i64, q: i64, d: i64) -> Self {
        debug_assert!(d > 1);
        let (mut radicand, mut q) = (d, q);
        let mut f = 2;
        while f * f <= radicand {
            while radicand % (f * f) == 0 {
                radicand /= f * f;
                q *= f;
            }
            f += 1;
        }
        if radicand == 1 {
            debug_assert!((p + q) % 2 == 0);
            return AlgebraicNumber::Integer((p + q) / 2);
        }
        AlgebraicNumber::Quadratic { p, q, radicand }
    }

    pub fn approx(&self) -> f64 {
        match *self {
            AlgebraicNumber::Integer(k) => k as f64,
            AlgebraicNumber::Quadratic { p, q, radicand } => (p as f64 + q as f64 * (radicand as f64).sqrt()) / 2.0,
            AlgebraicNumber::Opaque { approx, .. } => approx,
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, AlgebraicNumber::Integer(_))
    }

    pub fn is_opaque(&self) -> bool {
        matches!(self, AlgebraicNumber::Opaque { .. })
    }

    /// Squarefree radicand of the quadratic field, if irrational quadratic.
    pub fn radicand(&self) -> Option<i64> {
        match *self {
            AlgebraicNumber::Quadratic { radicand, .. } => Some(radicand),
            _ => None,
        }
    }

    /// Minimal polynomial over the rationals (the residual factor for opaque
    /// roots, which need not be irreducible).
    pub fn minimal_polynomial(&self) -> IntPolynomial {
        match self {
            AlgebraicNumber::Integer(k) => IntPolynomial::linear(*k),
            AlgebraicNumber::Quadratic { p, q, radicand } => {
                IntPolynomial::quadratic(*p, (p * p - q * q * radicand) / 4)
            }
            AlgebraicNumber::Opaque { factor, .. } => factor.clone(),
        }
    }

    /// Exact identity for integers and quadratics; opaque roots match when
    /// they come from the same residual and agree numerically.
    pub fn same_value(&self, other: &Self) -> bool {
        use AlgebraicNumber::*;
        match (self, other) {
            (Integer(a), Integer(b)) => a == b,
            (Quadratic { p, q, radicand }, Quadratic { p: p2, q: q2, radicand: r2 }) => {
                p == p2 && q == q2 && radicand == r2
            }
            (Opaque { approx: a, .. }, Opaque { approx: b, .. }) => (a - b).abs() <= 1e-7 * (1.0 + a.abs()),
            _ => false,
        }
    }

    /// Whether `self` is a root of `p`: exact for integers and quadratics,
    /// and for opaque roots a numeric check against the common factor.
    pub fn is_root_of(&self, p: &IntPolynomial) -> bool {
        match self {
            AlgebraicNumber::Integer(k) => p.eval_int(*k).is_zero(),
            AlgebraicNumber::Quadratic { .. } => self.minimal_polynomial().divides(p),
            AlgebraicNumber::Opaque { factor, approx } => {
                let common = p.gcd(factor);
                common.degree().unwrap_or(0) > 0
                    && numeric_roots(&common)
                        .iter()
                        .any(|z| (z - approx).norm() <= 1e-7 * (1.0 + approx.abs()))
            }
        }
    }

    pub fn cmp_approx(&self, other: &Self) -> Ordering {
        self.approx().partial_cmp(&other.approx()).unwrap_or(Ordering::Equal)
    }

    /// Canonical text form: `2`, `(4+2*sqrt(2))/2`, or `rootof(x^3 - 2, 1.2599210498948732)`.
    pub fn exact_string(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicNumber::Integer(k) => write!(f, "{k}"),
            AlgebraicNumber::Quadratic { p, q, radicand } => {
                let sign = if *q < 0 { '-' } else { '+' };
                write!(f, "({p}{sign}{}*sqrt({radicand}))/2", q.abs())
            }
            AlgebraicNumber::Opaque { factor, approx } => write!(f, "rootof({factor}, {approx:?})"),
        }
    }
}

/// Exact `a - b` when both lie in a common quadratic field.
///
/// Returns `Ok(None)` for irrationals from different fields and an error for
/// opaque inputs.
pub fn algebraic_difference(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<Option<FieldDifference>> {
    use AlgebraicNumber::*;
    let half = |p: i64, q: i64| (Ratio::new(p, 2), Ratio::new(q, 2));
    let (pa, qa, ra) = match *a {
        Integer(k) => (2 * k, 0, None),
        Quadratic { p, q, radicand } => (p, q, Some(radicand)),
        Opaque { .. } => return Err(Error::OpaqueNumber),
    };
    let (pb, qb, rb) = match *b {
        Integer(k) => (2 * k, 0, None),
        Quadratic { p, q, radicand } => (p, q, Some(radicand)),
        Opaque { .. } => return Err(Error::OpaqueNumber),
    };
    let radicand = match (ra, rb) {
        (Some(x), Some(y)) if x != y => return Ok(None),
        (x, y) => x.or(y),
    };
    let (rational, surd) = half(pa - pb, qa - qb);
    Ok(Some(FieldDifference {
        rational,
        surd,
        radicand,
    }))
}
