//! Extraction of linear and quadratic factors from integer polynomials.
//!
//! Only integer and real-quadratic roots matter for periodicity, so this is
//! deliberately not a full factorisation over the rationals: whatever remains
//! after pulling out integer roots and certified quadratic factors is split
//! by multiplicity into squarefree residuals whose roots are reported
//! numerically.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::number::AlgebraicNumber;
use crate::algebra::poly::IntPolynomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SpectrumFactor {
    pub poly: IntPolynomial,
    pub multiplicity: usize,
    /// Distinct real roots of `poly`, ascending.
    pub roots: Vec<AlgebraicNumber>,
}

/// A polynomial split into integer-root, quadratic and residual factors.
#[derive(Clone, Debug, Default)]
pub struct FactoredSpectrum {
    pub factors: Vec<SpectrumFactor>,
}

impl FactoredSpectrum {
    /// All distinct real roots, ascending.
    pub fn roots(&self) -> Vec<AlgebraicNumber> {
        let mut out: Vec<AlgebraicNumber> = self.factors.iter().flat_map(|f| f.roots.iter().cloned()).collect();
        out.sort_by(|a, b| a.cmp_approx(b));
        out
    }

    /// Product of the factors with multiplicity.
    pub fn product(&self) -> IntPolynomial {
        self.factors.iter().fold(IntPolynomial::one(), |acc, f| {
            (0..f.multiplicity).fold(acc, |acc, _| acc.mul(&f.poly))
        })
    }

    pub fn has_opaque(&self) -> bool {
        self.factors.iter().any(|f| f.roots.iter().any(AlgebraicNumber::is_opaque))
    }
}

/// Splits `p` into linear factors over the integers, irreducible monic
/// quadratics with real roots, and squarefree residuals (one per
/// multiplicity, plus a constant when `p` is not monic).
///
/// `root_range`, when given, bounds the integer roots searched for (for a
/// Hamiltonian, its Gershgorin interval); otherwise divisors of the trailing
/// coefficient are tried.
pub fn factor_linear_quadratic(p: &IntPolynomial, root_range: Option<(i64, i64)>) -> Result<FactoredSpectrum> {
    if p.is_zero() {
        return Err(Error::Parameter("cannot factor the zero polynomial"));
    }
    let mut out = FactoredSpectrum::default();
    let mut rest = p.clone();

    for r in integer_root_candidates(&rest, root_range) {
        let lin = IntPolynomial::linear(r);
        let mut mult = 0;
        while let Some(q) = rest.div_exact(&lin) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            out.factors.push(SpectrumFactor {
                poly: lin,
                multiplicity: mult,
                roots: alloc::vec![AlgebraicNumber::Integer(r)],
            });
        }
    }

    if rest.degree().unwrap_or(0) >= 2 {
        // Roots of the squarefree part are simple, hence accurate.
        let mut roots = numeric_roots(&rest.squarefree_part());
        let mut i = 0;
        'outer: while i < roots.len() {
            for j in (i + 1)..roots.len() {
                let Some((sum, prod)) = integral_pair(roots[i], roots[j]) else {
                    continue;
                };
                let disc = sum as i128 * sum as i128 - 4 * prod as i128;
                if disc <= 0 || is_square(disc) {
                    continue;
                }
                let quad = IntPolynomial::quadratic(sum, prod);
                let mut mult = 0;
                while let Some(q) = rest.div_exact(&quad) {
                    rest = q;
                    mult += 1;
                }
                if mult == 0 {
                    continue;
                }
                let lo = AlgebraicNumber::quadratic(sum, -1, disc as i64);
                let hi = AlgebraicNumber::quadratic(sum, 1, disc as i64);
                out.factors.push(SpectrumFactor {
                    poly: quad,
                    multiplicity: mult,
                    roots: alloc::vec![lo, hi],
                });
                // Drop every copy of the two roots just explained.
                let (a, b) = (roots[i], roots[j]);
                roots.retain(|z| (*z - a).norm() > 1e-6 * (1.0 + a.norm()) && (*z - b).norm() > 1e-6 * (1.0 + b.norm()));
                continue 'outer;
            }
            i += 1;
        }
    }

    let levels = multiplicity_levels(&rest);
    let mut explained = IntPolynomial::one();
    for (poly, multiplicity) in levels {
        for _ in 0..multiplicity {
            explained = explained.mul(&poly);
        }
        let roots = real_roots(&poly)
            .into_iter()
            .map(|approx| AlgebraicNumber::Opaque {
                factor: poly.clone(),
                approx,
            })
            .collect();
        out.factors.push(SpectrumFactor {
            poly,
            multiplicity,
            roots,
        });
    }
    let unit = rest.div_exact(&explained).expect("levels divide the residual");
    if unit != IntPolynomial::one() {
        out.factors.push(SpectrumFactor {
            poly: unit,
            multiplicity: 1,
            roots: Vec::new(),
        });
    }
    Ok(out)
}

/// `(f_k, k)` with `p = c * prod f_k^k`, each `f_k` squarefree, primitive,
/// with positive leading coefficient and degree at least one.
fn multiplicity_levels(p: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    // s_k is the product of the factors of multiplicity >= k.
    let mut out = Vec::new();
    let mut r = p.clone();
    let mut s = positive(r.squarefree_part());
    let mut k = 1;
    while s.degree().unwrap_or(0) >= 1 {
        r = r.div_exact(&s).expect("squarefree part divides");
        let next = positive(r.squarefree_part());
        let level = s.div_exact(&next).expect("nested squarefree parts");
        if level.degree().unwrap_or(0) >= 1 {
            out.push((positive(level), k));
        }
        s = next;
        k += 1;
    }
    out
}

fn positive(p: IntPolynomial) -> IntPolynomial {
    match p.leading() {
        Some(c) if c.is_negative() => IntPolynomial::new(p.coeffs().iter().map(|c| -c).collect()),
        _ => p,
    }
}

/// Distinct real roots of a squarefree polynomial, ascending, each polished
/// by Newton steps on a compensated evaluation.
fn real_roots(p: &IntPolynomial) -> Vec<f64> {
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    let mut reals: Vec<f64> = numeric_roots(p)
        .into_iter()
        .filter(|z| z.im.abs() <= 1e-7 * (1.0 + z.re.abs()))
        .map(|z| polish(&coeffs, z.re))
        .collect();
    reals.sort_by(|a, b| a.partial_cmp(b).unwrap_or(core::cmp::Ordering::Equal));
    reals.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * (1.0 + b.abs()));
    reals
}

const POLISH_STEPS: usize = 4;

fn polish(coeffs: &[f64], mut x: f64) -> f64 {
    for _ in 0..POLISH_STEPS {
        let f = compensated_horner(coeffs, x);
        let df = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (i, c)| acc * x + c * i as f64);
        if f == 0.0 || df == 0.0 || !(f / df).is_finite() {
            break;
        }
        let next = x - f / df;
        if (next - x).abs() > 1e-6 * (1.0 + x.abs()) {
            break;
        }
        x = next;
    }
    x
}

/// Horner evaluation carrying the rounding errors of every step, accurate
/// as if computed in twice the working precision.
fn compensated_horner(coeffs: &[f64], x: f64) -> f64 {
    let mut s = 0.0;
    let mut err = 0.0;
    for &c in coeffs.iter().rev() {
        let p = s * x;
        let p_err = Float::mul_add(s, x, -p);
        let t = p + c;
        let z = t - p;
        let t_err = (p - (t - z)) + (c - z);
        s = t;
        err = err * x + (p_err + t_err);
    }
    s + err
}

fn integer_root_candidates(p: &IntPolynomial, range: Option<(i64, i64)>) -> Vec<i64> {
    let coeffs = p.coeffs();
    let Some(tail) = coeffs.iter().position(|c| !c.is_zero()) else {
        return Vec::new();
    };
    let trailing = &coeffs[tail];
    let mut out = Vec::new();
    if tail > 0 {
        out.push(0);
    }
    let divides = |r: i64| (trailing % BigInt::from(r)).is_zero();
    match range {
        Some((lo, hi)) => out.extend((lo..=hi).filter(|&r| r != 0 && divides(r))),
        None => {
            let bound = p.root_bound();
            let t = trailing.abs().to_u64();
            match t {
                Some(t) if t <= 1 << 40 => {
                    let mut d = 1u64;
                    while d * d <= t {
                        if t % d == 0 {
                            for e in [d, t / d] {
                                let e = e as i64;
                                if (e as f64) <= bound + 1.0 {
                                    out.push(e);
                                    out.push(-e);
                                }
                            }
                        }
                        d += 1;
                    }
                }
                _ => {
                    let b = bound.min(1e6) as i64;
                    out.extend((-b..=b).filter(|&r| r != 0 && divides(r)));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn integral_pair(a: Complex64, b: Complex64) -> Option<(i64, i64)> {
    let s = a + b;
    let p = a * b;
    let (rs, rp) = (s.re.round(), p.re.round());
    let tol = |x: f64| 1e-5 * (1.0 + x.abs());
    if (s.re - rs).abs() > tol(rs) || s.im.abs() > tol(rs) || (p.re - rp).abs() > tol(rp) || p.im.abs() > tol(rp) {
        return None;
    }
    Some((rs.to_i64()?, rp.to_i64()?))
}

fn is_square(x: i128) -> bool {
    if x < 0 {
        return false;
    }
    let r = (x as f64).sqrt().round() as i128;
    (r - 1..=r + 1).any(|y| y >= 0 && y * y == x)
}

const MAX_ITERATIONS: usize = 500;
const STEP_TOL: f64 = 1e-14;

/// All complex roots by Aberth-Ehrlich iteration, with multiplicity.
pub fn numeric_roots(p: &IntPolynomial) -> Vec<Complex64> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    let coeffs: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    let lead = coeffs[deg];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    if deg == 1 {
        return alloc::vec![Complex64::new(-monic[0], 0.0)];
    }
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut f = Complex64::new(1.0, 0.0);
        let mut df = Complex64::new(0.0, 0.0);
        for k in (0..deg).rev() {
            df = df * z + f;
            f = f * z + monic[k];
        }
        (f, df)
    };
    let radius = p.root_bound();
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * core::f64::consts::PI * (k as f64 + 0.25) / deg as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    let mut done = alloc::vec![false; deg];
    for _ in 0..MAX_ITERATIONS {
        for i in 0..deg {
            if done[i] {
                continue;
            }
            let (f, df) = eval(z[i]);
            if f.norm() == 0.0 {
                done[i] = true;
                continue;
            }
            let newton = f / df;
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 0.0 {
                        repulsion += d.inv();
                    }
                }
            }
            let step = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            if step.is_finite() {
                z[i] -= step;
                done[i] = step.norm() <= STEP_TOL * (1.0 + z[i].norm());
            }
        }
        if done.iter().all(|&d| d) {
            break;
        }
    }
    z
}
