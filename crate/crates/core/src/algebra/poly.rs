use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer polynomial, coefficients lowest degree first.
///
/// Always stored primitive (content 1) with a positive leading coefficient,
/// except for the zero polynomial, which has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: alloc::vec![BigInt::one()],
        }
    }

    /// Normalises `coeffs` to its primitive part.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        trim(&mut coeffs);
        make_primitive(&mut coeffs);
        if coeffs.last().is_some_and(|c| c.is_negative()) {
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x - root`.
    pub fn linear(root: i64) -> Self {
        Self::from_i64(&[-root, 1])
    }

    /// `x^2 - sum*x + product`.
    pub fn quadratic(sum: i64, product: i64) -> Self {
        Self::from_i64(&[product, -sum, 1])
    }

    /// `prod (x - r)` over `roots`.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(Self::one(), |acc, &r| acc.mul(&Self::linear(r)))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        // Gauss: a product of primitive polynomials is primitive.
        Self::new(mul_raw(&self.coeffs, &other.coeffs))
    }

    pub fn eval_int(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact quotient `self / divisor` when `divisor` divides `self` in `Z[x]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = divrem_exact(&self.coeffs, &divisor.coeffs)?;
        r.is_empty().then(|| Self::new(q))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// Primitive greatest common divisor, by primitive pseudo-remainder sequences.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.coeffs.clone(), other.coeffs.clone());
        if a.len() < b.len() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let mut r = pseudo_remainder(&a, &b);
            make_primitive(&mut r);
            a = b;
            b = r;
        }
        Self::new(a)
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides its argument")
    }

    /// Cauchy bound on the modulus of every root.
    pub fn root_bound(&self) -> f64 {
        let Some(lead) = self.leading().and_then(|c| c.to_f64()) else {
            return 0.0;
        };
        let lead = lead.abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY).abs() / lead)
            .fold(0.0, f64::max);
        1.0 + max
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&alloc::format!("{mag}"));
            }
            match i {
                0 => {}
                1 if show_coeff => out.push_str("*x"),
                1 => out.push('x'),
                _ if show_coeff => out.push_str(&alloc::format!("*x^{i}")),
                _ => out.push_str(&alloc::format!("x^{i}")),
            }
        }
        f.write_str(&out)
    }
}

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn make_primitive(v: &mut [BigInt]) {
    let g = content(v);
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
}

pub(crate) fn mul_raw(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Long division that fails as soon as a quotient coefficient is not integral.
fn divrem_exact(a: &[BigInt], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let lead = b.last()?;
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return Some((Vec::new(), r));
    }
    let mut q = alloc::vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let (quot, rem) = r.last().expect("nonempty").div_rem(lead);
        if !rem.is_zero() {
            return None;
        }
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &quot * c;
        }
        q[shift] = quot;
        trim(&mut r);
    }
    Some((q, r))
}

fn pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lead = b.last().expect("nonzero divisor");
    let mut r = a.to_vec();
    while r.len() >= b.len() && !r.is_empty() {
        let top = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= lead;
        }
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &top * c;
        }
        trim(&mut r);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalisation() {
        let p = IntPolynomial::from_i64(&[-4, 0, -2, 0]);
        assert_eq!(p, IntPolynomial::from_i64(&[2, 0, 1]));
        assert_eq!(p.degree(), Some(2));
        assert!(IntPolynomial::from_i64(&[0, 0]).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::from_i64(&[8, -6, 1]).to_string(), "x^2 - 6*x + 8");
        assert_eq!(IntPolynomial::from_i64(&[-2, 0, 0, 1]).to_string(), "x^3 - 2");
        assert_eq!(IntPolynomial::from_i64(&[0, 1]).to_string(), "x");
        assert_eq!(IntPolynomial::from_i64(&[1, -1, 3]).to_string(), "3*x^2 - x + 1");
    }

    #[test]
    fn from_roots_and_division() {
        let p = IntPolynomial::from_roots(&[2, 4]);
        assert_eq!(p, IntPolynomial::from_i64(&[8, -6, 1]));
        assert_eq!(p.div_exact(&IntPolynomial::linear(2)), Some(IntPolynomial::linear(4)));
        assert_eq!(p.div_exact(&IntPolynomial::linear(3)), None);
        assert_eq!(p.eval_int(4), BigInt::zero());
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = IntPolynomial::from_roots(&[1, 2, 2, 5]);
        let b = IntPolynomial::from_roots(&[2, 5, 7]);
        assert_eq!(a.gcd(&b), IntPolynomial::from_roots(&[2, 5]));
        assert_eq!(a.squarefree_part(), IntPolynomial::from_roots(&[1, 2, 5]));
        let x2m2 = IntPolynomial::from_i64(&[-2, 0, 1]);
        assert_eq!(x2m2.gcd(&IntPolynomial::linear(1)), IntPolynomial::one());
    }
}
