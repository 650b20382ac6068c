//! Floating-point spectral oracle: spectral idempotents, the transition
//! matrix `U(t) = sum_r exp(i t theta_r) E_r`, and state fidelities.

mod jacobi;

use alloc::vec::Vec;

use num_complex::Complex64;
#[cfg_attr(feature = "std", allow(unused_imports))]
use num_traits::Float;

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};

pub use jacobi::{jacobi, off_diagonal_norm, OFF_DIAGONAL_TOL};

/// Default tolerance for merging numerically equal eigenvalues.
pub const GROUP_TOL: f64 = 1e-9;

/// One distinct eigenvalue and the orthogonal projector onto its eigenspace.
#[derive(Clone, Debug)]
pub struct EigenGroup {
    pub value: f64,
    /// Row-major `n x n`.
    pub projector: Vec<f64>,
}

/// Spectral decomposition `H = sum_r theta_r E_r`, groups ascending by value.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    n: usize,
    groups: Vec<EigenGroup>,
}

/// `U(t)`, row-major.
#[derive(Clone, Debug)]
pub struct TransitionMatrix {
    n: usize,
    data: Vec<Complex64>,
}

pub fn eigendecompose(h: &IntMatrix, group_tol: f64) -> EigenDecomposition {
    let n = h.order();
    let dense: Vec<f64> = (0..n * n).map(|k| h.get(k / n, k % n) as f64).collect();
    let (values, vectors) = jacobi(&dense, n);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));

    let mut groups: Vec<EigenGroup> = Vec::new();
    let mut members: Vec<usize> = Vec::new();
    let flush = |members: &mut Vec<usize>, groups: &mut Vec<EigenGroup>| {
        if members.is_empty() {
            return;
        }
        let value = members.iter().map(|&k| values[k]).sum::<f64>() / members.len() as f64;
        let mut projector = alloc::vec![0.0; n * n];
        for &k in members.iter() {
            for i in 0..n {
                for j in 0..n {
                    projector[i * n + j] += vectors[i * n + k] * vectors[j * n + k];
                }
            }
        }
        groups.push(EigenGroup { value, projector });
        members.clear();
    };
    for &k in &order {
        if let Some(&last) = members.last() {
            if values[k] - values[last] > group_tol {
                flush(&mut members, &mut groups);
            }
        }
        members.push(k);
    }
    flush(&mut members, &mut groups);
    EigenDecomposition { n, groups }
}

impl EigenDecomposition {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn groups(&self) -> &[EigenGroup] {
        &self.groups
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.groups.iter().map(|g| g.value).collect()
    }

    /// `E_r v`.
    pub fn project(&self, r: usize, v: &[f64]) -> Vec<f64> {
        let n = self.n;
        let e = &self.groups[r].projector;
        (0..n).map(|i| (0..n).map(|j| e[i * n + j] * v[j]).sum()).collect()
    }

    /// Eigenvalues `theta_r` with `||E_r s|| > tol`.
    pub fn support(&self, s: &[i64], tol: f64) -> Result<Vec<f64>> {
        let v = self.check_state(s)?;
        Ok((0..self.groups.len())
            .filter(|&r| norm(&self.project(r, &v)) > tol)
            .map(|r| self.groups[r].value)
            .collect())
    }

    pub fn transition(&self, t: f64) -> TransitionMatrix {
        let n = self.n;
        let mut data = alloc::vec![Complex64::new(0.0, 0.0); n * n];
        for g in &self.groups {
            let phase = Complex64::from_polar(1.0, t * g.value);
            for (d, e) in data.iter_mut().zip(&g.projector) {
                *d += phase * e;
            }
        }
        TransitionMatrix { n, data }
    }

    /// Per-group overlaps `<s2_hat, E_r s1_hat>`, so that the amplitude at
    /// time `t` is `sum_r exp(i t theta_r) c_r`.
    pub fn overlaps(&self, s1: &[i64], s2: &[i64]) -> Result<Vec<f64>> {
        let (v1, v2) = (unit(&self.check_state(s1)?), unit(&self.check_state(s2)?));
        Ok((0..self.groups.len())
            .map(|r| dot(&v2, &self.project(r, &v1)))
            .collect())
    }

    /// `|<s2_hat, U(t) s1_hat>|^2` for normalised states.
    pub fn fidelity(&self, s1: &[i64], s2: &[i64], t: f64) -> Result<f64> {
        let c = self.overlaps(s1, s2)?;
        Ok(self.fidelity_from_overlaps(&c, t))
    }

    fn fidelity_from_overlaps(&self, c: &[f64], t: f64) -> f64 {
        let amp: Complex64 = self
            .groups
            .iter()
            .zip(c)
            .map(|(g, &c)| Complex64::from_polar(c, t * g.value))
            .sum();
        amp.norm_sqr().min(1.0)
    }

    /// Fidelity on the uniform grid `t_k = k t_max / (steps - 1)`.
    pub fn fidelity_curve(&self, s1: &[i64], s2: &[i64], t_max: f64, steps: usize) -> Result<Vec<(f64, f64)>> {
        if steps < 2 {
            return Err(Error::Parameter("curve needs at least two steps"));
        }
        if !(t_max > 0.0 && t_max.is_finite()) {
            return Err(Error::Parameter("curve end time must be positive and finite"));
        }
        let c = self.overlaps(s1, s2)?;
        Ok((0..steps)
            .map(|k| {
                let t = t_max * k as f64 / (steps - 1) as f64;
                (t, self.fidelity_from_overlaps(&c, t))
            })
            .collect())
    }

    fn check_state(&self, s: &[i64]) -> Result<Vec<f64>> {
        if s.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: s.len(),
            });
        }
        if s.iter().all(|&x| x == 0) {
            return Err(Error::ZeroState);
        }
        Ok(s.iter().map(|&x| x as f64).collect())
    }
}

impl TransitionMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        (0..n).map(|i| (0..n).map(|j| self.data[i * n + j] * v[j]).sum()).collect()
    }

    /// `max |(U U^*)_{ij} - delta_{ij}|`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let p: Complex64 = (0..n).map(|k| self.get(i, k) * self.get(j, k).conj()).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((p - target).norm());
            }
        }
        worst
    }

    /// `max |U_{ij} - U_{ji}|`.
    pub fn symmetry_defect(&self) -> f64 {
        let n = self.n;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..i {
                worst = worst.max((self.get(i, j) - self.get(j, i)).norm());
            }
        }
        worst
    }

    /// Kronecker product, index `i * other.n + a`.
    pub fn kron(&self, other: &TransitionMatrix) -> TransitionMatrix {
        let (n, m) = (self.n, other.n);
        let mut data = alloc::vec![Complex64::new(0.0, 0.0); n * m * n * m];
        for i in 0..n {
            for j in 0..n {
                for a in 0..m {
                    for b in 0..m {
                        data[(i * m + a) * n * m + j * m + b] = self.get(i, j) * other.get(a, b);
                    }
                }
            }
        }
        TransitionMatrix { n: n * m, data }
    }

    /// `max |U_{ij} - V_{ij}|`.
    pub fn max_distance(&self, other: &TransitionMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// `U(t)` for `H`, via a fresh decomposition.
pub fn transition(h: &IntMatrix, t: f64) -> TransitionMatrix {
    eigendecompose(h, GROUP_TOL).transition(t)
}

pub fn fidelity(h: &IntMatrix, s1: &[i64], s2: &[i64], t: f64) -> Result<f64> {
    eigendecompose(h, GROUP_TOL).fidelity(s1, s2, t)
}

pub fn fidelity_curve(h: &IntMatrix, s1: &[i64], s2: &[i64], t_max: f64, steps: usize) -> Result<Vec<(f64, f64)>> {
    eigendecompose(h, GROUP_TOL).fidelity_curve(s1, s2, t_max, steps)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn unit(a: &[f64]) -> Vec<f64> {
    let r = norm(a);
    a.iter().map(|x| x / r).collect()
}
