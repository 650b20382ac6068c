use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::poly::{content, IntPolynomial};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which matrix of the graph generates the walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HamiltonianKind {
    /// `D - A`.
    Laplacian,
    /// `D + A`.
    SignlessLaplacian,
    /// `A`.
    Adjacency,
}

impl HamiltonianKind {
    pub const ALL: [HamiltonianKind; 3] = [
        HamiltonianKind::Laplacian,
        HamiltonianKind::SignlessLaplacian,
        HamiltonianKind::Adjacency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HamiltonianKind::Laplacian => "laplacian",
            HamiltonianKind::SignlessLaplacian => "signless",
            HamiltonianKind::Adjacency => "adjacency",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Every eigenvalue lies in this closed interval (Gershgorin).
    pub fn eigenvalue_range(self, n: usize) -> (i64, i64) {
        let n = n as i64;
        match self {
            HamiltonianKind::Laplacian | HamiltonianKind::SignlessLaplacian => (0, 2 * (n - 1).max(0)),
            HamiltonianKind::Adjacency => (-(n - 1).max(0), (n - 1).max(0)),
        }
    }
}

impl fmt::Display for HamiltonianKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dense square integer matrix, row major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: alloc::vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: row.len(),
                });
            }
            m.data[i * n..(i + 1) * n].copy_from_slice(row);
        }
        Ok(m)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Kronecker product.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let (n, m) = (self.n, other.n);
        let mut out = IntMatrix::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..m {
                        out.set(i * m + k, j * m + l, self.get(i, j) * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            out.set(i, i, 1);
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "matrix orders differ");
        IntMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.n)
            .map(|i| {
                let mut acc = BigInt::zero();
                for (j, x) in v.iter().enumerate() {
                    let h = self.get(i, j);
                    if h != 0 && !x.is_zero() {
                        acc += x * h;
                    }
                }
                acc
            })
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.n).map(|i| self.row(i))).finish()
    }
}

/// The Hamiltonian of `kind` for `g`.
pub fn hamiltonian(g: &Graph, kind: HamiltonianKind) -> IntMatrix {
    let n = g.order();
    let mut h = IntMatrix::zeros(n);
    let off = match kind {
        HamiltonianKind::Laplacian => -1,
        _ => 1,
    };
    for (u, v) in g.edges() {
        h.set(u, v, off);
        h.set(v, u, off);
    }
    if kind != HamiltonianKind::Adjacency {
        for u in 0..n {
            h.set(u, u, g.degree(u) as i64);
        }
    }
    h
}

/// Minimal polynomial of `h` relative to `s`: the monic `m` of least degree
/// with `m(h) s = 0`, returned as a primitive integer polynomial.
///
/// Grows the Krylov sequence `s, hs, h^2 s, ...` while keeping it in
/// fraction-free echelon form. Every stored vector `w` carries the polynomial
/// `p` with `w = p(h) s`; the first vector that reduces to zero exposes the
/// annihilating polynomial.
pub fn krylov_min_poly(h: &IntMatrix, s: &[i64]) -> Result<IntPolynomial> {
    let n = h.order();
    if s.len() != n {
        return Err(Error::Dimension {
            expected: n,
            got: s.len(),
        });
    }
    if s.iter().all(|&x| x == 0) {
        return Err(Error::ZeroState);
    }
    struct Row {
        pivot: usize,
        vec: Vec<BigInt>,
        poly: Vec<BigInt>,
    }
    let mut basis: Vec<Row> = Vec::with_capacity(n);
    let mut vec: Vec<BigInt> = s.iter().map(|&x| BigInt::from(x)).collect();
    let mut poly = alloc::vec![BigInt::from(1)];
    loop {
        for row in &basis {
            let x = &vec[row.pivot];
            if x.is_zero() {
                continue;
            }
            let (a, b) = (row.vec[row.pivot].clone(), x.clone());
            for (dst, src) in vec.iter_mut().zip(&row.vec) {
                *dst = &*dst * &a - src * &b;
            }
            for (i, src) in row.poly.iter().enumerate() {
                poly[i] = &poly[i] * &a - src * &b;
            }
            for c in poly.iter_mut().skip(row.poly.len()) {
                *c *= &a;
            }
            reduce_content(&mut vec, &mut poly);
        }
        match vec.iter().position(|x| !x.is_zero()) {
            None => return Ok(IntPolynomial::new(poly)),
            Some(pivot) => {
                let next = h.apply(&vec);
                let mut shifted = alloc::vec![BigInt::zero()];
                shifted.extend(poly.iter().cloned());
                basis.push(Row { pivot, vec, poly });
                vec = next;
                poly = shifted;
            }
        }
    }
}

fn reduce_content(vec: &mut [BigInt], poly: &mut [BigInt]) {
    let g = num_integer::Integer::gcd(&content(vec), &content(poly));
    if g.is_zero() || g == BigInt::from(1) {
        return;
    }
    for x in vec.iter_mut().chain(poly.iter_mut()) {
        *x = &*x / &g;
    }
    if poly.last().is_some_and(|c| c.is_negative()) {
        for x in vec.iter_mut().chain(poly.iter_mut()) {
            *x = -&*x;
        }
    }
}

/// `det(xI - h)` by the Faddeev-LeVerrier recurrence (all divisions exact).
pub fn characteristic_polynomial(h: &IntMatrix) -> IntPolynomial {
    let n = h.order();
    let mut coeffs = alloc::vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut m: Vec<BigInt> = alloc::vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // m <- h * m + c_{n-k+1} I, then c_{n-k} = -tr(h m) / k
        let mut next = alloc::vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for l in 0..n {
                    let a = h.get(i, l);
                    if a != 0 {
                        acc += &m[l * n + j] * a;
                    }
                }
                next[i * n + j] = acc;
            }
            next[i * n + i] += &coeffs[n - k + 1];
        }
        m = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                let a = h.get(i, l);
                if a != 0 {
                    trace += &m[l * n + i] * a;
                }
            }
        }
        coeffs[n - k] = -(trace / BigInt::from(k as i64));
    }
    IntPolynomial::new(coeffs)
}

/// Number of distinct eigenvalues of a symmetric integer matrix.
pub fn distinct_eigenvalue_count(h: &IntMatrix) -> usize {
    characteristic_polynomial(h).squarefree_part().degree().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, Family};

    fn pair(n: usize, a: usize, b: usize) -> Vec<i64> {
        let mut v = alloc::vec![0; n];
        v[a] = 1;
        v[b] = -1;
        v
    }

    #[test]
    fn figure_one_laplacian() {
        let g = build_named(Family::Figure1, &[]).unwrap();
        let l = hamiltonian(&g, HamiltonianKind::Laplacian);
        let expected = IntMatrix::from_rows(&[
            &[2, 0, 0, -1, -1, 0],
            &[0, 2, 0, 0, -1, -1],
            &[0, 0, 2, 0, -1, -1],
            &[-1, 0, 0, 2, 0, -1],
            &[-1, -1, -1, 0, 3, 0],
            &[0, -1, -1, -1, 0, 3],
        ])
        .unwrap();
        assert_eq!(l, expected);
        assert!(l.is_symmetric());
    }

    #[test]
    fn single_vertex_hamiltonians_are_zero() {
        let k1 = Graph::empty(1).unwrap();
        for kind in HamiltonianKind::ALL {
            assert_eq!(hamiltonian(&k1, kind), IntMatrix::zeros(1));
        }
    }

    #[test]
    fn kinds_have_expected_signs() {
        let p3 = build_named(Family::Path, &[3]).unwrap();
        let q = hamiltonian(&p3, HamiltonianKind::SignlessLaplacian);
        assert_eq!(q.row(1), &[1, 2, 1]);
        let a = hamiltonian(&p3, HamiltonianKind::Adjacency);
        assert_eq!(a.row(1), &[1, 0, 1]);
        let l = hamiltonian(&p3, HamiltonianKind::Laplacian);
        assert!((0..3).all(|i| l.row(i).iter().sum::<i64>() == 0));
    }

    #[test]
    fn krylov_examples() {
        let p3 = build_named(Family::Path, &[3]).unwrap();
        let l = hamiltonian(&p3, HamiltonianKind::Laplacian);
        assert_eq!(krylov_min_poly(&l, &pair(3, 0, 2)).unwrap(), IntPolynomial::linear(1));
        assert_eq!(krylov_min_poly(&l, &pair(3, 0, 1)).unwrap(), IntPolynomial::from_roots(&[1, 3]));

        let g = build_named(Family::Figure1, &[]).unwrap();
        let l = hamiltonian(&g, HamiltonianKind::Laplacian);
        let m = krylov_min_poly(&l, &pair(6, 0, 3)).unwrap();
        assert_eq!(m, IntPolynomial::from_i64(&[8, -6, 1]));
    }

    #[test]
    fn krylov_rejects_bad_input() {
        let l = IntMatrix::zeros(3);
        assert_eq!(krylov_min_poly(&l, &[0, 0, 0]), Err(Error::ZeroState));
        assert!(matches!(krylov_min_poly(&l, &[1, 0]), Err(Error::Dimension { .. })));
        assert_eq!(krylov_min_poly(&l, &[1, 0, 0]).unwrap(), IntPolynomial::from_i64(&[0, 1]));
    }

    #[test]
    fn charpoly_of_path_three() {
        let p3 = build_named(Family::Path, &[3]).unwrap();
        let l = hamiltonian(&p3, HamiltonianKind::Laplacian);
        assert_eq!(characteristic_polynomial(&l), IntPolynomial::from_roots(&[0, 1, 3]));
        let c4 = build_named(Family::Cycle, &[4]).unwrap();
        let l = hamiltonian(&c4, HamiltonianKind::Laplacian);
        assert_eq!(characteristic_polynomial(&l), IntPolynomial::from_roots(&[0, 2, 2, 4]));
        assert_eq!(distinct_eigenvalue_count(&l), 3);
    }
}
