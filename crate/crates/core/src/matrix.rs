//! Exact symmetric integer matrices and their spectral queries.
//!
//! The comparison of the smallest eigenvalue against a rational threshold
//! is decided exactly, by a pivoted LDL-style positive-semidefiniteness
//! test over arbitrary-precision rationals. Floating-point eigenvalues are
//! available as advisory values only.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact trichotomy of `lambda_min(M)` against a rational threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaOrder {
    Less,
    Equal,
    Greater,
}

impl LambdaOrder {
    pub fn as_str(self) -> &'static str {
        match self {
            LambdaOrder::Less => "less",
            LambdaOrder::Equal => "equal",
            LambdaOrder::Greater => "greater",
        }
    }
}

/// Dense symmetric matrix with integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricIntMatrix {
    n: usize,
    // row-major, full storage; set() keeps it symmetric
    entries: Vec<i64>,
}

impl SymmetricIntMatrix {
    pub fn zero(n: usize) -> Self {
        SymmetricIntMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(Error::Malformed("matrix is not square".into()));
            }
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::Malformed("matrix is not symmetric".into()));
                }
            }
        }
        Ok(SymmetricIntMatrix {
            n,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
        self.entries[j * self.n + i] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.set(i, j, self.get(i, j) + v);
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn negated(&self) -> Self {
        SymmetricIntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }

    /// Principal submatrix on the given (strictly increasing) index set.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        let k = idx.len();
        let mut m = SymmetricIntMatrix::zero(k);
        for a in 0..k {
            for b in 0..k {
                m.entries[a * k + b] = self.get(idx[a], idx[b]);
            }
        }
        m
    }

    /// Smallest and largest eigenvalue, floating point (advisory only).
    pub fn lambda_extremes_float(&self) -> (f64, f64) {
        assert!(self.n >= 1);
        let m = nalgebra::DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j) as f64);
        let eigs = m.symmetric_eigenvalues();
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for v in eigs.iter() {
            min = min.min(*v);
            max = max.max(*v);
        }
        (min, max)
    }

    /// Exact trichotomy of `lambda_min(self)` against `r`.
    ///
    /// `Greater` iff `self - r*I` is positive definite, `Equal` iff it is
    /// positive semidefinite and singular, `Less` otherwise.
    pub fn cmp_lambda_min(&self, r: &BigRational) -> LambdaOrder {
        assert!(self.n >= 1);
        match psd_rank(self.shifted(r)) {
            None => LambdaOrder::Less,
            Some(rank) if rank == self.n => LambdaOrder::Greater,
            Some(_) => LambdaOrder::Equal,
        }
    }

    /// Convenience wrapper for integer thresholds.
    pub fn cmp_lambda_min_int(&self, r: i64) -> LambdaOrder {
        self.cmp_lambda_min(&BigRational::from_integer(BigInt::from(r)))
    }

    /// Dimension of `ker(self - r*I)`, computed exactly.
    pub fn eigen_multiplicity_at(&self, r: &BigRational) -> usize {
        assert!(self.n >= 1);
        self.n - rational_rank(self.shifted(r))
    }

    pub fn eigen_multiplicity_at_int(&self, r: i64) -> usize {
        self.eigen_multiplicity_at(&BigRational::from_integer(BigInt::from(r)))
    }

    fn shifted(&self, r: &BigRational) -> Vec<Vec<BigRational>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let mut v = BigRational::from_integer(BigInt::from(self.get(i, j)));
                        if i == j {
                            v -= r;
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }
}

/// Positive-semidefiniteness test with rank, by symmetric pivoting.
///
/// Returns `Some(rank)` when the matrix is PSD and `None` otherwise.
/// At each step a strictly positive diagonal pivot is eliminated via its
/// Schur complement; when only non-positive diagonal entries remain the
/// matrix is PSD iff the remaining block is identically zero.
fn psd_rank(mut m: Vec<Vec<BigRational>>) -> Option<usize> {
    let n = m.len();
    let mut active: Vec<usize> = (0..n).collect();
    let mut rank = 0;
    loop {
        if active.iter().any(|&i| m[i][i].is_negative()) {
            return None;
        }
        let pivot = active.iter().copied().find(|&i| m[i][i].is_positive());
        let p = match pivot {
            Some(p) => p,
            None => {
                // all remaining diagonal entries are zero
                for &i in &active {
                    for &j in &active {
                        if !m[i][j].is_zero() {
                            return None;
                        }
                    }
                }
                return Some(rank);
            }
        };
        active.retain(|&i| i != p);
        rank += 1;
        let d = m[p][p].clone();
        for &i in &active {
            if m[p][i].is_zero() {
                continue;
            }
            let f = &m[p][i] / &d;
            for &j in &active {
                let delta = &f * &m[p][j];
                m[i][j] -= delta;
            }
        }
        if active.is_empty() {
            return Some(rank);
        }
    }
}

/// Exact rank of a rational matrix by Gaussian elimination.
fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| !m[r][col].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => continue,
        };
        m.swap(row, p);
        let d = m[row][col].clone();
        for r in row + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &d;
            for c in col..cols {
                let delta = &f * &m[row][c];
                m[r][c] -= delta;
            }
        }
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Exact rank of an integer matrix (rows given).
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    rational_rank(m)
}

/// Exact determinant of a square integer matrix (Bareiss elimination).
pub fn integer_det(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SymmetricIntMatrix {
        SymmetricIntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn float_extremes_trivial() {
        let (lo, hi) = m(&[&[0]]).lambda_extremes_float();
        assert!(lo.abs() < 1e-9 && hi.abs() < 1e-9);
        let edge = m(&[&[0, 1], &[1, 0]]);
        let (lo, hi) = edge.lambda_extremes_float();
        assert!((lo + 1.0).abs() < 1e-9);
        assert!((hi - 1.0).abs() < 1e-9);
    }

    #[test]
    fn cmp_lambda_min_examples() {
        assert_eq!(m(&[&[-3]]).cmp_lambda_min_int(-3), LambdaOrder::Equal);
        // eigenvalues of [[-2,-1],[-1,-2]] are -1 and -3
        let sp_c2 = m(&[&[-2, -1], &[-1, -2]]);
        assert_eq!(sp_c2.cmp_lambda_min_int(-3), LambdaOrder::Equal);
        let edge = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(edge.cmp_lambda_min_int(-3), LambdaOrder::Greater);
        assert_eq!(edge.cmp_lambda_min_int(-1), LambdaOrder::Equal);
        assert_eq!(edge.cmp_lambda_min_int(0), LambdaOrder::Less);
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(m(&[&[-3]]).eigen_multiplicity_at_int(-3), 1);
        let sp_c2 = m(&[&[-2, -1], &[-1, -2]]);
        assert_eq!(sp_c2.eigen_multiplicity_at_int(-3), 1);
        // triangle: (lambda - 2)(lambda + 1)^2
        let tri = m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(tri.eigen_multiplicity_at_int(-1), 2);
        assert_eq!(tri.eigen_multiplicity_at_int(2), 1);
        assert_eq!(tri.eigen_multiplicity_at_int(5), 0);
    }

    #[test]
    fn cmp_agrees_with_float_when_separated() {
        let mats = [
            m(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]),
            m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]),
            m(&[&[-2, -1], &[-1, -2]]),
        ];
        for mat in &mats {
            let (lo, _) = mat.lambda_extremes_float();
            for r in -4..=4 {
                if (lo - r as f64).abs() < 1e-6 {
                    continue;
                }
                let expect = if lo > r as f64 {
                    LambdaOrder::Greater
                } else {
                    LambdaOrder::Less
                };
                assert_eq!(mat.cmp_lambda_min_int(r), expect);
            }
        }
    }

    #[test]
    fn det_and_rank() {
        assert_eq!(integer_det(&[vec![2, 1], vec![1, 2]]), BigInt::from(3));
        assert_eq!(integer_det(&[]), BigInt::from(1));
        assert_eq!(integer_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(
            integer_det(&[vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]]),
            BigInt::from(4)
        );
    }
}
