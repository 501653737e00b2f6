//! Lower-Hessenberg determinants and the determinant form of
//! `d^k/dx^k [p(x)/q(x)]` at `x = 0`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial_q, rat, neg_one_pow, Rational};

/// Square matrix with `h[i][j] = 0` whenever `j > i + 1`.
///
/// Row `i` (0-based) stores columns `0..=min(i + 1, size - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HessenbergMatrix {
    rows: Vec<Vec<Rational>>,
}

impl HessenbergMatrix {
    /// Builds the matrix from `entry(i, j)` (1-based), queried only on the band.
    pub fn from_fn(size: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Self {
        let rows = (1..=size)
            .map(|i| (1..=(i + 1).min(size)).map(|j| entry(i, j)).collect())
            .collect();
        HessenbergMatrix { rows }
    }

    /// Checks that every entry above the superdiagonal is zero.
    pub fn from_dense(dense: Vec<Vec<Rational>>) -> Result<Self> {
        let size = dense.len();
        for (i, row) in dense.iter().enumerate() {
            if row.len() != size {
                return Err(Error::Domain(format!("row {} has {} entries, expected {size}", i + 1, row.len())));
            }
            if let Some(j) = row.iter().enumerate().skip(i + 2).find(|(_, v)| !v.is_zero()).map(|(j, _)| j) {
                return Err(Error::Domain(format!(
                    "entry ({}, {}) lies above the superdiagonal but is nonzero",
                    i + 1,
                    j + 1
                )));
            }
        }
        let rows = dense
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.truncate((i + 2).min(size));
                row
            })
            .collect();
        Ok(HessenbergMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `h_{i,j}` (1-based), zero above the superdiagonal.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows[i - 1].get(j - 1).cloned().unwrap_or_else(Rational::zero)
    }

    fn at(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i - 1][j - 1]
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let k = self.size();
        (1..=k).map(|i| (1..=k).map(|j| self.get(i, j)).collect()).collect()
    }
}

/// Determinant by fraction-exact Gaussian elimination with row pivoting.
pub fn det_elimination(m: &HessenbergMatrix) -> Rational {
    let mut a = m.to_dense();
    let k = a.len();
    let mut det = Rational::one();
    for col in 0..k {
        let Some(pivot) = (col..k).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..k {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            for c in col..k {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// Determinant via the Hessenberg recursion
/// `H_k = sum_{l=1}^{k} (-1)^{k-l} h_{k,l} (prod_{j=l}^{k-1} h_{j,j+1}) H_{l-1}`, `H_0 = 1`.
pub fn det_recursive(m: &HessenbergMatrix) -> Rational {
    det_recursive_with_stats(m).0
}

/// [`det_recursive`] plus the number of rational multiplications performed.
pub fn det_recursive_with_stats(m: &HessenbergMatrix) -> (Rational, usize) {
    let k = m.size();
    let mut h: Vec<Rational> = Vec::with_capacity(k + 1);
    h.push(Rational::one());
    let mut mults = 0;
    for row in 1..=k {
        let mut acc = Rational::zero();
        // suffix product of superdiagonal entries h_{l,l+1} .. h_{row-1,row}
        let mut suffix = Rational::one();
        for l in (1..=row).rev() {
            if l < row {
                suffix *= m.at(l, l + 1);
                mults += 1;
            }
            let entry = m.at(row, l);
            if entry.is_zero() || suffix.is_zero() {
                continue;
            }
            let term = entry * &suffix * &h[l - 1];
            mults += 2;
            if (row - l) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        h.push(acc);
    }
    (h.pop().unwrap(), mults)
}

/// Derivatives `p(0), p'(0), ...` and `q(0), q'(0), ...` of a ratio `p/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativePair {
    p: Vec<Rational>,
    q: Vec<Rational>,
}

impl DerivativePair {
    pub fn new(p: Vec<Rational>, q: Vec<Rational>) -> Result<Self> {
        match q.first() {
            None => Err(Error::Domain("q needs at least q(0)".into())),
            Some(q0) if q0.is_zero() => Err(Error::DivisionByZero),
            Some(_) => Ok(DerivativePair { p, q }),
        }
    }

    /// Pair from derivative rules `i -> p^(i)(0)`, `i -> q^(i)(0)` for `i <= k`.
    pub fn from_fns(
        k: usize,
        p: impl FnMut(usize) -> Rational,
        q: impl FnMut(usize) -> Rational,
    ) -> Result<Self> {
        Self::new((0..=k).map(p).collect(), (0..=k).map(q).collect())
    }

    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    pub fn q(&self) -> &[Rational] {
        &self.q
    }

    /// Highest derivative order both sequences cover.
    pub fn max_order(&self) -> usize {
        self.p.len().min(self.q.len()) - 1
    }
}

/// The `(k+1) x (k+1)` matrix whose first column is `p^(i)(0)` and whose
/// `(i, j)` entry for `j >= 2` is `C(i, j-2) q^(i-j+2)(0)` (rows counted from 0).
pub fn ratio_derivative_matrix(dp: &DerivativePair, k: usize) -> Result<HessenbergMatrix> {
    if dp.max_order() < k {
        return Err(Error::InsufficientArgs { needed: k + 1, got: dp.max_order() + 1 });
    }
    Ok(HessenbergMatrix::from_fn(k + 1, |row, col| {
        let i = row - 1;
        if col == 1 {
            dp.p[i].clone()
        } else if i + 2 >= col {
            binomial_q(i, col as i64 - 2) * &dp.q[i + 2 - col]
        } else {
            Rational::zero()
        }
    }))
}

/// `d^k/dx^k [p/q]` at 0 as `(-1)^k / q(0)^(k+1)` times the determinant.
pub fn ratio_derivative(dp: &DerivativePair, k: usize) -> Result<Rational> {
    let m = ratio_derivative_matrix(dp, k)?;
    let q0 = &dp.q[0];
    let mut scale = rat(neg_one_pow(k));
    for _ in 0..=k {
        scale /= q0;
    }
    Ok(scale * det_recursive(&m))
}
