//! Exact rational linear algebra: fraction-free elimination, nullspaces, and
//! integer determinants.
//!
//! The primary elimination is fraction-free (Bareiss): rows are cleared to
//! integers and intermediate entries stay integral, which keeps coefficient
//! growth under control when entries like `(lambda+1)^i` appear. A naive
//! rational Gauss-Jordan reduction is kept alongside as an independent route
//! for cross-checking nullspaces; callers that need the cross-check use both.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

/// Outcome of solving `A x = b` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<BigRational>),
    /// Consistent but underdetermined; carries one particular solution (free
    /// variables set to zero) and the nullity.
    Infinite {
        particular: Vec<BigRational>,
        nullity: usize,
    },
    NoSolution,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: alloc::vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols, "dimension mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Clear denominators row by row, returning an integer matrix with the
    /// same row space.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let lcm = self
                    .row(i)
                    .iter()
                    .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                self.row(i)
                    .iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut m = self.integer_rows();
        bareiss_echelon(&mut m).len()
    }

    /// Exact solve by fraction-free elimination: the unique solution, a
    /// certified no-solution, or a particular solution plus nullity.
    pub fn solve(&self, b: &[BigRational]) -> Solution {
        assert_eq!(b.len(), self.rows, "dimension mismatch");
        // Augment, clear denominators, eliminate.
        let aug = {
            let mut rows = Vec::with_capacity(self.rows);
            for i in 0..self.rows {
                let mut row = self.row(i).to_vec();
                row.push(b[i].clone());
                rows.push(row);
            }
            RatMatrix::from_rows(rows)
        };
        let mut m = aug.integer_rows();
        let pivots = bareiss_echelon(&mut m);
        // Inconsistent iff some pivot is in the augmented column.
        if pivots.iter().any(|&(_, c)| c == self.cols) {
            return Solution::NoSolution;
        }
        // Back-substitute exactly over Q, free variables set to zero.
        let mut x = alloc::vec![BigRational::zero(); self.cols];
        for &(r, c) in pivots.iter().rev() {
            let mut acc = BigRational::from(m[r][self.cols].clone());
            for j in c + 1..self.cols {
                if !m[r][j].is_zero() {
                    acc -= BigRational::from(m[r][j].clone()) * &x[j];
                }
            }
            x[c] = acc / BigRational::from(m[r][c].clone());
        }
        debug_assert_eq!(self.mul_vec(&x), b, "solver residual must vanish");
        let nullity = self.cols - pivots.len();
        if nullity == 0 {
            Solution::Unique(x)
        } else {
            Solution::Infinite {
                particular: x,
                nullity,
            }
        }
    }

    /// Exact nullspace basis via fraction-free elimination (one vector per
    /// free column, free coordinate set to one).
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut m = self.integer_rows();
        let pivots = bareiss_echelon(&mut m);
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = alloc::vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for &(r, c) in pivots.iter().rev() {
                let mut acc = BigRational::zero();
                for j in c + 1..self.cols {
                    if !m[r][j].is_zero() {
                        acc -= BigRational::from(m[r][j].clone()) * &v[j];
                    }
                }
                v[c] = acc / BigRational::from(m[r][c].clone());
            }
            debug_assert!(self.mul_vec(&v).iter().all(Zero::is_zero));
            basis.push(v);
        }
        basis
    }

    /// Independent nullspace route: plain rational Gauss-Jordan with eagerly
    /// normalized pivots. Kept deliberately separate from [`Self::nullspace`]
    /// so the two can cross-check each other.
    pub fn nullspace_row_reduction(&self) -> Vec<Vec<BigRational>> {
        let mut m: Vec<Vec<BigRational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, pr);
            let pv = m[r][c].clone();
            for v in &mut m[r] {
                *v /= &pv;
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in 0..self.cols {
                        let sub = &f * &m[r][j];
                        m[i][j] -= sub;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = alloc::vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[i][free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Fraction-free (Bareiss) row echelon reduction in place. Returns the pivot
/// positions `(row, col)` in order.
fn bareiss_echelon(m: &mut [Vec<BigInt>]) -> Vec<(usize, usize)> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        for i in r + 1..m.len() {
            for j in 0..cols {
                if j == c {
                    continue;
                }
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push((r, c));
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

/// Dense matrix of exact integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: alloc::vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size, size);
        for i in 0..size {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination. Panics on
/// non-square input.
pub fn int_determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows, m.cols, "determinant needs a square matrix");
    let size = m.rows;
    if size == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..size)
        .map(|i| m.data[i * size..(i + 1) * size].to_vec())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for c in 0..size {
        let Some(pr) = (c..size).find(|&i| !a[i][c].is_zero()) else {
            return BigInt::zero();
        };
        if pr != c {
            a.swap(c, pr);
            sign = -sign;
        }
        for i in c + 1..size {
            for j in c + 1..size {
                let num = &a[c][c] * &a[i][j] - &a[i][c] * &a[c][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[c][c].clone();
    }
    sign * a[size - 1][size - 1].clone()
}

pub fn is_unimodular(m: &IntMatrix) -> bool {
    int_determinant(m).abs().is_one()
}

/// Do two nullspace bases span the same subspace? Used to compare the
/// fraction-free route against the row-reduction oracle.
pub fn same_span(a: &[Vec<BigRational>], b: &[Vec<BigRational>], dim: usize) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let ma = RatMatrix::from_rows(a.to_vec());
    let mb = RatMatrix::from_rows(b.to_vec());
    assert_eq!(ma.cols(), dim);
    assert_eq!(mb.cols(), dim);
    let rank = ma.rank();
    rank == mb.rank() && ma.vstack(&mb).rank() == rank
}
