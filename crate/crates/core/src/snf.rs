//! Integer matrices and Smith normal form with transform tracking.
//!
//! [`smith_normal_form`] returns `(D, U, V)` with `U * A * V = D`, `U` and
//! `V` unimodular, `D` diagonal with nonnegative entries satisfying the
//! divisibility chain `d_1 | d_2 | ...`. The algorithm is classical pivot
//! reduction: move a minimal nonzero entry to the pivot, clear its row and
//! column by division with remainder, and repair divisibility violations by
//! folding offending rows into the pivot row. Entries are `BigInt`, so
//! intermediate growth is harmless.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMat::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &e) in row.iter().enumerate() {
                m.set(i, j, e.into());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * rhs.at(k, j);
                    out.data[i * rhs.cols + j] += t;
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let swap = (k + 1..n).find(|&i| !m.at(i, k).is_zero());
                match swap {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                    m.set(i, j, t / &prev);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.at(k, k).clone();
        }
        sign * m.at(n - 1, n - 1)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(r1 * self.cols + c, r2 * self.cols + c);
        }
    }

    fn swap_cols(&mut self, c1: usize, c2: usize) {
        if c1 == c2 {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + c1, r * self.cols + c2);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }

    /// row[dst] += f * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, f: &BigInt) {
        assert_ne!(dst, src);
        for c in 0..self.cols {
            let t = self.at(src, c) * f;
            self.data[dst * self.cols + c] += t;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, f: &BigInt) {
        assert_ne!(dst, src);
        for r in 0..self.rows {
            let t = self.at(r, src) * f;
            self.data[r * self.cols + dst] += t;
        }
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub struct SnfResult {
    pub d: IntMat,
    pub u: IntMat,
    pub v: IntMat,
}

pub fn smith_normal_form(a: &IntMat) -> SnfResult {
    let (rows, cols) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    let kmax = rows.min(cols);
    'diag: for k in 0..kmax {
        loop {
            // Minimal nonzero entry of the trailing submatrix becomes the
            // pivot; none left means the matrix is fully diagonalized.
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    let e = d.at(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => e.abs() < d.at(pi, pj).abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break 'diag };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);
            if d.at(k, k).is_negative() {
                d.negate_row(k);
                u.negate_row(k);
            }

            let mut clean = true;
            for i in k + 1..rows {
                if d.at(i, k).is_zero() {
                    continue;
                }
                let q = -(d.at(i, k) / d.at(k, k));
                if !q.is_zero() {
                    d.add_row_multiple(i, k, &q);
                    u.add_row_multiple(i, k, &q);
                }
                if !d.at(i, k).is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if d.at(k, j).is_zero() {
                    continue;
                }
                let q = -(d.at(k, j) / d.at(k, k));
                if !q.is_zero() {
                    d.add_col_multiple(j, k, &q);
                    v.add_col_multiple(j, k, &q);
                }
                if !d.at(k, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // A remainder smaller than the pivot appeared; reselect.
                continue;
            }

            // Pivot divides everything that remains, or gets another pass
            // after folding an offending row into row k.
            let mut divides = true;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(d.at(i, j) % d.at(k, k)).is_zero() {
                        d.add_row_multiple(k, i, &BigInt::one());
                        u.add_row_multiple(k, i, &BigInt::one());
                        divides = false;
                        break 'scan;
                    }
                }
            }
            if divides {
                break;
            }
        }
    }
    SnfResult { d, u, v }
}

/// Nonzero diagonal entries of the Smith form: positive, each dividing the
/// next.
pub fn invariant_factors(a: &IntMat) -> Vec<BigInt> {
    let snf = smith_normal_form(a);
    let kmax = a.rows.min(a.cols);
    (0..kmax)
        .map(|i| snf.d.at(i, i).clone())
        .filter(|e| !e.is_zero())
        .collect()
}

/// gcd of all entries, zero for the zero matrix (test oracle support and
/// occasionally useful on its own).
pub fn entries_gcd(a: &IntMat) -> BigInt {
    let mut g = BigInt::zero();
    for e in &a.data {
        g = g.gcd(e);
    }
    g
}
