//! Exact dense linear algebra over the rationals.
//!
//! Every matrix the toolkit builds (catalecticants, automorphism matrices,
//! obstruction matrices, contraction pairings) lives here. Elimination runs on
//! integer rows obtained by clearing denominators; each elimination step is a
//! cross-multiplication followed by division by the row content, so entries
//! stay primitive and coefficient growth is bounded.
//!
//! Pivoting is deterministic: columns are scanned left to right and within a
//! column the first remaining nonzero row (top to bottom) becomes the pivot.
//! Reduced echelon forms, kernel bases and particular solutions therefore do
//! not depend on anything but the input matrix.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds the rational `num/den`.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `value` as a rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// Nonzero rows of the reduced form, one per pivot.
    pub rows: Vec<Vec<Rational>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                op: "Matrix::new",
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from explicit rows; `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    op: "Matrix::from_rows",
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(cols: usize, rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (c, column) in columns.iter().enumerate() {
            if column.len() != rows {
                return Err(LinalgError::DimensionMismatch {
                    op: "Matrix::from_columns",
                    expected: rows,
                    found: column.len(),
                });
            }
            for (r, v) in column.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "Matrix::mul",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "Matrix::mul_vec",
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Row vector times matrix: `v · self`.
    pub fn vec_mul(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "Matrix::vec_mul",
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.cols];
        for (r, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, slot) in out.iter_mut().enumerate() {
                let b = self.get(r, c);
                if !b.is_zero() {
                    *slot += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Vertical concatenation. All blocks must share the column count `cols`.
    pub fn vstack(cols: usize, blocks: &[Matrix]) -> Result<Matrix, LinalgError> {
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(LinalgError::DimensionMismatch {
                    op: "Matrix::vstack",
                    expected: cols,
                    found: b.cols,
                });
            }
            rows += b.rows;
            entries.extend(b.entries.iter().cloned());
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    /// Horizontal concatenation. All blocks must share the row count `rows`.
    pub fn hstack(rows: usize, blocks: &[Matrix]) -> Result<Matrix, LinalgError> {
        for b in blocks {
            if b.rows != rows {
                return Err(LinalgError::DimensionMismatch {
                    op: "Matrix::hstack",
                    expected: rows,
                    found: b.rows,
                });
            }
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            for r in 0..rows {
                for c in 0..b.cols {
                    out.set(r, offset + c, b.get(r, c).clone());
                }
            }
            offset += b.cols;
        }
        Ok(out)
    }

    /// Copies the block with rows `row0..row0+nrows` and columns
    /// `col0..col0+ncols`.
    pub fn submatrix(&self, row0: usize, nrows: usize, col0: usize, ncols: usize) -> Matrix {
        let mut out = Matrix::zeros(nrows, ncols);
        for r in 0..nrows {
            for c in 0..ncols {
                out.set(r, c, self.get(row0 + r, col0 + c).clone());
            }
        }
        out
    }

    pub fn scale_row(&mut self, row: usize, factor: &Rational) {
        for c in 0..self.cols {
            let idx = row * self.cols + c;
            self.entries[idx] = &self.entries[idx] * factor;
        }
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.integer_rows();
        forward_eliminate(&mut rows, self.cols).len()
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut rows = self.integer_rows();
        let pivots = forward_eliminate(&mut rows, self.cols);
        rows.truncate(pivots.len());
        back_substitute(&mut rows, &pivots);
        let rows = rows
            .into_iter()
            .zip(&pivots)
            .map(|(row, &p)| {
                let lead = row[p].clone();
                row.into_iter()
                    .map(|v| Rational::new(v, lead.clone()))
                    .collect()
            })
            .collect();
        Rref { rows, pivots }
    }

    /// Basis of the right null space. One vector per free column, with a 1
    /// in that column and zeros in the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
                    v[p] = -row[free].clone();
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self · x = b`, or `None` when `b` is outside the column
    /// space. Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "Matrix::solve",
                expected: self.rows,
                found: b.len(),
            });
        }
        let augmented = Matrix::hstack(
            self.rows,
            &[self.clone(), Matrix::from_columns(self.rows, &[b.to_vec()])?],
        )?;
        let rref = augmented.rref();
        if rref.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }

    pub fn column_space_contains(&self, b: &[Rational]) -> Result<bool, LinalgError> {
        Ok(self.solve(b)?.is_some())
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| clear_denominators(self.row(r))).collect()
    }
}

impl fmt::Display for Matrix {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Rank of a list of vectors of common length `len`.
pub fn rank_of_vectors(len: usize, vectors: &[Vec<Rational>]) -> usize {
    let mut rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| clear_denominators(v)).collect();
    forward_eliminate(&mut rows, len).len()
}

/// Scales a rational vector to a primitive integer vector with the same
/// direction.
fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|v| {
            if v.is_zero() {
                BigInt::zero()
            } else {
                v.numer() * (&lcm / v.denom())
            }
        })
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let content = row
        .iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for v in row.iter_mut() {
            if !v.is_zero() {
                *v /= &content;
            }
        }
    }
}

/// `target <- a·target − b·pivot` with `a`, `b` chosen to clear `target[col]`,
/// then divided by the content.
fn eliminate(target: &mut [BigInt], pivot: &[BigInt], col: usize) {
    let g = pivot[col].gcd(&target[col]);
    let mut a = &pivot[col] / &g;
    let mut b = &target[col] / &g;
    if a.is_negative() {
        a = -a;
        b = -b;
    }
    for (t, p) in target.iter_mut().zip(pivot) {
        if p.is_zero() {
            if !t.is_zero() && !a.is_one() {
                *t *= &a;
            }
        } else {
            *t = &*t * &a - &b * p;
        }
    }
    make_primitive(target);
}

/// Row-echelon form in place; returns pivot columns. Rows `0..pivots.len()`
/// hold the echelon rows afterwards.
fn forward_eliminate(rows: &mut [Vec<BigInt>], ncols: usize) -> Vec<usize> {
    let m = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot = &head[r];
        for row in tail.iter_mut() {
            if !row[c].is_zero() {
                eliminate(row, pivot, c);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn back_substitute(rows: &mut [Vec<BigInt>], pivots: &[usize]) {
    for i in (0..pivots.len()).rev() {
        let c = pivots[i];
        let (head, tail) = rows.split_at_mut(i);
        let pivot = &tail[0];
        for row in head.iter_mut() {
            if !row[c].is_zero() {
                eliminate(row, pivot, c);
            }
        }
    }
}
