//! Dense matrices over GF(2)/GF(3) stored as packed rows.
//!
//! Row reduction works directly on the packed representation: a pivot is
//! normalized with a plane swap (the only nonunit scalar is 2 = −1) and
//! eliminated from other rows with word-parallel subtracts.

use crate::error::{usage, Result};
use crate::field::{Field, FqVector};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FqMatrix {
    field: Field,
    cols: usize,
    rows: Vec<FqVector>,
}

impl FqMatrix {
    pub fn from_rows(rows: Vec<FqVector>) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| usage("matrix needs at least one row"))?;
        let (field, cols) = (first.field(), first.len());
        if rows.iter().any(|r| r.field() != field || r.len() != cols) {
            return Err(usage("rows disagree on field or length"));
        }
        Ok(FqMatrix { field, cols, rows })
    }

    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        FqMatrix { field, cols, rows: vec![FqVector::zero(field, cols); rows] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.rows[i].set(i, 1);
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &FqVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[FqVector] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: u8) {
        self.rows[i].set(j, value);
    }

    pub fn column(&self, j: usize) -> FqVector {
        let mut c = FqVector::zero(self.field, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            c.set(i, r.get(j));
        }
        c
    }

    pub fn transpose(&self) -> FqMatrix {
        let rows = (0..self.cols).map(|j| self.column(j)).collect();
        FqMatrix { field: self.field, cols: self.rows.len(), rows }
    }

    /// Concatenates `[self | right]` side by side.
    pub fn hconcat(&self, right: &FqMatrix) -> Result<FqMatrix> {
        if self.field != right.field || self.rows.len() != right.rows.len() {
            return Err(usage("hconcat needs matching field and row count"));
        }
        let cols = self.cols + right.cols;
        let mut rows = Vec::with_capacity(self.rows.len());
        for (a, b) in self.rows.iter().zip(&right.rows) {
            let mut r = FqVector::zero(self.field, cols);
            for j in 0..self.cols {
                r.set(j, a.get(j));
            }
            for j in 0..right.cols {
                r.set(self.cols + j, b.get(j));
            }
            rows.push(r);
        }
        FqMatrix::from_rows(rows)
    }

    /// Reduced row echelon form; returns the pivot columns. Zero rows sink to
    /// the bottom and stay in the matrix.
    pub fn rref(&self) -> (FqMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 0..self.cols {
            let Some(pivot) = (next..self.rows.len()).find(|&i| self.rows[i].get(col) != 0)
            else {
                continue;
            };
            self.rows.swap(next, pivot);
            let lead = self.rows[next].get(col);
            if lead != 1 {
                self.rows[next] = self.rows[next].scale(self.field.inv(lead).expect("nonzero pivot"));
            }
            for i in 0..self.rows.len() {
                if i != next {
                    let v = self.rows[i].get(col);
                    if v != 0 {
                        let scaled = self.rows[next].scale(v);
                        self.rows[i] = self.rows[i].sub(&scaled).expect("same shape");
                    }
                }
            }
            pivots.push(col);
            next += 1;
            if next == self.rows.len() {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Gram matrix G·Gᵀ.
    pub fn gram(&self) -> FqMatrix {
        let k = self.rows.len();
        let mut g = FqMatrix::zero(self.field, k, k);
        for i in 0..k {
            for j in i..k {
                let d = self.rows[i].dot_unchecked(&self.rows[j]);
                g.set(i, j, d);
                g.set(j, i, d);
            }
        }
        g
    }

    /// Full-rank test for square matrices.
    pub fn is_nonsingular(&self) -> Result<bool> {
        if self.rows.len() != self.cols {
            return Err(usage(format!(
                "nonsingularity needs a square matrix, got {}x{}",
                self.rows.len(),
                self.cols
            )));
        }
        Ok(self.rank() == self.cols)
    }

    /// True when the matrix already is in reduced row echelon form.
    pub fn is_rref(&self) -> bool {
        let (r, _) = self.rref();
        r == *self
    }
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}
