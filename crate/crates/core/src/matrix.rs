//! Dense matrices over a [`Ring`], row convention: module elements are rows
//! and a morphism acts by right multiplication.

use std::fmt;

use crate::error::{dim, Error, Result};
use crate::ring::{Elem, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Mat {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Mat {
        Mat { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Mat {
        let mut m = Mat::zero(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Elem>>, cols: usize) -> Result<Mat> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(dim(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend(r.into_iter().map(|e| ring.normalize(e)));
        }
        Ok(Mat { ring: ring.clone(), rows: nrows, cols, data })
    }

    pub fn from_ints(ring: &Ring, rows: &[&[i64]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| ring.from_int(x)).collect()).collect();
        Mat::from_rows(ring, rows, cols).expect("ragged integer matrix")
    }

    /// Parses element literals, one inner vector per row.
    pub fn parse(ring: &Ring, rows: &[Vec<String>], cols: usize) -> Result<Mat> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse_elem(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Mat::from_rows(ring, parsed, cols)
    }

    pub fn to_literals(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|e| self.ring.format_elem(e)).collect()).collect()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: Elem) {
        self.data[i * self.cols + j] = e;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    fn same_ring(&self, other: &Mat) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(dim(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let r = &self.ring;
        let mut out = Mat::zero(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = r.add(&out.data[idx], &r.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Mat, f: impl Fn(&Elem, &Elem) -> Elem) -> Result<Mat> {
        self.same_ring(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(dim(format!("shape {}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Mat { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        self.zip_with(other, |a, b| self.ring.add(a, b))
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        self.zip_with(other, |a, b| self.ring.sub(a, b))
    }

    pub fn neg(&self) -> Mat {
        Mat { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| self.ring.neg(a)).collect() }
    }

    pub fn scale(&self, c: &Elem) -> Mat {
        Mat { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| self.ring.mul(c, a)).collect() }
    }

    /// Vertical concatenation.
    pub fn stack(&self, bottom: &Mat) -> Result<Mat> {
        self.same_ring(bottom)?;
        if self.cols != bottom.cols {
            return Err(dim(format!("cannot stack {} columns on {} columns", self.cols, bottom.cols)));
        }
        let mut data = self.data.clone();
        data.extend(bottom.data.iter().cloned());
        Ok(Mat { ring: self.ring.clone(), rows: self.rows + bottom.rows, cols: self.cols, data })
    }

    /// Horizontal concatenation.
    pub fn augment(&self, right: &Mat) -> Result<Mat> {
        self.same_ring(right)?;
        if self.rows != right.rows {
            return Err(dim(format!("cannot augment {} rows with {} rows", self.rows, right.rows)));
        }
        let cols = self.cols + right.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(right.row(i).iter().cloned());
        }
        Ok(Mat { ring: self.ring.clone(), rows: self.rows, cols, data })
    }

    /// Block diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &Mat) -> Result<Mat> {
        let top = self.augment(&Mat::zero(&self.ring, self.rows, other.cols))?;
        let bottom = Mat::zero(&self.ring, other.rows, self.cols).augment(other)?;
        top.stack(&bottom)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend(self.row(i).iter().cloned());
        }
        Mat { ring: self.ring.clone(), rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            data.extend(idx.iter().map(|&j| self.get(i, j).clone()));
        }
        Mat { ring: self.ring.clone(), rows: self.rows, cols: idx.len(), data }
    }

    pub fn row_range(&self, start: usize, end: usize) -> Mat {
        self.select_rows(&(start..end).collect::<Vec<_>>())
    }

    pub fn col_range(&self, start: usize, end: usize) -> Mat {
        self.select_cols(&(start..end).collect::<Vec<_>>())
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// `(A^θ)_{ba} = θ(A_{ab})`.
    pub fn theta_transpose(&self) -> Mat {
        let mut out = Mat::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.ring.theta(self.get(i, j)));
            }
        }
        out
    }

    /// Kronecker product `(a_ij B)`.
    pub fn kronecker(&self, b: &Mat) -> Result<Mat> {
        self.same_ring(b)?;
        if !self.ring.is_commutative() {
            return Err(Error::Unsupported("Kronecker product over a noncommutative ring".into()));
        }
        let (r, c) = (self.rows * b.rows, self.cols * b.cols);
        let mut out = Mat::zero(&self.ring, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if self.ring.is_zero(a) {
                    continue;
                }
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        out.set(i * b.rows + k, j * b.cols + l, self.ring.mul(a, b.get(k, l)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// The same entries read in another ring (residue class ring and its base).
    pub(crate) fn reinterpret(&self, ring: &Ring) -> Mat {
        let data = self.data.iter().map(|e| ring.normalize(e.clone())).collect();
        Mat { ring: ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += c * row[source]`
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, c: &Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        for j in 0..self.cols {
            let v = self.ring.add(self.get(target, j), &self.ring.mul(c, self.get(source, j)));
            self.set(target, j, v);
        }
    }

    /// `col[target] += col[source] * c`
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, c: &Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        for i in 0..self.rows {
            let v = self.ring.add(self.get(i, target), &self.ring.mul(self.get(i, source), c));
            self.set(i, target, v);
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &Elem) {
        for j in 0..self.cols {
            let v = self.ring.mul(c, self.get(i, j));
            self.set(i, j, v);
        }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat<{}>{}x{}{:?}", self.ring, self.rows, self.cols, self.to_literals())
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lits = self.to_literals();
        write!(f, "[")?;
        for (i, r) in lits.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}
