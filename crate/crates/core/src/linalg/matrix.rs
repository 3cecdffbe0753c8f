use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rings::{Elem, RingSpec, Scalar};

/// A dense matrix over one of the exact rings, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixR {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl MatrixR {
    pub fn new(ring: &RingSpec, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        for e in &data {
            ring.validate(e)?;
        }
        Ok(MatrixR { ring: ring.clone(), rows, cols, data })
    }

    pub fn from_scalars(ring: &RingSpec, rows: usize, cols: usize, entries: &[Scalar]) -> Result<Self> {
        for s in entries {
            if s.ring() != ring {
                return Err(Error::RingMismatch(ring.clone(), s.ring().clone()));
            }
        }
        MatrixR::new(ring, rows, cols, entries.iter().map(|s| s.elem().clone()).collect())
    }

    pub fn zeros(ring: &RingSpec, rows: usize, cols: usize) -> Self {
        MatrixR { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &RingSpec, n: usize) -> Self {
        let mut m = MatrixR::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    pub fn from_fn(ring: &RingSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        MatrixR { ring: ring.clone(), rows, cols, data }
    }

    /// Integer literal rows mapped into `ring`.
    pub fn from_i64(ring: &RingSpec, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix literal");
        MatrixR::from_fn(ring, r, c, |i, j| ring.from_i64(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(ring: &RingSpec, rows: usize, columns: &[Vec<Elem>]) -> Self {
        MatrixR::from_fn(ring, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn ring(&self) -> &RingSpec {
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

    pub fn scalar(&self, i: usize, j: usize) -> Scalar {
        Scalar::new(self.ring.clone(), self.get(i, j).clone()).expect("entries are valid")
    }

    pub fn set(&mut self, i: usize, j: usize, e: Elem) {
        self.data[i * self.cols + j] = e;
    }

    pub fn add_at(&mut self, i: usize, j: usize, e: &Elem) {
        let k = i * self.cols + j;
        self.data[k] = self.ring.add(&self.data[k], e);
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn same_ring(&self, other: &MatrixR) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.clone(), other.ring.clone()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &MatrixR) -> Result<MatrixR> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let r = &self.ring;
        let mut out = MatrixR::zeros(r, self.rows, other.cols);
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
                    let p = r.mul(a, b);
                    out.add_at(i, j, &p);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let r = &self.ring;
        let mut out = vec![r.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if r.is_zero(x) {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, k);
                if !r.is_zero(a) {
                    *o = r.add(o, &r.mul(a, x));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &MatrixR) -> Result<MatrixR> {
        self.same_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("matrix sum of different shapes".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.ring.add(a, b)).collect();
        Ok(MatrixR { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn neg(&self) -> MatrixR {
        let data = self.data.iter().map(|a| self.ring.neg(a)).collect();
        MatrixR { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &MatrixR) -> Result<MatrixR> {
        self.add(&other.neg())
    }

    pub fn transpose(&self) -> MatrixR {
        MatrixR::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Horizontal concatenation; all parts must have `rows` rows.
    pub fn hstack(ring: &RingSpec, rows: usize, parts: &[&MatrixR]) -> Result<MatrixR> {
        let mut cols = 0;
        for p in parts {
            if p.rows != rows {
                return Err(Error::Shape(format!("hstack of {} rows into {rows}", p.rows)));
            }
            if p.ring != *ring {
                return Err(Error::RingMismatch(ring.clone(), p.ring.clone()));
            }
            cols += p.cols;
        }
        let mut out = MatrixR::zeros(ring, rows, cols);
        let mut off = 0;
        for p in parts {
            for i in 0..rows {
                for j in 0..p.cols {
                    out.set(i, off + j, p.get(i, j).clone());
                }
            }
            off += p.cols;
        }
        Ok(out)
    }

    /// Vertical concatenation; all parts must have `cols` columns.
    pub fn vstack(ring: &RingSpec, cols: usize, parts: &[&MatrixR]) -> Result<MatrixR> {
        let refs: Vec<MatrixR> = parts.iter().map(|p| p.transpose()).collect();
        let refs: Vec<&MatrixR> = refs.iter().collect();
        Ok(MatrixR::hstack(ring, cols, &refs)?.transpose())
    }

    /// Block-diagonal sum.
    pub fn block_diag(ring: &RingSpec, parts: &[&MatrixR]) -> MatrixR {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = MatrixR::zeros(ring, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            for i in 0..p.rows {
                for j in 0..p.cols {
                    out.set(r0 + i, c0 + j, p.get(i, j).clone());
                }
            }
            r0 += p.rows;
            c0 += p.cols;
        }
        out
    }

    pub fn select_columns(&self, cols: impl IntoIterator<Item = usize>) -> MatrixR {
        let cols: Vec<usize> = cols.into_iter().collect();
        MatrixR::from_fn(&self.ring, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: impl IntoIterator<Item = usize>) -> MatrixR {
        let rows: Vec<usize> = rows.into_iter().collect();
        MatrixR::from_fn(&self.ring, rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Applies the canonical map from `Z` to an integer matrix.
    pub fn change_ring(&self, target: &RingSpec) -> Result<MatrixR> {
        if self.ring == *target {
            return Ok(self.clone());
        }
        if self.ring != RingSpec::Integers {
            return Err(Error::Unsupported(format!("base change from {} to {target}", self.ring)));
        }
        let data = self
            .data
            .iter()
            .map(|e| match e {
                Elem::Int(n) => target.from_int(n),
                _ => unreachable!(),
            })
            .collect();
        Ok(MatrixR { ring: target.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let r = &self.ring;
        let n = self.rows;
        if n == 0 {
            return Scalar::new(r.clone(), r.one());
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = r.one();
        for k in 0..n - 1 {
            if r.is_zero(m.get(k, k)) {
                match (k + 1..n).find(|&i| !r.is_zero(m.get(i, k))) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign_flip = !sign_flip;
                    }
                    None => return Scalar::new(r.clone(), r.zero()),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = r.sub(&r.mul(m.get(i, j), &pivot), &r.mul(m.get(i, k), m.get(k, j)));
                    let val = r.exact_div(&num, &prev).ok_or_else(|| Error::Defect("inexact Bareiss step".into()))?;
                    m.set(i, j, val);
                }
                m.set(i, k, r.zero());
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        Scalar::new(r.clone(), if sign_flip { r.neg(&d) } else { d })
    }

    // Elementary operations used by the Smith normal form.

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

    /// `row[dst] += c * row[src]`.
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, c: &Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[src * self.cols + j];
            if self.ring.is_zero(s) {
                continue;
            }
            let p = self.ring.mul(c, s);
            let k = dst * self.cols + j;
            self.data[k] = self.ring.add(&self.data[k], &p);
        }
    }

    /// `col[dst] += c * col[src]`.
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, c: &Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + src];
            if self.ring.is_zero(s) {
                continue;
            }
            let p = self.ring.mul(s, c);
            let k = i * self.cols + dst;
            self.data[k] = self.ring.add(&self.data[k], &p);
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &Elem) {
        for j in 0..self.cols {
            let k = i * self.cols + j;
            self.data[k] = self.ring.mul(c, &self.data[k]);
        }
    }

    pub(crate) fn scale_col(&mut self, j: usize, c: &Elem) {
        for i in 0..self.rows {
            let k = i * self.cols + j;
            self.data[k] = self.ring.mul(&self.data[k], c);
        }
    }

    /// Integer entries, when the ring is `Z`.
    pub fn int_entry(&self, i: usize, j: usize) -> Option<&BigInt> {
        match self.get(i, j) {
            Elem::Int(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for MatrixR {
    /// The literal format `R: [[a,b],[c,d]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: [", self.ring)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|e| self.ring.format(e)).collect();
            write!(f, "[{}]", row.join(","))?;
        }
        write!(f, "]")
    }
}
