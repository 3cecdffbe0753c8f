//! Smith normal form with transformation tracking.

use crate::error::{Error, Result};
use crate::rings::{Elem, RingSpec};

use super::matrix::MatrixR;

/// `U * A * V = D` with `U`, `V` invertible and `D` diagonal with
/// `d_1 | d_2 | ... | d_rank`, zeros last. The inverses are kept alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: MatrixR,
    pub u_inv: MatrixR,
    pub d: MatrixR,
    pub v: MatrixR,
    pub v_inv: MatrixR,
    rank: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> &RingSpec {
        self.d.ring()
    }

    /// The nonzero diagonal entries `d_1, ..., d_rank`.
    pub fn diagonal(&self) -> Vec<Elem> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }

    /// Diagonal entries that are neither units nor zero.
    pub fn invariant_factors(&self) -> Vec<Elem> {
        let r = self.ring();
        self.diagonal().into_iter().filter(|e| !r.is_unit(e)).collect()
    }

    /// Columns of `V` spanning the kernel of `A`.
    pub fn kernel_basis(&self) -> MatrixR {
        self.v.select_columns(self.rank..self.v.cols())
    }

    /// Solves `A x = b`, returning one solution if any exists.
    pub fn solve(&self, b: &[Elem]) -> Option<Vec<Elem>> {
        let r = self.ring();
        let ub = self.u.mul_vec(b).ok()?;
        let mut y = vec![r.zero(); self.v.cols()];
        for (i, c) in ub.iter().enumerate() {
            if i < self.rank {
                y[i] = r.exact_div(c, self.d.get(i, i))?;
            } else if !r.is_zero(c) {
                return None;
            }
        }
        self.v.mul_vec(&y).ok()
    }

    /// For `x` in the kernel of `A`, its coordinates against [`Self::kernel_basis`].
    pub fn kernel_coords(&self, x: &[Elem]) -> Result<Vec<Elem>> {
        let full = self.v_inv.mul_vec(x)?;
        let r = self.ring();
        if full[..self.rank].iter().any(|e| !r.is_zero(e)) {
            return Err(Error::Defect("vector is not in the kernel".into()));
        }
        Ok(full[self.rank..].to_vec())
    }
}

struct Work {
    a: MatrixR,
    u: MatrixR,
    u_inv: MatrixR,
    v: MatrixR,
    v_inv: MatrixR,
}

impl Work {
    fn ring(&self) -> RingSpec {
        self.a.ring().clone()
    }

    fn row_add(&mut self, dst: usize, src: usize, c: &Elem) {
        let r = self.ring();
        self.a.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
        self.u_inv.add_col_multiple(src, dst, &r.neg(c));
    }

    fn col_add(&mut self, dst: usize, src: usize, c: &Elem) {
        let r = self.ring();
        self.a.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &r.neg(c));
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn row_scale(&mut self, i: usize, unit: &Elem) {
        let inv = self.ring().inverse(unit).expect("scaling by a unit");
        self.a.scale_row(i, unit);
        self.u.scale_row(i, unit);
        self.u_inv.scale_col(i, &inv);
    }

    /// Smallest-norm nonzero entry in the trailing block, earliest row-major.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let r = self.a.ring();
        let mut best: Option<((usize, usize), num_bigint::BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let e = self.a.get(i, j);
                if r.is_zero(e) {
                    continue;
                }
                let n = r.norm(e);
                if best.as_ref().is_none_or(|(_, bn)| n < *bn) {
                    best = Some(((i, j), n));
                }
            }
        }
        best.map(|(p, _)| p)
    }

    /// Clears row and column `t` except for the pivot.
    fn clear_cross(&mut self, t: usize) {
        let r = self.ring();
        loop {
            let pivot = self.a.get(t, t).clone();
            let mut leftover = false;
            for i in t + 1..self.a.rows() {
                let e = self.a.get(i, t);
                if r.is_zero(e) {
                    continue;
                }
                let (q, rem) = r.divmod(e, &pivot).expect("pivot is nonzero");
                self.row_add(i, t, &r.neg(&q));
                leftover |= !r.is_zero(&rem);
            }
            for j in t + 1..self.a.cols() {
                let e = self.a.get(t, j);
                if r.is_zero(e) {
                    continue;
                }
                let (q, rem) = r.divmod(e, &pivot).expect("pivot is nonzero");
                self.col_add(j, t, &r.neg(&q));
                leftover |= !r.is_zero(&rem);
            }
            if !leftover {
                return;
            }
            // bring the smallest remainder into the pivot position
            let mut best: Option<(bool, usize, num_bigint::BigInt)> = None;
            for i in t + 1..self.a.rows() {
                let e = self.a.get(i, t);
                if !r.is_zero(e) {
                    let n = r.norm(e);
                    if best.as_ref().is_none_or(|b| n < b.2) {
                        best = Some((true, i, n));
                    }
                }
            }
            for j in t + 1..self.a.cols() {
                let e = self.a.get(t, j);
                if !r.is_zero(e) {
                    let n = r.norm(e);
                    if best.as_ref().is_none_or(|b| n < b.2) {
                        best = Some((false, j, n));
                    }
                }
            }
            match best {
                Some((true, i, _)) => self.row_swap(t, i),
                Some((false, j, _)) => self.col_swap(t, j),
                None => return,
            }
        }
    }

    fn first_nondivisible(&self, t: usize) -> Option<usize> {
        let r = self.a.ring();
        let pivot = self.a.get(t, t);
        if r.is_unit(pivot) {
            return None;
        }
        for i in t + 1..self.a.rows() {
            for j in t + 1..self.a.cols() {
                let e = self.a.get(i, j);
                if !r.is_zero(e) && !r.divides(pivot, e) {
                    return Some(i);
                }
            }
        }
        None
    }
}

/// Smith normal form. Pivots are chosen by smallest nonzero norm with the
/// earliest row-major position breaking ties, so the result is deterministic.
pub fn smith_normal_form(a: &MatrixR) -> SmithForm {
    let ring = a.ring().clone();
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        a: a.clone(),
        u: MatrixR::identity(&ring, m),
        u_inv: MatrixR::identity(&ring, m),
        v: MatrixR::identity(&ring, n),
        v_inv: MatrixR::identity(&ring, n),
    };
    let mut rank = 0;
    for t in 0..m.min(n) {
        let Some((pi, pj)) = w.find_pivot(t) else { break };
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        loop {
            w.clear_cross(t);
            match w.first_nondivisible(t) {
                Some(i) => w.row_add(t, i, &ring.one()),
                None => break,
            }
        }
        let unit = ring.unit_normal(w.a.get(t, t));
        if !ring.is_one(&unit) {
            w.row_scale(t, &unit);
        }
        rank = t + 1;
    }
    SmithForm { u: w.u, u_inv: w.u_inv, d: w.a, v: w.v, v_inv: w.v_inv, rank }
}

/// A basis of `{x : A x = 0}`, as columns.
pub fn kernel_basis(a: &MatrixR) -> MatrixR {
    smith_normal_form(a).kernel_basis()
}

/// One solution of `A x = b`, if any.
pub fn solve(a: &MatrixR, b: &[Elem]) -> Option<Vec<Elem>> {
    smith_normal_form(a).solve(b)
}

/// Inverse of a square matrix, if it is invertible over its ring.
pub fn inverse(a: &MatrixR) -> Result<MatrixR> {
    if !a.is_square() {
        return Err(Error::NotInvertible);
    }
    let s = smith_normal_form(a);
    let r = a.ring();
    if s.rank() != a.rows() || s.diagonal().iter().any(|d| !r.is_unit(d)) {
        return Err(Error::NotInvertible);
    }
    // A = U^-1 D V^-1, so A^-1 = V D^-1 U
    let mut dinv = MatrixR::zeros(r, a.rows(), a.rows());
    for (i, d) in s.diagonal().iter().enumerate() {
        dinv.set(i, i, r.inverse(d).unwrap());
    }
    s.v.mul(&dinv)?.mul(&s.u)
}
