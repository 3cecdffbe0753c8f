//! `Z[G]`-cellular chains of covers, realized through the regular
//! representation.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groups::{fox_positions, FiniteGroup, Letter, Word};
use crate::linalg::{smith_normal_form, ChainComplexR, MatrixR};
use crate::rings::{Elem, GroupRingElement, RingSpec};

/// A matrix over `Z[G]`, row-major; entry `(i, j)` is the coefficient of
/// `e_i` in the boundary of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElement>,
}

impl GroupMatrix {
    pub fn zeros(order: usize, rows: usize, cols: usize) -> Self {
        GroupMatrix { rows, cols, entries: vec![GroupRingElement::zero(&RingSpec::Integers, order); rows * cols] }
    }

    pub fn from_columns(order: usize, rows: usize, columns: Vec<Vec<GroupRingElement>>) -> Self {
        let cols = columns.len();
        let mut m = GroupMatrix::zeros(order, rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, e) in col.into_iter().enumerate() {
                m.entries[i * cols + j] = e;
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

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<GroupRingElement> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Regular-representation blowup: column `(j, g)` holds `g * column j`,
    /// indexed `j * |G| + g`.
    pub fn blowup(&self, group: &FiniteGroup) -> MatrixR {
        let n = group.order();
        let z = RingSpec::Integers;
        let mut out = MatrixR::zeros(&z, self.rows * n, self.cols * n);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for (h, c) in self.get(i, j).terms() {
                    for g in 0..n {
                        out.add_at(i * n + group.mul(g, h), j * n + g, c);
                    }
                }
            }
        }
        out
    }

    /// Entrywise augmentation, mapped into `ring`.
    pub fn augmented(&self, ring: &RingSpec) -> MatrixR {
        MatrixR::from_fn(ring, self.rows, self.cols, |i, j| match self.get(i, j).augment().into_elem() {
            Elem::Int(n) => ring.from_int(&n),
            _ => unreachable!("integral group ring"),
        })
    }

    /// `self ∘ other` for left-module maps: entry `(i, j)` is
    /// `sum_k other(k, j) * self(i, k)`.
    pub fn compose(&self, other: &GroupMatrix, group: &FiniteGroup) -> Result<GroupMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape("group matrices do not compose".into()));
        }
        let mut out = GroupMatrix::zeros(group.order(), self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = GroupRingElement::zero(&RingSpec::Integers, group.order());
                for k in 0..self.cols {
                    let (b, a) = (other.get(k, j), self.get(i, k));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&b.mul(a, group)?)?;
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    /// Pushes entries along an element map `G -> H`.
    pub fn push_forward(&self, element_map: &[usize], target_order: usize) -> GroupMatrix {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let terms = e.terms().map(|(g, c)| (element_map[g], c.clone()));
                GroupRingElement::from_terms(&RingSpec::Integers, target_order, terms).expect("valid element map")
            })
            .collect();
        GroupMatrix { rows: self.rows, cols: self.cols, entries }
    }
}

/// Converts a `Z[G]`-vector into blown-up integer coordinates.
pub fn to_blown(v: &[GroupRingElement], order: usize) -> Vec<Elem> {
    let mut out = vec![RingSpec::Integers.zero(); v.len() * order];
    for (i, e) in v.iter().enumerate() {
        for (g, c) in e.terms() {
            out[i * order + g] = c.clone();
        }
    }
    out
}

/// Inverse of [`to_blown`].
pub fn from_blown(v: &[Elem], order: usize) -> Vec<GroupRingElement> {
    let z = RingSpec::Integers;
    v.chunks(order)
        .map(|chunk| {
            let terms = chunk.iter().enumerate().filter(|(_, c)| !z.is_zero(c)).map(|(g, c)| (g, c.clone()));
            GroupRingElement::from_terms(&z, order, terms).expect("valid chunk")
        })
        .collect()
}

/// Left translation `g * v` in blown-up coordinates over any ring.
pub fn translate(v: &[Elem], g: usize, group: &FiniteGroup) -> Vec<Elem> {
    let n = group.order();
    let mut out = v.to_vec();
    for (block, chunk) in v.chunks(n).enumerate() {
        for (h, c) in chunk.iter().enumerate() {
            out[block * n + group.mul(g, h)] = c.clone();
        }
    }
    out
}

/// Cellular chains of the `G`-cover of a complex with one 0-cell, as free
/// left `Z[G]`-modules in degrees `0..=3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantChainComplex {
    group: Arc<FiniteGroup>,
    cells: Vec<usize>,
    boundaries: Vec<GroupMatrix>,
}

impl EquivariantChainComplex {
    /// Validates shapes and `d d = 0` on the integer blowup.
    pub fn new(group: Arc<FiniteGroup>, cells: Vec<usize>, boundaries: Vec<GroupMatrix>) -> Result<Self> {
        if cells.is_empty() || boundaries.len() + 1 != cells.len() {
            return Err(Error::MalformedComplex("boundary count does not match degrees".into()));
        }
        for (i, d) in boundaries.iter().enumerate() {
            if d.rows != cells[i] || d.cols != cells[i + 1] {
                return Err(Error::MalformedComplex(format!("d_{} has the wrong shape", i + 1)));
            }
        }
        let e = EquivariantChainComplex { group, cells, boundaries };
        e.integer_complex()?;
        Ok(e)
    }

    /// The cellular chains of a presentation complex (with extra 2-cells),
    /// where generator `j` acts as the element `gen_elements[j]`.
    pub fn from_presentation(group: Arc<FiniteGroup>, num_gens: usize, cells2: &[Word], gen_elements: &[usize]) -> Result<Self> {
        if gen_elements.len() != num_gens {
            return Err(Error::Shape("one element per generator".into()));
        }
        let n = group.order();
        let z = RingSpec::Integers;
        let mut d1 = GroupMatrix::zeros(n, 1, num_gens);
        for (j, &g) in gen_elements.iter().enumerate() {
            d1.entries[j] = GroupRingElement::from_terms(&z, n, [(g, z.one()), (0, z.from_i64(-1))])?;
        }
        let mut d2 = GroupMatrix::zeros(n, num_gens, cells2.len());
        for (r, w) in cells2.iter().enumerate() {
            if w.max_gen().is_some_and(|g| g >= num_gens) {
                return Err(Error::UnknownGenerator(format!("#{}", w.max_gen().unwrap())));
            }
            let prefixes = prefix_elements(&group, w, gen_elements);
            for j in 0..num_gens {
                let mut e = GroupRingElement::zero(&z, n);
                for (k, sign) in fox_positions(w, j) {
                    e.add_term(prefixes[k], z.from_i64(sign))?;
                }
                d2.entries[j * cells2.len() + r] = e;
            }
        }
        EquivariantChainComplex::new(group, vec![1, num_gens, cells2.len()], vec![d1, d2])
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn top(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn boundary(&self, q: usize) -> &GroupMatrix {
        &self.boundaries[q - 1]
    }

    pub fn boundaries(&self) -> &[GroupMatrix] {
        &self.boundaries
    }

    /// The underlying integer complex of the cover.
    pub fn integer_complex(&self) -> Result<ChainComplexR> {
        let n = self.group.order();
        let ranks = self.cells.iter().map(|c| c * n).collect();
        let bs = self.boundaries.iter().map(|d| d.blowup(&self.group)).collect();
        ChainComplexR::new(&RingSpec::Integers, ranks, bs)
    }

    /// Chains with trivial coefficients: `C ⊗_{Z[G]} R`.
    pub fn augmented(&self, ring: &RingSpec) -> Result<ChainComplexR> {
        let bs = self.boundaries.iter().map(|d| d.augmented(ring)).collect();
        ChainComplexR::new(ring, self.cells.clone(), bs)
    }

    /// Chains with `k[G]` coefficients, as a complex of `k`-vector spaces.
    pub fn blown_up(&self, k: &RingSpec) -> Result<ChainComplexR> {
        self.integer_complex()?.change_ring(k)
    }

    /// Keeps degrees `0..=top`.
    pub fn truncate(&self, top: usize) -> EquivariantChainComplex {
        let top = top.min(self.top());
        EquivariantChainComplex {
            group: self.group.clone(),
            cells: self.cells[..=top].to_vec(),
            boundaries: self.boundaries[..top].to_vec(),
        }
    }

    /// Appends a degree with the given boundary columns.
    pub fn attach(&self, columns: Vec<Vec<GroupRingElement>>) -> Result<EquivariantChainComplex> {
        let rows = *self.cells.last().unwrap();
        let d = GroupMatrix::from_columns(self.group.order(), rows, columns);
        let mut cells = self.cells.clone();
        cells.push(d.cols);
        let mut boundaries = self.boundaries.clone();
        boundaries.push(d);
        EquivariantChainComplex::new(self.group.clone(), cells, boundaries)
    }

    /// Extends a complex of top degree 2, exact in degree 1, by 3-cells whose
    /// boundaries generate `ker d_2` over `Z[G]`.
    ///
    /// The integer kernel of the blown-up `d_2` is computed by Smith form;
    /// its basis vectors are taken in order, and each one not already in the
    /// lattice generated so far is added together with all its translates.
    pub fn extend_to_degree3(&self) -> Result<EquivariantChainComplex> {
        if self.top() != 2 {
            return Err(Error::MalformedComplex("extension needs a complex of top degree 2".into()));
        }
        let n = self.group.order();
        let d2 = self.boundaries[1].blowup(&self.group);
        let s = smith_normal_form(&d2);
        let kernel = s.kernel_basis();
        let k = kernel.cols();
        let coords = s.v_inv.select_rows(s.rank()..d2.cols());
        let mut lattice = Lattice::new(k);
        let mut chosen = Vec::new();
        for i in 0..k {
            let mut e = vec![BigInt::zero(); k];
            e[i] = BigInt::one();
            if lattice.contains(&e) {
                continue;
            }
            let v = kernel.column(i);
            for g in 0..n {
                let c = coords.mul_vec(&translate(&v, g, &self.group))?;
                lattice.insert(c.into_iter().map(|x| into_int(&x)).collect());
            }
            chosen.push(from_blown(&v, n));
            if lattice.is_full() {
                break;
            }
        }
        self.attach(chosen)
    }
}

fn into_int(e: &Elem) -> BigInt {
    match e {
        Elem::Int(n) => n.clone(),
        _ => unreachable!("integer matrix"),
    }
}

/// `[e(0), e(w_1), e(w_1 w_2), ...]` for the prefixes of `w`.
pub(crate) fn prefix_elements(group: &FiniteGroup, w: &Word, gen_elements: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut cur = 0;
    out.push(cur);
    for &Letter { gen, inv } in w.letters() {
        let g = gen_elements[gen];
        cur = group.mul(cur, if inv { group.inverse(g) } else { g });
        out.push(cur);
    }
    out
}

/// An integer lattice in `Z^dim` kept in row echelon form.
pub(crate) struct Lattice {
    dim: usize,
    /// `rows[p]` has its leading entry (positive) at column `p`.
    rows: Vec<Option<Vec<BigInt>>>,
}

impl Lattice {
    pub(crate) fn new(dim: usize) -> Self {
        Lattice { dim, rows: vec![None; dim] }
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        for p in 0..self.dim {
            if v[p].is_zero() {
                continue;
            }
            match &self.rows[p] {
                Some(row) => {
                    let q = v[p].div_floor(&row[p]);
                    if !q.is_zero() {
                        for (x, r) in v.iter_mut().zip(row).skip(p) {
                            *x -= &q * r;
                        }
                    }
                    if !v[p].is_zero() {
                        return v;
                    }
                }
                None => return v,
            }
        }
        v
    }

    pub(crate) fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    pub(crate) fn insert(&mut self, v: Vec<BigInt>) {
        let mut v = v;
        for p in 0..self.dim {
            if v[p].is_zero() {
                continue;
            }
            match self.rows[p].take() {
                None => {
                    if v[p].is_negative() {
                        v.iter_mut().for_each(|x| *x = -x.clone());
                    }
                    self.rows[p] = Some(v);
                    return;
                }
                Some(row) => {
                    // replace the row by gcd combination, keep reducing the rest
                    let (a, b) = (row[p].clone(), v[p].clone());
                    let e = a.extended_gcd(&b);
                    let (g, s, t) = (e.gcd, e.x, e.y);
                    let (ag, bg) = (&a / &g, &b / &g);
                    let mut new_row: Vec<BigInt> = row.iter().zip(&v).map(|(r, x)| &s * r + &t * x).collect();
                    let rest: Vec<BigInt> = row.iter().zip(&v).map(|(r, x)| &bg * r - &ag * x).collect();
                    if new_row[p].is_negative() {
                        new_row.iter_mut().for_each(|x| *x = -x.clone());
                    }
                    self.rows[p] = Some(new_row);
                    v = rest;
                }
            }
        }
    }

    /// Rank `dim` with all pivots one, i.e. the whole of `Z^dim`.
    pub(crate) fn is_full(&self) -> bool {
        self.rows.iter().enumerate().all(|(p, r)| r.as_ref().is_some_and(|r| r[p].is_one()))
    }
}
