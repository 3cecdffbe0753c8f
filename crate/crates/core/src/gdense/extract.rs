use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::{DenseRingSpec, LiftCase};
use crate::error::{Error, Result};
use crate::linalg::{inverse, smith_normal_form, MatrixR};
use crate::rings::{Elem, GroupRingElement, RingSpec};

/// Basis elements of `F` written as values of `f` on `M ⊗ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extraction {
    pub case: LiftCase,
    /// `lifts[k][i]` in `Z[G]`: the `k`-th basis element is
    /// `f(sum_i lifts[k][i] x_i ⊗ 1)`.
    #[serde(skip)]
    pub lifts: Vec<Vec<GroupRingElement>>,
    /// Unit by which the `k`-th requested element was rescaled.
    #[serde(skip)]
    pub rescale: Vec<Elem>,
    /// The basis elements, recomputed from the lifts.
    #[serde(skip)]
    pub basis: Vec<Vec<GroupRingElement>>,
}

fn check_vector(spec: &DenseRingSpec, v: &[GroupRingElement], len: usize) -> Result<()> {
    if v.len() != len {
        return Err(Error::Shape(format!("vector of length {}, expected {len}", v.len())));
    }
    for e in v {
        if e.base() != spec.coeff() || e.order() != spec.target().order() {
            return Err(Error::Shape("element is not in the target ring".into()));
        }
    }
    Ok(())
}

/// `r * v` entrywise.
fn left_mul(spec: &DenseRingSpec, r: &GroupRingElement, v: &[GroupRingElement]) -> Result<Vec<GroupRingElement>> {
    v.iter().map(|e| r.mul(e, spec.target())).collect()
}

fn monomial(spec: &DenseRingSpec, h: usize) -> GroupRingElement {
    let k = spec.coeff();
    GroupRingElement::monomial(k, spec.target().order(), h, k.one()).expect("element in range")
}

fn blown(spec: &DenseRingSpec, v: &[GroupRingElement]) -> Vec<Elem> {
    let n = spec.target().order();
    let mut out = vec![spec.coeff().zero(); v.len() * n];
    for (i, e) in v.iter().enumerate() {
        for (h, c) in e.terms() {
            out[i * n + h] = c.clone();
        }
    }
    out
}

/// The `k`-linear matrix of `R^cols -> F`, `e_j ↦ vectors[j]`, with columns
/// `(j, h)` holding `h * vectors[j]`.
fn linear_matrix(spec: &DenseRingSpec, vectors: &[Vec<GroupRingElement>], m: usize) -> Result<MatrixR> {
    let n = spec.target().order();
    let mut cols = Vec::with_capacity(vectors.len() * n);
    for v in vectors {
        for h in 0..n {
            cols.push(blown(spec, &left_mul(spec, &monomial(spec, h), v)?));
        }
    }
    Ok(MatrixR::from_columns(spec.coeff(), m * n, &cols))
}

fn check_ring(spec: &DenseRingSpec) -> Result<LiftCase> {
    let case = LiftCase::of(spec.coeff())?;
    if !spec.is_constant() && !spec.coeff().is_field() {
        return Err(Error::Unsupported(format!("group ring over {}, which is not a field", spec.coeff())));
    }
    if !spec.is_onto() {
        return Err(Error::Hypothesis("phi is not onto the group of the ring".into()));
    }
    Ok(case)
}

/// Coefficients `a[k][i]` with `sum_i a[k][i] f(x_i ⊗ 1) = e_k` for the
/// standard basis of `F = R^m`.
pub fn standard_coefficients(
    spec: &DenseRingSpec,
    images: &[Vec<GroupRingElement>],
    m: usize,
) -> Result<Vec<Vec<GroupRingElement>>> {
    check_ring(spec)?;
    for v in images {
        check_vector(spec, v, m)?;
    }
    let n = spec.target().order();
    let k = spec.coeff();
    let s = smith_normal_form(&linear_matrix(spec, images, m)?);
    let mut out = Vec::with_capacity(m);
    for row in 0..m {
        let mut e = vec![k.zero(); m * n];
        e[row * n] = k.one();
        let x = s.solve(&e).ok_or_else(|| Error::NotSurjective(format!("basis vector {row} is not in the image")))?;
        let coeffs = x
            .chunks(n)
            .map(|c| GroupRingElement::from_terms(k, n, c.iter().cloned().enumerate().filter(|(_, c)| !k.is_zero(c))))
            .collect::<Result<_>>()?;
        out.push(coeffs);
    }
    Ok(out)
}

/// Absorbs the coefficients `a[k][i]` of the requested basis elements
/// `b_k = sum_i a[k][i] f(x_i ⊗ 1)` into `Z[G]`, so each (rescaled by a
/// unit) becomes a value of `f` on `M ⊗ 1`.
///
/// `images[i]` is `f(x_i ⊗ 1)` in `F = R^m`. Residues mod `p` are lifted to
/// `0..p`, subrings of `Q` have their denominators cleared, and group
/// elements of the ring are lifted through a section of `phi`. The result is
/// rejected unless the images span `F` and the recomputed elements form a
/// basis.
pub fn extract_basis(
    spec: &DenseRingSpec,
    images: &[Vec<GroupRingElement>],
    coeffs: &[Vec<GroupRingElement>],
    m: usize,
) -> Result<Extraction> {
    let case = check_ring(spec)?;
    for v in images {
        check_vector(spec, v, m)?;
    }
    for a in coeffs {
        check_vector(spec, a, images.len())?;
    }
    let k = spec.coeff();
    let spans = smith_normal_form(&linear_matrix(spec, images, m)?);
    if spans.rank() != m * spec.target().order() || spans.diagonal().iter().any(|d| !k.is_unit(d)) {
        return Err(Error::NotSurjective("the images do not span the free module".into()));
    }
    let sections: Vec<usize> = (0..spec.target().order()).map(|h| spec.section(h)).collect::<Result<_>>()?;
    let z = RingSpec::Integers;
    let mut lifts = Vec::new();
    let mut rescale = Vec::new();
    let mut basis = Vec::new();
    for a in coeffs {
        let n = match case {
            LiftCase::ClearDenominators => {
                a.iter().flat_map(|e| e.terms().map(|(_, c)| denominator(c))).fold(BigInt::one(), |acc, d| acc.lcm(&d))
            }
            _ => BigInt::one(),
        };
        let unit = k.from_int(&n);
        let mut row = Vec::new();
        for e in a {
            let terms = e.terms().map(|(h, c)| (sections[h], Elem::Int(lift(case, c, &n))));
            row.push(GroupRingElement::from_terms(&z, spec.source().order(), terms)?);
        }
        // f(sum_i lift_i x_i ⊗ 1) = sum_i phi(lift_i) f(x_i ⊗ 1)
        let mut b = vec![GroupRingElement::zero(k, spec.target().order()); m];
        for (img, l) in images.iter().zip(&row) {
            for (acc, t) in b.iter_mut().zip(left_mul(spec, &spec.phi(l)?, img)?) {
                *acc = acc.add(&t)?;
            }
        }
        lifts.push(row);
        rescale.push(unit);
        basis.push(b);
    }
    if basis.len() != m {
        return Err(Error::NotInvertible);
    }
    inverse(&linear_matrix(spec, &basis, m)?)?;
    Ok(Extraction { case, lifts, rescale, basis })
}

fn denominator(c: &Elem) -> BigInt {
    match c {
        Elem::Rat(q) => q.denom().clone(),
        _ => BigInt::one(),
    }
}

fn lift(case: LiftCase, c: &Elem, n: &BigInt) -> BigInt {
    match (case, c) {
        (LiftCase::Direct, Elem::Int(x)) => x.clone(),
        (LiftCase::Residue, Elem::Mod(x)) => BigInt::from(*x),
        (LiftCase::ClearDenominators, Elem::Rat(q)) => (q * n).to_integer(),
        _ => unreachable!("coefficient matches its ring"),
    }
}
