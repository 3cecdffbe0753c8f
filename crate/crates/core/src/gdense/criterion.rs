use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use super::DenseRingSpec;
use crate::error::{Error, Result};
use crate::linalg::{inverse, smith_normal_form, MatrixR};
use crate::rings::{gaussian_units, Elem, RingSpec};

/// Outcome of the matrix criterion for one `(A, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum CriterionVerdict {
    /// An integer `k x n` matrix `B` with `phi(B) A_k` invertible.
    Witness {
        #[serde(serialize_with = "as_string")]
        b: MatrixR,
    },
    /// No `B` exists; one case per unit of the ring.
    Refuted { cases: Vec<UnitCase> },
    /// The search up to this entry bound found nothing.
    Unknown { budget: u64 },
}

/// One case of a refutation: `sum_j b_j a_j = unit` over the integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitCase {
    pub unit: String,
    pub solution: Option<Vec<String>>,
}

fn as_string<S: Serializer>(m: &MatrixR, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&m.to_string())
}

impl CriterionVerdict {
    pub fn is_witness(&self) -> bool {
        matches!(self, CriterionVerdict::Witness { .. })
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, CriterionVerdict::Refuted { .. })
    }
}

/// `phi(B) A_k`, with `B` an integer matrix and `A_k` the first `k` columns.
fn product(b: &MatrixR, a: &MatrixR, k: usize) -> Result<MatrixR> {
    b.change_ring(a.ring())?.mul(&a.select_columns(0..k))
}

fn is_witness(b: &MatrixR, a: &MatrixR, k: usize) -> Result<bool> {
    let p = product(b, a, k)?;
    Ok(a.ring().is_unit(p.det()?.elem()))
}

fn witness(b: MatrixR, a: &MatrixR, k: usize) -> Result<CriterionVerdict> {
    if !is_witness(&b, a, k)? {
        return Err(Error::Defect("witness does not verify".into()));
    }
    Ok(CriterionVerdict::Witness { b })
}

/// `0, 1, -1, 2, -2, ...`
fn entry(t: usize) -> i64 {
    let m = t.div_ceil(2) as i64;
    if t % 2 == 1 {
        m
    } else {
        -m
    }
}

/// Searches for an integer `B` (with trivial action only integer entries
/// matter) by increasing max-norm up to `budget`, lexicographically within a
/// shell under the entry order `0, 1, -1, 2, -2, ...`.
///
/// Over `Z[i]` with `k = 1` the answer is decided by [`gaussian_refuter`].
/// Over the other rings a witness always exists: when the search misses,
/// the rows of `A^-1` are lifted instead. Only `Z[i]` with `k > 1` can end
/// `Unknown`.
pub fn matrix_criterion(a: &MatrixR, k: usize, spec: &DenseRingSpec, budget: u64) -> Result<CriterionVerdict> {
    if spec.coeff() != a.ring() {
        return Err(Error::RingMismatch(spec.coeff().clone(), a.ring().clone()));
    }
    if !spec.is_constant() {
        return Err(Error::Unsupported("the matrix criterion is implemented for trivial-action rings".into()));
    }
    let n = a.rows();
    if !a.is_square() || k == 0 || k > n {
        return Err(Error::Shape(format!("need a square matrix and 1 <= k <= n, got {}x{} and k = {k}", a.rows(), a.cols())));
    }
    inverse(a)?;
    if *a.ring() == RingSpec::Gaussian && k == 1 {
        return gaussian_refuter(a);
    }
    let z = RingSpec::Integers;
    let len = k * n;
    for shell in 0..=budget as usize {
        let top = 2 * shell;
        let mut idx = vec![0usize; len];
        loop {
            if idx.iter().any(|&t| t + 1 >= top) || shell == 0 {
                let data: Vec<Elem> = idx.iter().map(|&t| z.from_i64(entry(t))).collect();
                let b = MatrixR::new(&z, k, n, data)?;
                if is_witness(&b, a, k)? {
                    return witness(b, a, k);
                }
            }
            // odometer, last entry fastest
            let Some(pos) = (0..len).rev().find(|&p| idx[p] < top) else { break };
            idx[pos] += 1;
            idx[pos + 1..].iter_mut().for_each(|t| *t = 0);
        }
    }
    if *a.ring() == RingSpec::Gaussian {
        return Ok(CriterionVerdict::Unknown { budget });
    }
    witness(inverse_rows(a, k)?, a, k)
}

/// The first `k` rows of `A^-1` as integers, each scaled by the unit that
/// clears its denominators, so `B A_k` is diagonal with unit entries.
fn inverse_rows(a: &MatrixR, k: usize) -> Result<MatrixR> {
    let inv = inverse(a)?;
    let z = RingSpec::Integers;
    let n = a.rows();
    let mut data = Vec::with_capacity(k * n);
    for i in 0..k {
        let row = inv.row(i);
        let den = row.iter().fold(BigInt::one(), |acc, e| match e {
            Elem::Rat(q) => num_integer::Integer::lcm(&acc, q.denom()),
            _ => acc,
        });
        data.extend(row.iter().map(|e| match e {
            Elem::Int(x) => Elem::Int(x.clone()),
            Elem::Mod(x) => Elem::Int(BigInt::from(*x)),
            Elem::Rat(q) => Elem::Int((q * &den).to_integer()),
            Elem::Gauss(..) => unreachable!("handled by the refuter"),
        }));
    }
    MatrixR::new(&z, k, n, data)
}

/// Decides whether some integer row `b` makes `sum_j b_j a_{j1}` a unit of
/// `Z[i]`, by solving one integer system per unit.
pub fn gaussian_refuter(a: &MatrixR) -> Result<CriterionVerdict> {
    let g = RingSpec::Gaussian;
    if *a.ring() != g {
        return Err(Error::RingMismatch(g, a.ring().clone()));
    }
    let units = gaussian_units();
    // every unit has norm 1, which bounds both parts by 1
    let mut scanned = Vec::new();
    for x in -1i64..=1 {
        for y in -1i64..=1 {
            let e = Elem::Gauss(x.into(), y.into());
            if g.norm(&e).is_one() {
                scanned.push(e);
            }
        }
    }
    assert!(scanned.len() == units.len() && scanned.iter().all(|u| units.contains(u)));

    let n = a.rows();
    let z = RingSpec::Integers;
    let parts: Vec<(BigInt, BigInt)> = (0..n)
        .map(|j| match a.get(j, 0) {
            Elem::Gauss(x, y) => (x.clone(), y.clone()),
            _ => unreachable!("Gaussian matrix"),
        })
        .collect();
    let m = MatrixR::from_fn(&z, 2, n, |i, j| Elem::Int(if i == 0 { parts[j].0.clone() } else { parts[j].1.clone() }));
    let s = smith_normal_form(&m);
    let mut cases = Vec::new();
    for u in &units {
        let Elem::Gauss(re, im) = u else { unreachable!() };
        let sol = s.solve(&[Elem::Int(re.clone()), Elem::Int(im.clone())]);
        if let Some(b) = &sol {
            let row = MatrixR::new(&z, 1, n, b.clone())?;
            return witness(row, a, 1);
        }
        cases.push(UnitCase { unit: g.format(u), solution: None });
    }
    Ok(CriterionVerdict::Refuted { cases })
}
