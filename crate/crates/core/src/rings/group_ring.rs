use std::collections::BTreeMap;

use super::{Elem, RingSpec, Scalar};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// An element of `R[G]` for a finite group `G`, stored sparsely by element
/// index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    base: RingSpec,
    order: usize,
    terms: BTreeMap<usize, Elem>,
}

impl GroupRingElement {
    pub fn zero(base: &RingSpec, order: usize) -> Self {
        GroupRingElement { base: base.clone(), order, terms: BTreeMap::new() }
    }

    /// `c * g`.
    pub fn monomial(base: &RingSpec, order: usize, g: usize, c: Elem) -> Result<Self> {
        let mut out = GroupRingElement::zero(base, order);
        out.add_term(g, c)?;
        Ok(out)
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Elem)>>(base: &RingSpec, order: usize, terms: I) -> Result<Self> {
        let mut out = GroupRingElement::zero(base, order);
        for (g, c) in terms {
            out.add_term(g, c)?;
        }
        Ok(out)
    }

    pub fn base(&self) -> &RingSpec {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Elem)> {
        self.terms.iter().map(|(&g, c)| (g, c))
    }

    pub fn coeff(&self, g: usize) -> Elem {
        self.terms.get(&g).cloned().unwrap_or_else(|| self.base.zero())
    }

    pub fn add_term(&mut self, g: usize, c: Elem) -> Result<()> {
        if g >= self.order {
            return Err(Error::Shape(format!("group element {g} out of range for order {}", self.order)));
        }
        self.base.validate(&c)?;
        let sum = match self.terms.get(&g) {
            Some(old) => self.base.add(old, &c),
            None => c,
        };
        if self.base.is_zero(&sum) {
            self.terms.remove(&g);
        } else {
            self.terms.insert(g, sum);
        }
        Ok(())
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.base != other.base {
            return Err(Error::RingMismatch(self.base.clone(), other.base.clone()));
        }
        if self.order != other.order {
            return Err(Error::Shape(format!("group orders {} and {}", self.order, other.order)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.add_term(g, c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(&g, c)| (g, self.base.neg(c))).collect();
        GroupRingElement { base: self.base.clone(), order: self.order, terms }
    }

    /// Convolution product through the multiplication table of `group`.
    pub fn mul(&self, other: &Self, group: &FiniteGroup) -> Result<Self> {
        self.compatible(other)?;
        if group.order() != self.order {
            return Err(Error::Shape(format!("group of order {} for elements of order {}", group.order(), self.order)));
        }
        let mut acc: BTreeMap<usize, Elem> = BTreeMap::new();
        for (g, a) in self.terms() {
            for (h, b) in other.terms() {
                let gh = group.mul(g, h);
                let p = self.base.mul(a, b);
                let e = acc.entry(gh).or_insert_with(|| self.base.zero());
                *e = self.base.add(e, &p);
            }
        }
        acc.retain(|_, c| !self.base.is_zero(c));
        Ok(GroupRingElement { base: self.base.clone(), order: self.order, terms: acc })
    }

    /// Sum of the coefficients.
    pub fn augment(&self) -> Scalar {
        let mut s = self.base.zero();
        for c in self.terms.values() {
            s = self.base.add(&s, c);
        }
        Scalar::new(self.base.clone(), s).expect("sum of valid elements is valid")
    }
}

/// `u * v` in `R[G]`.
pub fn group_ring_mul(u: &GroupRingElement, v: &GroupRingElement, group: &FiniteGroup) -> Result<GroupRingElement> {
    u.mul(v, group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{Presentation, Word};
    use proptest::prelude::*;

    fn cyclic(n: i64) -> FiniteGroup {
        let p = Presentation::new(vec!["a".into()], vec![Word::from_powers(&[(0, n)])]).unwrap();
        FiniteGroup::enumerate(&p, 100).unwrap()
    }

    fn elem(r: &RingSpec, g: &FiniteGroup, coeffs: &[(i64, i64)]) -> GroupRingElement {
        // (power of the generator, coefficient)
        let terms = coeffs.iter().map(|&(k, c)| (g.evaluate(&Word::from_powers(&[(0, k)])), r.from_i64(c)));
        GroupRingElement::from_terms(r, g.order(), terms).unwrap()
    }

    #[test]
    fn characteristic_two_square_vanishes() {
        let f2 = RingSpec::mod_p(2).unwrap();
        let c2 = cyclic(2);
        let u = elem(&f2, &c2, &[(0, 1), (1, 1)]);
        assert!(u.mul(&u, &c2).unwrap().is_zero());
    }

    #[test]
    fn norm_element_absorbs_translation() {
        let z = RingSpec::Integers;
        let c3 = cyclic(3);
        let norm = elem(&z, &c3, &[(0, 1), (1, 1), (2, 1)]);
        let a = elem(&z, &c3, &[(1, 1)]);
        assert_eq!(norm.mul(&a, &c3).unwrap(), norm);
        let e = elem(&z, &c3, &[(0, 1)]);
        assert_eq!(e.mul(&norm, &c3).unwrap(), norm);
    }

    #[test]
    fn augmentation_examples() {
        let z = RingSpec::Integers;
        let c3 = cyclic(3);
        assert_eq!(elem(&z, &c3, &[(0, 1), (1, 1), (2, 1)]).augment(), Scalar::from_i64(&z, 3));
        assert!(GroupRingElement::zero(&z, 3).augment().is_zero());
        assert!(elem(&z, &c3, &[(0, 2), (1, -2)]).augment().is_zero());
    }

    #[test]
    fn out_of_range_index() {
        let z = RingSpec::Integers;
        assert!(GroupRingElement::monomial(&z, 3, 3, z.one()).is_err());
    }

    proptest! {
        #[test]
        fn augmentation_is_multiplicative(
            n in 2i64..7,
            u in prop::collection::vec((0i64..7, -5i64..5), 0..6),
            v in prop::collection::vec((0i64..7, -5i64..5), 0..6),
        ) {
            let z = RingSpec::Integers;
            let g = cyclic(n);
            let (u, v) = (elem(&z, &g, &u), elem(&z, &g, &v));
            let lhs = u.mul(&v, &g).unwrap().augment();
            prop_assert_eq!(lhs, u.augment().mul(&v.augment()).unwrap());
        }
    }
}
