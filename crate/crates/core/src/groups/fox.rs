//! Free differential calculus.

use std::collections::BTreeMap;
use std::fmt;

use super::word::Word;

/// A finite formal sum of free-group words with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FoxTerm {
    terms: BTreeMap<Word, i64>,
}

impl FoxTerm {
    pub fn zero() -> Self {
        FoxTerm::default()
    }

    pub fn word(w: Word) -> Self {
        let mut t = FoxTerm::zero();
        t.add_word(w, 1);
        t
    }

    pub fn add_word(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &FoxTerm) -> FoxTerm {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_word(w.clone(), c);
        }
        out
    }

    pub fn mul(&self, other: &FoxTerm) -> FoxTerm {
        let mut out = FoxTerm::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_word(u.concat(v), a * b);
            }
        }
        out
    }

    /// Sum of the coefficients (image under the augmentation).
    pub fn augment(&self) -> i64 {
        self.terms.values().sum()
    }
}

/// `∂w/∂x_j`: sum over occurrences of `x_j` of the prefix before it, minus
/// the sum over occurrences of `x_j^-1` of the prefix including it.
pub fn fox_derivative(w: &Word, j: usize) -> FoxTerm {
    let mut out = FoxTerm::zero();
    for (k, l) in w.letters().iter().enumerate() {
        if l.gen != j {
            continue;
        }
        if l.inv {
            out.add_word(w.prefix(k + 1), -1);
        } else {
            out.add_word(w.prefix(k), 1);
        }
    }
    out
}

/// The terms of `∂w/∂x_j` as `(prefix length, sign)`, without building words.
pub(crate) fn fox_positions(w: &Word, j: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
    w.letters().iter().enumerate().filter(move |(_, l)| l.gen == j).map(|(k, l)| if l.inv { (k + 1, -1) } else { (k, 1) })
}

impl fmt::Display for FoxTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}*{w:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    use crate::groups::word::Letter;

    fn term(parts: &[(&[(usize, i64)], i64)]) -> FoxTerm {
        let mut t = FoxTerm::zero();
        for (w, c) in parts {
            t.add_word(Word::from_powers(w), *c);
        }
        t
    }

    #[test]
    fn derivative_of_power() {
        let expected = term(&[(&[], 1), (&[(0, 1)], 1), (&[(0, 2)], 1), (&[(0, 3)], 1)]);
        assert_eq!(fox_derivative(&Word::from_powers(&[(0, 4)]), 0), expected);
    }

    #[test]
    fn derivative_of_commutator() {
        let w = Word::from_powers(&[(0, 1), (1, 1), (0, -1), (1, -1)]);
        let expected = term(&[(&[], 1), (&[(0, 1), (1, 1), (0, -1)], -1)]);
        assert_eq!(fox_derivative(&w, 0), expected);
        assert!(fox_derivative(&Word::gen(1), 0).is_zero());
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        prop::collection::vec((0usize..3, any::<bool>()), 0..12)
            .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, i)| Letter::new(g, i))))
    }

    proptest! {
        #[test]
        fn product_rule(u in word_strategy(), v in word_strategy(), j in 0usize..3) {
            let lhs = fox_derivative(&u.concat(&v), j);
            let rhs = fox_derivative(&u, j).add(&FoxTerm::word(u.clone()).mul(&fox_derivative(&v, j)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn fundamental_identity(w in word_strategy()) {
            let mut sum = FoxTerm::zero();
            for j in 0..3 {
                let mut xj_minus_1 = FoxTerm::word(Word::gen(j));
                xj_minus_1.add_word(Word::empty(), -1);
                sum = sum.add(&fox_derivative(&w, j).mul(&xj_minus_1));
            }
            let mut expected = FoxTerm::word(w.clone());
            expected.add_word(Word::empty(), -1);
            prop_assert_eq!(sum, expected);
        }
    }
}
