use std::collections::VecDeque;

use super::presentation::Presentation;
use super::todd_coxeter::{todd_coxeter, CayleyTable, Overflow};
use super::word::{Letter, Word};

/// A finite group with its multiplication table, derived from a Cayley table.
///
/// Element `i` is the coset reached from the identity by its representative
/// word, so `mul(g, h)` is the image of `g` under the representative of `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: CayleyTable,
    mul: Vec<u32>,
    inv: Vec<usize>,
    reps: Vec<Word>,
}

impl FiniteGroup {
    pub fn from_table(table: CayleyTable) -> Self {
        let n = table.order();
        let mut reps: Vec<Option<Word>> = vec![None; n];
        reps[0] = Some(Word::empty());
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for g in 0..table.num_gens() {
                for inv in [false, true] {
                    let l = Letter::new(g, inv);
                    let d = table.act(c, l);
                    if reps[d].is_none() {
                        reps[d] = Some(reps[c].as_ref().unwrap().concat(&Word::letter(l)));
                        queue.push_back(d);
                    }
                }
            }
        }
        let reps: Vec<Word> = reps.into_iter().map(|w| w.expect("table is transitive")).collect();
        let mut mul = vec![0u32; n * n];
        for (h, rep) in reps.iter().enumerate() {
            for g in 0..n {
                mul[g * n + h] = table.act_word(g, rep) as u32;
            }
        }
        let mut inv = vec![0; n];
        for g in 0..n {
            for h in 0..n {
                if mul[g * n + h] == 0 {
                    inv[g] = h;
                    break;
                }
            }
        }
        FiniteGroup { table, mul, inv, reps }
    }

    pub fn enumerate(p: &Presentation, max_cosets: usize) -> Result<Self, Overflow> {
        todd_coxeter(p, max_cosets).map(FiniteGroup::from_table)
    }

    /// The trivial group (on zero generators).
    pub fn trivial() -> Self {
        FiniteGroup::enumerate(&Presentation::trivial(), 1).expect("trivial group enumerates")
    }

    pub fn order(&self) -> usize {
        self.inv.len()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.order() + h] as usize
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// Representative word of element `g` over the table's generators.
    pub fn rep(&self, g: usize) -> &Word {
        &self.reps[g]
    }

    pub fn evaluate(&self, w: &Word) -> usize {
        self.table.evaluate(w)
    }

    /// Element of each generator.
    pub fn generator(&self, j: usize) -> usize {
        self.table.action(j)[0]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|g| (0..n).all(|h| self.mul(g, h) == self.mul(h, g)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_matches_words() {
        let rel = [(0, 1), (1, 1)].repeat(2);
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![Word::from_powers(&[(0, 2)]), Word::from_powers(&[(1, 3)]), Word::from_powers(&rel)],
        )
        .unwrap();
        let g = FiniteGroup::enumerate(&p, 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        for x in 0..6 {
            assert_eq!(g.evaluate(g.rep(x)), x);
            assert_eq!(g.mul(x, g.inverse(x)), 0);
            for y in 0..6 {
                assert_eq!(g.mul(x, y), g.evaluate(&g.rep(x).concat(g.rep(y))));
            }
        }
    }
}
