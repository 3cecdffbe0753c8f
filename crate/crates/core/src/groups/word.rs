use std::fmt;

use serde::{Deserialize, Serialize};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }
}

/// A freely reduced word in the free group on indexed generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: usize) -> Self {
        Word(vec![Letter::new(g, false)])
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// Builds a word from arbitrary letters, freely reducing.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Builds a word from `(generator, exponent)` pairs.
    pub fn from_powers(parts: &[(usize, i64)]) -> Self {
        Word::from_letters(parts.iter().flat_map(|&(g, e)| std::iter::repeat_n(Letter::new(g, e < 0), e.unsigned_abs() as usize)))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        Word::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    /// Largest generator index used, if any.
    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    /// Exponent sum of generator `g`.
    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0.iter().filter(|l| l.gen == g).map(|l| if l.inv { -1 } else { 1 }).sum()
    }

    /// Strips matching letters from both ends.
    pub fn cyclically_reduce(&self) -> Word {
        let mut s = 0;
        let mut e = self.0.len();
        while e > s + 1 && self.0[s] == self.0[e - 1].inverse() {
            s += 1;
            e -= 1;
        }
        Word(self.0[s..e].to_vec())
    }

    /// Canonical representative of the set of cyclic permutations of the
    /// word and its inverse; equal keys mean the 2-cells attached along the
    /// two words coincide up to orientation and basepoint.
    pub fn cyclic_key(&self) -> Word {
        let w = self.cyclically_reduce();
        let n = w.len();
        let mut best = w.clone();
        for base in [w.clone(), w.inverse()] {
            for k in 0..n {
                let rot = Word(base.0[k..].iter().chain(base.0[..k].iter()).copied().collect());
                if rot < best {
                    best = rot;
                }
            }
        }
        best
    }

    /// Rewrites generator indices through `map`.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Word {
        Word::from_letters(self.0.iter().map(|l| Letter::new(map(l.gen), l.inv)))
    }

    /// Substitutes a word for each generator.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Vec::new();
        for l in &self.0 {
            let img = &images[l.gen];
            if l.inv {
                out.extend(img.inverse().0);
            } else {
                out.extend(img.0.iter().copied());
            }
        }
        Word::from_letters(out)
    }

    /// Renders with generator names, using `^n` for runs and `1` for the
    /// empty word.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        if letters.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let name = self.names.get(letters[i].gen).map(String::as_str).unwrap_or("?");
            let n = (j - i) as i64 * if letters[i].inv { -1 } else { 1 };
            if n == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{n}")?;
            }
            i = j;
        }
        Ok(())
    }
}
