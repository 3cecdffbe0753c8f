use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::word::Word;
use crate::error::{Error, Result};
use crate::linalg::{MatrixR, ModulePresentation};
use crate::rings::RingSpec;

/// A finite presentation `<gens | relators>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let mut seen = HashSet::new();
        for n in &names {
            if n.is_empty() || n == "1" {
                return Err(Error::InvalidPresentation(format!("bad generator name `{n}`")));
            }
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidPresentation(format!("duplicate generator `{n}`")));
            }
        }
        let p = Presentation { names, relators };
        for r in &p.relators {
            p.check_word(r)?;
        }
        Ok(p)
    }

    /// Presentation with generators `names` and no relators.
    pub fn free<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Self> {
        Presentation::new(names.into_iter().map(Into::into).collect(), Vec::new())
    }

    pub fn trivial() -> Self {
        Presentation { names: Vec::new(), relators: Vec::new() }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_gens(&self) -> usize {
        self.names.len()
    }

    pub fn gen_index(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.max_gen() {
            Some(g) if g >= self.names.len() => Err(Error::UnknownGenerator(format!("#{g}"))),
            _ => Ok(()),
        }
    }

    /// Appends relators (the quotient by their normal closure).
    pub fn quotient(&self, extra: &[Word]) -> Result<Self> {
        for w in extra {
            self.check_word(w)?;
        }
        let mut relators = self.relators.clone();
        relators.extend(extra.iter().cloned());
        Ok(Presentation { names: self.names.clone(), relators })
    }

    /// Appends fresh generators, then relators over the enlarged alphabet.
    pub fn extend(&self, new_names: &[String], extra: &[Word]) -> Result<Self> {
        let mut names = self.names.clone();
        names.extend(new_names.iter().cloned());
        let mut relators = self.relators.clone();
        relators.extend(extra.iter().cloned());
        Presentation::new(names, relators)
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn relation_matrix(&self) -> MatrixR {
        let n = self.num_gens();
        MatrixR::from_fn(&RingSpec::Integers, self.relators.len(), n, |i, j| {
            RingSpec::Integers.from_i64(self.relators[i].exponent_sum(j))
        })
    }

    /// `H_1` of the presented group: the integer cokernel of the
    /// relation matrix, read as generators modulo the row span.
    pub fn abelianization(&self) -> ModulePresentation {
        crate::linalg::cokernel(&self.relation_matrix())
    }

    pub fn display_word<'a>(&'a self, w: &'a Word) -> super::word::WordDisplay<'a> {
        w.display(&self.names)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group {{ gens: {}; rels:", self.names.join(" "))?;
        for r in &self.relators {
            write!(f, " {}", r.display(&self.names))?;
        }
        write!(f, " }}")
    }
}
