use std::fmt;

use serde::{Deserialize, Serialize};

use super::finite::FiniteGroup;
use super::presentation::Presentation;
use super::word::Word;
use crate::error::{Error, Result};

/// A homomorphism between presented groups, given on generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupHom {
    source: Presentation,
    target: Presentation,
    images: Vec<Word>,
    /// The caller vouches that relators map to the identity (needed when the
    /// target is infinite and cannot be checked).
    certified: bool,
}

impl GroupHom {
    pub fn new(source: Presentation, target: Presentation, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.num_gens() {
            return Err(Error::InvalidHom(format!("{} images for {} generators", images.len(), source.num_gens())));
        }
        for w in &images {
            target.check_word(w)?;
        }
        Ok(GroupHom { source, target, images, certified: false })
    }

    /// The identity of `p`.
    pub fn identity(p: &Presentation) -> Self {
        let images = (0..p.num_gens()).map(Word::gen).collect();
        GroupHom { source: p.clone(), target: p.clone(), images, certified: true }
    }

    /// The map to the trivial group.
    pub fn to_trivial(p: &Presentation) -> Self {
        let images = vec![Word::empty(); p.num_gens()];
        GroupHom { source: p.clone(), target: Presentation::trivial(), images, certified: true }
    }

    /// The quotient map `p -> p / <<extra>>`.
    pub fn quotient(p: &Presentation, extra: &[Word]) -> Result<Self> {
        let target = p.quotient(extra)?;
        let images = (0..p.num_gens()).map(Word::gen).collect();
        Ok(GroupHom { source: p.clone(), target, images, certified: true })
    }

    pub fn with_certificate(mut self) -> Self {
        self.certified = true;
        self
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }

    /// Checks that every source relator maps to the identity of a finite target.
    pub fn validate_with(&self, target: &FiniteGroup) -> Result<()> {
        for (i, r) in self.source.relators().iter().enumerate() {
            if target.evaluate(&self.apply(r)) != 0 {
                return Err(Error::InvalidHom(format!(
                    "relator {} ({}) does not map to the identity",
                    i,
                    self.source.display_word(r)
                )));
            }
        }
        Ok(())
    }

    /// Whether every target generator is hit by some generator image (a
    /// sufficient syntactic test for surjectivity).
    pub fn hits_all_generators(&self) -> bool {
        (0..self.target.num_gens()).all(|j| self.images.iter().any(|w| *w == Word::gen(j)))
    }

    /// Whether the map is onto a finite target, decided by closing the image
    /// of the generators under multiplication.
    pub fn is_surjective_onto(&self, target: &FiniteGroup) -> bool {
        let elems: Vec<usize> = self.images.iter().map(|w| target.evaluate(w)).collect();
        let mut reached = vec![false; target.order()];
        reached[0] = true;
        let mut stack = vec![0usize];
        while let Some(g) = stack.pop() {
            for &e in &elems {
                let h = target.mul(g, e);
                if !reached[h] {
                    reached[h] = true;
                    stack.push(h);
                }
            }
        }
        reached.iter().all(|&r| r)
    }
}

impl fmt::Display for GroupHom {
    /// The `hom { from: ...; to: ...; x -> w; ... }` literal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hom {{ from: {}; to: {}", self.source, self.target)?;
        for (name, w) in self.source.names().iter().zip(&self.images) {
            write!(f, "; {name} -> {}", w.display(self.target.names()))?;
        }
        write!(f, " }}")
    }
}
