use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{Elem, RingSpec};

use super::matrix::MatrixR;
use super::snf::smith_normal_form;

/// A finitely generated module `R^free_rank + R/(d_1) + ... + R/(d_k)` with
/// `d_1 | ... | d_k` normalized, non-zero, non-unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModulePresentation {
    ring: RingSpec,
    free_rank: usize,
    factors: Vec<Elem>,
}

impl ModulePresentation {
    /// Builds a module from arbitrary diagonal relations: units are dropped,
    /// zeros become free summands, the rest is normalized into a divisibility
    /// chain.
    pub fn from_diagonal(ring: &RingSpec, free_rank: usize, diag: &[Elem]) -> Self {
        let mut free = free_rank;
        let mut nonzero = Vec::new();
        for d in diag {
            if ring.is_zero(d) {
                free += 1;
            } else if !ring.is_unit(d) {
                nonzero.push(d.clone());
            }
        }
        // a diagonal matrix's Smith form gives the divisibility chain
        let n = nonzero.len();
        let m = MatrixR::from_fn(ring, n, n, |i, j| if i == j { nonzero[i].clone() } else { ring.zero() });
        let factors = smith_normal_form(&m).invariant_factors();
        ModulePresentation { ring: ring.clone(), free_rank: free, factors }
    }

    pub fn zero(ring: &RingSpec) -> Self {
        ModulePresentation { ring: ring.clone(), free_rank: 0, factors: Vec::new() }
    }

    pub fn free(ring: &RingSpec, rank: usize) -> Self {
        ModulePresentation { ring: ring.clone(), free_rank: rank, factors: Vec::new() }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn factors(&self) -> &[Elem] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of generators in the canonical decomposition.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.factors.len()
    }

    /// Dimension over the prime field when the ring is a field; the order of
    /// the torsion part is not meaningful there.
    pub fn torsion_order(&self) -> Option<num_bigint::BigInt> {
        if self.ring != RingSpec::Integers {
            return None;
        }
        let mut n = num_bigint::BigInt::from(1);
        for f in &self.factors {
            if let Elem::Int(d) = f {
                n *= d;
            }
        }
        Some(n)
    }

    /// Parses the display form, e.g. `Z^2 + Z/2`, `(Z/5)^2`, `0`.
    pub fn parse(ring: &RingSpec, s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "0" {
            return Ok(ModulePresentation::zero(ring));
        }
        let name = ring.to_string();
        let bad = || Error::InvalidElement { ring: ring.clone(), msg: format!("bad module `{s}`") };
        let mut free = 0usize;
        let mut diag = Vec::new();
        for term in split_top_level(&t) {
            // optional exponent outside parentheses
            let (body, count) = match term.rfind(")^") {
                Some(k) if term.starts_with('(') => {
                    let count: usize = term[k + 2..].parse().map_err(|_| bad())?;
                    (&term[1..k], count)
                }
                _ => (term, 1),
            };
            if body == name {
                free += count;
                continue;
            }
            if let Some(exp) = body.strip_prefix(&name).and_then(|r| r.strip_prefix('^')) {
                free += count * exp.parse::<usize>().map_err(|_| bad())?;
                continue;
            }
            let d = body.strip_prefix(&name).and_then(|r| r.strip_prefix('/')).ok_or_else(bad)?;
            let d = d.strip_prefix('(').and_then(|d| d.strip_suffix(')')).unwrap_or(d);
            let e = ring.parse_elem(d)?;
            for _ in 0..count {
                diag.push(e.clone());
            }
        }
        Ok(ModulePresentation::from_diagonal(ring, free, &diag))
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let name = self.ring.to_string();
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(name.clone()),
            r if name.contains('/') => parts.push(format!("({name})^{r}")),
            r => parts.push(format!("{name}^{r}")),
        }
        for d in &self.factors {
            let lit = self.ring.format(d);
            if lit.contains(['+', '-', '/']) || lit.ends_with('i') {
                parts.push(format!("{name}/({lit})"));
            } else {
                parts.push(format!("{name}/{lit}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for ModulePresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ModulePresentation", 2)?;
        st.serialize_field("ring", &self.ring)?;
        st.serialize_field("module", &self.to_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ModulePresentation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            ring: RingSpec,
            module: String,
        }
        let raw = Raw::deserialize(d)?;
        ModulePresentation::parse(&raw.ring, &raw.module).map_err(serde::de::Error::custom)
    }
}

/// `R^cols / rowspace(A)`; with a relator-by-generator matrix this is the
/// presented module.
pub fn cokernel(a: &MatrixR) -> ModulePresentation {
    let s = smith_normal_form(a);
    ModulePresentation::from_diagonal(a.ring(), a.cols() - s.rank(), &s.diagonal())
}

/// Equal free ranks and identical invariant-factor chains.
pub fn module_iso_test(m1: &ModulePresentation, m2: &ModulePresentation) -> Result<bool> {
    if m1.ring != m2.ring {
        return Err(Error::RingMismatch(m1.ring.clone(), m2.ring.clone()));
    }
    Ok(m1.free_rank == m2.free_rank && m1.factors == m2.factors)
}
