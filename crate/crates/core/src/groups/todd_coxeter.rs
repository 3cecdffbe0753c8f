//! Coset enumeration over the trivial subgroup (HLT strategy).

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::presentation::Presentation;
use super::word::{Letter, Word};

const UNDEF: usize = usize::MAX;

/// The regular right action of a finite group on itself, one permutation
/// per generator. Index 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTable {
    order: usize,
    action: Vec<Vec<usize>>,
    inverse_action: Vec<Vec<usize>>,
}

/// Enumeration ran out of room: the group is infinite or the budget too small.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Overflow {
    pub budget: usize,
}

impl fmt::Display for Overflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coset enumeration exceeded {} cosets", self.budget)
    }
}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_gens(&self) -> usize {
        self.action.len()
    }

    /// Image of coset `c` under right multiplication by a letter.
    pub fn act(&self, c: usize, l: Letter) -> usize {
        if l.inv {
            self.inverse_action[l.gen][c]
        } else {
            self.action[l.gen][c]
        }
    }

    pub fn action(&self, gen: usize) -> &[usize] {
        &self.action[gen]
    }

    /// Applies `w` starting from coset `c`.
    pub fn act_word(&self, c: usize, w: &Word) -> usize {
        w.letters().iter().fold(c, |c, &l| self.act(c, l))
    }

    /// The element represented by `w`.
    pub fn evaluate(&self, w: &Word) -> usize {
        self.act_word(0, w)
    }

    /// Checks the table invariants against a presentation.
    pub fn is_consistent_with(&self, p: &Presentation) -> bool {
        if p.num_gens() != self.num_gens() || self.order == 0 {
            return false;
        }
        for g in 0..self.num_gens() {
            let mut seen = vec![false; self.order];
            for c in 0..self.order {
                let d = self.action[g][c];
                if d >= self.order || seen[d] || self.inverse_action[g][d] != c {
                    return false;
                }
                seen[d] = true;
            }
        }
        let relators_trivial = (0..self.order).all(|c| p.relators().iter().all(|r| self.act_word(c, r) == c));
        let mut reached = vec![false; self.order];
        reached[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(c) = queue.pop_front() {
            for g in 0..self.num_gens() {
                for d in [self.action[g][c], self.inverse_action[g][c]] {
                    if !reached[d] {
                        reached[d] = true;
                        queue.push_back(d);
                    }
                }
            }
        }
        relators_trivial && reached.iter().all(|&r| r)
    }
}

struct Enumerator {
    ncols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    queue: VecDeque<usize>,
    budget: usize,
}

fn col(l: Letter) -> usize {
    2 * l.gen + l.inv as usize
}

fn inv_col(c: usize) -> usize {
    c ^ 1
}

impl Enumerator {
    fn rep(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[c] != root {
            let next = self.parent[c];
            self.parent[c] = root;
            c = next;
        }
        root
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize, Overflow> {
        if self.table.len() >= self.budget {
            return Err(Overflow { budget: self.budget });
        }
        let d = self.table.len();
        self.table.push(vec![UNDEF; self.ncols]);
        self.parent.push(d);
        self.table[c][x] = d;
        self.table[d][inv_col(x)] = c;
        Ok(d)
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        self.queue.push_back(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.merge(a, b);
        while let Some(y) = self.queue.pop_front() {
            for x in 0..self.ncols {
                let d = self.table[y][x];
                if d == UNDEF {
                    continue;
                }
                if self.table[d][inv_col(x)] == y {
                    self.table[d][inv_col(x)] = UNDEF;
                }
                let mu = self.rep(y);
                let nu = self.rep(d);
                if self.table[mu][x] != UNDEF {
                    let t = self.table[mu][x];
                    self.merge(nu, t);
                } else if self.table[nu][inv_col(x)] != UNDEF {
                    let t = self.table[nu][inv_col(x)];
                    self.merge(mu, t);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][inv_col(x)] = mu;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<(), Overflow> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len() - 1;
        loop {
            while i <= j && self.table[f][w[i]] != UNDEF {
                f = self.table[f][w[i]];
                i += 1;
                if i > j {
                    break;
                }
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][inv_col(w[j])] != UNDEF {
                b = self.table[b][inv_col(w[j])];
                if j == i {
                    // the word closed up from the right
                    self.coincidence(f, b);
                    return Ok(());
                }
                j -= 1;
            }
            if i == j {
                self.table[f][w[i]] = b;
                self.table[b][inv_col(w[i])] = f;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// Enumerates the cosets of the trivial subgroup, i.e. the elements of the
/// group, allocating at most `max_cosets` cosets.
///
/// The result is standardized by breadth-first search from the identity in
/// generator order, so equal presentations give equal tables.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Result<CayleyTable, Overflow> {
    let budget = max_cosets.max(1);
    let ngens = p.num_gens();
    let ncols = 2 * ngens;
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| r.cyclically_reduce().letters().iter().map(|&l| col(l)).collect())
        .filter(|r: &Vec<usize>| !r.is_empty())
        .collect();
    let mut e = Enumerator { ncols, table: vec![vec![UNDEF; ncols]], parent: vec![0], queue: VecDeque::new(), budget };
    let mut c = 0;
    while c < e.table.len() {
        if e.live(c) {
            for r in &relators {
                if !e.live(c) {
                    break;
                }
                e.scan_and_fill(c, r)?;
            }
            for x in 0..ncols {
                if !e.live(c) {
                    break;
                }
                if e.table[c][x] == UNDEF {
                    e.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    Ok(standardize(&mut e, ngens))
}

fn standardize(e: &mut Enumerator, ngens: usize) -> CayleyTable {
    let start = e.rep(0);
    let mut index = vec![UNDEF; e.table.len()];
    let mut order_list = vec![start];
    index[start] = 0;
    let mut k = 0;
    while k < order_list.len() {
        let c = order_list[k];
        for x in 0..e.ncols {
            let d = e.rep(e.table[c][x]);
            if index[d] == UNDEF {
                index[d] = order_list.len();
                order_list.push(d);
            }
        }
        k += 1;
    }
    let order = order_list.len();
    let mut action = vec![vec![0; order]; ngens];
    let mut inverse_action = vec![vec![0; order]; ngens];
    for (i, &c) in order_list.iter().enumerate() {
        for g in 0..ngens {
            action[g][i] = index[e.rep(e.table[c][2 * g])];
            inverse_action[g][i] = index[e.rep(e.table[c][2 * g + 1])];
        }
    }
    CayleyTable { order, action, inverse_action }
}
