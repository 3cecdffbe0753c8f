//! Fixtures and a brute-force group-homology oracle shared by the
//! integration tests and the acceptance harness.
//!
//! The oracle builds groups from explicit multiplication tables and computes
//! homology from the normalized bar complex, reducing boundary matrices over
//! `Z/p^e` by hand. It uses nothing from the library.

#![allow(dead_code)]

use plus_core::groups::{Presentation, Word};
use plus_core::linalg::ModulePresentation;
use plus_core::parse::parse_presentation;
use plus_core::rings::Elem;

/// A finite group as a multiplication table; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct TableGroup {
    pub order: usize,
    mul: Vec<usize>,
    /// Elements matching the generators of the fixture presentation.
    pub gens: Vec<usize>,
}

impl TableGroup {
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn cyclic(n: usize) -> Self {
        TableGroup { order: n, mul: (0..n * n).map(|i| (i / n + i % n) % n).collect(), gens: vec![1 % n] }
    }

    pub fn product(a: &TableGroup, b: &TableGroup) -> Self {
        let n = a.order * b.order;
        let mut mul = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x / b.order, x % b.order);
                let (ya, yb) = (y / b.order, y % b.order);
                mul[x * n + y] = a.mul(xa, ya) * b.order + b.mul(xb, yb);
            }
        }
        let gens = a.gens.iter().map(|&g| g * b.order).chain(b.gens.iter().copied()).collect();
        TableGroup { order: n, mul, gens }
    }

    /// The subgroup of `S_k` generated by the given permutations.
    pub fn permutations(gens: &[Vec<usize>]) -> Self {
        let k = gens[0].len();
        let id: Vec<usize> = (0..k).collect();
        let mut elems = vec![id];
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p: Vec<usize> = (0..k).map(|x| g[elems[i][x]]).collect();
                if !elems.contains(&p) {
                    elems.push(p);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let p: Vec<usize> = (0..k).map(|x| elems[a][elems[b][x]]).collect();
                mul[a * n + b] = elems.iter().position(|e| *e == p).unwrap();
            }
        }
        let gens = gens.iter().map(|g| elems.iter().position(|e| e == g).unwrap()).collect();
        TableGroup { order: n, mul, gens }
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.mul(a, b) == 0).unwrap()
    }

    pub fn eval(&self, w: &Word) -> usize {
        w.letters().iter().fold(0, |acc, l| {
            let g = self.gens[l.gen];
            self.mul(acc, if l.inv { self.inverse(g) } else { g })
        })
    }

    /// The subgroup generated by `gens`, as a membership mask.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    stack.push(y);
                }
            }
        }
        mask
    }

    /// `|N / [G, N]|` for `N` the normal closure of `elems`.
    pub fn relative_abelianization_order(&self, elems: &[usize]) -> usize {
        let all: Vec<usize> = (0..self.order).collect();
        let conj = |x: usize, g: usize| self.mul(self.mul(g, x), self.inverse(g));
        let n_gens: Vec<usize> = elems.iter().flat_map(|&x| all.iter().map(move |&g| (x, g))).map(|(x, g)| conj(x, g)).collect();
        let n = self.subgroup(&n_gens);
        let mut comms = Vec::new();
        for g in 0..self.order {
            for x in (0..self.order).filter(|&x| n[x]) {
                comms.push(self.mul(self.mul(g, x), self.mul(self.inverse(g), self.inverse(x))));
            }
        }
        // [G, N] is normal, so the subgroup it generates is already closed
        let c = self.subgroup(&comms);
        n.iter().filter(|&&b| b).count() / c.iter().filter(|&&b| b).count()
    }
}

/// A group with an oracle table and a presentation for the library.
pub struct Fixture {
    pub name: String,
    pub table: TableGroup,
    pub presentation: Presentation,
}

fn fixture(name: &str, table: TableGroup, src: &str) -> Fixture {
    Fixture { name: name.into(), table, presentation: parse_presentation(src).unwrap() }
}

/// `Z/n` for `2 <= n <= 12`, `(Z/2)^2`, `Z/2 x Z/4`, `S_3`, `A_4`.
pub fn fixtures() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = (2..=12)
        .map(|n| fixture(&format!("Z/{n}"), TableGroup::cyclic(n), &format!("group {{ gens: a; rels: a^{n} }}")))
        .collect();
    let c2 = TableGroup::cyclic(2);
    out.push(fixture("(Z/2)^2", TableGroup::product(&c2, &c2), "group { gens: a b; rels: a^2 b^2 [a,b] }"));
    out.push(fixture("Z/2 x Z/4", TableGroup::product(&c2, &TableGroup::cyclic(4)), "group { gens: a b; rels: a^2 b^4 [a,b] }"));
    out.push(fixture(
        "S_3",
        TableGroup::permutations(&[vec![1, 0, 2], vec![1, 2, 0]]),
        "group { gens: a b; rels: a^2 b^3 (a*b)^2 }",
    ));
    out.push(fixture(
        "A_4",
        TableGroup::permutations(&[vec![1, 0, 3, 2], vec![1, 2, 0, 3]]),
        "group { gens: a b; rels: a^2 b^3 (a*b)^3 }",
    ));
    out
}

pub fn a5_presentation() -> Presentation {
    parse_presentation("group { gens: a b; rels: a^2 b^3 (a*b)^5 }").unwrap()
}

fn prime_factors(mut n: usize) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p as u64, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

fn valuation(mut x: u64, p: u64) -> u32 {
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    let (mut t, mut new_t, mut r, mut new_r) = (0i128, 1i128, m as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "{a} is not a unit mod {m}");
    t.rem_euclid(m as i128) as u64
}

/// Valuations of the local invariant factors of an integer matrix over
/// `Z/p^e`: one entry per nonzero pivot.
fn local_pivots(rows: usize, cols: usize, entries: &[i64], p: u64, e: u32) -> Vec<u32> {
    let m = p.pow(e);
    let mut a: Vec<u64> = entries.iter().map(|&x| x.rem_euclid(m as i64) as u64).collect();
    let mut out = Vec::new();
    let mut live_rows: Vec<usize> = (0..rows).collect();
    let mut live_cols: Vec<usize> = (0..cols).collect();
    loop {
        let mut best: Option<(u32, usize, usize)> = None;
        for &i in &live_rows {
            for &j in &live_cols {
                let x = a[i * cols + j];
                if x != 0 {
                    let v = valuation(x, p);
                    if best.is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v, i, j));
                    }
                }
            }
            if best.is_some_and(|(v, _, _)| v == 0) {
                break;
            }
        }
        let Some((v, pi, pj)) = best else { break };
        let pk = p.pow(v);
        let unit_inv = inverse_mod(a[pi * cols + pj] / pk, m);
        for &i in &live_rows {
            let x = a[i * cols + pj];
            if i == pi || x == 0 {
                continue;
            }
            let f = ((x / pk) as u128 * unit_inv as u128 % m as u128) as u64;
            for &j in &live_cols {
                let sub = (f as u128 * a[pi * cols + j] as u128 % m as u128) as u64;
                a[i * cols + j] = (a[i * cols + j] + m - sub) % m;
            }
        }
        live_rows.retain(|&i| i != pi);
        live_cols.retain(|&j| j != pj);
        out.push(v);
    }
    out
}

/// Normalized bar boundary `d_q : C_q -> C_{q-1}` with trivial coefficients,
/// row-major; tuples of non-identity elements are indexed in base `n - 1`.
fn bar_boundary(g: &TableGroup, q: usize) -> (usize, usize, Vec<i64>) {
    let b = g.order - 1;
    let rows = b.pow(q as u32 - 1);
    let cols = b.pow(q as u32);
    let mut d = vec![0i64; rows * cols];
    let index = |t: &[usize]| t.iter().fold(0, |acc, &x| acc * b + (x - 1));
    for c in 0..cols {
        let mut t = vec![0; q];
        let mut k = c;
        for slot in t.iter_mut().rev() {
            *slot = k % b + 1;
            k /= b;
        }
        let mut face = |f: Vec<usize>, sign: i64| {
            if f.iter().all(|&x| x != 0) {
                d[index(&f) * cols + c] += sign;
            }
        };
        face(t[1..].to_vec(), 1);
        for i in 0..q - 1 {
            let mut f = t[..i].to_vec();
            f.push(g.mul(t[i], t[i + 1]));
            f.extend_from_slice(&t[i + 2..]);
            face(f, if i % 2 == 0 { -1 } else { 1 });
        }
        face(t[..q - 1].to_vec(), if q.is_multiple_of(2) { 1 } else { -1 });
    }
    (rows, cols, d)
}

/// `H_q` as `(free rank, invariant factors)`; for `Z/p` coefficients the
/// factors are empty and the rank is the dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Abelian {
    pub free_rank: usize,
    pub factors: Vec<u64>,
}

/// Oracle homology in degrees `0..=2`, integral when `p` is `None`.
pub fn bar_homology(g: &TableGroup, p: Option<u64>) -> Vec<Abelian> {
    let n = g.order;
    let dims: Vec<usize> = (0..=3).map(|q| (n - 1).pow(q as u32)).collect();
    let primes = prime_factors(n);
    // pivots[q]: per prime, valuations of the local invariant factors of d_q
    let mut pivots: Vec<Vec<(u64, Vec<u32>)>> = vec![Vec::new(); 4];
    let rank_prime = p.map(|p| (p, 1)).or(primes.first().copied()).unwrap_or((2, 1));
    for (q, slot) in pivots.iter_mut().enumerate().skip(1) {
        let (rows, cols, d) = bar_boundary(g, q);
        let mut list: Vec<(u64, u32)> = primes.iter().map(|&(p, e)| (p, e + 1)).collect();
        if !list.iter().any(|&(pp, _)| pp == rank_prime.0) {
            list.push((rank_prime.0, 1));
        }
        for (pp, e) in list {
            slot.push((pp, local_pivots(rows, cols, &d, pp, e)));
        }
    }
    let at = |q: usize, pp: u64| -> &Vec<u32> { &pivots[q].iter().find(|(x, _)| *x == pp).unwrap().1 };
    let rank = |q: usize| -> usize {
        match (q, p) {
            (0, _) => 0,
            (_, Some(pp)) => at(q, pp).iter().filter(|&&v| v == 0).count(),
            (_, None) => at(q, rank_prime.0).len(),
        }
    };
    (0..=2)
        .map(|q| {
            let free_rank = dims[q] - rank(q) - rank(q + 1);
            if p.is_some() {
                return Abelian { free_rank, factors: Vec::new() };
            }
            let mut columns: Vec<Vec<u64>> = Vec::new();
            for &(pp, _) in &primes {
                let mut powers: Vec<u64> = at(q + 1, pp).iter().filter(|&&v| v > 0).map(|&v| pp.pow(v)).collect();
                powers.sort_unstable_by(|a, b| b.cmp(a));
                columns.push(powers);
            }
            let len = columns.iter().map(Vec::len).max().unwrap_or(0);
            let mut factors: Vec<u64> =
                (0..len).map(|k| columns.iter().map(|c| c.get(k).copied().unwrap_or(1)).product()).collect();
            factors.sort_unstable();
            Abelian { free_rank, factors }
        })
        .collect()
}

/// The library's module in the oracle's terms.
pub fn abelian(m: &ModulePresentation) -> Abelian {
    let factors = m
        .factors()
        .iter()
        .map(|e| match e {
            Elem::Int(n) => u64::try_from(n.clone()).unwrap(),
            other => panic!("unexpected torsion coefficient {other:?}"),
        })
        .collect();
    Abelian { free_rank: m.free_rank(), factors }
}

/// Rings exercised by the randomized suites.
pub fn sample_rings() -> Vec<plus_core::rings::RingSpec> {
    use plus_core::rings::RingSpec;
    vec![
        RingSpec::Integers,
        RingSpec::mod_p(5).unwrap(),
        RingSpec::Rationals,
        RingSpec::Gaussian,
        RingSpec::localized([2, 3]).unwrap(),
    ]
}

/// An element built from two small integers: `a`, `a + bi`, `a/b`, or
/// `a / 2^|b mod 3|` depending on the ring.
pub fn sample_elem(ring: &plus_core::rings::RingSpec, a: i64, b: i64) -> Elem {
    use num_bigint::BigInt;
    use plus_core::rings::RingSpec;
    match ring {
        RingSpec::Gaussian => Elem::Gauss(BigInt::from(a), BigInt::from(b)),
        RingSpec::Rationals => {
            let den = b.unsigned_abs().max(1);
            ring.parse_elem(&format!("{a}/{den}")).unwrap()
        }
        RingSpec::Localized(_) => {
            let den = 2u64.pow((b.rem_euclid(3)) as u32);
            ring.parse_elem(&format!("{a}/{den}")).unwrap()
        }
        _ => ring.from_i64(a),
    }
}
