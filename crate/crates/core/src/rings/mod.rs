//! Exact coefficient rings.
//!
//! Every ring here is Euclidean: the integers, the rationals, prime fields,
//! localizations `Z[1/S]` at finitely many primes, and the Gaussian integers.
//! A [`RingSpec`] is the ring object; [`Elem`] is an untagged payload whose
//! meaning depends on the ring it is used with; [`Scalar`] pairs the two.

mod group_ring;

pub use group_ring::{group_ring_mul, GroupRingElement};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    Rationals,
    ModP(u64),
    /// `Z[1/S]`; primes are sorted and distinct.
    Localized(Arc<[u64]>),
    Gaussian,
}

/// Ring element payload.
///
/// `Z` uses `Int`, `Q` and `Z[1/S]` use `Rat`, `Z/p` uses `Mod`, `Z[i]` uses
/// `Gauss(re, im)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
    Gauss(BigInt, BigInt),
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Splits `n` into `(rest, s_part)` with `n = rest * s_part`, `s_part` a
/// positive product of primes from `primes`, and `rest` free of them.
fn strip_primes(n: &BigInt, primes: &[u64]) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut s_part = BigInt::one();
    if rest.is_zero() {
        return (rest, s_part);
    }
    for &p in primes {
        let p = BigInt::from(p);
        loop {
            let (q, r) = rest.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            rest = q;
            s_part *= &p;
        }
    }
    (rest, s_part)
}

/// Rounds `num / den` (with `den > 0`) to the nearest integer, ties toward zero.
fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    let twice = r.abs() * 2;
    if twice > *den {
        if num.is_negative() {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

impl RingSpec {
    pub fn mod_p(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if p >= 1 << 32 {
            return Err(Error::InvalidRing(format!("modulus {p} exceeds 2^32")));
        }
        Ok(RingSpec::ModP(p))
    }

    /// `Z[1/S]` for the prime divisors of the given integers.
    pub fn localized<I: IntoIterator<Item = u64>>(inverted: I) -> Result<Self> {
        let mut primes = Vec::new();
        for mut n in inverted {
            if n < 2 {
                return Err(Error::InvalidRing(format!("cannot invert {n}")));
            }
            let mut d = 2;
            while d * d <= n {
                while n % d == 0 {
                    primes.push(d);
                    n /= d;
                }
                d += 1;
            }
            if n > 1 {
                primes.push(n);
            }
        }
        primes.sort_unstable();
        primes.dedup();
        if primes.is_empty() {
            return Err(Error::InvalidRing("empty set of inverted primes".into()));
        }
        Ok(RingSpec::Localized(primes.into()))
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingSpec::Rationals | RingSpec::ModP(_))
    }

    /// Characteristic-zero subrings of `Q`: `Z`, `Q`, `Z[1/S]`.
    pub fn is_rational_subring(&self) -> bool {
        matches!(self, RingSpec::Integers | RingSpec::Rationals | RingSpec::Localized(_))
    }

    pub fn zero(&self) -> Elem {
        self.from_int(&BigInt::zero())
    }

    pub fn one(&self) -> Elem {
        self.from_int(&BigInt::one())
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_int(&BigInt::from(n))
    }

    /// Image of an integer under the unique ring map `Z -> R`.
    pub fn from_int(&self, n: &BigInt) -> Elem {
        match self {
            RingSpec::Integers => Elem::Int(n.clone()),
            RingSpec::Rationals | RingSpec::Localized(_) => Elem::Rat(BigRational::from_integer(n.clone())),
            RingSpec::ModP(p) => {
                let p = BigInt::from(*p);
                Elem::Mod(n.mod_floor(&p).to_u64().unwrap())
            }
            RingSpec::Gaussian => Elem::Gauss(n.clone(), BigInt::zero()),
        }
    }

    /// Checks the payload invariants for this ring.
    pub fn validate(&self, e: &Elem) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidElement { ring: self.clone(), msg: msg.into() });
        match (self, e) {
            (RingSpec::Integers, Elem::Int(_)) => Ok(()),
            (RingSpec::Rationals, Elem::Rat(_)) => Ok(()),
            (RingSpec::Localized(ps), Elem::Rat(q)) => {
                let (rest, _) = strip_primes(q.denom(), ps);
                if rest.is_one() {
                    Ok(())
                } else {
                    bad("denominator has primes outside S")
                }
            }
            (RingSpec::ModP(p), Elem::Mod(r)) => {
                if r < p {
                    Ok(())
                } else {
                    bad("residue out of range")
                }
            }
            (RingSpec::Gaussian, Elem::Gauss(..)) => Ok(()),
            _ => bad("payload kind does not match ring"),
        }
    }

    pub fn is_zero(&self, e: &Elem) -> bool {
        match e {
            Elem::Int(n) => n.is_zero(),
            Elem::Rat(q) => q.is_zero(),
            Elem::Mod(r) => *r == 0,
            Elem::Gauss(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    pub fn is_one(&self, e: &Elem) -> bool {
        *e == self.one()
    }

    fn mismatch(&self, a: &Elem, b: &Elem) -> ! {
        panic!("payload mismatch in {self}: {a:?} / {b:?}")
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => Elem::Int(x + y),
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            (Elem::Mod(x), Elem::Mod(y)) => {
                let p = self.modulus();
                Elem::Mod(((*x as u128 + *y as u128) % p as u128) as u64)
            }
            (Elem::Gauss(a, b), Elem::Gauss(c, d)) => Elem::Gauss(a + c, b + d),
            _ => self.mismatch(a, b),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match a {
            Elem::Int(x) => Elem::Int(-x),
            Elem::Rat(x) => Elem::Rat(-x),
            Elem::Mod(x) => {
                let p = self.modulus();
                Elem::Mod(if *x == 0 { 0 } else { p - x })
            }
            Elem::Gauss(a, b) => Elem::Gauss(-a, -b),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => Elem::Int(x - y),
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x - y),
            (Elem::Gauss(a, b), Elem::Gauss(c, d)) => Elem::Gauss(a - c, b - d),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => Elem::Int(x * y),
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            (Elem::Mod(x), Elem::Mod(y)) => {
                let p = self.modulus();
                Elem::Mod(((*x as u128 * *y as u128) % p as u128) as u64)
            }
            (Elem::Gauss(a, b), Elem::Gauss(c, d)) => Elem::Gauss(a * c - b * d, a * d + b * c),
            _ => self.mismatch(a, b),
        }
    }

    fn modulus(&self) -> u64 {
        match self {
            RingSpec::ModP(p) => *p,
            _ => panic!("{self} has no modulus"),
        }
    }

    /// Euclidean norm: `|n|` on `Z`, `a^2 + b^2` on `Z[i]`, the S-free part of
    /// the numerator on `Z[1/S]`, and 0/1 on fields.
    pub fn norm(&self, e: &Elem) -> BigInt {
        if self.is_zero(e) {
            return BigInt::zero();
        }
        match (self, e) {
            (RingSpec::Integers, Elem::Int(n)) => n.abs(),
            (RingSpec::Gaussian, Elem::Gauss(a, b)) => a * a + b * b,
            (RingSpec::Localized(ps), Elem::Rat(q)) => strip_primes(q.numer(), ps).0.abs(),
            _ => BigInt::one(),
        }
    }

    pub fn inverse(&self, e: &Elem) -> Option<Elem> {
        if self.is_zero(e) {
            return None;
        }
        match (self, e) {
            (RingSpec::Integers, Elem::Int(n)) => {
                if n.abs().is_one() {
                    Some(e.clone())
                } else {
                    None
                }
            }
            (RingSpec::Rationals, Elem::Rat(q)) => Some(Elem::Rat(q.recip())),
            (RingSpec::Localized(ps), Elem::Rat(q)) => {
                let (rest, _) = strip_primes(q.numer(), ps);
                if rest.abs().is_one() {
                    Some(Elem::Rat(q.recip()))
                } else {
                    None
                }
            }
            (RingSpec::ModP(p), Elem::Mod(r)) => Some(Elem::Mod(pow_mod(*r, p - 2, *p))),
            (RingSpec::Gaussian, Elem::Gauss(a, b)) => {
                // units are exactly the norm-one elements; inverse is the conjugate
                if (a * a + b * b).is_one() {
                    Some(Elem::Gauss(a.clone(), -b))
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn is_unit(&self, e: &Elem) -> bool {
        self.inverse(e).is_some()
    }

    /// Euclidean division `a = q b + r` with `r = 0` or `norm(r) < norm(b)`.
    pub fn divmod(&self, a: &Elem, b: &Elem) -> Option<(Elem, Elem)> {
        if self.is_zero(b) {
            return None;
        }
        Some(match (self, a, b) {
            (RingSpec::Integers, Elem::Int(x), Elem::Int(y)) => {
                // remainder in [0, |y|)
                let (mut q, mut r) = x.div_mod_floor(y);
                if r.is_negative() {
                    r -= y;
                    q += 1;
                }
                (Elem::Int(q), Elem::Int(r))
            }
            (RingSpec::Rationals, Elem::Rat(x), Elem::Rat(y)) => (Elem::Rat(x / y), self.zero()),
            (RingSpec::ModP(_), _, _) => {
                let inv = self.inverse(b).unwrap();
                (self.mul(a, &inv), self.zero())
            }
            (RingSpec::Localized(ps), Elem::Rat(x), Elem::Rat(y)) => {
                // y = u * m with u a unit and m an S-free integer
                let (m, s_num) = strip_primes(y.numer(), ps);
                let unit = BigRational::new(s_num, y.denom().clone());
                let (m, unit) = if m.is_negative() { (-m, -unit) } else { (m, unit) };
                let xs = x / &unit;
                let (q0, r0) = xs.numer().div_mod_floor(&m);
                let den = xs.denom().clone();
                let q = BigRational::new(q0, den.clone());
                let r = BigRational::new(r0, den) * &unit;
                (Elem::Rat(q), Elem::Rat(r))
            }
            (RingSpec::Gaussian, Elem::Gauss(a, b), Elem::Gauss(c, d)) => {
                let n = c * c + d * d;
                let re = a * c + b * d;
                let im = b * c - a * d;
                let qr = round_div(&re, &n);
                let qi = round_div(&im, &n);
                let rr = a - (&qr * c - &qi * d);
                let ri = b - (&qr * d + &qi * c);
                (Elem::Gauss(qr, qi), Elem::Gauss(rr, ri))
            }
            _ => self.mismatch(a, b),
        })
    }

    /// `Some(a / b)` when `b` divides `a` exactly.
    pub fn exact_div(&self, a: &Elem, b: &Elem) -> Option<Elem> {
        let (q, r) = self.divmod(a, b)?;
        if self.is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }

    /// Does `d` divide `a`? Zero divides only zero.
    pub fn divides(&self, d: &Elem, a: &Elem) -> bool {
        if self.is_zero(d) {
            return self.is_zero(a);
        }
        self.exact_div(a, d).is_some()
    }

    /// A unit `u` with `u * e` the normal associate of `e`.
    ///
    /// Normal forms: positive on `Z`, positive S-free integer on `Z[1/S]`,
    /// 1 on fields, the first-quadrant associate (re > 0, im >= 0) on `Z[i]`.
    pub fn unit_normal(&self, e: &Elem) -> Elem {
        if self.is_zero(e) {
            return self.one();
        }
        match (self, e) {
            (RingSpec::Integers, Elem::Int(n)) => self.from_i64(if n.is_negative() { -1 } else { 1 }),
            (RingSpec::Rationals | RingSpec::ModP(_), _) => self.inverse(e).unwrap(),
            (RingSpec::Localized(ps), Elem::Rat(q)) => {
                let (m, s_num) = strip_primes(q.numer(), ps);
                let unit = BigRational::new(s_num, q.denom().clone());
                let unit = if m.is_negative() { -unit } else { unit };
                Elem::Rat(unit.recip())
            }
            (RingSpec::Gaussian, Elem::Gauss(..)) => {
                for u in gaussian_units() {
                    if let Elem::Gauss(a, b) = self.mul(&u, e) {
                        if a.is_positive() && !b.is_negative() {
                            return u;
                        }
                    }
                }
                unreachable!("every nonzero Gaussian integer has a first-quadrant associate")
            }
            _ => self.mismatch(e, e),
        }
    }

    pub fn normalize(&self, e: &Elem) -> Elem {
        self.mul(&self.unit_normal(e), e)
    }

    pub fn gcd(&self, a: &Elem, b: &Elem) -> Elem {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !self.is_zero(&y) {
            let (_, r) = self.divmod(&x, &y).unwrap();
            x = y;
            y = r;
        }
        self.normalize(&x)
    }

    /// The integer value when the element lies in the image of `Z`
    /// (residues lift to `[0, p)`).
    pub fn to_int(&self, e: &Elem) -> Option<BigInt> {
        match e {
            Elem::Int(n) => Some(n.clone()),
            Elem::Rat(q) => q.is_integer().then(|| q.to_integer()),
            Elem::Mod(r) => Some(BigInt::from(*r)),
            Elem::Gauss(a, b) => b.is_zero().then(|| a.clone()),
        }
    }

    pub fn cmp_norm(&self, a: &Elem, b: &Elem) -> Ordering {
        self.norm(a).cmp(&self.norm(b))
    }

    pub fn format(&self, e: &Elem) -> String {
        match e {
            Elem::Int(n) => n.to_string(),
            Elem::Rat(q) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Elem::Mod(r) => r.to_string(),
            Elem::Gauss(a, b) => {
                if b.is_zero() {
                    a.to_string()
                } else if a.is_zero() {
                    format!("{b}i")
                } else if b.is_negative() {
                    format!("{a}-{}i", -b)
                } else {
                    format!("{a}+{b}i")
                }
            }
        }
    }

    /// Parses an element literal: integers, `p/q` fractions, residues, and
    /// Gaussian literals such as `2-1i`, `2-i`, `3i`, `-i`.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        let bad = |msg: String| Error::InvalidElement { ring: self.clone(), msg };
        match self {
            RingSpec::Gaussian => parse_gaussian(s).ok_or_else(|| bad(format!("bad Gaussian literal `{s}`"))),
            _ => {
                let q = parse_rational(s).ok_or_else(|| bad(format!("bad literal `{s}`")))?;
                match self {
                    RingSpec::Integers if q.is_integer() => Ok(Elem::Int(q.to_integer())),
                    RingSpec::Integers => Err(bad(format!("`{s}` is not an integer"))),
                    RingSpec::Rationals => Ok(Elem::Rat(q)),
                    RingSpec::Localized(_) => {
                        let e = Elem::Rat(q);
                        self.validate(&e)?;
                        Ok(e)
                    }
                    RingSpec::ModP(p) => {
                        let num = self.from_int(q.numer());
                        let den = self.from_int(q.denom());
                        let inv = self.inverse(&den).ok_or_else(|| bad(format!("denominator of `{s}` vanishes mod {p}")))?;
                        Ok(self.mul(&num, &inv))
                    }
                    RingSpec::Gaussian => unreachable!(),
                }
            }
        }
    }
}

pub(crate) fn gaussian_units() -> [Elem; 4] {
    let z = BigInt::zero;
    let o = BigInt::one;
    [Elem::Gauss(o(), z()), Elem::Gauss(-o(), z()), Elem::Gauss(z(), o()), Elem::Gauss(z(), -o())]
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => BigInt::from_str(s).ok().map(BigRational::from_integer),
    }
}

fn parse_gaussian(s: &str) -> Option<Elem> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    if let Some(body) = s.strip_suffix('i') {
        // find the split between real and imaginary parts: last sign not at position 0
        let split = body.char_indices().filter(|&(i, c)| i > 0 && (c == '+' || c == '-')).map(|(i, _)| i).next_back();
        let (re, im) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => BigInt::one(),
            "-" => -BigInt::one(),
            other => BigInt::from_str(other.strip_prefix('+').unwrap_or(other)).ok()?,
        };
        let re = BigInt::from_str(re.strip_prefix('+').unwrap_or(re)).ok()?;
        Some(Elem::Gauss(re, im))
    } else {
        BigInt::from_str(&s).ok().map(|n| Elem::Gauss(n, BigInt::zero()))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::ModP(p) => write!(f, "Z/{p}"),
            RingSpec::Localized(ps) => {
                let parts: Vec<String> = ps.iter().map(|p| format!("1/{p}")).collect();
                write!(f, "Z[{}]", parts.join(","))
            }
            RingSpec::Gaussian => write!(f, "Z[i]"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "Z" => return Ok(RingSpec::Integers),
            "Q" => return Ok(RingSpec::Rationals),
            "Z[i]" => return Ok(RingSpec::Gaussian),
            _ => {}
        }
        if let Some(p) = t.strip_prefix("Z/") {
            let p: u64 = p.parse().map_err(|_| Error::InvalidRing(format!("bad modulus in `{s}`")))?;
            return RingSpec::mod_p(p);
        }
        if let Some(body) = t.strip_prefix("Z[").and_then(|r| r.strip_suffix(']')) {
            let mut ns = Vec::new();
            for part in body.split(',') {
                let n = part
                    .strip_prefix("1/")
                    .and_then(|n| n.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidRing(format!("bad localization `{s}`")))?;
                ns.push(n);
            }
            return RingSpec::localized(ns);
        }
        Err(Error::InvalidRing(format!("unknown ring token `{s}`")))
    }
}

impl Serialize for RingSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RingSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A ring element tagged with its ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    ring: RingSpec,
    elem: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
}

impl Scalar {
    pub fn new(ring: RingSpec, elem: Elem) -> Result<Self> {
        ring.validate(&elem)?;
        Ok(Scalar { ring, elem })
    }

    pub fn from_i64(ring: &RingSpec, n: i64) -> Self {
        Scalar { ring: ring.clone(), elem: ring.from_i64(n) }
    }

    pub fn zero(ring: &RingSpec) -> Self {
        Scalar::from_i64(ring, 0)
    }

    pub fn one(ring: &RingSpec) -> Self {
        Scalar::from_i64(ring, 1)
    }

    pub fn parse(ring: &RingSpec, s: &str) -> Result<Self> {
        Ok(Scalar { ring: ring.clone(), elem: ring.parse_elem(s)? })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn elem(&self) -> &Elem {
        &self.elem
    }

    pub fn into_elem(self) -> Elem {
        self.elem
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.elem)
    }

    fn same_ring(&self, other: &Scalar) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.ring.clone(), other.ring.clone()))
        }
    }

    fn wrap(&self, elem: Elem) -> Scalar {
        Scalar { ring: self.ring.clone(), elem }
    }

    /// Exact ring arithmetic; `y` is ignored for negation.
    pub fn arithmetic(op: ArithOp, x: &Scalar, y: &Scalar) -> Result<Scalar> {
        x.same_ring(y)?;
        let r = &x.ring;
        Ok(x.wrap(match op {
            ArithOp::Add => r.add(&x.elem, &y.elem),
            ArithOp::Mul => r.mul(&x.elem, &y.elem),
            ArithOp::Neg => r.neg(&x.elem),
        }))
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        Scalar::arithmetic(ArithOp::Add, self, other)
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        Scalar::arithmetic(ArithOp::Mul, self, other)
    }

    pub fn neg(&self) -> Scalar {
        self.wrap(self.ring.neg(&self.elem))
    }

    pub fn divmod(&self, other: &Scalar) -> Result<(Scalar, Scalar)> {
        self.same_ring(other)?;
        let (q, r) = self.ring.divmod(&self.elem, &other.elem).ok_or(Error::DivisionByZero)?;
        Ok((self.wrap(q), self.wrap(r)))
    }

    pub fn gcd(&self, other: &Scalar) -> Result<Scalar> {
        self.same_ring(other)?;
        Ok(self.wrap(self.ring.gcd(&self.elem, &other.elem)))
    }

    /// `(true, inverse)` for units, `(false, None)` otherwise.
    pub fn is_unit(&self) -> (bool, Option<Scalar>) {
        match self.ring.inverse(&self.elem) {
            Some(inv) => (true, Some(self.wrap(inv))),
            None => (false, None),
        }
    }

    pub fn norm(&self) -> BigInt {
        self.ring.norm(&self.elem)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(&self.elem))
    }
}
