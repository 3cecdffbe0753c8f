//! Text grammars.
//!
//! ```text
//! group { gens: a b; rels: a^2 b^3 (a*b)^5 }
//! hom { from: <group>; to: <group>; a -> <word>; b -> 1; kernel: <word>* }
//! space { group: <group>; cells2: <word|1>*; aspherical: true|false }
//! Z[i]: [[3,2-1i],[2+1i,2]]
//! ```
//!
//! Words are products `u*v` of generators, `1`, parenthesized words, and
//! commutators `[u,v] = u^-1 v^-1 u v`, each with an optional integer power
//! `^n`. Relators are separated by whitespace. `#` starts a comment that
//! runs to the end of the line.

use std::str::FromStr;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::groups::{GroupHom, Presentation, Word};
use crate::homology::SpaceModel;
use crate::linalg::{MatrixR, ModulePresentation};
use crate::rings::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {line}:{column}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub msg: String,
}

/// Largest accepted exponent, and largest accepted word length.
pub const MAX_EXPONENT: u64 = 100_000;
pub const MAX_WORD_LEN: usize = 1_000_000;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, column)
    }

    fn error_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        let (line, column) = self.location(pos);
        Error::Parse(ParseError { line, column, msg: msg.into() })
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        self.error_at(self.pos, msg)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        loop {
            let r = self.rest();
            let t = r.trim_start();
            self.pos += r.len() - t.len();
            if t.starts_with('#') {
                self.pos += t.find('\n').unwrap_or(t.len());
            } else {
                return;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            let found = self.rest().chars().next().map_or("end of input".to_string(), |c| format!("`{c}`"));
            Err(self.error(format!("expected `{s}`, found {found}")))
        }
    }

    fn ident(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let r = self.rest();
        let mut end = 0;
        for (i, c) in r.char_indices() {
            let ok = if i == 0 { c.is_alphabetic() || c == '_' } else { c.is_alphanumeric() || c == '_' || c == '\'' };
            if !ok {
                break;
            }
            end = i + c.len_utf8();
        }
        if end == 0 {
            return Err(self.error("expected a name"));
        }
        let start = self.pos;
        self.pos += end;
        Ok((start, &r[..end]))
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let r = self.rest();
        if r.starts_with(kw) && !r[kw.len()..].starts_with(|c: char| c.is_alphanumeric() || c == '_' || c == '\'') {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let r = self.rest();
        let neg = r.starts_with('-');
        let digits = r[neg as usize..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let len = neg as usize + digits;
        self.pos += len;
        let n: i64 = r[..len].parse().map_err(|_| self.error_at(start, "integer out of range"))?;
        if n.unsigned_abs() > MAX_EXPONENT {
            return Err(self.error_at(start, format!("exponent larger than {MAX_EXPONENT}")));
        }
        Ok(n)
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

fn checked(c: &Cursor, start: usize, w: Word) -> Result<Word> {
    if w.len() > MAX_WORD_LEN {
        return Err(c.error_at(start, format!("word longer than {MAX_WORD_LEN} letters")));
    }
    Ok(w)
}

fn power(c: &mut Cursor, start: usize, w: Word) -> Result<Word> {
    c.skip_ws();
    let caret = c.pos;
    if c.eat("^") {
        let e = c.integer().map_err(|e| match e {
            Error::Parse(p) if p.msg == "expected an integer" => c.error_at(caret, "expected an exponent after `^`"),
            other => other,
        })?;
        if w.len() as u64 * e.unsigned_abs() > MAX_WORD_LEN as u64 {
            return Err(c.error_at(start, format!("word longer than {MAX_WORD_LEN} letters")));
        }
        checked(c, start, w.pow(e))
    } else {
        Ok(w)
    }
}

fn atom(c: &mut Cursor, names: &[String]) -> Result<Word> {
    c.skip_ws();
    let start = c.pos;
    let w = match c.peek() {
        Some('(') => {
            c.pos += 1;
            let w = word(c, names)?;
            c.expect(")")?;
            w
        }
        Some('[') => {
            c.pos += 1;
            let u = word(c, names)?;
            c.expect(",")?;
            let v = word(c, names)?;
            c.expect("]")?;
            u.inverse().concat(&v.inverse()).concat(&u).concat(&v)
        }
        Some('1') if !c.rest()[1..].starts_with(|ch: char| ch.is_ascii_digit()) => {
            c.pos += 1;
            Word::empty()
        }
        _ => {
            let (at, name) = c.ident()?;
            let g = names.iter().position(|n| n == name).ok_or_else(|| c.error_at(at, format!("unknown generator `{name}`")))?;
            Word::gen(g)
        }
    };
    power(c, start, w)
}

fn word(c: &mut Cursor, names: &[String]) -> Result<Word> {
    let start = c.pos;
    let mut w = atom(c, names)?;
    while c.eat("*") {
        let next = atom(c, names)?;
        w = checked(c, start, w.concat(&next))?;
    }
    Ok(w)
}

/// Words separated by whitespace, up to `;` or `}`.
fn word_list(c: &mut Cursor, names: &[String]) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    while !matches!(c.peek(), Some(';') | Some('}') | None) {
        out.push(word(c, names)?);
    }
    Ok(out)
}

fn field_end(c: &mut Cursor) -> Result<()> {
    if c.eat(";") || c.peek() == Some('}') {
        Ok(())
    } else {
        Err(c.error("expected `;` or `}`"))
    }
}

fn group(c: &mut Cursor) -> Result<Presentation> {
    let open = {
        c.skip_ws();
        c.pos
    };
    if !c.keyword("group") {
        return Err(c.error("expected `group`"));
    }
    c.expect("{")?;
    let mut names: Option<Vec<String>> = None;
    let mut rels = Vec::new();
    while !c.eat("}") {
        let (at, key) = c.ident()?;
        c.expect(":")?;
        match key {
            "gens" if names.is_none() => {
                let mut ns: Vec<String> = Vec::new();
                while !matches!(c.peek(), Some(';') | Some('}') | None) {
                    let (p, n) = c.ident()?;
                    if ns.iter().any(|m| m == n) {
                        return Err(c.error_at(p, format!("duplicate generator `{n}`")));
                    }
                    ns.push(n.to_string());
                }
                names = Some(ns);
            }
            "rels" => {
                let ns = names.as_ref().ok_or_else(|| c.error_at(at, "`rels` before `gens`"))?;
                rels.extend(word_list(c, ns)?);
            }
            _ => return Err(c.error_at(at, format!("unexpected field `{key}` in group"))),
        }
        field_end(c)?;
    }
    let names = names.ok_or_else(|| c.error_at(open, "group without `gens`"))?;
    Presentation::new(names, rels)
}

/// Parses `group { gens: ...; rels: ... }`.
pub fn parse_presentation(src: &str) -> Result<Presentation> {
    let mut c = Cursor::new(src);
    let p = group(&mut c)?;
    c.finish()?;
    Ok(p)
}

/// Parses one word over the generators of `p`.
pub fn parse_word(src: &str, p: &Presentation) -> Result<Word> {
    let mut c = Cursor::new(src);
    let w = word(&mut c, p.names())?;
    c.finish()?;
    Ok(w)
}

/// Parses whitespace-separated words over the generators of `p`.
pub fn parse_words(src: &str, p: &Presentation) -> Result<Vec<Word>> {
    let mut c = Cursor::new(src);
    let ws = word_list(&mut c, p.names())?;
    c.finish()?;
    Ok(ws)
}

/// A homomorphism together with optional normal generators of its kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedHom {
    pub hom: GroupHom,
    pub kernel: Vec<Word>,
}

impl std::fmt::Display for ParsedHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let h = self.hom.to_string();
        let body = h.strip_suffix(" }").unwrap_or(&h);
        write!(f, "{body}; kernel:")?;
        for w in &self.kernel {
            write!(f, " {}", w.display(self.hom.source().names()))?;
        }
        write!(f, " }}")
    }
}

/// Parses `hom { ... }`. The source is `from:` when given, else `source`.
pub fn parse_hom(src: &str, source: Option<&Presentation>) -> Result<ParsedHom> {
    let mut c = Cursor::new(src);
    c.skip_ws();
    let open = c.pos;
    if !c.keyword("hom") {
        return Err(c.error("expected `hom`"));
    }
    c.expect("{")?;
    let mut from = source.cloned();
    let mut to: Option<Presentation> = None;
    let mut images: Vec<Option<Word>> = Vec::new();
    let mut kernel = Vec::new();
    while !c.eat("}") {
        let (at, key) = c.ident()?;
        if c.eat("->") {
            let s = from.as_ref().ok_or_else(|| c.error_at(at, "images given before the source group"))?;
            let t = to.as_ref().ok_or_else(|| c.error_at(at, "images given before `to:`"))?;
            let g = s.gen_index(key).map_err(|_| c.error_at(at, format!("unknown source generator `{key}`")))?;
            images.resize(s.num_gens(), None);
            if images[g].is_some() {
                return Err(c.error_at(at, format!("generator `{key}` mapped twice")));
            }
            images[g] = Some(word(&mut c, t.names())?);
        } else {
            c.expect(":")?;
            match key {
                "from" if images.iter().all(Option::is_none) => from = Some(group(&mut c)?),
                "to" if to.is_none() => to = Some(group(&mut c)?),
                "kernel" => {
                    let s = from.as_ref().ok_or_else(|| c.error_at(at, "`kernel` before the source group"))?;
                    kernel.extend(word_list(&mut c, s.names())?);
                }
                _ => return Err(c.error_at(at, format!("unexpected field `{key}` in hom"))),
            }
        }
        field_end(&mut c)?;
    }
    c.finish()?;
    let from = from.ok_or_else(|| c.error_at(open, "hom without a source group"))?;
    let to = to.ok_or_else(|| c.error_at(open, "hom without `to:`"))?;
    images.resize(from.num_gens(), None);
    let mut ws = Vec::new();
    for (g, w) in images.into_iter().enumerate() {
        ws.push(w.ok_or_else(|| c.error_at(open, format!("generator `{}` has no image", from.names()[g])))?);
    }
    Ok(ParsedHom { hom: GroupHom::new(from, to, ws)?, kernel })
}

/// Parses `space { group: ...; cells2: ...; aspherical: ... }`.
pub fn parse_space(src: &str) -> Result<SpaceModel> {
    let mut c = Cursor::new(src);
    c.skip_ws();
    let open = c.pos;
    if !c.keyword("space") {
        return Err(c.error("expected `space`"));
    }
    c.expect("{")?;
    let mut base: Option<Presentation> = None;
    let mut cells = Vec::new();
    let mut aspherical = false;
    while !c.eat("}") {
        let (at, key) = c.ident()?;
        c.expect(":")?;
        match key {
            "group" if base.is_none() => base = Some(group(&mut c)?),
            "cells2" => {
                let p = base.as_ref().ok_or_else(|| c.error_at(at, "`cells2` before `group`"))?;
                cells.extend(word_list(&mut c, p.names())?);
            }
            "aspherical" => {
                aspherical = if c.keyword("true") {
                    true
                } else if c.keyword("false") {
                    false
                } else {
                    return Err(c.error("expected `true` or `false`"));
                }
            }
            _ => return Err(c.error_at(at, format!("unexpected field `{key}` in space"))),
        }
        field_end(&mut c)?;
    }
    c.finish()?;
    let base = base.ok_or_else(|| c.error_at(open, "space without `group`"))?;
    SpaceModel::new(base, cells, aspherical).map_err(|e| c.error_at(open, e.to_string()))
}

/// Parses a ring token such as `Z`, `Q`, `Z/5`, `Z[1/2,1/3]`, `Z[i]`.
pub fn parse_ring(src: &str) -> Result<RingSpec> {
    src.trim().parse().map_err(|e: Error| {
        let mut c = Cursor::new(src);
        c.skip_ws();
        c.error(e.to_string())
    })
}

/// Parses `RING: [[a,b],[c,d]]`.
pub fn parse_matrix(src: &str) -> Result<MatrixR> {
    let mut c = Cursor::new(src);
    c.skip_ws();
    let ring_start = c.pos;
    let colon = src.find(':').ok_or_else(|| c.error("expected `RING:` before the matrix"))?;
    let ring: RingSpec = src[ring_start..colon].trim().parse().map_err(|e: Error| c.error_at(ring_start, e.to_string()))?;
    c.pos = colon + 1;
    c.expect("[")?;
    let mut rows: Vec<Vec<crate::rings::Elem>> = Vec::new();
    if !c.eat("]") {
        loop {
            c.expect("[")?;
            let mut row = Vec::new();
            if !c.eat("]") {
                loop {
                    c.skip_ws();
                    let start = c.pos;
                    let len = c.rest().find([',', ']']).ok_or_else(|| c.error("unterminated row"))?;
                    let text = &c.rest()[..len];
                    let e = ring.parse_elem(text.trim()).map_err(|e| c.error_at(start, e.to_string()))?;
                    c.pos += len;
                    row.push(e);
                    if c.eat("]") {
                        break;
                    }
                    c.expect(",")?;
                }
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(c.error("rows of different lengths"));
                }
            }
            rows.push(row);
            if c.eat("]") {
                break;
            }
            c.expect(",")?;
        }
    }
    c.finish()?;
    let cols = rows.first().map_or(0, Vec::len);
    MatrixR::new(&ring, rows.len(), cols, rows.into_iter().flatten().collect())
}

/// Parses a module such as `Z^2 + Z/2` over `ring`.
pub fn parse_module(ring: &RingSpec, src: &str) -> Result<ModulePresentation> {
    ModulePresentation::parse(ring, src).map_err(|e| {
        let mut c = Cursor::new(src);
        c.skip_ws();
        c.error(e.to_string())
    })
}

impl FromStr for Presentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_presentation(s)
    }
}

impl FromStr for SpaceModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_space(s)
    }
}

impl FromStr for MatrixR {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_matrix(s)
    }
}
