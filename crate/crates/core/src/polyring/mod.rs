//! Multivariate polynomial rings over exact fields, with the monomial orders
//! the Gröbner engine needs: grevlex, lex, and block orders that eliminate a
//! prefix of the variables.
//!
//! Polynomials are stored as term lists sorted descending in the ring's
//! order, with no zero coefficients; this makes printing, hashing of debug
//! dumps, and Gröbner reductions deterministic.

pub mod ideal;
pub mod points;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalars::{FieldDescriptor, FieldElem, FieldKind};

pub use ideal::{buchberger, is_regular_sequence, Ideal, RegSeqCertificate};
pub use points::{minimal_primes_zero_dim, staircase_dimension, verify_decomposition, Point};

/// Exponent vector; length always equals the ring's variable count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variable indices with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    /// Compares the first `split` variables grevlex first, then the rest;
    /// an elimination order for the leading block.
    Block { split: usize },
}

fn cmp_grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for (x, y) in a.iter().zip(b).rev() {
                match x.cmp(y) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {}
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => cmp_grevlex(&a.0, &b.0),
            MonomialOrder::Lex => cmp_lex(&a.0, &b.0),
            MonomialOrder::Block { split } => {
                let s = *split;
                cmp_grevlex(&a.0[..s], &b.0[..s]).then_with(|| cmp_grevlex(&a.0[s..], &b.0[s..]))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block { split } => write!(f, "block({split})"),
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    field: FieldDescriptor,
    vars: Vec<String>,
    order: MonomialOrder,
    /// Index of the designated homotopy variable, if flagged. Must be last.
    homotopy: Option<usize>,
}

/// Handle to a polynomial ring; cheap to clone, equality is structural.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}; {}]",
            self.0.field,
            self.0.vars.join(","),
            self.0.order
        )
    }
}

impl PolyRing {
    pub fn new(
        field: FieldDescriptor,
        vars: &[&str],
        order: MonomialOrder,
        homotopy_var: Option<&str>,
    ) -> Result<Self> {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        for (i, v) in names.iter().enumerate() {
            if names[..i].contains(v) {
                return Err(Error::RingMismatch(format!("duplicate variable `{v}`")));
            }
            if v.is_empty() || !v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::UnknownVariable(v.clone()));
            }
        }
        if let MonomialOrder::Block { split } = order {
            if split == 0 || split >= names.len() {
                return Err(Error::RingMismatch(format!(
                    "block split {split} out of range for {} variables",
                    names.len()
                )));
            }
        }
        let homotopy = match homotopy_var {
            None => None,
            Some(h) => {
                let idx = names
                    .iter()
                    .position(|v| v == h)
                    .ok_or_else(|| Error::UnknownVariable(h.to_string()))?;
                if idx != names.len() - 1 {
                    return Err(Error::RingMismatch(format!(
                        "homotopy variable `{h}` must be the last ring variable"
                    )));
                }
                Some(idx)
            }
        };
        Ok(PolyRing(Arc::new(RingData {
            field,
            vars: names,
            order,
            homotopy,
        })))
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn homotopy_var(&self) -> Option<usize> {
        self.0.homotopy
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.cmp(a, b)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.0.field.one())
    }

    pub fn constant(&self, c: FieldElem) -> Polynomial {
        assert!(c.field() == self.field(), "constant from wrong field");
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::one(self.nvars()), c)],
        }
    }

    pub fn from_integer(&self, n: i64) -> Polynomial {
        self.constant(self.field().from_integer(n))
    }

    pub fn var(&self, idx: usize) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::var(self.nvars(), idx), self.0.field.one())],
        }
    }

    pub fn monomial(&self, m: Monomial, c: FieldElem) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        assert_eq!(m.0.len(), self.nvars());
        Polynomial {
            ring: self.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Same variables, different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        PolyRing::new(
            self.0.field.clone(),
            &self.0.vars.iter().map(String::as_str).collect::<Vec<_>>(),
            order,
            self.0.homotopy.map(|i| self.0.vars[i].as_str()),
        )
    }

    /// New ring with an auxiliary variable in front and a block order that
    /// eliminates it (used for ideal intersections).
    pub fn extend_front(&self, name: &str) -> Result<Self> {
        if self.var_index(name).is_some() {
            return Err(Error::RingMismatch(format!("variable `{name}` exists")));
        }
        let mut vars = vec![name];
        vars.extend(self.0.vars.iter().map(String::as_str));
        PolyRing::new(
            self.0.field.clone(),
            &vars,
            MonomialOrder::Block { split: 1 },
            None,
        )
    }

    /// New ring without variable `idx`; grevlex and lex orders carry over,
    /// block orders shrink their split accordingly.
    pub fn remove_var(&self, idx: usize) -> Result<Self> {
        if idx >= self.nvars() {
            return Err(Error::UnknownVariable(format!("#{idx}")));
        }
        let vars: Vec<&str> = self
            .0
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, v)| v.as_str())
            .collect();
        let order = match self.0.order {
            MonomialOrder::Block { split } => {
                let new_split = split - usize::from(idx < split);
                if new_split == 0 || new_split >= vars.len() {
                    MonomialOrder::GrevLex
                } else {
                    MonomialOrder::Block { split: new_split }
                }
            }
            o => o,
        };
        let homotopy = match self.0.homotopy {
            Some(h) if h == idx => None,
            Some(h) => Some(self.0.vars[h].as_str()),
            None => None,
        };
        PolyRing::new(self.0.field.clone(), &vars, order, homotopy)
    }

    /// Parses the plain ASCII grammar, e.g. `3/2*x^2*y - T + 1`.
    pub fn parse(&self, input: &str) -> Result<Polynomial> {
        let mut p = PolyParser {
            ring: self.clone(),
            input: input.as_bytes(),
            pos: 0,
        };
        let poly = p.parse_expr()?;
        p.skip_ws();
        if p.pos != p.input.len() {
            return Err(p.err("trailing input"));
        }
        Ok(poly)
    }
}

/// A multivariate polynomial; terms sorted descending in the ring order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, FieldElem)>,
}

impl Polynomial {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_value(&self) -> Option<&FieldElem> {
        match self.terms.as_slice() {
            [(m, c)] if m.is_one() => Some(c),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &FieldElem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    fn assert_same_ring(&self, other: &Polynomial, op: &str) {
        assert!(
            self.ring == other.ring,
            "ring mismatch in {op}: {:?} vs {:?}",
            self.ring,
            other.ring
        );
    }

    /// Rebuild canonical form from arbitrary term soup.
    fn normalize(ring: &PolyRing, mut terms: Vec<(Monomial, FieldElem)>) -> Polynomial {
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        let mut out: Vec<(Monomial, FieldElem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = lc.add(&c);
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !c.is_zero() {
                        out.push((m, c));
                    }
                }
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other, "add");
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        while let (Some((ma, _)), Some((mb, _))) = (a.peek(), b.peek()) {
            match self.ring.cmp_monomials(ma, mb) {
                Ordering::Greater => terms.push(a.next().unwrap().clone()),
                Ordering::Less => terms.push(b.next().unwrap().clone()),
                Ordering::Equal => {
                    let (m, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let c = ca.add(cb);
                    if !c.is_zero() {
                        terms.push((m.clone(), c));
                    }
                }
            }
        }
        terms.extend(a.cloned());
        terms.extend(b.cloned());
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElem) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// Multiply by a single term; preserves sortedness.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElem) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other, "mul");
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), ca.mul(cb)));
            }
        }
        Polynomial::normalize(&self.ring, terms)
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) if lc.is_one() => self.clone(),
            Some((_, lc)) => self.scale(&lc.inverse().expect("leading coefficient nonzero")),
        }
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = self.ring.field().clone();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] > 0)
            .map(|(m, c)| {
                let mut e = m.clone();
                e.0[var] -= 1;
                (e, c.mul(&field.from_integer(m.0[var] as i64)))
            })
            .collect();
        Polynomial::normalize(&self.ring, terms)
    }

    /// Image under the evaluation homomorphism sending `var` to the scalar
    /// `value`; lands in the ring without that variable.
    pub fn substitute(&self, var: usize, value: &FieldElem) -> Result<Polynomial> {
        if var >= self.ring.nvars() {
            return Err(Error::UnknownVariable(format!("#{var}")));
        }
        let target = self.ring.remove_var(var)?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exp = m.0[var];
                let coeff = c.mul(&value.pow(exp as u128));
                let mon = Monomial(
                    m.0.iter()
                        .enumerate()
                        .filter(|(i, _)| *i != var)
                        .map(|(_, &e)| e)
                        .collect(),
                );
                (mon, coeff)
            })
            .collect();
        Ok(Polynomial::normalize(&target, terms))
    }

    /// Transport into a ring with the same variables but another order.
    pub fn into_ring(&self, target: &PolyRing) -> Result<Polynomial> {
        if target.vars() != self.ring.vars() || target.field() != self.ring.field() {
            return Err(Error::RingMismatch(
                "target ring has different variables or field".into(),
            ));
        }
        Ok(Polynomial::normalize(target, self.terms.clone()))
    }

    /// Evaluate all variables at field elements (possibly in an extension of
    /// the coefficient field).
    pub fn evaluate(&self, coords: &[FieldElem], target: &FieldDescriptor) -> Result<FieldElem> {
        if coords.len() != self.ring.nvars() {
            return Err(Error::RingMismatch("coordinate count mismatch".into()));
        }
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.embed(c)?;
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&coords[i].pow(e as u128));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    fn fmt_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.ring.vars()[i].clone()
                } else {
                    format!("{}^{}", self.ring.vars()[i], e)
                }
            })
            .collect();
        parts.join("*")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mon = self.fmt_monomial(m);
            let coeff_str = if mag.contains('+') || mag.contains('-') || mag.contains(' ') {
                format!("({mag})")
            } else {
                mag
            };
            if mon.is_empty() {
                out.push_str(&coeff_str);
            } else if coeff_str == "1" {
                out.push_str(&mon);
            } else {
                out.push_str(&format!("{coeff_str}*{mon}"));
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct PolyParser<'a> {
    ring: PolyRing,
    input: &'a [u8],
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: 1,
            column: self.pos + 1,
            message: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn parse_expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.parse_term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.parse_term()?
            }
            _ => self.parse_term()?,
        };
        while let Some(op) = self.peek() {
            match op {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.parse_term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.parse_term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        let mut acc = self.parse_factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.parse_factor()?);
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Polynomial> {
        let base = self.parse_atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            let exp = self.parse_uint()?;
            if exp > 64 {
                return Err(self.err("exponent too large"));
            }
            return Ok(base.pow(exp as u32));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected )"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.parse_uint()? as i64;
                if let Some(b'/') = self.peek() {
                    self.pos += 1;
                    let den = self.parse_uint()? as i64;
                    Ok(self.ring.constant(self.ring.field().from_ratio(num, den)?))
                } else {
                    Ok(self.ring.from_integer(num))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.input.len()
                    && (self.input[self.pos].is_ascii_alphanumeric()
                        || self.input[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
                if let Some(idx) = self.ring.var_index(name) {
                    return Ok(self.ring.var(idx));
                }
                // The extension generator is a scalar, not a ring variable.
                if let FieldKind::Extension(ext) = self.ring.field().kind() {
                    if name == ext.var() {
                        let gen = self.ring.field().generator()?;
                        return Ok(self.ring.constant(gen));
                    }
                }
                Err(Error::UnknownVariable(name.to_string()))
            }
            _ => Err(self.err("expected a number, variable or parenthesis")),
        }
    }

    fn parse_uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("number too large"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq_ring() -> PolyRing {
        PolyRing::new(
            FieldDescriptor::rationals(),
            &["x", "y"],
            MonomialOrder::GrevLex,
            None,
        )
        .unwrap()
    }

    #[test]
    fn grevlex_order() {
        let r = qq_ring();
        // x^2 > x*y > y^2 > x > y > 1 under grevlex with x > y.
        let x2 = Monomial(vec![2, 0]);
        let xy = Monomial(vec![1, 1]);
        let y2 = Monomial(vec![0, 2]);
        assert_eq!(r.cmp_monomials(&x2, &xy), Ordering::Greater);
        assert_eq!(r.cmp_monomials(&xy, &y2), Ordering::Greater);
        assert_eq!(
            r.cmp_monomials(&Monomial(vec![1, 0]), &Monomial(vec![0, 1])),
            Ordering::Greater
        );
    }
}
