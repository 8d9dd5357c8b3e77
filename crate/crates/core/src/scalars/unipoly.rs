//! Dense univariate polynomials over a [`FieldDescriptor`] field.
//!
//! These back the minimal polynomials of simple extensions and the univariate
//! parts of shape-position lex bases. Factorization is complete over finite
//! fields (squarefree decomposition, distinct-degree, Cantor–Zassenhaus
//! splitting) and deliberately limited over ℚ: rational roots are stripped
//! and residual factors of degree ≤ 3 are certified irreducible; anything of
//! degree ≥ 4 without rational roots is reported unsupported.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{factor_integer, FieldDescriptor, FieldElem, FieldKind, DEFAULT_TRIAL_DIVISION_BOUND};
use crate::error::{Error, Result};

/// Coefficients ascending, trailing zeros trimmed; the zero polynomial has an
/// empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: FieldDescriptor,
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn zero(field: FieldDescriptor) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldDescriptor) -> Self {
        let one = field.one();
        UniPoly {
            field,
            coeffs: vec![one],
        }
    }

    pub fn constant(c: FieldElem) -> Self {
        let field = c.field().clone();
        let coeffs = if c.is_zero() { Vec::new() } else { vec![c] };
        UniPoly { field, coeffs }
    }

    /// The variable x itself.
    pub fn var(field: FieldDescriptor) -> Self {
        UniPoly::from_coeffs(field.clone(), vec![field.zero(), field.one()])
    }

    pub fn from_coeffs(field: FieldDescriptor, coeffs: Vec<FieldElem>) -> Self {
        let mut p = UniPoly { field, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, FieldElem::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        UniPoly::from_coeffs(self.field.clone(), coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(FieldElem::neg).collect(),
        }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElem) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero(self.field.clone());
        }
        UniPoly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field.clone());
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        UniPoly::from_coeffs(self.field.clone(), coeffs)
    }

    /// x^k · self.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.inverse().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: self = q·div + r with deg r < deg div.
    pub fn divmod(&self, div: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = div.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = div.leading_coeff().unwrap().inverse()?;
        let mut rem = self.clone();
        let mut quot = vec![
            self.field.zero();
            self.coeffs.len().saturating_sub(div.coeffs.len()) + 1
        ];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coeff().unwrap().mul(&lc_inv);
            let k = rd - dd;
            quot[k] = quot[k].add(&factor);
            rem = rem.sub(&div.scale(&factor).shift(k));
        }
        Ok((
            UniPoly::from_coeffs(self.field.clone(), quot),
            rem,
        ))
    }

    pub fn rem(&self, div: &UniPoly) -> Result<UniPoly> {
        Ok(self.divmod(div)?.1)
    }

    /// Exact quotient; panics if the division is not exact (internal use on
    /// certified divisors).
    fn div_exact(&self, div: &UniPoly) -> UniPoly {
        let (q, r) = self.divmod(div).expect("divisor nonzero");
        assert!(r.is_zero(), "inexact univariate division");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) with s·self + t·other = g, g monic.
    pub fn xgcd(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = UniPoly::one(self.field.clone());
        let mut s1 = UniPoly::zero(self.field.clone());
        let mut t0 = UniPoly::zero(self.field.clone());
        let mut t1 = UniPoly::one(self.field.clone());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if let Some(lc) = r0.leading_coeff().cloned() {
            let inv = lc.inverse()?;
            r0 = r0.scale(&inv);
            s0 = s0.scale(&inv);
            t0 = t0.scale(&inv);
        }
        Ok((r0, s0, t0))
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(self.field.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.field.from_integer(i as i64)))
            .collect();
        UniPoly::from_coeffs(self.field.clone(), coeffs)
    }

    /// Horner evaluation at a point of the coefficient field.
    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = x.field().zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Evaluation at a point of an extension of the coefficient field;
    /// coefficients are embedded first.
    pub fn eval_in(&self, x: &FieldElem) -> Result<FieldElem> {
        let target = x.field();
        let mut acc = target.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&target.embed(c)?);
        }
        Ok(acc)
    }

    /// self^exp mod m, by square and multiply.
    pub fn powmod(&self, mut exp: u128, m: &UniPoly) -> Result<UniPoly> {
        let mut base = self.rem(m)?;
        let mut acc = UniPoly::one(self.field.clone()).rem(m)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Factorization into monic irreducibles with multiplicities, sorted
    /// canonically (by degree, then coefficient print). The product of the
    /// factors times the leading coefficient re-multiplies to self exactly.
    pub fn factor(&self) -> Result<Vec<(UniPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let monic = self.monic();
        let mut factors = match self.field.kind() {
            FieldKind::Rationals => factor_over_rationals(&monic)?,
            FieldKind::PrimeField(_) => factor_over_finite(&monic)?,
            FieldKind::Extension(ext) => match ext.base().kind() {
                FieldKind::PrimeField(_) => factor_over_finite(&monic)?,
                _ => {
                    return Err(Error::Unsupported(
                        "univariate factorization over QQ-extensions is not supported".into(),
                    ))
                }
            },
        };
        factors.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.to_string().cmp(&b.0.to_string()))
        });
        Ok(factors)
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        match self.degree() {
            None | Some(0) => return Ok(false),
            Some(1) => return Ok(true),
            _ => {}
        }
        let fs = self.factor()?;
        Ok(fs.len() == 1 && fs[0].1 == 1)
    }

    /// Squarefree decomposition: pairwise-coprime squarefree monic parts with
    /// their multiplicities, valid in characteristic 0 and p.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(UniPoly, usize)>> {
        let f = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return Ok(Vec::new());
        }
        let p = self.field.characteristic();
        let mut parts = Vec::new();
        let deriv = f.derivative();
        if deriv.is_zero() {
            // Characteristic p and f = g(x^p): take the p-th root and recurse.
            let root = pth_root(&f)?;
            for (g, m) in root.squarefree_decomposition()? {
                parts.push((g, m * p as usize));
            }
            return Ok(parts);
        }
        let mut c = f.gcd(&deriv);
        let mut w = f.div_exact(&c);
        let mut i = 1usize;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_exact(&y);
            if !z.is_one() {
                parts.push((z, i));
            }
            c = c.div_exact(&y);
            w = y;
            i += 1;
        }
        if !c.is_one() {
            // What remains has all multiplicities divisible by p.
            let root = pth_root(&c)?;
            for (g, m) in root.squarefree_decomposition()? {
                parts.push((g, m * p as usize));
            }
        }
        Ok(parts)
    }

    pub fn display_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let needs_coeff = mag != "1" || k == 0;
            let coeff_str = if mag.contains(' ') || mag.contains('+') {
                format!("({mag})")
            } else {
                mag
            };
            match (needs_coeff, k) {
                (true, 0) => out.push_str(&coeff_str),
                (true, 1) => out.push_str(&format!("{coeff_str}*{var}")),
                (true, _) => out.push_str(&format!("{coeff_str}*{var}^{k}")),
                (false, 1) => out.push_str(var),
                (false, _) => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }

    /// Parses expressions like `z^2 - 2`, `2*z^3 + 1/2*z - 1`.
    pub fn parse(field: &FieldDescriptor, var: &str, input: &str) -> Result<UniPoly> {
        let mut p = UniParser {
            field: field.clone(),
            var,
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

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with_var("z"))
    }
}

/// p-th root of a polynomial whose derivative vanishes (so f = g(x^p)).
fn pth_root(f: &UniPoly) -> Result<UniPoly> {
    let p = f.field().characteristic();
    if p == 0 {
        return Err(Error::Unsupported(
            "zero derivative in characteristic 0".into(),
        ));
    }
    let q = f
        .field()
        .order()
        .ok_or_else(|| Error::Unsupported("p-th root needs a finite field".into()))?;
    let root_exp = q / p as u128; // inverse Frobenius exponent p^{d-1}
    let mut coeffs = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if i % p as usize == 0 {
            coeffs.push(c.pow(root_exp));
        } else if !c.is_zero() {
            return Err(Error::Unsupported(
                "polynomial is not a p-th power despite zero derivative".into(),
            ));
        }
    }
    Ok(UniPoly::from_coeffs(f.field().clone(), coeffs))
}

/// Complete factorization over a finite field: squarefree decomposition,
/// then distinct-degree and Cantor–Zassenhaus equal-degree splitting.
fn factor_over_finite(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let q = f
        .field()
        .order()
        .ok_or_else(|| Error::Unsupported("finite factorization over infinite field".into()))?;
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition()? {
        for (prod, d) in distinct_degree(&part, q)? {
            for irr in equal_degree(&prod, d, q)? {
                out.push((irr, mult));
            }
        }
    }
    Ok(out)
}

/// Splits a monic squarefree polynomial into products of irreducibles of the
/// same degree d, returning (product, d) pairs.
fn distinct_degree(f: &UniPoly, q: u128) -> Result<Vec<(UniPoly, usize)>> {
    let mut out = Vec::new();
    let mut g = f.clone();
    let x = UniPoly::var(f.field().clone());
    let mut h = x.rem(&g)?;
    let mut d = 0usize;
    while g.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.powmod(q, &g)?;
        let sep = h.sub(&x).gcd(&g);
        if !sep.is_one() {
            out.push((sep.clone(), d));
            g = g.div_exact(&sep);
            h = h.rem(&g)?;
        }
    }
    if g.degree().unwrap_or(0) > 0 {
        let deg = g.degree().unwrap();
        out.push((g, deg));
    }
    Ok(out)
}

/// Cantor–Zassenhaus equal-degree splitting for odd q. The random stream is
/// seeded deterministically so repeated runs factor identically.
fn equal_degree(f: &UniPoly, d: usize, q: u128) -> Result<Vec<UniPoly>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b6f737a756c);
    let mut stack = vec![f.clone()];
    let mut out = Vec::new();
    let exp_base = q
        .checked_pow(d as u32)
        .ok_or_else(|| Error::Unsupported("field order q^d overflows u128".into()))?;
    let exp = (exp_base - 1) / 2;
    while let Some(g) = stack.pop() {
        let deg = g.degree().unwrap_or(0);
        if deg == d {
            out.push(g.monic());
            continue;
        }
        if deg == 0 {
            continue;
        }
        loop {
            let r = random_poly(f.field(), deg, &mut rng);
            if r.is_zero() {
                continue;
            }
            let g0 = r.gcd(&g);
            let split = if !g0.is_one() && g0.degree() < g.degree() {
                Some(g0)
            } else {
                let s = r.powmod(exp, &g)?.sub(&UniPoly::one(f.field().clone()));
                let g1 = s.gcd(&g);
                if !g1.is_one() && g1.degree() < g.degree() {
                    Some(g1)
                } else {
                    None
                }
            };
            if let Some(h) = split {
                let other = g.div_exact(&h);
                stack.push(h);
                stack.push(other);
                break;
            }
        }
    }
    Ok(out)
}

fn random_poly(field: &FieldDescriptor, max_deg: usize, rng: &mut ChaCha8Rng) -> UniPoly {
    let p = field.characteristic();
    let coeffs = (0..max_deg)
        .map(|_| match field.kind() {
            FieldKind::PrimeField(_) => field.from_integer(rng.gen_range(0..p) as i64),
            FieldKind::Extension(ext) => {
                let deg = ext.degree();
                let base_coeffs = (0..deg)
                    .map(|_| ext.base().from_integer(rng.gen_range(0..p) as i64))
                    .collect();
                field.from_base_coeffs(base_coeffs).expect("extension")
            }
            FieldKind::Rationals => unreachable!(),
        })
        .collect();
    UniPoly::from_coeffs(field.clone(), coeffs)
}

/// Rational factorization: strip rational roots from each squarefree part and
/// certify low-degree residuals (a quadratic or cubic without rational roots
/// is irreducible). Degree ≥ 4 residuals are unsupported.
fn factor_over_rationals(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition()? {
        let mut rest = part.clone();
        for root in rational_roots(&part)? {
            let lin = UniPoly::from_coeffs(
                f.field().clone(),
                vec![root.neg(), f.field().one()],
            );
            rest = rest.div_exact(&lin);
            out.push((lin, mult));
        }
        match rest.degree().unwrap_or(0) {
            0 => {}
            2 | 3 => out.push((rest.monic(), mult)),
            d => {
                return Err(Error::Unsupported(format!(
                    "cannot certify irreducibility of a degree-{d} rational polynomial \
                     without rational roots"
                )))
            }
        }
    }
    Ok(out)
}

/// All rational roots of a squarefree rational polynomial, via the rational
/// root theorem on the primitive integer model.
fn rational_roots(f: &UniPoly) -> Result<Vec<FieldElem>> {
    use num_rational::BigRational;
    let field = f.field().clone();
    let mut roots = Vec::new();
    let mut g = f.clone();
    // Strip x | f.
    while !g.is_zero() && g.coeff(0).is_zero() {
        roots.push(field.zero());
        g = UniPoly::from_coeffs(field.clone(), g.coeffs()[1..].to_vec());
    }
    if g.degree().unwrap_or(0) == 0 {
        return Ok(roots);
    }
    // Integer model: clear denominators.
    let mut denom_lcm = BigInt::one();
    for c in g.coeffs() {
        let r = c.as_rational().expect("rational coefficients");
        denom_lcm = denom_lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = g
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            (r * BigRational::from_integer(denom_lcm.clone()))
                .to_integer()
        })
        .collect();
    let lead = ints.last().unwrap().clone();
    let constant = ints[0].clone();
    let p_divs = positive_divisors(&constant)?;
    let q_divs = positive_divisors(&lead)?;
    let mut candidates: Vec<BigRational> = Vec::new();
    for p in &p_divs {
        for q in &q_divs {
            let c = BigRational::new(p.clone(), q.clone());
            candidates.push(c.clone());
            candidates.push(-c);
        }
    }
    candidates.sort();
    candidates.dedup();
    for cand in candidates {
        let x = field.from_rational(&cand)?;
        if g.eval(&x).is_zero() {
            roots.push(x);
        }
    }
    roots.sort_by(|a, b| a.as_rational().unwrap().cmp(b.as_rational().unwrap()));
    Ok(roots)
}

fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let factors = factor_integer(n, DEFAULT_TRIAL_DIVISION_BOUND)?;
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pe = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe *= &p;
            }
        }
        divs = next;
    }
    Ok(divs)
}

struct UniParser<'a> {
    field: FieldDescriptor,
    var: &'a str,
    input: &'a [u8],
    pos: usize,
}

impl<'a> UniParser<'a> {
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

    fn parse_expr(&mut self) -> Result<UniPoly> {
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

    fn parse_term(&mut self) -> Result<UniPoly> {
        let mut acc = self.parse_factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.parse_factor()?);
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<UniPoly> {
        let base = self.parse_atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            let exp = self.parse_uint()?;
            let mut acc = UniPoly::one(self.field.clone());
            for _ in 0..exp {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<UniPoly> {
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
                    let c = self.field.from_ratio(num, den)?;
                    Ok(UniPoly::constant(c))
                } else {
                    Ok(UniPoly::constant(self.field.from_integer(num)))
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
                if name == self.var {
                    Ok(UniPoly::var(self.field.clone()))
                } else {
                    Err(Error::UnknownVariable(name.to_string()))
                }
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

    fn qq() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime_field(p).unwrap()
    }

    fn poly(field: &FieldDescriptor, s: &str) -> UniPoly {
        UniPoly::parse(field, "x", s).unwrap()
    }

    fn refold(factors: &[(UniPoly, usize)], lc: &FieldElem, field: &FieldDescriptor) -> UniPoly {
        let mut acc = UniPoly::constant(lc.clone());
        for (f, m) in factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        let _ = field;
        acc
    }

    #[test]
    fn divmod_and_gcd() {
        let q = qq();
        let f = poly(&q, "x^3 - 1");
        let g = poly(&q, "x - 1");
        let (quot, rem) = f.divmod(&g).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, poly(&q, "x^2 + x + 1"));
        assert_eq!(f.gcd(&poly(&q, "x^2 - 1")), g);
    }

    #[test]
    fn factor_difference_of_squares_mod_5() {
        let f5 = gf(5);
        let f = poly(&f5, "x^2 - 1");
        let fs = f.factor().unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(_, m)| *m == 1));
        // Roots 1 and 4.
        for (g, _) in &fs {
            assert_eq!(g.degree(), Some(1));
            let root = g.coeff(0).neg();
            assert!(f.eval(&root).is_zero());
        }
        assert_eq!(refold(&fs, f.leading_coeff().unwrap(), &f5), f);
    }

    #[test]
    fn irreducible_quadratic_mod_3() {
        // Oracle: x^2 + 1 has no root among {0, 1, 2} mod 3, and a reducible
        // quadratic must have a root.
        let f3 = gf(3);
        let f = poly(&f3, "x^2 + 1");
        for r in 0..3 {
            assert!(!f.eval(&f3.from_integer(r)).is_zero());
        }
        assert!(f.is_irreducible().unwrap());
        let fs = f.factor().unwrap();
        assert_eq!(fs, vec![(f.clone(), 1)]);
    }

    #[test]
    fn cube_has_multiplicity_three() {
        let f3 = gf(3);
        let f = poly(&f3, "x^3");
        let fs = f.factor().unwrap();
        assert_eq!(fs, vec![(poly(&f3, "x"), 3)]);
    }

    #[test]
    fn frobenius_kernel_factorization() {
        // x^3 - 1 = (x - 1)^3 in characteristic 3; exercises the p-th root path.
        let f3 = gf(3);
        let f = poly(&f3, "x^3 - 1");
        let fs = f.factor().unwrap();
        assert_eq!(fs, vec![(poly(&f3, "x + 2"), 3)]);
    }

    #[test]
    fn rational_factor_with_roots_and_quadratic() {
        let q = qq();
        let f = poly(&q, "x^3 - x^2 - 2*x + 2"); // (x - 1)(x^2 - 2)
        let fs = f.factor().unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(refold(&fs, f.leading_coeff().unwrap(), &q), f);
        let g = poly(&q, "2*x^2 - 3*x + 1"); // 2(x - 1)(x - 1/2)
        let gs = g.factor().unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(refold(&gs, g.leading_coeff().unwrap(), &q), g);
        // Degree ≥ 4 without rational roots is honestly unsupported.
        let h = poly(&q, "x^4 + 1");
        assert!(matches!(h.factor(), Err(Error::Unsupported(_))));
    }

    #[test]
    fn random_factorizations_remultiply() {
        use rand::{Rng, SeedableRng};
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for p in [3u64, 5, 13] {
            let fp = gf(p);
            for _ in 0..40 {
                let deg = rng.gen_range(1..=6);
                let coeffs: Vec<FieldElem> = (0..=deg)
                    .map(|_| fp.from_integer(rng.gen_range(0..p) as i64))
                    .collect();
                let f = UniPoly::from_coeffs(fp.clone(), coeffs);
                if f.degree().unwrap_or(0) == 0 {
                    continue;
                }
                let fs = f.factor().unwrap();
                assert_eq!(
                    refold(&fs, f.leading_coeff().unwrap(), &fp),
                    f,
                    "factors of {f} must remultiply"
                );
                for (g, _) in &fs {
                    assert!(g.is_irreducible().unwrap(), "{g} irreducible");
                }
            }
        }
    }

    #[test]
    fn factorization_over_extension_field() {
        // F_9 = GF(3)[z]/(z^2+1); x^2 + 1 splits there as (x - z)(x + z).
        let f3 = gf(3);
        let m = UniPoly::parse(&f3, "z", "z^2 + 1").unwrap();
        let f9 = FieldDescriptor::extension(f3, m, "z").unwrap();
        let f = poly(&f9, "x^2 + 1");
        let fs = f.factor().unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(refold(&fs, f.leading_coeff().unwrap(), &f9), f);
    }

    #[test]
    fn parse_display_roundtrip() {
        let q = qq();
        for s in ["x^2 - 2", "2*x^3 + 1/2*x - 1", "x", "7"] {
            let f = poly(&q, s);
            let g = poly(&q, &f.display_with_var("x"));
            assert_eq!(f, g);
        }
    }
}
