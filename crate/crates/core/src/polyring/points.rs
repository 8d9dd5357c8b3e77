//! Zero-dimensional points: decomposing a zero-dimensional ideal into its
//! minimal primes with presented residue fields.
//!
//! The supported route is shape position: the reduced lex basis must be
//! triangular with every non-last variable appearing linearly and a single
//! univariate polynomial in the last variable. Factoring that univariate
//! yields the points; each one carries its residue field (the base field or a
//! simple extension), the reduction map, the local multiplicity, and a
//! canonical triangular presentation of its maximal ideal used as the
//! reference trivialization everywhere downstream.
//!
//! Users may instead supply a decomposition, which is verified (each claimed
//! prime is maximal and in shape position, contains the ideal, the primes are
//! pairwise comaximal, and the residue degrees sum to the staircase dimension,
//! which certifies completeness and reducedness).

use crate::error::{Error, Result};
use crate::scalars::unipoly::UniPoly;
use crate::scalars::{FieldDescriptor, FieldElem};

use super::{Ideal, Monomial, MonomialOrder, PolyRing, Polynomial};

/// A closed point of the ambient affine space, with a presented residue field.
#[derive(Debug, Clone)]
pub struct Point {
    ambient: PolyRing,
    /// Triangular generators of the maximal ideal, ordered by leading
    /// variable; the canonical presentation of the point.
    shape_gens: Vec<Polynomial>,
    residue_field: FieldDescriptor,
    /// Image of each ring variable in the residue field.
    coords: Vec<FieldElem>,
    /// Local length of the decomposed ideal at this point (1 = reduced).
    multiplicity: usize,
    key: String,
}

impl Point {
    pub fn ambient(&self) -> &PolyRing {
        &self.ambient
    }

    pub fn shape_gens(&self) -> &[Polynomial] {
        &self.shape_gens
    }

    pub fn residue_field(&self) -> &FieldDescriptor {
        &self.residue_field
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    /// Canonical identity string (the triangular presentation).
    pub fn key(&self) -> &str {
        &self.key
    }

    pub fn prime_ideal(&self) -> Ideal {
        Ideal::new(self.ambient.clone(), self.shape_gens.clone())
    }

    /// The reduction map A → k(point).
    pub fn reduce(&self, f: &Polynomial) -> Result<FieldElem> {
        f.evaluate(&self.coords, &self.residue_field)
    }

    pub fn residue_degree(&self) -> usize {
        match self.residue_field.kind() {
            crate::scalars::FieldKind::Extension(ext) => ext.degree(),
            _ => 1,
        }
    }

    fn with_multiplicity(mut self, m: usize) -> Self {
        self.multiplicity = m;
        self
    }
}

fn poly_to_unipoly(p: &Polynomial, var: usize) -> Result<UniPoly> {
    let field = p.ring().field().clone();
    let mut coeffs: Vec<FieldElem> = Vec::new();
    for (m, c) in p.terms() {
        if m.support().any(|v| v != var) {
            return Err(Error::NotShapePosition(format!(
                "`{p}` is not univariate in {}",
                p.ring().vars()[var]
            )));
        }
        let e = m.0[var] as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, field.zero());
        }
        coeffs[e] = c.clone();
    }
    Ok(UniPoly::from_coeffs(field, coeffs))
}

fn unipoly_to_poly(u: &UniPoly, ring: &PolyRing, var: usize) -> Polynomial {
    let mut acc = ring.zero();
    for (e, c) in u.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut mon = Monomial::one(ring.nvars());
        mon.0[var] = e as u32;
        acc = acc.add(&ring.monomial(mon, c.clone()));
    }
    acc
}

/// The triangular data extracted from a shape-position lex basis: one linear
/// polynomial per non-last variable (tails univariate in the last variable)
/// plus the univariate part.
struct ShapeBasis {
    tails: Vec<UniPoly>,
    univariate: UniPoly,
}

fn extract_shape(ideal: &Ideal) -> Result<ShapeBasis> {
    let ring = ideal.ring();
    let m = ring.nvars();
    let lex_ring = ring.with_order(MonomialOrder::Lex)?;
    let lex_ideal = ideal.into_ring(&lex_ring)?;
    let gb = lex_ideal.groebner_basis();
    if gb.len() != m {
        return Err(Error::NotShapePosition(format!(
            "expected {m} lex basis elements, found {}",
            gb.len()
        )));
    }
    let mut slots: Vec<Option<&Polynomial>> = vec![None; m];
    for g in gb {
        let lt = g.leading_monomial().unwrap();
        let lead_var = lt
            .support()
            .min()
            .expect("nonconstant basis element in a proper ideal");
        if slots[lead_var].is_some() {
            return Err(Error::NotShapePosition(format!(
                "two basis elements lead with {}",
                ring.vars()[lead_var]
            )));
        }
        slots[lead_var] = Some(g);
    }
    let last = m - 1;
    let mut tails = Vec::with_capacity(m.saturating_sub(1));
    for (i, slot) in slots.iter().enumerate().take(last) {
        let g = slot.ok_or_else(|| {
            Error::NotShapePosition(format!("no basis element leads with {}", ring.vars()[i]))
        })?;
        let lt = g.leading_monomial().unwrap();
        if lt.total_degree() != 1 {
            return Err(Error::NotShapePosition(format!(
                "`{g}` is not linear in its leading variable {}",
                ring.vars()[i]
            )));
        }
        let tail = g.sub(&lex_ring.var(i));
        tails.push(poly_to_unipoly(&tail, last)?);
    }
    let g_last = slots[last].ok_or_else(|| {
        Error::NotShapePosition(format!(
            "no univariate basis element in {}",
            ring.vars()[last]
        ))
    })?;
    let univariate = poly_to_unipoly(g_last, last)?;
    Ok(ShapeBasis {
        tails,
        univariate,
    })
}

fn point_from_factor(
    ring: &PolyRing,
    shape: &ShapeBasis,
    q: &UniPoly,
    mult: usize,
) -> Result<Point> {
    let m = ring.nvars();
    let last = m - 1;
    let base = ring.field().clone();
    let deg = q.degree().unwrap_or(0);
    let (residue_field, alpha) = if deg == 1 {
        (base.clone(), q.coeff(0).neg())
    } else {
        let ext = FieldDescriptor::extension(base.clone(), q.clone(), "z")?;
        let z = ext.generator()?;
        (ext, z)
    };
    let mut coords = vec![residue_field.zero(); m];
    coords[last] = alpha.clone();
    let mut shape_gens = Vec::with_capacity(m);
    for (i, tail) in shape.tails.iter().enumerate() {
        coords[i] = tail.eval_in(&alpha)?.neg();
        let reduced_tail = tail.rem(q)?;
        let gen = ring.var(i).add(&unipoly_to_poly(&reduced_tail, ring, last));
        shape_gens.push(gen);
    }
    shape_gens.push(unipoly_to_poly(q, ring, last));
    let key = shape_gens
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join("; ");
    Ok(Point {
        ambient: ring.clone(),
        shape_gens,
        residue_field,
        coords,
        multiplicity: mult,
        key,
    })
}

/// Minimal primes of a zero-dimensional ideal in shape position, with local
/// multiplicities. Points come back sorted by their canonical keys.
pub fn minimal_primes_zero_dim(ideal: &Ideal) -> Result<Vec<Point>> {
    let ring = ideal.ring();
    let m = ring.nvars();
    let h = ideal.height()?;
    if h != m {
        return Err(Error::NotZeroDimensional { height: h, nvars: m });
    }
    let shape = extract_shape(ideal)?;
    let mut points = Vec::new();
    for (q, mult) in shape.univariate.factor()? {
        points.push(point_from_factor(ring, &shape, &q, mult)?);
    }
    points.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(points)
}

/// Number of standard monomials of the leading-term ideal: the k-vector-space
/// dimension of A/I for zero-dimensional I.
pub fn staircase_dimension(ideal: &Ideal) -> Result<usize> {
    if ideal.is_unit() {
        return Ok(0);
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let lts: Vec<&Monomial> = ideal
        .groebner_basis()
        .iter()
        .map(|p| p.leading_monomial().unwrap())
        .collect();
    // A pure power of each variable must appear among the leading terms,
    // bounding the staircase box.
    let mut bounds: Vec<Option<u32>> = vec![None; n];
    for lt in &lts {
        let mut support = lt.support();
        if let (Some(v), None) = (support.next(), support.next()) {
            let e = lt.0[v];
            bounds[v] = Some(bounds[v].map_or(e, |b| b.min(e)));
        }
    }
    let bounds: Vec<u32> = bounds
        .into_iter()
        .collect::<Option<Vec<u32>>>()
        .ok_or_else(|| Error::NotZeroDimensional {
            height: ideal.height().unwrap_or(0),
            nvars: n,
        })?;
    let mut count = 0usize;
    let mut cursor = vec![0u32; n];
    'outer: loop {
        let mon = Monomial(cursor.clone());
        if !lts.iter().any(|lt| lt.divides(&mon)) {
            count += 1;
        }
        for i in 0..n {
            cursor[i] += 1;
            if cursor[i] < bounds[i] {
                continue 'outer;
            }
            cursor[i] = 0;
        }
        break;
    }
    Ok(count)
}

/// Verify a user-supplied decomposition of a zero-dimensional ideal into
/// maximal ideals: each claimed prime must be maximal in shape position,
/// contain the ideal, be pairwise comaximal with the others, and the residue
/// degrees must sum to dim_k A/I (which certifies completeness and that the
/// ideal is reduced). Returns the presented points, multiplicity 1 each.
pub fn verify_decomposition(ideal: &Ideal, primes: &[Ideal]) -> Result<Vec<Point>> {
    let ring = ideal.ring();
    let m = ring.nvars();
    let h = ideal.height()?;
    if h != m {
        return Err(Error::NotZeroDimensional { height: h, nvars: m });
    }
    if primes.is_empty() {
        return Err(Error::BadDecomposition("empty decomposition".into()));
    }
    let mut points = Vec::new();
    for (idx, prime) in primes.iter().enumerate() {
        if prime.ring() != ring {
            return Err(Error::BadDecomposition(format!(
                "prime #{idx} lives in a different ring"
            )));
        }
        let mut pts = minimal_primes_zero_dim(prime)?;
        if pts.len() != 1 || pts[0].multiplicity != 1 {
            return Err(Error::BadDecomposition(format!(
                "claimed prime #{idx} is not maximal (it decomposes further)"
            )));
        }
        if !prime.contains_ideal(ideal) {
            return Err(Error::BadDecomposition(format!(
                "the ideal is not contained in claimed prime #{idx}"
            )));
        }
        points.push(pts.pop().unwrap().with_multiplicity(1));
    }
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            if !primes[i].sum(&primes[j]).is_unit() {
                return Err(Error::BadDecomposition(format!(
                    "primes #{i} and #{j} are not comaximal"
                )));
            }
        }
    }
    let degree_sum: usize = points.iter().map(Point::residue_degree).sum();
    let dim = staircase_dimension(ideal)?;
    if degree_sum != dim {
        return Err(Error::BadDecomposition(format!(
            "residue degrees sum to {degree_sum} but dim A/I = {dim}; \
             the decomposition is incomplete or the ideal is not reduced"
        )));
    }
    points.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(points)
}
