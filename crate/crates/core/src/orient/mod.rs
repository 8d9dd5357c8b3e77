//! Local orientations (I, ω) on a free module: validation against the
//! height-n representative conditions, homotopy evaluation at T = 0, 1, the
//! pointwise symmetric form Φ(I, ω), and comparison of two orientations on
//! one ideal through a transition matrix modulo I².
//!
//! ω is encoded by the generator list itself: with P free of rank n and the
//! determinant trivialization fixed, a surjective lift of ω is exactly an
//! n-tuple of generators of I. In the Koszul trivialization of its own lift
//! the form Φ(I, ω) is multiplication by 1 at every reduced point; all
//! nontrivial units come from transporting to a reference presentation,
//! which is done by solving f′ᵢ ≡ Σ Mᵢⱼ fⱼ modulo a Gröbner basis of the
//! squared ideal and reducing det M at each point.

use crate::error::{Error, Result};
use crate::komplex::PolyMatrix;
use crate::polyring::ideal::RegSeqCertificate;
use crate::polyring::{
    is_regular_sequence, minimal_primes_zero_dim, staircase_dimension, verify_decomposition,
    Ideal, Monomial, Point, PolyRing, Polynomial,
};
use crate::scalars::linalg::FieldMatrix;
use crate::scalars::FieldElem;

/// Default degree bound for transition-matrix solves; callers can raise it.
pub const DEFAULT_COMPARISON_DEGREE_BOUND: usize = 4;

/// A local orientation: rank n, generators f₁..f_n, and the ideal they
/// generate. The homotopy flag lives on the ring (its designated variable).
#[derive(Debug, Clone)]
pub struct LocalOrientation {
    ring: PolyRing,
    rank: usize,
    generators: Vec<Polynomial>,
    ideal: Ideal,
}

/// How a validated orientation sits inside the height-restricted set: either
/// the trivial pair (A, 0) (unit ideal) or a height-n representative with a
/// regular-sequence certificate.
#[derive(Debug, Clone)]
pub enum OrientationClass {
    Trivial,
    HeightN {
        height: usize,
        certificate: RegSeqCertificate,
    },
}

#[derive(Debug, Clone)]
pub struct OrientationCertificate {
    pub class: OrientationClass,
}

impl LocalOrientation {
    /// Builds the orientation with the ideal derived from the generators.
    pub fn new(ring: PolyRing, rank: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if rank < 2 {
            return Err(Error::Rejected(format!(
                "orientation rank must be at least 2, got {rank}"
            )));
        }
        if generators.len() != rank {
            return Err(Error::Rejected(format!(
                "expected exactly {rank} generators, got {}",
                generators.len()
            )));
        }
        for g in &generators {
            if g.ring() != &ring {
                return Err(Error::RingMismatch(
                    "orientation generator from another ring".into(),
                ));
            }
        }
        let ideal = Ideal::new(ring.clone(), generators.clone());
        Ok(LocalOrientation {
            ring,
            rank,
            generators,
            ideal,
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn has_homotopy_var(&self) -> bool {
        self.ring.homotopy_var().is_some()
    }

    pub fn is_trivial(&self) -> bool {
        self.ideal.is_unit()
    }

    /// Checks the height-n representative conditions: the stored ideal is the
    /// unit ideal (trivial pair), or height(I) = n with the generator list a
    /// certified regular sequence. height(I) < n is rejected.
    pub fn validate(&self) -> Result<OrientationCertificate> {
        if self.ideal.is_unit() {
            return Ok(OrientationCertificate {
                class: OrientationClass::Trivial,
            });
        }
        let height = self.ideal.height()?;
        if height < self.rank {
            return Err(Error::Rejected(format!(
                "height {height} < n = {}; not a height-n representative",
                self.rank
            )));
        }
        if height > self.rank {
            // n generators cannot produce height > n; surfaced defensively.
            return Err(Error::Rejected(format!(
                "height {height} exceeds the generator count {}",
                self.rank
            )));
        }
        let (ok, certificate) = is_regular_sequence(&self.generators)?;
        if !ok {
            return Err(Error::Rejected(format!(
                "generators are not a regular sequence: {certificate:?}"
            )));
        }
        Ok(OrientationCertificate {
            class: OrientationClass::HeightN {
                height,
                certificate,
            },
        })
    }

    /// Substitutes the homotopy variable by a scalar (typically 0 or 1) and
    /// re-validates the evaluated orientation.
    pub fn evaluate(&self, value: &FieldElem) -> Result<(LocalOrientation, OrientationCertificate)> {
        let var = self.ring.homotopy_var().ok_or_else(|| {
            Error::Rejected("ring has no designated homotopy variable".into())
        })?;
        let generators = self
            .generators
            .iter()
            .map(|g| g.substitute(var, value))
            .collect::<Result<Vec<_>>>()?;
        let target_ring = self.ring.remove_var(var)?;
        let evaluated = LocalOrientation::new(target_ring, self.rank, generators)?;
        let cert = evaluated.validate()?;
        Ok((evaluated, cert))
    }
}

/// Φ(I, ω) presented pointwise: at each reduced point of V(I) the rank-1
/// form ⟨unit⟩ over the residue field, expressed in the Koszul
/// trivialization of the orientation's own lift, where the unit is 1.
#[derive(Debug, Clone)]
pub struct PointwiseForm {
    pub points: Vec<(Point, FieldElem)>,
}

/// Resolves the decomposition for an orientation: the supplied one
/// (verified) or the shape-position decomposition of the ideal.
pub fn resolve_points(o: &LocalOrientation, supplied: Option<&[Ideal]>) -> Result<Vec<Point>> {
    match supplied {
        Some(primes) => verify_decomposition(o.ideal(), primes),
        None => minimal_primes_zero_dim(o.ideal()),
    }
}

/// The pointwise symmetric form of a validated height-n orientation on a
/// reduced zero-dimensional vanishing locus. The stored unit is 1 at every
/// point: the canonical generator presentation is its own trivialization.
pub fn phi_form(o: &LocalOrientation, points: &[Point]) -> Result<PointwiseForm> {
    let cert = o.validate()?;
    if matches!(cert.class, OrientationClass::Trivial) {
        return Ok(PointwiseForm { points: Vec::new() });
    }
    // Reducedness across the whole locus: multiplicities 1 and residue
    // degrees accounting for the full coordinate ring.
    let mut degree_sum = 0usize;
    for (point, _) in points.iter().map(|p| (p, ())) {
        if point.multiplicity() != 1 {
            return Err(Error::NonReducedPoint {
                point: point.key().to_string(),
                length: point.multiplicity(),
            });
        }
        if !point.prime_ideal().contains_ideal(o.ideal()) {
            return Err(Error::BadDecomposition(format!(
                "point {} does not lie on V(I)",
                point.key()
            )));
        }
        degree_sum += point.residue_degree();
    }
    let dim = staircase_dimension(o.ideal())?;
    if degree_sum != dim {
        return Err(Error::BadDecomposition(format!(
            "decomposition covers degree {degree_sum} of a length-{dim} locus"
        )));
    }
    let one_units = points
        .iter()
        .map(|p| (p.clone(), p.residue_field().one()))
        .collect();
    Ok(PointwiseForm { points: one_units })
}

/// All monomials of total degree ≤ bound, in a deterministic order.
fn monomials_up_to(ring: &PolyRing, bound: usize) -> Vec<Monomial> {
    let n = ring.nvars();
    let mut out = vec![Monomial::one(n)];
    for _ in 0..bound {
        let mut next = Vec::new();
        let start = out.len();
        let _ = start;
        for m in &out {
            for v in 0..n {
                let mut e = m.clone();
                e.0[v] += 1;
                if !next.contains(&e) && !out.contains(&e) {
                    next.push(e);
                }
            }
        }
        out.extend(next);
    }
    out.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| a.0.cmp(&b.0))
    });
    out.dedup();
    out
}

/// Solves targetᵢ ≡ Σⱼ Mᵢⱼ·refⱼ modulo the given ideal, with M entries of
/// total degree ≤ bound, by equating normal-form coefficients. Returns None
/// when no bounded solution exists.
pub fn solve_presentation_matrix(
    targets: &[Polynomial],
    refs: &[Polynomial],
    modulus: &Ideal,
    bound: usize,
) -> Result<Option<PolyMatrix>> {
    let ring = modulus.ring().clone();
    let field = ring.field().clone();
    let monomials = monomials_up_to(&ring, bound);
    // Column polynomials nf(μ·refⱼ) for every unknown (j, μ).
    let mut columns: Vec<Polynomial> = Vec::with_capacity(refs.len() * monomials.len());
    for r in refs {
        for mu in &monomials {
            columns.push(modulus.normal_form(&r.mul_term(mu, &field.one())));
        }
    }
    // Equation space: all monomials appearing in any column or target.
    let mut eq_monomials: Vec<Monomial> = Vec::new();
    let mut collect = |p: &Polynomial, eq: &mut Vec<Monomial>| {
        for (m, _) in p.terms() {
            if !eq.contains(m) {
                eq.push(m.clone());
            }
        }
    };
    let targets_nf: Vec<Polynomial> = targets.iter().map(|t| modulus.normal_form(t)).collect();
    for c in &columns {
        collect(c, &mut eq_monomials);
    }
    for t in &targets_nf {
        collect(t, &mut eq_monomials);
    }
    eq_monomials.sort_by(|a, b| ring.cmp_monomials(a, b));

    let coeff_of = |p: &Polynomial, m: &Monomial| -> FieldElem {
        p.terms()
            .iter()
            .find(|(tm, _)| tm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| field.zero())
    };
    let mut system = FieldMatrix::zero(field.clone(), eq_monomials.len(), columns.len());
    for (row, m) in eq_monomials.iter().enumerate() {
        for (col, c) in columns.iter().enumerate() {
            system.set(row, col, coeff_of(c, m));
        }
    }

    let mut out = PolyMatrix::zero(ring.clone(), targets.len(), refs.len());
    for (i, t) in targets_nf.iter().enumerate() {
        let rhs: Vec<FieldElem> = eq_monomials.iter().map(|m| coeff_of(t, m)).collect();
        let Some(solution) = system.solve(&rhs)? else {
            return Ok(None);
        };
        for (j, _) in refs.iter().enumerate() {
            let mut entry = ring.zero();
            for (k, mu) in monomials.iter().enumerate() {
                let c = &solution[j * monomials.len() + k];
                if !c.is_zero() {
                    entry = entry.add(&ring.monomial(mu.clone(), c.clone()));
                }
            }
            out.set(i, j, entry);
        }
    }
    Ok(Some(out))
}

/// The unit comparing a presentation h₁..h_n of an ideal that locally equals
/// the point's maximal ideal against the point's canonical triangular
/// presentation: det M mod ℘ for h ≡ M·s mod ℘².
pub fn presentation_unit(gens: &[Polynomial], point: &Point, bound: usize) -> Result<FieldElem> {
    let prime = point.prime_ideal();
    let prime_sq = prime.square();
    let m = solve_presentation_matrix(gens, point.shape_gens(), &prime_sq, bound)?
        .ok_or(Error::NoComparisonMatrix { bound })?;
    let det = m.det();
    let unit = point.reduce(&det)?;
    if unit.is_zero() {
        return Err(Error::NonReducedPoint {
            point: point.key().to_string(),
            length: point.multiplicity().max(2),
        });
    }
    Ok(unit)
}

/// Comparison of two orientations on the same ideal: the transition matrix
/// M with f′ᵢ ≡ Σ Mᵢⱼ fⱼ mod I², its determinant, and the determinant's
/// residue at each supplied point. The classes of the second orientation are
/// ⟨det M⟩ times those of the first.
#[derive(Debug, Clone)]
pub struct OrientationComparison {
    pub matrix: PolyMatrix,
    pub det: Polynomial,
    pub point_units: Vec<(Point, FieldElem)>,
}

pub fn compare_orientations(
    first: &LocalOrientation,
    second: &LocalOrientation,
    points: &[Point],
    bound: usize,
) -> Result<OrientationComparison> {
    first.validate()?;
    second.validate()?;
    if first.ideal() != second.ideal() {
        return Err(Error::Rejected(
            "orientations do not generate the same ideal".into(),
        ));
    }
    let ideal_sq = first.ideal().square();
    let matrix = solve_presentation_matrix(
        second.generators(),
        first.generators(),
        &ideal_sq,
        bound,
    )?
    .ok_or(Error::NoComparisonMatrix { bound })?;
    let det = matrix.det();
    let mut point_units = Vec::with_capacity(points.len());
    for p in points {
        let unit = p.reduce(&det)?;
        if unit.is_zero() {
            return Err(Error::NoComparisonMatrix { bound });
        }
        point_units.push((p.clone(), unit));
    }
    Ok(OrientationComparison {
        matrix,
        det,
        point_units,
    })
}
