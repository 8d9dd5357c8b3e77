//! Bounded chain complexes of based free modules over a polynomial ring, and
//! the chain maps between them. Every constructor certifies its output: d∘d
//! and the degreewise commuting squares are exact matrix identities, never
//! assumptions.
//!
//! Matrices act on columns: the matrix of d_r has one column per basis
//! element of degree r and one row per basis element of degree r−1, so
//! composition is matrix multiplication in the usual order.
//!
//! Duality convention: `dual(n)` puts `(C_{n−r})*` in degree r with
//! differential `(−1)^{r+1}·(d_{n−r+1})ᵀ`. This is the sign for which the
//! Koszul self-duality `e_S ↦ sign(S, Sᶜ)·χ·e*_{Sᶜ}` of [`koszul`] is an
//! exact chain map.

pub mod koszul;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyring::{PolyRing, Polynomial};

pub use koszul::{
    cone, cone_order, conjugate_by_elementary, koszul, koszul_duality, symmetry_check,
    Conjugation, KoszulComplex,
};

/// Dense matrix with polynomial entries (row-major).
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: PolyRing,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(ring: PolyRing, rows: usize, cols: usize) -> Self {
        let entries = vec![ring.zero(); rows * cols];
        PolyMatrix {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(ring: PolyRing, n: usize) -> Self {
        let mut m = PolyMatrix::zero(ring.clone(), n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn scalar(ring: PolyRing, n: usize, t: &Polynomial) -> Self {
        let mut m = PolyMatrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, t.clone());
        }
        m
    }

    pub fn from_rows(ring: PolyRing, rows: Vec<Vec<Polynomial>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        PolyMatrix {
            ring,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.ring.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(Polynomial::neg).collect(),
        }
    }

    pub fn scale(&self, t: &Polynomial) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.mul(t)).collect(),
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = PolyMatrix::zero(self.ring.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// 2×2 block matrix [[a, b], [c, d]].
    pub fn block2(a: &PolyMatrix, b: &PolyMatrix, c: &PolyMatrix, d: &PolyMatrix) -> PolyMatrix {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let ring = a.ring.clone();
        let mut out = PolyMatrix::zero(ring, a.rows + c.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j).clone());
            }
            for j in 0..b.cols {
                out.set(i, a.cols + j, b.get(i, j).clone());
            }
        }
        for i in 0..c.rows {
            for j in 0..c.cols {
                out.set(a.rows + i, j, c.get(i, j).clone());
            }
            for j in 0..d.cols {
                out.set(a.rows + i, c.cols + j, d.get(i, j).clone());
            }
        }
        out
    }

    /// Laplace-expansion determinant (desk-scale square matrices).
    pub fn det(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        match self.rows {
            0 => self.ring.one(),
            1 => self.get(0, 0).clone(),
            n => {
                let mut acc = self.ring.zero();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let minor = self.submatrix(
                        &(1..n).collect::<Vec<_>>(),
                        &(0..n).filter(|&c| c != j).collect::<Vec<_>>(),
                    );
                    let term = a.mul(&minor.det());
                    acc = if j % 2 == 0 {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
                acc
            }
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.ring.clone(), rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Adjugate; for det = 1 this is the inverse.
    pub fn adjugate(&self) -> PolyMatrix {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return self.clone();
        }
        let mut out = PolyMatrix::zero(self.ring.clone(), n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.submatrix(
                    &(0..n).filter(|&r| r != j).collect::<Vec<_>>(),
                    &(0..n).filter(|&c| c != i).collect::<Vec<_>>(),
                );
                let mut v = minor.det();
                if (i + j) % 2 == 1 {
                    v = v.neg();
                }
                out.set(i, j, v);
            }
        }
        out
    }

    /// If the matrix is t·Id, returns t.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<Polynomial> {
        if self.rows != self.cols {
            return None;
        }
        if self.rows == 0 {
            return Some(self.ring.zero());
        }
        let t = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expect = if i == j { &t } else { &self.ring.zero() } as &Polynomial;
                if self.get(i, j) != expect {
                    return None;
                }
            }
        }
        Some(t)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.rows)
            .map(|i| {
                Value::Array(
                    (0..self.cols)
                        .map(|j| Value::String(self.get(i, j).to_string()))
                        .collect(),
                )
            })
            .collect();
        Value::Array(rows)
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A free module with a fixed ordered basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasedFreeModule {
    ring: PolyRing,
    labels: Vec<String>,
}

impl BasedFreeModule {
    pub fn new(ring: PolyRing, labels: Vec<String>) -> Self {
        BasedFreeModule { ring, labels }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dual(&self) -> BasedFreeModule {
        BasedFreeModule {
            ring: self.ring.clone(),
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
        }
    }
}

/// Bounded complex; `diffs[r]` is d_r : degree r → degree r−1. Validated so
/// that d∘d = 0 holds as an exact matrix identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    ring: PolyRing,
    modules: BTreeMap<i64, BasedFreeModule>,
    diffs: BTreeMap<i64, PolyMatrix>,
}

impl ChainComplex {
    pub fn new(
        ring: PolyRing,
        modules: BTreeMap<i64, BasedFreeModule>,
        diffs: BTreeMap<i64, PolyMatrix>,
    ) -> Result<Self> {
        let c = ChainComplex {
            ring,
            modules,
            diffs,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        for (&r, d) in &self.diffs {
            let src = self.rank_at(r);
            let tgt = self.rank_at(r - 1);
            if d.cols() != src || d.rows() != tgt {
                return Err(Error::RingMismatch(format!(
                    "differential at degree {r} has shape {}x{}, modules need {tgt}x{src}",
                    d.rows(),
                    d.cols()
                )));
            }
        }
        for (&r, d) in &self.diffs {
            if let Some(next) = self.diffs.get(&(r + 1)) {
                if !d.mul(next).is_zero() {
                    return Err(Error::RelationFailed(format!(
                        "d∘d ≠ 0 between degrees {} and {r}",
                        r + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.modules.keys().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.modules.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.modules.keys().next_back().copied()
    }

    pub fn module_at(&self, deg: i64) -> Option<&BasedFreeModule> {
        self.modules.get(&deg)
    }

    pub fn rank_at(&self, deg: i64) -> usize {
        self.modules.get(&deg).map_or(0, BasedFreeModule::rank)
    }

    pub fn diff(&self, deg: i64) -> Option<&PolyMatrix> {
        self.diffs.get(&deg)
    }

    pub fn diff_or_zero(&self, deg: i64) -> PolyMatrix {
        self.diffs.get(&deg).cloned().unwrap_or_else(|| {
            PolyMatrix::zero(self.ring.clone(), self.rank_at(deg - 1), self.rank_at(deg))
        })
    }

    /// The dual complex with `(C_{n−r})*` in degree r and differential
    /// `(−1)^{r+1}·(d_{n−r+1})ᵀ`.
    pub fn dual(&self, n: i64) -> Result<ChainComplex> {
        let mut modules = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        for (&deg, m) in &self.modules {
            modules.insert(n - deg, m.dual());
        }
        let degs: Vec<i64> = modules.keys().copied().collect();
        for &r in &degs {
            if !degs.contains(&(r - 1)) {
                continue;
            }
            let mut d = self.diff_or_zero(n - r + 1).transpose();
            if r.rem_euclid(2) == 0 {
                d = d.neg();
            }
            diffs.insert(r, d);
        }
        ChainComplex::new(self.ring.clone(), modules, diffs)
    }

    /// Debug dump: degrees, bases, and differentials as polynomial strings.
    pub fn to_json(&self) -> Value {
        let mut modules = serde_json::Map::new();
        for (deg, m) in &self.modules {
            modules.insert(
                deg.to_string(),
                Value::Array(
                    m.labels()
                        .iter()
                        .map(|l| Value::String(l.clone()))
                        .collect(),
                ),
            );
        }
        let mut diffs = serde_json::Map::new();
        for (deg, d) in &self.diffs {
            diffs.insert(deg.to_string(), d.to_json());
        }
        json!({
            "field": self.ring.field().to_string(),
            "variables": self.ring.vars(),
            "degrees": self.modules.keys().collect::<Vec<_>>(),
            "modules": Value::Object(modules),
            "differentials": Value::Object(diffs),
        })
    }
}

/// A degreewise map of complexes; construction verifies the commuting
/// squares exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    components: BTreeMap<i64, PolyMatrix>,
}

impl ChainMap {
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        components: BTreeMap<i64, PolyMatrix>,
    ) -> Result<Self> {
        let map = ChainMap {
            source,
            target,
            components,
        };
        map.verify()?;
        Ok(map)
    }

    /// Multiplication by a ring element as a chain self-map.
    pub fn scalar(complex: &ChainComplex, t: &Polynomial) -> Result<Self> {
        let mut components = BTreeMap::new();
        for deg in complex.degrees() {
            let n = complex.rank_at(deg);
            components.insert(deg, PolyMatrix::scalar(complex.ring().clone(), n, t));
        }
        ChainMap::new(complex.clone(), complex.clone(), components)
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn component_at(&self, deg: i64) -> PolyMatrix {
        self.components.get(&deg).cloned().unwrap_or_else(|| {
            PolyMatrix::zero(
                self.source.ring().clone(),
                self.target.rank_at(deg),
                self.source.rank_at(deg),
            )
        })
    }

    pub fn verify(&self) -> Result<()> {
        let mut degs: Vec<i64> = self.source.degrees().collect();
        degs.extend(self.target.degrees());
        degs.sort_unstable();
        degs.dedup();
        for &r in &degs {
            let c = self.component_at(r);
            if c.rows() != self.target.rank_at(r) || c.cols() != self.source.rank_at(r) {
                return Err(Error::RingMismatch(format!(
                    "component at degree {r} has the wrong shape"
                )));
            }
            let lhs = self.target.diff_or_zero(r).mul(&c);
            let rhs = self.component_at(r - 1).mul(&self.source.diff_or_zero(r));
            if lhs != rhs {
                return Err(Error::RelationFailed(format!(
                    "chain map does not commute with differentials at degree {r}"
                )));
            }
        }
        Ok(())
    }

    /// self ∘ other.
    pub fn compose(&self, other: &ChainMap) -> Result<ChainMap> {
        if other.target != self.source {
            return Err(Error::RingMismatch(
                "chain map composition: target/source mismatch".into(),
            ));
        }
        let mut components = BTreeMap::new();
        let mut degs: Vec<i64> = other.source.degrees().collect();
        degs.extend(self.target.degrees());
        degs.sort_unstable();
        degs.dedup();
        for &r in &degs {
            components.insert(r, self.component_at(r).mul(&other.component_at(r)));
        }
        ChainMap::new(other.source.clone(), self.target.clone(), components)
    }

    /// The dual chain map dual(target, n) → dual(source, n), degree r
    /// component `(F_{n−r})ᵀ`.
    pub fn dual_map(&self, n: i64) -> Result<ChainMap> {
        let dsource = self.target.dual(n)?;
        let dtarget = self.source.dual(n)?;
        let mut components = BTreeMap::new();
        for deg in dsource.degrees() {
            components.insert(deg, self.component_at(n - deg).transpose());
        }
        ChainMap::new(dsource, dtarget, components)
    }
}
