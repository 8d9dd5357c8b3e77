//! Small dense matrices over an exact field: Gaussian elimination, inverses,
//! determinants and linear solves. Used by the quadratic-form machinery and
//! the presentation-matrix solver; everything is desk-scale.

use super::{FieldDescriptor, FieldElem};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl FieldMatrix {
    pub fn zero(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        FieldMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = FieldMatrix::zero(field.clone(), n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldDescriptor, rows: Vec<Vec<FieldElem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        FieldMatrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut out = FieldMatrix::zero(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = FieldMatrix::zero(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn det(&self) -> FieldElem {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero());
            let Some(pivot) = pivot else {
                return self.field.zero();
            };
            if pivot != col {
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(pivot, j).clone();
                    m.set(col, j, b);
                    m.set(pivot, j, a);
                }
                det = det.neg();
            }
            let piv = m.get(col, col).clone();
            det = det.mul(&piv);
            let inv = piv.inverse().expect("pivot nonzero");
            for r in col + 1..n {
                let factor = m.get(r, col).mul(&inv);
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = m.get(r, j).sub(&factor.mul(m.get(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<FieldMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = FieldMatrix::identity(self.field.clone(), n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let (a, b) = (m.get(col, j).clone(), m.get(pivot, j).clone());
                    m.set(col, j, b);
                    m.set(pivot, j, a);
                    let (a, b) = (inv.get(col, j).clone(), inv.get(pivot, j).clone());
                    inv.set(col, j, b);
                    inv.set(pivot, j, a);
                }
            }
            let piv_inv = m.get(col, col).inverse().ok()?;
            for j in 0..n {
                m.set(col, j, m.get(col, j).mul(&piv_inv));
                inv.set(col, j, inv.get(col, j).mul(&piv_inv));
            }
            for r in 0..n {
                if r == col || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..n {
                    let v = m.get(r, j).sub(&factor.mul(m.get(col, j)));
                    m.set(r, j, v);
                    let v = inv.get(r, j).sub(&factor.mul(inv.get(col, j)));
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }

    /// One particular solution of `self · x = rhs`, with free variables set to
    /// zero; `Ok(None)` when the system is inconsistent.
    pub fn solve(&self, rhs: &[FieldElem]) -> Result<Option<Vec<FieldElem>>> {
        if rhs.len() != self.rows {
            return Err(Error::FieldMismatch(
                "right-hand side length does not match row count".into(),
            ));
        }
        let mut m = self.clone();
        let mut b: Vec<FieldElem> = rhs.to_vec();
        let mut pivot_cols = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for j in 0..self.cols {
                    let (a, c) = (m.get(row, j).clone(), m.get(pr, j).clone());
                    m.set(row, j, c);
                    m.set(pr, j, a);
                }
                b.swap(row, pr);
            }
            let inv = m.get(row, col).inverse()?;
            for j in 0..self.cols {
                m.set(row, j, m.get(row, j).mul(&inv));
            }
            b[row] = b[row].mul(&inv);
            for r in 0..self.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..self.cols {
                    let v = m.get(r, j).sub(&factor.mul(m.get(row, j)));
                    m.set(r, j, v);
                }
                b[r] = b[r].sub(&factor.mul(&b[row]));
            }
            pivot_cols.push((row, col));
            row += 1;
            if row == self.rows {
                break;
            }
        }
        for r in row..self.rows {
            if !b[r].is_zero() {
                return Ok(None);
            }
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, c) in pivot_cols {
            x[c] = b[r].clone();
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq() -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn mat(field: &FieldDescriptor, rows: &[&[i64]]) -> FieldMatrix {
        FieldMatrix::from_rows(
            field.clone(),
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_integer(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn det_and_inverse() {
        let q = qq();
        let m = mat(&q, &[&[1, 2], &[3, 5]]);
        assert_eq!(m.det(), q.from_integer(-1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FieldMatrix::identity(q.clone(), 2));
        let singular = mat(&q, &[&[1, 2], &[2, 4]]);
        assert!(singular.det().is_zero());
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let q = qq();
        let m = mat(&q, &[&[1, 1], &[1, 2], &[2, 3]]);
        let rhs = vec![q.from_integer(3), q.from_integer(4), q.from_integer(7)];
        let x = m.solve(&rhs).unwrap().unwrap();
        assert_eq!(x, vec![q.from_integer(2), q.from_integer(1)]);
        let bad = vec![q.from_integer(3), q.from_integer(4), q.from_integer(0)];
        assert!(m.solve(&bad).unwrap().is_none());
    }

    #[test]
    fn solve_underdetermined_returns_particular() {
        let q = qq();
        let m = mat(&q, &[&[1, 1, 1]]);
        let x = m.solve(&[q.from_integer(5)]).unwrap().unwrap();
        // Free variables pinned to zero.
        assert_eq!(
            x,
            vec![q.from_integer(5), q.zero(), q.zero()]
        );
    }
}
