//! Dense rational matrices: row reduction, solving, kernels, inverses.

use crate::error::HopfError;
use crate::rat::Rat;
use crate::sparse::SparseVec;
use crate::subspace::Subspace;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += &(a * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place reduction to RREF; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.at(r, c).inv();
            for j in c..self.cols {
                let v = self.at(r, j) * &inv;
                *self.at_mut(r, j) = v;
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let f = self.at(i, c).clone();
                    for j in c..self.cols {
                        let v = self.at(i, j) - &(&f * self.at(r, j));
                        *self.at_mut(i, j) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Some solution x of self * x = b, or None if the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>, HopfError> {
        if b.len() != self.rows {
            return Err(HopfError::DimensionMismatch {
                context: format!("solve: {} rows vs length-{} right-hand side", self.rows, b.len()),
            });
        }
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = b[i].clone();
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Canonical kernel {x : self * x = 0}.
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut entries = vec![(f, Rat::one())];
            for (r, &c) in pivots.iter().enumerate() {
                let v = m.at(r, f);
                if !v.is_zero() {
                    entries.push((c, -v));
                }
            }
            basis.push(SparseVec::from_entries(entries));
        }
        Subspace::from_spans(self.cols, &basis)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = Rat::one();
        }
        let pivots = aug.rref_in_place();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| k != c) {
            return None;
        }
        let mut out = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                *out.at_mut(i, j) = aug.at(i, n + j).clone();
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Rat::from_int(x)).collect()).collect(),
        )
    }

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::from_int(x)).collect()
    }

    #[test]
    fn solve_identity() {
        let a = Matrix::identity(2);
        assert_eq!(a.solve(&v(&[1, 2])).unwrap(), Some(v(&[1, 2])));
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(a.solve(&v(&[1, 0])).unwrap(), None);
    }

    #[test]
    fn solve_exact_division() {
        let a = m(&[&[2]]);
        assert_eq!(a.solve(&v(&[1])).unwrap(), Some(vec![Rat::new(1, 2)]));
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = Matrix::identity(2);
        assert!(a.solve(&v(&[1, 2, 3])).is_err());
    }

    #[test]
    fn solution_satisfies_system() {
        let a = m(&[&[1, 2, 3], &[2, 4, 7], &[0, 1, -1]]);
        let b = v(&[6, 13, 2]);
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(a.apply(&x), b);
    }

    #[test]
    fn kernel_zero_matrix_is_full() {
        let a = Matrix::zero(2, 2);
        assert_eq!(a.kernel().dim(), 2);
    }

    #[test]
    fn kernel_identity_is_zero() {
        assert_eq!(Matrix::identity(3).kernel().dim(), 0);
    }

    #[test]
    fn kernel_rank_nullity() {
        let a = m(&[&[1, 1]]);
        let k = a.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains_vec(&SparseVec::from_dense(&v(&[1, -1]))));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 1], &[2, 2]]).inverse().is_none());
    }
}
