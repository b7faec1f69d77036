//! Canonical subspaces of Q^n.
//!
//! A subspace is stored as the reduced row echelon basis of its span, so
//! structural equality coincides with equality of subspaces.

use crate::error::HopfError;
use crate::sparse::{rref_from_generators, RrefOptions, SparseRref, SparseVec};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    /// RREF rows ordered by pivot column.
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: (0..ambient).map(SparseVec::unit).collect() }
    }

    pub fn from_spans(ambient: usize, spans: &[SparseVec]) -> Self {
        Self::from_spans_with(ambient, spans, RrefOptions::default())
    }

    pub fn from_spans_with(ambient: usize, spans: &[SparseVec], opts: RrefOptions) -> Self {
        rref_from_generators(ambient, spans, opts).into()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.basis.iter().map(|r| r.leading().expect("nonzero row").0).collect()
    }

    pub fn contains_vec(&self, v: &SparseVec) -> bool {
        self.to_rref().contains(v)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let rref = self.to_rref();
        other.basis.iter().all(|row| rref.contains(row))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, HopfError> {
        self.check_ambient(other)?;
        let mut rref = self.to_rref();
        for row in &other.basis {
            rref.insert(row);
        }
        Ok(rref.into())
    }

    /// Intersection via the Zassenhaus block construction: reduce the rows
    /// (u | u) and (v | 0); basis rows supported entirely on the right half
    /// carry the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, HopfError> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut rref = SparseRref::new(2 * n);
        for u in &self.basis {
            rref.insert(&u.add(&u.map_indices(|i| i + n)));
        }
        for v in &other.basis {
            rref.insert(v);
        }
        let out: Vec<SparseVec> = rref
            .rows_in_order()
            .into_iter()
            .filter(|row| row.leading().is_some_and(|(lead, _)| lead >= n))
            .map(|row| row.map_indices(|i| i - n))
            .collect();
        Ok(Subspace::from_spans(n, &out))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), HopfError> {
        if self.ambient != other.ambient {
            return Err(HopfError::DimensionMismatch {
                context: format!(
                    "subspace ambient dimensions differ: {} vs {}",
                    self.ambient, other.ambient
                ),
            });
        }
        Ok(())
    }

    fn to_rref(&self) -> SparseRref {
        let mut rref = SparseRref::new(self.ambient);
        for row in &self.basis {
            rref.insert(row);
        }
        rref
    }
}

impl From<SparseRref> for Subspace {
    fn from(rref: SparseRref) -> Self {
        Subspace { ambient: rref.ambient(), basis: rref.rows_in_order() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::Rat;

    fn sv(pairs: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_entries(pairs.iter().map(|&(i, c)| (i, Rat::from_int(c))).collect())
    }

    #[test]
    fn axes_sum_and_intersect() {
        let u = Subspace::from_spans(2, &[sv(&[(0, 1)])]);
        let v = Subspace::from_spans(2, &[sv(&[(1, 1)])]);
        assert_eq!(u.sum(&v).unwrap(), Subspace::full(2));
        assert_eq!(u.intersect(&v).unwrap(), Subspace::zero(2));
    }

    #[test]
    fn equality_is_canonical() {
        let u = Subspace::from_spans(3, &[sv(&[(0, 2), (1, 2)]), sv(&[(1, 1), (2, 1)])]);
        let v = Subspace::from_spans(3, &[sv(&[(0, 1), (2, -1)]), sv(&[(1, 3), (2, 3)])]);
        assert_eq!(u, v);
    }

    #[test]
    fn containment_of_line_in_plane() {
        let u = Subspace::from_spans(2, &[sv(&[(0, 1), (1, 1)])]);
        let v = Subspace::full(2);
        assert!(v.contains(&u));
        assert!(!u.contains(&v));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let u = Subspace::full(2);
        let v = Subspace::full(3);
        assert!(u.sum(&v).is_err());
        assert!(u.intersect(&v).is_err());
    }

    #[test]
    fn intersect_planes_in_three_space() {
        let u = Subspace::from_spans(3, &[sv(&[(0, 1)]), sv(&[(1, 1)])]);
        let v = Subspace::from_spans(3, &[sv(&[(1, 1)]), sv(&[(2, 1)])]);
        let w = u.intersect(&v).unwrap();
        assert_eq!(w.dim(), 1);
        assert!(w.contains_vec(&sv(&[(1, 5)])));
    }
}
