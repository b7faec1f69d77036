//! Finite-dimensional associative algebras given by structure constants,
//! subalgebra embeddings, centers and the trace-form semisimplicity test.

use std::rc::Rc;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{HopfError, Witness};
use crate::matrix::Matrix;
use crate::rat::Rat;
use crate::sparse::{SparseRref, SparseVec};
use crate::subspace::Subspace;

static NEXT_ALGEBRA_ID: AtomicUsize = AtomicUsize::new(0);

/// A linear map stored column-wise: `cols[j]` is the image of basis vector j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    out_dim: usize,
    cols: Vec<SparseVec>,
}

impl SparseMat {
    pub fn new(out_dim: usize, cols: Vec<SparseVec>) -> Self {
        SparseMat { out_dim, cols }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat { out_dim: n, cols: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn zero(out_dim: usize, in_dim: usize) -> Self {
        SparseMat { out_dim, cols: vec![SparseVec::zero(); in_dim] }
    }

    pub fn in_dim(&self) -> usize {
        self.cols.len()
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::zero();
        for (j, c) in v.iter() {
            acc = acc.axpy(c, &self.cols[*j]);
        }
        acc
    }

    /// self ∘ other
    pub fn compose(&self, other: &SparseMat) -> SparseMat {
        SparseMat {
            out_dim: self.out_dim,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add_scaled(&self, c: &Rat, other: &SparseMat) -> SparseMat {
        debug_assert_eq!(self.cols.len(), other.cols.len());
        SparseMat {
            out_dim: self.out_dim,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| a.axpy(c, b))
                .collect(),
        }
    }

    /// Σ coeffs_i · mats[i]
    pub fn lin_comb(coeffs: &SparseVec, mats: &[SparseMat], out_dim: usize, in_dim: usize) -> Self {
        let mut acc = SparseMat::zero(out_dim, in_dim);
        for (i, c) in coeffs.iter() {
            acc = acc.add_scaled(c, &mats[*i]);
        }
        acc
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zero(self.out_dim, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.iter() {
                *m.at_mut(*i, j) = c.clone();
            }
        }
        m
    }

    pub fn from_dense(m: &Matrix) -> Self {
        let cols = (0..m.cols())
            .map(|j| {
                SparseVec::from_entries(
                    (0..m.rows())
                        .filter(|&i| !m.at(i, j).is_zero())
                        .map(|i| (i, m.at(i, j).clone()))
                        .collect(),
                )
            })
            .collect();
        SparseMat { out_dim: m.rows(), cols }
    }
}

/// A unital associative algebra with exact rational structure constants.
#[derive(Debug)]
pub struct StructureAlgebra {
    id: usize,
    pub dim: usize,
    pub unit: SparseVec,
    /// mult[i][j] = coordinates of b_i · b_j
    mult: Vec<Vec<SparseVec>>,
    pub labels: Vec<String>,
}

impl StructureAlgebra {
    pub fn new(
        dim: usize,
        unit: SparseVec,
        mult: Vec<Vec<SparseVec>>,
        labels: Vec<String>,
    ) -> Result<Rc<Self>, HopfError> {
        let alg = Self::new_unchecked(dim, unit, mult, labels);
        alg.validate()?;
        Ok(alg)
    }

    /// Wraps without validating; used internally for constructions whose
    /// axioms are certified by the calling site or checked afterwards.
    pub fn new_unchecked(
        dim: usize,
        unit: SparseVec,
        mult: Vec<Vec<SparseVec>>,
        labels: Vec<String>,
    ) -> Rc<Self> {
        assert_eq!(mult.len(), dim);
        assert!(mult.iter().all(|row| row.len() == dim));
        let labels = if labels.is_empty() {
            (0..dim).map(|i| format!("b{i}")).collect()
        } else {
            labels
        };
        assert_eq!(labels.len(), dim);
        Rc::new(StructureAlgebra {
            id: NEXT_ALGEBRA_ID.fetch_add(1, Ordering::Relaxed),
            dim,
            unit,
            mult,
            labels,
        })
    }

    pub fn id(&self) -> usize {
        self.id
    }

    pub fn validate(&self) -> Result<(), HopfError> {
        for i in 0..self.dim {
            let lhs = self.mul_vec(&self.unit, &SparseVec::unit(i));
            let rhs = self.mul_vec(&SparseVec::unit(i), &self.unit);
            let e = SparseVec::unit(i);
            if lhs != e || rhs != e {
                return Err(HopfError::AlgebraAxiom {
                    axiom: "unit".into(),
                    witness: Witness {
                        indices: vec![i],
                        lhs: lhs.iter().cloned().collect(),
                        rhs: rhs.iter().cloned().collect(),
                    },
                });
            }
        }
        let dim = self.dim;
        let failure = (0..dim * dim).into_par_iter().find_map_first(|ij| {
            let (i, j) = (ij / dim, ij % dim);
            let ij_prod = &self.mult[i][j];
            for k in 0..dim {
                let lhs = self.mul_vec(ij_prod, &SparseVec::unit(k));
                let rhs = self.mul_vec(&SparseVec::unit(i), &self.mult[j][k]);
                if lhs != rhs {
                    return Some((i, j, k, lhs, rhs));
                }
            }
            None
        });
        if let Some((i, j, k, lhs, rhs)) = failure {
            return Err(HopfError::AlgebraAxiom {
                axiom: "associativity".into(),
                witness: Witness {
                    indices: vec![i, j, k],
                    lhs: lhs.iter().cloned().collect(),
                    rhs: rhs.iter().cloned().collect(),
                },
            });
        }
        Ok(())
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn mul_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let c = a * b;
                for (k, s) in self.mult[*i][*j].iter() {
                    pairs.push((*k, &c * s));
                }
            }
        }
        SparseVec::from_entries(pairs)
    }

    pub fn left_mult(&self, i: usize) -> SparseMat {
        SparseMat::new(self.dim, (0..self.dim).map(|j| self.mult[i][j].clone()).collect())
    }

    pub fn right_mult(&self, i: usize) -> SparseMat {
        SparseMat::new(self.dim, (0..self.dim).map(|j| self.mult[j][i].clone()).collect())
    }

    pub fn left_mult_of(&self, x: &SparseVec) -> SparseMat {
        SparseMat::new(
            self.dim,
            (0..self.dim).map(|j| self.mul_vec(x, &SparseVec::unit(j))).collect(),
        )
    }

    /// The ground field as a one-dimensional algebra.
    pub fn scalar() -> Rc<Self> {
        Self::new_unchecked(
            1,
            SparseVec::unit(0),
            vec![vec![SparseVec::unit(0)]],
            vec!["1".into()],
        )
    }

    /// Opposite algebra: multiplication reversed.
    pub fn op(&self) -> Rc<Self> {
        let mult = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.mult[j][i].clone()).collect())
            .collect();
        Self::new_unchecked(self.dim, self.unit.clone(), mult, self.labels.clone())
    }

    /// Structural equality: same constants, labels ignored.
    pub fn same_structure(&self, other: &StructureAlgebra) -> bool {
        self.id == other.id
            || (self.dim == other.dim && self.unit == other.unit && self.mult == other.mult)
    }

    /// Canonical center basis: the kernel of all commutator constraints.
    pub fn center(&self) -> Subspace {
        let mut rref = SparseRref::new(self.dim);
        for k in 0..self.dim {
            // rows of (L_k - R_k), one constraint row per output coordinate
            let mut rows: std::collections::HashMap<usize, Vec<(usize, Rat)>> =
                std::collections::HashMap::new();
            for j in 0..self.dim {
                for (r, c) in self.mult[k][j].iter() {
                    rows.entry(*r).or_default().push((j, c.clone()));
                }
                for (r, c) in self.mult[j][k].iter() {
                    rows.entry(*r).or_default().push((j, -c));
                }
            }
            for (_, pairs) in rows {
                rref.insert(&SparseVec::from_entries(pairs));
            }
            if rref.rank() == self.dim {
                break;
            }
        }
        Subspace::from_spans(self.dim, &rref.kernel_basis())
    }

    /// Nondegeneracy of the trace form T(a, b) = tr(L_a L_b) of the left
    /// regular representation; over a field of characteristic zero this is
    /// exactly semisimplicity.
    pub fn is_semisimple(&self) -> bool {
        let n = self.dim;
        let mut gram = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..=i {
                // tr(L_i L_j) = Σ_{k, m} mult[j][k]_m · mult[i][m]_k
                let mut acc = Rat::zero();
                for k in 0..n {
                    for (m, c) in self.mult[j][k].iter() {
                        if let Some(d) = self.mult[i][*m].get(k) {
                            acc += &(c * d);
                        }
                    }
                }
                *gram.at_mut(i, j) = acc.clone();
                *gram.at_mut(j, i) = acc;
            }
        }
        gram.rank() == n
    }
}

/// The group algebra of a finite group: basis indexed by group elements,
/// products read off the Cayley table.
pub fn group_algebra(g: &crate::group::FiniteGroup) -> Rc<StructureAlgebra> {
    let n = g.order();
    let mult = (0..n)
        .map(|i| (0..n).map(|j| SparseVec::unit(g.mul(i, j))).collect())
        .collect();
    StructureAlgebra::new_unchecked(n, SparseVec::unit(0), mult, g.names().to_vec())
}

/// 2x2 matrix algebra on the basis E11, E12, E21, E22.
#[cfg(test)]
pub(crate) fn mat2_fixture() -> Rc<StructureAlgebra> {
    let e = |i: usize, j: usize| i * 2 + j;
    let mut mult = vec![vec![SparseVec::zero(); 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    mult[e(i, j)][e(k, l)] =
                        if j == k { SparseVec::unit(e(i, l)) } else { SparseVec::zero() };
                }
            }
        }
    }
    let unit = SparseVec::from_entries(vec![(e(0, 0), Rat::one()), (e(1, 1), Rat::one())]);
    StructureAlgebra::new(4, unit, mult, vec![]).unwrap()
}

/// The algebra X ⊗ Y^op, which realizes X-Y-bimodules as left modules.
/// Basis index (i, j) maps to i * dim(Y) + j and the product is
/// (x ⊗ y)(x' ⊗ y') = xx' ⊗ y'y.
pub fn enveloping(x: &StructureAlgebra, y: &StructureAlgebra) -> Rc<StructureAlgebra> {
    let (dx, dy) = (x.dim, y.dim);
    let dim = dx * dy;
    let mut mult = vec![vec![SparseVec::zero(); dim]; dim];
    for i in 0..dx {
        for j in 0..dy {
            for k in 0..dx {
                for l in 0..dy {
                    let xv = x.mul_basis(i, k);
                    let yv = y.mul_basis(l, j);
                    mult[i * dy + j][k * dy + l] = xv.tensor(yv, dy);
                }
            }
        }
    }
    let unit = x.unit.tensor(&y.unit, dy);
    let labels = (0..dim)
        .map(|t| format!("{}⊗{}", x.labels[t / dy], y.labels[t % dy]))
        .collect();
    StructureAlgebra::new_unchecked(dim, unit, mult, labels)
}

/// A unit-preserving injective algebra map B -> A on chosen bases.
#[derive(Clone, Debug)]
pub struct SubalgebraEmbedding {
    pub sub: Rc<StructureAlgebra>,
    pub amb: Rc<StructureAlgebra>,
    /// map[b] = image of the b-th basis vector of B in A-coordinates
    map: Vec<SparseVec>,
}

impl SubalgebraEmbedding {
    pub fn new(
        sub: Rc<StructureAlgebra>,
        amb: Rc<StructureAlgebra>,
        map: Vec<SparseVec>,
    ) -> Result<Self, HopfError> {
        if map.len() != sub.dim {
            return Err(HopfError::InvalidEmbedding {
                reason: format!("{} rows for a {}-dimensional subalgebra", map.len(), sub.dim),
            });
        }
        let emb = SubalgebraEmbedding { sub, amb, map };
        emb.validate()?;
        Ok(emb)
    }

    fn validate(&self) -> Result<(), HopfError> {
        let image = Subspace::from_spans(self.amb.dim, &self.map);
        if image.dim() != self.sub.dim {
            return Err(HopfError::InvalidEmbedding { reason: "map is not injective".into() });
        }
        if self.apply(&self.sub.unit) != self.amb.unit {
            return Err(HopfError::InvalidEmbedding { reason: "unit is not preserved".into() });
        }
        for i in 0..self.sub.dim {
            for j in 0..self.sub.dim {
                let lhs = self.apply(self.sub.mul_basis(i, j));
                let rhs = self.amb.mul_vec(&self.map[i], &self.map[j]);
                if lhs != rhs {
                    return Err(HopfError::InvalidEmbedding {
                        reason: format!("not multiplicative at basis pair ({i}, {j})"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::zero();
        for (i, c) in v.iter() {
            acc = acc.axpy(c, &self.map[*i]);
        }
        acc
    }

    pub fn basis_image(&self, i: usize) -> &SparseVec {
        &self.map[i]
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_spans(self.amb.dim, &self.map)
    }

    /// Identity embedding of an algebra into itself.
    pub fn identity(alg: Rc<StructureAlgebra>) -> Self {
        let map = (0..alg.dim).map(SparseVec::unit).collect();
        SubalgebraEmbedding { sub: alg.clone(), amb: alg, map }
    }

    /// Embedding of the ground field along the unit.
    pub fn unit_embedding(amb: Rc<StructureAlgebra>) -> Self {
        let map = vec![amb.unit.clone()];
        SubalgebraEmbedding { sub: StructureAlgebra::scalar(), amb, map }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};

    fn mat2() -> Rc<StructureAlgebra> {
        mat2_fixture()
    }

    /// k[x]/(x^2) on the basis {1, x}.
    fn dual_numbers() -> Rc<StructureAlgebra> {
        let mult = vec![
            vec![SparseVec::unit(0), SparseVec::unit(1)],
            vec![SparseVec::unit(1), SparseVec::zero()],
        ];
        StructureAlgebra::new(2, SparseVec::unit(0), mult, vec!["1".into(), "x".into()]).unwrap()
    }

    #[test]
    fn enveloping_of_scalars_is_scalar() {
        let k = StructureAlgebra::scalar();
        let e = enveloping(&k, &k);
        assert_eq!(e.dim, 1);
        assert!(e.is_semisimple());
    }

    #[test]
    fn enveloping_c2_is_commutative() {
        let a = group_algebra(&cyclic(2));
        let e = enveloping(&a, &a.op());
        assert_eq!(e.dim, 4);
        e.validate().unwrap();
        assert_eq!(e.center().dim(), 4);
    }

    #[test]
    fn enveloping_s3_center_dimension() {
        let a = group_algebra(&symmetric(3));
        let e = enveloping(&a, &a.op());
        assert_eq!(e.dim, 36);
        assert_eq!(e.center().dim(), 9);
        // tensor-of-centers cross-check against the direct solve
        assert_eq!(a.center().dim() * a.op().center().dim(), 9);
    }

    #[test]
    fn center_of_commutative_algebra_is_full() {
        let a = group_algebra(&cyclic(4));
        assert_eq!(a.center(), Subspace::full(4));
    }

    #[test]
    fn center_of_s3_is_class_sums() {
        let g = symmetric(3);
        let a = group_algebra(&g);
        let z = a.center();
        assert_eq!(z.dim(), 3);
        for class in g.conjugacy_classes().classes {
            let sum = SparseVec::from_entries(
                class.into_iter().map(|x| (x, Rat::one())).collect(),
            );
            assert!(z.contains_vec(&sum));
        }
    }

    #[test]
    fn center_of_matrix_algebra_is_scalars() {
        let z = mat2().center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains_vec(&mat2().unit));
    }

    #[test]
    fn group_algebras_are_semisimple() {
        for g in [cyclic(2), cyclic(6), symmetric(3), crate::group::quaternion()] {
            assert!(group_algebra(&g).is_semisimple());
        }
    }

    #[test]
    fn dual_numbers_not_semisimple() {
        assert!(!dual_numbers().is_semisimple());
        assert_eq!(dual_numbers().center().dim(), 2);
    }

    #[test]
    fn embedding_validation() {
        let g = symmetric(3);
        let a = group_algebra(&g);
        // C3 = {e, (123), (132)} inside S3
        let c3 = group_algebra(&cyclic(3));
        let r123 = g.index_of("(123)").unwrap();
        let r132 = g.index_of("(132)").unwrap();
        let map = vec![SparseVec::unit(0), SparseVec::unit(r123), SparseVec::unit(r132)];
        let emb = SubalgebraEmbedding::new(c3.clone(), a.clone(), map).unwrap();
        assert_eq!(emb.image().dim(), 3);

        // wrong image: not closed under multiplication
        let t = g.index_of("(12)").unwrap();
        let bad = vec![SparseVec::unit(0), SparseVec::unit(t), SparseVec::unit(r132)];
        assert!(SubalgebraEmbedding::new(c3, a, bad).is_err());
    }

    #[test]
    fn non_associative_constants_rejected() {
        let mut mult = vec![vec![SparseVec::zero(); 2]; 2];
        mult[0][0] = SparseVec::unit(0);
        mult[0][1] = SparseVec::unit(1);
        mult[1][0] = SparseVec::unit(1);
        mult[1][1] = SparseVec::unit(1).scale(&Rat::from_int(2));
        // (x·x)·x = 2x·x = 4x but x·(x·x) = 4x — actually associative; break the unit instead
        let bad = StructureAlgebra::new_unchecked(
            2,
            SparseVec::unit(1),
            mult,
            vec!["1".into(), "x".into()],
        );
        assert!(bad.validate().is_err());
    }
}
