#![allow(dead_code)] // each test binary uses a different subset

//! Shared helpers for the integration suites: an independent brute-force
//! decomposition oracle for kC2-kC2-bimodules.
//!
//! Over the rationals a kC2-kC2-bimodule is a pair of commuting involutions
//! (L, R); it decomposes into the four joint eigenspaces with eigenvalues
//! (±1, ±1). The oracle computes those multiplicities by stacked-kernel
//! ranks and decides divisibility and similarity from the supports alone,
//! with no reference to the annihilator engine.

use std::rc::Rc;

use hopfdepth::algebra::{group_algebra, SparseMat, StructureAlgebra};
use hopfdepth::bimodule::Bimodule;
use hopfdepth::group::cyclic;
use hopfdepth::matrix::Matrix;
use hopfdepth::rat::Rat;
use hopfdepth::sparse::SparseVec;

pub fn c2_algebra() -> Rc<StructureAlgebra> {
    group_algebra(&cyclic(2))
}

/// Joint eigenspace multiplicities of commuting involutions, ordered
/// (+,+), (+,-), (-,+), (-,-).
pub fn eigen_multiplicities(left: &Matrix, right: &Matrix) -> [usize; 4] {
    let n = left.rows();
    let mut out = [0usize; 4];
    for (slot, (a, b)) in [(1, 1), (1, -1), (-1, 1), (-1, -1)].iter().enumerate() {
        // kernel of the stacked matrix [L - aI; R - bI]
        let mut rows = Vec::with_capacity(2 * n);
        for i in 0..n {
            let mut row: Vec<Rat> = (0..n).map(|j| left.at(i, j).clone()).collect();
            row[i] = &row[i] - &Rat::from_int(*a);
            rows.push(row);
        }
        for i in 0..n {
            let mut row: Vec<Rat> = (0..n).map(|j| right.at(i, j).clone()).collect();
            row[i] = &row[i] - &Rat::from_int(*b);
            rows.push(row);
        }
        out[slot] = Matrix::from_rows(rows).kernel().dim();
    }
    assert_eq!(out.iter().sum::<usize>(), n, "involutions must be semisimple");
    out
}

pub fn support(mults: &[usize; 4]) -> [bool; 4] {
    [mults[0] > 0, mults[1] > 0, mults[2] > 0, mults[3] > 0]
}

/// (similar, first | p·second, second | q·first) from eigen supports.
pub fn oracle_verdict(a: &[usize; 4], b: &[usize; 4]) -> (bool, bool, bool) {
    let (sa, sb) = (support(a), support(b));
    let fwd = sa.iter().zip(&sb).all(|(x, y)| !x || *y);
    let bwd = sb.iter().zip(&sa).all(|(y, x)| !y || *x);
    (fwd && bwd, fwd, bwd)
}

/// A kC2-kC2-bimodule from explicit commuting involution matrices.
pub fn bimodule_from_involutions(left: &Matrix, right: &Matrix) -> Bimodule {
    let alg = c2_algebra();
    let n = left.rows();
    Bimodule::new(
        alg.clone(),
        alg,
        n,
        vec![SparseMat::identity(n), SparseMat::from_dense(left)],
        vec![SparseMat::identity(n), SparseMat::from_dense(right)],
    )
    .expect("fixture must be a bimodule")
}

/// Block-diagonal involution pair with the given character multiplicities,
/// conjugated by a fixed unimodular matrix so nothing stays diagonal.
pub fn scrambled_fixture(mults: [usize; 4], scramble: bool) -> (Matrix, Matrix) {
    let n: usize = mults.iter().sum();
    let mut left = Matrix::zero(n, n);
    let mut right = Matrix::zero(n, n);
    let mut pos = 0;
    for (slot, (a, b)) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)].iter().enumerate() {
        for _ in 0..mults[slot] {
            *left.at_mut(pos, pos) = Rat::from_int(*a);
            *right.at_mut(pos, pos) = Rat::from_int(*b);
            pos += 1;
        }
    }
    if !scramble || n == 0 {
        return (left, right);
    }
    // unitriangular change of basis with deterministic entries
    let mut p = Matrix::identity(n);
    for i in 0..n {
        for j in (i + 1)..n {
            *p.at_mut(i, j) = Rat::from_int(((i + 2 * j) % 3) as i64 - 1);
        }
    }
    let p_inv = p.inverse().expect("unitriangular");
    (p.mul(&left).mul(&p_inv), p.mul(&right).mul(&p_inv))
}

/// Dense matrices of the generator's two actions on a kC2-kC2-bimodule.
pub fn involution_matrices(m: &Bimodule) -> (Matrix, Matrix) {
    (m.left_action(1).to_dense(), m.right_action(1).to_dense())
}

/// Every multiplicity pattern with entries in {0, 1, 2} and total dim ≤ 8,
/// thinned to one representative per (support, total-dim) shape.
pub fn fixture_patterns() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for m0 in 0..=2usize {
        for m1 in 0..=2usize {
            for m2 in 0..=2usize {
                for m3 in 0..=2usize {
                    let m = [m0, m1, m2, m3];
                    if m.iter().sum::<usize>() <= 8 {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// Used from SparseVec-based code occasionally in the suites.
pub fn dense(v: &SparseVec, n: usize) -> Vec<Rat> {
    v.to_dense(n)
}
