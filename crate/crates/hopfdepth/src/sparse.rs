//! Sparse vectors and an incremental reduced-row-echelon accumulator.
//!
//! Structure-constant tensors of group-derived Hopf algebras are close to
//! permutation tensors, so relation spans and kernels stay extremely sparse.
//! The accumulator keeps a full RREF basis at all times (pivot columns are
//! cleared from every other row), which makes the row space canonical: two
//! spans are equal iff the accumulated rows are equal.

use std::collections::{BTreeMap, HashMap};

use crate::rat::Rat;

/// A sparse vector: strictly increasing indices, no explicit zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Rat)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec { entries: vec![(index, Rat::one())] }
    }

    pub fn single(index: usize, coeff: Rat) -> Self {
        if coeff.is_zero() {
            SparseVec::zero()
        } else {
            SparseVec { entries: vec![(index, coeff)] }
        }
    }

    /// Builds from arbitrary (index, coeff) pairs, merging duplicates.
    pub fn from_entries(mut pairs: Vec<(usize, Rat)>) -> Self {
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Rat)> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(dense: &[Rat]) -> Self {
        SparseVec {
            entries: dense
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Rat)> {
        self.entries.iter()
    }

    pub fn leading(&self) -> Option<(usize, &Rat)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, index: usize) -> Option<&Rat> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn scale(&self, c: &Rat) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    /// self + c * other, as a new vector.
    pub fn axpy(&self, c: &Rat, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let v = x + &(y * c);
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Rat::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&-Rat::one(), other)
    }

    /// Re-indexes every entry through `f`. The map must be injective.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_entries(self.entries.iter().map(|(i, c)| (f(*i), c.clone())).collect())
    }

    pub fn dot(&self, other: &SparseVec) -> Rat {
        let mut acc = Rat::zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc += &(x * y);
                a.next();
                b.next();
            }
        }
        acc
    }

    /// Tensor of two coordinate vectors; index (i, j) maps to i * right_dim + j.
    pub fn tensor(&self, other: &SparseVec, right_dim: usize) -> SparseVec {
        let mut out = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                out.push((i * right_dim + j, x * y));
            }
        }
        // index blocks are already in order
        SparseVec { entries: out }
    }
}

/// Incremental RREF accumulator over the rationals.
#[derive(Clone, Debug)]
pub struct SparseRref {
    ambient: usize,
    rows: Vec<SparseVec>,
    by_pivot: BTreeMap<usize, usize>,
    /// col -> slots of rows that may carry a nonzero there (stale entries allowed)
    occupancy: HashMap<usize, Vec<usize>>,
}

impl SparseRref {
    pub fn new(ambient: usize) -> Self {
        SparseRref {
            ambient,
            rows: Vec::new(),
            by_pivot: BTreeMap::new(),
            occupancy: HashMap::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.by_pivot.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_pivot.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.by_pivot.contains_key(&col)
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.rank());
        let mut it = self.by_pivot.keys().peekable();
        for c in 0..self.ambient {
            if it.peek() == Some(&&c) {
                it.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Rows of the canonical basis, ordered by pivot column.
    pub fn rows_in_order(&self) -> Vec<SparseVec> {
        self.by_pivot.values().map(|&slot| self.rows[slot].clone()).collect()
    }

    pub fn row_for_pivot(&self, col: usize) -> Option<&SparseVec> {
        self.by_pivot.get(&col).map(|&slot| &self.rows[slot])
    }

    /// Fully reduces a vector against the accumulated basis.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut start = 0usize;
        loop {
            let hit = v
                .entries
                .iter()
                .skip(start)
                .position(|(c, _)| self.by_pivot.contains_key(c))
                .map(|off| start + off);
            let Some(pos) = hit else { return v };
            start = pos;
            let (col, coeff) = (v.entries[pos].0, v.entries[pos].1.clone());
            let slot = self.by_pivot[&col];
            v = v.axpy(&-coeff, &self.rows[slot]);
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Reduces and, if independent, inserts the vector. Returns the new pivot.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let red = self.reduce(v);
        let (pivot, lead) = match red.leading() {
            None => return None,
            Some((p, c)) => (p, c.clone()),
        };
        debug_assert!(pivot < self.ambient, "index out of ambient range");
        let row = red.scale(&lead.inv());
        // clear the new pivot column from existing rows
        if let Some(slots) = self.occupancy.remove(&pivot) {
            for slot in slots {
                let coeff = match self.rows[slot].get(pivot) {
                    Some(c) => c.clone(),
                    None => continue, // stale
                };
                let updated = self.rows[slot].axpy(&-coeff, &row);
                self.register_occupancy(slot, &updated);
                self.rows[slot] = updated;
            }
        }
        let slot = self.rows.len();
        self.register_occupancy(slot, &row);
        self.rows.push(row);
        self.by_pivot.insert(pivot, slot);
        Some(pivot)
    }

    fn register_occupancy(&mut self, slot: usize, row: &SparseVec) {
        for (c, _) in row.iter().skip(1) {
            self.occupancy.entry(*c).or_default().push(slot);
        }
    }

    /// Projection onto the quotient by the accumulated row space, using the
    /// echelon-pivot complement as the quotient basis.
    pub fn quotient_map(&self) -> QuotientMap {
        let section = self.free_columns();
        let q_index: HashMap<usize, usize> =
            section.iter().enumerate().map(|(q, &c)| (c, q)).collect();
        let mut projection = Vec::with_capacity(self.ambient);
        for k in 0..self.ambient {
            if let Some(&q) = q_index.get(&k) {
                projection.push(SparseVec::unit(q));
            } else {
                let row = self.row_for_pivot(k).expect("non-free column is a pivot");
                projection.push(SparseVec::from_entries(
                    row.iter().filter(|(c, _)| *c != k).map(|(c, v)| (q_index[c], -v)).collect(),
                ));
            }
        }
        QuotientMap { projection, section }
    }

    /// Canonical basis of the kernel of the matrix whose rows were inserted
    /// as linear constraints over `ambient` unknowns: one vector per free
    /// column, with a 1 there and the solved pivot coordinates elsewhere.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut entries = vec![(f, Rat::one())];
                for (&p, &slot) in &self.by_pivot {
                    if let Some(c) = self.rows[slot].get(f) {
                        entries.push((p, -c));
                    }
                }
                SparseVec::from_entries(entries)
            })
            .collect()
    }
}

/// Quotient-space data: the image of every ambient basis vector and the
/// ambient indices (free columns) carrying the quotient basis.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub projection: Vec<SparseVec>,
    pub section: Vec<usize>,
}

impl QuotientMap {
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::zero();
        for (k, c) in v.iter() {
            acc = acc.axpy(c, &self.projection[*k]);
        }
        acc
    }

    pub fn dim(&self) -> usize {
        self.section.len()
    }
}

/// Policy for the optional modular fast path.
#[derive(Clone, Copy, Debug, Default)]
pub struct RrefOptions {
    pub fast_prime: bool,
    pub seed: u64,
}

const PRIMES: [u64; 8] = [
    2_147_483_647,
    2_147_483_629,
    2_147_483_587,
    2_147_483_579,
    2_147_483_563,
    2_147_483_549,
    2_147_483_543,
    2_147_483_497,
];

/// Accumulates the row space of `gens`.
///
/// With `fast_prime` enabled, a first pass modulo a seeded prime predicts
/// which generators contribute rank; only those are eliminated exactly, and
/// every remaining generator is then verified to reduce to zero against the
/// exact basis. Any verification failure falls back to the plain exact path,
/// so the result is identical either way.
pub fn rref_from_generators(
    ambient: usize,
    gens: &[SparseVec],
    opts: RrefOptions,
) -> SparseRref {
    if opts.fast_prime {
        let p = PRIMES[(opts.seed as usize) % PRIMES.len()];
        if let Some(rref) = try_fast_path(ambient, gens, p) {
            return rref;
        }
    }
    let mut rref = SparseRref::new(ambient);
    for g in gens {
        rref.insert(g);
    }
    rref
}

fn try_fast_path(ambient: usize, gens: &[SparseVec], p: u64) -> Option<SparseRref> {
    let mut modular = FpRref::new(ambient, p);
    let mut contributors = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        let gv = g
            .iter()
            .map(|(i, c)| c.mod_prime(p).map(|r| (*i, r)))
            .collect::<Option<Vec<_>>>()?;
        if modular.insert(gv) {
            contributors.push(k);
        }
    }
    let mut rref = SparseRref::new(ambient);
    for &k in &contributors {
        rref.insert(&gens[k]);
    }
    // one exact verification pass over the generators predicted dependent
    let mut next = contributors.iter().copied().peekable();
    for (k, g) in gens.iter().enumerate() {
        if next.peek() == Some(&k) {
            next.next();
            continue;
        }
        if !rref.contains(g) {
            return None; // unlucky prime
        }
    }
    Some(rref)
}

/// Row-echelon accumulator over F_p used only to predict pivots.
struct FpRref {
    p: u64,
    rows: BTreeMap<usize, Vec<(usize, u64)>>,
}

impl FpRref {
    fn new(_ambient: usize, p: u64) -> Self {
        FpRref { p, rows: BTreeMap::new() }
    }

    fn insert(&mut self, mut v: Vec<(usize, u64)>) -> bool {
        loop {
            v.retain(|(_, c)| *c != 0);
            let Some(&(pivot, lead)) = v.first() else { return false };
            match self.rows.get(&pivot) {
                None => {
                    let inv = fp_inv(lead, self.p);
                    let row: Vec<(usize, u64)> =
                        v.iter().map(|(i, c)| (*i, fp_mul(*c, inv, self.p))).collect();
                    self.rows.insert(pivot, row);
                    return true;
                }
                Some(row) => {
                    v = fp_axpy(&v, self.p - lead, row, self.p);
                }
            }
        }
    }
}

fn fp_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // p is prime and a != 0
    let mut result = 1u64;
    let (mut base, mut exp) = (a % p, p - 2);
    while exp > 0 {
        if exp & 1 == 1 {
            result = fp_mul(result, base, p);
        }
        base = fp_mul(base, base, p);
        exp >>= 1;
    }
    result
}

fn fp_axpy(a: &[(usize, u64)], c: u64, b: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, fp_mul(b[j].1, c, p)));
            j += 1;
        } else {
            let v = (a[i].1 + fp_mul(b[j].1, c, p)) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(pairs: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_entries(pairs.iter().map(|&(i, c)| (i, Rat::from_int(c))).collect())
    }

    #[test]
    fn axpy_merges_and_drops_zeros() {
        let a = sv(&[(0, 1), (2, 3)]);
        let b = sv(&[(0, 1), (1, 5)]);
        let r = a.axpy(&Rat::from_int(-1), &b);
        assert_eq!(r, sv(&[(1, -5), (2, 3)]));
    }

    #[test]
    fn rref_canonical_under_permutation() {
        let gens1 = vec![sv(&[(0, 1), (1, 1)]), sv(&[(1, 2), (2, 2)]), sv(&[(0, 1), (2, -1)])];
        let mut perm = gens1.clone();
        perm.reverse();
        let r1 = rref_from_generators(3, &gens1, RrefOptions::default());
        let r2 = rref_from_generators(3, &perm, RrefOptions::default());
        assert_eq!(r1.rows_in_order(), r2.rows_in_order());
        assert_eq!(r1.rank(), 2);
    }

    #[test]
    fn reduce_is_idempotent() {
        let mut r = SparseRref::new(4);
        r.insert(&sv(&[(0, 2), (3, 4)]));
        r.insert(&sv(&[(1, 1), (3, 1)]));
        let v = sv(&[(0, 1), (1, 1), (2, 1)]);
        let red = r.reduce(&v);
        assert_eq!(r.reduce(&red), red);
        assert!(red.get(0).is_none() && red.get(1).is_none());
    }

    #[test]
    fn kernel_solves_constraints() {
        // rows are equations over 3 unknowns: x0 + x1 = 0, x1 + x2 = 0
        let mut r = SparseRref::new(3);
        r.insert(&sv(&[(0, 1), (1, 1)]));
        r.insert(&sv(&[(1, 1), (2, 1)]));
        let ker = r.kernel_basis();
        assert_eq!(ker.len(), 1);
        let k = &ker[0];
        assert_eq!(k.get(2), Some(&Rat::one()));
        assert_eq!(k.get(1), Some(&Rat::from_int(-1)));
        assert_eq!(k.get(0), Some(&Rat::one()));
    }

    #[test]
    fn fast_path_matches_exact() {
        let gens: Vec<SparseVec> = (0..40)
            .map(|k| sv(&[(k % 7, 1 + (k as i64 % 3)), ((k + 3) % 7, -(k as i64 % 5) - 1)]))
            .collect();
        let exact = rref_from_generators(7, &gens, RrefOptions::default());
        let fast = rref_from_generators(7, &gens, RrefOptions { fast_prime: true, seed: 12345 });
        assert_eq!(exact.rows_in_order(), fast.rows_in_order());
    }
}
