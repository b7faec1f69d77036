//! Hopf structure on top of a structure-constant algebra: comultiplication,
//! counit, antipode, duals, op/cop variants, coregular and coadjoint
//! actions, and the quotient module of a Hopf subalgebra pair.
//!
//! Tensor-square coordinates are lexicographic: (p, q) maps to p·dim + q.

use std::rc::Rc;

use crate::algebra::{group_algebra, SparseMat, StructureAlgebra, SubalgebraEmbedding};
use crate::bimodule::Bimodule;
use crate::error::{HopfError, Witness};
use crate::group::FiniteGroup;
use crate::rat::Rat;
use crate::sparse::{SparseRref, SparseVec};
use crate::subspace::Subspace;

#[derive(Clone, Debug)]
pub struct HopfStructure {
    pub alg: Rc<StructureAlgebra>,
    /// comult[i] = Δ(e_i) in tensor-square coordinates
    comult: Vec<SparseVec>,
    counit: Vec<Rat>,
    antipode: SparseMat,
    antipode_inv: SparseMat,
}

/// Outcome of one axiom check, with a witness when it fails.
#[derive(Clone, Debug, serde::Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub ok: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.ok)
    }
}

impl HopfStructure {
    /// Validates the full axiom suite (algebra, coalgebra, compatibility,
    /// antipode) and computes the inverse antipode by matrix inversion;
    /// bijectivity is asserted rather than assumed.
    pub fn new(
        alg: Rc<StructureAlgebra>,
        comult: Vec<SparseVec>,
        counit: Vec<Rat>,
        antipode: SparseMat,
    ) -> Result<Rc<Self>, HopfError> {
        assert_eq!(comult.len(), alg.dim);
        assert_eq!(counit.len(), alg.dim);
        let antipode_inv = match antipode.to_dense().inverse() {
            Some(inv) => SparseMat::from_dense(&inv),
            None => {
                return Err(HopfError::HopfAxiom {
                    axiom: "antipode bijectivity".into(),
                    witness: Witness { indices: vec![], lhs: vec![], rhs: vec![] },
                })
            }
        };
        let h = Rc::new(HopfStructure { alg, comult, counit, antipode, antipode_inv });
        let report = h.check_axioms();
        if let Some(fail) = report.first_failure() {
            return Err(HopfError::HopfAxiom {
                axiom: fail.name.clone(),
                witness: fail.witness.clone().unwrap_or(Witness {
                    indices: vec![],
                    lhs: vec![],
                    rhs: vec![],
                }),
            });
        }
        Ok(h)
    }

    /// Assembles the structure without running the axiom suite; for
    /// constructions whose correctness is certified elsewhere (group
    /// formulas, cross-checked fast paths).
    pub fn from_parts_unchecked(
        alg: Rc<StructureAlgebra>,
        comult: Vec<SparseVec>,
        counit: Vec<Rat>,
        antipode: SparseMat,
        antipode_inv: SparseMat,
    ) -> Self {
        HopfStructure { alg, comult, counit, antipode, antipode_inv }
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn comult_of_basis(&self, i: usize) -> &SparseVec {
        &self.comult[i]
    }

    pub fn comult_vec(&self, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::zero();
        for (i, c) in v.iter() {
            acc = acc.axpy(c, &self.comult[*i]);
        }
        acc
    }

    pub fn counit_of_basis(&self, i: usize) -> &Rat {
        &self.counit[i]
    }

    pub fn counit_vec(&self, v: &SparseVec) -> Rat {
        let mut acc = Rat::zero();
        for (i, c) in v.iter() {
            acc += &(c * &self.counit[*i]);
        }
        acc
    }

    pub fn counit(&self) -> &[Rat] {
        &self.counit
    }

    pub fn antipode(&self) -> &SparseMat {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &SparseMat {
        &self.antipode_inv
    }

    /// Product in H ⊗ H on tensor-square coordinates.
    pub fn mul_tensor_square(&self, v: &SparseVec, w: &SparseVec) -> SparseVec {
        let d = self.dim();
        let mut pairs = Vec::new();
        for (vi, vc) in v.iter() {
            let (p, q) = (vi / d, vi % d);
            for (wi, wc) in w.iter() {
                let (r, s) = (wi / d, wi % d);
                let c = vc * wc;
                let left = self.alg.mul_basis(p, r);
                let right = self.alg.mul_basis(q, s);
                for (a, ca) in left.iter() {
                    for (b, cb) in right.iter() {
                        pairs.push((a * d + b, &c * &(ca * cb)));
                    }
                }
            }
        }
        SparseVec::from_entries(pairs)
    }

    /// Full axiom report; never fails, every check carries its witness.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut checks = Vec::new();
        let d = self.dim();

        // underlying algebra
        match self.alg.validate() {
            Ok(()) => checks.push(AxiomCheck {
                name: "algebra".into(),
                ok: true,
                witness: None,
            }),
            Err(HopfError::AlgebraAxiom { axiom, witness }) => checks.push(AxiomCheck {
                name: format!("algebra.{axiom}"),
                ok: false,
                witness: Some(witness),
            }),
            Err(_) => unreachable!("algebra validation produces algebra errors"),
        }

        // coassociativity
        let mut coassoc = AxiomCheck { name: "coassociativity".into(), ok: true, witness: None };
        for i in 0..d {
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for (pq, c) in self.comult[i].iter() {
                let (p, q) = (pq / d, pq % d);
                for (ab, e) in self.comult[p].iter() {
                    lhs.push((ab * d + q, c * e));
                }
                for (ab, e) in self.comult[q].iter() {
                    rhs.push((p * d * d + ab, c * e));
                }
            }
            let lhs = SparseVec::from_entries(lhs);
            let rhs = SparseVec::from_entries(rhs);
            if lhs != rhs {
                coassoc.ok = false;
                coassoc.witness = Some(Witness {
                    indices: vec![i],
                    lhs: lhs.iter().cloned().collect(),
                    rhs: rhs.iter().cloned().collect(),
                });
                break;
            }
        }
        checks.push(coassoc);

        // counit law
        let mut counit_ok = AxiomCheck { name: "counit".into(), ok: true, witness: None };
        for i in 0..d {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (pq, c) in self.comult[i].iter() {
                let (p, q) = (pq / d, pq % d);
                left.push((q, c * &self.counit[p]));
                right.push((p, c * &self.counit[q]));
            }
            let left = SparseVec::from_entries(left);
            let right = SparseVec::from_entries(right);
            let e = SparseVec::unit(i);
            if left != e || right != e {
                counit_ok.ok = false;
                counit_ok.witness = Some(Witness {
                    indices: vec![i],
                    lhs: left.iter().cloned().collect(),
                    rhs: right.iter().cloned().collect(),
                });
                break;
            }
        }
        checks.push(counit_ok);

        // comultiplication is an algebra map
        let mut comult_alg =
            AxiomCheck { name: "comult multiplicative".into(), ok: true, witness: None };
        'pairs: for i in 0..d {
            for j in 0..d {
                let lhs = self.comult_vec(self.alg.mul_basis(i, j));
                let rhs = self.mul_tensor_square(&self.comult[i], &self.comult[j]);
                if lhs != rhs {
                    comult_alg.ok = false;
                    comult_alg.witness = Some(Witness {
                        indices: vec![i, j],
                        lhs: lhs.iter().cloned().collect(),
                        rhs: rhs.iter().cloned().collect(),
                    });
                    break 'pairs;
                }
            }
        }
        if comult_alg.ok {
            let unit2 = {
                let u = &self.alg.unit;
                u.tensor(u, d)
            };
            let lhs = self.comult_vec(&self.alg.unit);
            if lhs != unit2 {
                comult_alg.ok = false;
                comult_alg.witness = Some(Witness {
                    indices: vec![],
                    lhs: lhs.iter().cloned().collect(),
                    rhs: unit2.iter().cloned().collect(),
                });
            }
        }
        checks.push(comult_alg);

        // counit is an algebra map
        let mut counit_alg =
            AxiomCheck { name: "counit multiplicative".into(), ok: true, witness: None };
        'epairs: for i in 0..d {
            for j in 0..d {
                let lhs = self.counit_vec(self.alg.mul_basis(i, j));
                let rhs = &self.counit[i] * &self.counit[j];
                if lhs != rhs {
                    counit_alg.ok = false;
                    counit_alg.witness = Some(Witness {
                        indices: vec![i, j],
                        lhs: vec![(0, lhs)],
                        rhs: vec![(0, rhs)],
                    });
                    break 'epairs;
                }
            }
        }
        if counit_alg.ok && !self.counit_vec(&self.alg.unit).is_one() {
            counit_alg.ok = false;
            counit_alg.witness = Some(Witness { indices: vec![], lhs: vec![], rhs: vec![] });
        }
        checks.push(counit_alg);

        // antipode axiom: m(S⊗id)Δ = ηε = m(id⊗S)Δ
        let mut antipode_ok = AxiomCheck { name: "antipode".into(), ok: true, witness: None };
        for i in 0..d {
            let mut left = SparseVec::zero();
            let mut right = SparseVec::zero();
            for (pq, c) in self.comult[i].iter() {
                let (p, q) = (pq / d, pq % d);
                left = left.axpy(c, &self.alg.mul_vec(self.antipode.col(p), &SparseVec::unit(q)));
                right =
                    right.axpy(c, &self.alg.mul_vec(&SparseVec::unit(p), self.antipode.col(q)));
            }
            let target = self.alg.unit.scale(&self.counit[i]);
            if left != target || right != target {
                antipode_ok.ok = false;
                antipode_ok.witness = Some(Witness {
                    indices: vec![i],
                    lhs: left.iter().cloned().collect(),
                    rhs: target.iter().cloned().collect(),
                });
                break;
            }
        }
        checks.push(antipode_ok);

        // antipode inverse really inverts
        let id = SparseMat::identity(d);
        let inv_ok = self.antipode.compose(&self.antipode_inv) == id
            && self.antipode_inv.compose(&self.antipode) == id;
        checks.push(AxiomCheck {
            name: "antipode inverse".into(),
            ok: inv_ok,
            witness: None,
        });

        AxiomReport { checks }
    }

    // -----------------------------------------------------------------
    // constructions
    // -----------------------------------------------------------------

    /// Group algebra kG with Δg = g⊗g, ε(g) = 1, S(g) = g^{-1}.
    pub fn group_hopf(g: &FiniteGroup) -> Rc<Self> {
        let alg = group_algebra(g);
        let n = g.order();
        let comult = (0..n).map(|i| SparseVec::unit(i * n + i)).collect();
        let counit = vec![Rat::one(); n];
        let antipode = SparseMat::new(n, (0..n).map(|i| SparseVec::unit(g.inv(i))).collect());
        let antipode_inv = antipode.clone();
        Rc::new(HopfStructure { alg, comult, counit, antipode, antipode_inv })
    }

    /// Dual Hopf algebra on the dual basis: multiplication is the transpose
    /// of Δ (convolution), comultiplication the transpose of multiplication,
    /// unit ε, counit evaluation at 1, antipode the transpose of S.
    pub fn dual(&self) -> Rc<Self> {
        let d = self.dim();
        let mut mult = vec![vec![SparseVec::zero(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let entries = (0..d)
                    .filter_map(|k| self.comult[k].get(i * d + j).map(|c| (k, c.clone())))
                    .collect();
                mult[i][j] = SparseVec::from_entries(entries);
            }
        }
        let unit = SparseVec::from_dense(&self.counit);
        let labels = self.alg.labels.iter().map(|l| format!("p[{l}]")).collect();
        let alg = StructureAlgebra::new_unchecked(d, unit, mult, labels);

        let comult = (0..d)
            .map(|k| {
                let mut pairs = Vec::new();
                for i in 0..d {
                    for j in 0..d {
                        if let Some(c) = self.alg.mul_basis(i, j).get(k) {
                            pairs.push((i * d + j, c.clone()));
                        }
                    }
                }
                SparseVec::from_entries(pairs)
            })
            .collect();
        let counit = self.alg.unit.to_dense(d);
        let antipode = transpose(&self.antipode);
        let antipode_inv = transpose(&self.antipode_inv);
        Rc::new(HopfStructure { alg, comult, counit, antipode, antipode_inv })
    }

    /// Opposite algebra; the antipode flips to its composition inverse so
    /// the Hopf axioms keep holding.
    pub fn op_variant(&self) -> Rc<Self> {
        Rc::new(HopfStructure {
            alg: self.alg.op(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode_inv.clone(),
            antipode_inv: self.antipode.clone(),
        })
    }

    /// Co-opposite coalgebra (flipped comultiplication), same algebra.
    pub fn cop_variant(&self) -> Rc<Self> {
        let d = self.dim();
        let comult = self
            .comult
            .iter()
            .map(|v| v.map_indices(|pq| (pq % d) * d + pq / d))
            .collect();
        Rc::new(HopfStructure {
            alg: self.alg.clone(),
            comult,
            counit: self.counit.clone(),
            antipode: self.antipode_inv.clone(),
            antipode_inv: self.antipode.clone(),
        })
    }

    // -----------------------------------------------------------------
    // actions
    // -----------------------------------------------------------------

    /// Coregular actions of H on H*, pinned by ⟨h ⇀ f, x⟩ = ⟨f, xh⟩ and
    /// ⟨f ↼ h, x⟩ = ⟨f, hx⟩.
    pub fn coregular(&self) -> CoregularActions {
        let d = self.dim();
        let hit = (0..d)
            .map(|a| {
                let cols = (0..d)
                    .map(|j| {
                        let entries = (0..d)
                            .filter_map(|x| self.alg.mul_basis(x, a).get(j).map(|c| (x, c.clone())))
                            .collect();
                        SparseVec::from_entries(entries)
                    })
                    .collect();
                SparseMat::new(d, cols)
            })
            .collect();
        let struck = (0..d)
            .map(|a| {
                let cols = (0..d)
                    .map(|j| {
                        let entries = (0..d)
                            .filter_map(|x| self.alg.mul_basis(a, x).get(j).map(|c| (x, c.clone())))
                            .collect();
                        SparseVec::from_entries(entries)
                    })
                    .collect();
                SparseMat::new(d, cols)
            })
            .collect();
        CoregularActions { hit, struck }
    }

    /// Coregular actions of H* on H: f ⇀ h = Σ h₁⟨f, h₂⟩ and
    /// h ↼ f = Σ ⟨f, h₁⟩h₂.
    pub fn coregular_dual(&self) -> CoregularActions {
        let d = self.dim();
        let mut hit_cols = vec![vec![Vec::new(); d]; d];
        let mut struck_cols = vec![vec![Vec::new(); d]; d];
        for a in 0..d {
            for (pq, c) in self.comult[a].iter() {
                let (p, q) = (pq / d, pq % d);
                // f^q ⇀ e_a gains c·e_p ; e_a ↼ f^p gains c·e_q
                hit_cols[q][a].push((p, c.clone()));
                struck_cols[p][a].push((q, c.clone()));
            }
        }
        CoregularActions {
            hit: hit_cols
                .into_iter()
                .map(|m| SparseMat::new(d, m.into_iter().map(SparseVec::from_entries).collect()))
                .collect(),
            struck: struck_cols
                .into_iter()
                .map(|m| SparseMat::new(d, m.into_iter().map(SparseVec::from_entries).collect()))
                .collect(),
        }
    }

    /// Coadjoint actions: `on_dual[a]` sends f to Σ (e_a)₁ ⇀ f ↼ S̄((e_a)₂)
    /// (a left H-action on H*), and `on_alg[j]` sends h to
    /// Σ S̄*((f^j)₂) ⇀ h ↼ (f^j)₁ (a right action of the dual on H).
    pub fn coadjoint(&self) -> CoadjointActions {
        let d = self.dim();
        let co = self.coregular();
        let on_dual = (0..d)
            .map(|a| {
                let mut acc = SparseMat::zero(d, d);
                for (pq, c) in self.comult[a].iter() {
                    let (p, q) = (pq / d, pq % d);
                    let struck_sbar = struck_of(&co, self.antipode_inv.col(q), d);
                    acc = acc.add_scaled(c, &co.hit[p].compose(&struck_sbar));
                }
                acc
            })
            .collect();

        let codual = self.coregular_dual();
        let sbar_t = transpose(&self.antipode_inv);
        let on_alg = (0..d)
            .map(|j| {
                let mut acc = SparseMat::zero(d, d);
                // Δ*(f^j) = Σ_{u,v} mult[u][v]_j f^u ⊗ f^v
                for u in 0..d {
                    for v in 0..d {
                        let Some(c) = self.alg.mul_basis(u, v).get(j) else { continue };
                        let hit_sbar = hit_of(&codual, sbar_t.col(v), d);
                        acc = acc.add_scaled(c, &hit_sbar.compose(&codual.struck[u]));
                    }
                }
                acc
            })
            .collect();
        CoadjointActions { on_dual, on_alg }
    }

    /// Hopf subalgebra test: Δ(image) ⊆ image ⊗ image and S(image) ⊆ image.
    pub fn is_hopf_subalgebra(&self, emb: &SubalgebraEmbedding) -> Result<(), HopfError> {
        assert!(emb.amb.same_structure(&self.alg), "embedding ambient mismatch");
        let d = self.dim();
        let image = emb.image();
        let mut square = SparseRref::new(d * d);
        for i in 0..emb.sub.dim {
            for j in 0..emb.sub.dim {
                square.insert(&emb.basis_image(i).tensor(emb.basis_image(j), d));
            }
        }
        for b in 0..emb.sub.dim {
            let img = emb.basis_image(b);
            if !square.contains(&self.comult_vec(img)) {
                return Err(HopfError::InvalidEmbedding {
                    reason: format!("comultiplication leaves the image at sub basis {b}"),
                });
            }
            let s = {
                let mut acc = SparseVec::zero();
                for (i, c) in img.iter() {
                    acc = acc.axpy(c, self.antipode.col(*i));
                }
                acc
            };
            if !image.contains_vec(&s) {
                return Err(HopfError::InvalidEmbedding {
                    reason: format!("antipode leaves the image at sub basis {b}"),
                });
            }
        }
        Ok(())
    }

    /// The quotient module of a Hopf subalgebra pair R ↪ H: the left
    /// R-module H/(H·R⁺) with R⁺ = ker ε ∩ R, with left multiplication
    /// descending to the quotient. Requires the embedding to be a Hopf
    /// subalgebra; ε is the restriction of the ambient counit.
    pub fn quotient_module(&self, emb: &SubalgebraEmbedding) -> Result<QuotientModule, HopfError> {
        self.is_hopf_subalgebra(emb)?;
        let counit: Vec<Rat> =
            (0..emb.sub.dim).map(|b| self.counit_vec(emb.basis_image(b))).collect();
        Ok(quotient_module_over(emb, &counit))
    }
}

fn transpose(m: &SparseMat) -> SparseMat {
    SparseMat::from_dense(&m.to_dense().transpose())
}

fn struck_of(co: &CoregularActions, h: &SparseVec, d: usize) -> SparseMat {
    SparseMat::lin_comb(h, &co.struck, d, d)
}

fn hit_of(co: &CoregularActions, f: &SparseVec, d: usize) -> SparseMat {
    SparseMat::lin_comb(f, &co.hit, d, d)
}

/// Matrices of the two coregular actions on the relevant coordinate space.
pub struct CoregularActions {
    /// hit[a] : the ⇀-action of basis element a
    pub hit: Vec<SparseMat>,
    /// struck[a] : the ↼-action of basis element a
    pub struck: Vec<SparseMat>,
}

/// Coadjoint action matrices of H on H* and of H* on H.
pub struct CoadjointActions {
    pub on_dual: Vec<SparseMat>,
    pub on_alg: Vec<SparseMat>,
}

/// The quotient module of any algebra extension whose subalgebra carries a
/// counit: H/(H·R⁺) with R⁺ = ker ε_R, a left R-module under left
/// multiplication. The mirror span R⁺·H is computed as a dimension
/// cross-check.
pub fn quotient_module_over(emb: &SubalgebraEmbedding, sub_counit: &[Rat]) -> QuotientModule {
    let amb = &emb.amb;
    let d = amb.dim;
    let eps_row = SparseVec::from_entries(
        sub_counit
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(b, v)| (b, v.clone()))
            .collect(),
    );
    let mut rref = SparseRref::new(emb.sub.dim);
    rref.insert(&eps_row);
    let r_plus: Vec<SparseVec> = rref.kernel_basis().iter().map(|v| emb.apply(v)).collect();

    let mut h_rplus = SparseRref::new(d);
    let mut rplus_h = SparseRref::new(d);
    for r in &r_plus {
        for h in 0..d {
            h_rplus.insert(&amb.mul_vec(&SparseVec::unit(h), r));
            rplus_h.insert(&amb.mul_vec(r, &SparseVec::unit(h)));
        }
    }
    let rplus_h_dim = rplus_h.rank();
    let qmap = h_rplus.quotient_map();
    let q_dim = qmap.dim();
    let acts = (0..emb.sub.dim)
        .map(|b| {
            let img = emb.basis_image(b);
            let cols = qmap
                .section
                .iter()
                .map(|&a| qmap.apply(&amb.mul_vec(img, &SparseVec::unit(a))))
                .collect();
            SparseMat::new(q_dim, cols)
        })
        .collect();
    let module = Bimodule::from_left_module(emb.sub.clone(), acts, q_dim);
    let section = qmap.section.clone();
    QuotientModule {
        module,
        projection: qmap.projection,
        section,
        rplus_h_dim,
        h_rplus_dim: d - q_dim,
    }
}

/// Left R-module H/(H·R⁺) with its projection.
pub struct QuotientModule {
    pub module: Bimodule,
    pub projection: Vec<SparseVec>,
    pub section: Vec<usize>,
    pub rplus_h_dim: usize,
    pub h_rplus_dim: usize,
}

/// Embedding of a Hopf algebra into an ambient one whose image is a Hopf
/// subalgebra; carries both Hopf structures for depth work.
#[derive(Clone)]
pub struct HopfExtension {
    pub sub: Rc<HopfStructure>,
    pub amb: Rc<HopfStructure>,
    pub emb: SubalgebraEmbedding,
}

impl HopfExtension {
    pub fn new(
        sub: Rc<HopfStructure>,
        amb: Rc<HopfStructure>,
        emb: SubalgebraEmbedding,
    ) -> Result<Self, HopfError> {
        amb.is_hopf_subalgebra(&emb)?;
        Ok(HopfExtension { sub, amb, emb })
    }
}

/// The field as a one-dimensional Hopf algebra.
pub fn trivial_hopf() -> Rc<HopfStructure> {
    let alg = StructureAlgebra::scalar();
    Rc::new(HopfStructure {
        alg,
        comult: vec![SparseVec::unit(0)],
        counit: vec![Rat::one()],
        antipode: SparseMat::identity(1),
        antipode_inv: SparseMat::identity(1),
    })
}

/// The trivial left module given by the counit, as an (H, k)-bimodule.
pub fn trivial_module(h: &HopfStructure) -> Bimodule {
    Bimodule::character_module(h.alg.clone(), h.counit.clone())
}

/// Subspace of H ⊗ H spanned by the images of a pair of subspaces.
pub fn tensor_subspace(u: &Subspace, v: &Subspace, dim: usize) -> Subspace {
    let mut gens = Vec::new();
    for a in u.basis() {
        for b in v.basis() {
            gens.push(a.tensor(b, dim));
        }
    }
    Subspace::from_spans(dim * dim, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, quaternion, symmetric};

    #[test]
    fn group_hopf_passes_axioms() {
        for g in [cyclic(1), cyclic(2), symmetric(3)] {
            let h = HopfStructure::group_hopf(&g);
            assert!(h.check_axioms().all_ok(), "axioms fail for {}", g.name);
        }
    }

    #[test]
    fn c2_antipode_is_identity() {
        let h = HopfStructure::group_hopf(&cyclic(2));
        assert_eq!(*h.antipode(), SparseMat::identity(2));
    }

    #[test]
    fn s3_antipode_is_inversion_involution() {
        let g = symmetric(3);
        let h = HopfStructure::group_hopf(&g);
        for i in 0..6 {
            assert_eq!(h.antipode().col(i), &SparseVec::unit(g.inv(i)));
        }
        assert_eq!(h.antipode().compose(h.antipode()), SparseMat::identity(6));
    }

    #[test]
    fn dual_of_c2_is_orthogonal_idempotents() {
        let h = HopfStructure::group_hopf(&cyclic(2));
        let d = h.dual();
        assert!(d.check_axioms().all_ok());
        // p_e p_a = 0, p_e + p_a = 1
        assert!(d.alg.mul_basis(0, 1).is_zero());
        assert_eq!(d.alg.mul_basis(0, 0), &SparseVec::unit(0));
        let one = SparseVec::from_entries(vec![(0, Rat::one()), (1, Rat::one())]);
        assert_eq!(d.alg.unit, one);
    }

    #[test]
    fn dual_of_s3_is_commutative_orthogonal() {
        let h = HopfStructure::group_hopf(&symmetric(3));
        let d = h.dual();
        assert!(d.check_axioms().all_ok());
        for i in 0..6 {
            for j in 0..6 {
                let expected =
                    if i == j { SparseVec::unit(i) } else { SparseVec::zero() };
                assert_eq!(d.alg.mul_basis(i, j), &expected);
            }
        }
    }

    #[test]
    fn bidual_recovers_structure() {
        let h = HopfStructure::group_hopf(&symmetric(3));
        let dd = h.dual().dual();
        assert!(dd.alg.same_structure(&h.alg));
        assert_eq!(dd.comult, h.comult);
        assert_eq!(dd.counit, h.counit);
        assert_eq!(dd.antipode, h.antipode);
    }

    #[test]
    fn variants_pass_axioms() {
        let h = HopfStructure::group_hopf(&quaternion());
        assert!(h.op_variant().check_axioms().all_ok());
        assert!(h.cop_variant().check_axioms().all_ok());
        let d = h.dual();
        assert!(d.cop_variant().check_axioms().all_ok());
        // commutative → op is identical; cocommutative dual → cop identical
        let c = HopfStructure::group_hopf(&cyclic(4));
        assert_eq!(c.op_variant().alg.mul_basis(1, 2), c.alg.mul_basis(1, 2));
        assert_eq!(c.cop_variant().comult, c.comult);
    }

    #[test]
    fn corrupted_comultiplication_reported_with_witness() {
        let h = HopfStructure::group_hopf(&cyclic(2));
        let mut comult: Vec<SparseVec> = (0..2).map(|i| h.comult_of_basis(i).clone()).collect();
        comult[1] = SparseVec::unit(2); // g ↦ g ⊗ e
        let broken = HopfStructure {
            alg: h.alg.clone(),
            comult,
            counit: h.counit().to_vec(),
            antipode: h.antipode().clone(),
            antipode_inv: h.antipode_inv().clone(),
        };
        let report = broken.check_axioms();
        assert!(!report.all_ok());
        let fail = report.first_failure().unwrap();
        assert!(fail.witness.is_some());
    }

    #[test]
    fn coregular_on_group_is_translation() {
        let g = symmetric(3);
        let h = HopfStructure::group_hopf(&g);
        let co = h.coregular();
        // g ⇀ p_x = p_{x g^{-1}}, p_x ↼ g = p_{g^{-1} x}
        for a in 0..6 {
            for x in 0..6 {
                assert_eq!(
                    co.hit[a].col(x),
                    &SparseVec::unit(g.mul(x, g.inv(a)))
                );
                assert_eq!(
                    co.struck[a].col(x),
                    &SparseVec::unit(g.mul(g.inv(a), x))
                );
            }
        }
        // 1 ⇀ f = f
        assert_eq!(co.hit[0], SparseMat::identity(6));
    }

    #[test]
    fn coadjoint_on_group_is_conjugation() {
        let g = symmetric(3);
        let h = HopfStructure::group_hopf(&g);
        let ad = h.coadjoint();
        for a in 0..6 {
            for x in 0..6 {
                assert_eq!(ad.on_dual[a].col(x), &SparseVec::unit(g.conjugate(a, x)));
            }
        }
    }

    #[test]
    fn coadjoint_on_alg_is_counit_trivial_for_groups() {
        let g = symmetric(3);
        let h = HopfStructure::group_hopf(&g);
        let ad = h.coadjoint();
        // h ↤ p_x acts as δ_{x,e} · id on kG
        for j in 0..6 {
            let expected = if j == 0 {
                SparseMat::identity(6)
            } else {
                SparseMat::zero(6, 6)
            };
            assert_eq!(ad.on_alg[j], expected, "at dual index {j}");
        }
    }

    #[test]
    fn coadjoint_module_coalgebra_conditions() {
        let g = symmetric(3);
        let h = HopfStructure::group_hopf(&g);
        let dual = h.dual();
        let ad = h.coadjoint();
        let d = h.dim();
        // Δ*(a ⊳ f) = Σ (a₁ ⊳ f₁) ⊗ (a₂ ⊳ f₂) on basis pairs
        for a in 0..d {
            for f in 0..d {
                let lhs = dual.comult_vec(&ad.on_dual[a].apply(&SparseVec::unit(f)));
                let mut rhs = SparseVec::zero();
                for (pq, c) in h.comult_of_basis(a).iter() {
                    let (p, q) = (pq / d, pq % d);
                    for (uv, e) in dual.comult_of_basis(f).iter() {
                        let (u, v) = (uv / d, uv % d);
                        let left = ad.on_dual[p].apply(&SparseVec::unit(u));
                        let right = ad.on_dual[q].apply(&SparseVec::unit(v));
                        rhs = rhs.axpy(&(c * e), &left.tensor(&right, d));
                    }
                }
                assert_eq!(lhs, rhs, "module-coalgebra fails at ({a}, {f})");
            }
        }
    }

    #[test]
    fn quotient_module_of_full_and_trivial_subalgebra() {
        let h = HopfStructure::group_hopf(&symmetric(3));
        // R = H: Q = k
        let full = SubalgebraEmbedding::identity(h.alg.clone());
        let q = h.quotient_module(&full).unwrap();
        assert_eq!(q.module.dim, 1);
        assert_eq!(q.rplus_h_dim, q.h_rplus_dim);
        // R = k: Q = H
        let unit = SubalgebraEmbedding::unit_embedding(h.alg.clone());
        let qo = h.quotient_module(&unit).unwrap();
        assert_eq!(qo.module.dim, 6);
    }

    #[test]
    fn hopf_subalgebra_gate() {
        let g = symmetric(3);
        let h = HopfStructure::group_hopf(&g);
        // span{e, (12)} is a Hopf subalgebra
        let t = g.index_of("(12)").unwrap();
        let c2 = HopfStructure::group_hopf(&cyclic(2));
        let emb = SubalgebraEmbedding::new(
            c2.alg.clone(),
            h.alg.clone(),
            vec![SparseVec::unit(0), SparseVec::unit(t)],
        )
        .unwrap();
        h.is_hopf_subalgebra(&emb).unwrap();
    }
}
