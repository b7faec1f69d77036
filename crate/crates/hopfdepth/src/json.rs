//! JSON interchange formats. Rationals serialize as strings "p/q" with the
//! denominator omitted when it is 1; all indices are 0-based; the identity
//! of a group table must sit at index 0.

use std::rc::Rc;

use serde::{Deserialize, Serialize};

use crate::algebra::{SparseMat, StructureAlgebra, SubalgebraEmbedding};
use crate::depth::DepthReport;
use crate::error::HopfError;
use crate::group::FiniteGroup;
use crate::hopf::HopfStructure;
use crate::rat::Rat;
use crate::sparse::SparseVec;
use crate::theorems::TheoremCheck;

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct GroupJson {
    pub name: String,
    pub order: usize,
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupJson {
            name: g.name.clone(),
            order: g.order(),
            names: g.names().to_vec(),
            table: g.table().to_vec(),
        }
    }

    pub fn to_group(&self) -> Result<FiniteGroup, HopfError> {
        if self.table.len() != self.order || self.names.len() != self.order {
            return Err(HopfError::InvalidGroup {
                reason: "order field disagrees with table/names length".into(),
            });
        }
        FiniteGroup::from_table(self.name.clone(), self.names.clone(), self.table.clone())
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct AlgebraJson {
    pub dim: usize,
    pub unit: Vec<Rat>,
    /// mult[i][j] = dense coordinate vector of b_i · b_j
    pub mult: Vec<Vec<Vec<Rat>>>,
    pub labels: Vec<String>,
}

impl AlgebraJson {
    pub fn from_algebra(a: &StructureAlgebra) -> Self {
        AlgebraJson {
            dim: a.dim,
            unit: a.unit.to_dense(a.dim),
            mult: (0..a.dim)
                .map(|i| (0..a.dim).map(|j| a.mul_basis(i, j).to_dense(a.dim)).collect())
                .collect(),
            labels: a.labels.clone(),
        }
    }

    pub fn to_algebra(&self) -> Result<Rc<StructureAlgebra>, HopfError> {
        let n = self.dim;
        let shape_ok = self.unit.len() == n
            && self.mult.len() == n
            && self.mult.iter().all(|r| r.len() == n && r.iter().all(|v| v.len() == n))
            && (self.labels.is_empty() || self.labels.len() == n);
        if !shape_ok {
            return Err(HopfError::InvalidInput("algebra JSON has inconsistent shapes".into()));
        }
        let mult = self
            .mult
            .iter()
            .map(|row| row.iter().map(|v| SparseVec::from_dense(v)).collect())
            .collect();
        StructureAlgebra::new(n, SparseVec::from_dense(&self.unit), mult, self.labels.clone())
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct HopfJson {
    #[serde(flatten)]
    pub algebra: AlgebraJson,
    /// comult[i] = dense vector of Δb_i over the tensor basis (p·dim + q)
    pub comult: Vec<Vec<Rat>>,
    pub counit: Vec<Rat>,
    /// antipode[i] = dense coordinate vector of S(b_i)
    pub antipode: Vec<Vec<Rat>>,
}

impl HopfJson {
    pub fn from_hopf(h: &HopfStructure) -> Self {
        let d = h.dim();
        HopfJson {
            algebra: AlgebraJson::from_algebra(&h.alg),
            comult: (0..d).map(|i| h.comult_of_basis(i).to_dense(d * d)).collect(),
            counit: h.counit().to_vec(),
            antipode: (0..d).map(|i| h.antipode().col(i).to_dense(d)).collect(),
        }
    }

    pub fn to_hopf(&self) -> Result<Rc<HopfStructure>, HopfError> {
        let alg = self.algebra.to_algebra()?;
        let d = alg.dim;
        let shape_ok = self.comult.len() == d
            && self.comult.iter().all(|v| v.len() == d * d)
            && self.counit.len() == d
            && self.antipode.len() == d
            && self.antipode.iter().all(|v| v.len() == d);
        if !shape_ok {
            return Err(HopfError::InvalidInput("hopf JSON has inconsistent shapes".into()));
        }
        let comult = self.comult.iter().map(|v| SparseVec::from_dense(v)).collect();
        let antipode =
            SparseMat::new(d, self.antipode.iter().map(|v| SparseVec::from_dense(v)).collect());
        HopfStructure::new(alg, comult, self.counit.clone(), antipode)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct EmbeddingJson {
    /// matrix[b] = dense image of the b-th subalgebra basis vector
    pub matrix: Vec<Vec<Rat>>,
}

impl EmbeddingJson {
    pub fn from_embedding(e: &SubalgebraEmbedding) -> Self {
        EmbeddingJson {
            matrix: (0..e.sub.dim).map(|b| e.basis_image(b).to_dense(e.amb.dim)).collect(),
        }
    }

    pub fn to_embedding(
        &self,
        sub: Rc<StructureAlgebra>,
        amb: Rc<StructureAlgebra>,
    ) -> Result<SubalgebraEmbedding, HopfError> {
        let map = self.matrix.iter().map(|v| SparseVec::from_dense(v)).collect();
        SubalgebraEmbedding::new(sub, amb, map)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct DepthRowJson {
    pub n: usize,
    pub odd: bool,
    #[serde(rename = "even_BA")]
    pub even_ba: Option<bool>,
    #[serde(rename = "even_AB")]
    pub even_ab: Option<bool>,
}

#[derive(Serialize, Debug)]
pub struct DepthReportJson {
    pub extension: String,
    pub table: Vec<DepthRowJson>,
    pub min_odd: Option<usize>,
    pub min_even: Option<usize>,
    pub min_depth: Option<usize>,
    pub theorems: Vec<TheoremCheck>,
}

impl DepthReportJson {
    pub fn from_report(r: &DepthReport, theorems: Vec<TheoremCheck>) -> Self {
        DepthReportJson {
            extension: r.extension.clone(),
            table: r
                .table
                .iter()
                .map(|row| DepthRowJson {
                    n: row.n,
                    odd: row.odd,
                    even_ba: row.even_sub_amb,
                    even_ab: row.even_amb_sub,
                })
                .collect(),
            min_odd: r.min_odd,
            min_even: r.min_even,
            min_depth: r.min_depth,
            theorems,
        }
    }
}

/// Wrapper embedding input hashes and the tool version in every report.
#[derive(Serialize, Debug)]
pub struct Envelope<T: Serialize> {
    pub tool: ToolInfo,
    pub inputs: Vec<InputInfo>,
    pub report: T,
}

#[derive(Serialize, Debug)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Serialize, Debug)]
pub struct InputInfo {
    pub spec: String,
    pub sha256: String,
}

pub fn envelope<T: Serialize>(inputs: Vec<InputInfo>, report: T) -> Envelope<T> {
    Envelope {
        tool: ToolInfo { name: "hopfdepth", version: env!("CARGO_PKG_VERSION") },
        inputs,
        report,
    }
}

pub fn input_info(spec: &str, payload: &[u8]) -> InputInfo {
    use sha2::{Digest, Sha256};
    let mut hasher = Sha256::new();
    hasher.update(payload);
    InputInfo { spec: spec.to_string(), sha256: format!("{:x}", hasher.finalize()) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::symmetric;

    #[test]
    fn group_round_trip() {
        let g = symmetric(3);
        let j = GroupJson::from_group(&g);
        let s = serde_json::to_string(&j).unwrap();
        let back: GroupJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_group().unwrap(), g);
    }

    #[test]
    fn hopf_round_trip() {
        let h = HopfStructure::group_hopf(&symmetric(3));
        let j = HopfJson::from_hopf(&h);
        let s = serde_json::to_string(&j).unwrap();
        let back: HopfJson = serde_json::from_str(&s).unwrap();
        let h2 = back.to_hopf().unwrap();
        assert!(h2.alg.same_structure(&h.alg));
        assert_eq!(h2.antipode(), h.antipode());
    }

    #[test]
    fn corrupted_hopf_rejected_on_load() {
        let h = HopfStructure::group_hopf(&crate::group::cyclic(2));
        let mut j = HopfJson::from_hopf(&h);
        // corrupt Δ(g): g ⊗ e instead of g ⊗ g
        j.comult[1] = vec![Rat::zero(), Rat::zero(), Rat::one(), Rat::zero()];
        let err = j.to_hopf().unwrap_err();
        assert!(matches!(err, HopfError::HopfAxiom { .. }));
    }

    #[test]
    fn rationals_as_strings() {
        let h = HopfStructure::group_hopf(&crate::group::cyclic(2));
        let s = serde_json::to_string(&HopfJson::from_hopf(&h)).unwrap();
        assert!(s.contains("\"1\""));
        assert!(!s.contains("1.0"));
    }
}
