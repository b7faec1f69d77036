//! Builtin constructions reachable by shorthand names, and the fixed case
//! list the verification suites run over.
//!
//! Shorthands: `group:S3`, `dual:S3`, `double:S3`, `heisenberg:C3`,
//! `tensor:C2`. Group names are `C<n>`, `D<n>`, `S<n>` (n ≤ 4), `Q8` and
//! `x`-products such as `C2xC2`.

use std::rc::Rc;

use crate::algebra::SubalgebraEmbedding;
use crate::error::HopfError;
use crate::group::{builtin_group, FiniteGroup};
use crate::hopf::HopfStructure;
use crate::products::{
    drinfeld_double, heisenberg_double, paired_dcp, DoubleCrossProduct, DrinfeldDouble,
    PairedBialgebras, SmashProduct,
};

/// A named object built from the builtin catalog.
pub enum CatalogObject {
    Group(FiniteGroup),
    Hopf { name: String, hopf: Rc<HopfStructure> },
    Double(Box<DoubleCase>),
    Heisenberg(Box<HeisenbergCase>),
    TensorDcp(Box<TensorDcpCase>),
}

pub struct DoubleCase {
    pub group: FiniteGroup,
    pub double: DrinfeldDouble,
}

pub struct HeisenbergCase {
    pub group: FiniteGroup,
    pub base: Rc<HopfStructure>,
    pub smash: SmashProduct,
}

pub struct TensorDcpCase {
    pub group: FiniteGroup,
    pub base: Rc<HopfStructure>,
    pub dcp: DoubleCrossProduct,
}

pub fn double_case(g: FiniteGroup) -> Result<DoubleCase, HopfError> {
    let h = HopfStructure::group_hopf(&g);
    let double = drinfeld_double(&h)?;
    Ok(DoubleCase { group: g, double })
}

pub fn heisenberg_case(g: FiniteGroup) -> Result<HeisenbergCase, HopfError> {
    let base = HopfStructure::group_hopf(&g);
    let smash = heisenberg_double(&base)?;
    Ok(HeisenbergCase { group: g, base, smash })
}

/// The trivial-pairing double cross product (kG)^op ⋈ kG.
pub fn tensor_dcp_case(g: FiniteGroup) -> Result<TensorDcpCase, HopfError> {
    let base = HopfStructure::group_hopf(&g);
    let pairing = PairedBialgebras::trivial(base.clone(), base.clone())?;
    let dcp = paired_dcp(&pairing)?;
    Ok(TensorDcpCase { group: g, base, dcp })
}

/// Expands a `kind:name` shorthand into a built object.
pub fn builtin(spec: &str) -> Result<CatalogObject, HopfError> {
    let Some((kind, name)) = spec.split_once(':') else {
        return Err(HopfError::UnknownBuiltin { spec: spec.to_string() });
    };
    let g = builtin_group(name)?;
    match kind {
        "group" => Ok(CatalogObject::Group(g)),
        "hopf" => Ok(CatalogObject::Hopf {
            name: format!("k{}", g.name),
            hopf: HopfStructure::group_hopf(&g),
        }),
        "dual" => {
            let name = format!("(k{})*", g.name);
            Ok(CatalogObject::Hopf { name, hopf: HopfStructure::group_hopf(&g).dual() })
        }
        "double" => Ok(CatalogObject::Double(Box::new(double_case(g)?))),
        "heisenberg" | "smash" => Ok(CatalogObject::Heisenberg(Box::new(heisenberg_case(g)?))),
        "tensor" | "dcp" => Ok(CatalogObject::TensorDcp(Box::new(tensor_dcp_case(g)?))),
        _ => Err(HopfError::UnknownBuiltin { spec: spec.to_string() }),
    }
}

/// An extension B ↪ A resolved from a builtin spec and a side name.
pub struct ResolvedExtension {
    pub name: String,
    pub emb: SubalgebraEmbedding,
    /// Hopf structures when the pair is a Hopf subalgebra pair
    pub sub_hopf: Option<Rc<HopfStructure>>,
    pub amb_hopf: Option<Rc<HopfStructure>>,
}

/// Resolves `--ambient <spec> --sub <side>`. Sides: `group-side`/`base-side`
/// and `dual-side` for doubles and Heisenberg doubles; `first`/`op-side` and
/// `second`/`group-side` for tensor double cross products.
pub fn resolve_extension(spec: &str, side: &str) -> Result<ResolvedExtension, HopfError> {
    let obj = builtin(spec)?;
    let unknown_side = || HopfError::InvalidInput(format!("unknown side {side:?} for {spec}"));
    match obj {
        CatalogObject::Double(case) => {
            let d = &case.double;
            match side {
                "group-side" | "base-side" | "second" => Ok(ResolvedExtension {
                    name: format!("k{} in D(k{})", case.group.name, case.group.name),
                    emb: d.base_side().clone(),
                    sub_hopf: Some(d.base.clone()),
                    amb_hopf: Some(d.hopf().clone()),
                }),
                "dual-side" | "first" => Ok(ResolvedExtension {
                    name: format!("(k{})* in D(k{})", case.group.name, case.group.name),
                    emb: d.dual_side().clone(),
                    sub_hopf: Some(d.dual_cop.clone()),
                    amb_hopf: Some(d.hopf().clone()),
                }),
                _ => Err(unknown_side()),
            }
        }
        CatalogObject::Heisenberg(case) => match side {
            "group-side" | "base-side" | "second" => Ok(ResolvedExtension {
                name: format!("k{} in H(k{})", case.group.name, case.group.name),
                emb: case.smash.fact.second.clone(),
                sub_hopf: Some(case.base.clone()),
                amb_hopf: None,
            }),
            "dual-side" | "first" => Ok(ResolvedExtension {
                name: format!("(k{})* in H(k{})", case.group.name, case.group.name),
                emb: case.smash.fact.first.clone(),
                sub_hopf: None,
                amb_hopf: None,
            }),
            _ => Err(unknown_side()),
        },
        CatalogObject::TensorDcp(case) => match side {
            "op-side" | "first" => Ok(ResolvedExtension {
                name: format!("(k{})^op in (k{})^op⋈k{0}", case.group.name, case.group.name),
                emb: case.dcp.first_emb.clone(),
                sub_hopf: Some(case.dcp.pair.first.clone()),
                amb_hopf: Some(case.dcp.hopf.clone()),
            }),
            "group-side" | "base-side" | "second" => Ok(ResolvedExtension {
                name: format!("k{} in (k{})^op⋈k{0}", case.group.name, case.group.name),
                emb: case.dcp.second_emb.clone(),
                sub_hopf: Some(case.dcp.pair.second.clone()),
                amb_hopf: Some(case.dcp.hopf.clone()),
            }),
            _ => Err(unknown_side()),
        },
        CatalogObject::Group(_) | CatalogObject::Hopf { .. } => Err(HopfError::InvalidInput(
            format!("{spec} is not a two-factor construction; no sides to pick"),
        )),
    }
}

/// Groups whose doubles the verification suites cover.
pub fn double_catalog_groups() -> Vec<FiniteGroup> {
    ["C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"]
        .iter()
        .map(|n| builtin_group(n).expect("builtin"))
        .collect()
}

pub fn heisenberg_catalog_groups() -> Vec<FiniteGroup> {
    ["C2", "C3"].iter().map(|n| builtin_group(n).expect("builtin")).collect()
}

pub fn tensor_dcp_catalog_groups() -> Vec<FiniteGroup> {
    vec![builtin_group("S3").expect("builtin")]
}
