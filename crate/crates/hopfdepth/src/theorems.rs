//! Executable verification of the depth theorems on catalog cases.
//!
//! Each check compares a claimed identity, inequality or biconditional with
//! exactly computed values and reports PASS, FAIL or NA together with both
//! sides. When a claim and the computation disagree the computed value is
//! ground truth: the claim is flagged, never adjusted.

use serde::Serialize;
use serde_json::{json, Value};

use crate::bimodule::Bimodule;
use crate::catalog::{double_case, heisenberg_case, tensor_dcp_case, DoubleCase, HeisenbergCase,
    TensorDcpCase};
use crate::depth::{
    action_trivial, centralizer_of_first_factor, is_normal, min_depth_with, module_depth,
    DepthOptions, DepthReport, ExtensionTower, Structure, WhichAction,
};
use crate::error::HopfError;
use crate::group::FiniteGroup;
use crate::hopf::{quotient_module_over, HopfExtension, HopfStructure};
use crate::products::{
    group_double_fast, induced_twist, matched_pair_from_factorization, DoubleCrossProduct,
    FactorizationAlgebra,
};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "NA")]
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremCheck {
    pub name: String,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Value,
}

impl TheoremCheck {
    fn new(name: impl Into<String>, ok: bool, lhs: Value, rhs: Value) -> Self {
        TheoremCheck {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
        }
    }

    fn na(name: impl Into<String>, lhs: Value, rhs: Value) -> Self {
        TheoremCheck { name: name.into(), status: Status::NotApplicable, lhs, rhs }
    }
}

#[derive(Debug, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub checks: Vec<TheoremCheck>,
}

impl CaseReport {
    pub fn failures(&self) -> Vec<&TheoremCheck> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn find(&self, name: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn depth_value(v: Option<usize>) -> Value {
    match v {
        Some(d) => json!(d),
        None => Value::Null,
    }
}

/// Normality ⟺ minimum even depth ≤ 2 (equivalently minimum depth ≤ 2).
fn check_normality_biconditional(
    name: &str,
    normal: bool,
    report: &DepthReport,
) -> TheoremCheck {
    let depth_le_2 = report.min_even == Some(2);
    TheoremCheck::new(
        name,
        normal == depth_le_2,
        json!({ "normal": normal }),
        json!({ "min_even": depth_value(report.min_even) }),
    )
}

/// Analysis of one Drinfel'd double D(kG) with both factor extensions.
pub struct DoubleAnalysis {
    pub case: DoubleCase,
    pub group_side: DepthReport,
    pub dual_side: DepthReport,
    pub checks: Vec<TheoremCheck>,
}

pub fn analyze_double(g: &FiniteGroup, opts: DepthOptions) -> Result<DoubleAnalysis, HopfError> {
    let case = double_case(g.clone())?;
    let dd = &case.double;
    let hopf = dd.hopf().clone();
    let mut checks = Vec::new();

    // fast path against the general construction, tensor for tensor
    let fast = group_double_fast(g);
    let mut agree = fast.alg.same_structure(&hopf.alg);
    for i in 0..hopf.dim() {
        agree = agree
            && fast.comult_of_basis(i) == hopf.comult_of_basis(i)
            && fast.counit_of_basis(i) == hopf.counit_of_basis(i)
            && fast.antipode().col(i) == hopf.antipode().col(i);
    }
    checks.push(TheoremCheck::new(
        "group_double_fast_agreement",
        agree,
        json!("direct group formulas"),
        json!("double cross product of the coadjoint actions"),
    ));

    // depth of both sides
    let mut group_tower = ExtensionTower::new(dd.base_side().clone(), opts);
    let group_side = min_depth_with(
        &format!("k{} in D(k{})", g.name, g.name),
        &mut group_tower,
    )?;
    let mut dual_tower = ExtensionTower::new(dd.dual_side().clone(), opts);
    let dual_side = min_depth_with(
        &format!("(k{})* in D(k{})", g.name, g.name),
        &mut dual_tower,
    )?;

    // normality and the depth-2 theorem, both sides
    let group_ext = HopfExtension::new(dd.base.clone(), hopf.clone(), dd.base_side().clone())?;
    let dual_ext = HopfExtension::new(dd.dual_cop.clone(), hopf.clone(), dd.dual_side().clone())?;
    let group_normal = is_normal(&group_ext);
    let dual_normal = is_normal(&dual_ext);
    checks.push(check_normality_biconditional(
        "normal_iff_depth_two[group-side]",
        group_normal.normal,
        &group_side,
    ));
    checks.push(check_normality_biconditional(
        "normal_iff_depth_two[dual-side]",
        dual_normal.normal,
        &dual_side,
    ));

    // trivial-action criterion, both sides
    let tri_trivial = action_trivial(&dd.dcp.pair, WhichAction::OnFirst);
    let lft_trivial = action_trivial(&dd.dcp.pair, WhichAction::OnSecond);
    checks.push(TheoremCheck::new(
        "trivial_action_iff_depth_two[group-side]",
        tri_trivial == (group_side.min_even == Some(2)),
        json!({ "action_trivial": tri_trivial }),
        json!({ "min_even": depth_value(group_side.min_even) }),
    ));
    checks.push(TheoremCheck::new(
        "trivial_action_iff_depth_two[dual-side]",
        lft_trivial == (dual_side.min_even == Some(2)),
        json!({ "action_trivial": lft_trivial }),
        json!({ "min_even": depth_value(dual_side.min_even) }),
    ));

    // abelian criterion
    let abelian = g.is_abelian();
    checks.push(TheoremCheck::new(
        "abelian_iff_depth_two",
        abelian == group_side.min_depth.is_some_and(|d| d <= 2),
        json!({ "abelian": abelian }),
        json!({ "min_depth": depth_value(group_side.min_depth) }),
    ));

    // the blanket minimum-odd-depth-3 claim for doubles
    checks.push(TheoremCheck::new(
        "double_odd_depth_three_claim",
        group_side.min_odd == Some(3),
        json!({ "claimed_min_odd": 3 }),
        json!({ "computed_min_odd": depth_value(group_side.min_odd) }),
    ));

    // odd depth through module depth of the coadjoint module, group side
    {
        let d = hopf_dim(&dd.base);
        let acts = (0..d)
            .map(|s| {
                crate::algebra::SparseMat::new(
                    d,
                    (0..d).map(|f| dd.dcp.pair.tri_basis(s, f).clone()).collect(),
                )
            })
            .collect();
        let coadjoint_module = Bimodule::from_left_module(dd.base.alg.clone(), acts, d);
        let trace =
            module_depth(&dd.base, &coadjoint_module, true, 8, group_tower.sig_engine())?;
        let predicted = trace.depth.map(|n| 2 * n + 1);
        checks.push(TheoremCheck::new(
            "odd_depth_formula[group-side]",
            predicted == group_side.min_odd,
            json!({ "module_depth": depth_value(trace.depth), "predicted_min_odd": depth_value(predicted) }),
            json!({ "computed_min_odd": depth_value(group_side.min_odd) }),
        ));
    }

    // the same equality read on the dual side, through the swapped
    // factorization presentation; flagged when it fails
    {
        let swapped = matched_pair_from_factorization(
            &hopf,
            (&dd.base, dd.base_side()),
            (&dd.dual_cop, dd.dual_side()),
        )?;
        let df = hopf_dim(&dd.base);
        let ds = hopf_dim(&dd.dual_cop);
        let acts = (0..ds)
            .map(|s| {
                crate::algebra::SparseMat::new(
                    df,
                    (0..df).map(|f| swapped.tri_basis(s, f).clone()).collect(),
                )
            })
            .collect();
        let shadow = Bimodule::from_left_module(dd.dual_cop.alg.clone(), acts, df);
        let trace = module_depth(&dd.dual_cop, &shadow, true, 8, dual_tower.sig_engine())?;
        let predicted = trace.depth.map(|n| 2 * n + 1);
        checks.push(TheoremCheck::new(
            "odd_depth_formula[dual-side]",
            predicted == dual_side.min_odd,
            json!({ "module_depth": depth_value(trace.depth), "predicted_min_odd": depth_value(predicted) }),
            json!({ "computed_min_odd": depth_value(dual_side.min_odd) }),
        ));
    }

    // quotient-module bounds, both sides
    checks.push(check_quotient_bounds(
        "quotient_bounds[group-side]",
        &dd.base,
        dd.base_side(),
        &group_side,
        &mut group_tower,
        true,
    )?);
    checks.push(check_quotient_bounds(
        "quotient_bounds[dual-side]",
        &dd.dual_cop,
        dd.dual_side(),
        &dual_side,
        &mut dual_tower,
        true,
    )?);

    // structural tensor-power comparison over the second factor
    let n22 = if hopf.dim() <= 36 { 3 } else { 2 };
    checks.extend(check_power_model(&dd.dcp, &mut group_tower, n22)?);

    // centralizer of the dual-side factor
    checks.extend(check_centralizer(&dd.dcp, g));

    Ok(DoubleAnalysis { case, group_side, dual_side, checks })
}

fn hopf_dim(h: &HopfStructure) -> usize {
    h.dim()
}

fn check_quotient_bounds(
    name: &str,
    sub_hopf: &HopfStructure,
    emb: &crate::algebra::SubalgebraEmbedding,
    report: &DepthReport,
    tower: &mut ExtensionTower,
    ambient_is_hopf: bool,
) -> Result<TheoremCheck, HopfError> {
    let counit = sub_hopf.counit().to_vec();
    let q = quotient_module_over(emb, &counit);
    let trace = module_depth(sub_hopf, &q.module, ambient_is_hopf, 8, tower.sig_engine())?;
    let lhs = json!({
        "quotient_dim": q.module.dim,
        "module_depth": depth_value(trace.depth),
        "lower": trace.depth.map(|d| 2 * d + 1),
        "upper": trace.depth.map(|d| 2 * d + 2),
    });
    let rhs = json!({ "min_depth": depth_value(report.min_depth) });
    let ok = match (trace.depth, report.min_depth) {
        (Some(dq), Some(d)) => 2 * dq + 1 <= d && d <= 2 * dq + 2,
        _ => false,
    };
    if ambient_is_hopf {
        Ok(TheoremCheck::new(name, ok, lhs, rhs))
    } else {
        Ok(TheoremCheck::na(name, lhs, rhs))
    }
}

/// dim(S^{⊗_B n}) = dim(A)^n · dim(B) and matching B-B support signatures
/// between the honestly computed tower and the structural model.
fn check_power_model(
    dcp: &DoubleCrossProduct,
    tower: &mut ExtensionTower,
    n_max: usize,
) -> Result<Vec<TheoremCheck>, HopfError> {
    let fact = FactorizationAlgebra::build(induced_twist(&dcp.pair)?)?;
    let da = fact.map.a.dim;
    let db = fact.map.b.dim;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let model = fact.power_module(n);
        let expected_dim = da.pow(n as u32) * db;
        let tower_dim = tower.power_dim(n);
        let tower_sig = tower.signature(n, Structure::SubSub)?;
        let model_sig = tower.sig_engine().signature(&model)?;
        let ok = tower_dim == expected_dim && model.dim == expected_dim && tower_sig == model_sig;
        out.push(TheoremCheck::new(
            format!("power_model[n={n}]"),
            ok,
            json!({ "expected_dim": expected_dim, "model_dim": model.dim, "signatures_equal": tower_sig == model_sig }),
            json!({ "tower_dim": tower_dim }),
        ));
    }
    Ok(out)
}

fn check_centralizer(dcp: &DoubleCrossProduct, g: &FiniteGroup) -> Vec<TheoremCheck> {
    let mut out = Vec::new();
    let rep = centralizer_of_first_factor(dcp);
    out.push(TheoremCheck::new(
        "centralizer_factorization",
        rep.factored_equals_computed,
        json!({
            "centralizer_dim": rep.computed.dim(),
            "factored_dim": rep.factored.dim(),
        }),
        json!({
            "center_first_dim": rep.center_first_dim,
            "normal_core_dim": rep.core_dim,
        }),
    ));
    // dimension form of the group corollary: dim C = dim Z((kG)*) · dim Z(kG)
    let z_dual = g.order();
    let z_group = g.conjugacy_classes().classes.len();
    out.push(TheoremCheck::new(
        "centralizer_dimension_product",
        rep.computed.dim() == z_dual * z_group,
        json!({ "centralizer_dim": rep.computed.dim() }),
        json!({ "z_dual_dim": z_dual, "z_group_dim": z_group, "product": z_dual * z_group }),
    ));
    // subspace form: C equals the span of Z((kG)*) ⋈ Z(kG)
    let z_first = dcp.pair.first.alg.center();
    let z_second = dcp.pair.second.alg.center();
    let amb = &dcp.hopf.alg;
    let mut gens = Vec::new();
    for z in z_first.basis() {
        let zf = dcp.first_emb.apply(z);
        for w in z_second.basis() {
            let ws = dcp.second_emb.apply(w);
            gens.push(amb.mul_vec(&zf, &ws));
        }
    }
    let span = Subspace::from_spans(amb.dim, &gens);
    out.push(TheoremCheck::new(
        "centralizer_span_comparison",
        span == rep.computed,
        json!({ "span_dim": span.dim() }),
        json!({ "centralizer_dim": rep.computed.dim() }),
    ));
    out
}

/// Analysis of a Heisenberg double extension kG ↪ (kG)* # kG.
pub struct HeisenbergAnalysis {
    pub case: HeisenbergCase,
    pub report: DepthReport,
    pub checks: Vec<TheoremCheck>,
}

pub fn analyze_heisenberg(
    g: &FiniteGroup,
    opts: DepthOptions,
) -> Result<HeisenbergAnalysis, HopfError> {
    let case = heisenberg_case(g.clone())?;
    let mut checks = Vec::new();
    let emb = case.smash.fact.second.clone();
    let mut tower = ExtensionTower::new(emb.clone(), opts);
    let report = min_depth_with(&format!("k{} in H(k{})", g.name, g.name), &mut tower)?;

    // module depth of the hit-action module drives every claim here; it is
    // a module algebra, not a module coalgebra, so the truncated chain is
    // used
    let d = case.base.dim();
    let hit_module = Bimodule::from_left_module(
        case.base.alg.clone(),
        (0..d).map(|a| case.smash.action.act[a].clone()).collect(),
        d,
    );
    let trace = module_depth(&case.base, &hit_module, false, 8, tower.sig_engine())?;

    checks.push(TheoremCheck::new(
        "odd_depth_bound",
        match (trace.depth, report.min_odd) {
            (Some(dm), Some(mo)) => mo <= 2 * dm + 1,
            _ => false,
        },
        json!({ "module_depth": depth_value(trace.depth) }),
        json!({ "min_odd": depth_value(report.min_odd) }),
    ));
    checks.push(TheoremCheck::new(
        "odd_depth_formula",
        trace.depth.map(|dm| 2 * dm + 1) == report.min_odd,
        json!({ "predicted_min_odd": trace.depth.map(|dm| 2 * dm + 1) }),
        json!({ "computed_min_odd": depth_value(report.min_odd) }),
    ));
    // the worked example pins the value 3 for the minimum odd depth
    checks.push(TheoremCheck::new(
        "heisenberg_odd_depth_claim",
        report.min_odd == Some(3),
        json!({ "claimed": 3 }),
        json!({ "computed_min_odd": depth_value(report.min_odd) }),
    ));
    // the displayed formula d + 1, read against the combined minimum
    checks.push(TheoremCheck::new(
        "smash_depth_plus_one_reading",
        trace.depth.map(|dm| dm + 1) == report.min_depth,
        json!({ "module_depth_plus_one": trace.depth.map(|dm| dm + 1) }),
        json!({ "computed_min_depth": depth_value(report.min_depth) }),
    ));
    // the 2d+1 reading, against the odd minimum
    checks.push(TheoremCheck::new(
        "smash_two_d_plus_one_reading",
        trace.depth.map(|dm| 2 * dm + 1) == report.min_odd,
        json!({ "two_d_plus_one": trace.depth.map(|dm| 2 * dm + 1) }),
        json!({ "computed_min_odd": depth_value(report.min_odd) }),
    ));

    // quotient-module bounds do not apply: the ambient is not a Hopf
    // algebra; reported with the computed values for the record
    checks.push(check_quotient_bounds(
        "quotient_bounds",
        &case.base,
        &emb,
        &report,
        &mut tower,
        false,
    )?);

    // structural power comparison
    let da = case.smash.fact.map.a.dim;
    let db = case.smash.fact.map.b.dim;
    for n in 1..=3usize {
        let model = case.smash.fact.power_module(n);
        let expected = da.pow(n as u32) * db;
        let tower_dim = tower.power_dim(n);
        let tower_sig = tower.signature(n, Structure::SubSub)?;
        let model_sig = tower.sig_engine().signature(&model)?;
        checks.push(TheoremCheck::new(
            format!("power_model[n={n}]"),
            tower_dim == expected && model.dim == expected && tower_sig == model_sig,
            json!({ "expected_dim": expected, "model_dim": model.dim, "signatures_equal": tower_sig == model_sig }),
            json!({ "tower_dim": tower_dim }),
        ));
    }

    Ok(HeisenbergAnalysis { case, report, checks })
}

/// Analysis of the trivial-pairing double cross product (kG)^op ⋈ kG.
pub struct TensorDcpAnalysis {
    pub case: TensorDcpCase,
    pub first_side: DepthReport,
    pub second_side: DepthReport,
    pub checks: Vec<TheoremCheck>,
}

pub fn analyze_tensor_dcp(
    g: &FiniteGroup,
    opts: DepthOptions,
) -> Result<TensorDcpAnalysis, HopfError> {
    let case = tensor_dcp_case(g.clone())?;
    let dcp = &case.dcp;
    let hopf = dcp.hopf.clone();
    let mut checks = Vec::new();

    let mut first_tower = ExtensionTower::new(dcp.first_emb.clone(), opts);
    let first_side = min_depth_with(
        &format!("(k{})^op in (k{})^op⋈k{0}", g.name, g.name),
        &mut first_tower,
    )?;
    let mut second_tower = ExtensionTower::new(dcp.second_emb.clone(), opts);
    let second_side = min_depth_with(
        &format!("k{} in (k{})^op⋈k{0}", g.name, g.name),
        &mut second_tower,
    )?;

    let first_ext =
        HopfExtension::new(dcp.pair.first.clone(), hopf.clone(), dcp.first_emb.clone())?;
    let second_ext =
        HopfExtension::new(dcp.pair.second.clone(), hopf.clone(), dcp.second_emb.clone())?;
    checks.push(check_normality_biconditional(
        "normal_iff_depth_two[op-side]",
        is_normal(&first_ext).normal,
        &first_side,
    ));
    checks.push(check_normality_biconditional(
        "normal_iff_depth_two[group-side]",
        is_normal(&second_ext).normal,
        &second_side,
    ));

    let tri_trivial = action_trivial(&dcp.pair, WhichAction::OnFirst);
    let lft_trivial = action_trivial(&dcp.pair, WhichAction::OnSecond);
    checks.push(TheoremCheck::new(
        "trivial_action_iff_depth_two[group-side]",
        tri_trivial == (second_side.min_even == Some(2)),
        json!({ "action_trivial": tri_trivial }),
        json!({ "min_even": depth_value(second_side.min_even) }),
    ));
    checks.push(TheoremCheck::new(
        "trivial_action_iff_depth_two[op-side]",
        lft_trivial == (first_side.min_even == Some(2)),
        json!({ "action_trivial": lft_trivial }),
        json!({ "min_even": depth_value(first_side.min_even) }),
    ));

    // the worked tensor example claims odd depth 3; the computed value is
    // the record
    checks.push(TheoremCheck::new(
        "tensor_dcp_odd_depth_claim",
        second_side.min_odd == Some(3),
        json!({ "claimed_min_odd": 3 }),
        json!({ "computed_min_odd": depth_value(second_side.min_odd) }),
    ));

    // odd depth through the derived module: the second factor acts on the
    // first through the twist shadow (trivially here)
    {
        let df = dcp.pair.first.dim();
        let ds = dcp.pair.second.dim();
        let acts = (0..ds)
            .map(|s| {
                crate::algebra::SparseMat::new(
                    df,
                    (0..df).map(|f| dcp.pair.tri_basis(s, f).clone()).collect(),
                )
            })
            .collect();
        let shadow = Bimodule::from_left_module(dcp.pair.second.alg.clone(), acts, df);
        let trace = module_depth(&case.base, &shadow, true, 8, second_tower.sig_engine())?;
        checks.push(TheoremCheck::new(
            "odd_depth_formula[group-side]",
            trace.depth.map(|dm| 2 * dm + 1) == second_side.min_odd,
            json!({ "module_depth": depth_value(trace.depth) }),
            json!({ "computed_min_odd": depth_value(second_side.min_odd) }),
        ));
    }

    checks.push(check_quotient_bounds(
        "quotient_bounds[op-side]",
        &dcp.pair.first,
        &dcp.first_emb,
        &first_side,
        &mut first_tower,
        true,
    )?);
    checks.push(check_quotient_bounds(
        "quotient_bounds[group-side]",
        &dcp.pair.second,
        &dcp.second_emb,
        &second_side,
        &mut second_tower,
        true,
    )?);

    let rep = centralizer_of_first_factor(dcp);
    checks.push(TheoremCheck::new(
        "centralizer_factorization",
        rep.factored_equals_computed,
        json!({ "centralizer_dim": rep.computed.dim(), "factored_dim": rep.factored.dim() }),
        json!({ "center_first_dim": rep.center_first_dim, "normal_core_dim": rep.core_dim }),
    ));

    Ok(TensorDcpAnalysis { case, first_side, second_side, checks })
}

/// Runs every analysis in the catalog; the `verify` command serializes this.
pub fn verify_catalog(opts: DepthOptions) -> Result<Vec<CaseReport>, HopfError> {
    let mut out = Vec::new();
    for g in crate::catalog::double_catalog_groups() {
        let name = format!("double:{}", g.name);
        let a = analyze_double(&g, opts)?;
        out.push(CaseReport { case: name, checks: a.checks });
    }
    for g in crate::catalog::heisenberg_catalog_groups() {
        let name = format!("heisenberg:{}", g.name);
        let a = analyze_heisenberg(&g, opts)?;
        out.push(CaseReport { case: name, checks: a.checks });
    }
    for g in crate::catalog::tensor_dcp_catalog_groups() {
        let name = format!("tensor:{}", g.name);
        let a = analyze_tensor_dcp(&g, opts)?;
        out.push(CaseReport { case: name, checks: a.checks });
    }
    Ok(out)
}
