//! Command-line front-end: build objects from the builtin catalog or from
//! JSON files, run axiom checks, compute depth tables, normality,
//! centralizers, and the full theorem verification catalog.
//!
//! Exit codes: 0 success, 1 validation error, 2 unsupported computation
//! (non-semisimple similarity). Identical invocations produce byte-identical
//! JSON; the text format is a human-readable rendering of the same data.

use std::path::{Path, PathBuf};
use std::rc::Rc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::StructureAlgebra;
use crate::catalog::{builtin, resolve_extension, CatalogObject};
use crate::depth::{centralizer, centralizer_of_first_factor, is_normal, min_depth, DepthOptions};
use crate::error::HopfError;
use crate::hopf::{HopfExtension, HopfStructure};
use crate::json::{
    envelope, input_info, AlgebraJson, DepthReportJson, EmbeddingJson, GroupJson, HopfJson,
    InputInfo,
};
use crate::sparse::RrefOptions;
use crate::theorems::{
    analyze_double, analyze_heisenberg, analyze_tensor_dcp, verify_catalog, TheoremCheck,
};

#[derive(Parser, Debug)]
#[command(name = "hopfdepth", version, about = "Exact depth computations for Hopf algebra extensions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Thread pool size (falls back to HOPFDEPTH_THREADS, then all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Seed for the randomized modular fast path
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Enable the certified modular fast path for rank computations
    #[arg(long, global = true)]
    pub fast_prime: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a builtin group or validate a group file; emits group JSON
    Group {
        #[arg(long, conflicts_with = "input")]
        builtin: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Build a builtin Hopf algebra or validate a Hopf file; emits Hopf JSON
    Hopf {
        /// one of group:N, dual:N
        #[arg(long, conflicts_with = "input")]
        builtin: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Build a product construction: double:S3, heisenberg:C3, tensor:C2, …
    Build {
        #[arg(long)]
        spec: String,
    },
    /// Validate a file against its full axiom suite
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Minimum odd/even depth of an extension, with theorem cross-checks
    Depth {
        /// builtin spec (double:S3, …) or a JSON file path
        #[arg(long)]
        ambient: String,
        /// side name (group-side, dual-side, …) or a JSON file path
        #[arg(long)]
        sub: String,
        /// embedding matrix JSON, required with file inputs
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
    /// Ad-stability of a Hopf subalgebra pair
    Normality {
        #[arg(long)]
        ambient: String,
        #[arg(long)]
        sub: String,
    },
    /// Centralizer of a factor of a builtin construction
    Centralizer {
        #[arg(long)]
        ambient: String,
        #[arg(long)]
        sub: String,
    },
    /// Run the theorem verification suite over the whole catalog
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Group,
    Algebra,
    Hopf,
}

pub fn run(cli: &Cli) -> Result<(), HopfError> {
    init_threads(cli.threads);
    let opts = DepthOptions {
        n_max: 4,
        rref: RrefOptions { fast_prime: cli.fast_prime, seed: cli.seed },
    };
    match &cli.command {
        Command::Group { builtin: b, input } => {
            let (g, inputs) = match (b, input) {
                (Some(name), None) => {
                    let g = crate::group::builtin_group(name)?;
                    (g, vec![input_info(&format!("group:{name}"), name.as_bytes())])
                }
                (None, Some(path)) => {
                    let (bytes, info) = read_input(path)?;
                    let j: GroupJson = serde_json::from_slice(&bytes)?;
                    (j.to_group()?, vec![info])
                }
                _ => return Err(HopfError::InvalidInput("pass --builtin or --in".into())),
            };
            emit(cli, inputs, GroupJson::from_group(&g))
        }
        Command::Hopf { builtin: b, input } => {
            let (h, inputs) = match (b, input) {
                (Some(name), None) => {
                    let spec =
                        if name.contains(':') { name.clone() } else { format!("hopf:{name}") };
                    let obj = builtin(&spec)?;
                    let h = match obj {
                        CatalogObject::Hopf { hopf, .. } => hopf,
                        _ => {
                            return Err(HopfError::InvalidInput(format!(
                                "{spec} is not a plain Hopf algebra; use `build`"
                            )))
                        }
                    };
                    (h, vec![input_info(&spec, spec.as_bytes())])
                }
                (None, Some(path)) => {
                    let (bytes, info) = read_input(path)?;
                    let j: HopfJson = serde_json::from_slice(&bytes)?;
                    (j.to_hopf()?, vec![info])
                }
                _ => return Err(HopfError::InvalidInput("pass --builtin or --in".into())),
            };
            emit(cli, inputs, HopfJson::from_hopf(&h))
        }
        Command::Build { spec } => {
            let obj = builtin(spec)?;
            let inputs = vec![input_info(spec, spec.as_bytes())];
            let payload = match obj {
                CatalogObject::Group(g) => serde_json::to_value(GroupJson::from_group(&g))?,
                CatalogObject::Hopf { hopf, .. } => {
                    serde_json::to_value(HopfJson::from_hopf(&hopf))?
                }
                CatalogObject::Double(case) => {
                    serde_json::to_value(HopfJson::from_hopf(case.double.hopf()))?
                }
                CatalogObject::Heisenberg(case) => {
                    serde_json::to_value(AlgebraJson::from_algebra(&case.smash.fact.algebra))?
                }
                CatalogObject::TensorDcp(case) => {
                    serde_json::to_value(HopfJson::from_hopf(&case.dcp.hopf))?
                }
            };
            emit(cli, inputs, payload)
        }
        Command::Check { kind, input } => {
            let (bytes, info) = read_input(input)?;
            match kind {
                CheckKind::Group => {
                    let j: GroupJson = serde_json::from_slice(&bytes)?;
                    let g = j.to_group()?;
                    emit(cli, vec![info], json!({ "valid": true, "order": g.order() }))
                }
                CheckKind::Algebra => {
                    let j: AlgebraJson = serde_json::from_slice(&bytes)?;
                    let a = j.to_algebra()?;
                    emit(cli, vec![info], json!({ "valid": true, "dim": a.dim }))
                }
                CheckKind::Hopf => {
                    let j: HopfJson = serde_json::from_slice(&bytes)?;
                    // assemble without the fused validation so the full
                    // report can be emitted with witnesses
                    let alg = j.algebra.to_algebra()?;
                    let d = alg.dim;
                    let comult =
                        j.comult.iter().map(|v| crate::sparse::SparseVec::from_dense(v)).collect();
                    let antipode = crate::algebra::SparseMat::new(
                        d,
                        j.antipode.iter().map(|v| crate::sparse::SparseVec::from_dense(v)).collect(),
                    );
                    match HopfStructure::new(alg, comult, j.counit.clone(), antipode) {
                        Ok(h) => {
                            let report = h.check_axioms();
                            emit(cli, vec![info], report)
                        }
                        Err(e) => Err(e),
                    }
                }
            }
        }
        Command::Depth { ambient, sub, map, n_max } => {
            let opts = DepthOptions { n_max: *n_max, ..opts };
            let (report, checks, inputs) = depth_command(ambient, sub, map.as_deref(), opts)?;
            emit(cli, inputs, DepthReportJson::from_report(&report, checks))
        }
        Command::Normality { ambient, sub } => {
            let ext = resolve_extension(ambient, sub)?;
            let (Some(sub_hopf), Some(amb_hopf)) = (ext.sub_hopf, ext.amb_hopf) else {
                return Err(HopfError::InvalidInput(format!(
                    "{ambient} {sub} is not a Hopf subalgebra pair"
                )));
            };
            let hext = HopfExtension::new(sub_hopf, amb_hopf, ext.emb)?;
            let rep = is_normal(&hext);
            let inputs = vec![input_info(&format!("{ambient}#{sub}"), ambient.as_bytes())];
            emit(
                cli,
                inputs,
                json!({
                    "extension": ext.name,
                    "normal": rep.normal,
                    "left_stable": rep.left_stable,
                    "right_stable": rep.right_stable,
                    "witness": rep.witness.map(|(a, b)| json!({ "ambient_basis": a, "sub_basis": b })),
                }),
            )
        }
        Command::Centralizer { ambient, sub } => {
            let ext = resolve_extension(ambient, sub)?;
            let c = centralizer(&ext.emb);
            let mut payload = json!({
                "extension": ext.name,
                "dim": c.dim(),
                "basis": c.basis().iter().map(|v| v.to_dense(ext.emb.amb.dim)).collect::<Vec<_>>(),
            });
            // for the first factor of a double cross product, attach the
            // factored comparison
            if let CatalogObject::Double(case) = builtin(ambient)? {
                if matches!(*sub, ref s if s == "dual-side" || s == "first") {
                    let rep = centralizer_of_first_factor(&case.double.dcp);
                    payload["factored"] = json!({
                        "center_first_dim": rep.center_first_dim,
                        "normal_core_dim": rep.core_dim,
                        "factored_dim": rep.factored.dim(),
                        "equals_computed": rep.factored_equals_computed,
                    });
                }
            }
            let inputs = vec![input_info(&format!("{ambient}#{sub}"), ambient.as_bytes())];
            emit(cli, inputs, payload)
        }
        Command::Verify => {
            let reports = verify_catalog(opts)?;
            let inputs = vec![input_info("catalog", b"catalog")];
            emit(cli, inputs, reports)
        }
    }
}

fn depth_command(
    ambient: &str,
    sub: &str,
    map: Option<&Path>,
    opts: DepthOptions,
) -> Result<(crate::depth::DepthReport, Vec<TheoremCheck>, Vec<InputInfo>), HopfError> {
    if Path::new(ambient).exists() {
        // file route: ambient + sub algebras plus an embedding matrix
        let (amb_bytes, amb_info) = read_input(Path::new(ambient))?;
        let amb = parse_algebra_or_hopf(&amb_bytes)?;
        let Some(map_path) = map else {
            return Err(HopfError::InvalidInput(
                "file-based extensions need --map with the embedding matrix".into(),
            ));
        };
        let (sub_bytes, sub_info) = read_input(Path::new(sub))?;
        let sub_alg = parse_algebra_or_hopf(&sub_bytes)?;
        let (map_bytes, map_info) = read_input(map_path)?;
        let emb_json: EmbeddingJson = serde_json::from_slice(&map_bytes)?;
        let emb = emb_json.to_embedding(sub_alg, amb)?;
        let report = min_depth(&format!("{sub} in {ambient}"), &emb, opts)?;
        Ok((report, Vec::new(), vec![amb_info, sub_info, map_info]))
    } else {
        let inputs = vec![input_info(&format!("{ambient}#{sub}"), ambient.as_bytes())];
        let obj = builtin(ambient)?;
        match obj {
            CatalogObject::Double(case) => {
                let a = analyze_double(&case.group, opts)?;
                let report = match sub {
                    "group-side" | "base-side" | "second" => a.group_side,
                    "dual-side" | "first" => a.dual_side,
                    _ => return Err(HopfError::InvalidInput(format!("unknown side {sub:?}"))),
                };
                Ok((report, a.checks, inputs))
            }
            CatalogObject::Heisenberg(case) => {
                if !matches!(sub, "group-side" | "base-side" | "second") {
                    let ext = resolve_extension(ambient, sub)?;
                    let report = min_depth(&ext.name, &ext.emb, opts)?;
                    return Ok((report, Vec::new(), inputs));
                }
                let a = analyze_heisenberg(&case.group, opts)?;
                Ok((a.report, a.checks, inputs))
            }
            CatalogObject::TensorDcp(case) => {
                let a = analyze_tensor_dcp(&case.group, opts)?;
                let report = match sub {
                    "op-side" | "first" => a.first_side,
                    "group-side" | "base-side" | "second" => a.second_side,
                    _ => return Err(HopfError::InvalidInput(format!("unknown side {sub:?}"))),
                };
                Ok((report, a.checks, inputs))
            }
            _ => Err(HopfError::InvalidInput(format!(
                "{ambient} is not a two-factor construction"
            ))),
        }
    }
}

fn parse_algebra_or_hopf(bytes: &[u8]) -> Result<Rc<StructureAlgebra>, HopfError> {
    if let Ok(h) = serde_json::from_slice::<HopfJson>(bytes) {
        if let Ok(hopf) = h.to_hopf() {
            return Ok(hopf.alg.clone());
        }
    }
    let j: AlgebraJson = serde_json::from_slice(bytes)?;
    j.to_algebra()
}

/// Reads a JSON input, unwrapping a report envelope when one is present so
/// that files produced by `build --out` feed straight back in.
fn read_input(path: &Path) -> Result<(Vec<u8>, InputInfo), HopfError> {
    let bytes = std::fs::read(path)?;
    let info = input_info(&path.display().to_string(), &bytes);
    if let Ok(v) = serde_json::from_slice::<Value>(&bytes) {
        if v.get("tool").is_some() {
            if let Some(report) = v.get("report") {
                return Ok((serde_json::to_vec(report)?, info));
            }
        }
    }
    Ok((bytes, info))
}

fn init_threads(flag: Option<usize>) {
    let n = flag.or_else(|| {
        std::env::var("HOPFDEPTH_THREADS").ok().and_then(|s| s.parse().ok())
    });
    if let Some(n) = n {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn emit<T: Serialize>(cli: &Cli, inputs: Vec<InputInfo>, report: T) -> Result<(), HopfError> {
    let env = envelope(inputs, report);
    let rendered = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&env)?;
            s.push('\n');
            s
        }
        Format::Text => {
            let v = serde_json::to_value(&env)?;
            let mut s = String::new();
            render_text(&v, 0, &mut s);
            s
        }
    };
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {val}\n")),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {item}\n")),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{v}\n")),
    }
}

/// Entry point shared by the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success codes
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
