//! Argument parsing and command dispatch.

use crate::acceptance;
use crate::format::{element_to_json, CoefficientsJson, PictureJson, PresentationJson};
use crate::report::{CommandReport, Timing};
use anyhow::{anyhow, bail, Context, Result};
use asphere_core::classifier::{classify, AsphericalBasis, Classification, ClassificationResult, Witness};
use asphere_core::cosetenum::{check_quotient, quotient_presentation, todd_coxeter, QuotientCase, QuotientClaim};
use asphere_core::curvature::region_curvature;
use asphere_core::groups::ExtendedNat;
use asphere_core::pictures::{generate_sphere, verify_picture, Census, SphereFamily, SphereFamilyId};
use asphere_core::presentation::derive_tuple;
use asphere_core::stargraph::{enumerate_cycle_labels, StarGraph};
use asphere_core::weights::{decide_weak_asphericity, verify_counterexample, SearchMethod, WeakAsphericityVerdict, WeightFunction};
use asphere_core::Rational;
use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

pub const MAX_COSETS_ENV: &str = "ASPHERE_MAX_COSETS";
pub const DEFAULT_MAX_COSETS: usize = 2_000_000;
pub const DEFAULT_WEIGHT_BOUND: usize = 100_000;
/// Closed walks grow like `3^k`; longer labels are refused.
pub const MAX_STAR_DEGREE: usize = 14;

#[derive(Debug, Parser)]
#[command(name = "asphere", version, about = "Asphericity tools for relative presentations with relator t a t b t c t^-1 d")]
pub struct Cli {
    /// Add wall-clock timing to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Print a JSON report for commands whose default output is plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the coefficients in a JSON file.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
    /// List canonical labels of reduced closed paths of a given length in the star graph.
    StarList {
        #[arg(long)]
        degree: usize,
    },
    /// Weight function checks.
    Weights {
        #[command(subcommand)]
        command: WeightsCommand,
    },
    /// Finitely presented groups.
    Fp {
        #[command(subcommand)]
        command: FpCommand,
    },
    /// Check one of the finite quotient claims by coset enumeration.
    #[command(name = "lemma32")]
    Quotient {
        /// One of i, i-bdt, ii, iii, vi, vii, viii.
        #[arg(long)]
        case: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Spherical pictures.
    Sphere {
        #[command(subcommand)]
        command: SphereCommand,
    },
    /// Curvature of a region with the given vertex degrees, as a multiple of pi.
    Curvature {
        /// Comma-separated vertex degrees, e.g. 4,4,4.
        #[arg(long)]
        degrees: String,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum WeightsCommand {
    /// Decide whether a weight function makes the star graph weakly aspherical.
    Check {
        /// Weights of the a, b, c, d edges, e.g. 1/2,1/2,1,0.
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_WEIGHT_BOUND)]
        bound: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum FpCommand {
    /// Index of the subgroup (order of the group if none is given) by coset enumeration.
    Order {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum SphereCommand {
    /// Build the picture of a sphere family.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u64,
        /// Write the picture here instead of embedding it in the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a picture against coefficients.
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        instance: PathBuf,
    },
}

/// What a command produced.
enum Output {
    Json { command: &'static str, input: Value, result: Value, code: i32 },
    Text { command: &'static str, input: Value, lines: Vec<String>, code: i32 },
}

fn max_cosets(flag: Option<usize>) -> Result<usize> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(MAX_COSETS_ENV) {
        Ok(s) => s.trim().parse().with_context(|| format!("{MAX_COSETS_ENV}={s:?} is not a number")),
        Err(_) => Ok(DEFAULT_MAX_COSETS),
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{} is not valid JSON", path.display()))
}

fn typed<T: DeserializeOwned>(v: &Value, what: &str) -> Result<T> {
    serde_json::from_value(v.clone()).with_context(|| format!("malformed {what}"))
}

fn extended(n: ExtendedNat) -> Value {
    match n {
        ExtendedNat::Finite(k) => json!(k),
        ExtendedNat::Infinite => json!("infinite"),
    }
}

fn witnesses(ws: &[Witness]) -> Value {
    ws.iter()
        .map(|w| json!({"representative": w.representative.name(), "condition": w.condition.name()}))
        .collect()
}

pub fn classification_json(c: &Classification) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("verdict".into(), json!(c.result.verdict_name()));
    match &c.result {
        ClassificationResult::Aspherical { basis, .. } => {
            let basis = match basis {
                AsphericalBasis::InfiniteCyclic => "infinite_cyclic",
                AsphericalBasis::NoConditionHolds => "no_condition_holds",
            };
            m.insert("basis".into(), json!(basis));
            m.insert("witnesses".into(), json!([]));
        }
        ClassificationResult::NotAspherical { witnesses: ws } => {
            m.insert("witnesses".into(), witnesses(ws));
        }
        ClassificationResult::OpenCase { exceptions } => {
            let e = c.result.exception().map(|e| e.name());
            m.insert("exception".into(), json!(e));
            m.insert("witnesses".into(), witnesses(exceptions));
        }
        ClassificationResult::Unsupported { reason } => {
            m.insert("reason".into(), json!(reason));
        }
    }
    if let Some(h) = &c.h {
        let inv = h.invariants.as_ref().map(|i| json!({"free_rank": i.free_rank, "torsion": i.torsion}));
        m.insert("H".into(), json!({"order": extended(h.order), "cyclic": h.cyclic, "invariants": inv}));
    }
    Value::Object(m)
}

fn census_json(c: &Census) -> Value {
    c.entries.iter().map(|(w, m)| json!({"label": w.to_string(), "count": m})).collect()
}

fn parse_alpha(s: &str) -> Result<WeightFunction> {
    let vals = s
        .split(',')
        .map(|x| x.trim().parse::<Rational>().map_err(|_| anyhow!("bad weight {x:?}")))
        .collect::<Result<Vec<_>>>()?;
    if vals.len() != 4 {
        bail!("expected four weights for the a, b, c, d edges, got {}", vals.len());
    }
    Ok(WeightFunction::new(vals)?)
}

fn dispatch(cmd: &Command) -> Result<Output> {
    Ok(match cmd {
        Command::Classify { input } => {
            let file = read_json(input)?;
            let co = typed::<CoefficientsJson>(&file, "coefficients")?.build()?;
            let c = classify(&co)?;
            Output::Json { command: "classify", input: json!({"input": file}), result: classification_json(&c), code: EXIT_OK }
        }
        Command::StarList { degree } => {
            if *degree == 0 {
                bail!("degree must be positive");
            }
            if *degree > MAX_STAR_DEGREE {
                return Err(asphere_core::Error::Resource { what: "star-list degree", limit: MAX_STAR_DEGREE }.into());
            }
            let labels = enumerate_cycle_labels(&StarGraph::canonical(), *degree);
            Output::Text {
                command: "star-list",
                input: json!({"degree": degree}),
                lines: labels.iter().map(|w| w.to_string()).collect(),
                code: EXIT_OK,
            }
        }
        Command::Weights { command: WeightsCommand::Check { alpha, instance, bound } } => {
            let file = read_json(instance)?;
            let co = typed::<CoefficientsJson>(&file, "coefficients")?.build()?;
            let tuple = derive_tuple(&co)?;
            let w = parse_alpha(alpha)?;
            let g = StarGraph::canonical();
            let verdict = decide_weak_asphericity(&g, &w, &tuple, *bound)?;
            let alpha_json: Vec<String> = w.weights().iter().map(|r| r.to_string()).collect();
            let (result, code) = match verdict {
                WeakAsphericityVerdict::WeaklyAspherical(cert) => {
                    let method = match cert.method {
                        SearchMethod::FiniteReachability => "finite_reachability",
                        SearchMethod::AbelianShapes => "abelian_shapes",
                    };
                    (json!({"verdict": "WeaklyAspherical", "certificate": {"method": method, "explored": cert.explored}}), EXIT_OK)
                }
                WeakAsphericityVerdict::Counterexample(c) => {
                    let verified = verify_counterexample(&g, &w, &tuple, &c);
                    let cycle = json!({"darts": c.darts, "label": c.label.to_string(), "weight": c.weight.to_string()});
                    (json!({"verdict": "Counterexample", "cycle": cycle, "verified": verified}), EXIT_OK)
                }
                WeakAsphericityVerdict::Unknown { bound, reason } => {
                    (json!({"verdict": "Unknown", "bound": bound, "reason": reason}), EXIT_RESOURCE)
                }
            };
            let mut result = result;
            result["alpha"] = json!(alpha_json);
            Output::Json {
                command: "weights check",
                input: json!({"alpha": alpha_json, "bound": bound, "instance": file}),
                result,
                code,
            }
        }
        Command::Fp { command: FpCommand::Order { file, max_cosets: flag } } => {
            let text = read_json(file)?;
            let p = typed::<PresentationJson>(&text, "presentation")?;
            let pres = p.build()?;
            let limit = max_cosets(*flag)?;
            let table = todd_coxeter(&pres, limit)?;
            let key = if p.subgroup.is_empty() { "order" } else { "index" };
            Output::Json {
                command: "fp order",
                input: json!({"file": text, "max_cosets": limit}),
                result: json!({ key: table.index() }),
                code: EXIT_OK,
            }
        }
        Command::Quotient { case, k, max_cosets: flag } => {
            let c = QuotientCase::parse(case).ok_or_else(|| anyhow!("unknown case {case:?}"))?;
            let inst = quotient_presentation(c, *k)?;
            let limit = max_cosets(*flag)?;
            let out = check_quotient(&inst, limit)?;
            let (claim, claimed) = match out.claim {
                QuotientClaim::Order(n) => ("order", json!(n)),
                QuotientClaim::TOrderAtMost(n) => ("t_order_at_most", json!(n)),
                QuotientClaim::TOrderFinite => ("t_order_finite", Value::Null),
            };
            Output::Json {
                command: "lemma32",
                input: json!({"case": c.name(), "k": k, "max_cosets": limit}),
                result: json!({
                    "case": c.name(),
                    "k": inst.param,
                    "order": out.order,
                    "t_order": out.t_order,
                    "claim": claim,
                    "claimed": claimed,
                    "match": out.holds,
                }),
                code: EXIT_OK,
            }
        }
        Command::Sphere { command: SphereCommand::Generate { family, n, out } } => {
            let id = SphereFamilyId::new(SphereFamily::parse(family)?, *n)?;
            let pic = generate_sphere(id)?;
            let pj = PictureJson::from_picture(&pic);
            let mut result = json!({
                "family": id.family.name(),
                "n": n,
                "vertices": pic.vertices.len(),
                "edges": pic.edge_count(),
                "census": census_json(&pic.census()?),
            });
            result["faces"] = json!(pic.census()?.faces());
            match out {
                Some(path) => {
                    let text = serde_json::to_string_pretty(&pj)? + "\n";
                    std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
                    result["out"] = json!(path.display().to_string());
                }
                None => result["picture"] = serde_json::to_value(&pj)?,
            }
            Output::Json { command: "sphere generate", input: json!({"family": family, "n": n}), result, code: EXIT_OK }
        }
        Command::Sphere { command: SphereCommand::Verify { file, instance } } => {
            let pfile = read_json(file)?;
            let ifile = read_json(instance)?;
            let pic = typed::<PictureJson>(&pfile, "picture")?.build()?;
            let co = typed::<CoefficientsJson>(&ifile, "coefficients")?.build()?;
            let tuple = derive_tuple(&co)?;
            let r = verify_picture(&pic, &tuple)?;
            let result = json!({
                "passed": r.passed(),
                "corner_words_ok": r.corner_words_ok,
                "orientation_ok": r.orientation_ok,
                "connected": r.connected,
                "spherical": r.spherical,
                "all_region_labels_trivial": r.all_region_labels_trivial,
                "reduced": r.reduced,
                "vertices": r.vertices,
                "edges": r.edges,
                "faces": r.faces,
                "euler_characteristic": r.euler_characteristic,
                "curvature_total": r.curvature_total.to_string(),
                "dipoles": r.dipoles.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>(),
                "nontrivial_regions": r.nontrivial_regions.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "census": census_json(&pic.census()?),
                "b": element_to_json(&tuple.b),
                "c": element_to_json(&tuple.c),
                "d": element_to_json(&tuple.d),
            });
            Output::Json { command: "sphere verify", input: json!({"file": pfile, "instance": ifile}), result, code: EXIT_OK }
        }
        Command::Curvature { degrees } => {
            let ds = degrees
                .split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| anyhow!("bad degree {x:?}")))
                .collect::<Result<Vec<_>>>()?;
            let c = region_curvature(&ds)?;
            Output::Text { command: "curvature", input: json!({"degrees": ds}), lines: vec![c.to_string()], code: EXIT_OK }
        }
        Command::Selftest => {
            let outcomes = acceptance::run_all();
            let code = if outcomes.iter().all(|o| o.passed) { EXIT_OK } else { EXIT_DOMAIN };
            Output::Text {
                command: "selftest",
                input: json!({}),
                lines: outcomes.iter().map(|o| o.line(false)).collect(),
                code,
            }
        }
    })
}

fn exit_code(e: &anyhow::Error) -> i32 {
    let resource = e
        .chain()
        .filter_map(|c| c.downcast_ref::<asphere_core::Error>())
        .any(asphere_core::Error::is_resource);
    if resource {
        EXIT_RESOURCE
    } else {
        EXIT_DOMAIN
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let start = Instant::now();
    match dispatch(&cli.command) {
        Ok(output) => {
            let timing = cli.timing.then(|| Timing { elapsed_us: start.elapsed().as_micros() as u64 });
            let (command, input, result, code, text) = match output {
                Output::Json { command, input, result, code } => (command, input, result, code, None),
                Output::Text { command, input, lines, code } => {
                    let joined: String = lines.iter().map(|l| format!("{l}\n")).collect();
                    (command, input, json!(lines), code, Some(joined))
                }
            };
            match text {
                Some(t) if !cli.json => {
                    let _ = write!(out, "{t}");
                    if let Some(tm) = timing {
                        let _ = writeln!(err, "elapsed: {} us", tm.elapsed_us);
                    }
                }
                _ => {
                    let mut report = CommandReport::new(command, &input, result);
                    report.timing = timing;
                    let _ = writeln!(out, "{}", report.to_json());
                }
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            exit_code(&e)
        }
    }
}
