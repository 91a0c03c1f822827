//! Command-line front end: parse JSON set descriptions, run queries,
//! print human-readable reports or machine JSON, emit DOT lattices.
//!
//! Exit codes: 0 success / affirmative, 1 valid negative answer (not a
//! member, not separable, law fails), 2 usage or format error, 3
//! intrinsic-core method disagreement.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::closure;
use crate::error::Error;
use crate::exactla::Vector;
use crate::faces::{self, FaceDescriptor, FaceKind};
use crate::icore::{self, CalcCheck, IcrMethod, SampleConfig};
use crate::json as fmtjson;
use crate::polyset::LinearMap;
use crate::seqgallery as gallery;
use crate::{QSeq, QSet, QVec, Rat};

/// Everything a CLI invocation produces; `main` prints and exits.
pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutcome {
    fn ok(stdout: String) -> Self {
        CliOutcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn negative(stdout: String) -> Self {
        CliOutcome {
            code: 1,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: String) -> Self {
        CliOutcome {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "polyface",
    version,
    about = "Exact facial structure of convex sets: minimal faces, intrinsic cores, lattices, separation",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal face of a point in a set
    Minface {
        #[arg(long)]
        set: PathBuf,
        /// comma-separated rationals, e.g. "1/2,0"
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        json: bool,
    },
    /// Intrinsic-core membership test
    IcrTest {
        #[arg(long)]
        set: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// one of: segments, feasible-cone, affine-core, min-face, all
        #[arg(long, default_value = "all")]
        method: String,
        #[arg(long)]
        json: bool,
    },
    /// Relative interior (intrinsic core) as a mixed system
    Ri {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Full face lattice
    Lattice {
        #[arg(long)]
        set: PathBuf,
        /// write the Hasse diagram in DOT form to this file
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// All maximal chains of the face lattice
    Chains {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Nonempty faces whose relative interiors partition the set
    Decompose {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// The unique face whose intrinsic core holds the point
    Locate {
        #[arg(long)]
        set: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        json: bool,
    },
    /// Properly separate two sets with disjoint intrinsic cores
    Separate {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Supporting functional at a boundary point
    Support {
        #[arg(long)]
        set: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        json: bool,
    },
    /// Check an intrinsic-core calculus law on deterministic samples
    Check {
        /// one of: sum, translate, scale, linear-image, product, positive-hull
        #[arg(long)]
        law: String,
        #[arg(long)]
        set: PathBuf,
        /// second operand (sum, product)
        #[arg(long)]
        other: Option<PathBuf>,
        /// translation vector (translate), e.g. "3,-1"
        #[arg(long, allow_hyphen_values = true)]
        translate: Option<String>,
        /// scale factor (scale), e.g. "-2" or "1/3"
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// linear map rows (linear-image), e.g. "1,0;0,1"
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Sequence-space gallery queries
    Gallery {
        #[command(subcommand)]
        command: GalleryCommand,
    },
}

#[derive(Subcommand)]
enum GalleryCommand {
    /// Membership and minimal face in the box of [0,1]-valued sequences
    BoxMinface {
        /// "index:value" pairs, e.g. "1:1,2:1/2"; empty for the zero sequence
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        point: String,
    },
    /// Witness that the box has empty intrinsic core at this point
    BoxEmptyIcr {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        point: String,
    },
    /// Chain of Hilbert-cube faces from rational cuts
    CubeChain {
        /// strictly increasing thresholds, e.g. "1/2,3/2"
        #[arg(long, allow_hyphen_values = true)]
        thresholds: String,
        /// how many enumerated rationals to consult
        #[arg(long, default_value_t = 16)]
        prefix: usize,
    },
    /// Inclusion of two Hilbert-cube faces given by index sets
    CubeSubset {
        /// e.g. "1,3"
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
    },
    /// Membership in the ubiquitous set (positive leading coordinate)
    UbiqContains {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        point: String,
    },
    /// Witness that a sequence is linearly reachable from the set
    UbiqLin {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        point: String,
    },
    /// Witness that a member is not in the intrinsic core
    UbiqNotIcr {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        point: String,
    },
    /// Minimal-face order test: is `other` in the minimal face of `point`?
    UbiqMinface {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        other: String,
    },
    /// Minimal face (support set) in the nonnegative orthant
    OrthantMinface {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        point: String,
    },
    /// Fresh basis index missed by a nested chain of orthant faces
    OrthantChainGap {
        /// semicolon-separated index sets, e.g. "1;1,2;1,2,3"
        #[arg(long)]
        chain: String,
    },
}

/// Runs the CLI on explicit arguments (excluding the binary name) and
/// returns the outcome instead of exiting; deterministic for fixed
/// arguments, stdin and seeds.
pub fn run(args: &[String]) -> CliOutcome {
    run_with_stdin(args, None)
}

/// Like [`run`], with an optional JSON document standing in for any set
/// path given as `-`.
pub fn run_with_stdin(args: &[String], stdin: Option<&str>) -> CliOutcome {
    let mut argv = vec!["polyface".to_string()];
    argv.extend(args.iter().cloned());
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            if matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) {
                return CliOutcome::ok(rendered);
            }
            let first = rendered.lines().next().unwrap_or("bad arguments");
            return CliOutcome::usage(format!("{first}\n"));
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(outcome) => outcome,
        Err(err) => outcome_of_error(err),
    }
}

fn outcome_of_error(err: Error) -> CliOutcome {
    let code = match err {
        Error::NotMember
        | Error::NotProperlySeparable
        | Error::OverlappingInteriors
        | Error::IsInteriorPoint => 1,
        Error::MethodDisagreement { .. } => 3,
        _ => 2,
    };
    CliOutcome {
        code,
        stdout: String::new(),
        stderr: format!("{err}\n"),
    }
}

fn dispatch(command: Command, stdin: Option<&str>) -> Result<CliOutcome, Error> {
    match command {
        Command::Minface { set, point, json } => {
            let set = load_set(&set, stdin)?;
            let x = parse_point(&point, set.dim())?;
            let face = faces::minimal_face(&set, &x)?;
            if json {
                Ok(CliOutcome::ok(pretty(&face_to_value(&face))))
            } else {
                Ok(CliOutcome::ok(format!("{}\n", describe_face(&face))))
            }
        }
        Command::IcrTest {
            set,
            point,
            method,
            json,
        } => {
            let set = load_set(&set, stdin)?;
            let x = parse_point(&point, set.dim())?;
            let method = parse_method(&method)?;
            let inside = icore::icr_contains(&set, &x, method)?;
            let detail = match method {
                IcrMethod::All => format!("{inside} (all 4 methods agree)"),
                m => format!("{inside} (method {})", m.name()),
            };
            let out = if json {
                pretty(&json!({"member": inside, "method": method.name()}))
            } else {
                format!("{detail}\n")
            };
            if inside {
                Ok(CliOutcome::ok(out))
            } else {
                Ok(CliOutcome::negative(out))
            }
        }
        Command::Ri { set, json } => {
            let set = load_set(&set, stdin)?;
            let ri = icore::relative_interior(&set)?;
            if json {
                Ok(CliOutcome::ok(pretty(&fmtjson::set_to_value(&ri))))
            } else {
                Ok(CliOutcome::ok(format!("{ri:?}\n")))
            }
        }
        Command::Lattice { set, dot, json } => {
            let set = load_set(&set, stdin)?;
            let lattice = faces::face_lattice(&set)?;
            if let Some(path) = dot {
                fs::write(&path, lattice.to_dot())
                    .map_err(|e| Error::Format(format!("cannot write {}: {e}", path.display())))?;
            }
            if json {
                let nodes: Vec<Value> = lattice.nodes().iter().map(face_to_value).collect();
                let covers: Vec<Value> = lattice
                    .covers()
                    .iter()
                    .map(|&(a, b)| json!([a, b]))
                    .collect();
                Ok(CliOutcome::ok(pretty(
                    &json!({"faces": nodes, "covers": covers}),
                )))
            } else {
                let mut out = format!("{} faces\n", lattice.nodes().len());
                for node in lattice.nodes() {
                    let _ = writeln!(out, "  {}", describe_face(node));
                }
                let _ = writeln!(out, "{} cover edges", lattice.covers().len());
                Ok(CliOutcome::ok(out))
            }
        }
        Command::Chains { set, json } => {
            let set = load_set(&set, stdin)?;
            let lattice = faces::face_lattice(&set)?;
            let chains = lattice.maximal_chains();
            if json {
                let arr: Vec<Value> = chains
                    .iter()
                    .map(|c| {
                        Value::Array(
                            c.iter()
                                .map(|&i| face_to_value(&lattice.nodes()[i]))
                                .collect(),
                        )
                    })
                    .collect();
                Ok(CliOutcome::ok(pretty(&json!({"chains": arr}))))
            } else {
                let mut out = format!("{} maximal chains\n", chains.len());
                for chain in &chains {
                    let steps: Vec<String> = chain
                        .iter()
                        .map(|&i| describe_face_short(&lattice.nodes()[i]))
                        .collect();
                    let _ = writeln!(out, "  {}", steps.join(" < "));
                }
                Ok(CliOutcome::ok(out))
            }
        }
        Command::Decompose { set, json } => {
            let set = load_set(&set, stdin)?;
            let parts = icore::decompose(&set)?;
            if json {
                let arr: Vec<Value> = parts.iter().map(face_to_value).collect();
                Ok(CliOutcome::ok(pretty(&json!({"faces": arr}))))
            } else {
                let mut out = format!("{} nonempty faces\n", parts.len());
                for part in &parts {
                    let _ = writeln!(out, "  {}", describe_face(part));
                }
                Ok(CliOutcome::ok(out))
            }
        }
        Command::Locate { set, point, json } => {
            let set = load_set(&set, stdin)?;
            let x = parse_point(&point, set.dim())?;
            let face = icore::locate(&set, &x)?;
            if json {
                Ok(CliOutcome::ok(pretty(&face_to_value(&face))))
            } else {
                Ok(CliOutcome::ok(format!("{}\n", describe_face(&face))))
            }
        }
        Command::Separate { a, b, json } => {
            let a = load_set(&a, stdin)?;
            let b = load_set(&b, stdin)?;
            let cert = closure::properly_separate(&a, &b)?;
            let verified = cert.verify(&a, &b)?;
            if json {
                let mut value = fmtjson::certificate_to_value(&cert);
                value["verified"] = Value::Bool(verified);
                Ok(CliOutcome::ok(pretty(&value)))
            } else {
                Ok(CliOutcome::ok(format!(
                    "phi = {:?}, alpha = {}, witness a = {:?}, b = {:?}, verified = {}\n",
                    cert.phi, cert.alpha, cert.witness.0, cert.witness.1, verified
                )))
            }
        }
        Command::Support { set, point, json } => {
            let set = load_set(&set, stdin)?;
            let x = parse_point(&point, set.dim())?;
            let cert = closure::support_functional(&set, &x)?;
            if json {
                Ok(CliOutcome::ok(pretty(&fmtjson::certificate_to_value(
                    &cert,
                ))))
            } else {
                Ok(CliOutcome::ok(format!(
                    "phi = {:?}, alpha = {}, witness y = {:?} with phi(y) = {}\n",
                    cert.phi,
                    cert.alpha,
                    cert.witness.0,
                    cert.phi.dot(&cert.witness.0)
                )))
            }
        }
        Command::Check {
            law,
            set,
            other,
            translate,
            lambda,
            matrix,
            samples,
            seed,
            json,
        } => {
            let set = load_set(&set, stdin)?;
            let check = build_check(&law, set, other, translate, lambda, matrix, stdin)?;
            let config = SampleConfig {
                count: samples,
                seed,
            };
            let verdict = icore::check_calculus(&check, &config)?;
            let out = if json {
                let ce = verdict.counterexample.as_ref().map(|c| {
                    json!({
                        "point": fmtjson::vector_to_value(&c.point),
                        "side": format!("{:?}", c.side),
                    })
                });
                pretty(&json!({
                    "law": verdict.law.to_string(),
                    "holds": verdict.holds,
                    "counterexample": ce,
                }))
            } else if let Some(c) = &verdict.counterexample {
                format!(
                    "law {} fails at {:?} ({:?})\n",
                    verdict.law, c.point, c.side
                )
            } else {
                format!("law {} holds on {} samples\n", verdict.law, samples)
            };
            if verdict.holds {
                Ok(CliOutcome::ok(out))
            } else {
                Ok(CliOutcome::negative(out))
            }
        }
        Command::Gallery { command } => gallery_dispatch(command),
    }
}

fn gallery_dispatch(command: GalleryCommand) -> Result<CliOutcome, Error> {
    match command {
        GalleryCommand::BoxMinface { point } => {
            let x = parse_finseq(&point)?;
            let face = gallery::box_minimal_face(&x)?;
            let ones: Vec<usize> = face.ones.iter().copied().collect();
            let free: Vec<usize> = face.free.iter().copied().collect();
            Ok(CliOutcome::ok(pretty(&json!({
                "ones": ones, "free": free, "default": "0",
            }))))
        }
        GalleryCommand::BoxEmptyIcr { point } => {
            let x = parse_finseq(&point)?;
            let witness = gallery::box_empty_icr_witness(&x)?;
            Ok(CliOutcome::ok(pretty(&fmtjson::witness_to_value(&witness))))
        }
        GalleryCommand::CubeChain { thresholds, prefix } => {
            let ts = parse_rationals(&thresholds)?;
            if prefix == 0 {
                return Err(Error::Format("--prefix must be at least 1".into()));
            }
            if !ts.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::Format(
                    "--thresholds must be strictly increasing".into(),
                ));
            }
            let chain = gallery::cube_chain_from_cuts(&ts, prefix);
            let faces: Vec<Value> = chain
                .faces
                .iter()
                .map(|f| Value::Array(f.full.iter().map(|&i| json!(i)).collect()))
                .collect();
            Ok(CliOutcome::ok(pretty(&json!({
                "faces": faces,
                "strict_steps": chain.strict_steps,
            }))))
        }
        GalleryCommand::CubeSubset { c1, c2 } => {
            let f1 = gallery::CubeFaceDescriptor {
                full: parse_index_set(&c1)?,
            };
            let f2 = gallery::CubeFaceDescriptor {
                full: parse_index_set(&c2)?,
            };
            let subset = gallery::cube_face_subset(&f1, &f2);
            let out = format!("{subset}\n");
            if subset {
                Ok(CliOutcome::ok(out))
            } else {
                Ok(CliOutcome::negative(out))
            }
        }
        GalleryCommand::UbiqContains { point } => {
            let x = parse_finseq(&point)?;
            let inside = gallery::ubiq_contains(&x);
            let out = format!("{inside}\n");
            if inside {
                Ok(CliOutcome::ok(out))
            } else {
                Ok(CliOutcome::negative(out))
            }
        }
        GalleryCommand::UbiqLin { point } => {
            let y = parse_finseq(&point)?;
            let witness = gallery::ubiq_lin_witness(&y);
            Ok(CliOutcome::ok(pretty(&fmtjson::witness_to_value(&witness))))
        }
        GalleryCommand::UbiqNotIcr { point } => {
            let x = parse_finseq(&point)?;
            let witness = gallery::ubiq_not_icr_witness(&x)?;
            Ok(CliOutcome::ok(pretty(&fmtjson::witness_to_value(&witness))))
        }
        GalleryCommand::UbiqMinface { point, other } => {
            let x = parse_finseq(&point)?;
            let u = parse_finseq(&other)?;
            let inside = gallery::ubiq_minface_contains(&x, &u)?;
            let out = format!("{inside}\n");
            if inside {
                Ok(CliOutcome::ok(out))
            } else {
                Ok(CliOutcome::negative(out))
            }
        }
        GalleryCommand::OrthantMinface { point } => {
            let x = parse_finseq(&point)?;
            let face = gallery::orthant_minimal_face(&x)?;
            let indices: Vec<usize> = face.iter().copied().collect();
            Ok(CliOutcome::ok(pretty(&json!({"indices": indices}))))
        }
        GalleryCommand::OrthantChainGap { chain } => {
            let sets: Vec<BTreeSet<usize>> = chain
                .split(';')
                .filter(|s| !s.trim().is_empty())
                .map(parse_index_set)
                .collect::<Result<_, _>>()?;
            let witness = gallery::orthant_chain_gap::<Rat>(&sets)?;
            Ok(CliOutcome::ok(pretty(&fmtjson::witness_to_value(&witness))))
        }
    }
}

// ---------------------------------------------------------------------------
// parsing helpers
// ---------------------------------------------------------------------------

fn load_set(path: &Path, stdin: Option<&str>) -> Result<QSet, Error> {
    let text = if path.as_os_str() == "-" {
        stdin
            .ok_or_else(|| Error::Format("set path is '-' but no input was piped in".into()))?
            .to_string()
    } else {
        fs::read_to_string(path)
            .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?
    };
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Format(format!("{} is not JSON: {e}", path.display())))?;
    fmtjson::set_from_value(&value)
}

fn parse_rat(text: &str) -> Result<Rat, Error> {
    Rat::from_str(text.trim()).map_err(|_| Error::Format(format!("bad rational {text:?}")))
}

fn parse_rationals(text: &str) -> Result<Vec<Rat>, Error> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(parse_rat)
        .collect()
}

/// A point as comma-separated rationals, e.g. `1/2,0`.
fn parse_point(text: &str, dim: usize) -> Result<QVec, Error> {
    let entries = parse_rationals(text)?;
    if entries.len() != dim {
        return Err(Error::Format(format!(
            "--point has {} coordinates but the set has dimension {dim}",
            entries.len()
        )));
    }
    Ok(Vector::new(entries))
}

/// A finitely supported sequence as `index:value` pairs, e.g. `1:-5,3:2`;
/// the empty string is the zero sequence.
fn parse_finseq(text: &str) -> Result<QSeq, Error> {
    let mut pairs = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() || part == "0" {
            continue;
        }
        let (idx, val) = part.split_once(':').ok_or_else(|| {
            Error::Format(format!(
                "--point entries look like index:value, got {part:?}"
            ))
        })?;
        let index: usize = idx
            .trim()
            .parse()
            .map_err(|_| Error::Format(format!("bad sequence index {idx:?}")))?;
        if index == 0 {
            return Err(Error::Format("sequence indices start at 1".into()));
        }
        pairs.push((index, parse_rat(val)?));
    }
    Ok(gallery::FinSeq::new(pairs))
}

fn parse_index_set(text: &str) -> Result<BTreeSet<usize>, Error> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Format(format!("bad index {s:?}")))
                .and_then(|i| {
                    if i == 0 {
                        Err(Error::Format("indices start at 1".into()))
                    } else {
                        Ok(i)
                    }
                })
        })
        .collect()
}

fn parse_method(text: &str) -> Result<IcrMethod, Error> {
    match text {
        "segments" => Ok(IcrMethod::Segments),
        "feasible-cone" => Ok(IcrMethod::FeasibleCone),
        "affine-core" => Ok(IcrMethod::AffineCore),
        "min-face" => Ok(IcrMethod::MinFace),
        "all" => Ok(IcrMethod::All),
        other => Err(Error::Format(format!(
            "--method must be segments|feasible-cone|affine-core|min-face|all, got {other:?}"
        ))),
    }
}

fn build_check(
    law: &str,
    set: QSet,
    other: Option<PathBuf>,
    translate: Option<String>,
    lambda: Option<String>,
    matrix: Option<String>,
    stdin: Option<&str>,
) -> Result<CalcCheck<Rat>, Error> {
    let need_other = |other: Option<PathBuf>| -> Result<QSet, Error> {
        let path = other.ok_or_else(|| Error::Format("--other is required for this law".into()))?;
        load_set(&path, stdin)
    };
    match law {
        "sum" => Ok(CalcCheck::Sum(set, need_other(other)?)),
        "product" => Ok(CalcCheck::Product(set, need_other(other)?)),
        "translate" => {
            let t = translate
                .ok_or_else(|| Error::Format("--translate is required for this law".into()))?;
            let dim = set.dim();
            Ok(CalcCheck::Translate(set, parse_point(&t, dim)?))
        }
        "scale" => {
            let l =
                lambda.ok_or_else(|| Error::Format("--lambda is required for this law".into()))?;
            Ok(CalcCheck::Scale(set, parse_rat(&l)?))
        }
        "linear-image" => {
            let m =
                matrix.ok_or_else(|| Error::Format("--matrix is required for this law".into()))?;
            let rows: Vec<QVec> = m
                .split(';')
                .filter(|s| !s.trim().is_empty())
                .map(|row| parse_rationals(row).map(Vector::new))
                .collect::<Result<_, _>>()?;
            if rows.is_empty() {
                return Err(Error::Format("--matrix needs at least one row".into()));
            }
            if rows.iter().any(|r| r.dim() != set.dim()) {
                return Err(Error::Format(format!(
                    "--matrix rows must have {} entries",
                    set.dim()
                )));
            }
            Ok(CalcCheck::LinearImage(
                set,
                LinearMap::new(crate::exactla::Matrix::from_rows(rows)),
            ))
        }
        "positive-hull" => Ok(CalcCheck::PositiveHull(set)),
        other => Err(Error::Format(format!(
            "--law must be sum|translate|scale|linear-image|product|positive-hull, got {other:?}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// output helpers
// ---------------------------------------------------------------------------

fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn face_to_value(face: &FaceDescriptor<Rat>) -> Value {
    match face.kind() {
        FaceKind::Empty => json!({"kind": "empty", "dim": -1}),
        FaceKind::ActiveSet(active) => json!({
            "kind": "active-set",
            "active": active.iter().copied().collect::<Vec<_>>(),
            "dim": face.dim().map(|d| d as i64).unwrap_or(-1),
        }),
        FaceKind::GeneratorSubset { points, rays } => json!({
            "kind": "generator-subset",
            "points": points.iter().copied().collect::<Vec<_>>(),
            "rays": rays.iter().copied().collect::<Vec<_>>(),
            "dim": face.dim().map(|d| d as i64).unwrap_or(-1),
        }),
    }
}

fn describe_face(face: &FaceDescriptor<Rat>) -> String {
    match face.kind() {
        FaceKind::Empty => "empty face (dim -1)".to_string(),
        FaceKind::ActiveSet(active) => {
            let ids: Vec<String> = active.iter().map(usize::to_string).collect();
            format!(
                "face dim {}, active rows {{{}}}",
                face.dim().map(|d| d as i64).unwrap_or(-1),
                ids.join(",")
            )
        }
        FaceKind::GeneratorSubset { points, rays } => {
            let ps: Vec<String> = points.iter().map(|i| format!("p{i}")).collect();
            let rs: Vec<String> = rays.iter().map(|i| format!("r{i}")).collect();
            format!(
                "face dim {}, generators {{{}}}",
                face.dim().map(|d| d as i64).unwrap_or(-1),
                ps.into_iter().chain(rs).collect::<Vec<_>>().join(",")
            )
        }
    }
}

fn describe_face_short(face: &FaceDescriptor<Rat>) -> String {
    match face.kind() {
        FaceKind::Empty => "∅".to_string(),
        FaceKind::ActiveSet(active) => {
            let ids: Vec<String> = active.iter().map(usize::to_string).collect();
            format!("{{{}}}", ids.join(","))
        }
        FaceKind::GeneratorSubset { points, .. } => {
            let ids: Vec<String> = points.iter().map(|i| format!("p{i}")).collect();
            format!("{{{}}}", ids.join(","))
        }
    }
}
