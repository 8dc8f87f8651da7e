//! The `goodsg` command line.
//!
//! Every subcommand reads one JSON description of a good semigroup from a
//! file (or stdin) and prints a JSON object, or `key: value` lines with
//! `--format text`. Exit codes: 0 success, 1 invalid input semigroup or
//! failed check, 2 unreadable input, 3 unsupported dimension, 4 operation
//! needs a local semigroup.
//!
//! ```json
//! {"dim":2,"kind":"generators","generators":[[4,2],[6,3]],"conductor":[29,15]}
//! {"kind":"small","small":[[0,0],[2,2],[3,3]]}
//! {"kind":"duplication","semigroup":[2,3],"ideal":[6]}
//! {"kind":"amalgamation","semigroup":[2,3],"target":[3,4],"ideal":[3],"factor":2}
//! {"kind":"cartesian","left":[3,5,7],"right":[4,5]}
//! {"kind":"maximal","left":[4,6,13],"right":[2,3],"maximal":[[0,0],[4,2]]}
//! ```

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::arf::{arf_closure_with_level, arf_saturation, is_arf, saturation_infima_closure, ArfLevel};
use crate::constructions::{amalgamation, duplication, from_maximal_elements, product};
use crate::error::Error;
use crate::gensys::{is_minimal_system, minimal_generating_system, product_generating_system, GenSystem};
use crate::ideals::{canonical_generators, canonical_ideal, is_symmetric};
use crate::lattice::{box_points, Point};
use crate::numerical::{NumericalIdeal, NumericalSemigroup};
use crate::plot::Plot;
use crate::semigroup::{validate_small_set, GoodSemigroup, SmallSet};

/// A semigroup description as read from JSON.
#[derive(Clone, Debug, Deserialize)]
pub struct InputDocument {
    #[serde(default = "two")]
    pub dim: usize,
    #[serde(flatten)]
    pub description: Description,
}

fn two() -> usize {
    2
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Description {
    Generators { generators: Vec<Vec<i64>>, conductor: Vec<i64> },
    /// `conductor` is optional and, when present, must be the largest point.
    Small {
        small: Vec<Vec<i64>>,
        #[serde(default)]
        conductor: Option<Vec<i64>>,
    },
    Duplication { semigroup: Vec<i64>, ideal: Vec<i64> },
    Amalgamation { semigroup: Vec<i64>, target: Vec<i64>, ideal: Vec<i64>, factor: i64 },
    Cartesian { left: Vec<i64>, right: Vec<i64> },
    Maximal { left: Vec<i64>, right: Vec<i64>, maximal: Vec<Vec<i64>> },
}

#[derive(Parser, Debug)]
#[command(name = "goodsg", version, about = "Compute with good semigroups of N^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// JSON description; `-` or nothing reads stdin.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Render {
    Svg,
    Ascii,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate the description and report the first failing axiom.
    Check(Common),
    /// Small elements and conductor, re-readable as `kind: small`.
    Small(Common),
    /// Membership of one point.
    Member {
        #[command(flatten)]
        io: Common,
        #[arg(long, value_parser = parse_point)]
        point: Point,
    },
    /// The minimal good generating system.
    Mingens(Common),
    /// Whether the given points form a minimal good generating system.
    IsMingens {
        #[command(flatten)]
        io: Common,
        #[arg(long, num_args = 1.., value_parser = parse_point, required = true)]
        gens: Vec<Point>,
    },
    /// Maximal elements.
    Maximal(Common),
    /// The canonical ideal and its generators.
    Canonical(Common),
    /// Whether the semigroup is symmetric.
    Symmetric(Common),
    /// Whether the semigroup is Arf.
    Arf(Common),
    /// The Arf closure.
    ArfClosure(Common),
    /// Saturation under `b + c - a` on a box, compared with the Arf closure.
    Saturate {
        #[command(flatten)]
        io: Common,
        /// Upper corner of the box; defaults to the conductor plus 2.
        #[arg(long = "box", value_parser = parse_point)]
        cap: Option<Point>,
    },
    /// Build the semigroup and describe it.
    Construct(Common),
    /// Draw the semigroup (or its canonical ideal).
    Plot {
        #[command(flatten)]
        io: Common,
        #[arg(long, value_enum, default_value_t = Render::Svg)]
        render: Render,
        /// Write the drawing here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Circle the minimal generating system.
        #[arg(long)]
        mark_gens: bool,
        /// Draw the canonical ideal instead.
        #[arg(long)]
        canonical: bool,
    },
}

fn parse_point(s: &str) -> Result<Point, String> {
    let coords: Result<Vec<i64>, _> = s.split(',').map(|x| x.trim().parse::<i64>()).collect();
    match coords {
        Ok(c) if !c.is_empty() => Ok(Point::new(c)),
        _ => Err(format!("expected comma separated integers, got {s:?}")),
    }
}

/// What went wrong, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    Parse(String),
    Library(Error),
    Io(std::io::Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Parse(_) | Failure::Io(_) => 2,
            Failure::Library(Error::UnsupportedDimension { .. }) => 3,
            Failure::Library(Error::NonLocal { .. }) => 4,
            Failure::Library(_) => 1,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Failure::Parse(m) => json!({"error": "parse", "message": m}),
            Failure::Io(e) => json!({"error": "io", "message": e.to_string()}),
            Failure::Library(e) => {
                let mut v = json!({"error": error_name(e), "message": e.to_string()});
                if let Error::NotGoodSemigroup { small, violation } | Error::NotGoodIdeal { small, violation } = e {
                    v["violation"] = json!(violation);
                    v["small"] = json!(small.points());
                }
                if let Error::NonLocal { witness } = e {
                    v["witness"] = json!(witness);
                }
                v
            }
        }
    }
}

fn error_name(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::UnsupportedDimension { .. } => "unsupported_dimension",
        Error::NotGoodSemigroup { .. } => "not_good_semigroup",
        Error::NotGoodIdeal { .. } => "not_good_ideal",
        Error::NonLocal { .. } => "non_local",
        Error::NotAGeneratingSystem => "not_a_generating_system",
        Error::GcdNotOne(_) => "gcd_not_one",
        Error::EmptyGenerators => "empty_generators",
        Error::InvalidInput(_) => "invalid_input",
        Error::NotContained(_) => "not_contained",
        Error::NotAMorphism { .. } => "not_a_morphism",
        Error::AmbientMismatch => "ambient_mismatch",
        Error::CanonicalMismatch(_) => "canonical_mismatch",
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// A built semigroup, with its factors when it was given as a product.
pub struct Built {
    pub semigroup: GoodSemigroup,
    pub factors: Option<Vec<NumericalSemigroup>>,
}

/// Parse a JSON description, checking dimensions and signs.
pub fn parse_document(text: &str) -> Result<InputDocument, String> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if doc.dim == 0 {
        return Err("dim must be positive".into());
    }
    let check_points = |name: &str, pts: &[Vec<i64>], dim: usize| -> Result<(), String> {
        for p in pts {
            if p.len() != dim {
                return Err(format!("{name}: point {p:?} does not have {dim} coordinates"));
            }
        }
        Ok(())
    };
    let planar = |kind: &str| -> Result<(), String> {
        if doc.dim != 2 {
            Err(format!("kind {kind} describes planar semigroups, but dim is {}", doc.dim))
        } else {
            Ok(())
        }
    };
    match &doc.description {
        Description::Generators { generators, conductor } => {
            check_points("generators", generators, doc.dim)?;
            check_points("conductor", std::slice::from_ref(conductor), doc.dim)?;
            check_signs("generators", generators.iter().flatten().chain(conductor))?;
        }
        Description::Small { small, conductor } => {
            check_points("small", small, doc.dim)?;
            check_signs("small", small.iter().flatten())?;
            if let Some(c) = conductor {
                if small.iter().max() != Some(c) {
                    return Err(format!("conductor {c:?} is not the largest small element"));
                }
            }
        }
        Description::Duplication { semigroup, ideal } => {
            planar("duplication")?;
            check_signs("duplication", semigroup.iter().chain(ideal))?;
        }
        Description::Amalgamation { semigroup, target, ideal, factor } => {
            planar("amalgamation")?;
            check_signs("amalgamation", semigroup.iter().chain(target).chain(ideal).chain([factor]))?;
        }
        Description::Cartesian { left, right } => {
            planar("cartesian")?;
            check_signs("cartesian", left.iter().chain(right))?;
        }
        Description::Maximal { left, right, maximal } => {
            planar("maximal")?;
            check_points("maximal", maximal, 2)?;
            check_signs("maximal", left.iter().chain(right).chain(maximal.iter().flatten()))?;
        }
    }
    Ok(doc)
}

fn check_signs<'a>(name: &str, xs: impl IntoIterator<Item = &'a i64>) -> Result<(), String> {
    match xs.into_iter().find(|&&x| x < 0) {
        Some(x) => Err(format!("{name}: negative value {x}")),
        None => Ok(()),
    }
}

fn points(v: &[Vec<i64>]) -> Vec<Point> {
    v.iter().map(|p| Point::new(p.clone())).collect()
}

/// Build the semigroup a document describes.
pub fn build(doc: &InputDocument) -> crate::Result<Built> {
    let plain = |semigroup| Built { semigroup, factors: None };
    Ok(match &doc.description {
        Description::Generators { generators, conductor } => {
            plain(GoodSemigroup::from_generators(&points(generators), &Point::new(conductor.clone()))?)
        }
        Description::Small { small, .. } => plain(GoodSemigroup::from_points(points(small))?),
        Description::Duplication { semigroup, ideal } => {
            let s = NumericalSemigroup::from_generators(semigroup)?;
            let e = NumericalIdeal::from_generators(&s, ideal)?;
            plain(duplication(&s, &e)?)
        }
        Description::Amalgamation { semigroup, target, ideal, factor } => {
            let s = NumericalSemigroup::from_generators(semigroup)?;
            let t = NumericalSemigroup::from_generators(target)?;
            let e = NumericalIdeal::from_generators(&t, ideal)?;
            plain(amalgamation(&s, &t, &e, *factor)?)
        }
        Description::Cartesian { left, right } => {
            let factors = vec![NumericalSemigroup::from_generators(left)?, NumericalSemigroup::from_generators(right)?];
            Built { semigroup: product(&factors), factors: Some(factors) }
        }
        Description::Maximal { left, right, maximal } => {
            let s1 = NumericalSemigroup::from_generators(left)?;
            let s2 = NumericalSemigroup::from_generators(right)?;
            plain(from_maximal_elements(&s1, &s2, &points(maximal))?)
        }
    })
}

fn small_json(s: &SmallSet) -> Value {
    json!({"dim": s.dim(), "kind": "small", "small": s.points(), "conductor": s.top()})
}

/// Run the command line on `args` (program name first). Returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    let format = common(&cli.command).format;
    match dispatch(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "goodsg: {}", f.to_json()["message"].as_str().unwrap_or("error"));
            let _ = emit(stdout, format, &f.to_json());
            f.code()
        }
    }
}

/// Entry point used by the binary.
pub fn main() -> i32 {
    run(std::env::args_os(), &mut std::io::stdin().lock(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn common(c: &Command) -> &Common {
    match c {
        Command::Check(io)
        | Command::Small(io)
        | Command::Mingens(io)
        | Command::Maximal(io)
        | Command::Canonical(io)
        | Command::Symmetric(io)
        | Command::Arf(io)
        | Command::ArfClosure(io)
        | Command::Construct(io) => io,
        Command::Member { io, .. }
        | Command::IsMingens { io, .. }
        | Command::Saturate { io, .. }
        | Command::Plot { io, .. } => io,
    }
}

fn read_input(io: &Common, stdin: &mut dyn Read) -> Result<InputDocument, Failure> {
    let mut text = String::new();
    match &io.input {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::Parse(format!("{}: {e}", p.display())))?
        }
        _ => {
            stdin.read_to_string(&mut text)?;
        }
    }
    parse_document(&text).map_err(Failure::Parse)
}

fn dispatch(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let io = common(&command);
    let format = io.format;
    let doc = read_input(io, stdin)?;

    if let Command::Check(_) = command {
        return check(&doc, format, stdout);
    }
    let built = build(&doc)?;
    let s = &built.semigroup;
    let out = match command {
        Command::Check(_) => unreachable!(),
        Command::Small(_) => small_json(s.small()),
        Command::Member { point, .. } => {
            let member = s.try_contains(&point)?;
            json!({"point": point, "member": member})
        }
        Command::Mingens(_) => match (minimal_generating_system(s), &built.factors) {
            (Ok(g), _) => json!({"minimal_generating_system": g, "conductor": s.conductor()}),
            (Err(Error::NonLocal { .. }), Some(factors)) => json!({
                "product_generating_system": product_generating_system(factors),
                "conductor": s.conductor(),
                "minimal": false,
            }),
            (Err(e), _) => return Err(e.into()),
        },
        Command::IsMingens { gens, .. } => {
            let system = GenSystem::new(&gens, s.conductor())?;
            let (generates, minimal) = match is_minimal_system(&system, s) {
                Ok(m) => (true, m),
                Err(Error::NotAGeneratingSystem) => (false, false),
                Err(e) => return Err(e.into()),
            };
            json!({"generators": system.points(), "generates": generates, "minimal": minimal})
        }
        Command::Maximal(_) => json!({"maximal_elements": s.maximal_elements()}),
        Command::Canonical(_) => {
            let k = canonical_ideal(s)?;
            json!({
                "generators": canonical_generators(s)?,
                "small": k.small_elements(),
                "conductor": k.conductor(),
                "equals_semigroup": k.small() == s.small(),
            })
        }
        Command::Symmetric(_) => json!({"symmetric": is_symmetric(s)?}),
        Command::Arf(_) => json!({"arf": is_arf(s)?}),
        Command::ArfClosure(_) => {
            let (t, level) = arf_closure_with_level(s)?;
            let mut v = small_json(t.small());
            v["level"] = match level {
                ArfLevel::Chain(i) => json!(i),
                ArfLevel::Product => json!("product"),
            };
            v
        }
        Command::Saturate { cap, .. } => {
            let cap = cap.unwrap_or_else(|| s.conductor() + &Point::splat(s.dim(), 2));
            if cap.dim() != s.dim() {
                return Err(Failure::Parse(format!("--box {cap} has the wrong dimension")));
            }
            let u = arf_saturation(s, &cap)?;
            let infima = saturation_infima_closure(s, &cap)?;
            let (t, _) = arf_closure_with_level(s)?;
            let closure: Vec<Point> = box_points(&Point::zero(2), &cap).filter(|p| t.contains(p)).collect();
            let gap: Vec<&Point> = closure.iter().filter(|p| u.binary_search(p).is_err()).collect();
            json!({
                "box": cap,
                "saturation": u,
                "infima_closure": infima,
                "arf_closure_minus_saturation": gap,
                "infima_closure_is_arf_closure": infima == closure,
            })
        }
        Command::Construct(_) => {
            let mut v = small_json(s.small());
            v["local"] = json!(s.is_local());
            let projections: Vec<Vec<i64>> = (0..s.dim()).map(|i| s.projection(i).generators().to_vec()).collect();
            v["projection_generators"] = json!(projections);
            v["maximal_elements"] = json!(s.maximal_elements());
            v
        }
        Command::Plot { render, output, mark_gens, canonical, .. } => {
            let k;
            let small = if canonical {
                k = canonical_ideal(s)?;
                k.small()
            } else {
                s.small()
            };
            let mut plot = Plot::new(small)?;
            if mark_gens {
                plot = plot.mark(&minimal_generating_system(s)?);
            }
            let text = match render {
                Render::Svg => plot.svg(),
                Render::Ascii => plot.ascii(),
            };
            match output {
                Some(path) => std::fs::write(&path, text)?,
                None => stdout.write_all(text.as_bytes())?,
            }
            return Ok(0);
        }
    };
    emit(stdout, format, &out)?;
    Ok(0)
}

fn check(doc: &InputDocument, format: Format, stdout: &mut dyn Write) -> Result<i32, Failure> {
    // A small list is checked as given; other kinds are checked by building.
    let result = match &doc.description {
        Description::Small { small, .. } => {
            let set = SmallSet::new(points(small))?;
            validate_small_set(&set).map(|()| GoodSemigroup::from_small(set).expect("validated")).map_err(|v| {
                let small = SmallSet::new(points(small)).expect("nonempty");
                Error::NotGoodSemigroup { small: Box::new(small), violation: v }
            })
        }
        _ => build(doc).map(|b| b.semigroup),
    };
    let (out, code) = match result {
        Ok(s) => (
            json!({
                "valid": true,
                "conductor": s.conductor(),
                "small_count": s.small().len(),
                "local": s.is_local(),
            }),
            0,
        ),
        Err(Error::NotGoodSemigroup { small, violation }) => (
            json!({
                "valid": false,
                "violation": violation,
                "reason": violation.to_string(),
                "small": small.points(),
            }),
            1,
        ),
        Err(e) => return Err(e.into()),
    };
    emit(stdout, format, &out)?;
    Ok(code)
}

fn emit(stdout: &mut dyn Write, format: Format, v: &Value) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(stdout, "{}", serde_json::to_string(v).expect("serializable")),
        Format::Text => {
            let empty = Map::new();
            let map = v.as_object().unwrap_or(&empty);
            for (key, value) in map {
                writeln!(stdout, "{key}: {}", text_value(value))?;
            }
            Ok(())
        }
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::Array(items) if items.iter().all(Value::is_number) => {
            let coords: Vec<String> = items.iter().map(Value::to_string).collect();
            format!("({})", coords.join(","))
        }
        Value::Array(items) => items.iter().map(text_value).collect::<Vec<_>>().join(" "),
        Value::String(s) => s.clone(),
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", text_value(v))).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
