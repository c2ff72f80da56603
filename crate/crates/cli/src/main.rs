use std::collections::HashMap;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use semitop::io::{parse_document, Document};
use semitop::{duality, fixtures, report, Error, FrameMap, PointSet, Semiframe, Semitopology, SpaceMap};

/// Analysis of finite semitopologies and semiframes.
///
/// INPUT is a JSON document path or `fixture:NAME`. Commands that need a
/// semiframe accept a semitopology and use its opens semiframe.
#[derive(Parser)]
#[command(name = "semitop", version)]
struct Cli {
    /// Render reports as indented text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a document.
    Validate { input: String },
    /// Classify every point and report the topen partition and space flags.
    Analyze { input: String },
    /// All topens and the maximal topens.
    Topens { input: String },
    /// Intertwined set of each point.
    Intertwined { input: String },
    /// Community of each point.
    Community { input: String },
    Closure {
        input: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        set: Vec<String>,
    },
    Interior {
        input: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        set: Vec<String>,
    },
    /// The opens semiframe as a semiframe document.
    Fr { input: String },
    /// The semitopology of abstract points.
    St { input: String },
    /// Abstract points with their witnesses.
    Points { input: String },
    Soberify { input: String },
    CheckSober { input: String },
    CheckSpatial { input: String },
    CheckStrongCompat { input: String },
    /// Round trip through the dual category.
    Roundtrip { input: String },
    Graph {
        input: String,
        #[arg(long, value_enum, default_value = "intersection")]
        kind: GraphKind,
        #[arg(long, value_enum, default_value = "json")]
        format: GraphFormat,
    },
    /// Check consensus of a value assignment over the maximal topens.
    Consensus {
        input: String,
        #[arg(long)]
        assignment: String,
    },
    /// Split a non-transitive set with a two-valued assignment.
    Split {
        input: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        set: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "v,w")]
        values: Vec<String>,
    },
    /// Check a map between two semitopologies (continuity) or two
    /// semiframes (morphism axioms).
    Morphism {
        source: String,
        target: String,
        #[arg(long)]
        map: String,
    },
    /// List the built-in fixtures.
    Fixtures,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Intersection,
    Straddle,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

enum Output {
    Report { value: Value, ok: bool },
    Text(String),
}

fn opens_cap() -> Result<usize, Error> {
    match std::env::var("SEMITOP_OPENS_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidDocument(format!("SEMITOP_OPENS_CAP is not a number: `{v}`"))),
        Err(_) => Ok(semitop::DEFAULT_OPENS_CAP),
    }
}

fn load(input: &str) -> Result<Document, Error> {
    let cap = opens_cap()?;
    if let Some(name) = input.strip_prefix("fixture:") {
        let fx = fixtures::get(name).ok_or_else(|| Error::InvalidDocument(format!("unknown fixture `{name}`")))?;
        let space = Semitopology::build_with_cap(fx.points.iter().copied(), fx.generators.clone(), cap)?;
        return Ok(Document::Space(space));
    }
    let text = std::fs::read_to_string(Path::new(input))
        .map_err(|e| Error::InvalidDocument(format!("cannot read `{input}`: {e}")))?;
    parse_document(&text, cap)
}

fn wrong_kind(expected: &str, found: &Document) -> Error {
    Error::InvalidDocument(format!("expected a {expected} document, found {}", found.kind()))
}

fn load_space(input: &str) -> Result<Semitopology, Error> {
    match load(input)? {
        Document::Space(s) => Ok(s),
        other => Err(wrong_kind("semitopology", &other)),
    }
}

fn load_frame(input: &str) -> Result<Semiframe, Error> {
    match load(input)? {
        Document::Space(s) => Ok(semitop::fr(&s)),
        Document::Frame(x) => Ok(x),
        other => Err(wrong_kind("semiframe", &other)),
    }
}

fn load_pairs(input: &str, expected: &str) -> Result<HashMap<String, String>, Error> {
    match (load(input)?, expected) {
        (Document::Assignment(m), "assignment") | (Document::Map(m), "map") => Ok(m),
        (other, _) => Err(wrong_kind(expected, &other)),
    }
}

fn input_set(space: &Semitopology, ids: &[String]) -> Result<PointSet, Error> {
    space.set(ids.iter().filter(|s| !s.is_empty()))
}

fn ok(value: Value) -> Output {
    Output::Report { value, ok: true }
}

fn verdict(value: Value, holds: bool) -> Output {
    Output::Report { value, ok: holds }
}

fn run(command: Command) -> Result<Output, Error> {
    Ok(match command {
        Command::Validate { input } => {
            let doc = load(&input)?;
            let summary = match &doc {
                Document::Space(s) => json!({ "points": s.num_points(), "opens": s.opens().len() }),
                Document::Frame(x) => json!({ "elements": x.len() }),
                Document::Assignment(m) | Document::Map(m) => json!({ "entries": m.len() }),
            };
            ok(json!({ "kind": doc.kind(), "valid": true, "summary": summary }))
        }
        Command::Analyze { input } => ok(report::analysis(&load_space(&input)?)),
        Command::Topens { input } => ok(report::topens(&load_space(&input)?)),
        Command::Intertwined { input } => {
            let s = load_space(&input)?;
            ok(report::per_point(&s, "intertwined", |p| s.intertwined(p)))
        }
        Command::Community { input } => {
            let s = load_space(&input)?;
            ok(report::per_point(&s, "community", |p| s.community(p)))
        }
        Command::Closure { input, set } => {
            let s = load_space(&input)?;
            let a = input_set(&s, &set)?;
            ok(report::set_operation(&s, "closure", &a, &s.closure(&a)?))
        }
        Command::Interior { input, set } => {
            let s = load_space(&input)?;
            let a = input_set(&s, &set)?;
            ok(report::set_operation(&s, "interior", &a, &s.interior(&a)?))
        }
        Command::Fr { input } => ok(report::semiframe(&semitop::fr(&load_space(&input)?))),
        Command::St { input } => {
            let x = load_frame(&input)?;
            ok(report::spectrum(&x, &x.spectrum()?))
        }
        Command::Points { input } => ok(report::abstract_points(&load_frame(&input)?)),
        Command::Soberify { input } => {
            let s = load_space(&input)?;
            let sob = s.soberify()?;
            ok(report::soberify(&s, &sob))
        }
        Command::CheckSober { input } => {
            let s = load_space(&input)?;
            let v = s.sober_verdict();
            verdict(report::sober(&s, &v), v.sober)
        }
        Command::CheckSpatial { input } => {
            let x = load_frame(&input)?;
            let v = x.spatial_verdict();
            verdict(report::spatial(&x, &v), v.spatial)
        }
        Command::CheckStrongCompat { input } => {
            let s = load_space(&input)?;
            let v = s.strong_compat_verdict();
            verdict(report::strong_compat(&s, &v), v.holds)
        }
        Command::Roundtrip { input } => match load(&input)? {
            Document::Space(s) => {
                let r = duality::space_roundtrip(&s)?;
                verdict(report::space_roundtrip(&s, &r), r.succeeded())
            }
            Document::Frame(x) => {
                let r = duality::frame_roundtrip(&x)?;
                verdict(report::frame_roundtrip(&x, &r), r.succeeded())
            }
            other => return Err(wrong_kind("semitopology or semiframe", &other)),
        },
        Command::Graph { input, kind, format } => match kind {
            GraphKind::Intersection => {
                let g = semitop::IntersectionGraph::of(&load_space(&input)?);
                match format {
                    GraphFormat::Dot => Output::Text(g.to_dot()),
                    GraphFormat::Json => ok(report::intersection_graph(&g)),
                }
            }
            GraphKind::Straddle => {
                let g = semitop::StraddleGraph::of(&load_frame(&input)?);
                match format {
                    GraphFormat::Dot => Output::Text(g.to_dot()),
                    GraphFormat::Json => ok(report::straddle_graph(&g)),
                }
            }
        },
        Command::Consensus { input, assignment } => {
            let s = load_space(&input)?;
            let f = semitop::ValueAssignment::from_map(&s, &load_pairs(&assignment, "assignment")?)?;
            let r = semitop::check_consensus(&s, &f);
            verdict(report::consensus(&s, &r), r.holds())
        }
        Command::Split { input, set, values } => {
            let s = load_space(&input)?;
            let t = input_set(&s, &set)?;
            let values: Vec<&str> = values.iter().map(String::as_str).collect();
            ok(report::splitting(&s, &t, &semitop::find_splitting(&s, &t, &values)?))
        }
        Command::Morphism { source, target, map } => {
            let assoc = load_pairs(&map, "map")?;
            match (load(&source)?, load(&target)?) {
                (Document::Space(a), Document::Space(b)) => {
                    let f = SpaceMap::from_ids(&a, &b, &assoc)?;
                    let mut value = report::space_map(&a, &b, &f);
                    if f.is_continuous() {
                        let failure = duality::space_naturality_failure(&a, &b, &f);
                        value["natural"] = json!(failure.is_none());
                    }
                    verdict(value, f.is_continuous())
                }
                (Document::Frame(a), Document::Frame(b)) => {
                    let g = FrameMap::from_ids(&a, &b, &assoc)?;
                    let mut value = report::frame_map(&a, &g);
                    if g.is_valid() {
                        let failure = duality::frame_naturality_failure(&a, &b, &g)?;
                        value["natural"] = json!(failure.is_none());
                    }
                    verdict(value, g.is_valid())
                }
                (a, b) => {
                    return Err(Error::InvalidDocument(format!(
                        "source and target must both be semitopologies or both semiframes, found {} and {}",
                        a.kind(),
                        b.kind()
                    )))
                }
            }
        }
        Command::Fixtures => ok(report::fixtures(&fixtures::all())),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Output::Text(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report { value, ok }) => {
            if cli.pretty {
                print!("{}", report::to_text(&value));
            } else {
                println!("{value}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource() { 3 } else { 2 })
        }
    }
}
