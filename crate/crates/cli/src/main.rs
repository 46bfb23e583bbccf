//! `gos`: classify the surface of a signed ribbon graph.
//!
//! Inputs are `.gos` text files, `.json` files, `-` for standard input, or a
//! built-in family spec such as `ladder:5` or `petersen:0:spokes-minus`.
//!
//! Exit codes: 0 success, 1 invalid input, 2 usage, budget or I/O error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use gos_core::boundary::{boundary_components, boundary_count};
use gos_core::builder::build_traced;
use gos_core::census::{achievability_report, census, AchievabilityBound, CensusError, CensusOptions, Skeleton, DEFAULT_BUDGET};
use gos_core::classify::{classify, cross_validate, homology, ClassReport};
use gos_core::family::{generate_family, is_family_spec, FamilyError};
use gos_core::format::{parse_gos_json, parse_gos_text, to_gos_json_value, to_gos_text};
use gos_core::orientability::{cycle_parity, normalize_all_plus, spanning_tree, Parity};
use gos_core::svg::render_svg;
use gos_core::{Gos, GosData, LabelMap, Sign};

#[derive(Parser)]
#[command(name = "gos", version, about = "Surface classification for signed ribbon graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Orientability, genus and boundary count (JSON by default)
    Classify {
        input: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Also run every cross-check and report each one
        #[arg(long)]
        check: bool,
    },
    /// Spanning-tree orientability test
    Orientable {
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Number of boundary circles from the counter game
    Boundary {
        input: String,
        /// List every pile of counters
        #[arg(long)]
        piles: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Attach edges one at a time, tracking the boundary permutation
    Build {
        input: String,
        /// Print the case label, rho and b after every step
        #[arg(long)]
        trace: bool,
        /// Comma-separated 1-based edge order (default: tree edges first)
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Flip vertices until every edge is +
    Normalize {
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate every orientation and signature on the input's underlying graph
    Census {
        input: String,
        #[arg(long)]
        all_plus: bool,
        /// Fix a signature, e.g. `--fix-sign 3=-` (1-based edge index as listed in the .gos file)
        #[arg(long = "fix-sign", value_name = "EDGE=SIGN")]
        fix_sign: Vec<String>,
        #[arg(long)]
        quotient_flips: bool,
        #[arg(long)]
        orientable_only: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Census over every small skeleton: which surface classes occur
    Achievability {
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write a built-in family member as a .gos file
    Generate {
        family: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check an input and report every problem
    Validate { input: String },
    /// SVG strip diagram with boundary circles coloured
    Render {
        input: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Invalid(anyhow::Error),
    Usage(anyhow::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn invalid(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Invalid(e.into())
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn read_data(input: &str) -> Result<GosData, Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(input)
            .with_context(|| format!("cannot read `{input}`"))
            .map_err(usage)?
    };
    let json = input.ends_with(".json") || (input == "-" && text.trim_start().starts_with('{'));
    let parsed = if json { parse_gos_json(&text) } else { parse_gos_text(&text) };
    parsed.with_context(|| format!("cannot parse `{input}`")).map_err(invalid)
}

/// Reads a family spec or a file and canonicalizes its labels.
fn load(input: &str) -> Result<(Gos, Option<LabelMap>), Failure> {
    if is_family_spec(input) && !std::path::Path::new(input).exists() {
        return match generate_family(input) {
            Ok(g) => Ok((g, None)),
            Err(e @ FamilyError::Invalid(_)) => Err(invalid(e)),
            Err(e) => Err(usage(e)),
        };
    }
    let data = read_data(input)?;
    let (g, map) = data.canonicalize().map_err(invalid)?;
    Ok((g, (!map.is_identity()).then_some(map)))
}

fn emit(output: Option<&PathBuf>, text: &str) -> Outcome {
    match output {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("cannot write `{}`", path.display()))
            .map_err(usage),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn print_json(value: &serde_json::Value) -> Outcome {
    emit(None, &format!("{}\n", serde_json::to_string_pretty(value).expect("serializable")))
}

fn relabel_note(map: &Option<LabelMap>) {
    if map.is_some() {
        eprintln!("note: stub labels were renumbered 1..2E in order of appearance");
    }
}

fn parse_fix(spec: &str) -> Result<(usize, Sign), Failure> {
    let (edge, sign) = spec
        .split_once('=')
        .ok_or_else(|| usage(anyhow!("expected EDGE=SIGN, got `{spec}`")))?;
    let edge: usize = edge
        .trim()
        .parse()
        .ok()
        .filter(|&e| e >= 1)
        .ok_or_else(|| usage(anyhow!("bad edge index `{edge}`")))?;
    let sign = match sign.trim() {
        "+" | "+1" | "1" => Sign::Plus,
        "-" | "-1" => Sign::Minus,
        other => return Err(usage(anyhow!("bad signature `{other}`"))),
    };
    Ok((edge - 1, sign))
}

fn census_failure(e: CensusError) -> Failure {
    match e {
        CensusError::InvalidSkeleton(_) => invalid(e),
        _ => usage(e),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Classify { input, format, check } => {
            let (g, map) = load(&input)?;
            relabel_note(&map);
            let s = classify(&g).map_err(|e| usage(anyhow!("internal error: {e}")))?;
            let report = ClassReport::new(&g, &s);
            let validation = check.then(|| cross_validate(&g));
            match format.unwrap_or(Format::Json) {
                Format::Json => {
                    let mut value = serde_json::to_value(&report).expect("serializable");
                    if let Some(v) = &validation {
                        value["checks"] = serde_json::to_value(&v.checks).expect("serializable");
                    }
                    print_json(&value)?;
                }
                _ => {
                    let mut text = format!(
                        "{s}\nr = {}, V = {}, E = {}\n{}\n",
                        report.r,
                        report.v,
                        report.e,
                        homology(&s)
                    );
                    if let Some(v) = &validation {
                        text.push_str(&v.to_string());
                    }
                    emit(None, &text)?;
                }
            }
            if validation.is_some_and(|v| !v.passed()) {
                return Err(usage(anyhow!("cross-validation failed")));
            }
            Ok(())
        }
        Command::Orientable { input, format } => {
            let (g, map) = load(&input)?;
            relabel_note(&map);
            let t = spanning_tree(&g);
            let odd: Vec<usize> = t
                .complement
                .iter()
                .copied()
                .filter(|&e| cycle_parity(&g, &t, e) == Ok(Parity::Odd))
                .collect();
            let orientable = odd.is_empty();
            if format == Format::Json {
                let one_based = |v: &[usize]| v.iter().map(|e| e + 1).collect::<Vec<_>>();
                print_json(&json!({
                    "orientable": orientable,
                    "tree": one_based(&t.tree),
                    "complement": one_based(&t.complement),
                    "odd_circuits": one_based(&odd),
                }))
            } else {
                let mut text = String::from(if orientable { "orientable\n" } else { "non-orientable\n" });
                for e in odd {
                    let edge = g.edge(e);
                    text.push_str(&format!("odd circuit through edge {} ({} {})\n", e + 1, edge.a, edge.b));
                }
                emit(None, &text)
            }
        }
        Command::Boundary { input, piles, format } => {
            let (g, map) = load(&input)?;
            relabel_note(&map);
            let b = boundary_count(&g);
            let components = piles.then(|| boundary_components(&g));
            if format == Format::Json {
                let mut value = json!({ "boundary": b });
                if let Some(ps) = &components {
                    value["piles"] = ps
                        .iter()
                        .map(|p| {
                            p.iter()
                                .map(|c| json!([c.vertex.index() + 1, c.slot, c.side.delta()]))
                                .collect::<Vec<_>>()
                        })
                        .collect();
                }
                print_json(&value)
            } else {
                let mut text = format!("{b}\n");
                for (i, p) in components.iter().flatten().enumerate() {
                    let counters: Vec<String> = p.iter().map(|c| c.to_string()).collect();
                    text.push_str(&format!("pile {} ({}): {}\n", i + 1, p.len(), counters.join(" ")));
                }
                emit(None, &text)
            }
        }
        Command::Build { input, trace, order, format } => {
            let (g, map) = load(&input)?;
            relabel_note(&map);
            let order: Option<Vec<usize>> = order
                .map(|o| {
                    o.into_iter()
                        .map(|e| e.checked_sub(1).ok_or_else(|| usage(anyhow!("edge indices start at 1"))))
                        .collect::<Result<_, _>>()
                })
                .transpose()?;
            let (state, steps) = build_traced(&g, order.as_deref()).map_err(|e| match e {
                gos_core::BuildError::InternalInconsistency(_) => usage(anyhow!("internal error: {e}")),
                _ => invalid(e),
            })?;
            if format == Format::Json {
                let mut value = json!({
                    "boundary": state.boundary(),
                    "orientable": state.orientable(),
                    "rho": state.rho().to_string(),
                });
                if trace {
                    value["steps"] = steps
                        .iter()
                        .map(|t| {
                            json!({
                                "edge": t.step.edge + 1,
                                "p": t.step.p.label(),
                                "q": t.step.q.label(),
                                "sign": t.step.sign.value(),
                                "case": t.step.case.to_string(),
                                "b": t.step.boundary,
                                "orientable": t.step.orientable,
                                "rho": t.rho.to_string(),
                            })
                        })
                        .collect();
                }
                print_json(&value)
            } else {
                let mut text = String::new();
                if trace {
                    text.push_str(&format!("start  rho={}  b={}\n", g.sigma(), g.vertex_count()));
                    for t in &steps {
                        text.push_str(&format!("{t}\n"));
                    }
                }
                text.push_str(&format!(
                    "b = {}, {}\nrho = {}\n",
                    state.boundary(),
                    if state.orientable() { "orientable" } else { "non-orientable" },
                    state.rho()
                ));
                emit(None, &text)
            }
        }
        Command::Normalize { input, output, format } => {
            let (g, map) = load(&input)?;
            relabel_note(&map);
            let (n, flips) = normalize_all_plus(&g).map_err(invalid)?;
            let flipped: Vec<String> = flips.iter().map(|v| v.to_string()).collect();
            eprintln!("flipped vertices: {}", if flipped.is_empty() { "none".into() } else { flipped.join(" ") });
            let text = match format {
                Format::Json => format!("{}\n", to_gos_json_value(&n.to_data())),
                _ => to_gos_text(&n.to_data()),
            };
            emit(output.as_ref(), &text)
        }
        Command::Census { input, all_plus, fix_sign, quotient_flips, orientable_only, budget, format } => {
            let (g, map) = load(&input)?;
            relabel_note(&map);
            let fixed = fix_sign.iter().map(|s| parse_fix(s)).collect::<Result<_, _>>()?;
            let opts = CensusOptions { all_plus, fixed, orientable_only, quotient_flips, budget };
            let table = census(&Skeleton::of(&g), &opts).map_err(census_failure)?;
            if !table.exact_quotient {
                eprintln!("warning: too many vertices for exact flip orbits; counts are not quotiented");
            }
            match format {
                Format::Csv => emit(None, &table.to_csv()),
                Format::Json => print_json(&table.to_json()),
                Format::Text => emit(None, &format!("{table}\n")),
            }
        }
        Command::Achievability { max_vertices, max_edges, budget, format } => {
            let report = achievability_report(AchievabilityBound { max_vertices, max_edges, budget })
                .map_err(census_failure)?;
            match format {
                Format::Json => print_json(&serde_json::to_value(&report).expect("serializable")),
                _ => emit(None, &format!("{report}\n")),
            }
        }
        Command::Generate { family, output, format } => {
            let g = generate_family(&family).map_err(|e| match e {
                FamilyError::Invalid(_) => invalid(e),
                _ => usage(e),
            })?;
            let text = match format {
                Format::Json => format!("{}\n", to_gos_json_value(&g.to_data())),
                _ => to_gos_text(&g.to_data()),
            };
            emit(output.as_ref(), &text)
        }
        Command::Validate { input } => {
            let (g, map) = load(&input)?;
            let note = if map.is_some() { " (labels renumbered)" } else { "" };
            emit(
                None,
                &format!("valid: V = {}, E = {}{note}\n", g.vertex_count(), g.edge_count()),
            )
        }
        Command::Render { input, seed, output } => {
            let (g, map) = load(&input)?;
            relabel_note(&map);
            emit(output.as_ref(), &render_svg(&g, seed))
        }
    }
}

fn report(e: &anyhow::Error) {
    eprintln!("error: {e}");
    let mut shown = e.to_string();
    for cause in e.chain().skip(1) {
        let text = cause.to_string();
        if !shown.contains(&text) {
            eprintln!("  caused by: {text}");
            shown = text;
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(e)) => {
            report(&e);
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            report(&e);
            ExitCode::from(2)
        }
    }
}
