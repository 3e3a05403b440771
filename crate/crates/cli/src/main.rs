//! `mengerian`: command-line front end.

mod check;
mod error;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use log::info;
use mengerian::certificate::{certificates_of, verify, verify_report, Certificate, Verification};
use mengerian::classify::{decide_mengerian_with, GraphSummary};
use mengerian::survey::DEFAULT_MAX_N;
use mengerian::{
    build_path_hypergraph, classify_mengerian, cross_check, DecisionReport, PathHypergraphSpec,
    SurveyOptions,
};
use serde::Serialize;
use serde_json::{json, Value};

use check::{CheckReport, Property};
use error::CliError;
use input::{read_source, CapArgs, GraphSource, FAMILY_HELP};

#[derive(Parser, Debug)]
#[command(name = "mengerian", version, about = "Exact checks on t-path hypergraphs of graphs", after_help = FAMILY_HELP)]
struct Cli {
    /// More log output (repeatable)
    #[arg(short, long, action = ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the t-path hypergraph of a graph
    #[command(after_help = FAMILY_HELP)]
    Hypergraph {
        #[command(flatten)]
        source: GraphSource,
        /// Path length in edges
        #[arg(long, default_value_t = 3)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decide a single property of the t-path hypergraph
    #[command(after_help = FAMILY_HELP)]
    Check {
        #[arg(value_enum)]
        property: Property,
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 3)]
        t: usize,
        /// Exit with status 2 when the property is refuted
        #[arg(long)]
        assert: bool,
        /// Largest cost entry scanned by mfmc-probe
        #[arg(long, default_value_t = 2)]
        cmax: u32,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the exact Mengerian pipeline
    #[command(after_help = FAMILY_HELP)]
    Decide {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 3)]
        t: usize,
        /// Keep every witness, not only the one the verdict rests on
        #[arg(long)]
        certificates: bool,
        /// Run the power-equality test even when a shortcut decided
        #[arg(long)]
        force_power_equality: bool,
        /// Exit with status 2 when the hypergraph is not Mengerian
        #[arg(long)]
        assert: bool,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Apply the structural classifier for t = 3 (connected graphs)
    #[command(after_help = FAMILY_HELP)]
    Classify {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cross-check the classifier against the pipeline on all connected graphs
    Survey {
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        t: usize,
        /// Emit one CSV row per graph instead of JSON
        #[arg(long)]
        csv: bool,
        /// Extra family decided alongside the enumeration (repeatable)
        #[arg(long)]
        extra: Vec<String>,
        /// Raise the enumeration cap (default 7)
        #[arg(long, env = "MENGERIAN_MAX_N")]
        enum_cap: Option<usize>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Re-check a certificate, decision report or check report
    VerifyCertificate {
        /// JSON file, or `-` for stdin
        path: PathBuf,
    },
}

/// Successful run, and whether a refutation was found under `--assert`.
struct Outcome {
    text: String,
    refuted: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            refuted: false,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn unsupported(cmd: &str, f: Format) -> CliError {
    CliError::Usage(format!("`{cmd}` does not support --format {f:?}").to_lowercase())
}

fn run(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Hypergraph { source, t, format } => {
            let g = source.load()?;
            let c = build_path_hypergraph(&g, PathHypergraphSpec::new(t)?);
            let text = match format {
                Format::Json => to_json(&json!({
                    "schema": mengerian::SCHEMA_VERSION,
                    "graph": GraphSummary::of(&g)?,
                    "t": t,
                    "m": c.edge_count(),
                    "uniformity": c.uniformity(),
                    "clutter": c,
                }))?,
                Format::Text => c.to_text(),
                Format::Dot => g.to_dot(None),
                Format::Csv => {
                    let mut s = (1..=c.n())
                        .map(|v| format!("x{v}"))
                        .collect::<Vec<_>>()
                        .join(",");
                    s.push('\n');
                    for &e in c.edge_masks() {
                        let row: Vec<&str> = (0..c.n())
                            .map(|v| if e >> v & 1 == 1 { "1" } else { "0" })
                            .collect();
                        s.push_str(&row.join(","));
                        s.push('\n');
                    }
                    s
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::Check {
            property,
            source,
            t,
            assert,
            cmax,
            caps,
            format,
        } => {
            let g = source.load()?;
            let c = build_path_hypergraph(&g, PathHypergraphSpec::new(t)?);
            let report = check::run(property, &g, t, &c, &caps.caps(), caps.cap_packing_n, cmax)?;
            let text = match format {
                Format::Json => to_json(&report)?,
                Format::Text => {
                    let status = match report.holds {
                        Some(true) => "HOLDS",
                        Some(false) => "REFUTED",
                        None => "UNDECIDED",
                    };
                    format!(
                        "{} {} t={} {}\n",
                        report.property, status, t, report.graph.graph6
                    )
                }
                Format::Dot => g.to_dot(report.vertex_labels().as_deref()),
                Format::Csv => return Err(unsupported("check", format)),
            };
            Ok(Outcome {
                text,
                refuted: assert && report.refuted(),
            })
        }
        Command::Decide {
            source,
            t,
            certificates,
            force_power_equality,
            assert,
            caps,
            format,
        } => {
            let g = source.load()?;
            let mut report = decide_mengerian_with(&g, t, &caps.options(force_power_equality))?;
            info!(
                "{} decided by {}",
                report.graph.graph6,
                report.trace.as_str()
            );
            if !certificates {
                report.strip_certificates();
            }
            let text = match format {
                Format::Json => to_json(&report)?,
                Format::Text => decision_text(&report),
                _ => return Err(unsupported("decide", format)),
            };
            Ok(Outcome {
                text,
                refuted: assert && !report.mengerian,
            })
        }
        Command::Classify { source, format } => {
            let g = source.load()?;
            let verdict = classify_mengerian(&g)?;
            let text = match format {
                Format::Json => to_json(&json!({
                    "schema": mengerian::SCHEMA_VERSION,
                    "graph": GraphSummary::of(&g)?,
                    "verdict": verdict,
                }))?,
                Format::Text => format!(
                    "{} {} {}\n",
                    verdict.clause.as_str(),
                    verdict.mengerian,
                    verdict.note
                ),
                _ => return Err(unsupported("classify", format)),
            };
            Ok(Outcome::ok(text))
        }
        Command::Survey {
            min_n,
            max_n,
            t,
            csv,
            extra,
            enum_cap,
            caps,
        } => {
            let extra = extra
                .iter()
                .map(|s| Ok(s.parse::<mengerian::graph::FamilySpec>()?.build()?))
                .collect::<Result<Vec<_>, CliError>>()?;
            let opts = SurveyOptions {
                n_min: min_n,
                n_max: max_n,
                t,
                caps: caps.caps(),
                max_n: enum_cap.unwrap_or(DEFAULT_MAX_N),
                extra,
            };
            let report = cross_check(&opts)?;
            info!(
                "{} graphs, {} mismatches",
                report.counters.total,
                report.mismatches.len()
            );
            let text = if csv {
                report.to_csv()
            } else {
                to_json(&report)?
            };
            Ok(Outcome::ok(text))
        }
        Command::VerifyCertificate { path } => {
            let value: Value = serde_json::from_str(&read_source(&path)?)?;
            let results = verify_value(value)?;
            let valid = results.iter().all(|v| v.valid);
            let text = to_json(
                &json!({ "schema": mengerian::SCHEMA_VERSION, "valid": valid, "results": results }),
            )?;
            Ok(Outcome {
                text,
                refuted: !valid,
            })
        }
    }
}

fn verify_value(value: Value) -> Result<Vec<Verification>, CliError> {
    if value.get("kind").is_some() {
        let cert: Certificate = serde_json::from_value(value)?;
        return Ok(vec![verify(&cert)?]);
    }
    if value.get("checks").is_some() {
        let report: DecisionReport = serde_json::from_value(value)?;
        info!("{} certificates in report", certificates_of(&report)?.len());
        return Ok(verify_report(&report)?);
    }
    if value.get("property").is_some() {
        let report: CheckReport = serde_json::from_value(value)?;
        let cert = report.certificate.ok_or_else(|| {
            CliError::Usage(format!("{} report carries no certificate", report.property))
        })?;
        return Ok(vec![verify(&cert)?]);
    }
    Err(CliError::Usage(
        "expected a certificate, a decision report or a check report".into(),
    ))
}

fn decision_text(r: &DecisionReport) -> String {
    let flag = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
    let mut s = format!(
        "graph {} (n={}) t={} m={}\ntrace {}\nmengerian {}\n",
        r.graph.graph6,
        r.graph.n,
        r.hypergraph.t,
        r.hypergraph.m,
        r.trace.as_str(),
        r.mengerian
    );
    s.push_str(&format!(
        "tu {} ideal {} konig {} packing {} ntf {}\n",
        r.checks.tu.holds,
        flag(r.checks.ideal.as_ref().map(|i| i.holds)),
        r.checks.konig.holds,
        flag(r.checks.packing.holds),
        flag(r.checks.ntf.as_ref().map(|n| n.holds)),
    ));
    if let Some(v) = &r.classifier {
        s.push_str(&format!(
            "classifier {} {} agreement {}\n",
            v.clause.as_str(),
            v.mengerian,
            flag(r.agreement)
        ));
    }
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new()
        .filter_level(level)
        .parse_default_env()
        .init();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            if !out.text.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            if out.refuted {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
