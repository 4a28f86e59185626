//! Command implementations behind the `posetq` binary.
//!
//! Exit codes: 0 success (all checks pass), 1 verification failure,
//! 2 usage or IO error. Reports are line-oriented `key: value` text, or a
//! JSON object with the same content under `--json`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::construct::{
    build_antichain_es, build_kww, build_p_with, build_planar_hp, build_r, lift_diagonal,
    lift_simple, ConstructionRecord, Family,
};
use crate::error::{Error, Result};
use crate::file::{self, PosetDocument, PosetFile};
use crate::layout::{exact_queue_number, hp_queue_assignment, max_rainbow, min_queue_partition};
use crate::poset::LinearExtension;
use crate::verify::{
    auto_mode, check_es_baseline, check_hp_universal, check_lemma_goodr, check_recursion_bound,
    check_self_dual, check_self_dual_family, check_theorem_sums, CheckMode,
    DEFAULT_EXHAUSTIVE_THRESHOLD,
};

#[derive(Parser)]
#[command(name = "posetq", version, about = "Queue layouts and queue-numbers of partial orders")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Seed for sampled checks and samplers
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Trial count for sampled checks
    #[arg(long, global = true, default_value_t = 1000)]
    trials: u64,
    /// Node cap for the exact queue-number solver
    #[arg(long, global = true, default_value_t = 10_000_000)]
    cap: u64,
    /// Fail instead of falling back when an exhaustive run is infeasible
    #[arg(long, global = true)]
    strict: bool,
    /// Emit machine-readable JSON instead of key: value text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a poset family and write it as a poset file
    Construct {
        /// ru | pw | antichain-es | kww | planar-hp | lift-simple | lift-diagonal
        family: String,
        /// Integer parameter, or an input poset file for the lift families
        parameter: String,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// For pw: build the compact variant without the middle element a
        #[arg(long)]
        omit_a: bool,
    },
    /// Report quantities of a poset file
    Analyze {
        input: PathBuf,
        /// Width with Dilworth certificates
        #[arg(long)]
        width: bool,
        /// Cover edge count and list
        #[arg(long)]
        covers: bool,
        /// Exact queue-number (exact solver; small posets only)
        #[arg(long)]
        qn_exact: bool,
        /// The w^2 universal upper bound with its explicit queue assignment
        #[arg(long)]
        qn_upper_hp: bool,
        /// Max rainbow under the given extension (comma-separated permutation)
        #[arg(long)]
        rainbow: Option<String>,
    },
    /// Max rainbow of a poset file under a given extension
    Rainbow {
        input: PathBuf,
        /// Comma-separated permutation of 0..n
        #[arg(long)]
        extension: String,
    },
    /// Run a verification suite
    Verify {
        /// lemma2 | es | recursion | hp | selfdual | sums
        suite: String,
        /// Width/size parameter (aliases: --w, --parameter)
        #[arg(long)]
        u: Option<usize>,
        #[arg(long)]
        w: Option<usize>,
        #[arg(long)]
        parameter: Option<usize>,
        /// Family for the selfdual/hp suites (ru | pw | antichain-es | kww | planar-hp)
        #[arg(long)]
        family: Option<String>,
        /// Poset file for the hp suite
        #[arg(long)]
        input: Option<PathBuf>,
        /// Force exhaustive mode (falls back to sampled with a warning
        /// unless --strict)
        #[arg(long)]
        exhaustive: bool,
        /// Force sampled mode
        #[arg(long)]
        sampled: bool,
    },
    /// Emit DOT renderings
    Export {
        input: PathBuf,
        /// dot | arc-diagram-dot
        format: String,
        /// Extension for the arc diagram (defaults to the solver's best)
        #[arg(long)]
        extension: Option<String>,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Entry point used by the binary; returns the process exit code.
pub fn main() -> u8 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let common = &cli.common;
    match cli.command {
        Command::Construct { family, parameter, output, omit_a } => {
            cmd_construct(&family, &parameter, output.as_deref(), omit_a, common)
        }
        Command::Analyze { input, width, covers, qn_exact, qn_upper_hp, rainbow } => cmd_analyze(
            &input,
            AnalyzeFlags { width, covers, qn_exact, qn_upper_hp, rainbow },
            common,
        ),
        Command::Rainbow { input, extension } => cmd_rainbow(&input, &extension, common),
        Command::Verify { suite, u, w, parameter, family, input, exhaustive, sampled } => {
            let parameter = u.or(w).or(parameter);
            cmd_verify(&suite, parameter, family.as_deref(), input.as_deref(), exhaustive, sampled, common)
        }
        Command::Export { input, format, extension, output } => {
            cmd_export(&input, &format, extension.as_deref(), output.as_deref(), common)
        }
    }
}

fn parse_count(parameter: &str) -> Result<usize> {
    parameter
        .parse::<usize>()
        .map_err(|_| Error::InvalidParameter(format!("expected an integer, got {parameter:?}")))
}

fn build_family(family: &str, parameter: &str, omit_a: bool) -> Result<ConstructionRecord> {
    match family {
        "ru" => build_r(parse_count(parameter)?),
        "pw" => build_p_with(parse_count(parameter)?, None, omit_a),
        "antichain-es" => build_antichain_es(parse_count(parameter)?),
        "kww" => build_kww(parse_count(parameter)?),
        "planar-hp" => build_planar_hp(parse_count(parameter)?),
        "lift-simple" | "lift-diagonal" => {
            let doc = file::load(Path::new(parameter))?;
            if family == "lift-simple" {
                lift_simple(&doc.poset)
            } else {
                lift_diagonal(&doc.poset)
            }
        }
        other => Err(Error::InvalidParameter(format!(
            "unknown family {other:?}; expected ru, pw, antichain-es, kww, planar-hp, lift-simple, lift-diagonal"
        ))),
    }
}

fn cmd_construct(
    family: &str,
    parameter: &str,
    output: Option<&Path>,
    omit_a: bool,
    common: &Common,
) -> Result<u8> {
    let record = build_family(family, parameter, omit_a)?;
    let pf = PosetFile::from_record(&record);
    match output {
        Some(path) => {
            file::save(path, &pf)?;
            if common.json {
                println!(
                    "{}",
                    json!({"family": record.family.to_string(), "n": record.poset.n(),
                           "output": path.display().to_string()})
                );
            } else {
                println!("family: {}", record.family);
                println!("n: {}", record.poset.n());
                println!("output: {}", path.display());
            }
        }
        None => println!("{}", pf.to_json()?),
    }
    Ok(0)
}

struct AnalyzeFlags {
    width: bool,
    covers: bool,
    qn_exact: bool,
    qn_upper_hp: bool,
    rainbow: Option<String>,
}

fn parse_extension(doc: &PosetDocument, text: &str) -> Result<LinearExtension> {
    let order: Vec<usize> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad extension entry {t:?}")))
        })
        .collect::<Result<_>>()?;
    LinearExtension::new(&doc.poset, order)
}

fn cmd_analyze(input: &Path, flags: AnalyzeFlags, common: &Common) -> Result<u8> {
    let doc = file::load(input)?;
    let p = &doc.poset;
    let mut report: Vec<(String, Value)> = vec![("n".into(), json!(p.n()))];

    if flags.width {
        let cert = p.width();
        report.push(("width".into(), json!(cert.width)));
        report.push(("antichain".into(), json!(cert.antichain)));
        report.push(("chains".into(), json!(cert.chains.chain_of)));
    }
    if flags.covers {
        let covers = p.cover_edges();
        report.push(("covers".into(), json!(covers.edges.len())));
        report.push((
            "cover-edges".into(),
            json!(covers.edges.iter().map(|&(u, v)| format!("({u},{v})")).collect::<Vec<_>>()
                .join(" ")),
        ));
    }
    if flags.qn_exact {
        let search = exact_queue_number(p, common.cap);
        report.push(("qn-exact".into(), json!(search.qn)));
        report.push(("qn-exact-certain".into(), json!(search.exact)));
        if !search.exact {
            report.push(("qn-lower".into(), json!(search.lower)));
        }
        report.push(("qn-extension".into(), json!(search.best.order())));
        report.push(("qn-search-nodes".into(), json!(search.nodes)));
    }
    if flags.qn_upper_hp {
        let cert = p.width();
        let qa = hp_queue_assignment(p, &cert.chains)?;
        let w = cert.width;
        report.push(("qn-upper-hp".into(), json!(w * w)));
        let covers = p.cover_edges();
        let mut buckets: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for (e, &q) in qa.queue_of.iter().enumerate() {
            let (u, v) = covers.edges[e];
            buckets.entry(q).or_default().push(format!("({u},{v})"));
        }
        for (q, edges) in buckets {
            report.push((format!("queue[{},{}]", q / w, q % w), json!(edges.join(" "))));
        }
    }
    if let Some(text) = &flags.rainbow {
        let ext = parse_extension(&doc, text)?;
        let covers = p.cover_edges();
        let rainbow = max_rainbow(&ext, &covers)?;
        report.push(("rainbow".into(), json!(rainbow.size)));
        report.push((
            "rainbow-witness".into(),
            json!(rainbow.witness.edges.iter().map(|&(u, v)| format!("({u},{v})"))
                .collect::<Vec<_>>().join(" ")),
        ));
    }

    emit(&report, common);
    Ok(0)
}

fn cmd_rainbow(input: &Path, extension: &str, common: &Common) -> Result<u8> {
    let doc = file::load(input)?;
    let ext = parse_extension(&doc, extension)?;
    let covers = doc.poset.cover_edges();
    let rainbow = max_rainbow(&ext, &covers)?;
    let qa = min_queue_partition(&ext, &covers)?;
    let report: Vec<(String, Value)> = vec![
        ("rainbow".into(), json!(rainbow.size)),
        (
            "rainbow-witness".into(),
            json!(rainbow.witness.edges.iter().map(|&(u, v)| format!("({u},{v})"))
                .collect::<Vec<_>>().join(" ")),
        ),
        ("queues".into(), json!(qa.queues)),
    ];
    emit(&report, common);
    Ok(0)
}

fn resolve_mode(
    record_poset: &crate::poset::Poset,
    exhaustive: bool,
    sampled: bool,
    common: &Common,
) -> Result<CheckMode> {
    let sampled_mode = CheckMode::Sampled { seed: common.seed, trials: common.trials };
    if sampled {
        return Ok(sampled_mode);
    }
    let auto = auto_mode(record_poset, DEFAULT_EXHAUSTIVE_THRESHOLD, common.seed, common.trials);
    if exhaustive && auto != CheckMode::Exhaustive {
        if common.strict {
            return Err(Error::InvalidParameter(format!(
                "exhaustive check infeasible: more than {DEFAULT_EXHAUSTIVE_THRESHOLD} extensions"
            )));
        }
        eprintln!(
            "warning: exhaustive check infeasible (over {DEFAULT_EXHAUSTIVE_THRESHOLD} extensions); sampling instead"
        );
        return Ok(sampled_mode);
    }
    Ok(auto)
}

fn parse_family(tag: &str) -> Result<Family> {
    Ok(match tag {
        "ru" => Family::R,
        "pw" => Family::P,
        "antichain-es" => Family::AntichainEs,
        "kww" => Family::Kww,
        "planar-hp" => Family::PlanarHp,
        other => {
            return Err(Error::InvalidParameter(format!("unknown family {other:?}")));
        }
    })
}

fn cmd_verify(
    suite: &str,
    parameter: Option<usize>,
    family: Option<&str>,
    input: Option<&Path>,
    exhaustive: bool,
    sampled: bool,
    common: &Common,
) -> Result<u8> {
    let need = |what: &str| {
        parameter.ok_or_else(|| Error::InvalidParameter(format!("suite {suite} needs --{what}")))
    };
    let report = match suite {
        "lemma2" => {
            let u = need("u")?;
            let rec = build_r(u)?;
            let mode = resolve_mode(&rec.poset, exhaustive, sampled, common)?;
            check_lemma_goodr(u, mode)?
        }
        "es" => {
            let u = need("u")?;
            let rec = build_antichain_es(u)?;
            let mode = resolve_mode(&rec.poset, exhaustive, sampled, common)?;
            check_es_baseline(u, mode)?
        }
        "recursion" => {
            let w = need("w")?;
            let mode = if w == 3 {
                CheckMode::Exhaustive
            } else {
                CheckMode::Sampled { seed: common.seed, trials: common.trials }
            };
            check_recursion_bound(w, mode, common.cap)?
        }
        "hp" => match (input, family) {
            (Some(path), _) => {
                let doc = file::load(path)?;
                let mode = resolve_mode(&doc.poset, exhaustive, sampled, common)?;
                check_hp_universal(&doc.poset, mode)?
            }
            (None, Some(tag)) => {
                let record = build_family(tag, &need("parameter")?.to_string(), false)?;
                let mode = resolve_mode(&record.poset, exhaustive, sampled, common)?;
                check_hp_universal(&record.poset, mode)?
            }
            (None, None) => {
                return Err(Error::InvalidParameter(
                    "suite hp needs --input <file> or --family <tag> --parameter <n>".into(),
                ))
            }
        },
        "selfdual" => match input {
            Some(path) => {
                // A bare file has no recorded reflection; report skip.
                let doc = file::load(path)?;
                let record = ConstructionRecord {
                    family: Family::P,
                    parameter: doc.poset.n(),
                    poset: doc.poset,
                    parts: doc.parts,
                    realizer: doc.realizer,
                    dual_map: None,
                };
                check_self_dual(&record)
            }
            None => {
                let tag = family.ok_or_else(|| {
                    Error::InvalidParameter("suite selfdual needs --family and --parameter".into())
                })?;
                check_self_dual_family(parse_family(tag)?, need("parameter")?)?
            }
        },
        "sums" => check_theorem_sums(need("w")?)?,
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown suite {other:?}; expected lemma2, es, recursion, hp, selfdual, sums"
            )))
        }
    };

    if common.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("{report}");
    }
    Ok(if report.passed { 0 } else { 1 })
}

fn cmd_export(
    input: &Path,
    format: &str,
    extension: Option<&str>,
    output: Option<&Path>,
    common: &Common,
) -> Result<u8> {
    let doc = file::load(input)?;
    let text = match format {
        "dot" => crate::dot::cover_graph_dot(&doc.poset),
        "arc-diagram-dot" => {
            let covers = doc.poset.cover_edges();
            let ext = match extension {
                Some(text) => parse_extension(&doc, text)?,
                None => {
                    let search = exact_queue_number(&doc.poset, common.cap);
                    if !search.exact {
                        eprintln!(
                            "warning: solver hit the node cap; arc diagram uses the best extension found"
                        );
                    }
                    search.best
                }
            };
            let qa = min_queue_partition(&ext, &covers)?;
            crate::dot::arc_diagram_dot(&doc.poset, &ext, &covers, &qa)
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown format {other:?}; expected dot or arc-diagram-dot"
            )))
        }
    };
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn emit(report: &[(String, Value)], common: &Common) {
    if common.json {
        let map: serde_json::Map<String, Value> =
            report.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        println!("{}", serde_json::to_string_pretty(&Value::Object(map)).expect("valid json"));
    } else {
        for (k, v) in report {
            match v {
                Value::String(s) => println!("{k}: {s}"),
                other => println!("{k}: {other}"),
            }
        }
    }
}
