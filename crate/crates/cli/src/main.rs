//! `lad`: analysis, census and construction of local action diagrams.

mod record;
mod tables;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use lad_core::census::{
    census_counts, classify_degree, enumerate_vt_actions, errata_report, nondiscrete_non_s_count,
    DEFAULT_CENSUS_BOUND,
};
use lad_core::deltatree::{ball_counters, build_ball_with, ReverseLabels, DEFAULT_BALL_BUDGET};
use lad_core::diagram::{isomorphic, star_diagram, LocalActionDiagram, StarFactor};
use lad_core::perm::{PermGroup, MAX_CLASS_DEGREE};
use lad_core::quotient::{plus_quotient_diagram, quotient_decomposition};
use rayon::prelude::*;
use serde::Deserialize;

#[derive(Parser)]
#[command(name = "lad", version, about = "Local action diagrams and P-closed tree actions")]
struct Cli {
    /// Worker threads for parallel work.
    #[arg(long, global = true, env = "LAD_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a diagram file; exit 1 and list violations if invalid.
    Validate { file: PathBuf },
    /// Action type, quotient and simplicity of a diagram.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value = "text")]
        format: String,
        /// Also count ball automorphisms at this radius.
        #[arg(long)]
        radius: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BALL_BUDGET)]
        budget: u128,
    },
    /// Decide whether two diagrams are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
    /// Vertex-transitive actions of one degree.
    Enumerate {
        #[arg(long)]
        degree: usize,
        /// Full classification rows instead of the raw listing.
        #[arg(long)]
        rows: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Counts, rows and errata over a degree range.
    Census {
        #[arg(long, default_value_t = 2)]
        min: usize,
        #[arg(long, default_value_t = DEFAULT_CENSUS_BOUND)]
        max: usize,
        #[arg(long)]
        rows: bool,
        #[arg(long)]
        csv: bool,
        /// Compare rows with the reference tables.
        #[arg(long)]
        errata: bool,
        /// Allow degrees above the default bound.
        #[arg(long)]
        extended: bool,
    },
    /// Ball of the diagram's tree, or its automorphism count.
    Ball {
        file: PathBuf,
        #[arg(long)]
        radius: usize,
        /// Base vertex id; defaults to the first vertex.
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        count: bool,
        #[arg(long, default_value = "formula")]
        counter: String,
        #[arg(long, default_value_t = DEFAULT_BALL_BUDGET)]
        budget: u128,
        /// Pick reverse labels at random with this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Star diagram from a JSON list of (group, subgroup) factors.
    Combine { spec: PathBuf },
    /// Quotient `G/G+` and, optionally, the quotient diagram.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        diagram: bool,
    },
}

/// Bad arguments detected after parsing; exit code 2.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// Diagram invalid; exit code 1 after listing violations.
#[derive(Debug)]
struct Invalid;

impl fmt::Display for Invalid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("diagram is invalid")
    }
}

impl std::error::Error for Invalid {}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match err.downcast_ref::<lad_core::Error>() {
        Some(lad_core::Error::BudgetExceeded { .. }) => 3,
        Some(lad_core::Error::UnknownStrategy { .. }) => 2,
        _ => 1,
    }
}

fn load(path: &Path) -> Result<LocalActionDiagram> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    LocalActionDiagram::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Loads and rejects invalid diagrams, listing violations on stderr.
fn load_valid(path: &Path) -> Result<LocalActionDiagram> {
    let d = load(path)?;
    let violations = d.validate();
    if violations.is_empty() {
        return Ok(d);
    }
    for v in violations {
        eprintln!("violation: {v}");
    }
    Err(Invalid.into())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StarSpec {
    factors: Vec<StarFactorSpec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StarFactorSpec {
    degree: usize,
    group: Vec<String>,
    subgroup: Vec<String>,
}

fn group_from(degree: usize, gens: &[String]) -> Result<PermGroup> {
    let gens: Vec<&str> = gens.iter().map(String::as_str).collect();
    Ok(PermGroup::from_cycle_strs(degree, &gens)?)
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Validate { file } => {
            load_valid(&file)?;
            Ok("valid\n".into())
        }
        Command::Analyze {
            file,
            format,
            radius,
            budget,
        } => {
            let formats = record::formats();
            let fmt = formats.get(&format)?;
            let d = load_valid(&file)?;
            fmt.render(&record::analyze(&d, radius, budget)?)
        }
        Command::Iso { first, second } => {
            let (a, b) = (load(&first)?, load(&second)?);
            Ok(match isomorphic(&a, &b)? {
                Some(iso) => {
                    let mut out = String::from("isomorphic\n");
                    for (v, w) in iso.vertex_map.iter().enumerate() {
                        out.push_str(&format!("vertex {} -> {}\n", a.graph().vertex_id(v), b.graph().vertex_id(*w)));
                    }
                    for (x, y) in iso.arc_map.iter().enumerate() {
                        out.push_str(&format!("arc {} -> {}\n", a.graph().arc_id(x), b.graph().arc_id(*y)));
                    }
                    out
                }
                None => "not isomorphic\n".into(),
            })
        }
        Command::Enumerate { degree, rows, csv } => {
            if degree > MAX_CLASS_DEGREE {
                return Err(Usage(format!("degree must be at most {MAX_CLASS_DEGREE}")).into());
            }
            if rows || csv {
                let rows = classify_degree(degree)?;
                return if csv { tables::rows_csv(&rows) } else { Ok(tables::rows_text(&rows)) };
            }
            let mut out = String::new();
            for a in enumerate_vt_actions(degree)? {
                out.push_str(&tables::action_line(&a));
                out.push('\n');
            }
            Ok(out)
        }
        Command::Census {
            min,
            max,
            rows,
            csv,
            errata,
            extended,
        } => {
            let bound = if extended { MAX_CLASS_DEGREE } else { DEFAULT_CENSUS_BOUND };
            if min > max || max > bound {
                return Err(Usage(format!(
                    "need min <= max <= {bound}{}",
                    if extended { "" } else { " (pass --extended for more)" }
                ))
                .into());
            }
            if !(rows || csv || errata) {
                let mut out = String::from("degree  subgroup_classes  vt_actions\n");
                for c in census_counts(min, max)? {
                    out.push_str(&format!("{:<6}  {:<16}  {}\n", c.degree, c.subgroup_classes, c.vt_actions));
                }
                return Ok(out);
            }
            let all: Vec<_> = (min..=max)
                .into_par_iter()
                .map(classify_degree)
                .collect::<lad_core::Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            let mut out = if csv {
                tables::rows_csv(&all)?
            } else if rows {
                tables::rows_text(&all)
            } else {
                String::new()
            };
            if errata {
                for e in errata_report(&all) {
                    out.push_str(&format!(
                        "errata d={} {} {} {}: printed {}, computed {}\n",
                        e.degree, e.local_action, e.pairing, e.column, e.printed, e.computed
                    ));
                }
                out.push_str(&format!(
                    "nondiscrete rows without fixed end outside class S: {}\n",
                    nondiscrete_non_s_count(&all)?
                ));
            }
            Ok(out)
        }
        Command::Ball {
            file,
            radius,
            base,
            count,
            counter,
            budget,
            seed,
        } => {
            let d = load_valid(&file)?;
            let base = match base {
                Some(id) => d
                    .graph()
                    .vertex(&id)
                    .ok_or_else(|| Usage(format!("unknown vertex `{id}`")))?,
                None => 0,
            };
            if count {
                let counters = ball_counters();
                return Ok(format!("{}\n", counters.get(&counter)?.count(&d, base, radius, budget)?));
            }
            let labels = seed.map_or(ReverseLabels::Minimum, ReverseLabels::Random);
            Ok(build_ball_with(&d, base, radius, budget, labels)?.to_text(&d))
        }
        Command::Combine { spec } => {
            let text = fs::read_to_string(&spec).with_context(|| format!("reading {}", spec.display()))?;
            let spec: StarSpec = serde_json::from_str(&text).context("parsing star spec")?;
            let factors = spec
                .factors
                .iter()
                .map(|f| {
                    Ok(StarFactor {
                        group: group_from(f.degree, &f.group)?,
                        subgroup: group_from(f.degree, &f.subgroup)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(star_diagram(&factors)?.to_json())
        }
        Command::Quotient { file, diagram } => {
            let d = load_valid(&file)?;
            if diagram {
                return Ok(plus_quotient_diagram(&d)?.to_json());
            }
            let (expr, _) = quotient_decomposition(&d)?;
            Ok(format!("{expr}\n"))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
