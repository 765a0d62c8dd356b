//! Command-line front end.
//!
//! Data goes to stdout in the requested format; diagnostics go to stderr.
//! Exit codes: 0 success (for `classify`/`report`: every record EXACT_MATCH
//! or CONTAINS_PAPER), 1 for MISMATCH, UNRESOLVED or exceeded resource
//! ceilings, 2 for usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use orbitcert_core::catalog::{self, SpaceDescriptor};
use orbitcert_core::classify::{self, ClassifyOptions, Format};
use orbitcert_core::criteria;
use orbitcert_core::root_system::{Family, RootSystem};
use orbitcert_core::subsystem::AnnihilatorType;
use orbitcert_core::weyl::{self, Limits, Session};
use orbitcert_core::{Error, RootSet};

mod selftest;

/// Certified classification of convolution powers of orbital measures on
/// exceptional symmetric spaces, by exact root-system combinatorics.
#[derive(Parser)]
#[command(name = "orbitcert", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format: json, csv, markdown or text.
    #[arg(long, global = true, default_value = "text")]
    format: String,

    /// Orbit cache directory (default: the per-user cache directory,
    /// overridable with ORBITCERT_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Disable the persistent orbit cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Worker threads; 0 means one per core.
    #[arg(short = 'j', long, global = true, default_value_t = 0)]
    parallelism: usize,

    /// Ceiling on orbit enumeration size.
    #[arg(long, global = true)]
    max_orbit: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List the twelve exceptional symmetric spaces with their data.
    Spaces,
    /// Classify every annihilator class of a space.
    Classify {
        /// Space label (EI..G) or root system (e.g. E6, C3, BC2).
        target: String,
        /// Override of the m sweep ceiling (default: rank + 1).
        #[arg(long)]
        ceiling: Option<u8>,
    },
    /// Check the absolute-continuity criterion for one annihilator and m.
    Wright {
        target: String,
        /// Annihilator class label, e.g. A1, C2, A1xC1, D5, regular.
        #[arg(long)]
        annihilator: Option<String>,
        /// Comma-separated labels for the tuple form, e.g. C2,A2,A2.
        #[arg(long, conflicts_with = "annihilator")]
        tuple: Option<String>,
        /// Number of convolution factors.
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Use the multiplicity-one coefficient-counting route.
        #[arg(long)]
        reduced: bool,
    },
    /// Search for a disjointness witness certifying singularity.
    Witness {
        target: String,
        /// Comma-separated annihilator labels, e.g. C2,C2.
        #[arg(long)]
        annihilators: String,
    },
    /// Enumerate the Weyl orbit of an annihilator class.
    Orbit {
        target: String,
        #[arg(long)]
        annihilator: String,
    },
    /// Classify all twelve spaces and compare with the reference table.
    Report {
        #[arg(long)]
        ceiling: Option<u8>,
    },
    /// Run the built-in verification battery.
    Selftest,
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Ok(dir) = std::env::var("ORBITCERT_CACHE_DIR") {
        return Some(PathBuf::from(dir));
    }
    if let Ok(dir) = std::env::var("XDG_CACHE_HOME") {
        return Some(PathBuf::from(dir).join("orbitcert"));
    }
    std::env::var("HOME")
        .ok()
        .map(|home| PathBuf::from(home).join(".cache").join("orbitcert"))
}

impl Common {
    fn cache(&self) -> Option<PathBuf> {
        if self.no_cache {
            None
        } else {
            self.cache_dir.clone().or_else(default_cache_dir)
        }
    }

    fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(n) = self.max_orbit {
            limits.max_orbit = n;
        }
        limits
    }

    fn classify_options(&self, ceiling: Option<u8>) -> ClassifyOptions {
        ClassifyOptions {
            limits: Some(self.limits()),
            cache_dir: self.cache(),
            ceiling,
        }
    }

    fn fmt(&self) -> Result<Format, Error> {
        Format::parse(&self.format)
    }
}

/// A space label with multiplicity data, or a bare multiplicity-one system.
fn resolve_target(token: &str) -> Result<(RootSystem, Option<SpaceDescriptor>), Error> {
    if let Ok(space) = catalog::get_space(token) {
        let rs = space.build_restricted()?;
        return Ok((rs, Some(space)));
    }
    if let Some((family, rank)) = Family::parse(token) {
        return Ok((RootSystem::build(family, rank)?, None));
    }
    Err(Error::UnknownSpace(token.to_string()))
}

fn lookup_class<'c>(
    catalog: &'c orbitcert_core::subsystem::AnnihilatorCatalog,
    system: &str,
    token: &str,
) -> Result<&'c AnnihilatorType, Error> {
    catalog
        .class_by_label(token)
        .ok_or_else(|| Error::UnknownAnnihilator {
            system: system.to_string(),
            token: token.to_string(),
        })
}

#[derive(Serialize)]
struct WrightOutput {
    system: String,
    annihilators: Vec<String>,
    m: usize,
    route: &'static str,
    holds: bool,
    binding_psi: String,
    slack: i64,
    min_intersection_dims: Vec<PsiRow>,
}

#[derive(Serialize)]
struct PsiRow {
    psi: String,
    min_dims: Vec<u64>,
}

fn wright_output(
    system: String,
    annihilators: Vec<String>,
    route: &'static str,
    report: &criteria::WrightReport,
) -> WrightOutput {
    WrightOutput {
        system,
        annihilators,
        m: report.m,
        route,
        holds: report.holds,
        binding_psi: report.binding_psi.label.clone(),
        slack: report.slack,
        min_intersection_dims: report
            .min_intersection_dims
            .iter()
            .map(|(psi, mins)| PsiRow {
                psi: psi.clone(),
                min_dims: mins.clone(),
            })
            .collect(),
    }
}

fn print_wright(out: &WrightOutput, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(out).expect("serializable")
        ),
        _ => {
            println!(
                "system: {}  annihilators: {}  m: {}  route: {}",
                out.system,
                out.annihilators.join(","),
                out.m,
                out.route
            );
            println!(
                "holds: {}, slack: {}, binding psi: {}",
                out.holds, out.slack, out.binding_psi
            );
            for row in &out.min_intersection_dims {
                let dims: Vec<String> = row.min_dims.iter().map(|d| d.to_string()).collect();
                println!("  min dim(X ∩ σΨ) over W, Ψ = {}: {}", row.psi, dims.join(","));
            }
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let format = cli.common.fmt()?;
    match &cli.command {
        Command::Spaces => {
            let spaces = catalog::list_spaces();
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&spaces).expect("serializable")
                ),
                Format::Csv => {
                    println!("label,absolute,restricted,rank,dim_gk,multiplicities,lg,provenance");
                    for s in &spaces {
                        println!(
                            "{},{},{},{},{},{},{},{:?}",
                            s.label,
                            s.absolute_type.label(),
                            s.restricted_type.label(),
                            s.rank,
                            s.dim_gk,
                            mult_str(s),
                            s.lg,
                            s.lg_provenance
                        );
                    }
                }
                Format::Markdown => {
                    println!("| label | absolute | restricted | rank | dim G/K | multiplicities | L(G) |");
                    println!("|---|---|---|---|---|---|---|");
                    for s in &spaces {
                        println!(
                            "| {} | {} | {} | {} | {} | {} | {} |",
                            s.label,
                            s.absolute_type.label(),
                            s.restricted_type.label(),
                            s.rank,
                            s.dim_gk,
                            mult_str(s),
                            s.lg
                        );
                    }
                }
                Format::Text => {
                    for s in &spaces {
                        println!(
                            "{:<6} absolute {:<3} restricted {:<4} rank {} dim {:<4} mult {:<12} L(G)={}",
                            s.label.to_string(),
                            s.absolute_type.label(),
                            s.restricted_type.label(),
                            s.rank,
                            s.dim_gk,
                            mult_str(s),
                            s.lg
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Classify { target, ceiling } => {
            let report = classify::Report {
                schema_version: 1,
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
                spaces: vec![classify::classify_space(
                    target,
                    &cli.common.classify_options(*ceiling),
                )?],
            };
            print!("{}", report.render(format));
            Ok(if report.clean() { 0 } else { 1 })
        }
        Command::Report { ceiling } => {
            let report = classify::full_report(&cli.common.classify_options(*ceiling))?;
            print!("{}", report.render(format));
            if report.clean() {
                eprintln!("report: all records consistent with the reference table");
                Ok(0)
            } else {
                eprintln!("report: MISMATCH or UNRESOLVED records present");
                Ok(1)
            }
        }
        Command::Wright {
            target,
            annihilator,
            tuple,
            m,
            reduced,
        } => {
            let (rs, _) = resolve_target(target)?;
            let session = Session::new(&rs)
                .with_limits(cli.common.limits())
                .with_cache_dir(cli.common.cache());
            let catalog = session.catalog()?;
            let labels: Vec<String> = match (annihilator, tuple) {
                (Some(a), None) => vec![a.clone(); *m],
                (None, Some(t)) => t.split(',').map(|s| s.trim().to_string()).collect(),
                _ => vec!["regular".to_string(); *m],
            };
            let sets: Vec<RootSet> = labels
                .iter()
                .map(|l| lookup_class(&catalog, target, l).map(|c| c.rep))
                .collect::<Result<_, _>>()?;
            let report = if *reduced {
                if sets.windows(2).any(|w| w[0] != w[1]) {
                    return Err(Error::MalformedWitness(
                        "the reduced route takes a single annihilator".into(),
                    ));
                }
                criteria::wright_reduced(&session, &sets[0], sets.len())?
            } else if sets.windows(2).all(|w| w[0] == w[1]) {
                criteria::wright_power(&session, &sets[0], sets.len())?
            } else {
                criteria::wright_tuple(&session, &sets)?
            };
            let route = if *reduced { "reduced" } else { "weighted" };
            let out = wright_output(target.clone(), labels, route, &report);
            print_wright(&out, format);
            Ok(0)
        }
        Command::Witness {
            target,
            annihilators,
        } => {
            let (rs, _) = resolve_target(target)?;
            let session = Session::new(&rs)
                .with_limits(cli.common.limits())
                .with_cache_dir(cli.common.cache());
            let catalog = session.catalog()?;
            let labels: Vec<&str> = annihilators.split(',').map(|s| s.trim()).collect();
            let sets: Vec<RootSet> = labels
                .iter()
                .map(|l| lookup_class(&catalog, target, l).map(|c| c.rep))
                .collect::<Result<_, _>>()?;
            match criteria::witness_search(&session, &sets)? {
                Some(w) => {
                    let verified = criteria::verify_witness(&session, &w)?;
                    let positive_names = |s: &RootSet| -> Vec<String> {
                        s.and(rs.positive())
                            .iter()
                            .map(|i| format!("{:?}", rs.root(i)))
                            .collect()
                    };
                    #[derive(Serialize)]
                    struct WitnessOutput {
                        system: String,
                        annihilators: Vec<String>,
                        found: bool,
                        verified: bool,
                        psi: Vec<String>,
                        factors: Vec<Vec<String>>,
                        disjoint_sets: Vec<Vec<String>>,
                    }
                    let out = WitnessOutput {
                        system: target.clone(),
                        annihilators: labels.iter().map(|s| s.to_string()).collect(),
                        found: true,
                        verified,
                        psi: positive_names(&w.psi),
                        factors: w.conjugated_annihilators.iter().map(&positive_names).collect(),
                        disjoint_sets: w.intersection_sets.iter().map(&positive_names).collect(),
                    };
                    match format {
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&out).expect("serializable")
                        ),
                        _ => {
                            println!("witness found: verified={verified}");
                            println!("  psi+: {}", out.psi.join(" "));
                            for (j, f) in out.factors.iter().enumerate() {
                                println!("  factor {j}+: {}", f.join(" "));
                            }
                        }
                    }
                    Ok(0)
                }
                None => {
                    match format {
                        Format::Json => println!("{{\n  \"found\": false\n}}"),
                        _ => println!("no witness (search exhausted)"),
                    }
                    Ok(0)
                }
            }
        }
        Command::Orbit {
            target,
            annihilator,
        } => {
            let (rs, _) = resolve_target(target)?;
            let session = Session::new(&rs)
                .with_limits(cli.common.limits())
                .with_cache_dir(cli.common.cache());
            let catalog = session.catalog()?;
            let class = lookup_class(&catalog, target, annihilator)?;
            let orbit = session.orbit(&class.rep)?;
            let order = weyl::group_order(&rs)?;
            #[derive(Serialize)]
            struct OrbitOutput {
                system: String,
                annihilator: String,
                lie_type: String,
                dim: u64,
                orbit_size: usize,
                group_order: u64,
                index_divides: bool,
            }
            let out = OrbitOutput {
                system: target.clone(),
                annihilator: class.label.clone(),
                lie_type: class.lie_type.label(),
                dim: class.dim,
                orbit_size: orbit.size(),
                group_order: order,
                index_divides: order % orbit.size() as u64 == 0,
            };
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("serializable")
                ),
                _ => println!(
                    "{} {}: orbit size {} (|W| = {}, divides: {})",
                    out.system, out.annihilator, out.orbit_size, out.group_order, out.index_divides
                ),
            }
            Ok(0)
        }
        Command::Selftest => Ok(selftest::run()),
    }
}

fn mult_str(s: &SpaceDescriptor) -> String {
    match &s.multiplicities {
        None => "unavailable".to_string(),
        Some(p) => {
            let entries = p.entries();
            if entries.len() == 1 && entries[0].0 == 0 {
                format!("all:{}", entries[0].1)
            } else {
                entries
                    .iter()
                    .map(|(n, m)| format!("len{}:{}", n, m))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::UnknownSpace(_)
        | Error::UnknownAnnihilator { .. }
        | Error::UnknownFormat(_)
        | Error::InvalidSystem { .. }
        | Error::MultiplicitiesUnavailable(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.common.parallelism)
        .build();
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
