//! Per-space classification: a certified interval `[lower, upper]` for L_X
//! for every annihilator class, compared against the reference table, plus
//! the global L(G) verification.
//!
//! `upper` is the smallest `m >= 2` for which the sufficient condition
//! holds, swept up to `rank + 1` (the general bound on the number of factors
//! needed, so the sweep always terminates with an answer or an explicit
//! UNRESOLVED). `lower` is one more than the largest `m` with a singularity
//! certificate, searching downward from `upper - 1`; the dimension test is
//! tried first because it is cheap and conclusive, the witness search only
//! where the dimension test is silent. A single orbit is a proper
//! submanifold, so `lower >= 2` always.

use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, LgProvenance, SpaceDescriptor, SpaceLabel};
use crate::criteria;
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::rootset::RootSet;
use crate::subsystem::AnnihilatorType;
use crate::weyl::{Limits, Session};

/// Comparison of a computed interval with the reference value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// Interval degenerate and equal to the reference value.
    ExactMatch,
    /// Reference value inside a non-degenerate interval.
    ContainsPaper,
    /// Reference value outside the interval; a finding, treated as failure.
    Mismatch,
    /// The sweep ceiling was reached without the criterion holding.
    Unresolved,
    /// Row carried for completeness without computation (embedding cases).
    Reference,
}

/// One Wright check, summarized.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WrightSummary {
    pub m: u8,
    pub holds: bool,
    pub binding_psi: String,
    pub slack: i64,
}

impl WrightSummary {
    fn from_report(r: &criteria::WrightReport) -> Self {
        WrightSummary {
            m: r.m as u8,
            holds: r.holds,
            binding_psi: r.binding_psi.label.clone(),
            slack: r.slack,
        }
    }
}

/// Why the lower bound holds.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LowerEvidence {
    /// No singularity certificate beyond the trivial one (a single orbit has
    /// measure zero).
    Floor,
    /// `m * dim N_X < dim p`.
    Dimension { m: u8, spanned: u64, dim_p: u64 },
    /// A verified disjointness witness at `m`.
    Witness {
        m: u8,
        psi: Vec<String>,
        factors: Vec<Vec<String>>,
    },
}

/// Classification of one annihilator class.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub space: SpaceLabel,
    pub annihilator: String,
    pub lie_type: String,
    pub dim_phi_x: u64,
    pub dim_nx: u64,
    pub lower: u8,
    /// Smallest m with the sufficient condition; `None` if unresolved at the
    /// sweep ceiling.
    pub upper: Option<u8>,
    pub paper_value: u8,
    pub status: Status,
    /// The check at `upper - 1` (absent when upper = 2): the near-miss slack.
    pub wright_fail: Option<WrightSummary>,
    /// The check at `upper`.
    pub wright_pass: Option<WrightSummary>,
    pub lower_evidence: LowerEvidence,
}

/// L(G) verification for one space.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LgReport {
    pub m: u8,
    pub provenance: LgProvenance,
    /// `None` when the space carries no multiplicity data.
    pub verified: Option<bool>,
    /// The tuple of maximal classes with the smallest slack.
    pub worst_tuple: Option<Vec<String>>,
    pub worst_slack: Option<i64>,
}

/// Everything computed for one space.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceReport {
    pub space: SpaceLabel,
    pub absolute_type: String,
    pub restricted_type: String,
    pub rank: usize,
    pub dim_gk: u64,
    /// Multiplicity-weighted dimension of the restricted system, when known.
    pub dim_phi: Option<u64>,
    pub computed: bool,
    pub records: Vec<ClassificationRecord>,
    pub lg: LgReport,
}

/// The full twelve-space report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub spaces: Vec<SpaceReport>,
}

/// Options threaded through classification.
#[derive(Debug, Clone, Default)]
pub struct ClassifyOptions {
    pub limits: Option<Limits>,
    pub cache_dir: Option<PathBuf>,
    /// Override of the m sweep ceiling; defaults to rank + 1.
    pub ceiling: Option<u8>,
}

impl ClassifyOptions {
    fn session<'a>(&self, rs: &'a RootSystem) -> Session<'a> {
        let mut session = Session::new(rs);
        if let Some(limits) = self.limits {
            session = session.with_limits(limits);
        }
        session.with_cache_dir(self.cache_dir.clone())
    }
}

fn root_names(rs: &RootSystem, set: &RootSet) -> Vec<String> {
    set.and(rs.positive())
        .iter()
        .map(|i| format!("{:?}", rs.root(i)))
        .collect()
}

fn classify_class(
    session: &Session,
    space: &SpaceDescriptor,
    class: &AnnihilatorType,
    ceiling: u8,
) -> Result<ClassificationRecord> {
    let rs = session.rs();
    let dim_phi = rs.dim();
    let dim_phi_x = class.dim;
    let dim_nx = dim_phi - dim_phi_x;
    let paper_value = space.paper_lx(&class.lie_type);

    // upward sweep for the sufficient condition
    let mut upper = None;
    let mut wright_pass = None;
    let mut wright_fail = None;
    for m in 2..=ceiling {
        let report = criteria::wright_power(session, &class.rep, m as usize)?;
        if report.holds {
            upper = Some(m);
            wright_pass = Some(WrightSummary::from_report(&report));
            break;
        }
        wright_fail = Some(WrightSummary::from_report(&report));
    }

    // downward search for singularity certificates
    let mut lower = 2u8;
    let mut lower_evidence = LowerEvidence::Floor;
    let search_top = upper.map(|u| u - 1).unwrap_or(ceiling);
    for m in (2..=search_top).rev() {
        if criteria::dimension_singularity(session, &class.rep, m as usize, space.dim_gk) {
            lower = m + 1;
            lower_evidence = LowerEvidence::Dimension {
                m,
                spanned: m as u64 * dim_nx,
                dim_p: space.dim_gk,
            };
            break;
        }
        let factors = vec![class.rep; m as usize];
        if let Some(w) = criteria::witness_search(session, &factors)? {
            debug_assert!(criteria::verify_witness(session, &w)?);
            lower = m + 1;
            lower_evidence = LowerEvidence::Witness {
                m,
                psi: root_names(rs, &w.psi),
                factors: w
                    .conjugated_annihilators
                    .iter()
                    .map(|s| root_names(rs, s))
                    .collect(),
            };
            break;
        }
    }

    let status = match upper {
        None => Status::Unresolved,
        Some(u) => {
            if lower == u && u == paper_value {
                Status::ExactMatch
            } else if lower <= paper_value && paper_value <= u {
                Status::ContainsPaper
            } else {
                Status::Mismatch
            }
        }
    };

    Ok(ClassificationRecord {
        space: space.label,
        annihilator: class.label.clone(),
        lie_type: class.lie_type.label(),
        dim_phi_x,
        dim_nx,
        lower,
        upper,
        paper_value,
        status,
        wright_fail,
        wright_pass,
        lower_evidence,
    })
}

fn lg_for_space(session: &Session, space: &SpaceDescriptor) -> Result<LgReport> {
    let catalog = session.catalog()?;
    let m = space.lg as usize;
    let maximal = catalog.maximal_classes();

    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut stack = vec![(Vec::new(), 0usize)];
    while let Some((tuple, start)) = stack.pop() {
        if tuple.len() == m {
            tuples.push(tuple);
            continue;
        }
        for (pos, &ci) in maximal.iter().enumerate().skip(start) {
            let mut t = tuple.clone();
            t.push(ci);
            stack.push((t, pos));
        }
    }
    tuples.sort();

    let mut verified = true;
    let mut worst: Option<(i64, Vec<String>)> = None;
    for tuple in &tuples {
        let sets: Vec<RootSet> = tuple.iter().map(|&ci| catalog.classes[ci].rep).collect();
        let report = criteria::wright_tuple(session, &sets)?;
        verified &= report.holds;
        let labels: Vec<String> = tuple
            .iter()
            .map(|&ci| catalog.classes[ci].label.clone())
            .collect();
        if worst.as_ref().map(|(s, _)| report.slack < *s).unwrap_or(true) {
            worst = Some((report.slack, labels));
        }
    }
    let (worst_slack, worst_tuple) = worst.map(|(s, t)| (Some(s), Some(t))).unwrap_or((None, None));
    Ok(LgReport {
        m: space.lg,
        provenance: space.lg_provenance,
        verified: Some(verified),
        worst_tuple,
        worst_slack,
    })
}

/// Classifies every annihilator class of one space. Spaces without
/// multiplicity data yield a reference-only report.
pub fn classify_space(label: &str, opts: &ClassifyOptions) -> Result<SpaceReport> {
    let space = catalog::get_space(label)?;
    if space.multiplicities.is_none() {
        return Ok(SpaceReport {
            space: space.label,
            absolute_type: space.absolute_type.label(),
            restricted_type: space.restricted_type.label(),
            rank: space.rank,
            dim_gk: space.dim_gk,
            dim_phi: None,
            computed: false,
            records: Vec::new(),
            lg: LgReport {
                m: space.lg,
                provenance: space.lg_provenance,
                verified: None,
                worst_tuple: None,
                worst_slack: None,
            },
        });
    }

    let rs = space.build_restricted()?;
    let session = opts.session(&rs);
    let ceiling = opts.ceiling.unwrap_or(space.rank as u8 + 1);
    let ann_catalog = session.catalog()?;

    let records: Vec<ClassificationRecord> = ann_catalog
        .classes
        .par_iter()
        .map(|class| classify_class(&session, &space, class, ceiling))
        .collect::<Result<_>>()?;
    let lg = lg_for_space(&session, &space)?;

    Ok(SpaceReport {
        space: space.label,
        absolute_type: space.absolute_type.label(),
        restricted_type: space.restricted_type.label(),
        rank: space.rank,
        dim_gk: space.dim_gk,
        dim_phi: Some(rs.dim()),
        computed: true,
        records,
        lg,
    })
}

/// Whether every m-tuple of maximal annihilator classes passes the tuple
/// condition at `m = L(G)`; smaller classes follow by monotonicity.
pub fn verify_lg(label: &str, opts: &ClassifyOptions) -> Result<bool> {
    let space = catalog::get_space(label)?;
    if space.multiplicities.is_none() {
        return Err(Error::MultiplicitiesUnavailable(label.to_string()));
    }
    let rs = space.build_restricted()?;
    let session = opts.session(&rs);
    Ok(lg_for_space(&session, &space)?.verified.unwrap_or(false))
}

/// Classifies all twelve spaces in catalog order.
pub fn full_report(opts: &ClassifyOptions) -> Result<Report> {
    let spaces = SpaceLabel::ALL
        .iter()
        .map(|label| classify_space(label.as_str(), opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report {
        schema_version: 1,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        spaces,
    })
}

/// Output formats for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Markdown,
    Text,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "markdown" | "md" => Ok(Format::Markdown),
            "text" => Ok(Format::Text),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

impl Report {
    /// True when no record is a mismatch and nothing is unresolved.
    pub fn clean(&self) -> bool {
        self.spaces.iter().all(|s| {
            s.records
                .iter()
                .all(|r| matches!(r.status, Status::ExactMatch | Status::ContainsPaper))
                && s.lg.verified.unwrap_or(true)
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Markdown => self.to_markdown(),
            Format::Text => self.to_text(),
        }
    }

    pub const CSV_HEADER: &'static str = "space,annihilator,lie_type,dim_phi_x,dim_nx,lower,upper,paper,status,binding_psi,slack,lower_evidence";

    fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for space in &self.spaces {
            for r in &space.records {
                let (binding, slack) = r
                    .wright_fail
                    .as_ref()
                    .or(r.wright_pass.as_ref())
                    .map(|w| (w.binding_psi.clone(), w.slack.to_string()))
                    .unwrap_or_default();
                let evidence = match &r.lower_evidence {
                    LowerEvidence::Floor => "floor".to_string(),
                    LowerEvidence::Dimension { m, .. } => format!("dimension@{m}"),
                    LowerEvidence::Witness { m, .. } => format!("witness@{m}"),
                };
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.space,
                    r.annihilator,
                    r.lie_type,
                    r.dim_phi_x,
                    r.dim_nx,
                    r.lower,
                    r.upper.map(|u| u.to_string()).unwrap_or_default(),
                    r.paper_value,
                    status_str(r.status),
                    binding,
                    slack,
                    evidence,
                ));
            }
        }
        out
    }

    fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("# Orbital measure convolution classification\n\n");
        out.push_str("Certified intervals for L_X per annihilator class, against the reference value.\n\n");
        out.push_str("| space | L(G) | verified | provenance |\n|---|---|---|---|\n");
        for s in &self.spaces {
            out.push_str(&format!(
                "| {} | {} | {} | {} |\n",
                s.space,
                s.lg.m,
                s.lg
                    .verified
                    .map(|v| if v { "yes" } else { "NO" })
                    .unwrap_or("-"),
                provenance_str(s.lg.provenance),
            ));
        }
        for s in &self.spaces {
            out.push_str(&format!(
                "\n## {} (restricted {}, rank {}, dim G/K {})\n\n",
                s.space, s.restricted_type, s.rank, s.dim_gk
            ));
            if !s.computed {
                out.push_str("Reference only: L(G) settled by embedding; no multiplicity data.\n");
                continue;
            }
            out.push_str(
                "| annihilator | dim Φ_X | dim N_X | interval | reference | status |\n|---|---|---|---|---|---|\n",
            );
            for r in &s.records {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} |\n",
                    r.annihilator,
                    r.dim_phi_x,
                    r.dim_nx,
                    interval_str(r),
                    r.paper_value,
                    status_str(r.status),
                ));
            }
        }
        out
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.spaces {
            out.push_str(&format!(
                "{} restricted={} rank={} dimG/K={} L(G)={}{}\n",
                s.space,
                s.restricted_type,
                s.rank,
                s.dim_gk,
                s.lg.m,
                match s.lg.verified {
                    Some(true) => " verified",
                    Some(false) => " UNVERIFIED",
                    None => " (reference)",
                }
            ));
            for r in &s.records {
                out.push_str(&format!(
                    "  {:<10} dim={}  L_X in {}  reference={}  {}\n",
                    r.annihilator,
                    r.dim_phi_x,
                    interval_str(r),
                    r.paper_value,
                    status_str(r.status),
                ));
            }
        }
        out
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::ExactMatch => "EXACT_MATCH",
        Status::ContainsPaper => "CONTAINS_PAPER",
        Status::Mismatch => "MISMATCH",
        Status::Unresolved => "UNRESOLVED",
        Status::Reference => "REFERENCE",
    }
}

fn provenance_str(p: LgProvenance) -> &'static str {
    match p {
        LgProvenance::Wright => "wright",
        LgProvenance::Embedding => "embedding",
        LgProvenance::Regularity => "regularity",
    }
}

fn interval_str(r: &ClassificationRecord) -> String {
    match r.upper {
        Some(u) if u == r.lower => format!("[{}]", u),
        Some(u) => format!("[{}, {}]", r.lower, u),
        None => format!("[{}, ?]", r.lower),
    }
}
