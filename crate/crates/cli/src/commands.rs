use std::fmt::Write as _;

use matroidal_core::decomp::{self, Partition};
use matroidal_core::homology;
use matroidal_core::matroid::{self, enumerate_matroidal};
use matroidal_core::{sv, MonomialIdeal};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::Config;
use crate::error::CliError;
use crate::parse::{render_ideal, IdealJson};
use crate::report::{self, AnalysisReport, CertificationSection, WitnessSection};
use crate::reproduce::{self, Outcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Partition,
    Witness,
    Certify,
    /// A single `(n, d)` when given, otherwise all pairs within the caps.
    Enumerate { n: Option<usize>, d: Option<usize> },
    ReproducePaper,
}

impl Command {
    pub fn needs_input(&self) -> bool {
        !matches!(self, Command::Enumerate { .. } | Command::ReproducePaper)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionOutput {
    pub input: String,
    pub ideal: IdealJson,
    pub partition: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessOutput {
    pub input: String,
    pub ideal: IdealJson,
    pub witness: WitnessSection,
    pub certification: Option<CertificationSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub n: usize,
    pub d: usize,
    pub ideal: String,
    pub mu: usize,
    pub unmixed: bool,
    pub cm: bool,
    pub pd: usize,
    /// Number of partition blocks, degree 2 only.
    pub m: Option<usize>,
    pub squarefree_veronese: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusGroup {
    pub n: usize,
    pub d: usize,
    pub count: usize,
    pub unmixed: usize,
    pub cm: usize,
    pub unmixed_not_cm: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub groups: Vec<CensusGroup>,
    pub entries: Vec<CensusEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Output {
    Analysis(Box<AnalysisReport>),
    Partition(PartitionOutput),
    Witness(WitnessOutput),
    Census(Census),
    Reproduction(Vec<Outcome>),
}

impl Output {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report types serialize")
    }

    pub fn to_text(&self) -> String {
        match self {
            Output::Analysis(r) => report::render_text(r),
            Output::Partition(p) => {
                let blocks: Vec<String> = p.partition.blocks.iter().map(|b| b.to_string()).collect();
                format!("ideal: {}\n[partition]\n  blocks: {}\n  m: {}\n", p.input, blocks.join(" "), p.partition.m)
            }
            Output::Witness(w) => {
                let mut s = format!("ideal: {}\n", w.input);
                report::render_witness(&mut s, &w.witness);
                if let Some(c) = &w.certification {
                    report::render_certification(&mut s, c);
                }
                s
            }
            Output::Census(c) => {
                let mut s = String::new();
                for g in &c.groups {
                    let _ = writeln!(
                        s,
                        "n={} d={}: {} matroidal, {} unmixed, {} CM, {} unmixed not CM",
                        g.n, g.d, g.count, g.unmixed, g.cm, g.unmixed_not_cm
                    );
                    for e in c.entries.iter().filter(|e| e.n == g.n && e.d == g.d) {
                        let _ = writeln!(
                            s,
                            "  {}  mu={} pd={} unmixed={} cm={} m={} veronese={}",
                            e.ideal,
                            e.mu,
                            e.pd,
                            e.unmixed,
                            e.cm,
                            e.m.map_or_else(|| "-".into(), |m| m.to_string()),
                            e.squarefree_veronese
                        );
                    }
                }
                s
            }
            Output::Reproduction(outcomes) => {
                let mut s = String::new();
                for o in outcomes {
                    let _ = writeln!(s, "{}", o.line());
                }
                s
            }
        }
    }

    /// Failed checks; any entry means exit code 3.
    pub fn violations(&self) -> Vec<String> {
        match self {
            Output::Analysis(r) => r.violations(),
            Output::Witness(w) => {
                let mut v = Vec::new();
                if !w.witness.sv_conditions {
                    v.push("layer conditions fail for the witness".into());
                }
                if !w.witness.exact {
                    v.push(format!("pd = {} but witness size = {}", w.witness.lower, w.witness.upper));
                }
                if let Some(c) = w.certification.as_ref().filter(|c| !c.certified) {
                    v.push(format!("certification over {} failed", c.field));
                }
                v
            }
            Output::Reproduction(outcomes) => {
                outcomes.iter().filter(|o| !o.ok()).map(|o| format!("criterion {} failed", o.id)).collect()
            }
            Output::Partition(_) | Output::Census(_) => Vec::new(),
        }
    }
}

fn require_input(input: Option<&MonomialIdeal>) -> Result<&MonomialIdeal, CliError> {
    input.ok_or_else(|| CliError::Usage("this command needs an ideal".into()))
}

fn witness_output(ideal: &MonomialIdeal, config: &Config, certify: bool) -> Result<Output, CliError> {
    let ara = sv::ara_report(ideal)?;
    let certification = if certify { Some(report::certify(ideal, &ara, config.field)?) } else { None };
    Ok(Output::Witness(WitnessOutput {
        input: render_ideal(ideal),
        ideal: IdealJson::from(ideal),
        witness: report::witness_section(&ara, ideal),
        certification,
    }))
}

fn census_entry(ideal: &MonomialIdeal, config: &Config) -> Result<CensusEntry, CliError> {
    let d = ideal.single_degree().expect("matroidal") as usize;
    let h = homology::pd_depth(ideal, config.field)?;
    let unmixed = decomp::associated_primes(ideal)?.is_unmixed;
    let m = if d == 2 { Some(decomp::partition_degree2(ideal)?.m) } else { None };
    Ok(CensusEntry {
        n: ideal.nvars(),
        d,
        ideal: render_ideal(ideal),
        mu: ideal.mu(),
        unmixed,
        cm: h.is_cm,
        pd: h.pd,
        m,
        squarefree_veronese: matroid::is_squarefree_veronese(ideal),
    })
}

fn census(n: Option<usize>, d: Option<usize>, config: &Config) -> Result<Census, CliError> {
    if let Some(n) = n.filter(|&n| n == 0 || n > config.max_n) {
        return Err(CliError::Usage(format!("n = {n} outside 1..={} (raise --max-n)", config.max_n)));
    }
    if let Some(d) = d.filter(|&d| d == 0 || d > config.max_d) {
        return Err(CliError::Usage(format!("d = {d} outside 1..={} (raise --max-d)", config.max_d)));
    }
    let ns: Vec<usize> = n.map_or_else(|| (1..=config.max_n).collect(), |n| vec![n]);
    let mut groups = Vec::new();
    let mut entries = Vec::new();
    for n in ns {
        let ds: Vec<usize> = d.map_or_else(|| (1..=config.max_d.min(n)).collect(), |d| vec![d]);
        for d in ds {
            let ideals = enumerate_matroidal(n, d, true)?;
            let found: Vec<CensusEntry> =
                ideals.par_iter().map(|i| census_entry(i, config)).collect::<Result<_, _>>()?;
            groups.push(CensusGroup {
                n,
                d,
                count: found.len(),
                unmixed: found.iter().filter(|e| e.unmixed).count(),
                cm: found.iter().filter(|e| e.cm).count(),
                unmixed_not_cm: found.iter().filter(|e| e.unmixed && !e.cm).count(),
            });
            entries.extend(found);
        }
    }
    Ok(Census { groups, entries })
}

pub fn run_command(cmd: &Command, config: &Config, input: Option<&MonomialIdeal>) -> Result<Output, CliError> {
    config.validate()?;
    match cmd {
        Command::Analyze => Ok(Output::Analysis(Box::new(report::analyze(require_input(input)?, config)?))),
        Command::Partition => {
            let ideal = require_input(input)?;
            Ok(Output::Partition(PartitionOutput {
                input: render_ideal(ideal),
                ideal: IdealJson::from(ideal),
                partition: decomp::partition_degree2(ideal)?,
            }))
        }
        Command::Witness => witness_output(require_input(input)?, config, false),
        Command::Certify => {
            if !config.certify {
                return Err(CliError::Usage("certify cannot be combined with --no-certify".into()));
            }
            witness_output(require_input(input)?, config, true)
        }
        Command::Enumerate { n, d } => Ok(Output::Census(census(*n, *d, config)?)),
        Command::ReproducePaper => Ok(Output::Reproduction(reproduce::run_all())),
    }
}
