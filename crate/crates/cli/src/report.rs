//! The analysis pipeline and its text/JSON rendering.

use std::fmt::Write as _;

use matroidal_core::decomp::{self, CriteriaReport, Partition, PrimeDecomposition};
use matroidal_core::field::{FieldChoice, PrimeField, Rationals};
use matroidal_core::groebner::{certify_witness, WitnessCertificate};
use matroidal_core::homology::{self, MAX_HOMOLOGY_VARS};
use matroidal_core::matroid::{self, ExchangeFailure};
use matroidal_core::sv::{self, AraReport, AraWitness};
use matroidal_core::{IdealSummary, Monomial, MonomialIdeal, VarSet};
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::CliError;
use crate::parse::{render_ideal, IdealJson};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidSection {
    pub polymatroidal: bool,
    pub matroidal: bool,
    pub squarefree_veronese: bool,
    pub exchange_failure: Option<ExchangeFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySection {
    pub pd: usize,
    pub depth: usize,
    pub height: usize,
    pub is_cm: bool,
    /// Total Betti numbers `β_0..β_pd` of `R/I`.
    pub betti: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    SchmittVogel,
    Variables,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSection {
    pub kind: WitnessKind,
    /// `P_0..P_r` by decreasing degree; empty for the variable witness.
    pub layers: Vec<Vec<Monomial>>,
    /// The elements whose radical is `√I`, rendered in the text grammar with `+`.
    pub elements: Vec<String>,
    pub size: usize,
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub ara: Option<usize>,
    pub sv_conditions: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationSection {
    pub field: FieldChoice,
    pub certified: bool,
    pub containment_failures: Vec<Monomial>,
    pub radical_failures: Vec<Monomial>,
}

impl From<WitnessCertificate> for CertificationSection {
    fn from(c: WitnessCertificate) -> Self {
        CertificationSection {
            field: c.field,
            certified: c.certified,
            containment_failures: c.containment_failures,
            radical_failures: c.radical_failures,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: String,
    pub ideal: IdealJson,
    pub field: FieldChoice,
    pub summary: IdealSummary,
    pub matroid: Option<MatroidSection>,
    pub decomposition: Option<PrimeDecomposition>,
    pub partition: Option<Partition>,
    pub criteria: Option<CriteriaReport>,
    pub homology: Option<HomologySection>,
    pub witness: Option<WitnessSection>,
    pub certification: Option<CertificationSection>,
    /// Why sections were skipped.
    pub notes: Vec<String>,
}

impl AnalysisReport {
    /// Checks that failed on this input. Non-empty means a stated result does
    /// not hold here, i.e. a bug.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(w) = &self.witness {
            if !w.sv_conditions {
                out.push("layer conditions fail for the witness".into());
            }
            if !w.exact {
                out.push(format!("pd = {} but witness size = {}", w.lower, w.upper));
            }
        }
        if let Some(c) = &self.certification {
            if !c.certified {
                out.push(format!("certification over {} failed", c.field));
            }
        }
        out
    }
}

pub fn witness_section(ara: &AraReport, ideal: &MonomialIdeal) -> WitnessSection {
    match &ara.witness {
        AraWitness::SchmittVogel(w) => WitnessSection {
            kind: WitnessKind::SchmittVogel,
            sv_conditions: sv::verify_sv_conditions(&w.layers, ideal).holds,
            layers: w.layers.clone(),
            elements: w.q.iter().map(|q| q.to_string()).collect(),
            size: w.q.len(),
            lower: ara.lower,
            upper: ara.upper,
            exact: ara.exact,
            ara: ara.value(),
        },
        AraWitness::Variables(vars) => WitnessSection {
            kind: WitnessKind::Variables,
            sv_conditions: true,
            layers: Vec::new(),
            elements: vars.iter().map(|v| v.to_string()).collect(),
            size: vars.len(),
            lower: ara.lower,
            upper: ara.upper,
            exact: ara.exact,
            ara: ara.value(),
        },
    }
}

/// Runs `certify_witness` over the configured field.
pub fn certify(ideal: &MonomialIdeal, ara: &AraReport, field: FieldChoice) -> Result<CertificationSection, CliError> {
    let AraWitness::SchmittVogel(w) = &ara.witness else {
        // the variables generate I itself
        return Ok(CertificationSection {
            field,
            certified: true,
            containment_failures: Vec::new(),
            radical_failures: Vec::new(),
        });
    };
    let cert = match field {
        FieldChoice::Rationals => certify_witness(ideal, w, Rationals)?,
        FieldChoice::Prime(p) => certify_witness(ideal, w, PrimeField::new(p)?)?,
    };
    Ok(cert.into())
}

/// The full pipeline. Sections whose preconditions fail are left empty with a note.
pub fn analyze(ideal: &MonomialIdeal, config: &Config) -> Result<AnalysisReport, CliError> {
    let summary = ideal.summarize();
    let mut report = AnalysisReport {
        input: render_ideal(ideal),
        ideal: IdealJson::from(ideal),
        field: config.field,
        summary: summary.clone(),
        matroid: None,
        decomposition: None,
        partition: None,
        criteria: None,
        homology: None,
        witness: None,
        certification: None,
        notes: Vec::new(),
    };
    if ideal.is_zero() || ideal.is_unit() {
        let which = if ideal.is_zero() { "zero" } else { "unit" };
        report.notes.push(format!("the {which} ideal has no decomposition or exchange data"));
        return Ok(report);
    }

    let exchange = matroid::is_polymatroidal(ideal)?;
    let matroidal = exchange.holds && summary.is_squarefree;
    report.matroid = Some(MatroidSection {
        polymatroidal: exchange.holds,
        matroidal,
        squarefree_veronese: matroid::is_squarefree_veronese(ideal),
        exchange_failure: exchange.failure,
    });
    report.decomposition = Some(decomp::associated_primes(ideal)?);

    let d = summary.degree;
    let full = summary.is_full_supported;
    if matroidal && full && d == Some(2) {
        report.partition = Some(decomp::partition_degree2(ideal)?);
    } else {
        report.notes.push("partition: needs a full-support matroidal ideal of degree 2".into());
    }
    if matroidal && full && d >= Some(2) {
        report.criteria = Some(decomp::criteria_check(ideal)?);
    } else {
        report.notes.push("criteria: need a full-support matroidal ideal of degree at least 2".into());
    }

    if summary.is_squarefree && ideal.nvars() <= MAX_HOMOLOGY_VARS {
        let h = homology::pd_depth(ideal, config.field)?;
        report.homology = Some(HomologySection {
            pd: h.pd,
            depth: h.depth,
            height: h.height,
            is_cm: h.is_cm,
            betti: h.betti_totals(),
        });
    } else {
        report.notes.push(format!("homology: needs a square-free ideal with n <= {MAX_HOMOLOGY_VARS}"));
    }

    if matroidal && full && ideal.nvars() <= MAX_HOMOLOGY_VARS {
        let ara = sv::ara_report(ideal)?;
        report.witness = Some(witness_section(&ara, ideal));
        if config.certify {
            report.certification = Some(certify(ideal, &ara, config.field)?);
        } else {
            report.notes.push("certification: disabled".into());
        }
    } else {
        report.notes.push("witness: needs a full-support matroidal ideal".into());
    }
    Ok(report)
}

fn sets(v: &[VarSet]) -> String {
    if v.is_empty() {
        return "-".into();
    }
    v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

fn monomials(v: &[Monomial]) -> String {
    if v.is_empty() {
        return "-".into();
    }
    v.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

/// Human-readable form: one `[section]` per JSON object, one `key: value`
/// line per field, keys as in the JSON output.
pub fn render_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let w = &mut s;
    let _ = writeln!(w, "ideal: {}", r.input);
    let _ = writeln!(w, "field: {}", r.field);

    let m = &r.summary;
    let _ = writeln!(w, "[summary]");
    let _ = writeln!(w, "  is_squarefree: {}", m.is_squarefree);
    let _ = writeln!(w, "  is_single_degree: {}", m.is_single_degree);
    let _ = writeln!(w, "  degree: {}", opt(m.degree));
    let _ = writeln!(w, "  is_full_supported: {}", m.is_full_supported);
    let _ = writeln!(w, "  support: {}", m.support);
    let _ = writeln!(w, "  mu: {}", m.mu);

    if let Some(x) = &r.matroid {
        let _ = writeln!(w, "[matroid]");
        let _ = writeln!(w, "  polymatroidal: {}", x.polymatroidal);
        let _ = writeln!(w, "  matroidal: {}", x.matroidal);
        let _ = writeln!(w, "  squarefree_veronese: {}", x.squarefree_veronese);
        match &x.exchange_failure {
            None => {
                let _ = writeln!(w, "  exchange_failure: -");
            }
            Some(ExchangeFailure::NotSingleDegree) => {
                let _ = writeln!(w, "  exchange_failure: generators of different degrees");
            }
            Some(ExchangeFailure::Exchange { u, v, i }) => {
                let _ = writeln!(w, "  exchange_failure: u = {u}, v = {v}, i = {i}: no j with v_j > u_j and x_j*u/x{i} in I");
            }
        }
    }
    if let Some(x) = &r.decomposition {
        let _ = writeln!(w, "[decomposition]");
        let _ = writeln!(w, "  ass: {}", sets(&x.ass));
        let _ = writeln!(w, "  minimal: {}", sets(&x.minimal));
        let _ = writeln!(w, "  height: {}", x.height);
        let _ = writeln!(w, "  big_height: {}", x.big_height);
        let _ = writeln!(w, "  is_unmixed: {}", x.is_unmixed);
    }
    if let Some(x) = &r.partition {
        let _ = writeln!(w, "[partition]");
        let _ = writeln!(w, "  blocks: {}", sets(&x.blocks));
        let _ = writeln!(w, "  m: {}", x.m);
    }
    if let Some(x) = &r.criteria {
        let _ = writeln!(w, "[criteria]");
        let _ = writeln!(w, "  n: {}", x.n);
        let _ = writeln!(w, "  d: {}", x.d);
        let _ = writeln!(w, "  height: {}", x.height);
        let _ = writeln!(w, "  is_unmixed: {}", x.is_unmixed);
        let _ = writeln!(w, "  ass_count: {}", x.ass_count);
        match &x.partition_criterion {
            Some(p) => {
                let _ = writeln!(
                    w,
                    "  partition_criterion: m = {}, m(n - height) = {}, holds = {}",
                    p.m, p.lhs, p.holds
                );
            }
            None => {
                let _ = writeln!(w, "  partition_criterion: -");
            }
        }
        let _ = writeln!(w, "  ass_count_equals_m: {}", opt(x.ass_count_equals_m));
        let colons: Vec<String> = x
            .colons
            .iter()
            .map(|c| format!("x{}: height {}{}", c.var, c.height, if c.is_unmixed { "" } else { " mixed" }))
            .collect();
        let _ = writeln!(w, "  colons: {}", colons.join("; "));
        let _ = writeln!(w, "  colon_criterion: {}", x.colon_criterion);
    }
    if let Some(x) = &r.homology {
        let _ = writeln!(w, "[homology]");
        let _ = writeln!(w, "  pd: {}", x.pd);
        let _ = writeln!(w, "  depth: {}", x.depth);
        let _ = writeln!(w, "  height: {}", x.height);
        let _ = writeln!(w, "  is_cm: {}", x.is_cm);
        let betti: Vec<String> = x.betti.iter().map(|b| b.to_string()).collect();
        let _ = writeln!(w, "  betti: {}", betti.join(" "));
    }
    if let Some(x) = &r.witness {
        render_witness(w, x);
    }
    if let Some(x) = &r.certification {
        render_certification(w, x);
    }
    for note in &r.notes {
        let _ = writeln!(w, "note: {note}");
    }
    s
}

pub fn render_witness(w: &mut String, x: &WitnessSection) {
    let _ = writeln!(w, "[witness]");
    let kind = match x.kind {
        WitnessKind::SchmittVogel => "schmitt_vogel",
        WitnessKind::Variables => "variables",
    };
    let _ = writeln!(w, "  kind: {kind}");
    for (j, layer) in x.layers.iter().enumerate() {
        let _ = writeln!(w, "  P_{j}: {}", monomials(layer));
    }
    for (j, q) in x.elements.iter().enumerate() {
        let _ = writeln!(w, "  q_{j}: {q}");
    }
    let _ = writeln!(w, "  size: {}", x.size);
    let _ = writeln!(w, "  lower: {}", x.lower);
    let _ = writeln!(w, "  upper: {}", x.upper);
    let _ = writeln!(w, "  exact: {}", x.exact);
    let _ = writeln!(w, "  ara: {}", opt(x.ara));
    let _ = writeln!(w, "  sv_conditions: {}", x.sv_conditions);
}

pub fn render_certification(w: &mut String, x: &CertificationSection) {
    let _ = writeln!(w, "[certification]");
    let _ = writeln!(w, "  field: {}", x.field);
    let _ = writeln!(w, "  certified: {}", x.certified);
    let _ = writeln!(w, "  containment_failures: {}", monomials(&x.containment_failures));
    let _ = writeln!(w, "  radical_failures: {}", monomials(&x.radical_failures));
}
