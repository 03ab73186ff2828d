//! Worked examples and theorem sweeps, each with a pass/fail outcome and a
//! time limit.

use std::time::{Duration, Instant};

use matroidal_core::decomp::{self, DegreeTwoClass};
use matroidal_core::field::{FieldChoice, Rationals};
use matroidal_core::groebner::certify_witness;
use matroidal_core::homology;
use matroidal_core::matroid::{self, enumerate_matroidal};
use matroidal_core::sv;
use matroidal_core::{Monomial, MonomialIdeal, VarSet};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::CliError;
use crate::parse::parse_ideal;
use crate::report::analyze;

pub const N4_EXAMPLE: &str = "n=4; x1*x3, x1*x4, x2*x3, x2*x4";
pub const N5_EXAMPLE: &str = "n=5; x1*x3, x1*x4, x1*x5, x2*x3, x2*x4, x2*x5";
pub const N3_MATROIDAL: &str = "n=3; x1*x2, x1*x3";
pub const N3_POLYMATROIDAL: &str = "n=3; x1^2*x2, x1^2*x3";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    /// Ideals examined.
    pub instances: usize,
    pub detail: String,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

impl Outcome {
    pub fn within_limit(&self) -> bool {
        self.elapsed_ms <= self.limit_ms
    }

    pub fn ok(&self) -> bool {
        self.passed && self.within_limit()
    }

    pub fn line(&self) -> String {
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        let time = if self.within_limit() {
            format!("{} ms", self.elapsed_ms)
        } else {
            format!("{} ms, limit {} ms exceeded", self.elapsed_ms, self.limit_ms)
        };
        format!("criterion {:>2} {verdict}: {} [{} instances; {}; {time}]", self.id, self.title, self.instances, self.detail)
    }
}

pub const CRITERIA: [(u8, &str, u64); 10] = [
    (1, "n=4 unmixed matroidal example is not Cohen-Macaulay", 1),
    (2, "n=5 example: colons unmixed, heights differ", 1),
    (3, "n=3 examples have no embedded primes", 1),
    (4, "layer witnesses certify ara = n-d+1 (n<=5, d=2,3)", 600),
    (5, "pd = n-d+1 and depth = d-1 over Q and GF(2) (n<=6, d<=3)", 600),
    (6, "degree 2: unmixed iff m(n-height) = n, |Ass| = m (n<=6)", 120),
    (7, "unmixed iff colons unmixed of equal height (n<=6, d=2,3)", 300),
    (8, "degree-2 polymatroidal with Ass = Min is matroidal or m^2 (n<=4)", 300),
    (9, "n=6, d=3 has an unmixed matroidal ideal that is not Cohen-Macaulay", 1800),
    (10, "squarefree Veronese iff ara = height iff Cohen-Macaulay (n<=5)", 300),
];

type Verdict = (bool, usize, String);

fn failures(checks: &[(&str, bool)]) -> Verdict {
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
    if failed.is_empty() {
        (true, 1, format!("{} checks hold", checks.len()))
    } else {
        (false, 1, format!("failed: {}", failed.join(", ")))
    }
}

fn sets(v: &[&[usize]]) -> Vec<VarSet> {
    v.iter().map(|s| VarSet::from_indices(s.iter().copied())).collect()
}

fn full_enumeration(ns: impl IntoIterator<Item = usize>, ds: impl Fn(usize) -> Vec<usize>) -> Result<Vec<MonomialIdeal>, CliError> {
    let mut all = Vec::new();
    for n in ns {
        for d in ds(n) {
            if d <= n {
                all.extend(enumerate_matroidal(n, d, true)?);
            }
        }
    }
    Ok(all)
}

/// Runs `check` on every ideal in parallel and reports the first failure.
fn sweep<F>(ideals: &[MonomialIdeal], check: F) -> Result<Verdict, CliError>
where
    F: Fn(&MonomialIdeal) -> Result<Option<String>, CliError> + Sync,
{
    let results: Vec<Option<String>> = ideals.par_iter().map(&check).collect::<Result<_, _>>()?;
    let bad: Vec<&String> = results.iter().flatten().collect();
    Ok(match bad.first() {
        None => (true, ideals.len(), "zero failures".into()),
        Some(first) => (false, ideals.len(), format!("{} failures, first: {first}", bad.len())),
    })
}

fn example_n4() -> Result<Verdict, CliError> {
    let r = analyze(&parse_ideal(N4_EXAMPLE)?, &Config::default())?;
    let (Some(m), Some(dec), Some(h), Some(p), Some(c)) = (&r.matroid, &r.decomposition, &r.homology, &r.partition, &r.criteria)
    else {
        return Ok((false, 1, "report sections missing".into()));
    };
    let identity = c.partition_criterion.as_ref().map(|pc| (pc.m, pc.lhs, pc.holds));
    Ok(failures(&[
        ("matroidal", m.matroidal),
        ("unmixed", dec.is_unmixed),
        ("height = 2", dec.height == 2),
        ("pd = 3", h.pd == 3),
        ("not CM", !h.is_cm),
        ("partition {1,2},{3,4}", p.blocks == sets(&[&[1, 2], &[3, 4]])),
        ("m = 2", p.m == 2),
        ("2(4-2) = 4", identity == Some((2, 4, true))),
    ]))
}

fn example_n5() -> Result<Verdict, CliError> {
    let i = parse_ideal(N5_EXAMPLE)?;
    let dec = decomp::associated_primes(&i)?;
    let c = decomp::criteria_check(&i)?;
    let mut heights: Vec<usize> = dec.ass.iter().map(|p| p.len()).collect();
    heights.sort_unstable();
    heights.dedup();
    Ok(failures(&[
        ("matroidal", matroid::is_matroidal(&i)?),
        ("not unmixed", !dec.is_unmixed),
        ("Ass heights {2,3}", heights == [2, 3]),
        ("every colon unmixed", c.colons.iter().all(|x| x.is_unmixed)),
        ("some colon height differs", c.colons.iter().any(|x| x.height != dec.height)),
        ("joint colon condition fails", !c.colon_criterion),
    ]))
}

fn examples_n3() -> Result<Verdict, CliError> {
    let a = parse_ideal(N3_MATROIDAL)?;
    let b = parse_ideal(N3_POLYMATROIDAL)?;
    let da = decomp::associated_primes(&a)?;
    let db = decomp::associated_primes(&b)?;
    let cube = MonomialIdeal::maximal(3).power(3)?;
    let (ok, _, detail) = failures(&[
        ("first: Ass = Min", da.ass == da.minimal),
        ("first: matroidal", matroid::is_matroidal(&a)?),
        ("first: not unmixed", !da.is_unmixed),
        ("second: Ass = Min", db.ass == db.minimal),
        ("second: polymatroidal", matroid::is_polymatroidal(&b)?.holds),
        ("second: degree 3", b.single_degree() == Some(3)),
        ("second: not square-free", !b.is_squarefree()),
        ("second: not m^3", b != cube),
    ]);
    Ok((ok, 2, detail))
}

fn sv_sweep() -> Result<Verdict, CliError> {
    let ideals = full_enumeration(2..=5, |_| vec![2, 3])?;
    sweep(&ideals, |i| {
        let n = i.nvars();
        let d = i.single_degree().unwrap_or(0) as usize;
        let w = sv::build_sv_witness(i)?;
        if !sv::verify_sv_conditions(&w.layers, i).holds {
            return Ok(Some(format!("{i}: layer conditions fail")));
        }
        let cert = certify_witness(i, &w, Rationals)?;
        if !cert.certified {
            return Ok(Some(format!("{i}: not certified, failing {:?}", cert.radical_failures)));
        }
        let pd = homology::pd_depth(i, FieldChoice::Rationals)?.pd;
        if pd != n - d + 1 || w.q.len() != n - d + 1 {
            return Ok(Some(format!("{i}: pd = {pd}, witness size = {}", w.q.len())));
        }
        Ok(None)
    })
}

fn pd_sweep() -> Result<Verdict, CliError> {
    let ideals = full_enumeration(1..=6, |n| (1..=3.min(n)).collect())?;
    sweep(&ideals, |i| {
        let n = i.nvars();
        let d = i.single_degree().unwrap_or(0) as usize;
        for field in [FieldChoice::Rationals, FieldChoice::Prime(2)] {
            let h = homology::pd_depth(i, field)?;
            if h.pd != n - d + 1 || h.depth != d - 1 {
                return Ok(Some(format!("{i} over {field}: pd = {}, depth = {}", h.pd, h.depth)));
            }
        }
        Ok(None)
    })
}

fn partition_sweep() -> Result<Verdict, CliError> {
    let ideals = full_enumeration(2..=6, |_| vec![2])?;
    sweep(&ideals, |i| {
        let n = i.nvars();
        let dec = decomp::associated_primes(i)?;
        let m = decomp::partition_degree2(i)?.m;
        if dec.is_unmixed != (m * (n - dec.height) == n) {
            return Ok(Some(format!("{i}: unmixed = {}, m = {m}, height = {}", dec.is_unmixed, dec.height)));
        }
        if dec.is_unmixed && dec.ass.len() != m {
            return Ok(Some(format!("{i}: |Ass| = {} but m = {m}", dec.ass.len())));
        }
        Ok(None)
    })
}

fn colon_sweep() -> Result<Verdict, CliError> {
    let ideals = full_enumeration(2..=6, |_| vec![2, 3])?;
    sweep(&ideals, |i| {
        let dec = decomp::associated_primes(i)?;
        let mut colons_ok = true;
        for x in 1..=i.nvars() {
            let c = decomp::associated_primes(&i.colon_var(x)?)?;
            colons_ok &= c.is_unmixed && c.height == dec.height;
        }
        Ok((colons_ok != dec.is_unmixed).then(|| format!("{i}: unmixed = {}, colons = {colons_ok}", dec.is_unmixed)))
    })
}

fn degree_two_sweep() -> Result<Verdict, CliError> {
    let mut examined = 0;
    let mut classified = 0;
    let mut counterexamples = Vec::new();
    for n in 1..=4 {
        let cands: Vec<Monomial> = (1..=n)
            .flat_map(|a| (a..=n).map(move |b| (a, b)))
            .map(|(a, b)| {
                let mut e = vec![0u32; n];
                e[a - 1] += 1;
                e[b - 1] += 1;
                Monomial::new(e)
            })
            .collect();
        for mask in 1u32..(1 << cands.len()) {
            let gens = cands.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, m)| m.clone());
            let i = MonomialIdeal::new(n, gens)?;
            examined += 1;
            if !matroid::is_polymatroidal(&i)?.holds {
                continue;
            }
            let dec = decomp::associated_primes(&i)?;
            if dec.ass != dec.minimal {
                continue;
            }
            classified += 1;
            if i.is_full_supported() {
                match decomp::p1_classify(&i) {
                    Ok(DegreeTwoClass::Matroidal | DegreeTwoClass::SquareOfMaximal) => {}
                    Err(e) => counterexamples.push(format!("{i}: {e}")),
                }
            } else {
                // the statement read in the polynomial ring of the support
                let square = MonomialIdeal::prime(n, i.support()).power(2)?;
                if !matroid::is_matroidal(&i)? && i != square {
                    counterexamples.push(format!("{i} (support {})", i.support()));
                }
            }
        }
    }
    let detail = match counterexamples.first() {
        None => format!("{classified} of {examined} collections polymatroidal with Ass = Min, zero counterexamples"),
        Some(c) => format!("{} counterexamples, first: {c}", counterexamples.len()),
    };
    Ok((counterexamples.is_empty(), examined, detail))
}

fn rediscover_counterexample() -> Result<Verdict, CliError> {
    let ideals = enumerate_matroidal(6, 3, true)?;
    let hits: Vec<&MonomialIdeal> = ideals
        .par_iter()
        .map(|i| -> Result<Option<&MonomialIdeal>, CliError> {
            let dec = decomp::associated_primes(i)?;
            if !dec.is_unmixed {
                return Ok(None);
            }
            let h = homology::pd_depth(i, FieldChoice::Rationals)?;
            Ok((!h.is_cm).then_some(i))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(match hits.first() {
        Some(first) => (true, ideals.len(), format!("{} unmixed non-CM ideals, e.g. {first}", hits.len())),
        None => (false, ideals.len(), "no unmixed non-CM ideal found".into()),
    })
}

fn veronese_sweep() -> Result<Verdict, CliError> {
    let ideals = full_enumeration(1..=5, |n| (1..=n).collect())?;
    sweep(&ideals, |i| {
        let veronese = matroid::is_squarefree_veronese(i);
        let height = decomp::height(i)?;
        let ara = sv::ara_report(i)?.value();
        let sci = ara == Some(height);
        let cm = homology::pd_depth(i, FieldChoice::Rationals)?.is_cm;
        Ok((veronese != sci || sci != cm)
            .then(|| format!("{i}: veronese = {veronese}, ara = {ara:?}, height = {height}, CM = {cm}")))
    })
}

pub fn run(id: u8) -> Outcome {
    let (title, limit) = CRITERIA
        .iter()
        .find(|(k, _, _)| *k == id)
        .map(|(_, t, l)| (t.to_string(), *l))
        .unwrap_or_else(|| (format!("unknown criterion {id}"), 0));
    let start = Instant::now();
    let result = match id {
        1 => example_n4(),
        2 => example_n5(),
        3 => examples_n3(),
        4 => sv_sweep(),
        5 => pd_sweep(),
        6 => partition_sweep(),
        7 => colon_sweep(),
        8 => degree_two_sweep(),
        9 => rediscover_counterexample(),
        10 => veronese_sweep(),
        _ => Err(CliError::Usage(format!("no criterion {id}"))),
    };
    let elapsed = start.elapsed();
    let (passed, instances, detail) = result.unwrap_or_else(|e| (false, 0, format!("error: {e}")));
    Outcome {
        id,
        title,
        passed,
        instances,
        detail,
        elapsed_ms: elapsed.as_millis(),
        limit_ms: Duration::from_secs(limit).as_millis(),
    }
}

pub fn run_all() -> Vec<Outcome> {
    CRITERIA.iter().map(|(id, _, _)| run(*id)).collect()
}
