use std::fmt;

use rayon::prelude::*;

use super::{enumerate, verify};
use crate::error::Result;
use crate::margins::MarginPair;
use crate::report::{Decision, FeasibilityReport, MatrixClass};
use crate::symmetry::SubgroupId;

/// Bounds of an exhaustive comparison between the theorems and the oracle.
///
/// Cost is dominated by the number of margin pairs times the size of the
/// search over one value per orbit.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_m: usize,
    pub max_n: usize,
    pub max_total: i64,
    pub classes: Vec<MatrixClass>,
    pub subgroups: Vec<SubgroupId>,
    /// Integral entry cap; `None` uses the instance total `N`.
    pub entry_bound: Option<i64>,
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_m: 3,
            max_n: 3,
            max_total: 6,
            classes: vec![MatrixClass::ZeroOne],
            subgroups: SubgroupId::ALL.to_vec(),
            entry_bound: None,
            jobs: 1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Discrepancy {
    pub instance: String,
    pub subgroup: SubgroupId,
    pub class: MatrixClass,
    pub theorem: Option<Decision>,
    pub oracle: Option<Decision>,
    pub note: Option<String>,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |d: Option<Decision>| d.map_or_else(|| "error".to_string(), |d| d.to_string());
        write!(
            f,
            "{} {} {} theorem={} oracle={}",
            self.instance,
            self.subgroup,
            self.class,
            show(self.theorem),
            show(self.oracle)
        )?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SweepReport {
    /// Number of (instance, subgroup, class) triples compared.
    pub checks: usize,
    pub feasible: usize,
    pub discrepancies: Vec<Discrepancy>,
}

/// Compares [`crate::solve`] against [`enumerate`] on every instance in
/// bounds.
pub fn sweep(cfg: &SweepConfig) -> SweepReport {
    sweep_with(cfg, crate::solve)
}

/// As [`sweep`] with a substitute decision procedure.
pub fn sweep_with<F>(cfg: &SweepConfig, decide: F) -> SweepReport
where
    F: Fn(&MarginPair, SubgroupId, MatrixClass) -> Result<FeasibilityReport> + Sync,
{
    let run = || blocks(cfg, &decide);
    match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}

/// Instances are visited in a fixed order: dimensions, then total, then row
/// vector, then column vector (each lexicographic), then subgroup, then
/// class. Work is split across row vectors and gathered in that order.
fn blocks<F>(cfg: &SweepConfig, decide: &F) -> SweepReport
where
    F: Fn(&MarginPair, SubgroupId, MatrixClass) -> Result<FeasibilityReport> + Sync,
{
    let mut report = SweepReport::default();
    for m in 1..=cfg.max_m {
        for n in 1..=cfg.max_n {
            let subgroups: Vec<SubgroupId> =
                cfg.subgroups.iter().copied().filter(|h| !h.requires_square() || m == n).collect();
            for total in 0..=cfg.max_total {
                let rows = compositions(m, total, total);
                let cols = compositions(n, total, total);
                let parts: Vec<SweepReport> = rows
                    .par_iter()
                    .map(|r| {
                        let mut part = SweepReport::default();
                        for s in &cols {
                            let Ok(p) = MarginPair::from_integers(r, s) else { continue };
                            for &h in &subgroups {
                                for &c in &cfg.classes {
                                    if !in_domain(c, r, s) {
                                        continue;
                                    }
                                    let (feasible, d) = check(&p, h, c, cfg.entry_bound, decide);
                                    part.checks += 1;
                                    part.feasible += usize::from(feasible);
                                    part.discrepancies.extend(d);
                                }
                            }
                        }
                        part
                    })
                    .collect();
                for part in parts {
                    report.checks += part.checks;
                    report.feasible += part.feasible;
                    report.discrepancies.extend(part.discrepancies);
                }
            }
        }
    }
    report
}

fn in_domain(c: MatrixClass, r: &[i64], s: &[i64]) -> bool {
    match c {
        MatrixClass::Real => false,
        MatrixClass::Integral => true,
        MatrixClass::ZeroOne => {
            r.iter().all(|&x| x <= s.len() as i64) && s.iter().all(|&x| x <= r.len() as i64)
        }
    }
}

fn check<F>(p: &MarginPair, h: SubgroupId, c: MatrixClass, bound: Option<i64>, decide: &F) -> (bool, Option<Discrepancy>)
where
    F: Fn(&MarginPair, SubgroupId, MatrixClass) -> Result<FeasibilityReport>,
{
    let total = p.total().to_i64().unwrap_or(0);
    let oracle = enumerate(p, h, c, Some(bound.unwrap_or(total)));
    let theorem = decide(p, h, c);
    let mut d = Discrepancy {
        instance: p.to_string(),
        subgroup: h,
        class: c,
        theorem: theorem.as_ref().ok().map(|t| t.decision),
        oracle: oracle.as_ref().ok().map(|w| Decision::from_bool(w.is_some())),
        note: None,
    };
    match (&theorem, &oracle) {
        (Err(e), _) | (_, Err(e)) => d.note = Some(e.to_string()),
        (Ok(t), Ok(_)) => {
            if let Some(w) = &t.witness {
                let v = verify(w, p, h, c);
                if !v.pass() {
                    d.note = Some(format!("witness {v}"));
                }
            } else if t.is_feasible() {
                d.note = Some("feasible without witness".to_string());
            }
        }
    }
    let feasible = d.oracle == Some(Decision::Feasible);
    let bad = d.note.is_some() || d.theorem != d.oracle;
    (feasible, bad.then_some(d))
}

/// Vectors of length `len` with nonnegative entries at most `cap` summing
/// to `total`, in lexicographic order.
pub(crate) fn compositions(len: usize, total: i64, cap: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, total: i64, cap: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() + 1 == len {
            if total <= cap {
                prefix.push(total);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for x in 0..=total.min(cap) {
            prefix.push(x);
            go(len, total - x, cap, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(len, total, cap, &mut Vec::with_capacity(len), &mut out);
    out
}
