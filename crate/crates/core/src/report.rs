//! Exhaustive equivalence runs: several verdicts evaluated on every
//! nonempty subset of a small vertex set, with deterministic merging.

use rayon::prelude::*;

use crate::util::{mask_to_subset, subset_count};
use crate::{Error, Result};

/// Subset on which the verdicts disagreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub subset: Vec<usize>,
    pub verdicts: Vec<(String, bool)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub name: String,
    pub subsets_checked: u64,
    /// Subsets on which every verdict was true.
    pub positives: u64,
    /// First disagreement in subset-mask order.
    pub discrepancy: Option<Discrepancy>,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.discrepancy.is_none()
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "equivalence\nname: {}\nsubsets_checked: {}\npositives: {}\nholds: {}\n",
            self.name,
            self.subsets_checked,
            self.positives,
            self.holds()
        );
        match &self.discrepancy {
            None => out.push_str("discrepancy: none\n"),
            Some(d) => {
                let ids: Vec<String> = d.subset.iter().map(|v| (v + 1).to_string()).collect();
                let vs: Vec<String> = d.verdicts.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!("discrepancy: {{{}}} {}\n", ids.join(","), vs.join(" ")));
            }
        }
        out.push_str("end");
        out
    }
}

/// Evaluate `check` on every nonempty subset of `0..n` (as bitmasks) and
/// require all verdicts to agree. Fails when `2^n − 1` exceeds `budget`.
pub fn exhaustive_equivalence<F>(name: &str, n: usize, budget: u64, check: F) -> Result<EquivalenceReport>
where
    F: Fn(&[usize]) -> Vec<(String, bool)> + Sync,
{
    let total = subset_count(n);
    if total > budget as u128 || n >= 64 {
        return Err(Error::BudgetExceeded { budget, needed: total.min(u64::MAX as u128) as u64 });
    }
    let total = total as u64;
    const CHUNK: u64 = 1 << 12;
    let chunks = total.div_ceil(CHUNK);
    let partial: Vec<(u64, Option<Discrepancy>)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK + 1;
            let hi = ((c + 1) * CHUNK).min(total);
            let mut positives = 0;
            for mask in lo..=hi {
                let subset = mask_to_subset(mask, n);
                let verdicts = check(&subset);
                let first = verdicts.first().map(|v| v.1).unwrap_or(true);
                if verdicts.iter().any(|v| v.1 != first) {
                    return (positives, Some(Discrepancy { subset, verdicts }));
                }
                if first {
                    positives += 1;
                }
            }
            (positives, None)
        })
        .collect();
    let mut report =
        EquivalenceReport { name: name.to_string(), subsets_checked: total, positives: 0, discrepancy: None };
    for (p, d) in partial {
        report.positives += p;
        if report.discrepancy.is_none() && d.is_some() {
            report.discrepancy = d;
        }
    }
    if report.discrepancy.is_some() {
        report.positives = 0;
    }
    Ok(report)
}

/// Outcome of a minimal-design enumeration checked against an expected
/// family of minimal designs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalAudit {
    pub problem: String,
    pub max_size: usize,
    pub designs_found: usize,
    /// Minimal designs, each rendered as a list of vertex labels.
    pub minimal: Vec<Vec<String>>,
    pub matches_expected: bool,
    pub unions_of_minimal: bool,
    pub nodes_expanded: u64,
}

impl MinimalAudit {
    pub fn holds(&self) -> bool {
        self.matches_expected && self.unions_of_minimal
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "minimal designs\nproblem: {}\nmax_size: {}\ndesigns_found: {}\nminimal: {}\n",
            self.problem,
            self.max_size,
            self.designs_found,
            self.minimal.len()
        );
        for m in &self.minimal {
            out.push_str(&format!("minimal_design: {}\n", m.join(" ")));
        }
        out.push_str(&format!(
            "matches_expected: {}\nunions_of_minimal: {}\nnodes_expanded: {}\nholds: {}\nend",
            self.matches_expected,
            self.unions_of_minimal,
            self.nodes_expanded,
            self.holds()
        ));
        out
    }
}
