//! Runs theorem checks over a list of structures and collects every case
//! where a theorem's stated relation between its conditions fails.

use rayon::prelude::*;
use serde::Serialize;

use crate::properties::verify_theorem;
use crate::search::enumerate_ordered;
use crate::{OrderedSemigroup, RawStructure, Result, TheoremId, TheoremReport};

/// Every canonical ordered semigroup with `1..=n_max` elements, in
/// emission order.
pub fn canonical_corpus(n_max: usize) -> Result<Vec<OrderedSemigroup>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_ordered(n, true)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureOutcome {
    pub index: usize,
    pub name: String,
    pub checked: Vec<TheoremId>,
    pub skipped: Vec<TheoremId>,
}

/// A structure on which a theorem's relation fails, with everything needed
/// to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub index: usize,
    pub structure: RawStructure,
    pub report: TheoremReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub structures: usize,
    pub checks: usize,
    pub outcomes: Vec<StructureOutcome>,
    pub findings: Vec<Finding>,
}

impl CorpusReport {
    pub fn is_clean(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn run_one(
    index: usize,
    s: &OrderedSemigroup,
    theorems: &[TheoremId],
) -> Result<(StructureOutcome, Vec<Finding>)> {
    let mut outcome = StructureOutcome {
        index,
        name: s.name().to_string(),
        checked: Vec::new(),
        skipped: Vec::new(),
    };
    let mut findings = Vec::new();
    for &t in theorems {
        if !t.applies_to(s) {
            outcome.skipped.push(t);
            continue;
        }
        let report = verify_theorem(s, t)?;
        outcome.checked.push(t);
        if !report.relation_respected {
            findings.push(Finding {
                index,
                structure: s.to_raw(),
                report,
            });
        }
    }
    Ok((outcome, findings))
}

/// Checks every applicable theorem on every structure. The report is the
/// same whether or not `parallel` is set.
pub fn run_corpus(
    structures: &[OrderedSemigroup],
    theorems: &[TheoremId],
    parallel: bool,
) -> Result<CorpusReport> {
    let results: Vec<Result<(StructureOutcome, Vec<Finding>)>> = if parallel {
        structures
            .par_iter()
            .enumerate()
            .map(|(i, s)| run_one(i, s, theorems))
            .collect()
    } else {
        structures
            .iter()
            .enumerate()
            .map(|(i, s)| run_one(i, s, theorems))
            .collect()
    };
    let mut outcomes = Vec::with_capacity(structures.len());
    let mut findings = Vec::new();
    for r in results {
        let (o, f) = r?;
        outcomes.push(o);
        findings.extend(f);
    }
    outcomes.sort_by_key(|o| o.index);
    findings.sort_by_key(|f| (f.index, f.report.theorem));
    Ok(CorpusReport {
        structures: structures.len(),
        checks: outcomes.iter().map(|o| o.checked.len()).sum(),
        outcomes,
        findings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_is_clean_and_deterministic() {
        let corpus = canonical_corpus(2).unwrap();
        assert_eq!(corpus.len(), 12);
        let serial = run_corpus(&corpus, &TheoremId::ALL, false).unwrap();
        let parallel = run_corpus(&corpus, &TheoremId::ALL, true).unwrap();
        assert_eq!(serial.to_json(), parallel.to_json());
        assert!(serial.is_clean(), "{:?}", serial.findings);
        assert!(serial.checks > 0);
    }
}
