use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{ClassEntry, ClassificationTable};
use crate::normal_form::NormalForm;
use crate::polytope::Point;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HStarCensusRow {
    pub hstar: Vec<u64>,
    pub n: usize,
    pub count: usize,
}

/// Distinct classes in `tables`, keyed by dimension and normal form.
fn distinct_classes(tables: &[ClassificationTable]) -> BTreeMap<(usize, &NormalForm), &ClassEntry> {
    tables
        .iter()
        .flat_map(|t| t.classes.iter().map(move |c| ((t.dim, &c.normal_form), c)))
        .collect()
}

/// Number of classes per exact h*-polynomial and dimension.
pub fn census_by_hstar(tables: &[ClassificationTable]) -> Vec<HStarCensusRow> {
    let mut counts: BTreeMap<(usize, Vec<u64>), usize> = BTreeMap::new();
    for ((n, _), c) in distinct_classes(tables) {
        *counts.entry((n, c.hstar.clone())).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|((n, hstar), count)| HStarCensusRow { hstar, n, count })
        .collect()
}

/// Checks that for every `(n, V, d)` the rows with `h*(1) = V` and
/// `deg h* = d` add up to the number of classes with those invariants.
pub fn census_sums_match(tables: &[ClassificationTable], rows: &[HStarCensusRow]) -> bool {
    let mut from_tables: BTreeMap<(usize, u64, usize), usize> = BTreeMap::new();
    for ((n, _), c) in distinct_classes(tables) {
        *from_tables.entry((n, c.nv, c.degree)).or_default() += 1;
    }
    let mut from_rows: BTreeMap<(usize, u64, usize), usize> = BTreeMap::new();
    for r in rows {
        let v: u64 = r.hstar.iter().sum();
        *from_rows.entry((r.n, v, r.hstar.len() - 1)).or_default() += r.count;
    }
    from_tables == from_rows
}

/// Outcome of checking `h*_1 <= 3 h*_2 + 4` on every degree-2 class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScottReport {
    pub checked: usize,
    /// Smallest value of `3 h*_2 + 4 - h*_1` seen.
    pub min_slack: Option<i64>,
    /// Largest value of `3 h*_2 + 4 - h*_1` seen.
    pub max_slack: Option<i64>,
    pub violations: Vec<Vec<Point>>,
    /// Representatives with slack zero.
    pub tight: Vec<Vec<Point>>,
}

impl ScottReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn scan_scott(tables: &[ClassificationTable]) -> ScottReport {
    let mut report = ScottReport {
        checked: 0,
        min_slack: None,
        max_slack: None,
        violations: Vec::new(),
        tight: Vec::new(),
    };
    for (_, c) in distinct_classes(tables) {
        if c.degree != 2 {
            continue;
        }
        report.checked += 1;
        let slack = 3 * c.hstar[2] as i64 + 4 - c.hstar[1] as i64;
        report.min_slack = Some(report.min_slack.map_or(slack, |m| m.min(slack)));
        report.max_slack = Some(report.max_slack.map_or(slack, |m| m.max(slack)));
        if slack < 0 {
            report.violations.push(c.representative.clone());
        } else if slack == 0 {
            report.tight.push(c.representative.clone());
        }
    }
    report
}

/// Largest normalized volume seen for each `(deg h*, h*_d)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LeadingCoefficientRow {
    pub degree: usize,
    pub leading: u64,
    pub max_nv: u64,
    pub classes: usize,
}

pub fn scan_leading_coefficient(tables: &[ClassificationTable]) -> Vec<LeadingCoefficientRow> {
    let mut rows: BTreeMap<(usize, u64), (u64, BTreeSet<&NormalForm>)> = BTreeMap::new();
    for ((_, nf), c) in distinct_classes(tables) {
        let leading = *c.hstar.last().expect("h* is nonempty");
        let e = rows.entry((c.degree, leading)).or_default();
        e.0 = e.0.max(c.nv);
        e.1.insert(nf);
    }
    rows.into_iter()
        .map(|((degree, leading), (max_nv, set))| LeadingCoefficientRow {
            degree,
            leading,
            max_nv,
            classes: set.len(),
        })
        .collect()
}
