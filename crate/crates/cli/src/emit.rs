//! Text and JSON renderings. Every function here is a pure function of its
//! input, so repeated runs print identical bytes.

use crate::fixtures::FixtureCheck;
use coxsolomon_core::verify::{Report, Witness};
use serde::Serialize;
use std::fmt::Write;

/// Header row of labels (first cell empty), then one labelled row per
/// label, tab separated.
pub fn matrix_tsv(labels: &[String], entries: &[Vec<u128>]) -> String {
    let mut out = String::new();
    for l in labels {
        out.push('\t');
        out.push_str(l);
    }
    out.push('\n');
    for (l, row) in labels.iter().zip(entries) {
        out.push_str(l);
        for v in row {
            write!(out, "\t{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
pub struct MatrixJson<'a> {
    #[serde(rename = "type")]
    pub type_label: &'a str,
    pub min_size: usize,
    pub labels: &'a [String],
    pub entries: &'a [Vec<u128>],
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupInfo {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub order: usize,
    pub classes: usize,
    pub coxeter_classes: usize,
    pub kernel_dimension: usize,
    pub cuspidal_classes: usize,
    pub representatives: Vec<String>,
    pub timing_ms: Option<u64>,
}

pub fn group_text(g: &GroupInfo) -> String {
    let mut out = String::new();
    writeln!(out, "type\t{}", g.type_label).unwrap();
    writeln!(out, "rank\t{}", g.rank).unwrap();
    writeln!(out, "order\t{}", g.order).unwrap();
    writeln!(out, "classes\t{}", g.classes).unwrap();
    writeln!(out, "coxeter_classes\t{}", g.coxeter_classes).unwrap();
    writeln!(out, "kernel_dimension\t{}", g.kernel_dimension).unwrap();
    writeln!(out, "cuspidal_classes\t{}", g.cuspidal_classes).unwrap();
    writeln!(out, "representatives\t{}", g.representatives.join(" ")).unwrap();
    if let Some(t) = g.timing_ms {
        writeln!(out, "timing_ms\t{t}").unwrap();
    }
    out
}

#[derive(Serialize)]
pub struct WitnessJson<'a> {
    pub context: &'a str,
    pub lhs: &'a str,
    pub rhs: &'a str,
    pub asserted: bool,
}

#[derive(Serialize)]
pub struct ReportJson<'a> {
    #[serde(rename = "type")]
    pub type_label: &'a str,
    pub check: &'a str,
    pub verdict: &'static str,
    pub checked: usize,
    pub asserted: usize,
    pub witnesses: Vec<WitnessJson<'a>>,
    pub timing_ms: Option<u64>,
}

impl<'a> ReportJson<'a> {
    pub fn new(type_label: &'a str, r: &'a Report, timing_ms: Option<u64>) -> Self {
        ReportJson {
            type_label,
            check: &r.check,
            verdict: r.verdict().as_str(),
            checked: r.checked,
            asserted: r.asserted,
            witnesses: r.witnesses.iter().map(witness_json).collect(),
            timing_ms,
        }
    }
}

fn witness_json(w: &Witness) -> WitnessJson<'_> {
    WitnessJson {
        context: &w.context,
        lhs: &w.lhs,
        rhs: &w.rhs,
        asserted: w.asserted,
    }
}

/// One summary line per report, then its witnesses indented.
pub fn reports_text(type_label: &str, reports: &[(Report, Option<u64>)]) -> String {
    let mut out = String::new();
    for (r, timing) in reports {
        write!(
            out,
            "{type_label}\t{}\t{}\tchecked {}\tasserted {}",
            r.check,
            r.verdict(),
            r.checked,
            r.asserted
        )
        .unwrap();
        if let Some(t) = timing {
            write!(out, "\ttiming_ms {t}").unwrap();
        }
        out.push('\n');
        for w in &r.witnesses {
            let tag = if w.asserted { "theorem" } else { "open" };
            writeln!(out, "\t{tag}\t{}\tlhs {}\trhs {}", w.context, w.lhs, w.rhs).unwrap();
        }
    }
    out
}

pub fn reports_json(type_label: &str, reports: &[(Report, Option<u64>)]) -> String {
    let items: Vec<ReportJson> = reports
        .iter()
        .map(|(r, t)| ReportJson::new(type_label, r, *t))
        .collect();
    let mut s = serde_json::to_string_pretty(&items).expect("reports serialize");
    s.push('\n');
    s
}

pub fn fixture_text(c: &FixtureCheck, timing_ms: Option<u64>) -> String {
    let mut out = String::new();
    let mode = if c.recomputed {
        "recomputed"
    } else {
        "not recomputed"
    };
    let verdict = if c.passed() { "pass" } else { "mismatch" };
    write!(
        out,
        "{}\t{}x{}\t{mode}\t{verdict}\tsymmetric {}\tdiffs {}\tfull-row mismatches {}",
        c.type_label,
        c.size,
        c.size,
        if c.symmetric { "yes" } else { "no" },
        c.diffs.len(),
        c.full_row.len()
    )
    .unwrap();
    if let Some(t) = timing_ms {
        write!(out, "\ttiming_ms {t}").unwrap();
    }
    out.push('\n');
    for d in &c.diffs {
        writeln!(
            out,
            "\tdiff\t[{},{}]\tfixture {}\tcomputed {}",
            d.row, d.col, d.fixture, d.computed
        )
        .unwrap();
    }
    for m in &c.full_row {
        writeln!(
            out,
            "\tfull-row\t[S,{}]\tfixture {}\texpected {}",
            m.col, m.fixture, m.expected
        )
        .unwrap();
    }
    out
}

#[derive(Serialize)]
pub struct FixtureJson<'a> {
    #[serde(flatten)]
    pub check: &'a FixtureCheck,
    pub verdict: &'static str,
    pub timing_ms: Option<u64>,
}
