//! Published `D′` submatrices bundled with the tool, and their comparison
//! against recomputation.

use crate::error::{CliError, Result};
use coxsolomon_core::coxclass::Analysis;
use coxsolomon_core::types::parabolic_order;
use coxsolomon_core::verify::{d_matrix, DPrimeMatrix};
use coxsolomon_core::{CoxeterSystem, CoxeterType, GeneratorSet};
use serde::Serialize;

pub const NAMES: [&str; 6] = ["H3", "H4", "F4", "E6", "E7", "E8"];

fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "H3" => include_str!("../fixtures/H3.tsv"),
        "H4" => include_str!("../fixtures/H4.tsv"),
        "F4" => include_str!("../fixtures/F4.tsv"),
        "E6" => include_str!("../fixtures/E6.tsv"),
        "E7" => include_str!("../fixtures/E7.tsv"),
        "E8" => include_str!("../fixtures/E8.tsv"),
        _ => return None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub type_label: String,
    /// Representatives in printed order.
    pub labels: Vec<String>,
    pub subsets: Vec<GeneratorSet>,
    pub entries: Vec<Vec<u128>>,
    /// The `# source:` header line.
    pub provenance: String,
}

impl Fixture {
    pub fn bundled(name: &str) -> Result<Fixture> {
        let text = source(name).ok_or_else(|| CliError::NoFixture(name.to_string()))?;
        Fixture::parse(name, text)
    }

    pub fn parse(name: &str, text: &str) -> Result<Fixture> {
        let bad = |reason: String| CliError::BadFixture {
            name: name.to_string(),
            reason,
        };
        let mut type_label = None;
        let mut provenance = String::new();
        let mut body = Vec::new();
        for line in text.lines() {
            if let Some(h) = line.strip_prefix('#') {
                let h = h.trim();
                if let Some(t) = h.strip_prefix("type:") {
                    type_label = Some(t.trim().to_string());
                } else if let Some(s) = h.strip_prefix("source:") {
                    provenance = s.trim().to_string();
                }
            } else if !line.is_empty() {
                body.push(line);
            }
        }
        let type_label = type_label.ok_or_else(|| bad("missing '# type:' header".into()))?;
        let (header, rows) = body
            .split_first()
            .ok_or_else(|| bad("empty table".into()))?;
        let labels: Vec<String> = header
            .strip_prefix('\t')
            .ok_or_else(|| bad("header row must start with a tab".into()))?
            .split('\t')
            .map(str::to_string)
            .collect();
        let subsets = labels
            .iter()
            .map(|l| GeneratorSet::from_label(l).ok_or_else(|| bad(format!("bad label {l:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let mut seen = subsets.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != subsets.len() {
            return Err(bad("repeated label".into()));
        }
        if rows.len() != labels.len() {
            return Err(bad(format!(
                "{} labels but {} rows",
                labels.len(),
                rows.len()
            )));
        }
        let mut entries = Vec::with_capacity(rows.len());
        for (row, label) in rows.iter().zip(&labels) {
            let mut cells = row.split('\t');
            if cells.next() != Some(label.as_str()) {
                return Err(bad(format!("row label out of order, expected {label}")));
            }
            let values = cells
                .map(|c| {
                    c.parse::<u128>()
                        .map_err(|_| bad(format!("bad entry {c:?} in row {label}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if values.len() != labels.len() {
                return Err(bad(format!("row {label} has {} entries", values.len())));
            }
            entries.push(values);
        }
        Ok(Fixture {
            type_label,
            labels,
            subsets,
            entries,
            provenance,
        })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// The table exactly as `dmatrix --paper-order` prints it.
    pub fn body_tsv(&self) -> String {
        crate::emit::matrix_tsv(&self.labels, &self.entries)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }
}

/// Reorder a computed matrix to the fixture's label order. Each fixture
/// label is matched to the computed row of the same Coxeter class.
pub fn align(m: &DPrimeMatrix, an: &Analysis, fixture: &Fixture) -> Result<DPrimeMatrix> {
    let bad = |reason: String| CliError::BadFixture {
        name: fixture.type_label.clone(),
        reason,
    };
    if m.size() != fixture.size() {
        return Err(bad(format!(
            "{} representatives computed, {} in the fixture",
            m.size(),
            fixture.size()
        )));
    }
    let order = fixture
        .subsets
        .iter()
        .map(|&s| {
            let lambda = an.coxeter.lambda_of(s);
            m.labels
                .iter()
                .position(|&r| an.coxeter.lambda_of(r) == lambda)
                .ok_or_else(|| {
                    bad(format!(
                        "label {s} is not conjugate to any computed representative"
                    ))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sorted = order.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != order.len() {
        return Err(bad("two labels fall in the same Coxeter class".into()));
    }
    Ok(m.permuted(&order, fixture.subsets.clone()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryDiff {
    pub row: String,
    pub col: String,
    pub fixture: u128,
    pub computed: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullRowMismatch {
    pub col: String,
    pub fixture: u128,
    pub expected: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureCheck {
    #[serde(rename = "type")]
    pub type_label: String,
    pub source: String,
    pub size: usize,
    pub recomputed: bool,
    pub symmetric: bool,
    /// Mismatches of the row `I = S` against `|W|/|W_J|`.
    pub full_row: Vec<FullRowMismatch>,
    /// Entry differences against recomputation (empty when not recomputed).
    pub diffs: Vec<EntryDiff>,
}

impl FixtureCheck {
    pub fn passed(&self) -> bool {
        self.symmetric && self.full_row.is_empty() && self.diffs.is_empty()
    }
}

/// Row `I = S`: since `X_S = {e}`, `d_{S,J} = 1^W_{W_J}(e) = |W|/|W_J|`.
pub fn full_row_mismatches(fixture: &Fixture, t: &CoxeterType) -> Result<Vec<FullRowMismatch>> {
    let full = GeneratorSet::full(t.rank());
    let row = fixture
        .subsets
        .iter()
        .position(|&s| s == full)
        .ok_or_else(|| CliError::BadFixture {
            name: fixture.type_label.clone(),
            reason: "no row for the full generating set".into(),
        })?;
    let order = t.order().expect("finite type");
    let matrix = t.coxeter_matrix();
    let mut out = Vec::new();
    for (k, &j) in fixture.subsets.iter().enumerate() {
        let expected = order / parabolic_order(&matrix, j)?;
        if fixture.entries[row][k] != expected {
            out.push(FullRowMismatch {
                col: fixture.labels[k].clone(),
                fixture: fixture.entries[row][k],
                expected,
            });
        }
    }
    Ok(out)
}

/// Internal consistency checks, plus an entry-wise comparison with a fresh
/// computation when `sys` is given.
pub fn check_fixture(
    fixture: &Fixture,
    sys: Option<(&CoxeterSystem, &Analysis)>,
) -> Result<FixtureCheck> {
    let t: CoxeterType = fixture.type_label.parse()?;
    let mut check = FixtureCheck {
        type_label: fixture.type_label.clone(),
        source: fixture.provenance.clone(),
        size: fixture.size(),
        recomputed: sys.is_some(),
        symmetric: fixture.is_symmetric(),
        full_row: full_row_mismatches(fixture, &t)?,
        diffs: Vec::new(),
    };
    if let Some((sys, an)) = sys {
        let computed = align(&d_matrix(sys, an, 2)?, an, fixture)?;
        for i in 0..fixture.size() {
            for j in 0..fixture.size() {
                if computed.entries[i][j] != fixture.entries[i][j] {
                    check.diffs.push(EntryDiff {
                        row: fixture.labels[i].clone(),
                        col: fixture.labels[j].clone(),
                        fixture: fixture.entries[i][j],
                        computed: computed.entries[i][j],
                    });
                }
            }
        }
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_bundled_fixtures_parse() {
        let sizes: Vec<usize> = NAMES
            .iter()
            .map(|n| Fixture::bundled(n).unwrap().size())
            .collect();
        assert_eq!(sizes, vec![4, 8, 9, 15, 30, 39]);
    }

    #[test]
    fn h3_fixture_values() {
        let f = Fixture::bundled("H3").unwrap();
        assert_eq!(f.labels, ["12", "123", "13", "23"]);
        assert_eq!(f.entries[0][0], 24);
        assert_eq!(f.entries[1][1], 1);
        assert_eq!(f.entries[2][3], 46);
    }

    #[test]
    fn rejects_malformed_tables() {
        assert!(Fixture::parse("x", "\t12\n12\t1\n").is_err());
        assert!(Fixture::parse("x", "# type: A2\n\t12\n12\t1\t2\n").is_err());
        assert!(Fixture::parse("x", "# type: A2\n\t12\t12\n12\t1\t1\n12\t1\t1\n").is_err());
        assert!(Fixture::parse("x", "# type: A2\n\t12\n12\tz\n").is_err());
        assert!(Fixture::parse("x", "# type: A2\n\t12\n12\t1\n").is_ok());
    }

    #[test]
    fn unknown_fixture() {
        assert!(matches!(
            Fixture::bundled("B3"),
            Err(CliError::NoFixture(_))
        ));
    }

    #[test]
    fn h3_recomputation_has_no_diffs() {
        let sys = CoxeterSystem::build("H3").unwrap();
        let an = Analysis::new(&sys).unwrap();
        let c = check_fixture(&Fixture::bundled("H3").unwrap(), Some((&sys, &an))).unwrap();
        assert!(c.passed(), "{c:?}");
        assert!(c.recomputed);
    }

    #[test]
    fn full_row_detects_a_bad_entry() {
        let mut f = Fixture::bundled("E7").unwrap();
        assert!(full_row_mismatches(&f, &"E7".parse().unwrap())
            .unwrap()
            .is_empty());
        f.entries[5][0] += 1;
        let m = full_row_mismatches(&f, &"E7".parse().unwrap()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].expected, 725760);
    }
}
