//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use coxsolomon_cli::cache;
use coxsolomon_cli::fixtures::{self, Fixture};
use coxsolomon_core::chars::{induced_trivial, induced_trivial_by_conjugation};
use coxsolomon_core::cosets::{conjugate_subset, double_coset_reps, kilmoyer_subset};
use coxsolomon_core::coxclass::{check_coxeqequ, phi_rank, Analysis};
use coxsolomon_core::types::parabolic_order;
use coxsolomon_core::verify::{self, d_matrix, dcc_is_theorem, w_set, Verdict};
use coxsolomon_core::{CoxeterSystem, CoxeterType, GeneratorSet};
use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn system(spec: &str) -> Result<(CoxeterSystem, Analysis), String> {
    let sys = CoxeterSystem::build(spec).map_err(|e| format!("{spec}: {e}"))?;
    let an = Analysis::new(&sys).map_err(|e| format!("{spec}: {e}"))?;
    Ok((sys, an))
}

fn dihedral() -> Vec<String> {
    (3..=12).map(|m| format!("I2({m})")).collect()
}

/// Every shipped type with `|W| ≤ 1152`.
fn small_types() -> Vec<String> {
    let mut v: Vec<String> = [
        "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "F4", "H3", "A1xA1", "A1xA2",
        "A2xA2", "A1xB2", "A1xH3", "A1xA1xA1", "A1xB3", "A3xA1", "B2xB2",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    v.extend(dihedral());
    v
}

/// Every type recomputed anywhere in the acceptance run.
fn recomputable_types() -> Vec<String> {
    let mut v = small_types();
    v.extend(
        ["A6", "A7", "B5", "D5", "D6", "H4", "E6"]
            .iter()
            .map(|s| s.to_string()),
    );
    v
}

fn bin(args: &[&str]) -> Result<(Vec<u8>, Option<i32>, Duration), String> {
    let t = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_coxsolomon"))
        .args(args)
        .env_remove("COXSOLOMON_CACHE")
        .output()
        .map_err(|e| format!("cannot run binary: {e}"))?;
    Ok((out.stdout, out.status.code(), t.elapsed()))
}

fn criterion_1() -> Outcome {
    let cases: [(&str, &str, &str, u128, Duration); 4] = [
        ("H3", "12", "12", 24, Duration::from_secs(5)),
        ("F4", "12", "12", 396, Duration::from_secs(5)),
        ("H4", "12", "12", 4080, Duration::from_secs(60)),
        ("E6", "12", "12", 29136, Duration::from_secs(1800)),
    ];
    let mut notes = Vec::new();
    for (spec, row, col, value, budget) in cases {
        let (stdout, code, elapsed) = bin(&["dmatrix", spec, "--min-size", "2", "--paper-order"])?;
        ensure!(code == Some(0), "{spec}: exit {code:?}");
        let fixture = Fixture::bundled(spec).map_err(|e| e.to_string())?;
        ensure!(
            stdout == fixture.body_tsv().into_bytes(),
            "{spec}: output differs from the bundled table"
        );
        let i = fixture.labels.iter().position(|l| l == row).unwrap();
        let j = fixture.labels.iter().position(|l| l == col).unwrap();
        ensure!(
            fixture.entries[i][j] == value,
            "{spec}[{row},{col}] = {}",
            fixture.entries[i][j]
        );
        ensure!(
            elapsed < budget,
            "{spec} took {elapsed:?}, budget {budget:?}"
        );
        notes.push(format!(
            "{spec} {n}x{n} exact in {elapsed:.2?}",
            n = fixture.size()
        ));
    }
    let h3 = Fixture::bundled("H3").map_err(|e| e.to_string())?;
    ensure!(h3.entries[1][1] == 1, "H3[123,123] = {}", h3.entries[1][1]);
    Ok(notes.join("; "))
}

fn criterion_2() -> Outcome {
    let mut types: Vec<String> = [
        "A1", "A2", "A3", "A4", "A5", "F4", "H3", "H4", "E6", "A2xA2", "A1xH3",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    types.extend(dihedral());
    for spec in &types {
        let (sys, an) = system(spec)?;
        ensure!(
            verify::symmetry_is_theorem(&sys),
            "{spec}: symmetry not classified as a theorem"
        );
        let r = verify::check_symmetry(&sys, &an);
        ensure!(
            r.verdict() == Verdict::Pass && r.asserted == r.checked,
            "{spec}: {} with {} witnesses",
            r.verdict(),
            r.witnesses.len()
        );
        let d = d_matrix(&sys, &an, 0).map_err(|e| format!("{spec}: {e}"))?;
        ensure!(
            d.is_symmetric(),
            "{spec}: D' asymmetric at {:?}",
            d.asymmetric_pairs()
        );
    }
    Ok(format!("{} types, every pair (I,J) asserted", types.len()))
}

fn criterion_3() -> Outcome {
    let types = small_types();
    let mut pairs = 0;
    for spec in &types {
        let (sys, an) = system(spec)?;
        ensure!(sys.order() <= 1152, "{spec} is larger than 1152");
        let r = verify::check_isometry(&sys, &an);
        ensure!(
            r.verdict() == Verdict::Pass,
            "{spec}: {} {:?}",
            r.verdict(),
            r.witnesses.first()
        );
        pairs += r.checked;
    }
    Ok(format!("{} types, {pairs} exact identities", types.len()))
}

fn criterion_4() -> Outcome {
    let types = small_types();
    for spec in &types {
        let (sys, an) = system(spec)?;
        let lambda = an.coxeter.len();
        let rank = phi_rank(&an.induced);
        ensure!(rank == lambda, "{spec}: rank {rank} vs |Lambda| {lambda}");
        ensure!(
            an.kernel_dimension() == (1 << sys.rank()) - lambda,
            "{spec}: dim ker {} vs {}",
            an.kernel_dimension(),
            (1 << sys.rank()) - lambda
        );
        let r = verify::check_kernel(&sys, &an);
        ensure!(
            r.verdict() == Verdict::Pass,
            "{spec}: {:?}",
            r.witnesses.first()
        );
    }
    Ok(format!("{} types", types.len()))
}

fn criterion_5() -> Outcome {
    for spec in dihedral() {
        let (sys, _) = system(&spec)?;
        let r = verify::check_double_coset_conjecture(&sys);
        ensure!(
            r.verdict() == Verdict::Pass && r.asserted == r.checked,
            "{spec}: {} ({} of {} asserted)",
            r.verdict(),
            r.asserted,
            r.checked
        );
        let r = verify::check_single_generator(&sys);
        ensure!(
            r.verdict() == Verdict::Pass,
            "{spec}: single generator {:?}",
            r.witnesses.first()
        );
    }
    let mut special = 0;
    for spec in ["A3", "B3", "H3"] {
        let (sys, _) = system(spec)?;
        let full = sys.full_set();
        for i in GeneratorSet::all(sys.rank()) {
            for j in GeneratorSet::all(sys.rank()) {
                for b in double_coset_reps(&sys, i, j).reps {
                    let bj = conjugate_subset(&sys, b, j);
                    let is_special = j.is_empty()
                        || j == full
                        || j.len() == 1
                        || bj.is_some_and(|c| c.is_subset(i));
                    if !is_special {
                        continue;
                    }
                    ensure!(
                        dcc_is_theorem(&sys, i, j, b),
                        "{spec}: I={i} J={j} not asserted"
                    );
                    let lhs = w_set(&sys, i, j, b)
                        .map_err(|e| e.to_string())?
                        .members
                        .len();
                    let rhs = w_set(&sys, j, i, sys.inv_of(b))
                        .map_err(|e| e.to_string())?
                        .members
                        .len();
                    ensure!(
                        lhs == rhs,
                        "{spec}: I={i} J={j} b={}: {lhs} vs {rhs}",
                        verify::word_label(&sys, b)
                    );
                    special += 1;
                }
            }
        }
        let r = verify::check_single_generator(&sys);
        ensure!(
            r.verdict() == Verdict::Pass,
            "{spec}: single generator {:?}",
            r.witnesses.first()
        );
        let r = verify::check_double_coset_conjecture(&sys);
        ensure!(
            r.verdict() != Verdict::Violation,
            "{spec}: {:?}",
            r.witnesses.first()
        );
    }
    Ok(format!(
        "I2(3..12) exhaustive; {special} special-case triples on A3, B3, H3"
    ))
}

fn criterion_6() -> Outcome {
    for spec in ["A1", "A2", "A3", "B2", "I2(5)"] {
        let (sys, an) = system(spec)?;
        let r = verify::check_structure(&sys, &an);
        ensure!(
            r.verdict() == Verdict::Pass,
            "{spec}: structure {:?}",
            r.witnesses.first()
        );
    }
    let mut induced = 0;
    for spec in [
        "A1", "A2", "A3", "B2", "B3", "H3", "A1xA1", "A1xA2", "A1xB2", "I2(5)", "I2(6)", "I2(8)",
    ] {
        let (sys, an) = system(spec)?;
        for i in GeneratorSet::all(sys.rank()) {
            let a = induced_trivial(&sys, &an.table, i);
            let b = induced_trivial_by_conjugation(&sys, &an.table, i);
            ensure!(a == b, "{spec}: induced characters differ for I={i}");
            induced += 1;
        }
    }
    let types = recomputable_types();
    for spec in &types {
        let (sys, an) = system(spec)?;
        d_matrix(&sys, &an, 0).map_err(|e| format!("{spec}: {e}"))?;
    }
    let mut kilmoyer = 0;
    for spec in [
        "A1", "A2", "A3", "B2", "B3", "H3", "A1xA2", "A1xA1xA1", "I2(7)",
    ] {
        let (sys, _) = system(spec)?;
        for i in GeneratorSet::all(sys.rank()) {
            for j in GeneratorSet::all(sys.rank()) {
                for b in double_coset_reps(&sys, i, j).reps {
                    let k = kilmoyer_subset(&sys, i, j, b).map_err(|e| e.to_string())?;
                    let b_inv = sys.inv_of(b);
                    let brute: BTreeSet<u32> = sys
                        .parabolic_elements(j)
                        .into_iter()
                        .filter(|&v| sys.in_parabolic(sys.mul(sys.mul(b, v), b_inv), i))
                        .collect();
                    let expected: BTreeSet<u32> = sys.parabolic_elements(k).into_iter().collect();
                    ensure!(
                        brute == expected,
                        "{spec}: I={i} J={j} b={}",
                        verify::word_label(&sys, b)
                    );
                    kilmoyer += 1;
                }
            }
        }
    }
    Ok(format!(
        "structure 5 types; induced {induced} subsets; d_matrix {} types; Kilmoyer {kilmoyer} triples",
        types.len()
    ))
}

fn criterion_7() -> Outcome {
    let mut got = Vec::new();
    for spec in ["A3", "A1xA2", "B3", "D4", "F4", "H3", "I2(4)", "I2(5)"] {
        let (_, an) = system(spec)?;
        let pure_a = spec.parse::<CoxeterType>().unwrap().is_product_of_type_a();
        let eq = check_coxeqequ(&an.table, &an.coxeter);
        ensure!(eq == pure_a, "{spec}: coxeqequ {eq}, pure type A {pure_a}");
        if eq {
            got.push(spec);
        }
    }
    ensure!(got == ["A3", "A1xA2"], "coxeqequ holds for {got:?}");
    let types = recomputable_types();
    for spec in &types {
        let (sys, an) = system(spec)?;
        let mut seen = vec![false; an.table.len()];
        let mut mass = 0;
        for l in an.coxeter.lambda_sets() {
            for &c in &l.class_ids {
                ensure!(
                    !std::mem::replace(&mut seen[c], true),
                    "{spec}: class {c} in two lambda-sets"
                );
                mass += an.table.class(c).size;
            }
        }
        ensure!(
            seen.iter().all(|&s| s),
            "{spec}: some class has no Coxeter type"
        );
        ensure!(mass == sys.order(), "{spec}: sum |C(lambda)| = {mass}");
    }
    Ok(format!(
        "coxeqequ exactly on A3, A1xA2; partition on {} types",
        types.len()
    ))
}

fn criterion_8() -> Outcome {
    for spec in ["E7", "E8"] {
        let f = Fixture::bundled(spec).map_err(|e| e.to_string())?;
        let c = fixtures::check_fixture(&f, None).map_err(|e| e.to_string())?;
        ensure!(c.symmetric, "{spec}: stored matrix is not symmetric");
        ensure!(
            c.full_row.is_empty(),
            "{spec}: full row mismatches {:?}",
            c.full_row
        );
        let (stdout, code, _) = bin(&["fixtures", spec])?;
        let text = String::from_utf8_lossy(&stdout);
        ensure!(code == Some(0), "{spec}: fixtures exit {code:?}");
        ensure!(text.contains("not recomputed\tpass"), "{spec}: {text}");
    }
    let f = Fixture::bundled("E8").map_err(|e| e.to_string())?;
    let t: CoxeterType = "E8".parse().unwrap();
    let (row, col) = (6, 0);
    ensure!(
        f.labels[row] == "12345678" && f.labels[col] == "12",
        "E8 label order {:?}",
        &f.labels[..7]
    );
    let expected =
        t.order().unwrap() / parabolic_order(&t.coxeter_matrix(), f.subsets[col]).unwrap();
    ensure!(expected == 174182400, "|W(E8)|/|W_12| = {expected}");
    ensure!(
        f.entries[row][col] == expected,
        "E8[lambda7,lambda1] = {}",
        f.entries[row][col]
    );
    Ok(
        "E7 30x30 and E8 39x39 symmetric; full rows match |W|/|W_J|; E8 [12345678,12] = 174182400"
            .into(),
    )
}

fn criterion_9() -> Outcome {
    let commands: [&[&str]; 7] = [
        &["group", "E6", "--format", "json"],
        &["dmatrix", "E6", "--paper-order"],
        &["dmatrix", "H4", "--format", "json", "--min-size", "0"],
        &["check", "H3", "--format", "json"],
        &["check", "B3"],
        &["fixtures"],
        &["fixtures", "--format", "json"],
    ];
    for args in commands {
        let (a, ca, _) = bin(args)?;
        let (b, cb, _) = bin(args)?;
        ensure!(ca == Some(0) && ca == cb, "{args:?}: exit {ca:?} / {cb:?}");
        ensure!(a == b, "{args:?}: outputs differ between runs");
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for spec in ["F4", "E6", "A1xH3"] {
        let sys = CoxeterSystem::build(spec).map_err(|e| e.to_string())?;
        let path = cache::write(dir.path(), &sys).map_err(|e| e.to_string())?;
        let back = cache::read(&path, None).map_err(|e| e.to_string())?;
        ensure!(
            back.all_images() == sys.all_images(),
            "{spec}: element stores differ"
        );
        ensure!(
            (0..sys.order() as u32)
                .all(|w| back.inv_of(w) == sys.inv_of(w) && back.len_of(w) == sys.len_of(w)),
            "{spec}: derived tables differ"
        );
    }
    let d = dir.path().to_str().unwrap();
    let (out, code, _) = bin(&["cache", "load", "F4", "--cache-dir", d])?;
    ensure!(code == Some(0), "cache load exit {code:?}");
    ensure!(
        String::from_utf8_lossy(&out).contains("identical to fresh enumeration: yes"),
        "cache load reports a difference"
    );
    Ok(format!(
        "{} commands byte-identical across runs; cache round trip on F4, E6, A1xH3",
        commands.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("fixture reproduction H3/F4/H4/E6", criterion_1),
        ("symmetry theorem", criterion_2),
        ("isometry theorem", criterion_3),
        ("kernel dimension", criterion_4),
        ("double coset scans", criterion_5),
        ("oracle equivalence suites", criterion_6),
        ("classification checks", criterion_7),
        ("E7/E8 fixture consistency", criterion_8),
        ("determinism and cache round trip", criterion_9),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{secs:.1}s]", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.1}s]", n + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
