use crate::cache;
use crate::emit::{self, FixtureJson, GroupInfo, MatrixJson};
use crate::error::{CliError, Result};
use crate::fixtures::{self, Fixture};
use crate::{CacheAction, Cli, Command, Format, GlobalOpts, Suite};
use coxsolomon_core::coxclass::Analysis;
use coxsolomon_core::verify::{self, d_matrix, Report, Verdict};
use coxsolomon_core::{CoxError, CoxeterSystem, CoxeterType};
use std::fmt::Write;
use std::path::PathBuf;
use std::time::Instant;

/// What a command prints on stdout and the status it exits with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            exit_code: 0,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.global.threads {
        pool = pool.num_threads(n);
    }
    pool.build()?.install(|| dispatch(cli))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Group { spec } => cmd_group(spec, g),
        Command::Dmatrix {
            spec,
            min_size,
            paper_order,
        } => cmd_dmatrix(spec, *min_size, *paper_order, g),
        Command::Check { spec, suite } => cmd_check(spec, *suite, g),
        Command::Fixtures { spec } => cmd_fixtures(spec.as_deref(), g),
        Command::Cache { action } => cmd_cache(action, g),
    }
}

struct Clock(Option<Instant>);

impl Clock {
    fn start(g: &GlobalOpts) -> Self {
        Clock(g.timing.then(Instant::now))
    }

    fn ms(&self) -> Option<u64> {
        self.0.map(|t| t.elapsed().as_millis() as u64)
    }
}

/// The cached store when one exists, otherwise a fresh enumeration.
pub fn load_system(spec: &str, g: &GlobalOpts) -> Result<CoxeterSystem> {
    let t: CoxeterType = spec.parse()?;
    if let Some(dir) = &g.cache_dir {
        if let Some(sys) = cache::load(dir, &t)? {
            if sys.order() as u64 > g.cap {
                return Err(CoxError::CapExceeded {
                    order: sys.order() as u128,
                    cap: g.cap,
                }
                .into());
            }
            return Ok(sys);
        }
    }
    Ok(CoxeterSystem::from_type(&t, g.cap)?)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_group(spec: &str, g: &GlobalOpts) -> Result<Outcome> {
    let clock = Clock::start(g);
    let sys = load_system(spec, g)?;
    let an = Analysis::new(&sys)?;
    let full = sys.full_set().bits();
    let cuspidal = an
        .table
        .classes()
        .iter()
        .filter(|c| c.members.iter().all(|&w| sys.support_mask(w) == full))
        .count();
    let info = GroupInfo {
        type_label: sys.label().to_string(),
        rank: sys.rank(),
        order: sys.order(),
        classes: an.table.len(),
        coxeter_classes: an.coxeter.len(),
        kernel_dimension: an.kernel_dimension(),
        cuspidal_classes: cuspidal,
        representatives: an
            .coxeter
            .representatives(0)
            .iter()
            .map(|r| r.label())
            .collect(),
        timing_ms: clock.ms(),
    };
    Ok(Outcome::ok(match g.format {
        Format::Tsv => emit::group_text(&info),
        Format::Json => to_json(&info),
    }))
}

fn cmd_dmatrix(spec: &str, min_size: usize, paper_order: bool, g: &GlobalOpts) -> Result<Outcome> {
    let clock = Clock::start(g);
    let sys = load_system(spec, g)?;
    let an = Analysis::new(&sys)?;
    let mut m = d_matrix(&sys, &an, min_size)?;
    let mut labels: Vec<String> = m.labels.iter().map(|l| l.label()).collect();
    if paper_order {
        let fixture = Fixture::bundled(sys.label())?;
        if min_size != 2 {
            return Err(CliError::BadFixture {
                name: fixture.type_label,
                reason:
                    "fixtures list representatives with at least 2 generators; use --min-size 2"
                        .into(),
            });
        }
        m = fixtures::align(&m, &an, &fixture)?;
        labels = fixture.labels;
    }
    let timing_ms = clock.ms();
    Ok(Outcome::ok(match g.format {
        Format::Tsv => {
            let mut s = emit::matrix_tsv(&labels, &m.entries);
            if let Some(t) = timing_ms {
                writeln!(s, "# timing_ms\t{t}").unwrap();
            }
            s
        }
        Format::Json => to_json(&MatrixJson {
            type_label: sys.label(),
            min_size,
            labels: &labels,
            entries: &m.entries,
            timing_ms,
        }),
    }))
}

fn timed<F: FnOnce() -> Report>(g: &GlobalOpts, f: F) -> (Report, Option<u64>) {
    let clock = Clock::start(g);
    let r = f();
    (r, clock.ms())
}

/// Reports for `suite`, in a fixed order.
pub fn run_suite(
    sys: &CoxeterSystem,
    an: &Analysis,
    suite: Suite,
    g: &GlobalOpts,
) -> Result<Vec<(Report, Option<u64>)>> {
    let want = |s: Suite| suite == Suite::All || suite == s;
    let mut out = Vec::new();
    if want(Suite::Classes) {
        out.push(timed(g, || verify::check_classes(sys, an)));
        out.push(timed(g, || verify::check_kernel(sys, an)));
    }
    if want(Suite::Isometry) {
        out.push(timed(g, || verify::check_isometry(sys, an)));
    }
    if want(Suite::Symmetry) {
        out.push(timed(g, || verify::check_symmetry(sys, an)));
    }
    if want(Suite::Gessel) {
        out.push(timed(g, || verify::check_gessel_counts(sys, an)));
    }
    if want(Suite::Structure) {
        out.push(timed(g, || verify::check_structure(sys, an)));
    }
    if want(Suite::Dcc) {
        out.push(timed(g, || verify::check_double_coset_conjecture(sys)));
        out.push(timed(g, || verify::check_single_generator(sys)));
        out.push(timed(g, || verify::check_prop_wset(sys, an)));
    }
    if suite == Suite::All {
        // factored and direct D′ must agree; a mismatch is an error
        d_matrix(sys, an, 0)?;
    }
    Ok(out)
}

fn cmd_check(spec: &str, suite: Suite, g: &GlobalOpts) -> Result<Outcome> {
    let sys = load_system(spec, g)?;
    let an = Analysis::new(&sys)?;
    let reports = run_suite(&sys, &an, suite, g)?;
    let violated = reports
        .iter()
        .any(|(r, _)| r.verdict() == Verdict::Violation);
    let stdout = match g.format {
        Format::Tsv => emit::reports_text(sys.label(), &reports),
        Format::Json => emit::reports_json(sys.label(), &reports),
    };
    Ok(Outcome {
        stdout,
        exit_code: if violated { 1 } else { 0 },
    })
}

fn cmd_fixtures(spec: Option<&str>, g: &GlobalOpts) -> Result<Outcome> {
    let names: Vec<String> = match spec {
        Some(s) => vec![s.parse::<CoxeterType>()?.to_string()],
        None => fixtures::NAMES.iter().map(|s| s.to_string()).collect(),
    };
    let mut checks = Vec::new();
    for name in &names {
        let clock = Clock::start(g);
        let fixture = Fixture::bundled(name)?;
        let t: CoxeterType = name.parse()?;
        let recompute = t.order().is_some_and(|o| o <= g.cap as u128);
        let check = if recompute {
            let sys = load_system(name, g)?;
            let an = Analysis::new(&sys)?;
            fixtures::check_fixture(&fixture, Some((&sys, &an)))?
        } else {
            fixtures::check_fixture(&fixture, None)?
        };
        checks.push((check, clock.ms()));
    }
    let failed = checks.iter().any(|(c, _)| !c.passed());
    let stdout = match g.format {
        Format::Tsv => checks
            .iter()
            .map(|(c, t)| emit::fixture_text(c, *t))
            .collect(),
        Format::Json => to_json(
            &checks
                .iter()
                .map(|(c, t)| FixtureJson {
                    check: c,
                    verdict: if c.passed() { "pass" } else { "mismatch" },
                    timing_ms: *t,
                })
                .collect::<Vec<_>>(),
        ),
    };
    Ok(Outcome {
        stdout,
        exit_code: if failed { 2 } else { 0 },
    })
}

fn cache_dir(g: &GlobalOpts) -> Result<PathBuf> {
    g.cache_dir.clone().ok_or(CliError::NoCacheDir)
}

fn cmd_cache(action: &CacheAction, g: &GlobalOpts) -> Result<Outcome> {
    let dir = cache_dir(g)?;
    let mut out = String::new();
    match action {
        CacheAction::Write { spec } => {
            let t: CoxeterType = spec.parse()?;
            let sys = CoxeterSystem::from_type(&t, g.cap)?;
            let path = cache::write(&dir, &sys)?;
            writeln!(
                out,
                "wrote\t{}\t{}\torder {}",
                sys.label(),
                path.display(),
                sys.order()
            )
            .unwrap();
        }
        CacheAction::Load { spec } => {
            let t: CoxeterType = spec.parse()?;
            let path = cache::path_for(&dir, &t);
            let loaded = cache::read(&path, Some(&t))?;
            let fresh = CoxeterSystem::from_type(&t, g.cap)?;
            let same = loaded.all_images() == fresh.all_images();
            writeln!(
                out,
                "loaded\t{}\torder {}\tidentical to fresh enumeration: {}",
                loaded.label(),
                loaded.order(),
                if same { "yes" } else { "no" }
            )
            .unwrap();
            if !same {
                return Ok(Outcome {
                    stdout: out,
                    exit_code: 2,
                });
            }
        }
        CacheAction::Verify { spec } => {
            let t: CoxeterType = spec.parse()?;
            let path = cache::path_for(&dir, &t);
            // decoding rebuilds every table from the stored images and
            // re-checks closure, the identity and the group order
            let sys = cache::read(&path, Some(&t))?;
            writeln!(
                out,
                "verified\t{}\t{}\torder {}",
                sys.label(),
                path.display(),
                sys.order()
            )
            .unwrap();
        }
    }
    Ok(Outcome::ok(out))
}
