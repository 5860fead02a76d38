use std::fmt::Write as _;
use std::path::Path;

use kronecker_core::analysis::report_in;
use kronecker_core::battery::{default_window, standard_battery, verify_fixture, verify_module, Fixture, FixtureKind, FixtureVerdict};
use kronecker_core::construct::{canonical_path, case_i, case_ii, case_iii, family_module, module_for_path, PathSpec};
use kronecker_core::{classify_fate, r_b, Error, Orbit, RbVariant, Representation, SigmaFate};
use serde::Serialize;

use crate::config::{Case, Format, RunConfig};
use crate::CliError;

fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn emit(cfg: &RunConfig, text: &str) -> Result<(), CliError> {
    match &cfg.out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Failure(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn path_spec(cfg: &RunConfig, r: usize) -> Result<PathSpec, CliError> {
    let o = cfg.orientation;
    match (&cfg.path, cfg.b) {
        (Some(path), b) => {
            if b.is_some_and(|b| b + 1 != path.len()) {
                return Err(CliError::Usage(format!(
                    "--b {} disagrees with a path of length {}",
                    b.unwrap(),
                    path.len().saturating_sub(1)
                )));
            }
            if path.len() > r + 1 {
                return Err(CliError::Usage(format!("path length {} exceeds r = {r}", path.len() - 1)));
            }
            PathSpec::new(o, r, path.clone()).map_err(usage)
        }
        (None, Some(b)) => {
            if r < b {
                return Err(CliError::Usage(format!("r = {r} is smaller than b = {b}")));
            }
            canonical_path(o, r, b).map_err(usage)
        }
        (None, None) => Err(CliError::Usage("give --b or --path".into())),
    }
}

/// Builds the seed named by the construction flags, with an id and the spec
/// it was built from.
pub fn construct(cfg: &RunConfig) -> Result<Fixture, CliError> {
    let o = cfg.orientation;
    match cfg.case {
        Case::Three => {
            let spec = match &cfg.path {
                Some(_) => path_spec(cfg, cfg.r.unwrap_or(1))?,
                None => canonical_path(o, 1, 0).map_err(usage)?,
            };
            if spec.b() != 0 || spec.r != 1 {
                return Err(CliError::Usage("case III needs r = 1 and a single-vertex path".into()));
            }
            let module = case_iii(spec.p(), o).map_err(usage)?;
            Ok(Fixture {
                id: format!("n{}-case-iii", o.n),
                spec,
                kind: FixtureKind::Path,
                module,
            })
        }
        Case::Family => {
            let lambda = cfg.lambda.clone().ok_or_else(|| CliError::Usage("the family needs --lambda".into()))?;
            let b = match (&cfg.path, cfg.b) {
                (Some(p), _) => p.len().saturating_sub(1),
                (None, Some(b)) => b,
                (None, None) => return Err(CliError::Usage("give --b or --path".into())),
            };
            if cfg.r.is_some_and(|r| r != b + 2) {
                return Err(CliError::Usage(format!("the family has r = b + 2 = {}", b + 2)));
            }
            let spec = path_spec(cfg, b + 2)?;
            let module = family_module(&spec, &lambda).map_err(usage)?;
            Ok(Fixture {
                id: format!("n{}-family-b{b}-lambda{lambda}", o.n),
                spec,
                kind: FixtureKind::Family(lambda),
                module,
            })
        }
        Case::Auto | Case::One | Case::Two => {
            let r = cfg.r.ok_or_else(|| CliError::Usage("give --r".into()))?;
            let spec = path_spec(cfg, r)?;
            let b = spec.b();
            let module = match cfg.case {
                Case::One if b != r => return Err(CliError::Usage(format!("case I needs b = r, got b = {b}, r = {r}"))),
                Case::One => case_i(&spec).map_err(usage)?,
                Case::Two => case_ii(&spec).map_err(usage)?,
                _ => module_for_path(r, &spec.path, o).map_err(usage)?,
            };
            Ok(Fixture {
                id: format!("n{}-r{r}-b{b}", o.n),
                spec,
                kind: FixtureKind::Path,
                module,
            })
        }
    }
}

fn read_seed(path: &Path) -> Result<Representation, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    Representation::from_json(&text)
}

pub fn cmd_construct(cfg: &RunConfig) -> Result<(), CliError> {
    let f = construct(cfg)?;
    let json = f.module.to_json();
    let summary = format!(
        "{}: total dimension {}, dimension vector {}",
        f.id,
        f.module.total_dim(),
        f.module.dimension_vector()
    );
    match &cfg.out {
        Some(_) => {
            emit(cfg, &json)?;
            println!("{summary}");
        }
        None => {
            println!("{json}");
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn seed(cfg: &RunConfig) -> Result<Representation, CliError> {
    if let Some(p) = &cfg.seed_file {
        return read_seed(p).map_err(usage);
    }
    if cfg.has_construction() {
        return Ok(construct(cfg)?.module);
    }
    Err(CliError::Usage("give --seed-file or construction flags (--r, --b, --path, --case)".into()))
}

pub fn cmd_orbit(cfg: &RunConfig) -> Result<(), CliError> {
    let m = seed(cfg)?;
    match classify_fate(&m).map_err(usage)? {
        SigmaFate::Regular => {}
        fate => return Err(CliError::Usage(format!("seed is not regular: {fate}"))),
    }
    let mut orbit = Orbit::new(m);
    let sig = orbit.signature().map_err(|e| CliError::Failure(e.to_string()))?;
    let (lo, hi) = cfg.window_or(default_window(sig.b))?;
    let report = report_in(&mut orbit, &sig, lo, hi).map_err(|e| CliError::Failure(e.to_string()))?;
    let text = match cfg.format.unwrap_or(Format::Ascii) {
        Format::Ascii => report.to_ascii(),
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
    };
    emit(cfg, &text)
}

fn failed(id: &str, e: Error) -> FixtureVerdict {
    FixtureVerdict {
        id: id.to_string(),
        signature: None,
        failures: vec![e.to_string()],
    }
}

fn window_for(cfg: &RunConfig, b: Option<usize>) -> Result<(i64, i64), CliError> {
    cfg.window_or(default_window(b.unwrap_or(0)))
}

fn verify_all(cfg: &RunConfig) -> Result<Vec<FixtureVerdict>, CliError> {
    let battery = standard_battery().map_err(|e| CliError::Failure(e.to_string()))?;
    let windows: Vec<(i64, i64)> = battery.iter().map(|f| window_for(cfg, Some(f.b()))).collect::<Result<_, _>>()?;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(battery.len().max(1));
    let jobs: Vec<(&Fixture, (i64, i64))> = battery.iter().zip(windows).collect();
    let mut verdicts: Vec<FixtureVerdict> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let mine: Vec<_> = jobs.iter().skip(w).step_by(workers).cloned().collect();
                scope.spawn(move || {
                    mine.into_iter()
                        .map(|(f, (lo, hi))| verify_fixture(f, lo, hi).unwrap_or_else(|e| failed(&f.id, e)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    verdicts.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(verdicts)
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    passed: bool,
    fixtures: &'a [FixtureVerdict],
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<bool, CliError> {
    let verdicts = if let Some(p) = &cfg.seed_file {
        let id = p.display().to_string();
        vec![match read_seed(p) {
            Ok(m) => {
                // the window default needs b, which needs the signature
                let b = Orbit::new(m.clone()).signature().ok().map(|s| s.b);
                let (lo, hi) = window_for(cfg, b)?;
                verify_module(&id, &m, lo, hi).unwrap_or_else(|e| failed(&id, e))
            }
            Err(e) => failed(&id, Error::Invalid(format!("validation failed: {e}"))),
        }]
    } else if cfg.has_construction() {
        let f = construct(cfg)?;
        let (lo, hi) = window_for(cfg, Some(f.b()))?;
        vec![verify_fixture(&f, lo, hi).unwrap_or_else(|e| failed(&f.id, e))]
    } else {
        verify_all(cfg)?
    };
    let passed = verdicts.iter().all(|v| v.passed());
    let text = match cfg.format.unwrap_or(Format::Ascii) {
        Format::Json => {
            serde_json::to_string_pretty(&VerifyOutput {
                passed,
                fixtures: &verdicts,
            })
            .expect("verdicts serialize")
                + "\n"
        }
        Format::Csv => {
            let mut out = String::from("id,passed,signature,failures\n");
            for v in &verdicts {
                let sig = v.signature.as_ref().map(|s| s.to_string()).unwrap_or_default();
                let _ = writeln!(out, "{},{},\"{}\",\"{}\"", v.id, v.passed(), sig, v.failures.join("; ").replace('"', "'"));
            }
            out
        }
        Format::Ascii => {
            let mut out = String::new();
            for v in &verdicts {
                let sig = v.signature.as_ref().map(|s| s.to_string()).unwrap_or_default();
                let _ = writeln!(out, "{} {} {}", if v.passed() { "PASS" } else { "FAIL" }, v.id, sig);
                for f in &v.failures {
                    let _ = writeln!(out, "    {f}");
                }
            }
            let ok = verdicts.iter().filter(|v| v.passed()).count();
            let _ = writeln!(out, "{ok} of {} fixtures passed", verdicts.len());
            out
        }
    };
    emit(cfg, &text)?;
    Ok(passed)
}

#[derive(Serialize)]
struct RbCell {
    i: i64,
    l: u64,
    component: &'static str,
    value: u64,
}

#[derive(Serialize)]
struct RbDiff {
    i: i64,
    l: u64,
    printed: u64,
    corrected: u64,
}

#[derive(Serialize)]
struct RbTable {
    b: u64,
    variant: RbVariant,
    cells: Vec<RbCell>,
    printed_vs_corrected: Vec<RbDiff>,
}

fn component(i: i64, l: u64) -> &'static str {
    if (i + l as i64 - 1).rem_euclid(2) == 0 {
        "even"
    } else {
        "odd"
    }
}

pub fn cmd_rb_table(cfg: &RunConfig) -> Result<(), CliError> {
    let b = cfg.b.unwrap_or(0) as u64;
    let (lo, hi) = cfg.window_or((-5, 7))?;
    let mut cells = Vec::new();
    let mut diff = Vec::new();
    for l in 1..=cfg.lmax {
        for i in lo..=hi {
            cells.push(RbCell {
                i,
                l,
                component: component(i, l),
                value: r_b(i, l, b, cfg.variant),
            });
            let (p, c) = (r_b(i, l, b, RbVariant::Printed), r_b(i, l, b, RbVariant::Corrected));
            if p != c {
                diff.push(RbDiff {
                    i,
                    l,
                    printed: p,
                    corrected: c,
                });
            }
        }
    }
    let table = RbTable {
        b,
        variant: cfg.variant,
        cells,
        printed_vs_corrected: diff,
    };
    let text = match cfg.format.unwrap_or(Format::Ascii) {
        Format::Json => serde_json::to_string_pretty(&table).expect("table serializes") + "\n",
        Format::Csv => {
            let mut out = String::from("i,l,component,value\n");
            for c in &table.cells {
                let _ = writeln!(out, "{},{},{},{}", c.i, c.l, c.component, c.value);
            }
            out
        }
        Format::Ascii => rb_ascii(&table, lo, hi, cfg.lmax),
    };
    emit(cfg, &text)
}

/// One grid per component, quasi-length growing upwards, the flow range
/// `1..=b` bracketed in the index row.
fn rb_ascii(table: &RbTable, lo: i64, hi: i64, lmax: u64) -> String {
    let width = 4;
    let mut out = String::new();
    for comp in ["even", "odd"] {
        let _ = writeln!(out, "R_{}, {} component ({})", table.b, comp, match table.variant {
            RbVariant::Corrected => "corrected",
            RbVariant::Printed => "printed",
        });
        for l in (1..=lmax).rev() {
            let _ = write!(out, "l={l:<3}|");
            for i in lo..=hi {
                let cell = table.cells.iter().find(|c| c.i == i && c.l == l).expect("cell computed");
                let text = if cell.component == comp { cell.value.to_string() } else { ".".into() };
                let _ = write!(out, "{text:>width$}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{}+{}", "-".repeat(5), "-".repeat(width * (hi - lo + 1) as usize));
        let _ = write!(out, "{:<5}|", "i");
        for i in lo..=hi {
            let mark = if i >= 1 && i <= table.b as i64 { format!("*{i}") } else { i.to_string() };
            let _ = write!(out, "{mark:>width$}");
        }
        out.push_str("\n\n");
    }
    let _ = writeln!(out, "printed and corrected differ on {} cells (all with i > b)", table.printed_vs_corrected.len());
    out
}
