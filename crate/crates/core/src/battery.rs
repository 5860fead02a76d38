//! The standard fixture battery and the invariant checks run on each
//! fixture's orbit.

use serde::Serialize;

use crate::analysis::{
    check_gamma, check_transition, report_in, verify_orbit_laws, ModuleClass, Orbit, OrbitReport, OrbitSignature,
};
use crate::construct::{build_module, canonical_path, family_module, lambda, PathSpec};
use crate::error::{Error, Result};
use crate::linalg::Scalar;
use crate::rep::Representation;
use crate::shift::{classify_fate, sigma, sigma_minus, SigmaFate};
use crate::tree::{Center, Orientation};

#[derive(Debug, Clone)]
pub enum FixtureKind {
    /// Built from a center path and radius; the signature must reproduce both.
    Path,
    /// The one-parameter family at the given λ.
    Family(Scalar),
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub id: String,
    pub spec: PathSpec,
    pub kind: FixtureKind,
    pub module: Representation,
}

impl Fixture {
    pub fn path_fixture(o: Orientation, r: usize, b: usize) -> Result<Fixture> {
        let spec = canonical_path(o, r, b)?;
        let module = build_module(&spec)?;
        Ok(Fixture {
            id: format!("n{}-r{r}-b{b}", o.n),
            spec,
            kind: FixtureKind::Path,
            module,
        })
    }

    /// Family member for a path of length `b`; its minimal radius is `b + 2`.
    pub fn family_fixture(o: Orientation, b: usize, lam: i64) -> Result<Fixture> {
        let spec = canonical_path(o, b + 2, b)?;
        let l = lambda(lam);
        let module = family_module(&spec, &l)?;
        Ok(Fixture {
            id: format!("n{}-family-b{b}-lambda{lam}", o.n),
            spec,
            kind: FixtureKind::Family(l),
            module,
        })
    }

    pub fn n(&self) -> u32 {
        self.spec.n()
    }

    pub fn b(&self) -> usize {
        self.spec.b()
    }
}

/// Path fixtures for every `r <= max_r` and `b <= r` at valence `n`.
pub fn path_fixtures(n: u32, max_r: usize) -> Result<Vec<Fixture>> {
    let o = Orientation::new(n, true)?;
    let mut out = Vec::new();
    for r in 1..=max_r {
        for b in 0..=r {
            out.push(Fixture::path_fixture(o, r, b)?);
        }
    }
    Ok(out)
}

/// n = 3 up to radius 4, n = 4 up to radius 3, and the family at b = 1
/// with λ in {2, 3, 5}; sorted by id.
pub fn standard_battery() -> Result<Vec<Fixture>> {
    let mut out = path_fixtures(3, 4)?;
    out.extend(path_fixtures(4, 3)?);
    let o3 = Orientation::new(3, true)?;
    for lam in [2, 3, 5] {
        out.push(Fixture::family_fixture(o3, 1, lam)?);
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureVerdict {
    pub id: String,
    pub signature: Option<OrbitSignature>,
    pub failures: Vec<String>,
}

impl FixtureVerdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Window `[-2, b + 4]`: the smallest that covers the verifier's needs and
/// three source steps past the first source module.
pub fn default_window(b: usize) -> (i64, i64) {
    (-2, b as i64 + 4)
}

/// Runs every orbit check on a fixture over the window `lo..=hi` (numbered
/// from the incomplete sink module) and compares the signature with the
/// one the fixture was built for.
pub fn verify_fixture(f: &Fixture, lo: i64, hi: i64) -> Result<FixtureVerdict> {
    let (mut verdict, mut orbit) = verify_orbit(&f.id, &f.module, lo, hi)?;
    let sig = verdict.signature.clone().expect("set by verify_orbit");
    let r = match &f.kind {
        FixtureKind::Path => f.spec.r,
        FixtureKind::Family(_) => f.b() + 2,
    };
    if sig.r0 != r || sig.center_path != f.spec.path || sig.index_of_input != 0 {
        verdict
            .failures
            .insert(0, format!("signature {sig} does not match r0={r}, path {:?}, index 0", f.spec.path));
    }
    if let FixtureKind::Family(_) = f.kind {
        let top = orbit.classification(sig.b as i64 + 1 - sig.index_of_input)?;
        if top.class != ModuleClass::Source || top.center != Center::Vertex(sig.q.clone()) || top.radius != sig.b + 2 {
            verdict.failures.push(format!(
                "family: step b+1 is a {} module with center {} and radius {}",
                top.class, top.center, top.radius
            ));
        }
    }
    Ok(verdict)
}

/// Runs every orbit check on an arbitrary regular indecomposable module.
pub fn verify_module(id: &str, m: &Representation, lo: i64, hi: i64) -> Result<FixtureVerdict> {
    verify_orbit(id, m, lo, hi).map(|(v, _)| v)
}

fn verify_orbit(id: &str, m: &Representation, lo: i64, hi: i64) -> Result<(FixtureVerdict, Orbit)> {
    match classify_fate(m)? {
        SigmaFate::Regular => {}
        fate => return Err(Error::NotRegular(fate)),
    }
    let mut orbit = Orbit::new(m.clone());
    let sig = orbit.signature()?;
    let report = report_in(&mut orbit, &sig, lo, hi)?;
    let mut failures: Vec<String> = verify_orbit_laws(&sig, &report)?.failures.iter().map(|x| x.to_string()).collect();
    failures.extend(orbit_law_failures(&mut orbit, &sig, &report)?);
    let verdict = FixtureVerdict {
        id: id.to_string(),
        signature: Some(sig),
        failures,
    };
    Ok((verdict, orbit))
}

/// Boundary growth of source modules, source-path radii, the adjunction
/// on dimension vectors, the flow count and the τ-suborbit comparisons.
pub fn orbit_law_failures(orbit: &mut Orbit, sig: &OrbitSignature, report: &OrbitReport) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let m0 = -sig.index_of_input;
    let n = report.n as u64;
    let b = sig.b as i64;

    // boundary growth from the first source module
    let first = m0 + b + 1;
    let beta0 = orbit.get(first).support().boundary()?.len() as u64;
    for t in 1..=3u32 {
        let bt = orbit.get(first + t as i64).support().boundary()?.len() as u64;
        if bt != (n - 1).pow(t) * beta0 {
            failures.push(format!("beta growth: step b+1+{t} has {bt} boundary vertices, base {beta0}"));
        }
    }

    for s in &report.steps {
        if let Some(w) = s.source_path_radius {
            if w > s.radius {
                failures.push(format!("step {}: source-path radius {w} exceeds radius {}", s.step, s.radius));
            }
            let ahead = s.radius as i64 - w as i64 + 1;
            let c = orbit.classification(m0 + s.step + ahead)?;
            if c.class != ModuleClass::Source {
                failures.push(format!(
                    "step {}: {} steps ahead is a {} module, expected a source module",
                    s.step, ahead, c.class
                ));
            }
        }
        let m = orbit.get(m0 + s.step).clone();
        if sigma_minus(&sigma(&m)).dimension_vector() != m.dimension_vector() {
            failures.push(format!("step {}: dimension vector changes under σ⁻σ", s.step));
        }
    }

    // flows: exactly b of them, all within the window [1, b]
    let flows = report.steps.iter().filter(|s| s.class == ModuleClass::Flow).count();
    if report.lo <= 1 && report.hi >= b && flows != sig.b {
        failures.push(format!("{flows} flow modules in the window, expected b = {}", sig.b));
    }
    if flows > sig.r0 {
        failures.push(format!("{flows} flow modules exceed the radius {}", sig.r0));
    }

    if sig.b.is_multiple_of(2) {
        let s = sig.b as i64 / 2;
        let mut tau_flows = 0;
        for k in 0..=s {
            if orbit.classification(m0 + 2 * k)?.class == ModuleClass::Flow {
                tau_flows += 1;
            }
        }
        if tau_flows != s {
            failures.push(format!("τ-suborbit of M_0 has {tau_flows} flow modules, expected {s}"));
        }
        let r = |orbit: &mut Orbit, i: i64| orbit.classification(m0 + i).map(|c| c.radius);
        let (x0, x0s) = (r(orbit, 0)?, r(orbit, 2 * (s + 1))?);
        if x0 >= x0s {
            failures.push(format!("radius at step 0 is {x0}, not below {x0s} at step {}", 2 * (s + 1)));
        }
        let (y0, y0s) = (r(orbit, -1)?, r(orbit, -1 + 2 * (s + 1))?);
        if y0 <= y0s {
            failures.push(format!("radius at step -1 is {y0}, not above {y0s} at step {}", 2 * s + 1));
        }
    }

    for w in report.steps.windows(2) {
        if let Err(e) = check_transition(&w[0], &w[1]) {
            failures.push(format!("step {}: {e}", w[0].step));
        }
        if let Err(e) = check_gamma(&w[0], &w[1], report.n) {
            failures.push(format!("step {}: {e}", w[0].step));
        }
    }
    Ok(failures)
}
