//! Orbit-level invariants of indecomposable modules: class, center, radius,
//! completeness, diameter-path and boundary counts, the source-path radius,
//! the index within a shift orbit, the orbit signature, windowed orbit
//! reports and their verification, and the radius-offset function R_b.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rep::{DimensionVector, Representation};
use crate::shift::{classify_fate, sigma, sigma_minus, step_cap, SigmaFate};
use crate::tree::{are_adjacent, distance, path, Center, VertexAddress};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ModuleClass {
    Sink,
    Flow,
    Source,
}

impl fmt::Display for ModuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleClass::Sink => "sink",
            ModuleClass::Flow => "flow",
            ModuleClass::Source => "source",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub class: ModuleClass,
    pub center: Center,
    pub radius: usize,
    pub diameter: usize,
}

/// Class, center, radius and diameter of the support. Needs a nonzero
/// module with connected support.
pub fn classify(m: &Representation) -> Result<Classification> {
    if m.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    let cr = m.support().center_radius()?;
    let class = match &cr.center {
        Center::Edge(..) => ModuleClass::Flow,
        Center::Vertex(c) => {
            // diameter endpoints sit at distance r from c
            let endpoint_is_sink = m.orientation().is_sink(c) == (cr.radius % 2 == 0);
            if endpoint_is_sink {
                ModuleClass::Sink
            } else {
                ModuleClass::Source
            }
        }
    };
    Ok(Classification {
        class,
        center: cr.center,
        radius: cr.radius,
        diameter: cr.diameter,
    })
}

/// Every path `(x_0, .., x_r)` into a central vertex whose vertices
/// `x_1..x_r` lie in the support (and, for flow modules, with `x_(r-1)`
/// not central) has `dim x_0 = dim x_1`. Radius 0 is incomplete.
pub fn is_complete(m: &Representation) -> Result<bool> {
    let cl = classify(m)?;
    Ok(complete_with(m, &cl))
}

fn complete_with(m: &Representation, cl: &Classification) -> bool {
    let r = cl.radius;
    if r == 0 {
        return false;
    }
    let n = m.n();
    let sides: Vec<(&VertexAddress, Option<&VertexAddress>)> = match &cl.center {
        Center::Vertex(c) => vec![(c, None)],
        Center::Edge(c, c2) => vec![(c, Some(c2)), (c2, Some(c))],
    };
    for (c, other) in sides {
        let on_side = |x: &VertexAddress, d: usize| match other {
            None => distance(x, c) == d,
            Some(o) => distance(x, c) == d && distance(x, o) == d + 1,
        };
        for x1 in m.support_vertices() {
            if !on_side(x1, r - 1) {
                continue;
            }
            for x0 in x1.neighbors_unchecked(n) {
                if on_side(&x0, r) && m.dim(&x0) != m.dim(x1) {
                    return false;
                }
            }
        }
    }
    true
}

/// Number of diameter paths, both traversal directions counted.
pub fn gamma(m: &Representation) -> Result<u64> {
    nonzero(m)?;
    m.support().diameter_path_count(true)
}

/// Number of diameter paths, each counted once.
pub fn gamma_undirected(m: &Representation) -> Result<u64> {
    nonzero(m)?;
    m.support().diameter_path_count(false)
}

/// Number of boundary vertices of the support.
pub fn beta(m: &Representation) -> Result<usize> {
    nonzero(m)?;
    Ok(m.support().boundary()?.len())
}

fn nonzero(m: &Representation) -> Result<()> {
    if m.is_zero() {
        Err(Error::ZeroRepresentation)
    } else {
        Ok(())
    }
}

/// Half the largest distance between two (possibly equal) source leaves of
/// the support; `None` without source leaves.
pub fn source_path_radius_w(m: &Representation) -> Result<Option<usize>> {
    nonzero(m)?;
    let t = m.support();
    if !t.is_connected() {
        return Err(Error::Disconnected);
    }
    let o = m.orientation();
    let leaves: Vec<VertexAddress> = t.leaves().into_iter().filter(|v| o.is_source(v)).collect();
    let mut best: Option<usize> = None;
    for (i, x) in leaves.iter().enumerate() {
        for y in &leaves[i..] {
            let d = distance(x, y);
            best = Some(best.map_or(d, |b| b.max(d)));
        }
    }
    Ok(best.map(|d| d / 2))
}

/// σ-powers of a seed, computed on demand and cached. Exponents are
/// relative to the seed.
pub struct Orbit {
    members: BTreeMap<i64, Representation>,
    classes: BTreeMap<i64, Classification>,
    complete: BTreeMap<i64, bool>,
}

impl Orbit {
    pub fn new(seed: Representation) -> Self {
        Orbit {
            members: BTreeMap::from([(0, seed)]),
            classes: BTreeMap::new(),
            complete: BTreeMap::new(),
        }
    }

    pub fn get(&mut self, t: i64) -> &Representation {
        loop {
            let (&lo, _) = self.members.first_key_value().expect("seed present");
            let (&hi, _) = self.members.last_key_value().expect("seed present");
            if t > hi {
                let next = sigma(&self.members[&hi]);
                self.members.insert(hi + 1, next);
            } else if t < lo {
                let next = sigma_minus(&self.members[&lo]);
                self.members.insert(lo - 1, next);
            } else {
                break;
            }
        }
        &self.members[&t]
    }

    pub fn classification(&mut self, t: i64) -> Result<Classification> {
        if let Some(c) = self.classes.get(&t) {
            return Ok(c.clone());
        }
        let m = self.get(t);
        if m.is_zero() {
            return Err(Error::NotRegular(if t > 0 {
                SigmaFate::Preprojective(t as usize)
            } else {
                SigmaFate::Preinjective(t.unsigned_abs() as usize)
            }));
        }
        let c = classify(m)?;
        self.classes.insert(t, c.clone());
        Ok(c)
    }

    pub fn is_complete(&mut self, t: i64) -> Result<bool> {
        if let Some(&c) = self.complete.get(&t) {
            return Ok(c);
        }
        let cl = self.classification(t)?;
        let c = complete_with(self.get(t), &cl);
        self.complete.insert(t, c);
        Ok(c)
    }

    /// Index of the seed: the `t` with σ^-t(seed) the incomplete sink
    /// module of the orbit. Assumes a regular indecomposable seed.
    pub fn seed_index(&mut self) -> Result<i64> {
        let c0 = self.classification(0)?;
        let cap = step_cap(c0.radius) as i64;
        match c0.class {
            ModuleClass::Sink => {
                for t in 0..=cap {
                    let cl = self.classification(t)?;
                    if cl.class != ModuleClass::Sink {
                        return Err(Error::Internal(format!(
                            "complete sink module followed by a {} module",
                            cl.class
                        )));
                    }
                    if !self.is_complete(t)? {
                        return Ok(-t);
                    }
                }
            }
            ModuleClass::Flow | ModuleClass::Source => {
                for t in 1..=cap {
                    if self.classification(-t)?.class == ModuleClass::Sink {
                        if self.is_complete(-t)? {
                            return Err(Error::Internal(
                                "first sink module before a flow or source module is complete".into(),
                            ));
                        }
                        return Ok(t);
                    }
                }
            }
        }
        Err(Error::IterationCap(cap as usize))
    }

    /// Signature of the orbit; see [`orbit_signature`].
    pub fn signature(&mut self) -> Result<OrbitSignature> {
        let index = self.seed_index()?;
        let m0 = -index;
        let c0 = self.classification(m0)?;
        let p = c0
            .center
            .as_vertex()
            .cloned()
            .ok_or_else(|| Error::Internal("sink module with an edge center".into()))?;
        let cap = step_cap(c0.radius) as i64;
        let mut center_path = vec![p.clone()];
        for i in 1..=cap {
            let cl = self.classification(m0 + i)?;
            match (&cl.class, &cl.center) {
                (ModuleClass::Flow, Center::Edge(u, v)) => {
                    let last = center_path.last().expect("nonempty").clone();
                    let next = if *u == last {
                        v.clone()
                    } else if *v == last {
                        u.clone()
                    } else {
                        return Err(Error::Internal(format!(
                            "flow center {} does not continue the center path at [{last}]",
                            cl.center
                        )));
                    };
                    center_path.push(next);
                }
                (ModuleClass::Source, Center::Vertex(q)) => {
                    let b = (i - 1) as usize;
                    if path(&p, q) != center_path {
                        return Err(Error::Internal(format!(
                            "assembled center path {center_path:?} is not the geodesic from [{p}] to [{q}]"
                        )));
                    }
                    return Ok(OrbitSignature {
                        r0: c0.radius,
                        p,
                        q: q.clone(),
                        b,
                        center_path,
                        index_of_input: index,
                    });
                }
                _ => {
                    return Err(Error::Internal(format!(
                        "step {i} after the incomplete sink module is a {} module",
                        cl.class
                    )))
                }
            }
        }
        Err(Error::IterationCap(cap as usize))
    }
}

fn require_regular(m: &Representation) -> Result<()> {
    match classify_fate(m)? {
        SigmaFate::Regular => Ok(()),
        fate => Err(Error::NotRegular(fate)),
    }
}

/// The `t` such that σ^-t(m) is the incomplete sink module of its orbit.
pub fn index(m: &Representation) -> Result<i64> {
    require_regular(m)?;
    Orbit::new(m.clone()).seed_index()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitSignature {
    pub r0: usize,
    pub p: VertexAddress,
    pub q: VertexAddress,
    pub b: usize,
    pub center_path: Vec<VertexAddress>,
    pub index_of_input: i64,
}

impl fmt::Display for OrbitSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<String> = self.center_path.iter().map(|v| format!("[{v}]")).collect();
        write!(
            f,
            "r0={} p=[{}] q=[{}] b={} path={} index={}",
            self.r0,
            self.p,
            self.q,
            self.b,
            path.join("-"),
            self.index_of_input
        )
    }
}

pub fn orbit_signature(m: &Representation) -> Result<OrbitSignature> {
    require_regular(m)?;
    Orbit::new(m.clone()).signature()
}

/// Signature for a module already known to be regular and indecomposable.
pub fn orbit_signature_unchecked(m: &Representation) -> Result<OrbitSignature> {
    Orbit::new(m.clone()).signature()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitStep {
    /// Exponent relative to the incomplete sink module of the orbit.
    pub step: i64,
    pub class: ModuleClass,
    pub radius: usize,
    pub diameter: usize,
    pub center: Center,
    pub complete: bool,
    pub total_dim: usize,
    pub gamma: u64,
    pub gamma_undirected: u64,
    pub beta: usize,
    pub source_path_radius: Option<usize>,
    pub dims: DimensionVector,
    /// Agreement with the predicted class, radius and center.
    pub predicted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub n: u32,
    pub signature: OrbitSignature,
    pub lo: i64,
    pub hi: i64,
    pub steps: Vec<OrbitStep>,
}

impl OrbitReport {
    pub fn step(&self, i: i64) -> Option<&OrbitStep> {
        self.steps.iter().find(|s| s.step == i)
    }

    pub fn radii(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.radius).collect()
    }

    pub fn classes(&self) -> Vec<ModuleClass> {
        self.steps.iter().map(|s| s.class).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Columns: step, class, radius, center, b, index, total_dim, gamma, beta.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["step", "class", "radius", "center", "b", "index", "total_dim", "gamma", "beta"])
            .expect("in-memory write");
        for s in &self.steps {
            w.write_record([
                s.step.to_string(),
                s.class.to_string(),
                s.radius.to_string(),
                s.center.to_string(),
                self.signature.b.to_string(),
                s.step.to_string(),
                s.total_dim.to_string(),
                s.gamma.to_string(),
                s.beta.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("csv is utf-8")
    }

    /// Radii laid out in three bands (sink | flow | source), one column
    /// per step, followed by the per-step centers and counts.
    pub fn to_ascii(&self) -> String {
        let width = 5;
        let mut out = String::new();
        let cell = |s: String| format!("{s:>width$}");
        let mut header = format!("{:<8}|", "step");
        for s in &self.steps {
            header.push_str(&cell(s.step.to_string()));
        }
        out.push_str(&header);
        out.push('\n');
        out.push_str(&format!("{}+{}\n", "-".repeat(8), "-".repeat(width * self.steps.len())));
        for band in [ModuleClass::Sink, ModuleClass::Flow, ModuleClass::Source] {
            let mut line = format!("{:<8}|", band.to_string());
            for s in &self.steps {
                line.push_str(&cell(if s.class == band { s.radius.to_string() } else { ".".into() }));
            }
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&format!("{}+{}\n", "-".repeat(8), "-".repeat(width * self.steps.len())));
        for (label, f) in [
            ("dim", (|s: &OrbitStep| s.total_dim.to_string()) as fn(&OrbitStep) -> String),
            ("gamma", |s: &OrbitStep| s.gamma.to_string()),
            ("beta", |s: &OrbitStep| s.beta.to_string()),
        ] {
            let mut line = format!("{label:<8}|");
            for s in &self.steps {
                line.push_str(&cell(f(s)));
            }
            out.push_str(&line);
            out.push('\n');
        }
        out.push('\n');
        let _ = writeln!(out, "signature: {}", self.signature);
        for s in &self.steps {
            let _ = writeln!(
                out,
                "M_{:<3} {:<6} radius {} center {}{}",
                s.step,
                s.class,
                s.radius,
                s.center,
                if s.complete { " complete" } else { "" }
            );
        }
        out
    }
}

/// Class, center and radius predicted for step `i` of an orbit.
pub fn predicted_step(sig: &OrbitSignature, i: i64) -> (ModuleClass, Center, usize) {
    let b = sig.b as i64;
    let r0 = sig.r0 as i64;
    let a = &sig.center_path;
    if i <= 0 {
        (ModuleClass::Sink, Center::Vertex(a[0].clone()), (r0 - i) as usize)
    } else if i <= b {
        let (u, v) = (a[(i - 1) as usize].clone(), a[i as usize].clone());
        (ModuleClass::Flow, Center::edge(u, v), (r0 - 1) as usize)
    } else {
        (ModuleClass::Source, Center::Vertex(a[b as usize].clone()), (r0 + i - b - 1) as usize)
    }
}

fn orbit_step(orbit: &mut Orbit, sig: &OrbitSignature, m0: i64, i: i64) -> Result<OrbitStep> {
    let cl = orbit.classification(m0 + i)?;
    let complete = orbit.is_complete(m0 + i)?;
    let m = orbit.get(m0 + i);
    let support = m.support();
    let (pc, pcenter, pr) = predicted_step(sig, i);
    Ok(OrbitStep {
        step: i,
        class: cl.class,
        radius: cl.radius,
        diameter: cl.diameter,
        center: cl.center.clone(),
        complete,
        total_dim: m.total_dim(),
        gamma: support.diameter_path_count(true)?,
        gamma_undirected: support.diameter_path_count(false)?,
        beta: support.boundary()?.len(),
        source_path_radius: source_path_radius_w(m)?,
        dims: m.dimension_vector(),
        predicted: cl.class == pc && cl.center == pcenter && cl.radius == pr,
    })
}

/// Steps `lo..=hi` of the orbit of `m`, numbered from its incomplete sink
/// module.
pub fn orbit_profile(m: &Representation, lo: i64, hi: i64) -> Result<OrbitReport> {
    require_regular(m)?;
    orbit_profile_unchecked(m, lo, hi)
}

/// [`orbit_profile`] for a module already known to be regular and
/// indecomposable.
pub fn orbit_profile_unchecked(m: &Representation, lo: i64, hi: i64) -> Result<OrbitReport> {
    if lo > hi {
        return Err(Error::Invalid(format!("empty window [{lo}, {hi}]")));
    }
    let mut orbit = Orbit::new(m.clone());
    let signature = orbit.signature()?;
    report_in(&mut orbit, &signature, lo, hi)
}

/// Steps `lo..=hi` of an orbit whose signature is already known.
pub fn report_in(orbit: &mut Orbit, signature: &OrbitSignature, lo: i64, hi: i64) -> Result<OrbitReport> {
    if lo > hi {
        return Err(Error::Invalid(format!("empty window [{lo}, {hi}]")));
    }
    let m0 = -signature.index_of_input;
    let steps = (lo..=hi)
        .map(|i| orbit_step(orbit, signature, m0, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(OrbitReport {
        n: orbit.get(m0).n(),
        signature: signature.clone(),
        lo,
        hi,
        steps,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub step: i64,
    pub check: String,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}: {}", self.step, self.check, self.detail)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub failures: Vec<Failure>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_counterexample(&self) -> Option<&Failure> {
        self.failures.first()
    }

    fn fail(&mut self, step: i64, check: &str, detail: String) {
        self.failures.push(Failure {
            step,
            check: check.to_string(),
            detail,
        });
    }
}

/// The local law governing one application of σ, given the class, diameter,
/// center and completeness before and after.
pub fn check_transition(m: &OrbitStep, next: &OrbitStep) -> std::result::Result<(), String> {
    use ModuleClass::*;
    let (d, d2) = (m.diameter as i64, next.diameter as i64);
    let expect_delta = |delta: i64| {
        if d2 - d == delta {
            Ok(())
        } else {
            Err(format!("{} -> {}: diameter {d} -> {d2}, expected change {delta}", m.class, next.class))
        }
    };
    let same_center = || {
        if m.center == next.center {
            Ok(())
        } else {
            Err(format!("center moved from {} to {}", m.center, next.center))
        }
    };
    match (m.class, next.class) {
        (Sink, Sink) => {
            expect_delta(-2)?;
            same_center()?;
            if !m.complete {
                return Err("sink -> sink step from an incomplete module".into());
            }
        }
        (Sink, Flow) => {
            expect_delta(-1)?;
            let c = m.center.as_vertex().ok_or("sink module with edge center")?;
            if !next.center.contains(c) {
                return Err(format!("flow center {} misses the old center [{c}]", next.center));
            }
        }
        (Sink, Source) => {
            expect_delta(0)?;
            same_center()?;
        }
        (Flow, Flow) => {
            expect_delta(0)?;
            let shared = m.center.vertices().into_iter().filter(|v| next.center.contains(v)).count();
            if shared != 1 {
                return Err(format!("flow centers {} and {} do not share one vertex", m.center, next.center));
            }
        }
        (Flow, Source) => {
            expect_delta(1)?;
            let c = next.center.as_vertex().ok_or("source module with edge center")?;
            if !m.center.contains(c) {
                return Err(format!("source center [{c}] not in the old center {}", m.center));
            }
        }
        (Source, Source) => {
            expect_delta(2)?;
            same_center()?;
        }
        (a, b) => return Err(format!("forbidden transition {a} -> {b}")),
    }
    if m.class == Sink && (next.class == Sink) != m.complete {
        return Err(format!(
            "sink step: next is {} but completeness is {}",
            next.class, m.complete
        ));
    }
    Ok(())
}

/// Diameter-path counts along one σ step of matching type.
pub fn check_gamma(m: &OrbitStep, next: &OrbitStep, n: u32) -> std::result::Result<(), String> {
    use ModuleClass::*;
    let k = ((n - 1) * (n - 1)) as u64;
    let ok = match (m.class, next.class) {
        (Sink, Sink) => m.gamma == k * next.gamma,
        (Flow, Flow) => m.gamma == next.gamma,
        (Source, Source) => next.gamma == k * m.gamma,
        _ => true,
    };
    if ok {
        Ok(())
    } else {
        Err(format!(
            "{} -> {}: gamma {} -> {} with n = {n}",
            m.class, next.class, m.gamma, next.gamma
        ))
    }
}

/// Checks the predicted sink / flow / source pattern, completeness, the
/// radius law through R_b, the path invariants, and the local σ laws on
/// consecutive steps.
pub fn verify_orbit_laws(sig: &OrbitSignature, report: &OrbitReport) -> Result<Verification> {
    let (need_lo, need_hi) = (-2, sig.b as i64 + 3);
    if report.lo > need_lo || report.hi < need_hi {
        return Err(Error::InsufficientWindow {
            lo: report.lo,
            hi: report.hi,
            need_lo,
            need_hi,
        });
    }
    let mut v = Verification::default();
    if sig.r0 == 0 {
        v.fail(0, "signature", "r0 must be positive".into());
    }
    if sig.b > sig.r0 {
        v.fail(0, "signature", format!("b = {} exceeds r0 = {}", sig.b, sig.r0));
    }
    if sig.center_path.len() != sig.b + 1
        || sig.center_path.first() != Some(&sig.p)
        || sig.center_path.last() != Some(&sig.q)
        || distance(&sig.p, &sig.q) != sig.b
        || sig.center_path.windows(2).any(|w| !are_adjacent(&w[0], &w[1]))
    {
        v.fail(0, "signature", format!("center path {:?} is not a geodesic p -> q", sig.center_path));
    }
    if v.passed() {
        for s in &report.steps {
            let (class, center, radius) = predicted_step(sig, s.step);
            if s.class != class {
                v.fail(s.step, "class", format!("found {}, expected {class}", s.class));
            }
            if s.radius != radius {
                v.fail(s.step, "radius", format!("found {}, expected {radius}", s.radius));
            }
            if s.center != center {
                v.fail(s.step, "center", format!("found {}, expected {center}", s.center));
            }
            if s.step <= 0 && s.complete != (s.step < 0) {
                v.fail(s.step, "completeness", format!("sink module completeness is {}", s.complete));
            }
            let law = sig.r0 as i64 - 1 + r_b(s.step, 1, sig.b as u64, RbVariant::Corrected) as i64;
            if s.radius as i64 != law {
                v.fail(s.step, "radius law", format!("radius {} but r0 - 1 + R_b = {law}", s.radius));
            }
        }
    }
    for w in report.steps.windows(2) {
        if w[1].step != w[0].step + 1 {
            v.fail(w[1].step, "window", "steps are not consecutive".into());
            continue;
        }
        if let Err(e) = check_transition(&w[0], &w[1]) {
            v.fail(w[0].step, "transition", e);
        }
        if let Err(e) = check_gamma(&w[0], &w[1], report.n) {
            v.fail(w[0].step, "gamma", e);
        }
    }
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RbVariant {
    /// `i + l` beyond `b`, as printed.
    Printed,
    /// `i - b + l - 1` beyond `b`, matching the orbit radii.
    Corrected,
}

impl std::str::FromStr for RbVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" => Ok(RbVariant::Printed),
            "corrected" => Ok(RbVariant::Corrected),
            other => Err(Error::Parse(format!("unknown R_b variant {other:?}"))),
        }
    }
}

/// R_b(i, l) for index `i` and quasi-length `l >= 1`.
///
/// # Panics
/// If `l == 0`.
pub fn r_b(i: i64, l: u64, b: u64, variant: RbVariant) -> u64 {
    assert!(l >= 1, "quasi-length starts at 1");
    let (l, b) = (l as i64, b as i64);
    let v = if i <= 0 {
        -i + l
    } else if i <= b {
        l - 1
    } else {
        match variant {
            RbVariant::Printed => i + l,
            RbVariant::Corrected => i - b + l - 1,
        }
    };
    v as u64
}
