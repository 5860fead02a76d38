//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines print whether or not a criterion fails;
//! the process exits non-zero if any criterion fails.

#[path = "support/rb_grids.rs"]
mod rb_grids;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use kronecker_core::analysis::{check_gamma, check_transition, report_in};
use kronecker_core::battery::{default_window, standard_battery, Fixture};
use kronecker_core::construct::{canonical_path, module_for_path};
use kronecker_core::linalg::int;
use kronecker_core::tree::distance;
use kronecker_core::{
    classify, direct_sum, end_algebra, hom_basis, is_indecomposable, orbit_profile, orbit_signature, projective,
    r_b, sigma, sigma_minus, simple, Center, FiniteSubtree, Matrix, ModuleClass, Morphism, Orbit, OrbitReport,
    OrbitSignature, Orientation, RbVariant, Representation, Scalar, VertexAddress,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

struct Run {
    fixture: Fixture,
    orbit: Orbit,
    sig: OrbitSignature,
    report: OrbitReport,
}

impl Run {
    fn m0(&self) -> i64 {
        -self.sig.index_of_input
    }
}

#[derive(Default)]
struct Ctx {
    runs: Option<Vec<Run>>,
}

impl Ctx {
    fn runs(&mut self) -> &mut Vec<Run> {
        self.runs.get_or_insert_with(|| {
            standard_battery()
                .expect("battery builds")
                .into_iter()
                .map(|fixture| {
                    let mut orbit = Orbit::new(fixture.module.clone());
                    let sig = orbit.signature().expect("fixture signature");
                    let (lo, hi) = default_window(sig.b);
                    let report = report_in(&mut orbit, &sig, lo, hi).expect("fixture report");
                    Run {
                        fixture,
                        orbit,
                        sig,
                        report,
                    }
                })
                .collect()
        })
    }
}

fn o(n: u32) -> Orientation {
    Orientation::new(n, true).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let el = start.elapsed();
    ensure(el < limit, || format!("took {el:.2?}, limit {limit:?}"))
}

fn case_i_orbit(_: &mut Ctx) -> Outcome {
    let start = Instant::now();
    let spec = canonical_path(o(3), 4, 4).map_err(|e| e.to_string())?;
    let m = module_for_path(4, &spec.path, o(3)).map_err(|e| e.to_string())?;
    let report = orbit_profile(&m, -1, 6).map_err(|e| e.to_string())?;
    use ModuleClass::*;
    ensure(report.radii() == vec![5, 4, 3, 3, 3, 3, 4, 5], || format!("radii {:?}", report.radii()))?;
    ensure(
        report.classes() == vec![Sink, Sink, Flow, Flow, Flow, Flow, Source, Source],
        || format!("classes {:?}", report.classes()),
    )?;
    let (p, q) = (spec.p().clone(), spec.q().clone());
    for s in &report.steps {
        if s.step <= 0 {
            ensure(s.center == Center::Vertex(p.clone()), || format!("step {} center {}", s.step, s.center))?;
        }
        if s.step >= 5 {
            ensure(s.center == Center::Vertex(q.clone()), || format!("step {} center {}", s.step, s.center))?;
        }
    }
    ensure(report.signature.index_of_input == 0, || {
        format!("index {}", report.signature.index_of_input)
    })?;
    within(Duration::from_secs(10), start)?;
    Ok(format!("radii {:?}, index 0, {:.2?}", report.radii(), start.elapsed()))
}

fn round_trip(_: &mut Ctx) -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for (n, max_r) in [(3, 4), (4, 3)] {
        for r in 1..=max_r {
            for b in 0..=r {
                let spec = canonical_path(o(n), r, b).map_err(|e| e.to_string())?;
                let m = module_for_path(r, &spec.path, o(n)).map_err(|e| e.to_string())?;
                let sig = orbit_signature(&m).map_err(|e| format!("n={n} r={r} b={b}: {e}"))?;
                ensure(
                    sig.r0 == r
                        && &sig.p == spec.p()
                        && &sig.q == spec.q()
                        && sig.b == b
                        && sig.center_path == spec.path
                        && sig.index_of_input == 0,
                    || format!("n={n} r={r} b={b}: got {sig}"),
                )?;
                count += 1;
            }
        }
    }
    within(Duration::from_secs(120), start)?;
    Ok(format!("{count} paths, {:.2?}", start.elapsed()))
}

fn transitions(ctx: &mut Ctx) -> Outcome {
    let mut pairs = 0;
    let mut sink_pairs = 0;
    for run in ctx.runs().iter() {
        for w in run.report.steps.windows(2) {
            check_transition(&w[0], &w[1]).map_err(|e| format!("{} step {}: {e}", run.fixture.id, w[0].step))?;
            // sink steps shrink the diameter by 2 exactly when complete
            if w[0].class == ModuleClass::Sink && w[1].class == ModuleClass::Sink {
                ensure(w[0].complete && w[1].diameter + 2 == w[0].diameter, || {
                    format!("{} step {}: sink to sink without completeness", run.fixture.id, w[0].step)
                })?;
                sink_pairs += 1;
            }
            if w[0].class == ModuleClass::Sink && w[0].complete {
                ensure(w[1].class == ModuleClass::Sink && w[1].diameter + 2 == w[0].diameter, || {
                    format!("{} step {}: complete sink module does not shrink by 2", run.fixture.id, w[0].step)
                })?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} consecutive pairs, {sink_pairs} sink-to-sink"))
}

fn gamma_relations(ctx: &mut Ctx) -> Outcome {
    let mut counted: BTreeMap<(u32, &str), usize> = BTreeMap::new();
    for run in ctx.runs().iter() {
        let n = run.report.n;
        let k = ((n - 1) * (n - 1)) as u64;
        for w in run.report.steps.windows(2) {
            check_gamma(&w[0], &w[1], n).map_err(|e| format!("{} step {}: {e}", run.fixture.id, w[0].step))?;
            let (g, g1) = (w[0].gamma, w[1].gamma);
            let kind = match (w[0].class, w[1].class) {
                (ModuleClass::Sink, ModuleClass::Sink) => {
                    ensure(g == k * g1, || format!("{} step {}: {g} vs {g1}", run.fixture.id, w[0].step))?;
                    "sink"
                }
                (ModuleClass::Flow, ModuleClass::Flow) => {
                    ensure(g == g1, || format!("{} step {}: {g} vs {g1}", run.fixture.id, w[0].step))?;
                    "flow"
                }
                (ModuleClass::Source, ModuleClass::Source) => {
                    ensure(g1 == k * g, || format!("{} step {}: {g} vs {g1}", run.fixture.id, w[0].step))?;
                    "source"
                }
                _ => continue,
            };
            *counted.entry((n, kind)).or_default() += 1;
        }
    }
    for n in [3, 4] {
        for kind in ["sink", "flow", "source"] {
            ensure(counted.get(&(n, kind)).copied().unwrap_or(0) > 0, || {
                format!("no {kind}-to-{kind} pairs for n={n}")
            })?;
        }
    }
    Ok(format!("{} matching pairs", counted.values().sum::<usize>()))
}

fn beta_growth(ctx: &mut Ctx) -> Outcome {
    let mut checked = 0;
    for run in ctx.runs().iter_mut() {
        let n = run.report.n as usize;
        let first = run.m0() + run.sig.b as i64 + 1;
        let base = run.orbit.get(first).support().boundary().map_err(|e| e.to_string())?.len();
        ensure(classify(run.orbit.get(first)).unwrap().class == ModuleClass::Source, || {
            format!("{}: step b+1 is not a source module", run.fixture.id)
        })?;
        for t in 1..=3u32 {
            let bt = run.orbit.get(first + t as i64).support().boundary().map_err(|e| e.to_string())?.len();
            ensure(bt == (n - 1).pow(t) * base, || {
                format!("{}: t={t} boundary {bt}, base {base}", run.fixture.id)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} shifts checked"))
}

fn source_path_radius(ctx: &mut Ctx) -> Outcome {
    let mut checked = 0;
    for run in ctx.runs().iter_mut() {
        let m0 = run.m0();
        for s in &run.report.steps {
            let Some(w) = s.source_path_radius else { continue };
            ensure(w <= s.radius, || format!("{} step {}: w={w} > r={}", run.fixture.id, s.step, s.radius))?;
            let ahead = (s.radius - w + 1) as i64;
            let class = run.orbit.classification(m0 + s.step + ahead).map_err(|e| e.to_string())?.class;
            ensure(class == ModuleClass::Source, || {
                format!("{} step {}: {ahead} steps ahead is a {class} module", run.fixture.id, s.step)
            })?;
            checked += 1;
        }
    }
    ensure(checked > 0, || "no members with source leaves".into())?;
    Ok(format!("{checked} members with source leaves"))
}

fn hom_fact(_: &mut Ctx) -> Outcome {
    let mut out = Vec::new();
    for r in 1..=4 {
        let spec = canonical_path(o(3), r, r).map_err(|e| e.to_string())?;
        let (p, q) = (spec.p(), spec.q());
        ensure(distance(p, q) == r, || format!("d(p,q) != {r}"))?;
        let pr = projective(r, p, o(3)).map_err(|e| e.to_string())?;
        let p0 = projective(0, q, o(3)).map_err(|e| e.to_string())?;
        let d = hom_basis(&p0, &pr).map_err(|e| e.to_string())?.len();
        ensure(d == 1, || format!("r={r}: dim Hom = {d}"))?;
        out.push(d);
    }
    Ok(format!("dims {out:?} for r = 1..4"))
}

fn adjunction(ctx: &mut Ctx) -> Outcome {
    let mut checked = 0;
    for run in ctx.runs().iter_mut() {
        let m0 = run.m0();
        for s in &run.report.steps {
            let m = run.orbit.get(m0 + s.step);
            ensure(sigma_minus(&sigma(m)).dimension_vector() == m.dimension_vector(), || {
                format!("{} step {}", run.fixture.id, s.step)
            })?;
            checked += 1;
        }
    }
    let mut simples = 0;
    for n in [3, 4] {
        for orient in [o(n), o(n).flipped()] {
            for x in ["", "0", "1", "0.1", "2.2", "1.1.2"] {
                let x: VertexAddress = x.parse().unwrap();
                if orient.is_sink(&x) {
                    ensure(sigma(&simple(x.clone(), orient)).is_zero(), || format!("σS([{x}]) != 0"))?;
                    simples += 1;
                }
            }
        }
    }
    Ok(format!("{checked} members, {simples} simple sinks"))
}

fn rb_grids(ctx: &mut Ctx) -> Outcome {
    let mut mismatches = Vec::new();
    let mut printed_diff = 0;
    for &(b, even, i, l, value) in rb_grids::RB_GRIDS {
        assert_eq!((i + l as i64 - 1).rem_euclid(2) == 0, even, "grid transcription parity");
        let corrected = r_b(i, l, b, RbVariant::Corrected);
        if corrected != value {
            mismatches.push(format!("b={b} i={i} l={l}: grid {value}, corrected {corrected}"));
        }
        if r_b(i, l, b, RbVariant::Printed) != value {
            printed_diff += 1;
        }
    }
    for (i, b, want) in [(0, 0, 1), (2, 0, 2), (2, 4, 0), (4, 4, 0)] {
        let got = r_b(i, 1, b, RbVariant::Corrected);
        if got != want {
            mismatches.push(format!("R_{b}({i},1) = {got}, expected {want}"));
        }
    }
    let mut law = 0;
    for run in ctx.runs().iter() {
        for s in &run.report.steps {
            let want = run.sig.r0 as i64 - 1 + r_b(s.step, 1, run.sig.b as u64, RbVariant::Corrected) as i64;
            ensure(s.radius as i64 == want, || {
                format!("{} step {}: radius {}, law {want}", run.fixture.id, s.step, s.radius)
            })?;
            law += 1;
        }
    }
    let summary = format!(
        "{} grid cells, {law} orbit radii; printed variant differs on {printed_diff} cells",
        rb_grids::RB_GRIDS.len()
    );
    if mismatches.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; {} grid mismatches: {}", mismatches.len(), mismatches.join("; ")))
    }
}

fn tau_suborbit(ctx: &mut Ctx) -> Outcome {
    let mut checked = 0;
    for run in ctx.runs().iter_mut() {
        if run.sig.b % 2 != 0 {
            continue;
        }
        let s = (run.sig.b / 2) as i64;
        let flows = run
            .report
            .steps
            .iter()
            .filter(|x| x.step.rem_euclid(2) == 0 && x.class == ModuleClass::Flow)
            .count() as i64;
        ensure(flows == s, || format!("{}: {flows} flow modules, expected {s}", run.fixture.id))?;
        let m0 = run.m0();
        let mut radius = |i: i64| run.orbit.classification(m0 + i).map(|c| c.radius).map_err(|e| e.to_string());
        let (a, b) = (radius(0)?, radius(2 * (s + 1))?);
        ensure(a < b, || format!("{}: r(M_0)={a}, r(τ^(s+1) M_0)={b}", run.fixture.id))?;
        let (c, d) = (radius(-1)?, radius(-1 + 2 * (s + 1))?);
        ensure(c > d, || format!("{}: r(M_-1)={c}, r(τ^(s+1) M_-1)={d}", run.fixture.id))?;
        checked += 1;
    }
    Ok(format!("{checked} orbits with even b"))
}

fn grid_coefficients(k: usize) -> impl Iterator<Item = Vec<Scalar>> {
    let total = 5usize.pow(k as u32);
    (0..total).map(move |mut c| {
        (0..k)
            .map(|_| {
                let v = (c % 5) as i64 - 2;
                c /= 5;
                int(v)
            })
            .collect()
    })
}

fn power_is_zero(m: &Matrix) -> bool {
    let mut acc = m.clone();
    for _ in 1..m.rows().max(1) {
        acc = &acc * m;
    }
    acc.is_zero()
}

/// Decides indecomposability from morphism components alone: a nontrivial
/// idempotent on the coefficient grid proves decomposable; every grid
/// element being a scalar plus a nilpotent is the local-algebra witness.
fn idempotent_oracle(m: &Representation) -> Result<Option<bool>, String> {
    let basis = hom_basis(m, m).map_err(|e| e.to_string())?;
    let id = Morphism::identity(m);
    let mut local = true;
    for coeffs in grid_coefficients(basis.len()) {
        let terms: Vec<(Scalar, &Morphism)> = coeffs.iter().cloned().zip(basis.iter()).collect();
        let f = Morphism::linear_combination(&terms).map_err(|e| e.to_string())?;
        let ff = f.compose_after(&f).map_err(|e| e.to_string())?;
        if ff.components() == f.components() && !f.is_zero() && f.components() != id.components() {
            return Ok(Some(false));
        }
        // f = λ·1 + nilpotent, with one λ shared by every vertex
        let mut lambda: Option<Scalar> = None;
        for (v, c) in f.components() {
            let d = m.dim(v);
            let l = c.trace() / int(d as i64);
            if lambda.get_or_insert_with(|| l.clone()) != &l {
                local = false;
            }
            if !power_is_zero(&c.checked_sub(&Matrix::identity(d).scaled(&l)).unwrap()) {
                local = false;
            }
        }
    }
    Ok(if local { Some(true) } else { None })
}

fn indecomposability_oracle(ctx: &mut Ctx) -> Outcome {
    let mut modules: Vec<(String, Representation, bool)> = Vec::new();
    for run in ctx.runs().iter_mut() {
        let m0 = run.m0();
        for i in [-1, 0, 1, run.sig.b as i64 + 1] {
            let m = run.orbit.get(m0 + i);
            if m.total_dim() <= 120 {
                modules.push((format!("{} step {i}", run.fixture.id), m.clone(), true));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pool: Vec<Representation> = {
        let mut pool = Vec::new();
        for n in [3, 4] {
            for x in ["", "1", "0.1", "2.1.1"] {
                let x: VertexAddress = x.parse().unwrap();
                pool.push(simple(x.clone(), o(n)));
                for t in 1..=2 {
                    if let Ok(p) = projective(t, &x, o(n)) {
                        pool.push(p);
                    }
                }
            }
        }
        pool
    };
    let mut sums = 0;
    while sums < 30 {
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        if a.n() != b.n() {
            continue;
        }
        let s = direct_sum(a, b).map_err(|e| e.to_string())?;
        modules.push((format!("random sum {sums}"), s, false));
        sums += 1;
    }
    let mut compared = 0;
    for (label, m, expect_indecomposable) in &modules {
        let end = end_algebra(m).map_err(|e| e.to_string())?;
        if end.dim() > 4 {
            continue;
        }
        let fast = is_indecomposable(m).map_err(|e| e.to_string())?;
        let oracle = idempotent_oracle(m)?.ok_or_else(|| format!("{label}: oracle inconclusive"))?;
        ensure(fast == oracle, || format!("{label}: is_indecomposable {fast}, oracle {oracle}"))?;
        ensure(fast == *expect_indecomposable, || format!("{label}: expected {expect_indecomposable}"))?;
        compared += 1;
    }
    ensure(compared >= 40, || format!("only {compared} modules with dim End <= 4"))?;
    Ok(format!("{compared} modules agree"))
}

fn random_subtree(n: u32, rng: &mut ChaCha8Rng) -> FiniteSubtree {
    let size = rng.gen_range(1..=40);
    let mut set = BTreeSet::from([VertexAddress::root()]);
    let mut list = vec![VertexAddress::root()];
    while set.len() < size {
        let v = list[rng.gen_range(0..list.len())].clone();
        let nbrs = v.neighbors(n).unwrap();
        let w = nbrs[rng.gen_range(0..nbrs.len())].clone();
        if set.insert(w.clone()) {
            list.push(w);
        }
    }
    FiniteSubtree::new(n, set)
}

/// All-pairs longest paths by BFS over parent/child adjacency.
type Distances = BTreeMap<(usize, usize), usize>;

fn brute_force(t: &FiniteSubtree) -> (usize, Vec<Vec<VertexAddress>>, Distances) {
    let vs: Vec<VertexAddress> = t.vertices().iter().cloned().collect();
    let idx: BTreeMap<&VertexAddress, usize> = vs.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut adj = vec![Vec::new(); vs.len()];
    for (i, v) in vs.iter().enumerate() {
        if let Some(p) = v.parent() {
            if let Some(&j) = idx.get(&p) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut dist = BTreeMap::new();
    let mut longest = 0;
    let mut paths = Vec::new();
    for s in 0..vs.len() {
        let mut prev = vec![usize::MAX; vs.len()];
        let mut d = vec![usize::MAX; vs.len()];
        d[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if d[w] == usize::MAX {
                    d[w] = d[u] + 1;
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        for e in 0..vs.len() {
            dist.insert((s, e), d[e]);
            if s < e || vs.len() == 1 {
                let mut p = vec![vs[e].clone()];
                let mut cur = e;
                while cur != s {
                    cur = prev[cur];
                    p.push(vs[cur].clone());
                }
                p.reverse();
                if d[e] > longest {
                    longest = d[e];
                    paths.clear();
                }
                if d[e] == longest {
                    paths.push(p);
                }
            }
        }
    }
    (longest, paths, dist)
}

fn path_center(p: &[VertexAddress]) -> Center {
    let d = p.len() - 1;
    if d.is_multiple_of(2) {
        Center::Vertex(p[d / 2].clone())
    } else {
        Center::edge(p[d / 2].clone(), p[d / 2 + 1].clone())
    }
}

fn tree_suite(_: &mut Ctx) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..200 {
        let n = if k % 2 == 0 { 3 } else { 4 };
        let t = random_subtree(n, &mut rng);
        let (d, paths, dist) = brute_force(&t);
        let centers: BTreeSet<Center> = paths.iter().map(|p| path_center(p)).collect();
        ensure(centers.len() == 1, || format!("subtree {k}: {} distinct centers", centers.len()))?;
        let center = centers.into_iter().next().unwrap();
        let cr = t.center_radius().map_err(|e| e.to_string())?;
        ensure(cr.center == center && cr.diameter == d && cr.radius == d / 2, || {
            format!("subtree {k}: library {} r={} d={}, oracle {center} d={d}", cr.center, cr.radius, cr.diameter)
        })?;
        let vs: Vec<&VertexAddress> = t.vertices().iter().collect();
        let cidx: Vec<usize> = center.vertices().iter().map(|c| vs.iter().position(|v| v == c).unwrap()).collect();
        for x in 0..vs.len() {
            let dx = cidx.iter().map(|&c| dist[&(c, x)]).min().unwrap();
            ensure(dx <= d / 2, || format!("subtree {k}: [{}] at distance {dx} from the center", vs[x]))?;
        }
        let mut oracle_paths: Vec<Vec<VertexAddress>> = paths
            .into_iter()
            .map(|mut p| {
                if p.last() < p.first() {
                    p.reverse();
                }
                p
            })
            .collect();
        oracle_paths.sort();
        ensure(t.diameter_paths().map_err(|e| e.to_string())? == oracle_paths, || {
            format!("subtree {k}: diameter paths differ")
        })?;
        let ends: BTreeSet<VertexAddress> =
            oracle_paths.iter().flat_map(|p| [p[0].clone(), p[p.len() - 1].clone()]).collect();
        ensure(t.boundary().map_err(|e| e.to_string())? == ends, || format!("subtree {k}: boundary differs"))?;
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("200 subtrees, {:.2?}", start.elapsed()))
}

fn family(_: &mut Ctx) -> Outcome {
    let mut out = Vec::new();
    for lam in [2, 3, 5] {
        let f = Fixture::family_fixture(o(3), 1, lam).map_err(|e| e.to_string())?;
        let b = f.b();
        ensure(is_indecomposable(&f.module).map_err(|e| e.to_string())?, || format!("λ={lam}: decomposable"))?;
        let c = classify(&f.module).map_err(|e| e.to_string())?;
        ensure(c.center == Center::Vertex(f.spec.p().clone()) && c.radius == b + 2, || {
            format!("λ={lam}: center {} radius {}", c.center, c.radius)
        })?;
        let top = kronecker_core::shift_power(&f.module, b as i64 + 1);
        let ct = classify(&top).map_err(|e| e.to_string())?;
        ensure(
            ct.class == ModuleClass::Source && ct.center == Center::Vertex(f.spec.q().clone()) && ct.radius == b + 2,
            || format!("λ={lam}: σ^(b+1) is a {} module, center {} radius {}", ct.class, ct.center, ct.radius),
        )?;
        out.push(lam);
    }
    Ok(format!("λ in {out:?}"))
}

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = p.downcast_ref::<&str>() {
        format!("panic: {s}")
    } else if let Some(s) = p.downcast_ref::<String>() {
        format!("panic: {s}")
    } else {
        "panic".into()
    }
}

fn main() {
    type Criterion = (u32, &'static str, &'static str, fn(&mut Ctx) -> Outcome);
    let criteria: [Criterion; 13] = [
        (1, "case I orbit n=3 b=r=4", "exact, < 10 s", case_i_orbit),
        (2, "path round trip", "exact, < 2 min", round_trip),
        (3, "transition rules", "exact", transitions),
        (4, "diameter path counts", "exact", gamma_relations),
        (5, "boundary growth", "exact", beta_growth),
        (6, "source-path radius", "exact", source_path_radius),
        (7, "hom dimension", "exact", hom_fact),
        (8, "shift adjunction", "exact", adjunction),
        (9, "R_b grids and radius law", "exact", rb_grids),
        (10, "τ-suborbit counts", "exact", tau_suborbit),
        (11, "indecomposability oracle", "exact", indecomposability_oracle),
        (12, "subtree centers", "exact, < 30 s", tree_suite),
        (13, "one-parameter family", "exact", family),
    ];
    let filter: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut ctx = Ctx::default();
    let mut failed = 0;
    let mut ran = 0;
    for (k, name, tolerance, f) in criteria {
        if filter.is_some_and(|x| x != k) {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(|| f(&mut ctx))).unwrap_or_else(|p| Err(panic_message(p)));
        let el = start.elapsed();
        match res {
            Ok(detail) => println!("criterion {k:>2} PASS  {name} [{tolerance}] ({el:.2?}): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {k:>2} FAIL  {name} [{tolerance}] ({el:.2?}): {detail}");
            }
        }
    }
    println!("{} of {ran} criteria passed", ran - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
