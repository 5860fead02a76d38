//! Explicit regular indecomposable modules with prescribed orbit signature,
//! and a one-parameter family of incomplete sink modules.
//!
//! Every recipe starts from a path `(a_0, .., a_b)` and a minimal sink
//! radius `r >= b`, where `a_0` must be a sink exactly when `r` is even.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Zero};

use crate::analysis::{classify, is_complete, orbit_signature, ModuleClass};
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Scalar};
use crate::rep::{direct_sum, hom_basis, quotient_by_image, simple, Morphism, Representation};
use crate::shift::projective;
use crate::tree::{are_adjacent, distance, Center, Orientation, VertexAddress};

/// A center path with its minimal sink radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSpec {
    pub orientation: Orientation,
    pub r: usize,
    pub path: Vec<VertexAddress>,
    /// Explicit arms leaving `a_b`, each listed outward from its vertex next
    /// to `a_b`. Chosen canonically when absent.
    pub arms: Option<[Vec<VertexAddress>; 2]>,
}

impl PathSpec {
    pub fn new(orientation: Orientation, r: usize, path: Vec<VertexAddress>) -> Result<Self> {
        let spec = PathSpec {
            orientation,
            r,
            path,
            arms: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn b(&self) -> usize {
        self.path.len().saturating_sub(1)
    }

    pub fn p(&self) -> &VertexAddress {
        &self.path[0]
    }

    pub fn q(&self) -> &VertexAddress {
        self.path.last().expect("nonempty path")
    }

    pub fn n(&self) -> u32 {
        self.orientation.n
    }

    pub fn validate(&self) -> Result<()> {
        if self.path.is_empty() {
            return Err(Error::Construction("empty center path".into()));
        }
        if self.r == 0 {
            return Err(Error::Construction("the radius must be positive".into()));
        }
        if self.b() > self.r {
            return Err(Error::Construction(format!(
                "path length {} exceeds the radius {}",
                self.b(),
                self.r
            )));
        }
        for v in &self.path {
            v.validate(self.n())?;
        }
        check_walk(&self.path)?;
        let p = self.p();
        if self.orientation.is_sink(p) != self.r.is_multiple_of(2) {
            return Err(Error::Parity {
                vertex: p.to_string(),
                reason: format!(
                    "the path must start at a {} for r = {}",
                    if self.r.is_multiple_of(2) { "sink" } else { "source" },
                    self.r
                ),
            });
        }
        if let Some(arms) = &self.arms {
            for arm in arms {
                let mut walk = vec![self.q().clone()];
                walk.extend(arm.iter().cloned());
                check_walk(&walk)?;
            }
        }
        Ok(())
    }
}

fn check_walk(walk: &[VertexAddress]) -> Result<()> {
    for w in walk.windows(2) {
        if !are_adjacent(&w[0], &w[1]) {
            return Err(Error::NotAdjacent(w[0].to_string(), w[1].to_string()));
        }
    }
    for w in walk.windows(3) {
        if w[0] == w[2] {
            return Err(Error::Construction(format!("the walk backtracks at [{}]", w[1])));
        }
    }
    Ok(())
}

/// First neighbor of `v` in canonical order not listed in `avoid`.
fn first_neighbor_avoiding(v: &VertexAddress, n: u32, avoid: &[&VertexAddress]) -> Option<VertexAddress> {
    v.neighbors_unchecked(n).into_iter().find(|w| !avoid.contains(&w))
}

/// The path of length `b` used for radius `r`: it starts at the root when
/// the root has the parity required of `a_0`, else at the root's first
/// child, and always steps to the first child.
pub fn canonical_path(o: Orientation, r: usize, b: usize) -> Result<PathSpec> {
    let root = VertexAddress::root();
    let p = if o.is_sink(&root) == r.is_multiple_of(2) {
        root
    } else {
        root.child(0)
    };
    let mut path = vec![p];
    for _ in 0..b {
        let last = path.last().expect("nonempty");
        let next = if last.is_root() { last.child(0) } else { last.child(1) };
        path.push(next);
    }
    PathSpec::new(o, r, path)
}

/// The two arms of length `r - b` leaving `q = a_b` away from the path:
/// their first vertices are the first two neighbors of `q` other than
/// `a_(b-1)`; each arm then keeps taking the first neighbor that does not
/// step back.
pub fn canonical_arms(spec: &PathSpec) -> Result<[Vec<VertexAddress>; 2]> {
    let n = spec.n();
    let q = spec.q();
    let back = if spec.b() >= 1 { Some(&spec.path[spec.b() - 1]) } else { None };
    let starts: Vec<VertexAddress> = q
        .neighbors_unchecked(n)
        .into_iter()
        .filter(|w| Some(w) != back)
        .take(2)
        .collect();
    if starts.len() < 2 {
        return Err(Error::Construction(format!("[{q}] has fewer than two free neighbors")));
    }
    let len = spec.r - spec.b();
    let grow = |start: &VertexAddress| {
        let mut arm = vec![start.clone()];
        let mut prev = q.clone();
        while arm.len() < len {
            let cur = arm.last().expect("nonempty").clone();
            let next = first_neighbor_avoiding(&cur, n, &[&prev]).expect("n >= 2");
            prev = cur;
            arm.push(next);
        }
        arm
    };
    Ok([grow(&starts[0]), grow(&starts[1])])
}

/// The image of S(x) inside `m`, for a vertex where `m` is one-dimensional
/// and the inclusion is unique up to scalars.
fn simple_inclusion(m: &Representation, x: &VertexAddress) -> Result<Morphism> {
    let s = simple(x.clone(), m.orientation());
    let mut hom = hom_basis(&s, m)?;
    if hom.len() != 1 {
        return Err(Error::Internal(format!(
            "Hom(S([{x}]), M) has dimension {}, expected 1",
            hom.len()
        )));
    }
    Ok(hom.remove(0))
}

fn expect_incomplete_sink(m: &Representation, center: &VertexAddress, radius: usize, what: &str) -> Result<()> {
    let cl = classify(m)?;
    if cl.class != ModuleClass::Sink || cl.center != Center::Vertex(center.clone()) || cl.radius != radius {
        return Err(Error::Construction(format!(
            "{what}: expected a sink module with center [{center}] and radius {radius}, got a {} module with center {} and radius {}",
            cl.class, cl.center, cl.radius
        )));
    }
    if is_complete(m)? {
        return Err(Error::Construction(format!("{what}: the module is complete")));
    }
    Ok(())
}

/// P_r(p) / P_0(q) for a path of length `b = r`.
pub fn case_i(spec: &PathSpec) -> Result<Representation> {
    spec.validate()?;
    if spec.b() != spec.r {
        return Err(Error::Construction(format!(
            "case I needs b = r, got b = {} and r = {}",
            spec.b(),
            spec.r
        )));
    }
    let (p, q) = (spec.p(), spec.q());
    let big = projective(spec.r, p, spec.orientation)?;
    let m0 = quotient_by_image(&simple_inclusion(&big, q)?)?;
    expect_incomplete_sink(&m0, p, spec.r, "case I")?;
    Ok(m0)
}

/// P_r(p) / (S(x) ⊕ S(x')) where `x`, `x'` end two arms of length `r - b`
/// leaving `a_b` in different directions, off the path.
pub fn case_ii(spec: &PathSpec) -> Result<Representation> {
    spec.validate()?;
    let (n, b, r) = (spec.n(), spec.b(), spec.r);
    if b >= r {
        return Err(Error::Construction(format!("case II needs b < r, got b = {b} and r = {r}")));
    }
    if (n, b, r) == (3, 0, 1) {
        return Err(Error::Construction("(n, b, r) = (3, 0, 1) is handled by case III".into()));
    }
    let arms = match &spec.arms {
        Some(a) => a.clone(),
        None => canonical_arms(spec)?,
    };
    let p = spec.p();
    let ends: Vec<&VertexAddress> = arms.iter().map(|a| a.last().expect("nonempty arm")).collect();
    for (arm, x) in arms.iter().zip(&ends) {
        if arm.len() != r - b || distance(p, x) != r {
            return Err(Error::Construction(format!("arm ending at [{x}] does not reach distance {r} from [{p}]")));
        }
    }
    if arms[0][0] == arms[1][0] {
        return Err(Error::Construction("the two arms leave the path in the same direction".into()));
    }
    let big = projective(r, p, spec.orientation)?;
    let (x, x2) = (ends[0], ends[1]);
    let f = simple_inclusion(&big, x)?;
    let g = simple_inclusion(&big, x2)?;
    let o = spec.orientation;
    let sub = direct_sum(&simple(x.clone(), o), &simple(x2.clone(), o))?;
    let components = BTreeMap::from([
        (x.clone(), f.component(x).expect("component at x").clone()),
        (x2.clone(), g.component(x2).expect("component at x'").clone()),
    ]);
    let inclusion = Morphism::new(Arc::new(sub), Arc::new(big), components)?;
    let m0 = quotient_by_image(&inclusion)?;
    expect_incomplete_sink(&m0, p, r, "case II")?;
    Ok(m0)
}

/// Dimension 2 at the source `p`, dimension 1 at each neighbor; the map to
/// the `j`-th neighbor is the row `(1, 0)`, `(0, 1)`, `(1, 1)`, `(1, 2)`, ..
/// so the kernels are pairwise distinct lines.
pub fn case_iii(p: &VertexAddress, o: Orientation) -> Result<Representation> {
    p.validate(o.n)?;
    if o.n < 3 {
        return Err(Error::BadValence(o.n));
    }
    if !o.is_source(p) {
        return Err(Error::Parity {
            vertex: p.to_string(),
            reason: "case III needs a source".into(),
        });
    }
    let mut dims = BTreeMap::from([(p.clone(), 2)]);
    let mut arrows = BTreeMap::new();
    for (j, x) in p.neighbors(o.n)?.into_iter().enumerate() {
        let row = match j {
            0 => [1, 0],
            1 => [0, 1],
            j => [1, j as i64 - 1],
        };
        dims.insert(x.clone(), 1);
        arrows.insert((p.clone(), x), Matrix::from_ints(&[&row]));
    }
    let m = Representation::build(o, dims, arrows)?;
    expect_incomplete_sink(&m, p, 1, "case III")?;
    Ok(m)
}

/// Which recipe [`module_for_path`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recipe {
    CaseI,
    CaseII,
    CaseIII,
}

pub fn recipe_for(n: u32, r: usize, b: usize) -> Recipe {
    if b == r {
        Recipe::CaseI
    } else if (n, b, r) == (3, 0, 1) {
        Recipe::CaseIII
    } else {
        Recipe::CaseII
    }
}

/// Builds a module from its recipe without checking the signature.
pub fn build_module(spec: &PathSpec) -> Result<Representation> {
    match recipe_for(spec.n(), spec.r, spec.b()) {
        Recipe::CaseI => case_i(spec),
        Recipe::CaseII => case_ii(spec),
        Recipe::CaseIII => case_iii(spec.p(), spec.orientation),
    }
}

/// A regular indecomposable module whose minimal sink radius is `r` and
/// whose center path is `path`; the signature is recomputed and compared.
pub fn module_for_path(r: usize, path: &[VertexAddress], o: Orientation) -> Result<Representation> {
    let spec = PathSpec::new(o, r, path.to_vec())?;
    let m = build_module(&spec)?;
    let sig = orbit_signature(&m)?;
    if sig.r0 != r || sig.center_path != path || sig.index_of_input != 0 {
        return Err(Error::Construction(format!(
            "built module has signature {sig}, expected r0={r} and path {path:?}"
        )));
    }
    Ok(m)
}

/// The gluing points of [`family_module`]: `u`, `u'` next to `p` and `x`,
/// `x'` next to `q`, all off the path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyAnchors {
    pub u: [VertexAddress; 2],
    pub x: [VertexAddress; 2],
}

pub fn family_anchors(spec: &PathSpec) -> Result<FamilyAnchors> {
    let n = spec.n();
    let (p, q, b) = (spec.p(), spec.q(), spec.b());
    let mut avoid_p: Vec<&VertexAddress> = Vec::new();
    if b >= 1 {
        avoid_p.push(&spec.path[1]);
    }
    let us: Vec<VertexAddress> = p.neighbors_unchecked(n).into_iter().filter(|w| !avoid_p.contains(&w)).take(2).collect();
    if us.len() < 2 {
        return Err(Error::Construction(format!("[{p}] has fewer than two free neighbors")));
    }
    let mut avoid_q: Vec<&VertexAddress> = us.iter().collect();
    if b >= 1 {
        avoid_q.push(&spec.path[b - 1]);
    }
    let xs: Vec<VertexAddress> = q.neighbors_unchecked(n).into_iter().filter(|w| !avoid_q.contains(&w)).take(2).collect();
    if xs.len() < 2 {
        return Err(Error::Construction(format!("[{q}] has fewer than two free neighbors")));
    }
    Ok(FamilyAnchors {
        u: [us[0].clone(), us[1].clone()],
        x: [xs[0].clone(), xs[1].clone()],
    })
}

/// P_(b+1)(u) ⊕ P_(b+1)(u') ⊕ S(x) ⊕ S(x') with the arrows `x -> q` and
/// `x' -> q` replaced by the columns `(1, 1)` and `(1, λ)` in the
/// coordinates `(P(u)_q, P(u')_q)`.
pub fn family_module(spec: &PathSpec, lambda: &Scalar) -> Result<Representation> {
    spec.validate()?;
    if lambda.is_zero() || lambda.is_one() {
        return Err(Error::Construction(format!("λ = {lambda} is outside the family (λ must avoid 0 and 1)")));
    }
    let o = spec.orientation;
    let (p, q, b) = (spec.p(), spec.q(), spec.b());
    if spec.r != b + 2 {
        return Err(Error::Construction(format!(
            "the family has minimal radius b + 2 = {}, got r = {}",
            b + 2,
            spec.r
        )));
    }
    let anchors = family_anchors(spec)?;
    let pu = projective(b + 1, &anchors.u[0], o)?;
    let pu2 = projective(b + 1, &anchors.u[1], o)?;
    if pu.dim(q) != 1 || pu2.dim(q) != 1 {
        return Err(Error::Internal("projective summands are not one-dimensional at q".into()));
    }
    let base = direct_sum(&pu, &pu2)?;
    let mut dims = base.dims().clone();
    let mut arrows = base.arrows().clone();
    for (x, second) in anchors.x.iter().zip([Scalar::one(), lambda.clone()]) {
        if !o.is_source(x) || base.dim(x) != 0 {
            return Err(Error::Internal(format!("[{x}] is not a free source next to q")));
        }
        dims.insert(x.clone(), 1);
        let column = Matrix::from_rows(vec![vec![Scalar::one()], vec![second]], 1)?;
        arrows.insert((x.clone(), q.clone()), column);
    }
    let m = Representation::build(o, dims, arrows)?;
    let cl = classify(&m)?;
    if cl.class != ModuleClass::Sink || cl.center != Center::Vertex(p.clone()) || cl.radius != b + 2 {
        return Err(Error::Construction(format!(
            "family module is a {} module with center {} and radius {}",
            cl.class, cl.center, cl.radius
        )));
    }
    Ok(m)
}

/// Small integer scalar helper for callers building λ values.
pub fn lambda(v: i64) -> Scalar {
    int(v)
}
