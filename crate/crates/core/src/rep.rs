//! Finite-dimensional representations of (T(n), Ω) and their morphisms.
//!
//! A representation stores a positive dimension for each vertex of its
//! support and a matrix for every arrow whose two endpoints lie in the
//! support. Arrows run from sources to sinks of the orientation; the matrix
//! of `s -> t` has shape `dim(t) x dim(s)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{quotient_basis, Matrix, Scalar, SparseEchelon};
use crate::tree::{distance, FiniteSubtree, Orientation, VertexAddress};

pub type Arrow = (VertexAddress, VertexAddress);

#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    orientation: Orientation,
    dims: BTreeMap<VertexAddress, usize>,
    arrows: BTreeMap<Arrow, Matrix>,
}

/// First broken invariant found by [`Representation::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Address(String),
    ZeroDimension(VertexAddress),
    NotAnEdge(VertexAddress, VertexAddress),
    AgainstOrientation(VertexAddress, VertexAddress),
    OutsideSupport(VertexAddress, VertexAddress),
    Shape {
        from: VertexAddress,
        to: VertexAddress,
        expected: (usize, usize),
        found: (usize, usize),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Address(msg) => write!(f, "address violation: {msg}"),
            Violation::ZeroDimension(v) => write!(f, "zero-dimensional space listed at [{v}]"),
            Violation::NotAnEdge(s, t) => write!(f, "arrow [{s}] -> [{t}] is not an edge"),
            Violation::AgainstOrientation(s, t) => {
                write!(f, "orientation violation: arrow [{s}] -> [{t}] points into a source")
            }
            Violation::OutsideSupport(s, t) => {
                write!(f, "arrow [{s}] -> [{t}] has an endpoint outside the support")
            }
            Violation::Shape {
                from,
                to,
                expected,
                found,
            } => write!(
                f,
                "shape violation: arrow [{from}] -> [{to}] should be {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
        }
    }
}

/// Orders the endpoints of an edge as (source, target) for `o`.
pub fn orient_edge(o: Orientation, u: &VertexAddress, v: &VertexAddress) -> Arrow {
    if o.is_sink(v) {
        (u.clone(), v.clone())
    } else {
        (v.clone(), u.clone())
    }
}

impl Representation {
    pub fn zero(orientation: Orientation) -> Self {
        Representation {
            orientation,
            dims: BTreeMap::new(),
            arrows: BTreeMap::new(),
        }
    }

    /// The simple module S(x).
    pub fn simple(x: VertexAddress, orientation: Orientation) -> Self {
        let mut m = Self::zero(orientation);
        m.dims.insert(x, 1);
        m
    }

    /// Assembles a representation without checking it; see [`Self::validate`].
    pub fn from_parts(
        orientation: Orientation,
        dims: BTreeMap<VertexAddress, usize>,
        arrows: BTreeMap<Arrow, Matrix>,
    ) -> Self {
        Representation {
            orientation,
            dims,
            arrows,
        }
    }

    /// Like [`Self::from_parts`], but drops zero spaces and the arrows
    /// touching them, fills missing arrows with zero maps and validates.
    pub fn build(
        orientation: Orientation,
        dims: BTreeMap<VertexAddress, usize>,
        arrows: BTreeMap<Arrow, Matrix>,
    ) -> Result<Self> {
        let mut m = Representation {
            orientation,
            dims,
            arrows,
        }
        .trimmed();
        m.fill_zero_arrows();
        if let Err(v) = m.validate() {
            return Err(Error::Invalid(v.to_string()));
        }
        Ok(m)
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn n(&self) -> u32 {
        self.orientation.n
    }

    pub fn dims(&self) -> &BTreeMap<VertexAddress, usize> {
        &self.dims
    }

    pub fn dim(&self, v: &VertexAddress) -> usize {
        self.dims.get(v).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn dimension_vector(&self) -> DimensionVector {
        DimensionVector(self.dims.iter().filter(|(_, &d)| d > 0).map(|(v, &d)| (v.clone(), d)).collect())
    }

    pub fn support(&self) -> FiniteSubtree {
        FiniteSubtree::new(self.n(), self.dims.iter().filter(|(_, &d)| d > 0).map(|(v, _)| v.clone()))
    }

    pub fn support_vertices(&self) -> impl Iterator<Item = &VertexAddress> {
        self.dims.iter().filter(|(_, &d)| d > 0).map(|(v, _)| v)
    }

    pub fn arrows(&self) -> &BTreeMap<Arrow, Matrix> {
        &self.arrows
    }

    pub fn arrow(&self, source: &VertexAddress, target: &VertexAddress) -> Option<&Matrix> {
        self.arrows.get(&(source.clone(), target.clone()))
    }

    /// The map of `source -> target`, zero when not stored.
    pub fn arrow_or_zero(&self, source: &VertexAddress, target: &VertexAddress) -> Matrix {
        self.arrow(source, target)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim(target), self.dim(source)))
    }

    /// Neighbors of `v` carrying a nonzero space, in canonical order.
    pub fn support_neighbors(&self, v: &VertexAddress) -> Vec<VertexAddress> {
        v.neighbors_unchecked(self.n())
            .into_iter()
            .filter(|w| self.dim(w) > 0)
            .collect()
    }

    /// Support plus every vertex adjacent to it.
    pub fn closed_neighborhood(&self) -> BTreeSet<VertexAddress> {
        let mut out = BTreeSet::new();
        for v in self.support_vertices() {
            out.insert(v.clone());
            out.extend(v.neighbors_unchecked(self.n()));
        }
        out
    }

    /// Drops zero spaces and the arrows with a zero-dimensional endpoint.
    pub fn trimmed(mut self) -> Self {
        self.dims.retain(|_, d| *d > 0);
        let dims = &self.dims;
        self.arrows.retain(|(s, t), _| dims.contains_key(s) && dims.contains_key(t));
        self
    }

    fn fill_zero_arrows(&mut self) {
        let o = self.orientation;
        let mut missing = Vec::new();
        for v in self.dims.keys() {
            if !o.is_sink(v) {
                continue;
            }
            for w in self.support_neighbors(v) {
                if !self.arrows.contains_key(&(w.clone(), v.clone())) {
                    missing.push((w, v.clone()));
                }
            }
        }
        for (s, t) in missing {
            let m = Matrix::zeros(self.dim(&t), self.dim(&s));
            self.arrows.insert((s, t), m);
        }
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.n();
        if n < 2 {
            return Err(Violation::Address(format!("valence {n} is below 2")));
        }
        for (v, &d) in &self.dims {
            v.validate(n).map_err(|e| Violation::Address(e.to_string()))?;
            if d == 0 {
                return Err(Violation::ZeroDimension(v.clone()));
            }
        }
        for ((s, t), m) in &self.arrows {
            s.validate(n).map_err(|e| Violation::Address(e.to_string()))?;
            t.validate(n).map_err(|e| Violation::Address(e.to_string()))?;
            if distance(s, t) != 1 {
                return Err(Violation::NotAnEdge(s.clone(), t.clone()));
            }
            if !self.orientation.is_sink(t) {
                return Err(Violation::AgainstOrientation(s.clone(), t.clone()));
            }
            if !self.dims.contains_key(s) || !self.dims.contains_key(t) {
                return Err(Violation::OutsideSupport(s.clone(), t.clone()));
            }
            let expected = (self.dim(t), self.dim(s));
            if m.shape() != expected {
                return Err(Violation::Shape {
                    from: s.clone(),
                    to: t.clone(),
                    expected,
                    found: m.shape(),
                });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let raw = RawRepresentation {
            n: self.n(),
            sinks_even: self.orientation.sinks_even,
            spaces: self.dims.iter().map(|(v, &d)| (v.to_string(), d)).collect(),
            arrows: self
                .arrows
                .iter()
                .map(|((s, t), m)| RawArrow {
                    from: s.to_string(),
                    to: t.to_string(),
                    matrix: m.clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("representation serializes")
    }

    /// Parses and validates a representation. Missing arrows between
    /// support vertices are read as zero maps.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawRepresentation = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let orientation = Orientation::new(raw.n, raw.sinks_even)?;
        let mut dims = BTreeMap::new();
        for (addr, d) in raw.spaces {
            let v: VertexAddress = addr.parse()?;
            dims.insert(v, d);
        }
        let mut arrows = BTreeMap::new();
        for a in raw.arrows {
            let s: VertexAddress = a.from.parse()?;
            let t: VertexAddress = a.to.parse()?;
            if arrows.insert((s.clone(), t.clone()), a.matrix).is_some() {
                return Err(Error::Invalid(format!("arrow [{s}] -> [{t}] listed twice")));
            }
        }
        let mut m = Representation {
            orientation,
            dims,
            arrows,
        };
        m.validate().map_err(|v| Error::Invalid(v.to_string()))?;
        m.fill_zero_arrows();
        Ok(m)
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Representation(n={}, sinks_even={}, {})",
            self.n(),
            self.orientation.sinks_even,
            self.dimension_vector()
        )
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRepresentation {
    n: u32,
    sinks_even: bool,
    spaces: BTreeMap<String, usize>,
    arrows: Vec<RawArrow>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArrow {
    from: String,
    to: String,
    matrix: Matrix,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimensionVector(pub BTreeMap<VertexAddress, usize>);

impl DimensionVector {
    pub fn get(&self, v: &VertexAddress) -> usize {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = &VertexAddress> {
        self.0.keys()
    }
}

impl Add for &DimensionVector {
    type Output = DimensionVector;

    fn add(self, rhs: &DimensionVector) -> DimensionVector {
        let mut out = self.0.clone();
        for (v, d) in &rhs.0 {
            *out.entry(v.clone()).or_default() += d;
        }
        DimensionVector(out)
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(v, d)| format!("[{v}]:{d}")).collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

pub fn simple(x: VertexAddress, o: Orientation) -> Representation {
    Representation::simple(x, o)
}

pub fn direct_sum(a: &Representation, b: &Representation) -> Result<Representation> {
    if a.orientation != b.orientation {
        return Err(Error::OrientationMismatch);
    }
    let mut dims = a.dims.clone();
    for (v, d) in &b.dims {
        *dims.entry(v.clone()).or_default() += d;
    }
    let mut m = Representation {
        orientation: a.orientation,
        dims,
        arrows: BTreeMap::new(),
    }
    .trimmed();
    m.fill_zero_arrows();
    let keys: Vec<Arrow> = m.arrows.keys().cloned().collect();
    for (s, t) in keys {
        let block = Matrix::block_diag(&a.arrow_or_zero(&s, &t), &b.arrow_or_zero(&s, &t));
        m.arrows.insert((s, t), block);
    }
    Ok(m)
}

/// A family of linear maps `a_v -> b_v`, one per vertex in both supports.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Arc<Representation>,
    target: Arc<Representation>,
    components: BTreeMap<VertexAddress, Matrix>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.components.iter()).finish()
    }
}

impl Morphism {
    /// Components at vertices outside either support are ignored; missing
    /// ones are zero. Commuting squares are not checked here.
    pub fn new(
        source: Arc<Representation>,
        target: Arc<Representation>,
        components: BTreeMap<VertexAddress, Matrix>,
    ) -> Result<Self> {
        let mut full = BTreeMap::new();
        for v in source.support_vertices() {
            let (bv, av) = (target.dim(v), source.dim(v));
            if bv == 0 {
                continue;
            }
            let c = match components.get(v) {
                Some(c) if c.shape() == (bv, av) => c.clone(),
                Some(c) => {
                    return Err(Error::Shape(format!(
                        "component at [{v}] is {}x{}, expected {bv}x{av}",
                        c.rows(),
                        c.cols()
                    )))
                }
                None => Matrix::zeros(bv, av),
            };
            full.insert(v.clone(), c);
        }
        Ok(Morphism {
            source,
            target,
            components: full,
        })
    }

    pub fn identity(m: &Representation) -> Morphism {
        let m = Arc::new(m.clone());
        let components = m.dims.iter().map(|(v, &d)| (v.clone(), Matrix::identity(d))).collect();
        Morphism {
            source: m.clone(),
            target: m,
            components,
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn components(&self) -> &BTreeMap<VertexAddress, Matrix> {
        &self.components
    }

    pub fn component(&self, v: &VertexAddress) -> Option<&Matrix> {
        self.components.get(v)
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(Matrix::is_zero)
    }

    /// Checks `f_t * A_(s->t) = B_(s->t) * f_s` on every arrow of either end.
    pub fn commutes(&self) -> bool {
        let arrows: BTreeSet<&Arrow> = self.source.arrows.keys().chain(self.target.arrows.keys()).collect();
        let comp = |v: &VertexAddress| {
            self.components
                .get(v)
                .cloned()
                .unwrap_or_else(|| Matrix::zeros(self.target.dim(v), self.source.dim(v)))
        };
        // arrows from a vertex outside one support still constrain the other
        let mut edges: BTreeSet<Arrow> = arrows.into_iter().cloned().collect();
        for v in self.components.keys() {
            for w in v.neighbors_unchecked(self.source.n()) {
                if self.source.dim(&w) + self.target.dim(&w) > 0 {
                    edges.insert(orient_edge(self.source.orientation, v, &w));
                }
            }
        }
        edges.iter().all(|(s, t)| {
            let lhs = &comp(t) * &self.source.arrow_or_zero(s, t);
            let rhs = &self.target.arrow_or_zero(s, t) * &comp(s);
            lhs == rhs
        })
    }

    /// `self` after `first`: `(self ∘ first)_v = self_v * first_v`.
    pub fn compose_after(&self, first: &Morphism) -> Result<Morphism> {
        if first.target.as_ref() != self.source.as_ref() {
            return Err(Error::Shape("composition of non-matching morphisms".into()));
        }
        let mut components = BTreeMap::new();
        for (v, f) in &first.components {
            if let Some(g) = self.components.get(v) {
                components.insert(v.clone(), g.checked_mul(f)?);
            }
        }
        Morphism::new(first.source.clone(), self.target.clone(), components)
    }

    pub fn linear_combination(terms: &[(Scalar, &Morphism)]) -> Result<Morphism> {
        let (_, first) = terms.first().ok_or_else(|| Error::Shape("empty linear combination".into()))?;
        let mut components: BTreeMap<VertexAddress, Matrix> = BTreeMap::new();
        for (c, f) in terms {
            if f.source != first.source || f.target != first.target {
                return Err(Error::Shape("linear combination across different Hom spaces".into()));
            }
            for (v, m) in &f.components {
                let entry = components.entry(v.clone()).or_insert_with(|| Matrix::zeros(m.rows(), m.cols()));
                *entry = entry.checked_add(&m.scaled(c))?;
            }
        }
        Morphism::new(first.source.clone(), first.target.clone(), components)
    }

    pub fn is_injective(&self) -> bool {
        self.non_injective_vertex().is_none()
    }

    fn non_injective_vertex(&self) -> Option<VertexAddress> {
        for v in self.source.support_vertices() {
            match self.components.get(v) {
                Some(c) if c.rank() == c.cols() => {}
                _ => return Some(v.clone()),
            }
        }
        None
    }

    /// Invertible at every vertex of both supports.
    pub fn is_isomorphism(&self) -> bool {
        self.source.dimension_vector() == self.target.dimension_vector()
            && self.components.values().all(Matrix::is_invertible)
    }
}

/// Hom(a, b) with its canonical basis.
///
/// Unknowns are the entries of the components, vertex blocks ordered from
/// the far end of the common support inwards; the basis is the canonical
/// kernel basis of the commuting-square system, so coordinates of any
/// morphism are its entries at the free unknowns.
#[derive(Debug, Clone)]
pub struct HomSpace {
    source: Arc<Representation>,
    target: Arc<Representation>,
    blocks: Vec<(VertexAddress, usize)>,
    free: Vec<usize>,
    basis: Vec<Morphism>,
}

impl HomSpace {
    pub fn compute(a: &Representation, b: &Representation) -> Result<HomSpace> {
        if a.orientation != b.orientation {
            return Err(Error::OrientationMismatch);
        }
        let o = a.orientation;
        let source = Arc::new(a.clone());
        let target = Arc::new(b.clone());
        let common: Vec<VertexAddress> = a.support_vertices().filter(|v| b.dim(v) > 0).cloned().collect();

        let mut order = common.clone();
        if let Some(anchor) = common.first().cloned() {
            order.sort_by(|x, y| distance(y, &anchor).cmp(&distance(x, &anchor)).then_with(|| x.cmp(y)));
        }
        let mut blocks = Vec::with_capacity(order.len());
        let mut offset_of = BTreeMap::new();
        let mut total = 0;
        for v in &order {
            blocks.push((v.clone(), total));
            offset_of.insert(v.clone(), total);
            total += a.dim(v) * b.dim(v);
        }

        // every arrow s -> t where f_s or f_t is an unknown and the square is nontrivial
        let mut edges = BTreeSet::new();
        for v in &common {
            for w in v.neighbors_unchecked(o.n) {
                let (s, t) = orient_edge(o, v, &w);
                if a.dim(&s) > 0 && b.dim(&t) > 0 {
                    edges.insert((s, t));
                }
            }
        }

        let mut ech = SparseEchelon::new(total);
        for (s, t) in &edges {
            let (as_, bt) = (a.dim(s), b.dim(t));
            let amat = a.arrow_or_zero(s, t);
            let bmat = b.arrow_or_zero(s, t);
            let ft = offset_of.get(t).map(|&off| (off, a.dim(t)));
            let fs = offset_of.get(s).map(|&off| (off, a.dim(s)));
            // (f_t A - B f_s)[i][j] = sum_k f_t[i][k] A[k][j] - sum_k B[i][k] f_s[k][j]
            for i in 0..bt {
                for j in 0..as_ {
                    let mut row: BTreeMap<usize, Scalar> = BTreeMap::new();
                    if let Some((off, at)) = ft {
                        for k in 0..at {
                            let c = amat.get(k, j);
                            if !c.is_zero() {
                                *row.entry(off + i * at + k).or_insert_with(Scalar::zero) += c;
                            }
                        }
                    }
                    if let Some((off, as_cols)) = fs {
                        for k in 0..bmat.cols() {
                            let c = bmat.get(i, k);
                            if !c.is_zero() {
                                *row.entry(off + k * as_cols + j).or_insert_with(Scalar::zero) -= c;
                            }
                        }
                    }
                    row.retain(|_, c| !c.is_zero());
                    if !row.is_empty() {
                        ech.insert(row);
                    }
                }
            }
        }

        let free = ech.free_columns();
        let basis = ech
            .kernel_basis()
            .into_iter()
            .map(|x| {
                let components = blocks
                    .iter()
                    .map(|(v, off)| {
                        let (bv, av) = (b.dim(v), a.dim(v));
                        let entries = x[*off..off + bv * av].to_vec();
                        (v.clone(), Matrix::from_entries(bv, av, entries).expect("block size"))
                    })
                    .collect();
                Morphism {
                    source: source.clone(),
                    target: target.clone(),
                    components,
                }
            })
            .collect();
        Ok(HomSpace {
            source,
            target,
            blocks,
            free,
            basis,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Morphism> {
        self.basis
    }

    /// Coordinates of a morphism of this Hom space in the canonical basis.
    pub fn coordinates(&self, f: &Morphism) -> Vec<Scalar> {
        let flat = self.flatten(f);
        self.free.iter().map(|&c| flat[c].clone()).collect()
    }

    fn flatten(&self, f: &Morphism) -> Vec<Scalar> {
        let mut out = Vec::new();
        for (v, _) in &self.blocks {
            let (bv, av) = (self.target.dim(v), self.source.dim(v));
            match f.components.get(v) {
                Some(c) => out.extend_from_slice(c.entries()),
                None => out.extend(std::iter::repeat_with(Scalar::zero).take(bv * av)),
            }
        }
        out
    }
}

pub fn hom_basis(a: &Representation, b: &Representation) -> Result<Vec<Morphism>> {
    Ok(HomSpace::compute(a, b)?.into_basis())
}

/// End(m) as a basis and structure constants: `e_i ∘ e_j = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone)]
pub struct EndAlgebra {
    pub space: HomSpace,
    pub structure: Vec<Vec<Vec<Scalar>>>,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[Morphism] {
        self.space.basis()
    }

    /// Matrix of left multiplication by `Σ x_i e_i` in the basis.
    pub fn left_multiplication(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut l = Matrix::zeros(d, d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..d {
                for k in 0..d {
                    let c = &self.structure[i][j][k];
                    if !c.is_zero() {
                        let v = l.get(k, j) + xi * c;
                        l.set(k, j, v);
                    }
                }
            }
        }
        l
    }

    /// Coordinates of `x * y` for coordinate vectors `x`, `y`.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.left_multiplication(x).apply(y)
    }

    /// Dimension of End/rad via the trace form `(x, y) -> tr(L_x L_y)`.
    pub fn top_dimension(&self) -> usize {
        let d = self.dim();
        let ls: Vec<Matrix> = (0..d)
            .map(|i| {
                let mut e = vec![Scalar::zero(); d];
                e[i] = Scalar::one();
                self.left_multiplication(&e)
            })
            .collect();
        let mut gram = Matrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let t = (&ls[i] * &ls[j]).trace();
                gram.set(i, j, t.clone());
                gram.set(j, i, t);
            }
        }
        gram.rank()
    }
}

pub fn end_algebra(m: &Representation) -> Result<EndAlgebra> {
    if m.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    let space = HomSpace::compute(m, m)?;
    let structure = space
        .basis
        .iter()
        .map(|x| {
            space
                .basis
                .iter()
                .map(|y| Ok(space.coordinates(&x.compose_after(y)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EndAlgebra { space, structure })
}

/// True iff End(m) modulo its radical is one-dimensional.
pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    Ok(end_algebra(m)?.top_dimension() == 1)
}

/// Cokernel of a vertexwise injective morphism, with complements chosen
/// from echelon pivots.
pub fn quotient_by_image(f: &Morphism) -> Result<Representation> {
    if let Some(v) = f.non_injective_vertex() {
        return Err(Error::NotInjective(v.to_string()));
    }
    let b = f.target();
    let mut dims = BTreeMap::new();
    let mut sections: BTreeMap<VertexAddress, Matrix> = BTreeMap::new();
    let mut projections: BTreeMap<VertexAddress, Matrix> = BTreeMap::new();
    for (v, &bv) in &b.dims {
        let image: Vec<Vec<Scalar>> = match f.component(v) {
            Some(c) => c.columns(),
            None => Vec::new(),
        };
        let (complement, proj) = quotient_basis(&image, bv)?;
        let mut section = Matrix::zeros(bv, complement.len());
        for (k, &c) in complement.iter().enumerate() {
            section.set(c, k, Scalar::one());
        }
        dims.insert(v.clone(), complement.len());
        sections.insert(v.clone(), section);
        projections.insert(v.clone(), proj);
    }
    let mut arrows = BTreeMap::new();
    for ((s, t), m) in &b.arrows {
        let induced = &(&projections[t] * m) * &sections[s];
        arrows.insert((s.clone(), t.clone()), induced);
    }
    Ok(Representation {
        orientation: b.orientation,
        dims,
        arrows,
    }
    .trimmed())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoSearch {
    /// A certified isomorphism.
    Isomorphic(Morphism),
    DimensionMismatch,
    /// Dimension vectors agree but no invertible element was found.
    NotFound,
}

impl IsoSearch {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoSearch::Isomorphic(_))
    }
}

/// Best-effort isomorphism test: tries the canonical Hom basis, then a
/// fixed sequence of small integer combinations of it.
pub fn are_isomorphic(a: &Representation, b: &Representation) -> Result<IsoSearch> {
    if a.orientation != b.orientation {
        return Err(Error::OrientationMismatch);
    }
    if a.dimension_vector() != b.dimension_vector() {
        return Ok(IsoSearch::DimensionMismatch);
    }
    if a.is_zero() {
        return Ok(IsoSearch::Isomorphic(Morphism::identity(a)));
    }
    let basis = hom_basis(a, b)?;
    if let Some(f) = basis.iter().find(|f| f.is_isomorphism()) {
        return Ok(IsoSearch::Isomorphic(f.clone()));
    }
    if basis.is_empty() {
        return Ok(IsoSearch::NotFound);
    }
    // deterministic coefficient stream in -3..=3
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    for _ in 0..48 {
        let terms: Vec<(Scalar, &Morphism)> = basis
            .iter()
            .map(|f| {
                state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
                let c = ((state >> 33) % 7) as i64 - 3;
                (Scalar::from_integer(c.into()), f)
            })
            .collect();
        let f = Morphism::linear_combination(&terms)?;
        if f.is_isomorphism() {
            return Ok(IsoSearch::Isomorphic(f));
        }
    }
    Ok(IsoSearch::NotFound)
}
