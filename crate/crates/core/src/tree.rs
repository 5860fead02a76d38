//! Addressing, metric and finite-subtree analytics on the n-regular tree.
//!
//! A vertex is named by its reduced edge-label walk from a fixed root. The
//! root's children carry labels `0..n`; every other vertex reserves label 0
//! for its parent edge, so its children carry labels `1..n`. Reduced walks
//! biject with vertices, and distances come from common prefixes.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexAddress(Vec<u32>);

impl VertexAddress {
    pub fn root() -> Self {
        VertexAddress(Vec::new())
    }

    pub fn new(labels: Vec<u32>, n: u32) -> Result<Self> {
        let v = VertexAddress(labels);
        v.validate(n)?;
        Ok(v)
    }

    pub fn labels(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parent(&self) -> Option<VertexAddress> {
        let (_, init) = self.0.split_last()?;
        Some(VertexAddress(init.to_vec()))
    }

    /// Child along `label`, without range checks.
    pub fn child(&self, label: u32) -> VertexAddress {
        let mut l = self.0.clone();
        l.push(label);
        VertexAddress(l)
    }

    pub fn validate(&self, n: u32) -> Result<()> {
        if n < 2 {
            return Err(Error::BadValence(n));
        }
        for (i, &label) in self.0.iter().enumerate() {
            let ok = if i == 0 { label < n } else { (1..n).contains(&label) };
            if !ok {
                return Err(Error::LabelOutOfRange { label, n });
            }
        }
        Ok(())
    }

    /// Parent (if any) followed by the children in label order; exactly `n`
    /// vertices, sorted by address.
    pub fn neighbors(&self, n: u32) -> Result<Vec<VertexAddress>> {
        self.validate(n)?;
        Ok(self.neighbors_unchecked(n))
    }

    pub(crate) fn neighbors_unchecked(&self, n: u32) -> Vec<VertexAddress> {
        let mut out = Vec::with_capacity(n as usize);
        if let Some(p) = self.parent() {
            out.push(p);
            out.extend((1..n).map(|l| self.child(l)));
        } else {
            out.extend((0..n).map(|l| self.child(l)));
        }
        out
    }

    fn common_prefix(&self, other: &VertexAddress) -> usize {
        self.0.iter().zip(&other.0).take_while(|(a, b)| a == b).count()
    }
}

impl fmt::Display for VertexAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

impl fmt::Debug for VertexAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for VertexAddress {
    type Err = Error;

    /// `""` is the root; otherwise dot-separated labels such as `"2.1.1"`.
    /// Range checks need the valence and are left to [`VertexAddress::validate`].
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(VertexAddress::root());
        }
        s.split('.')
            .map(|p| p.parse::<u32>().map_err(|_| Error::BadAddress(s.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(VertexAddress)
    }
}

impl Serialize for VertexAddress {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for VertexAddress {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn distance(u: &VertexAddress, v: &VertexAddress) -> usize {
    u.depth() + v.depth() - 2 * u.common_prefix(v)
}

/// The unique reduced walk from `u` to `v`, both endpoints included.
pub fn path(u: &VertexAddress, v: &VertexAddress) -> Vec<VertexAddress> {
    let lcp = u.common_prefix(v);
    let mut out = Vec::with_capacity(distance(u, v) + 1);
    for k in (lcp..=u.depth()).rev() {
        out.push(VertexAddress(u.0[..k].to_vec()));
    }
    for k in lcp + 1..=v.depth() {
        out.push(VertexAddress(v.0[..k].to_vec()));
    }
    out
}

pub fn distance_and_path(u: &VertexAddress, v: &VertexAddress) -> (usize, Vec<VertexAddress>) {
    (distance(u, v), path(u, v))
}

pub fn are_adjacent(u: &VertexAddress, v: &VertexAddress) -> bool {
    distance(u, v) == 1
}

/// A bipartite orientation of T(n). With `sinks_even` the vertices at even
/// depth are sinks; flipping the flag gives the opposite orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orientation {
    pub n: u32,
    pub sinks_even: bool,
}

impl Orientation {
    pub fn new(n: u32, sinks_even: bool) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadValence(n));
        }
        Ok(Orientation { n, sinks_even })
    }

    pub fn flipped(self) -> Self {
        Orientation {
            n: self.n,
            sinks_even: !self.sinks_even,
        }
    }

    /// `self` flipped `t` times (only the parity of `t` matters).
    pub fn shifted(self, t: i64) -> Self {
        if t.rem_euclid(2) == 1 {
            self.flipped()
        } else {
            self
        }
    }

    pub fn is_sink(&self, v: &VertexAddress) -> bool {
        v.depth().is_multiple_of(2) == self.sinks_even
    }

    pub fn is_source(&self, v: &VertexAddress) -> bool {
        !self.is_sink(v)
    }
}

pub fn is_sink(v: &VertexAddress, o: Orientation) -> bool {
    o.is_sink(v)
}

/// Center of a finite tree: a vertex, or an edge stored with its endpoints
/// in address order so that equality is set equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Center {
    Vertex(VertexAddress),
    Edge(VertexAddress, VertexAddress),
}

impl Center {
    pub fn edge(a: VertexAddress, b: VertexAddress) -> Self {
        if a <= b {
            Center::Edge(a, b)
        } else {
            Center::Edge(b, a)
        }
    }

    pub fn vertices(&self) -> Vec<&VertexAddress> {
        match self {
            Center::Vertex(v) => vec![v],
            Center::Edge(a, b) => vec![a, b],
        }
    }

    pub fn contains(&self, v: &VertexAddress) -> bool {
        self.vertices().into_iter().any(|c| c == v)
    }

    pub fn as_vertex(&self) -> Option<&VertexAddress> {
        match self {
            Center::Vertex(v) => Some(v),
            Center::Edge(..) => None,
        }
    }

    /// Distance from `x` to the nearest central vertex.
    pub fn distance_from(&self, x: &VertexAddress) -> usize {
        self.vertices().into_iter().map(|c| distance(x, c)).min().unwrap_or(0)
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Center::Vertex(v) => write!(f, "[{v}]"),
            Center::Edge(a, b) => write!(f, "{{[{a}],[{b}]}}"),
        }
    }
}

impl Serialize for Center {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let vs: Vec<String> = self.vertices().into_iter().map(|v| v.to_string()).collect();
        vs.serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterRadius {
    pub center: Center,
    pub radius: usize,
    pub diameter: usize,
}

/// A finite set of vertices of T(n), viewed as the full subgraph it spans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSubtree {
    n: u32,
    vertices: BTreeSet<VertexAddress>,
}

impl FiniteSubtree {
    pub fn new(n: u32, vertices: impl IntoIterator<Item = VertexAddress>) -> Self {
        FiniteSubtree {
            n,
            vertices: vertices.into_iter().collect(),
        }
    }

    /// All vertices within distance `r` of one center or of an adjacent pair.
    pub fn ball(n: u32, centers: &[VertexAddress], r: usize) -> Result<Self> {
        for c in centers {
            c.validate(n)?;
        }
        match centers {
            [_] => {}
            [a, b] if are_adjacent(a, b) => {}
            [a, b] => return Err(Error::NotAdjacent(a.to_string(), b.to_string())),
            _ => return Err(Error::Construction(format!("a ball needs 1 or 2 centers, got {}", centers.len()))),
        }
        let mut seen: BTreeSet<VertexAddress> = centers.iter().cloned().collect();
        let mut frontier: Vec<VertexAddress> = centers.to_vec();
        for _ in 0..r {
            let mut next = Vec::new();
            for v in &frontier {
                for w in v.neighbors_unchecked(n) {
                    if seen.insert(w.clone()) {
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        Ok(FiniteSubtree { n, vertices: seen })
    }

    pub fn valence(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> &BTreeSet<VertexAddress> {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &VertexAddress) -> bool {
        self.vertices.contains(v)
    }

    pub fn neighbors_in(&self, v: &VertexAddress) -> Vec<VertexAddress> {
        v.neighbors_unchecked(self.n)
            .into_iter()
            .filter(|w| self.vertices.contains(w))
            .collect()
    }

    /// Pairs at distance 1, each listed once with the smaller address first.
    pub fn edges(&self) -> Vec<(VertexAddress, VertexAddress)> {
        let mut out = Vec::new();
        for v in &self.vertices {
            for w in self.neighbors_in(v) {
                if v < &w {
                    out.push((v.clone(), w));
                }
            }
        }
        out
    }

    pub fn leaves(&self) -> Vec<VertexAddress> {
        self.vertices
            .iter()
            .filter(|v| self.neighbors_in(v).len() <= 1)
            .cloned()
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices.iter().next() {
            None => true,
            Some(start) => self.bfs(start).len() == self.vertices.len(),
        }
    }

    /// Distances inside the subtree from `start`.
    pub fn bfs(&self, start: &VertexAddress) -> BTreeMap<VertexAddress, usize> {
        let mut dist = BTreeMap::new();
        dist.insert(start.clone(), 0);
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for w in self.neighbors_in(&v) {
                if !dist.contains_key(&w) {
                    dist.insert(w.clone(), d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn check_nonempty_connected(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::EmptySubtree);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    fn farthest(&self, from: &VertexAddress) -> VertexAddress {
        let dist = self.bfs(from);
        // first vertex (in address order) attaining the maximum
        let max = dist.values().copied().max().unwrap_or(0);
        dist.into_iter().find(|(_, d)| *d == max).map(|(v, _)| v).expect("nonempty")
    }

    /// Center, radius and diameter from one diameter path. Every vertex is
    /// checked to lie within `radius` of the center, which forces all
    /// diameter paths to share that center.
    pub fn center_radius(&self) -> Result<CenterRadius> {
        self.check_nonempty_connected()?;
        let start = self.vertices.iter().next().expect("nonempty");
        let a = self.farthest(start);
        let b = self.farthest(&a);
        let p = path(&a, &b);
        let diameter = p.len() - 1;
        let radius = diameter / 2;
        let center = if diameter.is_multiple_of(2) {
            Center::Vertex(p[radius].clone())
        } else {
            Center::edge(p[radius].clone(), p[radius + 1].clone())
        };
        if let Some(x) = self.vertices.iter().find(|x| center.distance_from(x) > radius) {
            return Err(Error::Internal(format!("vertex {x} lies outside radius {radius} of {center}")));
        }
        Ok(CenterRadius {
            center,
            radius,
            diameter,
        })
    }

    /// Endpoints of the diameter paths.
    pub fn boundary(&self) -> Result<BTreeSet<VertexAddress>> {
        let cr = self.center_radius()?;
        Ok(self.boundary_with(&cr))
    }

    fn boundary_with(&self, cr: &CenterRadius) -> BTreeSet<VertexAddress> {
        match &cr.center {
            Center::Vertex(c) => self
                .vertices
                .iter()
                .filter(|x| distance(x, c) == cr.radius)
                .cloned()
                .collect(),
            Center::Edge(c, c2) => self
                .vertices
                .iter()
                .filter(|x| {
                    let (d1, d2) = (distance(x, c), distance(x, c2));
                    d1.min(d2) == cr.radius
                })
                .cloned()
                .collect(),
        }
    }

    /// Number of diameter paths; with `directed` each path of positive
    /// length counts once per traversal direction.
    pub fn diameter_path_count(&self, directed: bool) -> Result<u64> {
        let cr = self.center_radius()?;
        if cr.diameter == 0 {
            return Ok(1);
        }
        let boundary = self.boundary_with(&cr);
        let unordered = match &cr.center {
            Center::Vertex(c) => {
                // group boundary vertices by the branch of c they hang off
                let mut per_branch: BTreeMap<VertexAddress, u64> = BTreeMap::new();
                for x in &boundary {
                    let first_step = path(c, x)[1].clone();
                    *per_branch.entry(first_step).or_default() += 1;
                }
                let total: u64 = per_branch.values().sum();
                let squares: u64 = per_branch.values().map(|a| a * a).sum();
                (total * total - squares) / 2
            }
            Center::Edge(c, c2) => {
                let near_c = boundary.iter().filter(|x| distance(x, c) < distance(x, c2)).count() as u64;
                near_c * (boundary.len() as u64 - near_c)
            }
        };
        Ok(if directed { 2 * unordered } else { unordered })
    }

    /// All diameter paths, each once, starting at its smaller endpoint;
    /// sorted lexicographically.
    pub fn diameter_paths(&self) -> Result<Vec<Vec<VertexAddress>>> {
        let cr = self.center_radius()?;
        let boundary: Vec<VertexAddress> = self.boundary_with(&cr).into_iter().collect();
        if cr.diameter == 0 {
            return Ok(vec![boundary]);
        }
        let mut out = Vec::new();
        for (i, x) in boundary.iter().enumerate() {
            for y in &boundary[i + 1..] {
                if distance(x, y) == cr.diameter {
                    out.push(path(x, y));
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

pub fn subtree_diameter_paths(t: &FiniteSubtree) -> Result<Vec<Vec<VertexAddress>>> {
    t.diameter_paths()
}

pub fn subtree_center_radius(t: &FiniteSubtree) -> Result<CenterRadius> {
    t.center_radius()
}

pub fn subtree_boundary(t: &FiniteSubtree) -> Result<BTreeSet<VertexAddress>> {
    t.boundary()
}

/// `1 + n((n-1)^r - 1)/(n-2)` vertices in a ball of radius `r`, `n >= 3`.
pub fn ball_size(n: u64, r: u32) -> u64 {
    assert!(n >= 3, "closed form needs n >= 3");
    1 + n * ((n - 1).pow(r) - 1) / (n - 2)
}

/// Boundary vertices of a ball of radius `r >= 1`: `n (n-1)^(r-1)`.
pub fn ball_boundary_size(n: u64, r: u32) -> u64 {
    assert!(r >= 1);
    n * (n - 1).pow(r - 1)
}
