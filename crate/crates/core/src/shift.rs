//! The shift functor σ (simultaneous reflection at all sinks), its left
//! adjoint σ⁻, powers of both, the modules P_t(x) and I_t(x), and the
//! preprojective / preinjective / regular classifier.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::analysis::{classify, ModuleClass};
use crate::error::{Error, Result};
use crate::linalg::{quotient_basis, Matrix};
use crate::rep::{is_indecomposable, Representation};
use crate::tree::{Orientation, VertexAddress};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SigmaFate {
    /// σ^t kills the module, `t >= 1` minimal.
    Preprojective(usize),
    /// σ^-t kills the module, `t >= 1` minimal.
    Preinjective(usize),
    Regular,
}

impl fmt::Display for SigmaFate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaFate::Preprojective(t) => write!(f, "Preprojective({t})"),
            SigmaFate::Preinjective(t) => write!(f, "Preinjective({t})"),
            SigmaFate::Regular => f.write_str("Regular"),
        }
    }
}

/// Reflects at every sink of `m`'s orientation that meets or touches the
/// support. The new space at a sink `x` is the kernel of
/// `[M_(y1->x) | M_(y2->x) | ...]` over the support neighbors in canonical
/// order, and the new arrow `x -> y` is the `y`-block of its kernel basis.
pub fn sigma(m: &Representation) -> Representation {
    let o = m.orientation();
    let mut dims = BTreeMap::new();
    let mut arrows = BTreeMap::new();
    for (v, &d) in m.dims() {
        if o.is_source(v) {
            dims.insert(v.clone(), d);
        }
    }
    for x in m.closed_neighborhood() {
        if !o.is_sink(&x) {
            continue;
        }
        let ys = m.support_neighbors(&x);
        if ys.is_empty() {
            continue;
        }
        let blocks: Vec<Matrix> = ys.iter().map(|y| m.arrow_or_zero(y, &x)).collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let combined = Matrix::hstack(m.dim(&x), &refs).expect("arrow blocks share the target dimension");
        let kernel = combined.kernel_matrix();
        if kernel.cols() == 0 {
            continue;
        }
        dims.insert(x.clone(), kernel.cols());
        let mut off = 0;
        for y in ys {
            let w = m.dim(&y);
            arrows.insert((x.clone(), y), kernel.row_block(off, w));
            off += w;
        }
    }
    Representation::from_parts(o.flipped(), dims, arrows).trimmed()
}

/// Reflects at every source: the new space at a source `y` is the cokernel
/// of the stacked map `M_y -> ⊕ M_x` over its support neighbors, with the
/// complement read off the echelonized image.
pub fn sigma_minus(m: &Representation) -> Representation {
    let o = m.orientation();
    let mut dims = BTreeMap::new();
    let mut arrows = BTreeMap::new();
    for (v, &d) in m.dims() {
        if o.is_sink(v) {
            dims.insert(v.clone(), d);
        }
    }
    for y in m.closed_neighborhood() {
        if !o.is_source(&y) {
            continue;
        }
        let xs = m.support_neighbors(&y);
        if xs.is_empty() {
            continue;
        }
        let blocks: Vec<Matrix> = xs.iter().map(|x| m.arrow_or_zero(&y, x)).collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let stacked = Matrix::vstack(m.dim(&y), &refs).expect("arrow blocks share the source dimension");
        let total = stacked.rows();
        let (r, pivots) = stacked.transpose().rref();
        let image: Vec<_> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        let (complement, proj) = quotient_basis(&image, total).expect("echelon rows are independent");
        if complement.is_empty() {
            continue;
        }
        dims.insert(y.clone(), complement.len());
        let mut off = 0;
        for x in xs {
            let w = m.dim(&x);
            arrows.insert((x, y.clone()), proj.column_block(off, w));
            off += w;
        }
    }
    Representation::from_parts(o.flipped(), dims, arrows).trimmed()
}

/// σ^t for `t > 0`, (σ⁻)^-t for `t < 0`.
pub fn shift_power(m: &Representation, t: i64) -> Representation {
    let mut cur = m.clone();
    for _ in 0..t.unsigned_abs() {
        cur = if t > 0 { sigma(&cur) } else { sigma_minus(&cur) };
    }
    cur
}

/// The Auslander-Reiten translate σ².
pub fn tau(m: &Representation) -> Representation {
    shift_power(m, 2)
}

/// P_t(x) = σ^-t S(x) as a module over `o`. The simple seed lives in `o`
/// flipped `t` times, where `x` has to be a sink.
pub fn projective(t: usize, x: &VertexAddress, o: Orientation) -> Result<Representation> {
    x.validate(o.n)?;
    let seed = o.shifted(t as i64);
    if !seed.is_sink(x) {
        return Err(Error::Parity {
            vertex: x.to_string(),
            reason: format!("P_{t} needs a sink in the seed orientation"),
        });
    }
    Ok(shift_power(&Representation::simple(x.clone(), seed), -(t as i64)))
}

/// I_t(x) = σ^t S(x) as a module over `o`; `x` has to be a source where
/// the simple seed lives.
pub fn injective(t: usize, x: &VertexAddress, o: Orientation) -> Result<Representation> {
    x.validate(o.n)?;
    let seed = o.shifted(t as i64);
    if !seed.is_source(x) {
        return Err(Error::Parity {
            vertex: x.to_string(),
            reason: format!("I_{t} needs a source in the seed orientation"),
        });
    }
    Ok(shift_power(&Representation::simple(x.clone(), seed), t as i64))
}

/// Iteration cap for the fate scan of a module of radius `r`.
pub fn step_cap(radius: usize) -> usize {
    4 * radius + 8
}

/// Checks indecomposability, then runs [`fate_of_indecomposable`].
pub fn classify_fate(m: &Representation) -> Result<SigmaFate> {
    if m.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    if !is_indecomposable(m)? {
        return Err(Error::Decomposable);
    }
    fate_of_indecomposable(m)
}

/// Forward until the module vanishes or is a source module, backward until
/// it vanishes or is a sink module. Source modules stay source modules
/// under σ and sink modules stay sink modules under σ⁻.
pub fn fate_of_indecomposable(m: &Representation) -> Result<SigmaFate> {
    let cap = step_cap(classify(m)?.radius);
    let scan = |forward: bool| -> Result<Option<usize>> {
        let mut cur = m.clone();
        for step in 0..=cap {
            if step > 0 {
                cur = if forward { sigma(&cur) } else { sigma_minus(&cur) };
                if cur.is_zero() {
                    return Ok(Some(step));
                }
            }
            let class = classify(&cur)?.class;
            if (forward && class == ModuleClass::Source) || (!forward && class == ModuleClass::Sink) {
                return Ok(None);
            }
        }
        Err(Error::IterationCap(cap))
    };
    if let Some(t) = scan(true)? {
        return Ok(SigmaFate::Preprojective(t));
    }
    if let Some(t) = scan(false)? {
        return Ok(SigmaFate::Preinjective(t));
    }
    Ok(SigmaFate::Regular)
}
