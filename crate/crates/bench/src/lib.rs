//! Seeds shared by the benchmarks.

use kronecker_core::battery::Fixture;
use kronecker_core::{Orientation, Representation};

/// The orbit seed for the canonical path of length `b` with minimal radius `r`.
pub fn seed(n: u32, r: usize, b: usize) -> Representation {
    let o = Orientation::new(n, true).expect("valence at least 2");
    Fixture::path_fixture(o, r, b).expect("admissible parameters").module
}
