//! Graded Kronecker modules on the n-regular tree: exact linear algebra,
//! tree addressing, representations, the shift functor and orbit invariants.

pub mod analysis;
pub mod battery;
pub mod construct;
pub mod error;
pub mod linalg;
pub mod rep;
pub mod shift;
pub mod tree;

pub use analysis::{
    beta, classify, gamma, gamma_undirected, index, is_complete, orbit_profile, orbit_signature, r_b,
    source_path_radius_w, verify_orbit_laws, Classification, ModuleClass, Orbit, OrbitReport, OrbitSignature,
    OrbitStep, RbVariant, Verification,
};
pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar};
pub use rep::{
    are_isomorphic, direct_sum, end_algebra, hom_basis, is_indecomposable, quotient_by_image, simple,
    DimensionVector, IsoSearch, Morphism, Representation,
};
pub use shift::{classify_fate, injective, projective, shift_power, sigma, sigma_minus, tau, SigmaFate};
pub use tree::{Center, FiniteSubtree, Orientation, VertexAddress};
