//! Formal direct sums of `K_{q-r}` and `N^iK_{q-r}` with ray-indexed families,
//! and the decomposition formulas for `K`-groups of polynomial and Laurent
//! polynomial rings built from them. Atoms are never evaluated.

mod expr;
mod lpoly;
mod rays;
mod render;
mod wreath;

pub use expr::{
    davis_laurent, fundamental_theorem, nk_power, orthant_family, polynomial_decomposition, Atom, FormalGroupExpr,
    InnerTerm, TermJson,
};
pub use lpoly::{LPoly, MAX_RANK};
pub use rays::{lattice_rays, positive_orthant_rays, RaySet};
pub use render::{render, Degree, Renderer, Style};
pub use wreath::{
    enumerate_orbit, orbit_patterns, ray_set_pattern, symmetric_orbit, wreath_orbit, OrbitData, SignedPermutation,
    MAX_ENUMERATED_RANK, MAX_ORBIT_RANK,
};
