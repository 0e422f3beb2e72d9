//! Explicit coordinates for the two exceptional moduli spaces: pairs of
//! 2×2 matrices (`L_2`, `d = 2`, an open subset of `A⁵`) and triples
//! (`K_3`, `d = (2, 2)`, an open subset of `P⁵`), with the conic fibers of
//! their framed projective bundles.

mod burnside;
mod conic;
mod k3;
mod l2;
mod mat2;

pub use burnside::burnside_dimension;
pub use conic::ConicFiber;
pub use k3::{
    binary_form, k3_conic, k3_destabilizer, k3_invariants, k3_is_stable, k3_semiinvariants, poly_gcd, Destabilizer,
    K3Point,
};
pub use l2::{l2_conic, l2_invariants, l2_is_stable, l2_semiinvariants, L2Point};
pub use mat2::{det_columns, parse_vec2, vec2_from_i64, Mat2, Vec2};
