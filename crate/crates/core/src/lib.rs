//! Exact combinatorial invariants of quiver moduli spaces.
//!
//! * [`quiver`]: quivers, dimension vectors, stabilities, Euler form.
//! * [`stability`]: decompositions, the ample-stability criterion, HN types,
//!   Brauer-order predictions.
//! * [`kronecker`]: reflections and normalization for Kronecker quivers and the
//!   exhaustive loop/Kronecker criterion scans.
//! * [`models`]: the explicit coordinates for `L_2` at `d = 2` and `K_3` at
//!   `(2, 2)`, with their conic bundles.
//! * [`quadrics`]: quadratic forms in b-matrix convention, Clifford algebras,
//!   quaternion algebras, Hilbert symbols and rational points on conics.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod field;
pub mod kronecker;
pub mod linalg;
pub mod models;
pub mod quadrics;
pub mod quiver;
pub mod rational;
pub mod stability;

pub use error::{Error, Result};
pub use kronecker::{
    kronecker_criterion_exceptions, kronecker_dualize, kronecker_inequality_trace, kronecker_reflect_sink,
    kronecker_reflect_source, loop_criterion_exceptions, normalize_kronecker, InequalityTrace, KroneckerInstance,
    Move, Normalization, ScanConfig, ScanException, ScanResult,
};
pub use field::{Field, PrimeField, Rationals};
pub use quiver::{
    euler_form, framed_bundle_relative_dimension, gcd_of, linearization_weights, moduli_dimension, slope,
    DimensionVector, Quiver, Stability,
};
pub use stability::{
    check_ample_stability_criterion, enumerate_decompositions, fine_moduli_predicate, hn_codimension, hn_types,
    predict_brauer, strictly_semistable_wall_codim, AmpleStabilityReport, BrauerPrediction, Decomposition,
    FineModuli, HnType, PredictionStatus,
};
pub use models::{
    burnside_dimension, k3_conic, k3_destabilizer, k3_invariants, k3_is_stable, k3_semiinvariants, l2_conic,
    l2_invariants, l2_is_stable, l2_semiinvariants, ConicFiber, Destabilizer, K3Point, L2Point, Mat2,
};
pub use quadrics::{
    build_clifford, clifford_invariant_of_model_point, conic_has_rational_point, hilbert_polynomial_quadric,
    hilbert_symbol, quaternion_from_ternary, quaternion_is_split, standard_form, CliffordAlgebra, ModelPoint, Place,
    QuadraticFormB, QuaternionAlgebra,
};
