//! Quadratic forms in b-matrix convention, Clifford algebras and their
//! Azumaya property, quaternion algebras with their local invariants, and
//! rational points on conics.

mod algebra;
mod clifford;
mod diagonal;
mod form;
mod hilbert;
mod points;
mod quaternion;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::models::{k3_conic, l2_conic, ConicFiber, K3Point, L2Point};

pub use algebra::{Algebra, MAX_AZUMAYA_DIMENSION};
pub use clifford::{build_clifford, CliffordAlgebra, MAX_CLIFFORD_VARIABLES};
pub use diagonal::{diagonalize, Diagonalization};
pub use form::QuadraticFormB;
pub use hilbert::{bad_places, hilbert_symbol, hilbert_symbols, HilbertSymbolEvaluation, Place};
pub use points::{
    conic_form, conic_has_rational_point, holzer_bounds, holzer_search, legendre_form, ConicPoint, LegendreForm,
    MAX_SEARCH_PAIRS,
};
pub use quaternion::{quaternion_from_ternary, quaternion_is_split, QuaternionAlgebra};

/// `standard_form(n)` over `field`; see [`QuadraticFormB::standard`].
pub fn standard_form<F: crate::field::Field>(field: F, n: usize) -> QuadraticFormB<F> {
    QuadraticFormB::standard(field, n)
}

pub fn is_smooth_quadric<F: crate::field::Field>(q: &QuadraticFormB<F>) -> bool {
    q.is_smooth_quadric()
}

pub fn is_azumaya_over_field<F: crate::field::Field>(alg: &Algebra<F>) -> Result<bool> {
    alg.is_azumaya_over_field()
}

/// `C(x, k)` with `C(x, k) = 0` for `x < k`, negative `x` included.
fn binomial(x: i64, k: u64) -> BigInt {
    if x < k as i64 {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(x - i as i64) / BigInt::from(i + 1))
}

/// `C(t+n+1, n+1) - C(t+n-1, n+1)`: the number of degree-`t` forms on a
/// quadric of dimension `n`, zero for `t < 0`.
pub fn hilbert_polynomial_quadric(n: u64, t: i64) -> BigInt {
    let n_i = n as i64;
    binomial(t + n_i + 1, n + 1) - binomial(t + n_i - 1, n + 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelPoint {
    L2(L2Point),
    K3(K3Point),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordInvariant {
    pub conic: ConicFiber,
    pub quaternion: QuaternionAlgebra,
    pub split: bool,
}

/// The even Clifford algebra of the conic fiber over a stable model point.
pub fn clifford_invariant_of_model_point(p: &ModelPoint) -> Result<CliffordInvariant> {
    let conic = match p {
        ModelPoint::L2(p) if p.is_stable() => l2_conic(p),
        ModelPoint::K3(p) if p.is_stable() => k3_conic(p)?,
        _ => return Err(Error::domain("model point is not stable (h = 0)")),
    };
    let quaternion = quaternion_from_ternary(&conic_form(&conic))?;
    let split = quaternion.is_split();
    Ok(CliffordInvariant { conic, quaternion, split })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{k3_invariants, Mat2};
    use crate::rational::rat;

    #[test]
    fn hilbert_polynomial_values() {
        for t in 0..=10 {
            assert_eq!(hilbert_polynomial_quadric(1, t), BigInt::from(2 * t + 1));
        }
        for t in 1..=10 {
            assert_eq!(hilbert_polynomial_quadric(0, t), BigInt::from(2));
        }
        for n in 0..=5 {
            assert_eq!(hilbert_polynomial_quadric(n, 0), BigInt::one());
            assert_eq!(hilbert_polynomial_quadric(n, -1), BigInt::zero());
        }
        // a quadric surface: (t+1)²
        assert_eq!(hilbert_polynomial_quadric(2, 4), BigInt::from(25));
    }

    #[test]
    fn model_point_invariants() {
        let p = ModelPoint::L2(L2Point::new(rat(-1), rat(0), rat(-1), rat(0), rat(0)));
        let inv = clifford_invariant_of_model_point(&p).unwrap();
        assert!(!inv.split);
        assert!(!conic_has_rational_point(&inv.conic).unwrap().solvable);
        let p = ModelPoint::L2(L2Point::new(rat(0), rat(1), rat(0), rat(0), rat(0)));
        assert!(clifford_invariant_of_model_point(&p).unwrap().split);
        let p = ModelPoint::L2(L2Point::new(rat(1), rat(1), rat(1), rat(0), rat(0)));
        assert!(clifford_invariant_of_model_point(&p).is_err());

        let k = k3_invariants(
            &Mat2::identity(),
            &Mat2::from_i64([[0, -1], [1, 0]]),
            &Mat2::from_i64([[0, 1], [1, 0]]),
        );
        let inv = clifford_invariant_of_model_point(&ModelPoint::K3(k)).unwrap();
        assert_eq!(inv.split, conic_has_rational_point(&inv.conic).unwrap().solvable);
    }
}
