use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linalg::rank;
use crate::rational::format_rational;

use super::algebra::Algebra;
use super::clifford::build_clifford;
use super::diagonal::diagonalize;
use super::form::QuadraticFormB;
use super::hilbert::{hilbert_symbols, HilbertSymbolEvaluation};

/// `(u, v)`: basis `1, i, j, k` with `i² = u`, `j² = v`, `ij = -ji = k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuaternionAlgebra {
    pub u: BigRational,
    pub v: BigRational,
}

impl QuaternionAlgebra {
    pub fn new(u: BigRational, v: BigRational) -> Result<Self> {
        if u.is_zero() || v.is_zero() {
            return Err(Error::domain("quaternion parameters must be nonzero"));
        }
        Ok(QuaternionAlgebra { u, v })
    }

    pub fn structure_constants(&self) -> Algebra<Rationals> {
        let (u, v) = (&self.u, &self.v);
        let uv = u * v;
        let z = BigRational::zero;
        let e = |k: usize, c: BigRational| {
            let mut out = vec![z(), z(), z(), z()];
            out[k] = c;
            out
        };
        let one = BigRational::from_integer(1.into());
        // rows: 1, i, j, k
        let table = vec![
            vec![e(0, one.clone()), e(1, one.clone()), e(2, one.clone()), e(3, one.clone())],
            vec![e(1, one.clone()), e(0, u.clone()), e(3, one.clone()), e(2, u.clone())],
            vec![e(2, one.clone()), e(3, -one.clone()), e(0, v.clone()), e(1, -v.clone())],
            vec![e(3, one.clone()), e(2, -u.clone()), e(1, v.clone()), e(0, -uv)],
        ];
        Algebra::new(Rationals, table).expect("4×4×4 table")
    }

    pub fn hilbert_symbols(&self) -> Vec<HilbertSymbolEvaluation> {
        hilbert_symbols(&self.u, &self.v).expect("parameters are nonzero")
    }

    /// Split iff every local symbol is `+1`.
    pub fn is_split(&self) -> bool {
        self.hilbert_symbols().iter().all(|e| e.value == 1)
    }
}

impl fmt::Display for QuaternionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}", format_rational(&self.u), format_rational(&self.v))
    }
}

pub fn quaternion_is_split(alg: &QuaternionAlgebra) -> bool {
    alg.is_split()
}

/// The even Clifford algebra of a smooth ternary form as a quaternion
/// algebra. With `q ≅ ⟨α, β, γ⟩` on an orthogonal basis `ê₀, ê₁, ê₂`, the
/// elements `i = ê₀ê₁`, `j = ê₁ê₂` satisfy `i² = -αβ`, `j² = -βγ`,
/// `ij = -ji`. The result is checked against the structure constants of the
/// even part in the original basis.
pub fn quaternion_from_ternary(q: &QuadraticFormB<Rationals>) -> Result<QuaternionAlgebra> {
    if q.variables() != 3 {
        return Err(Error::domain(format!("expected a ternary form, found {} variables", q.variables())));
    }
    if !q.is_smooth_quadric() {
        return Err(Error::domain("ternary form is degenerate"));
    }
    let d = diagonalize(q)?;
    let [a, b, c] = [&d.values[0], &d.values[1], &d.values[2]];
    let alg = QuaternionAlgebra::new(-(a * b), -(b * c))?;

    let cl = build_clifford(q)?;
    let f = Rationals;
    let hat: Vec<Vec<BigRational>> = d.basis.iter().map(|p| cl.vector(p)).collect();
    let i = cl.algebra.mul(&hat[0], &hat[1]);
    let j = cl.algebra.mul(&hat[1], &hat[2]);
    let k = cl.algebra.mul(&i, &j);
    let scalar = |s: &BigRational| {
        let mut v = vec![f.zero(); cl.dimension()];
        v[0] = s.clone();
        v
    };
    let ji = cl.algebra.mul(&j, &i);
    let checks = cl.algebra.mul(&i, &i) == scalar(&alg.u)
        && cl.algebra.mul(&j, &j) == scalar(&alg.v)
        && k.iter().zip(&ji).all(|(x, y)| (x + y).is_zero());
    let span: Option<Vec<Vec<BigRational>>> = [scalar(&f.one()), i, j, k].iter().map(|x| cl.to_even(x)).collect();
    match span {
        Some(rows) if checks && rank(&f, &rows) == 4 => Ok(alg),
        _ => Err(Error::Contradiction(
            "quaternion generators do not reproduce the even Clifford algebra".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn diag(v: [i64; 3]) -> QuadraticFormB<Rationals> {
        QuadraticFormB::diagonal(Rationals, v.iter().map(|&x| rat(x)).collect()).unwrap()
    }

    #[test]
    fn structure_constants_are_associative() {
        let q = QuaternionAlgebra::new(rat(2), rat(-3)).unwrap();
        let a = q.structure_constants();
        assert_eq!(a.basis_product(3, 3), &[rat(6), rat(0), rat(0), rat(0)]);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    assert!(a.is_associative_on(i, j, k));
                }
            }
        }
        assert!(a.is_azumaya_over_field().unwrap());
    }

    #[test]
    fn ternary_examples() {
        let q = quaternion_from_ternary(&diag([1, 1, 1])).unwrap();
        assert_eq!((q.u.clone(), q.v.clone()), (rat(-1), rat(-1)));
        assert!(!q.is_split());
        let q = quaternion_from_ternary(&diag([1, 1, -1])).unwrap();
        assert!(q.is_split());
        assert!(quaternion_from_ternary(&diag([1, 1, 0])).is_err());
        let q = quaternion_from_ternary(&QuadraticFormB::standard(Rationals, 1)).unwrap();
        assert!(q.is_split());
    }

    #[test]
    fn split_examples() {
        assert!(QuaternionAlgebra::new(rat(1), rat(1)).unwrap().is_split());
        assert!(!QuaternionAlgebra::new(rat(-1), rat(-1)).unwrap().is_split());
        assert!(QuaternionAlgebra::new(rat(0), rat(1)).is_err());
    }
}
