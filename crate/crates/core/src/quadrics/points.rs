//! Rational points on conics: local solvability through Hilbert symbols,
//! with witnesses found by search inside Holzer's bound on the Legendre
//! form `a x² + b y² + c z² = 0` (`a, b, c` squarefree, pairwise coprime).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::models::ConicFiber;
use crate::rational::primitive_integer_vector;

use super::diagonal::diagonalize;
use super::form::QuadraticFormB;
use super::quaternion::QuaternionAlgebra;

/// Upper limit on the number of pairs visited by [`holzer_search`].
pub const MAX_SEARCH_PAIRS: u64 = 50_000_000;

/// The b-matrix form of a conic: squares on the diagonal, cross-term
/// coefficients off the diagonal.
pub fn conic_form(c: &ConicFiber) -> QuadraticFormB<Rationals> {
    let k = &c.coeffs;
    let b = vec![
        vec![k[0].clone(), k[1].clone(), k[2].clone()],
        vec![k[1].clone(), k[3].clone(), k[4].clone()],
        vec![k[2].clone(), k[4].clone(), k[5].clone()],
    ];
    QuadraticFormB::new(Rationals, b).expect("symmetric by construction")
}

/// `a x² + b y² + c z²` with squarefree, pairwise coprime integer
/// coefficients, together with `scale` such that a solution `w` of it gives
/// the solution `(wₖ · scaleₖ)` of the diagonal form it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendreForm {
    pub coeffs: [BigInt; 3],
    pub scale: [BigRational; 3],
}

/// `n = s² m` with `m` squarefree; returns `(s, m)`.
fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    let mag = n.magnitude();
    if mag <= &num_bigint::BigUint::one() {
        return (BigInt::one(), n.clone());
    }
    let mut s = BigInt::one();
    let mut m = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    for (p, e) in num_prime::nt_funcs::factorize(mag.clone()) {
        let p = BigInt::from(p);
        s *= p.pow((e / 2) as u32);
        if e % 2 == 1 {
            m *= p;
        }
    }
    (s, m)
}

pub fn legendre_form(values: &[BigRational; 3]) -> Result<LegendreForm> {
    if values.iter().any(Zero::is_zero) {
        return Err(Error::domain("diagonal form is degenerate"));
    }
    let den = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut coeffs: [BigInt; 3] = std::array::from_fn(|k| (&values[k] * BigRational::from_integer(den.clone())).to_integer());
    let mut scale: [BigRational; 3] = std::array::from_fn(|_| BigRational::one());
    loop {
        let mut changed = false;
        for k in 0..3 {
            let (s, m) = squarefree_split(&coeffs[k]);
            if !s.is_one() {
                coeffs[k] = m;
                scale[k] /= BigRational::from_integer(s);
                changed = true;
            }
        }
        for (i, j, l) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let g = coeffs[i].gcd(&coeffs[j]);
            if !g.is_one() {
                coeffs[i] /= &g;
                coeffs[j] /= &g;
                coeffs[l] *= &g;
                let gq = BigRational::from_integer(g);
                scale[i] /= &gq;
                scale[j] /= &gq;
                changed = true;
            }
        }
        if !changed {
            return Ok(LegendreForm { coeffs, scale });
        }
    }
}

/// Holzer's bounds `(√|bc|, √|ac|, √|ab|)`.
pub fn holzer_bounds(coeffs: &[BigInt; 3]) -> [BigInt; 3] {
    let [a, b, c] = coeffs;
    [(b * c).abs().sqrt(), (a * c).abs().sqrt(), (a * b).abs().sqrt()]
}

/// A nontrivial solution of `a x² + b y² + c z² = 0` within Holzer's bound,
/// or `None` when none exists there. The two variables with the smallest
/// bounds are enumerated and the third is solved for.
pub fn holzer_search(coeffs: &[BigInt; 3]) -> Result<Option<[BigInt; 3]>> {
    if coeffs.iter().any(Zero::is_zero) {
        return Err(Error::domain("Legendre coefficients must be nonzero"));
    }
    let bounds = holzer_bounds(coeffs);
    let solved = (0..3).max_by_key(|&k| bounds[k].clone()).expect("three bounds");
    let (i, j) = match solved {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let (bi, bj) = (
        bounds[i].to_u64().ok_or_else(|| Error::Capacity("search bound too large".into()))?,
        bounds[j].to_u64().ok_or_else(|| Error::Capacity("search bound too large".into()))?,
    );
    if (bi + 1).saturating_mul(bj + 1) > MAX_SEARCH_PAIRS {
        return Err(Error::Capacity(format!("Holzer search over {}×{} pairs", bi + 1, bj + 1)));
    }
    for x in 0..=bi {
        for y in 0..=bj {
            if x == 0 && y == 0 {
                continue;
            }
            let (xb, yb) = (BigInt::from(x), BigInt::from(y));
            let rest = &coeffs[i] * &xb * &xb + &coeffs[j] * &yb * &yb;
            let target = -rest;
            if !(&target % &coeffs[solved]).is_zero() {
                continue;
            }
            let sq = &target / &coeffs[solved];
            if sq.is_negative() {
                continue;
            }
            let w = sq.sqrt();
            if &w * &w == sq {
                let mut out: [BigInt; 3] = std::array::from_fn(|_| BigInt::zero());
                out[i] = xb;
                out[j] = yb;
                out[solved] = w;
                return Ok(Some(out));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicPoint {
    pub solvable: bool,
    /// Primitive integer point on the original conic.
    pub witness: Option<[BigInt; 3]>,
    /// The quaternion algebra split exactly when the conic has a point.
    pub quaternion: QuaternionAlgebra,
    pub legendre: LegendreForm,
}

/// Decides whether a nondegenerate conic has a rational point and finds
/// one when it does. The local decision and the bounded search must agree;
/// disagreement is reported as [`Error::Contradiction`].
pub fn conic_has_rational_point(c: &ConicFiber) -> Result<ConicPoint> {
    let q = conic_form(c);
    if !q.is_smooth_quadric() {
        return Err(Error::domain("conic is degenerate"));
    }
    let d = diagonalize(&q)?;
    let [a, b, g] = [&d.values[0], &d.values[1], &d.values[2]];
    let quaternion = QuaternionAlgebra::new(-(a * g), -(b * g))?;
    let solvable = quaternion.is_split();
    let legendre = legendre_form(&[a.clone(), b.clone(), g.clone()])?;
    let found = holzer_search(&legendre.coeffs)?;
    let witness = match (solvable, found) {
        (true, Some(w)) => {
            let y: Vec<BigRational> = (0..3)
                .map(|k| BigRational::from_integer(w[k].clone()) * &legendre.scale[k])
                .collect();
            let v = d.to_original(&Rationals, &y);
            let prim = primitive_integer_vector(&v);
            let as_rat: Vec<BigRational> = prim.iter().cloned().map(BigRational::from_integer).collect();
            if !c.evaluate(&as_rat[0], &as_rat[1], &as_rat[2]).is_zero() {
                return Err(Error::Contradiction("mapped witness is not on the conic".into()));
            }
            Some([prim[0].clone(), prim[1].clone(), prim[2].clone()])
        }
        (false, None) => None,
        (true, None) => {
            return Err(Error::Contradiction(
                "locally solvable conic without a point inside Holzer's bound".into(),
            ))
        }
        (false, Some(_)) => {
            return Err(Error::Contradiction("point found on a locally insoluble conic".into()));
        }
    };
    Ok(ConicPoint { solvable, witness, quaternion, legendre })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn conic(k: [i64; 6]) -> ConicFiber {
        ConicFiber::new(k.map(rat))
    }

    #[test]
    fn examples() {
        let p = conic_has_rational_point(&conic([0, 0, -2, -2, 0, 0])).unwrap();
        assert!(p.solvable);
        let w = p.witness.unwrap();
        assert!(w[1].is_zero() && (w[0].is_zero() ^ w[2].is_zero()));
        assert!(!conic_has_rational_point(&conic([-1, 0, 0, -2, 0, -1])).unwrap().solvable);
        let p = conic_has_rational_point(&conic([1, 0, 0, 1, 0, -3])).unwrap();
        assert!(!p.solvable && p.witness.is_none());
        assert!(conic_has_rational_point(&conic([1, 0, 0, 1, 0, -2])).unwrap().solvable);
        assert!(conic_has_rational_point(&conic([1, 0, 0, 1, 0, 0])).is_err());
    }

    #[test]
    fn legendre_reduction() {
        let l = legendre_form(&[rat(12), rat(18), rat(-5)]).unwrap();
        let [a, b, c] = &l.coeffs;
        assert!(a.gcd(b).is_one() && a.gcd(c).is_one() && b.gcd(c).is_one());
        for k in &l.coeffs {
            assert!(squarefree_split(k).0.is_one());
        }
    }

    #[test]
    fn holzer_search_examples() {
        let i = |x: i64| BigInt::from(x);
        assert!(holzer_search(&[i(1), i(1), i(-3)]).unwrap().is_none());
        let w = holzer_search(&[i(2), i(3), i(-5)]).unwrap().unwrap();
        assert_eq!(i(2) * &w[0] * &w[0] + i(3) * &w[1] * &w[1], i(5) * &w[2] * &w[2]);
    }

    proptest! {
        #[test]
        fn decision_agrees_with_search(k in proptest::array::uniform6(-6i64..=6)) {
            let c = conic(k);
            prop_assume!(conic_form(&c).is_smooth_quadric());
            // contradictions surface as errors
            let p = conic_has_rational_point(&c).unwrap();
            prop_assert_eq!(p.solvable, p.witness.is_some());
        }
    }
}
