//! Pairs of 2×2 matrices up to simultaneous conjugation.
//!
//! With `A' = A - (tr A / 2) I`, the invariants are
//! `a = tr A'², b = tr A'B', c = tr B'², d = tr A, e = tr B` and the pair is
//! stable iff `h = b² - ac ≠ 0`. The semiinvariants
//! `x = det(v|Av)`, `y = det(A'v|B'v)`, `z = det(v|Bv)` of a framed pair
//! satisfy `c x² + a z² = 2 (y² + b x z)` identically.

use num_rational::BigRational;
use num_traits::Zero;

use super::conic::ConicFiber;
use super::mat2::{det_columns, Mat2, Vec2};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct L2Point {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
    pub e: BigRational,
    pub h: BigRational,
}

impl L2Point {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational, e: BigRational) -> Self {
        let h = &b * &b - &a * &c;
        L2Point { a, b, c, d, e, h }
    }

    pub fn is_stable(&self) -> bool {
        !self.h.is_zero()
    }

    pub fn coordinates(&self) -> [&BigRational; 5] {
        [&self.a, &self.b, &self.c, &self.d, &self.e]
    }
}

pub fn l2_invariants(a: &Mat2, b: &Mat2) -> L2Point {
    let (a0, b0) = (a.traceless_part(), b.traceless_part());
    L2Point::new(
        a0.mul(&a0).trace(),
        a0.mul(&b0).trace(),
        b0.mul(&b0).trace(),
        a.trace(),
        b.trace(),
    )
}

pub fn l2_is_stable(a: &Mat2, b: &Mat2) -> bool {
    l2_invariants(a, b).is_stable()
}

pub fn l2_semiinvariants(a: &Mat2, b: &Mat2, v: &Vec2) -> [BigRational; 3] {
    let (a0, b0) = (a.traceless_part(), b.traceless_part());
    [
        det_columns(v, &a.apply(v)),
        det_columns(&a0.apply(v), &b0.apply(v)),
        det_columns(v, &b.apply(v)),
    ]
}

/// `c x² + a z² - 2 y² - 2 b x z`; its symmetric matrix has determinant `2h`.
pub fn l2_conic(p: &L2Point) -> ConicFiber {
    let z = BigRational::zero;
    let two = BigRational::from_integer(2.into());
    ConicFiber::new([p.c.clone(), z(), -&two * &p.b, -two, z(), p.a.clone()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::burnside_dimension;
    use crate::models::mat2::vec2_from_i64;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn m(e: [i64; 4]) -> Mat2 {
        Mat2::from_i64([[e[0], e[1]], [e[2], e[3]]])
    }

    #[test]
    fn invariant_examples() {
        let (e12, e21) = (Mat2::unit(0, 1), Mat2::unit(1, 0));
        let p = l2_invariants(&e12, &e21);
        assert_eq!(p, L2Point::new(rat(0), rat(1), rat(0), rat(0), rat(0)));
        assert_eq!(p.h, rat(1));
        assert!(l2_is_stable(&e12, &e21));
        let p = l2_invariants(&Mat2::zero(), &Mat2::zero());
        assert!(p.coordinates().iter().all(|x| x.is_zero()) && !p.is_stable());
        let p = l2_invariants(&Mat2::identity(), &Mat2::identity());
        assert_eq!(p, L2Point::new(rat(0), rat(0), rat(0), rat(2), rat(2)));
        assert!(!l2_is_stable(&m([1, 2, 0, 3]), &m([-1, 5, 0, 7])));
    }

    #[test]
    fn semiinvariant_examples() {
        let (e12, e21) = (Mat2::unit(0, 1), Mat2::unit(1, 0));
        let s = l2_semiinvariants(&e12, &e21, &vec2_from_i64([1, 0]));
        assert_eq!(s, [rat(0), rat(0), rat(1)]);
        let s = l2_semiinvariants(&e12, &e21, &vec2_from_i64([0, 0]));
        assert!(s.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn conic_examples() {
        let c = l2_conic(&L2Point::new(rat(0), rat(1), rat(0), rat(0), rat(0)));
        assert_eq!(c.coeffs, [rat(0), rat(0), rat(-2), rat(-2), rat(0), rat(0)]);
        assert!(c.evaluate(&rat(1), &rat(0), &rat(0)).is_zero());
        let c = l2_conic(&L2Point::new(rat(-1), rat(0), rat(-1), rat(0), rat(0)));
        assert_eq!(c.coeffs, [rat(-1), rat(0), rat(0), rat(-2), rat(0), rat(-1)]);
        let c = l2_conic(&L2Point::new(rat(1), rat(1), rat(1), rat(0), rat(0)));
        assert!(c.determinant().is_zero());
    }

    #[test]
    fn stability_agrees_with_burnside_on_ternary_grid() {
        for code in 0..3i64.pow(8) {
            let mut e = [0i64; 8];
            let mut c = code;
            for x in e.iter_mut() {
                *x = c % 3 - 1;
                c /= 3;
            }
            let (a, b) = (m([e[0], e[1], e[2], e[3]]), m([e[4], e[5], e[6], e[7]]));
            assert_eq!(l2_is_stable(&a, &b), burnside_dimension(&[a.clone(), b.clone()]) == 4, "{a} {b}");
        }
    }

    fn entry() -> impl Strategy<Value = i64> {
        -10i64..=10
    }

    proptest! {
        #[test]
        fn conic_identity_holds(e in proptest::array::uniform10(entry()), v in proptest::array::uniform2(entry())) {
            let (a, b) = (m([e[0], e[1], e[2], e[3]]), m([e[4], e[5], e[6], e[7]]));
            let p = l2_invariants(&a, &b);
            let [x, y, z] = l2_semiinvariants(&a, &b, &vec2_from_i64(v));
            prop_assert!(l2_conic(&p).evaluate(&x, &y, &z).is_zero());
            prop_assert_eq!(l2_conic(&p).determinant(), &p.h * rat(2));
        }

        #[test]
        fn invariants_are_conjugation_invariant(e in proptest::array::uniform8(entry()), g in proptest::array::uniform4(entry())) {
            let g = m(g);
            prop_assume!(!g.det().is_zero());
            let gi = g.inverse().unwrap();
            let (a, b) = (m([e[0], e[1], e[2], e[3]]), m([e[4], e[5], e[6], e[7]]));
            let conj = |x: &Mat2| g.mul(x).mul(&gi);
            prop_assert_eq!(l2_invariants(&a, &b), l2_invariants(&conj(&a), &conj(&b)));
        }
    }
}
