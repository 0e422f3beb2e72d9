//! Triples of 2×2 matrices, i.e. representations of `K_3` at `(2, 2)`,
//! up to the action of `GL₂ × GL₂`.
//!
//! The point of `P⁵` attached to `(A, B, C)` is the quadratic form
//! `det(αA + βB + γC) = aα² + bαβ + cαγ + dβ² + eβγ + fγ²`, and the triple
//! is stable for `Θ = (1, 0)` iff `h = 4adf + bce - c²d - ae² - b²f ≠ 0`,
//! which is twice the determinant of
//! `[[2a, b, c], [b, 2d, e], [c, e, 2f]]`.
//!
//! The semiinvariants `x = det(Av|Bv)`, `y = det(Av|Cv)`, `z = det(Bv|Cv)`
//! satisfy `z·Av - y·Bv + x·Cv = 0`, and the image of `v` lies on
//!
//! `f x² - e xy + c xz + d y² - b yz + a z² = 0`,
//!
//! i.e. the coefficient vector `(f, -e, c, d, -b, a)`. This is the pattern
//! `(f, -e, d, c, -b, a)` with the labels of the `αγ` and `β²` coefficients
//! exchanged. No signed permutation of `x, y, z` relates the two, since such
//! a permutation maps square monomials to square monomials while `c` labels
//! a cross term.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Rationals;
use crate::linalg::rank;

use super::conic::ConicFiber;
use super::mat2::{det_columns, Mat2, Vec2};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct K3Point {
    /// `(a, b, c, d, e, f)`.
    pub coeffs: [BigRational; 6],
    /// `h` of this representative; only its vanishing is scale-invariant.
    pub h: BigRational,
    /// All six coefficients vanish, so this is not a point of `P⁵`.
    pub degenerate: bool,
}

impl K3Point {
    pub fn new(coeffs: [BigRational; 6]) -> Self {
        let [a, b, c, d, e, f] = &coeffs;
        let four = BigRational::from_integer(4.into());
        let h = four * a * d * f + b * c * e - c * c * d - a * e * e - b * b * f;
        let degenerate = coeffs.iter().all(Zero::is_zero);
        K3Point { coeffs, h, degenerate }
    }

    pub fn is_stable(&self) -> bool {
        !self.h.is_zero()
    }

    /// `[[2a, b, c], [b, 2d, e], [c, e, 2f]]`, the polar form of the
    /// determinant quadratic form; its determinant is `2h`.
    pub fn symmetric_matrix(&self) -> Vec<Vec<BigRational>> {
        let [a, b, c, d, e, f] = &self.coeffs;
        let two = BigRational::from_integer(2.into());
        vec![
            vec![&two * a, b.clone(), c.clone()],
            vec![b.clone(), &two * d, e.clone()],
            vec![c.clone(), e.clone(), &two * f],
        ]
    }
}

/// `tr X · tr Y - tr XY`, the polarization of `det` on 2×2 matrices.
fn det_polar(x: &Mat2, y: &Mat2) -> BigRational {
    x.trace() * y.trace() - x.mul(y).trace()
}

pub fn k3_invariants(a: &Mat2, b: &Mat2, c: &Mat2) -> K3Point {
    K3Point::new([
        a.det(),
        det_polar(a, b),
        det_polar(a, c),
        b.det(),
        det_polar(b, c),
        c.det(),
    ])
}

pub fn k3_is_stable(a: &Mat2, b: &Mat2, c: &Mat2) -> bool {
    k3_invariants(a, b, c).is_stable()
}

pub fn k3_semiinvariants(a: &Mat2, b: &Mat2, c: &Mat2, v: &Vec2) -> [BigRational; 3] {
    let (av, bv, cv) = (a.apply(v), b.apply(v), c.apply(v));
    [det_columns(&av, &bv), det_columns(&av, &cv), det_columns(&bv, &cv)]
}

/// The conic `(f, -e, c, d, -b, a)` containing the semiinvariant image.
/// Its symmetric matrix has determinant `h / 4`.
pub fn k3_conic(p: &K3Point) -> Result<ConicFiber> {
    if p.degenerate {
        return Err(Error::domain("all determinant coefficients vanish"));
    }
    let [a, b, c, d, e, f] = p.coeffs.clone();
    Ok(ConicFiber::new([f, -e, c, d, -b, a]))
}

/// A subrepresentation of dimension `(u1, u2)` with `u1 >= u2` that violates
/// stability for `Θ = (1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Destabilizer {
    /// `(2, 0)`: all three maps vanish.
    AllZero,
    /// `(1, 0)`: a common kernel vector.
    CommonKernel(Vec2),
    /// `(2, 1)`: all images lie in one line.
    CommonImageLine,
    /// `(1, 1)`: a line sent into a single line by all three maps, found as a
    /// common root of the three binary forms `det(Xv|Yv)`. The root may only
    /// exist over an extension, in which case the common factor is reported.
    CommonRoot { factor: Vec<BigRational> },
}

impl Destabilizer {
    pub fn dimension(&self) -> (u64, u64) {
        match self {
            Destabilizer::AllZero => (2, 0),
            Destabilizer::CommonKernel(_) => (1, 0),
            Destabilizer::CommonImageLine => (2, 1),
            Destabilizer::CommonRoot { .. } => (1, 1),
        }
    }
}

/// Coefficients `(p0, p1, p2)` of `det(Xv|Yv) = p0 s² + p1 st + p2 t²` for
/// `v = (s, t)`.
pub fn binary_form(x: &Mat2, y: &Mat2) -> [BigRational; 3] {
    let at = |s: i64, t: i64| {
        let v = [BigRational::from_integer(s.into()), BigRational::from_integer(t.into())];
        det_columns(&x.apply(&v), &y.apply(&v))
    };
    let (p0, p2, p11) = (at(1, 0), at(0, 1), at(1, 1));
    let p1 = &p11 - &p0 - &p2;
    [p0, p1, p2]
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Remainder of `a` modulo a nonzero `b`, coefficients low degree first.
fn poly_rem(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
    let lead = b.last().expect("nonzero divisor");
    while a.len() >= b.len() && !a.is_empty() {
        let shift = a.len() - b.len();
        let q = a.last().unwrap() / lead;
        for (i, bi) in b.iter().enumerate() {
            a[shift + i] -= &q * bi;
        }
        a = trim(a);
    }
    a
}

/// Monic gcd over the rationals; `[]` for the zero polynomial.
pub fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        a.iter_mut().for_each(|x| *x /= &lead);
    }
    a
}

/// Decides whether the binary quadratic forms share a projective root over
/// the algebraic closure. Returns the common factor (in `s/t`, low degree
/// first; `[0, 1]` stands for the root `(1 : 0)`) when they do.
fn common_projective_root(forms: &[[BigRational; 3]]) -> Option<Vec<BigRational>> {
    if forms.iter().all(|f| f[0].is_zero()) {
        return Some(vec![BigRational::zero(), BigRational::one()]);
    }
    // No common root at infinity; roots with t = 1 are roots of p2 + p1 s + p0 s²
    let mut g: Vec<BigRational> = Vec::new();
    for f in forms {
        g = poly_gcd(&g, &[f[2].clone(), f[1].clone(), f[0].clone()]);
    }
    (g.len() >= 2).then_some(g)
}

/// Searches the four destabilizing dimension types exactly, in the order
/// `(2, 0)`, `(1, 0)`, `(2, 1)`, `(1, 1)`.
pub fn k3_destabilizer(a: &Mat2, b: &Mat2, c: &Mat2) -> Option<Destabilizer> {
    let mats = [a, b, c];
    if mats.iter().all(|m| m.is_zero()) {
        return Some(Destabilizer::AllZero);
    }
    let stacked: Vec<Vec<BigRational>> = mats
        .iter()
        .flat_map(|m| m.0.iter().map(|row| row.to_vec()))
        .collect();
    if rank(&Rationals, &stacked) <= 1 {
        // the kernel of the stacked rows is defined over the rationals
        let v = crate::linalg::nullspace(&Rationals, &stacked, 2).into_iter().next()?;
        return Some(Destabilizer::CommonKernel([v[0].clone(), v[1].clone()]));
    }
    let concatenated: Vec<Vec<BigRational>> = (0..2)
        .map(|i| mats.iter().flat_map(|m| m.0[i].iter().cloned()).collect())
        .collect();
    if rank(&Rationals, &concatenated) <= 1 {
        return Some(Destabilizer::CommonImageLine);
    }
    let forms = [binary_form(a, b), binary_form(a, c), binary_form(b, c)];
    common_projective_root(&forms).map(|factor| Destabilizer::CommonRoot { factor })
}
