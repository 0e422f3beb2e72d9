//! Independent oracles shared by the integration tests and the acceptance
//! runner: a sparse multivariate polynomial ring over the rationals, the
//! symbolic model identities expanded in it, and a conic-fitting solver.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use quivermod_core::field::Rationals;
use quivermod_core::linalg::nullspace;
use quivermod_core::models::Mat2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Polynomial with rational coefficients; monomials are exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(e, BigRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        let mut out = Poly::zero(self.nvars);
        if !c.is_zero() {
            for (m, x) in &self.terms {
                out.terms.insert(m.clone(), x * c);
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (m, c)| {
            let mono = m
                .iter()
                .zip(point)
                .fold(BigRational::one(), |t, (&e, x)| t * num_traits::pow(x.clone(), e as usize));
            acc + c * mono
        })
    }

    fn add_term(&mut self, m: Vec<u32>, c: BigRational) {
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m: Vec<u32> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                *acc.entry(m).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Poly { nvars: self.nvars, terms: acc }
    }
}

/// A 2×2 matrix of polynomials.
#[derive(Debug, Clone)]
pub struct PMat(pub [[Poly; 2]; 2]);

impl PMat {
    /// Entries are the variables `first..first+4`, row-major.
    pub fn generic(nvars: usize, first: usize) -> Self {
        PMat([
            [Poly::var(nvars, first), Poly::var(nvars, first + 1)],
            [Poly::var(nvars, first + 2), Poly::var(nvars, first + 3)],
        ])
    }

    pub fn trace(&self) -> Poly {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn det(&self) -> Poly {
        &(&self.0[0][0] * &self.0[1][1]) - &(&self.0[0][1] * &self.0[1][0])
    }

    pub fn mul(&self, o: &PMat) -> PMat {
        let e = |i: usize, j: usize| &(&self.0[i][0] * &o.0[0][j]) + &(&self.0[i][1] * &o.0[1][j]);
        PMat([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn traceless(&self) -> PMat {
        let half = self.trace().scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
        let mut m = self.clone();
        m.0[0][0] = &m.0[0][0] - &half;
        m.0[1][1] = &m.0[1][1] - &half;
        m
    }

    pub fn apply(&self, v: &[Poly; 2]) -> [Poly; 2] {
        [
            &(&self.0[0][0] * &v[0]) + &(&self.0[0][1] * &v[1]),
            &(&self.0[1][0] * &v[0]) + &(&self.0[1][1] * &v[1]),
        ]
    }
}

pub fn pdet(u: &[Poly; 2], v: &[Poly; 2]) -> Poly {
    &(&u[0] * &v[1]) - &(&u[1] * &v[0])
}

/// `tr X tr Y - tr XY`.
fn ppolar(x: &PMat, y: &PMat) -> Poly {
    &(&x.trace() * &y.trace()) - &x.mul(y).trace()
}

pub struct SymbolicL2 {
    /// `(a, b, c, d, e)` and `(x, y, z)` as polynomials in the entries of
    /// `A` (vars 0..4), `B` (4..8) and `v` (8, 9).
    pub invariants: [Poly; 5],
    pub semiinvariants: [Poly; 3],
    /// `c x² + a z² - 2(y² + b x z)`.
    pub residual: Poly,
}

pub fn symbolic_l2() -> SymbolicL2 {
    let n = 10;
    let (a, b) = (PMat::generic(n, 0), PMat::generic(n, 4));
    let v = [Poly::var(n, 8), Poly::var(n, 9)];
    let (a0, b0) = (a.traceless(), b.traceless());
    let inv = [a0.mul(&a0).trace(), a0.mul(&b0).trace(), b0.mul(&b0).trace(), a.trace(), b.trace()];
    let x = pdet(&v, &a.apply(&v));
    let y = pdet(&a0.apply(&v), &b0.apply(&v));
    let z = pdet(&v, &b.apply(&v));
    let two = Poly::constant(n, BigRational::from_integer(2.into()));
    let lhs = &(&inv[2] * &(&x * &x)) + &(&inv[0] * &(&z * &z));
    let rhs = &two * &(&(&y * &y) + &(&inv[1] * &(&x * &z)));
    SymbolicL2 { residual: &lhs - &rhs, invariants: inv, semiinvariants: [x, y, z] }
}

pub struct SymbolicK3 {
    /// `(a, ..., f)` and `(x, y, z)` in the entries of `A` (0..4), `B`
    /// (4..8), `C` (8..12) and `v` (12, 13).
    pub coeffs: [Poly; 6],
    pub semiinvariants: [Poly; 3],
}

pub fn symbolic_k3() -> SymbolicK3 {
    let n = 14;
    let (a, b, c) = (PMat::generic(n, 0), PMat::generic(n, 4), PMat::generic(n, 8));
    let v = [Poly::var(n, 12), Poly::var(n, 13)];
    let coeffs = [a.det(), ppolar(&a, &b), ppolar(&a, &c), b.det(), ppolar(&b, &c), c.det()];
    let (av, bv, cv) = (a.apply(&v), b.apply(&v), c.apply(&v));
    SymbolicK3 { coeffs, semiinvariants: [pdet(&av, &bv), pdet(&av, &cv), pdet(&bv, &cv)] }
}

/// `Σ kᵢ mᵢ(x, y, z)` with monomials `x², xy, xz, y², yz, z²`.
pub fn conic_poly(k: &[Poly; 6], p: &[Poly; 3]) -> Poly {
    let [x, y, z] = p;
    let mons = [x * x, x * y, x * z, y * y, y * z, z * z];
    k.iter().zip(&mons).fold(Poly::zero(x.nvars), |acc, (c, m)| &acc + &(c * m))
}

/// Coefficient vectors of all conics through `points` (a basis of the
/// solution space of the 6-column monomial system).
pub fn fit_conic(points: &[[BigRational; 3]]) -> Vec<Vec<BigRational>> {
    let rows: Vec<Vec<BigRational>> = points
        .iter()
        .map(|[x, y, z]| vec![x * x, x * y, x * z, y * y, y * z, z * z])
        .collect();
    nullspace(&Rationals, &rows, 6)
}

/// True when `u = λ v` for some nonzero rational `λ`.
pub fn proportional(u: &[BigRational], v: &[BigRational]) -> bool {
    let Some(k) = v.iter().position(|x| !x.is_zero()) else {
        return u.iter().all(Zero::is_zero);
    };
    if u[k].is_zero() {
        return false;
    }
    let lambda = &u[k] / &v[k];
    u.iter().zip(v).all(|(a, b)| *a == &lambda * b)
}

/// `(σ₀ p_{π0}, σ₁ p_{π1}, σ₂ p_{π2})` for all 48 signed permutations.
pub fn signed_permuted_points(p: &[Poly; 3]) -> Vec<[Poly; 3]> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    for perm in perms {
        for signs in 0..8u32 {
            out.push(std::array::from_fn(|i| {
                if signs >> i & 1 == 1 {
                    -&p[perm[i]]
                } else {
                    p[perm[i]].clone()
                }
            }));
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_mat(rng: &mut ChaCha8Rng, bound: i64) -> Mat2 {
    let mut e = || rng.random_range(-bound..=bound);
    Mat2::from_i64([[e(), e()], [e(), e()]])
}

pub fn random_vec(rng: &mut ChaCha8Rng, bound: i64) -> [BigRational; 2] {
    [
        BigRational::from_integer(rng.random_range(-bound..=bound).into()),
        BigRational::from_integer(rng.random_range(-bound..=bound).into()),
    ]
}

pub fn mat_entries(m: &Mat2) -> Vec<BigRational> {
    m.entries().into_iter().cloned().collect()
}
