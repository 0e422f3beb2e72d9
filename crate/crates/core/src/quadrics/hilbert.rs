//! Local Hilbert symbols over the rationals.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Prime(BigUint),
    Real,
}

impl Place {
    pub fn prime(p: u64) -> Place {
        Place::Prime(BigUint::from(p))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Real => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSymbolEvaluation {
    pub place: Place,
    pub value: i8,
}

/// Integer in the same square class as `r`.
fn square_class_integer(r: &BigRational) -> BigInt {
    r.numer() * r.denom()
}

fn valuation(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    let mut n = n.clone();
    let mut k = 0;
    while (&n % p).is_zero() {
        n /= p;
        k += 1;
    }
    (k, n)
}

/// Legendre symbol `(a/p)` for an odd prime `p` not dividing `a`.
fn legendre(a: &BigInt, p: &BigInt) -> i8 {
    let e = (p - BigInt::one()) / 2u32;
    let r = a.mod_floor(p).modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

fn sign(parity: u64) -> i8 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The local symbol `(u, v)_place`.
pub fn hilbert_symbol(u: &BigRational, v: &BigRational, place: &Place) -> Result<i8> {
    if u.is_zero() || v.is_zero() {
        return Err(Error::domain("Hilbert symbol arguments must be nonzero"));
    }
    let (a, b) = (square_class_integer(u), square_class_integer(v));
    let p = match place {
        Place::Real => return Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 }),
        Place::Prime(p) => BigInt::from_biguint(Sign::Plus, p.clone()),
    };
    let (alpha, a1) = valuation(&a, &p);
    let (beta, b1) = valuation(&b, &p);
    let (alpha, beta) = (alpha as u64, beta as u64);
    if p == BigInt::from(2) {
        let m8 = |x: &BigInt| x.mod_floor(&BigInt::from(8)).to_u64().expect("small residue");
        let (x, y) = (m8(&a1), m8(&b1));
        let eps = |x: u64| ((x - 1) / 2) % 2;
        let omega = |x: u64| ((x * x - 1) / 8) % 2;
        return Ok(sign(eps(x) * eps(y) + alpha * omega(y) + beta * omega(x)));
    }
    let eps_p = ((&p - BigInt::one()) / 2u32).mod_floor(&BigInt::from(2)).to_u64().expect("parity");
    let mut s = sign(alpha * beta * eps_p);
    if beta % 2 == 1 {
        s *= legendre(&a1, &p);
    }
    if alpha % 2 == 1 {
        s *= legendre(&b1, &p);
    }
    Ok(s)
}

/// The real place, 2, and every prime dividing a numerator or denominator
/// of `u` or `v`; all other places give `+1`.
pub fn bad_places(u: &BigRational, v: &BigRational) -> Vec<Place> {
    let mut primes: BTreeSet<BigUint> = BTreeSet::new();
    primes.insert(BigUint::from(2u32));
    for x in [u.numer(), u.denom(), v.numer(), v.denom()] {
        let m = x.magnitude();
        if m > &BigUint::one() {
            primes.extend(num_prime::nt_funcs::factorize(m.clone()).into_keys());
        }
    }
    let mut out: Vec<Place> = primes.into_iter().map(Place::Prime).collect();
    out.push(Place::Real);
    out
}

pub fn hilbert_symbols(u: &BigRational, v: &BigRational) -> Result<Vec<HilbertSymbolEvaluation>> {
    bad_places(u, v)
        .into_iter()
        .map(|place| hilbert_symbol(u, v, &place).map(|value| HilbertSymbolEvaluation { place, value }))
        .collect()
}
