//! Quivers, dimension vectors and stabilities, with the elementary numerical
//! invariants: Euler form, slope, gcd, linearization weights, moduli and
//! framed-bundle dimensions.
//!
//! A quiver is stored as its arrow-multiplicity matrix. The text format is
//! line oriented:
//!
//! ```text
//! # the 3-arrow Kronecker quiver
//! vertices 2
//! arrow 0 1 3
//! ```
//!
//! Vertex indices are 0-based, unlisted pairs have multiplicity 0 and
//! repeated `arrow` lines for the same pair add up.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    arrows: Vec<Vec<u64>>,
}

impl Quiver {
    /// Builds a quiver from a square multiplicity matrix, `arrows[i][j]`
    /// being the number of arrows `i -> j`.
    pub fn new(arrows: Vec<Vec<u64>>) -> Result<Self> {
        let k = arrows.len();
        if k == 0 {
            return Err(Error::domain("a quiver needs at least one vertex"));
        }
        if let Some(row) = arrows.iter().find(|row| row.len() != k) {
            return Err(Error::SizeMismatch {
                expected: k,
                found: row.len(),
            });
        }
        Ok(Quiver { arrows })
    }

    /// `L_m`: one vertex carrying `m` loops.
    pub fn loop_quiver(m: u64) -> Self {
        Quiver {
            arrows: vec![vec![m]],
        }
    }

    /// `K_m`: vertices 0 and 1 with `m` arrows `0 -> 1`.
    pub fn kronecker(m: u64) -> Self {
        Quiver {
            arrows: vec![vec![0, m], vec![0, 0]],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self, i: usize, j: usize) -> u64 {
        self.arrows[i][j]
    }

    pub fn is_loop_quiver(&self, m: u64) -> bool {
        self.arrows == [[m]]
    }

    pub fn is_kronecker(&self, m: u64) -> bool {
        self.arrows == [[0, m], [0, 0]]
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut arrows: Option<Vec<Vec<u64>>> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let num = |w: &str| -> Result<u64> {
                w.parse()
                    .map_err(|_| Error::parse(line_no, format!("expected a natural number, got `{w}`")))
            };
            match words.as_slice() {
                ["vertices", k] => {
                    if arrows.is_some() {
                        return Err(Error::parse(line_no, "duplicate `vertices` line"));
                    }
                    let k = num(k)? as usize;
                    if k == 0 {
                        return Err(Error::parse(line_no, "a quiver needs at least one vertex"));
                    }
                    arrows = Some(vec![vec![0; k]; k]);
                }
                ["arrow", i, j, mult] => {
                    let a = arrows
                        .as_mut()
                        .ok_or_else(|| Error::parse(line_no, "`arrow` before `vertices`"))?;
                    let (i, j, mult) = (num(i)? as usize, num(j)? as usize, num(mult)?);
                    let k = a.len();
                    if i >= k || j >= k {
                        return Err(Error::parse(
                            line_no,
                            format!("vertex index out of range for {k} vertices"),
                        ));
                    }
                    a[i][j] = a[i][j]
                        .checked_add(mult)
                        .ok_or_else(|| Error::parse(line_no, "multiplicity overflow"))?;
                }
                _ => return Err(Error::parse(line_no, format!("unrecognized line `{line}`"))),
            }
        }
        let arrows = arrows.ok_or_else(|| Error::parse(0, "missing `vertices` line"))?;
        Quiver::new(arrows)
    }

    /// Serializes to the line-oriented text format, listing nonzero
    /// multiplicities in row-major order.
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices {}\n", self.vertex_count());
        for (i, row) in self.arrows.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    out.push_str(&format!("arrow {i} {j} {m}\n"));
                }
            }
        }
        out
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.vertex_count() {
            return Err(Error::SizeMismatch {
                expected: self.vertex_count(),
                found: len,
            });
        }
        Ok(())
    }
}

/// A vector of natural numbers indexed by the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimensionVector(Vec<u64>);

impl DimensionVector {
    pub fn new(entries: Vec<u64>) -> Self {
        DimensionVector(entries)
    }

    pub fn zero(len: usize) -> Self {
        DimensionVector(vec![0; len])
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().map(|&x| BigInt::from(x)).sum()
    }

    pub fn scaled(&self, k: u64) -> Self {
        DimensionVector(self.0.iter().map(|&x| x * k).collect())
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same_len(self, other)?;
        Ok(DimensionVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// Entrywise difference, `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimensionVector)
    }

    /// Dot product `n . d`.
    pub fn dot(&self, other: &Self) -> Result<BigInt> {
        check_same_len(self, other)?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| BigInt::from(*a) * BigInt::from(*b))
            .sum())
    }

    fn require_nonzero(&self, what: &str) -> Result<()> {
        if self.is_zero() {
            return Err(Error::domain(format!("{what} requires a nonzero dimension vector")));
        }
        Ok(())
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for DimensionVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_csv(s).map(DimensionVector)
    }
}

impl From<Vec<u64>> for DimensionVector {
    fn from(v: Vec<u64>) -> Self {
        DimensionVector(v)
    }
}

/// An integer functional on dimension vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Stability(Vec<i64>);

impl Stability {
    pub fn new(weights: Vec<i64>) -> Self {
        Stability(weights)
    }

    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    /// `Theta(d)`.
    pub fn evaluate(&self, d: &DimensionVector) -> Result<BigInt> {
        if self.0.len() != d.len() {
            return Err(Error::SizeMismatch {
                expected: self.0.len(),
                found: d.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(d.entries())
            .map(|(&w, &x)| BigInt::from(w) * BigInt::from(x))
            .sum())
    }

    /// Compares `mu(d)` with `mu(e)` by cross-multiplication. Both must be
    /// nonzero.
    pub fn compare_slopes(&self, d: &DimensionVector, e: &DimensionVector) -> Result<Ordering> {
        d.require_nonzero("slope")?;
        e.require_nonzero("slope")?;
        let lhs = self.evaluate(d)? * e.total();
        let rhs = self.evaluate(e)? * d.total();
        Ok(lhs.cmp(&rhs))
    }
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for Stability {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_csv(s).map(Stability)
    }
}

fn write_csv<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_csv<T: FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|w| {
            w.trim()
                .parse()
                .map_err(|_| Error::parse(1, format!("invalid entry `{w}` in `{s}`")))
        })
        .collect()
}

fn check_same_len(d: &DimensionVector, e: &DimensionVector) -> Result<()> {
    if d.len() != e.len() {
        return Err(Error::SizeMismatch {
            expected: d.len(),
            found: e.len(),
        });
    }
    Ok(())
}

/// `<d, e> = sum_i d_i e_i - sum_{i,j} arrows[i][j] d_i e_j`.
pub fn euler_form(q: &Quiver, d: &DimensionVector, e: &DimensionVector) -> Result<BigInt> {
    q.check_len(d.len())?;
    q.check_len(e.len())?;
    let k = q.vertex_count();
    let mut acc = BigInt::zero();
    for i in 0..k {
        let di = BigInt::from(d.0[i]);
        acc += &di * BigInt::from(e.0[i]);
        for j in 0..k {
            let a = q.arrows[i][j];
            if a != 0 {
                acc -= BigInt::from(a) * &di * BigInt::from(e.0[j]);
            }
        }
    }
    Ok(acc)
}

/// `Theta(d) / total(d)` in lowest terms.
pub fn slope(theta: &Stability, d: &DimensionVector) -> Result<BigRational> {
    d.require_nonzero("slope")?;
    Ok(BigRational::new(theta.evaluate(d)?, d.total()))
}

/// `g(d)`, the gcd of the entries.
pub fn gcd_of(d: &DimensionVector) -> Result<u64> {
    d.require_nonzero("gcd")?;
    Ok(d.0.iter().fold(0u64, |g, &x| g.gcd(&x)))
}

/// Integers `a_i` with `sum a_i d_i = 1`, defined when `g(d) = 1`.
///
/// Built by folding an extended gcd over the entries. At each step the
/// Bezout pair `(s, t)` with `s * g + t * d_i = gcd(g, d_i)` is normalized to
/// the smallest `|s|`, preferring positive `s` on a tie; earlier weights are
/// multiplied by `s`.
pub fn linearization_weights(d: &DimensionVector) -> Result<Vec<BigInt>> {
    let g = gcd_of(d)?;
    if g != 1 {
        return Err(Error::domain(format!(
            "linearization weights need g(d) = 1, got g({d}) = {g}"
        )));
    }
    let mut weights: Vec<BigInt> = Vec::with_capacity(d.len());
    let mut running = BigInt::zero();
    for &x in &d.0 {
        let x = BigInt::from(x);
        let (next, s, t) = normalized_bezout(&running, &x);
        for w in weights.iter_mut() {
            *w *= &s;
        }
        weights.push(t);
        running = next;
    }
    debug_assert!(running.is_one());
    Ok(weights)
}

/// `(gcd, s, t)` with `s * g + t * x = gcd` for `g, x >= 0`.
fn normalized_bezout(g: &BigInt, x: &BigInt) -> (BigInt, BigInt, BigInt) {
    if g.is_zero() {
        return (x.clone(), BigInt::zero(), BigInt::one());
    }
    if x.is_zero() {
        return (g.clone(), BigInt::one(), BigInt::zero());
    }
    let ext = g.extended_gcd(x);
    let (gcd, s, t) = (ext.gcd, ext.x, ext.y);
    let step_s = x / &gcd;
    let step_t = g / &gcd;
    let r = s.mod_floor(&step_s);
    let alt = &r - &step_s;
    let best = if alt.abs() < r { alt } else { r };
    let k = (&best - &s) / &step_s;
    let t = t - k * step_t;
    (gcd, best, t)
}

/// `1 - <d, d>`, the dimension of the stable moduli space when nonempty.
pub fn moduli_dimension(q: &Quiver, d: &DimensionVector) -> Result<BigInt> {
    d.require_nonzero("moduli dimension")?;
    Ok(BigInt::one() - euler_form(q, d, d)?)
}

/// `n . d - 1`, the relative dimension of the framed projective bundle.
pub fn framed_bundle_relative_dimension(d: &DimensionVector, n: &DimensionVector) -> Result<BigInt> {
    let nd = n.dot(d)?;
    if nd.is_zero() {
        return Err(Error::domain("framing requires n . d > 0"));
    }
    Ok(nd - BigInt::one())
}
