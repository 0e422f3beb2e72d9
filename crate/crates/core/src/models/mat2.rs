use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational_list};

pub type Vec2 = [BigRational; 2];

/// A 2×2 matrix over the rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[BigRational; 2]; 2]);

impl Mat2 {
    pub fn zero() -> Self {
        Mat2([
            [BigRational::zero(), BigRational::zero()],
            [BigRational::zero(), BigRational::zero()],
        ])
    }

    pub fn identity() -> Self {
        Mat2([
            [BigRational::one(), BigRational::zero()],
            [BigRational::zero(), BigRational::one()],
        ])
    }

    pub fn from_i64(m: [[i64; 2]; 2]) -> Self {
        Mat2(m.map(|row| row.map(|x| BigRational::from_integer(x.into()))))
    }

    /// The elementary matrix with a single 1 in position `(i, j)`.
    pub fn unit(i: usize, j: usize) -> Self {
        let mut m = Mat2::zero();
        m.0[i][j] = BigRational::one();
        m
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.0[i][j]
    }

    pub fn entries(&self) -> [&BigRational; 4] {
        [&self.0[0][0], &self.0[0][1], &self.0[1][0], &self.0[1][1]]
    }

    pub fn trace(&self) -> BigRational {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn det(&self) -> BigRational {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }

    pub fn add(&self, other: &Mat2) -> Mat2 {
        Mat2(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] + &other.0[i][j])))
    }

    pub fn sub(&self, other: &Mat2) -> Mat2 {
        Mat2(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] - &other.0[i][j])))
    }

    pub fn scale(&self, s: &BigRational) -> Mat2 {
        Mat2(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] * s)))
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        Mat2(std::array::from_fn(|i| {
            std::array::from_fn(|j| &self.0[i][0] * &other.0[0][j] + &self.0[i][1] * &other.0[1][j])
        }))
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        std::array::from_fn(|i| &self.0[i][0] * &v[0] + &self.0[i][1] * &v[1])
    }

    /// `A - (tr A / 2) I`.
    pub fn traceless_part(&self) -> Mat2 {
        let half = self.trace() / BigRational::from_integer(2.into());
        self.sub(&Mat2::identity().scale(&half))
    }

    pub fn inverse(&self) -> Option<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        let m = &self.0;
        Some(Mat2([
            [&m[1][1] / &det, -&m[0][1] / &det],
            [-&m[1][0] / &det, &m[0][0] / &det],
        ]))
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|x| x.is_zero())
    }
}

/// `det(u | v)` for column vectors `u`, `v`.
pub fn det_columns(u: &Vec2, v: &Vec2) -> BigRational {
    &u[0] * &v[1] - &u[1] * &v[0]
}

pub fn vec2_from_i64(v: [i64; 2]) -> Vec2 {
    v.map(|x| BigRational::from_integer(x.into()))
}

pub fn parse_vec2(s: &str) -> Result<Vec2> {
    let v = parse_rational_list(s)?;
    let [x, y]: [BigRational; 2] = v
        .try_into()
        .map_err(|v: Vec<_>| Error::SizeMismatch { expected: 2, found: v.len() })?;
    Ok([x, y])
}

impl FromStr for Mat2 {
    type Err = Error;

    /// Row-major `a11,a12,a21,a22`.
    fn from_str(s: &str) -> Result<Self> {
        let v = parse_rational_list(s)?;
        let [a, b, c, d]: [BigRational; 4] = v
            .try_into()
            .map_err(|v: Vec<_>| Error::SizeMismatch { expected: 4, found: v.len() })?;
        Ok(Mat2([[a, b], [c, d]]))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().iter().map(|x| format_rational(x)).collect();
        f.write_str(&parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_identities() {
        let a = Mat2::from_i64([[1, 2], [3, 4]]);
        let b = Mat2::from_i64([[0, 1], [-1, 5]]);
        assert_eq!(a.mul(&b).det(), a.det() * b.det());
        assert_eq!(a.mul(&a.inverse().unwrap()), Mat2::identity());
        assert!(a.traceless_part().trace().is_zero());
        assert_eq!("1,2,3,4".parse::<Mat2>().unwrap(), a);
        assert!("1,2,3".parse::<Mat2>().is_err());
        assert_eq!(a.to_string(), "1/1,2/1,3/1,4/1");
    }
}
