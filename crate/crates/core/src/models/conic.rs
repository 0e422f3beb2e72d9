use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::field::Rationals;
use crate::linalg::determinant;
use crate::rational::format_rational;

/// A ternary quadratic form, coefficients in monomial order
/// `x², xy, xz, y², yz, z²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConicFiber {
    pub coeffs: [BigRational; 6],
}

impl ConicFiber {
    pub fn new(coeffs: [BigRational; 6]) -> Self {
        ConicFiber { coeffs }
    }

    pub fn evaluate(&self, x: &BigRational, y: &BigRational, z: &BigRational) -> BigRational {
        let c = &self.coeffs;
        &c[0] * x * x + &c[1] * x * y + &c[2] * x * z + &c[3] * y * y + &c[4] * y * z + &c[5] * z * z
    }

    /// The symmetric matrix `M` with `Q(v) = vᵀ M v`.
    pub fn symmetric_matrix(&self) -> Vec<Vec<BigRational>> {
        let c = &self.coeffs;
        let half = |x: &BigRational| x / BigRational::from_integer(2.into());
        vec![
            vec![c[0].clone(), half(&c[1]), half(&c[2])],
            vec![half(&c[1]), c[3].clone(), half(&c[4])],
            vec![half(&c[2]), half(&c[4]), c[5].clone()],
        ]
    }

    /// The polar bilinear form `Φ(u, v) = Q(u+v) - Q(u) - Q(v)`; twice
    /// [`ConicFiber::symmetric_matrix`].
    pub fn gram_matrix(&self) -> Vec<Vec<BigRational>> {
        let two = BigRational::from_integer(2.into());
        self.symmetric_matrix()
            .into_iter()
            .map(|row| row.into_iter().map(|x| x * &two).collect())
            .collect()
    }

    /// `det` of [`ConicFiber::symmetric_matrix`].
    pub fn determinant(&self) -> BigRational {
        determinant(&Rationals, &self.symmetric_matrix())
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.determinant().is_zero()
    }

    pub fn negated(&self) -> ConicFiber {
        ConicFiber::new(self.coeffs.clone().map(|x| -x))
    }
}

impl fmt::Display for ConicFiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        f.write_str(&parts.join("\t"))
    }
}
