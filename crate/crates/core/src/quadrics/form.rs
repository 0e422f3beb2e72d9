use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{determinant, nullspace};

/// A quadratic form `Q(Σ λᵢ eᵢ) = Σ_{i≤j} b_ij λᵢ λⱼ` stored by its symmetric
/// b-matrix. The polar form has `Φ(eᵢ, eⱼ) = b_ij` for `i ≠ j` and
/// `Φ(eᵢ, eᵢ) = 2 b_ii`, which keeps characteristic 2 meaningful.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticFormB<F: Field> {
    field: F,
    b: Vec<Vec<F::Elem>>,
}

impl<F: Field> QuadraticFormB<F> {
    pub fn new(field: F, b: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = b.len();
        if n == 0 {
            return Err(Error::domain("quadratic form needs at least one variable"));
        }
        for row in &b {
            if row.len() != n {
                return Err(Error::SizeMismatch { expected: n, found: row.len() });
            }
        }
        for i in 0..n {
            for j in 0..i {
                if b[i][j] != b[j][i] {
                    return Err(Error::domain(format!("b-matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(QuadraticFormB { field, b })
    }

    /// Builds the b-matrix from `k²` row-major entries; it must be symmetric.
    pub fn from_row_major(field: F, entries: Vec<F::Elem>) -> Result<Self> {
        let n = (entries.len() as f64).sqrt().round() as usize;
        if n * n != entries.len() {
            return Err(Error::domain(format!("{} entries do not form a square matrix", entries.len())));
        }
        let b = entries.chunks(n).map(|r| r.to_vec()).collect();
        Self::new(field, b)
    }

    pub fn diagonal(field: F, values: Vec<F::Elem>) -> Result<Self> {
        let n = values.len();
        let mut b = vec![vec![field.zero(); n]; n];
        for (i, v) in values.into_iter().enumerate() {
            b[i][i] = v;
        }
        Self::new(field, b)
    }

    /// `Σ_{i<r} λᵢ λ_{i+r} + λ_{n+1}²` in `n + 2` variables, `r = ⌊(n+1)/2⌋`.
    pub fn standard(field: F, n: usize) -> Self {
        let vars = n + 2;
        let r = n.div_ceil(2);
        let mut b = vec![vec![field.zero(); vars]; vars];
        for i in 0..r {
            b[i][i + r] = field.one();
            b[i + r][i] = field.one();
        }
        b[vars - 1][vars - 1] = field.one();
        QuadraticFormB { field, b }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn variables(&self) -> usize {
        self.b.len()
    }

    /// Dimension `n` of the quadric in `P^{n+1}`; `None` for a single
    /// variable.
    pub fn quadric_dimension(&self) -> Option<usize> {
        self.variables().checked_sub(2)
    }

    pub fn b(&self, i: usize, j: usize) -> &F::Elem {
        &self.b[i][j]
    }

    pub fn b_matrix(&self) -> &[Vec<F::Elem>] {
        &self.b
    }

    pub fn phi(&self, i: usize, j: usize) -> F::Elem {
        if i == j {
            self.field.add(&self.b[i][i], &self.b[i][i])
        } else {
            self.b[i][j].clone()
        }
    }

    pub fn gram_matrix(&self) -> Vec<Vec<F::Elem>> {
        let n = self.variables();
        (0..n).map(|i| (0..n).map(|j| self.phi(i, j)).collect()).collect()
    }

    pub fn evaluate(&self, v: &[F::Elem]) -> Result<F::Elem> {
        let n = self.variables();
        if v.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: v.len() });
        }
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..n {
            for j in i..n {
                if !f.is_zero(&self.b[i][j]) {
                    acc = f.add(&acc, &f.mul(&self.b[i][j], &f.mul(&v[i], &v[j])));
                }
            }
        }
        Ok(acc)
    }

    /// `Φ(u, v) = uᵀ Gram v`.
    pub fn polar(&self, u: &[F::Elem], v: &[F::Elem]) -> Result<F::Elem> {
        let n = self.variables();
        if u.len() != n || v.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: u.len().min(v.len()) });
        }
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..n {
            for j in 0..n {
                acc = f.add(&acc, &f.mul(&self.phi(i, j), &f.mul(&u[i], &v[j])));
            }
        }
        Ok(acc)
    }

    /// Smoothness of the quadric `Q = 0`. Outside characteristic 2 this is
    /// nondegeneracy of `Φ`. In characteristic 2 `Φ` is alternating: with an
    /// odd number of variables the radical must be a line on which `Q` does
    /// not vanish, with an even number `Φ` must be nondegenerate.
    pub fn is_smooth_quadric(&self) -> bool {
        let f = &self.field;
        let gram = self.gram_matrix();
        if f.characteristic() != 2 || self.variables().is_multiple_of(2) {
            return !f.is_zero(&determinant(f, &gram));
        }
        let radical = nullspace(f, &gram, self.variables());
        match radical.as_slice() {
            [v] => !f.is_zero(&self.evaluate(v).expect("radical vector has full length")),
            _ => false,
        }
    }
}
