use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::linalg::rank;

/// Largest algebra dimension accepted by the enveloping-map rank test.
pub const MAX_AZUMAYA_DIMENSION: usize = 64;

/// A finite-dimensional unital algebra given by structure constants:
/// `basis[i] * basis[j] = Σ_k table[i][j][k] basis[k]`, with basis element 0
/// the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra<F: Field> {
    field: F,
    table: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> Algebra<F> {
    pub fn new(field: F, table: Vec<Vec<Vec<F::Elem>>>) -> Result<Self> {
        let dim = table.len();
        if dim == 0 {
            return Err(Error::domain("algebra must have positive dimension"));
        }
        for row in &table {
            if row.len() != dim {
                return Err(Error::SizeMismatch { expected: dim, found: row.len() });
            }
            for v in row {
                if v.len() != dim {
                    return Err(Error::SizeMismatch { expected: dim, found: v.len() });
                }
            }
        }
        Ok(Algebra { field, table })
    }

    /// The field itself as a one-dimensional algebra.
    pub fn base_field(field: F) -> Self {
        let one = field.one();
        Algebra { field, table: vec![vec![vec![one]]] }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.table.len()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.table[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dimension()];
        v[i] = self.field.one();
        v
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let dim = self.dimension();
        let mut out = vec![f.zero(); dim];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !f.is_zero(t) {
                        *o = f.add(o, &f.mul(&c, t));
                    }
                }
            }
        }
        out
    }

    pub fn is_associative_on(&self, i: usize, j: usize, k: usize) -> bool {
        let (ei, ek) = (self.basis_vector(i), self.basis_vector(k));
        let left = self.mul(&self.table[i][j], &ek);
        let right = self.mul(&ei, &self.table[j][k]);
        left == right
    }

    /// Rank of `A ⊗ A^op → End(A)`, `x ⊗ y ↦ (z ↦ x z y)`, as a
    /// `dim² × dim²` matrix.
    pub fn enveloping_rank(&self) -> Result<usize> {
        let dim = self.dimension();
        if dim > MAX_AZUMAYA_DIMENSION {
            return Err(Error::Capacity(format!(
                "algebra dimension {dim} exceeds {MAX_AZUMAYA_DIMENSION}"
            )));
        }
        if let Some(reduced) = self.reduce_mod_large_prime() {
            let r = rank(reduced.field(), &reduced.enveloping_matrix());
            // rank can only drop under reduction
            if r == dim * dim {
                return Ok(r);
            }
        }
        Ok(rank(&self.field, &self.enveloping_matrix()))
    }

    /// Central simple over the field, decided by bijectivity of the
    /// enveloping map.
    pub fn is_azumaya_over_field(&self) -> Result<bool> {
        let dim = self.dimension();
        Ok(self.enveloping_rank()? == dim * dim)
    }

    fn enveloping_matrix(&self) -> Vec<Vec<F::Elem>> {
        let dim = self.dimension();
        let mut rows = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut row = Vec::with_capacity(dim * dim);
                for k in 0..dim {
                    let ik = &self.table[i][k];
                    let v = self.mul(ik, &self.basis_vector(j));
                    row.extend(v);
                }
                rows.push(row);
            }
        }
        rows
    }

    fn reduce_mod_large_prime(&self) -> Option<Algebra<PrimeField>> {
        const P: u64 = (1 << 61) - 1;
        let target = PrimeField::new(P).expect("Mersenne prime");
        let table = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|x| self.field.reduce_into(x, &target)).collect::<Option<Vec<_>>>())
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Algebra { field: target, table })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::rational::rat;

    #[test]
    fn base_field_is_azumaya() {
        assert!(Algebra::base_field(Rationals).is_azumaya_over_field().unwrap());
        assert!(Algebra::base_field(PrimeField::new(2).unwrap()).is_azumaya_over_field().unwrap());
    }

    #[test]
    fn commutative_algebra_is_not_azumaya() {
        // Q × Q with basis 1 = (1,1), u = (1,-1), u² = 1
        let t = vec![
            vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]],
            vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]],
        ];
        let a = Algebra::new(Rationals, t).unwrap();
        assert_eq!(a.enveloping_rank().unwrap(), 2);
        assert!(!a.is_azumaya_over_field().unwrap());
    }

    #[test]
    fn capacity_guard() {
        let dim = MAX_AZUMAYA_DIMENSION + 1;
        let t = vec![vec![vec![rat(0); dim]; dim]; dim];
        let a = Algebra::new(Rationals, t).unwrap();
        assert!(matches!(a.enveloping_rank(), Err(Error::Capacity(_))));
    }
}
