//! Clifford algebras of b-matrix quadratic forms. Basis monomials
//! `e_S = e_{s1} ⋯ e_{sk}` (`s1 < ⋯ < sk`) are indexed by the bitmask of `S`.

use crate::error::Result;
use crate::field::Field;

use super::algebra::Algebra;
use super::form::QuadraticFormB;

/// Largest number of variables accepted by [`build_clifford`].
pub const MAX_CLIFFORD_VARIABLES: usize = 8;

#[derive(Debug, Clone)]
pub struct CliffordAlgebra<F: Field> {
    pub form: QuadraticFormB<F>,
    /// Bitmask of each basis element, in index order of `algebra`.
    pub basis: Vec<u32>,
    pub algebra: Algebra<F>,
    /// Bitmasks of the even basis elements.
    pub even_basis: Vec<u32>,
    pub even_part: Algebra<F>,
}

impl<F: Field> CliffordAlgebra<F> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates (in the full basis) of `Σ vᵢ eᵢ`.
    pub fn vector(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.form.field();
        let mut out = vec![f.zero(); self.dimension()];
        for (i, c) in v.iter().enumerate() {
            out[1 << i] = c.clone();
        }
        out
    }

    /// Restricts full coordinates to the even basis; `None` when an odd
    /// coordinate is nonzero.
    pub fn to_even(&self, x: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = self.form.field();
        if self.basis.iter().any(|&m| m.count_ones() % 2 == 1 && !f.is_zero(&x[m as usize])) {
            return None;
        }
        Some(self.even_basis.iter().map(|&m| x[m as usize].clone()).collect())
    }
}

/// Adds `coeff · e_mask · e_j` (normal ordered) into `out`.
fn push_times_generator<F: Field>(q: &QuadraticFormB<F>, mask: u32, j: usize, coeff: &F::Elem, out: &mut [F::Elem]) {
    let f = q.field();
    if f.is_zero(coeff) {
        return;
    }
    let bit = 1u32 << j;
    if mask == 0 {
        out[bit as usize] = f.add(&out[bit as usize], coeff);
        return;
    }
    let last = 31 - mask.leading_zeros() as usize;
    let rest = mask & !(1 << last);
    if last < j {
        let m = (mask | bit) as usize;
        out[m] = f.add(&out[m], coeff);
    } else if last == j {
        let c = f.mul(coeff, q.b(j, j));
        out[rest as usize] = f.add(&out[rest as usize], &c);
    } else {
        // e_rest e_last e_j = Φ(last, j) e_rest - (e_rest e_j) e_last
        let c = f.mul(coeff, &q.phi(last, j));
        out[rest as usize] = f.add(&out[rest as usize], &c);
        let mut inner = vec![f.zero(); out.len()];
        push_times_generator(q, rest, j, &f.one(), &mut inner);
        let neg = f.neg(coeff);
        for (m, c) in inner.iter().enumerate() {
            if !f.is_zero(c) {
                // every index in m is below `last`
                push_times_generator(q, m as u32, last, &f.mul(&neg, c), out);
            }
        }
    }
}

fn monomial_product<F: Field>(q: &QuadraticFormB<F>, s: u32, t: u32) -> Vec<F::Elem> {
    let f = q.field();
    let dim = 1usize << q.variables();
    let mut cur = vec![f.zero(); dim];
    cur[s as usize] = f.one();
    for j in (0..q.variables()).filter(|j| t >> j & 1 == 1) {
        let mut next = vec![f.zero(); dim];
        for (m, c) in cur.iter().enumerate() {
            push_times_generator(q, m as u32, j, c, &mut next);
        }
        cur = next;
    }
    cur
}

/// The Clifford algebra `T(V)/(v⊗v - Q(v))` and its even part.
pub fn build_clifford<F: Field>(q: &QuadraticFormB<F>) -> Result<CliffordAlgebra<F>> {
    let n = q.variables();
    if n > MAX_CLIFFORD_VARIABLES {
        return Err(crate::error::Error::Capacity(format!(
            "{n} variables exceed {MAX_CLIFFORD_VARIABLES}"
        )));
    }
    let f = q.field();
    let basis: Vec<u32> = (0..1u32 << n).collect();
    let table: Vec<Vec<Vec<F::Elem>>> = basis
        .iter()
        .map(|&s| basis.iter().map(|&t| monomial_product(q, s, t)).collect())
        .collect();
    let even_basis: Vec<u32> = basis.iter().copied().filter(|m| m.count_ones() % 2 == 0).collect();
    let even_table = even_basis
        .iter()
        .map(|&s| {
            even_basis
                .iter()
                .map(|&t| {
                    let full = &table[s as usize][t as usize];
                    even_basis.iter().map(|&m| full[m as usize].clone()).collect()
                })
                .collect()
        })
        .collect();
    Ok(CliffordAlgebra {
        form: q.clone(),
        basis,
        algebra: Algebra::new(f.clone(), table)?,
        even_basis,
        even_part: Algebra::new(f.clone(), even_table)?,
    })
}
