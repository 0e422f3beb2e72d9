use crate::error::{Error, Result};
use crate::field::Field;

use super::form::QuadraticFormB;

/// A congruence `Q(Σ yₖ pₖ) = Σ valuesₖ yₖ²`.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagonalization<F: Field> {
    /// New basis vectors `pₖ`, in original coordinates.
    pub basis: Vec<Vec<F::Elem>>,
    /// `Q(pₖ)`.
    pub values: Vec<F::Elem>,
}

impl<F: Field> Diagonalization<F> {
    /// `Σ yₖ pₖ` in original coordinates.
    pub fn to_original(&self, field: &F, y: &[F::Elem]) -> Vec<F::Elem> {
        let n = self.basis.len();
        (0..n)
            .map(|i| {
                y.iter()
                    .zip(&self.basis)
                    .fold(field.zero(), |acc, (yk, pk)| field.add(&acc, &field.mul(yk, &pk[i])))
            })
            .collect()
    }
}

/// Symmetric Gaussian congruence on `Φ`. The pivot is the first nonzero
/// diagonal entry; when all remaining diagonal entries vanish, `eᵢ + eⱼ` for
/// the first nonzero off-diagonal entry becomes the pivot.
pub fn diagonalize<F: Field>(q: &QuadraticFormB<F>) -> Result<Diagonalization<F>> {
    let f = q.field();
    if f.characteristic() == 2 {
        return Err(Error::domain("diagonalization needs characteristic other than 2"));
    }
    let n = q.variables();
    let mut s = q.gram_matrix();
    let mut p: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect())
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !f.is_zero(&s[i][i]));
        let pivot = match pivot {
            Some(i) => i,
            None => {
                let Some((i, j)) = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !f.is_zero(&s[i][j]))
                else {
                    break;
                };
                // basis vector i becomes e_i + e_j
                add_multiple(f, &mut s, &mut p, i, j, &f.one());
                i
            }
        };
        swap(&mut s, &mut p, k, pivot);
        let inv = f.inv(&s[k][k]).expect("pivot is nonzero");
        for j in k + 1..n {
            if f.is_zero(&s[k][j]) {
                continue;
            }
            let factor = f.neg(&f.mul(&s[k][j], &inv));
            add_multiple(f, &mut s, &mut p, j, k, &factor);
        }
    }
    let two_inv = f.inv(&f.from_i64(2)).expect("characteristic is not 2");
    let values = (0..n).map(|k| f.mul(&s[k][k], &two_inv)).collect();
    Ok(Diagonalization { basis: p, values })
}

/// Replaces basis vector `i` by `p_i + c·p_j`, updating the Gram matrix.
fn add_multiple<F: Field>(f: &F, s: &mut [Vec<F::Elem>], p: &mut [Vec<F::Elem>], i: usize, j: usize, c: &F::Elem) {
    let n = s.len();
    for r in 0..n {
        let t = f.mul(c, &s[r][j]);
        s[r][i] = f.add(&s[r][i], &t);
    }
    for col in 0..n {
        let t = f.mul(c, &s[j][col]);
        s[i][col] = f.add(&s[i][col], &t);
    }
    let pj = p[j].clone();
    for (x, y) in p[i].iter_mut().zip(&pj) {
        *x = f.add(x, &f.mul(c, y));
    }
}

fn swap<T>(s: &mut [Vec<T>], p: &mut [Vec<T>], a: usize, b: usize) {
    if a == b {
        return;
    }
    s.swap(a, b);
    for row in s.iter_mut() {
        row.swap(a, b);
    }
    p.swap(a, b);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::rational::rat;
    use num_traits::Zero;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn congruence_is_exact(e in proptest::array::uniform10(-4i64..=4)) {
            let b = vec![
                vec![rat(e[0]), rat(e[1]), rat(e[2]), rat(e[3])],
                vec![rat(e[1]), rat(e[4]), rat(e[5]), rat(e[6])],
                vec![rat(e[2]), rat(e[5]), rat(e[7]), rat(e[8])],
                vec![rat(e[3]), rat(e[6]), rat(e[8]), rat(e[9])],
            ];
            let q = QuadraticFormB::new(Rationals, b).unwrap();
            let d = diagonalize(&q).unwrap();
            for k in 0..4 {
                prop_assert_eq!(q.evaluate(&d.basis[k]).unwrap(), d.values[k].clone());
                for l in 0..k {
                    prop_assert!(q.polar(&d.basis[k], &d.basis[l]).unwrap().is_zero());
                }
            }
            let det = crate::linalg::determinant(&Rationals, &d.basis);
            prop_assert!(!det.is_zero());
        }
    }

    #[test]
    fn hyperbolic_pivot() {
        let q = QuadraticFormB::new(Rationals, vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]).unwrap();
        let d = diagonalize(&q).unwrap();
        assert_eq!(d.values, vec![rat(1), rat(-1) / rat(4)]);
    }
}
