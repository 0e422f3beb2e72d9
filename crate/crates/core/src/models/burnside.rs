use crate::field::Rationals;
use crate::linalg::rank;

use super::mat2::Mat2;

/// Dimension of the algebra generated by `matrices`: the span of the
/// identity and all words of length at most 3. It is 4 exactly when the
/// tuple has no common invariant line over the algebraic closure.
pub fn burnside_dimension(matrices: &[Mat2]) -> usize {
    let mut words = vec![Mat2::identity()];
    let mut frontier = vec![Mat2::identity()];
    for _ in 0..3 {
        frontier = frontier
            .iter()
            .flat_map(|w| matrices.iter().map(move |m| w.mul(m)))
            .collect();
        words.extend(frontier.iter().cloned());
    }
    let rows: Vec<Vec<_>> = words
        .iter()
        .map(|w| w.entries().into_iter().cloned().collect())
        .collect();
    rank(&Rationals, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(burnside_dimension(&[Mat2::unit(0, 1), Mat2::unit(1, 0)]), 4);
        assert_eq!(burnside_dimension(&[Mat2::identity()]), 1);
        assert_eq!(burnside_dimension(&[]), 1);
        let d1 = Mat2::from_i64([[1, 0], [0, 2]]);
        let d2 = Mat2::from_i64([[3, 0], [0, -1]]);
        assert!(burnside_dimension(&[d1, d2]) <= 2);
        let u = Mat2::from_i64([[1, 1], [0, 2]]);
        let w = Mat2::from_i64([[0, 5], [0, 3]]);
        assert_eq!(burnside_dimension(&[u, w]), 3);
    }
}
