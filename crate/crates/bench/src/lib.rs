//! Fixtures shared by the benchmarks.

use superbw_core::{DiagonalQuadraticForm, Field, GroupSpec, Weight};

/// Alternating-sign real form of the given rank.
pub fn alternating_form(rank: usize) -> DiagonalQuadraticForm {
    let coeffs: Vec<i64> = (0..rank as i64).map(|i| if i % 2 == 0 { i + 1 } else { -(i + 1) }).collect();
    DiagonalQuadraticForm::from_integers(Field::Real, &coeffs)
}

/// Strictly decreasing weight for the split queer group of rank `n`.
pub fn split_weight(n: usize) -> (GroupSpec, Weight) {
    let g = GroupSpec::split_q(n, Field::Real).expect("rank is positive");
    let w = (0..n as i64).map(|i| n as i64 / 2 - i).collect();
    (g, Weight(w))
}
