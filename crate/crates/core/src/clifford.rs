//! Brauer–Wall classes of Clifford superalgebras.

use crate::binomial::binomial_is_odd;
use crate::brauer_wall::{BwClass, Sign};
use crate::error::{Error, Result};
use crate::fields::{hilbert, BrauerClass, SquareClass};
use crate::quadratic_forms::DiagonalQuadraticForm;

/// Class of `C(V, q)` for a nondegenerate diagonal form.
pub fn wall_class(q: &DiagonalQuadraticForm) -> Result<BwClass> {
    if let Some(index) = q.coeffs().iter().position(num_traits::Zero::is_zero) {
        return Err(Error::DegenerateForm { index });
    }
    Ok(wall_class_of_classes(&q.classes(), q.field()))
}

/// Class of the maximal semisimple quotient of `C(V, q)`: the radical is
/// dropped first.
pub fn semisimple_wall_class(q: &DiagonalQuadraticForm) -> BwClass {
    let (nd, _) = q.split_radical();
    wall_class_of_classes(&nd.classes(), q.field())
}

pub(crate) fn wall_class_of_classes(a: &[SquareClass], field: crate::fields::Field) -> BwClass {
    let n = a.len() as i64;
    let minus = SquareClass::minus_one(field);

    let mut disc = if binomial_is_odd(n, 2) {
        minus
    } else {
        SquareClass::one(field)
    };
    for &c in a {
        disc = disc * c;
    }

    let mut d = BrauerClass::trivial(field);
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            d = d * hilbert(a[i], a[j]);
        }
    }
    let mut with_minus = BrauerClass::trivial(field);
    for &c in a {
        with_minus = with_minus * hilbert(minus, c);
    }
    d = d * with_minus.pow(binomial_is_odd(n - 1, 2));
    d = d * hilbert(minus, minus).pow(binomial_is_odd(n + 1, 4));

    BwClass {
        epsilon: Sign::minus_pow(a.len()),
        a: disc,
        d,
    }
}
