//! Diagonal quadratic forms and diagonalization of symmetric Gram matrices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::binomial::binomial_is_odd;
use crate::error::{Error, Result};
use crate::fields::{Field, SquareClass};
use crate::scalar::{Fp, Scalar};

/// `sum a_i x_i^2` on an orthogonal basis. Zero coefficients are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalQuadraticForm {
    field: Field,
    coeffs: Vec<BigRational>,
}

impl DiagonalQuadraticForm {
    /// Reduces every coefficient to its canonical representative.
    pub fn new(field: Field, coeffs: Vec<BigRational>) -> Result<Self> {
        let coeffs = coeffs
            .iter()
            .map(|c| field.reduce(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(DiagonalQuadraticForm { field, coeffs })
    }

    pub fn from_integers(field: Field, coeffs: &[i64]) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        DiagonalQuadraticForm::new(field, coeffs).expect("integers reduce in every field")
    }

    /// Parses comma-separated coefficients; each may be an integer or `p/q`.
    pub fn parse(field: Field, s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if t.trim().is_empty() {
            return Ok(DiagonalQuadraticForm::empty(field));
        }
        let coeffs = t
            .split(',')
            .map(|tok| {
                let tok = tok.trim().replace('\u{2212}', "-");
                tok.parse::<BigRational>()
                    .ok()
                    .filter(|q| !q.denom().is_zero())
                    .ok_or_else(|| Error::parse("coefficient", tok))
            })
            .collect::<Result<Vec<_>>>()?;
        DiagonalQuadraticForm::new(field, coeffs)
    }

    pub fn empty(field: Field) -> Self {
        DiagonalQuadraticForm {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Number of variables `n`.
    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Number of nonzero coefficients.
    pub fn rank(&self) -> usize {
        self.coeffs.iter().filter(|c| !Zero::is_zero(*c)).count()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.coeffs.iter().all(|c| !Zero::is_zero(c))
    }

    /// Square class of every coefficient, in order.
    pub fn classes(&self) -> Vec<SquareClass> {
        self.coeffs
            .iter()
            .map(|c| self.field.square_class_of(c).expect("coefficients are reduced"))
            .collect()
    }

    /// The form `-q`.
    pub fn negate(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| -c.clone()).collect();
        DiagonalQuadraticForm::new(self.field, coeffs).expect("negation stays reduced")
    }

    /// `q ⊥ q'`.
    pub fn orthogonal_sum(&self, other: &Self) -> Result<Self> {
        self.field.ensure_same(&other.field)?;
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(other.coeffs.iter().cloned());
        Ok(DiagonalQuadraticForm {
            field: self.field,
            coeffs,
        })
    }

    /// Nondegenerate part (nonzero coefficients, original order) and the
    /// dimension of the radical.
    pub fn split_radical(&self) -> (DiagonalQuadraticForm, usize) {
        let coeffs: Vec<BigRational> = self.coeffs.iter().filter(|c| !Zero::is_zero(*c)).cloned().collect();
        let radical = self.coeffs.len() - coeffs.len();
        (
            DiagonalQuadraticForm {
                field: self.field,
                coeffs,
            },
            radical,
        )
    }

    /// Class of `(-1)^C(n,2) prod a_i`, or zero if some coefficient vanishes.
    pub fn signed_discriminant(&self) -> SquareClass {
        let mut acc = if binomial_is_odd(self.dim() as i64, 2) {
            SquareClass::minus_one(self.field)
        } else {
            SquareClass::one(self.field)
        };
        for c in self.classes() {
            acc = acc * c;
        }
        acc
    }
}

impl fmt::Display for DiagonalQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "diag(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Diagonalizes a symmetric Gram matrix by symmetric Gaussian elimination.
///
/// Each returned coefficient is only meaningful up to squares.
pub fn diagonalize_gram(field: Field, gram: &[Vec<BigRational>]) -> Result<DiagonalQuadraticForm> {
    let n = gram.len();
    for (row, r) in gram.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare {
                row,
                len: r.len(),
                expected: n,
            });
        }
    }
    let reduced: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|r| r.iter().map(|x| field.reduce(x)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    for i in 0..n {
        for j in 0..i {
            if reduced[i][j] != reduced[j][i] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    let coeffs = match field {
        Field::Real => eliminate(reduced),
        Field::FinitePrime(p) => {
            let m = reduced
                .iter()
                .map(|r| r.iter().map(|x| Fp::from_rational(x, p).expect("reduced")).collect())
                .collect();
            eliminate(m).iter().map(Scalar::to_rational).collect()
        }
    };
    DiagonalQuadraticForm::new(field, coeffs)
}

fn eliminate<S: Scalar>(mut m: Vec<Vec<S>>) -> Vec<S> {
    let n = m.len();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // Replace e_k by e_k + e_j; the new diagonal entry is 2 m[k][j].
                for c in 0..n {
                    let v = m[j][c].clone();
                    m[k][c] = m[k][c].clone() + v;
                }
                for row in m.iter_mut() {
                    let v = row[j].clone();
                    row[k] = row[k].clone() + v;
                }
            } else {
                out.push(m[k][k].zero_like());
                continue;
            }
        }
        let pivot = m[k][k].clone();
        let inv = pivot.inverse().expect("nonzero pivot");
        for i in k + 1..n {
            let f = m[i][k].clone() * inv.clone();
            if f.is_zero() {
                continue;
            }
            for c in 0..n {
                let v = f.clone() * m[k][c].clone();
                m[i][c] = m[i][c].clone() - v;
            }
            for row in m.iter_mut() {
                let v = f.clone() * row[k].clone();
                row[i] = row[i].clone() - v;
            }
        }
        out.push(pivot);
    }
    out
}
