//! Brute-force ground truth for the `(epsilon, a)` components of Clifford
//! superalgebra classes.
//!
//! The algebra is built from structure constants on the monomial basis
//! `e_S`, `S` a subset of `{1..n}` encoded as a bitmask, and the components
//! are read off from centers computed by exact linear algebra.

use crate::brauer_wall::Sign;
use crate::error::{Error, Result};
use crate::fields::{Field, SquareClass};
use crate::quadratic_forms::DiagonalQuadraticForm;
use crate::scalar::{Fp, Scalar};

/// Largest rank the oracle accepts (algebras of dimension `2^6`).
pub const MAX_RANK: usize = 6;

/// Clifford algebra of a diagonal form given by explicit structure constants.
#[derive(Clone, Debug)]
pub struct StructureAlgebra<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> StructureAlgebra<S> {
    pub fn from_coeffs(coeffs: Vec<S>) -> Self {
        StructureAlgebra { coeffs }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.coeffs.len()
    }

    pub fn parity(s: usize) -> usize {
        s.count_ones() as usize % 2
    }

    /// `e_S e_T = c e_{S xor T}`; returns `(c, S xor T)`.
    pub fn basis_product(&self, s: usize, t: usize, unit: &S) -> (S, usize) {
        let mut swaps = 0u32;
        for j in 0..self.rank() {
            if t >> j & 1 == 1 {
                swaps += (s >> (j + 1)).count_ones();
            }
        }
        let mut c = if swaps % 2 == 0 {
            unit.clone()
        } else {
            -unit.clone()
        };
        for (i, a) in self.coeffs.iter().enumerate() {
            if (s & t) >> i & 1 == 1 {
                c = c * a.clone();
            }
        }
        (c, s ^ t)
    }

    pub fn mul(&self, x: &[S], y: &[S], unit: &S) -> Vec<S> {
        let zero = unit.zero_like();
        let mut out = vec![zero; self.dim()];
        for (s, xs) in x.iter().enumerate() {
            if xs.is_zero() {
                continue;
            }
            for (t, yt) in y.iter().enumerate() {
                if yt.is_zero() {
                    continue;
                }
                let (c, st) = self.basis_product(s, t, unit);
                out[st] = out[st].clone() + c * xs.clone() * yt.clone();
            }
        }
        out
    }

    pub fn basis(&self, s: usize, unit: &S) -> Vec<S> {
        let mut v = vec![unit.zero_like(); self.dim()];
        v[s] = unit.clone();
        v
    }

    /// Checks `(e_S e_T) e_U = e_S (e_T e_U)` on all basis triples.
    pub fn is_associative(&self, unit: &S) -> bool {
        let n = self.dim();
        for s in 0..n {
            for t in 0..n {
                let (c1, st) = self.basis_product(s, t, unit);
                for u in 0..n {
                    let (c2, stu) = self.basis_product(st, u, unit);
                    let (c3, tu) = self.basis_product(t, u, unit);
                    let (c4, stu2) = self.basis_product(s, tu, unit);
                    if stu != stu2 || c1.clone() * c2 != c3 * c4 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Basis of `{x in span(domain) : x g = g x for all g in gens}`.
    pub fn centralizer(&self, domain: &[usize], gens: &[usize], unit: &S) -> Vec<Vec<S>> {
        // Column k is the commutator image of e_{domain[k]}.
        let mut rows: Vec<Vec<S>> = Vec::new();
        for &g in gens {
            let mut block = vec![vec![unit.zero_like(); domain.len()]; self.dim()];
            for (k, &s) in domain.iter().enumerate() {
                let (c1, r1) = self.basis_product(s, g, unit);
                let (c2, r2) = self.basis_product(g, s, unit);
                block[r1][k] = block[r1][k].clone() + c1;
                block[r2][k] = block[r2][k].clone() - c2;
            }
            rows.extend(block);
        }
        nullspace(rows, domain.len(), unit)
            .into_iter()
            .map(|v| {
                let mut full = vec![unit.zero_like(); self.dim()];
                for (k, &s) in domain.iter().enumerate() {
                    full[s] = v[k].clone();
                }
                full
            })
            .collect()
    }
}

/// Basis of the kernel of a `rows x cols` matrix.
pub fn nullspace<S: Scalar>(mut m: Vec<Vec<S>>, cols: usize, unit: &S) -> Vec<Vec<S>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..cols {
                    let v = f.clone() * m[r][k].clone();
                    m[i][k] = m[i][k].clone() - v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![unit.zero_like(); cols];
            v[f] = unit.clone();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

fn check(q: &DiagonalQuadraticForm) -> Result<()> {
    if let Some(index) = q.coeffs().iter().position(num_traits::Zero::is_zero) {
        return Err(Error::DegenerateForm { index });
    }
    if q.dim() > MAX_RANK {
        return Err(Error::InvalidParameter(format!(
            "oracle rank {} exceeds {MAX_RANK}",
            q.dim()
        )));
    }
    Ok(())
}

fn epsilon_of<S: Scalar>(alg: &StructureAlgebra<S>, unit: &S) -> Sign {
    let all: Vec<usize> = (0..alg.dim()).collect();
    let gens: Vec<usize> = (0..alg.rank()).map(|i| 1 << i).collect();
    let center = alg.centralizer(&all, &gens, unit);
    match center.len() {
        1 => Sign::Plus,
        2 => Sign::Minus,
        k => panic!("ungraded center of dimension {k}"),
    }
}

fn a_of<S: Scalar>(alg: &StructureAlgebra<S>, unit: &S) -> S {
    let n = alg.rank();
    if n == 0 {
        return unit.clone();
    }
    let even: Vec<usize> = (0..alg.dim()).filter(|&s| StructureAlgebra::<S>::parity(s) == 0).collect();
    let odd: Vec<usize> = (0..alg.dim()).filter(|&s| StructureAlgebra::<S>::parity(s) == 1).collect();
    assert_eq!(even.len(), 1 << (n - 1));
    let even_gens: Vec<usize> = even.iter().copied().filter(|&s| s != 0).collect();
    match epsilon_of(alg, unit) {
        Sign::Plus => {
            let center = alg.centralizer(&even, &even_gens, unit);
            assert_eq!(center.len(), 2, "center of the even part");
            let mut u = center
                .into_iter()
                .find(|z| z.iter().enumerate().any(|(s, c)| s != 0 && !c.is_zero()))
                .expect("non-scalar central element");
            u[0] = unit.zero_like();
            let u2 = alg.mul(&u, &u, unit);
            let k = (1..alg.dim()).find(|&s| !u[s].is_zero()).expect("nonzero");
            let alpha = u2[k].clone() * u[k].inverse().expect("nonzero");
            for s in 1..alg.dim() {
                assert_eq!(u2[s], alpha.clone() * u[s].clone(), "u^2 lies in F + Fu");
            }
            let beta = u2[0].clone();
            let two = unit.clone() + unit.clone();
            let half_alpha = alpha * two.inverse().expect("characteristic not two");
            beta + half_alpha.clone() * half_alpha
        }
        Sign::Minus => {
            let gens = if even_gens.is_empty() { vec![0] } else { even_gens };
            let cent = alg.centralizer(&odd, &gens, unit);
            assert_eq!(cent.len(), 1, "odd centralizer of the even part");
            let u = &cent[0];
            let u2 = alg.mul(u, u, unit);
            assert!(u2[1..].iter().all(Scalar::is_zero), "u^2 is scalar");
            u2[0].clone()
        }
    }
}

fn with_algebra<T>(
    q: &DiagonalQuadraticForm,
    real: impl FnOnce(&StructureAlgebra<num_rational::BigRational>, &num_rational::BigRational) -> T,
    finite: impl FnOnce(&StructureAlgebra<Fp>, &Fp) -> T,
) -> T {
    match q.field() {
        Field::Real => {
            let unit = num_rational::BigRational::from_integer(1.into());
            real(&StructureAlgebra { coeffs: q.coeffs().to_vec() }, &unit)
        }
        Field::FinitePrime(p) => {
            let coeffs = q
                .coeffs()
                .iter()
                .map(|c| Fp::from_rational(c, p).expect("reduced"))
                .collect();
            finite(&StructureAlgebra { coeffs }, &Fp::new(1, p))
        }
    }
}

/// `epsilon` from the dimension of the ungraded center.
pub fn brute_epsilon(q: &DiagonalQuadraticForm) -> Result<Sign> {
    check(q)?;
    Ok(with_algebra(q, epsilon_of, epsilon_of))
}

/// `a` as the square class of `u^2`, `u` a trace-zero generator of the
/// relevant quadratic center.
pub fn brute_a(q: &DiagonalQuadraticForm) -> Result<SquareClass> {
    check(q)?;
    let value = with_algebra(q, |alg, u| a_of(alg, u).to_rational(), |alg, u| a_of(alg, u).to_rational());
    q.field().square_class_of(&value)
}

/// Associativity of the constructed algebra.
pub fn is_associative(q: &DiagonalQuadraticForm) -> bool {
    with_algebra(q, |alg, u| alg.is_associative(u), |alg, u| alg.is_associative(u))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = Field::Real;
        let q = DiagonalQuadraticForm::from_integers(r, &[-1, -1]);
        assert_eq!(brute_epsilon(&q).unwrap(), Sign::Plus);
        assert_eq!(brute_a(&q).unwrap().rep(), -1);
        let q = DiagonalQuadraticForm::from_integers(r, &[1]);
        assert_eq!(brute_epsilon(&q).unwrap(), Sign::Minus);
        assert_eq!(brute_a(&q).unwrap().rep(), 1);
        let f5 = Field::finite(5).unwrap();
        let q = DiagonalQuadraticForm::from_integers(f5, &[1, 2, 3]);
        assert_eq!(brute_epsilon(&q).unwrap(), Sign::Minus);
        for a in 1..5 {
            let q = DiagonalQuadraticForm::from_integers(f5, &[a]);
            assert_eq!(brute_a(&q).unwrap(), f5.square_class(a));
        }
        let q = DiagonalQuadraticForm::empty(r);
        assert_eq!(brute_epsilon(&q).unwrap(), Sign::Plus);
        assert!(brute_a(&q).unwrap().is_square());
    }

    #[test]
    fn rejects_degenerate() {
        let q = DiagonalQuadraticForm::from_integers(Field::Real, &[1, 0]);
        assert_eq!(brute_epsilon(&q), Err(Error::DegenerateForm { index: 1 }));
        assert!(brute_a(&q).is_err());
    }

    #[test]
    fn associativity() {
        let q = DiagonalQuadraticForm::from_integers(Field::Real, &[2, -3, 5, -1]);
        assert!(is_associative(&q));
    }
}
