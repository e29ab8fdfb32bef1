//! Base fields, square classes, Brauer classes and Hilbert symbols.
//!
//! Two backends are supported: the real numbers and prime fields of odd
//! characteristic. In both, `F^x / (F^x)^2` has order two and `Br(F)` is
//! 2-torsion (trivial for finite fields), so every class fits in a small
//! canonical integer representative.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{rational_sign, Fp, Scalar};

/// Largest prime accepted for `F_p`. Keeps primality testing by trial
/// division instantaneous.
pub const MAX_PRIME: u64 = 1 << 31;

/// A supported base field of characteristic not two.
///
/// Build finite fields through [`Field::finite`] (or `"Fp:<p>"` parsing),
/// which checks that `p` is an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Real,
    FinitePrime(u64),
}

impl Field {
    pub fn finite(p: u64) -> Result<Field> {
        if p < 3 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(Field::FinitePrime(p))
    }

    pub fn is_real(&self) -> bool {
        matches!(self, Field::Real)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Real => 0,
            Field::FinitePrime(p) => *p,
        }
    }

    /// Least positive quadratic nonresidue; `None` over the reals.
    pub fn least_nonresidue(&self) -> Option<u64> {
        match *self {
            Field::Real => None,
            Field::FinitePrime(p) => (2..p).find(|&r| !euler_is_square(r, p)),
        }
    }

    /// Canonical representative of `q` in this field: the rational itself over
    /// the reals, the residue in `[0, p)` over `F_p`.
    pub fn reduce(&self, q: &BigRational) -> Result<BigRational> {
        match *self {
            Field::Real => Ok(q.clone()),
            Field::FinitePrime(p) => Fp::from_rational(q, p)
                .map(|r| r.to_rational())
                .ok_or_else(|| Error::NotInvertible {
                    value: q.to_string(),
                    field: *self,
                }),
        }
    }

    /// Square class of an integer.
    pub fn square_class(&self, a: i64) -> SquareClass {
        self.square_class_of(&BigRational::from_integer(BigInt::from(a)))
            .expect("integers reduce in every supported field")
    }

    /// Square class of an exact rational.
    pub fn square_class_of(&self, q: &BigRational) -> Result<SquareClass> {
        match *self {
            Field::Real => Ok(SquareClass {
                field: *self,
                rep: rational_sign(q),
            }),
            Field::FinitePrime(p) => {
                let r = Fp::from_rational(q, p).ok_or_else(|| Error::NotInvertible {
                    value: q.to_string(),
                    field: *self,
                })?;
                Ok(self.class_of_residue(r))
            }
        }
    }

    pub(crate) fn class_of_residue(&self, r: Fp) -> SquareClass {
        let rep = if r.is_zero() {
            0
        } else if euler_is_square(r.value(), r.modulus()) {
            1
        } else {
            self.least_nonresidue().expect("finite field") as i64
        };
        SquareClass { field: *self, rep }
    }

    /// The two nonzero square classes, identity first.
    pub fn square_classes(&self) -> [SquareClass; 2] {
        let other = match self.least_nonresidue() {
            None => -1,
            Some(r) => r as i64,
        };
        [
            SquareClass::one(*self),
            SquareClass {
                field: *self,
                rep: other,
            },
        ]
    }

    /// All elements of `Br(F)`, identity first.
    pub fn brauer_classes(&self) -> Vec<BrauerClass> {
        match self {
            Field::Real => vec![
                BrauerClass::trivial(*self),
                BrauerClass {
                    field: *self,
                    rep: -1,
                },
            ],
            Field::FinitePrime(_) => vec![BrauerClass::trivial(*self)],
        }
    }

    pub(crate) fn ensure_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: *self,
                right: *other,
            })
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Real => write!(f, "R"),
            Field::FinitePrime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t == "R" {
            return Ok(Field::Real);
        }
        let p = t
            .strip_prefix("Fp:")
            .and_then(|rest| rest.parse::<u64>().ok())
            .ok_or_else(|| Error::parse("field", s))?;
        Field::finite(p)
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn euler_is_square(a: u64, p: u64) -> bool {
    let r = Fp::new((a % p) as i64, p);
    r.is_zero() || r.pow((p - 1) / 2).value() == 1
}

/// An element of `F^x/(F^x)^2`, or the distinguished zero class used for
/// vanishing discriminants.
///
/// The representative is canonical: `+1`/`-1` over the reals, `1` or the
/// least nonresidue over `F_p`, and `0` for the zero class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass {
    field: Field,
    rep: i64,
}

impl SquareClass {
    pub fn one(field: Field) -> Self {
        SquareClass { field, rep: 1 }
    }

    pub fn zero(field: Field) -> Self {
        SquareClass { field, rep: 0 }
    }

    /// Class of `-1`.
    pub fn minus_one(field: Field) -> Self {
        field.square_class(-1)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rep(&self) -> i64 {
        self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep == 0
    }

    /// True for the identity class (the class of squares).
    pub fn is_square(&self) -> bool {
        self.rep == 1
    }

    /// Square or zero: the condition appearing in the parity-change criteria.
    pub fn is_square_or_zero(&self) -> bool {
        self.rep == 0 || self.rep == 1
    }

    /// Class of `-a`.
    pub fn negate(self) -> Self {
        self * SquareClass::minus_one(self.field)
    }

    pub fn checked_mul(self, other: SquareClass) -> Result<SquareClass> {
        self.field.ensure_same(&other.field)?;
        Ok(self * other)
    }
}

impl Mul for SquareClass {
    type Output = SquareClass;

    /// # Panics
    /// On mixed fields; use [`SquareClass::checked_mul`] at API boundaries.
    fn mul(self, rhs: SquareClass) -> SquareClass {
        assert_eq!(self.field, rhs.field, "square classes over different fields");
        let rep = if self.rep == 0 || rhs.rep == 0 {
            0
        } else if self.rep == rhs.rep {
            1
        } else if self.rep == 1 {
            rhs.rep
        } else {
            self.rep
        };
        SquareClass {
            field: self.field,
            rep,
        }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl Serialize for SquareClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.rep)
    }
}

/// An element of `Br(F)`: `+1 = [R]`, `-1 = [H]` over the reals; only the
/// trivial class over `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerClass {
    field: Field,
    rep: i8,
}

impl BrauerClass {
    pub fn trivial(field: Field) -> Self {
        BrauerClass { field, rep: 1 }
    }

    /// The class of the Hamilton quaternions.
    pub fn quaternions(field: Field) -> Result<Self> {
        match field {
            Field::Real => Ok(BrauerClass { field, rep: -1 }),
            Field::FinitePrime(_) => Err(Error::NoNontrivialBrauerClass(field)),
        }
    }

    /// `+1` or `-1`; `-1` only exists over the reals.
    pub fn from_sign(field: Field, sign: i64) -> Result<Self> {
        match sign {
            1 => Ok(BrauerClass::trivial(field)),
            -1 => BrauerClass::quaternions(field),
            _ => Err(Error::parse("Brauer class", sign.to_string())),
        }
    }

    /// `(-1)^k` with `k` given by its parity.
    pub(crate) fn minus_one_pow(field: Field, odd: bool) -> Self {
        if odd {
            // Over F_p the quaternion class is split, so this collapses.
            BrauerClass::quaternions(field).unwrap_or(BrauerClass::trivial(field))
        } else {
            BrauerClass::trivial(field)
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rep(&self) -> i64 {
        self.rep as i64
    }

    pub fn is_trivial(&self) -> bool {
        self.rep == 1
    }

    /// Every class is 2-torsion.
    pub fn inverse(self) -> Self {
        self
    }

    pub fn pow(self, odd: bool) -> Self {
        if odd {
            self
        } else {
            BrauerClass::trivial(self.field)
        }
    }
}

impl Mul for BrauerClass {
    type Output = BrauerClass;

    /// # Panics
    /// On mixed fields; use [`brauer_mul`] at API boundaries.
    fn mul(self, rhs: BrauerClass) -> BrauerClass {
        assert_eq!(self.field, rhs.field, "Brauer classes over different fields");
        BrauerClass {
            field: self.field,
            rep: self.rep * rhs.rep,
        }
    }
}

impl fmt::Display for BrauerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl Serialize for BrauerClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.rep as i64)
    }
}

/// Group law of `Br(F)`.
pub fn brauer_mul(x: BrauerClass, y: BrauerClass) -> Result<BrauerClass> {
    x.field.ensure_same(&y.field)?;
    Ok(x * y)
}

/// Brauer class of the quaternion algebra `(a, b)`.
pub fn hilbert_symbol(field: Field, a: SquareClass, b: SquareClass) -> Result<BrauerClass> {
    field.ensure_same(&a.field)?;
    field.ensure_same(&b.field)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroSquareClass);
    }
    Ok(hilbert(a, b))
}

/// Unchecked Hilbert symbol for nonzero classes over a common field.
pub(crate) fn hilbert(a: SquareClass, b: SquareClass) -> BrauerClass {
    debug_assert!(!a.is_zero() && !b.is_zero());
    match a.field {
        Field::Real => BrauerClass {
            field: a.field,
            rep: if a.rep < 0 && b.rep < 0 { -1 } else { 1 },
        },
        Field::FinitePrime(_) => BrauerClass::trivial(a.field),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fields() -> Vec<Field> {
        vec![
            Field::Real,
            Field::finite(3).unwrap(),
            Field::finite(5).unwrap(),
            Field::finite(7).unwrap(),
            Field::finite(13).unwrap(),
        ]
    }

    #[test]
    fn square_class_examples() {
        assert_eq!(Field::Real.square_class(-3).rep(), -1);
        let f5 = Field::finite(5).unwrap();
        assert!(!f5.square_class(2).is_square());
        assert_eq!(f5.square_class(2).rep(), 2);
        let f7 = Field::finite(7).unwrap();
        assert!(f7.square_class(2).is_square());
        assert!(f7.square_class(14).is_zero());
        assert!(Field::Real.square_class(0).is_zero());
    }

    #[test]
    fn squares_by_enumeration() {
        for p in [3u64, 5, 7, 11, 13] {
            let f = Field::finite(p).unwrap();
            let squares: Vec<u64> = (1..p).map(|b| b * b % p).collect();
            for a in 1..p {
                assert_eq!(f.square_class(a as i64).is_square(), squares.contains(&a));
            }
        }
    }

    #[test]
    fn least_nonresidue() {
        assert_eq!(Field::finite(3).unwrap().least_nonresidue(), Some(2));
        assert_eq!(Field::finite(7).unwrap().least_nonresidue(), Some(3));
        assert_eq!(Field::finite(17).unwrap().least_nonresidue(), Some(3));
        assert_eq!(Field::Real.least_nonresidue(), None);
    }

    #[test]
    fn field_parsing() {
        assert_eq!("R".parse::<Field>().unwrap(), Field::Real);
        assert_eq!("Fp:5".parse::<Field>().unwrap(), Field::FinitePrime(5));
        assert_eq!("Fp:4".parse::<Field>(), Err(Error::NotOddPrime(4)));
        assert_eq!("Fp:2".parse::<Field>(), Err(Error::NotOddPrime(2)));
        assert!("C".parse::<Field>().is_err());
        assert_eq!(Field::FinitePrime(11).to_string(), "Fp:11");
    }

    #[test]
    fn hilbert_symbol_examples() {
        let r = Field::Real;
        let m = SquareClass::minus_one(r);
        let one = SquareClass::one(r);
        assert_eq!(hilbert_symbol(r, m, m).unwrap().rep(), -1);
        assert!(hilbert_symbol(r, one, m).unwrap().is_trivial());
        assert!(hilbert_symbol(r, one, one).unwrap().is_trivial());
        let f5 = Field::finite(5).unwrap();
        assert!(hilbert_symbol(f5, f5.square_class(2), f5.square_class(3))
            .unwrap()
            .is_trivial());
        assert_eq!(
            hilbert_symbol(r, SquareClass::zero(r), one),
            Err(Error::ZeroSquareClass)
        );
        assert!(matches!(
            hilbert_symbol(f5, one, m),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn hilbert_symbol_laws() {
        for f in fields() {
            let classes = f.square_classes();
            for &a in &classes {
                assert!(hilbert(a, a.negate()).is_trivial());
                for &b in &classes {
                    assert_eq!(hilbert(a, b), hilbert(b, a));
                    for &c in &classes {
                        assert_eq!(hilbert(a * c, b), hilbert(a, b) * hilbert(c, b));
                    }
                }
            }
        }
    }

    #[test]
    fn square_class_is_multiplicative() {
        for f in fields() {
            for a in -12i64..=12 {
                for b in -12i64..=12 {
                    if f.square_class(a).is_zero() || f.square_class(b).is_zero() {
                        continue;
                    }
                    assert_eq!(f.square_class(a * b), f.square_class(a) * f.square_class(b));
                }
            }
        }
    }

    #[test]
    fn brauer_group() {
        let r = Field::Real;
        let h = BrauerClass::quaternions(r).unwrap();
        let one = BrauerClass::trivial(r);
        assert_eq!(brauer_mul(h, h).unwrap(), one);
        assert_eq!(brauer_mul(one, h).unwrap(), h);
        let f7 = Field::finite(7).unwrap();
        let t = BrauerClass::trivial(f7);
        assert_eq!(brauer_mul(t, t).unwrap(), t);
        assert!(BrauerClass::quaternions(f7).is_err());
        assert!(brauer_mul(t, one).is_err());
        assert_eq!(h.inverse(), h);
    }
}
