//! Exact scalar arithmetic shared by the linear-algebra routines.
//!
//! Reals are modelled by exact rationals. Square classes over the reals only
//! depend on the sign, which rationals preserve, so nothing downstream ever
//! needs a float.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact field element used by the generic elimination and oracle code.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Zero of the same field as `self`.
    fn zero_like(&self) -> Self;
    /// One of the same field as `self`.
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Option<Self>;
    /// Canonical rational representative (residues land in `[0, p)`).
    fn to_rational(&self) -> BigRational;
}

impl Scalar for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }

    fn one_like(&self) -> Self {
        BigRational::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

/// Residue modulo an odd prime `p`, stored in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        let v = (value as i128).rem_euclid(m) as u64;
        Fp { value: v, modulus }
    }

    /// Reduces an exact rational; `None` when `p` divides the denominator.
    pub fn from_rational(q: &BigRational, modulus: u64) -> Option<Self> {
        let m = BigInt::from(modulus);
        let num = q.numer().mod_floor(&m).to_u64()?;
        let den = q.denom().mod_floor(&m).to_u64()?;
        let den = Fp {
            value: den,
            modulus,
        }
        .inverse()?;
        Some(
            Fp {
                value: num,
                modulus,
            } * den,
        )
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = self.one_like();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    fn check(&self, other: &Fp) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli in residue arithmetic"
        );
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let s = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        Fp {
            value: s as u64,
            modulus: self.modulus,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        let v = if self.value == 0 {
            0
        } else {
            self.modulus - self.value
        };
        Fp {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let p = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        Fp {
            value: p as u64,
            modulus: self.modulus,
        }
    }
}

impl Scalar for Fp {
    fn zero_like(&self) -> Self {
        Fp {
            value: 0,
            modulus: self.modulus,
        }
    }

    fn one_like(&self) -> Self {
        Fp {
            value: 1 % self.modulus,
            modulus: self.modulus,
        }
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2) = a^-1.
        Some(self.pow(self.modulus - 2))
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.value))
    }
}

/// Sign of a nonzero rational as `+1` / `-1`, `0` for zero.
pub(crate) fn rational_sign(q: &BigRational) -> i64 {
    if Zero::is_zero(q) {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
