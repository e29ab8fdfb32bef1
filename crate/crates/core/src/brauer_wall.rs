//! The Brauer–Wall group in `(epsilon, a, D)` coordinates.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fields::{hilbert, BrauerClass, Field, SquareClass};

/// The `epsilon` coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `-^n`.
    pub fn minus_pow(n: usize) -> Sign {
        if n % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Sign> {
        match s.trim() {
            "+" => Ok(Sign::Plus),
            "-" | "\u{2212}" => Ok(Sign::Minus),
            other => Err(Error::parse("sign", other)),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An element of `BW(F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BwClass {
    pub epsilon: Sign,
    pub a: SquareClass,
    pub d: BrauerClass,
}

/// Real division superalgebras in the order of the powers of `(-, 1, +1)`.
pub const REAL_NAMES: [&str; 8] = [
    "R",
    "R\u{2295}R\u{3b5}",
    "C\u{2295}C\u{3b5}",
    "H\u{2295}H\u{3b4}",
    "H",
    "H\u{2295}H\u{3b5}",
    "C\u{2295}C\u{3b4}",
    "R\u{2295}R\u{3b4}",
];

impl BwClass {
    pub fn new(epsilon: Sign, a: SquareClass, d: BrauerClass) -> Result<BwClass> {
        a.field().ensure_same(&d.field())?;
        if a.is_zero() {
            return Err(Error::ZeroSquareClass);
        }
        Ok(BwClass { epsilon, a, d })
    }

    pub fn identity(field: Field) -> BwClass {
        BwClass {
            epsilon: Sign::Plus,
            a: SquareClass::one(field),
            d: BrauerClass::trivial(field),
        }
    }

    /// Image of a Brauer class under `D -> (+, 1, D)`.
    pub fn from_brauer(d: BrauerClass) -> BwClass {
        BwClass {
            epsilon: Sign::Plus,
            a: SquareClass::one(d.field()),
            d,
        }
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    /// Every element of `BW(F)`, identity first.
    pub fn all(field: Field) -> Vec<BwClass> {
        let mut out = Vec::new();
        for epsilon in [Sign::Plus, Sign::Minus] {
            for a in field.square_classes() {
                for d in field.brauer_classes() {
                    out.push(BwClass { epsilon, a, d });
                }
            }
        }
        out
    }

    /// Wall's group law.
    pub fn bw_mul(&self, other: &BwClass) -> Result<BwClass> {
        self.field().ensure_same(&other.field())?;
        let (x, y) = (self, other);
        let dd = x.d * y.d;
        Ok(match (x.epsilon, y.epsilon) {
            (Sign::Plus, Sign::Plus) => BwClass {
                epsilon: Sign::Plus,
                a: x.a * y.a,
                d: dd * hilbert(x.a, y.a),
            },
            (Sign::Plus, Sign::Minus) => BwClass {
                epsilon: Sign::Minus,
                a: x.a * y.a,
                d: dd * hilbert(x.a, y.a.negate()),
            },
            (Sign::Minus, Sign::Plus) => return y.bw_mul(x),
            (Sign::Minus, Sign::Minus) => BwClass {
                epsilon: Sign::Plus,
                a: (x.a * y.a).negate(),
                d: dd * hilbert(x.a, y.a),
            },
        })
    }

    pub fn bw_inv(&self) -> BwClass {
        match self.epsilon {
            Sign::Plus => BwClass {
                epsilon: Sign::Plus,
                a: self.a,
                d: self.d.inverse() * hilbert(self.a, SquareClass::minus_one(self.field())),
            },
            Sign::Minus => BwClass {
                epsilon: Sign::Minus,
                a: self.a.negate(),
                d: self.d.inverse(),
            },
        }
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(&self, k: u32) -> BwClass {
        let mut acc = BwClass::identity(self.field());
        for _ in 0..k {
            acc = acc.bw_mul(self).expect("same field");
        }
        acc
    }

    /// Name of the real central division superalgebra in this class.
    pub fn real_division_superalgebra_name(&self) -> Result<&'static str> {
        if !self.field().is_real() {
            return Err(Error::NotReal(self.field()));
        }
        let g = real_generator();
        (0..8)
            .find(|&k| g.pow(k) == *self)
            .map(|k| REAL_NAMES[k as usize])
            .ok_or_else(|| Error::Unsupported(format!("{self} is not a real class")))
    }

    /// True iff the class is `(+, 1, D)`, i.e. represented by a purely even
    /// central division algebra.
    pub fn odd_part_vanishes(&self) -> bool {
        self.epsilon == Sign::Plus && self.a.is_square()
    }

    /// Parses `e,a,d` (for example `-,1,1` or `+,-1,-1`).
    pub fn parse(field: Field, s: &str) -> Result<BwClass> {
        let parts: Vec<&str> = s.trim().trim_matches(|c| c == '(' || c == ')').split(',').collect();
        if parts.len() != 3 {
            return Err(Error::parse("BW class", s));
        }
        let epsilon: Sign = parts[0].parse().map_err(|_| Error::parse("BW class", s))?;
        let a: i64 = parse_int(parts[1]).ok_or_else(|| Error::parse("BW class", s))?;
        let d: i64 = parse_int(parts[2]).ok_or_else(|| Error::parse("BW class", s))?;
        let a = field.square_class(a);
        if a.is_zero() {
            return Err(Error::ZeroSquareClass);
        }
        BwClass::new(epsilon, a, BrauerClass::from_sign(field, d)?)
    }
}

fn parse_int(t: &str) -> Option<i64> {
    let t = t.trim().replace('\u{2212}', "-");
    t.strip_prefix('+').unwrap_or(&t).parse().ok()
}

/// The generator `(-, 1, +1)` of `BW(R)`.
pub fn real_generator() -> BwClass {
    BwClass {
        epsilon: Sign::Minus,
        a: SquareClass::one(Field::Real),
        d: BrauerClass::trivial(Field::Real),
    }
}

/// The eight real classes with their names, as powers of `(-, 1, +1)`.
pub fn real_table() -> Vec<(BwClass, &'static str)> {
    let g = real_generator();
    (0..8).map(|k| (g.pow(k), REAL_NAMES[k as usize])).collect()
}

impl fmt::Display for BwClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.epsilon, self.a, self.d)
    }
}
