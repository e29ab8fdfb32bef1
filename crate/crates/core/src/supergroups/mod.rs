//! Catalog of quasi-reductive supergroups: parameters, character lattices,
//! `*`-actions, dominance data and the odd Cartan form `q^lambda`.

mod epsdelta;
mod reflection;

pub use epsdelta::{epsdelta_galois, EpsDelta, EpsDeltaSequence};
pub use reflection::{galois_twist_chain, odd_reflection_step, twist_roots, PairingForm, TwistResult, TwistStep};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fields::Field;
use crate::quadratic_forms::DiagonalQuadraticForm;

/// Family tag with its integer parameters.
///
/// Sizes that the notation writes as `2n` are stored halved, so
/// `QStar { n: 2 }` is `Q*(4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Split queer group `Q_n`.
    SplitQ { n: usize },
    /// `Q(p, q)`.
    Qpq { p: usize, q: usize },
    /// `Q*(2n)`.
    QStar { n: usize },
    /// `U(p, q | r, s)`.
    U { p: usize, q: usize, r: usize, s: usize },
    /// `^0Q(n)`.
    ZeroQ { n: usize },
    /// Unitary periplectic `P(n)`.
    P { n: usize },
    /// `U*(2m | 2n)`.
    UStar { m: usize, n: usize },
    /// `P*(2n)`.
    PStar { n: usize },
    /// `SpO(2n | p, q)`.
    SpO { n: usize, p: usize, q: usize },
    /// `SpO*(p, q | 2r)`.
    SpOStar { p: usize, q: usize, r: usize },
}

/// A catalog group together with its base field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub family: Family,
    pub field: Field,
}

/// Verdict on whether the group admits a positive system fixed by the
/// Galois action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AssumptionVerdict {
    Yes,
    No,
    Conditional(String),
}

/// Membership of a weight in `X^flat`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XflatVerdict {
    Member,
    Nonmember,
    Unknown,
}

impl GroupSpec {
    /// Validates parameters. Only the split queer family may live over `F_p`.
    pub fn new(family: Family, field: Field) -> Result<GroupSpec> {
        if !field.is_real() && !matches!(family, Family::SplitQ { .. }) {
            return Err(Error::Unsupported(format!(
                "{} is a real form; only q:<n> is defined over {field}",
                FamilyDisplay(&family)
            )));
        }
        let g = GroupSpec { family, field };
        if g.lattice_rank() == 0 {
            return Err(Error::InvalidParameter(format!(
                "{g} has a trivial character lattice"
            )));
        }
        Ok(g)
    }

    pub fn split_q(n: usize, field: Field) -> Result<GroupSpec> {
        GroupSpec::new(Family::SplitQ { n }, field)
    }

    pub fn real(family: Family) -> Result<GroupSpec> {
        GroupSpec::new(family, Field::Real)
    }

    /// Rank `N` of the character lattice of the maximal torus.
    pub fn lattice_rank(&self) -> usize {
        match self.family {
            Family::SplitQ { n } => n,
            Family::Qpq { p, q } => p + q,
            Family::QStar { n } => 2 * n,
            Family::U { p, q, r, s } => p + q + r + s,
            Family::ZeroQ { n } | Family::P { n } => 2 * n,
            Family::UStar { m, n } => 2 * m + 2 * n,
            Family::PStar { n } => 2 * n,
            Family::SpO { n, p, q } => n + (p + q) / 2,
            Family::SpOStar { p, q, r } => p + q + r,
        }
    }

    /// Dimension of the odd part of the Cartan subalgebra.
    pub fn h1_dim(&self) -> usize {
        if self.is_queer() {
            self.lattice_rank()
        } else {
            0
        }
    }

    pub fn is_queer(&self) -> bool {
        matches!(
            self.family,
            Family::SplitQ { .. } | Family::Qpq { .. } | Family::QStar { .. }
        )
    }

    pub fn is_split(&self) -> bool {
        matches!(self.family, Family::SplitQ { .. })
    }

    /// Basic classical of gl or osp type.
    pub fn is_basic_main_type(&self) -> bool {
        matches!(
            self.family,
            Family::U { .. }
                | Family::ZeroQ { .. }
                | Family::UStar { .. }
                | Family::SpO { .. }
                | Family::SpOStar { .. }
        )
    }

    /// Checks the length of a weight against the lattice rank.
    pub fn check_weight(&self, lambda: &Weight) -> Result<()> {
        if lambda.len() != self.lattice_rank() {
            return Err(Error::WeightLength {
                group: self.to_string(),
                expected: self.lattice_rank(),
                got: lambda.len(),
            });
        }
        Ok(())
    }

    /// `lambda -> w^{-1} sigma(lambda)` for the nontrivial Galois element
    /// (identity over finite fields, where every catalog group is split).
    pub fn star_involution(&self, lambda: &Weight) -> Result<Weight> {
        self.check_weight(lambda)?;
        let l = &lambda.0;
        let out = match self.family {
            Family::SplitQ { .. }
            | Family::QStar { .. }
            | Family::UStar { .. }
            | Family::PStar { .. } => l.clone(),
            Family::Qpq { .. } => l.iter().rev().map(|x| -x).collect(),
            Family::P { n } => l[n..].iter().chain(&l[..n]).map(|x| -x).collect(),
            Family::ZeroQ { n } => l[n..].iter().chain(&l[..n]).copied().collect(),
            Family::U { p, q, .. } => {
                let k = p + q;
                l[..k]
                    .iter()
                    .rev()
                    .chain(l[k..].iter().rev())
                    .map(|x| -x)
                    .collect()
            }
            Family::SpO { .. } | Family::SpOStar { .. } => {
                let mut v = l.clone();
                if self.spo_flips_last() {
                    let last = v.len() - 1;
                    v[last] = -v[last];
                }
                v
            }
        };
        Ok(Weight(out))
    }

    /// Whether the `*`-action of an orthosymplectic form negates the last
    /// coordinate.
    fn spo_flips_last(&self) -> bool {
        match self.family {
            Family::SpO { p, q, .. } => {
                let both_even = p % 2 == 0 && q % 2 == 0;
                let both_odd = p % 2 == 1 && q % 2 == 1;
                (both_even && (p + q) % 4 == 2) || (both_odd && (p + q) % 4 == 0)
            }
            Family::SpOStar { r, .. } => r % 2 == 1,
            _ => false,
        }
    }

    pub fn assumption_holds(&self) -> AssumptionVerdict {
        match self.family {
            Family::U { p, q, r, s } => {
                if ((p + q) * (r + s)) % 2 == 0 {
                    AssumptionVerdict::Yes
                } else {
                    AssumptionVerdict::No
                }
            }
            Family::ZeroQ { .. } => AssumptionVerdict::No,
            Family::SpO { .. } if self.spo_flips_last() => AssumptionVerdict::Conditional(
                "holds for the standard positive system, which the Galois action fixes".into(),
            ),
            _ => AssumptionVerdict::Yes,
        }
    }

    /// Membership of `lambda` in `X^flat`, as far as the catalog determines it.
    pub fn xflat_verdict(&self, lambda: &Weight) -> Result<XflatVerdict> {
        self.check_weight(lambda)?;
        let l = &lambda.0;
        let decided = |ok: bool| {
            if ok {
                XflatVerdict::Member
            } else {
                XflatVerdict::Nonmember
            }
        };
        let necessary = |ok: bool| {
            if ok {
                XflatVerdict::Unknown
            } else {
                XflatVerdict::Nonmember
            }
        };
        Ok(match self.family {
            Family::SplitQ { .. } => {
                decided(queer_chain_ok(l.iter().copied(), self.field.characteristic()))
            }
            Family::Qpq { .. } => decided(queer_chain_ok(l.iter().copied(), 0)),
            Family::QStar { n } => {
                let chain = l[..n].iter().chain(l[n..].iter().rev()).copied();
                decided(queer_chain_ok(chain, 0))
            }
            Family::ZeroQ { .. } => XflatVerdict::Member,
            Family::U { p, q, .. } => {
                let k = p + q;
                necessary(decreasing(&l[..k]) && decreasing(&l[k..]))
            }
            Family::P { n } => necessary(decreasing(&l[..n]) && increasing(&l[n..])),
            Family::UStar { m, .. } => {
                let k = 2 * m;
                necessary(decreasing(&l[..k]) && decreasing(&l[k..]))
            }
            Family::PStar { .. } => necessary(decreasing(l)),
            Family::SpO { n, p, q } => {
                let orth = &l[n..];
                let orth_ok = if (p + q) % 2 == 1 {
                    type_c_or_b(orth)
                } else {
                    type_d(orth)
                };
                necessary(type_c_or_b(&l[..n]) && orth_ok)
            }
            Family::SpOStar { p, q, .. } => {
                let k = p + q;
                necessary(type_c_or_b(&l[..k]) && type_d(&l[k..]))
            }
        })
    }

    /// The form `q^lambda(x) = lambda([x, x]) / 2` on the odd Cartan part.
    pub fn q_lambda_form(&self, lambda: &Weight) -> Result<DiagonalQuadraticForm> {
        self.check_weight(lambda)?;
        if self.is_queer() {
            Ok(DiagonalQuadraticForm::from_integers(self.field, &lambda.0))
        } else {
            Ok(DiagonalQuadraticForm::empty(self.field))
        }
    }

    /// Supertrace pairing of the gl-type datum, for the families that have one.
    pub fn pairing(&self) -> Option<PairingForm> {
        match self.family {
            Family::U { p, q, r, s } => Some(PairingForm::gl(p + q, r + s)),
            Family::ZeroQ { n } | Family::P { n } => Some(PairingForm::gl(n, n)),
            Family::UStar { m, n } => Some(PairingForm::gl(2 * m, 2 * n)),
            _ => None,
        }
    }
}

fn decreasing(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

fn increasing(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

fn type_c_or_b(v: &[i64]) -> bool {
    decreasing(v) && v.last().is_none_or(|&x| x >= 0)
}

fn type_d(v: &[i64]) -> bool {
    let k = v.len();
    if k < 2 {
        return true;
    }
    decreasing(&v[..k - 1]) && v[k - 2] >= v[k - 1].abs()
}

/// Weakly decreasing, and equal neighbours vanish in the base field.
fn queer_chain_ok(chain: impl Iterator<Item = i64>, characteristic: u64) -> bool {
    let v: Vec<i64> = chain.collect();
    v.windows(2).all(|w| {
        w[0] > w[1]
            || (w[0] == w[1]
                && match characteristic {
                    0 => w[0] == 0,
                    p => w[0].rem_euclid(p as i64) == 0,
                })
    })
}

struct FamilyDisplay<'a>(&'a Family);

impl fmt::Display for FamilyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self.0 {
            Family::SplitQ { n } => write!(f, "q:{n}"),
            Family::Qpq { p, q } => write!(f, "qpq:{p},{q}"),
            Family::QStar { n } => write!(f, "qstar:{}", 2 * n),
            Family::U { p, q, r, s } => write!(f, "u:{p},{q},{r},{s}"),
            Family::ZeroQ { n } => write!(f, "zeroq:{n}"),
            Family::P { n } => write!(f, "p:{n}"),
            Family::UStar { m, n } => write!(f, "ustar:{},{}", 2 * m, 2 * n),
            Family::PStar { n } => write!(f, "pstar:{}", 2 * n),
            Family::SpO { n, p, q } => write!(f, "spo:{},{p},{q}", 2 * n),
            Family::SpOStar { p, q, r } => write!(f, "spostar:{p},{q},{}", 2 * r),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        FamilyDisplay(self).fmt(f)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if !self.field.is_real() {
            write!(f, "@{}", self.field)?;
        }
        Ok(())
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses `family:params[@field]`, e.g. `q:4@Fp:5` or `u:1,0,1,0`.
    fn from_str(s: &str) -> Result<GroupSpec> {
        let t = s.trim();
        let (body, field) = match t.split_once('@') {
            Some((b, f)) => (b, f.parse::<Field>()?),
            None => (t, Field::Real),
        };
        let (tag, params) = body.split_once(':').ok_or_else(|| Error::parse("group", s))?;
        let nums = params
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::parse("group parameter", x)))
            .collect::<Result<Vec<_>>>()?;
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{tag} takes {k} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let half = |x: usize| -> Result<usize> {
            if x % 2 == 0 {
                Ok(x / 2)
            } else {
                Err(Error::InvalidParameter(format!("{tag} expects even size, got {x}")))
            }
        };
        let family = match tag.trim() {
            "q" => {
                arity(1)?;
                Family::SplitQ { n: nums[0] }
            }
            "qpq" => {
                arity(2)?;
                Family::Qpq { p: nums[0], q: nums[1] }
            }
            "qstar" => {
                arity(1)?;
                Family::QStar { n: half(nums[0])? }
            }
            "u" => {
                arity(4)?;
                Family::U {
                    p: nums[0],
                    q: nums[1],
                    r: nums[2],
                    s: nums[3],
                }
            }
            "zeroq" => {
                arity(1)?;
                Family::ZeroQ { n: nums[0] }
            }
            "p" => {
                arity(1)?;
                Family::P { n: nums[0] }
            }
            "ustar" => {
                arity(2)?;
                Family::UStar {
                    m: half(nums[0])?,
                    n: half(nums[1])?,
                }
            }
            "pstar" => {
                arity(1)?;
                Family::PStar { n: half(nums[0])? }
            }
            "spo" => {
                arity(3)?;
                Family::SpO {
                    n: half(nums[0])?,
                    p: nums[1],
                    q: nums[2],
                }
            }
            "spostar" => {
                arity(3)?;
                Family::SpOStar {
                    p: nums[0],
                    q: nums[1],
                    r: half(nums[2])?,
                }
            }
            other => return Err(Error::parse("group family", other)),
        };
        GroupSpec::new(family, field)
    }
}

/// A character `lambda` in the standard coordinates `Z^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Weight {
        Weight(vec![0; n])
    }

    /// The basis vector `e_i` (1-based).
    pub fn e(n: usize, i: usize) -> Weight {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `|lambda| = sum lambda_i`.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Weight> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        t.split(',')
            .map(|x| {
                let x = x.trim().replace('\u{2212}', "-");
                x.parse::<i64>().map_err(|_| Error::parse("weight entry", x))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl fmt::Display for AssumptionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AssumptionVerdict::Yes => write!(f, "yes"),
            AssumptionVerdict::No => write!(f, "no"),
            AssumptionVerdict::Conditional(t) => write!(f, "conditional({t})"),
        }
    }
}

impl Serialize for AssumptionVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for XflatVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            XflatVerdict::Member => "member",
            XflatVerdict::Nonmember => "nonmember",
            XflatVerdict::Unknown => "unknown",
        })
    }
}

impl Serialize for XflatVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
