//! Classification of irreducible representations: from a catalog group and a
//! highest weight to the full report on parity self-duality, rationality and
//! the division superalgebra of endomorphisms.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::binomial::binomial_is_odd;
use crate::brauer_wall::{BwClass, Sign};
use crate::clifford::semisimple_wall_class;
use crate::error::{Error, Result};
use crate::fields::{BrauerClass, Field, SquareClass};
use crate::supergroups::{galois_twist_chain, Family, GroupSpec, Weight, XflatVerdict};

/// A report value that the catalog may fail to pin down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Determined<T> {
    Known(T),
    /// The value exists but is not computed by the available data.
    Undetermined(String),
    /// The value is not defined for this representation.
    NotApplicable(String),
}

impl<T> Determined<T> {
    pub fn known(&self) -> Option<&T> {
        match self {
            Determined::Known(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_undetermined(&self) -> bool {
        matches!(self, Determined::Undetermined(_))
    }

    fn render(&self, f: impl Fn(&T) -> String) -> String {
        match self {
            Determined::Known(t) => f(t),
            Determined::Undetermined(r) => format!("? ({r})"),
            Determined::NotApplicable(r) => format!("n/a ({r})"),
        }
    }
}

impl<T: Serialize> Serialize for Determined<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Determined::Known(t) => t.serialize(s),
            Determined::Undetermined(r) => s.collect_str(&format_args!("undetermined({r})")),
            Determined::NotApplicable(r) => s.collect_str(&format_args!("n/a({r})")),
        }
    }
}

/// Three-valued verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Verdict {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        })
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Even part of the center of the endomorphism superalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CenterField {
    Base,
    QuadraticExtension,
}

impl fmt::Display for CenterField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CenterField::Base => "base",
            CenterField::QuadraticExtension => "quadratic-extension",
        })
    }
}

impl Serialize for CenterField {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn yes_no<S: Serializer>(b: &bool, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(if *b { "yes" } else { "no" })
}

/// Everything the classification determines about `V(lambda)` over the base
/// field.
///
/// `pi_self_iso` records whether `V ≅ ΠV` over the base field. `epsilon` is
/// the first coordinate of the endomorphism superalgebra over the even part
/// of its center, so it is defined even when that center is larger than the
/// base field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub group: GroupSpec,
    pub field: Field,
    pub weight: Weight,
    pub in_xflat: XflatVerdict,
    pub d_lambda: usize,
    pub delta_lambda: SquareClass,
    #[serde(serialize_with = "yes_no")]
    pub pi_self_iso: bool,
    #[serde(serialize_with = "yes_no")]
    pub super_quasi_rational: bool,
    #[serde(serialize_with = "yes_no")]
    pub quasi_rational: bool,
    pub epsilon: Sign,
    pub a_component: Determined<SquareClass>,
    pub d_component: Determined<BrauerClass>,
    pub bw_class: Determined<BwClass>,
    pub endo_name: Determined<String>,
    pub center_even_field: CenterField,
    pub absolutely_irreducible: Verdict,
    pub branch: String,
}

impl ClassificationReport {
    /// Canonical JSON (keys sorted, two-space indent).
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    /// Human-readable rendering, one `key: value` per line.
    pub fn to_text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let lines = [
            ("group", self.group.to_string()),
            ("field", self.field.to_string()),
            ("weight", self.weight.to_string()),
            ("in_xflat", self.in_xflat.to_string()),
            ("d_lambda", self.d_lambda.to_string()),
            ("delta_lambda", self.delta_lambda.to_string()),
            ("pi_self_iso", yn(self.pi_self_iso).into()),
            ("super_quasi_rational", yn(self.super_quasi_rational).into()),
            ("quasi_rational", yn(self.quasi_rational).into()),
            ("epsilon", self.epsilon.to_string()),
            ("a_component", self.a_component.render(|a| a.to_string())),
            ("d_component", self.d_component.render(|d| d.to_string())),
            ("bw_class", self.bw_class.render(|b| b.to_string())),
            ("endo_name", self.endo_name.render(|n| n.clone())),
            ("center_even_field", self.center_even_field.to_string()),
            ("absolutely_irreducible", self.absolutely_irreducible.to_string()),
            ("branch", self.branch.clone()),
        ];
        let mut out = String::new();
        for (k, v) in lines {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out
    }

    /// True if any field is undetermined (not merely inapplicable).
    pub fn has_undetermined(&self) -> bool {
        self.a_component.is_undetermined()
            || self.d_component.is_undetermined()
            || self.bw_class.is_undetermined()
            || self.endo_name.is_undetermined()
            || self.absolutely_irreducible == Verdict::Unknown
    }
}

/// `beta^super` of a split group via the Clifford class of `q^{-lambda}`.
pub fn split_route_class(g: &GroupSpec, lambda: &Weight) -> Result<BwClass> {
    if !g.is_split() {
        return Err(Error::Unsupported(format!("{g} is not a split group")));
    }
    Ok(semisimple_wall_class(&g.q_lambda_form(&lambda.neg())?))
}

fn sign_counts(lambda: &Weight) -> (usize, usize) {
    let pos = lambda.coords().iter().filter(|&&x| x > 0).count();
    let neg = lambda.coords().iter().filter(|&&x| x < 0).count();
    (pos, neg)
}

fn real_class(epsilon: Sign, a_odd: bool, d_odd: bool) -> BwClass {
    let r = Field::Real;
    BwClass {
        epsilon,
        a: if a_odd { SquareClass::minus_one(r) } else { SquareClass::one(r) },
        d: BrauerClass::minus_one_pow(r, d_odd),
    }
}

/// Closed form for the split queer group over the reals in terms of the
/// numbers of positive and negative entries.
pub fn split_q_real_closed_form(lambda: &Weight) -> BwClass {
    let (np, nm) = sign_counts(lambda);
    let d = (np + nm) as i64;
    let np_i = np as i64;
    let a_odd = binomial_is_odd(d, 2) ^ (np % 2 == 1);
    let d_odd = binomial_is_odd(np_i, 2)
        ^ (binomial_is_odd(d - 1, 2) && np % 2 == 1)
        ^ binomial_is_odd(d + 1, 4);
    real_class(Sign::minus_pow(d as usize), a_odd, d_odd)
}

/// Closed form for the split queer group over `F_p`.
pub fn split_q_finite_closed_form(field: Field, lambda: &Weight) -> BwClass {
    let p = field.characteristic() as i64;
    let support: Vec<i64> = lambda.coords().iter().copied().filter(|x| x.rem_euclid(p) != 0).collect();
    let d = support.len();
    let mut a = if binomial_is_odd(d as i64 + 1, 2) {
        SquareClass::minus_one(field)
    } else {
        SquareClass::one(field)
    };
    for x in support {
        a = a * field.square_class(x);
    }
    BwClass {
        epsilon: Sign::minus_pow(d),
        a,
        d: BrauerClass::trivial(field),
    }
}

/// Closed form for `Q*(2n)`: the split answer twisted by the sign of `|lambda|`.
pub fn qstar_closed_form(lambda: &Weight) -> BwClass {
    let (np, nm) = sign_counts(lambda);
    let d = (np + nm) as i64;
    let a_odd = binomial_is_odd(d, 2) ^ (np % 2 == 1);
    let d_odd = (lambda.total().rem_euclid(2) == 1)
        ^ binomial_is_odd(np as i64, 2)
        ^ (np % 2 == 1 && binomial_is_odd(d - 1, 2))
        ^ binomial_is_odd(d + 1, 4);
    real_class(Sign::minus_pow(d as usize), a_odd, d_odd)
}

struct Invariants {
    d: usize,
    delta: SquareClass,
}

fn form_invariants(g: &GroupSpec, lambda: &Weight) -> Result<Invariants> {
    let (nd, _) = g.q_lambda_form(lambda)?.split_radical();
    let d = nd.dim();
    let delta = if d == 0 {
        SquareClass::zero(g.field)
    } else {
        nd.signed_discriminant()
    };
    Ok(Invariants { d, delta })
}

fn name_of(bw: &BwClass) -> Determined<String> {
    match bw.real_division_superalgebra_name() {
        Ok(n) => Determined::Known(n.to_string()),
        Err(_) => Determined::NotApplicable("names are tabulated over R only".into()),
    }
}

/// Absolute irreducibility: quasi-rational with trivial Brauer component.
fn abs_irr(quasi_rational: bool, d: &Determined<BrauerClass>) -> Verdict {
    if !quasi_rational {
        return Verdict::No;
    }
    match d {
        Determined::Known(d) => d.is_trivial().into(),
        _ => Verdict::Unknown,
    }
}

struct Base {
    g: GroupSpec,
    lambda: Weight,
    in_xflat: XflatVerdict,
    inv: Invariants,
}

impl Base {
    fn report(
        self,
        pi_self_iso: bool,
        super_quasi_rational: bool,
        quasi_rational: bool,
        epsilon: Sign,
        a_component: Determined<SquareClass>,
        d_component: Determined<BrauerClass>,
        endo_name: Option<Determined<String>>,
        branch: &str,
    ) -> ClassificationReport {
        let bw_class = match (&a_component, &d_component) {
            (Determined::Known(a), Determined::Known(d)) => Determined::Known(BwClass {
                epsilon,
                a: *a,
                d: *d,
            }),
            (Determined::NotApplicable(r), _) | (_, Determined::NotApplicable(r)) => {
                Determined::NotApplicable(r.clone())
            }
            (Determined::Undetermined(r), _) | (_, Determined::Undetermined(r)) => {
                Determined::Undetermined(r.clone())
            }
        };
        let endo_name = endo_name.unwrap_or_else(|| match bw_class.known() {
            Some(bw) => name_of(bw),
            None => Determined::Undetermined("depends on the undetermined Brauer component".into()),
        });
        ClassificationReport {
            group: self.g,
            field: self.g.field,
            weight: self.lambda,
            in_xflat: self.in_xflat,
            d_lambda: self.inv.d,
            delta_lambda: self.inv.delta,
            pi_self_iso,
            super_quasi_rational,
            quasi_rational,
            epsilon,
            absolutely_irreducible: abs_irr(quasi_rational, &d_component),
            a_component,
            d_component,
            bw_class,
            endo_name,
            center_even_field: if super_quasi_rational {
                CenterField::Base
            } else {
                CenterField::QuadraticExtension
            },
            branch: branch.to_string(),
        }
    }

    fn from_class(
        self,
        bw: BwClass,
        pi_self_iso: bool,
        branch: &str,
    ) -> ClassificationReport {
        let quasi_rational = bw.epsilon.is_minus() || bw.a.is_square();
        self.report(
            pi_self_iso,
            true,
            quasi_rational,
            bw.epsilon,
            Determined::Known(bw.a),
            Determined::Known(bw.d),
            None,
            branch,
        )
    }
}

const NOT_SQRAT: &str = "the endomorphism superalgebra is not central over the base field";
const BT_UNKNOWN: &str = "Borel-Tits class of the highest weight is not tabulated for this family";

/// Classifies the irreducible representation of highest weight `lambda`.
pub fn classify(g: &GroupSpec, lambda: &Weight) -> Result<ClassificationReport> {
    g.check_weight(lambda)?;
    let in_xflat = g.xflat_verdict(lambda)?;
    if in_xflat == XflatVerdict::Nonmember {
        return Err(Error::NotInXflat {
            group: g.to_string(),
            weight: lambda.to_string(),
        });
    }
    let inv = form_invariants(g, lambda)?;
    let parity_pair = !(inv.d % 2 == 0 && inv.delta.is_square_or_zero());
    let base = Base {
        g: *g,
        lambda: lambda.clone(),
        in_xflat,
        inv,
    };
    let star = g.star_involution(lambda)?;

    Ok(match g.family {
        Family::SplitQ { .. } => {
            let bw = split_route_class(g, lambda)?;
            debug_assert_eq!(
                bw,
                if g.field.is_real() {
                    split_q_real_closed_form(lambda)
                } else {
                    split_q_finite_closed_form(g.field, lambda)
                }
            );
            base.from_class(bw, parity_pair, "split group: Clifford class of q^(-lambda)")
        }
        Family::QStar { .. } => {
            let bw = qstar_closed_form(lambda);
            debug_assert_eq!(bw, {
                let split = semisimple_wall_class(&g.q_lambda_form(&lambda.neg())?);
                let bt = BrauerClass::minus_one_pow(Field::Real, lambda.total().rem_euclid(2) == 1);
                BwClass::from_brauer(bt).bw_mul(&split)?
            });
            base.from_class(
                bw,
                parity_pair,
                "trivial *-action: transfer to the split form, twisted by (-1)^|lambda|",
            )
        }
        Family::Qpq { .. } => {
            if star == *lambda {
                let r = Field::Real;
                base.report(
                    false,
                    true,
                    true,
                    Sign::Plus,
                    Determined::Known(SquareClass::one(r)),
                    Determined::Known(BrauerClass::trivial(r)),
                    None,
                    "Q(p,q) case I: *-fixed weight, Galois-stable isotropic subspace",
                )
            } else {
                let d = base.inv.d;
                let odd = d % 2 == 1;
                let name = if odd { "C[e]/(e^2-1)" } else { "C" };
                base.report(
                    odd,
                    false,
                    false,
                    Sign::minus_pow(d),
                    Determined::NotApplicable(NOT_SQRAT.into()),
                    Determined::NotApplicable(NOT_SQRAT.into()),
                    Some(Determined::Known(name.into())),
                    "Q(p,q) case II: weight not *-fixed",
                )
            }
        }
        Family::ZeroQ { .. } | Family::U { .. } if g.twist_chain_applies() => {
            let t = galois_twist_chain(g, lambda)?;
            let r = Field::Real;
            if t.final_weight != *lambda {
                base.report(
                    false,
                    false,
                    false,
                    Sign::Plus,
                    Determined::NotApplicable(NOT_SQRAT.into()),
                    Determined::NotApplicable(NOT_SQRAT.into()),
                    Some(Determined::Known("C".into())),
                    "odd-reflection twist chain: final weight differs",
                )
            } else if !t.parity_odd() {
                let d = trivial_if_zero(lambda);
                base.report(
                    false,
                    true,
                    true,
                    Sign::Plus,
                    Determined::Known(SquareClass::one(r)),
                    d,
                    None,
                    "odd-reflection twist chain: fixed weight, even parity",
                )
            } else {
                base.report(
                    true,
                    true,
                    false,
                    Sign::Plus,
                    Determined::Known(SquareClass::minus_one(r)),
                    Determined::Undetermined(BT_UNKNOWN.into()),
                    Some(Determined::Undetermined(
                        "C⊕Cε or C⊕Cδ depending on the Brauer component".into(),
                    )),
                    "odd-reflection twist chain: fixed weight, odd parity",
                )
            }
        }
        _ => {
            let r = Field::Real;
            let branch = match g.assumption_holds() {
                crate::supergroups::AssumptionVerdict::Conditional(_) => {
                    "h1=0 with Galois-stable standard positive system: rational iff *-fixed"
                }
                _ => "h1=0 with Galois-stable positive system: rational iff *-fixed",
            };
            if star == *lambda {
                let d = trivial_if_zero(lambda);
                let name = match d {
                    Determined::Known(_) => None,
                    _ => Some(Determined::Undetermined(
                        "R or H depending on the Borel-Tits class".into(),
                    )),
                };
                base.report(
                    false,
                    true,
                    true,
                    Sign::Plus,
                    Determined::Known(SquareClass::one(r)),
                    d,
                    name,
                    branch,
                )
            } else {
                base.report(
                    false,
                    false,
                    false,
                    Sign::Plus,
                    Determined::NotApplicable(NOT_SQRAT.into()),
                    Determined::NotApplicable(NOT_SQRAT.into()),
                    Some(Determined::Known("C".into())),
                    branch,
                )
            }
        }
    })
}

/// The Borel-Tits class of the zero weight is trivial; other weights are
/// outside the catalog for the `h1 = 0` real forms.
fn trivial_if_zero(lambda: &Weight) -> Determined<BrauerClass> {
    if lambda.is_zero() {
        Determined::Known(BrauerClass::trivial(Field::Real))
    } else {
        Determined::Undetermined(BT_UNKNOWN.into())
    }
}

impl GroupSpec {
    /// Whether classification goes through the odd-reflection chain.
    pub fn twist_chain_applies(&self) -> bool {
        match self.family {
            Family::ZeroQ { .. } => true,
            Family::U { p, q, r, s } => (p + q) % 2 == 1 && (r + s) % 2 == 1,
            _ => false,
        }
    }
}
