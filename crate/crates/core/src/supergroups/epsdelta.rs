//! epsilon-delta sequences labelling positive systems of gl-type data.

use std::fmt;
use std::str::FromStr;

use super::{Family, GroupSpec};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EpsDelta {
    Eps,
    Delta,
}

/// A word in `{ε, δ}`. Parsing accepts `ε`/`δ` or ASCII `e`/`d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpsDeltaSequence(pub Vec<EpsDelta>);

impl EpsDeltaSequence {
    pub fn count(&self, sym: EpsDelta) -> usize {
        self.0.iter().filter(|&&s| s == sym).count()
    }
}

impl FromStr for EpsDeltaSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'ε' | 'e' => Ok(EpsDelta::Eps),
                'δ' | 'd' => Ok(EpsDelta::Delta),
                _ => Err(Error::parse("epsilon-delta sequence", s)),
            })
            .collect::<Result<Vec<_>>>()
            .map(EpsDeltaSequence)
    }
}

impl fmt::Display for EpsDeltaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                EpsDelta::Eps => "ε",
                EpsDelta::Delta => "δ",
            })?;
        }
        Ok(())
    }
}

/// Galois action on sequences: reversal for `U(p,q|r,s)`, the switch
/// `ε <-> δ` for `^0Q(n)`.
pub fn epsdelta_galois(g: &GroupSpec, s: &EpsDeltaSequence) -> Result<EpsDeltaSequence> {
    let (even, odd) = match g.family {
        Family::U { p, q, r, s } => (p + q, r + s),
        Family::ZeroQ { n } => (n, n),
        _ => {
            return Err(Error::Unsupported(format!(
                "{g} has no epsilon-delta sequence action in the catalog"
            )))
        }
    };
    if s.count(EpsDelta::Eps) != even || s.count(EpsDelta::Delta) != odd {
        return Err(Error::InvalidParameter(format!(
            "sequence {s} must have {even} ε and {odd} δ for {g}"
        )));
    }
    Ok(match g.family {
        Family::U { .. } => EpsDeltaSequence(s.0.iter().rev().copied().collect()),
        _ => EpsDeltaSequence(
            s.0.iter()
                .map(|x| match x {
                    EpsDelta::Eps => EpsDelta::Delta,
                    EpsDelta::Delta => EpsDelta::Eps,
                })
                .collect(),
        ),
    })
}
