//! Odd reflections and the Galois twist chains of the basic catalog groups.

use serde::Serialize;

use super::{Family, GroupSpec, Weight};
use crate::error::{Error, Result};

/// Diagonal supertrace form: `(e_i, e_i) = +1` on the even block and `-1`
/// on the odd block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingForm {
    signs: Vec<i64>,
}

impl PairingForm {
    /// The form of `gl(m|n)`.
    pub fn gl(m: usize, n: usize) -> PairingForm {
        let mut signs = vec![1; m];
        signs.extend(std::iter::repeat_n(-1, n));
        PairingForm { signs }
    }

    pub fn dim(&self) -> usize {
        self.signs.len()
    }

    pub fn pair(&self, x: &Weight, y: &Weight) -> i64 {
        self.signs
            .iter()
            .zip(x.coords().iter().zip(y.coords()))
            .map(|(s, (a, b))| s * a * b)
            .sum()
    }

    fn check_len(&self, w: &Weight) -> Result<()> {
        if w.len() != self.dim() {
            return Err(Error::WeightLength {
                group: format!("gl({}|{})", self.signs.iter().filter(|&&s| s > 0).count(), self.signs.iter().filter(|&&s| s < 0).count()),
                expected: self.dim(),
                got: w.len(),
            });
        }
        Ok(())
    }
}

/// Effect of the odd reflection at `alpha` on a highest weight: unchanged if
/// `(lambda, alpha) = 0`, otherwise `lambda - alpha` with a parity flip.
pub fn odd_reflection_step(lambda: &Weight, alpha: &Weight, form: &PairingForm) -> Result<(Weight, bool)> {
    form.check_len(lambda)?;
    form.check_len(alpha)?;
    if alpha.is_zero() || form.pair(alpha, alpha) != 0 {
        return Err(Error::NotIsotropic {
            root: alpha.to_string(),
        });
    }
    if form.pair(lambda, alpha) == 0 {
        Ok((lambda.clone(), false))
    } else {
        Ok((lambda.sub(alpha), true))
    }
}

/// One step of an executed chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistStep {
    pub root: Weight,
    pub applied: bool,
}

/// Outcome of the twist chain starting at `w^{-1} sigma(lambda)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistResult {
    pub start: Weight,
    pub final_weight: Weight,
    pub parity_flips: usize,
    pub chain: Vec<TwistStep>,
}

impl TwistResult {
    pub fn parity_odd(&self) -> bool {
        self.parity_flips % 2 == 1
    }
}

/// The catalog chain of odd roots for groups whose Galois action moves the
/// positive system.
pub fn twist_roots(g: &GroupSpec) -> Result<Vec<Weight>> {
    let big_n = g.lattice_rank();
    match g.family {
        Family::U { p, q, r, s } if (p + q) % 2 == 1 && (r + s) % 2 == 1 => {
            let m = (p + q - 1) / 2;
            let n = (r + s - 1) / 2;
            Ok(vec![Weight::e(big_n, m + 1).sub(&Weight::e(big_n, 2 * m + n + 2))])
        }
        Family::ZeroQ { n } => Ok((1..=n)
            .map(|i| Weight::e(big_n, i).sub(&Weight::e(big_n, i + n)))
            .collect()),
        _ => Err(Error::Unsupported(format!("{g} has no catalog twist chain"))),
    }
}

/// Runs the odd-reflection chain taking the twisted positive system back to
/// the chosen one.
pub fn galois_twist_chain(g: &GroupSpec, lambda: &Weight) -> Result<TwistResult> {
    let roots = twist_roots(g)?;
    let form = g.pairing().expect("gl-type family");
    let start = g.star_involution(lambda)?;
    let mut current = start.clone();
    let mut flips = 0;
    let mut chain = Vec::with_capacity(roots.len());
    for root in roots {
        let (next, applied) = odd_reflection_step(&current, &root, &form)?;
        flips += applied as usize;
        chain.push(TwistStep { root, applied });
        current = next;
    }
    Ok(TwistResult {
        start,
        final_weight: current,
        parity_flips: flips,
        chain,
    })
}
