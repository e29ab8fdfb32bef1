#![allow(dead_code)]

use rand::Rng;

use superbw_core::*;

/// Every diagonal form whose coefficients run over the nonzero square-class
/// representatives, ranks `0..=max_rank`.
pub fn forms_up_to(field: Field, max_rank: usize) -> Vec<DiagonalQuadraticForm> {
    let reps: Vec<i64> = field.square_classes().iter().map(|c| c.rep()).collect();
    let mut out = vec![DiagonalQuadraticForm::empty(field)];
    let mut layer: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..max_rank {
        layer = layer
            .iter()
            .flat_map(|v| {
                reps.iter().map(move |&r| {
                    let mut w = v.clone();
                    w.push(r);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().map(|c| DiagonalQuadraticForm::from_integers(field, c)));
    }
    out
}

/// All weights of length `n` with entries in `lo..=hi`.
pub fn weights(n: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

pub fn random_group<R: Rng>(rng: &mut R) -> GroupSpec {
    loop {
        let family = match rng.gen_range(0..10) {
            0 => Family::SplitQ { n: rng.gen_range(1..=4) },
            1 => Family::Qpq { p: rng.gen_range(1..=3), q: rng.gen_range(1..=3) },
            2 => Family::QStar { n: rng.gen_range(1..=2) },
            3 => Family::U {
                p: rng.gen_range(0..=2),
                q: rng.gen_range(0..=2),
                r: rng.gen_range(0..=2),
                s: rng.gen_range(0..=2),
            },
            4 => Family::ZeroQ { n: rng.gen_range(1..=3) },
            5 => Family::P { n: rng.gen_range(1..=3) },
            6 => Family::UStar { m: rng.gen_range(1..=2), n: rng.gen_range(1..=2) },
            7 => Family::PStar { n: rng.gen_range(1..=2) },
            8 => Family::SpO { n: rng.gen_range(1..=2), p: rng.gen_range(0..=3), q: rng.gen_range(0..=3) },
            _ => Family::SpOStar { p: rng.gen_range(0..=3), q: rng.gen_range(0..=3), r: rng.gen_range(1..=2) },
        };
        let field = match (family, rng.gen_range(0..4)) {
            (Family::SplitQ { .. }, 1) => Field::finite(3).unwrap(),
            (Family::SplitQ { .. }, 2) => Field::finite(5).unwrap(),
            (Family::SplitQ { .. }, 3) => Field::finite(7).unwrap(),
            _ => Field::Real,
        };
        if let Ok(g) = GroupSpec::new(family, field) {
            return g;
        }
    }
}

/// A random group and a random weight; split and `Q*` weights are sorted so
/// that most land in `X^flat`.
pub fn random_catalog_input<R: Rng>(rng: &mut R) -> (GroupSpec, Weight) {
    let g = random_group(rng);
    let n = g.lattice_rank();
    let mut w: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
    match g.family {
        Family::SplitQ { .. } => w.sort_by(|a, b| b.cmp(a)),
        Family::QStar { n: h } => {
            w.sort_by(|a, b| b.cmp(a));
            w[h..].reverse();
        }
        _ => {}
    }
    (g, Weight(w))
}

/// Borel-Tits class of `V` where the catalog fixes it independently of `D`:
/// the trivial representation and the `*`-fixed weights of `Q(p,q)`.
pub fn known_borel_tits(r: &ClassificationReport) -> Option<BrauerClass> {
    let trivial = Some(BrauerClass::trivial(r.field));
    match r.group.family {
        _ if r.weight.is_zero() => trivial,
        Family::Qpq { .. } if r.super_quasi_rational => trivial,
        _ => None,
    }
}

pub fn check_report_invariants(r: &ClassificationReport) -> std::result::Result<(), String> {
    let tag = format!("{} {}", r.group, r.weight);
    if r.quasi_rational && !r.super_quasi_rational {
        return Err(format!("{tag}: quasi-rational but not super quasi-rational"));
    }
    if r.super_quasi_rational && !r.quasi_rational && !r.pi_self_iso {
        return Err(format!("{tag}: super but not quasi-rational, yet V is not ΠV"));
    }
    if let Some(bw) = r.bw_class.known() {
        if bw.epsilon != r.epsilon
            || Some(&bw.a) != r.a_component.known()
            || Some(&bw.d) != r.d_component.known()
        {
            return Err(format!("{tag}: bw_class disagrees with its components"));
        }
    }
    if (r.center_even_field == superbw_core::classify::CenterField::Base) != r.super_quasi_rational {
        return Err(format!("{tag}: center field disagrees with super quasi-rationality"));
    }
    if let (Some(a), Some(d), Some(bt)) = (r.a_component.known(), r.d_component.known(), known_borel_tits(r)) {
        let minus_eps = if r.epsilon.is_minus() {
            SquareClass::one(r.field)
        } else {
            SquareClass::minus_one(r.field)
        };
        let rhs = bt.inverse() * hilbert_symbol(r.field, minus_eps, *a).unwrap();
        if *d != rhs {
            return Err(format!("{tag}: D = {d} but the Borel-Tits expression gives {rhs}"));
        }
    }
    if !r.field.is_real() {
        if let Some(d) = r.d_component.known() {
            if !d.is_trivial() {
                return Err(format!("{tag}: nontrivial D over {}", r.field));
            }
        }
    }
    Ok(())
}
