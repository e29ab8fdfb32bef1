mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use superbw_core::supergroups::twist_roots;
use superbw_core::*;

use common::{check_report_invariants, random_catalog_input, random_group};

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Real),
        prop::sample::select(vec![3u64, 5, 7, 11, 13, 101, 65521]).prop_map(|p| Field::finite(p).unwrap()),
    ]
}

fn nonzero() -> impl Strategy<Value = i64> {
    (-50i64..50).prop_filter("nonzero", |x| *x != 0)
}

fn unit(field: Field, x: i64) -> Option<SquareClass> {
    let c = field.square_class(x);
    (!c.is_zero()).then_some(c)
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

proptest! {
    #[test]
    fn hilbert_symbol_is_symmetric_and_bimultiplicative(f in field_strategy(), a in nonzero(), b in nonzero(), c in nonzero()) {
        let (Some(a), Some(b), Some(c)) = (unit(f, a), unit(f, b), unit(f, c)) else { return Ok(()); };
        let h = |x, y| hilbert_symbol(f, x, y).unwrap();
        prop_assert_eq!(h(a, b), h(b, a));
        prop_assert_eq!(h(a * b, c), h(a, c) * h(b, c));
        prop_assert!(h(a, a.negate()).is_trivial());
    }

    #[test]
    fn bw_group_law_on_random_classes(f in field_strategy(), i in 0usize..8, j in 0usize..8, k in 0usize..8) {
        let all = BwClass::all(f);
        let (x, y, z) = (all[i % all.len()], all[j % all.len()], all[k % all.len()]);
        prop_assert_eq!(x.bw_mul(&y).unwrap().bw_mul(&z).unwrap(), x.bw_mul(&y.bw_mul(&z).unwrap()).unwrap());
        prop_assert_eq!(x.bw_mul(&y).unwrap(), y.bw_mul(&x).unwrap());
        prop_assert_eq!(x.bw_inv().bw_inv(), x);
    }

    #[test]
    fn wall_class_is_additive(f in field_strategy(), q in prop::collection::vec(nonzero(), 0..6), r in prop::collection::vec(nonzero(), 0..6)) {
        let q = DiagonalQuadraticForm::from_integers(f, &q);
        let r = DiagonalQuadraticForm::from_integers(f, &r);
        prop_assume!(q.is_nondegenerate() && r.is_nondegenerate());
        let lhs = wall_class(&q.orthogonal_sum(&r).unwrap()).unwrap();
        prop_assert_eq!(lhs, wall_class(&q).unwrap().bw_mul(&wall_class(&r).unwrap()).unwrap());
        prop_assert_eq!(wall_class(&q.negate()).unwrap(), wall_class(&q).unwrap().bw_inv());
    }

    #[test]
    fn diagonalization_preserves_congruence_class(
        f in field_strategy(),
        diag in prop::collection::vec(-6i64..6, 1..6),
        lower in prop::collection::vec(-6i64..6, 15),
    ) {
        let n = diag.len();
        // M = P^T D P with P unit upper triangular.
        let mut p = vec![vec![0i64; n]; n];
        let mut it = lower.iter();
        for i in 0..n {
            p[i][i] = 1;
            for j in i + 1..n {
                p[i][j] = *it.next().unwrap();
            }
        }
        let gram: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| rat((0..n).map(|k| p[k][i] * diag[k] * p[k][j]).sum())).collect())
            .collect();
        let d = DiagonalQuadraticForm::from_integers(f, &diag);
        let got = diagonalize_gram(f, &gram).unwrap();
        prop_assert_eq!(got.rank(), d.rank());
        prop_assert_eq!(semisimple_wall_class(&got), semisimple_wall_class(&d));
    }

    #[test]
    fn star_is_an_involution_and_preserves_d_delta(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, w) = random_catalog_input(&mut rng);
        let s = g.star_involution(&w).unwrap();
        prop_assert_eq!(g.star_involution(&s).unwrap(), w.clone());
        let (a, _) = g.q_lambda_form(&w).unwrap().split_radical();
        let (b, _) = g.q_lambda_form(&s).unwrap().split_radical();
        prop_assert_eq!(a.dim(), b.dim());
    }

    #[test]
    fn odd_reflection_round_trip(seed in any::<u64>(), coords in prop::collection::vec(-6i64..6, 8)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = loop {
            let g = random_group(&mut rng);
            if g.twist_chain_applies() {
                break g;
            }
        };
        let form = g.pairing().unwrap();
        let l = Weight(coords.iter().cycle().take(g.lattice_rank()).copied().collect());
        for alpha in twist_roots(&g).unwrap() {
            let (m, flipped) = odd_reflection_step(&l, &alpha, &form).unwrap();
            prop_assert_eq!(flipped, m != l);
            prop_assert_eq!(odd_reflection_step(&m, &alpha.neg(), &form).unwrap(), (l.clone(), flipped));
        }
    }

    #[test]
    fn reports_satisfy_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, w) = random_catalog_input(&mut rng);
        let r = match classify(&g, &w) {
            Ok(r) => r,
            Err(Error::NotInXflat { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        if let Err(msg) = check_report_invariants(&r) {
            return Err(TestCaseError::fail(msg));
        }
        prop_assert_eq!(r.epsilon, Sign::minus_pow(r.d_lambda));
        if g.is_split() {
            let expect = !(r.d_lambda % 2 == 0 && r.delta_lambda.is_square_or_zero());
            prop_assert_eq!(r.pi_self_iso, expect);
            if r.quasi_rational && r.pi_self_iso {
                prop_assert_eq!(r.epsilon, Sign::Minus);
            }
        }
        let back: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        prop_assert_eq!(serde_json::to_string_pretty(&back).unwrap(), r.to_json());
    }

    #[test]
    fn split_routes_agree(n in 1usize..6, raw in prop::collection::vec(-9i64..9, 6), p in prop::sample::select(vec![3u64, 5, 7, 11])) {
        let mut w: Vec<i64> = raw[..n].to_vec();
        w.sort_by(|a, b| b.cmp(a));
        let w = Weight(w);
        let real = GroupSpec::split_q(n, Field::Real).unwrap();
        if real.xflat_verdict(&w).unwrap() == XflatVerdict::Member {
            prop_assert_eq!(split_route_class(&real, &w).unwrap(), classify::split_q_real_closed_form(&w));
        }
        let f = Field::finite(p).unwrap();
        let fin = GroupSpec::split_q(n, f).unwrap();
        if fin.xflat_verdict(&w).unwrap() == XflatVerdict::Member {
            prop_assert_eq!(split_route_class(&fin, &w).unwrap(), classify::split_q_finite_closed_form(f, &w));
        }
    }
}

#[test]
fn qstar_zero_weight_is_trivial() {
    for n in 1..=3 {
        let g = GroupSpec::real(Family::QStar { n }).unwrap();
        let r = classify(&g, &Weight::zero(2 * n)).unwrap();
        assert_eq!(r.d_lambda, 0);
        assert_eq!(r.bw_class, Determined::Known(BwClass::identity(Field::Real)));
        assert_eq!(r.endo_name, Determined::Known("R".into()));
    }
}
