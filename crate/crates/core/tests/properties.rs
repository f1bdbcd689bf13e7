//! Structural invariants under proptest-generated input.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;

use lorentzian::arith::{int, rat, Rational};
use lorentzian::combinatorics::{bounded_simplex_points, generating_polynomial, is_m_convex, MConvexSet};
use lorentzian::dressian::{exchange_violation_fn, induced_subdivision, MConvexFunction};
use lorentzian::gauge::BallChart;
use lorentzian::hyperfield::{is_null, QParameter};
use lorentzian::lorentzian::{is_lorentzian, normalize_f64, power_map};

use common::*;

/// Bounds `lower ≤ upper` with `Σ lower ≤ d ≤ Σ upper`, so the box slice is nonempty.
fn box_bounds() -> impl Strategy<Value = (u32, Vec<u32>, Vec<u32>)> {
    (2usize..=4)
        .prop_flat_map(|n| (prop::collection::vec(0u32..=2, n), prop::collection::vec(0u32..=2, n)))
        .prop_flat_map(|(a, b)| {
            let lower: Vec<u32> = a.iter().zip(&b).map(|(&x, &y)| x.min(y)).collect();
            let upper: Vec<u32> = a.iter().zip(&b).map(|(&x, &y)| x.max(y)).collect();
            let (lo, hi) = (lower.iter().sum::<u32>(), upper.iter().sum::<u32>());
            (lo.max(1)..=hi.max(1)).prop_map(move |d| (d, lower.clone(), upper.clone()))
        })
        .prop_filter("nonempty slice", |(d, l, u)| !bounded_simplex_points(*d, l, u).is_empty())
}

fn q_param() -> impl Strategy<Value = QParameter> {
    prop_oneof![
        Just(QParameter::Zero),
        Just(QParameter::Infinity),
        (1i64..12, 1i64..6).prop_map(|(a, b)| QParameter::finite(rat(a, b)).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn box_slices_are_m_convex((d, lower, upper) in box_bounds()) {
        let pts = bounded_simplex_points(d, &lower, &upper);
        prop_assert!(is_m_convex(&pts, lower.len(), d).unwrap());
    }

    #[test]
    fn generating_polynomials_are_lorentzian((d, lower, upper) in box_bounds(), t in 0.3f64..3.0) {
        let j = MConvexSet::new(lower.len(), d, bounded_simplex_points(d, &lower, &upper)).unwrap();
        let f = generating_polynomial(&j);
        prop_assert!(is_lorentzian(&f).unwrap().lorentzian);
        prop_assert!(is_lorentzian(&normalize_f64(&f, t)).unwrap().lorentzian);
    }

    #[test]
    fn linear_functions_are_m_convex_with_one_cell((d, lower, upper) in box_bounds(), w in prop::collection::vec(-4i64..=4, 4)) {
        let j = MConvexSet::new(lower.len(), d, bounded_simplex_points(d, &lower, &upper)).unwrap();
        let values: Vec<Rational> = j.points().iter().map(|p| int(p.iter().zip(&w).map(|(&a, &c)| a as i64 * c).sum())).collect();
        prop_assert!(exchange_violation_fn(&j, &values).unwrap().is_none());
        let sub = induced_subdivision(&j, &MConvexFunction { values }).unwrap();
        prop_assert_eq!(sub.cells.len(), 1);
    }

    #[test]
    fn nullity_is_scale_and_order_invariant(
        vals in prop::collection::vec(0i64..10, 1..6),
        scale in 1i64..7,
        q in q_param(),
        rot in 0usize..6,
    ) {
        let v: Vec<Rational> = vals.iter().map(|&x| int(x)).collect();
        let mut w: Vec<Rational> = v.iter().map(|x| x * int(scale)).collect();
        let k = rot % w.len();
        w.rotate_left(k);
        prop_assert_eq!(is_null(&v, &q).unwrap(), is_null(&w, &q).unwrap());
    }

    #[test]
    fn products_of_positive_forms_are_lorentzian(seed in any::<u64>(), d in 1u32..=3, n in 2usize..=4) {
        let f = product_of_linear_forms(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), d, n);
        prop_assert!(is_lorentzian(&f).unwrap().lorentzian);
        prop_assert!(is_lorentzian(&power_map(&f, 0.5)).unwrap().lorentzian);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// `ψ` never exceeds one and scales linearly along rays from the base
    /// point, which is the centre of the ball.
    #[test]
    fn gauge_is_homogeneous_and_bounded(coords in prop::collection::vec(-0.8f64..0.8, 5), s in 1.1f64..2.0) {
        let chart = BallChart::new(&uniform(2, 4), 1.0).unwrap();
        prop_assume!(coords.iter().any(|c| c.abs() > 1e-3));
        prop_assume!(chart.contains(&chart.vector(&coords)));
        let g1 = chart.gauge(&coords);
        let scaled: Vec<f64> = coords.iter().map(|c| c * s).collect();
        let g2 = chart.gauge(&scaled);
        prop_assert!(g1.psi <= 1.0 + 1e-9);
        prop_assert!(g2.psi + 1e-9 >= g1.psi);
        if !g1.probe_limited && !g2.probe_limited {
            prop_assert!((g2.psi - s * g1.psi).abs() <= 1e-5 * (1.0 + g2.psi), "{} vs {}", g2.psi, s * g1.psi);
        }
        if g1.psi < 0.999 {
            let x: Vec<f64> = chart.vector(&coords).iter().zip(chart.base_point()).map(|(a, b)| a + b).collect();
            let b = chart.to_ball(&x).unwrap();
            prop_assert!(b.norm < 1.0);
        }
    }
}
