mod common;

use common::*;
use freqlab::covering::{covers, greedy_disjoint, pairwise_disjoint, triple, union_size};
use freqlab::levelsets::{census_k, census_s, density_curves, LevelParams, Theta};
use freqlab::maximal::{
    analyze, average, bilinear_analyze, bilinear_average, candidate_radii, half_mass_radius,
    radius_bound,
};
use freqlab::text::{read_signal, write_signal};
use freqlab::{IntegerInterval, Rational, Signal};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn b(n: i64) -> BigInt {
    BigInt::from(n)
}

fn iv(lo: i64, hi: i64) -> IntegerInterval {
    IntegerInterval::new(lo, hi).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn window_sum_over_hull_is_l1(f in arb_nonzero_signal(30, 100)) {
        let hull = f.support_hull().unwrap();
        prop_assert_eq!(&f.window_sum(&hull), f.l1_norm());
    }

    #[test]
    fn window_sum_matches_naive_and_is_additive(
        f in arb_signal(30, 100),
        lo in -120i64..120,
        len in 1i64..80,
        cut in 0i64..80,
    ) {
        let hi = lo + len - 1;
        let mid = lo + cut.min(len - 1);
        let whole = f.window_sum(&iv(lo, hi));
        prop_assert_eq!(&whole, &naive_window_sum(&f, lo, hi));
        if mid < hi {
            let parts = f.window_sum(&iv(lo, mid)) + f.window_sum(&iv(mid + 1, hi));
            prop_assert_eq!(whole, parts);
        }
    }

    #[test]
    fn partial_sums_are_running_totals(f in arb_signal(30, 100)) {
        let mut acc = Rational::zero();
        for (v, p) in f.values().iter().zip(f.partial_sums()) {
            acc += v;
            prop_assert_eq!(&acc, &p);
        }
        prop_assert_eq!(&acc, f.l1_norm());
    }

    #[test]
    fn analyze_matches_brute_force(f in arb_nonzero_signal(30, 100), n in -120i64..=120) {
        let bound = u64::try_from(radius_bound(&f, &b(n)).unwrap()).unwrap();
        let (m, e, freq) = brute_force(&f, n, bound);
        let res = analyze(&f, &b(n));
        prop_assert_eq!(&res.maximal_value, &m);
        prop_assert_eq!(radii_u64(&res.extremal_radii), e);
        prop_assert_eq!(res.frequency, u(freq));
    }

    #[test]
    fn candidates_contain_extremal_set(f in arb_nonzero_signal(20, 60), n in -80i64..=80) {
        let cands = candidate_radii(&f, &b(n)).unwrap();
        let bound = radius_bound(&f, &b(n)).unwrap();
        prop_assert!(cands.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(cands.iter().all(|r| r <= &bound));
        for r in radii_u64(&analyze(&f, &b(n)).extremal_radii) {
            prop_assert!(cands.contains(&u(r)));
        }
    }

    #[test]
    fn every_average_bounded_by_maximum(f in arb_nonzero_signal(15, 40), n in -50i64..=50) {
        let res = analyze(&f, &b(n));
        let bound = u64::try_from(radius_bound(&f, &b(n)).unwrap()).unwrap();
        for r in 0..=bound + 3 {
            let avg = average(&f, &b(n), &u(r));
            prop_assert!(avg <= res.maximal_value);
            prop_assert_eq!(avg == res.maximal_value, res.extremal_radii.contains(&u(r)));
            let width = Rational::from_integer(BigInt::from(2 * r + 1));
            prop_assert!(&avg * &width <= *f.l1_norm());
        }
    }

    #[test]
    fn translation_covariance(f in arb_signal(20, 60), n in -70i64..=70, k in -1000i64..1000) {
        let shifted = f.translate(&b(k));
        let a = analyze(&f, &b(n));
        let s = analyze(&shifted, &b(n + k));
        prop_assert_eq!(a, s);
    }

    #[test]
    fn positive_scaling(f in arb_nonzero_signal(20, 60), n in -70i64..=70, p in 1i64..50, q in 1i64..50) {
        let c = Rational::new(p.into(), q.into());
        let a = analyze(&f, &b(n));
        let s = analyze(&f.scale(&c).unwrap(), &b(n));
        prop_assert_eq!(&s.extremal_radii, &a.extremal_radii);
        prop_assert_eq!(&s.frequency, &a.frequency);
        prop_assert_eq!(s.maximal_value, a.maximal_value * c);
    }

    #[test]
    fn reflection(f in arb_signal(20, 60), n in -70i64..=70) {
        prop_assert_eq!(analyze(&f.reflect(), &b(-n)), analyze(&f, &b(n)));
    }

    #[test]
    fn fundamental_inequality(f in arb_nonzero_signal(20, 60), extra in 0i64..200, neg in any::<bool>()) {
        let h = i64::try_from(half_mass_radius(&f).unwrap()).unwrap();
        let abs_n = h + extra;
        let n = if neg { -abs_n } else { abs_n };
        let res = analyze(&f, &b(n));
        let denom = Rational::from_integer(BigInt::from(8 * abs_n + 2));
        prop_assert!(res.maximal_value >= f.l1_norm() / &denom);
        let freq = BigInt::from(res.frequency.clone());
        let window = IntegerInterval::new(b(n) - &freq, b(n) + &freq).unwrap();
        let width = Rational::from_integer(&freq * 2 + 1);
        prop_assert!(f.window_sum(&window) >= width * f.l1_norm() / denom);
    }

    #[test]
    fn half_mass_radius_is_least(f in arb_nonzero_signal(20, 60)) {
        let m = i64::try_from(half_mass_radius(&f).unwrap()).unwrap();
        let half = f.l1_norm() / Rational::from_integer(2.into());
        prop_assert!(f.window_sum(&iv(-m, m)) >= half);
        if m > 0 {
            prop_assert!(f.window_sum(&iv(1 - m, m - 1)) < half);
        }
    }

    #[test]
    fn bilinear_matches_brute_force(
        f in arb_signal(15, 40),
        g in arb_signal(15, 40),
        n in -50i64..=50,
    ) {
        let res = bilinear_analyze(&f, &g, &b(n));
        if f.is_zero() {
            prop_assert!(res.degenerate);
        } else {
            let bound = u64::try_from(radius_bound(&f, &b(n)).unwrap()).unwrap();
            let (m, e, freq) = brute_force_bilinear(&f, &g, n, bound);
            prop_assert_eq!(&res.maximal_value, &m);
            if m.is_zero() {
                prop_assert!(res.degenerate);
                prop_assert_eq!(res.frequency, u(0));
            } else {
                prop_assert_eq!(radii_u64(&res.extremal_radii), e);
                prop_assert_eq!(res.frequency, u(freq));
            }
        }
    }

    #[test]
    fn bilinear_symmetry_and_l1_bound(
        f in arb_signal(15, 40),
        g in arb_signal(15, 40),
        n in -50i64..=50,
        r in 0u64..100,
    ) {
        let fg = bilinear_average(&f, &g, &b(n), &u(r));
        prop_assert_eq!(&fg, &bilinear_average(&g, &f, &b(n), &u(r)));
        let width = Rational::from_integer(BigInt::from(2 * r + 1));
        prop_assert!(fg * width <= f.l1_norm() * g.l1_norm());
    }

    #[test]
    fn covering_guarantees(raw in prop::collection::vec((-1000i64..1000, 0i64..300), 1..40)) {
        let ivs: Vec<IntegerInterval> = raw.iter().map(|&(lo, len)| iv(lo, lo + len)).collect();
        let sel = greedy_disjoint(&ivs).unwrap();
        let chosen: Vec<&IntegerInterval> = sel.chosen.iter().map(|&i| &ivs[i]).collect();
        prop_assert!(pairwise_disjoint(&chosen));
        prop_assert!(sel.meets_third_bound());
        prop_assert_eq!(&sel.union_size, &union_size(&ivs));
        let tripled: Vec<IntegerInterval> = chosen.iter().map(|c| triple(c)).collect();
        prop_assert!(covers(&tripled, &ivs));
        // Every input meets a chosen interval at least as long as itself.
        for x in &ivs {
            prop_assert!(chosen.iter().any(|c| c.intersects(x) && c.len() >= x.len()));
        }
        prop_assert_eq!(greedy_disjoint(&ivs).unwrap(), sel);
    }

    #[test]
    fn text_round_trip(f in arb_signal(30, 1_000_000)) {
        prop_assert_eq!(read_signal(&write_signal(&f, &[])).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn census_invariants(f in arb_signal(12, 40), p in 2i64..7, q in 1i64..3) {
        prop_assume!(p > q);
        let params = LevelParams::new(Rational::new(p.into(), q.into()), Rational::new(1.into(), 2.into()), Theta::Linear).unwrap();
        let k = census_k(&f, &params, 60).unwrap();
        let s = census_s(&f, &params, 60).unwrap();
        for n in &s {
            prop_assert!(k.contains(n));
        }
        for n in &k {
            let freq = BigInt::from(analyze(&f, n).frequency);
            prop_assert!(freq * p <= n.abs() * q);
        }
        let census = density_curves(&f, &params, &[5, 10, 20, 40, 60]).unwrap();
        for (i, &n) in census.n_grid.iter().enumerate() {
            prop_assert!(census.counts_k[i] <= 2 * n + 1);
            if i > 0 {
                prop_assert!(census.counts_k[i] >= census.counts_k[i - 1]);
                prop_assert!(census.counts_s[i] >= census.counts_s[i - 1]);
            }
        }
        prop_assert_eq!(census.members_k, k);
    }
}

#[test]
fn delta_census_translates() {
    let params = LevelParams::new(Rational::from_integer(2.into()), Rational::from_integer(1.into()), Theta::Linear).unwrap();
    let base = Signal::from_pairs([(b(0), Rational::from_integer(1.into()))]).unwrap();
    for k in [-7i64, -1, 3, 12] {
        let shifted = base.translate(&b(k));
        // F δ_k(n) = |n - k|, so the census is the set where 2|n-k| ≤ |n|.
        let expected: Vec<BigInt> = (-40i64..=40)
            .filter(|&n| 2 * (n - k).abs() <= n.abs())
            .map(b)
            .collect();
        assert_eq!(census_k(&shifted, &params, 40).unwrap(), expected);
    }
}

#[test]
fn extremal_sets_with_ties() {
    // Box of five ones: averages 1, 1, 1, then 5/7.
    let f = signal(&[(-2, 1, 1), (-1, 1, 1), (0, 1, 1), (1, 1, 1), (2, 1, 1)]);
    assert_eq!(radii_u64(&analyze(&f, &b(0)).extremal_radii), vec![0, 1, 2]);
    // 1 at 0 and 3 at ±1: A_0 = 1, A_1 = 7/3.
    let f = signal(&[(-1, 3, 1), (0, 1, 1), (1, 3, 1)]);
    let res = analyze(&f, &b(0));
    assert_eq!(res.maximal_value, Rational::new(7.into(), 3.into()));
    assert_eq!(res.frequency, BigUint::from(1u8));
}
