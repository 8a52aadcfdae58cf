use gamma4::pinch::PinchMode;
use gamma4::{
    d_pm1, gamma4_lower, gamma4_upper, pinch_sequence, report, sigma_lattice, sigma_rec, Handedness,
    TorusKnotClass,
};
use num_integer::Integer;
use proptest::prelude::*;

fn knot() -> impl Strategy<Value = TorusKnotClass> {
    (2i64..200, 2i64..200, any::<bool>())
        .prop_filter("coprime, distinct", |(p, q, _)| p != q && p.gcd(q) == 1)
        .prop_map(|(p, q, left)| {
            let hand = if left { Handedness::Left } else { Handedness::Right };
            TorusKnotClass::new(p, q, hand).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bounds_are_ordered_and_mirror_invariant(k in knot()) {
        let lower = gamma4_lower(&k).unwrap();
        let upper = gamma4_upper(&k).unwrap();
        prop_assert!(1 <= lower && lower <= upper);
        prop_assert_eq!(lower, gamma4_lower(&k.mirror()).unwrap());
        prop_assert_eq!(upper, gamma4_upper(&k.mirror()).unwrap());
    }

    #[test]
    fn recursion_matches_lattice(p in 3i64..260, q in 2i64..260) {
        prop_assume!(p != q && p.gcd(&q) == 1);
        let s = sigma_rec(p, q).unwrap();
        prop_assert_eq!(s, sigma_lattice(p.max(q), p.min(q)).unwrap());
        prop_assert_eq!(s, sigma_rec(q, p).unwrap());
        prop_assert!(s >= 0 && s % 2 == 0);
    }

    #[test]
    fn correction_terms_nonnegative(k in knot()) {
        let (dm, dp) = d_pm1(&k).unwrap();
        prop_assert!(dm >= 0);
        prop_assert!(dp <= 0);
    }

    #[test]
    fn gamma3_sequences_end_on_a_zero_coordinate(k in knot()) {
        prop_assume!((k.p() * k.q()) % 2 == 0);
        let seq = pinch_sequence(&k, PinchMode::Gamma3).unwrap();
        prop_assert!(seq.terminal.0 == 0 || seq.terminal.1 == 0);
        prop_assert!(seq.terminal.0.abs() + seq.terminal.1.abs() == 1);
        prop_assert!(seq.len() >= pinch_sequence(&k, PinchMode::Gamma4).unwrap().len());
    }
}

#[test]
fn report_invariants_over_scan() {
    for r in gamma4::scan(30).unwrap() {
        assert_eq!(r.sigma_left, -r.sigma_right);
        assert_eq!(r.exact, r.gamma4_lower == r.gamma4_upper);
        assert!(r.gamma4_lower <= r.gamma4_upper);
        assert_eq!(r.gamma3_upper.is_some(), (r.p * r.q) % 2 == 0);
        assert_eq!(r.pinch_trace.len() as i64, r.gamma4_upper + 1);
        assert_eq!(r, report(r.q, r.p).unwrap());
    }
}
