use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use tilinggate::numerics::{
    angle_add, angle_sub, angle_trig, q3_sign, ratio, AngleMeasure, Q3Scalar, Rational,
};
use tilinggate::numtheory::{enumerate_triples_direct, Triple};

fn first_seven() -> Vec<Triple> {
    enumerate_triples_direct(11)
}

fn q(rn: i64, rd: i64, sn: i64, sd: i64) -> Q3Scalar {
    Q3Scalar::from_parts(rn, rd, sn, sd)
}

/// Sign of `r + s√3` from a 200-bit fixed-point value of √3.
fn fixed_point_sign(r: &Rational, s: &Rational) -> i32 {
    let scale = BigInt::from(2).pow(200);
    let root3 = (BigInt::from(3) * &scale * &scale).sqrt();
    // Denominators are positive, so clearing them keeps the sign.
    let v = r.numer() * s.denom() * &scale + s.numer() * r.denom() * &root3;
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

#[test]
fn q3_sign_examples() {
    assert_eq!(q3_sign(&q(2, 1, -1, 1)), 1);
    assert_eq!(q3_sign(&q(5, 1, -3, 1)), -1);
    assert_eq!(q3_sign(&Q3Scalar::zero()), 0);
}

#[test]
fn trig_examples() {
    let t = Triple::new(3, 5, 7).unwrap();
    let r = angle_trig(AngleMeasure::new(1, 0), &t);
    assert_eq!((r.c, r.s), (q(13, 14, 0, 1), q(0, 1, 3, 14)));
    for tile in first_seven() {
        let r = angle_trig(AngleMeasure::PI_3, &tile);
        assert_eq!((r.c, r.s), (q(1, 2, 0, 1), q(0, 1, 1, 2)));
        let r = angle_trig(AngleMeasure::GAMMA, &tile);
        assert_eq!((r.c, r.s), (q(-1, 2, 0, 1), q(0, 1, 1, 2)));
    }
}

#[test]
fn sin_of_pi3_plus_two_beta() {
    // a(a+2b)/c² · √3/2 for (3,5,7) is (39/98)√3, reached at α + 3β = π/3 + 2β.
    let t = Triple::new(3, 5, 7).unwrap();
    assert_eq!(angle_trig(AngleMeasure::new(1, 3), &t).s, q(0, 1, 39, 98));
    // α + 2β = π/3 + β.
    assert_eq!(angle_trig(AngleMeasure::new(1, 2), &t).s, q(0, 1, 4, 7));
}

#[test]
fn add_sub_examples() {
    let am = AngleMeasure::new;
    assert_eq!(angle_add(am(1, 0), am(0, 1)), am(1, 1));
    assert_eq!(angle_sub(am(3, 3), am(2, 2)), Ok(am(1, 1)));
    assert_eq!(angle_sub(am(6, 6), am(2, 2)), Ok(am(4, 4)));
    assert!(angle_sub(am(1, 0), am(0, 1)).is_err());
}

#[test]
fn unit_circle_on_lattice() {
    for t in first_seven() {
        for m in 0..=6 {
            for n in 0..=6 {
                assert!(angle_trig(AngleMeasure::new(m, n), &t).is_unit(), "{t} ({m},{n})");
            }
        }
    }
}

#[test]
fn lattice_angles_are_distinct() {
    for t in first_seven() {
        let mut seen = std::collections::HashSet::new();
        // (6,6) is a full turn and coincides with (0,0); every other pair differs.
        assert_eq!(angle_trig(AngleMeasure::FULL, &t), angle_trig(AngleMeasure::ZERO, &t));
        for m in 0..=6 {
            for n in 0..=6 {
                if (m, n) == (6, 6) {
                    continue;
                }
                let r = angle_trig(AngleMeasure::new(m, n), &t);
                assert!(seen.insert((r.c, r.s)), "{t} repeats at ({m},{n})");
            }
        }
        // Numerically too.
        let mut vals: Vec<f64> = (0..=6)
            .flat_map(|m| (0..=6).map(move |n| AngleMeasure::new(m, n)))
            .map(|am| am.to_f64(&t))
            .collect();
        vals.sort_by(f64::total_cmp);
        assert!(vals.windows(2).all(|w| w[1] - w[0] > 1e-9), "{t}");
    }
}

#[test]
fn sign_matches_fixed_point_on_grid() {
    let mut count = 0;
    for rn in -21..=21 {
        for rd in [1, 2, 3, 7] {
            for sn in -7..=7 {
                for sd in [1, 2, 5, 11] {
                    let x = q(rn, rd, sn, sd);
                    assert_eq!(q3_sign(&x), fixed_point_sign(&x.rat, &x.coef3), "{x}");
                    count += 1;
                }
            }
        }
    }
    assert!(count >= 10_000);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn trig_is_additive(i in 0usize..7, m1 in 0i64..=6, n1 in 0i64..=6, m2 in 0i64..=6, n2 in 0i64..=6) {
        let t = first_seven()[i];
        let x = AngleMeasure::new(m1, n1);
        let y = AngleMeasure::new(m2, n2);
        let sum = angle_trig(angle_add(x, y), &t);
        prop_assert_eq!(sum, angle_trig(x, &t).compose(&angle_trig(y, &t)));
    }

    #[test]
    fn sign_matches_fixed_point(rn in -10_000i64..10_000, rd in 1i64..500, sn in -10_000i64..10_000, sd in 1i64..500) {
        let x = q(rn, rd, sn, sd);
        prop_assert_eq!(q3_sign(&x), fixed_point_sign(&x.rat, &x.coef3));
    }

    #[test]
    fn ring_ops_are_exact(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in 1i64..9) {
        let x = q(a, d, b, d);
        let y = q(c, 1, a, d);
        let prod = &x * &y;
        // (p + q√3)(r + s√3) = pr + 3qs + (ps + qr)√3
        let want_r = ratio(a, d) * ratio(c, 1) + ratio(3, 1) * ratio(b, d) * ratio(a, d);
        let want_s = ratio(a, d) * ratio(a, d) + ratio(b, d) * ratio(c, 1);
        prop_assert_eq!(prod, Q3Scalar::new(want_r, want_s));
        prop_assert_eq!(&(&x + &y) - &y, x);
    }
}
