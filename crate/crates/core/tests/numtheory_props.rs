use num_integer::Integer;
use proptest::prelude::*;

use tilinggate::numtheory::{
    enumerate_triples_direct, enumerate_triples_direct_upto_c, enumerate_triples_param,
    mod8_check, sqdiv, sqfree, Branch, ParamPair, Triple, TripleError,
};

/// Largest square dividing `x`, by brute force.
fn largest_square_divisor(x: u64) -> u64 {
    (1..).take_while(|d| d * d <= x).filter(|d| x % (d * d) == 0).map(|d| d * d).last().unwrap()
}

/// Smallest `y` with `x | y²`, by brute force.
fn smallest_square_multiple_root(x: u64) -> u64 {
    (1..=x).find(|y| (y * y) % x == 0).unwrap()
}

fn is_square(v: u64) -> bool {
    let r = (v as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).any(|s| s * s == v)
}

fn t(a: u64, b: u64, c: u64) -> Triple {
    Triple::new(a, b, c).unwrap()
}

#[test]
fn sqfree_examples() {
    assert_eq!(sqfree(80), 5);
    assert_eq!(sqfree(1), 1);
    assert_eq!(sqfree(15), 15);
    assert_eq!(sqfree(360), 360 / largest_square_divisor(360));
    assert_eq!(sqfree(360), 10);
}

#[test]
fn sqdiv_examples() {
    assert_eq!(sqdiv(80), 20);
    assert_eq!(sqdiv(15), 15);
    assert_eq!(sqdiv(360), smallest_square_multiple_root(360));
    assert_eq!(sqdiv(360), 60);
}

#[test]
fn sqdiv_divides_every_root() {
    for x in 1..=10_000u64 {
        let s = sqdiv(x);
        for y in 1..=1000u64 {
            if (y * y) % x == 0 {
                assert_eq!(y % s, 0, "x={x} y={y}");
            }
        }
    }
}

#[test]
fn cofactor_over_sqfree_is_square() {
    for x in 1..=1000u64 {
        let d = sqfree(x);
        for y in 1..=1000u64 {
            let y2 = y * y;
            if y2 % x != 0 {
                continue;
            }
            let n = y2 / x;
            if n > 1000 {
                continue;
            }
            assert_eq!(n % d, 0, "x={x} N={n}");
            assert!(is_square(n / d), "x={x} N={n}");
        }
    }
}

#[test]
fn small_enumerations() {
    assert!(enumerate_triples_direct(2).is_empty());
    assert_eq!(enumerate_triples_direct(3), vec![t(3, 5, 7)]);
    assert_eq!(
        enumerate_triples_direct(11),
        vec![t(3, 5, 7), t(5, 16, 19), t(7, 8, 13), t(7, 33, 37), t(9, 56, 61), t(11, 24, 31), t(11, 85, 91)]
    );
}

#[test]
fn parametrization_examples() {
    let pp = |s, t, branch| ParamPair { s, t, branch }.triple();
    assert_eq!(pp(2, 1, Branch::OddOdd), Some(t(3, 5, 7)));
    assert_eq!(pp(5, 2, Branch::OneEven), Some(t(5, 16, 19)));
    assert_eq!(pp(2, 2, Branch::OddOdd), None);
}

#[test]
fn param_matches_direct_up_to_c_100() {
    let direct: Vec<_> = enumerate_triples_direct(100).into_iter().filter(|t| t.c <= 100).collect();
    assert_eq!(enumerate_triples_param(100), direct);
}

#[test]
fn triples_are_primitive_and_not_too_small() {
    for tr in enumerate_triples_direct(300) {
        assert_eq!(tr.a * tr.a + tr.a * tr.b + tr.b * tr.b, tr.c * tr.c);
        assert!(tr.a.gcd(&tr.b) == 1 && tr.a.gcd(&tr.c) == 1 && tr.b.gcd(&tr.c) == 1, "{tr}");
        assert!(tr.a >= 3 && tr.b >= 5, "{tr}");
    }
}

#[test]
fn mod8_on_all_odd_pairs() {
    assert!(mod8_check(&t(3, 5, 7)));
    assert!(mod8_check(&t(7, 33, 37)));
    assert!(mod8_check(&t(5, 16, 19)));
    let all = enumerate_triples_param(10_000);
    let odd: Vec<_> = all.iter().filter(|t| t.a % 2 == 1 && t.b % 2 == 1).collect();
    assert!(!odd.is_empty());
    for tr in odd {
        assert_eq!((tr.a + tr.b) % 8, 0, "{tr}");
        assert!(mod8_check(tr));
    }
}

#[test]
fn triple_validation() {
    assert_eq!(Triple::new(3, 5, 8), Err(TripleError::NotOnForm(3, 5, 8)));
    assert_eq!(Triple::new(6, 10, 14), Err(TripleError::NotPrimitive(6, 10, 14)));
    assert_eq!(Triple::new(0, 5, 7), Err(TripleError::Zero));
    assert_eq!("3,5,7".parse::<Triple>(), Ok(t(3, 5, 7)));
    assert_eq!("(5,3,7)".parse::<Triple>(), Ok(t(5, 3, 7)));
    assert!("3,5".parse::<Triple>().is_err());
}

proptest! {
    #[test]
    fn sqfree_and_sqdiv_match_brute_force(x in 1u64..20_000) {
        prop_assert_eq!(sqfree(x), x / largest_square_divisor(x));
        prop_assert_eq!(sqdiv(x), smallest_square_multiple_root(x));
        prop_assert_eq!(sqdiv(x) * sqdiv(x), x * sqfree(x));
    }

    #[test]
    fn sqfree_is_multiplicative_on_coprimes(x in 1u64..5000, y in 1u64..5000) {
        prop_assume!(x.gcd(&y) == 1);
        prop_assert_eq!(sqfree(x * y), sqfree(x) * sqfree(y));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn enumerations_agree(max_c in 7u64..3000) {
        prop_assert_eq!(enumerate_triples_param(max_c), enumerate_triples_direct_upto_c(max_c));
    }
}
