use proptest::prelude::*;

use tilinggate::boundary::{
    aux23_filter, compositions, d_rows, side_composition, side_feasible, DRow, FeasibilityMode,
    SideName,
};
use tilinggate::numtheory::{enumerate_triples_param, Triple};

fn t(a: u64, b: u64, c: u64) -> Triple {
    Triple::new(a, b, c).unwrap()
}

fn row(p: u64, d: u64, e: u64) -> DRow {
    DRow { p, d, e }
}

/// Every `(p, d, e)` with the length equation, `e ≥ 1` and `p·d = 0`.
fn brute_rows(len: u64, tr: &Triple) -> Vec<DRow> {
    let mut out = Vec::new();
    for p in 0..=len / tr.a {
        for d in 0..=len / tr.b {
            for e in 1..=len / tr.c {
                if p * d == 0 && p * tr.a + d * tr.b + e * tr.c == len {
                    out.push(row(p, d, e));
                }
            }
        }
    }
    out.sort();
    out
}

#[test]
fn composition_examples() {
    assert_eq!(compositions(30, 3, 7, 1), vec![(3, 3)]);
    assert!(compositions(21, 5, 19, 1).is_empty());
    assert_eq!(compositions(65, 5, 7, 1), vec![(6, 5)]);
    assert_eq!(compositions(0, 4, 9, 0), vec![(0, 0)]);
}

#[test]
fn row_examples() {
    assert_eq!(d_rows(30, &t(3, 5, 7)), vec![row(3, 0, 3)]);
    assert!(d_rows(40, &t(5, 16, 19)).is_empty());
    let r42 = d_rows(42, &t(3, 5, 7));
    assert!(r42.contains(&row(0, 7, 1)) && r42.contains(&row(7, 0, 3)));
    assert!(side_feasible(30, &t(3, 5, 7)));
    assert!(!side_feasible(40, &t(5, 16, 19)));
}

#[test]
fn pure_c_rows_are_not_duplicated() {
    assert_eq!(d_rows(14, &t(3, 5, 7)), vec![row(0, 0, 2)]);
}

#[test]
fn appendix_mode_needs_two_c_edges() {
    let tr = t(3, 5, 7);
    for len in 1..=200 {
        let rows = side_composition(len, &tr, FeasibilityMode::Appendix).rows;
        let want: Vec<_> = d_rows(len, &tr).into_iter().filter(|r| r.e >= 2).collect();
        assert_eq!(rows, want, "L={len}");
    }
}

#[test]
fn aux23_examples() {
    assert_eq!(aux23_filter(30, 70, 80, &t(3, 5, 7)), Ok(()));
    assert_eq!(aux23_filter(30, 42, 48, &t(5, 3, 7)), Ok(()));
    assert_eq!(aux23_filter(8, 70, 80, &t(3, 5, 7)), Err(SideName::X));
    assert_eq!(aux23_filter(15, 35, 40, &t(3, 5, 7)), Err(SideName::X));
}

#[test]
fn rows_match_brute_force() {
    for tr in enumerate_triples_param(100) {
        for len in 1..=200 {
            assert_eq!(d_rows(len, &tr), brute_rows(len, &tr), "{tr} L={len}");
        }
    }
}

fn some_tile() -> impl Strategy<Value = Triple> {
    let tiles = enumerate_triples_param(400);
    (0..tiles.len()).prop_map(move |i| tiles[i])
}

proptest! {
    #[test]
    fn rows_satisfy_their_equation(tr in some_tile(), len in 1u64..2000) {
        for r in d_rows(len, &tr) {
            prop_assert_eq!(r.length(&tr), len);
            prop_assert!(r.e >= 1 && r.p * r.d == 0);
            prop_assert!(r.is_admissible());
        }
    }

    #[test]
    fn feasibility_survives_an_extra_c_edge(tr in some_tile(), len in 1u64..2000) {
        if side_feasible(len, &tr) {
            prop_assert!(side_feasible(len + tr.c, &tr));
        }
        prop_assert!(side_feasible(tr.c, &tr));
    }

    #[test]
    fn compositions_are_complete(len in 0u64..500, e1 in 1u64..40, e2 in 1u64..40, min2 in 0u64..4) {
        let got = compositions(len, e1, e2, min2);
        let mut want = Vec::new();
        for v in min2..=len / e2 {
            for u in 0..=len / e1 {
                if u * e1 + v * e2 == len {
                    want.push((u, v));
                }
            }
        }
        prop_assert_eq!(got, want);
    }
}
