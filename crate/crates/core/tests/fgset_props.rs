use std::collections::BTreeSet;

use proptest::prelude::*;
use steinitz::fgset::{enumerate_window, fg, verify_axioms, MaximalSubsets};
use steinitz::{Exponent, FgSet};

fn window() -> BTreeSet<u64> {
    [2u64, 3, 5].into_iter().collect()
}

/// Members up to `bound`, read off by brute divisibility.
fn members(t: &FgSet, bound: u64) -> BTreeSet<u64> {
    (1..=bound).filter(|&n| t.member(n).unwrap()).collect()
}

#[test]
fn window_members_satisfy_the_axioms() {
    for t in enumerate_window(&window(), 3) {
        // 30^3 covers every member of the window
        let m = members(&t, 27_000);
        assert_eq!(verify_axioms(&m), Ok(()), "{t}");
    }
}

/// Covers inside the window by scanning all pairs, independent of
/// `maximal_fg_subsets`.
#[test]
fn maximal_subsets_match_cover_scan() {
    let all = enumerate_window(&window(), 3);
    for t in &all {
        let below: Vec<&FgSet> = all
            .iter()
            .filter(|s| *s != t && s.is_subset_of(t).unwrap())
            .collect();
        let mut covers: Vec<String> = below
            .iter()
            .filter(|s| {
                !below
                    .iter()
                    .any(|u| u != *s && s.is_subset_of(u).unwrap())
            })
            .map(|s| s.to_string())
            .collect();
        covers.sort();
        let MaximalSubsets::Finite(found) = t.maximal_fg_subsets() else {
            panic!("finite universe gives a finite family");
        };
        let mut found: Vec<String> = found.iter().map(ToString::to_string).collect();
        found.sort();
        assert_eq!(found, covers, "{t}");
        for s in &below {
            let by_scan = covers.contains(&s.to_string());
            assert_eq!(s.is_maximal_fg_subset_of(t).unwrap(), by_scan, "{s} in {t}");
        }
    }
}

#[test]
fn finite_part_count_is_the_number_of_covers() {
    for t in enumerate_window(&window(), 3) {
        let MaximalSubsets::Finite(found) = t.maximal_fg_subsets() else { unreachable!() };
        assert_eq!(t.finite_part_count().finite(), Some(found.len() as u64));
    }
}

fn descriptor() -> impl Strategy<Value = String> {
    let exp = prop_oneof![
        (0u64..4).prop_map(|k| k.to_string()),
        Just("inf".to_string()),
    ];
    (
        proptest::collection::btree_map(proptest::sample::select(vec![2u64, 3, 5, 7, 11]), exp.clone(), 0..5),
        exp,
    )
        .prop_map(|(m, rest)| {
            let body: Vec<String> = m.iter().map(|(p, e)| format!("{p}^{e}")).collect();
            let body = if body.is_empty() { "1".to_string() } else { body.join(",") };
            format!("{body}; rest={rest}")
        })
}

proptest! {
    #[test]
    fn coprime_members_multiply(d in descriptor(), a in 1u64..200, b in 1u64..200) {
        let t = fg(&d).unwrap();
        let coprime = (2..=a.min(b)).all(|k| a % k != 0 || b % k != 0);
        if coprime && t.member(a).unwrap() && t.member(b).unwrap() {
            prop_assert!(t.member(a * b).unwrap());
        }
        if t.member(a * b).unwrap() {
            prop_assert!(t.member(a).unwrap() && t.member(b).unwrap());
        }
    }

    #[test]
    fn order_is_the_largest_member_power(d in descriptor(), base in 2u64..40) {
        let t = fg(&d).unwrap();
        let mut scanned = 0u64;
        let mut pow = 1u64;
        while scanned < 12 {
            pow = pow.saturating_mul(base);
            if pow > 1 << 50 || !t.member(pow).unwrap() {
                break;
            }
            scanned += 1;
        }
        match t.order(base).unwrap() {
            Exponent::Finite(k) => prop_assert_eq!(k, scanned),
            Exponent::Infinite => prop_assert!(scanned == 12 || pow > 1 << 50),
        }
    }

    #[test]
    fn finite_and_infinite_parts_split_support(d in descriptor(), p in proptest::sample::select(vec![2u64, 3, 5, 7, 11, 13, 17])) {
        let t = fg(&d).unwrap();
        let parts = t.parts();
        let e = t.steinitz().exponent(p);
        prop_assert_eq!(parts.finite.contains(p), e.is_finite_positive());
        prop_assert_eq!(parts.infinite.contains(p), e == Exponent::Infinite);
    }
}
