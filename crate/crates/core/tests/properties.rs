//! Property-based invariants over randomly generated subsets.

use proptest::prelude::*;

use crossfam::partners::{k_parity, k_partner, partner};
use crossfam::subsets::{
    count_l, lex_precedes, lex_strictly_precedes, successor, tail_decompose, unrank, Count,
};
use crossfam::KSubset;

/// A random non-empty subset of [n] for n in 2..=12.
fn subset_strategy() -> impl Strategy<Value = KSubset> {
    (2u32..=12).prop_flat_map(|n| {
        (1u32..(1u32 << n)).prop_map(move |mask| {
            let elems: Vec<u32> = (1..=n).filter(|&e| mask >> (e - 1) & 1 == 1).collect();
            KSubset::new(n, elems).unwrap()
        })
    })
}

fn same_ground_pair() -> impl Strategy<Value = (KSubset, KSubset)> {
    (2u32..=12).prop_flat_map(|n| {
        let one = move |mask: u32| {
            let elems: Vec<u32> = (1..=n).filter(|&e| mask >> (e - 1) & 1 == 1).collect();
            KSubset::new(n, elems).unwrap()
        };
        (1u32..(1u32 << n), 1u32..(1u32 << n)).prop_map(move |(a, b)| (one(a), one(b)))
    })
}

proptest! {
    #[test]
    fn lex_total_and_antisymmetric((a, b) in same_ground_pair()) {
        let ab = lex_strictly_precedes(&a, &b).unwrap();
        let ba = lex_strictly_precedes(&b, &a).unwrap();
        if a == b {
            prop_assert!(!ab && !ba);
            prop_assert!(lex_precedes(&a, &b).unwrap());
        } else {
            prop_assert!(ab ^ ba);
        }
    }

    #[test]
    fn rank_unrank_round_trip(f in subset_strategy()) {
        let k = f.len();
        let rank = count_l(&f, k).unwrap();
        prop_assert_eq!(unrank(f.ground(), &rank, k).unwrap(), f);
    }

    #[test]
    fn successor_increments_rank(f in subset_strategy()) {
        let k = f.len();
        if let Some(next) = successor(&f).unwrap() {
            let r0 = count_l(&f, k).unwrap();
            let r1 = count_l(&next, k).unwrap();
            prop_assert_eq!(r1, r0 + Count::from(1u32));
            prop_assert!(lex_strictly_precedes(&f, &next).unwrap());
        }
    }

    #[test]
    fn partner_is_involutive(f in subset_strategy()) {
        let h = partner(&f).unwrap();
        prop_assert_eq!(partner(&h).unwrap(), f);
    }

    #[test]
    fn tail_reassembles(f in subset_strategy()) {
        let (head, ell) = tail_decompose(&f).unwrap();
        prop_assert_eq!(head.with_suffix_run(ell).unwrap(), f);
    }

    #[test]
    fn parity_round_trips(f in subset_strategy(), k in 1u32..=12) {
        let k = k.min(f.ground());
        if let Some(g) = k_parity(&f, k).unwrap() {
            prop_assert_eq!(g.len(), k);
            prop_assert_eq!(k_parity(&g, f.len()).unwrap(), Some(f));
        }
    }

    #[test]
    fn k_partner_families_cross_intersect(f in subset_strategy(), k in 1u32..=12) {
        let n = f.ground();
        if k >= 1 && k <= n - f.len() {
            match k_partner(&f, k) {
                Ok(kp) => {
                    prop_assert_eq!(kp.len(), k);
                    // the named families really are cross-intersecting
                    let ok = crossfam::oracle::families_cross_intersecting_bruteforce(
                        &f, f.len(), &kp, k,
                    )
                    .unwrap();
                    prop_assert!(ok);
                }
                Err(crossfam::Error::NoPrecedingSet { .. }) => {}
                Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
            }
        }
    }
}
