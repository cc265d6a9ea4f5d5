//! Randomized structural invariants.

use proptest::prelude::*;

use kronecker::ext::{product, product_sets, segre_product};
use kronecker::lr::{lr_coeff, lr_expansions, strip_extensions};
use kronecker::order::{dominance_eqsum_parts, min_dominating_partition};
use kronecker::partition::Partition;
use kronecker::symbol::{DecompSymbol, SegreEntry, SegreSymbol, SymbolSet};

fn arb_partition(max_weight: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..=max_weight, 0..6).prop_map(move |mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0u32;
        let mut parts = Vec::new();
        for p in v {
            if total + p > max_weight {
                break;
            }
            total += p;
            parts.push(p);
        }
        Partition::new(parts)
    })
}

fn arb_segre(max_weight: u32) -> impl Strategy<Value = SegreSymbol> {
    prop::collection::vec((arb_partition(3), 1u32..=2), 0..3).prop_map(move |entries| {
        let mut total = 0u32;
        let mut kept = Vec::new();
        for (lam, d) in entries {
            if lam.is_empty() {
                continue;
            }
            let w = lam.weight() * d;
            if total + w > max_weight {
                continue;
            }
            total += w;
            kept.push(SegreEntry::new(lam, d));
        }
        SegreSymbol::new(kept)
    })
}

fn arb_symbol(cap: u32) -> impl Strategy<Value = DecompSymbol> {
    (
        prop::collection::vec(0u32..=2, 0..3),
        arb_segre(3),
        prop::collection::vec(0u32..=2, 0..3),
    )
        .prop_map(move |(pr, reg, inj)| {
            let mut s = DecompSymbol::new(pr, reg, inj);
            // trim until the dimension cap holds
            while !s.dim_vector().fits_in(kronecker::DimVector::new(cap, cap)) {
                let mut pr: Vec<u32> = s.proj().to_vec();
                let mut ij: Vec<u32> = s.inj().to_vec();
                let mut reg = s.regular().entries().to_vec();
                if !pr.is_empty() {
                    pr.pop();
                } else if !ij.is_empty() {
                    ij.pop();
                } else {
                    reg.pop();
                }
                s = DecompSymbol::new(pr, SegreSymbol::new(reg), ij);
            }
            s
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dominance_is_a_partial_order(
        a in arb_partition(12),
        b in arb_partition(12),
        c in arb_partition(12),
    ) {
        prop_assert!(dominance_eqsum_parts(&a, &a));
        if dominance_eqsum_parts(&a, &b) && dominance_eqsum_parts(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if dominance_eqsum_parts(&a, &b) && dominance_eqsum_parts(&b, &c) {
            prop_assert!(dominance_eqsum_parts(&a, &c));
        }
    }

    #[test]
    fn minimal_dominating_dominates(x in prop::collection::vec(-3i64..=6, 0..6)) {
        if let Some(m) = min_dominating_partition(&x) {
            let mv: Vec<i64> = m.parts().iter().map(|&p| p as i64).collect();
            prop_assert!(kronecker::order::dominance_eqsum(&x, &mv));
        }
    }

    #[test]
    fn lr_is_symmetric(a in arb_partition(5), b in arb_partition(5)) {
        for nu in lr_expansions(&a, &b) {
            prop_assert_eq!(lr_coeff(&a, &b, &nu), lr_coeff(&b, &a, &nu));
            prop_assert!(lr_coeff(&a, &b, &nu) > 0);
        }
    }

    #[test]
    fn pieri_rows_are_strips(a in arb_partition(5), n in 1u32..=3) {
        let row = Partition::new(vec![n]);
        prop_assert_eq!(lr_expansions(&a, &row), strip_extensions(&a, n));
    }

    #[test]
    fn symbol_grammar_round_trips(s in arb_symbol(4)) {
        let text = s.to_string();
        let back: DecompSymbol = text.parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn products_conserve_dimension_and_defect(a in arb_symbol(2), b in arb_symbol(2)) {
        let out = product(&a, &b);
        prop_assert!(!out.is_empty());
        for g in out.iter() {
            prop_assert_eq!(g.dim_vector(), a.dim_vector() + b.dim_vector());
            prop_assert_eq!(g.defect(), a.defect() + b.defect());
        }
        // the split extension always exists
        prop_assert!(out.contains(&a.direct_sum(&b)));
    }

    #[test]
    fn product_is_associative(a in arb_symbol(2), b in arb_symbol(2), c in arb_symbol(2)) {
        let left = product_sets(&product(&a, &b), &SymbolSet::singleton(c.clone()));
        let right = product_sets(&SymbolSet::singleton(a.clone()), &product(&b, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn regular_products_commute(s in arb_segre(3), t in arb_segre(3)) {
        prop_assert_eq!(segre_product(&s, &t), segre_product(&t, &s));
    }
}
