use std::collections::BTreeSet;

use proptest::prelude::*;
use semigroup_forge::families::{all_partial_perms, enumerate, member};
use semigroup_forge::{FamilyId, PartialPerm};

fn set(f: FamilyId, n: usize) -> BTreeSet<PartialPerm> {
    enumerate(f, n).unwrap().into_iter().collect()
}

#[test]
fn odp_is_dp_meet_poi() {
    for n in 1..=6 {
        let meet: BTreeSet<_> = set(FamilyId::Dp, n)
            .intersection(&set(FamilyId::Poi, n))
            .copied()
            .collect();
        assert_eq!(set(FamilyId::Odp, n), meet, "n = {n}");
    }
}

#[test]
fn inclusions() {
    let chains = [
        (FamilyId::Dp, FamilyId::Podi),
        (FamilyId::Poi, FamilyId::Podi),
        (FamilyId::PoiMinus, FamilyId::Poi),
        (FamilyId::PoiPlus, FamilyId::Poi),
        (FamilyId::OdpMinus, FamilyId::PoiMinus),
        (FamilyId::OdpPlus, FamilyId::PoiPlus),
        (FamilyId::C2, FamilyId::Dp),
        (FamilyId::Podi, FamilyId::I),
    ];
    for n in 1..=5 {
        for (small, big) in chains {
            assert!(
                set(small, n).is_subset(&set(big, n)),
                "{small} ⊆ {big} at n = {n}"
            );
        }
    }
}

#[test]
fn closed_under_composition_and_inverse() {
    for n in 1..=4 {
        for f in FamilyId::ALL {
            let s = set(f, n);
            assert!(s.contains(&PartialPerm::identity(n).unwrap()), "{f}");
            for a in &s {
                for b in &s {
                    assert!(s.contains(&(*a * *b)), "{f}: {a} · {b}");
                }
                if f.is_inverse_closed() {
                    assert!(s.contains(&a.inverse()), "{f}: {a}⁻¹");
                }
            }
        }
    }
}

#[test]
fn poi_size_is_central_binomial() {
    for (n, want) in [
        (1, 2),
        (2, 6),
        (3, 20),
        (4, 70),
        (5, 252),
        (6, 924),
        (7, 3432),
    ] {
        assert_eq!(enumerate(FamilyId::Poi, n).unwrap().len(), want, "n = {n}");
    }
}

#[test]
fn inverse_exchanges_plus_and_minus() {
    for n in 1..=6 {
        for (minus, plus) in [
            (FamilyId::PoiMinus, FamilyId::PoiPlus),
            (FamilyId::OdpMinus, FamilyId::OdpPlus),
        ] {
            let flipped: BTreeSet<_> = set(minus, n).iter().map(PartialPerm::inverse).collect();
            assert_eq!(flipped, set(plus, n), "{minus} at n = {n}");
        }
    }
}

#[test]
fn lists_are_sorted_and_members() {
    for n in 1..=5 {
        for f in FamilyId::ALL {
            let list = enumerate(f, n).unwrap();
            assert!(list.windows(2).all(|w| w[0] < w[1]), "{f}");
            assert!(list.iter().all(|s| member(f, s)), "{f}");
        }
    }
}

proptest! {
    #[test]
    fn enumeration_is_exactly_the_members(n in 1..=5usize, pick in 0..FamilyId::ALL.len()) {
        let f = FamilyId::ALL[pick];
        let listed = set(f, n);
        for s in all_partial_perms(n).unwrap() {
            prop_assert_eq!(listed.contains(&s), member(f, &s));
        }
    }
}
