use std::sync::Arc;

use proptest::prelude::*;
use semigroup_forge::constructions::{
    conj_left, family_monoid, odp_left_generic, odp_right_generic, poi_left, poi_left_generic,
    poi_right, poi_right_generic,
};
use semigroup_forge::families::{enumerate, member};
use semigroup_forge::{
    build_bilateral, build_semidirect, ActionPair, ConstructionId, FamilyId, Pair, PartialPerm,
};

fn poi_elem(n: usize) -> impl Strategy<Value = PartialPerm> {
    (0..=n).prop_flat_map(move |k| {
        (
            proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), k),
            proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), k),
        )
            .prop_map(move |(a, b)| PartialPerm::order_iso(&a, &b, n).unwrap())
    })
}

fn odp_elem(n: usize) -> impl Strategy<Value = PartialPerm> {
    // a block [a, a+k) shifted to [b, b+k)
    (0..=n).prop_flat_map(move |k| {
        (1..=n + 1 - k.max(1), 1..=n + 1 - k.max(1)).prop_map(move |(a, b)| {
            PartialPerm::from_graph(n, (0..k).map(|i| (a + i, b + i))).unwrap()
        })
    })
}

fn poi_pair() -> impl Strategy<Value = (PartialPerm, PartialPerm)> {
    (1..=10usize).prop_flat_map(|n| (poi_elem(n), poi_elem(n)))
}

fn odp_pair() -> impl Strategy<Value = (PartialPerm, PartialPerm)> {
    (1..=10usize).prop_flat_map(|n| (odp_elem(n), odp_elem(n)))
}

proptest! {
    #[test]
    fn poi_factorization((u, s) in poi_pair()) {
        let (l, r) = (poi_left_generic(&u, &s), poi_right_generic(&u, &s));
        prop_assert_eq!(l * r, u * s);
        prop_assert_eq!(l.im(), r.dom());
        prop_assert!(member(FamilyId::PoiMinus, &l));
        prop_assert!(member(FamilyId::PoiPlus, &r));
    }

    #[test]
    fn odp_factorization((u, s) in odp_pair()) {
        prop_assert!(member(FamilyId::Odp, &u) && member(FamilyId::Odp, &s));
        let (l, r) = (odp_left_generic(&u, &s), odp_right_generic(&u, &s));
        prop_assert_eq!(l * r, u * s);
        prop_assert_eq!(l.im(), r.dom());
        prop_assert!(member(FamilyId::OdpMinus, &l));
        prop_assert!(member(FamilyId::OdpPlus, &r));
    }

    #[test]
    fn conjugation_preserves_odp((_, s) in odp_pair()) {
        let h = PartialPerm::reversal(s.n()).unwrap();
        prop_assert!(member(FamilyId::Odp, &conj_left(&h, &s)));
        prop_assert_eq!(conj_left(&h, &conj_left(&h, &s)), s);
    }

    #[test]
    fn poi_decompose_splits_at_domain_and_image(t in (1..=8usize).prop_flat_map(poi_elem)) {
        let Pair(s, u) = ConstructionId::PoiBilateral.decompose(&t).unwrap();
        prop_assert_eq!(s.dom(), t.dom());
        prop_assert_eq!(u.im(), t.im());
        prop_assert_eq!(s * u, t);
    }
}

#[test]
fn range_confinement_exhaustive() {
    for n in 1..=4 {
        let (minus, plus) = (
            enumerate(FamilyId::PoiMinus, n).unwrap(),
            enumerate(FamilyId::PoiPlus, n).unwrap(),
        );
        for u in &plus {
            for s in &minus {
                assert!(member(FamilyId::PoiMinus, &poi_left(u, s).unwrap()));
                assert!(member(FamilyId::PoiPlus, &poi_right(u, s).unwrap()));
            }
        }
    }
}

#[test]
fn public_actions_reject_outsiders() {
    let s = PartialPerm::from_graph(3, [(1, 2)]).unwrap();
    let u = PartialPerm::identity(3).unwrap();
    assert!(poi_left(&u, &s).is_err());
    assert!(poi_right(&s, &s).is_err());
}

#[test]
fn mu_decompose_identity_for_every_construction() {
    for c in ConstructionId::ALL {
        for n in 1..=5 {
            let (sf, tf) = c.factors();
            for t in enumerate(c.target(), n).unwrap() {
                let p = c.decompose(&t).unwrap();
                assert!(member(sf, &p.0) && member(tf, &p.1), "{c} {t}");
                assert_eq!(c.mu(&p), t, "{c} n = {n}");
            }
        }
    }
}

#[test]
fn products_have_pair_identity_and_full_carrier() {
    for c in ConstructionId::ALL {
        for n in 2..=4 {
            let actions = c.action_pair(n).unwrap();
            let m = build_bilateral(&actions).unwrap();
            assert_eq!(m.len(), actions.acted_on().len() * actions.acting().len());
            let id = m.element(m.identity());
            assert!(id.0.is_identity() && id.1.is_identity());
            assert!(m.associativity().holds);
        }
    }
}

/// Trivial right action: the table is `(s, x)(r, y) = (s(x◁r), xy)`.
#[test]
fn semidirect_table_matches_formula() {
    let s = Arc::new(family_monoid(FamilyId::Poi, 3).unwrap());
    let t = Arc::new(family_monoid(FamilyId::C2, 3).unwrap());
    let m = build_semidirect(Arc::clone(&s), Arc::clone(&t), conj_left).unwrap();
    let via_pair = build_bilateral(&ActionPair::new(
        s,
        t,
        conj_left,
        |x: &PartialPerm, _: &PartialPerm| *x,
    ))
    .unwrap();
    assert_eq!(m.elements(), via_pair.elements());
    for a in 0..m.len() {
        for b in 0..m.len() {
            let (Pair(s1, x), Pair(r, y)) = (m.element(a), m.element(b));
            assert_eq!(
                *m.element(m.mul(a, b)),
                Pair(*s1 * conj_left(x, r), *x * *y)
            );
            assert_eq!(m.mul(a, b), via_pair.mul(a, b));
        }
    }
}
