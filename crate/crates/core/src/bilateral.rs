//! Bilateral semidirect products `S ⋈ T`.
//!
//! A left action of `T` on `S` (written `u◁s`) and a right action of `S` on
//! `T` (written `u^s`) are both supplied as functions of `(u, s)`. When they
//! satisfy the identity, monoidal, (anti-)homomorphism, SPR and SCR laws, the
//! carrier `S × T` with
//!
//! ```text
//! (s, u)(r, v) = (s(u◁r), u^r v)
//! ```
//!
//! is a monoid with identity `(1, 1)`. A trivial right action gives the
//! semidirect product, a trivial left action the reverse semidirect product,
//! and two trivial actions the direct product.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monoid::{Element, FiniteMonoid, Pair};
use crate::report::{check_tuples, CheckMode, VerificationReport};

/// Action tables are materialized up to this many `(u, s)` pairs.
pub const ACTION_TABLE_LIMIT: usize = 1_000_000;

/// `(u, s) -> u◁s`, an element of `S`.
pub type LeftAction<A, B> = Arc<dyn Fn(&B, &A) -> A + Send + Sync>;
/// `(u, s) -> u^s`, an element of `T`.
pub type RightAction<A, B> = Arc<dyn Fn(&B, &A) -> B + Send + Sync>;

const NONE: u32 = u32::MAX;

/// A candidate left action of `T` on `S` together with a right action of `S` on `T`.
pub struct ActionPair<A, B> {
    s: Arc<FiniteMonoid<A>>,
    t: Arc<FiniteMonoid<B>>,
    left: LeftAction<A, B>,
    right: RightAction<A, B>,
    // indexed by u * |S| + s; NONE marks a result outside the carrier
    left_table: Option<Arc<Vec<u32>>>,
    right_table: Option<Arc<Vec<u32>>>,
}

impl<A, B> Clone for ActionPair<A, B> {
    fn clone(&self) -> Self {
        Self {
            s: Arc::clone(&self.s),
            t: Arc::clone(&self.t),
            left: Arc::clone(&self.left),
            right: Arc::clone(&self.right),
            left_table: self.left_table.clone(),
            right_table: self.right_table.clone(),
        }
    }
}

impl<A: Element, B: Element> ActionPair<A, B> {
    pub fn new<L, R>(s: Arc<FiniteMonoid<A>>, t: Arc<FiniteMonoid<B>>, left: L, right: R) -> Self
    where
        L: Fn(&B, &A) -> A + Send + Sync + 'static,
        R: Fn(&B, &A) -> B + Send + Sync + 'static,
    {
        let mut pair = Self {
            s,
            t,
            left: Arc::new(left),
            right: Arc::new(right),
            left_table: None,
            right_table: None,
        };
        if pair.s.len() * pair.t.len() <= ACTION_TABLE_LIMIT {
            let (s, t) = (&pair.s, &pair.t);
            let mut lt = Vec::with_capacity(s.len() * t.len());
            let mut rt = Vec::with_capacity(s.len() * t.len());
            for u in t.elements() {
                for x in s.elements() {
                    lt.push(s.index_of(&(pair.left)(u, x)).map_or(NONE, |i| i as u32));
                    rt.push(t.index_of(&(pair.right)(u, x)).map_or(NONE, |i| i as u32));
                }
            }
            pair.left_table = Some(Arc::new(lt));
            pair.right_table = Some(Arc::new(rt));
        }
        pair
    }

    /// Both actions trivial: `u◁s = s` and `u^s = u`.
    pub fn trivial(s: Arc<FiniteMonoid<A>>, t: Arc<FiniteMonoid<B>>) -> Self {
        Self::new(s, t, |_, x: &A| x.clone(), |u: &B, _| u.clone())
    }

    pub fn acted_on(&self) -> &Arc<FiniteMonoid<A>> {
        &self.s
    }

    pub fn acting(&self) -> &Arc<FiniteMonoid<B>> {
        &self.t
    }

    /// Index of `u◁s` in `S`, or `None` if the action leaves `S`.
    #[inline]
    pub fn left_index(&self, u: usize, s: usize) -> Option<usize> {
        match &self.left_table {
            Some(t) => match t[u * self.s.len() + s] {
                NONE => None,
                i => Some(i as usize),
            },
            None => self
                .s
                .index_of(&(self.left)(self.t.element(u), self.s.element(s))),
        }
    }

    /// Index of `u^s` in `T`, or `None` if the action leaves `T`.
    #[inline]
    pub fn right_index(&self, u: usize, s: usize) -> Option<usize> {
        match &self.right_table {
            Some(t) => match t[u * self.s.len() + s] {
                NONE => None,
                i => Some(i as usize),
            },
            None => self
                .t
                .index_of(&(self.right)(self.t.element(u), self.s.element(s))),
        }
    }

    fn rs(&self, i: usize) -> String {
        self.s.render(i)
    }

    fn rt(&self, i: usize) -> String {
        self.t.render(i)
    }

    /// Both actions land in their carriers.
    pub fn check_totality(&self, mode: CheckMode) -> VerificationReport {
        let (ns, nt) = (self.s.len(), self.t.len());
        let render = |p: &[usize]| {
            vec![
                format!("u = {}", self.rt(p[0])),
                format!("s = {}", self.rs(p[1])),
            ]
        };
        VerificationReport::all_of(
            "actions stay in their carriers",
            vec![
                check_tuples(
                    "u◁s ∈ S",
                    &[nt, ns],
                    mode,
                    |p| self.left_index(p[0], p[1]).is_some(),
                    render,
                ),
                check_tuples(
                    "u^s ∈ T",
                    &[nt, ns],
                    mode,
                    |p| self.right_index(p[0], p[1]).is_some(),
                    render,
                ),
            ],
        )
    }

    /// `1◁s = s`, `u^1 = u`, `u◁1 = 1` and `1^s = 1`.
    pub fn check_monoidal(&self, mode: CheckMode) -> VerificationReport {
        let (s, t) = (&self.s, &self.t);
        let (one_s, one_t) = (s.identity(), t.identity());
        VerificationReport::all_of(
            "monoidal: 1◁s = s, u^1 = u, u◁1 = 1, 1^s = 1",
            vec![
                self.identity_left(mode),
                self.identity_right(mode),
                check_tuples(
                    "u◁1 = 1",
                    &[t.len()],
                    mode,
                    |p| self.left_index(p[0], one_s) == Some(one_s),
                    |p| vec![format!("u = {}", self.rt(p[0]))],
                ),
                check_tuples(
                    "1^s = 1",
                    &[s.len()],
                    mode,
                    |p| self.right_index(one_t, p[0]) == Some(one_t),
                    |p| vec![format!("s = {}", self.rs(p[0]))],
                ),
            ],
        )
    }

    fn identity_left(&self, mode: CheckMode) -> VerificationReport {
        let one_t = self.t.identity();
        check_tuples(
            "1◁s = s",
            &[self.s.len()],
            mode,
            |p| self.left_index(one_t, p[0]) == Some(p[0]),
            |p| vec![format!("s = {}", self.rs(p[0]))],
        )
    }

    fn identity_right(&self, mode: CheckMode) -> VerificationReport {
        let one_s = self.s.identity();
        check_tuples(
            "u^1 = u",
            &[self.t.len()],
            mode,
            |p| self.right_index(p[0], one_s) == Some(p[0]),
            |p| vec![format!("u = {}", self.rt(p[0]))],
        )
    }

    /// `1◁s = s` and `(uv)◁s = u◁(v◁s)`.
    pub fn check_left_antihom(&self, mode: CheckMode) -> VerificationReport {
        let (s, t) = (&self.s, &self.t);
        let law = check_tuples(
            "(uv)◁s = u◁(v◁s)",
            &[t.len(), t.len(), s.len()],
            mode,
            |p| {
                let (u, v, x) = (p[0], p[1], p[2]);
                let lhs = self.left_index(t.mul(u, v), x);
                let rhs = self.left_index(v, x).and_then(|y| self.left_index(u, y));
                lhs.is_some() && lhs == rhs
            },
            |p| {
                vec![
                    format!("u = {}", self.rt(p[0])),
                    format!("v = {}", self.rt(p[1])),
                    format!("s = {}", self.rs(p[2])),
                ]
            },
        );
        VerificationReport::all_of(
            "left action is an anti-homomorphism: (uv)◁s = u◁(v◁s), 1◁s = s",
            vec![self.identity_left(mode), law],
        )
    }

    /// `u^1 = u` and `u^(sr) = (u^s)^r`.
    pub fn check_right_hom(&self, mode: CheckMode) -> VerificationReport {
        let (s, t) = (&self.s, &self.t);
        let law = check_tuples(
            "u^(sr) = (u^s)^r",
            &[t.len(), s.len(), s.len()],
            mode,
            |p| {
                let (u, x, r) = (p[0], p[1], p[2]);
                let lhs = self.right_index(u, s.mul(x, r));
                let rhs = self.right_index(u, x).and_then(|y| self.right_index(y, r));
                lhs.is_some() && lhs == rhs
            },
            |p| {
                vec![
                    format!("u = {}", self.rt(p[0])),
                    format!("s = {}", self.rs(p[1])),
                    format!("r = {}", self.rs(p[2])),
                ]
            },
        );
        VerificationReport::all_of(
            "right action is a homomorphism: u^(sr) = (u^s)^r, u^1 = u",
            vec![self.identity_right(mode), law],
        )
    }

    /// Sequential processing rule `(uv)^s = u^(v◁s) v^s`.
    pub fn check_spr(&self, mode: CheckMode) -> VerificationReport {
        let (s, t) = (&self.s, &self.t);
        check_tuples(
            "SPR: (uv)^s = u^(v◁s) v^s",
            &[t.len(), t.len(), s.len()],
            mode,
            |p| {
                let (u, v, x) = (p[0], p[1], p[2]);
                let lhs = self.right_index(t.mul(u, v), x);
                let rhs = self.left_index(v, x).and_then(|vx| {
                    let a = self.right_index(u, vx)?;
                    let b = self.right_index(v, x)?;
                    Some(t.mul(a, b))
                });
                lhs.is_some() && lhs == rhs
            },
            |p| {
                vec![
                    format!("u = {}", self.rt(p[0])),
                    format!("v = {}", self.rt(p[1])),
                    format!("s = {}", self.rs(p[2])),
                ]
            },
        )
    }

    /// Serial composition rule `u◁(sr) = (u◁s)(u^s◁r)`.
    pub fn check_scr(&self, mode: CheckMode) -> VerificationReport {
        let (s, t) = (&self.s, &self.t);
        check_tuples(
            "SCR: u◁(sr) = (u◁s)(u^s◁r)",
            &[t.len(), s.len(), s.len()],
            mode,
            |p| {
                let (u, x, r) = (p[0], p[1], p[2]);
                let lhs = self.left_index(u, s.mul(x, r));
                let rhs = (|| {
                    let a = self.left_index(u, x)?;
                    let us = self.right_index(u, x)?;
                    let b = self.left_index(us, r)?;
                    Some(s.mul(a, b))
                })();
                lhs.is_some() && lhs == rhs
            },
            |p| {
                vec![
                    format!("u = {}", self.rt(p[0])),
                    format!("s = {}", self.rs(p[1])),
                    format!("r = {}", self.rs(p[2])),
                ]
            },
        )
    }

    /// The five axiom checks, cheapest first.
    pub fn check_all(&self, mode: CheckMode) -> Vec<VerificationReport> {
        vec![
            self.check_monoidal(mode),
            self.check_left_antihom(mode),
            self.check_right_hom(mode),
            self.check_spr(mode),
            self.check_scr(mode),
        ]
    }

    /// Product of two carrier pairs given by component indices.
    #[inline]
    pub fn multiply(
        &self,
        (s, u): (usize, usize),
        (r, v): (usize, usize),
    ) -> Option<(usize, usize)> {
        let left = self.s.mul(s, self.left_index(u, r)?);
        let right = self.t.mul(self.right_index(u, r)?, v);
        Some((left, right))
    }
}

/// Builds `S ⋈ T` after all axiom checks pass.
pub fn build_bilateral<A: Element, B: Element>(
    actions: &ActionPair<A, B>,
) -> Result<FiniteMonoid<Pair<A, B>>> {
    let mode = CheckMode::Auto;
    let mut reports = vec![actions.check_totality(mode)];
    reports.extend(actions.check_all(mode));
    if let Some(failed) = reports.into_iter().find(|r| !r.holds) {
        return Err(Error::InvalidAction(Box::new(failed)));
    }
    let (s, t) = (actions.acted_on(), actions.acting());
    let elements: Vec<Pair<A, B>> = s
        .elements()
        .iter()
        .flat_map(|x| t.elements().iter().map(move |u| Pair(x.clone(), u.clone())))
        .collect();
    let actions = actions.clone();
    FiniteMonoid::build(elements, move |x: &Pair<A, B>, y: &Pair<A, B>| {
        let (s, t) = (actions.acted_on(), actions.acting());
        let idx = |p: &Pair<A, B>| {
            (
                s.index_of(&p.0).expect("left component in S"),
                t.index_of(&p.1).expect("right component in T"),
            )
        };
        let (a, b) = actions
            .multiply(idx(x), idx(y))
            .expect("actions checked total");
        Pair(s.element(a).clone(), t.element(b).clone())
    })
}

/// `S ⋊ T`: the left action with a trivial right action, `(s,u)(r,v) = (s(u◁r), uv)`.
pub fn build_semidirect<A: Element, B: Element, L>(
    s: Arc<FiniteMonoid<A>>,
    t: Arc<FiniteMonoid<B>>,
    left: L,
) -> Result<FiniteMonoid<Pair<A, B>>>
where
    L: Fn(&B, &A) -> A + Send + Sync + 'static,
{
    build_bilateral(&ActionPair::new(s, t, left, |u: &B, _: &A| u.clone()))
}

/// `S ⋉ T`: the right action with a trivial left action, `(s,u)(r,v) = (sr, u^r v)`.
pub fn build_reverse_semidirect<A: Element, B: Element, R>(
    s: Arc<FiniteMonoid<A>>,
    t: Arc<FiniteMonoid<B>>,
    right: R,
) -> Result<FiniteMonoid<Pair<A, B>>>
where
    R: Fn(&B, &A) -> B + Send + Sync + 'static,
{
    build_bilateral(&ActionPair::new(s, t, |_: &B, x: &A| x.clone(), right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{enumerate, FamilyId};
    use crate::monoid::direct_product;
    use crate::pperm::PartialPerm;

    fn family(f: FamilyId, n: usize) -> Arc<FiniteMonoid<PartialPerm>> {
        Arc::new(FiniteMonoid::build(enumerate(f, n).unwrap(), |a, b| *a * *b).unwrap())
    }

    fn same_tables<E: Element>(a: &FiniteMonoid<E>, b: &FiniteMonoid<E>) -> bool {
        a.elements() == b.elements()
            && (0..a.len()).all(|x| (0..a.len()).all(|y| a.mul(x, y) == b.mul(x, y)))
    }

    #[test]
    fn trivial_pair_passes_every_axiom() {
        let pair = ActionPair::trivial(family(FamilyId::PoiMinus, 3), family(FamilyId::PoiPlus, 3));
        for r in pair.check_all(CheckMode::Auto) {
            assert!(r.holds, "{}", r.law);
        }
        assert!(pair.check_totality(CheckMode::Auto).holds);
    }

    #[test]
    fn trivial_actions_give_the_direct_product() {
        let (s, t) = (family(FamilyId::PoiMinus, 3), family(FamilyId::C2, 3));
        let bil = build_bilateral(&ActionPair::trivial(Arc::clone(&s), Arc::clone(&t))).unwrap();
        let direct = direct_product(&s, &t).unwrap();
        assert_eq!(bil.len(), 28);
        assert!(same_tables(&bil, &direct));
    }

    #[test]
    fn conjugation_semidirect_has_order_forty() {
        let (poi, c2) = (family(FamilyId::Poi, 3), family(FamilyId::C2, 3));
        let sd = build_semidirect(
            Arc::clone(&poi),
            Arc::clone(&c2),
            |x: &PartialPerm, s: &PartialPerm| *x * *s * *x,
        )
        .unwrap();
        assert_eq!(sd.len(), 40);
        let id = sd.element(sd.identity());
        assert!(id.0.is_identity() && id.1.is_identity());

        // the same action read as a right action of C_2 on POI_n
        let rev =
            build_reverse_semidirect(c2, poi, |s: &PartialPerm, x: &PartialPerm| *x * *s * *x)
                .unwrap();
        assert_eq!(rev.len(), 40);
    }

    #[test]
    fn semidirect_with_trivial_left_is_direct() {
        let (s, t) = (family(FamilyId::Odp, 3), family(FamilyId::C2, 3));
        let sd = build_semidirect(
            Arc::clone(&s),
            Arc::clone(&t),
            |_: &PartialPerm, x: &PartialPerm| *x,
        )
        .unwrap();
        assert!(same_tables(&sd, &direct_product(&s, &t).unwrap()));
    }

    #[test]
    fn swapped_left_outputs_are_caught() {
        let (poi, c2) = (family(FamilyId::Poi, 3), family(FamilyId::C2, 3));
        let h = PartialPerm::reversal(3).unwrap();
        let a = PartialPerm::from_graph(3, [(1, 1)]).unwrap();
        let b = PartialPerm::from_graph(3, [(2, 2)]).unwrap();
        // conjugation with the outputs at (h, a) and (h, b) exchanged
        let corrupted = move |x: &PartialPerm, s: &PartialPerm| {
            let r = *x * *s * *x;
            if *x == h && *s == a {
                h * b * h
            } else if *x == h && *s == b {
                h * a * h
            } else {
                r
            }
        };
        let pair = ActionPair::new(poi, c2, corrupted, |u: &PartialPerm, _: &PartialPerm| *u);
        let reports = pair.check_all(CheckMode::Auto);
        let failed: Vec<_> = reports.iter().filter(|r| !r.holds).collect();
        assert!(!failed.is_empty());
        let anti = &reports[1];
        assert!(!anti.holds);
        // (hh)◁s = s but h◁(h◁s) differs at the swapped points
        let w = anti.witness.as_ref().unwrap();
        let t = pair.acting();
        let lhs = pair.left_index(t.mul(w[0], w[1]), w[2]);
        let rhs = pair
            .left_index(w[1], w[2])
            .and_then(|y| pair.left_index(w[0], y));
        assert_ne!(lhs, rhs);
        assert!(matches!(
            build_bilateral(&pair),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn non_monoidal_left_action_is_caught() {
        let (s, t) = (family(FamilyId::PoiMinus, 3), family(FamilyId::PoiPlus, 3));
        let e = PartialPerm::empty(3).unwrap();
        // u◁1 = ∅ for u ≠ 1 breaks u◁1 = 1
        let left = move |u: &PartialPerm, x: &PartialPerm| {
            if !u.is_identity() && x.is_identity() {
                e
            } else {
                *x
            }
        };
        let pair = ActionPair::new(s, t, left, |u: &PartialPerm, _: &PartialPerm| *u);
        let r = pair.check_monoidal(CheckMode::Auto);
        assert!(!r.holds);
        assert_eq!(r.counterexample.unwrap().len(), 1);
    }

    #[test]
    fn escaping_action_fails_totality() {
        let (s, t) = (family(FamilyId::PoiMinus, 3), family(FamilyId::PoiPlus, 3));
        let pair = ActionPair::new(
            s,
            t,
            |u: &PartialPerm, x: &PartialPerm| *x * *u,
            |u: &PartialPerm, _: &PartialPerm| *u,
        );
        assert!(!pair.check_totality(CheckMode::Auto).holds);
        assert!(matches!(
            build_bilateral(&pair),
            Err(Error::InvalidAction(_))
        ));
    }
}
