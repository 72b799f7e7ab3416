use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::monoid::{Element, FiniteMonoid};
use crate::report::{check_tuples, CheckMode, VerificationReport};

/// A function between the carriers of two finite monoids, stored by index.
pub struct MonoidMap<'a, A, B> {
    source: &'a FiniteMonoid<A>,
    target: &'a FiniteMonoid<B>,
    map: Vec<usize>,
}

impl<'a, A: Element, B: Element> MonoidMap<'a, A, B> {
    /// Tabulates `f`; fails if some image is not an element of `target`.
    pub fn from_fn<F>(
        source: &'a FiniteMonoid<A>,
        target: &'a FiniteMonoid<B>,
        f: F,
    ) -> Result<Self>
    where
        F: Fn(&A) -> B,
    {
        let map = source
            .elements()
            .iter()
            .map(|a| {
                let b = f(a);
                target.index_of(&b).ok_or_else(|| {
                    Error::InvalidParameter(format!("{a} maps to {b}, which is outside the target"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &FiniteMonoid<A> {
        self.source
    }

    pub fn target(&self) -> &FiniteMonoid<B> {
        self.target
    }

    pub fn image(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `(xy)m = (xm)(ym)` for all pairs, and `1m = 1`.
    pub fn verify_hom(&self, mode: CheckMode) -> VerificationReport {
        let (s, t) = (self.source, self.target);
        let identity = VerificationReport::claim(
            "preserves identity",
            self.map[s.identity()] == t.identity(),
            Some(vec![
                s.render(s.identity()),
                t.render(self.map[s.identity()]),
            ]),
        );
        let pairs = check_tuples(
            "(xy)m = (xm)(ym)",
            &[s.len(), s.len()],
            mode,
            |p| self.map[s.mul(p[0], p[1])] == t.mul(self.map[p[0]], self.map[p[1]]),
            |p| vec![s.render(p[0]), s.render(p[1])],
        );
        VerificationReport::all_of("homomorphism", vec![identity, pairs])
    }

    pub fn is_surjective(&self) -> VerificationReport {
        let mut hit = vec![false; self.target.len()];
        for &y in &self.map {
            hit[y] = true;
        }
        check_tuples(
            "surjective",
            &[self.target.len()],
            CheckMode::Exhaustive,
            |p| hit[p[0]],
            |p| vec![self.target.render(p[0])],
        )
    }

    fn injective_on(&self, law: &str, domain: &[usize]) -> VerificationReport {
        let mut first: FxHashMap<usize, usize> = FxHashMap::default();
        for &x in domain {
            first.entry(self.map[x]).or_insert(x);
        }
        check_tuples(
            law,
            &[domain.len()],
            CheckMode::Exhaustive,
            |p| first[&self.map[domain[p[0]]]] == domain[p[0]],
            |p| {
                let x = domain[p[0]];
                vec![
                    self.source.render(first[&self.map[x]]),
                    self.source.render(x),
                ]
            },
        )
    }

    pub fn is_injective(&self) -> VerificationReport {
        let all: Vec<usize> = (0..self.source.len()).collect();
        self.injective_on("injective", &all)
    }

    /// Injectivity restricted to the idempotents of the source.
    pub fn separates_idempotents(&self) -> VerificationReport {
        self.injective_on("separates idempotents", &self.source.idempotents())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{enumerate, FamilyId};
    use crate::pperm::PartialPerm;

    fn family(f: FamilyId, n: usize) -> FiniteMonoid<PartialPerm> {
        FiniteMonoid::build(enumerate(f, n).unwrap(), |a, b| *a * *b).unwrap()
    }

    #[test]
    fn inclusion_is_injective_hom() {
        let odp = family(FamilyId::Odp, 3);
        let poi = family(FamilyId::Poi, 3);
        let inc = MonoidMap::from_fn(&odp, &poi, |s| *s).unwrap();
        assert!(inc.verify_hom(CheckMode::Auto).holds);
        assert!(inc.is_injective().holds);
        let onto = inc.is_surjective();
        assert!(!onto.holds);
        let missing = PartialPerm::parse(onto.counterexample.unwrap()[0].as_str(), 3).unwrap();
        assert!(!missing.is_isometry());
    }

    #[test]
    fn rank_map_failure_is_recheckable() {
        // s -> partial identity on {1..rank s} is not multiplicative in POI_3
        let poi = family(FamilyId::Poi, 3);
        let m = MonoidMap::from_fn(&poi, &poi, |s| {
            PartialPerm::order_iso(
                &(1..=s.rank()).collect::<Vec<_>>(),
                &(1..=s.rank()).collect::<Vec<_>>(),
                3,
            )
            .unwrap()
        })
        .unwrap();
        let r = m.verify_hom(CheckMode::Auto);
        assert!(!r.holds);
        let w = r.witness.unwrap();
        let (x, y) = (w[0], w[1]);
        assert_ne!(m.image(poi.mul(x, y)), poi.mul(m.image(x), m.image(y)));
        assert!(!m.is_injective().holds);
        assert!(!m.separates_idempotents().holds);
    }

    #[test]
    fn image_outside_target_is_an_error() {
        let poi = family(FamilyId::Poi, 3);
        let c2 = family(FamilyId::C2, 3);
        assert!(MonoidMap::from_fn(&poi, &c2, |s| *s).is_err());
    }
}
