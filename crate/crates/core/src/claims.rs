//! The full list of decomposition claims, checked for one chain size at a time.
//!
//! Every entry is a [`VerificationReport`] whose `holds` says whether the
//! claim is true for the built monoids. Claims that assert a negative
//! property (for example "is not regular") hold when the underlying check
//! fails.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bilateral::{build_bilateral, ActionPair};
use crate::constructions::{
    conj_left, embed_podi, family_monoid, inverse_in_semidirect, mutated_poi_pair, override_audit,
    restriction_check, ConstructionId, OverrideAudit, PermPair,
};
use crate::error::Result;
use crate::families::{enumerate, enumerate_by_filter, FamilyId};
use crate::monoid::{direct_product, FiniteMonoid, Pair, TABLE_LIMIT};
use crate::morphism::MonoidMap;
use crate::pperm::PartialPerm;
use crate::report::{check_tuples, CheckMode, VerificationReport};

type Actions = ActionPair<PartialPerm, PartialPerm>;
type Product = FiniteMonoid<PermPair>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClaimOptions {
    pub mode: CheckMode,
    /// Corrupt one output of the POI right action (self-test).
    pub mutate_poi_right: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClaimSection {
    pub n: usize,
    pub reports: Vec<VerificationReport>,
    /// Informational only; never affects the outcome.
    pub notes: Vec<OverrideAudit>,
}

impl ClaimSection {
    pub fn all_hold(&self) -> bool {
        self.reports.iter().all(|r| r.holds)
    }
}

fn prefixed(tag: &str, reports: Vec<VerificationReport>) -> Vec<VerificationReport> {
    reports
        .into_iter()
        .map(|r| {
            let law = format!("{tag}: {}", r.law);
            r.renamed(law)
        })
        .collect()
}

/// Negates a check whose failure is the claim.
fn expect_failure(law: &str, report: VerificationReport) -> VerificationReport {
    VerificationReport {
        law: law.to_string(),
        holds: !report.holds,
        counterexample: if report.holds { Some(vec![]) } else { None },
        witness: None,
        ..report
    }
}

/// `(u◁s)u^s = us` for all `u ∈ T`, `s ∈ S`.
pub fn check_factorization(actions: &Actions, mode: CheckMode) -> VerificationReport {
    let (s, t) = (actions.acted_on(), actions.acting());
    check_tuples(
        "(u◁s)u^s = us",
        &[t.len(), s.len()],
        mode,
        |p| {
            let (u, x) = (p[0], p[1]);
            match (actions.left_index(u, x), actions.right_index(u, x)) {
                (Some(a), Some(b)) => {
                    *s.element(a) * *t.element(b) == *t.element(u) * *s.element(x)
                }
                _ => false,
            }
        },
        |p| {
            vec![
                format!("u = {}", t.render(p[0])),
                format!("s = {}", s.render(p[1])),
            ]
        },
    )
}

/// `Im(u◁s) = Dom(u^s)` for `u, s ≠ 1`; the identity overrides do not
/// satisfy it (`∅◁1 = 1` but `∅^1 = ∅`).
pub fn check_middle_agrees(actions: &Actions, mode: CheckMode) -> VerificationReport {
    let (s, t) = (actions.acted_on(), actions.acting());
    check_tuples(
        "Im(u◁s) = Dom(u^s) for u, s ≠ 1",
        &[t.len(), s.len()],
        mode,
        |p| {
            p[0] == t.identity()
                || p[1] == s.identity()
                || match (
                    actions.left_index(p[0], p[1]),
                    actions.right_index(p[0], p[1]),
                ) {
                    (Some(a), Some(b)) => s.element(a).im() == t.element(b).dom(),
                    _ => false,
                }
        },
        |p| {
            vec![
                format!("u = {}", t.render(p[0])),
                format!("s = {}", s.render(p[1])),
            ]
        },
    )
}

/// `mu` is a surjective homomorphism onto the target family, and each
/// target element is recovered from its decomposition.
fn quotient_claims(
    c: ConstructionId,
    product: &Product,
    target: &FiniteMonoid<PartialPerm>,
    mode: CheckMode,
) -> Result<Vec<VerificationReport>> {
    let mu = MonoidMap::from_fn(product, target, |p| c.mu(p))?;
    let decompositions: Vec<Option<usize>> = target
        .elements()
        .iter()
        .map(|t| c.decompose(t).ok().and_then(|p| product.index_of(&p)))
        .collect();
    let recovers = check_tuples(
        "mu(decompose(t)) = t",
        &[target.len()],
        CheckMode::Exhaustive,
        |p| decompositions[p[0]].is_some_and(|x| mu.image(x) == p[0]),
        |p| vec![format!("t = {}", target.render(p[0]))],
    );
    Ok(vec![
        mu.verify_hom(mode).renamed("mu is a homomorphism"),
        mu.is_surjective().renamed("mu is surjective"),
        recovers,
    ])
}

fn build_failure(e: &crate::Error) -> VerificationReport {
    VerificationReport::claim(
        "product builds as a monoid",
        false,
        Some(vec![e.to_string()]),
    )
}

/// Axioms, factorization identity, structure of the product and the quotient
/// map for one of the two bilateral constructions.
pub fn bilateral_claims(
    c: ConstructionId,
    n: usize,
    opts: ClaimOptions,
) -> Result<Vec<VerificationReport>> {
    assert!(c.is_bilateral(), "{c} is not a bilateral construction");
    let mode = opts.mode;
    let actions = if opts.mutate_poi_right && c == ConstructionId::PoiBilateral {
        mutated_poi_pair(n)?.0
    } else {
        c.action_pair(n)?
    };
    let mut out = vec![actions.check_totality(mode)];
    out.extend(actions.check_all(mode));
    out.push(check_factorization(&actions, mode));
    out.push(check_middle_agrees(&actions, mode));

    let product = match build_bilateral(&actions) {
        Ok(p) => p,
        Err(e) => {
            out.push(build_failure(&e));
            return Ok(prefixed(c.tag(), out));
        }
    };
    let (s, t) = (actions.acted_on(), actions.acting());
    out.push(VerificationReport::claim(
        format!("order is |S|·|T| = {}", s.len() * t.len()),
        product.len() == s.len() * t.len(),
        Some(vec![product.len().to_string()]),
    ));
    let id = product.element(product.identity());
    out.push(VerificationReport::claim(
        "identity is (1, 1)",
        id.0.is_identity() && id.1.is_identity(),
        Some(vec![id.to_string()]),
    ));
    out.push(product.is_aperiodic().renamed("aperiodic"));
    if product.len() <= TABLE_LIMIT {
        out.push(expect_failure("not regular", product.is_regular()));
    }
    out.push(expect_failure(
        "idempotents do not commute",
        product.idempotents_commute(),
    ));
    out.extend(specific_witnesses(&product, n)?);

    let target = family_monoid(c.target(), n)?;
    out.extend(quotient_claims(c, &product, &target, mode)?);
    Ok(prefixed(c.tag(), out))
}

/// `(e, ∅)` is not regular, and `(1, e)(f, f) = (e, e) ≠ (f, e) = (f, f)(1, e)`
/// for `e = [1 / 1]` and `f = [1 2 / 1 2]`.
fn specific_witnesses(product: &Product, n: usize) -> Result<Vec<VerificationReport>> {
    let e = PartialPerm::partial_identity(n, &[1])?;
    let f = PartialPerm::partial_identity(n, &[1, 2])?;
    let one = PartialPerm::identity(n)?;
    let empty = PartialPerm::empty(n)?;
    let idx = |p: PermPair| product.index_of(&p);

    let e_empty = Pair(e, empty);
    let not_regular = match idx(e_empty) {
        Some(x) => VerificationReport::claim(
            "(e, ∅) is not regular",
            !product.is_regular_element(x),
            Some(vec![e_empty.to_string()]),
        ),
        None => VerificationReport::claim(
            "(e, ∅) is not regular",
            false,
            Some(vec!["(e, ∅) missing".into()]),
        ),
    };

    let (a, b) = (Pair(one, e), Pair(f, f));
    let printed = match (idx(a), idx(b)) {
        (Some(x), Some(y)) => {
            let ab = product.element(product.mul(x, y));
            let ba = product.element(product.mul(y, x));
            let holds = product.mul(x, x) == x
                && product.mul(y, y) == y
                && *ab == Pair(e, e)
                && *ba == Pair(f, e)
                && ab != ba;
            VerificationReport::claim(
                "(1,e), (f,f) idempotent with (1,e)(f,f) = (e,e) ≠ (f,e) = (f,f)(1,e)",
                holds,
                Some(vec![ab.to_string(), ba.to_string()]),
            )
        }
        _ => VerificationReport::claim(
            "(1,e), (f,f) idempotent with (1,e)(f,f) = (e,e) ≠ (f,e) = (f,f)(1,e)",
            false,
            Some(vec!["witnesses missing".into()]),
        ),
    };
    Ok(vec![not_regular, printed])
}

/// `POI_n ⋊ C_2`: inverse monoid structure, inverse formula, quotient onto
/// `PODI_n` and the embedding into `PODI_n × C_2`.
pub fn podi_claims(n: usize, opts: ClaimOptions) -> Result<Vec<VerificationReport>> {
    let c = ConstructionId::PodiSemidirect;
    let mode = opts.mode;
    let actions = c.action_pair(n)?;
    let mut out = vec![actions.check_totality(mode)];
    out.extend(actions.check_all(mode));
    let product = match build_bilateral(&actions) {
        Ok(p) => p,
        Err(e) => {
            out.push(build_failure(&e));
            return Ok(prefixed(c.tag(), out));
        }
    };
    out.push(VerificationReport::claim(
        format!("order is 2|POI_n| = {}", 2 * actions.acted_on().len()),
        product.len() == 2 * actions.acted_on().len(),
        Some(vec![product.len().to_string()]),
    ));
    out.push(product.is_inverse().renamed("inverse monoid"));

    let idempotents = product.idempotents();
    let expected: Vec<PermPair> = actions
        .acted_on()
        .elements()
        .iter()
        .filter(|e| **e * **e == **e)
        .map(|&e| Pair(e, PartialPerm::identity(n).expect("n checked")))
        .collect();
    let actual: Vec<PermPair> = idempotents.iter().map(|&i| *product.element(i)).collect();
    out.push(VerificationReport::claim(
        "idempotents are exactly (e, 1) with e idempotent in POI_n",
        actual == expected,
        Some(actual.iter().map(|p| p.to_string()).collect()),
    ));

    let formula = check_tuples(
        "(x s⁻¹ x, x) is the unique inverse of (s, x)",
        &[product.len()],
        CheckMode::Exhaustive,
        |p| {
            let inv = product.index_of(&inverse_in_semidirect(product.element(p[0])));
            inv.is_some() && product.inverses(p[0]) == vec![inv.unwrap_or(usize::MAX)]
        },
        |p| vec![product.render(p[0])],
    );
    out.push(formula);

    let target = family_monoid(c.target(), n)?;
    out.extend(quotient_claims(c, &product, &target, mode)?);
    let mu = MonoidMap::from_fn(&product, &target, |p| c.mu(p))?;
    out.push(
        mu.separates_idempotents()
            .renamed("mu separates idempotents"),
    );

    let podi = Arc::new(family_monoid(FamilyId::Podi, n)?);
    let c2 = Arc::new(family_monoid(FamilyId::C2, n)?);
    let codomain = direct_product(&podi, &c2)?;
    let embed = MonoidMap::from_fn(&product, &codomain, embed_podi)?;
    out.push(embed.is_injective().renamed("(s,x) ↦ (sx,x) is injective"));
    out.push(
        embed
            .verify_hom(mode)
            .renamed("(s,x) ↦ (sx,x) is a homomorphism"),
    );
    Ok(prefixed(c.tag(), out))
}

/// `ODP_n ⋊ C_2`: restriction of the conjugation action and the quotient
/// onto `DP_n`.
pub fn dp_claims(n: usize, opts: ClaimOptions) -> Result<Vec<VerificationReport>> {
    let c = ConstructionId::DpSemidirect;
    let mode = opts.mode;
    let actions = c.action_pair(n)?;
    let mut out = vec![actions.check_totality(mode)];
    out.extend(actions.check_all(mode));
    out.push(restriction_check(
        &enumerate(FamilyId::Poi, n)?,
        &enumerate(FamilyId::C2, n)?,
        &enumerate(FamilyId::Odp, n)?,
        &enumerate(FamilyId::C2, n)?,
        &enumerate(FamilyId::Dp, n)?,
        conj_left,
    )?);
    let product = match build_bilateral(&actions) {
        Ok(p) => p,
        Err(e) => {
            out.push(build_failure(&e));
            return Ok(prefixed(c.tag(), out));
        }
    };
    let target = family_monoid(c.target(), n)?;
    out.extend(quotient_claims(c, &product, &target, mode)?);
    Ok(prefixed(c.tag(), out))
}

/// Enumeration cross-checks and inverse-monoid structure of the families.
pub fn family_claims(n: usize) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for f in FamilyId::ALL {
        let fast = enumerate(f, n)?;
        let slow = enumerate_by_filter(f, n)?;
        out.push(VerificationReport::claim(
            format!(
                "{f}: enumeration matches the predicate filter ({})",
                fast.len()
            ),
            fast == slow,
            Some(vec![fast.len().to_string(), slow.len().to_string()]),
        ));
    }
    let poi = enumerate(FamilyId::Poi, n)?.len() as u64;
    let central = (1..=n as u64).fold(1u64, |acc, k| acc * (n as u64 + k) / k);
    out.push(VerificationReport::claim(
        format!("poi: |POI_n| = C(2n, n) = {central}"),
        poi == central,
        Some(vec![poi.to_string()]),
    ));
    for f in [FamilyId::Poi, FamilyId::Podi, FamilyId::Odp, FamilyId::Dp] {
        let m = family_monoid(f, n)?;
        out.push(m.is_inverse().renamed(format!("{f}: inverse monoid")));
    }
    for f in [
        FamilyId::PoiMinus,
        FamilyId::PoiPlus,
        FamilyId::OdpMinus,
        FamilyId::OdpPlus,
    ] {
        let m = family_monoid(f, n)?;
        out.push(m.is_j_trivial().renamed(format!("{f}: J-trivial")));
    }
    Ok(out)
}

/// The claims are stated for chains of at least this size; below it the
/// witnesses `e`, `f` degenerate (`f` is the identity at `n = 2`).
pub const MIN_CLAIM_N: usize = 3;

/// Every claim for chain size `n`, sorted by law name.
pub fn run_claims(n: usize, opts: ClaimOptions) -> Result<ClaimSection> {
    if n < MIN_CLAIM_N {
        return Err(crate::Error::InvalidParameter(format!(
            "claims need n ≥ {MIN_CLAIM_N}, got {n}"
        )));
    }
    let mut reports = family_claims(n)?;
    reports.extend(bilateral_claims(ConstructionId::PoiBilateral, n, opts)?);
    reports.extend(bilateral_claims(ConstructionId::OdpBilateral, n, opts)?);
    reports.extend(podi_claims(n, opts)?);
    reports.extend(dp_claims(n, opts)?);
    reports.sort_by(|a, b| a.law.cmp(&b.law));
    let notes = vec![
        override_audit(ConstructionId::PoiBilateral, n)?,
        override_audit(ConstructionId::OdpBilateral, n)?,
    ];
    Ok(ClaimSection { n, reports, notes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_claim_holds_at_three() {
        let section = run_claims(3, ClaimOptions::default()).unwrap();
        for r in &section.reports {
            assert!(r.holds, "{} {:?}", r.law, r.counterexample);
        }
        assert!(section.reports.len() >= 20);
        let names: Vec<&str> = section.reports.iter().map(|r| r.law.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn small_chains_are_rejected() {
        assert!(run_claims(2, ClaimOptions::default()).is_err());
    }

    #[test]
    fn mutation_breaks_the_suite() {
        let opts = ClaimOptions {
            mutate_poi_right: true,
            ..Default::default()
        };
        let reports = bilateral_claims(ConstructionId::PoiBilateral, 3, opts).unwrap();
        assert!(reports.iter().any(|r| !r.holds));
        let eq = reports
            .iter()
            .find(|r| r.law.ends_with("(u◁s)u^s = us"))
            .unwrap();
        assert!(!eq.holds);
    }
}
