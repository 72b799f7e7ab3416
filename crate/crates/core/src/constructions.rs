//! Concrete actions decomposing `POI_n`, `ODP_n`, `PODI_n` and `DP_n`.
//!
//! * `POI_n⁻ ⋈ POI_n⁺ → POI_n` and `ODP_n⁻ ⋈ ODP_n⁺ → ODP_n`, both via
//!   `(s, u) ↦ su`, where `u◁s` and `u^s` are rebuilt from `Dom(us)` and
//!   `Im(us)`;
//! * `POI_n ⋊ C_2 → PODI_n` and `ODP_n ⋊ C_2 → DP_n` via `(s, x) ↦ sx`,
//!   with `C_2 = {1, h}` acting by conjugation `x◁s = xsx`.
//!
//! For the bilateral actions the cases where either argument is the identity
//! are fixed separately (`1◁s = s`, `u◁1 = 1`, `u^1 = u`, `1^s = 1`) and take
//! precedence over the `Dom`/`Im` formulas.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bilateral::ActionPair;
use crate::error::{Error, Result};
use crate::families::{enumerate, member, FamilyId};
use crate::monoid::{FiniteMonoid, Pair};
use crate::pperm::PartialPerm;
use crate::report::{check_tuples, CheckMode, VerificationReport};

pub type PermPair = Pair<PartialPerm, PartialPerm>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionId {
    PoiBilateral,
    OdpBilateral,
    PodiSemidirect,
    DpSemidirect,
}

impl ConstructionId {
    pub const ALL: [ConstructionId; 4] = [
        ConstructionId::PoiBilateral,
        ConstructionId::OdpBilateral,
        ConstructionId::PodiSemidirect,
        ConstructionId::DpSemidirect,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ConstructionId::PoiBilateral => "poi-bilateral",
            ConstructionId::OdpBilateral => "odp-bilateral",
            ConstructionId::PodiSemidirect => "podi-semidirect",
            ConstructionId::DpSemidirect => "dp-semidirect",
        }
    }

    /// `(S, T)`: the acted-on and the acting factor.
    pub fn factors(self) -> (FamilyId, FamilyId) {
        match self {
            ConstructionId::PoiBilateral => (FamilyId::PoiMinus, FamilyId::PoiPlus),
            ConstructionId::OdpBilateral => (FamilyId::OdpMinus, FamilyId::OdpPlus),
            ConstructionId::PodiSemidirect => (FamilyId::Poi, FamilyId::C2),
            ConstructionId::DpSemidirect => (FamilyId::Odp, FamilyId::C2),
        }
    }

    pub fn target(self) -> FamilyId {
        match self {
            ConstructionId::PoiBilateral => FamilyId::Poi,
            ConstructionId::OdpBilateral => FamilyId::Odp,
            ConstructionId::PodiSemidirect => FamilyId::Podi,
            ConstructionId::DpSemidirect => FamilyId::Dp,
        }
    }

    pub fn is_bilateral(self) -> bool {
        matches!(
            self,
            ConstructionId::PoiBilateral | ConstructionId::OdpBilateral
        )
    }

    /// The quotient map: every construction sends `(s, u)` to `su`.
    pub fn mu(self, pair: &PermPair) -> PartialPerm {
        pair.0 * pair.1
    }

    /// The preimage of `t` used in the surjectivity argument for this
    /// construction.
    pub fn decompose(self, t: &PartialPerm) -> Result<PermPair> {
        if !member(self.target(), t) {
            return Err(Error::InvalidParameter(format!(
                "{t} is not in {}",
                self.target()
            )));
        }
        let n = t.n();
        let dom = t.dom();
        match self {
            ConstructionId::PoiBilateral => {
                let middle: Vec<usize> = (1..=dom.len()).collect();
                Ok(Pair(
                    PartialPerm::order_iso(&dom, &middle, n)?,
                    PartialPerm::order_iso(&middle, &t.im(), n)?,
                ))
            }
            ConstructionId::OdpBilateral => {
                let middle = offsets(&dom);
                Ok(Pair(
                    PartialPerm::order_iso(&dom, &middle, n)?,
                    PartialPerm::order_iso(&middle, &t.im(), n)?,
                ))
            }
            ConstructionId::PodiSemidirect | ConstructionId::DpSemidirect => {
                let (plain, _) = self.factors();
                if member(plain, t) {
                    Ok(Pair(*t, PartialPerm::identity(n)?))
                } else {
                    let h = PartialPerm::reversal(n)?;
                    Ok(Pair(*t * h, h))
                }
            }
        }
    }

    /// The factor monoids and their actions for chain size `n`.
    pub fn action_pair(self, n: usize) -> Result<ActionPair<PartialPerm, PartialPerm>> {
        let (sf, tf) = self.factors();
        let s = Arc::new(family_monoid(sf, n)?);
        let t = Arc::new(family_monoid(tf, n)?);
        Ok(match self {
            ConstructionId::PoiBilateral => ActionPair::new(s, t, poi_left_raw, poi_right_raw),
            ConstructionId::OdpBilateral => ActionPair::new(s, t, odp_left_raw, odp_right_raw),
            ConstructionId::PodiSemidirect | ConstructionId::DpSemidirect => {
                ActionPair::new(s, t, conj_left, |x: &PartialPerm, _: &PartialPerm| *x)
            }
        })
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ConstructionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionId::ALL
            .into_iter()
            .find(|c| c.tag() == s.trim())
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unknown construction tag".into(),
            })
    }
}

/// A family realized as a monoid under composition.
pub fn family_monoid(family: FamilyId, n: usize) -> Result<FiniteMonoid<PartialPerm>> {
    FiniteMonoid::build(enumerate(family, n)?, |a, b| *a * *b)
}

/// `{1, 1 + i_2 - i_1, ..., 1 + i_k - i_1}` for sorted `points`.
fn offsets(points: &[usize]) -> Vec<usize> {
    match points.first() {
        None => vec![],
        Some(&first) => points.iter().map(|&i| 1 + i - first).collect(),
    }
}

fn require(family: FamilyId, x: &PartialPerm, role: &str) -> Result<()> {
    if member(family, x) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{role} = {x} is not in {family}"
        )))
    }
}

/// `u◁s` from the generic formula: `Dom = Dom(us)`, `Im = {1..|Dom(us)|}`.
pub fn poi_left_generic(u: &PartialPerm, s: &PartialPerm) -> PartialPerm {
    let us = *u * *s;
    let dom = us.dom();
    let im: Vec<usize> = (1..=dom.len()).collect();
    PartialPerm::order_iso(&dom, &im, us.n()).expect("equal sizes")
}

/// `u^s` from the generic formula: `Dom = {1..|Im(us)|}`, `Im = Im(us)`.
pub fn poi_right_generic(u: &PartialPerm, s: &PartialPerm) -> PartialPerm {
    let us = *u * *s;
    let im = us.im();
    let dom: Vec<usize> = (1..=im.len()).collect();
    PartialPerm::order_iso(&dom, &im, us.n()).expect("equal sizes")
}

/// `u◁s` from the offset formula on `Dom(us) = {i_1 < ... < i_k}`.
pub fn odp_left_generic(u: &PartialPerm, s: &PartialPerm) -> PartialPerm {
    let us = *u * *s;
    let dom = us.dom();
    PartialPerm::order_iso(&dom, &offsets(&dom), us.n()).expect("equal sizes")
}

/// `u^s` from the offset formula on the images `i_1us < ... < i_kus`.
pub fn odp_right_generic(u: &PartialPerm, s: &PartialPerm) -> PartialPerm {
    let us = *u * *s;
    let im = us.im();
    PartialPerm::order_iso(&offsets(&im), &im, us.n()).expect("equal sizes")
}

fn poi_left_raw(u: &PartialPerm, s: &PartialPerm) -> PartialPerm {
    if u.is_identity() || s.is_identity() {
        *s
    } else {
        poi_left_generic(u, s)
    }
}

fn poi_right_raw(u: &PartialPerm, s: &PartialPerm) -> PartialPerm {
    if s.is_identity() || u.is_identity() {
        *u
    } else {
        poi_right_generic(u, s)
    }
}

fn odp_left_raw(u: &PartialPerm, s: &PartialPerm) -> PartialPerm {
    if u.is_identity() || s.is_identity() {
        *s
    } else {
        odp_left_generic(u, s)
    }
}

fn odp_right_raw(u: &PartialPerm, s: &PartialPerm) -> PartialPerm {
    if s.is_identity() || u.is_identity() {
        *u
    } else {
        odp_right_generic(u, s)
    }
}

/// Left action of `POI_n⁺` on `POI_n⁻`.
pub fn poi_left(u: &PartialPerm, s: &PartialPerm) -> Result<PartialPerm> {
    require(FamilyId::PoiPlus, u, "u")?;
    require(FamilyId::PoiMinus, s, "s")?;
    Ok(poi_left_raw(u, s))
}

/// Right action of `POI_n⁻` on `POI_n⁺`.
pub fn poi_right(u: &PartialPerm, s: &PartialPerm) -> Result<PartialPerm> {
    require(FamilyId::PoiPlus, u, "u")?;
    require(FamilyId::PoiMinus, s, "s")?;
    Ok(poi_right_raw(u, s))
}

/// Left action of `ODP_n⁺` on `ODP_n⁻`.
pub fn odp_left(u: &PartialPerm, s: &PartialPerm) -> Result<PartialPerm> {
    require(FamilyId::OdpPlus, u, "u")?;
    require(FamilyId::OdpMinus, s, "s")?;
    Ok(odp_left_raw(u, s))
}

/// Right action of `ODP_n⁻` on `ODP_n⁺`.
pub fn odp_right(u: &PartialPerm, s: &PartialPerm) -> Result<PartialPerm> {
    require(FamilyId::OdpPlus, u, "u")?;
    require(FamilyId::OdpMinus, s, "s")?;
    Ok(odp_right_raw(u, s))
}

/// `x◁s = xsx` for `x ∈ {1, h}`.
pub fn conj_left(x: &PartialPerm, s: &PartialPerm) -> PartialPerm {
    *x * *s * *x
}

/// `(s, x) ↦ (sx, x)`, from `POI_n ⋊ C_2` into `PODI_n × C_2`.
pub fn embed_podi(pair: &PermPair) -> PermPair {
    Pair(pair.0 * pair.1, pair.1)
}

/// `(s, x) ↦ (x s⁻¹ x, x)`, the inverse in `POI_n ⋊ C_2`.
pub fn inverse_in_semidirect(pair: &PermPair) -> PermPair {
    let Pair(s, x) = *pair;
    Pair(x * s.inverse() * x, x)
}

/// The POI bilateral action pair with a single output of `poi_right`
/// replaced by `∅`: the first `(u, s)` in canonical order with `u, s ≠ 1` and
/// `us ≠ ∅`. Returns the pair and the corrupted input `(u, s)`.
pub fn mutated_poi_pair(
    n: usize,
) -> Result<(
    ActionPair<PartialPerm, PartialPerm>,
    (PartialPerm, PartialPerm),
)> {
    let s_mon = Arc::new(family_monoid(FamilyId::PoiMinus, n)?);
    let t_mon = Arc::new(family_monoid(FamilyId::PoiPlus, n)?);
    let target = t_mon
        .elements()
        .iter()
        .filter(|u| !u.is_identity())
        .flat_map(|u| s_mon.elements().iter().map(move |s| (*u, *s)))
        .find(|(u, s)| !s.is_identity() && !(*u * *s).is_empty())
        .ok_or_else(|| Error::InvalidParameter(format!("no mutable output at n = {n}")))?;
    let empty = PartialPerm::empty(n)?;
    let right = move |u: &PartialPerm, s: &PartialPerm| {
        if (*u, *s) == target {
            empty
        } else {
            poi_right_raw(u, s)
        }
    };
    Ok((ActionPair::new(s_mon, t_mon, poi_left_raw, right), target))
}

/// Where the generic `Dom`/`Im` formula disagrees with the identity overrides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverrideAudit {
    pub construction: ConstructionId,
    pub n: usize,
    pub cases: Vec<OverrideCase>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverrideCase {
    /// The overridden rule, e.g. `1◁s = s`.
    pub rule: String,
    pub inputs: usize,
    pub disagreements: usize,
    /// Up to three `argument: generic value` examples.
    pub examples: Vec<String>,
}

/// Informational: applies the generic formulas at identity arguments and
/// compares with the overrides.
pub fn override_audit(c: ConstructionId, n: usize) -> Result<OverrideAudit> {
    type Generic = fn(&PartialPerm, &PartialPerm) -> PartialPerm;
    let (left, right): (Generic, Generic) = match c {
        ConstructionId::PoiBilateral => (poi_left_generic, poi_right_generic),
        ConstructionId::OdpBilateral => (odp_left_generic, odp_right_generic),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "{c} has no identity overrides"
            )))
        }
    };
    let (sf, tf) = c.factors();
    let (ss, ts) = (enumerate(sf, n)?, enumerate(tf, n)?);
    let one = PartialPerm::identity(n)?;
    let case = |rule: &str,
                args: &[PartialPerm],
                f: &dyn Fn(&PartialPerm) -> (PartialPerm, PartialPerm)| {
        let bad: Vec<String> = args
            .iter()
            .filter_map(|a| {
                let (generic, expected) = f(a);
                (generic != expected).then(|| format!("{a}: {generic}"))
            })
            .collect();
        OverrideCase {
            rule: rule.to_string(),
            inputs: args.len(),
            disagreements: bad.len(),
            examples: bad.into_iter().take(3).collect(),
        }
    };
    Ok(OverrideAudit {
        construction: c,
        n,
        cases: vec![
            case("1◁s = s", &ss, &|s| (left(&one, s), *s)),
            case("u◁1 = 1", &ts, &|u| (left(u, &one), one)),
            case("u^1 = u", &ts, &|u| (right(u, &one), *u)),
            case("1^s = 1", &ss, &|s| (right(&one, s), one)),
        ],
    })
}

/// Checks that `left` restricts to an action of `t2` on `t1` and that
/// `{ab : a ∈ t1, b ∈ t2}` is exactly `target`.
pub fn restriction_check<L>(
    s1: &[PartialPerm],
    s2: &[PartialPerm],
    t1: &[PartialPerm],
    t2: &[PartialPerm],
    target: &[PartialPerm],
    left: L,
) -> Result<VerificationReport>
where
    L: Fn(&PartialPerm, &PartialPerm) -> PartialPerm + Sync,
{
    let contains = |set: &[PartialPerm], x: &PartialPerm| set.contains(x);
    if let Some(x) = t1.iter().find(|x| !contains(s1, x)) {
        return Err(Error::InvalidParameter(format!(
            "{x} is in T1 but not in S1"
        )));
    }
    if let Some(x) = t2.iter().find(|x| !contains(s2, x)) {
        return Err(Error::InvalidParameter(format!(
            "{x} is in T2 but not in S2"
        )));
    }
    let mode = CheckMode::Exhaustive;
    let closed = check_tuples(
        "u◁s ∈ T1 for u ∈ T2, s ∈ T1",
        &[t2.len(), t1.len()],
        mode,
        |p| contains(t1, &left(&t2[p[0]], &t1[p[1]])),
        |p| vec![format!("u = {}", t2[p[0]]), format!("s = {}", t1[p[1]])],
    );
    let products: Vec<PartialPerm> = t1
        .iter()
        .flat_map(|a| t2.iter().map(move |b| *a * *b))
        .collect();
    let into = check_tuples(
        "T1·T2 ⊆ T",
        &[t1.len(), t2.len()],
        mode,
        |p| contains(target, &(t1[p[0]] * t2[p[1]])),
        |p| vec![format!("a = {}", t1[p[0]]), format!("b = {}", t2[p[1]])],
    );
    let onto = check_tuples(
        "T ⊆ T1·T2",
        &[target.len()],
        mode,
        |p| products.contains(&target[p[0]]),
        |p| vec![format!("t = {}", target[p[0]])],
    );
    Ok(VerificationReport::all_of(
        "restriction: T2 acts on T1 and T = T1·T2",
        vec![closed, into, onto],
    ))
}
