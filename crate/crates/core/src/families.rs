//! The monoids of partial permutations studied here, realized extensionally.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pperm::PartialPerm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyId {
    /// The symmetric inverse monoid.
    I,
    /// Order-preserving partial permutations.
    Poi,
    /// Monotone (order-preserving or order-reversing) partial permutations.
    Podi,
    /// Order-preserving partial isometries.
    Odp,
    /// Partial isometries.
    Dp,
    /// Co-extensive members of `Poi`.
    PoiMinus,
    /// Extensive members of `Poi`.
    PoiPlus,
    OdpMinus,
    OdpPlus,
    /// `{1, h}` with `h` the reversal of the chain.
    C2,
}

impl FamilyId {
    pub const ALL: [FamilyId; 10] = [
        FamilyId::I,
        FamilyId::Poi,
        FamilyId::Podi,
        FamilyId::Odp,
        FamilyId::Dp,
        FamilyId::PoiMinus,
        FamilyId::PoiPlus,
        FamilyId::OdpMinus,
        FamilyId::OdpPlus,
        FamilyId::C2,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FamilyId::I => "i",
            FamilyId::Poi => "poi",
            FamilyId::Podi => "podi",
            FamilyId::Odp => "odp",
            FamilyId::Dp => "dp",
            FamilyId::PoiMinus => "poi-minus",
            FamilyId::PoiPlus => "poi-plus",
            FamilyId::OdpMinus => "odp-minus",
            FamilyId::OdpPlus => "odp-plus",
            FamilyId::C2 => "c2",
        }
    }

    /// Whether the family is an inverse submonoid of `I`.
    pub fn is_inverse_closed(self) -> bool {
        matches!(
            self,
            FamilyId::I
                | FamilyId::Poi
                | FamilyId::Podi
                | FamilyId::Odp
                | FamilyId::Dp
                | FamilyId::C2
        )
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.tag() == s.trim())
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "unknown family tag".into(),
            })
    }
}

pub fn member(family: FamilyId, s: &PartialPerm) -> bool {
    match family {
        FamilyId::I => true,
        FamilyId::Poi => s.is_order_preserving(),
        FamilyId::Podi => s.is_monotone(),
        FamilyId::Odp => s.is_isometry() && s.is_order_preserving(),
        FamilyId::Dp => s.is_isometry(),
        FamilyId::PoiMinus => s.is_order_preserving() && s.is_coextensive(),
        FamilyId::PoiPlus => s.is_order_preserving() && s.is_extensive(),
        FamilyId::OdpMinus => s.is_isometry() && s.is_order_preserving() && s.is_coextensive(),
        FamilyId::OdpPlus => s.is_isometry() && s.is_order_preserving() && s.is_extensive(),
        FamilyId::C2 => s.is_identity() || PartialPerm::reversal(s.n()).is_ok_and(|h| h == *s),
    }
}

/// Bitmask subsets of `{1..n}` as sorted point lists, grouped by size.
fn subsets_by_size(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut by_size = vec![Vec::new(); n + 1];
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (0..n)
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| b + 1)
            .collect();
        by_size[set.len()].push(set);
    }
    by_size
}

/// All of `I_n`: a domain subset together with an injective assignment.
pub fn all_partial_perms(n: usize) -> Result<Vec<PartialPerm>> {
    PartialPerm::identity(n)?;
    fn assign(
        n: usize,
        point: usize,
        used: &mut Vec<bool>,
        graph: &mut Vec<(usize, usize)>,
        out: &mut Vec<PartialPerm>,
    ) {
        if point > n {
            out.push(
                PartialPerm::from_graph(n, graph.iter().copied())
                    .expect("injective by construction"),
            );
            return;
        }
        assign(n, point + 1, used, graph, out);
        for j in 1..=n {
            if !used[j] {
                used[j] = true;
                graph.push((point, j));
                assign(n, point + 1, used, graph, out);
                graph.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    assign(n, 1, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    out.sort_unstable();
    Ok(out)
}

/// `POI_n` generated from (domain, image) pairs of equal size.
fn order_preserving(n: usize) -> Vec<PartialPerm> {
    let subsets = subsets_by_size(n);
    let mut out = Vec::new();
    for level in &subsets {
        for a in level {
            for b in level {
                out.push(PartialPerm::order_iso(a, b, n).expect("equal sizes"));
            }
        }
    }
    out
}

/// The members of `family` on the chain of size `n`, in canonical order.
pub fn enumerate(family: FamilyId, n: usize) -> Result<Vec<PartialPerm>> {
    let id = PartialPerm::identity(n)?;
    let h = PartialPerm::reversal(n)?;
    let mut out = match family {
        FamilyId::I => return all_partial_perms(n),
        FamilyId::C2 => vec![id, h],
        FamilyId::Podi | FamilyId::Dp => {
            let poi = order_preserving(n);
            let reversing: Vec<PartialPerm> = poi.iter().map(|&s| s * h).collect();
            poi.into_iter()
                .chain(reversing)
                .filter(|s| member(family, s))
                .collect()
        }
        _ => order_preserving(n)
            .into_iter()
            .filter(|s| member(family, s))
            .collect(),
    };
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Slow path: filter every partial permutation by the family predicate.
pub fn enumerate_by_filter(family: FamilyId, n: usize) -> Result<Vec<PartialPerm>> {
    Ok(all_partial_perms(n)?
        .into_iter()
        .filter(|s| member(family, s))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(n: usize, pairs: &[(usize, usize)]) -> PartialPerm {
        PartialPerm::from_graph(n, pairs.iter().copied()).unwrap()
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn member_examples() {
        assert!(member(FamilyId::Dp, &PartialPerm::reversal(3).unwrap()));
        assert!(!member(FamilyId::PoiPlus, &pp(3, &[(2, 1)])));
        let s = pp(3, &[(1, 2), (2, 3)]);
        assert!(s.is_isometry() && s.is_order_preserving());
        assert!(member(FamilyId::Odp, &s));
        assert!(member(FamilyId::C2, &PartialPerm::identity(4).unwrap()));
        assert!(!member(FamilyId::C2, &pp(3, &[(1, 3), (3, 1)])));
    }

    #[test]
    fn symmetric_inverse_monoid_size() {
        // sum_k C(3,k)^2 k!
        let expected: u64 = (0..=3u64)
            .map(|k| binomial(3, k).pow(2) * (1..=k).product::<u64>())
            .sum();
        assert_eq!(expected, 34);
        assert_eq!(all_partial_perms(3).unwrap().len(), 34);
        assert_eq!(all_partial_perms(4).unwrap().len(), 209);
    }

    #[test]
    fn sizes_at_three_agree_with_filter() {
        let expected = [
            (FamilyId::I, 34),
            (FamilyId::Poi, 20),
            (FamilyId::Odp, 16),
            (FamilyId::Dp, 22),
            (FamilyId::Podi, 30),
            (FamilyId::PoiMinus, 14),
            (FamilyId::PoiPlus, 14),
        ];
        for (f, size) in expected {
            let fast = enumerate(f, 3).unwrap();
            let slow = enumerate_by_filter(f, 3).unwrap();
            assert_eq!(fast, slow, "{f}");
            assert_eq!(fast.len(), size, "{f}");
        }
    }

    #[test]
    fn c2_is_identity_and_reversal() {
        let c2 = enumerate(FamilyId::C2, 3).unwrap();
        assert_eq!(
            c2,
            vec![
                PartialPerm::identity(3).unwrap(),
                PartialPerm::reversal(3).unwrap()
            ]
        );
        assert_eq!(enumerate(FamilyId::C2, 1).unwrap().len(), 1);
    }

    #[test]
    fn tags_round_trip() {
        for f in FamilyId::ALL {
            assert_eq!(f.tag().parse::<FamilyId>().unwrap(), f);
            assert_eq!(
                serde_json::to_string(&f).unwrap(),
                format!("\"{}\"", f.tag())
            );
        }
        assert!("pod".parse::<FamilyId>().is_err());
    }

    #[test]
    fn rejects_bad_chain() {
        assert!(enumerate(FamilyId::Poi, 0).is_err());
        assert!(enumerate_by_filter(FamilyId::Poi, 0).is_err());
    }
}
