//! Partial permutations of the chain `1 < 2 < ... < n`.
//!
//! Maps act on the right: `s.compose(&t)` (also `s * t`) applies `s` first
//! and then `t`, so `x(st) = (xs)t`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Largest supported chain size.
pub const MAX_CHAIN: usize = 16;

/// An injective partial map of `{1, ..., n}` into itself.
///
/// Points are 1-based. The value is `Copy` and compares by the canonical
/// order: rank first, then the flattened graph `(i1, i1s, i2, i2s, ...)`
/// lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartialPerm {
    n: u8,
    // images[i - 1] is the image of i, 0 when i is outside the domain
    images: [u8; MAX_CHAIN],
}

fn check_chain(n: usize) -> Result<()> {
    if n == 0 || n > MAX_CHAIN {
        return Err(Error::InvalidParameter(format!(
            "chain size must lie in 1..={MAX_CHAIN}, got {n}"
        )));
    }
    Ok(())
}

impl PartialPerm {
    pub fn identity(n: usize) -> Result<Self> {
        check_chain(n)?;
        let mut images = [0; MAX_CHAIN];
        for (i, slot) in images.iter_mut().enumerate().take(n) {
            *slot = (i + 1) as u8;
        }
        Ok(Self { n: n as u8, images })
    }

    pub fn empty(n: usize) -> Result<Self> {
        check_chain(n)?;
        Ok(Self {
            n: n as u8,
            images: [0; MAX_CHAIN],
        })
    }

    /// The total map `i -> n + 1 - i`.
    pub fn reversal(n: usize) -> Result<Self> {
        check_chain(n)?;
        let mut images = [0; MAX_CHAIN];
        for (i, slot) in images.iter_mut().enumerate().take(n) {
            *slot = (n - i) as u8;
        }
        Ok(Self { n: n as u8, images })
    }

    /// Builds a partial permutation from its graph, in any order.
    pub fn from_graph<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_chain(n)?;
        let mut images = [0u8; MAX_CHAIN];
        let mut hit = [false; MAX_CHAIN];
        for (i, j) in pairs {
            if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                return Err(Error::InvalidParameter(format!(
                    "pair ({i}, {j}) leaves the chain 1..={n}"
                )));
            }
            if images[i - 1] != 0 {
                return Err(Error::InvalidParameter(format!("point {i} has two images")));
            }
            if hit[j - 1] {
                return Err(Error::InvalidParameter(format!(
                    "point {j} is the image of two points"
                )));
            }
            images[i - 1] = j as u8;
            hit[j - 1] = true;
        }
        Ok(Self { n: n as u8, images })
    }

    /// The unique order-preserving bijection from `domain` onto `image`.
    ///
    /// Both sets may be given in any order; duplicates are rejected.
    pub fn order_iso(domain: &[usize], image: &[usize], n: usize) -> Result<Self> {
        if domain.len() != image.len() {
            return Err(Error::SizeMismatch {
                left: domain.len(),
                right: image.len(),
            });
        }
        let mut a = domain.to_vec();
        let mut b = image.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        Self::from_graph(n, a.into_iter().zip(b))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn rank(&self) -> usize {
        self.images[..self.n()].iter().filter(|&&j| j != 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.rank() == 0
    }

    pub fn is_identity(&self) -> bool {
        self.images[..self.n()]
            .iter()
            .enumerate()
            .all(|(i, &j)| j as usize == i + 1)
    }

    /// Graph pairs `(i, is)` in ascending order of `i`.
    pub fn graph(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.images[..self.n()]
            .iter()
            .enumerate()
            .filter(|(_, &j)| j != 0)
            .map(|(i, &j)| (i + 1, j as usize))
    }

    /// Image of `i`, or `None` when `i` is outside the domain.
    pub fn apply(&self, i: usize) -> Result<Option<usize>> {
        if !(1..=self.n()).contains(&i) {
            return Err(Error::InvalidParameter(format!(
                "point {i} is outside the chain 1..={}",
                self.n
            )));
        }
        Ok(self.get(i))
    }

    #[inline]
    fn get(&self, i: usize) -> Option<usize> {
        match self.images[i - 1] {
            0 => None,
            j => Some(j as usize),
        }
    }

    pub fn dom(&self) -> Vec<usize> {
        self.graph().map(|(i, _)| i).collect()
    }

    pub fn im(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.graph().map(|(_, j)| j).collect();
        im.sort_unstable();
        im
    }

    /// `st`: apply `self`, then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ChainSizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(self.compose_same(other))
    }

    #[inline]
    fn compose_same(&self, other: &Self) -> Self {
        let mut images = [0u8; MAX_CHAIN];
        for (slot, &j) in images.iter_mut().zip(&self.images[..self.n()]) {
            if j != 0 {
                *slot = other.images[j as usize - 1];
            }
        }
        Self { n: self.n, images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = [0u8; MAX_CHAIN];
        for (i, j) in self.graph() {
            images[j - 1] = i as u8;
        }
        Self { n: self.n, images }
    }

    fn all_pairs(&self, pred: impl Fn(isize, isize, isize, isize) -> bool) -> bool {
        let graph: Vec<(isize, isize)> = self
            .graph()
            .map(|(i, j)| (i as isize, j as isize))
            .collect();
        graph
            .iter()
            .enumerate()
            .all(|(k, &(i, is))| graph[k + 1..].iter().all(|&(j, js)| pred(i, is, j, js)))
    }

    /// `i <= j` implies `is <= js` on the domain.
    pub fn is_order_preserving(&self) -> bool {
        // graph() is sorted by i, so pairs come with i < j
        self.all_pairs(|_, is, _, js| is <= js)
    }

    pub fn is_order_reversing(&self) -> bool {
        self.all_pairs(|_, is, _, js| is >= js)
    }

    pub fn is_monotone(&self) -> bool {
        self.is_order_preserving() || self.is_order_reversing()
    }

    /// `|is - js| = |i - j|` on the domain.
    pub fn is_isometry(&self) -> bool {
        self.all_pairs(|i, is, j, js| (is - js).abs() == (i - j).abs())
    }

    /// `i <= is` for every `i` in the domain.
    pub fn is_extensive(&self) -> bool {
        self.graph().all(|(i, j)| i <= j)
    }

    /// `is <= i` for every `i` in the domain.
    pub fn is_coextensive(&self) -> bool {
        self.graph().all(|(i, j)| j <= i)
    }

    pub fn is_partial_identity(&self) -> bool {
        self.graph().all(|(i, j)| i == j)
    }

    /// The partial identity on `points`.
    pub fn partial_identity(n: usize, points: &[usize]) -> Result<Self> {
        Self::from_graph(n, points.iter().map(|&i| (i, i)))
    }

    /// Parses the two-row rendering `[1 3 / 2 1]` (or `∅`).
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        if t == "∅" {
            return Self::empty(n);
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| err("expected `[domain / images]` or `∅`"))?;
        let (top, bottom) = inner
            .split_once('/')
            .ok_or_else(|| err("missing `/` between the two rows"))?;
        let row = |s: &str| -> Result<Vec<usize>> {
            s.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| err("points must be integers"))
                })
                .collect()
        };
        let (dom, im) = (row(top)?, row(bottom)?);
        if dom.len() != im.len() {
            return Err(err("rows have different lengths"));
        }
        Self::from_graph(n, dom.into_iter().zip(im)).map_err(|e| err(&e.to_string()))
    }
}

impl Ord for PartialPerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.graph().cmp(other.graph()))
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for PartialPerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Composition, left factor first.
///
/// # Panics
///
/// Panics when the chain sizes differ; use [`PartialPerm::compose`] for a
/// checked version.
impl Mul for PartialPerm {
    type Output = PartialPerm;

    fn mul(self, rhs: Self) -> Self {
        assert_eq!(
            self.n, rhs.n,
            "composing partial permutations of different chains"
        );
        self.compose_same(&rhs)
    }
}

impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let join = |it: Vec<usize>| {
            it.iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(
            f,
            "[{} / {}]",
            join(self.graph().map(|(i, _)| i).collect()),
            join(self.graph().map(|(_, j)| j).collect())
        )
    }
}

impl fmt::Debug for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}@{}", self.n)
    }
}
