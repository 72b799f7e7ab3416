//! Finite monoids over opaque, canonically ordered element values.

use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::green::GreenRelations;
use crate::report::{check_tuples, CheckMode, VerificationReport};

/// Monoids up to this order keep a full Cayley table.
pub const TABLE_LIMIT: usize = 4096;
/// Monoids up to this order get an exhaustive associativity check on build.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 300;
const ASSOCIATIVITY_SAMPLES: u64 = 1_000_000;
const BUILD_SEED: u64 = 0xa550c;

/// What a monoid element needs: a canonical order, hashing, and a rendering.
pub trait Element: Clone + Ord + Hash + fmt::Display + Send + Sync + 'static {}

impl<T: Clone + Ord + Hash + fmt::Display + Send + Sync + 'static> Element for T {}

/// An element of a product monoid. Orders lexicographically, left component first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

type Op<E> = Arc<dyn Fn(&E, &E) -> E + Send + Sync>;

pub struct FiniteMonoid<E> {
    elements: Vec<E>,
    index: FxHashMap<E, usize>,
    table: Option<Vec<u32>>,
    op: Op<E>,
    identity: usize,
    associativity: VerificationReport,
}

impl<E: Element> FiniteMonoid<E> {
    /// Builds a monoid from its element set and multiplication.
    ///
    /// Elements are sorted canonically and deduplicated. Closure is checked on
    /// every pair when there are at most 10^8 pairs (otherwise on a seeded
    /// sample), the identity is located, and associativity is checked
    /// exhaustively for up to 300 elements and on 10^6 seeded triples above.
    pub fn build<F>(elements: Vec<E>, op: F) -> Result<Self>
    where
        F: Fn(&E, &E) -> E + Send + Sync + 'static,
    {
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        if elements.is_empty() {
            return Err(Error::NotAMonoid("empty element set".into()));
        }
        let size = elements.len();
        let index: FxHashMap<E, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();

        let closure_violation = |a: &E, b: &E, p: &E| Error::ClosureViolation {
            left: a.to_string(),
            right: b.to_string(),
            product: p.to_string(),
        };

        let table = if size <= TABLE_LIMIT {
            let rows: Vec<std::result::Result<Vec<u32>, (usize, usize)>> = (0..size)
                .into_par_iter()
                .map(|i| {
                    let a = &elements[i];
                    (0..size)
                        .map(|j| {
                            index
                                .get(&op(a, &elements[j]))
                                .map(|&k| k as u32)
                                .ok_or((i, j))
                        })
                        .collect()
                })
                .collect();
            let mut table = Vec::with_capacity(size * size);
            for row in rows {
                match row {
                    Ok(row) => table.extend(row),
                    Err((i, j)) => {
                        let (a, b) = (&elements[i], &elements[j]);
                        return Err(closure_violation(a, b, &op(a, b)));
                    }
                }
            }
            Some(table)
        } else {
            let report = check_tuples(
                "closure",
                &[size, size],
                CheckMode::Auto,
                |t| index.contains_key(&op(&elements[t[0]], &elements[t[1]])),
                |_| vec![],
            );
            if let Some(w) = report.witness {
                let (a, b) = (&elements[w[0]], &elements[w[1]]);
                return Err(closure_violation(a, b, &op(a, b)));
            }
            None
        };

        let mut monoid = Self {
            elements,
            index,
            table,
            op: Arc::new(op),
            identity: 0,
            associativity: VerificationReport::claim("associativity", true, None),
        };

        monoid.identity = (0..size)
            .into_par_iter()
            .find_first(|&e| (0..size).all(|x| monoid.mul(e, x) == x && monoid.mul(x, e) == x))
            .ok_or_else(|| Error::NotAMonoid("no identity element".into()))?;

        let mode = if size <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            CheckMode::Exhaustive
        } else {
            CheckMode::Sampled {
                samples: ASSOCIATIVITY_SAMPLES,
                seed: BUILD_SEED,
            }
        };
        let report = monoid.check_associativity(mode);
        if !report.holds {
            return Err(Error::NotAMonoid(format!(
                "multiplication is not associative at {:?}",
                report.counterexample.unwrap_or_default()
            )));
        }
        monoid.associativity = report;
        Ok(monoid)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    /// The associativity report produced at build time.
    pub fn associativity(&self) -> &VerificationReport {
        &self.associativity
    }

    /// Product of two element indices.
    ///
    /// # Panics
    ///
    /// Without a Cayley table, panics if the product leaves the element set,
    /// which is only possible when closure was checked on a sample.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => {
                let p = (self.op)(&self.elements[a], &self.elements[b]);
                *self
                    .index
                    .get(&p)
                    .unwrap_or_else(|| panic!("product {p} escapes the monoid"))
            }
        }
    }

    pub fn mul_elements(&self, a: &E, b: &E) -> E {
        (self.op)(a, b)
    }

    pub fn render(&self, i: usize) -> String {
        self.elements[i].to_string()
    }

    pub fn check_associativity(&self, mode: CheckMode) -> VerificationReport {
        let n = self.len();
        check_tuples(
            "associativity: (xy)z = x(yz)",
            &[n, n, n],
            mode,
            |t| self.mul(self.mul(t[0], t[1]), t[2]) == self.mul(t[0], self.mul(t[1], t[2])),
            |t| t.iter().map(|&i| self.render(i)).collect(),
        )
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.mul(x, x) == x).collect()
    }

    pub fn is_regular_element(&self, x: usize) -> bool {
        (0..self.len()).any(|y| self.mul(self.mul(x, y), x) == x)
    }

    /// All `y` with `xyx = x` and `yxy = y`.
    pub fn inverses(&self, x: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| self.mul(self.mul(x, y), x) == x && self.mul(self.mul(y, x), y) == y)
            .collect()
    }

    pub fn is_regular(&self) -> VerificationReport {
        check_tuples(
            "regular: every x has y with xyx = x",
            &[self.len()],
            CheckMode::Exhaustive,
            |t| self.is_regular_element(t[0]),
            |t| vec![self.render(t[0])],
        )
    }

    pub fn idempotents_commute(&self) -> VerificationReport {
        let idem = self.idempotents();
        check_tuples(
            "idempotents commute: ef = fe",
            &[idem.len(), idem.len()],
            CheckMode::Exhaustive,
            |t| {
                let (e, f) = (idem[t[0]], idem[t[1]]);
                self.mul(e, f) == self.mul(f, e)
            },
            |t| vec![self.render(idem[t[0]]), self.render(idem[t[1]])],
        )
    }

    pub fn is_inverse(&self) -> VerificationReport {
        VerificationReport::all_of(
            "inverse monoid: regular with commuting idempotents",
            vec![self.is_regular(), self.idempotents_commute()],
        )
    }

    /// Every `x` has `x^k = x^(k+1)` for some `k <= |M|`.
    pub fn is_aperiodic(&self) -> VerificationReport {
        let n = self.len();
        check_tuples(
            "aperiodic: x^k = x^(k+1) for some k",
            &[n],
            CheckMode::Exhaustive,
            |t| {
                let x = t[0];
                let mut p = x;
                for _ in 0..n {
                    let q = self.mul(p, x);
                    if q == p {
                        return true;
                    }
                    p = q;
                }
                false
            },
            |t| vec![self.render(t[0])],
        )
    }

    pub fn green(&self) -> GreenRelations {
        GreenRelations::compute(self)
    }

    pub fn is_j_trivial(&self) -> VerificationReport {
        let j = self.green().j;
        check_tuples(
            "J-trivial: every J-class is a singleton",
            &[j.classes.len()],
            CheckMode::Exhaustive,
            |t| j.classes[t[0]].len() == 1,
            |t| {
                j.classes[t[0]]
                    .iter()
                    .take(2)
                    .map(|&i| self.render(i))
                    .collect()
            },
        )
    }

    /// Greedy generating set: scan elements in canonical order and keep each
    /// one not already generated by the earlier picks.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.len();
        let mut reached = vec![false; n];
        reached[self.identity] = true;
        let mut members = vec![self.identity];
        let mut gens: Vec<usize> = Vec::new();
        for candidate in 0..n {
            if reached[candidate] {
                continue;
            }
            gens.push(candidate);
            // words ending in the new generator, then right-closure under all generators
            let mut queue: Vec<usize> = Vec::new();
            for &m in &members {
                let p = self.mul(m, candidate);
                if !reached[p] {
                    reached[p] = true;
                    queue.push(p);
                }
            }
            while let Some(x) = queue.pop() {
                members.push(x);
                for &g in &gens {
                    let p = self.mul(x, g);
                    if !reached[p] {
                        reached[p] = true;
                        queue.push(p);
                    }
                }
            }
        }
        gens
    }
}

impl<E: fmt::Debug> fmt::Debug for FiniteMonoid<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMonoid")
            .field("order", &self.elements.len())
            .field("identity", &self.elements[self.identity])
            .field("table", &self.table.is_some())
            .finish()
    }
}

/// Componentwise product `M x N`.
pub fn direct_product<A: Element, B: Element>(
    m: &Arc<FiniteMonoid<A>>,
    n: &Arc<FiniteMonoid<B>>,
) -> Result<FiniteMonoid<Pair<A, B>>> {
    let elements: Vec<Pair<A, B>> = m
        .elements()
        .iter()
        .flat_map(|a| n.elements().iter().map(move |b| Pair(a.clone(), b.clone())))
        .collect();
    let (m2, n2) = (Arc::clone(m), Arc::clone(n));
    FiniteMonoid::build(elements, move |x: &Pair<A, B>, y: &Pair<A, B>| {
        Pair(m2.mul_elements(&x.0, &y.0), n2.mul_elements(&x.1, &y.1))
    })
}
