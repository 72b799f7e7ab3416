//! Green's relations of a finite monoid.
//!
//! `xM` is the set of vertices reachable from `x` in the right Cayley graph
//! over a generating set, so R-classes are its strongly connected
//! components; L uses the left Cayley graph and J the union of both. H is the
//! meet of R and L and D the join, computed independently of J.

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::unionfind::UnionFind;

use crate::monoid::{Element, FiniteMonoid};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    /// Class number of each element.
    pub class_of: Vec<usize>,
    /// Classes ordered by smallest member, each sorted ascending.
    pub classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Normalizes arbitrary class labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut seen = rustc_hash::FxHashMap::default();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; labels.len()];
        for (x, &label) in labels.iter().enumerate() {
            let c = *seen.entry(label).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(x);
            class_of[x] = c;
        }
        Self { class_of, classes }
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// Every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|&x| coarser.related(c[0], x)))
    }

    pub fn is_trivial(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    pub fn class(&self, x: usize) -> &[usize] {
        &self.classes[self.class_of[x]]
    }
}

#[derive(Clone, Debug)]
pub struct GreenRelations {
    pub r: Partition,
    pub l: Partition,
    pub h: Partition,
    pub d: Partition,
    pub j: Partition,
}

fn scc_partition(size: usize, edges: impl Iterator<Item = (usize, usize)>) -> Partition {
    let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(size, 0);
    for _ in 0..size {
        graph.add_node(());
    }
    for (a, b) in edges {
        if a != b {
            graph.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
        }
    }
    let mut labels = vec![0; size];
    for (c, comp) in tarjan_scc(&graph).into_iter().enumerate() {
        for v in comp {
            labels[v.index()] = c;
        }
    }
    Partition::from_labels(&labels)
}

impl GreenRelations {
    pub fn compute<E: Element>(m: &FiniteMonoid<E>) -> Self {
        let size = m.len();
        let gens = m.generators();
        let right = |x: usize| gens.iter().map(move |&g| (x, m.mul(x, g)));
        let left = |x: usize| gens.iter().map(move |&g| (x, m.mul(g, x)));

        let r = scc_partition(size, (0..size).flat_map(right));
        let l = scc_partition(size, (0..size).flat_map(left));
        let j = scc_partition(size, (0..size).flat_map(|x| right(x).chain(left(x))));

        let h_labels: Vec<usize> = (0..size)
            .map(|x| r.class_of[x] * l.classes.len() + l.class_of[x])
            .collect();
        let h = Partition::from_labels(&h_labels);

        let mut uf = UnionFind::<usize>::new(size);
        for class in r.classes.iter().chain(&l.classes) {
            for &x in &class[1..] {
                uf.union(class[0], x);
            }
        }
        let d = Partition::from_labels(&uf.into_labeling());

        Self { r, l, h, d, j }
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

    // principal right ideal xM as a membership vector, straight from the definition
    fn right_ideal(m: &FiniteMonoid<PartialPerm>, x: usize) -> Vec<bool> {
        let mut v = vec![false; m.len()];
        for y in 0..m.len() {
            v[m.mul(x, y)] = true;
        }
        v
    }

    fn left_ideal(m: &FiniteMonoid<PartialPerm>, x: usize) -> Vec<bool> {
        let mut v = vec![false; m.len()];
        for y in 0..m.len() {
            v[m.mul(y, x)] = true;
        }
        v
    }

    #[test]
    fn rank_one_elements_with_same_domain_are_r_related() {
        let poi = family(FamilyId::Poi, 3);
        let g = poi.green();
        let a = poi
            .index_of(&PartialPerm::from_graph(3, [(1, 2)]).unwrap())
            .unwrap();
        let b = poi
            .index_of(&PartialPerm::from_graph(3, [(1, 3)]).unwrap())
            .unwrap();
        assert!(g.r.related(a, b));
        assert!(!g.l.related(a, b));
        assert_eq!(right_ideal(&poi, a), right_ideal(&poi, b));
    }

    #[test]
    fn matches_ideal_definitions() {
        for f in [
            FamilyId::Poi,
            FamilyId::Podi,
            FamilyId::PoiMinus,
            FamilyId::Dp,
            FamilyId::C2,
        ] {
            let m = family(f, 3);
            let g = m.green();
            for x in 0..m.len() {
                for y in 0..m.len() {
                    assert_eq!(
                        g.r.related(x, y),
                        right_ideal(&m, x) == right_ideal(&m, y),
                        "{f} R"
                    );
                    assert_eq!(
                        g.l.related(x, y),
                        left_ideal(&m, x) == left_ideal(&m, y),
                        "{f} L"
                    );
                }
            }
        }
    }

    #[test]
    fn poi3_is_h_trivial_and_c2_is_one_h_class() {
        assert!(family(FamilyId::Poi, 3).green().h.is_trivial());
        let c2 = family(FamilyId::C2, 3).green();
        assert_eq!(c2.h.classes, vec![vec![0, 1]]);
    }

    #[test]
    fn partitions_refine_and_d_equals_j() {
        for f in FamilyId::ALL {
            let g = family(f, 3).green();
            assert!(g.h.refines(&g.r) && g.h.refines(&g.l), "{f}");
            assert!(g.r.refines(&g.d) && g.l.refines(&g.d), "{f}");
            assert_eq!(g.d, g.j, "{f}");
        }
    }

    #[test]
    fn in_inverse_monoids_r_is_same_domain() {
        let m = family(FamilyId::Podi, 4);
        let g = m.green();
        for x in 0..m.len() {
            for y in 0..m.len() {
                let (s, t) = (m.element(x), m.element(y));
                assert_eq!(g.r.related(x, y), s.dom() == t.dom());
                assert_eq!(g.l.related(x, y), s.im() == t.im());
            }
        }
    }
}
