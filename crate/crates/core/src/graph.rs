//! Finite simple graphs and their monomial ideals.
//!
//! Vertex `i` (0-based) corresponds to variable `x_{i+1}`, so graph ideals
//! drop straight into the rest of the kernel.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomp::alexander_dual;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Exact minimal-dominating-set enumeration is supported up to this many
/// vertices.
pub const DOMINATION_CAP: usize = 16;

/// A finite simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are unordered pairs of
    /// distinct vertices; loops, duplicates, and out-of-range endpoints are
    /// rejected.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("a graph needs at least one vertex"));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidArgument("loops are not allowed"));
            }
            if u >= n {
                return Err(Error::IndexOutOfRange { index: u, nvars: n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, nvars: n });
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidArgument("duplicate edge"));
            }
        }
        Ok(Graph { n, edges: set })
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|v| (v - 1, v)))
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument("a cycle needs at least three vertices"));
        }
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// The star with center `0` and `n - 1` leaves.
    pub fn star(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|v| (0, v)))
    }

    /// Decodes a Prüfer sequence into the labeled tree on
    /// `seq.len() + 2` vertices. The map is a bijection between sequences
    /// over `0..n` of length `n - 2` and labeled trees on `n` vertices.
    pub fn from_prufer(seq: &[usize]) -> Result<Self> {
        let n = seq.len() + 2;
        let mut degree = alloc::vec![1u32; n];
        for &s in seq {
            if s >= n {
                return Err(Error::IndexOutOfRange { index: s, nvars: n });
            }
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &s in seq {
            let leaf = (0..n)
                .find(|&v| degree[v] == 1)
                .expect("a degree-one vertex always remains");
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        Graph::new(n, edges)
    }

    /// A uniformly random labeled tree on `n` vertices, reproducible from
    /// the seed (a random Prüfer sequence, decoded).
    pub fn random_tree(n: usize, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("a graph needs at least one vertex"));
        }
        if n == 1 {
            return Graph::new(1, []);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
        Graph::from_prufer(&seq)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// The open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> Result<BTreeSet<usize>> {
        if v >= self.n {
            return Err(Error::IndexOutOfRange { index: v, nvars: self.n });
        }
        Ok(self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect())
    }

    /// The closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<BTreeSet<usize>> {
        let mut out = self.neighbors(v)?;
        out.insert(v);
        Ok(out)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = alloc::vec![false; self.n];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v).expect("vertex in range") {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Two-colorability, checked componentwise.
    pub fn is_bipartite(&self) -> bool {
        let mut color = alloc::vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = alloc::vec![start];
            while let Some(v) = stack.pop() {
                let c = color[v].expect("colored before push");
                for w in self.neighbors(v).expect("vertex in range") {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) => {
                            if cw == c {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// The edge ideal `(x_u x_v : uv an edge)`; the zero ideal for an
    /// edgeless graph.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_generators(
            self.n,
            self.edges.iter().map(|&(u, v)| Monomial::from_support([u, v], self.n)),
        )
    }

    /// The cover ideal, generated by the minimal vertex covers; computed as
    /// the Alexander dual of the edge ideal. Requires at least one edge.
    pub fn cover_ideal(&self) -> Result<MonomialIdeal> {
        alexander_dual(&self.edge_ideal())
    }

    /// The closed neighborhood ideal `(∏_{u ∈ N[v]} x_u : v a vertex)`.
    pub fn neighborhood_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_generators(
            self.n,
            (0..self.n).map(|v| {
                Monomial::from_support(
                    self.closed_neighborhood(v).expect("vertex in range"),
                    self.n,
                )
            }),
        )
    }

    /// All minimal dominating sets, in size-then-lexicographic order.
    ///
    /// Subsets are enumerated by size; a candidate that properly contains
    /// an already-found minimal dominating set is pruned, so a dominating
    /// candidate that survives is minimal. Exact up to
    /// [`DOMINATION_CAP`] vertices.
    pub fn minimal_dominating_sets(&self) -> Result<Vec<BTreeSet<usize>>> {
        if self.n > DOMINATION_CAP {
            return Err(Error::EnumerationBudget { size: self.n, cap: DOMINATION_CAP });
        }
        let full: u32 = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let covers: Vec<u32> = (0..self.n)
            .map(|v| {
                self.closed_neighborhood(v)
                    .expect("vertex in range")
                    .into_iter()
                    .fold(0u32, |acc, w| acc | (1 << w))
            })
            .collect();
        let mut found: Vec<u32> = Vec::new();
        for size in 1..=self.n {
            for_each_combination(self.n, size, &mut |members| {
                let mask = members.iter().fold(0u32, |acc, &v| acc | (1 << v));
                if found.iter().any(|&t| t | mask == mask) {
                    return;
                }
                let dominated = members.iter().fold(0u32, |acc, &v| acc | covers[v]);
                if dominated == full {
                    found.push(mask);
                }
            });
        }
        Ok(found
            .into_iter()
            .map(|mask| (0..self.n).filter(|&v| mask & (1 << v) != 0).collect())
            .collect())
    }

    /// The dominating ideal, generated by the minimal dominating sets.
    ///
    /// Computed twice: by direct enumeration and as the Alexander dual of
    /// the closed neighborhood ideal. The two routes must agree; a mismatch
    /// is reported as a kernel bug rather than returning either answer.
    pub fn dominating_ideal(&self) -> Result<MonomialIdeal> {
        let sets = self.minimal_dominating_sets()?;
        let enumerated = MonomialIdeal::from_generators(
            self.n,
            sets.iter().map(|s| Monomial::from_support(s.iter().copied(), self.n)),
        );
        let dualized = alexander_dual(&self.neighborhood_ideal())?;
        if enumerated != dualized {
            return Err(Error::SelfCheck("dominating ideal routes disagree"));
        }
        Ok(enumerated)
    }

    /// The domination number: the size of the smallest dominating set.
    pub fn domination_number(&self) -> Result<u32> {
        let sets = self.minimal_dominating_sets()?;
        Ok(sets.iter().map(BTreeSet::len).min().expect("V dominates") as u32)
    }
}

/// Calls `f` with every `size`-subset of `0..n` in lexicographic order of
/// the sorted member list.
fn for_each_combination(n: usize, size: usize, f: &mut dyn FnMut(&[usize])) {
    if size > n {
        return;
    }
    let mut members: Vec<usize> = (0..size).collect();
    loop {
        f(&members);
        // Advance to the next combination.
        let mut at = size;
        loop {
            if at == 0 {
                return;
            }
            at -= 1;
            if members[at] < n - (size - at) {
                members[at] += 1;
                for j in at + 1..size {
                    members[j] = members[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    #[test]
    fn rejects_bad_edge_lists() {
        assert!(Graph::new(0, []).is_err());
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 2)]).is_ok());
    }

    #[test]
    fn families_have_the_right_shapes() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.edges().len(), 3);
        assert!(p4.is_tree() && p4.is_bipartite() && p4.is_connected());

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edges().len(), 5);
        assert!(!c5.is_tree());
        assert!(!c5.is_bipartite());
        assert!(Graph::cycle(6).unwrap().is_bipartite());
        assert!(Graph::cycle(2).is_err());

        let s5 = Graph::star(5).unwrap();
        assert!(s5.is_tree());
        assert_eq!(s5.neighbors(0).unwrap().len(), 4);
    }

    #[test]
    fn closed_neighborhood_includes_the_vertex() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.closed_neighborhood(1).unwrap(), BTreeSet::from([0, 1, 2]));
        assert_eq!(p3.closed_neighborhood(0).unwrap(), BTreeSet::from([0, 1]));
        assert!(p3.closed_neighborhood(3).is_err());
    }

    #[test]
    fn prufer_decoding_is_a_bijection_for_small_n() {
        // 4^2 = 16 distinct labeled trees on 4 vertices.
        let mut seen = BTreeSet::new();
        for a in 0..4 {
            for b in 0..4 {
                let t = Graph::from_prufer(&[a, b]).unwrap();
                assert!(t.is_tree());
                seen.insert(t.edges().clone());
            }
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn prufer_empty_sequence_is_the_single_edge() {
        let t = Graph::from_prufer(&[]).unwrap();
        assert_eq!(t.order(), 2);
        assert!(t.has_edge(0, 1));
    }

    #[test]
    fn random_trees_are_reproducible() {
        let a = Graph::random_tree(7, 42).unwrap();
        let b = Graph::random_tree(7, 42).unwrap();
        let c = Graph::random_tree(7, 43).unwrap();
        assert_eq!(a, b);
        assert!(a.is_tree());
        assert!(c.is_tree());
    }

    #[test]
    fn edge_ideal_lists_the_edges() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.edge_ideal().generators(), &[m(&[1, 1, 0]), m(&[0, 1, 1])]);
        assert!(Graph::new(2, []).unwrap().edge_ideal().is_zero());
    }

    #[test]
    fn cover_ideal_lists_minimal_vertex_covers() {
        // P3 has minimal covers {1} and {0, 2}.
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.cover_ideal().unwrap().generators(), &[m(&[1, 0, 1]), m(&[0, 1, 0])]);
        assert!(Graph::new(2, []).unwrap().cover_ideal().is_err());
    }

    #[test]
    fn neighborhood_ideal_of_a_path() {
        // NI(P4) = (x1*x2, x3*x4) after minimization.
        let p4 = Graph::path(4).unwrap();
        assert_eq!(
            p4.neighborhood_ideal().generators(),
            &[m(&[1, 1, 0, 0]), m(&[0, 0, 1, 1])]
        );
    }

    #[test]
    fn minimal_dominating_sets_of_paths() {
        let p3 = Graph::path(3).unwrap();
        let sets = p3.minimal_dominating_sets().unwrap();
        assert_eq!(
            sets,
            vec![BTreeSet::from([1]), BTreeSet::from([0, 2])]
        );
        assert_eq!(p3.domination_number().unwrap(), 1);

        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.domination_number().unwrap(), 2);
    }

    #[test]
    fn dominating_sets_of_an_edgeless_graph() {
        let g = Graph::new(3, []).unwrap();
        assert_eq!(g.minimal_dominating_sets().unwrap(), vec![BTreeSet::from([0, 1, 2])]);
        assert_eq!(g.domination_number().unwrap(), 3);
    }

    #[test]
    fn dominating_ideal_agrees_with_the_dual_route() {
        // DI(P4) = (x1*x3, x1*x4, x2*x3, x2*x4).
        let p4 = Graph::path(4).unwrap();
        let di = p4.dominating_ideal().unwrap();
        assert_eq!(
            di.generators(),
            &[m(&[1, 0, 1, 0]), m(&[1, 0, 0, 1]), m(&[0, 1, 1, 0]), m(&[0, 1, 0, 1])]
        );
    }

    #[test]
    fn domination_enumeration_budget() {
        let g = Graph::new(17, []).unwrap();
        assert!(matches!(
            g.minimal_dominating_sets(),
            Err(Error::EnumerationBudget { size: 17, cap: DOMINATION_CAP })
        ));
    }

    #[test]
    fn combinations_run_in_lex_order() {
        let mut all = Vec::new();
        for_each_combination(4, 2, &mut |c| all.push(c.to_vec()));
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
