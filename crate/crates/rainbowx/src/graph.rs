//! Simple undirected graphs with dense 0-based vertex ids, named family
//! generators, and exhaustive enumeration of small connected graphs.

use std::collections::BTreeSet;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Sentinel distance for unreachable vertices.
pub const UNREACHABLE: usize = usize::MAX;

/// A simple undirected graph. Immutable after construction; adjacency is
/// stored per vertex as a bitset and edges as a sorted list of pairs
/// `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

/// Parameterized graph families used throughout the library.
///
/// Fixed labelings keep tests reproducible:
/// - `Star(t)`: hub is vertex 0, leaves are `1..=t` (this is K_{1,t}).
/// - `Path(t)`: vertices in path order `0..t`.
/// - `Cycle(t)`: vertices in cycle order `0..t`.
/// - `HairyClique(t)`: clique is `0..t`, the pendant of clique vertex `i`
///   is `t + i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedFamily {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    HairyClique(usize),
}

pub fn build_named(family: NamedFamily) -> Result<Graph> {
    match family {
        NamedFamily::Complete(t) => {
            if t < 3 {
                return Err(Error::InputDomain(format!("complete requires t >= 3, got {t}")));
            }
            let mut pairs = Vec::new();
            for u in 0..t {
                for v in (u + 1)..t {
                    pairs.push((u, v));
                }
            }
            Graph::from_edge_list(t, &pairs)
        }
        NamedFamily::Cycle(t) => {
            if t < 3 {
                return Err(Error::InputDomain(format!("cycle requires t >= 3, got {t}")));
            }
            let pairs: Vec<_> = (0..t).map(|i| (i, (i + 1) % t)).collect();
            Graph::from_edge_list(t, &pairs)
        }
        NamedFamily::Path(t) => {
            if t < 1 {
                return Err(Error::InputDomain("path requires t >= 1".into()));
            }
            let pairs: Vec<_> = (0..t.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edge_list(t, &pairs)
        }
        NamedFamily::Star(t) => {
            if t < 1 {
                return Err(Error::InputDomain("star requires t >= 1".into()));
            }
            let pairs: Vec<_> = (1..=t).map(|i| (0, i)).collect();
            Graph::from_edge_list(t + 1, &pairs)
        }
        NamedFamily::HairyClique(t) => {
            if t < 3 {
                return Err(Error::InputDomain(format!("hairy_clique requires t >= 3, got {t}")));
            }
            let mut pairs = Vec::new();
            for u in 0..t {
                for v in (u + 1)..t {
                    pairs.push((u, v));
                }
            }
            for i in 0..t {
                pairs.push((i, t + i));
            }
            Graph::from_edge_list(2 * t, &pairs)
        }
    }
}

impl Graph {
    /// Builds a graph from a list of endpoint pairs. Duplicate pairs (in
    /// either orientation) are collapsed; self-loops and out-of-range
    /// endpoints are rejected.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InputDomain("vertex count must be >= 1".into()));
        }
        let mut set = BTreeSet::new();
        for &(u, v) in pairs {
            if u == v {
                return Err(Error::InputDomain(format!("self-loop ({u},{v})")));
            }
            if u >= n || v >= n {
                return Err(Error::InputDomain(format!(
                    "endpoint out of range in ({u},{v}) for n={n}"
                )));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in &edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Index of edge {u,v} in `edges()`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// BFS distances from `v`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs_distances(&self, v: usize) -> Vec<usize> {
        assert!(v < self.n, "source vertex out of range");
        let mut dist = vec![UNREACHABLE; self.n];
        dist[v] = 0;
        let mut queue = std::collections::VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].iter() {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Connectivity via union-find; independent of the BFS routine and
    /// used to cross-check it.
    pub fn is_connected_union_find(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        (1..self.n).all(|v| uf.find(v) == uf.find(0))
    }

    /// Induced subgraph on the vertex set `a`, plus the remap table
    /// `new id -> old id` (in ascending old-id order).
    pub fn induced_subgraph(&self, a: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut verts: Vec<usize> = a.to_vec();
        verts.sort_unstable();
        verts.dedup();
        for &v in &verts {
            if v >= self.n {
                return Err(Error::InputDomain(format!(
                    "vertex {v} out of range for n={}",
                    self.n
                )));
            }
        }
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in verts.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut pairs = Vec::new();
        for &(u, v) in &self.edges {
            if old_to_new[u] != usize::MAX && old_to_new[v] != usize::MAX {
                pairs.push((old_to_new[u], old_to_new[v]));
            }
        }
        let g = Graph::from_edge_list(verts.len().max(1), &pairs)?;
        Ok((g, verts))
    }
}

/// Disjoint-set forest with union by rank.
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns false if `x` and `y` were already in the same set.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        match self.rank[rx].cmp(&self.rank[ry]) {
            std::cmp::Ordering::Less => self.parent[rx] = ry,
            std::cmp::Ordering::Greater => self.parent[ry] = rx,
            std::cmp::Ordering::Equal => {
                self.parent[ry] = rx;
                self.rank[rx] += 1;
            }
        }
        true
    }
}

/// Hard cap for [`enumerate_connected`]: 2^21 edge subsets at n=7.
pub const ENUMERATION_CAP: usize = 7;

/// Streams every labeled connected graph on exactly `n` vertices (each
/// exactly once). With `dedup`, only one representative per isomorphism
/// class is yielded, keyed by the minimum adjacency bitmask over all
/// vertex permutations.
pub fn enumerate_connected(n: usize, dedup: bool) -> Result<ConnectedGraphs> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::CapExceeded(format!(
            "enumerate_connected supports 1 <= n <= {ENUMERATION_CAP}, got {n}"
        )));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    Ok(ConnectedGraphs {
        n,
        pairs,
        next: 0,
        seen: if dedup { Some(std::collections::HashSet::new()) } else { None },
    })
}

pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    seen: Option<std::collections::HashSet<u64>>,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let end = 1u64 << self.pairs.len();
        while self.next < end {
            let mask = self.next;
            self.next += 1;
            let pairs: Vec<_> = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::from_edge_list(self.n, &pairs).expect("generated pairs are valid");
            if !g.is_connected() {
                continue;
            }
            if let Some(seen) = &mut self.seen {
                if !seen.insert(canonical_key(&g)) {
                    continue;
                }
            }
            return Some(g);
        }
        None
    }
}

/// Minimum adjacency bitmask over all vertex permutations. Only defined
/// for n <= 7 (fits in a u64 of C(7,2) = 21 bits).
pub fn canonical_key(g: &Graph) -> u64 {
    assert!(g.n <= ENUMERATION_CAP);
    let n = g.n;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if g.has_edge(p[u], p[v]) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(mask);
    });
    best
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        let h = build_named(NamedFamily::HairyClique(3)).unwrap();
        assert_eq!(h.n(), 6);
        assert_eq!(h.edge_count(), 6);
        let s = build_named(NamedFamily::Star(4)).unwrap();
        assert_eq!(s.n(), 5);
        assert_eq!(s.edge_count(), 4);
        assert_eq!(s.degree(0), 4);
        let c = build_named(NamedFamily::Cycle(4)).unwrap();
        assert_eq!(c.n(), 4);
        assert_eq!(c.edge_count(), 4);
        assert!((0..4).all(|v| c.degree(v) == 2));
    }

    #[test]
    fn named_family_rejects_bad_params() {
        assert!(build_named(NamedFamily::Cycle(2)).is_err());
        assert!(build_named(NamedFamily::Complete(1)).is_err());
        assert!(build_named(NamedFamily::HairyClique(2)).is_err());
    }

    #[test]
    fn hairy_clique_degree_profile() {
        for t in 3..=6 {
            let g = build_named(NamedFamily::HairyClique(t)).unwrap();
            let pendants = (0..g.n()).filter(|&v| g.degree(v) == 1).count();
            let clique = (0..g.n()).filter(|&v| g.degree(v) == t).count();
            assert_eq!(pendants, t);
            assert_eq!(clique, t);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn from_edge_list_dedup_and_errors() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 0)]),
            Err(Error::InputDomain(_))
        ));
        assert!(matches!(
            Graph::from_edge_list(2, &[(0, 3)]),
            Err(Error::InputDomain(_))
        ));
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        for g in enumerate_connected(5, false).unwrap().take(500) {
            let degsum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            assert_eq!(degsum, 2 * g.edge_count());
            // adjacency symmetry
            for &(u, v) in g.edges() {
                assert!(g.has_edge(u, v) && g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn bfs_examples() {
        let c6 = build_named(NamedFamily::Cycle(6)).unwrap();
        assert_eq!(c6.bfs_distances(0), vec![0, 1, 2, 3, 2, 1]);
        let star = build_named(NamedFamily::Star(4)).unwrap();
        assert_eq!(star.bfs_distances(0), vec![0, 1, 1, 1, 1]);
        let p5 = build_named(NamedFamily::Path(5)).unwrap();
        assert_eq!(p5.bfs_distances(0), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = build_named(NamedFamily::Complete(4)).unwrap();
        let (g, map) = k4.induced_subgraph(&[0, 2, 3]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(map, vec![0, 2, 3]);

        let c5 = build_named(NamedFamily::Cycle(5)).unwrap();
        let (g, _) = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(g.edge_count(), 2);

        let h3 = build_named(NamedFamily::HairyClique(3)).unwrap();
        let (g, _) = h3.induced_subgraph(&[3, 4, 5]).unwrap();
        assert_eq!(g.edge_count(), 0);

        assert!(c5.induced_subgraph(&[0, 9]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_connected(2, false).unwrap().count(), 1);
        assert_eq!(enumerate_connected(3, false).unwrap().count(), 4);
        assert_eq!(enumerate_connected(4, false).unwrap().count(), 38);
        assert!(enumerate_connected(8, false).is_err());
    }

    #[test]
    fn enumeration_dedup_counts() {
        // unlabeled connected graphs: 1, 1, 2, 6, 21
        assert_eq!(enumerate_connected(3, true).unwrap().count(), 2);
        assert_eq!(enumerate_connected(4, true).unwrap().count(), 6);
        assert_eq!(enumerate_connected(5, true).unwrap().count(), 21);
    }

    #[test]
    fn connectivity_routines_agree() {
        for n in 1..=5 {
            let mut count_bfs = 0usize;
            let mut count_uf = 0usize;
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    pairs.push((u, v));
                }
            }
            for mask in 0u64..(1 << pairs.len()) {
                let chosen: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let g = Graph::from_edge_list(n, &chosen).unwrap();
                if g.is_connected() {
                    count_bfs += 1;
                }
                if g.is_connected_union_find() {
                    count_uf += 1;
                }
            }
            assert_eq!(count_bfs, count_uf);
            let enumerated = enumerate_connected(n, false).unwrap().count();
            assert_eq!(enumerated, count_bfs);
        }
    }
}
