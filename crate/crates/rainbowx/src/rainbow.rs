//! Edge colorings, rainbow S-tree search for vertex triples, and the
//! 3-rainbow coloring verifier, plus an independent brute-force oracle.

use crate::error::{Error, Result};
use crate::graph::{Graph, UnionFind};
use crate::metrics::{all_triples, TerminalTriple};

/// A total assignment of positive color ids to the edges of a host
/// graph, stored parallel to `Graph::edges()`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeColoring {
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(g: &Graph, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != g.edge_count() {
            return Err(Error::InconsistentColoring(format!(
                "{} colors for {} edges",
                colors.len(),
                g.edge_count()
            )));
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            let (u, v) = g.edges()[i];
            return Err(Error::InconsistentColoring(format!(
                "edge ({u},{v}) has non-positive color"
            )));
        }
        Ok(EdgeColoring { colors })
    }

    /// Colors every edge with its own color `1..=m`: valid for any
    /// connected graph.
    pub fn all_distinct(g: &Graph) -> Self {
        EdgeColoring {
            colors: (1..=g.edge_count() as u32).collect(),
        }
    }

    pub fn color(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn distinct_count(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// An explicit rainbow tree proving connectivity of a terminal triple.
#[derive(Clone, Debug)]
pub struct TreeCertificate {
    pub edges: Vec<(usize, usize)>,
    pub terminals: TerminalTriple,
}

/// Independent revalidation of a certificate: the edges must form a tree
/// covering the terminals with pairwise-distinct colors.
pub fn is_valid_certificate(g: &Graph, c: &EdgeColoring, cert: &TreeCertificate) -> bool {
    if cert.edges.is_empty() {
        // only legal when all three terminals coincide, which TerminalTriple forbids
        return false;
    }
    let mut uf = UnionFind::new(g.n());
    let mut colors = Vec::new();
    let mut covered = std::collections::HashSet::new();
    for &(u, v) in &cert.edges {
        let Some(e) = g.edge_id(u, v) else {
            return false;
        };
        if !uf.union(u, v) {
            return false; // cycle
        }
        colors.push(c.color(e));
        covered.insert(u);
        covered.insert(v);
    }
    colors.sort_unstable();
    colors.dedup();
    if colors.len() != cert.edges.len() {
        return false;
    }
    let [a, b, cc] = cert.terminals.vertices();
    if ![a, b, cc].iter().all(|t| covered.contains(t)) {
        return false;
    }
    // connected: a tree on k edges covers exactly k+1 vertices
    covered.len() == cert.edges.len() + 1
        && uf.find(a) == uf.find(b)
        && uf.find(b) == uf.find(cc)
}

// Dense remap of color ids plus a used-set with a u64 fast path.
struct DenseColors {
    dense: Vec<usize>, // per edge
    count: usize,
}

impl DenseColors {
    fn new(c: &EdgeColoring) -> Self {
        let mut ids: Vec<u32> = c.colors().to_vec();
        ids.sort_unstable();
        ids.dedup();
        let dense = c
            .colors()
            .iter()
            .map(|col| ids.binary_search(col).unwrap())
            .collect();
        DenseColors {
            dense,
            count: ids.len(),
        }
    }
}

enum ColorUsage {
    Mask(u64),
    Table(Vec<bool>),
}

impl ColorUsage {
    fn new(count: usize) -> Self {
        if count <= 64 {
            ColorUsage::Mask(0)
        } else {
            ColorUsage::Table(vec![false; count])
        }
    }

    /// Marks the color used; returns false (and leaves it marked) if it
    /// already was.
    fn try_use(&mut self, c: usize) -> bool {
        match self {
            ColorUsage::Mask(m) => {
                if *m >> c & 1 == 1 {
                    false
                } else {
                    *m |= 1 << c;
                    true
                }
            }
            ColorUsage::Table(t) => {
                if t[c] {
                    false
                } else {
                    t[c] = true;
                    true
                }
            }
        }
    }

    fn release(&mut self, c: usize) {
        match self {
            ColorUsage::Mask(m) => *m &= !(1u64 << c),
            ColorUsage::Table(t) => t[c] = false,
        }
    }
}

struct SpiderSearch<'a> {
    g: &'a Graph,
    dense: &'a [usize],
    terminals: [usize; 3],
    center: usize,
    used_v: Vec<bool>,
    used_c: ColorUsage,
    path: Vec<usize>, // edge ids
}

impl SpiderSearch<'_> {
    fn legs(&mut self, leg: usize) -> bool {
        if leg == 3 {
            return true;
        }
        self.extend(self.center, leg)
    }

    fn extend(&mut self, cur: usize, leg: usize) -> bool {
        if cur == self.terminals[leg] {
            return self.legs(leg + 1);
        }
        let neighbors: Vec<usize> = self.g.neighbors(cur).iter().collect();
        for w in neighbors {
            if self.used_v[w] {
                continue;
            }
            let e = self.g.edge_id(cur, w).unwrap();
            let col = self.dense[e];
            if !self.used_c.try_use(col) {
                continue;
            }
            self.used_v[w] = true;
            self.path.push(e);
            if self.extend(w, leg) {
                return true;
            }
            self.path.pop();
            self.used_v[w] = false;
            self.used_c.release(col);
        }
        false
    }
}

/// Searches for a rainbow S-tree for the triple under the coloring.
///
/// The search runs over spiders: for each center, three vertex-disjoint
/// legs (disjoint except at the center, zero length allowed) are grown
/// to the terminals under a shared distinct-color constraint. Any
/// rainbow S-tree prunes to such a spider, so absence is conclusive.
pub fn find_rainbow_tree(
    g: &Graph,
    c: &EdgeColoring,
    s: &TerminalTriple,
) -> Result<Option<TreeCertificate>> {
    if c.colors().len() != g.edge_count() {
        return Err(Error::InconsistentColoring(format!(
            "{} colors for {} edges",
            c.colors().len(),
            g.edge_count()
        )));
    }
    let dc = DenseColors::new(c);
    Ok(spider_search(g, &dc, s).map(|edge_ids| TreeCertificate {
        edges: edge_ids.iter().map(|&e| g.edges()[e]).collect(),
        terminals: *s,
    }))
}

fn spider_search(g: &Graph, dc: &DenseColors, s: &TerminalTriple) -> Option<Vec<usize>> {
    let terminals = s.vertices();
    for center in 0..g.n() {
        let mut search = SpiderSearch {
            g,
            dense: &dc.dense,
            terminals,
            center,
            used_v: vec![false; g.n()],
            used_c: ColorUsage::new(dc.count),
            path: Vec::new(),
        };
        search.used_v[center] = true;
        if search.legs(0) {
            return Some(search.path);
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct RainbowCheck {
    pub valid: bool,
    /// Lexicographically first failing triple, when invalid.
    pub failing_triple: Option<TerminalTriple>,
}

/// Checks whether the coloring is a 3-rainbow coloring: every triple of
/// vertices must admit a rainbow tree.
pub fn is_3rainbow(g: &Graph, c: &EdgeColoring) -> Result<RainbowCheck> {
    if g.n() < 3 {
        return Err(Error::TooFewVertices { needed: 3, got: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if c.colors().len() != g.edge_count() {
        return Err(Error::InconsistentColoring(format!(
            "{} colors for {} edges",
            c.colors().len(),
            g.edge_count()
        )));
    }
    let dc = DenseColors::new(c);
    for s in all_triples(g) {
        if spider_search(g, &dc, &s).is_none() {
            return Ok(RainbowCheck {
                valid: false,
                failing_triple: Some(s),
            });
        }
    }
    Ok(RainbowCheck {
        valid: true,
        failing_triple: None,
    })
}

/// Fast validity check over a caller-supplied triple order (the order is
/// a speed heuristic only; the verdict matches [`is_3rainbow`]).
pub(crate) fn valid_for_all(g: &Graph, c: &EdgeColoring, triples: &[TerminalTriple]) -> bool {
    let dc = DenseColors::new(c);
    triples.iter().all(|s| spider_search(g, &dc, s).is_some())
}

/// Cap on edges for the exhaustive oracle.
pub const ORACLE_EDGE_CAP: usize = 20;

/// Brute-force ground truth: enumerates every edge subset and reports
/// whether some subset with pairwise-distinct colors forms a tree
/// containing the triple. Structurally independent of the spider search.
pub fn oracle_rainbow_tree_exists(
    g: &Graph,
    c: &EdgeColoring,
    s: &TerminalTriple,
) -> Result<bool> {
    let m = g.edge_count();
    if m > ORACLE_EDGE_CAP {
        return Err(Error::CapExceeded(format!(
            "oracle supports at most {ORACLE_EDGE_CAP} edges, got {m}"
        )));
    }
    if c.colors().len() != m {
        return Err(Error::InconsistentColoring(format!(
            "{} colors for {} edges",
            c.colors().len(),
            m
        )));
    }
    let terminals = s.vertices();
    'subset: for mask in 1u32..(1 << m) {
        let mut colors = Vec::new();
        let mut uf = UnionFind::new(g.n());
        let mut verts = std::collections::HashSet::new();
        let mut count = 0;
        for e in 0..m {
            if mask >> e & 1 == 0 {
                continue;
            }
            let (u, v) = g.edges()[e];
            if !uf.union(u, v) {
                continue 'subset; // cycle
            }
            colors.push(c.color(e));
            verts.insert(u);
            verts.insert(v);
            count += 1;
        }
        colors.sort_unstable();
        colors.dedup();
        if colors.len() != count {
            continue;
        }
        if verts.len() != count + 1 {
            continue; // forest, not a single tree
        }
        if terminals.iter().all(|&t| verts.contains(&t))
            && uf.find(terminals[0]) == uf.find(terminals[1])
            && uf.find(terminals[1]) == uf.find(terminals[2])
        {
            return Ok(true);
        }
    }
    Ok(false)
}
