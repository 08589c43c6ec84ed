//! Steiner distances for vertex triples, the 3-Steiner diameter, and
//! eccentricity-based metrics.

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};

/// A set of exactly three distinct vertices, stored sorted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TerminalTriple {
    verts: [usize; 3],
}

impl TerminalTriple {
    pub fn new(g: &Graph, a: usize, b: usize, c: usize) -> Result<Self> {
        if a == b || b == c || a == c {
            return Err(Error::InputDomain(format!(
                "terminal triple must be distinct, got ({a},{b},{c})"
            )));
        }
        let mut verts = [a, b, c];
        verts.sort_unstable();
        if verts[2] >= g.n() {
            return Err(Error::InputDomain(format!(
                "terminal {} out of range for n={}",
                verts[2],
                g.n()
            )));
        }
        Ok(TerminalTriple { verts })
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.verts
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }
}

/// All triples of a graph in lexicographic order.
pub fn all_triples(g: &Graph) -> Vec<TerminalTriple> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                out.push(TerminalTriple { verts: [a, b, c] });
            }
        }
    }
    out
}

/// Steiner distance of a 3-terminal set: the minimum size of a tree
/// containing all three terminals.
///
/// A minimal tree with three leaves is a spider, so the value equals
/// `min over m of d(m,s1)+d(m,s2)+d(m,s3)`. The brute-force oracle in the
/// test suite guards this formula.
pub fn steiner_distance3(g: &Graph, s: &TerminalTriple) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let [a, b, c] = s.vertices();
    let (da, db, dc) = (g.bfs_distances(a), g.bfs_distances(b), g.bfs_distances(c));
    Ok(median_sum(g.n(), &da, &db, &dc).0)
}

fn median_sum(n: usize, da: &[usize], db: &[usize], dc: &[usize]) -> (usize, usize) {
    let mut best = usize::MAX;
    let mut best_m = 0;
    for m in 0..n {
        let sum = da[m] + db[m] + dc[m];
        if sum < best {
            best = sum;
            best_m = m;
        }
    }
    (best, best_m)
}

/// An explicit minimum tree witnessing [`steiner_distance3`].
pub fn steiner_tree3(g: &Graph, s: &TerminalTriple) -> Result<Vec<(usize, usize)>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let [a, b, c] = s.vertices();
    let dists = [g.bfs_distances(a), g.bfs_distances(b), g.bfs_distances(c)];
    let (_, m) = median_sum(g.n(), &dists[0], &dists[1], &dists[2]);

    // Walk from the median downhill to each terminal, collect the edge
    // union, then prune it back to a tree covering the terminals.
    let mut union: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    for (ti, &t) in [a, b, c].iter().enumerate() {
        let d = &dists[ti];
        let mut cur = m;
        while cur != t {
            let next = g
                .neighbors(cur)
                .iter()
                .find(|&w| d[w] + 1 == d[cur])
                .expect("downhill neighbor exists in a connected graph");
            union.insert((cur.min(next), cur.max(next)));
            cur = next;
        }
    }
    // BFS tree of the union from m, then strip leaves that are not terminals.
    let mut adj: std::collections::HashMap<usize, Vec<usize>> = std::collections::HashMap::new();
    for &(u, v) in &union {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut parent: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut seen = std::collections::HashSet::from([m]);
    let mut queue = std::collections::VecDeque::from([m]);
    while let Some(u) = queue.pop_front() {
        for &w in adj.get(&u).into_iter().flatten() {
            if seen.insert(w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    let mut keep: std::collections::HashSet<usize> = std::collections::HashSet::new();
    for &t in &[a, b, c] {
        let mut cur = t;
        while keep.insert(cur) {
            match parent.get(&cur) {
                Some(&p) => cur = p,
                None => break,
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = parent
        .iter()
        .filter(|(v, _)| keep.contains(v))
        .map(|(&v, &p)| (v.min(p), v.max(p)))
        .collect();
    edges.sort_unstable();
    Ok(edges)
}

/// 3-Steiner diameter: the maximum Steiner distance over all triples.
pub fn sdiam3(g: &Graph) -> Result<usize> {
    if g.n() < 3 {
        return Err(Error::TooFewVertices { needed: 3, got: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let dist: Vec<Vec<usize>> = (0..n).map(|v| g.bfs_distances(v)).collect();
    let mut best = 0;
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let d = (0..n)
                    .map(|m| dist[a][m] + dist[b][m] + dist[c][m])
                    .min()
                    .unwrap();
                best = best.max(d);
            }
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccRadDiam {
    pub eccentricities: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
    /// Least-id vertex attaining the radius.
    pub central_vertex: usize,
}

pub fn ecc_rad_diam(g: &Graph) -> Result<EccRadDiam> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let eccentricities: Vec<usize> = (0..g.n())
        .map(|v| g.bfs_distances(v).into_iter().max().unwrap())
        .collect();
    let radius = *eccentricities.iter().min().unwrap();
    let diameter = *eccentricities.iter().max().unwrap();
    let central_vertex = eccentricities.iter().position(|&e| e == radius).unwrap();
    Ok(EccRadDiam {
        eccentricities,
        radius,
        diameter,
        central_vertex,
    })
}

/// BFS layers around `c`: `layers[i]` is the set of vertices at distance
/// `i + 1` from `c`, up to `ecc(c)`.
pub fn distance_layers(g: &Graph, c: usize) -> Result<Vec<Vec<usize>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dist = g.bfs_distances(c);
    let ecc = *dist.iter().max().unwrap();
    debug_assert!(ecc != UNREACHABLE);
    let mut layers = vec![Vec::new(); ecc];
    for (v, &d) in dist.iter().enumerate() {
        if d > 0 {
            layers[d - 1].push(v);
        }
    }
    Ok(layers)
}
