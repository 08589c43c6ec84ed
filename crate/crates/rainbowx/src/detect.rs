//! Induced-subgraph detection, freeness reports, and exact maximum
//! cliques / independent sets.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Practical cap on pattern size for [`contains_induced`].
pub const PATTERN_CAP: usize = 8;

/// Searches for an induced embedding of `h` in `g`.
///
/// On success, returns a list `map` with `map[u]` the image of pattern
/// vertex `u`; the images are distinct and preserve both adjacency and
/// non-adjacency. `None` means no induced copy exists (the backtracking
/// is exhaustive).
pub fn contains_induced(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    if h.n() > PATTERN_CAP {
        return Err(Error::CapExceeded(format!(
            "pattern has {} vertices, cap is {PATTERN_CAP}",
            h.n()
        )));
    }
    if h.n() > g.n() {
        return Ok(None);
    }

    // BFS-forest order over the pattern so that each vertex (after a
    // component root) is anchored to an already-mapped neighbor.
    let hn = h.n();
    let mut order = Vec::with_capacity(hn);
    let mut anchor: Vec<Option<usize>> = vec![None; hn]; // index into `order`
    let mut visited = vec![false; hn];
    for root in 0..hn {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        order.push(root);
        while let Some(u) = queue.pop_front() {
            for w in h.neighbors(u).iter() {
                if !visited[w] {
                    visited[w] = true;
                    anchor[w] = Some(order.iter().position(|&x| x == u).unwrap());
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; hn];
    let mut used = vec![false; g.n()];
    if backtrack(g, h, &order, &anchor, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn backtrack(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    anchor: &[Option<usize>],
    pos: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let hv = order[pos];
    let candidates: Vec<usize> = match anchor[hv] {
        Some(ap) => g.neighbors(map[order[ap]]).iter().collect(),
        None => (0..g.n()).collect(),
    };
    'cand: for gv in candidates {
        if used[gv] || g.degree(gv) < h.degree(hv) {
            continue;
        }
        for prev in &order[..pos] {
            if h.has_edge(hv, *prev) != g.has_edge(gv, map[*prev]) {
                continue 'cand;
            }
        }
        map[hv] = gv;
        used[gv] = true;
        if backtrack(g, h, order, anchor, pos + 1, map, used) {
            return true;
        }
        used[gv] = false;
        map[hv] = usize::MAX;
    }
    false
}

/// Checks that `map` is an induced embedding of `h` into `g`.
pub fn validate_embedding(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if map.len() != h.n() {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    for &gv in map {
        if gv >= g.n() || !seen.insert(gv) {
            return false;
        }
    }
    for u in 0..h.n() {
        for v in (u + 1)..h.n() {
            if h.has_edge(u, v) != g.has_edge(map[u], map[v]) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug)]
pub struct FreenessEntry {
    pub free: bool,
    /// Vertices of an induced copy, indexed by pattern vertex id.
    pub witness: Option<Vec<usize>>,
}

/// Per-member freeness verdicts for a forbidden family.
#[derive(Clone, Debug)]
pub struct FreenessReport {
    pub entries: Vec<FreenessEntry>,
}

impl FreenessReport {
    pub fn all_free(&self) -> bool {
        self.entries.iter().all(|e| e.free)
    }
}

pub fn is_free(g: &Graph, family: &[Graph]) -> Result<FreenessReport> {
    let mut entries = Vec::with_capacity(family.len());
    for h in family {
        match contains_induced(g, h)? {
            Some(map) => {
                if !validate_embedding(g, h, &map) {
                    return Err(Error::InternalContract(
                        "induced-subgraph witness failed revalidation".into(),
                    ));
                }
                entries.push(FreenessEntry {
                    free: false,
                    witness: Some(map),
                });
            }
            None => entries.push(FreenessEntry {
                free: true,
                witness: None,
            }),
        }
    }
    Ok(FreenessReport { entries })
}

fn clique_size(g: &Graph, allowed: &VertexSet, current: usize, best: &mut usize) {
    if current + allowed.len() <= *best {
        return;
    }
    let Some(v) = allowed.first() else {
        *best = (*best).max(current);
        return;
    };
    let with_v = allowed.intersection(g.neighbors(v));
    clique_size(g, &with_v, current + 1, best);
    let mut without = allowed.clone();
    without.remove(v);
    clique_size(g, &without, current, best);
}

fn max_clique_size_in(g: &Graph, allowed: &VertexSet) -> usize {
    let mut best = 0;
    clique_size(g, allowed, 0, &mut best);
    best
}

/// Exact maximum clique; ties broken lexicographically by sorted vertex
/// list.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    let mut allowed = g.vertex_set();
    let target = max_clique_size_in(g, &allowed);
    let mut chosen = Vec::with_capacity(target);
    while chosen.len() < target {
        for v in allowed.clone().iter() {
            let mut next = allowed.intersection(g.neighbors(v));
            next.retain_above(v);
            if chosen.len() + 1 + max_clique_size_in(g, &next) == target {
                chosen.push(v);
                allowed = next;
                break;
            }
        }
    }
    chosen
}

fn mis_size(g: &Graph, allowed: &VertexSet, current: usize, best: &mut usize) {
    if current + allowed.len() <= *best {
        return;
    }
    let Some(v) = allowed.first() else {
        *best = (*best).max(current);
        return;
    };
    let mut with_v = allowed.clone();
    with_v.remove(v);
    with_v.subtract(g.neighbors(v));
    mis_size(g, &with_v, current + 1, best);
    let mut without = allowed.clone();
    without.remove(v);
    mis_size(g, &without, current, best);
}

fn max_independent_size_in(g: &Graph, allowed: &VertexSet) -> usize {
    let mut best = 0;
    mis_size(g, allowed, 0, &mut best);
    best
}

/// Exact maximum independent subset of `a`; lexicographic tie-break.
pub fn max_independent_in(g: &Graph, a: &[usize]) -> Result<Vec<usize>> {
    for &v in a {
        if v >= g.n() {
            return Err(Error::InputDomain(format!(
                "vertex {v} out of range for n={}",
                g.n()
            )));
        }
    }
    let mut allowed = VertexSet::from_slice(g.n(), a);
    let target = max_independent_size_in(g, &allowed);
    let mut chosen = Vec::with_capacity(target);
    while chosen.len() < target {
        for v in allowed.clone().iter() {
            let mut next = allowed.clone();
            next.subtract(g.neighbors(v));
            next.retain_above(v);
            if chosen.len() + 1 + max_independent_size_in(g, &next) == target {
                chosen.push(v);
                allowed = next;
                break;
            }
        }
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedFamily};

    #[test]
    fn induced_examples() {
        let c5 = build_named(NamedFamily::Cycle(5)).unwrap();
        let p4 = build_named(NamedFamily::Path(4)).unwrap();
        let map = contains_induced(&c5, &p4).unwrap().expect("C5 contains P4");
        assert!(validate_embedding(&c5, &p4, &map));

        let k5 = build_named(NamedFamily::Complete(5)).unwrap();
        let p3 = build_named(NamedFamily::Path(3)).unwrap();
        assert!(contains_induced(&k5, &p3).unwrap().is_none());

        let h3 = build_named(NamedFamily::HairyClique(3)).unwrap();
        let k13 = build_named(NamedFamily::Star(3)).unwrap();
        assert!(contains_induced(&h3, &k13).unwrap().is_none());
    }

    #[test]
    fn induced_cap() {
        let k5 = build_named(NamedFamily::Complete(5)).unwrap();
        let big = build_named(NamedFamily::Path(9)).unwrap();
        assert!(matches!(
            contains_induced(&k5, &big),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn freeness_examples() {
        let k6 = build_named(NamedFamily::Complete(6)).unwrap();
        let p3 = build_named(NamedFamily::Path(3)).unwrap();
        assert!(is_free(&k6, &[p3.clone()]).unwrap().all_free());

        let c7 = build_named(NamedFamily::Cycle(7)).unwrap();
        let family = vec![
            build_named(NamedFamily::Star(3)).unwrap(),
            build_named(NamedFamily::HairyClique(3)).unwrap(),
            build_named(NamedFamily::Path(5)).unwrap(),
        ];
        let report = is_free(&c7, &family).unwrap();
        assert!(!report.all_free());
        // C7 contains an induced P5
        assert!(!report.entries[2].free);

        // join of K3 with two isolated vertices is (P4, K1,3)-free
        let join = Graph::from_edge_list(
            5,
            &[(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2)],
        )
        .unwrap();
        let fam = vec![
            build_named(NamedFamily::Path(4)).unwrap(),
            build_named(NamedFamily::Star(3)).unwrap(),
        ];
        assert!(is_free(&join, &fam).unwrap().all_free());
    }

    #[test]
    fn clique_examples() {
        let k5 = build_named(NamedFamily::Complete(5)).unwrap();
        assert_eq!(max_clique(&k5), vec![0, 1, 2, 3, 4]);
        let c5 = build_named(NamedFamily::Cycle(5)).unwrap();
        assert_eq!(max_clique(&c5).len(), 2);
        let h4 = build_named(NamedFamily::HairyClique(4)).unwrap();
        assert_eq!(max_clique(&h4), vec![0, 1, 2, 3]);
    }

    #[test]
    fn independent_set_examples() {
        let c6 = build_named(NamedFamily::Cycle(6)).unwrap();
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(max_independent_in(&c6, &all).unwrap(), vec![0, 2, 4]);

        let k5 = build_named(NamedFamily::Complete(5)).unwrap();
        assert_eq!(max_independent_in(&k5, &[0, 1, 2, 3, 4]).unwrap().len(), 1);

        let h3 = build_named(NamedFamily::HairyClique(3)).unwrap();
        assert_eq!(max_independent_in(&h3, &[3, 4, 5]).unwrap(), vec![3, 4, 5]);

        assert!(max_independent_in(&k5, &[9]).is_err());
    }

    // exhaustive cross-check against subset enumeration
    #[test]
    fn clique_and_mis_match_enumeration() {
        for g in crate::graph::enumerate_connected(5, false).unwrap() {
            let n = g.n();
            let mut best_clique = 0;
            let mut best_mis = 0;
            for mask in 0u32..(1 << n) {
                let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let clique = verts
                    .iter()
                    .all(|&u| verts.iter().all(|&v| u == v || g.has_edge(u, v)));
                let indep = verts
                    .iter()
                    .all(|&u| verts.iter().all(|&v| u == v || !g.has_edge(u, v)));
                if clique {
                    best_clique = best_clique.max(verts.len());
                }
                if indep {
                    best_mis = best_mis.max(verts.len());
                }
            }
            let all: Vec<usize> = (0..n).collect();
            assert_eq!(max_clique(&g).len(), best_clique);
            assert_eq!(max_independent_in(&g, &all).unwrap().len(), best_mis);
        }
    }
}
