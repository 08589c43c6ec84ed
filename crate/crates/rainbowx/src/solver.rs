//! Exact 3-rainbow index by canonical exhaustive search over edge-color
//! partitions.

use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{all_triples, sdiam3, TerminalTriple};
use crate::rainbow::{is_3rainbow, valid_for_all, EdgeColoring};

pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rx3Bounds {
    pub lower: usize,
    pub upper: usize,
}

/// Observation-level bracket: `max(2, sdiam3(G)) <= rx3(G) <= n - 1`.
pub fn rx3_bounds(g: &Graph) -> Result<Rx3Bounds> {
    let sd = sdiam3(g)?; // checks connectivity and n >= 3
    Ok(Rx3Bounds {
        lower: sd.max(2),
        upper: g.n() - 1,
    })
}

#[derive(Clone, Debug)]
pub struct Rx3Result {
    pub value: usize,
    pub witness: EdgeColoring,
    /// True when every color count below `value` was exhaustively ruled
    /// out (always the case for an `Ok` result).
    pub exhausted: bool,
}

/// Enumerates edge colorings of `m` edges that use exactly `t` distinct
/// colors, one per partition of the edge set into `t` color classes
/// (restricted-growth canonical form: edge 0 gets color 1, each later
/// edge at most 1 + the maximum color so far). `visit` returns true to
/// stop early; the function reports whether it was stopped.
pub fn enumerate_canonical_colorings(
    m: usize,
    t: u32,
    visit: &mut impl FnMut(&[u32]) -> bool,
) -> bool {
    let mut colors = vec![0u32; m];
    rgs_rec(&mut colors, 0, 0, t, visit)
}

fn rgs_rec(
    colors: &mut Vec<u32>,
    idx: usize,
    max_used: u32,
    t: u32,
    visit: &mut impl FnMut(&[u32]) -> bool,
) -> bool {
    if idx == colors.len() {
        return max_used == t && visit(colors);
    }
    // not enough edges left to reach t distinct colors
    if max_used + ((colors.len() - idx) as u32) < t {
        return false;
    }
    let cap = (max_used + 1).min(t);
    for c in 1..=cap {
        colors[idx] = c;
        if rgs_rec(colors, idx + 1, max_used.max(c), t, visit) {
            return true;
        }
    }
    false
}

/// Triples ordered pendant-heavy first (ascending degree sum). Speed
/// heuristic only: invalid colorings tend to fail on low-degree triples.
fn heuristic_triples(g: &Graph) -> Vec<TerminalTriple> {
    let mut triples = all_triples(g);
    triples.sort_by_key(|s| {
        let [a, b, c] = s.vertices();
        g.degree(a) + g.degree(b) + g.degree(c)
    });
    triples
}

/// A coloring with exactly `n - 1` distinct colors that is always valid:
/// a spanning tree colored all-distinct, remaining edges reusing color 1.
fn spanning_tree_coloring(g: &Graph) -> EdgeColoring {
    let mut colors = vec![1u32; g.edge_count()];
    let mut next = 1u32;
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u).iter() {
            if !seen[w] {
                seen[w] = true;
                colors[g.edge_id(u, w).unwrap()] = next;
                next += 1;
                queue.push_back(w);
            }
        }
    }
    EdgeColoring::new(g, colors).expect("spanning tree coloring is total")
}

fn random_probe(
    g: &Graph,
    t: usize,
    triples: &[TerminalTriple],
    rng: &mut ChaCha8Rng,
    attempts: usize,
) -> Option<EdgeColoring> {
    let m = g.edge_count();
    for _ in 0..attempts {
        let colors: Vec<u32> = (0..m).map(|_| rng.gen_range(1..=t as u32)).collect();
        let c = EdgeColoring::new(g, colors).unwrap();
        if c.distinct_count() == t && valid_for_all(g, &c, triples) {
            return Some(c);
        }
    }
    None
}

/// Exact rx3 by iterating candidate color counts upward from the Steiner
/// lower bound. For each count the canonical partition enumeration is
/// exhaustive, so the first count admitting a valid coloring is the
/// index. A randomized probe runs first at each level to find witnesses
/// cheaply; failing levels are always fully enumerated.
pub fn rx3_exact(g: &Graph, budget: Duration) -> Result<Rx3Result> {
    let bounds = rx3_bounds(g)?;
    let m = g.edge_count();
    let triples = heuristic_triples(g);
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7261696e626f77);

    for t in bounds.lower..=bounds.upper {
        if t == bounds.upper {
            // always attainable: spanning tree all-distinct
            let witness = spanning_tree_coloring(g);
            debug_assert!(is_3rainbow(g, &witness)?.valid);
            debug_assert_eq!(witness.distinct_count(), t);
            return Ok(Rx3Result {
                value: t,
                witness,
                exhausted: true,
            });
        }
        if let Some(witness) = random_probe(g, t, &triples, &mut rng, 300) {
            return Ok(Rx3Result {
                value: t,
                witness,
                exhausted: true,
            });
        }
        let mut found: Option<EdgeColoring> = None;
        let mut timed_out = false;
        let mut tick = 0u32;
        enumerate_canonical_colorings(m, t as u32, &mut |colors| {
            tick += 1;
            if tick & 0xfff == 0 && start.elapsed() > budget {
                timed_out = true;
                return true;
            }
            let c = EdgeColoring::new(g, colors.to_vec()).unwrap();
            if valid_for_all(g, &c, &triples) {
                found = Some(c);
                true
            } else {
                false
            }
        });
        if timed_out {
            return Err(Error::BudgetExceeded {
                lower: t,
                upper: bounds.upper,
            });
        }
        if let Some(witness) = found {
            debug_assert!(is_3rainbow(g, &witness)?.valid);
            return Ok(Rx3Result {
                value: t,
                witness,
                exhausted: true,
            });
        }
    }
    unreachable!("the n-1 level always yields a witness");
}
