//! Shape recognition for forbidden graphs and the family classifier that
//! decides whether a forbidden family keeps the 3-rainbow index within a
//! constant of the 3-Steiner diameter.

use crate::error::{Error, Result};
use crate::graph::{build_named, Graph, NamedFamily};

/// Recognized shape of a connected pattern graph. Precedence: `P3` and
/// `P4` before `Star`/`Path`, shapes before the hairy-fragment fallback.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Shape {
    P3,
    P4,
    /// K_{1,r} with r >= 3.
    Star(usize),
    /// P_l on l vertices, l >= 2 (excluding the P3/P4 cases above).
    Path(usize),
    /// Connected induced subgraph of some hairy clique, not matching any
    /// shape above.
    HairyFragment,
    Other,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilyPattern {
    pub shape: Shape,
    /// True iff the graph embeds induced into some K_s^h with s >= 3,
    /// independent of the precedence label (P4, for instance, is both a
    /// path and a hairy fragment).
    pub hairy_fragment: bool,
}

/// Returns `Some(l)` iff `h` is a path on `l >= 1` vertices (assumes `h`
/// connected).
fn path_order(h: &Graph) -> Option<usize> {
    let n = h.n();
    if n == 1 {
        return if h.edge_count() == 0 { Some(1) } else { None };
    }
    if h.edge_count() != n - 1 {
        return None;
    }
    let ends = (0..n).filter(|&v| h.degree(v) == 1).count();
    let mids = (0..n).filter(|&v| h.degree(v) == 2).count();
    (ends == 2 && mids == n - 2).then_some(n)
}

/// Returns `Some(r)` iff `h` is K_{1,r} with r >= 2 (assumes connected).
fn star_leaves(h: &Graph) -> Option<usize> {
    let n = h.n();
    if n < 3 || h.edge_count() != n - 1 {
        return None;
    }
    let hub = (0..n).filter(|&v| h.degree(v) == n - 1).count();
    let leaves = (0..n).filter(|&v| h.degree(v) == 1).count();
    (hub == 1 && leaves == n - 1).then_some(n - 1)
}

/// Decides whether `h` (connected) is an induced subgraph of some hairy
/// clique K_s^h, s >= 3, using the structural characterization: a clique
/// core plus pendant vertices attached to pairwise-distinct core
/// vertices. Every vertex of degree >= 2 is forced into the core, which
/// settles the decision without capping s.
pub fn is_hairy_fragment(h: &Graph) -> bool {
    let n = h.n();
    if n <= 2 {
        return true; // K1 and K2 embed into K3^h
    }
    let core: Vec<usize> = (0..n).filter(|&v| h.degree(v) >= 2).collect();
    match core.len() {
        0 => false, // connected with n >= 3 always has a vertex of degree >= 2
        1 => n == 3, // a star; only P3 (= K1,2) fits, one pendant on each side
        _ => {
            let clique = core
                .iter()
                .all(|&u| core.iter().all(|&v| u == v || h.has_edge(u, v)));
            if !clique {
                return false;
            }
            // each pendant hangs off its own core vertex
            let mut attach = std::collections::HashSet::new();
            (0..n)
                .filter(|&v| h.degree(v) == 1)
                .all(|v| attach.insert(h.neighbors(v).first().unwrap()))
        }
    }
}

pub fn recognize_pattern(h: &Graph) -> Result<FamilyPattern> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let hairy = is_hairy_fragment(h);
    let shape = if path_order(h) == Some(3) {
        Shape::P3
    } else if path_order(h) == Some(4) {
        Shape::P4
    } else if let Some(r) = star_leaves(h).filter(|&r| r >= 3) {
        Shape::Star(r)
    } else if let Some(l) = path_order(h).filter(|&l| l >= 2) {
        Shape::Path(l)
    } else if hairy {
        Shape::HairyFragment
    } else {
        Shape::Other
    };
    Ok(FamilyPattern {
        shape,
        hairy_fragment: hairy,
    })
}

/// The subfamily structure that witnesses boundedness (indices into the
/// classified family).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoundedWitness {
    /// {P3}
    P3Member { p3: usize },
    /// {K_{1,r} (r>=3), P4}
    StarAndP4 { star: usize, p4: usize },
    /// {K_{1,r} (r>=3), hairy fragment, P_l (l>4)}
    StarHairyPath { star: usize, hairy: usize, path: usize },
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub bounded: bool,
    pub witness: Option<BoundedWitness>,
}

/// Decides whether forbidding `family` bounds rx3 - sdiam3 by a constant:
/// true iff the family contains {P3}, or {K_{1,r} (r>=3), P4}, or
/// {K_{1,r} (r>=3), an induced subgraph of a hairy clique, P_l (l>4)}.
pub fn classify_family(family: &[Graph]) -> Result<Classification> {
    let mut p3 = None;
    let mut p4 = None;
    let mut star = None;
    let mut hairy = None;
    let mut long_path = None;
    for (i, h) in family.iter().enumerate() {
        if !h.is_connected() {
            return Err(Error::Disconnected);
        }
        let po = path_order(h);
        if po == Some(3) && p3.is_none() {
            p3 = Some(i);
        }
        if po == Some(4) && p4.is_none() {
            p4 = Some(i);
        }
        if star_leaves(h).filter(|&r| r >= 3).is_some() && star.is_none() {
            star = Some(i);
        }
        if is_hairy_fragment(h) && hairy.is_none() {
            hairy = Some(i);
        }
        if po.filter(|&l| l > 4).is_some() && long_path.is_none() {
            long_path = Some(i);
        }
    }
    let witness = if let Some(p3) = p3 {
        Some(BoundedWitness::P3Member { p3 })
    } else if let (Some(star), Some(p4)) = (star, p4) {
        Some(BoundedWitness::StarAndP4 { star, p4 })
    } else if let (Some(star), Some(hairy), Some(path)) = (star, hairy, long_path) {
        Some(BoundedWitness::StarHairyPath { star, hairy, path })
    } else {
        None
    };
    Ok(Classification {
        bounded: witness.is_some(),
        witness,
    })
}

/// Parses the pattern mini-language: `P<l>`, `C<n>`, `K<n>`, `K1,<r>`,
/// `K<s>h`. (`@file` tokens are resolved by the CLI before reaching
/// here.)
pub fn parse_pattern(token: &str) -> Result<Graph> {
    let bad = || Error::Format(format!("unrecognized pattern '{token}'"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    if let Some(rest) = token.strip_prefix("K1,") {
        return build_named(NamedFamily::Star(num(rest)?));
    }
    if let Some(rest) = token.strip_prefix('P') {
        return build_named(NamedFamily::Path(num(rest)?));
    }
    if let Some(rest) = token.strip_prefix('C') {
        return build_named(NamedFamily::Cycle(num(rest)?));
    }
    if let Some(rest) = token.strip_prefix('K') {
        if let Some(s) = rest.strip_suffix('h') {
            return build_named(NamedFamily::HairyClique(num(s)?));
        }
        let n = num(rest)?;
        return match n {
            0 => Err(bad()),
            1 => Graph::from_edge_list(1, &[]),
            2 => Graph::from_edge_list(2, &[(0, 1)]),
            _ => build_named(NamedFamily::Complete(n)),
        };
    }
    Err(bad())
}
