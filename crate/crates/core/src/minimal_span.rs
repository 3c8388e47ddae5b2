//! Spanning minimally connected subhypergraphs.
//!
//! [`spanning_minimally_connected`] is the edge-deletion algorithm: walk the
//! edges once and drop every edge whose removal keeps the current
//! subhypergraph connected, testing connectivity by a traversal from a fixed
//! anchor vertex. With at most `C(n, r)` edges and a linear traversal per edge
//! the cost is polynomial in `n` for fixed `r`.
//!
//! [`enumerate_spanning_minimally_connected`] is the brute-force oracle over
//! edge subsets; it shares no code with the deletion loop.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::connectivity::{self, reach, Incidence};
use crate::error::{resource_limit, Error, Result};
use crate::hypergraph::{Hypergraph, WeightedHypergraph};

/// Default edge limit for the exhaustive subset searches.
pub const DEFAULT_MAX_EDGES: usize = 20;

/// Order in which the deletion loop considers edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DeletionOrder {
    /// Canonical edge order.
    #[default]
    Lexicographic,
    /// Canonical order shuffled by a seeded ChaCha8 stream.
    Seeded(u64),
}

impl DeletionOrder {
    pub fn edge_sequence(&self, k: usize) -> Vec<usize> {
        let mut order: Vec<usize> = (0..k).collect();
        if let DeletionOrder::Seeded(seed) = self {
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(*seed));
        }
        order
    }
}

/// Extracts a spanning minimally connected subhypergraph, deleting edges in
/// canonical order.
pub fn spanning_minimally_connected(h: &Hypergraph) -> Result<Hypergraph> {
    spanning_minimally_connected_with(h, DeletionOrder::Lexicographic)
}

pub fn spanning_minimally_connected_with(h: &Hypergraph, order: DeletionOrder) -> Result<Hypergraph> {
    let sequence = order.edge_sequence(h.size());
    let kept = prune(h, &Incidence::new(h), vec![true; h.size()], &sequence)?;
    Ok(h.spanning_subhypergraph((0..h.size()).filter(|&e| kept[e])))
}

/// Deletion loop over the edges flagged in `alive`, visiting them in `sequence`.
fn prune(h: &Hypergraph, inc: &Incidence, mut alive: Vec<bool>, sequence: &[usize]) -> Result<Vec<bool>> {
    let n = h.order();
    // The least vertex is the traversal anchor.
    let anchor = 0;
    if reach(h, inc, anchor, |e| alive[e]).1 != n {
        return Err(Error::Disconnected);
    }
    for &e in sequence {
        if !alive[e] {
            continue;
        }
        if reach(h, inc, anchor, |x| alive[x] && x != e).1 == n {
            alive[e] = false;
        }
    }
    Ok(alive)
}

fn edge_masks(h: &Hypergraph, max_edges: usize) -> Result<Vec<u128>> {
    let k = h.size();
    if k > max_edges || k > 31 {
        return Err(resource_limit("edge subsets", 1u128 << k.min(127), 1u128 << max_edges.min(31)));
    }
    if h.order() > 128 {
        return Err(resource_limit("oracle vertex width", h.order() as u128, 128));
    }
    Ok(h.edges()
        .map(|e| e.iter().fold(0u128, |m, &v| m | (1u128 << v)))
        .collect())
}

fn full_mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Whether the edges selected by `subset` connect all `n` vertices.
fn spans_connected(masks: &[u128], subset: u32, n: usize) -> bool {
    if subset == 0 {
        return n == 1;
    }
    let full = full_mask(n);
    let mut comp = masks[subset.trailing_zeros() as usize];
    let mut pending = subset & (subset - 1);
    loop {
        let mut grew = false;
        let mut rest = pending;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if masks[i] & comp != 0 {
                comp |= masks[i];
                pending &= !(1 << i);
                grew = true;
            }
        }
        if !grew || pending == 0 {
            break;
        }
    }
    comp == full
}

fn is_minimal_subset(masks: &[u128], subset: u32, n: usize) -> bool {
    if !spans_connected(masks, subset, n) {
        return false;
    }
    let mut rest = subset;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest &= rest - 1;
        if spans_connected(masks, subset & !bit, n) {
            return false;
        }
    }
    true
}

/// Every spanning minimally connected subhypergraph, by exhausting edge subsets.
///
/// Results are in lexicographic order of their edge-index lists.
pub fn enumerate_spanning_minimally_connected(h: &Hypergraph, max_edges: usize) -> Result<Vec<Hypergraph>> {
    Ok(minimal_subsets(h, max_edges)?
        .into_iter()
        .map(|edges| h.spanning_subhypergraph(edges))
        .collect())
}

fn minimal_subsets(h: &Hypergraph, max_edges: usize) -> Result<Vec<Vec<usize>>> {
    let masks = edge_masks(h, max_edges)?;
    let n = h.order();
    let total: u32 = 1 << masks.len();
    let mut found: Vec<Vec<usize>> = (0..total)
        .into_par_iter()
        .filter(|&s| is_minimal_subset(&masks, s, n))
        .map(|s| (0..masks.len()).filter(|&i| s >> i & 1 == 1).collect())
        .collect();
    found.sort();
    Ok(found)
}

/// Accepts edges by ascending weight (ties canonical) until they span and
/// connect, then prunes the accepted set with the deletion loop. A heuristic:
/// the result is spanning and minimally connected but can be heavier than
/// optimal.
pub fn greedy_min_weight(wh: &WeightedHypergraph) -> Result<Hypergraph> {
    let h = wh.base();
    let inc = Incidence::new(h);
    let mut by_weight: Vec<usize> = (0..h.size()).collect();
    by_weight.sort_by(|&a, &b| wh.weight(a).cmp(wh.weight(b)).then(a.cmp(&b)));
    let mut accepted = vec![false; h.size()];
    let mut spanning = reach(h, &inc, 0, |_| false).1 == h.order();
    for &e in &by_weight {
        if spanning {
            break;
        }
        accepted[e] = true;
        spanning = reach(h, &inc, 0, |x| accepted[x]).1 == h.order();
    }
    if !spanning {
        return Err(Error::Disconnected);
    }
    let sequence: Vec<usize> = (0..h.size()).collect();
    let kept = prune(h, &inc, accepted, &sequence)?;
    Ok(h.spanning_subhypergraph((0..h.size()).filter(|&e| kept[e])))
}

/// Minimum-weight spanning minimally connected subhypergraph by exhaustive
/// search; ties go to the lexicographically least edge set.
pub fn exact_min_weight(wh: &WeightedHypergraph, max_edges: usize) -> Result<Hypergraph> {
    let h = wh.base();
    if !connectivity::is_connected(h) {
        return Err(Error::Disconnected);
    }
    let mut best: Option<(BigRational, Vec<usize>)> = None;
    for edges in minimal_subsets(h, max_edges)? {
        let total: BigRational = edges.iter().map(|&e| wh.weight(e)).sum();
        if best.as_ref().is_none_or(|(w, _)| total < *w) {
            best = Some((total, edges));
        }
    }
    let (_, edges) = best.ok_or(Error::Disconnected)?;
    Ok(h.spanning_subhypergraph(edges))
}
