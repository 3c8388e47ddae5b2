//! Constructors for the standard families. Vertices are labelled `1..=n`
//! unless stated otherwise, and each output is checked by the matching
//! classifier before it is returned.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::is_minimally_connected;
use crate::error::{resource_limit, Error, Result};
use crate::hypergraph::{binomial, for_each_subset, Hyperedge, Hypergraph, VertexId, WeightedHypergraph, DEFAULT_EDGE_CAP};
use crate::minimal_span::spanning_minimally_connected_with;
use crate::minimal_span::DeletionOrder;
use crate::rational::integer;
use crate::structure::{is_star, is_tree, size_bounds};

fn numbered(n: usize) -> Arc<[VertexId]> {
    (1..=n)
        .map(|i| VertexId::new(i.to_string()).expect("numeric labels are valid"))
        .collect()
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn alarm(what: &str, h: &Hypergraph) -> Error {
    Error::InternalInconsistency(format!("{what} produced an invalid hypergraph: {h}"))
}

/// The complete r-uniform hypergraph `K_n^(r)`.
pub fn complete(n: usize, r: usize) -> Result<Hypergraph> {
    complete_with_cap(n, r, DEFAULT_EDGE_CAP)
}

pub fn complete_with_cap(n: usize, r: usize, cap: u128) -> Result<Hypergraph> {
    if r < 2 || n < r {
        return Err(invalid(format!("complete needs n >= r >= 2, got n={n}, r={r}")));
    }
    let total = binomial(n as u128, r as u128);
    if total > cap {
        return Err(resource_limit("complete hypergraph edges", total, cap));
    }
    let mut edges = Vec::with_capacity(total as usize);
    for_each_subset(n, r, |s| edges.push(s.to_vec()));
    Hypergraph::from_parts(r, numbered(n), edges)
}

/// The star `S_n^(r)`: center `1..r-1`, one pendant per edge.
pub fn star(n: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 || n < r {
        return Err(invalid(format!("star needs n >= r >= 2, got n={n}, r={r}")));
    }
    let center: Vec<usize> = (0..r - 1).collect();
    let edges = (r - 1..n)
        .map(|p| center.iter().copied().chain([p]).collect())
        .collect();
    let h = Hypergraph::from_parts(r, numbered(n), edges)?;
    if !is_star(&h) {
        return Err(alarm("star", &h));
    }
    Ok(h)
}

/// Edges `{1..r}` and `{2..r+1}`: connected and minimally connected, yet
/// without any spanning tree.
pub fn two_edge_no_spanning_tree(r: usize) -> Result<Hypergraph> {
    if r < 3 {
        return Err(invalid(format!("needs r >= 3, got {r}")));
    }
    let h = Hypergraph::from_parts(r, numbered(r + 1), vec![(0..r).collect(), (1..=r).collect()])?;
    if !is_minimally_connected(&h) || is_tree(&h)? {
        return Err(alarm("two_edge_no_spanning_tree", &h));
    }
    Ok(h)
}

/// A loose path of `k` edges; consecutive edges share exactly one vertex.
pub fn loose_path_hypergraph(k: usize, r: usize) -> Result<Hypergraph> {
    if k < 1 || r < 2 {
        return Err(invalid(format!("loose path needs k >= 1, r >= 2, got k={k}, r={r}")));
    }
    let n = (r - 1) * k + 1;
    let edges = (0..k)
        .map(|i| (i * (r - 1)..i * (r - 1) + r).collect())
        .collect();
    let h = Hypergraph::from_parts(r, numbered(n), edges)?;
    if !is_tree(&h)? {
        return Err(alarm("loose_path_hypergraph", &h));
    }
    Ok(h)
}

/// A tree grown edge by edge; each new edge meets the current hypergraph in
/// one uniformly chosen vertex and brings `r - 1` new ones.
pub fn random_tree(k: usize, r: usize, seed: u64) -> Result<Hypergraph> {
    if k < 1 || r < 2 {
        return Err(invalid(format!("random tree needs k >= 1, r >= 2, got k={k}, r={r}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Vec<usize>> = vec![(0..r).collect()];
    let mut next = r;
    for _ in 1..k {
        let attach = rng.gen_range(0..next);
        let mut e = vec![attach];
        e.extend(next..next + r - 1);
        next += r - 1;
        edges.push(e);
    }
    let h = Hypergraph::from_parts(r, numbered(next), edges)?;
    if !is_tree(&h)? {
        return Err(alarm("random_tree", &h));
    }
    Ok(h)
}

/// A minimally connected hypergraph of order `n` and size `m`, for every `m`
/// allowed by [`size_bounds`].
///
/// The first edge is `{1..r}`. Every later edge reuses a prefix `1..t` of
/// `{1..r-1}` and brings `r - t` fresh vertices, so `r` and every fresh vertex
/// have degree one and each edge is a bridge. The tightnesses come from the
/// deficit `z = n - r + 1 - m` against the all-`(r - 1)` (star) sequence: when
/// `z >= r - 2`, write `z = a (r - 2) + b`, set `a` tightnesses to 1, one to
/// `r - 1 - b` and the rest to `r - 1`; otherwise the first tightness is
/// `r - 1 - z` and the rest `r - 1`.
pub fn construct_size_order(n: usize, m: usize, r: usize) -> Result<Hypergraph> {
    if r < 3 || n < r {
        return Err(invalid(format!("needs n >= r >= 3, got n={n}, r={r}")));
    }
    let (lo, hi) = size_bounds(n, r)?;
    if m < lo || m > hi {
        return Err(invalid(format!("size {m} outside [{lo}, {hi}] for n={n}, r={r}")));
    }
    let z = n - r + 1 - m;
    let mut tightness = vec![r - 1; m - 1];
    if z >= r - 2 {
        let (a, b) = (z / (r - 2), z % (r - 2));
        for t in tightness.iter_mut().take(a) {
            *t = 1;
        }
        if b > 0 {
            tightness[a] = r - 1 - b;
        }
    } else if z > 0 {
        tightness[0] = r - 1 - z;
    }
    let mut edges: Vec<Vec<usize>> = vec![(0..r).collect()];
    let mut next = r;
    for &t in &tightness {
        let mut e: Vec<usize> = (0..t).collect();
        e.extend(next..next + r - t);
        next += r - t;
        edges.push(e);
    }
    let h = Hypergraph::from_parts(r, numbered(next), edges)?;
    if h.order() != n || h.size() != m || !is_minimally_connected(&h) {
        return Err(alarm("construct_size_order", &h));
    }
    Ok(h)
}

/// `H_n^(r)`: each edge `ab` of `K_n` becomes `{a, b, x{i}_1, ..., x{i}_{r-2}}`
/// with fresh degree-one vertices; edges of `K_n` are numbered from 1 in
/// lexicographic order.
pub fn clique_expansion(n: usize, r: usize) -> Result<Hypergraph> {
    if r < 3 || n < r {
        return Err(invalid(format!("clique expansion needs n >= r >= 3, got n={n}, r={r}")));
    }
    let mut edges: Vec<Vec<String>> = Vec::new();
    let mut i = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            i += 1;
            let mut e = vec![a.to_string(), b.to_string()];
            e.extend((1..=r - 2).map(|j| format!("x{i}_{j}")));
            edges.push(e);
        }
    }
    let vertices: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    let h = Hypergraph::build(r, vertices, edges)?;
    if !is_minimally_connected(&h) {
        return Err(alarm("clique_expansion", &h));
    }
    Ok(h)
}

/// A random connected hypergraph on about `n` vertices with `k` edges.
///
/// Edges are grown so each meets the current vertex set in between 1 and
/// `r - 1` vertices until `n` vertices exist; remaining edges are random
/// r-subsets of the existing vertices. If `k` is too small to reach `n`
/// vertices the result has fewer.
pub fn random_connected(n: usize, r: usize, k: usize, seed: u64) -> Result<Hypergraph> {
    if r < 2 || n < r || k < 1 {
        return Err(invalid(format!("needs n >= r >= 2, k >= 1, got n={n}, r={r}, k={k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Vec<usize>> = vec![(0..r).collect()];
    let mut order = r;
    let mut attempts = 0;
    while edges.len() < k && attempts < 50 * k {
        attempts += 1;
        let e = if order < n {
            let fresh = rng.gen_range(1..=(r - 1).min(n - order));
            let mut e = rand::seq::index::sample(&mut rng, order, r - fresh).into_vec();
            e.extend(order..order + fresh);
            order += fresh;
            e
        } else {
            rand::seq::index::sample(&mut rng, order, r).into_vec()
        };
        let mut sorted = e;
        sorted.sort_unstable();
        if !edges.contains(&sorted) {
            edges.push(sorted);
        }
    }
    Hypergraph::from_parts(r, numbered(order), edges)
}

/// A random minimally connected hypergraph: a [`random_connected`] host pruned
/// with a seeded deletion order. No uniformity over isomorphism classes is implied.
pub fn random_minimally_connected(n: usize, r: usize, k: usize, seed: u64) -> Result<Hypergraph> {
    let host = random_connected(n, r, k, seed)?;
    spanning_minimally_connected_with(&host, DeletionOrder::Seeded(seed ^ 0x9E37_79B9_7F4A_7C15))
}

/// The weighted 3-uniform instance on `a..e` where taking edges by least
/// weight costs 5 (`cde`, `bde`, `ade`) while `cde`, `abc` costs 4.
pub fn greedy_counterexample() -> WeightedHypergraph {
    let edges = [("cde", 1), ("bde", 2), ("ade", 2), ("abc", 3)];
    let split = |s: &str| s.chars().map(|c| c.to_string()).collect::<Vec<_>>();
    let base = Hypergraph::build(3, ["a", "b", "c", "d", "e"].map(String::from), edges.iter().map(|(e, _)| split(e)))
        .expect("fixed instance is valid");
    WeightedHypergraph::new(
        base,
        edges.iter().map(|(e, w)| (Hyperedge::new(split(e)).expect("valid edge"), integer(*w))),
    )
    .expect("fixed weights are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_connected;
    use crate::structure::tightness_sum;

    #[test]
    fn complete_sizes() {
        assert_eq!(complete(4, 3).unwrap().size(), 4);
        assert_eq!(complete(5, 3).unwrap().size(), 10);
        assert!(matches!(complete(3, 4), Err(Error::InvalidParameters(_))));
        assert!(matches!(complete_with_cap(10, 3, 100), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn stars() {
        let s = star(9, 6).unwrap();
        assert_eq!(s.size(), 4);
        assert!(is_minimally_connected(&s));
        assert_eq!(s.degree("1").unwrap(), 4);
        assert_eq!(s.degree("9").unwrap(), 1);
        assert_eq!(tightness_sum(&s).unwrap(), 15);
        assert_eq!(star(4, 4).unwrap().size(), 1);
        assert!(star(3, 4).is_err());
    }

    #[test]
    fn two_edge_family() {
        let h = two_edge_no_spanning_tree(3).unwrap();
        assert_eq!(h, Hypergraph::from_int_edges(3, [], &[&[1, 2, 3], &[2, 3, 4]]).unwrap());
        let h4 = two_edge_no_spanning_tree(4).unwrap();
        assert_eq!((h4.order(), h4.size(), tightness_sum(&h4).unwrap()), (5, 2, 3));
        for r in 3..8 {
            assert!(!is_tree(&two_edge_no_spanning_tree(r).unwrap()).unwrap());
        }
        assert!(two_edge_no_spanning_tree(2).is_err());
    }

    #[test]
    fn paths_and_trees() {
        assert_eq!(
            loose_path_hypergraph(2, 3).unwrap(),
            Hypergraph::from_int_edges(3, [], &[&[1, 2, 3], &[3, 4, 5]]).unwrap()
        );
        for seed in 0..10 {
            let t = random_tree(5, 4, seed).unwrap();
            assert_eq!(t.order(), 3 * 5 + 1);
        }
        assert_eq!(random_tree(1, 3, 7).unwrap().size(), 1);
        assert_eq!(random_tree(6, 3, 42).unwrap(), random_tree(6, 3, 42).unwrap());
        assert!(random_tree(0, 3, 1).is_err());
    }

    #[test]
    fn size_order_examples() {
        let star_like = construct_size_order(9, 4, 6).unwrap();
        assert!(is_star(&star_like));
        let small = construct_size_order(5, 2, 3).unwrap();
        assert_eq!((small.order(), small.size()), (5, 2));
        assert!(is_tree(&small).unwrap());
        let near = construct_size_order(9, 3, 6).unwrap();
        assert_eq!((near.order(), near.size()), (9, 3));
        assert!(matches!(construct_size_order(9, 5, 6), Err(Error::InvalidParameters(_))));
        assert!(construct_size_order(9, 1, 6).is_err());
    }

    #[test]
    fn clique_expansions() {
        let h = clique_expansion(4, 3).unwrap();
        assert_eq!((h.size(), h.order()), (6, 10));
        assert!(h.vertex_index("x6_1").is_some());
        for n in 3..=6 {
            for r in 3..=n.min(5) {
                assert!(is_minimally_connected(&clique_expansion(n, r).unwrap()));
            }
        }
        assert!(clique_expansion(3, 4).is_err());
    }

    #[test]
    fn random_hosts() {
        for seed in 0..30 {
            let h = random_connected(10, 3, 8, seed).unwrap();
            assert!(is_connected(&h));
            let m = random_minimally_connected(10, 4, 9, seed).unwrap();
            assert!(is_minimally_connected(&m));
        }
    }

    #[test]
    fn counterexample_instance() {
        let w = greedy_counterexample();
        assert_eq!((w.base().order(), w.base().size()), (5, 4));
    }
}
