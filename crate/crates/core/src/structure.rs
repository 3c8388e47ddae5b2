//! Constructive processes, tightness, and tree / star classification.
//!
//! A constructive process orders the edges so that every prefix, taken with
//! exactly the vertices it covers, satisfies a predicate: connected, or
//! minimally connected. The `i`-th tightness of a process is the number of
//! already-present vertices the `(i + 1)`-th edge reuses. Their sum depends
//! only on the hypergraph: for a connected hypergraph of size `k` and order
//! `n` it equals `r * k - n`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::connectivity::{self, count_loose_paths, has_berge_cycle, reach, Incidence};
use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProcessMode {
    Connected,
    MinimallyConnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructiveProcess {
    /// Edge indices of the underlying hypergraph, in insertion order.
    pub edge_order: Vec<usize>,
    /// `tightness[i] = |V(H_{i+1}) ∩ e_{i+2}|` (zero-based: prefix of `i + 1` edges).
    pub tightness: Vec<usize>,
    pub mode: ProcessMode,
    pub r: usize,
}

impl ConstructiveProcess {
    pub fn size(&self) -> usize {
        self.edge_order.len()
    }

    pub fn tightness_sum(&self) -> usize {
        self.tightness.iter().sum()
    }

    /// Tightness of the second edge, `None` for single-edge processes.
    pub fn first_tightness(&self) -> Option<usize> {
        self.tightness.first().copied()
    }

    pub fn edges(&self, h: &Hypergraph) -> Vec<Hyperedge> {
        self.edge_order.iter().map(|&i| h.hyperedge(i)).collect()
    }
}

/// Checks that `order` is a constructive process of `h` in `mode` and records
/// its tightness sequence.
pub fn process_from_order(h: &Hypergraph, order: &[usize], mode: ProcessMode) -> Result<ConstructiveProcess> {
    let k = h.size();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..k).collect::<Vec<_>>() || k == 0 {
        return Err(Error::InvalidParameters(
            "order must be a permutation of a non-empty edge set".into(),
        ));
    }
    let inc = Incidence::new(h);
    let mut in_prefix = vec![false; k];
    let mut covered = vec![false; h.order()];
    let mut covered_count = 0;
    let mut tightness = Vec::with_capacity(k.saturating_sub(1));
    for (step, &e) in order.iter().enumerate() {
        let members = h.edge(e);
        let reused = members.iter().filter(|&&v| covered[v]).count();
        if step > 0 {
            if reused == 0 {
                return Err(Error::InvalidParameters(format!(
                    "edge {} does not meet the previous prefix",
                    h.hyperedge(e)
                )));
            }
            tightness.push(reused);
        }
        in_prefix[e] = true;
        for &v in members {
            if !std::mem::replace(&mut covered[v], true) {
                covered_count += 1;
            }
        }
        if mode == ProcessMode::MinimallyConnected
            && !prefix_is_minimal(h, &inc, &in_prefix, covered_count, members[0])
        {
            return Err(Error::InvalidParameters(format!(
                "prefix of {} edges is not minimally connected",
                step + 1
            )));
        }
    }
    if covered_count != h.order() {
        return Err(Error::Disconnected);
    }
    Ok(ConstructiveProcess {
        edge_order: order.to_vec(),
        tightness,
        mode,
        r: h.r(),
    })
}

fn prefix_is_minimal(h: &Hypergraph, inc: &Incidence, in_prefix: &[bool], covered: usize, anchor: usize) -> bool {
    if reach(h, inc, anchor, |e| in_prefix[e]).1 != covered {
        return false;
    }
    (0..h.size())
        .filter(|&e| in_prefix[e])
        .all(|skip| reach(h, inc, anchor, |e| e != skip && in_prefix[e]).1 != covered)
}

fn grow_connected_order(h: &Hypergraph, mut pick: impl FnMut(&[usize]) -> usize) -> Option<Vec<usize>> {
    let k = h.size();
    let mut used = vec![false; k];
    let mut covered = vec![false; h.order()];
    let mut order = Vec::with_capacity(k);
    let all: Vec<usize> = (0..k).collect();
    let first = pick(&all);
    let add = |e: usize, used: &mut Vec<bool>, covered: &mut Vec<bool>, order: &mut Vec<usize>| {
        used[e] = true;
        order.push(e);
        for &v in h.edge(e) {
            covered[v] = true;
        }
    };
    add(first, &mut used, &mut covered, &mut order);
    while order.len() < k {
        let eligible: Vec<usize> = (0..k)
            .filter(|&e| !used[e] && h.edge(e).iter().any(|&v| covered[v]))
            .collect();
        if eligible.is_empty() {
            return None;
        }
        let e = pick(&eligible);
        add(e, &mut used, &mut covered, &mut order);
    }
    Some(order)
}

/// Deterministic process: starts from the least edge and always adds the
/// lexicographically least edge meeting the current vertex set. Every prefix
/// is checked against `mode`; `None` when no such process exists.
pub fn find_constructive_process(h: &Hypergraph, mode: ProcessMode) -> Option<ConstructiveProcess> {
    if h.size() == 0 {
        return None;
    }
    let order = grow_connected_order(h, |eligible| eligible[0])?;
    process_from_order(h, &order, mode).ok()
}

/// Like [`find_constructive_process`] but with the first edge and each
/// subsequent eligible edge drawn uniformly from a seeded ChaCha8 stream.
pub fn random_constructive_process(h: &Hypergraph, mode: ProcessMode, seed: u64) -> Option<ConstructiveProcess> {
    if h.size() == 0 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = grow_connected_order(h, |eligible| *eligible.choose(&mut rng).expect("non-empty"))?;
    process_from_order(h, &order, mode).ok()
}

/// `r * k - n` for a connected hypergraph with at least one edge.
pub fn tightness_sum(h: &Hypergraph) -> Result<usize> {
    if h.size() == 0 {
        return Err(Error::InvalidParameters("tightness needs at least one edge".into()));
    }
    if !connectivity::is_connected(h) {
        return Err(Error::Disconnected);
    }
    Ok(h.r() * h.size() - h.order())
}

/// `(ceil((n - 1) / (r - 1)), n - r + 1)`: the range of sizes of a minimally
/// connected r-uniform hypergraph of order `n`.
pub fn size_bounds(n: usize, r: usize) -> Result<(usize, usize)> {
    if r < 2 || n < r {
        return Err(Error::InvalidParameters(format!("need n >= r >= 2, got n={n}, r={r}")));
    }
    Ok(((n - 1).div_ceil(r - 1), n - r + 1))
}

/// Verdicts of the five equivalent tree definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeDefinitions {
    /// Buildable edge by edge with every new edge meeting the previous ones in one vertex.
    pub one_vertex_process: bool,
    /// Connected and free of Berge cycles.
    pub berge_acyclic: bool,
    /// Connected, and every edge removal leaves exactly `r` components.
    pub removal_components: bool,
    /// Exactly one loose path between every pair of distinct vertices.
    pub unique_loose_paths: bool,
    /// Connected with `n = (r - 1) k + 1`.
    pub order_size: bool,
}

impl TreeDefinitions {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.one_vertex_process,
            self.berge_acyclic,
            self.removal_components,
            self.unique_loose_paths,
            self.order_size,
        ]
    }

    pub fn agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == a[0])
    }
}

fn one_vertex_process(h: &Hypergraph) -> bool {
    let k = h.size();
    let mut used = vec![false; k];
    let mut covered = vec![false; h.order()];
    for &v in h.edge(0) {
        covered[v] = true;
    }
    used[0] = true;
    for _ in 1..k {
        let next = (0..k).find(|&e| !used[e] && h.edge(e).iter().filter(|&&v| covered[v]).count() == 1);
        let Some(e) = next else {
            return false;
        };
        used[e] = true;
        for &v in h.edge(e) {
            covered[v] = true;
        }
    }
    covered.iter().all(|&c| c)
}

/// Evaluates each tree definition independently. Requires at least one edge.
pub fn tree_definitions(h: &Hypergraph) -> TreeDefinitions {
    assert!(h.size() > 0, "tree definitions need at least one edge");
    let inc = Incidence::new(h);
    let n = h.order();
    let connected = reach(h, &inc, 0, |_| true).1 == n;
    let removal_components = connected
        && (0..h.size()).all(|skip| connectivity::component_ids(h, &inc, |e| e != skip).1 == h.r());
    let unique_loose_paths =
        (0..n).all(|s| (s + 1..n).all(|t| count_loose_paths(h, s, t, 2) == 1));
    TreeDefinitions {
        one_vertex_process: one_vertex_process(h),
        berge_acyclic: connected && !has_berge_cycle(h),
        removal_components,
        unique_loose_paths,
        order_size: connected && n == (h.r() - 1) * h.size() + 1,
    }
}

/// Whether `h` is an r-uniform tree. All five definitions are evaluated and
/// must agree; a disagreement is reported as [`Error::InternalInconsistency`].
/// Edgeless hypergraphs are not trees.
pub fn is_tree(h: &Hypergraph) -> Result<bool> {
    if h.size() == 0 {
        return Ok(false);
    }
    let defs = tree_definitions(h);
    if !defs.agree() {
        return Err(Error::InternalInconsistency(format!(
            "tree definitions disagree on {h}: {defs:?}"
        )));
    }
    Ok(defs.one_vertex_process)
}

/// Whether `h` is a star: a single edge, or a minimally connected hypergraph
/// whose edges share a common `(r - 1)`-vertex center and each add one
/// pendant vertex of degree one.
pub fn is_star(h: &Hypergraph) -> bool {
    let k = h.size();
    if k == 0 {
        return false;
    }
    if k == 1 {
        return h.order() == h.r();
    }
    if !connectivity::is_minimally_connected(h) {
        return false;
    }
    let mut center: Vec<usize> = h.edge(0).to_vec();
    for e in h.edges().skip(1) {
        center.retain(|v| e.binary_search(v).is_ok());
    }
    if center.len() != h.r() - 1 {
        return false;
    }
    let degrees = h.degrees();
    let star = h.edges().all(|e| {
        let outside: Vec<usize> = e.iter().copied().filter(|v| center.binary_search(v).is_err()).collect();
        outside.len() == 1 && degrees[outside[0]] == 1
    });
    debug_assert!(
        h.r() < 3 || star == (h.r() * k - h.order() == (k - 1) * (h.r() - 1)),
        "star characterisation by tightness failed on {h}"
    );
    star
}

/// Aggregated structural facts about a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub r: usize,
    pub n: usize,
    pub k: usize,
    pub connected: bool,
    pub minimally_connected: bool,
    pub tree: bool,
    pub star: bool,
    pub berge_acyclic: bool,
    pub tightness_sum: Option<usize>,
    pub diameter: Option<usize>,
    pub size_bounds: Option<(usize, usize)>,
}

pub fn classify(h: &Hypergraph) -> Result<ClassificationReport> {
    let connected = connectivity::is_connected(h);
    Ok(ClassificationReport {
        r: h.r(),
        n: h.order(),
        k: h.size(),
        connected,
        minimally_connected: connectivity::is_minimally_connected(h),
        tree: is_tree(h)?,
        star: is_star(h),
        berge_acyclic: !has_berge_cycle(h),
        tightness_sum: if connected && h.size() > 0 { tightness_sum(h).ok() } else { None },
        diameter: if connected { connectivity::diameter(h).ok() } else { None },
        size_bounds: size_bounds(h.order(), h.r()).ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(r: usize, es: &[&[u64]]) -> Hypergraph {
        Hypergraph::from_int_edges(r, [], es).unwrap()
    }

    fn star96() -> Hypergraph {
        let center = [1u64, 2, 3, 4, 5];
        let edges: Vec<Vec<u64>> = (6..=9).map(|p| center.iter().copied().chain([p]).collect()).collect();
        let refs: Vec<&[u64]> = edges.iter().map(|e| &e[..]).collect();
        hg(6, &refs)
    }

    fn k43() -> Hypergraph {
        hg(3, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
    }

    #[test]
    fn minimally_connected_process_both_orders() {
        let h = hg(3, &[&[1, 2, 3], &[2, 3, 4]]);
        for order in [[0, 1], [1, 0]] {
            let p = process_from_order(&h, &order, ProcessMode::MinimallyConnected).unwrap();
            assert_eq!(p.tightness, vec![2]);
        }
        let p = find_constructive_process(&h, ProcessMode::MinimallyConnected).unwrap();
        assert_eq!(p.edge_order, vec![0, 1]);
    }

    #[test]
    fn no_process_when_predicate_fails() {
        assert!(find_constructive_process(&k43(), ProcessMode::MinimallyConnected).is_none());
        assert!(find_constructive_process(&k43(), ProcessMode::Connected).is_some());
        let split = hg(3, &[&[1, 2, 3], &[4, 5, 6]]);
        assert!(find_constructive_process(&split, ProcessMode::Connected).is_none());
        let iso = Hypergraph::from_int_edges(3, [9], &[&[1, 2, 3]]).unwrap();
        assert!(find_constructive_process(&iso, ProcessMode::Connected).is_none());
    }

    #[test]
    fn tightness_sums() {
        assert_eq!(tightness_sum(&hg(3, &[&[1, 2, 3], &[2, 3, 4]])).unwrap(), 2);
        assert_eq!(tightness_sum(&hg(3, &[&[1, 2, 3], &[3, 4, 5]])).unwrap(), 1);
        assert_eq!(tightness_sum(&star96()).unwrap(), 15);
        assert_eq!(tightness_sum(&hg(3, &[&[1, 2, 3], &[4, 5, 6]])), Err(Error::Disconnected));
    }

    #[test]
    fn tree_examples() {
        assert!(is_tree(&hg(3, &[&[1, 2, 3], &[3, 4, 5]])).unwrap());
        assert!(!is_tree(&hg(3, &[&[1, 2, 3], &[2, 3, 4]])).unwrap());
        assert!(!is_tree(&star96()).unwrap());
        assert!(is_tree(&hg(3, &[&[1, 2, 3]])).unwrap());
        assert!(!is_tree(&Hypergraph::from_int_edges(3, [1], &[]).unwrap()).unwrap());
        let split = hg(3, &[&[1, 2, 3], &[4, 5, 6]]);
        assert!(!is_tree(&split).unwrap());
    }

    #[test]
    fn star_examples() {
        assert!(is_star(&star96()));
        assert!(!is_star(&hg(3, &[&[1, 2, 3], &[3, 4, 5]])));
        assert!(is_star(&hg(3, &[&[1, 2, 3]])));
        assert!(!is_star(&k43()));
        assert!(!is_star(&Hypergraph::from_int_edges(3, [7], &[&[1, 2, 3]]).unwrap()));
    }

    #[test]
    fn bounds() {
        assert_eq!(size_bounds(9, 6).unwrap(), (2, 4));
        assert_eq!(size_bounds(5, 3).unwrap(), (2, 3));
        assert_eq!(size_bounds(4, 4).unwrap(), (1, 1));
        assert!(size_bounds(3, 4).is_err());
        assert!(size_bounds(3, 1).is_err());
    }

    #[test]
    fn classification() {
        let c = classify(&hg(3, &[&[1, 2, 3], &[2, 3, 4]])).unwrap();
        // Center {2,3} with pendants 1 and 4: a star, but with a Berge 2-cycle.
        assert!(c.connected && c.minimally_connected && !c.tree && c.star);
        assert_eq!(c.tightness_sum, Some(2));
        assert!(!classify(&k43()).unwrap().minimally_connected);
        let single = classify(&hg(3, &[&[1, 2, 3]])).unwrap();
        assert!(single.tree && single.star);
        assert_eq!(single.tightness_sum, Some(0));
        let split = classify(&hg(3, &[&[1, 2, 3], &[4, 5, 6]])).unwrap();
        assert_eq!((split.tightness_sum, split.diameter), (None, None));
        let bare = classify(&Hypergraph::from_int_edges(3, [1], &[]).unwrap()).unwrap();
        assert!(!bare.tree && !bare.star && bare.tightness_sum.is_none());
    }

    #[test]
    fn random_processes_are_valid() {
        let h = star96();
        for seed in 0..20 {
            let p = random_constructive_process(&h, ProcessMode::MinimallyConnected, seed).unwrap();
            assert_eq!(p.tightness_sum(), 15);
            assert!(p.tightness.iter().all(|&t| (1..h.r()).contains(&t)));
        }
    }
}
