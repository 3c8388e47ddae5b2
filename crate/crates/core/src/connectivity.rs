//! Traversal, components, minimal connectivity, Berge and loose paths,
//! distance and diameter.
//!
//! Two vertices are adjacent when some hyperedge contains both; a
//! hypergraph is connected when the closure of that relation is a single
//! class. A single vertex with no edges is connected, any larger edgeless
//! hypergraph is not.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph, VertexId};

/// Default bound on the number of loose paths enumerated between a pair.
pub const DEFAULT_LOOSE_PATH_CAP: usize = 10_000;

/// Vertex to incident-edge lists, built once per hypergraph.
#[derive(Debug, Clone)]
pub struct Incidence {
    by_vertex: Vec<Vec<usize>>,
}

impl Incidence {
    pub fn new(h: &Hypergraph) -> Self {
        let mut by_vertex = vec![Vec::new(); h.order()];
        for (i, e) in h.edges().enumerate() {
            for &v in e {
                by_vertex[v].push(i);
            }
        }
        Incidence { by_vertex }
    }

    pub fn edges_at(&self, v: usize) -> &[usize] {
        &self.by_vertex[v]
    }
}

/// Marks every vertex reachable from `start` through edges accepted by
/// `active`. Each edge is expanded at most once, so the cost is linear in
/// the total edge cardinality. Returns the marks and the number reached.
pub fn reach(
    h: &Hypergraph,
    inc: &Incidence,
    start: usize,
    active: impl Fn(usize) -> bool,
) -> (Vec<bool>, usize) {
    let mut seen = vec![false; h.order()];
    let mut edge_done = vec![false; h.size()];
    let mut queue = VecDeque::new();
    seen[start] = true;
    queue.push_back(start);
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for &e in inc.edges_at(x) {
            if edge_done[e] || !active(e) {
                continue;
            }
            edge_done[e] = true;
            for &y in h.edge(e) {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
    }
    (seen, count)
}

/// The connected component containing `v`, in canonical order.
pub fn visit(h: &Hypergraph, v: &str) -> Result<Vec<VertexId>> {
    let start = h.require_vertex(v)?;
    Ok(visit_index(h, start)
        .into_iter()
        .map(|i| h.label(i).clone())
        .collect())
}

pub fn visit_index(h: &Hypergraph, start: usize) -> Vec<usize> {
    let inc = Incidence::new(h);
    let (seen, _) = reach(h, &inc, start, |_| true);
    (0..h.order()).filter(|&i| seen[i]).collect()
}

/// Component id for every vertex, restricted to `active` edges, plus the
/// number of components.
pub fn component_ids(h: &Hypergraph, inc: &Incidence, active: impl Fn(usize) -> bool) -> (Vec<usize>, usize) {
    let mut ids = vec![usize::MAX; h.order()];
    let mut count = 0;
    for s in 0..h.order() {
        if ids[s] != usize::MAX {
            continue;
        }
        let (seen, _) = reach(h, inc, s, &active);
        for (v, &hit) in seen.iter().enumerate() {
            if hit {
                ids[v] = count;
            }
        }
        count += 1;
    }
    (ids, count)
}

/// A partition of the vertex set into connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    /// Each block sorted; blocks ordered by their least vertex.
    pub blocks: Vec<Vec<VertexId>>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, v: &str) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.iter().any(|x| x.as_str() == v))
    }
}

pub fn connected_components(h: &Hypergraph) -> ComponentPartition {
    let inc = Incidence::new(h);
    let (ids, count) = component_ids(h, &inc, |_| true);
    let mut blocks = vec![Vec::new(); count];
    for (v, &c) in ids.iter().enumerate() {
        blocks[c].push(h.label(v).clone());
    }
    ComponentPartition { blocks }
}

pub fn component_count(h: &Hypergraph) -> usize {
    let inc = Incidence::new(h);
    component_ids(h, &inc, |_| true).1
}

pub fn is_connected(h: &Hypergraph) -> bool {
    let inc = Incidence::new(h);
    reach(h, &inc, 0, |_| true).1 == h.order()
}

/// Connected, and deleting any single edge (keeping its vertices) disconnects it.
pub fn is_minimally_connected(h: &Hypergraph) -> bool {
    let inc = Incidence::new(h);
    if reach(h, &inc, 0, |_| true).1 != h.order() {
        return false;
    }
    (0..h.size()).all(|skip| reach(h, &inc, 0, |e| e != skip).1 != h.order())
}

/// Alternating vertex and edge sequence with distinct vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BergePath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Hyperedge>,
}

/// A Berge path whose consecutive edges meet in exactly one vertex and whose
/// other edge pairs are disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoosePath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Hyperedge>,
}

fn is_berge(vertices: &[VertexId], edges: &[Hyperedge]) -> bool {
    if vertices.len() != edges.len() + 1 {
        return false;
    }
    let mut vs = vertices.to_vec();
    vs.sort();
    vs.dedup();
    let mut es = edges.to_vec();
    es.sort();
    es.dedup();
    vs.len() == vertices.len()
        && es.len() == edges.len()
        && edges.iter().enumerate().all(|(i, e)| {
            e.members().contains(&vertices[i]) && e.members().contains(&vertices[i + 1])
        })
}

impl BergePath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        is_berge(&self.vertices, &self.edges)
    }
}

impl LoosePath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        if !is_berge(&self.vertices, &self.edges) {
            return false;
        }
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                let shared = self.edges[i]
                    .members()
                    .iter()
                    .filter(|v| self.edges[j].members().contains(v))
                    .count();
                let want = usize::from(j == i + 1);
                if shared != want {
                    return false;
                }
            }
        }
        true
    }
}

/// Breadth-first distances (in edges) from `src`; `None` for unreachable vertices.
pub fn distances_from(h: &Hypergraph, inc: &Incidence, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; h.order()];
    let mut edge_done = vec![false; h.size()];
    let mut queue = VecDeque::new();
    dist[src] = Some(0);
    queue.push_back(src);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].expect("queued vertices have a distance");
        for &e in inc.edges_at(x) {
            if std::mem::replace(&mut edge_done[e], true) {
                continue;
            }
            for &y in h.edge(e) {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
    }
    dist
}

/// A Berge path from `u` to `v` using as few edges as possible.
pub fn find_berge_path(h: &Hypergraph, u: &str, v: &str) -> Result<Option<BergePath>> {
    let s = h.require_vertex(u)?;
    let t = h.require_vertex(v)?;
    if s == t {
        return Err(Error::InvalidParameters("Berge path endpoints must differ".into()));
    }
    let inc = Incidence::new(h);
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; h.order()];
    let mut seen = vec![false; h.order()];
    let mut edge_done = vec![false; h.size()];
    let mut queue = VecDeque::from([s]);
    seen[s] = true;
    'bfs: while let Some(x) = queue.pop_front() {
        for &e in inc.edges_at(x) {
            if std::mem::replace(&mut edge_done[e], true) {
                continue;
            }
            for &y in h.edge(e) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, e));
                    if y == t {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
    }
    if !seen[t] {
        return Ok(None);
    }
    let mut vertices = vec![h.label(t).clone()];
    let mut edges = Vec::new();
    let mut cur = t;
    while let Some((p, e)) = parent[cur] {
        vertices.push(h.label(p).clone());
        edges.push(h.hyperedge(e));
        cur = p;
    }
    vertices.reverse();
    edges.reverse();
    Ok(Some(BergePath { vertices, edges }))
}

/// Minimum number of edges in a Berge path from `u` to `v`; zero when `u == v`.
pub fn distance(h: &Hypergraph, u: &str, v: &str) -> Result<usize> {
    let s = h.require_vertex(u)?;
    let t = h.require_vertex(v)?;
    let inc = Incidence::new(h);
    distances_from(h, &inc, s)[t].ok_or(Error::Disconnected)
}

/// Largest pairwise distance of a connected hypergraph.
pub fn diameter(h: &Hypergraph) -> Result<usize> {
    let inc = Incidence::new(h);
    let mut best = 0;
    for s in 0..h.order() {
        for d in distances_from(h, &inc, s) {
            best = best.max(d.ok_or(Error::Disconnected)?);
        }
    }
    Ok(best)
}

struct LooseSearch<'a> {
    h: &'a Hypergraph,
    inc: Incidence,
    target: usize,
    limit: usize,
    found: Vec<(Vec<usize>, Vec<usize>)>,
    count: usize,
    used_edge: Vec<bool>,
    // Vertices of all edges strictly before the last one on the path.
    blocked: Vec<u32>,
}

impl LooseSearch<'_> {
    fn run(&mut self, at: usize, last: Option<usize>, vertices: &mut Vec<usize>, edges: &mut Vec<usize>, keep: bool) {
        let candidates = self.inc.edges_at(at).to_vec();
        for e in candidates {
            if self.count >= self.limit {
                return;
            }
            if self.used_edge[e] {
                continue;
            }
            let members = self.h.edge(e);
            if members.iter().any(|&x| self.blocked[x] > 0) {
                continue;
            }
            if let Some(l) = last {
                let prev = self.h.edge(l);
                if members.iter().filter(|x| prev.binary_search(x).is_ok()).count() != 1 {
                    continue;
                }
            }
            edges.push(e);
            if members.binary_search(&self.target).is_ok() {
                vertices.push(self.target);
                self.count += 1;
                if keep {
                    self.found.push((vertices.clone(), edges.clone()));
                }
                vertices.pop();
            } else {
                self.used_edge[e] = true;
                if let Some(l) = last {
                    for &x in self.h.edge(l) {
                        self.blocked[x] += 1;
                    }
                }
                for &y in members {
                    if y != at {
                        vertices.push(y);
                        self.run(y, Some(e), vertices, edges, keep);
                        vertices.pop();
                    }
                }
                if let Some(l) = last {
                    for &x in self.h.edge(l) {
                        self.blocked[x] -= 1;
                    }
                }
                self.used_edge[e] = false;
            }
            edges.pop();
        }
    }
}

fn loose_search(h: &Hypergraph, s: usize, t: usize, limit: usize, keep: bool) -> LooseSearch<'_> {
    let mut search = LooseSearch {
        h,
        inc: Incidence::new(h),
        target: t,
        limit,
        found: Vec::new(),
        count: 0,
        used_edge: vec![false; h.size()],
        blocked: vec![0; h.order()],
    };
    let mut vertices = vec![s];
    let mut edges = Vec::new();
    search.run(s, None, &mut vertices, &mut edges, keep);
    search
}

/// Every loose path from `u` to `v`; fails once more than `cap` exist.
pub fn enumerate_loose_paths(h: &Hypergraph, u: &str, v: &str, cap: usize) -> Result<Vec<LoosePath>> {
    let s = h.require_vertex(u)?;
    let t = h.require_vertex(v)?;
    if s == t {
        return Err(Error::InvalidParameters("loose path endpoints must differ".into()));
    }
    if cap == 0 {
        return Err(Error::InvalidParameters("cap must be at least 1".into()));
    }
    let search = loose_search(h, s, t, cap.saturating_add(1), true);
    if search.count > cap {
        return Err(crate::error::resource_limit(
            format!("loose paths {u} -> {v}"),
            search.count as u128,
            cap as u128,
        ));
    }
    Ok(search
        .found
        .into_iter()
        .map(|(vs, es)| LoosePath {
            vertices: vs.into_iter().map(|i| h.label(i).clone()).collect(),
            edges: es.into_iter().map(|i| h.hyperedge(i)).collect(),
        })
        .collect())
}

/// Number of loose paths between two vertex indices, counting no further than `limit`.
pub fn count_loose_paths(h: &Hypergraph, s: usize, t: usize, limit: usize) -> usize {
    loose_search(h, s, t, limit, false).count
}

/// Whether some `k >= 2` distinct vertices and `k` distinct edges close into a
/// Berge cycle. Equivalent to the vertex-edge incidence graph having a cycle.
pub fn has_berge_cycle(h: &Hypergraph) -> bool {
    let n = h.order();
    let mut parent: Vec<usize> = (0..n + h.size()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, e) in h.edges().enumerate() {
        for &v in e {
            let a = find(&mut parent, v);
            let b = find(&mut parent, n + i);
            if a == b {
                return true;
            }
            parent[a] = b;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(r: usize, vs: impl IntoIterator<Item = u64>, es: &[&[u64]]) -> Hypergraph {
        Hypergraph::from_int_edges(r, vs, es).unwrap()
    }

    fn labels(v: &[VertexId]) -> Vec<&str> {
        v.iter().map(|x| x.as_str()).collect()
    }

    #[test]
    fn visit_examples() {
        let chain = hg(3, [], &[&[1, 2, 3], &[3, 4, 5]]);
        assert_eq!(labels(&visit(&chain, "1").unwrap()), ["1", "2", "3", "4", "5"]);
        let split = hg(3, [], &[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(labels(&visit(&split, "1").unwrap()), ["1", "2", "3"]);
        let iso = hg(3, [7], &[&[1, 2, 3]]);
        assert_eq!(labels(&visit(&iso, "7").unwrap()), ["7"]);
        assert!(matches!(visit(&iso, "8"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn components() {
        let h = hg(3, 1..=4, &[&[1, 2, 3]]);
        let p = connected_components(&h);
        assert_eq!(p.blocks.len(), 2);
        assert_eq!(labels(&p.blocks[0]), ["1", "2", "3"]);
        assert_eq!(labels(&p.blocks[1]), ["4"]);
        let tree = hg(3, [], &[&[1, 2, 3], &[3, 4, 5]]);
        for i in 0..tree.size() {
            assert_eq!(component_count(&tree.without_edge(i)), 3);
        }
        let k43 = hg(3, [], &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(connected_components(&k43).len(), 1);
    }

    #[test]
    fn connectivity_conventions() {
        assert!(is_connected(&hg(3, [], &[&[1, 2, 3], &[2, 3, 4]])));
        assert!(!is_connected(&hg(3, [4], &[&[1, 2, 3]])));
        assert!(is_connected(&hg(3, [1], &[])));
        assert!(!is_connected(&hg(3, [1, 2], &[])));
    }

    #[test]
    fn minimal_connectivity() {
        assert!(is_minimally_connected(&hg(3, [], &[&[1, 2, 3], &[2, 3, 4]])));
        assert!(!is_minimally_connected(&hg(3, [], &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])));
        assert!(is_minimally_connected(&hg(3, [], &[&[1, 2, 3]])));
        assert!(!is_minimally_connected(&hg(3, [4], &[&[1, 2, 3]])));
    }

    #[test]
    fn berge_paths() {
        let chain = hg(3, [], &[&[1, 2, 3], &[3, 4, 5]]);
        let p = find_berge_path(&chain, "1", "5").unwrap().unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.is_valid());
        assert_eq!(find_berge_path(&chain, "1", "3").unwrap().unwrap().len(), 1);
        let split = hg(3, [], &[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(find_berge_path(&split, "1", "5").unwrap(), None);
        assert!(find_berge_path(&split, "1", "1").is_err());
    }

    #[test]
    fn loose_path_examples() {
        let tree = hg(3, [], &[&[1, 2, 3], &[3, 4, 5]]);
        let paths = enumerate_loose_paths(&tree, "1", "5", DEFAULT_LOOSE_PATH_CAP).unwrap();
        assert_eq!(paths.len(), 1);
        assert!(paths[0].is_valid());
        // The two edges share two vertices, so no two-edge path is loose.
        let pair = hg(3, [], &[&[1, 2, 3], &[2, 3, 4]]);
        assert!(enumerate_loose_paths(&pair, "1", "4", 10).unwrap().is_empty());
        let within = enumerate_loose_paths(&pair, "2", "3", 10).unwrap();
        assert_eq!(within.len(), 2);
        assert!(within.iter().all(LoosePath::is_valid));
    }

    #[test]
    fn loose_path_cap() {
        let k53: Vec<Vec<u64>> = (1..=5u64)
            .flat_map(|a| (a + 1..=5).flat_map(move |b| (b + 1..=5).map(move |c| vec![a, b, c])))
            .collect();
        let refs: Vec<&[u64]> = k53.iter().map(|e| &e[..]).collect();
        let h = hg(3, [], &refs);
        let all = enumerate_loose_paths(&h, "1", "2", DEFAULT_LOOSE_PATH_CAP).unwrap();
        assert!(all.len() > 2);
        assert!(matches!(
            enumerate_loose_paths(&h, "1", "2", 2),
            Err(Error::ResourceLimit { cap: 2, .. })
        ));
    }

    #[test]
    fn berge_cycles() {
        assert!(has_berge_cycle(&hg(3, [], &[&[1, 2, 3], &[2, 3, 4]])));
        assert!(!has_berge_cycle(&hg(3, [], &[&[1, 2, 3], &[3, 4, 5]])));
        assert!(!has_berge_cycle(&hg(3, [], &[&[1, 2, 3]])));
        assert!(has_berge_cycle(&hg(3, [], &[&[1, 2, 3], &[3, 4, 5], &[5, 6, 1]])));
    }

    #[test]
    fn distances_and_diameter() {
        let chain = hg(3, [], &[&[1, 2, 3], &[3, 4, 5]]);
        assert_eq!(diameter(&chain).unwrap(), 2);
        assert_eq!(distance(&chain, "1", "1").unwrap(), 0);
        assert_eq!(distance(&chain, "1", "4").unwrap(), 2);
        assert_eq!(diameter(&hg(3, [1], &[])).unwrap(), 0);
        assert_eq!(diameter(&hg(3, [], &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])).unwrap(), 1);
        assert_eq!(diameter(&hg(3, [4], &[&[1, 2, 3]])), Err(Error::Disconnected));
        assert_eq!(distance(&hg(3, [4], &[&[1, 2, 3]]), "1", "4"), Err(Error::Disconnected));
    }
}
