use std::collections::BTreeMap;

use crate::connectivity::{component_ids, is_minimally_connected, Incidence};
use crate::error::{resource_limit, Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph};
use crate::structure::{find_constructive_process, process_from_order, ConstructiveProcess, ProcessMode};

use super::SearchLimits;

/// Colors `1..=palette_size` indexed by vertex position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring {
    colors: Vec<usize>,
    palette_size: usize,
}

impl VertexColoring {
    pub fn new(h: &Hypergraph, colors: Vec<usize>, palette_size: usize) -> Result<Self> {
        if colors.len() != h.order() {
            return Err(Error::InvalidParameters(format!(
                "coloring covers {} of {} vertices",
                colors.len(),
                h.order()
            )));
        }
        if let Some(c) = colors.iter().find(|&&c| c == 0 || c > palette_size) {
            return Err(Error::InvalidParameters(format!("color {c} outside 1..={palette_size}")));
        }
        Ok(VertexColoring { colors, palette_size })
    }

    /// Builds a coloring from `(label, color)` pairs covering every vertex.
    pub fn from_labels<'a>(h: &Hypergraph, pairs: impl IntoIterator<Item = (&'a str, usize)>, palette_size: usize) -> Result<Self> {
        let mut colors = vec![0; h.order()];
        for (label, c) in pairs {
            colors[h.require_vertex(label)?] = c;
        }
        Self::new(h, colors, palette_size)
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn color_of(&self, h: &Hypergraph, label: &str) -> Result<usize> {
        Ok(self.colors[h.require_vertex(label)?])
    }

    fn distinct_in(&self, e: &[usize]) -> usize {
        let mut seen: Vec<usize> = e.iter().map(|&v| self.colors[v]).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Every edge sees at least `k` distinct colors.
    pub fn is_k_valid(&self, h: &Hypergraph, k: usize) -> bool {
        self.colors.len() == h.order() && h.edges().all(|e| self.distinct_in(e) >= k)
    }

    /// No edge is monochromatic.
    pub fn is_weak_valid(&self, h: &Hypergraph) -> bool {
        self.is_k_valid(h, 2)
    }

    /// Vertices sharing an edge have different colors.
    pub fn is_strong_valid(&self, h: &Hypergraph) -> bool {
        self.is_k_valid(h, h.r())
    }

    /// Label to color, as a JSON-ready map.
    pub fn to_map(&self, h: &Hypergraph) -> BTreeMap<String, usize> {
        (0..h.order())
            .map(|v| (h.label(v).to_string(), self.colors[v]))
            .collect()
    }
}

/// A weak 2-coloring built along a constructive process: the first edge
/// alternates colors; each later edge colors its new vertices with the color
/// missing from its old vertices when those are monochromatic, and with
/// color 1 otherwise.
pub fn weak_two_coloring(h: &Hypergraph) -> Result<VertexColoring> {
    if !is_minimally_connected(h) {
        return Err(Error::NotMinimallyConnected);
    }
    let mut colors = vec![0usize; h.order()];
    if let Some(process) = find_constructive_process(h, ProcessMode::Connected) {
        for (step, &e) in process.edge_order.iter().enumerate() {
            let members = h.edge(e);
            if step == 0 {
                for (i, &v) in members.iter().enumerate() {
                    colors[v] = 1 + i % 2;
                }
                continue;
            }
            let mut old = members.iter().filter(|&&v| colors[v] != 0).map(|&v| colors[v]);
            let first = old.next().expect("each later edge meets the prefix");
            let fresh = if old.all(|c| c == first) { 3 - first } else { 1 };
            for &v in members {
                if colors[v] == 0 {
                    colors[v] = fresh;
                }
            }
        }
    }
    for c in colors.iter_mut().filter(|c| **c == 0) {
        *c = 1;
    }
    let coloring = VertexColoring::new(h, colors, 2)?;
    if !coloring.is_weak_valid(h) {
        return Err(Error::TheoremViolation(format!("weak 2-coloring failed on {h}")));
    }
    Ok(coloring)
}

fn check_vertex_cap(h: &Hypergraph, limits: &SearchLimits) -> Result<()> {
    if h.order() > limits.max_vertices {
        return Err(resource_limit(
            "vertex coloring search vertices",
            h.order() as u128,
            limits.max_vertices as u128,
        ));
    }
    Ok(())
}

struct KSearch<'a> {
    h: &'a Hypergraph,
    inc: Incidence,
    k: usize,
    palette: usize,
    order: Vec<usize>,
    colors: Vec<usize>,
}

impl KSearch<'_> {
    fn edge_still_feasible(&self, e: usize) -> bool {
        let members = self.h.edge(e);
        let mut seen = Vec::with_capacity(members.len());
        let mut free = 0;
        for &v in members {
            match self.colors[v] {
                0 => free += 1,
                c if !seen.contains(&c) => seen.push(c),
                _ => {}
            }
        }
        seen.len() + free >= self.k
    }

    fn solve(&mut self, depth: usize, max_used: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let top = self.palette.min(max_used + 1);
        for c in 1..=top {
            self.colors[v] = c;
            let ok = self.inc.edges_at(v).iter().all(|&e| self.edge_still_feasible(e));
            if ok && self.solve(depth + 1, max_used.max(c)) {
                return true;
            }
        }
        self.colors[v] = 0;
        false
    }
}

/// Exact `chi_k`: fewest colors so every edge sees at least `k` colors,
/// together with an optimal coloring.
pub fn k_chromatic(h: &Hypergraph, k: usize, limits: &SearchLimits) -> Result<(usize, VertexColoring)> {
    if k < 2 || k > h.r() {
        return Err(Error::InvalidParameters(format!("k must lie in 2..={}, got {k}", h.r())));
    }
    if h.size() == 0 {
        return Err(Error::InvalidParameters("coloring search needs at least one edge".into()));
    }
    check_vertex_cap(h, limits)?;
    let degrees = h.degrees();
    let mut order: Vec<usize> = (0..h.order()).collect();
    order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
    let mut search = KSearch {
        h,
        inc: Incidence::new(h),
        k,
        palette: k,
        order,
        colors: vec![0; h.order()],
    };
    for palette in k..=h.order() {
        search.palette = palette;
        search.colors.iter_mut().for_each(|c| *c = 0);
        if search.solve(0, 0) {
            let coloring = VertexColoring::new(h, search.colors.clone(), palette)?;
            debug_assert!(coloring.is_k_valid(h, k));
            return Ok((palette, coloring));
        }
    }
    Err(Error::InternalInconsistency(format!("no {k}-coloring found for {h}")))
}

pub fn k_chromatic_number(h: &Hypergraph, k: usize, limits: &SearchLimits) -> Result<usize> {
    Ok(k_chromatic(h, k, limits)?.0)
}

pub fn weak_chromatic_number(h: &Hypergraph, limits: &SearchLimits) -> Result<usize> {
    k_chromatic_number(h, 2, limits)
}

/// Adjacency of the 2-section: vertices joined when they share an edge.
pub fn two_section(h: &Hypergraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); h.order()];
    for e in h.edges() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    adj
}

struct GraphColoring<'a> {
    adj: &'a [Vec<usize>],
    palette: usize,
    colors: Vec<usize>,
}

impl GraphColoring<'_> {
    fn saturation(&self, v: usize) -> usize {
        let mut seen: Vec<usize> = self.adj[v].iter().map(|&u| self.colors[u]).filter(|&c| c > 0).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    // DSATUR branching: colour the most constrained vertex next.
    fn solve(&mut self, remaining: usize, max_used: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        let v = (0..self.colors.len())
            .filter(|&v| self.colors[v] == 0)
            .max_by(|&a, &b| {
                self.saturation(a)
                    .cmp(&self.saturation(b))
                    .then(self.adj[a].len().cmp(&self.adj[b].len()))
                    .then(b.cmp(&a))
            })
            .expect("remaining > 0");
        let top = self.palette.min(max_used + 1);
        for c in 1..=top {
            if self.adj[v].iter().any(|&u| self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            if self.solve(remaining - 1, max_used.max(c)) {
                return true;
            }
        }
        self.colors[v] = 0;
        false
    }
}

/// Exact strong chromatic number as the chromatic number of the 2-section,
/// with an optimal coloring.
pub fn strong_chromatic(h: &Hypergraph, limits: &SearchLimits) -> Result<(usize, VertexColoring)> {
    if h.size() == 0 {
        return Err(Error::InvalidParameters("coloring search needs at least one edge".into()));
    }
    check_vertex_cap(h, limits)?;
    let adj = two_section(h);
    for palette in h.r()..=h.order() {
        let mut search = GraphColoring {
            adj: &adj,
            palette,
            colors: vec![0; h.order()],
        };
        if search.solve(h.order(), 0) {
            let coloring = VertexColoring::new(h, search.colors, palette)?;
            debug_assert!(coloring.is_strong_valid(h));
            return Ok((palette, coloring));
        }
    }
    Err(Error::InternalInconsistency(format!("no strong coloring found for {h}")))
}

pub fn strong_chromatic_number(h: &Hypergraph, limits: &SearchLimits) -> Result<usize> {
    Ok(strong_chromatic(h, limits)?.0)
}

/// `r + t_H - t_1 - k + 2` for a minimally connected process of size `k > 1`.
pub fn strong_upper_bound(process: &ConstructiveProcess) -> Result<usize> {
    if process.mode != ProcessMode::MinimallyConnected {
        return Err(Error::InvalidParameters("bound needs a minimally connected process".into()));
    }
    let k = process.size();
    let Some(t1) = process.first_tightness().filter(|_| k > 1) else {
        return Err(Error::InvalidParameters("bound needs at least two edges".into()));
    };
    Ok(process.r + process.tightness_sum() + 2 - t1 - k)
}

/// The bound from a process whose first two edges share as many vertices as
/// possible. Since `t_H` does not depend on the process, this minimises the bound.
pub fn best_strong_upper_bound(h: &Hypergraph) -> Result<(usize, ConstructiveProcess)> {
    if h.size() < 2 {
        return Err(Error::InvalidParameters("bound needs at least two edges".into()));
    }
    if !is_minimally_connected(h) {
        return Err(Error::NotMinimallyConnected);
    }
    let k = h.size();
    let mut best: Option<(usize, usize, usize)> = None;
    for a in 0..k {
        for b in 0..k {
            if a == b {
                continue;
            }
            let shared = h.edge(a).iter().filter(|v| h.edge(b).binary_search(v).is_ok()).count();
            if shared > 0 && best.is_none_or(|(s, _, _)| shared > s) {
                best = Some((shared, a, b));
            }
        }
    }
    let (_, a, b) = best.ok_or(Error::Disconnected)?;
    let mut order = vec![a, b];
    let mut covered = vec![false; h.order()];
    for &v in h.edge(a).iter().chain(h.edge(b)) {
        covered[v] = true;
    }
    while order.len() < k {
        let e = (0..k)
            .find(|e| !order.contains(e) && h.edge(*e).iter().any(|&v| covered[v]))
            .ok_or(Error::Disconnected)?;
        for &v in h.edge(e) {
            covered[v] = true;
        }
        order.push(e);
    }
    let process = process_from_order(h, &order, ProcessMode::MinimallyConnected)?;
    Ok((strong_upper_bound(&process)?, process))
}

/// An edge whose removal separates two same-colored vertices of a strong
/// coloring of a minimally connected hypergraph (`r >= 3`).
pub fn separation_witness(h: &Hypergraph, coloring: &VertexColoring, x: &str, y: &str) -> Result<Hyperedge> {
    let xi = h.require_vertex(x)?;
    let yi = h.require_vertex(y)?;
    if h.r() < 3 {
        return Err(Error::InvalidParameters("separation witness needs r >= 3".into()));
    }
    if xi == yi {
        return Err(Error::InvalidParameters("vertices must differ".into()));
    }
    if !is_minimally_connected(h) {
        return Err(Error::NotMinimallyConnected);
    }
    if !coloring.is_strong_valid(h) {
        return Err(Error::InvalidParameters("coloring is not strongly proper".into()));
    }
    if coloring.color(xi) != coloring.color(yi) {
        return Err(Error::InvalidParameters(format!("{x} and {y} have different colors")));
    }
    let inc = Incidence::new(h);
    (0..h.size())
        .find(|&skip| {
            let (ids, _) = component_ids(h, &inc, |e| e != skip);
            ids[xi] != ids[yi]
        })
        .map(|e| h.hyperedge(e))
        .ok_or_else(|| Error::NoWitness {
            x: x.to_string(),
            y: y.to_string(),
        })
}
