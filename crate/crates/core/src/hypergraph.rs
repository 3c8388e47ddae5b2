//! The r-uniform hypergraph data model.
//!
//! A [`Hypergraph`] keeps its vertex labels in canonical order inside a shared
//! table and stores every hyperedge as a sorted list of indices into that
//! table. Edge lists are sorted and deduplicated, so two hypergraphs built
//! from the same labels compare equal regardless of input order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{resource_limit, Error, Result};

/// Default cap on the number of edges [`complement`] and
/// [`crate::generators::complete`] are willing to materialise.
pub const DEFAULT_EDGE_CAP: u128 = 1_000_000;

/// A vertex label.
///
/// Labels made only of ASCII digits order numerically and sort before all
/// other labels, which order as plain strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::InvalidLabel(label));
        }
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn is_numeric(&self) -> bool {
        self.0.bytes().all(|b| b.is_ascii_digit())
    }
}

impl Ord for VertexId {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_numeric(), other.is_numeric()) {
            (true, true) => {
                let a = self.0.trim_start_matches('0');
                let b = other.0.trim_start_matches('0');
                a.len()
                    .cmp(&b.len())
                    .then_with(|| a.cmp(b))
                    .then_with(|| self.0.cmp(&other.0))
            }
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for VertexId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A hyperedge as a canonically sorted set of vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperedge(Vec<VertexId>);

impl Hyperedge {
    pub fn new<S: AsRef<str>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut members = labels
            .into_iter()
            .map(|s| VertexId::new(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        members.sort();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertexInEdge {
                index: 0,
                vertex: w[0].to_string(),
            });
        }
        Ok(Hyperedge(members))
    }

    pub fn members(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenated labels when every label is one character (`cde`),
    /// otherwise a braced comma list (`{1,2,3}`).
    pub fn compact(&self) -> String {
        if self.0.iter().all(|v| v.0.chars().count() == 1) {
            self.0.iter().map(|v| v.0.as_str()).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&v.0)?;
        }
        f.write_str("}")
    }
}

/// A finite r-uniform hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    r: usize,
    vertices: Arc<[VertexId]>,
    edges: Vec<Box<[usize]>>,
}

impl Hypergraph {
    /// Builds a validated hypergraph from labels.
    ///
    /// The vertex set is the declared vertices together with every edge member.
    /// Edges are canonicalised and duplicates collapse.
    pub fn build<V, E, S>(r: usize, vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        E: IntoIterator,
        E::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        if r < 2 {
            return Err(Error::InvalidUniformity(r));
        }
        let mut labels = BTreeSet::new();
        for v in vertices {
            labels.insert(VertexId::new(v.as_ref())?);
        }
        let mut raw_edges = Vec::new();
        for (index, e) in edges.into_iter().enumerate() {
            let mut members = Vec::new();
            for v in e {
                let id = VertexId::new(v.as_ref())?;
                labels.insert(id.clone());
                members.push(id);
            }
            if members.len() != r {
                return Err(Error::NonUniformEdge {
                    index,
                    expected: r,
                    found: members.len(),
                });
            }
            members.sort();
            if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertexInEdge {
                    index,
                    vertex: w[0].to_string(),
                });
            }
            raw_edges.push(members);
        }
        if labels.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let vertices: Arc<[VertexId]> = labels.into_iter().collect();
        let edges = raw_edges
            .into_iter()
            .map(|members| {
                members
                    .iter()
                    .map(|m| vertices.binary_search(m).expect("label was inserted"))
                    .collect::<Vec<_>>()
            })
            .collect();
        Self::from_parts(r, vertices, edges)
    }

    /// Builds a hypergraph with integer labels; a shorthand for tests and generators.
    pub fn from_int_edges(r: usize, vertices: impl IntoIterator<Item = u64>, edges: &[&[u64]]) -> Result<Self> {
        let vs: Vec<String> = vertices.into_iter().map(|v| v.to_string()).collect();
        let es: Vec<Vec<String>> = edges
            .iter()
            .map(|e| e.iter().map(|v| v.to_string()).collect())
            .collect();
        Self::build(r, vs, es)
    }

    /// Builds a hypergraph over an existing, canonically sorted vertex table.
    ///
    /// `edges` hold indices into `vertices`; they are sorted and deduplicated.
    pub fn from_parts(r: usize, vertices: Arc<[VertexId]>, edges: Vec<Vec<usize>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidUniformity(r));
        }
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameters(
                "vertex table must be strictly increasing".into(),
            ));
        }
        let n = vertices.len();
        let mut out = Vec::with_capacity(edges.len());
        for (index, mut e) in edges.into_iter().enumerate() {
            if e.len() != r {
                return Err(Error::NonUniformEdge {
                    index,
                    expected: r,
                    found: e.len(),
                });
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertexInEdge {
                    index,
                    vertex: vertices.get(w[0]).map(|v| v.to_string()).unwrap_or_default(),
                });
            }
            if let Some(&bad) = e.iter().find(|&&v| v >= n) {
                return Err(Error::UnknownVertex(format!("#{bad}")));
            }
            out.push(e.into_boxed_slice());
        }
        out.sort_unstable();
        out.dedup();
        Ok(Hypergraph {
            r,
            vertices,
            edges: out,
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Number of hyperedges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Edges as sorted vertex-index slices, in canonical order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.edges.iter().map(|e| &e[..])
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn hyperedge(&self, i: usize) -> Hyperedge {
        Hyperedge(self.edges[i].iter().map(|&v| self.vertices[v].clone()).collect())
    }

    pub fn hyperedges(&self) -> Vec<Hyperedge> {
        (0..self.size()).map(|i| self.hyperedge(i)).collect()
    }

    pub fn label(&self, v: usize) -> &VertexId {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        let id = VertexId::new(label).ok()?;
        self.vertices.binary_search(&id).ok()
    }

    pub(crate) fn require_vertex(&self, label: &str) -> Result<usize> {
        self.vertex_index(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn edge_index(&self, e: &Hyperedge) -> Option<usize> {
        let idx = e
            .members()
            .iter()
            .map(|m| self.vertices.binary_search(m).ok())
            .collect::<Option<Vec<_>>>()?;
        self.edges.binary_search_by(|x| x[..].cmp(&idx[..])).ok()
    }

    /// Position of the edge with exactly these sorted vertex indices.
    pub fn edge_position(&self, members: &[usize]) -> Option<usize> {
        self.edges.binary_search_by(|x| x[..].cmp(members)).ok()
    }

    pub fn contains_edge(&self, e: &Hyperedge) -> bool {
        self.edge_index(e).is_some()
    }

    /// Deletes `e`, keeping every vertex.
    pub fn remove_edge(&self, e: &Hyperedge) -> Result<Hypergraph> {
        let i = self
            .edge_index(e)
            .ok_or_else(|| Error::EdgeNotPresent(e.to_string()))?;
        Ok(self.without_edge(i))
    }

    pub fn without_edge(&self, i: usize) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.remove(i);
        Hypergraph {
            r: self.r,
            vertices: Arc::clone(&self.vertices),
            edges,
        }
    }

    /// Spanning subhypergraph on the same vertex set with the chosen edges.
    pub fn spanning_subhypergraph(&self, edge_indices: impl IntoIterator<Item = usize>) -> Hypergraph {
        let mut chosen: Vec<usize> = edge_indices.into_iter().collect();
        chosen.sort_unstable();
        chosen.dedup();
        Hypergraph {
            r: self.r,
            vertices: Arc::clone(&self.vertices),
            edges: chosen.into_iter().map(|i| self.edges[i].clone()).collect(),
        }
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: &str) -> Result<usize> {
        let v = self.require_vertex(v)?;
        Ok(self.degree_of(v))
    }

    pub fn degree_of(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.order()];
        for e in &self.edges {
            for &v in e.iter() {
                d[v] += 1;
            }
        }
        d
    }

    /// Vertices covered by at least one edge.
    pub fn covered_vertices(&self) -> usize {
        self.degrees().iter().filter(|&&d| d > 0).count()
    }

    /// Whether every r-subset of the vertex set is an edge.
    pub fn is_complete(&self) -> bool {
        binomial(self.order() as u128, self.r as u128) == self.size() as u128
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={} n={} k={} [", self.r, self.order(), self.size())?;
        for (i, e) in self.hyperedges().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&e.compact())?;
        }
        f.write_str("]")
    }
}

/// A hypergraph whose edges carry nonnegative exact rational weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedHypergraph {
    base: Hypergraph,
    weights: Vec<BigRational>,
}

impl WeightedHypergraph {
    /// Pairs every edge of `base` with a weight. Edges not in `base`, missing
    /// edges, conflicting duplicates and negative weights are rejected.
    pub fn new(base: Hypergraph, weighted_edges: impl IntoIterator<Item = (Hyperedge, BigRational)>) -> Result<Self> {
        let mut weights: Vec<Option<BigRational>> = vec![None; base.size()];
        for (e, w) in weighted_edges {
            if w < BigRational::from_integer(0.into()) {
                return Err(Error::InvalidParameters(format!("negative weight {w} on {e}")));
            }
            let i = base
                .edge_index(&e)
                .ok_or_else(|| Error::EdgeNotPresent(e.to_string()))?;
            match &weights[i] {
                Some(prev) if *prev != w => {
                    return Err(Error::InvalidParameters(format!(
                        "conflicting weights {prev} and {w} for {e}"
                    )))
                }
                _ => weights[i] = Some(w),
            }
        }
        let weights = weights
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| {
                    Error::InvalidParameters(format!("edge {} has no weight", base.hyperedge(i)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightedHypergraph { base, weights })
    }

    /// Assigns the same weight to every edge.
    pub fn uniform(base: Hypergraph, weight: BigRational) -> Self {
        let weights = vec![weight; base.size()];
        WeightedHypergraph { base, weights }
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    /// Weight of edge `i`, indexed like [`Hypergraph::edge`].
    pub fn weight(&self, i: usize) -> &BigRational {
        &self.weights[i]
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    /// Total weight of the edges of `sub`, which must be a subhypergraph of the base.
    pub fn total_weight(&self, sub: &Hypergraph) -> Result<BigRational> {
        let mut total = BigRational::from_integer(0.into());
        for e in sub.hyperedges() {
            let i = self
                .base
                .edge_index(&e)
                .ok_or_else(|| Error::EdgeNotPresent(e.to_string()))?;
            total += &self.weights[i];
        }
        Ok(total)
    }
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Visits every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The r-uniform complement with the default edge cap.
pub fn complement(h: &Hypergraph) -> Result<Hypergraph> {
    complement_with_cap(h, DEFAULT_EDGE_CAP)
}

/// Same vertex set; edges are the r-subsets absent from `h`.
pub fn complement_with_cap(h: &Hypergraph, cap: u128) -> Result<Hypergraph> {
    let total = binomial(h.order() as u128, h.r as u128);
    if total > cap {
        return Err(resource_limit("complement r-subsets", total, cap));
    }
    let mut edges = Vec::new();
    let mut existing = h.edges.iter().peekable();
    for_each_subset(h.order(), h.r, |s| {
        while existing.peek().is_some_and(|e| e[..] < *s) {
            existing.next();
        }
        if existing.peek().is_some_and(|e| e[..] == *s) {
            existing.next();
        } else {
            edges.push(s.to_vec().into_boxed_slice());
        }
    });
    Ok(Hypergraph {
        r: h.r,
        vertices: Arc::clone(&h.vertices),
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k43() -> Hypergraph {
        Hypergraph::from_int_edges(3, [], &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]).unwrap()
    }

    #[test]
    fn build_counts_and_dedup() {
        let h = Hypergraph::from_int_edges(3, 1..=5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        assert_eq!((h.order(), h.size()), (5, 2));
        let d = Hypergraph::from_int_edges(3, [], &[&[1, 2, 3], &[3, 2, 1]]).unwrap();
        assert_eq!(d.size(), 1);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert!(matches!(
            Hypergraph::from_int_edges(3, [], &[&[1, 2]]),
            Err(Error::NonUniformEdge { found: 2, .. })
        ));
        assert!(matches!(
            Hypergraph::from_int_edges(3, [], &[&[1, 1, 2]]),
            Err(Error::DuplicateVertexInEdge { .. })
        ));
        let empty: Vec<Vec<&str>> = vec![];
        assert_eq!(
            Hypergraph::build(3, Vec::<&str>::new(), empty),
            Err(Error::EmptyVertexSet)
        );
        assert!(matches!(
            Hypergraph::build(3, ["a b"], Vec::<Vec<&str>>::new()),
            Err(Error::InvalidLabel(_))
        ));
        assert_eq!(
            Hypergraph::from_int_edges(1, [1], &[]),
            Err(Error::InvalidUniformity(1))
        );
    }

    #[test]
    fn natural_label_order() {
        let h = Hypergraph::from_int_edges(2, [10, 2, 1], &[]).unwrap();
        let labels: Vec<&str> = h.vertices().iter().map(|v| v.as_str()).collect();
        assert_eq!(labels, ["1", "2", "10"]);
        let mixed = Hypergraph::build(2, ["b", "3", "a"], Vec::<Vec<&str>>::new()).unwrap();
        let labels: Vec<&str> = mixed.vertices().iter().map(|v| v.as_str()).collect();
        assert_eq!(labels, ["3", "a", "b"]);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&k43()).unwrap().size(), 0);
        let single = Hypergraph::from_int_edges(3, 1..=4, &[&[1, 2, 3]]).unwrap();
        let c = complement(&single).unwrap();
        let expected = Hypergraph::from_int_edges(3, 1..=4, &[&[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]).unwrap();
        assert_eq!(c, expected);
        assert_eq!(complement(&c).unwrap(), single);
    }

    #[test]
    fn complement_cap() {
        let h = Hypergraph::from_int_edges(3, 1..=30, &[]).unwrap();
        assert!(matches!(
            complement_with_cap(&h, 100),
            Err(Error::ResourceLimit { required: 4060, .. })
        ));
    }

    #[test]
    fn remove_edge_keeps_vertices() {
        let h = k43();
        let e = Hyperedge::new(["1", "2", "3"]).unwrap();
        let g = h.remove_edge(&e).unwrap();
        assert_eq!((g.order(), g.size()), (4, 3));
        let single = Hypergraph::from_int_edges(3, [], &[&[1, 2, 3]]).unwrap();
        let bare = single.remove_edge(&e).unwrap();
        assert_eq!((bare.order(), bare.size()), (3, 0));
        let missing = Hyperedge::new(["1", "2", "4"]).unwrap();
        assert!(matches!(single.remove_edge(&missing), Err(Error::EdgeNotPresent(_))));
    }

    #[test]
    fn degrees() {
        let h = k43();
        for v in ["1", "2", "3", "4"] {
            assert_eq!(h.degree(v).unwrap(), 3);
        }
        let iso = Hypergraph::from_int_edges(3, 1..=4, &[&[1, 2, 3]]).unwrap();
        assert_eq!(iso.degree("4").unwrap(), 0);
        assert!(matches!(iso.degree("9"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn subsets_enumerated_in_order() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| seen.push(s.to_vec()));
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_subset(6, 3, |_| count += 1);
        assert_eq!(count, 20);
        let mut full = 0;
        for_each_subset(3, 3, |_| full += 1);
        assert_eq!(full, 1);
        let mut empty = 0;
        for_each_subset(3, 0, |s| {
            assert!(s.is_empty());
            empty += 1
        });
        assert_eq!(empty, 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 3), 4);
        assert_eq!(binomial(20, 10), 184756);
        assert_eq!(binomial(3, 4), 0);
    }
}
