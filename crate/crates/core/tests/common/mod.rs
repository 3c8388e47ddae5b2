//! Shared instance builders for the integration suites.
#![allow(dead_code)]

use minconn::{generators, Hypergraph};

/// The spanning subhypergraph of `k` picked by the bits of `mask`.
pub fn from_mask(k: &Hypergraph, mask: u64) -> Hypergraph {
    k.spanning_subhypergraph((0..k.size()).filter(|&i| mask >> i & 1 == 1))
}

/// Every r-uniform hypergraph on the vertex set 1..=n, as (mask, hypergraph)
/// over the edges of `K_n^(r)`.
pub fn all_on(n: usize, r: usize) -> (Hypergraph, u64) {
    let k = generators::complete(n, r).expect("complete hypergraph");
    let total = 1u64 << k.size();
    (k, total)
}

/// Edge-index bitmask of `sub` inside `host`.
pub fn mask_in(host: &Hypergraph, sub: &Hypergraph) -> u64 {
    sub.hyperedges()
        .iter()
        .map(|e| 1u64 << host.edge_index(e).expect("edge of host"))
        .fold(0, |a, b| a | b)
}

/// Union-find connectivity over shared vertices, written independently of
/// the library traversal.
pub fn uf_components(h: &Hypergraph) -> usize {
    let n = h.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for e in h.edges() {
        for w in e.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a] = b;
            }
        }
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count()
}

pub fn uf_connected(h: &Hypergraph) -> bool {
    uf_components(h) == 1
}

pub fn uf_minimally_connected(h: &Hypergraph) -> bool {
    uf_connected(h) && (0..h.size()).all(|i| !uf_connected(&h.without_edge(i)))
}

/// All-pairs distances by Floyd–Warshall on the 2-section.
pub fn fw_diameter(h: &Hypergraph) -> Option<usize> {
    let n = h.order();
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for e in h.edges() {
        for &a in e {
            for &b in e {
                if a != b {
                    d[a][b] = 1;
                }
            }
        }
    }
    for m in 0..n {
        for a in 0..n {
            for b in 0..n {
                if d[a][m] + d[m][b] < d[a][b] {
                    d[a][b] = d[a][m] + d[m][b];
                }
            }
        }
    }
    let worst = d.iter().flatten().copied().max().unwrap_or(0);
    (worst < INF).then_some(worst)
}
