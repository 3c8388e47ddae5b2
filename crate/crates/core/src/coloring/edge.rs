use std::collections::{BTreeMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{diameter, is_connected, is_minimally_connected, Incidence};
use crate::error::{resource_limit, Error, Result};
use crate::hypergraph::{for_each_subset, Hypergraph};
use crate::minimal_span::spanning_minimally_connected;

use super::SearchLimits;

/// Colors `1..=t` indexed by edge position; neither proper nor surjective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<usize>,
    t: usize,
}

impl EdgeColoring {
    pub fn new(h: &Hypergraph, colors: Vec<usize>, t: usize) -> Result<Self> {
        if colors.len() != h.size() {
            return Err(Error::InvalidParameters(format!(
                "coloring covers {} of {} edges",
                colors.len(),
                h.size()
            )));
        }
        if let Some(c) = colors.iter().find(|&&c| c == 0 || c > t) {
            return Err(Error::InvalidParameters(format!("color {c} outside 1..={t}")));
        }
        Ok(EdgeColoring { colors, t })
    }

    pub fn monochromatic(h: &Hypergraph) -> Self {
        EdgeColoring {
            colors: vec![1; h.size()],
            t: 1,
        }
    }

    /// Every edge its own color.
    pub fn all_distinct(h: &Hypergraph) -> Self {
        EdgeColoring {
            colors: (1..=h.size()).collect(),
            t: h.size().max(1),
        }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn color(&self, e: usize) -> usize {
        self.colors[e]
    }

    /// The spanning subhypergraph formed by one color class.
    pub fn class(&self, h: &Hypergraph, color: usize) -> Hypergraph {
        h.spanning_subhypergraph((0..h.size()).filter(|&e| self.colors[e] == color))
    }

    /// Canonical edge text to color.
    pub fn to_map(&self, h: &Hypergraph) -> BTreeMap<String, usize> {
        (0..h.size())
            .map(|e| (h.hyperedge(e).to_string(), self.colors[e]))
            .collect()
    }
}

/// Uniform random `t`-coloring from a seeded ChaCha8 stream.
pub fn random_edge_coloring(h: &Hypergraph, t: usize, seed: u64) -> EdgeColoring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colors = (0..h.size()).map(|_| rng.gen_range(1..=t)).collect();
    EdgeColoring { colors, t }
}

fn rainbow_reach(h: &Hypergraph, inc: &Incidence, c: &EdgeColoring, src: usize) -> usize {
    let mut reached = vec![false; h.order()];
    reached[src] = true;
    let mut count = 1;
    let mut seen: HashSet<(usize, u128)> = HashSet::new();
    let mut queue = VecDeque::from([(src, 0u128)]);
    seen.insert((src, 0));
    while let Some((x, used)) = queue.pop_front() {
        for &e in inc.edges_at(x) {
            let bit = 1u128 << (c.colors[e] - 1);
            if used & bit != 0 {
                continue;
            }
            let next = used | bit;
            for &y in h.edge(e) {
                if seen.insert((y, next)) {
                    if !reached[y] {
                        reached[y] = true;
                        count += 1;
                    }
                    queue.push_back((y, next));
                }
            }
        }
        if count == h.order() {
            break;
        }
    }
    count
}

/// Whether every pair of distinct vertices is joined by a Berge path whose
/// edges all have different colors.
///
/// A walk with distinct edge colors shortcuts to a path with distinct colors,
/// so the search runs over (vertex, used colors) states.
pub fn is_rainbow_connected(h: &Hypergraph, c: &EdgeColoring) -> Result<bool> {
    if !is_connected(h) {
        return Err(Error::Disconnected);
    }
    if c.colors.len() != h.size() {
        return Err(Error::InvalidParameters("coloring does not match the hypergraph".into()));
    }
    if c.t > 128 {
        return Err(resource_limit("rainbow search colors", c.t as u128, 128));
    }
    let inc = Incidence::new(h);
    Ok((0..h.order()).all(|s| rainbow_reach(h, &inc, c, s) == h.order()))
}

/// Visits every coloring of `k` edges with exactly `t` colors, once per
/// partition of the edges into `t` classes (restricted growth order).
fn for_each_partition(k: usize, t: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn go(pos: usize, used: usize, t: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        let k = cur.len();
        if k - pos < t - used {
            return false;
        }
        if pos == k {
            return f(cur);
        }
        for c in 1..=(used + 1).min(t) {
            cur[pos] = c;
            if go(pos + 1, used.max(c), t, cur, f) {
                return true;
            }
        }
        false
    }
    let mut cur = vec![0; k];
    go(0, 0, t, &mut cur, f)
}

/// Exact rainbow connection number with a witness coloring.
///
/// The upper witness colors the edges of a spanning minimally connected
/// subhypergraph distinctly (every other edge gets color 1), so the answer is
/// at most `n - r + 1`. Smaller palettes, from the diameter up, are searched
/// exhaustively.
pub fn rainbow_connection(h: &Hypergraph, limits: &SearchLimits) -> Result<(usize, EdgeColoring)> {
    if !is_connected(h) {
        return Err(Error::Disconnected);
    }
    if h.size() == 0 {
        return Ok((0, EdgeColoring { colors: Vec::new(), t: 0 }));
    }
    if h.size() > limits.max_edges {
        return Err(resource_limit("rainbow search edges", h.size() as u128, limits.max_edges as u128));
    }
    let m = spanning_minimally_connected(h)?;
    let mut witness = vec![1; h.size()];
    for (i, e) in m.hyperedges().iter().enumerate() {
        witness[h.edge_index(e).expect("subhypergraph edge")] = i + 1;
    }
    let witness = EdgeColoring::new(h, witness, m.size())?;
    if !is_rainbow_connected(h, &witness)? {
        return Err(Error::TheoremViolation(format!(
            "distinct colors on a spanning minimally connected subhypergraph are not rainbow on {h}"
        )));
    }
    let lower = diameter(h)?.max(1);
    for t in lower..m.size() {
        let mut hit = None;
        let mut failure = None;
        for_each_partition(h.size(), t, &mut |colors| {
            let c = EdgeColoring { colors: colors.to_vec(), t };
            match is_rainbow_connected(h, &c) {
                Ok(true) => {
                    hit = Some(c);
                    true
                }
                Ok(false) => false,
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if let Some(c) = hit {
            return Ok((t, c));
        }
    }
    Ok((m.size(), witness))
}

pub fn rainbow_connection_number(h: &Hypergraph, limits: &SearchLimits) -> Result<usize> {
    Ok(rainbow_connection(h, limits)?.0)
}

fn require_complete(k: &Hypergraph) -> Result<()> {
    if k.is_complete() {
        Ok(())
    } else {
        Err(Error::NotComplete)
    }
}

/// First `(r + 1)`-vertex set whose `r + 1` edges all have different colors.
pub fn find_rainbow_simplex(k: &Hypergraph, c: &EdgeColoring) -> Result<Option<Vec<usize>>> {
    require_complete(k)?;
    let r = k.r();
    let mut found = None;
    let position = |s: &[usize]| {
        k.edge_position(s)
            .expect("complete hypergraph holds every r-subset")
    };
    for_each_subset(k.order(), r + 1, |big| {
        if found.is_some() {
            return;
        }
        let mut seen = Vec::with_capacity(r + 1);
        let mut face = Vec::with_capacity(r);
        for skip in 0..=r {
            face.clear();
            face.extend(big.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
            let color = c.colors[position(&face)];
            if seen.contains(&color) {
                return;
            }
            seen.push(color);
        }
        found = Some(big.to_vec());
    });
    Ok(found)
}

/// No `K_{r+1}^(r)` inside the complete hypergraph `k` is rainbow.
pub fn is_gallai_coloring(k: &Hypergraph, c: &EdgeColoring) -> Result<bool> {
    Ok(find_rainbow_simplex(k, c)?.is_none())
}

fn check_complete_palette(k: &Hypergraph, c: &EdgeColoring, max_t: usize) -> Result<()> {
    require_complete(k)?;
    if k.r() < 3 {
        return Err(Error::InvalidParameters("needs r >= 3".into()));
    }
    if c.t > max_t || c.colors.len() != k.size() {
        return Err(Error::InvalidParameters(format!("needs a coloring with at most {max_t} colors")));
    }
    Ok(())
}

/// A color whose class spans a connected hypergraph on all vertices of the
/// complete hypergraph `k`, for a Gallai coloring with at most `r + 1` colors.
/// Returns the least such color.
pub fn spanning_color(k: &Hypergraph, c: &EdgeColoring) -> Result<(usize, Hypergraph)> {
    check_complete_palette(k, c, k.r() + 1)?;
    (1..=c.t)
        .map(|color| (color, c.class(k, color)))
        .find(|(_, class)| is_connected(class))
        .ok_or(Error::NoSpanningColor)
}

/// A monochromatic spanning minimally connected subhypergraph of a
/// 2-colored complete hypergraph: color 1 when its class is connected,
/// otherwise color 2, whose class is then the complement of a disconnected
/// hypergraph and so connected.
pub fn monochromatic_spanning_minconn(k: &Hypergraph, c: &EdgeColoring) -> Result<(usize, Hypergraph)> {
    check_complete_palette(k, c, 2)?;
    let first = c.class(k, 1);
    let (color, class) = if is_connected(&first) {
        (1, first)
    } else {
        let second = c.class(k, 2);
        if !is_connected(&second) {
            return Err(Error::TheoremViolation(format!(
                "neither color class of a 2-coloring spans {k}"
            )));
        }
        (2, second)
    };
    let m = spanning_minimally_connected(&class)?;
    if !is_minimally_connected(&m) || m.order() != k.order() {
        return Err(Error::TheoremViolation(format!("extraction from color {color} failed")));
    }
    Ok((color, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete;

    fn hg(r: usize, es: &[&[u64]]) -> Hypergraph {
        Hypergraph::from_int_edges(r, [], es).unwrap()
    }

    #[test]
    fn rainbow_examples() {
        let chain = hg(3, &[&[1, 2, 3], &[3, 4, 5]]);
        assert!(is_rainbow_connected(&chain, &EdgeColoring::all_distinct(&chain)).unwrap());
        assert!(!is_rainbow_connected(&chain, &EdgeColoring::monochromatic(&chain)).unwrap());
        let single = hg(3, &[&[1, 2, 3]]);
        assert!(is_rainbow_connected(&single, &EdgeColoring::monochromatic(&single)).unwrap());
        let limits = SearchLimits::default();
        assert_eq!(rainbow_connection_number(&single, &limits).unwrap(), 1);
        assert_eq!(rainbow_connection_number(&chain, &limits).unwrap(), 2);
        let k53 = complete(5, 3).unwrap();
        assert!(rainbow_connection_number(&k53, &limits).unwrap() <= 3);
        let split = hg(3, &[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(rainbow_connection_number(&split, &limits), Err(Error::Disconnected));
    }

    #[test]
    fn partitions_counted_by_stirling_numbers() {
        let mut count = 0;
        for_each_partition(5, 2, &mut |_| {
            count += 1;
            false
        });
        assert_eq!(count, 15);
        count = 0;
        for_each_partition(6, 3, &mut |_| {
            count += 1;
            false
        });
        assert_eq!(count, 90);
    }

    #[test]
    fn gallai_examples() {
        let k43 = complete(4, 3).unwrap();
        assert!(!is_gallai_coloring(&k43, &EdgeColoring::all_distinct(&k43)).unwrap());
        assert!(is_gallai_coloring(&k43, &EdgeColoring::new(&k43, vec![1, 2, 3, 3], 3).unwrap()).unwrap());
        let not_complete = hg(3, &[&[1, 2, 3], &[2, 3, 4]]);
        assert_eq!(
            is_gallai_coloring(&not_complete, &EdgeColoring::monochromatic(&not_complete)),
            Err(Error::NotComplete)
        );
    }

    #[test]
    fn spanning_colors() {
        let k43 = complete(4, 3).unwrap();
        let (color, class) = spanning_color(&k43, &EdgeColoring::monochromatic(&k43)).unwrap();
        assert_eq!((color, class), (1, k43.clone()));
        let k53 = complete(5, 3).unwrap();
        let mut colors = vec![2; 10];
        colors[0] = 1;
        let c = EdgeColoring::new(&k53, colors, 2).unwrap();
        let (color, m) = monochromatic_spanning_minconn(&k53, &c).unwrap();
        assert_eq!(color, 2);
        assert!(is_minimally_connected(&m));
        let (red, _) = monochromatic_spanning_minconn(&k53, &EdgeColoring::monochromatic(&k53)).unwrap();
        assert_eq!(red, 1);
    }
}
