//! Constructive processes and the order independence of the tightness sum;
//! the five tree characterizations side by side.
//!
//! ```bash
//! cargo run --example structure
//! ```

use minconn::structure::{self, random_constructive_process, ProcessMode};
use minconn::generators;

fn main() -> minconn::Result<()> {
    let h = generators::random_minimally_connected(9, 4, 14, 2)?;
    println!("{h}; r*k - n = {}", h.r() * h.size() - h.order());
    for seed in 0..5 {
        let p = random_constructive_process(&h, ProcessMode::MinimallyConnected, seed).expect("minimally connected");
        println!("    order {:?} tightness {:?} sum {}", p.edge_order, p.tightness, p.tightness_sum());
    }

    for (name, g) in [
        ("random tree", generators::random_tree(4, 3, 8)?),
        ("loose path", generators::loose_path_hypergraph(3, 3)?),
        ("two edges", generators::two_edge_no_spanning_tree(3)?),
    ] {
        let d = structure::tree_definitions(&g);
        println!(
            "{name:<12} process={} acyclic={} removal={} loose_paths={} size={} -> tree {}",
            d.one_vertex_process, d.berge_acyclic, d.removal_components, d.unique_loose_paths, d.order_size,
            structure::is_tree(&g)?
        );
    }
    let s = generators::star(9, 6)?;
    println!("star {s}: is_star={} t_H={}", structure::is_star(&s), structure::tightness_sum(&s)?);
    Ok(())
}
