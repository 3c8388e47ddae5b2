//! Classify a few hypergraphs: connectivity, trees, stars, tightness, diameter.
//!
//! ```bash
//! cargo run --example analyze
//! cargo run --example analyze -- path/to/file.json
//! ```

use minconn::{generators, io, structure, Hypergraph};

fn show(name: &str, h: &Hypergraph) -> minconn::Result<()> {
    let c = structure::classify(h)?;
    println!("{name:<22} {h}");
    println!(
        "    connected={} minimally_connected={} tree={} star={} berge_acyclic={}",
        c.connected, c.minimally_connected, c.tree, c.star, c.berge_acyclic
    );
    println!(
        "    t_H={:?} diameter={:?} size_bounds={:?}",
        c.tightness_sum, c.diameter, c.size_bounds
    );
    Ok(())
}

fn main() -> minconn::Result<()> {
    if let Some(path) = std::env::args().nth(1) {
        let text = std::fs::read_to_string(&path).expect("readable input file");
        return show(&path, &io::parse(&text)?);
    }
    show("K_4^(3)", &generators::complete(4, 3)?)?;
    show("star S_9^(6)", &generators::star(9, 6)?)?;
    show("two edges, r=3", &generators::two_edge_no_spanning_tree(3)?)?;
    show("loose path, k=3", &generators::loose_path_hypergraph(3, 3)?)?;
    show("random tree, k=4", &generators::random_tree(4, 4, 11)?)?;
    let split = Hypergraph::from_int_edges(3, [], &[&[1, 2, 3], &[4, 5, 6]])?;
    show("two components", &split)?;
    Ok(())
}
