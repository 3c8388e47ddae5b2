//! Every generator family, and minimally connected hypergraphs of each
//! permissible size for fixed order.
//!
//! ```bash
//! cargo run --example generators
//! ```

use minconn::{connectivity, generators, io, structure};

fn main() -> minconn::Result<()> {
    println!("complete     {}", generators::complete(5, 3)?);
    println!("star         {}", generators::star(9, 6)?);
    println!("two-edge     {}", generators::two_edge_no_spanning_tree(4)?);
    println!("loose path   {}", generators::loose_path_hypergraph(3, 4)?);
    println!("random tree  {}", generators::random_tree(4, 3, 5)?);
    println!("clique exp.  {}", generators::clique_expansion(4, 3)?);
    println!("random conn. {}", generators::random_connected(8, 3, 6, 5)?);
    println!("random min.  {}", generators::random_minimally_connected(8, 3, 6, 5)?);

    let (n, r) = (10, 4);
    let (lo, hi) = structure::size_bounds(n, r)?;
    println!("minimally connected, n={n} r={r}, every m in [{lo}, {hi}]:");
    for m in lo..=hi {
        let h = generators::construct_size_order(n, m, r)?;
        assert!(connectivity::is_minimally_connected(&h));
        println!("    m={m} t_H={} {}", structure::tightness_sum(&h)?, io::serialize(&h).trim_end());
    }
    Ok(())
}
