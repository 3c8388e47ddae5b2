//! Edge colorings: rainbow connection numbers, Gallai colorings of complete
//! hypergraphs and their spanning color classes.
//!
//! ```bash
//! cargo run --example edge_coloring
//! ```

use minconn::coloring::{self, SearchLimits};
use minconn::{generators, Hypergraph};

fn main() -> minconn::Result<()> {
    let limits = SearchLimits::default();
    for h in [
        Hypergraph::from_int_edges(3, [], &[&[1, 2, 3]])?,
        generators::loose_path_hypergraph(4, 3)?,
        generators::star(7, 3)?,
    ] {
        let (rc, c) = coloring::rainbow_connection(&h, &limits)?;
        println!("{h}: rc = {rc} (n - r + 1 = {}), coloring {:?}", h.order() - h.r() + 1, c.to_map(&h));
    }

    let k = generators::complete(5, 3)?;
    let mut shown = 0;
    for seed in 0.. {
        let c = coloring::random_edge_coloring(&k, 4, seed);
        if !coloring::is_gallai_coloring(&k, &c)? {
            continue;
        }
        let (color, class) = coloring::spanning_color(&k, &c)?;
        println!("Gallai 4-coloring seed {seed}: color {color} spans via {class}");
        shown += 1;
        if shown == 3 {
            break;
        }
    }

    let k4 = generators::complete(4, 3)?;
    let c = coloring::random_edge_coloring(&k4, 2, 9);
    let (color, m) = coloring::monochromatic_spanning_minconn(&k4, &c)?;
    println!("2-coloring {:?}: color {color} holds {m}", c.colors());
    Ok(())
}
