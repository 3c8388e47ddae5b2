//! Complements: a disconnected hypergraph has a connected complement of
//! diameter 1, but a connected one of diameter 2 need not.
//!
//! ```bash
//! cargo run --example complement
//! ```

use minconn::{complement, connectivity, Hypergraph};

fn describe(h: &Hypergraph) -> minconn::Result<()> {
    let c = complement(h)?;
    let diam = |g: &Hypergraph| connectivity::diameter(g).map(|d| d.to_string()).unwrap_or("-".into());
    println!("H  = {h}  connected={} diameter={}", connectivity::is_connected(h), diam(h));
    println!("H' = {c}  connected={} diameter={}", connectivity::is_connected(&c), diam(&c));
    Ok(())
}

fn main() -> minconn::Result<()> {
    describe(&Hypergraph::from_int_edges(3, [], &[&[1, 2, 3], &[4, 5, 6]])?)?;
    // 2 and 3 lie together in every edge of H, so no edge of H' holds both.
    describe(&Hypergraph::from_int_edges(3, [], &[&[1, 2, 3], &[2, 3, 4]])?)?;
    Ok(())
}
