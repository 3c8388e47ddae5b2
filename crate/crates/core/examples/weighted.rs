//! Least-weight-first greedy against the exhaustive optimum on the bundled
//! instance where greedy pays 5 and the optimum is 4.
//!
//! ```bash
//! cargo run --example weighted
//! ```

use minconn::io;
use minconn::minimal_span::{exact_min_weight, greedy_min_weight, DEFAULT_MAX_EDGES};
use minconn::rational::format_weight;

fn main() -> minconn::Result<()> {
    let wh = io::parse_weighted(include_str!("../data/greedy_counterexample.json"))?;
    for (i, e) in wh.base().hyperedges().iter().enumerate() {
        println!("{} weight {}", e.compact(), format_weight(wh.weight(i)));
    }
    let greedy = greedy_min_weight(&wh)?;
    let exact = exact_min_weight(&wh, DEFAULT_MAX_EDGES)?;
    println!("greedy {greedy} total {}", format_weight(&wh.total_weight(&greedy)?));
    println!("exact  {exact} total {}", format_weight(&wh.total_weight(&exact)?));
    Ok(())
}
