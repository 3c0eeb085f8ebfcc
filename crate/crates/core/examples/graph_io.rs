//! graph6 and edge-list round trips, family specs, and isomorphism classes.
//!
//! Run with `cargo run --example graph_io`.

use mutvis::constructions::{from_spec, FAMILIES};
use mutvis::enumerate::{dedup_isomorphic, enumerate_connected_graphs};
use mutvis::io::{from_edge_list, from_graph6, to_edge_list, to_graph6};

fn main() -> mutvis::Result<()> {
    println!("families: {}", FAMILIES.join(", "));
    for spec in [
        "petersen",
        "frog:6,3,2",
        "cartesian:complete:3,complete:3",
        "corona:path:3,empty:2",
    ] {
        let g = from_spec(spec)?;
        let g6 = to_graph6(&g);
        assert_eq!(from_graph6(&g6)?, g);
        assert_eq!(from_edge_list(&to_edge_list(&g))?, g);
        println!(
            "{spec:<34} n={:>2} m={:>2} graph6={g6}",
            g.order(),
            g.size()
        );
    }

    let g = from_spec("grid:2,3")?;
    print!("grid:2,3 as an edge list:\n{}", to_edge_list(&g));

    for n in 1..=6 {
        let classes = dedup_isomorphic(enumerate_connected_graphs(n, false)?)?;
        let codes: Vec<String> = classes.iter().take(6).map(to_graph6).collect();
        println!(
            "n={n}: {} connected graphs up to isomorphism, e.g. {}",
            classes.len(),
            codes.join(" ")
        );
    }
    Ok(())
}
