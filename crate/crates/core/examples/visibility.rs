//! Mutual visibility of vertex sets in the 8-cycle.
//!
//! Run with `cargo run --example visibility`.

use mutvis::constructions::cycle;
use mutvis::visibility::{are_x_visible, geodesic_interval, is_gp_set, is_mv_set};
use mutvis::{DistanceMatrix, VertexSet};

fn main() -> mutvis::Result<()> {
    let g = cycle(8)?;
    let d = DistanceMatrix::new(&g)?;

    let interval = geodesic_interval(&d, 0, 4);
    println!("I(0,4) = {:?}", interval.members);

    for set in [
        vec![0, 1, 4],
        vec![0, 1, 2],
        vec![0, 3, 5],
        vec![0, 2, 4, 6],
    ] {
        let x: VertexSet = set.iter().collect();
        println!(
            "{:?}: mutual-visibility {}, general position {}",
            x,
            is_mv_set(&g, &d, &x),
            is_gp_set(&d, &x)
        );
    }

    // 0 and 2 only see each other through 1
    let x: VertexSet = [0, 1, 2].iter().collect();
    println!("0 and 2 are X-visible: {}", are_x_visible(&g, &d, &x, 0, 2));
    Ok(())
}
