//! Triangle-free graphs with μ = 3: trees with three leaves and frog graphs.
//!
//! Run with `cargo run --release --example triangle_free`.

use mutvis::constructions::{
    is_tree_with_exactly_three_leaves, make_frog, recognize_frog, FrogSpec,
};
use mutvis::enumerate::{connected_masks, graph_from_mask};
use mutvis::solvers::solve_mu;
use mutvis::SolverConfig;

fn main() -> mutvis::Result<()> {
    let cfg = SolverConfig::default();
    for (c, r, s) in [(4, 2, 1), (6, 3, 2), (7, 2, 2), (8, 1, 1)] {
        let frog = make_frog(FrogSpec::new(c, r, s)?)?;
        let seen = recognize_frog(&frog).map(|f| f.spec);
        println!(
            "frog({c},{r},{s}): n={} mu={} recognized as {:?}",
            frog.order(),
            solve_mu(&frog, &cfg)?.value,
            seen
        );
    }

    for n in 1..=7 {
        let (mut trees, mut frogs, mut total) = (0, 0, 0);
        for mask in connected_masks(n, true)? {
            let g = graph_from_mask(n, mask);
            if solve_mu(&g, &cfg)?.value != 3 {
                continue;
            }
            total += 1;
            if is_tree_with_exactly_three_leaves(&g) {
                trees += 1;
            } else if recognize_frog(&g).is_some() {
                frogs += 1;
            }
        }
        println!("n={n}: {total} labeled graphs with mu = 3 ({trees} trees, {frogs} frogs)");
    }
    Ok(())
}
