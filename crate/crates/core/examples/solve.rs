//! Exact μ, μ_i, α and gp with witnesses and structural bounds.
//!
//! Run with `cargo run --release --example solve`.

use mutvis::constructions::{cycle, graph_h, path, petersen, spider};
use mutvis::solvers::{bounds_mu, solve};
use mutvis::{Graph, Invariant, SolverConfig};

fn main() -> mutvis::Result<()> {
    let cfg = SolverConfig::default();
    let graphs: Vec<(&str, Graph)> = vec![
        ("P_5", path(5)?),
        ("C_8", cycle(8)?),
        ("spider(1,2,3)", spider(&[1, 2, 3])?),
        ("H", graph_h()),
        ("Petersen", petersen()),
    ];
    for (name, g) in &graphs {
        let b = bounds_mu(g)?;
        println!(
            "{name}: n={} m={}, {} <= mu <= {}",
            g.order(),
            g.size(),
            b.lower,
            b.upper
        );
        for inv in Invariant::ALL {
            let r = solve(g, inv, &cfg)?;
            println!("  {:<6}{:>3}  witness {:?}", inv.name(), r.value, r.witness);
        }
    }
    Ok(())
}
