//! μ of Cartesian products against the factor bounds.
//!
//! Run with `cargo run --release --example products`.

use mutvis::constructions::{complete, cycle, path};
use mutvis::solvers::{bounds_mu_product, solve_mu};
use mutvis::{cartesian_product, SolverConfig};

fn main() -> mutvis::Result<()> {
    let cfg = SolverConfig::default().with_workers(4);
    let pairs = [
        ("P_4", path(4)?, "P_4", path(4)?),
        ("P_4", path(4)?, "P_5", path(5)?),
        ("K_2", complete(2)?, "C_6", cycle(6)?),
        ("K_3", complete(3)?, "C_6", cycle(6)?),
        ("C_4", cycle(4)?, "C_6", cycle(6)?),
    ];
    for (gn, g, hn, h) in &pairs {
        let (gh, lab) = cartesian_product(g, h)?;
        let b = bounds_mu_product(g, h, &cfg)?;
        let r = solve_mu(&gh, &cfg)?;
        let coords: Vec<_> = r.witness.iter().map(|v| lab.coords(v)).collect();
        println!(
            "mu({gn} x {hn}) = {:>2}  bounds [{}, {}]  witness {:?}",
            r.value, b.lower, b.upper, coords
        );
    }
    Ok(())
}
