//! In a corona G ∘ H all copies of H together form a maximum
//! mutual-visibility set.
//!
//! Run with `cargo run --example corona`.

use mutvis::constructions::{complete, cycle, empty, path};
use mutvis::product::corona_copies;
use mutvis::solvers::{solve_mu, solve_mu_i};
use mutvis::visibility::is_mv_set;
use mutvis::{corona, DistanceMatrix, SolverConfig};

fn main() -> mutvis::Result<()> {
    let cfg = SolverConfig::default();
    for (gn, g) in [("P_3", path(3)?), ("C_4", cycle(4)?)] {
        for (hn, h) in [
            ("K_2", complete(2)?),
            ("P_3", path(3)?),
            ("K_3-bar", empty(3)?),
        ] {
            let c = corona(&g, &h)?;
            let d = DistanceMatrix::new(&c)?;
            let copies = corona_copies(&g, &h);
            let mu = solve_mu(&c, &cfg)?.value;
            println!(
                "mu({gn} o {hn}) = {mu:>2} = {} x {}; copies form an MV set: {}",
                g.order(),
                h.order(),
                is_mv_set(&c, &d, &copies)
            );
        }
        let k = 2;
        let c = corona(&g, &empty(k)?)?;
        println!("mu_i({gn} o K_{k}-bar) = {}", solve_mu_i(&c, &cfg)?.value);
    }
    Ok(())
}
