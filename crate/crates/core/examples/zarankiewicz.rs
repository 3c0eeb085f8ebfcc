//! Zarankiewicz numbers, their bounds, and the matching MV sets of
//! rook graphs K_m □ K_n.
//!
//! Run with `cargo run --release --example zarankiewicz`.

use mutvis::constructions::complete;
use mutvis::solvers::solve_mu;
use mutvis::zarankiewicz::{
    erdos_window, kst_upper, matrix_to_mv_set, projective_lower, z_exact, ZConfig, ZInstance,
};
use mutvis::{cartesian_product, SolverConfig};

fn main() -> mutvis::Result<()> {
    let cfg = ZConfig::default();
    println!(" n  z(n,n)  lower   KST upper  window");
    for n in 2..=7 {
        let inst = ZInstance::c4(n, n)?;
        let z = z_exact(inst, &cfg)?;
        let (lo, hi) = erdos_window(n);
        println!(
            "{n:>2}  {:>6}  {:>5}  {:>10.3}  [{lo:.2}, {hi:.2}]",
            z.value,
            projective_lower(inst)?,
            kst_upper(inst)?
        );
    }

    let z = z_exact(ZInstance::c4(4, 5)?, &cfg)?;
    println!("\nz(4,5) = {}, witness:\n{}", z.value, z.witness);
    let (g, lab) = cartesian_product(&complete(4)?, &complete(5)?)?;
    let set = matrix_to_mv_set(&z.witness, &lab)?;
    let mu = solve_mu(&g, &SolverConfig::default())?;
    println!("as a vertex set of K_4 x K_5: {set:?}; mu = {}", mu.value);

    let z = z_exact(ZInstance::new(4, 4, 2, 3)?, &cfg)?;
    println!("\nz(4,4;2,3) = {}", z.value);
    Ok(())
}
