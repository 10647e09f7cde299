//! The resolvent as a fundamental solution: its radial profile solves the
//! Helmholtz equation away from r = 0, and pairing it with (D_k + λ²)φ
//! recovers −φ(0).
//!
//! ```text
//! cargo run --release --example helmholtz_and_pairing
//! ```

use hyperkernel::quad::QuadratureSpec;
use hyperkernel::verify::{
    green_pairing_report, helmholtz_refinement_order, helmholtz_solution_residual, ode_y_grid, HelmholtzSolution,
    RadialBump, RegularThirdParameter,
};
use num_complex::Complex64;

fn main() -> hyperkernel::Result<()> {
    let grid = ode_y_grid();
    let lambda = Complex64::new(0.5, 0.5);
    for k in [0.0, 1.0, 2.3] {
        for which in [HelmholtzSolution::Outgoing, HelmholtzSolution::Regular(RegularThirdParameter::One)] {
            let rep = helmholtz_solution_residual(k, lambda, which, &grid)?;
            println!("{:<28} k = {k:<4} residual {:.2e} (tol {:.0e})", rep.identity, rep.residual, rep.tolerance);
        }
    }
    let order = helmholtz_refinement_order(1.0, lambda, HelmholtzSolution::Outgoing, &[1.5, 2.0, 3.0, 4.0], 0.05)?;
    println!("finite-difference order under h -> h/2: {order:.2}");

    let spec = QuadratureSpec::with_tol(1e-10)?;
    for bump in RadialBump::standard_set() {
        let rep = green_pairing_report(1.0, Complex64::new(0.5, 0.5), bump, &spec)?;
        println!("{:?}: relative defect {:.2e}", bump, rep.residual);
    }
    Ok(())
}
