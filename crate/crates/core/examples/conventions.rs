//! Scores every candidate normalisation of the outgoing resolvent against
//! the Helmholtz equation, the integral representation and the logarithmic
//! singularity, and prints the ranking.
//!
//! ```text
//! cargo run --release --example conventions
//! ```

use hyperkernel::quad::QuadratureSpec;
use hyperkernel::verify::resolve_conventions;

fn main() -> hyperkernel::Result<()> {
    let verdict = resolve_conventions(&QuadratureSpec::with_tol(1e-10)?)?;
    let mut table = verdict.table.clone();
    table.sort_by(|a, b| a.total.total_cmp(&b.total));
    println!("{:<62} {:>10} {:>10} {:>10} {:>10}", "candidate", "helmholtz", "integral", "log law", "total");
    for row in &table {
        println!(
            "{:<62} {:>10.2e} {:>10.2e} {:>10.2e} {:>10.2e}{}",
            row.convention.join(", "),
            row.helmholtz,
            row.integral,
            row.log_law,
            row.total,
            if row.selected { "  <=" } else { "" }
        );
    }
    println!("selected {:?} with margin {:.2e}", verdict.selected, verdict.margin);
    for aux in &verdict.auxiliary {
        println!(
            "{}: {} ({:.1e}) over {} ({:.1e})",
            aux.question, aux.selected, aux.selected_residual, aux.rejected, aux.rejected_residual
        );
    }
    Ok(())
}
