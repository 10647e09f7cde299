//! Runs one verification suite (default: heat) and prints the JSON report
//! that `hyperkernel verify` emits.
//!
//! ```text
//! cargo run --release --example verification -- asymptotics
//! ```

use hyperkernel::quad::QuadratureSpec;
use hyperkernel::verify::run_named;

fn main() -> hyperkernel::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "heat".to_string());
    let report = run_named(&name, &QuadratureSpec::with_tol(1e-10)?)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    let failed = report.reports.iter().filter(|r| !r.pass).count();
    eprintln!("{} checks, {failed} failed", report.reports.len());
    Ok(())
}
