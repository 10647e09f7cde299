//! Solving the wave and heat Cauchy problems for D_k by integrating the
//! kernels against compactly supported data.
//!
//! ```text
//! cargo run --release --example cauchy_problems
//! ```

use hyperkernel::geom::DiscPoint;
use hyperkernel::kernels::{apply_wave_propagator, Bump, HeatPropagator, InitialData};
use hyperkernel::quad::QuadratureSpec;

fn main() -> hyperkernel::Result<()> {
    let spec = QuadratureSpec::with_tol(1e-8)?;
    let data = Bump::new(DiscPoint::from_parts(0.1, 0.0)?, 0.8, 1.0);
    let w = DiscPoint::from_parts(0.15, 0.05)?;
    println!("u1(w) = {:.10}", data.eval(w).re);

    // u(t) = sin(t√−D)/√−D u1 behaves like t·u1 for small t
    for t in [0.2, 0.1, 0.05] {
        let u = apply_wave_propagator(0.5, t, &data, w, &spec)?;
        println!("wave t = {t:<5} u/t = {:.8}", (u / t).re);
    }
    let far = DiscPoint::from_parts(-0.9, 0.0)?;
    println!("outside the light cone: {}", apply_wave_propagator(0.5, 0.3, &data, far, &spec)?);

    // e^{tD} v0 tends to v0 as t → 0
    for t in [0.05, 0.01, 0.002] {
        let v = HeatPropagator::new(0.0, t, spec)?.apply(&data, w)?;
        println!("heat t = {t:<5} v = {:.8}", v.re);
    }
    let v = HeatPropagator::new(1.0, 0.05, spec)?.apply(&data, w)?;
    println!("heat k = 1, t = 0.05: {v:.8}");
    Ok(())
}
