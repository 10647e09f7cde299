//! The magnetic resolvent kernel G_k(λ; w, w′): radial profile, full two-point
//! kernel, the logarithmic singularity on the diagonal and the decay law.
//!
//! ```text
//! cargo run --example resolvent
//! ```

use std::f64::consts::PI;

use hyperkernel::geom::DiscPoint;
use hyperkernel::kernels::{free_resolvent, resolvent_kernel, resolvent_radial, Convention, RadialArg, SpectralParams};
use num_complex::Complex64;

fn main() -> hyperkernel::Result<()> {
    let sp = SpectralParams::new(1.0, Complex64::new(0.5, 0.5));
    println!("convention: {:?}", Convention::default().labels());
    println!("s = {}, (a, b, c) = ({}, {}, {})", sp.s, sp.a, sp.b, sp.c);

    for r in [0.1, 0.5, 1.0, 2.0, 5.0] {
        let g = resolvent_radial(&sp, &RadialArg::new(r)?, 1e-14)?;
        println!("G(r = {r:>3}) = {g:.12}");
    }

    let (w, w2) = (DiscPoint::from_parts(0.1, 0.2)?, DiscPoint::from_parts(-0.3, 0.4)?);
    let kv = resolvent_kernel(&sp, w, w2, 1e-14)?;
    println!("G(w, w') = phase {:.12} x radial {:.12} = {:.12}", kv.phase, kv.radial, kv.value);

    // −(1/4π) ln sinh²(r/2) dominates near the diagonal
    for r in [1e-2, 1e-4, 1e-6] {
        let g = free_resolvent(Complex64::i(), &RadialArg::new(r)?, Convention::default(), 1e-14)?;
        let log = -(0.5 * r as f64).sinh().powi(2).ln() / (4.0 * PI);
        println!("r = {r:e}: G / log-law = {:.9}", (g / log).re);
    }

    let sp = SpectralParams::new(1.5, Complex64::i());
    match resolvent_radial(&sp, &RadialArg::new(1.0)?, 1e-14) {
        Ok(v) => println!("unexpected value {v}"),
        Err(e) => println!("k = 1.5, lambda = i: {e}"),
    }
    Ok(())
}
