//! The wave kernel W_k(r, ρ), its Chebyshev form for half-integer k, and the
//! representation of the resolvent as a damped integral of W_k.
//!
//! ```text
//! cargo run --example wave_kernel
//! ```

use hyperkernel::kernels::{
    integral_envelope, resolvent_radial, resolvent_via_integral, wave_kernel, RadialArg, SpectralParams,
};
use hyperkernel::quad::QuadratureSpec;
use hyperkernel::specfun::chebyshev_t;
use num_complex::Complex64;

fn main() -> hyperkernel::Result<()> {
    let ra = RadialArg::new(1.0)?;
    for k in [0.0, 0.5, 1.0, 1.5, 0.3] {
        let w = wave_kernel(k, &ra, 2.0)?;
        println!("W_{k}(1, 2) = {w:.12}");
    }
    let x = 1f64.cosh() / 0.5f64.cosh();
    println!("W_1 / W_0 = {:.12}, T_2(x) = {:.12}", wave_kernel(1.0, &ra, 2.0)? / wave_kernel(0.0, &ra, 2.0)?, chebyshev_t(2, x));

    // the square-root singularity at the light cone
    for d in [1e-2_f64, 1e-4, 1e-6] {
        println!("sqrt(rho - r) W_0 at rho - r = {d:e}: {:.10}", d.sqrt() * wave_kernel(0.0, &ra, 1.0 + d)?);
    }

    let spec = QuadratureSpec::with_tol(1e-12)?;
    for (k, lambda) in [(0.0, Complex64::i()), (1.0, Complex64::new(0.4, 0.8)), (1.5, Complex64::new(0.3, 1.2))] {
        let sp = SpectralParams::new(k, lambda);
        let ra = RadialArg::new(1.5)?;
        let via = resolvent_via_integral(&sp, &ra, &spec)?;
        let closed = resolvent_radial(&sp, &ra, 1e-15)?;
        println!("k = {k}, lambda = {lambda}: integral {via:.12}, closed form {closed:.12}");
    }
    let sp = SpectralParams::new(2.3, Complex64::i());
    if let Err(e) = resolvent_via_integral(&sp, &RadialArg::new(1.0)?, &spec) {
        println!("k = 2.3 needs Im(lambda) >= {}: {e}", integral_envelope(2.3));
    }
    Ok(())
}
