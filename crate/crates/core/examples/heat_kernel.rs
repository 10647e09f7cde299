//! The heat kernel H_k(t; w, w′) and its Laplace transform in t, which
//! reproduces the resolvent.
//!
//! ```text
//! cargo run --example heat_kernel
//! ```

use hyperkernel::geom::DiscPoint;
use hyperkernel::kernels::{heat_kernel, heat_radial, resolvent_radial, RadialArg, SpectralParams};
use hyperkernel::quad::QuadratureSpec;
use hyperkernel::verify::heat_laplace_transform;
use num_complex::Complex64;

fn main() -> hyperkernel::Result<()> {
    let spec = QuadratureSpec::with_tol(1e-11)?;
    println!("{:>6} {:>22} {:>22} {:>22}", "r", "t = 0.1", "t = 0.5", "t = 2");
    for r in [0.0, 0.5, 1.0, 2.0, 4.0] {
        let row: Vec<f64> = [0.1, 0.5, 2.0].iter().map(|&t| heat_radial(1.0, t, r, &spec)).collect::<Result<_, _>>()?;
        println!("{r:>6} {:>22.15e} {:>22.15e} {:>22.15e}", row[0], row[1], row[2]);
    }

    let kv = heat_kernel(0.7, 0.5, DiscPoint::from_parts(0.2, 0.1)?, DiscPoint::from_parts(-0.1, -0.3)?, &spec)?;
    println!("H(0.5; w, w') = {:.12}", kv.value);

    // ∫₀^∞ e^{−λ² t} H_k(t, r) dt is the resolvent at spectral parameter iλ
    for (k, lambda, r) in [(0.0, 1.0, 1.0), (1.0, 0.8, 1.5), (0.5, 1.2, 0.7)] {
        let lambda = Complex64::new(lambda, 0.0);
        let transform = heat_laplace_transform(k, lambda * lambda, r, &spec)?;
        let g = resolvent_radial(&SpectralParams::new(k, Complex64::i() * lambda), &RadialArg::new(r)?, 1e-15)?;
        println!("k = {k}, lambda = {}, r = {r}: Laplace {:.12}, resolvent {:.12}", lambda.re, transform.re, g.re);
    }
    Ok(())
}
