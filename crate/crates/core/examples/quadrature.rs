//! The integration engines: tanh-sinh on intervals with endpoint
//! singularities, oscillatory-damped tails, Laplace transforms and integrals
//! over the disc with the hyperbolic measure.
//!
//! ```text
//! cargo run --example quadrature
//! ```

use std::f64::consts::PI;

use hyperkernel::geom::{distance, DiscPoint};
use hyperkernel::quad::{ball_area, disc_integral, integrate_wave_tail_with, laplace_integral, tanh_sinh, QuadratureSpec};
use num_complex::Complex64;

fn main() -> hyperkernel::Result<()> {
    let spec = QuadratureSpec::with_tol(1e-12)?;
    let re = |x: f64| Complex64::new(x, 0.0);

    let r = tanh_sinh(|x| re(x.powf(-0.5)), 0.0, 1.0, &spec)?;
    println!("int_0^1 x^(-1/2) dx = {} (error estimate {:e})", r.value.re, r.error);

    let beta = tanh_sinh(|t| re(t.powf(-0.5) * (1.0 - t).sqrt()), 0.0, 1.0, &spec)?;
    println!("B(1/2, 3/2)         = {} (pi/2 = {})", beta.value.re, PI / 2.0);

    let tail = integrate_wave_tail_with(|_, offset| Ok(re(offset.powf(-0.5))), 1.0, Complex64::i(), &spec)?;
    println!("int_1^inf (rho-1)^(-1/2) e^(-rho) = {} (sqrt(pi)/e = {})", tail.value.re, PI.sqrt() / 1f64.exp());

    let (a, p) = (2.0_f64, 1.0_f64);
    let pair = laplace_integral(|x| re((a.ln() - 0.5 * (4.0 * PI).ln() - 1.5 * x.ln() - a * a / (4.0 * x)).exp()), re(p), &spec)?;
    println!("Laplace pair: {} vs e^(-a sqrt p) = {}", pair.value.re, (-a * f64::sqrt(p)).exp());

    // a geodesic ball of radius 1 about the origin, smoothed over a width of 1e-3
    let radius = 1.0;
    let indicator = |w: DiscPoint| {
        let d = distance(DiscPoint::origin(), w);
        re(0.5 * (1.0 - ((d - radius) / 1e-3).tanh()))
    };
    let area = disc_integral(indicator, (0.5 * (radius + 0.02)).tanh(), &QuadratureSpec::with_tol(1e-10)?)?;
    println!("area of B(0, 1) = {} (4 pi sinh^2(1/2) = {})", area.value.re, ball_area(radius));
    Ok(())
}
