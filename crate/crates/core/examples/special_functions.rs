//! Gamma-family functions and the Gauss hypergeometric function in each of
//! its evaluation regions, including the logarithmic case c = a + b.
//!
//! ```text
//! cargo run --example special_functions
//! ```

use hyperkernel::specfun::{
    chebyshev_t, cos_form_f, digamma, gamma, gauss_2f1, gauss_2f1_log_case, log_gamma, pochhammer, HyperParams,
};
use num_complex::Complex64;

fn main() -> hyperkernel::Result<()> {
    let c = |re: f64, im: f64| Complex64::new(re, im);

    println!("Gamma(5)          = {}", gamma(c(5.0, 0.0))?);
    println!("ln Gamma(0.5)     = {} (ln sqrt(pi) = {})", log_gamma(c(0.5, 0.0))?.re, 0.5 * std::f64::consts::PI.ln());
    println!("ln Gamma(3 + 4i)  = {}", log_gamma(c(3.0, 4.0))?);
    println!("psi(1)            = {}", digamma(c(1.0, 0.0))?.re);
    println!("(0.5)_2           = {}", pochhammer(c(0.5, 0.0), 2).re);

    let cases = [
        ("series", HyperParams::real(1.0, 1.0, 2.0, 0.5)),
        ("near one", HyperParams::real(0.3, 0.7, 1.9, 0.95)),
        ("near infinity", HyperParams::new(c(0.4, 0.2), c(1.3, 0.0), c(2.1, -0.5), c(-12.0, 3.0))),
        ("intermediate", HyperParams::new(c(0.5, 0.0), c(0.5, 0.0), c(1.5, 0.0), c(0.5, 0.85))),
        ("terminating", HyperParams::real(-2.0, 3.0, 1.0, 1.0)),
    ];
    for (label, p) in cases {
        println!("2F1 {label:<14} region {:?}: {}", p.region(), gauss_2f1(&p, 1e-15)?);
    }

    // F(1, 1; 2; z) = -ln(1 - z)/z, reached here through the log expansion about z = 1
    let z = 0.9;
    let log_case = gauss_2f1_log_case(c(1.0, 0.0), c(1.0, 0.0), 0, z)?;
    println!("log case F(1,1;2;0.9) = {} (closed form {})", log_case.re, -(1.0 - z).ln() / z);

    println!("T_4(2) = {}", chebyshev_t(4, 2.0));
    println!("F(0.75, -0.75; 1/2; 1 - 1.3^2) = {}", cos_form_f(0.75, 1.3)?);
    Ok(())
}
