//! Integral identities for ₂F₁ checked by quadrature: the Euler integral, two
//! fractional-integral identities and the Chebyshev specialisation behind the
//! half-integer wave kernels.
//!
//! ```text
//! cargo run --release --example hypergeometric_identities
//! ```

use hyperkernel::quad::QuadratureSpec;
use hyperkernel::verify::{
    chebyshev_hypergeometric_check, chebyshev_probe_pairs, chebyshev_specialization_check, euler_integral_check,
    exp_formula_check, fractional_identity_i_check, fractional_identity_ii_check, weyl_step_check, ResidualReport,
};
use num_complex::Complex64;

fn show(rep: &ResidualReport) {
    let mark = if rep.pass { "ok " } else { "BAD" };
    print!("{mark} {:<40} residual {:.3e}", rep.identity, rep.residual);
    match &rep.note {
        Some(note) => println!("  [{note}]"),
        None => println!(),
    }
}

fn main() -> hyperkernel::Result<()> {
    let spec = QuadratureSpec::with_tol(1e-12)?;
    let c = |re: f64, im: f64| Complex64::new(re, im);

    show(&euler_integral_check(c(0.7, 0.2), c(1.3, 0.0), c(2.9, -0.4), 0.6, &spec)?);
    for rep in fractional_identity_i_check(c(0.6, 0.0), c(1.4, 0.0), c(0.8, 0.0), c(0.3, 0.0), 1.5, 3.0, &spec)? {
        show(&rep);
    }
    show(&weyl_step_check(c(0.5, 0.0), c(0.9, 0.0), c(2.2, 0.0), c(0.7, 0.0), 2.0, &spec)?);
    for rep in fractional_identity_ii_check(c(0.5, 0.0), c(0.9, 0.0), c(2.2, 0.0), c(0.7, 0.0), c(0.8, 0.0), 2.0, &spec)? {
        show(&rep);
    }
    show(&exp_formula_check(0.8, &[0.1, 0.5, 1.0, 3.0])?);
    show(&chebyshev_hypergeometric_check(3, 0.4, 1.7)?);
    let pairs = chebyshev_probe_pairs(8);
    for k in [0.5, 1.5, 2.5] {
        show(&chebyshev_specialization_check(k, &pairs)?);
    }
    Ok(())
}
