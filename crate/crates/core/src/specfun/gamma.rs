//! Complex log-gamma, digamma, reciprocal gamma and Pochhammer symbols.
//!
//! `log_gamma` returns the branch of log Γ that is continuous in the plane cut
//! along the non-positive real axis (the one obtained by summing logarithms in
//! the recurrence), so `exp(log_gamma(z)) = Γ(z)` and real positive arguments
//! give real results. It agrees with the principal logarithm of Γ modulo 2πi.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Arguments with modulus at least this large go straight to the asymptotic series.
const ASYMPTOTIC_RADIUS: f64 = 15.0;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// B_{2n} / (2n (2n - 1)), n = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// B_{2n} / (2n), n = 1..7.
const DIGAMMA_ASYMPTOTIC: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
];

/// If `z` is (numerically) a non-positive integer, return `-z` as an integer.
pub fn nonpositive_integer(z: Complex64) -> Option<u64> {
    if z.im != 0.0 || z.re > 0.5 {
        return None;
    }
    let n = z.re.round();
    if n <= 0.0 && (z.re - n).abs() <= 1e-13 * (1.0 + n.abs()) {
        Some((-n) as u64)
    } else {
        None
    }
}

fn ln_sin_pi(z: Complex64) -> Complex64 {
    let pz = z * PI;
    if pz.im > 20.0 {
        // sin(πz) = (i/2) e^{-iπz} (1 - e^{2iπz})
        let i = Complex64::i();
        (i * 0.5).ln() - i * pz + (Complex64::new(1.0, 0.0) - (i * pz * 2.0).exp()).ln()
    } else if pz.im < -20.0 {
        let i = Complex64::i();
        (-i * 0.5).ln() + i * pz + (Complex64::new(1.0, 0.0) - (-i * pz * 2.0).exp()).ln()
    } else {
        pz.sin().ln()
    }
}

fn stirling(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut term = inv;
    let mut corr = Complex64::new(0.0, 0.0);
    for c in STIRLING {
        corr += term * c;
        term *= inv2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + corr
}

/// Complex log Γ(z). Fails at the poles z = 0, -1, -2, ...
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::GammaPole(z));
    }
    if z.re < 0.5 {
        let one = Complex64::new(1.0, 0.0);
        return Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - log_gamma(one - z)?);
    }
    if z.norm() >= ASYMPTOTIC_RADIUS {
        return Ok(stirling(z));
    }
    let shift = (ASYMPTOTIC_RADIUS - z.re).ceil().max(0.0) as usize;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..shift {
        acc += (z + j as f64).ln();
    }
    Ok(stirling(z + shift as f64) - acc)
}

/// Γ(z) for complex z.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// 1/Γ(z), an entire function: exactly zero at the poles of Γ.
pub fn rgamma(z: Complex64) -> Complex64 {
    match log_gamma(z) {
        Ok(lg) => (-lg).exp(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// Digamma ψ(z) = Γ'(z)/Γ(z).
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if nonpositive_integer(z).is_some() {
        return Err(Error::GammaPole(z));
    }
    let one = Complex64::new(1.0, 0.0);
    if z.re < 0.5 {
        let pz = z * PI;
        let cot = if pz.im.abs() > 20.0 {
            Complex64::new(0.0, -pz.im.signum())
        } else {
            pz.cos() / pz.sin()
        };
        return Ok(digamma(one - z)? - cot * PI);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut x = z;
    while x.norm() < ASYMPTOTIC_RADIUS {
        acc += x.inv();
        x += 1.0;
    }
    let inv = x.inv();
    let inv2 = inv * inv;
    let mut term = inv2;
    let mut series = Complex64::new(0.0, 0.0);
    for c in DIGAMMA_ASYMPTOTIC {
        series += term * c;
        term *= inv2;
    }
    Ok(x.ln() - inv * 0.5 - series - acc)
}

/// Rising factorial (a)_n = Γ(a+n)/Γ(a).
///
/// Computed as an n-term product, or in log space for n > 100.
pub fn pochhammer(a: Complex64, n: u64) -> Complex64 {
    if n > 100 {
        match nonpositive_integer(a) {
            Some(m) if n > m => return Complex64::new(0.0, 0.0),
            Some(_) => {}
            None => {
                if let (Ok(num), Ok(den)) = (log_gamma(a + n as f64), log_gamma(a)) {
                    return (num - den).exp();
                }
            }
        }
    }
    (0..n).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (a + j as f64))
}
