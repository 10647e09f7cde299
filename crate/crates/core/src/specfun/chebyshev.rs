//! Chebyshev polynomials of the first kind and their non-integer extension.

use crate::error::{Error, Result};

/// T_n(x) by the three-term recurrence T_{n+1} = 2x T_n − T_{n−1}.
///
/// For |x| > 1 the recurrence loses nothing of note at moderate n, but the
/// closed form cosh(n·arccosh|x|)·sign(x)^n is used there for large n.
pub fn chebyshev_t(n: u32, x: f64) -> f64 {
    match n {
        0 => return 1.0,
        1 => return x,
        _ => {}
    }
    if x.abs() > 1.0 && n > 64 {
        let v = (n as f64 * x.abs().acosh()).cosh();
        return if x < 0.0 && n % 2 == 1 { -v } else { v };
    }
    let (mut prev, mut cur) = (1.0, x);
    for _ in 1..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// cosh(2a·arccosh x) = F(a, −a; 1/2; 1 − x²) for x ≥ 1.
pub fn cos_form_f(a: f64, x: f64) -> Result<f64> {
    if !(x >= 1.0) {
        return Err(Error::Domain(format!("cos_form_f needs x >= 1, got {x}")));
    }
    Ok((2.0 * a * x.acosh()).cosh())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degrees() {
        assert_eq!(chebyshev_t(0, 0.3), 1.0);
        assert!((chebyshev_t(2, 0.8) - 0.28).abs() < 1e-15);
        assert_eq!(chebyshev_t(4, 2.0), 97.0);
    }

    #[test]
    fn cosine_identity() {
        for n in 0..=50u32 {
            for j in 0..=20 {
                let theta = std::f64::consts::PI * j as f64 / 20.0;
                let got = chebyshev_t(n, theta.cos());
                assert!((got - (n as f64 * theta).cos()).abs() < 1e-12, "n = {n}, θ = {theta}");
            }
        }
    }

    #[test]
    fn large_degree_outside_interval() {
        let x = -1.01;
        let rec = {
            let (mut p, mut c) = (1.0, x);
            for _ in 1..71 {
                let nx = 2.0 * x * c - p;
                p = c;
                c = nx;
            }
            c
        };
        assert!((chebyshev_t(71, x) - rec).abs() < 1e-9 * rec.abs());
    }

    #[test]
    fn cos_form_values() {
        assert_eq!(cos_form_f(0.37, 1.0).unwrap(), 1.0);
        assert!((cos_form_f(1.0, 1.5).unwrap() - 3.5).abs() < 1e-13);
        assert!((cos_form_f(0.75, 1.3).unwrap() - 1.715_808_847_162_18).abs() < 1e-12);
        assert!(cos_form_f(1.0, 0.9).is_err());
    }
}
