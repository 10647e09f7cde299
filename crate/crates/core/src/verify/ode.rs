//! Finite-difference oracles: the radial operator l_y^k, Helmholtz residuals
//! of the two radial solutions, and the Dirac pairing of the resolvent.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::ResidualReport;
use crate::error::{Error, Result};
use crate::kernels::{outgoing_profile_y, resolvent_radial, Convention, PrefactorExponent, RadialArg, SpectralParams};
use crate::quad::{tanh_sinh_try, QuadratureSpec};
use crate::specfun::{gauss_2f1, HyperParams};

const HYP_TOL: f64 = 1e-15;

/// Pass level for Helmholtz residuals.
pub const HELMHOLTZ_TOL: f64 = 1e-6;

/// Pass level (absolute) for the Dirac pairing.
pub const PAIRING_TOL: f64 = 1e-4;

/// Fourth-order central first and second derivatives from five samples
/// f(x−2h), f(x−h), f(x), f(x+h), f(x+2h).
fn five_point(v: [Complex64; 5], h: f64) -> (Complex64, Complex64) {
    let d1 = (-v[4] + v[3] * 8.0 - v[1] * 8.0 + v[0]) / (12.0 * h);
    let d2 = (-v[4] + v[3] * 16.0 - v[2] * 30.0 + v[1] * 16.0 - v[0]) / (12.0 * h * h);
    (d1, d2)
}

/// l_y^k φ = y(y−1)φ″ + (2y−1)φ′ + (k²/y + 1/4)φ with fourth-order central
/// differences of step h.
pub fn radial_operator_apply<F>(k: f64, phi: F, y: f64, h: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if !(h > 0.0) || !(y - 2.0 * h > 1.0) {
        return Err(Error::StencilOutOfDomain(y - 2.0 * h));
    }
    let mut v = [Complex64::new(0.0, 0.0); 5];
    for (j, slot) in v.iter_mut().enumerate() {
        *slot = phi(y + (j as f64 - 2.0) * h)?;
    }
    let (d1, d2) = five_point(v, h);
    Ok(d2 * (y * (y - 1.0)) + d1 * (2.0 * y - 1.0) + v[2] * (k * k / y + 0.25))
}

/// Third parameter of the regular solution y^{|k|} F(s+|k|, 1−s+|k|; c; 1−y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegularThirdParameter {
    One,
    TwoKappaPlusOne,
}

/// Which radial solution of (l_y^k + λ²)φ = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HelmholtzSolution {
    Regular(RegularThirdParameter),
    Outgoing,
}

impl HelmholtzSolution {
    pub fn name(&self) -> &'static str {
        match self {
            HelmholtzSolution::Regular(RegularThirdParameter::One) => "regular",
            HelmholtzSolution::Regular(RegularThirdParameter::TwoKappaPlusOne) => "regular[c=2|k|+1]",
            HelmholtzSolution::Outgoing => "outgoing",
        }
    }
}

/// y^{|k|} F(s+|k|, 1−s+|k|; c; 1−y).
pub fn regular_solution(
    k: f64,
    lambda: Complex64,
    third: RegularThirdParameter,
    convention: Convention,
    y: f64,
) -> Result<Complex64> {
    let s = convention.s_of(lambda);
    let kappa = k.abs();
    let c = match third {
        RegularThirdParameter::One => 1.0,
        RegularThirdParameter::TwoKappaPlusOne => 2.0 * kappa + 1.0,
    };
    let f = gauss_2f1(
        &HyperParams::new(s + kappa, Complex64::new(1.0 + kappa, 0.0) - s, Complex64::new(c, 0.0), (1.0 - y).into()),
        HYP_TOL,
    )?;
    Ok(f * y.powf(kappa))
}

/// y^{−e} F(s−|k|, s+|k|; 2s; 1/y) under the prefactor and argument flags of
/// `convention`.
pub fn outgoing_solution(k: f64, lambda: Complex64, convention: Convention, y: f64) -> Result<Complex64> {
    let s = convention.s_of(lambda);
    let kappa = k.abs();
    let e = match convention.prefactor {
        PrefactorExponent::S => s,
        PrefactorExponent::SPlusAbsK => s + kappa,
    };
    outgoing_profile_y(s, kappa, e, convention.argument, y, y - 1.0, HYP_TOL)
}

/// Finite-difference step: relative to y, or absolute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Step {
    Relative(f64),
    Absolute(f64),
}

impl Step {
    fn at(&self, y: f64) -> f64 {
        match *self {
            Step::Relative(q) => q * y,
            Step::Absolute(h) => h,
        }
    }
}

/// max over the grid of |(l_y^k + λ²)φ| / (1 + |φ|).
pub fn helmholtz_residual(
    k: f64,
    lambda: Complex64,
    which: HelmholtzSolution,
    convention: Convention,
    y_grid: &[f64],
    step: Step,
) -> Result<f64> {
    let phi = |y: f64| match which {
        HelmholtzSolution::Regular(third) => regular_solution(k, lambda, third, convention, y),
        HelmholtzSolution::Outgoing => outgoing_solution(k, lambda, convention, y),
    };
    let mut worst = 0.0_f64;
    for &y in y_grid {
        let h = step.at(y);
        let lv = radial_operator_apply(k, phi, y, h)?;
        let p = phi(y)?;
        let res = (lv + p * lambda * lambda).norm() / (1.0 + p.norm());
        if !res.is_finite() {
            return Err(Error::Domain(format!("non-finite Helmholtz residual at y = {y}")));
        }
        worst = worst.max(res);
    }
    Ok(worst)
}

/// The Helmholtz residual of one solution under the default convention,
/// with step h = 1e-3·y; passes at 1e-6.
pub fn helmholtz_solution_residual(
    k: f64,
    lambda: Complex64,
    which: HelmholtzSolution,
    y_grid: &[f64],
) -> Result<ResidualReport> {
    let residual = helmholtz_residual(k, lambda, which, Convention::default(), y_grid, Step::Relative(1e-3))?;
    Ok(ResidualReport::new(
        format!("helmholtz/{}", which.name()),
        json!({"k": k, "lambda": [lambda.re, lambda.im], "y_min": y_grid.iter().cloned().fold(f64::INFINITY, f64::min),
               "y_max": y_grid.iter().cloned().fold(0.0, f64::max), "points": y_grid.len()}),
        residual,
        HELMHOLTZ_TOL,
    ))
}

/// Observed order of the finite-difference residual under h → h/2.
pub fn helmholtz_refinement_order(
    k: f64,
    lambda: Complex64,
    which: HelmholtzSolution,
    y_grid: &[f64],
    h: f64,
) -> Result<f64> {
    let conv = Convention::default();
    let coarse = helmholtz_residual(k, lambda, which, conv, y_grid, Step::Absolute(h))?;
    let fine = helmholtz_residual(k, lambda, which, conv, y_grid, Step::Absolute(0.5 * h))?;
    Ok((coarse / fine).log2())
}

/// Radial test profiles for the Dirac pairing, all smooth, even in r and
/// supported in [0, radius].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialBump {
    /// exp(1 − 1/(1 − (r/R)²))
    Plain { radius: f64 },
    /// (1 + r²) times the plain bump
    Quadratic { radius: f64 },
    /// cos(r) times the plain bump
    Cosine { radius: f64 },
}

impl RadialBump {
    pub fn radius(&self) -> f64 {
        match *self {
            RadialBump::Plain { radius } | RadialBump::Quadratic { radius } | RadialBump::Cosine { radius } => radius,
        }
    }

    pub fn eval(&self, r: f64) -> f64 {
        let r = r.abs();
        let q = r / self.radius();
        if q >= 1.0 {
            return 0.0;
        }
        let base = (1.0 - 1.0 / (1.0 - q * q)).exp();
        match self {
            RadialBump::Plain { .. } => base,
            RadialBump::Quadratic { .. } => (1.0 + r * r) * base,
            RadialBump::Cosine { .. } => r.cos() * base,
        }
    }

    pub fn standard_set() -> [RadialBump; 3] {
        [
            RadialBump::Plain { radius: 1.5 },
            RadialBump::Quadratic { radius: 2.0 },
            RadialBump::Cosine { radius: 2.5 },
        ]
    }
}

/// D_k φ = φ″ + coth r φ′ + (k²/cosh²(r/2) + 1/4)φ for an even profile φ,
/// by fourth-order differences of step h.
pub fn radial_dk_apply<F>(k: f64, phi: F, r: f64, h: f64) -> Complex64
where
    F: Fn(f64) -> f64,
{
    let mut v = [Complex64::new(0.0, 0.0); 5];
    for (j, slot) in v.iter_mut().enumerate() {
        *slot = Complex64::new(phi((r + (j as f64 - 2.0) * h).abs()), 0.0);
    }
    let (d1, d2) = five_point(v, h);
    d2 + d1 / r.tanh() + v[2] * (k * k / (0.5 * r).cosh().powi(2) + 0.25)
}

/// 2π ∫₀^R G_k(λ, r) [(D_k + λ²)φ](r) sinh r dr, which equals −φ(0).
pub fn green_pairing<F>(k: f64, lambda: Complex64, phi: F, support: f64, spec: &QuadratureSpec) -> Result<Complex64>
where
    F: Fn(f64) -> f64,
{
    if !(support > 0.0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let sp = SpectralParams::new(k, lambda);
    let h = 1e-3;
    let res = tanh_sinh_try(
        |r, _, _| {
            // below this the contribution is O(r² ln r) and 1 − tanh²(r/2) rounds to 1
            if r < 1e-100 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            let dphi = radial_dk_apply(k, &phi, r, h) + lambda * lambda * phi(r);
            if dphi == Complex64::new(0.0, 0.0) {
                return Ok(dphi);
            }
            let g = resolvent_radial(&sp, &RadialArg::new(r)?, 1e-14)?;
            Ok(g * dphi * r.sinh())
        },
        0.0,
        support,
        spec,
    )?;
    Ok(res.value * TAU)
}

/// Report for the pairing of one bump: |pairing + φ(0)| ≤ 1e-4.
pub fn green_pairing_report(k: f64, lambda: Complex64, bump: RadialBump, spec: &QuadratureSpec) -> Result<ResidualReport> {
    let v = green_pairing(k, lambda, |r| bump.eval(r), bump.radius(), spec)?;
    let target = -bump.eval(0.0);
    Ok(ResidualReport::new(
        "green_pairing",
        json!({"k": k, "lambda": [lambda.re, lambda.im], "bump": format!("{bump:?}")}),
        (v - target).norm(),
        PAIRING_TOL,
    )
    .with_note(format!("pairing = {:.12} {:+.3e}i, -phi(0) = {target:.12}", v.re, v.im)))
}

/// −(1/4π) ln tanh²(r/2): the k = 0, s = 1 resolvent.
pub fn log_kernel(r: f64) -> f64 {
    -((0.5 * r).tanh().powi(2)).ln() / (4.0 * PI)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn operator_on_constants_and_linear() {
        let v = radial_operator_apply(1.5, |_| Ok(c(1.0)), 2.0, 1e-3).unwrap();
        assert!((v - c(1.5 * 1.5 / 2.0 + 0.25)).norm() < 1e-12);
        let v = radial_operator_apply(0.0, |y| Ok(c(y)), 2.0, 1e-3).unwrap();
        assert!((v - c(3.5)).norm() < 1e-8);
        assert!(matches!(radial_operator_apply(0.0, |y| Ok(c(y)), 1.001, 1e-3), Err(Error::StencilOutOfDomain(_))));
    }

    #[test]
    fn both_solutions_solve_the_equation() {
        let grid = [1.1, 1.5, 2.0, 4.0, 9.0, 20.0];
        for (k, lam) in [(0.0, Complex64::new(0.0, 0.5)), (1.0, c(0.7)), (2.3, Complex64::new(0.5, 0.5))] {
            for which in [HelmholtzSolution::Regular(RegularThirdParameter::One), HelmholtzSolution::Outgoing] {
                let r = helmholtz_solution_residual(k, lam, which, &grid).unwrap();
                assert!(r.pass, "{r:?}");
            }
        }
    }

    #[test]
    fn wrong_prefactor_is_rejected() {
        let conv = Convention { prefactor: PrefactorExponent::SPlusAbsK, ..Convention::default() };
        let r = helmholtz_residual(1.0, c(0.7), HelmholtzSolution::Outgoing, conv, &[1.5, 3.0], Step::Relative(1e-3))
            .unwrap();
        assert!(r > 1e-3, "{r}");
    }

    #[test]
    fn pairing_of_zero_and_linearity() {
        let spec = QuadratureSpec::with_tol(1e-10).unwrap();
        let z = green_pairing(0.0, Complex64::i(), |_| 0.0, 1.5, &spec).unwrap();
        assert_eq!(z, c(0.0));
        let b = RadialBump::Plain { radius: 1.5 };
        let p = green_pairing(0.0, Complex64::i(), |r| b.eval(r), 1.5, &spec).unwrap();
        let m = green_pairing(0.0, Complex64::i(), |r| -b.eval(r), 1.5, &spec).unwrap();
        assert!((p + m).norm() < 1e-12);
        assert!((p + c(1.0)).norm() < 1e-4, "{p}");
    }

    #[test]
    fn log_kernel_matches_free_resolvent_at_s_one() {
        let ra = RadialArg::new(0.7).unwrap();
        let g = resolvent_radial(&SpectralParams::new(0.0, Complex64::new(0.0, 0.5)), &ra, 1e-14).unwrap();
        assert!((g - c(log_kernel(0.7))).norm() < 1e-13);
    }
}
