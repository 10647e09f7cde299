//! Resolvent, wave and heat kernels of D_k = L_k + k² + 1/4 on the disc, and
//! the wave and heat propagators acting on compactly supported data.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::Mutex;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{distance, phase_factor, DiscPoint, BOUNDARY_GUARD};
use crate::quad::{geodesic_polar_integral_ball, integrate_endpoint_tail, integrate_wave_tail_with, QuadratureSpec};
use crate::specfun::{gauss_2f1, hyp2f1_one_minus, log_gamma, nonpositive_integer, HyperParams};

/// How s is built from λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SConvention {
    /// s = 1/2 − iλ
    HalfMinusILambda,
    /// s = (1 − iλ)/2
    OneMinusILambdaOver2,
}

/// Exponent of the radial prefactor Y^{−e}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PrefactorExponent {
    /// e = s
    S,
    /// e = s + |k|
    SPlusAbsK,
}

/// The variable Y in Y^{−e} F(s − |k|, s + |k|; 2s; 1/Y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArgumentVariant {
    /// Y = cosh²(r/2)
    CoshSqHalfR,
    /// Y = cosh² r
    CoshSqR,
}

/// Sign σ of the exponential e^{iσλρ} in the integral representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExponentSign {
    Plus,
    Minus,
}

impl ExponentSign {
    pub fn sigma(&self) -> f64 {
        match self {
            ExponentSign::Plus => 1.0,
            ExponentSign::Minus => -1.0,
        }
    }
}

/// A choice of the four notational flags the kernel formulas depend on.
/// `Convention::default()` is the tuple selected by the convention resolver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Convention {
    pub s: SConvention,
    pub prefactor: PrefactorExponent,
    pub argument: ArgumentVariant,
    pub exponent: ExponentSign,
}

impl Default for Convention {
    fn default() -> Self {
        Convention {
            s: SConvention::HalfMinusILambda,
            prefactor: PrefactorExponent::S,
            argument: ArgumentVariant::CoshSqHalfR,
            exponent: ExponentSign::Plus,
        }
    }
}

impl Convention {
    /// All sixteen flag combinations, the default first.
    pub fn all() -> Vec<Convention> {
        let mut out = Vec::with_capacity(16);
        for s in [SConvention::HalfMinusILambda, SConvention::OneMinusILambdaOver2] {
            for prefactor in [PrefactorExponent::S, PrefactorExponent::SPlusAbsK] {
                for argument in [ArgumentVariant::CoshSqHalfR, ArgumentVariant::CoshSqR] {
                    for exponent in [ExponentSign::Plus, ExponentSign::Minus] {
                        out.push(Convention { s, prefactor, argument, exponent });
                    }
                }
            }
        }
        out
    }

    pub fn labels(&self) -> [&'static str; 4] {
        [
            match self.s {
                SConvention::HalfMinusILambda => "s=1/2-i*lambda",
                SConvention::OneMinusILambdaOver2 => "s=(1-i*lambda)/2",
            },
            match self.prefactor {
                PrefactorExponent::S => "y^(-s)",
                PrefactorExponent::SPlusAbsK => "y^(-s-|k|)",
            },
            match self.argument {
                ArgumentVariant::CoshSqHalfR => "y=cosh^2(r/2)",
                ArgumentVariant::CoshSqR => "y=cosh^2(r)",
            },
            match self.exponent {
                ExponentSign::Plus => "exp(+i*lambda*rho)",
                ExponentSign::Minus => "exp(-i*lambda*rho)",
            },
        ]
    }

    pub fn s_of(&self, lambda: Complex64) -> Complex64 {
        let i = Complex64::i();
        match self.s {
            SConvention::HalfMinusILambda => Complex64::new(0.5, 0.0) - i * lambda,
            SConvention::OneMinusILambdaOver2 => (Complex64::new(1.0, 0.0) - i * lambda) * 0.5,
        }
    }
}

/// Magnetic strength, spectral parameter and the derived Gauss parameters
/// (a, b, c) = (s − |k|, s + |k|, 2s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParams {
    pub k: f64,
    pub lambda: Complex64,
    pub convention: Convention,
    pub s: Complex64,
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
}

impl SpectralParams {
    pub fn new(k: f64, lambda: Complex64) -> Self {
        Self::with_convention(k, lambda, Convention::default())
    }

    pub fn with_convention(k: f64, lambda: Complex64, convention: Convention) -> Self {
        let s = convention.s_of(lambda);
        let kappa = k.abs();
        SpectralParams { k, lambda, convention, s, a: s - kappa, b: s + kappa, c: s * 2.0 }
    }

    pub fn kappa(&self) -> f64 {
        self.k.abs()
    }
}

/// Geodesic distance r with y = cosh²(r/2) and y − 1 = sinh²(r/2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialArg {
    pub r: f64,
    pub y: f64,
    pub y_minus_1: f64,
}

impl RadialArg {
    pub fn new(r: f64) -> Result<Self> {
        if !(r >= 0.0 && r.is_finite()) {
            return Err(Error::Domain(format!("geodesic distance must be finite and >= 0, got {r}")));
        }
        Ok(RadialArg { r, y: (0.5 * r).cosh().powi(2), y_minus_1: (0.5 * r).sinh().powi(2) })
    }

    pub fn between(w: DiscPoint, w2: DiscPoint) -> Self {
        Self::new(distance(w, w2)).expect("distance is finite")
    }
}

/// A two-point kernel value factored as phase × radial amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelValue {
    pub phase: Complex64,
    pub radial: Complex64,
    pub value: Complex64,
}

impl KernelValue {
    pub fn new(phase: Complex64, radial: Complex64) -> Self {
        KernelValue { phase, radial, value: phase * radial }
    }
}

/// ln cosh x without overflow.
pub(crate) fn ln_cosh(x: f64) -> f64 {
    let a = x.abs();
    if a < 20.0 {
        a.cosh().ln()
    } else {
        a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
    }
}

/// ln sinh x for x > 0 without overflow.
pub(crate) fn ln_sinh(x: f64) -> f64 {
    if x < 20.0 {
        x.sinh().ln()
    } else {
        x + (-(-2.0 * x).exp()).ln_1p() - std::f64::consts::LN_2
    }
}

/// Γ(s − k)Γ(s + k)/(4πΓ(2s)).
pub fn resolvent_prefactor(s: Complex64, k: f64) -> Result<Complex64> {
    for z in [s - k, s + k, s * 2.0] {
        if nonpositive_integer(z).is_some() {
            return Err(Error::GammaPole(z));
        }
    }
    Ok((log_gamma(s - k)? + log_gamma(s + k)? - log_gamma(s * 2.0)?).exp() / (4.0 * PI))
}

/// Y^{−e} F(s − |k|, s + |k|; 2s; 1/Y) as a function of y = cosh²(r/2),
/// with Y = y or Y = cosh² r = (2y − 1)², without the Gamma prefactor.
/// `y_minus_1` must be y − 1 to full relative accuracy.
pub fn outgoing_profile_y(
    s: Complex64,
    kappa: f64,
    exponent: Complex64,
    argument: ArgumentVariant,
    y: f64,
    y_minus_1: f64,
    tol: f64,
) -> Result<Complex64> {
    let (ln_big, w, z) = match argument {
        ArgumentVariant::CoshSqHalfR => (y.ln(), y_minus_1 / y, 1.0 / y),
        ArgumentVariant::CoshSqR => {
            let c = 2.0 * y - 1.0;
            (2.0 * c.ln(), 4.0 * y * y_minus_1 / (c * c), 1.0 / (c * c))
        }
    };
    outgoing_from_parts(s, kappa, exponent, ln_big, w, z, tol)
}

fn outgoing_from_parts(
    s: Complex64,
    kappa: f64,
    exponent: Complex64,
    ln_big: f64,
    w: f64,
    z: f64,
    tol: f64,
) -> Result<Complex64> {
    let (a, b, c) = (s - kappa, s + kappa, s * 2.0);
    let f = if w < 0.5 {
        hyp2f1_one_minus(a, b, c, Complex64::new(w, 0.0), tol)?
    } else {
        gauss_2f1(&HyperParams::new(a, b, c, Complex64::new(z, 0.0)), tol)?
    };
    Ok((-exponent * ln_big).exp() * f)
}

/// The same profile as a function of r, free of overflow at large r.
pub fn outgoing_profile(
    s: Complex64,
    kappa: f64,
    exponent: Complex64,
    argument: ArgumentVariant,
    r: f64,
    tol: f64,
) -> Result<Complex64> {
    let x = match argument {
        ArgumentVariant::CoshSqHalfR => 0.5 * r,
        ArgumentVariant::CoshSqR => r,
    };
    let z = if x > 350.0 { 0.0 } else { x.cosh().powi(-2) };
    outgoing_from_parts(s, kappa, exponent, 2.0 * ln_cosh(x), x.tanh().powi(2), z, tol)
}

/// Radial resolvent kernel Γ(s−k)Γ(s+k)/(4πΓ(2s)) · Y^{−e} F(s−|k|, s+|k|; 2s; 1/Y)
/// with s, e and Y fixed by the convention carried in `sp`.
pub fn resolvent_radial(sp: &SpectralParams, ra: &RadialArg, tol: f64) -> Result<Complex64> {
    if ra.r == 0.0 {
        return Err(Error::Diagonal);
    }
    let pref = resolvent_prefactor(sp.s, sp.k)?;
    let exponent = match sp.convention.prefactor {
        PrefactorExponent::S => sp.s,
        PrefactorExponent::SPlusAbsK => sp.s + sp.kappa(),
    };
    Ok(pref * outgoing_profile(sp.s, sp.kappa(), exponent, sp.convention.argument, ra.r, tol)?)
}

/// The k = 0 resolvent Γ(s)²/(4πΓ(2s)) · Y^{−s} F(s, s; 2s; 1/Y).
pub fn free_resolvent(lambda: Complex64, ra: &RadialArg, convention: Convention, tol: f64) -> Result<Complex64> {
    resolvent_radial(&SpectralParams::with_convention(0.0, lambda, convention), ra, tol)
}

/// G_k(s, w, w′) = ((1 − w̄w′)/(1 − ww̄′))^k G_k(s, r(w, w′)).
pub fn resolvent_kernel(sp: &SpectralParams, w: DiscPoint, w2: DiscPoint, tol: f64) -> Result<KernelValue> {
    if w == w2 {
        return Err(Error::Diagonal);
    }
    let radial = resolvent_radial(sp, &RadialArg::between(w, w2), tol)?;
    Ok(KernelValue::new(phase_factor(sp.k, w, w2), radial))
}

/// arccosh(cosh(ρ/2)/cosh(r/2)) from r and δ = ρ − r, accurate as δ → 0.
fn ratio_arccosh(r: f64, delta: f64) -> f64 {
    let rho = r + delta;
    let ch = (0.5 * r).cosh();
    // x − 1 and √(x² − 1) with x = cosh(ρ/2)/cosh(r/2)
    let xm1 = 2.0 * (0.25 * (rho + r)).sinh() * (0.25 * delta).sinh() / ch;
    let root = ((0.5 * (rho + r)).sinh() * (0.5 * delta).sinh()).sqrt() / ch;
    (xm1 + root).ln_1p()
}

/// Δ = cosh²(ρ/2) − cosh²(r/2) = sinh((ρ+r)/2) sinh((ρ−r)/2).
fn wave_delta(r: f64, delta: f64) -> f64 {
    (0.5 * (2.0 * r + delta)).sinh() * (0.5 * delta).sinh()
}

/// W_k(r, ρ) for δ = ρ − r > 0.
pub fn wave_kernel_offset(k: f64, r: f64, delta: f64) -> Result<f64> {
    if !(delta > 0.0) {
        return Err(Error::Domain(format!("wave kernel needs rho > r, got rho - r = {delta}")));
    }
    let big = wave_delta(r, delta);
    let cos_form = (2.0 * k.abs() * ratio_arccosh(r, delta)).cosh();
    Ok(cos_form / (2.0 * PI * big.sqrt()))
}

/// W_k(r, ρ) = (1/2π)(cosh²(ρ/2) − cosh²(r/2))^{−1/2} F(|k|, −|k|; 1/2; 1 − cosh²(ρ/2)/cosh²(r/2)).
pub fn wave_kernel(k: f64, ra: &RadialArg, rho: f64) -> Result<f64> {
    if !(rho > ra.r) {
        return Err(Error::Domain(format!("wave kernel needs rho > r, got rho = {rho}, r = {}", ra.r)));
    }
    wave_kernel_offset(k, ra.r, rho - ra.r)
}

/// Smallest Im(σλ) for which the integral representation is evaluated:
/// W_k grows like e^{(|k| − 1/2)ρ}, so absolute convergence needs
/// Im(σλ) > |k| − 1/2; a margin of 0.1 keeps the tail short.
pub fn integral_envelope(k: f64) -> f64 {
    0.1 + (k.abs() - 0.5).max(0.0)
}

/// Normalization in front of the integral representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IntegralNormalization {
    /// 1/2
    Half,
    /// 1/(2iλ)
    InverseTwoILambda,
}

/// N · ∫_r^∞ W_k(r, ρ) e^{iσλρ} dρ.
pub fn wave_integral(
    k: f64,
    lambda: Complex64,
    r: f64,
    sign: ExponentSign,
    normalization: IntegralNormalization,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    if lambda == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("lambda must be nonzero".into()));
    }
    let sl = lambda * sign.sigma();
    let required = integral_envelope(k);
    if !(sl.im >= required) {
        return Err(Error::OutsideEnvelope { im: sl.im, required });
    }
    let integral = integrate_wave_tail_with(|_, d| Ok(Complex64::new(wave_kernel_offset(k, r, d)?, 0.0)), r, sl, spec)?;
    Ok(match normalization {
        IntegralNormalization::Half => integral.value * 0.5,
        IntegralNormalization::InverseTwoILambda => integral.value / (Complex64::i() * lambda * 2.0),
    })
}

/// G_k(λ, r) = ½ ∫_r^∞ W_k(r, ρ) e^{iσλρ} dρ with σ from the convention.
pub fn resolvent_via_integral(sp: &SpectralParams, ra: &RadialArg, spec: &QuadratureSpec) -> Result<Complex64> {
    if ra.r == 0.0 {
        return Err(Error::Diagonal);
    }
    wave_integral(sp.k, sp.lambda, ra.r, sp.convention.exponent, IntegralNormalization::Half, spec)
}

/// ln of the heat integrand e^{−(b² − r²)/4t} Δ^{−1/2} cosh(2|k| arccosh x) b at b = r + δ.
fn heat_log_integrand(kappa: f64, t: f64, r: f64, delta: f64) -> f64 {
    let b = r + delta;
    let ln_big = ln_sinh(0.5 * (b + r)) + ln_sinh(0.5 * delta);
    let arg = 2.0 * kappa * ratio_arccosh(r, delta);
    -delta * (b + r) / (4.0 * t) - 0.5 * ln_big + ln_cosh(arg) + b.ln()
}

/// Radial heat kernel (4πt)^{−3/2} ∫_r^∞ e^{−b²/4t} Δ^{−1/2} cosh(2|k| arccosh x) b db.
///
/// Real and positive for every real k; finite on the diagonal.
pub fn heat_radial(k: f64, t: f64, r: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("heat kernel needs t > 0, got {t}")));
    }
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("geodesic distance must be >= 0, got {r}")));
    }
    let kappa = k.abs();
    let ln_pref = -r * r / (4.0 * t) - 1.5 * (4.0 * PI * t).ln();
    if ln_pref < -800.0 {
        return Ok(0.0);
    }
    // the Gaussian confines the mass to δ ≲ 2t/r + √t
    let split = (8.0 * t / (2.0 * r + t.sqrt()) + 4.0 * t.sqrt()).min(1.0);
    let integral = integrate_endpoint_tail(
        |d| Ok(Complex64::new(heat_log_integrand(kappa, t, r, d).exp(), 0.0)),
        split,
        spec,
    )?;
    if integral.value.re <= 0.0 {
        return Ok(0.0);
    }
    Ok((ln_pref + integral.value.re.ln()).exp())
}

/// H_k(t, w, w′) = phase · heat_radial(k, t, r(w, w′)).
pub fn heat_kernel(k: f64, t: f64, w: DiscPoint, w2: DiscPoint, spec: &QuadratureSpec) -> Result<KernelValue> {
    let radial = heat_radial(k, t, distance(w, w2), spec)?;
    Ok(KernelValue::new(phase_factor(k, w, w2), Complex64::new(radial, 0.0)))
}

/// Initial data for the Cauchy problems: a function on the disc supported in
/// a geodesic ball.
pub trait InitialData {
    fn eval(&self, w: DiscPoint) -> Complex64;
    /// Center and geodesic radius of a ball containing the support.
    fn support(&self) -> (DiscPoint, f64);

    /// Euclidean radius of the smallest origin-centered disc containing the support.
    fn support_radius(&self) -> Result<f64> {
        let (c, rad) = self.support();
        let e = (0.5 * (distance(DiscPoint::origin(), c) + rad)).tanh();
        if e >= 1.0 - BOUNDARY_GUARD {
            return Err(Error::SupportTouchesBoundary(e));
        }
        Ok(e)
    }
}

/// Smooth bump amplitude·exp(1 − 1/(1 − (d/R)²)) in the geodesic distance d
/// from `center`; equals `amplitude` at the center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bump {
    pub center: DiscPoint,
    pub radius: f64,
    pub amplitude: Complex64,
}

impl Bump {
    pub fn new(center: DiscPoint, radius: f64, amplitude: f64) -> Self {
        Bump { center, radius, amplitude: Complex64::new(amplitude, 0.0) }
    }

    /// Profile as a function of the distance to the center.
    pub fn profile(&self, d: f64) -> f64 {
        let q = d / self.radius;
        if q >= 1.0 {
            0.0
        } else {
            (1.0 - 1.0 / (1.0 - q * q)).exp()
        }
    }
}

impl InitialData for Bump {
    fn eval(&self, w: DiscPoint) -> Complex64 {
        self.amplitude * self.profile(distance(self.center, w))
    }

    fn support(&self) -> (DiscPoint, f64) {
        (self.center, self.radius)
    }
}

/// Arbitrary data given by a closure and a declared support ball.
pub struct FnData<F: Fn(DiscPoint) -> Complex64> {
    pub f: F,
    pub center: DiscPoint,
    pub radius: f64,
}

impl<F: Fn(DiscPoint) -> Complex64> InitialData for FnData<F> {
    fn eval(&self, w: DiscPoint) -> Complex64 {
        (self.f)(w)
    }

    fn support(&self) -> (DiscPoint, f64) {
        (self.center, self.radius)
    }
}

/// Radial range [lo, hi] about `w` meeting the support ball of `data`.
fn support_shell(data: &dyn InitialData, w: DiscPoint) -> Result<(f64, f64)> {
    data.support_radius()?;
    let (c, rad) = data.support();
    let d = distance(w, c);
    Ok(((d - rad).max(0.0), d + rad))
}

/// u(t, w) = ∫ K_t(w, w′) u₁(w′) dμ(w′) for the kernel K_t of
/// sin(t√(−D_k))/√(−D_k), whose radial part is ½ W_k(r, t) for r < t.
pub fn apply_wave_propagator(
    k: f64,
    t: f64,
    u1: &dyn InitialData,
    w: DiscPoint,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("wave propagator needs t > 0, got {t}")));
    }
    let (lo, hi) = support_shell(u1, w)?;
    if lo >= t {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let top = hi.min(t);
    let singular_top = top == t;
    let res = geodesic_polar_integral_ball(
        w,
        lo,
        top,
        u1.support(),
        |r, to_top, p| {
            let delta = if singular_top { to_top } else { t - r };
            if delta <= 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            let kernel = 0.5 * wave_kernel_offset(k, r, delta)?;
            Ok(phase_factor(k, w, p) * u1.eval(p) * kernel)
        },
        spec,
    )?;
    Ok(res.value)
}

/// Heat semigroup e^{tD_k} with its radial kernel cached by distance.
pub struct HeatPropagator {
    pub k: f64,
    pub t: f64,
    pub spec: QuadratureSpec,
    cache: Mutex<HashMap<u64, f64>>,
}

impl HeatPropagator {
    pub fn new(k: f64, t: f64, spec: QuadratureSpec) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Domain(format!("heat propagator needs t > 0, got {t}")));
        }
        Ok(HeatPropagator { k, t, spec, cache: Mutex::new(HashMap::new()) })
    }

    /// Beyond this distance the kernel times the area growth is below e^{−40}
    /// of its peak.
    pub fn reach(&self) -> f64 {
        4.0 * self.t * (self.k.abs() + 0.5) + (160.0 * self.t).sqrt()
    }

    pub fn radial(&self, r: f64) -> Result<f64> {
        if r * r / (4.0 * self.t) > 745.0 + 2.0 * self.k.abs() * r {
            return Ok(0.0);
        }
        let key = r.to_bits();
        if let Some(v) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(*v);
        }
        // node values must be smoother than the outer rule's tolerance
        let inner = QuadratureSpec { tol: (self.spec.tol * 1e-3).max(1e-13), ..self.spec };
        let v = heat_radial(self.k, self.t, r, &inner)?;
        self.cache.lock().expect("cache lock").insert(key, v);
        Ok(v)
    }

    pub fn apply(&self, v0: &dyn InitialData, w: DiscPoint) -> Result<Complex64> {
        let (lo, hi) = support_shell(v0, w)?;
        let top = hi.min(self.reach());
        if lo >= top {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let k = self.k;
        let res = geodesic_polar_integral_ball(
            w,
            lo,
            top,
            v0.support(),
            |r, _, p| {
                let v = v0.eval(p);
                if v == Complex64::new(0.0, 0.0) {
                    return Ok(v);
                }
                Ok(phase_factor(k, w, p) * v * self.radial(r)?)
            },
            &self.spec,
        )?;
        Ok(res.value)
    }
}

/// v(t, w) = ∫ H_k(t, w, w′) v₀(w′) dμ(w′).
pub fn apply_heat_propagator(
    k: f64,
    t: f64,
    v0: &dyn InitialData,
    w: DiscPoint,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    HeatPropagator::new(k, t, *spec)?.apply(v0, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn close(a: Complex64, b: Complex64, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm()
    }

    #[test]
    fn spectral_params() {
        let sp = SpectralParams::new(1.5, Complex64::i());
        assert_eq!(sp.s, c(1.5));
        assert_eq!(sp.c - sp.a - sp.b, c(0.0));
        let alt = Convention { s: SConvention::OneMinusILambdaOver2, ..Convention::default() };
        assert_eq!(SpectralParams::with_convention(0.0, Complex64::i(), alt).s, c(1.0));
        assert_eq!(Convention::all().len(), 16);
        assert_eq!(Convention::all()[0], Convention::default());
    }

    #[test]
    fn radial_arg_identity() {
        let ra = RadialArg::new(1.3).unwrap();
        assert!((ra.y - 1.0 - ra.y_minus_1).abs() < 1e-15);
        assert!(RadialArg::new(-1.0).is_err());
    }

    #[test]
    fn free_resolvent_closed_form_at_s_one() {
        // λ = i/2 gives s = 1: G = -(1/4π) ln tanh²(r/2)
        let r = 0.9;
        let v = free_resolvent(Complex64::new(0.0, 0.5), &RadialArg::new(r).unwrap(), Convention::default(), 1e-14)
            .unwrap();
        let expected = -((0.5 * r).tanh().powi(2)).ln() / (4.0 * PI);
        assert!(close(v, c(expected), 1e-12), "{v} vs {expected}");
    }

    #[test]
    fn diagonal_and_poles() {
        let sp = SpectralParams::new(1.5, Complex64::i());
        assert!(matches!(resolvent_radial(&sp, &RadialArg::new(1.0).unwrap(), 1e-12), Err(Error::GammaPole(_))));
        let sp = SpectralParams::new(1.0, Complex64::i());
        assert!(matches!(resolvent_radial(&sp, &RadialArg::new(0.0).unwrap(), 1e-12), Err(Error::Diagonal)));
    }

    #[test]
    fn k_sign_symmetry() {
        let ra = RadialArg::new(0.8).unwrap();
        let lam = Complex64::new(0.3, 0.9);
        let a = resolvent_radial(&SpectralParams::new(1.3, lam), &ra, 1e-13).unwrap();
        let b = resolvent_radial(&SpectralParams::new(-1.3, lam), &ra, 1e-13).unwrap();
        assert!(close(a, b, 1e-13));
    }

    #[test]
    fn wave_kernel_values() {
        let ra = RadialArg::new(1.0).unwrap();
        let big = 1f64.cosh().powi(2) - 0.5f64.cosh().powi(2);
        let k0 = wave_kernel(0.0, &ra, 2.0).unwrap();
        assert!((k0 - 1.0 / (2.0 * PI * big.sqrt())).abs() < 1e-14);
        let k1 = wave_kernel(1.0, &ra, 2.0).unwrap();
        assert!((k1 / k0 - 2.745_26).abs() < 1e-4);
        assert!(wave_kernel(1.0, &ra, 1.0).is_err());
    }

    #[test]
    fn integral_matches_closed_form() {
        let spec = QuadratureSpec::with_tol(1e-10).unwrap();
        let ra = RadialArg::new(1.0).unwrap();
        for (k, lam) in [(0.0, Complex64::i()), (1.0, Complex64::new(0.4, 0.8)), (0.5, Complex64::new(0.3, 0.7))] {
            let sp = SpectralParams::new(k, lam);
            let closed = resolvent_radial(&sp, &ra, 1e-14).unwrap();
            let integral = resolvent_via_integral(&sp, &ra, &spec).unwrap();
            assert!(close(integral, closed, 1e-8), "k = {k}: {integral} vs {closed}");
        }
    }

    #[test]
    fn integral_rejects_outside_envelope() {
        let spec = QuadratureSpec::with_tol(1e-8).unwrap();
        let sp = SpectralParams::new(2.3, Complex64::i());
        let r = resolvent_via_integral(&sp, &RadialArg::new(1.0).unwrap(), &spec);
        assert!(matches!(r, Err(Error::OutsideEnvelope { .. })));
    }

    #[test]
    fn heat_radial_is_positive_and_decays_off_diagonal() {
        let spec = QuadratureSpec::with_tol(1e-10).unwrap();
        for t in [0.1, 1.0, 3.0] {
            for r in [0.0, 0.5, 2.0] {
                assert!(heat_radial(0.0, t, r, &spec).unwrap() > 0.0);
            }
        }
        let a = heat_radial(0.0, 0.05, 1.0, &spec).unwrap();
        let b = heat_radial(0.0, 0.025, 1.0, &spec).unwrap();
        assert!(b < a * 0.05);
        assert!(heat_radial(0.0, 0.0, 1.0, &spec).is_err());
    }

    #[test]
    fn bump_support() {
        let b = Bump::new(DiscPoint::origin(), 1.0, 2.0);
        assert_eq!(b.eval(DiscPoint::origin()), c(2.0));
        assert_eq!(b.eval(DiscPoint::polar(1.2, 0.3).unwrap()), c(0.0));
        let far = Bump::new(DiscPoint::polar(30.0, 0.0).unwrap_or(DiscPoint::origin()), 40.0, 1.0);
        assert!(far.support_radius().is_err());
    }

    #[test]
    fn wave_propagator_finite_speed() {
        let spec = QuadratureSpec::with_tol(1e-6).unwrap();
        let u1 = Bump::new(DiscPoint::polar(2.0, 0.0).unwrap(), 0.5, 1.0);
        let v = apply_wave_propagator(0.0, 1.0, &u1, DiscPoint::origin(), &spec).unwrap();
        assert_eq!(v, c(0.0));
    }
}
