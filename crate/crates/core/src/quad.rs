//! Quadrature: tanh-sinh on finite intervals, semi-infinite integrals with an
//! inverse-square-root endpoint, Laplace transforms and hyperbolic-area
//! integrals in geodesic polar coordinates.

use std::cell::Cell;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geom::{distance, mobius_apply, mobius_g, DiscPoint, BOUNDARY_GUARD};

/// Largest abscissa parameter t of the tanh-sinh rule. Beyond it every node
/// is closer to an endpoint than the smallest double.
const T_MAX: f64 = 6.5;
const MIN_LEVELS: u32 = 3;
/// Far-field segment widths double every two segments up to this cap.
const MAX_SEGMENT: f64 = 32.0;
/// The far field gives up beyond this offset from the singular endpoint.
pub const MAX_OFFSET: f64 = 1000.0;
const MAX_ANGULAR_NODES: usize = 4096;

/// Rule parameters shared by every engine in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Target relative error.
    pub tol: f64,
    /// Maximum number of step halvings of the tanh-sinh rule.
    pub max_levels: u32,
    /// Semi-infinite integrals stop once the integrand magnitude falls below
    /// this fraction of its running peak.
    pub truncation_threshold: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { tol: 1e-10, max_levels: 12, truncation_threshold: 1e-16 }
    }
}

impl QuadratureSpec {
    pub fn new(tol: f64, max_levels: u32, truncation_threshold: f64) -> Result<Self> {
        let spec = QuadratureSpec { tol, max_levels, truncation_threshold };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_tol(tol: f64) -> Result<Self> {
        Self::new(tol, 12, 1e-16)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol >= 1e-14 && self.tol < 1.0) {
            return Err(Error::InvalidSpec(format!("tol = {} outside [1e-14, 1)", self.tol)));
        }
        if self.max_levels == 0 || self.max_levels > 12 {
            return Err(Error::InvalidSpec(format!("max_levels = {} outside 1..=12", self.max_levels)));
        }
        if !(self.truncation_threshold > 0.0 && self.truncation_threshold < 1.0) {
            return Err(Error::InvalidSpec(format!(
                "truncation_threshold = {} outside (0, 1)",
                self.truncation_threshold
            )));
        }
        Ok(())
    }
}

/// An integral estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    /// Estimated absolute error.
    pub error: f64,
    /// Estimate of the integral of the modulus.
    pub abs: f64,
}

impl QuadResult {
    fn zero() -> Self {
        QuadResult { value: Complex64::new(0.0, 0.0), error: 0.0, abs: 0.0 }
    }

    fn add(&mut self, other: &QuadResult) {
        self.value += other.value;
        self.error += other.error;
        self.abs += other.abs;
    }
}

fn finite(v: Complex64, x: f64) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(format!("integrand is not finite at x = {x:e}")))
    }
}

/// Tanh-sinh quadrature with complement-aware nodes.
///
/// The integrand receives `(x, x - a, b - x)`, the last two computed without
/// cancellation, so endpoint singularities can be evaluated accurately.
pub fn tanh_sinh_try<F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: Fn(f64, f64, f64) -> Result<Complex64>,
{
    spec.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!("tanh_sinh needs finite limits, got [{a}, {b}]")));
    }
    if a == b {
        return Ok(QuadResult::zero());
    }
    if a > b {
        let r = tanh_sinh_try(f, b, a, spec)?;
        return Ok(QuadResult { value: -r.value, ..r });
    }
    let half = 0.5 * (b - a);
    let mid = a + half;

    // Sum of w·f and w·|f| over the node pair ±t, with w the weight in t.
    let pair = |t: f64| -> Result<(Complex64, f64)> {
        let u = FRAC_PI_2 * t.sinh();
        let e = (-2.0 * u).exp();
        let w = FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
        // distance of the +t node to b (equal to the distance of the −t node to a)
        let near = 2.0 * half * e / (1.0 + e);
        if w == 0.0 || near == 0.0 {
            return Ok((Complex64::new(0.0, 0.0), 0.0));
        }
        let far = 2.0 * half - near;
        let xp = b - near;
        let xm = a + near;
        let fp = finite(f(xp, far, near)?, xp)?;
        let fm = finite(f(xm, near, far)?, xm)?;
        Ok(((fp + fm) * w, (fp.norm() + fm.norm()) * w))
    };

    let f0 = finite(f(mid, half, half)?, mid)?;
    let mut sum = f0 * FRAC_PI_2;
    let mut abs = f0.norm() * FRAC_PI_2;
    let mut j = 1;
    while j as f64 <= T_MAX {
        let (s, m) = pair(j as f64)?;
        sum += s;
        abs += m;
        j += 1;
    }
    let mut h = 1.0;
    let mut prev = sum * h * half;
    let mut best = QuadResult { value: prev, error: f64::INFINITY, abs: abs * half };
    let min_levels = MIN_LEVELS.min(spec.max_levels);
    for level in 1..=spec.max_levels {
        h *= 0.5;
        let mut j = 1usize;
        loop {
            let t = j as f64 * h;
            if t > T_MAX {
                break;
            }
            let (s, m) = pair(t)?;
            sum += s;
            abs += m;
            j += 2;
        }
        let value = sum * h * half;
        let abs_est = abs * h * half;
        let diff = (value - prev).norm();
        best = QuadResult { value, error: diff, abs: abs_est };
        if level >= min_levels && diff <= spec.tol * abs_est {
            return Ok(best);
        }
        prev = value;
    }
    Err(Error::QuadratureNotConverged { estimate: best.value, error: best.error })
}

/// Tanh-sinh quadrature of ∫_a^b f(x) dx.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    tanh_sinh_try(|x, _, _| Ok(f(x)), a, b, spec)
}

/// ∫_0^∞ g(δ) dδ for g with at worst a δ^{-1/2} singularity at 0.
///
/// The near field [0, split] is integrated after δ = u²; the far field in
/// segments of growing width until the mean of |g| on a segment drops below
/// `truncation_threshold` times its running peak.
pub fn integrate_endpoint_tail<G>(g: G, split: f64, spec: &QuadratureSpec) -> Result<QuadResult>
where
    G: Fn(f64) -> Result<Complex64>,
{
    spec.validate()?;
    if !(split > 0.0 && split.is_finite()) {
        return Err(Error::Domain(format!("split point must be positive, got {split}")));
    }
    let mut total = tanh_sinh_try(
        |u, _, _| {
            let d = u * u;
            // the integrand is O(1) in u, so nodes below 1e-150 carry nothing
            if u < 1e-150 {
                Ok(Complex64::new(0.0, 0.0))
            } else {
                Ok(g(d)? * (2.0 * u))
            }
        },
        0.0,
        split.sqrt(),
        spec,
    )?;
    let mut peak = total.abs / split;
    let mut lo = split;
    let mut width = 1.0_f64;
    let mut count = 0u32;
    loop {
        if lo - split > MAX_OFFSET {
            return Err(Error::TruncationNotReached { reached: lo });
        }
        let hi = lo + width;
        let seg = tanh_sinh_try(|x, _, _| g(x), lo, hi, spec)?;
        total.add(&seg);
        let mean = seg.abs / width;
        peak = peak.max(mean);
        if mean <= spec.truncation_threshold * peak {
            total.error += seg.abs;
            return Ok(total);
        }
        lo = hi;
        count += 1;
        if count % 2 == 0 {
            width = (2.0 * width).min(MAX_SEGMENT);
        }
    }
}

/// ∫_r^∞ f(ρ, ρ − r) e^{iλρ} dρ with Im λ > 0, where f may carry a
/// (ρ − r)^{-1/2} singularity. The second argument is the offset ρ − r.
pub fn integrate_wave_tail_split<F>(
    f: F,
    r: f64,
    lambda: Complex64,
    split: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult>
where
    F: Fn(f64, f64) -> Result<Complex64>,
{
    if !(lambda.im > 0.0) {
        return Err(Error::Domain(format!("integrate_wave_tail needs Im(lambda) > 0, got {lambda}")));
    }
    let i = Complex64::i();
    let base = (i * lambda * r).exp();
    let res = integrate_endpoint_tail(|d| Ok(f(r + d, d)? * (i * lambda * d).exp()), split, spec)?;
    let scale = base.norm();
    Ok(QuadResult { value: res.value * base, error: res.error * scale, abs: res.abs * scale })
}

/// Offset-aware form of [`integrate_wave_tail`] with the default split.
pub fn integrate_wave_tail_with<F>(f: F, r: f64, lambda: Complex64, spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: Fn(f64, f64) -> Result<Complex64>,
{
    integrate_wave_tail_split(f, r, lambda, 1.0, spec)
}

/// ∫_r^∞ f(ρ) e^{iλρ} dρ with Im λ > 0.
pub fn integrate_wave_tail<F>(f: F, r: f64, lambda: Complex64, spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    integrate_wave_tail_split(|rho, _| Ok(f(rho)), r, lambda, 1.0, spec)
}

/// ∫_0^∞ e^{-pt} f(t) dt for Re p > 0, using t = τ² on [0, 1].
pub fn laplace_integral_try<F>(f: F, p: Complex64, spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if !(p.re > 0.0) {
        return Err(Error::Domain(format!("laplace_integral needs Re(p) > 0, got {p}")));
    }
    integrate_endpoint_tail(
        |t| {
            let damp = (-p * t).exp();
            if damp == Complex64::new(0.0, 0.0) {
                return Ok(damp);
            }
            Ok(f(t)? * damp)
        },
        1.0,
        spec,
    )
}

pub fn laplace_integral<F>(f: F, p: Complex64, spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: Fn(f64) -> Complex64,
{
    laplace_integral_try(|t| Ok(f(t)), p, spec)
}

/// Periodic trapezoid rule in θ, doubled until stable. `floor` is an absolute
/// error level below which differences are ignored.
fn angular<F>(f: F, tol: f64, running_max: &Cell<f64>) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let mut n = 16usize;
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let v = f(TAU * j as f64 / n as f64)?;
        running_max.set(running_max.get().max(v.norm()));
        sum += v;
    }
    let mut value = sum * (TAU / n as f64);
    while n < MAX_ANGULAR_NODES {
        for j in 0..n {
            let v = f(TAU * (2 * j + 1) as f64 / (2 * n) as f64)?;
            running_max.set(running_max.get().max(v.norm()));
            sum += v;
        }
        n *= 2;
        let next = sum * (TAU / n as f64);
        let diff = (next - value).norm();
        value = next;
        if diff <= tol * next.norm().max(TAU * running_max.get()) {
            return Ok(value);
        }
    }
    Err(Error::QuadratureNotConverged { estimate: value, error: f64::NAN })
}

/// ∫∫ f(r, r_max − r, g_c·(tanh(r/2)e^{iθ})) sinh r dθ dr over r ∈ [r_min, r_max],
/// the hyperbolic area integral over a geodesic annulus about `center`.
pub fn geodesic_polar_integral<F>(
    center: DiscPoint,
    r_min: f64,
    r_max: f64,
    f: F,
    spec: &QuadratureSpec,
) -> Result<QuadResult>
where
    F: Fn(f64, f64, DiscPoint) -> Result<Complex64>,
{
    if !(r_min >= 0.0 && r_max >= r_min) {
        return Err(Error::Domain(format!("invalid radial range [{r_min}, {r_max}]")));
    }
    if r_max == r_min {
        return Ok(QuadResult::zero());
    }
    let g = mobius_g(center);
    let running_max = Cell::new(0.0_f64);
    tanh_sinh_try(
        |r, _, to_max| {
            let rho = (0.5 * r).tanh();
            if rho >= 1.0 - BOUNDARY_GUARD {
                return Err(Error::SupportTouchesBoundary(rho));
            }
            let s = r.sinh();
            let ang = angular(
                |theta| {
                    let p = mobius_apply(&g, DiscPoint::new(Complex64::from_polar(rho, theta))?);
                    f(r, to_max, p)
                },
                spec.tol,
                &running_max,
            )?;
            Ok(ang * s)
        },
        r_min,
        r_max,
        spec,
    )
}

/// [`geodesic_polar_integral`] for integrands supported in the geodesic ball
/// `support`: each circle is integrated only over its arc inside the ball, so
/// circles that graze the ball are still resolved.
pub fn geodesic_polar_integral_ball<F>(
    center: DiscPoint,
    r_min: f64,
    r_max: f64,
    support: (DiscPoint, f64),
    f: F,
    spec: &QuadratureSpec,
) -> Result<QuadResult>
where
    F: Fn(f64, f64, DiscPoint) -> Result<Complex64>,
{
    if !(r_min >= 0.0 && r_max >= r_min) {
        return Err(Error::Domain(format!("invalid radial range [{r_min}, {r_max}]")));
    }
    if r_max == r_min {
        return Ok(QuadResult::zero());
    }
    let g = mobius_g(center);
    let (c, rad) = support;
    let d = distance(center, c);
    let theta_c = mobius_apply(&g.inverse(), c).w().arg();
    let running_max = Cell::new(0.0_f64);
    tanh_sinh_try(
        |r, _, to_max| {
            let rho = (0.5 * r).tanh();
            if rho >= 1.0 - BOUNDARY_GUARD {
                return Err(Error::SupportTouchesBoundary(rho));
            }
            let at = |theta: f64| -> Result<Complex64> {
                let p = mobius_apply(&g, DiscPoint::new(Complex64::from_polar(rho, theta))?);
                f(r, to_max, p)
            };
            // half-angle α of the arc: cosh R = cosh d cosh r − sinh d sinh r cos α
            let cos_a = if d == 0.0 {
                if r < rad { -2.0 } else { 2.0 }
            } else {
                (d.cosh() * r.cosh() - rad.cosh()) / (d.sinh() * r.sinh())
            };
            if cos_a >= 1.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            let ang = if cos_a <= -1.0 {
                angular(at, spec.tol, &running_max)?
            } else {
                let alpha = cos_a.acos();
                tanh_sinh_try(|theta, _, _| at(theta), theta_c - alpha, theta_c + alpha, spec)?.value
            };
            Ok(ang * r.sinh())
        },
        r_min,
        r_max,
        spec,
    )
}

/// ∫_D f dμ for the hyperbolic area element 4(1 − |w|²)^{-2} dA, with f
/// supported in the Euclidean disc |w| ≤ `support`.
pub fn disc_integral<F>(f: F, support: f64, spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: Fn(DiscPoint) -> Complex64,
{
    if !(support < 1.0 - BOUNDARY_GUARD) {
        return Err(Error::SupportTouchesBoundary(support));
    }
    let r_max = 2.0 * support.max(0.0).atanh();
    geodesic_polar_integral(DiscPoint::origin(), 0.0, r_max, |_, _, p| Ok(f(p)), spec)
}

/// Area of a geodesic ball, 4π sinh²(R/2).
pub fn ball_area(radius: f64) -> f64 {
    4.0 * PI * (0.5 * radius).sinh().powi(2)
}
