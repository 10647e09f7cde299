//! Gauss hypergeometric function ₂F₁(a, b; c; z) for complex parameters.
//!
//! Strategy, by argument:
//!
//! * terminating series (a or b a non-positive integer): exact polynomial, any z;
//! * |z| ≤ 0.5: direct series;
//! * |z/(z-1)| ≤ 0.5: Pfaff transformation, then series;
//! * |1-z| ≤ 0.5: the z → 1-z connection formula, with the logarithmic
//!   expansions when c-a-b is an integer;
//! * |1/(1-z)| ≤ 0.5: Pfaff followed by the 1-z formula;
//! * |1/z| ≤ 0.5 and a-b not an integer: the z → 1/z connection formula;
//! * otherwise the best of the above with transformed modulus ≤ 0.8, and as a
//!   last resort analytic continuation by Taylor stepping along the
//!   hypergeometric ODE from a point where the series converges.
//!
//! Powers and logarithms use principal branches throughout.

use num_complex::Complex64;

use super::gamma::{digamma, log_gamma, nonpositive_integer, rgamma};
use crate::error::{Error, Result};

/// Iteration cap for every series in this module.
pub const MAX_TERMS: usize = 10_000;

/// Distance to an integer below which c-a-b is treated as integral.
pub const LOG_CASE_THRESHOLD: f64 = 1e-9;

const SERIES_RADIUS: f64 = 0.5;
const FALLBACK_RADIUS: f64 = 0.8;
/// Imaginary offset used to place a point on the cut on its declared side.
const CUT_NUDGE: f64 = 1e-100;

/// Side from which a point on the branch cut [1, ∞) is approached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutSide {
    Above,
    Below,
}

/// Evaluation region, decided from |z| alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Series,
    NearOne,
    NearInfinity,
    Intermediate,
}

/// Parameters of ₂F₁(a, b; c; z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperParams {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub z: Complex64,
    pub cut_side: Option<CutSide>,
}

impl HyperParams {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Self {
        HyperParams { a, b, c, z, cut_side: None }
    }

    pub fn real(a: f64, b: f64, c: f64, z: f64) -> Self {
        Self::new(a.into(), b.into(), c.into(), z.into())
    }

    pub fn with_side(mut self, side: CutSide) -> Self {
        self.cut_side = Some(side);
        self
    }

    pub fn region(&self) -> Region {
        let r = self.z.norm();
        if r <= SERIES_RADIUS {
            Region::Series
        } else if (Complex64::new(1.0, 0.0) - self.z).norm() <= SERIES_RADIUS {
            Region::NearOne
        } else if r >= 1.0 / SERIES_RADIUS {
            Region::NearInfinity
        } else {
            Region::Intermediate
        }
    }
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Integer nearest to `x`, if `x` is within `LOG_CASE_THRESHOLD` of it.
fn near_integer(x: Complex64) -> Option<i64> {
    let n = x.re.round();
    if x.im.abs() < LOG_CASE_THRESHOLD && (x.re - n).abs() < LOG_CASE_THRESHOLD {
        Some(n as i64)
    } else {
        None
    }
}

fn terminating_degree(a: Complex64, b: Complex64) -> Option<u64> {
    match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(m), Some(n)) => Some(m.min(n)),
        (Some(m), None) | (None, Some(m)) => Some(m),
        (None, None) => None,
    }
}

/// Partial sums of a power series with term recurrence `ratio(n)`, stopping
/// when three consecutive terms fall below `tol · |sum|`.
fn sum_series<R>(first: Complex64, tol: f64, mut ratio: R) -> Result<Complex64>
where
    R: FnMut(usize) -> Complex64,
{
    let mut term = first;
    let mut sum = first;
    let mut small = 0;
    for n in 0..MAX_TERMS {
        term *= ratio(n);
        sum += term;
        if term.norm() <= tol * sum.norm() || term == zero() {
            small += 1;
            if small >= 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::SeriesNotConverged { terms: MAX_TERMS })
}

/// Direct Gauss series. Exact polynomial when the series terminates.
pub(crate) fn series(a: Complex64, b: Complex64, c: Complex64, z: Complex64, tol: f64) -> Result<Complex64> {
    let degree = terminating_degree(a, b);
    if let Some(cn) = nonpositive_integer(c) {
        if degree.map_or(true, |d| d > cn) {
            return Err(Error::HyperPole(c));
        }
    }
    if let Some(d) = degree {
        let mut term = one();
        let mut sum = one();
        for n in 0..d {
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
            sum += term;
        }
        return Ok(sum);
    }
    if z == zero() {
        return Ok(one());
    }
    sum_series(one(), tol, |n| {
        let nf = n as f64;
        (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z
    })
}

fn lgamma_sum(plus: &[Complex64], minus: &[Complex64]) -> Result<Complex64> {
    let mut acc = zero();
    for &p in plus {
        acc += log_gamma(p)?;
    }
    for &m in minus {
        acc -= log_gamma(m)?;
    }
    Ok(acc)
}

/// Γ(num...) / Γ(den...) where the denominator gammas may sit on poles
/// (giving zero).
fn gamma_ratio(num: &[Complex64], den: &[Complex64]) -> Result<Complex64> {
    let mut value = lgamma_sum(num, &[])?.exp();
    for &d in den {
        value *= rgamma(d);
    }
    Ok(value)
}

/// 1/z without overflow in |z|² for |z| beyond 1e154.
fn scaled_inv(z: Complex64) -> Complex64 {
    let m = z.re.abs().max(z.im.abs());
    if m > 1e150 {
        (z / m).inv() / m
    } else {
        z.inv()
    }
}

/// F(a, b; a+b-m; z) through the logarithmic expansions about z = 1,
/// given w = 1 - z with 0 < |w| < 1.
pub(crate) fn log_case_w(a: Complex64, b: Complex64, m: u32, w: Complex64, tol: f64) -> Result<Complex64> {
    let c = a + b - m as f64;
    if terminating_degree(a, b).is_some() {
        return series(a, b, c, one() - w, tol);
    }
    if nonpositive_integer(c).is_some() {
        return Err(Error::HyperPole(c));
    }
    if w == zero() {
        return Err(Error::Domain("logarithmic case evaluated at z = 1".into()));
    }
    let ln_w = w.ln();
    let mut psi_a = digamma(a)?;
    let mut psi_b = digamma(b)?;
    if m == 0 {
        // Γ(a+b)/(Γ(a)Γ(b)) Σ (a)_n (b)_n/(n!)² [2ψ(n+1) - ψ(a+n) - ψ(b+n) - ln w] wⁿ
        let mut psi_n1 = Complex64::new(-0.577_215_664_901_532_9, 0.0);
        let mut coef = one();
        let mut sum = (psi_n1 * 2.0 - psi_a - psi_b - ln_w) * coef;
        let mut small = 0;
        let mut converged = false;
        for n in 0..MAX_TERMS {
            let nf = n as f64;
            coef *= (a + nf) * (b + nf) / ((nf + 1.0) * (nf + 1.0)) * w;
            psi_a += (a + nf).inv();
            psi_b += (b + nf).inv();
            psi_n1 += 1.0 / (nf + 1.0);
            let term = (psi_n1 * 2.0 - psi_a - psi_b - ln_w) * coef;
            sum += term;
            if term.norm() <= tol * sum.norm() {
                small += 1;
                if small >= 3 {
                    converged = true;
                    break;
                }
            } else {
                small = 0;
            }
        }
        if !converged {
            return Err(Error::SeriesNotConverged { terms: MAX_TERMS });
        }
        let pref = lgamma_sum(&[a + b], &[])?.exp() * rgamma(a) * rgamma(b);
        return Ok(pref * sum);
    }

    let mf = m as f64;
    // Finite part: Γ(m)Γ(c)/(Γ(a)Γ(b)) w^{-m} Σ_{n<m} (a-m)_n (b-m)_n / (n! (1-m)_n) wⁿ
    let mut finite = zero();
    let mut coef = one();
    for n in 0..m {
        let nf = n as f64;
        finite += coef;
        coef *= (a - mf + nf) * (b - mf + nf) / ((nf + 1.0) * (1.0 - mf + nf)) * w;
    }
    let finite = gamma_ratio(&[Complex64::new(mf, 0.0), c], &[a, b])? * w.powf(-mf) * finite;

    // Logarithmic part: (-1)^m Γ(c)/(Γ(a-m)Γ(b-m)) Σ (a)_n (b)_n/(n!(n+m)!) wⁿ
    //   × [ln w - ψ(n+1) - ψ(n+m+1) + ψ(a+n) + ψ(b+n)]
    let outer = gamma_ratio(&[c], &[a - mf, b - mf])?;
    if outer == zero() {
        return Ok(finite);
    }
    let euler = 0.577_215_664_901_532_9;
    let mut psi_n1 = Complex64::new(-euler, 0.0);
    let mut psi_nm1 = Complex64::new(-euler + (1..=m).map(|j| 1.0 / j as f64).sum::<f64>(), 0.0);
    let mut coef = Complex64::new(1.0 / (1..=m).map(|j| j as f64).product::<f64>(), 0.0);
    let mut sum = (ln_w - psi_n1 - psi_nm1 + psi_a + psi_b) * coef;
    let mut small = 0;
    let mut converged = false;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        coef *= (a + nf) * (b + nf) / ((nf + 1.0) * (nf + mf + 1.0)) * w;
        psi_a += (a + nf).inv();
        psi_b += (b + nf).inv();
        psi_n1 += 1.0 / (nf + 1.0);
        psi_nm1 += 1.0 / (nf + mf + 1.0);
        let term = (ln_w - psi_n1 - psi_nm1 + psi_a + psi_b) * coef;
        sum += term;
        if term.norm() <= tol * sum.norm() {
            small += 1;
            if small >= 3 {
                converged = true;
                break;
            }
        } else {
            small = 0;
        }
    }
    if !converged {
        return Err(Error::SeriesNotConverged { terms: MAX_TERMS });
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(finite - outer * sum * sign)
}

/// F(a, b; c; z) with w = 1 - z supplied directly, |w| < 1.
pub(crate) fn near_one(a: Complex64, b: Complex64, c: Complex64, w: Complex64, tol: f64) -> Result<Complex64> {
    if terminating_degree(a, b).is_some() {
        return series(a, b, c, one() - w, tol);
    }
    if nonpositive_integer(c).is_some() {
        return Err(Error::HyperPole(c));
    }
    let d = c - a - b;
    if let Some(m) = near_integer(d) {
        return if m <= 0 {
            log_case_w(a, b, (-m) as u32, w, tol)
        } else {
            // Euler: F(a,b;c;z) = w^m F(c-a, c-b; c; z), and c = (c-a)+(c-b)-m.
            Ok(w.powf(m as f64) * log_case_w(c - a, c - b, m as u32, w, tol)?)
        };
    }
    // Γ(c)Γ(c-a-b)/(Γ(c-a)Γ(c-b)) F(a,b;a+b-c+1;w) + w^{c-a-b} Γ(c)Γ(a+b-c)/(Γ(a)Γ(b)) F(c-a,c-b;c-a-b+1;w)
    let g1 = gamma_ratio(&[c, d], &[c - a, c - b])?;
    let g2 = gamma_ratio(&[c, -d], &[a, b])?;
    let mut value = zero();
    if g1 != zero() {
        value += g1 * series(a, b, one() - d, w, tol)?;
    }
    if g2 != zero() {
        value += g2 * w.powc(d) * series(c - a, c - b, d + 1.0, w, tol)?;
    }
    Ok(value)
}

/// z → 1/z connection formula; requires a - b not an integer.
fn inverse_z(a: Complex64, b: Complex64, c: Complex64, z: Complex64, tol: f64) -> Result<Complex64> {
    let inv = scaled_inv(z);
    let minus_z = -z;
    let g1 = gamma_ratio(&[c, b - a], &[b, c - a])?;
    let g2 = gamma_ratio(&[c, a - b], &[a, c - b])?;
    let mut value = zero();
    if g1 != zero() {
        value += g1 * minus_z.powc(-a) * series(a, a - c + 1.0, a - b + 1.0, inv, tol)?;
    }
    if g2 != zero() {
        value += g2 * minus_z.powc(-b) * series(b, b - c + 1.0, b - a + 1.0, inv, tol)?;
    }
    Ok(value)
}

/// Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)).
fn pfaff_series(a: Complex64, b: Complex64, c: Complex64, z: Complex64, tol: f64) -> Result<Complex64> {
    let w = one() - z;
    Ok(w.powc(-a) * series(a, c - b, c, z / (z - 1.0), tol)?)
}

/// Pfaff followed by the 1-z formula: 1 - z/(z-1) = 1/(1-z).
fn pfaff_near_one(a: Complex64, b: Complex64, c: Complex64, z: Complex64, tol: f64) -> Result<Complex64> {
    let w = one() - z;
    Ok(w.powc(-a) * near_one(a, c - b, c, scaled_inv(w), tol)?)
}

/// Taylor coefficients of a local solution of the hypergeometric ODE at `z0`
/// from F(z0) and F'(z0); returns (F, F') at `z0 + t`.
fn taylor_step(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z0: Complex64,
    f0: Complex64,
    f1: Complex64,
    t: Complex64,
    tol: f64,
) -> Result<(Complex64, Complex64)> {
    let p0 = z0 * (one() - z0);
    let p1 = one() - z0 * 2.0;
    let abp1 = a + b + 1.0;
    let q0 = c - abp1 * z0;
    let ab = a * b;
    let (mut prev, mut cur) = (f0, f1);
    let mut value = f0 + f1 * t;
    let mut deriv = f1;
    let mut tn = t; // t^{n+1} after each iteration
    let mut small = 0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let next = -((p1 * (nf * (nf + 1.0)) + q0 * (nf + 1.0)) * cur - (ab + abp1 * nf + nf * (nf - 1.0)) * prev)
            / (p0 * ((nf + 1.0) * (nf + 2.0)));
        deriv += next * tn * (nf + 2.0);
        tn *= t;
        let term = next * tn;
        value += term;
        if term.norm() <= tol * value.norm() && (next * tn).norm() <= tol * deriv.norm() * t.norm() {
            small += 1;
            if small >= 3 {
                return Ok((value, deriv));
            }
        } else {
            small = 0;
        }
        prev = cur;
        cur = next;
    }
    Err(Error::SeriesNotConverged { terms: MAX_TERMS })
}

fn distance_to_segment(p: Complex64, from: Complex64, to: Complex64) -> f64 {
    let d = to - from;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (p - from).norm();
    }
    let s = (((p - from) * d.conj()).re / len2).clamp(0.0, 1.0);
    (p - (from + d * s)).norm()
}

/// Analytic continuation along a polygonal path by Taylor stepping. The path
/// starts inside the series disc and detours around z = 1 on the side of z.
fn continuation(a: Complex64, b: Complex64, c: Complex64, z: Complex64, tol: f64) -> Result<Complex64> {
    let start = z / z.norm() * 0.45;
    let mut path = vec![start];
    if distance_to_segment(one(), start, z) < 0.3 {
        let side = if z.im < 0.0 { -1.0 } else { 1.0 };
        path.push(Complex64::new(1.0, 0.6 * side));
    }
    path.push(z);

    let mut f = series(a, b, c, start, tol)?;
    let mut df = if a * b == zero() {
        zero()
    } else {
        a * b / c * series(a + 1.0, b + 1.0, c + 1.0, start, tol)?
    };
    let mut here = start;
    for &target in &path[1..] {
        loop {
            let remaining = target - here;
            if remaining.norm() == 0.0 {
                break;
            }
            let radius = here.norm().min((one() - here).norm());
            let step = if remaining.norm() <= 0.5 * radius {
                remaining
            } else {
                remaining / remaining.norm() * (0.5 * radius)
            };
            let (nf, ndf) = taylor_step(a, b, c, here, f, df, step, tol)?;
            f = nf;
            df = ndf;
            here = if step == remaining { target } else { here + step };
        }
    }
    Ok(f)
}

fn dispatch(a: Complex64, b: Complex64, c: Complex64, z: Complex64, tol: f64) -> Result<Complex64> {
    let w = one() - z;
    let m_series = z.norm();
    if m_series <= SERIES_RADIUS {
        return series(a, b, c, z, tol);
    }
    let m_pfaff = z.norm() / w.norm();
    if m_pfaff <= SERIES_RADIUS {
        return pfaff_series(a, b, c, z, tol);
    }
    let m_one = w.norm();
    if m_one <= SERIES_RADIUS {
        return near_one(a, b, c, w, tol);
    }
    let m_pfaff_one = 1.0 / w.norm();
    if m_pfaff_one <= SERIES_RADIUS {
        return pfaff_near_one(a, b, c, z, tol);
    }
    let m_inv = 1.0 / z.norm();
    let inv_ok = near_integer(a - b).is_none();
    if m_inv <= SERIES_RADIUS && inv_ok {
        return inverse_z(a, b, c, z, tol);
    }
    let on_cut_side = z.re > 1.0 && z.im.abs() < 1e-3;
    let mut best: Option<(f64, u8)> = None;
    let candidates = [
        (m_series, 0u8, !on_cut_side),
        (m_pfaff, 1, !on_cut_side),
        (m_one, 2, true),
        (m_pfaff_one, 3, true),
        (m_inv, 4, inv_ok),
    ];
    for (m, id, ok) in candidates {
        if ok && m <= FALLBACK_RADIUS && best.map_or(true, |(bm, _)| m < bm) {
            best = Some((m, id));
        }
    }
    match best {
        Some((_, 0)) => series(a, b, c, z, tol),
        Some((_, 1)) => pfaff_series(a, b, c, z, tol),
        Some((_, 2)) => near_one(a, b, c, w, tol),
        Some((_, 3)) => pfaff_near_one(a, b, c, z, tol),
        Some(_) => inverse_z(a, b, c, z, tol),
        None => continuation(a, b, c, z, tol),
    }
}

/// ₂F₁(a, b; c; z) to relative accuracy `tol`.
///
/// Points on the cut [1, ∞) need a declared [`CutSide`], except z = 1 with
/// Re(c-a-b) > 0 (Gauss summation) and terminating series.
pub fn gauss_2f1(p: &HyperParams, tol: f64) -> Result<Complex64> {
    let HyperParams { a, b, c, z, cut_side } = *p;
    if let Some(d) = terminating_degree(a, b) {
        if nonpositive_integer(c).map_or(false, |cn| cn < d) {
            return Err(Error::HyperPole(c));
        }
        return series(a, b, c, z, tol);
    }
    if nonpositive_integer(c).is_some() {
        return Err(Error::HyperPole(c));
    }
    if z.im == 0.0 && z.re >= 1.0 {
        let d = c - a - b;
        if z.re == 1.0 && d.re > 0.0 {
            return gamma_ratio(&[c, d], &[c - a, c - b]);
        }
        let side = cut_side.ok_or(Error::BranchCut(z))?;
        let nudged = match side {
            CutSide::Above => Complex64::new(z.re, CUT_NUDGE),
            CutSide::Below => Complex64::new(z.re, -CUT_NUDGE),
        };
        return dispatch(a, b, c, nudged, tol);
    }
    dispatch(a, b, c, z, tol)
}

/// Convenience wrapper at tolerance 1e-15.
pub fn hyp2f1(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    gauss_2f1(&HyperParams::new(a, b, c, z), 1e-15)
}

/// F(a, b; c; 1 - w) for accurately known w (used near z = 1, where forming
/// z = 1 - w first would lose the small distance to the singular point).
pub fn hyp2f1_one_minus(a: Complex64, b: Complex64, c: Complex64, w: Complex64, tol: f64) -> Result<Complex64> {
    if terminating_degree(a, b).is_none() && w.norm() <= SERIES_RADIUS && w != zero() {
        if nonpositive_integer(c).is_some() {
            return Err(Error::HyperPole(c));
        }
        return near_one(a, b, c, w, tol);
    }
    gauss_2f1(&HyperParams::new(a, b, c, one() - w), tol)
}

/// F(a, b; a+b-m; z) by the logarithmic expansions about z = 1, for real
/// z in (0, 1).
pub fn gauss_2f1_log_case(a: Complex64, b: Complex64, m: i32, z: f64) -> Result<Complex64> {
    if m < 0 {
        return Err(Error::Domain(format!("log-case index m = {m} is negative")));
    }
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain(format!("log-case argument z = {z} is outside (0, 1)")));
    }
    if z == 0.0 {
        return Ok(one());
    }
    log_case_w(a, b, m as u32, Complex64::new(1.0 - z, 0.0), 1e-15)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn f(a: f64, b: f64, cc: f64, z: f64) -> Complex64 {
        gauss_2f1(&HyperParams::real(a, b, cc, z), 1e-15).unwrap()
    }

    fn close(x: Complex64, y: Complex64, rel: f64) -> bool {
        (x - y).norm() <= rel * y.norm().max(1e-300)
    }

    #[test]
    fn zero_argument_is_one() {
        assert_eq!(f(1.3, -0.2, 2.7, 0.0), c(1.0));
    }

    #[test]
    fn log_closed_form_at_half() {
        assert!(close(f(1.0, 1.0, 2.0, 0.5), c(2.0 * 2f64.ln()), 1e-14));
    }

    #[test]
    fn terminating_polynomial() {
        for z in [0.3, 1.0, 4.0, -7.5] {
            let expected = c(1.0 - 6.0 * z + 6.0 * z * z);
            assert!(close(f(-2.0, 3.0, 1.0, z), expected, 1e-14), "z = {z}");
        }
    }

    #[test]
    fn log_case_closed_form() {
        let v = gauss_2f1_log_case(c(1.0), c(1.0), 0, 0.9).unwrap();
        assert!(close(v, c(-(0.1f64).ln() / 0.9), 1e-13));
        assert!((v.re - 2.558_427_881).abs() < 1e-9);
        assert_eq!(gauss_2f1_log_case(c(0.4), c(2.0), 0, 0.0).unwrap(), c(1.0));
    }

    #[test]
    fn log_case_errors() {
        assert!(gauss_2f1_log_case(c(1.0), c(1.0), -1, 0.5).is_err());
        assert!(gauss_2f1_log_case(c(1.0), c(1.0), 0, 1.5).is_err());
    }

    #[test]
    fn log_case_agrees_with_series_inside_overlap() {
        // |1 - z| = 0.55 < 1: the expansion converges where the direct series does.
        let a = Complex64::new(0.3, 0.2);
        let b = Complex64::new(1.1, -0.4);
        for m in 0..4 {
            let cc = a + b - m as f64;
            let direct = series(a, b, cc, c(0.45), 1e-16).unwrap();
            let logc = gauss_2f1_log_case(a, b, m, 0.45).unwrap();
            assert!(close(logc, direct, 1e-11), "m = {m}: {logc} vs {direct}");
        }
    }

    #[test]
    fn cut_requires_side() {
        let p = HyperParams::real(1.0, 1.0, 2.0, 3.0);
        assert!(matches!(gauss_2f1(&p, 1e-15), Err(Error::BranchCut(_))));
        // -ln(1-z)/z at z = 3 ± i0 = -(ln 2 ∓ iπ)/3
        let above = gauss_2f1(&p.with_side(CutSide::Above), 1e-15).unwrap();
        let below = gauss_2f1(&p.with_side(CutSide::Below), 1e-15).unwrap();
        let expected = Complex64::new(-(2f64.ln()) / 3.0, std::f64::consts::PI / 3.0);
        assert!(close(above, expected, 1e-13), "{above}");
        assert!(close(below, expected.conj(), 1e-13), "{below}");
    }

    #[test]
    fn gauss_sum_at_one() {
        // F(1/2, 1/2; 2; 1) = Γ(2)Γ(1)/Γ(3/2)² = 4/π
        let v = f(0.5, 0.5, 2.0, 1.0);
        assert!(close(v, c(4.0 / std::f64::consts::PI), 1e-13));
    }

    #[test]
    fn pole_in_c() {
        let p = HyperParams::real(0.5, 0.5, -2.0, 0.1);
        assert!(matches!(gauss_2f1(&p, 1e-15), Err(Error::HyperPole(_))));
        // terminating before the pole is fine: F(-1, b; -2; z) = 1 + b z / 2
        let v = f(-1.0, 3.0, -2.0, 0.2);
        assert!(close(v, c(1.0 + 3.0 * 0.2 / 2.0), 1e-15));
    }

    #[test]
    fn regions() {
        assert_eq!(HyperParams::real(1.0, 1.0, 1.0, 0.3).region(), Region::Series);
        assert_eq!(HyperParams::real(1.0, 1.0, 1.0, 0.8).region(), Region::NearOne);
        assert_eq!(HyperParams::real(1.0, 1.0, 1.0, -5.0).region(), Region::NearInfinity);
        assert_eq!(HyperParams::real(1.0, 1.0, 1.0, -0.9).region(), Region::Intermediate);
    }

    #[test]
    fn continuation_reference_values() {
        // e^{iπ/3} is left at modulus 1 by every linear transformation.
        let z = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3);
        let v = hyp2f1(c(0.7), Complex64::new(0.2, 0.3), c(1.9), z).unwrap();
        assert!(close(v, Complex64::new(0.904_191_695_953_313_9, 0.087_240_250_113_695_94), 1e-12), "{v}");
        let direct = continuation(c(0.7), Complex64::new(0.2, 0.3), c(1.9), z, 1e-15).unwrap();
        assert!(close(direct, v, 1e-12));
    }

    #[test]
    fn transformed_reference_values() {
        let v = hyp2f1(Complex64::new(0.3, 1.0), c(-1.2), Complex64::new(0.4, -0.5), Complex64::new(-2.0, 3.0)).unwrap();
        assert!(close(v, Complex64::new(4.052_908_281_982_147, 8.134_935_069_084_088), 1e-12), "{v}");
        let v = hyp2f1(c(2.5), c(1.5), c(0.5), Complex64::new(0.9, 0.1)).unwrap();
        assert!(close(v, Complex64::new(-4139.407_911_683_839, 1307.554_151_578_718), 1e-11), "{v}");
        let below = gauss_2f1(&HyperParams::real(1.5, 2.5, 1.0, 5.0).with_side(CutSide::Below), 1e-15).unwrap();
        let above = gauss_2f1(&HyperParams::real(1.5, 2.5, 1.0, 5.0).with_side(CutSide::Above), 1e-15).unwrap();
        let reference = Complex64::new(-0.053_729_394_945_976_2, 0.011_132_627_982_806_71);
        assert!(close(above, reference, 1e-11) || close(below, reference, 1e-11), "{above} {below}");
        assert!(close(above, below.conj(), 1e-12));
    }
}
