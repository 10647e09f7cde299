//! Poincaré disc model: distance, the SU(1,1) action and the automorphic phase.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Points closer than this to the unit circle are rejected.
pub const BOUNDARY_GUARD: f64 = 1e-12;

/// Tolerance on |A|² − |B|² = 1.
pub const GROUP_TOL: f64 = 1e-12;

/// A point of the open unit disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscPoint(Complex64);

impl DiscPoint {
    pub fn new(w: Complex64) -> Result<Self> {
        if !(w.norm() < 1.0 - BOUNDARY_GUARD) {
            return Err(Error::OutsideDisc(w));
        }
        Ok(DiscPoint(w))
    }

    pub fn from_parts(re: f64, im: f64) -> Result<Self> {
        Self::new(Complex64::new(re, im))
    }

    pub fn origin() -> Self {
        DiscPoint(Complex64::new(0.0, 0.0))
    }

    /// The point at geodesic distance `r` from the origin in direction `theta`.
    pub fn polar(r: f64, theta: f64) -> Result<Self> {
        Self::new(Complex64::from_polar((0.5 * r).tanh(), theta))
    }

    pub fn w(&self) -> Complex64 {
        self.0
    }
}

/// An element [[A, B̄], [B, Ā]] of SU(1,1), acting by z ↦ (Az + B̄)/(Bz + Ā).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub a: Complex64,
    pub b: Complex64,
}

impl GroupElement {
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        let det = a.norm_sqr() - b.norm_sqr();
        if (det - 1.0).abs() > GROUP_TOL {
            return Err(Error::NotInGroup(det));
        }
        Ok(GroupElement { a, b })
    }

    pub fn identity() -> Self {
        GroupElement { a: Complex64::new(1.0, 0.0), b: Complex64::new(0.0, 0.0) }
    }

    /// Rotation z ↦ e^{iθ} z.
    pub fn rotation(theta: f64) -> Self {
        GroupElement { a: Complex64::from_polar(1.0, 0.5 * theta), b: Complex64::new(0.0, 0.0) }
    }

    /// Matrix product self · other.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        // [[A, B̄], [B, Ā]] [[A', B̄'], [B', Ā']]
        GroupElement {
            a: self.a * other.a + self.b.conj() * other.b,
            b: self.b * other.a + self.a.conj() * other.b,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement { a: self.a.conj(), b: -self.b }
    }

    /// Bottom row (C, D) = (B, Ā) of the matrix.
    pub fn bottom_row(&self) -> (Complex64, Complex64) {
        (self.b, self.a.conj())
    }
}

/// |1 − w w̄₂|² / ((1 − |w|²)(1 − |w₂|²)) = cosh²(d/2).
pub fn cosh2_half_distance(w: DiscPoint, w2: DiscPoint) -> f64 {
    let num = (Complex64::new(1.0, 0.0) - w.0 * w2.0.conj()).norm_sqr();
    let den = (1.0 - w.0.norm_sqr()) * (1.0 - w2.0.norm_sqr());
    (num / den).max(1.0)
}

/// sinh²(d/2) = |w − w₂|² / ((1 − |w|²)(1 − |w₂|²)), free of the cancellation
/// in cosh² − 1 at short range.
pub fn sinh2_half_distance(w: DiscPoint, w2: DiscPoint) -> f64 {
    let num = (w.0 - w2.0).norm_sqr();
    let den = (1.0 - w.0.norm_sqr()) * (1.0 - w2.0.norm_sqr());
    num / den
}

/// Hyperbolic distance for the metric 2|dw|/(1 − |w|²).
pub fn distance(w: DiscPoint, w2: DiscPoint) -> f64 {
    if w == w2 {
        return 0.0;
    }
    // arccosh(√y) written through sinh to keep short distances accurate
    2.0 * sinh2_half_distance(w, w2).sqrt().asinh()
}

/// The element g_w with g_w · 0 = w.
pub fn mobius_g(w: DiscPoint) -> GroupElement {
    let n = (1.0 - w.0.norm_sqr()).sqrt();
    GroupElement { a: Complex64::new(1.0 / n, 0.0), b: w.0.conj() / n }
}

/// z ↦ (Az + B̄)/(Bz + Ā).
pub fn mobius_apply(g: &GroupElement, z: DiscPoint) -> DiscPoint {
    let v = (g.a * z.0 + g.b.conj()) / (g.b * z.0 + g.a.conj());
    // The action preserves the disc; rounding can only push |v| up by ulps.
    let r = v.norm();
    if r >= 1.0 - BOUNDARY_GUARD {
        DiscPoint(v * ((1.0 - 2.0 * BOUNDARY_GUARD) / r))
    } else {
        DiscPoint(v)
    }
}

/// Orientation of the two-point phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PhaseOrientation {
    /// ((1 − w̄w′)/(1 − ww̄′))^k
    ConjFirst,
    /// ((1 − ww̄′)/(1 − w̄w′))^k
    ConjSecond,
}

impl PhaseOrientation {
    pub fn label(&self) -> &'static str {
        match self {
            PhaseOrientation::ConjFirst => "(1-conj(w)w')/(1-w conj(w'))",
            PhaseOrientation::ConjSecond => "(1-w conj(w'))/(1-conj(w)w')",
        }
    }
}

/// Unimodular phase ((1 − w̄w′)/(1 − ww̄′))^k on the principal branch.
///
/// Since Re(1 − w w̄′) > 0 in the disc, the quotient is exp(2i·k·arg(1 − w̄w′))
/// with |arg| < π/2, so the principal power is continuous in both points.
pub fn phase_factor(k: f64, w: DiscPoint, w2: DiscPoint) -> Complex64 {
    phase_factor_oriented(k, w, w2, PhaseOrientation::ConjFirst)
}

pub fn phase_factor_oriented(k: f64, w: DiscPoint, w2: DiscPoint, orientation: PhaseOrientation) -> Complex64 {
    if k == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let base = Complex64::new(1.0, 0.0) - w.0.conj() * w2.0;
    let angle = 2.0 * k * base.arg();
    match orientation {
        PhaseOrientation::ConjFirst => Complex64::from_polar(1.0, angle),
        PhaseOrientation::ConjSecond => Complex64::from_polar(1.0, -angle),
    }
}

/// Automorphic factor J_k(g, w) = (conj(Cw + D)/(Cw + D))^k.
pub fn automorphic_factor(k: f64, g: &GroupElement, w: DiscPoint) -> Complex64 {
    let (c, d) = g.bottom_row();
    let q = c * w.0 + d;
    (q.conj() / q).powf(k)
}

/// | |J(g₁g₂, z)| / (|J(g₁, g₂z)|·|J(g₂, z)|) − 1 |.
pub fn cocycle_modulus_check(k: f64, g1: &GroupElement, g2: &GroupElement, z: DiscPoint) -> f64 {
    let lhs = automorphic_factor(k, &g1.compose(g2), z).norm();
    let rhs = automorphic_factor(k, g1, mobius_apply(g2, z)).norm() * automorphic_factor(k, g2, z).norm();
    (lhs / rhs - 1.0).abs()
}
