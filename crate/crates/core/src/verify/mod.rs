//! Numerical oracles for the identities the kernels rest on, plus the
//! convention resolver.
//!
//! Every check returns a [`ResidualReport`]; suites bundle them for the CLI.

mod conventions;
mod identities;
mod ode;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::geom::{cocycle_modulus_check, DiscPoint, GroupElement};
use crate::kernels::{resolvent_radial, resolvent_via_integral, integral_envelope, RadialArg, SpectralParams};
use crate::quad::QuadratureSpec;

pub use conventions::{
    phase_orientation_residual, resolve_conventions, AuxiliaryVerdict, CandidateScore, ConventionVerdict, ProbeSet,
    SANITY_THRESHOLD,
};
pub use identities::{
    asymptotics_check, chebyshev_hypergeometric_check, chebyshev_probe_pairs, chebyshev_specialization_check,
    decay_ratio, decay_ratio_printed, derivative_constant, euler_integral_check, euler_transformation_check,
    exp_formula_check, fractional_i_corrected, fractional_i_integral, fractional_i_printed, fractional_identity_i_check,
    fractional_identity_ii_check, fractional_ii_lhs, fractional_ii_rhs, heat_laplace_transform, laplace_pair_check,
    laplace_variable_residual, log_law_limit, resolvent_heat_laplace_check, subordination_scalar_check,
    weyl_step_check, InnerParameter, LaplaceVariable, LemmaExponent,
};
pub use ode::{
    green_pairing, green_pairing_report, helmholtz_refinement_order, helmholtz_residual, helmholtz_solution_residual,
    log_kernel, outgoing_solution, radial_dk_apply, radial_operator_apply, regular_solution, HelmholtzSolution,
    RadialBump, RegularThirdParameter, Step, HELMHOLTZ_TOL, PAIRING_TOL,
};

/// Outcome of one identity check at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    pub identity: String,
    pub parameters: serde_json::Value,
    /// Non-finite residuals serialize as null.
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ResidualReport {
    pub fn new(identity: impl Into<String>, parameters: serde_json::Value, residual: f64, tolerance: f64) -> Self {
        ResidualReport {
            identity: identity.into(),
            parameters,
            residual,
            tolerance,
            pass: residual <= tolerance,
            note: None,
        }
    }

    /// Negative control: passes when the rejected form misses by at least
    /// three orders of magnitude more than the accepted one (or its tolerance).
    /// The residual is that ratio inverted, scaled so that 1 is the boundary.
    pub fn separation(
        identity: impl Into<String>,
        parameters: serde_json::Value,
        accepted: f64,
        tolerance: f64,
        rejected: f64,
    ) -> Self {
        let floor = accepted.max(tolerance);
        let residual = if rejected.is_nan() { f64::INFINITY } else { floor * 1e3 / rejected };
        ResidualReport::new(identity, parameters, residual, 1.0)
            .with_note(format!("rejected form residual {rejected:.3e} (negative control)"))
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// A failed check: the error becomes the note, the residual is infinite.
    pub fn from_error(identity: impl Into<String>, parameters: serde_json::Value, tolerance: f64, err: &Error) -> Self {
        ResidualReport::new(identity, parameters, f64::INFINITY, tolerance).with_note(err.to_string())
    }
}

/// Named groups of checks run by `verify --suite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Suite {
    Hypergeometric,
    Geometry,
    Ode,
    Pairing,
    Integral,
    Chebyshev,
    Fractional,
    Heat,
    Asymptotics,
    Conventions,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Hypergeometric,
        Suite::Geometry,
        Suite::Ode,
        Suite::Pairing,
        Suite::Integral,
        Suite::Chebyshev,
        Suite::Fractional,
        Suite::Heat,
        Suite::Asymptotics,
        Suite::Conventions,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Hypergeometric => "hypergeometric",
            Suite::Geometry => "geometry",
            Suite::Ode => "ode",
            Suite::Pairing => "pairing",
            Suite::Integral => "integral",
            Suite::Chebyshev => "chebyshev",
            Suite::Fractional => "fractional",
            Suite::Heat => "heat",
            Suite::Asymptotics => "asymptotics",
            Suite::Conventions => "conventions",
        }
    }

    /// Suites selected by a name; `all` selects every suite.
    pub fn parse(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Suite::ALL
            .iter()
            .find(|s| s.name() == name)
            .map(|s| vec![*s])
            .ok_or_else(|| Error::InvalidSpec(format!("unknown suite '{name}'")))
    }
}

/// Machine-readable verification output.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub version: &'static str,
    pub suites: Vec<&'static str>,
    pub reports: Vec<ResidualReport>,
    pub all_pass: bool,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn collect(out: &mut Vec<ResidualReport>, name: &str, params: serde_json::Value, tol: f64, r: Result<ResidualReport>) {
    match r {
        Ok(rep) => out.push(rep),
        Err(e) => out.push(ResidualReport::from_error(name, params, tol, &e)),
    }
}

fn collect_many(
    out: &mut Vec<ResidualReport>,
    name: &str,
    params: serde_json::Value,
    tol: f64,
    r: Result<Vec<ResidualReport>>,
) {
    match r {
        Ok(reps) => out.extend(reps),
        Err(e) => out.push(ResidualReport::from_error(name, params, tol, &e)),
    }
}

/// Probe values for the Helmholtz checks: k, λ and a y-grid on [1.1, 20].
pub const ODE_K: [f64; 4] = [0.0, 0.5, 1.0, 2.3];

pub fn ode_lambdas() -> [Complex64; 3] {
    [c(0.0, 1.0), c(0.5, 0.5), c(0.7, 0.0)]
}

pub fn ode_y_grid() -> Vec<f64> {
    (0..=20).map(|j| 1.1 * (20.0f64 / 1.1).powf(j as f64 / 20.0)).collect()
}

/// Integral-representation mismatch |via integral − closed form| / |closed form|.
pub fn integral_representation_check(k: f64, lambda: Complex64, r: f64, spec: &QuadratureSpec) -> Result<ResidualReport> {
    let sp = SpectralParams::new(k, lambda);
    let ra = RadialArg::new(r)?;
    let closed = resolvent_radial(&sp, &ra, 1e-15)?;
    let integral = resolvent_via_integral(&sp, &ra, spec)?;
    Ok(ResidualReport::new(
        "integral_representation",
        json!({"k": k, "lambda": [lambda.re, lambda.im], "r": r}),
        (integral - closed).norm() / closed.norm(),
        1e-6,
    ))
}

fn run_one(suite: Suite, spec: &QuadratureSpec) -> Result<Vec<ResidualReport>> {
    let mut out = Vec::new();
    match suite {
        Suite::Hypergeometric => {
            for (a, b, cc, z) in [
                (c(0.5, 0.0), c(1.0, 0.0), c(2.5, 0.0), 0.3),
                (c(1.0, 1.0), c(0.7, 0.0), c(2.0, 0.0), -0.5),
                (c(-0.3, 0.2), c(1.5, -0.5), c(3.0, 1.0), 0.8),
            ] {
                let p = json!({"a": [a.re, a.im], "b": [b.re, b.im], "c": [cc.re, cc.im], "z": z});
                collect(&mut out, "euler_integral", p.clone(), 1e-9, euler_integral_check(a, b, cc, z, spec));
                collect(&mut out, "euler_transformation", p, 1e-10, euler_transformation_check(a, b, cc, c(z, 0.0)));
            }
            for z in [c(0.3, 0.4), c(-2.0, 0.5), c(0.9, -0.1), c(5.0, 3.0)] {
                let (a, b, cc) = (c(0.4, 0.3), c(-1.2, 0.1), c(2.2, -0.7));
                let p = json!({"a": [a.re, a.im], "b": [b.re, b.im], "c": [cc.re, cc.im], "z": [z.re, z.im]});
                collect(&mut out, "euler_transformation", p, 1e-10, euler_transformation_check(a, b, cc, z));
            }
        }
        Suite::Geometry => {
            let g1 = GroupElement::new(Complex64::from_polar(0.8f64.cosh(), 0.3), Complex64::from_polar(0.8f64.sinh(), -1.1))?;
            let g2 = GroupElement::new(Complex64::from_polar(1.7f64.cosh(), -2.0), Complex64::from_polar(1.7f64.sinh(), 0.4))?;
            for (k, z) in [(1.0, c(0.3, 0.2)), (0.7, c(-0.5, 0.1)), (2.3, c(0.0, -0.8))] {
                let res = cocycle_modulus_check(k, &g1, &g2, DiscPoint::new(z)?);
                out.push(ResidualReport::new("cocycle_modulus", json!({"k": k, "z": [z.re, z.im]}), res, 1e-12));
            }
            let (w, w2) = (DiscPoint::new(c(-0.1, 0.4))?, DiscPoint::new(c(0.3, -0.2))?);
            for (k, lambda) in [(0.7, c(0.5, 0.6)), (1.0, c(0.0, 1.0)), (2.3, c(0.5, 0.5))] {
                let p = json!({"k": k, "lambda": [lambda.re, lambda.im]});
                let r = phase_orientation_residual(k, lambda, crate::geom::PhaseOrientation::ConjFirst, w, w2);
                collect(&mut out, "phase_orientation", p.clone(), 1e-6, r.map(|v| ResidualReport::new("phase_orientation", p, v, 1e-6)));
            }
        }
        Suite::Ode => {
            let grid = ode_y_grid();
            for k in ODE_K {
                for lambda in ode_lambdas() {
                    for which in [HelmholtzSolution::Regular(RegularThirdParameter::One), HelmholtzSolution::Outgoing] {
                        let p = json!({"k": k, "lambda": [lambda.re, lambda.im]});
                        collect(&mut out, "helmholtz", p, HELMHOLTZ_TOL, helmholtz_solution_residual(k, lambda, which, &grid));
                    }
                }
            }
            let coarse = [1.5, 2.0, 3.0, 4.0];
            for (k, lambda) in [(1.0, c(0.7, 0.0)), (2.3, c(0.5, 0.5))] {
                let p = json!({"k": k, "lambda": [lambda.re, lambda.im], "h": 0.05});
                match helmholtz_refinement_order(k, lambda, HelmholtzSolution::Outgoing, &coarse, 0.05) {
                    Ok(order) => out.push(
                        ResidualReport::new("helmholtz/refinement_order", p, (3.5 - order).max(0.0), 0.0)
                            .with_note(format!("observed order {order:.3}")),
                    ),
                    Err(e) => out.push(ResidualReport::from_error("helmholtz/refinement_order", p, 0.0, &e)),
                }
            }
        }
        Suite::Pairing => {
            for (k, lambda) in [(0.0, c(0.0, 1.0)), (1.0, c(0.5, 0.5))] {
                for bump in RadialBump::standard_set() {
                    let p = json!({"k": k, "lambda": [lambda.re, lambda.im]});
                    collect(&mut out, "green_pairing", p, PAIRING_TOL, green_pairing_report(k, lambda, bump, spec));
                }
            }
        }
        Suite::Integral => {
            for k in [0.0, 0.5, 1.0, 1.5, 2.3] {
                for lambda in [c(0.3, 0.7), c(0.0, 1.0), c(0.4, 0.8)] {
                    if lambda.im < integral_envelope(k) {
                        continue;
                    }
                    for r in [0.5, 1.0, 2.0] {
                        let p = json!({"k": k, "lambda": [lambda.re, lambda.im], "r": r});
                        collect(&mut out, "integral_representation", p, 1e-6, integral_representation_check(k, lambda, r, spec));
                    }
                }
            }
        }
        Suite::Chebyshev => {
            let pairs = chebyshev_probe_pairs(50);
            for n2 in 0..=4 {
                let k = 0.5 * n2 as f64;
                collect(&mut out, "chebyshev_specialization", json!({"k": k}), 1e-12, chebyshev_specialization_check(k, &pairs));
            }
            for (n, a, x) in [(3, 0.75, 1.3), (5, 1.5, 0.4), (0, 2.0, 2.5)] {
                collect(&mut out, "chebyshev_hypergeometric", json!({"n": n}), 1e-10, chebyshev_hypergeometric_check(n, a, x));
            }
        }
        Suite::Fractional => {
            let probes_i = [
                (c(0.5, 0.0), c(0.5, 0.0), c(1.0, 0.0), c(2.0, 0.0), 2.0, 5.0),
                (c(0.8, 0.0), c(1.3, 0.0), c(0.2, 0.5), c(1.1, 0.0), 1.5, 2.5),
            ];
            for (mu, nu, a, b, x, z) in probes_i {
                collect_many(&mut out, "fractional_identity_i", json!({"x": x, "z": z}), 1e-8,
                    fractional_identity_i_check(mu, nu, a, b, x, z, spec));
            }
            for (a, b, cc, mu, x) in [
                (c(0.5, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(0.5, 0.0), 3.0),
                (c(0.3, 0.0), c(0.8, 0.0), c(1.7, 0.0), c(1.0, 0.0), 1.5),
            ] {
                collect(&mut out, "weyl_step", json!({"x": x}), 1e-8, weyl_step_check(a, b, cc, mu, x, spec));
            }
            collect_many(&mut out, "fractional_identity_ii", json!({"x": 2.0}), 1e-7,
                fractional_identity_ii_check(c(0.75, 0.0), c(0.75, 0.0), c(1.5, 0.0), c(0.5, 0.0), c(0.25, 0.0), 2.0, spec));
            for a in [0.0, 0.7, 1.0, 2.5] {
                collect(&mut out, "exp_formula", json!({"a": a}), 1e-9, exp_formula_check(a, &[0.05, 0.3, 1.0, 4.0, 20.0]));
            }
        }
        Suite::Heat => {
            for (a, p) in [(2.0, 1.0), (1.0, 4.0), (0.5, 0.3)] {
                collect(&mut out, "laplace_pair", json!({"a": a, "p": p}), 1e-8, laplace_pair_check(a, p, spec));
            }
            for (a, y) in [(1.0, 1.0), (2.0, 3.0), (0.5, 0.2)] {
                collect(&mut out, "subordination_scalar", json!({"a": a, "y": y}), 1e-9, subordination_scalar_check(a, y, spec));
            }
            for (k, lambda, r) in [(0.0, 1.0, 1.0), (1.0, 0.8, 1.5), (0.5, 1.2, 0.7)] {
                collect_many(&mut out, "heat_laplace", json!({"k": k, "lambda": lambda, "r": r}), 1e-5,
                    resolvent_heat_laplace_check(k, c(lambda, 0.0), r, spec));
            }
        }
        Suite::Asymptotics => {
            for (k, lambda) in [(0.0, c(0.0, 1.0)), (2.3, c(0.5, 0.5)), (1.0, c(0.3, 0.7))] {
                collect_many(&mut out, "asymptotics", json!({"k": k, "lambda": [lambda.re, lambda.im]}), 0.01,
                    asymptotics_check(k, lambda));
            }
        }
        Suite::Conventions => {
            let verdict = resolve_conventions(spec)?;
            out.extend(verdict.reports());
        }
    }
    Ok(out)
}

/// Runs one suite; a failure to run becomes a failing report.
pub fn run_suite(suite: Suite, spec: &QuadratureSpec) -> Vec<ResidualReport> {
    match run_one(suite, spec) {
        Ok(v) => v,
        Err(e) => vec![ResidualReport::from_error(suite.name(), json!({}), 0.0, &e)],
    }
}

/// Runs the suites selected by `name` and collects a report.
pub fn run_named(name: &str, spec: &QuadratureSpec) -> Result<VerificationReport> {
    let suites = Suite::parse(name)?;
    let reports: Vec<ResidualReport> = suites.iter().flat_map(|s| run_suite(*s, spec)).collect();
    let all_pass = reports.iter().all(|r| r.pass);
    Ok(VerificationReport {
        version: env!("CARGO_PKG_VERSION"),
        suites: suites.iter().map(|s| s.name()).collect(),
        reports,
        all_pass,
    })
}
