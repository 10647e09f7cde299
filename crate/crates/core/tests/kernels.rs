use std::f64::consts::PI;

use approx::assert_relative_eq;
use hyperkernel::geom::{distance, mobius_apply, mobius_g, phase_factor_oriented, DiscPoint, PhaseOrientation};
use hyperkernel::kernels::{
    free_resolvent, heat_kernel, heat_radial, resolvent_kernel, resolvent_radial, resolvent_via_integral,
    wave_integral, wave_kernel, Convention, ExponentSign, IntegralNormalization, RadialArg, SpectralParams,
};
use hyperkernel::quad::{laplace_integral_try, QuadratureSpec};
use hyperkernel::specfun::chebyshev_t;
use hyperkernel::Error;
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn ra(r: f64) -> RadialArg {
    RadialArg::new(r).unwrap()
}

fn spec(tol: f64) -> QuadratureSpec {
    QuadratureSpec::with_tol(tol).unwrap()
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn resolvent_at_k0_is_free_resolvent() {
    for lambda in [c(0.0, 1.0), c(0.5, 0.5), c(0.7, 0.0), c(-0.3, 2.0)] {
        for r in [0.01, 0.5, 1.0, 3.0, 12.0] {
            let g = resolvent_radial(&SpectralParams::new(0.0, lambda), &ra(r), 1e-14).unwrap();
            assert_eq!(g, free_resolvent(lambda, &ra(r), Convention::default(), 1e-14).unwrap());
        }
    }
}

#[test]
fn resolvent_even_in_k() {
    for (k, lambda) in [(0.5, c(0.0, 1.0)), (1.0, c(0.5, 0.5)), (2.3, c(0.4, 0.8))] {
        for r in [0.3, 1.0, 4.0] {
            let a = resolvent_radial(&SpectralParams::new(k, lambda), &ra(r), 1e-14).unwrap();
            let b = resolvent_radial(&SpectralParams::new(-k, lambda), &ra(r), 1e-14).unwrap();
            assert!(rel(a, b) < 1e-14);
        }
    }
}

#[test]
fn log_law_ratio_tends_to_one() {
    // the ratio approaches 1 like 1/ln r; its limit is asserted in the verification suite
    for (k, lambda) in [(0.0, c(0.0, 1.0)), (1.0, c(0.5, 0.5))] {
        let sp = SpectralParams::new(k, lambda);
        let ratio = |r: f64| {
            let log = -(0.5 * r).sinh().powi(2).ln() / (4.0 * PI);
            (resolvent_radial(&sp, &ra(r), 1e-14).unwrap() / log - 1.0).norm()
        };
        let (d2, d3, d6) = (ratio(1e-2), ratio(1e-3), ratio(1e-6));
        assert!(d3 < d2 && d6 < d3, "k = {k}: {d2} {d3} {d6}");
        // the defect times |ln sinh²(r/2)| stays bounded
        let ell = |r: f64| (0.5 * r).sinh().powi(2).ln().abs();
        let q = (d6 * ell(1e-6)) / (d2 * ell(1e-2));
        assert!(q > 0.5 && q < 2.0, "k = {k}: {q}");
    }
}

#[test]
fn resolvent_matches_integral_representation() {
    let s = spec(1e-12);
    let sp = SpectralParams::new(1.0, c(0.4, 0.8));
    let a = resolvent_radial(&sp, &ra(1.5), 1e-15).unwrap();
    let b = resolvent_via_integral(&sp, &ra(1.5), &s).unwrap();
    assert!(rel(b, a) < 1e-6);

    let free = free_resolvent(c(0.0, 1.0), &ra(1.0), Convention::default(), 1e-15).unwrap();
    let via = resolvent_via_integral(&SpectralParams::new(0.0, c(0.0, 1.0)), &ra(1.0), &s).unwrap();
    assert!(rel(via, free) < 1e-9);

    let sp = SpectralParams::new(1.5, c(0.3, 1.2));
    let a = resolvent_radial(&sp, &ra(0.8), 1e-15).unwrap();
    assert!(rel(resolvent_via_integral(&sp, &ra(0.8), &s).unwrap(), a) < 1e-6);
}

#[test]
fn integral_representation_envelope() {
    // W_{3/2} grows like e^ρ, so Im λ = 0.7 does not give a convergent integral
    let sp = SpectralParams::new(1.5, c(0.3, 0.7));
    let err = resolvent_via_integral(&sp, &ra(0.8), &spec(1e-10)).unwrap_err();
    assert!(matches!(err, Error::OutsideEnvelope { .. }), "{err}");
    assert!(resolvent_radial(&sp, &ra(0.8), 1e-14).is_ok());
}

#[test]
fn inverse_two_i_lambda_prefactor() {
    let s = spec(1e-12);
    for lambda in [c(0.2, 1.0), c(0.4, 2.0)] {
        let half = wave_integral(0.5, lambda, 1.0, ExponentSign::Plus, IntegralNormalization::Half, &s).unwrap();
        let inv = wave_integral(0.5, lambda, 1.0, ExponentSign::Plus, IntegralNormalization::InverseTwoILambda, &s).unwrap();
        assert!(rel(inv, half / (Complex64::i() * lambda)) < 1e-14);
    }
}

#[test]
fn resolvent_kernel_values() {
    let w = DiscPoint::from_parts(0.3, -0.5).unwrap();
    let w2 = DiscPoint::from_parts(-0.1, 0.2).unwrap();
    let sp = SpectralParams::new(1.3, c(0.5, 0.5));

    let at_origin = resolvent_kernel(&sp, w, DiscPoint::origin(), 1e-14).unwrap();
    assert!((at_origin.phase - 1.0).norm() < 1e-15);
    let g = resolvent_radial(&sp, &ra(distance(w, DiscPoint::origin())), 1e-14).unwrap();
    assert!(rel(at_origin.value, g) < 1e-14);

    let ab = resolvent_kernel(&sp, w, w2, 1e-14).unwrap();
    let ba = resolvent_kernel(&sp, w2, w, 1e-14).unwrap();
    assert!(rel(ab.radial, ba.radial) < 1e-14);
    assert!((ab.phase - ba.phase.conj()).norm() < 1e-14);

    for o in [PhaseOrientation::ConjFirst, PhaseOrientation::ConjSecond] {
        assert_eq!(phase_factor_oriented(0.0, w, w2, o), c(1.0, 0.0));
    }
    assert!(matches!(resolvent_kernel(&sp, w, w, 1e-14), Err(Error::Diagonal)));
}

#[test]
fn resolvent_kernel_radial_invariant() {
    let sp = SpectralParams::new(0.8, c(0.3, 0.9));
    let g = mobius_g(DiscPoint::from_parts(0.4, 0.35).unwrap());
    for (a, b) in [((0.1, 0.2), (-0.3, 0.4)), ((0.6, -0.1), (0.0, 0.0)), ((-0.2, -0.7), (0.5, 0.5))] {
        let w = DiscPoint::from_parts(a.0, a.1).unwrap();
        let w2 = DiscPoint::from_parts(b.0, b.1).unwrap();
        let x = resolvent_kernel(&sp, w, w2, 1e-14).unwrap().radial;
        let y = resolvent_kernel(&sp, mobius_apply(&g, w), mobius_apply(&g, w2), 1e-14).unwrap().radial;
        assert!(rel(y, x) < 1e-10);
    }
}

#[test]
fn resolvent_pole() {
    let sp = SpectralParams::new(1.5, c(0.0, 1.0));
    assert!(matches!(resolvent_radial(&sp, &ra(1.0), 1e-14), Err(Error::GammaPole(_))));
}

#[test]
fn wave_kernel_values() {
    let (r, rho) = (1.0_f64, 2.0_f64);
    let big = (0.5 * rho).cosh().powi(2) - (0.5 * r).cosh().powi(2);
    let w0 = wave_kernel(0.0, &ra(r), rho).unwrap();
    assert_relative_eq!(w0, 1.0 / (2.0 * PI * big.sqrt()), max_relative = 1e-14);

    let factor = wave_kernel(1.0, &ra(r), rho).unwrap() / w0;
    let x = 1f64.cosh() / 0.5f64.cosh();
    assert_relative_eq!(factor, chebyshev_t(2, x), max_relative = 1e-13);
    assert_relative_eq!(factor, 2.745218005, epsilon = 1e-9);

    let half = wave_kernel(0.5, &ra(r), rho).unwrap() / w0;
    assert_relative_eq!(half, 1.368433, epsilon = 1e-6);

    assert!(wave_kernel(0.0, &ra(r), r).is_err());
    assert!(wave_kernel(0.0, &ra(r), 0.5).is_err());
}

#[test]
fn wave_kernel_light_cone_limit() {
    // √(ρ−r) W_k → (1/2π)(½ sinh r)^{−1/2}
    for (k, r) in [(0.0, 1.0), (1.0, 0.5), (2.3, 2.0)] {
        let f = |d: f64| d.sqrt() * wave_kernel(k, &ra(r), r + d).unwrap();
        let richardson = 2.0 * f(1e-6) - f(2e-6);
        let limit = 1.0 / (2.0 * PI * (0.5 * f64::sinh(r)).sqrt());
        assert_relative_eq!(richardson, limit, max_relative = 1e-9);
    }
}

#[test]
fn heat_small_time_decay() {
    let s = spec(1e-11);
    let r = 1.0;
    let ts = [0.1, 0.05, 0.025];
    let h: Vec<f64> = ts.iter().map(|&t| heat_radial(0.0, t, r, &s).unwrap()).collect();
    assert!(h[0] > h[1] && h[1] > h[2] && h[2] > 0.0);
    // ln H ≈ −r²/4t + O(ln t): the slope in 1/t approaches −r²/4
    let slope = (h[2].ln() - h[1].ln()) / (1.0 / ts[2] - 1.0 / ts[1]);
    assert!((slope + 0.25).abs() < 0.05, "slope {slope}");
    for t in [1e-3, 1e-4] {
        assert!(heat_radial(0.0, t, r, &s).unwrap() < 1e-100);
    }
}

#[test]
fn heat_positive_and_real() {
    let s = spec(1e-10);
    for t in [0.01, 0.3, 2.0] {
        for r in [0.0, 0.4, 1.5, 4.0] {
            assert!(heat_radial(0.0, t, r, &s).unwrap() > 0.0);
        }
    }
    let w = DiscPoint::from_parts(0.2, 0.1).unwrap();
    let w2 = DiscPoint::from_parts(-0.1, -0.3).unwrap();
    let kv = heat_kernel(0.0, 0.5, w, w2, &s).unwrap();
    assert_eq!(kv.value.im, 0.0);
    assert!(heat_radial(1.0, 0.0, 1.0, &s).is_err());
    assert!(heat_radial(1.0, -1.0, 1.0, &s).is_err());
}

#[test]
fn heat_laplace_consistency() {
    let s = spec(1e-11);
    for (k, lambda, r) in [(0.0, 1.0, 1.0), (1.0, 0.8, 1.5)] {
        let p = c(lambda * lambda, 0.0);
        let transform = laplace_integral_try(|t| Ok(c(heat_radial(k, t, r, &s)?, 0.0)), p, &s).unwrap().value;
        let g = resolvent_radial(&SpectralParams::new(k, c(0.0, lambda)), &ra(r), 1e-15).unwrap();
        assert!(rel(transform, g) < 1e-5);
    }
}
