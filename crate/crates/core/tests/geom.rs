use hyperkernel::geom::{
    cocycle_modulus_check, distance, mobius_apply, mobius_g, phase_factor, DiscPoint, GroupElement,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn point(rng: &mut ChaCha8Rng) -> DiscPoint {
    let rho = 0.95 * rng.gen::<f64>().sqrt();
    DiscPoint::new(Complex64::from_polar(rho, rng.gen_range(0.0..std::f64::consts::TAU))).unwrap()
}

fn element(rng: &mut ChaCha8Rng) -> GroupElement {
    let t = rng.gen_range(0.0..2.0_f64);
    GroupElement::new(
        Complex64::from_polar(t.cosh(), rng.gen_range(-3.0..3.0)),
        Complex64::from_polar(t.sinh(), rng.gen_range(-3.0..3.0)),
    )
    .unwrap()
}

#[test]
fn distance_values() {
    let w = DiscPoint::from_parts(0.2, -0.6).unwrap();
    assert_eq!(distance(w, w), 0.0);
    for theta in [0.0, 1.0, 2.5, -2.0] {
        let z = DiscPoint::new(Complex64::from_polar(0.5_f64.tanh(), theta)).unwrap();
        assert!((distance(DiscPoint::origin(), z) - 1.0).abs() < 1e-14);
    }
}

#[test]
fn distance_symmetric_and_triangle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let (a, b, c) = (point(&mut rng), point(&mut rng), point(&mut rng));
        assert_eq!(distance(a, b), distance(b, a));
        assert!(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
    }
}

#[test]
fn mobius_g_maps_origin() {
    let g = mobius_g(DiscPoint::origin());
    assert_eq!((g.a, g.b), (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let w = point(&mut rng);
        let g = mobius_g(w);
        assert!((g.a.norm_sqr() - g.b.norm_sqr() - 1.0).abs() < 1e-10);
        assert!((mobius_apply(&g, DiscPoint::origin()).w() - w.w()).norm() < 1e-14);
    }
}

#[test]
fn mobius_is_an_isometry() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let id = GroupElement::identity();
    for _ in 0..100 {
        let (g, z1, z2) = (element(&mut rng), point(&mut rng), point(&mut rng));
        assert_eq!(mobius_apply(&id, z1).w(), z1.w());
        let d = distance(z1, z2);
        let moved = distance(mobius_apply(&g, z1), mobius_apply(&g, z2));
        assert!((d - moved).abs() <= 1e-12 * d.max(1.0), "{d} vs {moved}");
        assert!(mobius_apply(&g, z1).w().norm() < 1.0);
    }
}

#[test]
fn phase_factor_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..100 {
        let (w, w2) = (point(&mut rng), point(&mut rng));
        let k = rng.gen_range(-3.0..3.0);
        assert_eq!(phase_factor(0.0, w, w2), Complex64::new(1.0, 0.0));
        assert!((phase_factor(k, w, DiscPoint::origin()) - 1.0).norm() < 1e-15);
        let p = phase_factor(k, w, w2);
        assert!((p.norm() - 1.0).abs() < 1e-14);
        assert!((phase_factor(k, w2, w) - p.conj()).norm() < 1e-14);
        let k2 = rng.gen_range(-3.0..3.0);
        assert!((phase_factor(k + k2, w, w2) - p * phase_factor(k2, w, w2)).norm() < 1e-12);
    }
}

#[test]
fn cocycle_modulus() {
    let id = GroupElement::identity();
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..100 {
        let (g1, g2, z) = (element(&mut rng), element(&mut rng), point(&mut rng));
        let k = rng.gen_range(-3.0..3.0);
        assert_eq!(cocycle_modulus_check(k, &id, &id, z), 0.0);
        assert_eq!(cocycle_modulus_check(0.0, &g1, &g2, z), 0.0);
        assert!(cocycle_modulus_check(k, &g1, &g2, z) <= 1e-12);
    }
}

#[test]
fn rejects_points_outside_the_disc() {
    assert!(DiscPoint::from_parts(1.0, 0.0).is_err());
    assert!(DiscPoint::from_parts(0.6, 0.9).is_err());
    assert!(GroupElement::new(Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.0)).is_err());
}
