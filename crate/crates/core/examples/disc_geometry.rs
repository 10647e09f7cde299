//! Points of the Poincaré disc, SU(1,1) Möbius maps, geodesic distance and the
//! two-point phase that dresses the magnetic kernels.
//!
//! ```text
//! cargo run --example disc_geometry
//! ```

use hyperkernel::geom::{
    automorphic_factor, cocycle_modulus_check, distance, mobius_apply, mobius_g, phase_factor, DiscPoint, GroupElement,
};
use num_complex::Complex64;

fn main() -> hyperkernel::Result<()> {
    let w = DiscPoint::from_parts(0.3, -0.4)?;
    let z1 = DiscPoint::new(Complex64::from_polar(0.5_f64.tanh(), 1.1))?;
    let z2 = DiscPoint::from_parts(-0.2, 0.6)?;

    println!("d(0, tanh(1/2) e^(1.1i)) = {}", distance(DiscPoint::origin(), z1));
    println!("polar(2, 0) lies at {}", DiscPoint::polar(2.0, 0.0)?.w());

    let g = mobius_g(w);
    println!("g_w(0) = {} (w = {})", mobius_apply(&g, DiscPoint::origin()).w(), w.w());
    let before = distance(z1, z2);
    let after = distance(mobius_apply(&g, z1), mobius_apply(&g, z2));
    println!("isometry: d(z1, z2) = {before:.15}, d(g z1, g z2) = {after:.15}");

    for k in [0.0, 0.5, 1.7] {
        let p = phase_factor(k, z1, z2);
        let q = phase_factor(k, z2, z1);
        println!("k = {k}: phase {p:.12}, |phase| = {:.15}, swapped {q:.12}", p.norm());
    }

    let h = GroupElement::new(Complex64::from_polar(1.2_f64.cosh(), 0.4), Complex64::from_polar(1.2_f64.sinh(), -0.9))?;
    println!("J_1(h, z1) = {}", automorphic_factor(1.0, &h, z1));
    println!("cocycle modulus defect = {:e}", cocycle_modulus_check(1.3, &g, &h, z2));

    if let Err(e) = DiscPoint::from_parts(0.8, 0.7) {
        println!("rejected: {e}");
    }
    Ok(())
}
