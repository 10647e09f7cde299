//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero only when
//! an outcome differs from the expected one, including when a criterion that
//! is blocked by the mathematics stops failing for its known reason.

use std::process::Command;
use std::time::Instant;

use hyperkernel::kernels::{integral_envelope, resolvent_radial, RadialArg, SpectralParams};
use hyperkernel::quad::QuadratureSpec;
use hyperkernel::specfun::{gauss_2f1, HyperParams};
use hyperkernel::verify::{
    chebyshev_specialization_check, euler_transformation_check, green_pairing_report, integral_representation_check,
    resolve_conventions, run_suite, RadialBump, ResidualReport, Suite,
};
use hyperkernel::Error;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
    /// A failure whose cause is understood and checked.
    expected_failure: bool,
}

impl Outcome {
    fn from_reports(reports: &[ResidualReport]) -> Outcome {
        let failed: Vec<&ResidualReport> = reports.iter().filter(|r| !r.pass).collect();
        let detail = match failed.first() {
            None => format!("{} checks", reports.len()),
            Some(r) => format!("{} of {} failed, first {} residual {:e}", failed.len(), reports.len(), r.identity, r.residual),
        };
        Outcome { pass: failed.is_empty(), detail, expected_failure: false }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::with_tol(1e-10).expect("valid tolerance")
}

fn random_complex(rng: &mut ChaCha8Rng, modulus: f64) -> Complex64 {
    Complex64::from_polar(modulus * rng.gen::<f64>().sqrt(), rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI))
}

/// Σ (a)_n (b)_n / ((c)_n n!) zⁿ summed term by term.
fn direct_series(a: Complex64, b: Complex64, cc: Complex64, z: Complex64) -> Complex64 {
    let mut term = c(1.0, 0.0);
    let mut sum = term;
    for n in 0..2000 {
        let nf = n as f64;
        term = term * (a + nf) * (b + nf) / ((cc + nf) * (nf + 1.0)) * z;
        sum += term;
        if term.norm() < 1e-18 * sum.norm() && n > 10 {
            break;
        }
    }
    sum
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let mut worst = 0.0_f64;
    let mut worst_euler = 0.0_f64;
    let mut count = 0;
    while count < 200 {
        let (a, b, cc) = (random_complex(&mut rng, 5.0), random_complex(&mut rng, 5.0), random_complex(&mut rng, 5.0));
        // keep c clear of the poles at 0, −1, −2, …
        if cc.re < 0.5 && (cc.re - cc.re.round()).hypot(cc.im) < 0.5 {
            continue;
        }
        let z = random_complex(&mut rng, 0.5);
        let series = direct_series(a, b, cc, z);
        let v = gauss_2f1(&HyperParams::new(a, b, cc, z), 1e-15).expect("series region");
        let err = (v - series).norm() / series.norm();
        worst = worst.max(err);
        let e = euler_transformation_check(a, b, cc, z).expect("transformation");
        worst_euler = worst_euler.max(e.residual);
        count += 1;
    }
    Outcome {
        pass: worst <= 1e-11 && worst_euler <= 1e-10,
        detail: format!("200 points, series {worst:.2e} (1e-11), Euler transformation {worst_euler:.2e} (1e-10)"),
        expected_failure: false,
    }
}

fn criterion_3() -> Outcome {
    let s = spec();
    let mut passed = 0;
    let mut blocked = Vec::new();
    let mut unexpected = Vec::new();
    for (k, lambda) in [(0.0, c(0.0, 1.0)), (1.0, c(0.5, 0.5)), (1.5, c(0.0, 1.0))] {
        for bump in RadialBump::standard_set() {
            match green_pairing_report(k, lambda, bump, &s) {
                Ok(r) if r.pass => passed += 1,
                Ok(r) => unexpected.push(format!("k = {k}, {bump:?}: residual {:e}", r.residual)),
                // s − k = 0: the resolvent has a pole at this spectral point
                Err(Error::GammaPole(_)) if k == 1.5 && lambda == c(0.0, 1.0) => blocked.push(format!("{bump:?}")),
                Err(e) => unexpected.push(format!("k = {k}, {bump:?}: {e}")),
            }
        }
    }
    let expected_failure = unexpected.is_empty() && passed == 6 && blocked.len() == 3;
    Outcome {
        pass: passed == 9,
        detail: format!(
            "{passed}/9 pass; (k, lambda) = (1.5, i) blocked by the resolvent pole at s = k for {} bumps{}",
            blocked.len(),
            if unexpected.is_empty() { String::new() } else { format!("; unexpected: {}", unexpected.join(", ")) }
        ),
        expected_failure,
    }
}

fn criterion_4() -> Outcome {
    let s = spec();
    let start = Instant::now();
    let (mut passed, mut outside, mut pole) = (0, 0, 0);
    let mut unexpected = Vec::new();
    for k in [0.0, 0.5, 1.0, 1.5, 2.3] {
        for lambda in [c(0.3, 0.7), c(0.0, 1.0), c(0.4, 0.8)] {
            for r in [0.5, 1.0, 2.0] {
                if resolvent_radial(&SpectralParams::new(k, lambda), &RadialArg::new(r).expect("r > 0"), 1e-15).is_err() {
                    pole += 1;
                    continue;
                }
                match integral_representation_check(k, lambda, r, &s) {
                    Ok(rep) if rep.pass => passed += 1,
                    Ok(rep) => unexpected.push(format!("({k}, {lambda}, {r}): {:e}", rep.residual)),
                    Err(Error::OutsideEnvelope { .. }) if lambda.im < integral_envelope(k) => outside += 1,
                    Err(e) => unexpected.push(format!("({k}, {lambda}, {r}): {e}")),
                }
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let expected_failure = unexpected.is_empty() && passed == 27 && outside + pole == 18 && elapsed < 30.0;
    Outcome {
        pass: passed == 45 && elapsed < 30.0,
        detail: format!(
            "{passed}/45 match to 1e-6 in {elapsed:.1} s; {outside} outside the convergence envelope Im(lambda) >= 0.1 + max(0, |k| - 1/2), {pole} at a resolvent pole{}",
            if unexpected.is_empty() { String::new() } else { format!("; unexpected: {}", unexpected.join(", ")) }
        ),
        expected_failure,
    }
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let pairs: Vec<(f64, f64)> = (0..50)
        .map(|_| {
            let r = rng.gen_range(0.05..3.0);
            (r, r + rng.gen_range(0.01..4.0))
        })
        .collect();
    let reports: Vec<ResidualReport> = (0..=4)
        .map(|n2| chebyshev_specialization_check(0.5 * n2 as f64, &pairs).expect("half-integer k"))
        .collect();
    Outcome::from_reports(&reports)
}

fn criterion_9() -> Outcome {
    let s = spec();
    let a = resolve_conventions(&s).expect("resolver runs");
    let b = resolve_conventions(&s).expect("resolver runs");
    let mut out = Outcome::from_reports(&a.reports());
    out.pass &= a == b;
    out.detail = format!("deterministic: {}, margin {:.2e}, {}", a == b, a.margin, out.detail);
    out
}

fn criterion_10() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_hyperkernel");
    let run = |args: &[&str]| Command::new(bin).args(args).env_remove("HYPERKERNEL_TOL").output().expect("binary runs");
    let mut failures = Vec::new();
    let mut expect = |args: &[&str], code: i32| {
        let out = run(args);
        if out.status.code() != Some(code) {
            failures.push(format!("`{}` exited {:?}, expected {code}", args.join(" "), out.status.code()));
        }
        out
    };
    expect(&["resolvent", "--k", "1", "--lambda", "0.5+0.5i", "--r", "1.2"], 0);
    expect(&["resolvent", "--k", "1", "--r", "1.2"], 2);
    let wave = expect(&["wave", "--k", "0", "--r", "1", "--rho", "2"], 0);
    expect(&["verify", "--suite", "chebyshev"], 0);
    let table = expect(&["table", "--kernel", "heat", "--k", "1", "--t", "0.5", "--r-min", "0.1", "--r-max", "3", "--n", "30", "--format", "csv"], 0);
    expect(&["verify", "--suite", "all", "--tol", "1e-8"], 0);

    let exact = 1.0 / (2.0 * std::f64::consts::PI * (1f64.cosh().powi(2) - 0.5f64.cosh().powi(2)).sqrt());
    let value = serde_json::from_slice::<serde_json::Value>(&wave.stdout)
        .ok()
        .and_then(|v| v["value"]["re"].as_f64());
    if !value.is_some_and(|v| (v - exact).abs() < 1e-14) {
        failures.push(format!("wave value {value:?}, expected {exact}"));
    }
    let lines = String::from_utf8_lossy(&table.stdout).lines().count();
    if lines != 31 {
        failures.push(format!("table has {lines} lines, expected 31"));
    }
    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() { "6 invocations with the stated exit codes".into() } else { failures.join("; ") },
        expected_failure: false,
    }
}

fn main() {
    let s = spec();
    let criteria: [(&str, Box<dyn Fn() -> Outcome>); 10] = [
        ("hypergeometric engine", Box::new(criterion_1)),
        ("Helmholtz residuals", Box::new(|| Outcome::from_reports(&run_suite(Suite::Ode, &s)))),
        ("Dirac pairing", Box::new(criterion_3)),
        ("integral representation", Box::new(criterion_4)),
        ("Chebyshev specialization", Box::new(criterion_5)),
        ("fractional identities", Box::new(|| Outcome::from_reports(&run_suite(Suite::Fractional, &s)))),
        ("heat/Laplace consistency", Box::new(|| Outcome::from_reports(&run_suite(Suite::Heat, &s)))),
        ("asymptotics", Box::new(|| Outcome::from_reports(&run_suite(Suite::Asymptotics, &s)))),
        ("convention resolver", Box::new(criterion_9)),
        ("CLI contract", Box::new(criterion_10)),
    ];
    let mut surprises = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let out = check();
        let verdict = if out.pass { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {:>2} {name}: {}", i + 1, out.detail);
        if !out.pass && !out.expected_failure {
            surprises += 1;
        }
    }
    if surprises > 0 {
        eprintln!("{surprises} criteria failed for an unexplained reason");
        std::process::exit(1);
    }
}
