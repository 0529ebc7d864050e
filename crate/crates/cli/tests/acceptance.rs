//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so every line is printed; the process
//! exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use biquat::dirac::{
    construct_solution, effective_mass, effective_mass_field, klein_gordon_residual, lanczos_residual,
    momentum_symbol_kernel, time_reversal_search,
};
use biquat::fields::{CatalogName, CoulombField, EmField, Event, PolynomialField, SpacetimeField, TrigField};
use biquat::maxwell::{equivalence_check, residual_sweep, time_reversal_em};
use biquat::spinor::{compose, decompose, dof_rank, phase_probe, PairingConvention};
use biquat::{sampling, Bq, Error, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Mat = [[C64; 2]; 2];

/// `w − i(x σ1 + y σ2 + z σ3)`, written out entrywise.
fn pauli_image(q: &Bq) -> Mat {
    let i = C64::i();
    [[q.w - i * q.z, -i * q.x - q.y], [-i * q.x + q.y, q.w + i * q.z]]
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[C64::new(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for k in 0..2 {
            c[r][k] = a[r][0] * b[0][k] + a[r][1] * b[1][k];
        }
    }
    c
}

fn mat_diff(a: &Mat, b: &Mat) -> f64 {
    (0..4).map(|n| (a[n / 2][n % 2] - b[n / 2][n % 2]).norm()).fold(0.0, f64::max)
}

fn quadratic_norm(q: &Bq) -> C64 {
    q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z
}

fn bar(q: &Bq) -> Bq {
    Bq::new(q.w, -q.x, -q.y, -q.z)
}

fn star(q: &Bq) -> Bq {
    Bq::new(q.w.conj(), q.x.conj(), q.y.conj(), q.z.conj())
}

fn max_of<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    it.into_iter().fold(0.0, |m, v| if v.is_nan() || m.is_nan() { f64::NAN } else { m.max(v) })
}

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    summary: String,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>) -> Self {
        Self { pass, summary: summary.into() }
    }

    fn fail(e: impl std::fmt::Display) -> Self {
        Self::new(false, format!("error: {e}"))
    }
}

fn algebra_laws() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let [a, b, c]: [Bq; 3] = std::array::from_fn(|_| sampling::biquaternion(&mut rng, 1.0));
        let ab = a * b;
        let errs = [
            (ab * c).distance(&(a * (b * c))),
            bar(&ab).distance(&(bar(&b) * bar(&a))),
            star(&ab).distance(&(star(&a) * star(&b))),
            star(&bar(&ab)).distance(&(star(&bar(&b)) * star(&bar(&a)))),
            a.bar().distance(&bar(&a)),
            a.star().distance(&star(&a)),
            a.tilde().distance(&star(&bar(&a))),
            (quadratic_norm(&ab) - quadratic_norm(&a) * quadratic_norm(&b)).norm(),
            (a.semi_norm() - quadratic_norm(&a)).norm(),
            mat_diff(&pauli_image(&ab), &mat_mul(&pauli_image(&a), &pauli_image(&b))),
            mat_diff(&pauli_image(&a), &a.to_matrix().m),
        ];
        worst = worst.max(max_of(errs));
    }
    let elapsed = start.elapsed();
    Outcome::new(
        worst <= 1e-12 && elapsed < Duration::from_secs(1),
        format!("1000 triples, worst {worst:.2e} (tol 1e-12), {:.0} ms (limit 1000)", elapsed.as_secs_f64() * 1e3),
    )
}

fn synthetic_fields() -> Vec<Box<dyn EmField>> {
    vec![
        Box::new(PolynomialField::x1_e1()),
        Box::new(TrigField),
        Box::new(
            PolynomialField::affine(Bq::e3(), [Bq::e2(), Bq::i() * Bq::e3(), Bq::e1(), Bq::i() * Bq::e1()])
                .with_quadratic(0, 1, Bq::e3())
                .with_quadratic(2, 3, Bq::i() * Bq::e2()),
        ),
    ]
}

fn maxwell_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst_eq = 0.0f64;
    let mut worst_res = 0.0f64;
    let mut all_pass = true;
    for name in CatalogName::ALL {
        let evs = sampling::events(&mut rng, 100);
        let field = match name.default_spec().build() {
            Ok(f) => f,
            Err(e) => return Outcome::fail(e),
        };
        match (equivalence_check(&field, &evs), residual_sweep(&field, &evs, 1e-10)) {
            (Ok(eq), Ok(res)) => {
                all_pass &= eq.pass && res.pass;
                worst_eq = worst_eq.max(eq.max_abs);
                worst_res = worst_res.max(res.max_abs);
            }
            (Err(e), _) | (_, Err(e)) => return Outcome::fail(format!("{}: {e}", name.as_str())),
        }
    }
    for field in synthetic_fields() {
        let evs = sampling::events(&mut rng, 100);
        match equivalence_check(&field, &evs) {
            Ok(eq) => {
                all_pass &= eq.pass;
                worst_eq = worst_eq.max(eq.max_abs);
            }
            Err(e) => return Outcome::fail(e),
        }
    }
    Outcome::new(
        all_pass && worst_eq <= 1e-10 && worst_res <= 1e-10,
        format!("5 catalog + 3 synthetic fields x 100 events, equivalence {worst_eq:.2e}, catalog residual {worst_res:.2e} (tol 1e-10)"),
    )
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let u = Bq::e3();
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let f = sampling::field(&mut rng, &u);
        match decompose(&f, &u) {
            Ok(dec) => worst = worst.max(compose(&dec).distance(&f) / f.norm()),
            Err(e) => return Outcome::fail(e),
        }
    }
    let wave = match CatalogName::PlaneWave.default_spec().build() {
        Ok(w) => w,
        Err(e) => return Outcome::fail(e),
    };
    let evs = sampling::events(&mut rng, 50);
    let refused = evs
        .iter()
        .filter(|e| matches!(wave.eval(e).and_then(|f| decompose(&f, &u)), Err(Error::NullField { .. })))
        .count();
    Outcome::new(
        worst <= 1e-10 && refused == evs.len(),
        format!("1000 fields, worst relative error {worst:.2e} (tol 1e-10); null plane-wave values refused {refused}/{}", evs.len()),
    )
}

fn dof_count() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let u = Bq::e3();
    let mut rank_ok = 0;
    let mut worst_overlap = 0.0f64;
    for _ in 0..100 {
        let dec = sampling::decomposition(&mut rng, &u);
        let a = match dof_rank(&dec) {
            Ok(a) => a,
            Err(e) => return Outcome::fail(e),
        };
        let smax = a.singular_values[0];
        let kept = a.singular_values.iter().filter(|&&s| s >= 1e-4 * smax).count();
        let dropped = a.singular_values.iter().filter(|&&s| s <= 1e-8 * smax).count();
        if kept == 6 && dropped == 2 {
            rank_ok += 1;
        }
        worst_overlap = worst_overlap.max(1.0 - a.gauge_overlap);
    }
    Outcome::new(
        rank_ok == 100 && worst_overlap <= 1e-6,
        format!("rank 6 + 2 null at {rank_ok}/100 decompositions; worst 1 - overlap {worst_overlap:.2e} (tol 1e-6)"),
    )
}

fn phase_duality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let u = Bq::e3();
    let mut squares = 0.0f64;
    let mut invariant = 0.0f64;
    for _ in 0..100 {
        let dec = sampling::decomposition(&mut rng, &u);
        let theta = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
        let psi = dec.spinor();
        let shifted = psi.scale(C64::from_polar(1.0, theta));
        let f = psi * u * bar(&psi);
        let by_hand = shifted * u * bar(&shifted);
        let expected = f.scale(C64::from_polar(1.0, 2.0 * theta));
        squares = squares.max(max_of([
            by_hand.distance(&expected) / f.norm(),
            phase_probe(&dec, theta, PairingConvention::Bar).distance(&expected) / f.norm(),
            compose(&dec).distance(&f) / f.norm(),
        ]));
        let pairing = psi * u * bar(&star(&psi));
        let shifted_pairing = shifted * u * bar(&star(&shifted));
        invariant = invariant.max(max_of([
            shifted_pairing.distance(&pairing) / pairing.norm(),
            phase_probe(&dec, theta, PairingConvention::BarStar).distance(&pairing) / pairing.norm(),
        ]));
    }
    Outcome::new(
        squares <= 1e-12 && invariant <= 1e-12,
        format!("100 (dec, theta): phase squared {squares:.2e}, bar-star invariance {invariant:.2e} (tol 1e-12)"),
    )
}

fn dirac_solutions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let u = Bq::e3();
    let (mut on8, mut off0) = (0, 0);
    let (mut lanczos, mut kg) = (0.0f64, 0.0f64);
    for _ in 0..20 {
        let m = rng.random_range(0.2..2.0);
        let on = sampling::on_shell(&mut rng, m);
        let off = sampling::off_shell(&mut rng, m);
        match (momentum_symbol_kernel(&on, &u), momentum_symbol_kernel(&off, &u)) {
            (Ok(k_on), Ok(k_off)) => {
                on8 += usize::from(k_on.dim == 8);
                off0 += usize::from(k_off.dim == 0);
            }
            (Err(e), _) | (_, Err(e)) => return Outcome::fail(e),
        }
        let coeffs: Vec<f64> = (0..8).map(|_| rng.random_range(-1.0..1.0)).collect();
        let psi = match construct_solution(&on, &u, &coeffs) {
            Ok(p) => p,
            Err(e) => return Outcome::fail(e),
        };
        for e in sampling::events(&mut rng, 100) {
            match (lanczos_residual(&psi, m, &u, &e), klein_gordon_residual(&psi, m, &e)) {
                (Ok(l), Ok(k)) => {
                    lanczos = lanczos.max(l.norm());
                    kg = kg.max(k.norm());
                }
                (Err(e), _) | (_, Err(e)) => return Outcome::fail(e),
            }
        }
    }
    Outcome::new(
        on8 == 20 && off0 == 20 && lanczos <= 1e-10 && kg <= 1e-8,
        format!(
            "dim 8 on shell {on8}/20, dim 0 off shell {off0}/20; Lanczos {lanczos:.2e} (tol 1e-10), Klein-Gordon {kg:.2e} (tol 1e-8)"
        ),
    )
}

fn fermion_boson() -> Outcome {
    let search = match time_reversal_search(1.0, &Bq::e3()) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(e),
    };
    let found = search.time_reversals.len();
    let fermion = max_of(search.time_reversals.iter().map(|t| t.minus_one_defect));
    let signs_ok = search.time_reversals.iter().all(|t| t.t_square_sign == -1);

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut boson = 0.0f64;
    for name in CatalogName::ALL {
        let field = match name.default_spec().build() {
            Ok(f) => f,
            Err(e) => return Outcome::fail(e),
        };
        let twice = time_reversal_em(time_reversal_em(&field));
        for e in sampling::events(&mut rng, 100) {
            match (twice.eval(&e), field.eval(&e)) {
                (Ok(a), Ok(b)) => boson = boson.max(a.distance(&b)),
                (Err(e), _) | (_, Err(e)) => return Outcome::fail(e),
            }
        }
    }
    Outcome::new(
        found >= 1 && signs_ok && fermion <= 1e-10 && boson <= 1e-15,
        format!(
            "{found} time reversals of {} candidates, all T^2 = -1: {signs_ok}, worst |T^2 psi + psi| {fermion:.2e} (tol 1e-10); \
             {} charge-conjugate composites set aside; EM T^2 = 1 to {boson:.2e} (tol 1e-15)",
            search.candidates,
            search.charge_conjugate.len()
        ),
    )
}

fn mass() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let u = Bq::e3();
    let m = 1.3;
    let mom = sampling::on_shell(&mut rng, m);
    let coeffs: Vec<f64> = (0..8).map(|_| rng.random_range(-1.0..1.0)).collect();
    let evs = sampling::events(&mut rng, 50);
    let constant = match construct_solution(&mom, &u, &coeffs).and_then(|psi| effective_mass(&psi, &u, &evs)) {
        Ok(p) => max_of(p.samples.iter().map(|s| s.mass.distance(&Bq::real_scalar(m)) / m)),
        Err(e) => return Outcome::fail(e),
    };
    let ray: Vec<Event> = (0..50).map(|k| Event::new(0.0, 0.5 + 1.5 * k as f64 / 49.0, 0.0, 0.0)).collect();
    let variation = match effective_mass_field(CoulombField::new(1.0), &u, &ray) {
        Ok(p) => p.summary.relative_variation,
        Err(e) => return Outcome::fail(e),
    };
    Outcome::new(
        constant <= 1e-8 && variation >= 0.1,
        format!("solution mass off by {constant:.2e} relative (tol 1e-8); Coulomb ray varies by {variation:.3} (min 0.1)"),
    )
}

fn verify_run() -> Result<(std::process::Output, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_biquat"))
        .args(["verify", "--seed", "42", "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out, start.elapsed()))
}

fn verify_end_to_end() -> Outcome {
    let (first, elapsed) = match verify_run() {
        Ok(r) => r,
        Err(e) => return Outcome::fail(e),
    };
    let (second, _) = match verify_run() {
        Ok(r) => r,
        Err(e) => return Outcome::fail(e),
    };
    let code = first.status.code();
    let stable = first.stdout == second.stdout;
    Outcome::new(
        code == Some(0) && elapsed < Duration::from_secs(10) && stable,
        format!("exit {code:?}, {:.2} s (limit 10), identical bytes across runs: {stable}", elapsed.as_secs_f64()),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("algebra laws", algebra_laws),
        ("biquaternion Maxwell equals classical Maxwell", maxwell_equivalence),
        ("spinor round trip", round_trip),
        ("six real degrees of freedom", dof_count),
        ("phase and duality", phase_duality),
        ("Dirac-Lanczos plane-wave solutions", dirac_solutions),
        ("fermion and boson time reversal", fermion_boson),
        ("effective mass", mass),
        ("verify --seed 42", verify_end_to_end),
    ];
    let mut failures = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {}: {name}: {}", n + 1, o.summary);
        failures += usize::from(!o.pass);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
