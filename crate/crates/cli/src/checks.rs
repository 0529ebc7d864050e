//! The verification checks, one function per group, each yielding reports.

use biquat::dirac::{
    construct_solution, effective_mass, effective_mass_field, klein_gordon_residual, lanczos_residual,
    momentum_symbol_kernel, time_reversal_search, TimeReversalSearch,
};
use biquat::fields::{CatalogName, CoulombField, EmField, Event, PolynomialField, SpacetimeField, TrigField};
use biquat::maxwell::{equivalence_check, residual_sweep, time_reversal_em, RESIDUAL_TOL};
use biquat::report::{Detail, Report};
use biquat::spinor::{compose, decompose, dof_rank, phase_probe, PairingConvention};
use biquat::{sampling, Bq, Error, C64};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const ALGEBRA_TOL: f64 = 1e-12;
pub const ROUND_TRIP_TOL: f64 = 1e-10;
pub const DOF_KEEP: f64 = 1e-4;
pub const DOF_DROP: f64 = 1e-8;
pub const OVERLAP_TOL: f64 = 1e-6;
pub const PHASE_TOL: f64 = 1e-12;
pub const LANCZOS_TOL: f64 = 1e-10;
pub const KG_TOL: f64 = 1e-8;
pub const KERNEL_GAP: f64 = 1e6;
pub const T_SQUARE_TOL: f64 = 1e-10;
pub const EM_T_SQUARE_TOL: f64 = 1e-15;
pub const MASS_CONSTANCY_TOL: f64 = 1e-8;
pub const COULOMB_VARIATION: f64 = 0.1;

/// Worst value of a fallible sweep; an error turns the whole check into a failure.
fn worst<I>(check: &str, tol: f64, values: I) -> Report
where
    I: IntoIterator<Item = biquat::Result<f64>>,
{
    let mut max = 0.0f64;
    for v in values {
        match v {
            Ok(v) if v.is_nan() => return Report::single(check, f64::NAN, tol),
            Ok(v) => max = max.max(v),
            Err(e) => return Report::failure(check, tol, &e),
        }
    }
    Report::single(check, max, tol)
}

fn with_detail(mut r: Report, detail: &[(&str, f64)]) -> Report {
    r.detail = detail.iter().map(|(l, v)| Detail { label: l.to_string(), value: *v }).collect();
    r
}

/// Associativity, involution laws, norm multiplicativity and the matrix
/// isomorphism on random triples.
pub fn algebra_laws(rng: &mut ChaCha8Rng, trials: usize) -> Vec<Report> {
    let triples: Vec<[Bq; 3]> =
        (0..trials).map(|_| std::array::from_fn(|_| sampling::biquaternion(rng, 1.0))).collect();
    let each = |f: &dyn Fn(&[Bq; 3]) -> f64| triples.iter().map(|t| Ok(f(t))).collect::<Vec<_>>();
    vec![
        worst("algebra.associativity", ALGEBRA_TOL, each(&|[a, b, c]| ((*a * *b) * *c).distance(&(*a * (*b * *c))))),
        worst(
            "algebra.involutions",
            ALGEBRA_TOL,
            each(&|[a, b, _]| {
                let ab = *a * *b;
                [
                    ab.bar().distance(&(b.bar() * a.bar())),
                    ab.star().distance(&(a.star() * b.star())),
                    ab.tilde().distance(&(b.tilde() * a.tilde())),
                    a.bar().bar().distance(a),
                    a.star().star().distance(a),
                    a.tilde().tilde().distance(a),
                ]
                .into_iter()
                .fold(0.0, f64::max)
            }),
        ),
        worst(
            "algebra.norm_multiplicative",
            ALGEBRA_TOL,
            each(&|[a, b, _]| ((*a * *b).semi_norm() - a.semi_norm() * b.semi_norm()).norm()),
        ),
        worst(
            "algebra.matrix_multiplicative",
            ALGEBRA_TOL,
            each(&|[a, b, _]| (*a * *b).to_matrix().max_abs_diff(&(a.to_matrix() * b.to_matrix()))),
        ),
    ]
}

fn synthetic_fields() -> Vec<(&'static str, Box<dyn EmField>)> {
    vec![
        ("x1_e1", Box::new(PolynomialField::x1_e1())),
        ("trig", Box::new(TrigField)),
        (
            "polynomial",
            Box::new(
                PolynomialField::affine(Bq::e2(), [Bq::e1(), Bq::e3(), Bq::i() * Bq::e1(), Bq::e2()])
                    .with_quadratic(0, 3, Bq::i() * Bq::e2())
                    .with_quadratic(1, 2, Bq::e3()),
            ),
        ),
    ]
}

fn named(r: biquat::Result<Report>, check: String, tol: f64) -> Report {
    match r {
        Ok(r) => r.renamed(check).without_detail(),
        Err(e) => Report::failure(check, tol, &e),
    }
}

/// Biquaternion and classical residuals agree on catalog and synthetic fields,
/// and the catalog fields solve Maxwell's equations.
pub fn maxwell_equivalence(rng: &mut ChaCha8Rng, events: usize) -> Vec<Report> {
    let mut out = Vec::new();
    for name in CatalogName::ALL {
        let evs = sampling::events(rng, events);
        let field = name.default_spec().build();
        let field = match field {
            Ok(f) => f,
            Err(e) => {
                out.push(Report::failure(format!("maxwell.residual.{}", name.as_str()), RESIDUAL_TOL, &e));
                continue;
            }
        };
        out.push(named(residual_sweep(&field, &evs, RESIDUAL_TOL), format!("maxwell.residual.{}", name.as_str()), RESIDUAL_TOL));
        out.push(named(equivalence_check(&field, &evs), format!("maxwell.equivalence.{}", name.as_str()), RESIDUAL_TOL));
    }
    for (name, field) in synthetic_fields() {
        let evs = sampling::events(rng, events);
        out.push(named(equivalence_check(&field, &evs), format!("maxwell.equivalence.{name}"), RESIDUAL_TOL));
    }
    out
}

/// `compose(decompose(F)) = F` for random non-null fields; null values refused.
pub fn spinor_round_trip(rng: &mut ChaCha8Rng, trials: usize) -> Vec<Report> {
    let u = Bq::e3();
    let fields: Vec<Bq> = (0..trials).map(|_| sampling::field(rng, &u)).collect();
    let round_trip = worst(
        "spinor.round_trip",
        ROUND_TRIP_TOL,
        fields.iter().map(|f| Ok(compose(&decompose(f, &u)?).distance(f) / f.norm())),
    );

    let wave = CatalogName::PlaneWave.default_spec().build();
    let evs = sampling::events(rng, 20);
    let misses = match wave {
        Ok(w) => evs
            .iter()
            .filter(|e| !matches!(w.eval(e).and_then(|f| decompose(&f, &u)), Err(Error::NullField { .. })))
            .count(),
        Err(_) => evs.len(),
    };
    let null = with_detail(
        Report::single("spinor.null_rejected", misses as f64, 0.0),
        &[("plane_wave_values", evs.len() as f64)],
    );
    vec![round_trip, null]
}

/// Six independent real components and a two-dimensional gauge null space.
pub fn dof_count(rng: &mut ChaCha8Rng, trials: usize, u: &Bq) -> Vec<Report> {
    let mut rank_miss = Vec::new();
    let mut overlap_gap = Vec::new();
    for _ in 0..trials {
        let dec = sampling::decomposition(rng, u);
        match dof_rank(&dec) {
            Ok(a) => {
                let smax = a.singular_values[0];
                let kept = a.singular_values.iter().filter(|&&s| s >= DOF_KEEP * smax).count();
                let dropped = a.singular_values.iter().filter(|&&s| s <= DOF_DROP * smax).count();
                rank_miss.push(Ok(kept.abs_diff(6) as f64 + dropped.abs_diff(2) as f64));
                overlap_gap.push(Ok(1.0 - a.gauge_overlap));
            }
            Err(e) => {
                rank_miss.push(Err(e.clone()));
                overlap_gap.push(Err(e));
            }
        }
    }
    vec![worst("dof.rank_six", 0.0, rank_miss), worst("dof.gauge_null_space", OVERLAP_TOL, overlap_gap)]
}

/// `F(e^{iθ}ψ) = e^{2iθ} F(ψ)`, and the bar-star pairing ignores the phase.
pub fn phase_duality(rng: &mut ChaCha8Rng, trials: usize) -> Vec<Report> {
    let u = Bq::e3();
    let mut squared = Vec::new();
    let mut invariant = Vec::new();
    for _ in 0..trials {
        let dec = sampling::decomposition(rng, &u);
        let theta = rng.random_range(-std::f64::consts::PI..std::f64::consts::PI);
        let f = compose(&dec);
        let rotated = phase_probe(&dec, theta, PairingConvention::Bar);
        squared.push(Ok(rotated.distance(&f.scale(C64::from_polar(1.0, 2.0 * theta))) / f.norm()));
        let base = phase_probe(&dec, 0.0, PairingConvention::BarStar);
        let probe = phase_probe(&dec, theta, PairingConvention::BarStar);
        invariant.push(Ok(probe.distance(&base) / base.norm()));
    }
    vec![worst("spinor.phase_squares", PHASE_TOL, squared), worst("spinor.bar_star_invariant", PHASE_TOL, invariant)]
}

/// Kernel dimensions on and off shell, and the residuals of constructed solutions.
pub fn dirac_solutions(rng: &mut ChaCha8Rng, momenta: usize, events: usize) -> Vec<Report> {
    let u = Bq::e3();
    let mut dim_on = Vec::new();
    let mut gap = Vec::new();
    let mut dim_off = Vec::new();
    let mut lanczos = Vec::new();
    let mut kg = Vec::new();
    for _ in 0..momenta {
        let m = rng.random_range(0.2..2.0);
        let on = sampling::on_shell(rng, m);
        match momentum_symbol_kernel(&on, &u) {
            Ok(k) => {
                dim_on.push(Ok(k.dim.abs_diff(8) as f64));
                gap.push(Ok(KERNEL_GAP / k.gap()));
            }
            Err(e) => dim_on.push(Err(e)),
        }
        dim_off.push(momentum_symbol_kernel(&sampling::off_shell(rng, m), &u).map(|k| k.dim as f64));

        let coeffs: Vec<f64> = (0..8).map(|_| rng.random_range(-1.0..1.0)).collect();
        let evs = sampling::events(rng, events);
        match construct_solution(&on, &u, &coeffs) {
            Ok(psi) => {
                for e in &evs {
                    lanczos.push(lanczos_residual(&psi, m, &u, e).map(|r| r.norm()));
                    kg.push(klein_gordon_residual(&psi, m, e).map(|r| r.norm()));
                }
            }
            Err(e) => lanczos.push(Err(e)),
        }
    }
    vec![
        worst("dirac.kernel_dim_on_shell", 0.0, dim_on),
        // the gap requirement is met when this ratio is at most one
        worst("dirac.kernel_gap", 1.0, gap),
        worst("dirac.kernel_dim_off_shell", 0.0, dim_off),
        worst("dirac.lanczos_residual", LANCZOS_TOL, lanczos),
        worst("dirac.klein_gordon_residual", KG_TOL, kg),
    ]
}

/// Every time reversal of the spinor equation squares to −1.
pub fn fermion_time_reversal(m: f64, u: &Bq) -> (Report, Option<TimeReversalSearch>) {
    match time_reversal_search(m, u) {
        Ok(s) => {
            let signs = s.time_reversals.iter().filter(|t| t.t_square_sign != -1).count();
            let r = worst("dirac.time_reversal_square", T_SQUARE_TOL, s.time_reversals.iter().map(|t| Ok(t.minus_one_defect)));
            let r = with_detail(
                r,
                &[
                    ("candidates", s.candidates as f64),
                    ("time_reversals", s.time_reversals.len() as f64),
                    ("charge_conjugate_composites", s.charge_conjugate.len() as f64),
                    ("sign_not_minus_one", signs as f64),
                ],
            );
            (r, Some(s))
        }
        Err(e) => (Report::failure("dirac.time_reversal_square", T_SQUARE_TOL, &e), None),
    }
}

/// The electromagnetic time reversal squares to +1 on every catalog field.
pub fn boson_time_reversal(rng: &mut ChaCha8Rng, events: usize) -> Report {
    let mut defects = Vec::new();
    for name in CatalogName::ALL {
        let evs = sampling::events(rng, events);
        match name.default_spec().build() {
            Ok(f) => {
                let twice = time_reversal_em(time_reversal_em(&f));
                for e in &evs {
                    defects.push(twice.eval(e).and_then(|a| Ok(a.distance(&f.eval(e)?))));
                }
            }
            Err(e) => defects.push(Err(e)),
        }
    }
    worst("maxwell.time_reversal_square", EM_T_SQUARE_TOL, defects)
}

/// Shortfall of a lower bound, phrased so that passing means `≤ 0`.
fn at_least(check: &str, value: f64, threshold: f64) -> Report {
    with_detail(
        Report::single(check, (threshold - value).max(0.0), 0.0),
        &[("observed", value), ("threshold", threshold)],
    )
}

/// Effective mass is the constant `m` for a true solution and varies along a
/// Coulomb field.
pub fn mass_profiles(rng: &mut ChaCha8Rng, events: usize) -> Vec<Report> {
    let u = Bq::e3();
    let m = 1.0;
    let mom = sampling::on_shell(rng, m);
    let coeffs: Vec<f64> = (0..8).map(|_| rng.random_range(-1.0..1.0)).collect();
    let evs = sampling::events(rng, events);
    let constant = match construct_solution(&mom, &u, &coeffs).and_then(|psi| effective_mass(&psi, &u, &evs)) {
        Ok(p) => {
            let off = p.samples.iter().map(|s| s.mass.distance(&Bq::real_scalar(m)) / m).fold(0.0, f64::max);
            with_detail(
                Report::single("dirac.mass_constant", off.max(p.summary.relative_variation), MASS_CONSTANCY_TOL),
                &[("relative_variation", p.summary.relative_variation), ("max_deviation_from_scalar", p.summary.max_deviation_from_scalar)],
            )
        }
        Err(e) => Report::failure("dirac.mass_constant", MASS_CONSTANCY_TOL, &e),
    };

    let ray: Vec<Event> = (0..50).map(|k| Event::new(0.0, 0.5 + 1.5 * k as f64 / 49.0, 0.0, 0.0)).collect();
    let coulomb = match effective_mass_field(CoulombField::new(1.0), &u, &ray) {
        Ok(p) => at_least("dirac.coulomb_mass_varies", p.summary.relative_variation, COULOMB_VARIATION),
        Err(e) => Report::failure("dirac.coulomb_mass_varies", 0.0, &e),
    };
    vec![constant, coulomb]
}
