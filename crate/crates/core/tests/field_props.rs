use biquat::dirac::{
    construct_solution, klein_gordon_residual, lanczos_residual, momentum_symbol_kernel, time_reversal_search,
};
use biquat::fields::{CatalogName, EmField, Event, PolynomialField, SpacetimeField, Superposition, TrigField};
use biquat::maxwell::{equivalence_check, maxwell_residual, residual_sweep, time_reversal_em, RESIDUAL_TOL};
use biquat::{sampling, Bq};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng() -> impl Strategy<Value = ChaCha8Rng> {
    any::<u64>().prop_map(ChaCha8Rng::seed_from_u64)
}

fn synthetic() -> Vec<Box<dyn EmField>> {
    vec![
        Box::new(PolynomialField::x1_e1()),
        Box::new(TrigField),
        Box::new(
            PolynomialField::affine(Bq::e2(), [Bq::e1(), Bq::e3(), Bq::i() * Bq::e1(), Bq::e2()])
                .with_quadratic(0, 3, Bq::i() * Bq::e2())
                .with_quadratic(1, 2, Bq::e3()),
        ),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn catalog_fields_solve_maxwell(mut r in rng()) {
        let events = sampling::events(&mut r, 40);
        for name in CatalogName::ALL {
            let f = name.default_spec().build().unwrap();
            prop_assert!(residual_sweep(&f, &events, RESIDUAL_TOL).unwrap().pass, "{}", name.as_str());
            prop_assert!(equivalence_check(&f, &events).unwrap().pass);
        }
    }

    #[test]
    fn equivalence_holds_off_shell(mut r in rng()) {
        let events = sampling::events(&mut r, 40);
        for f in synthetic() {
            prop_assert!(equivalence_check(&f, &events).unwrap().pass);
        }
    }

    #[test]
    fn maxwell_residual_is_real_linear(mut r in rng(), c in -3.0f64..3.0) {
        let e = sampling::event(&mut r);
        let a = PolynomialField::affine(Bq::zero(), [Bq::e1(), Bq::e3(), Bq::i() * Bq::e1(), Bq::e2()]);
        let sum = Superposition::new(vec![Box::new(a.clone()), Box::new(ScaledField(TrigField, c))]);
        let (h_sum, s_sum) = maxwell_residual(&sum, &e).unwrap();
        let (h_a, s_a) = maxwell_residual(&a, &e).unwrap();
        let (h_b, s_b) = maxwell_residual(&TrigField, &e).unwrap();
        prop_assert!(h_sum.distance(&(h_a + h_b.scale_real(c))) <= 1e-12);
        prop_assert!(s_sum.distance(&(s_a + s_b.scale_real(c))) <= 1e-12);
    }

    #[test]
    fn em_time_reversal_is_an_involution(mut r in rng()) {
        let events = sampling::events(&mut r, 30);
        for name in CatalogName::ALL {
            let f = name.default_spec().build().unwrap();
            let once = time_reversal_em(&f);
            let twice = time_reversal_em(&once);
            prop_assert!(residual_sweep(&once, &events, RESIDUAL_TOL).unwrap().pass);
            for e in &events {
                prop_assert!(twice.eval(e).unwrap().distance(&f.eval(e).unwrap()) <= 1e-15);
            }
        }
    }

    #[test]
    fn kernel_dimension_tracks_the_shell(mut r in rng(), m in 0.2f64..2.0) {
        for u in [Bq::e3(), Bq::real_vector([0.6, 0.0, 0.8])] {
            let on = momentum_symbol_kernel(&sampling::on_shell(&mut r, m), &u).unwrap();
            prop_assert_eq!(on.dim, 8);
            prop_assert!(on.gap() >= 1e6);
            let off = momentum_symbol_kernel(&sampling::off_shell(&mut r, m), &u).unwrap();
            prop_assert_eq!(off.dim, 0);
        }
    }

    #[test]
    fn constructed_solutions_solve_lanczos_and_klein_gordon(mut r in rng(), m in 0.2f64..2.0) {
        let u = Bq::e3();
        let mom = sampling::on_shell(&mut r, m);
        let coeffs: Vec<f64> = (0..8).map(|_| rand::Rng::random_range(&mut r, -1.0..1.0)).collect();
        let psi = construct_solution(&mom, &u, &coeffs).unwrap();
        for e in sampling::events(&mut r, 25) {
            prop_assert!(lanczos_residual(&psi, m, &u, &e).unwrap().norm() <= 1e-10);
            prop_assert!(klein_gordon_residual(&psi, m, &e).unwrap().norm() <= 1e-8);
        }
    }
}

/// `c F`, to assemble real-linear combinations.
struct ScaledField<F>(F, f64);

impl<F: EmField> SpacetimeField for ScaledField<F> {
    fn eval(&self, e: &Event) -> biquat::Result<Bq> {
        Ok(self.0.eval(e)?.scale_real(self.1))
    }

    fn partial(&self, mu: usize, e: &Event) -> biquat::Result<Bq> {
        Ok(self.0.partial(mu, e)?.scale_real(self.1))
    }
}

impl<F: EmField> EmField for ScaledField<F> {
    fn source(&self, e: &Event) -> biquat::Result<biquat::maxwell::SourceDensity> {
        let s = self.0.source(e)?;
        Ok(biquat::maxwell::SourceDensity::new(s.charge * self.1, s.current.map(|j| j * self.1)))
    }
}

#[test]
fn every_kernel_basis_element_is_a_solution() {
    let mut r = ChaCha8Rng::seed_from_u64(5);
    let u = Bq::real_vector([0.6, 0.0, 0.8]);
    let mom = sampling::on_shell(&mut r, 1.0);
    let kernel = momentum_symbol_kernel(&mom, &u).unwrap();
    let events = sampling::events(&mut r, 100);
    for k in 0..kernel.dim {
        let mut coeffs = vec![0.0; kernel.dim];
        coeffs[k] = 1.0;
        let psi = construct_solution(&mom, &u, &coeffs).unwrap();
        for e in &events {
            assert!(lanczos_residual(&psi, 1.0, &u, e).unwrap().norm() <= 1e-10);
            assert!(klein_gordon_residual(&psi, 1.0, e).unwrap().norm() <= 1e-8);
        }
    }
}

#[test]
fn fermionic_and_bosonic_reversals_differ_in_sign() {
    let search = time_reversal_search(1.0, &Bq::e3()).unwrap();
    assert!(search.all_square_to_minus_one());
    let f = CatalogName::PlaneWave.default_spec().build().unwrap();
    let twice = time_reversal_em(time_reversal_em(&f));
    let e = Event::new(0.4, 0.1, -0.3, 0.9);
    assert_eq!(twice.eval(&e).unwrap(), f.eval(&e).unwrap());
}
