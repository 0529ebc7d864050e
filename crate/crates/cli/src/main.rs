//! `biquat`: run the structural checks of the biquaternion field equations and
//! emit deterministic reports.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 when the
//! invocation or its input files are invalid.

mod checks;
mod input;
mod output;

use std::io::Write;
use std::process::ExitCode;

use biquat::dirac::{effective_mass_field, momentum_symbol_kernel, Momentum};
use biquat::maxwell::{equivalence_check_tol, residual_sweep, RESIDUAL_TOL};
use biquat::report::Report;
use biquat::spinor::{compose, decompose, dof_rank};
use biquat::sampling;
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use input::{ConfigError, ConfigResult, Ray};
use output::Envelope;

#[derive(Debug, Parser)]
#[command(name = "biquat", version, about = "Structural checks for biquaternion Maxwell and Dirac-Lanczos fields")]
struct Cli {
    /// Seed for every random draw; recorded in the report.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every check in order.
    Verify,
    /// Maxwell residual and classical equivalence for one field.
    Maxwell {
        /// Catalog name, field-spec file, or inline field-spec JSON.
        #[arg(long)]
        field: String,
        /// Events file or inline JSON `[[t,x1,x2,x3],...]`; random events otherwise.
        #[arg(long)]
        events: Option<String>,
        /// Number of random events when `--events` is absent.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        #[arg(long, default_value_t = RESIDUAL_TOL)]
        tol: f64,
    },
    /// Spinor decomposition of one field value.
    Decompose {
        /// Biquaternion JSON, inline or from a file.
        #[arg(long = "F", allow_hyphen_values = true)]
        field: String,
        /// Reference axis: e1, e2, e3, a signed name, or `x,y,z`.
        #[arg(long, default_value = "e3", allow_hyphen_values = true)]
        u: String,
        #[arg(long, default_value_t = checks::ROUND_TRIP_TOL)]
        tol: f64,
    },
    /// Rank of the spinor-to-field map at random decompositions.
    Dof {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        #[arg(long, default_value = "e3", allow_hyphen_values = true)]
        u: String,
    },
    /// Dirac-Lanczos equation checks.
    Dirac {
        #[command(subcommand)]
        command: DiracCommand,
    },
    /// Algebra checks.
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
}

#[derive(Debug, Subcommand)]
enum DiracCommand {
    /// Plane-wave solution space at one momentum.
    Kernel {
        /// Energy; defaults to the positive on-shell value.
        #[arg(long = "E", allow_hyphen_values = true)]
        energy: Option<f64>,
        /// Spatial momentum `px,py,pz`.
        #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
        p: String,
        #[arg(long)]
        m: f64,
        #[arg(long, default_value = "e3", allow_hyphen_values = true)]
        u: String,
    },
    /// Search the candidate time reversals and report T².
    Treverse {
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long, default_value = "e3", allow_hyphen_values = true)]
        u: String,
    },
    /// Effective mass of the spinorized field along a ray.
    Mass {
        /// Catalog name, field-spec file, or inline field-spec JSON.
        #[arg(long)]
        field: String,
        /// `AXIS:START:END` with AXIS one of t, x1, x2, x3.
        #[arg(long, default_value = "x1:0.5:2", allow_hyphen_values = true)]
        ray: String,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(2..))]
        samples: u32,
        #[arg(long, default_value = "e3", allow_hyphen_values = true)]
        u: String,
        /// Whether the mass should come out constant or varying.
        #[arg(long, value_enum, default_value_t = Expect::Constant)]
        expect: Expect,
        /// Constancy tolerance, or the minimum relative variation when varying.
        #[arg(long)]
        tol: Option<f64>,
    },
}

#[derive(Debug, Subcommand)]
enum AlgebraCommand {
    /// Algebra laws on random triples.
    Selftest {
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Constant,
    Varying,
}

fn verify(rng: &mut ChaCha8Rng) -> Envelope {
    let mut reports = Vec::new();
    reports.extend(checks::algebra_laws(rng, 1000));
    reports.extend(checks::maxwell_equivalence(rng, 100));
    reports.extend(checks::spinor_round_trip(rng, 1000));
    reports.extend(checks::dof_count(rng, 100, &biquat::Bq::e3()));
    reports.extend(checks::phase_duality(rng, 100));
    reports.extend(checks::dirac_solutions(rng, 20, 100));
    reports.push(checks::fermion_time_reversal(1.0, &biquat::Bq::e3()).0);
    reports.push(checks::boson_time_reversal(rng, 100));
    reports.extend(checks::mass_profiles(rng, 50));
    Envelope::new("verify", reports, None)
}

fn maxwell(rng: &mut ChaCha8Rng, field: &str, events: Option<&str>, trials: u32, tol: f64) -> ConfigResult<Envelope> {
    let f = input::field(field)?;
    let evs = match events {
        Some(arg) => input::events(arg)?,
        None => sampling::events(rng, trials as usize),
    };
    let residual = residual_sweep(&f, &evs, tol).unwrap_or_else(|e| Report::failure("maxwell_residual", tol, &e));
    let equivalence =
        equivalence_check_tol(&f, &evs, tol).unwrap_or_else(|e| Report::failure("maxwell_equivalence", tol, &e));
    Ok(Envelope::new("maxwell", vec![residual, equivalence], None))
}

fn decompose_value(field: &str, axis: &str, tol: f64) -> ConfigResult<Envelope> {
    let f = input::biquaternion(field)?;
    let u = input::axis(axis)?;
    let outcome = decompose(&f, &u).and_then(|dec| Ok((dec, dof_rank(&dec)?)));
    Ok(match outcome {
        Ok((dec, dof)) => {
            let err = compose(&dec).distance(&f) / f.norm();
            let result = json!({
                "rho": dec.rho,
                "beta": dec.beta,
                "L": dec.rotor.value(),
                "gauge_nullity": dof.nullity,
            });
            Envelope::new("decompose", vec![Report::single("decompose", err, tol)], Some(result))
        }
        Err(e) => Envelope::new("decompose", vec![Report::failure("decompose", tol, &e)], None),
    })
}

fn kernel(energy: Option<f64>, p: &str, m: f64, axis: &str) -> ConfigResult<Envelope> {
    let p = input::vector3(p)?;
    let u = input::axis(axis)?;
    if !(m.is_finite() && m >= 0.0) {
        return Err(ConfigError(format!("mass must be finite and non-negative, got {m}")));
    }
    let mom = match energy {
        Some(e) => Momentum::new(e, p, m),
        None => Momentum::on_shell_positive(p, m),
    };
    let expected = if mom.on_shell() { 8 } else { 0 };
    Ok(match momentum_symbol_kernel(&mom, &u) {
        Ok(k) => {
            let mut reports = vec![Report::single("dirac.kernel_dim", k.dim.abs_diff(expected) as f64, 0.0)];
            if k.dim > 0 {
                reports.push(Report::single("dirac.kernel_gap", checks::KERNEL_GAP / k.gap(), 1.0));
            }
            let result = json!({
                "momentum": mom,
                "on_shell": mom.on_shell(),
                "dim": k.dim,
                "singular_values": k.singular_values,
                "basis": k.basis,
            });
            Envelope::new("dirac kernel", reports, Some(result))
        }
        Err(e) => Envelope::new("dirac kernel", vec![Report::failure("dirac.kernel_dim", 0.0, &e)], None),
    })
}

fn treverse(m: f64, axis: &str) -> ConfigResult<Envelope> {
    let u = input::axis(axis)?;
    let (report, search) = checks::fermion_time_reversal(m, &u);
    let result = search.map(|s| {
        let list = |entries: &[biquat::dirac::TimeReversalEntry]| {
            entries
                .iter()
                .map(|t| json!({ "descriptor": t.descriptor, "t_square_sign": t.t_square_sign }))
                .collect::<Vec<_>>()
        };
        json!({
            "candidates": s.candidates,
            "time_reversals": list(&s.time_reversals),
            "charge_conjugate": list(&s.charge_conjugate),
        })
    });
    Ok(Envelope::new("dirac treverse", vec![report], result))
}

fn mass(field: &str, ray: &str, samples: u32, axis: &str, expect: Expect, tol: Option<f64>) -> ConfigResult<Envelope> {
    let f = input::field(field)?;
    let ray = Ray::parse(ray)?;
    let u = input::axis(axis)?;
    let evs = ray.events(samples as usize);
    Ok(match effective_mass_field(f, &u, &evs) {
        Ok(p) => {
            let variation = p.summary.relative_variation;
            let report = match expect {
                Expect::Constant => {
                    Report::single("dirac.mass_constant", variation, tol.unwrap_or(checks::MASS_CONSTANCY_TOL))
                }
                Expect::Varying => {
                    let threshold = tol.unwrap_or(checks::COULOMB_VARIATION);
                    Report::single("dirac.mass_varies", (threshold - variation).max(0.0), 0.0)
                }
            };
            Envelope::new("dirac mass", vec![report], Some(json!({ "summary": p.summary, "samples": p.samples })))
        }
        Err(e) => Envelope::new("dirac mass", vec![Report::failure("dirac.mass", tol.unwrap_or(0.0), &e)], None),
    })
}

fn run(cli: &Cli) -> ConfigResult<Envelope> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let env = match &cli.command {
        Command::Verify => verify(&mut rng),
        Command::Maxwell { field, events, trials, tol } => maxwell(&mut rng, field, events.as_deref(), *trials, *tol)?,
        Command::Decompose { field, u, tol } => decompose_value(field, u, *tol)?,
        Command::Dof { trials, u } => {
            let u = input::axis(u)?;
            Envelope::new("dof", checks::dof_count(&mut rng, *trials as usize, &u), None)
        }
        Command::Dirac { command } => match command {
            DiracCommand::Kernel { energy, p, m, u } => kernel(*energy, p, *m, u)?,
            DiracCommand::Treverse { m, u } => treverse(*m, u)?,
            DiracCommand::Mass { field, ray, samples, u, expect, tol } => mass(field, ray, *samples, u, *expect, *tol)?,
        },
        Command::Algebra { command: AlgebraCommand::Selftest { trials } } => {
            Envelope::new("algebra selftest", checks::algebra_laws(&mut rng, *trials as usize), None)
        }
    };
    Ok(env.with_seed(cli.seed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(env) => {
            let text = if cli.json { env.to_json() + "\n" } else { env.to_text() };
            // a closed pipe is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(env.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
