//! Command dispatch: validate domain compatibility, call the library, and
//! assemble the output document.

use crate::job::{Command, Job, JobError};
use serde_json::{json, Value};
use tsat_core::groebner::{self, HeightVal, MonomialOrder};
use tsat_core::heights;
use tsat_core::ringcore::{CoeffDomain, Ideal, Poly, RingSpec};
use tsat_core::saturation::{self, GradedIdealPlus, SatOutcome};
use tsat_core::strength;
use tsat_core::suites;
use tsat_core::syntax::poly_to_string;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_APPLICABLE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

pub struct RunOutput {
    pub doc: Value,
    pub exit_code: i32,
}

fn input_error(msg: impl Into<String>) -> JobError {
    JobError {
        line: 1,
        col: 1,
        msg: msg.into(),
    }
}

fn require_domain(ring: &RingSpec, allowed: &[CoeffDomain], cmd: &str) -> Result<(), JobError> {
    if !allowed.contains(&ring.domain()) {
        return Err(input_error(format!(
            "command '{cmd}' is incompatible with coefficient domain {}",
            ring.domain().name()
        )));
    }
    Ok(())
}

fn polys_doc(polys: &[Poly]) -> Value {
    Value::Array(polys.iter().map(|p| json!(poly_to_string(p))).collect())
}

fn height_doc(h: HeightVal) -> Value {
    json!(h.to_string())
}

fn base_doc(job: &Job) -> Value {
    let mut doc = json!({
        "command": job.command.name(),
        "version": env!("CARGO_PKG_VERSION"),
    });
    if let Some(ring) = &job.ring {
        doc["ring"] = json!({
            "nvars": ring.nvars(),
            "weights": ring.weights(),
            "domain": ring.domain().name(),
        });
    }
    doc
}

/// Execute a parsed job. Library errors surface as input errors; panics
/// (internal invariant violations) are handled by the binary wrapper.
pub fn run_job(job: &Job) -> Result<RunOutput, JobError> {
    let mut doc = base_doc(job);
    let mut exit_code = EXIT_OK;
    match &job.command {
        Command::Gb { ideal, order } => {
            let ring = job.ring()?;
            require_domain(ring, &[CoeffDomain::FieldQ, CoeffDomain::FieldQt], "gb")?;
            let gens = job.ideal(ideal, 1)?;
            let gb = if gens.is_empty() {
                Vec::new()
            } else {
                groebner::reduced_gb(gens, *order)
                    .map_err(|e| input_error(e.to_string()))?
                    .elements
            };
            doc["order"] = json!(match order {
                MonomialOrder::WeightedGrevlex => "grevlex".to_string(),
                MonomialOrder::Lex => "lex".to_string(),
                MonomialOrder::Block(k) => format!("block {k}"),
            });
            doc["basis"] = polys_doc(&gb);
        }
        Command::Height { ideal } => {
            let ring = job.ring()?;
            let gens = job.ideal(ideal, 1)?.to_vec();
            let i = Ideal::new(ring, gens).map_err(|e| input_error(e.to_string()))?;
            match ring.domain() {
                CoeffDomain::Dvr => {
                    let rep = heights::height_dvr_report(&i)
                        .map_err(|e| input_error(e.to_string()))?;
                    doc["generic_fiber_height"] = height_doc(rep.generic);
                    doc["special_fiber_height"] = height_doc(rep.special);
                    doc["height"] = height_doc(rep.combined);
                }
                _ => {
                    let (dim, h) =
                        groebner::dim_and_height(&i).map_err(|e| input_error(e.to_string()))?;
                    doc["dimension"] = match dim {
                        Some(d) => json!(d),
                        None => json!("empty"),
                    };
                    doc["height"] = height_doc(h);
                }
            }
        }
        Command::Sat { ideal, degree } => {
            let ring = job.ring()?;
            require_domain(ring, &[CoeffDomain::Dvr], "sat")?;
            let gens = job.ideal(ideal, 1)?.to_vec();
            let i = GradedIdealPlus::new(ring, gens).map_err(|e| input_error(e.to_string()))?;
            doc["degree_bound"] = json!(degree);
            match saturation::sat_leq_d(&i, *degree).map_err(|e| input_error(e.to_string()))? {
                SatOutcome::UnitIdeal { witness } => {
                    doc["outcome"] = json!("unit-ideal");
                    doc["witness"] = json!(poly_to_string(&witness));
                    exit_code = EXIT_NOT_APPLICABLE;
                }
                SatOutcome::Saturated(res) => {
                    doc["outcome"] = json!("saturated");
                    doc["generators"] = polys_doc(&res.gens);
                    doc["trace"] = Value::Array(
                        res.traces
                            .iter()
                            .map(|t| {
                                json!({
                                    "degree": t.degree,
                                    "ebar_dim": t.ebar_dim,
                                    "z_dims": t.z_dims(),
                                    "ell": t.ell,
                                    "new_generators": polys_doc(&t.new_gens),
                                })
                            })
                            .collect(),
                    );
                }
            }
        }
        Command::StrengthBound { poly } => {
            let ring = job.ring()?;
            require_domain(
                ring,
                &[CoeffDomain::FieldQ, CoeffDomain::FieldQt],
                "strength-bound",
            )?;
            let f = &job.polys[poly];
            let bound =
                strength::strength_lower_bound(f).map_err(|e| input_error(e.to_string()))?;
            doc["target"] = json!(poly_to_string(f));
            doc["strength_lower_bound"] = height_doc(bound);
        }
        Command::Tame { poly, witness } => {
            let ring = job.ring()?;
            require_domain(ring, &[CoeffDomain::FieldQ, CoeffDomain::FieldQt], "tame")?;
            let f = &job.polys[poly];
            let w = &job.decomps[witness];
            if let Err(e) = strength::verify_decomposition(f, w) {
                doc["outcome"] = json!("witness-rejected");
                doc["reason"] = json!(e.to_string());
                return Ok(RunOutput {
                    doc,
                    exit_code: EXIT_NOT_APPLICABLE,
                });
            }
            let res = strength::tame_strength(f, w).map_err(|e| input_error(e.to_string()))?;
            doc["outcome"] = json!("tamed");
            doc["target"] = json!(poly_to_string(&res.target));
            doc["t_shift_applied"] = json!(res.f_shift);
            doc["pairs"] = Value::Array(
                res.decomposition
                    .pairs
                    .iter()
                    .zip(res.decomposition.pair_regularity())
                    .map(|((g, h), (regular, min_val))| {
                        json!({
                            "g": poly_to_string(g),
                            "h": poly_to_string(h),
                            "regular": regular,
                            "min_valuation": min_val,
                        })
                    })
                    .collect(),
            );
        }
        Command::Syzygy { ideal, degree } | Command::Ebar { ideal, degree } => {
            let ring = job.ring()?;
            require_domain(ring, &[CoeffDomain::FieldQ], job.command.name())?;
            let gens = job.ideal(ideal, 1)?;
            if matches!(job.command, Command::Syzygy { .. }) {
                let piece = groebner::syzygy_space(gens, *degree)
                    .map_err(|e| input_error(e.to_string()))?;
                doc["degree"] = json!(degree);
                doc["dimension"] = json!(piece.basis.len());
                doc["basis"] = Value::Array(
                    piece
                        .basis
                        .iter()
                        .map(|tuple| polys_doc(tuple))
                        .collect(),
                );
            } else {
                let ebar = groebner::ebar_basis(gens, *degree)
                    .map_err(|e| input_error(e.to_string()))?;
                doc["degree"] = json!(degree);
                doc["dimension"] = json!(ebar.dim());
                doc["representatives"] = Value::Array(
                    ebar.representatives()
                        .iter()
                        .map(|tuple| polys_doc(tuple))
                        .collect(),
                );
            }
        }
        Command::Contract { ideal, degree } => {
            let ring = job.ring()?;
            require_domain(ring, &[CoeffDomain::FieldQt], "contract")?;
            let gens = job.ideal(ideal, 1)?.to_vec();
            let i = Ideal::new(ring, gens).map_err(|e| input_error(e.to_string()))?;
            let res = heights::contraction_degreewise(&i, *degree)
                .map_err(|e| input_error(e.to_string()))?;
            doc["degree_bound"] = json!(res.degree_bound);
            doc["generators"] = polys_doc(&res.gens);
        }
        Command::Chains { first, second } => {
            let ring = job.ring()?;
            require_domain(ring, &[CoeffDomain::Dvr], "chains")?;
            let build = |name: &String| -> Result<heights::PrimeChain, JobError> {
                let links = job.chains[name]
                    .iter()
                    .map(|n| {
                        Ideal::new(ring, job.ideals[n].clone())
                            .map_err(|e| input_error(e.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(heights::PrimeChain { links })
            };
            let c1 = build(first)?;
            let l1 = heights::chain_verify(&c1).map_err(|e| input_error(e.to_string()))?;
            doc["length"] = json!(l1);
            if let Some(second) = second {
                let c2 = build(second)?;
                let l2 = heights::chain_verify(&c2).map_err(|e| input_error(e.to_string()))?;
                let equal = heights::catenary_compare(&c1, &c2)
                    .map_err(|e| input_error(e.to_string()))?;
                doc["second_length"] = json!(l2);
                doc["equal_lengths"] = json!(equal);
            }
        }
        Command::Selftest { seed } => {
            let seed = seed.unwrap_or(suites::DEFAULT_SEED);
            let reports = suites::run_all(seed);
            let all_pass = reports.iter().all(|r| r.passed());
            doc["seed"] = json!(seed);
            doc["suites"] = Value::Array(
                reports
                    .iter()
                    .map(|r| {
                        json!({
                            "name": r.name,
                            "cases": r.cases,
                            "failures": r.failures,
                            "passed": r.passed(),
                        })
                    })
                    .collect(),
            );
            doc["all_passed"] = json!(all_pass);
            if !all_pass {
                exit_code = EXIT_INTERNAL;
            }
        }
    }
    Ok(RunOutput { doc, exit_code })
}

/// Parse and run a job document, rendering the output; the convenience
/// entry point shared by the binary and the golden tests.
pub fn execute(text: &str, format: crate::output::Format) -> (String, i32) {
    match crate::job::parse_job(text) {
        Err(e) => (format!("error: {e}\n"), EXIT_INPUT_ERROR),
        Ok(job) => match run_job(&job) {
            Err(e) => (format!("error: {e}\n"), EXIT_INPUT_ERROR),
            Ok(out) => (crate::output::render(&out.doc, format), out.exit_code),
        },
    }
}
