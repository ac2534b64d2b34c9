//! Command implementations: validated configuration, report builders, and
//! the oracle-equivalence verification suite.

use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use spinstar::analytic::{self, EigenLevel, ModelParams};
use spinstar::angular::{self, StateVector, DENSE_SITE_CAP};
use spinstar::error::Error;
use spinstar::oracle::{self, EigenDecomposition, PauliAxis};
use spinstar::qinfo::{self, StateInput, X_STATE_TOL_DEFAULT};

use crate::output::{fmt_g12, to_json_line};

/// Outer-spin cap for dense computations embedded in CLI commands (the
/// window scan, numeric entanglement/correlation columns, and `verify`).
/// Raise it with `--oracle-cap`; the hard memory-driven cap of the oracle
/// module still applies to what a single dense problem may cost.
pub const DEFAULT_ORACLE_CAP: u32 = 8;

const AMPLITUDE_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Validation,
    Resource,
    Verification,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Validation => 1,
            ErrorKind::Resource => 2,
            ErrorKind::Verification => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ErrorKind::Validation => "validation",
            ErrorKind::Resource => "resource",
            ErrorKind::Verification => "verification",
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn validation(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Validation,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let kind = match err {
            Error::Resource { .. } => ErrorKind::Resource,
            _ => ErrorKind::Validation,
        };
        CliError {
            kind,
            message: err.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// A fully validated run configuration.
#[derive(Debug)]
pub struct RunConfig {
    pub command: CommandSpec,
    pub format: OutputFormat,
}

#[derive(Debug)]
pub enum CommandSpec {
    Spectrum {
        params: ModelParams,
        normalize: bool,
    },
    Ground {
        params: ModelParams,
        normalize: bool,
    },
    Entanglement {
        n_outer: u32,
        coupling: f64,
        field: f64,
        cap: u32,
    },
    Correlations {
        n_outer: u32,
        coupling: f64,
        field: f64,
        cap: u32,
    },
    Window {
        n_outer: u32,
        coupling: f64,
        scan: bool,
        normalize: bool,
        cap: u32,
    },
    Sweep {
        n_min: u32,
        n_max: u32,
        coupling: f64,
        cap: u32,
    },
    Verify {
        cap: u32,
    },
}

/// Finished command output: the stdout payload and the process exit code.
pub struct CommandOutput {
    pub body: String,
    pub exit_code: i32,
}

pub fn run(config: &RunConfig) -> Result<CommandOutput, CliError> {
    let body = match &config.command {
        CommandSpec::Spectrum { params, normalize } => {
            to_json_line(&spectrum_report(params, *normalize)?)
        }
        CommandSpec::Ground { params, normalize } => {
            to_json_line(&ground_report(params, *normalize)?)
        }
        CommandSpec::Entanglement {
            n_outer,
            coupling,
            field,
            cap,
        } => to_json_line(&entanglement_report(*n_outer, *coupling, *field, *cap)?),
        CommandSpec::Correlations {
            n_outer,
            coupling,
            field,
            cap,
        } => to_json_line(&correlations_report(*n_outer, *coupling, *field, *cap)?),
        CommandSpec::Window {
            n_outer,
            coupling,
            scan,
            normalize,
            cap,
        } => to_json_line(&window_report(*n_outer, *coupling, *scan, *normalize, *cap)?),
        CommandSpec::Sweep {
            n_min,
            n_max,
            coupling,
            cap,
        } => {
            let rows = sweep_rows(*n_min, *n_max, *coupling, *cap)?;
            match config.format {
                OutputFormat::Csv => sweep_csv(&rows),
                OutputFormat::Json => to_json_line(&sweep_json(*n_min, *n_max, *coupling, *cap, &rows)),
            }
        }
        CommandSpec::Verify { cap } => {
            let (report, all_pass) = verify_report(*cap);
            let body = to_json_line(&report);
            return Ok(CommandOutput {
                body,
                exit_code: if all_pass { 0 } else { 3 },
            });
        }
    };
    Ok(CommandOutput { body, exit_code: 0 })
}

fn level_json(level: &EigenLevel, scale: f64) -> Value {
    json!({
        "j": level.j.to_string(),
        "m": level.m.to_string(),
        "sign": level.sign,
        "energy": level.energy * scale,
        "degeneracy": level.degeneracy,
    })
}

fn energy_scale(params: &ModelParams, normalize: bool) -> Result<f64, CliError> {
    if !normalize {
        return Ok(1.0);
    }
    if params.coupling() == 0.0 {
        return Err(CliError::validation(
            "--normalize requires a nonzero --coupling",
        ));
    }
    Ok(1.0 / params.coupling())
}

fn spectrum_report(params: &ModelParams, normalize: bool) -> Result<Value, CliError> {
    let scale = energy_scale(params, normalize)?;
    let levels = analytic::spectrum(params)?;
    let total: u64 = levels.iter().map(|l| l.degeneracy).sum();
    Ok(json!({
        "command": "spectrum",
        "n_outer": params.n_outer(),
        "coupling": params.coupling(),
        "field": params.field(),
        "normalized": normalize,
        "levels": levels.iter().map(|l| level_json(l, scale)).collect::<Vec<_>>(),
        "total_degeneracy": total,
    }))
}

fn amplitude_list(state: &StateVector) -> Value {
    let entries: Vec<Value> = state
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > AMPLITUDE_EPS)
        .map(|(index, a)| json!({"index": index, "re": a.re, "im": a.im}))
        .collect();
    Value::Array(entries)
}

fn ground_report(params: &ModelParams, normalize: bool) -> Result<Value, CliError> {
    let scale = energy_scale(params, normalize)?;
    let levels = analytic::spectrum(params)?;
    let lowest = levels[0].energy;
    let tie_tol = 1e-9
        * levels
            .iter()
            .fold(0.0f64, |m, l| m.max(l.energy.abs()))
            .max(1.0);
    let minima: Vec<&EigenLevel> = levels
        .iter()
        .take_while(|l| l.energy - lowest < tie_tol)
        .collect();
    let degeneracy: u64 = minima.iter().map(|l| l.degeneracy).sum();

    let mut states = Vec::new();
    let mut note: Option<&str> = None;
    if params.n_sites() > DENSE_SITE_CAP {
        note = Some("explicit amplitudes skipped: the dense state would exceed the size cap");
    } else {
        for level in &minima {
            if level.j.twice() == params.n_outer() as i64 {
                let state =
                    analytic::top_sector_eigenstate(params.n_outer(), level.m, level.sign)?;
                states.push(json!({
                    "j": level.j.to_string(),
                    "m": level.m.to_string(),
                    "sign": level.sign,
                    "amplitudes": amplitude_list(&state),
                }));
            } else {
                note = Some(
                    "some degenerate ground levels lie below the top sector; explicit vectors \
                     are only constructed for j = N/2",
                );
            }
        }
    }

    Ok(json!({
        "command": "ground",
        "n_outer": params.n_outer(),
        "coupling": params.coupling(),
        "field": params.field(),
        "normalized": normalize,
        "energy": lowest * scale,
        "degeneracy": degeneracy,
        "states": states,
        "note": note,
    }))
}

/// Builds the dense Hamiltonian for CLI-embedded work. The user-facing
/// `--oracle-cap` raises the threshold for attempting dense computations,
/// but the oracle's memory-driven hard cap still applies: beyond it the
/// build fails with a resource error rather than attempting a multi-GB
/// allocation.
fn dense_hamiltonian(params: &ModelParams, cap: u32) -> Result<spinstar::DenseOperator, Error> {
    oracle::build_hamiltonian_capped(params, cap.min(oracle::DENSE_CAP_DEFAULT))
}

/// Dense ground space at the given parameters as an equal-weight mixture.
fn dense_ground_mixture(
    n_outer: u32,
    coupling: f64,
    field: f64,
    cap: u32,
) -> Result<Vec<(f64, StateVector)>, Error> {
    let params = ModelParams::new(n_outer, coupling, field)?;
    let h = dense_hamiltonian(&params, cap)?;
    let decomp = oracle::eig_hermitian(&h)?;
    let states = decomp.ground_space(decomp.degeneracy_tol())?;
    let weight = 1.0 / states.len() as f64;
    Ok(states.into_iter().map(|s| (weight, s)).collect())
}

fn numeric_pair_concurrence(
    n_outer: u32,
    coupling: f64,
    field: f64,
    cap: u32,
) -> Result<f64, Error> {
    let mixture = dense_ground_mixture(n_outer, coupling, field, cap)?;
    let rdm = qinfo::pair_rdm(&mixture, 0, 1)?;
    qinfo::concurrence_general(&rdm)
}

fn check_pair_n(n_outer: u32, flag: &str) -> Result<(), CliError> {
    if n_outer < 2 {
        return Err(CliError::validation(format!(
            "{flag} must be at least 2 for pair quantities, got {n_outer}"
        )));
    }
    Ok(())
}

fn entanglement_report(
    n_outer: u32,
    coupling: f64,
    field: f64,
    cap: u32,
) -> Result<Value, CliError> {
    check_pair_n(n_outer, "--n")?;
    let analytic_value = analytic::pair_concurrence_analytic(n_outer)?;
    let n = n_outer as f64;

    let (numeric, note) = if n_outer <= cap {
        (
            Some(numeric_pair_concurrence(n_outer, coupling, field, cap)?),
            None,
        )
    } else {
        (
            None,
            Some(format!(
                "numeric concurrence skipped: --n {n_outer} exceeds the oracle cap {cap}; \
                 raise --oracle-cap to enable it"
            )),
        )
    };

    Ok(json!({
        "command": "entanglement",
        "n_outer": n_outer,
        "coupling": coupling,
        "field": field,
        "oracle_cap": cap,
        "concurrence_analytic": analytic_value,
        "concurrence_numeric": numeric,
        "numeric_note": note,
        "alpha_central_outer_concurrence": 1.0 / n.sqrt(),
        "alpha_outer_pair_concurrence": 2.0 / n,
    }))
}

fn correlations_report(
    n_outer: u32,
    coupling: f64,
    field: f64,
    cap: u32,
) -> Result<Value, CliError> {
    check_pair_n(n_outer, "--n")?;
    let xx_analytic = analytic::xx_correlation_analytic(n_outer)?;

    let (xx, yy, zz, note) = if n_outer <= cap {
        let mixture = dense_ground_mixture(n_outer, coupling, field, cap)?;
        let input = StateInput::Mixture(&mixture);
        (
            Some(qinfo::correlation(input, PauliAxis::X, 0, 1)?),
            Some(qinfo::correlation(input, PauliAxis::Y, 0, 1)?),
            Some(qinfo::correlation(input, PauliAxis::Z, 0, 1)?),
            None,
        )
    } else {
        (
            None,
            None,
            None,
            Some(format!(
                "numeric correlations skipped: --n {n_outer} exceeds the oracle cap {cap}; \
                 raise --oracle-cap to enable them"
            )),
        )
    };

    Ok(json!({
        "command": "correlations",
        "n_outer": n_outer,
        "coupling": coupling,
        "field": field,
        "oracle_cap": cap,
        "xx_analytic": xx_analytic,
        "xx_numeric": xx,
        "yy_numeric": yy,
        "zz_numeric": zz,
        "numeric_note": note,
    }))
}

/// Projector fidelity of `|alpha⟩` with the dense ground space at field `b`.
fn alpha_scan_point(n_outer: u32, coupling: f64, b: f64, cap: u32) -> Result<Value, Error> {
    let alpha = analytic::alpha_state(n_outer)?;
    let mixture = dense_ground_mixture(n_outer, coupling, b, cap)?;
    let mut fidelity = 0.0;
    for (_, state) in &mixture {
        fidelity += qinfo::fidelity(state, &alpha)?;
    }
    Ok(json!({
        "field": b,
        "fidelity": fidelity,
        "ground_degeneracy": mixture.len(),
        "alpha_is_ground": fidelity > 1.0 - 1e-9,
    }))
}

fn window_report(
    n_outer: u32,
    coupling: f64,
    scan: bool,
    normalize: bool,
    cap: u32,
) -> Result<Value, CliError> {
    if coupling <= 0.0 || !coupling.is_finite() {
        return Err(CliError::validation(format!(
            "--coupling must be positive for the window command, got {coupling}"
        )));
    }
    let (b_low, b_high) = analytic::alpha_field_window(n_outer, coupling)?;
    let scale = if normalize { 1.0 / coupling } else { 1.0 };

    let scan_value = if !scan {
        Value::Null
    } else if n_outer > cap {
        json!({
            "skipped": true,
            "note": format!(
                "dense scan skipped: --n {n_outer} exceeds the oracle cap {cap}; \
                 raise --oracle-cap to enable it"
            ),
        })
    } else {
        let mut fields = Vec::new();
        if b_low > 0.0 {
            fields.push(0.99 * b_low);
        }
        fields.push(0.5 * (b_low + b_high));
        fields.push(1.01 * b_high);
        let points: Result<Vec<Value>, Error> = fields
            .iter()
            .map(|&b| {
                alpha_scan_point(n_outer, coupling, b, cap).map(|mut point| {
                    if let Some(obj) = point.as_object_mut() {
                        obj.insert("field".into(), json!(b * scale));
                    }
                    point
                })
            })
            .collect();
        json!({"skipped": false, "points": points?})
    };

    Ok(json!({
        "command": "window",
        "n_outer": n_outer,
        "coupling": coupling,
        "normalized": normalize,
        "oracle_cap": cap,
        "b_low": b_low * scale,
        "b_high": b_high * scale,
        "scan": scan_value,
    }))
}

struct SweepRow {
    n_outer: u32,
    concurrence_analytic: f64,
    concurrence_numeric: Option<f64>,
    xx_analytic: f64,
    window_lo: f64,
    window_hi: f64,
}

fn sweep_rows(n_min: u32, n_max: u32, coupling: f64, cap: u32) -> Result<Vec<SweepRow>, CliError> {
    if coupling <= 0.0 || !coupling.is_finite() {
        return Err(CliError::validation(format!(
            "--coupling must be positive for the sweep command, got {coupling}"
        )));
    }
    // independent N values evaluate in parallel; rows stay in N order
    (n_min..=n_max)
        .into_par_iter()
        .map(|n| {
            let numeric = if n <= cap {
                Some(numeric_pair_concurrence(n, coupling, 0.0, cap)?)
            } else {
                None
            };
            let (window_lo, window_hi) = analytic::alpha_field_window(n, coupling)?;
            Ok(SweepRow {
                n_outer: n,
                concurrence_analytic: analytic::pair_concurrence_analytic(n)?,
                concurrence_numeric: numeric,
                xx_analytic: analytic::xx_correlation_analytic(n)?,
                window_lo,
                window_hi,
            })
        })
        .collect()
}

fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("n,concurrence_analytic,concurrence_numeric,xx_analytic,window_lo,window_hi");
    for row in rows {
        let numeric = row
            .concurrence_numeric
            .map(fmt_g12)
            .unwrap_or_default();
        out.push_str(&format!(
            "\n{},{},{},{},{},{}",
            row.n_outer,
            fmt_g12(row.concurrence_analytic),
            numeric,
            fmt_g12(row.xx_analytic),
            fmt_g12(row.window_lo),
            fmt_g12(row.window_hi),
        ));
    }
    out
}

fn sweep_json(n_min: u32, n_max: u32, coupling: f64, cap: u32, rows: &[SweepRow]) -> Value {
    json!({
        "command": "sweep",
        "n_min": n_min,
        "n_max": n_max,
        "coupling": coupling,
        "oracle_cap": cap,
        "rows": rows.iter().map(|r| json!({
            "n": r.n_outer,
            "concurrence_analytic": r.concurrence_analytic,
            "concurrence_numeric": r.concurrence_numeric,
            "xx_analytic": r.xx_analytic,
            "window_lo": r.window_lo,
            "window_hi": r.window_hi,
        })).collect::<Vec<_>>(),
    })
}

// ---------------------------------------------------------------------------
// verify: the oracle-equivalence suite
// ---------------------------------------------------------------------------

struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

struct DecompCache {
    cap: u32,
    cache: HashMap<(u32, u64, u64), EigenDecomposition>,
}

impl DecompCache {
    fn new(cap: u32) -> Self {
        DecompCache {
            cap,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, n: u32, coupling: f64, field: f64) -> Result<&EigenDecomposition, Error> {
        let key = (n, coupling.to_bits(), field.to_bits());
        if !self.cache.contains_key(&key) {
            let params = ModelParams::new(n, coupling, field)?;
            let h = dense_hamiltonian(&params, self.cap)?;
            self.cache.insert(key, oracle::eig_hermitian(&h)?);
        }
        Ok(&self.cache[&key])
    }

    fn ground_mixture(
        &mut self,
        n: u32,
        coupling: f64,
        field: f64,
    ) -> Result<Vec<(f64, StateVector)>, Error> {
        let decomp = self.get(n, coupling, field)?;
        let states = decomp.ground_space(decomp.degeneracy_tol())?;
        let weight = 1.0 / states.len() as f64;
        Ok(states.into_iter().map(|s| (weight, s)).collect())
    }
}

fn expanded_analytic(params: &ModelParams) -> Vec<f64> {
    let mut energies: Vec<f64> = analytic::spectrum(params)
        .expect("validated parameters")
        .iter()
        .flat_map(|l| std::iter::repeat(l.energy).take(l.degeneracy as usize))
        .collect();
    energies.sort_by(f64::total_cmp);
    energies
}

fn run_check(
    checks: &mut Vec<Check>,
    name: &'static str,
    body: impl FnOnce() -> Result<(bool, String), Error>,
) {
    let (pass, detail) = match body() {
        Ok(result) => result,
        Err(err) => (false, format!("errored: {err}")),
    };
    checks.push(Check { name, pass, detail });
}

fn verify_report(cap: u32) -> (Value, bool) {
    let mut checks: Vec<Check> = Vec::new();
    let mut cache = DecompCache::new(cap);
    let window_cap = cap.min(8);

    run_check(&mut checks, "state_count_matches_hilbert_dimension", || {
        for n in 1..=30u32 {
            if angular::state_count(n)? != 1u64 << (n + 1) {
                return Ok((false, format!("mismatch at N = {n}")));
            }
        }
        Ok((true, "exact for N = 1..30".into()))
    });

    run_check(&mut checks, "analytic_spectrum_matches_dense", || {
        let mut worst: f64 = 0.0;
        for n in 1..=cap {
            for field in [0.0, 0.5, 2.0] {
                let params = ModelParams::new(n, 1.0, field)?;
                let analytic = expanded_analytic(&params);
                let dense: Vec<f64> = if field == 0.0 {
                    cache.get(n, 1.0, field)?.values().to_vec()
                } else {
                    oracle::eigenvalues_hermitian(&dense_hamiltonian(&params, cap)?)?
                };
                for (a, d) in analytic.iter().zip(&dense) {
                    worst = worst.max((a - d).abs());
                }
            }
        }
        Ok((
            worst < 1e-9,
            format!("max |analytic - dense| = {worst:.2e} for N <= {cap}, B in {{0, 0.5, 2}}"),
        ))
    });

    run_check(&mut checks, "ground_degeneracy_parity", || {
        for n in 2..=cap {
            let count = cache.ground_mixture(n, 1.0, 0.0)?.len();
            let expected = if n % 2 == 0 { 2 } else { 1 };
            if count != expected {
                return Ok((
                    false,
                    format!("N = {n}: ground degeneracy {count}, expected {expected}"),
                ));
            }
        }
        Ok((true, format!("1 for odd N, 2 for even N, N <= {cap}")))
    });

    let mut numeric_concurrence: HashMap<u32, f64> = HashMap::new();
    run_check(&mut checks, "pair_concurrence_closed_form", || {
        let mut worst: f64 = 0.0;
        for n in 2..=cap {
            let mixture = cache.ground_mixture(n, 1.0, 0.0)?;
            let rdm = qinfo::pair_rdm(&mixture, 0, 1)?;
            let numeric = qinfo::concurrence_general(&rdm)?;
            numeric_concurrence.insert(n, numeric);
            worst = worst.max((numeric - analytic::pair_concurrence_analytic(n)?).abs());
        }
        Ok((
            worst < 1e-9,
            format!("max |numeric - closed form| = {worst:.2e} for N <= {cap}"),
        ))
    });

    run_check(&mut checks, "concurrence_oscillation", || {
        let mut worst: f64 = 0.0;
        let mut n = 2;
        while n + 1 <= cap {
            let diff = numeric_concurrence[&(n + 1)] - numeric_concurrence[&n];
            worst = worst.max((diff - analytic::oscillation_amplitude(n)?).abs());
            n += 2;
        }
        Ok((
            worst < 1e-9,
            format!("max deviation {worst:.2e} for even N < {cap}"),
        ))
    });

    run_check(&mut checks, "pair_correlations_closed_form", || {
        let mut worst_xx: f64 = 0.0;
        let mut worst_yy: f64 = 0.0;
        for n in 2..=cap {
            let mixture = cache.ground_mixture(n, 1.0, 0.0)?;
            let input = StateInput::Mixture(&mixture);
            let xx = qinfo::correlation(input, PauliAxis::X, 0, 1)?;
            let yy = qinfo::correlation(input, PauliAxis::Y, 0, 1)?;
            worst_xx = worst_xx.max((xx - analytic::xx_correlation_analytic(n)?).abs());
            worst_yy = worst_yy.max((yy - xx).abs());
        }
        Ok((
            worst_xx < 1e-9 && worst_yy < 1e-10,
            format!("max xx deviation {worst_xx:.2e}, max |yy - xx| = {worst_yy:.2e}"),
        ))
    });

    run_check(&mut checks, "alpha_window_boundaries", || {
        for n in 2..=window_cap {
            let alpha = analytic::alpha_state(n)?;
            let (lo, hi) = analytic::alpha_field_window(n, 1.0)?;
            let mut fields = vec![(0.5 * (lo + hi), true)];
            if lo > 0.0 {
                fields.push((0.99 * lo, false));
            }
            fields.push((1.01 * hi, false));
            for (b, inside) in fields {
                let mixture = cache.ground_mixture(n, 1.0, b)?;
                let mut fidelity = 0.0;
                for (_, state) in &mixture {
                    fidelity += qinfo::fidelity(state, &alpha)?;
                }
                if inside && !(fidelity > 1.0 - 1e-9) {
                    return Ok((
                        false,
                        format!("N = {n}: fidelity {fidelity} inside the window at B = {b}"),
                    ));
                }
                if !inside && !(fidelity <= 1.0 - 1e-6) {
                    return Ok((
                        false,
                        format!("N = {n}: fidelity {fidelity} outside the window at B = {b}"),
                    ));
                }
            }
        }
        Ok((
            true,
            format!("ground only inside (b_low, b_high) for N <= {window_cap}"),
        ))
    });

    run_check(&mut checks, "alpha_splitting_and_sharing", || {
        let mut worst: f64 = 0.0;
        for n in 2..=cap {
            let alpha = analytic::alpha_state(n)?;
            let central = n as usize;
            for outer in 0..n as usize {
                let rdm = qinfo::pair_rdm(&alpha, central, outer)?;
                let c = qinfo::concurrence_general(&rdm)?;
                worst = worst.max((c - 1.0 / (n as f64).sqrt()).abs());
            }
            let shared = qinfo::measure_central(&alpha, 0)?.post_state;
            let rdm = qinfo::pair_rdm(&shared, 0, 1)?;
            let c = qinfo::concurrence_general(&rdm)?;
            worst = worst.max((c - 2.0 / n as f64).abs());
        }
        Ok((
            worst < 1e-10,
            format!("max deviation from 1/sqrt(N) and 2/N: {worst:.2e}"),
        ))
    });

    run_check(&mut checks, "symmetry_suite", || {
        // conserved quantities
        for n in 2..=window_cap {
            let params = ModelParams::new(n, 1.0, 0.4)?;
            let h = dense_hamiltonian(&params, cap)?;
            let fz = oracle::f_z(n + 1)?;
            let outer: Vec<usize> = (0..n as usize).collect();
            let j2 = oracle::j_squared(&outer, n + 1)?;
            let fz_norm = oracle::commutator(&h, &fz)?.frobenius_norm();
            let j2_norm = oracle::commutator(&h, &j2)?.frobenius_norm();
            if fz_norm >= 1e-10 || j2_norm >= 1e-10 {
                return Ok((
                    false,
                    format!("N = {n}: commutator norms {fz_norm:.2e}, {j2_norm:.2e}"),
                ));
            }
        }
        // outer-pair permutation symmetry
        for n in 2..=cap {
            let mixture = cache.ground_mixture(n, 1.0, 0.0)?;
            let reference = qinfo::pair_rdm(&mixture, 0, 1)?;
            for a in 0..n as usize {
                for b in (a + 1)..n as usize {
                    let rdm = qinfo::pair_rdm(&mixture, a, b)?;
                    for r in 0..4 {
                        for c in 0..4 {
                            if (rdm.entry(r, c) - reference.entry(r, c)).norm() >= 1e-10 {
                                return Ok((
                                    false,
                                    format!("N = {n}: pair ({a},{b}) differs from (0,1)"),
                                ));
                            }
                        }
                    }
                }
            }
        }
        // coupling-sign invariance
        for n in 2..=window_cap {
            let plus = cache.ground_mixture(n, 1.0, 0.0)?;
            let minus = cache.ground_mixture(n, -1.0, 0.0)?;
            let c_plus = qinfo::concurrence_general(&qinfo::pair_rdm(&plus, 0, 1)?)?;
            let c_minus = qinfo::concurrence_general(&qinfo::pair_rdm(&minus, 0, 1)?)?;
            if (c_plus - c_minus).abs() >= 1e-10 {
                return Ok((false, format!("N = {n}: concurrence changes under J -> -J")));
            }
            for axis in [PauliAxis::X, PauliAxis::Y, PauliAxis::Z] {
                let v_plus = qinfo::correlation(StateInput::Mixture(&plus), axis, 0, 1)?;
                let v_minus = qinfo::correlation(StateInput::Mixture(&minus), axis, 0, 1)?;
                if (v_plus - v_minus).abs() >= 1e-10 {
                    return Ok((
                        false,
                        format!("N = {n}: {axis:?} correlation changes under J -> -J"),
                    ));
                }
            }
        }
        Ok((
            true,
            format!(
                "commutators < 1e-10, pair RDMs permutation-symmetric, observables invariant \
                 under J -> -J (N <= {cap})"
            ),
        ))
    });

    run_check(&mut checks, "xstate_shortcut_vs_wootters", || {
        let mut worst: f64 = 0.0;
        for n in 2..=cap {
            let mixture = cache.ground_mixture(n, 1.0, 0.0)?;
            let mut rdms = vec![qinfo::pair_rdm(&mixture, 0, 1)?];
            let alpha = analytic::alpha_state(n)?;
            rdms.push(qinfo::pair_rdm(&alpha, n as usize, 0)?);
            rdms.push(qinfo::pair_rdm(
                &qinfo::measure_central(&alpha, 0)?.post_state,
                0,
                1,
            )?);
            for rdm in &rdms {
                let shortcut = qinfo::concurrence_x(&qinfo::as_x_state(rdm, X_STATE_TOL_DEFAULT)?);
                let general = qinfo::concurrence_general(rdm)?;
                worst = worst.max((shortcut - general).abs());
            }
        }
        Ok((
            worst < 1e-10,
            format!("max |shortcut - Wootters| = {worst:.2e}"),
        ))
    });

    let all_pass = checks.iter().all(|c| c.pass);
    let report = json!({
        "command": "verify",
        "oracle_cap": cap,
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "pass": c.pass,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "all_pass": all_pass,
    });
    (report, all_pass)
}
