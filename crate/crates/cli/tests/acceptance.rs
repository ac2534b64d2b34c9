//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line (run with `--nocapture` to see them).
//!
//! Dense eigendecompositions are shared across criteria through a
//! process-wide cache so the whole suite stays fast; every tolerance is
//! asserted exactly as stated.

use std::collections::HashMap;
use std::process::Command;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::Value;

use spinstar::analytic::{self, ModelParams};
use spinstar::angular::{self, StateVector};
use spinstar::oracle::{self, EigenDecomposition, PauliAxis};
use spinstar::qinfo::{self, DensityMatrix, StateInput, X_STATE_TOL_DEFAULT};

/// Full dense eigendecomposition at `(N, J, B)`, computed once per process.
fn decomp(n: u32, coupling: f64, field: f64) -> Arc<EigenDecomposition> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u64, u64), Arc<EigenDecomposition>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (n, coupling.to_bits(), field.to_bits());
    let mut guard = cache.lock().unwrap();
    if let Some(found) = guard.get(&key) {
        return found.clone();
    }
    let params = ModelParams::new(n, coupling, field).unwrap();
    let h = oracle::build_hamiltonian(&params).unwrap();
    let computed = Arc::new(oracle::eig_hermitian(&h).unwrap());
    guard.insert(key, computed.clone());
    computed
}

/// Dense ground space as an equal-weight mixture.
fn ground_mixture(n: u32, coupling: f64, field: f64) -> Vec<(f64, StateVector)> {
    let d = decomp(n, coupling, field);
    let states = d.ground_space(d.degeneracy_tol()).unwrap();
    let weight = 1.0 / states.len() as f64;
    states.into_iter().map(|s| (weight, s)).collect()
}

fn ground_pair_rdm(n: u32, coupling: f64, site_a: usize, site_b: usize) -> DensityMatrix {
    let mixture = ground_mixture(n, coupling, 0.0);
    qinfo::pair_rdm(&mixture, site_a, site_b).unwrap()
}

fn numeric_pair_concurrence(n: u32) -> f64 {
    qinfo::concurrence_general(&ground_pair_rdm(n, 1.0, 0, 1)).unwrap()
}

fn conclude(criterion: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("{criterion}: PASS");
    } else {
        println!("{criterion}: FAIL");
        for failure in &failures {
            println!("  - {failure}");
        }
        panic!("{criterion} failed with {} finding(s)", failures.len());
    }
}

#[test]
fn criterion_01_state_counting() {
    let mut failures = Vec::new();
    for n in 1..=30u32 {
        let count = angular::state_count(n).unwrap();
        if count != 1u64 << (n + 1) {
            failures.push(format!("N = {n}: state_count = {count}, expected 2^{}", n + 1));
        }
    }
    conclude("criterion 1 (state counting, N = 1..30, exact)", failures);
}

#[test]
fn criterion_02_spectrum_equivalence() {
    let mut failures = Vec::new();
    for n in 1..=10u32 {
        for field in [0.0, 0.5, 2.0] {
            let params = ModelParams::new(n, 1.0, field).unwrap();
            let mut analytic: Vec<f64> = analytic::spectrum(&params)
                .unwrap()
                .iter()
                .flat_map(|l| std::iter::repeat(l.energy).take(l.degeneracy as usize))
                .collect();
            analytic.sort_by(f64::total_cmp);
            let dense = decomp(n, 1.0, field);
            if analytic.len() != dense.values().len() {
                failures.push(format!("N = {n}, B = {field}: level count mismatch"));
                continue;
            }
            let worst = analytic
                .iter()
                .zip(dense.values())
                .map(|(a, d)| (a - d).abs())
                .fold(0.0f64, f64::max);
            if worst >= 1e-9 {
                failures.push(format!("N = {n}, B = {field}: max deviation {worst:.3e}"));
            }
        }
    }
    conclude(
        "criterion 2 (spectrum equivalence, N = 1..10, B in {0, 0.5, 2}, 1e-9)",
        failures,
    );
}

#[test]
fn criterion_03_ground_degeneracy_parity() {
    let mut failures = Vec::new();
    for n in 2..=10u32 {
        let count = ground_mixture(n, 1.0, 0.0).len();
        let expected = if n % 2 == 0 { 2 } else { 1 };
        if count != expected {
            failures.push(format!("N = {n}: ground degeneracy {count}, expected {expected}"));
        }
    }
    conclude("criterion 3 (ground degeneracy parity, N = 2..10)", failures);
}

#[test]
fn criterion_04_concurrence_formulas() {
    let mut failures = Vec::new();
    for n in 2..=10u32 {
        let numeric = numeric_pair_concurrence(n);
        let expected = analytic::pair_concurrence_analytic(n).unwrap();
        if (numeric - expected).abs() >= 1e-9 {
            failures.push(format!(
                "N = {n}: numeric {numeric}, closed form {expected}"
            ));
        }
    }
    for (n, value) in [(3u32, 1.0 / 3.0), (4, 1.0 / 6.0), (2, 0.0)] {
        let numeric = numeric_pair_concurrence(n);
        if (numeric - value).abs() >= 1e-9 {
            failures.push(format!("spot value N = {n}: {numeric} vs {value}"));
        }
    }
    conclude(
        "criterion 4 (concurrence formulas, N = 2..10, 1e-9)",
        failures,
    );
}

#[test]
fn criterion_05_oscillation_amplitude() {
    let mut failures = Vec::new();
    for n in [2u32, 4, 6, 8] {
        let diff = numeric_pair_concurrence(n + 1) - numeric_pair_concurrence(n);
        let nf = n as f64;
        let amplitude = 2.0 / (nf * (nf - 1.0) * (nf + 1.0));
        if (diff - amplitude).abs() >= 1e-9 {
            failures.push(format!(
                "N = {n}: concurrence step {diff}, amplitude {amplitude}"
            ));
        }
        let closed = analytic::oscillation_amplitude(n).unwrap();
        if (closed - amplitude).abs() >= 1e-15 {
            failures.push(format!("N = {n}: closed form {closed} vs {amplitude}"));
        }
    }
    conclude(
        "criterion 5 (oscillation amplitude, even N = 2..8, 1e-9)",
        failures,
    );
}

#[test]
fn criterion_06_correlations() {
    let mut failures = Vec::new();
    for n in 2..=10u32 {
        let mixture = ground_mixture(n, 1.0, 0.0);
        let input = StateInput::Mixture(&mixture);
        let xx = qinfo::correlation(input, PauliAxis::X, 0, 1).unwrap();
        let yy = qinfo::correlation(input, PauliAxis::Y, 0, 1).unwrap();
        let nf = n as f64;
        let expected = if n % 2 == 1 {
            0.5 + 1.0 / (2.0 * nf)
        } else {
            0.5 + 1.0 / (2.0 * nf) - 1.0 / (2.0 * nf * (nf - 1.0))
        };
        if (xx - expected).abs() >= 1e-9 {
            failures.push(format!("N = {n}: xx = {xx}, expected {expected}"));
        }
        if (yy - xx).abs() >= 1e-10 {
            failures.push(format!("N = {n}: yy = {yy} differs from xx = {xx}"));
        }
    }
    let large = analytic::xx_correlation_analytic(1000).unwrap();
    if (large - 0.5).abs() >= 1e-3 {
        failures.push(format!("N = 1000: xx closed form {large} not within 1e-3 of 1/2"));
    }
    conclude(
        "criterion 6 (correlations, N = 2..10 at 1e-9, yy = xx at 1e-10, large-N saturation)",
        failures,
    );
}

#[test]
fn criterion_07_field_window() {
    let mut failures = Vec::new();
    for n in 2..=8u32 {
        let alpha = analytic::alpha_state(n).unwrap();
        let (b_low, b_high) = analytic::alpha_field_window(n, 1.0).unwrap();
        let fidelity_at = |b: f64| -> f64 {
            ground_mixture(n, 1.0, b)
                .iter()
                .map(|(_, state)| qinfo::fidelity(state, &alpha).unwrap())
                .sum()
        };

        let mid = fidelity_at(0.5 * (b_low + b_high));
        if !(mid > 1.0 - 1e-9) {
            failures.push(format!("N = {n}: midpoint fidelity {mid}"));
        }
        if b_low > 0.0 {
            let below = fidelity_at(0.99 * b_low);
            if !(below <= 1.0 - 1e-6) {
                failures.push(format!("N = {n}: fidelity {below} below the window"));
            }
        }
        let above = fidelity_at(1.01 * b_high);
        if !(above <= 1.0 - 1e-6) {
            failures.push(format!("N = {n}: fidelity {above} above the window"));
        }
    }
    conclude(
        "criterion 7 (alpha field window boundaries, N = 2..8)",
        failures,
    );
}

#[test]
fn criterion_08_splitting_and_sharing_optima() {
    let mut failures = Vec::new();
    for n in 2..=10u32 {
        let nf = n as f64;
        let alpha = analytic::alpha_state(n).unwrap();
        let central = n as usize;
        for outer in 0..n as usize {
            let rdm = qinfo::pair_rdm(&alpha, central, outer).unwrap();
            let c = qinfo::concurrence_general(&rdm).unwrap();
            if (c - 1.0 / nf.sqrt()).abs() >= 1e-10 {
                failures.push(format!(
                    "N = {n}, outer {outer}: central-outer concurrence {c}, expected 1/sqrt(N)"
                ));
            }
        }
        let shared = qinfo::measure_central(&alpha, 0).unwrap().post_state;
        for a in 0..n as usize {
            for b in (a + 1)..n as usize {
                let rdm = qinfo::pair_rdm(&shared, a, b).unwrap();
                let c = qinfo::concurrence_general(&rdm).unwrap();
                if (c - 2.0 / nf).abs() >= 1e-10 {
                    failures.push(format!(
                        "N = {n}, pair ({a},{b}): shared concurrence {c}, expected 2/N"
                    ));
                }
            }
        }
    }
    conclude(
        "criterion 8 (splitting 1/sqrt(N) and sharing 2/N, N = 2..10, 1e-10)",
        failures,
    );
}

#[test]
fn criterion_09_symmetry_suite() {
    let mut failures = Vec::new();

    // conserved quantities
    for n in 2..=8u32 {
        let params = ModelParams::new(n, 1.0, 0.4).unwrap();
        let h = oracle::build_hamiltonian(&params).unwrap();
        let fz = oracle::f_z(n + 1).unwrap();
        let outer: Vec<usize> = (0..n as usize).collect();
        let j2 = oracle::j_squared(&outer, n + 1).unwrap();
        let fz_norm = oracle::commutator(&h, &fz).unwrap().frobenius_norm();
        let j2_norm = oracle::commutator(&h, &j2).unwrap().frobenius_norm();
        if fz_norm >= 1e-10 {
            failures.push(format!("N = {n}: |[H, Fz]| = {fz_norm:.3e}"));
        }
        if j2_norm >= 1e-10 {
            failures.push(format!("N = {n}: |[H, J^2]| = {j2_norm:.3e}"));
        }
    }

    // outer-pair permutation symmetry
    for n in 2..=10u32 {
        let mixture = ground_mixture(n, 1.0, 0.0);
        let reference = qinfo::pair_rdm(&mixture, 0, 1).unwrap();
        for a in 0..n as usize {
            for b in (a + 1)..n as usize {
                let rdm = qinfo::pair_rdm(&mixture, a, b).unwrap();
                let worst = (0..4)
                    .flat_map(|r| (0..4).map(move |c| (r, c)))
                    .map(|(r, c)| (rdm.entry(r, c) - reference.entry(r, c)).norm())
                    .fold(0.0f64, f64::max);
                if worst >= 1e-10 {
                    failures.push(format!(
                        "N = {n}: pair ({a},{b}) RDM deviates by {worst:.3e}"
                    ));
                }
            }
        }
    }

    // coupling-sign invariance
    for n in 2..=8u32 {
        let plus = ground_mixture(n, 1.0, 0.0);
        let minus = ground_mixture(n, -1.0, 0.0);
        let c_plus =
            qinfo::concurrence_general(&qinfo::pair_rdm(&plus, 0, 1).unwrap()).unwrap();
        let c_minus =
            qinfo::concurrence_general(&qinfo::pair_rdm(&minus, 0, 1).unwrap()).unwrap();
        if (c_plus - c_minus).abs() >= 1e-10 {
            failures.push(format!(
                "N = {n}: concurrence {c_plus} vs {c_minus} under J -> -J"
            ));
        }
        for axis in [PauliAxis::X, PauliAxis::Y, PauliAxis::Z] {
            let v_plus =
                qinfo::correlation(StateInput::Mixture(&plus), axis, 0, 1).unwrap();
            let v_minus =
                qinfo::correlation(StateInput::Mixture(&minus), axis, 0, 1).unwrap();
            if (v_plus - v_minus).abs() >= 1e-10 {
                failures.push(format!(
                    "N = {n}: {axis:?} correlation {v_plus} vs {v_minus} under J -> -J"
                ));
            }
        }
    }

    conclude(
        "criterion 9 (symmetry suite: commutators, pair RDMs, J sign flip, 1e-10)",
        failures,
    );
}

#[test]
fn criterion_10_shortcut_oracle_agreement() {
    let mut failures = Vec::new();
    let mut check = |label: String, rdm: &DensityMatrix| {
        let shortcut =
            qinfo::concurrence_x(&qinfo::as_x_state(rdm, X_STATE_TOL_DEFAULT).unwrap());
        let general = qinfo::concurrence_general(rdm).unwrap();
        if (shortcut - general).abs() >= 1e-10 {
            failures.push(format!(
                "{label}: shortcut {shortcut} vs Wootters {general}"
            ));
        }
    };
    for n in 2..=10u32 {
        check(format!("N = {n} ground pair"), &ground_pair_rdm(n, 1.0, 0, 1));
        let alpha = analytic::alpha_state(n).unwrap();
        check(
            format!("N = {n} alpha central-outer"),
            &qinfo::pair_rdm(&alpha, n as usize, 0).unwrap(),
        );
        let shared = qinfo::measure_central(&alpha, 0).unwrap().post_state;
        check(
            format!("N = {n} shared pair"),
            &qinfo::pair_rdm(&shared, 0, 1).unwrap(),
        );
    }
    conclude(
        "criterion 10 (X-state shortcut vs Wootters, 1e-10)",
        failures,
    );
}

#[test]
fn criterion_11_cli_contract() {
    let mut failures = Vec::new();
    let bin = env!("CARGO_BIN_EXE_spinstar");

    // `spinstar verify` exits 0
    let verify = Command::new(bin).arg("verify").output().unwrap();
    if verify.status.code() != Some(0) {
        failures.push(format!("verify exit code {:?}", verify.status.code()));
    } else {
        let report: Value = serde_json::from_slice(&verify.stdout).unwrap();
        if report["all_pass"] != Value::Bool(true) {
            failures.push("verify all_pass is not true".into());
        }
    }

    // the sweep emits exactly the six closed-form concurrence values
    let sweep_args = ["sweep", "--n-min", "2", "--n-max", "7", "--format", "csv"];
    let sweep = Command::new(bin).args(sweep_args).output().unwrap();
    if !sweep.status.success() {
        failures.push("sweep failed".into());
    }
    let text = String::from_utf8_lossy(&sweep.stdout);
    let rows: Vec<&str> = text.trim_end().lines().skip(1).collect();
    let expected = [0.0, 1.0 / 3.0, 1.0 / 6.0, 0.2, 2.0 / 15.0, 1.0 / 7.0];
    if rows.len() != expected.len() {
        failures.push(format!("sweep emitted {} rows, expected 6", rows.len()));
    }
    for (row, want) in rows.iter().zip(expected) {
        let cells: Vec<&str> = row.split(',').collect();
        let analytic: f64 = cells[1].parse().unwrap();
        let numeric: f64 = cells[2].parse().unwrap();
        if (analytic - want).abs() >= 1e-11 || (numeric - want).abs() >= 1e-9 {
            failures.push(format!("sweep row {row}: expected concurrence {want}"));
        }
    }

    // repeated runs are byte-identical
    let rerun = Command::new(bin).args(sweep_args).output().unwrap();
    if rerun.stdout != sweep.stdout {
        failures.push("sweep output is not byte-identical across runs".into());
    }
    let verify_rerun = Command::new(bin).arg("verify").output().unwrap();
    if verify_rerun.stdout != verify.stdout {
        failures.push("verify output is not byte-identical across runs".into());
    }

    conclude(
        "criterion 11 (CLI contract: verify exit 0, sweep values, determinism)",
        failures,
    );
}
