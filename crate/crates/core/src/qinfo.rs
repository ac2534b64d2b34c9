//! Quantum-information post-processing: two-spin reduced density matrices,
//! X-state extraction, concurrence (shortcut and Wootters), correlation
//! functions, fidelity, and projective measurement of the central spin.

use ndarray::{Array1, Array2};
use ndarray_linalg::SVD;
use num_complex::Complex64 as C64;

use crate::angular::StateVector;
use crate::error::{Error, Result};
use crate::oracle::{self, eig_hermitian, DenseOperator, PauliAxis};

/// Default tolerance for entries outside the X pattern.
pub const X_STATE_TOL_DEFAULT: f64 = 1e-10;

const PROBABILITY_EPS: f64 = 1e-12;

/// A dense density matrix on a register of spin-1/2 sites.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_sites: u32,
    matrix: Array2<C64>,
}

impl DensityMatrix {
    /// `|psi⟩⟨psi|` for a pure state.
    pub fn from_pure(state: &StateVector) -> Self {
        let dim = state.dim();
        let amps = state.amplitudes();
        let mut matrix = Array2::<C64>::zeros((dim, dim));
        for r in 0..dim {
            for c in 0..dim {
                matrix[(r, c)] = amps[r] * amps[c].conj();
            }
        }
        DensityMatrix {
            n_sites: state.n_sites(),
            matrix,
        }
    }

    /// Convex mixture of pure states; weights must be nonnegative and sum to
    /// one within `1e-10`.
    pub fn from_mixture(parts: &[(f64, StateVector)]) -> Result<Self> {
        let (n_sites, dim) = check_mixture(parts)?;
        let mut matrix = Array2::<C64>::zeros((dim, dim));
        for (w, state) in parts {
            let amps = state.amplitudes();
            for r in 0..dim {
                for c in 0..dim {
                    matrix[(r, c)] += amps[r] * amps[c].conj() * *w;
                }
            }
        }
        Ok(DensityMatrix { n_sites, matrix })
    }

    /// Wraps an explicit matrix, checking trace one, Hermiticity, and
    /// positive semidefiniteness (smallest eigenvalue above `-1e-10`).
    pub fn from_matrix(matrix: Array2<C64>) -> Result<Self> {
        let op = DenseOperator::from_matrix(matrix)?;
        let dim = op.dim();
        if !dim.is_power_of_two() {
            return Err(Error::Domain(format!(
                "density matrix dimension must be a power of two, got {dim}"
            )));
        }
        let trace = op.trace();
        if (trace - C64::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::Domain(format!(
                "density matrix trace is {trace}, expected 1"
            )));
        }
        if !op.is_hermitian(1e-12 * op.max_abs().max(1.0)) {
            return Err(Error::Domain("density matrix is not Hermitian".into()));
        }
        let lowest = *eig_hermitian(&op)?
            .values()
            .first()
            .expect("nonempty spectrum");
        if lowest < -1e-10 {
            return Err(Error::Domain(format!(
                "density matrix is not positive semidefinite: lowest eigenvalue {lowest:.3e}"
            )));
        }
        Ok(DensityMatrix {
            n_sites: dim.trailing_zeros(),
            matrix: op.matrix().clone(),
        })
    }

    pub fn n_sites(&self) -> u32 {
        self.n_sites
    }

    pub fn dim(&self) -> usize {
        1usize << self.n_sites
    }

    pub fn matrix(&self) -> &Array2<C64> {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.matrix[(row, col)]
    }

    pub fn trace(&self) -> C64 {
        self.matrix.diag().sum()
    }
}

fn check_mixture(parts: &[(f64, StateVector)]) -> Result<(u32, usize)> {
    let Some((_, first)) = parts.first() else {
        return Err(Error::Domain("mixture must contain at least one state".into()));
    };
    let n_sites = first.n_sites();
    let mut total = 0.0;
    for (w, state) in parts {
        if *w < -1e-12 {
            return Err(Error::Domain(format!("mixture weight {w} is negative")));
        }
        if state.n_sites() != n_sites {
            return Err(Error::DimensionMismatch {
                expected: first.dim(),
                got: state.dim(),
            });
        }
        total += w;
    }
    if (total - 1.0).abs() > 1e-10 {
        return Err(Error::Domain(format!(
            "mixture weights sum to {total}, expected 1"
        )));
    }
    Ok((n_sites, first.dim()))
}

/// A pure state, a classical mixture of pure states, or an explicit density
/// matrix — the three forms accepted by the reduction and expectation
/// operations.
#[derive(Debug, Clone, Copy)]
pub enum StateInput<'a> {
    Pure(&'a StateVector),
    Mixture(&'a [(f64, StateVector)]),
    Density(&'a DensityMatrix),
}

impl<'a> From<&'a StateVector> for StateInput<'a> {
    fn from(state: &'a StateVector) -> Self {
        StateInput::Pure(state)
    }
}

impl<'a> From<&'a [(f64, StateVector)]> for StateInput<'a> {
    fn from(parts: &'a [(f64, StateVector)]) -> Self {
        StateInput::Mixture(parts)
    }
}

impl<'a> From<&'a Vec<(f64, StateVector)>> for StateInput<'a> {
    fn from(parts: &'a Vec<(f64, StateVector)>) -> Self {
        StateInput::Mixture(parts)
    }
}

impl<'a> From<&'a DensityMatrix> for StateInput<'a> {
    fn from(rho: &'a DensityMatrix) -> Self {
        StateInput::Density(rho)
    }
}

impl StateInput<'_> {
    fn n_sites(&self) -> Result<u32> {
        match self {
            StateInput::Pure(s) => Ok(s.n_sites()),
            StateInput::Mixture(parts) => Ok(check_mixture(parts)?.0),
            StateInput::Density(rho) => Ok(rho.n_sites()),
        }
    }
}

fn check_pair_sites(n_sites: u32, site_a: usize, site_b: usize) -> Result<()> {
    if site_a == site_b {
        return Err(Error::Domain(format!("sites must be distinct, got {site_a} twice")));
    }
    for site in [site_a, site_b] {
        if site >= n_sites as usize {
            return Err(Error::Domain(format!(
                "site {site} out of range for {n_sites} sites"
            )));
        }
    }
    Ok(())
}

/// Spreads the bits of `rest` around the two (sorted) excluded positions.
fn expand_rest(rest: usize, lo: usize, hi: usize) -> usize {
    let low_mask = (1usize << lo) - 1;
    let spread = (rest & low_mask) | ((rest & !low_mask) << 1);
    let mid_mask = (1usize << hi) - 1;
    (spread & mid_mask) | ((spread & !mid_mask) << 1)
}

fn accumulate_pure_rdm(
    rho: &mut Array2<C64>,
    weight: f64,
    state: &StateVector,
    site_a: usize,
    site_b: usize,
) {
    let amps = state.amplitudes();
    let (lo, hi) = (site_a.min(site_b), site_a.max(site_b));
    let rest_count = state.dim() >> 2;
    let mask_a = 1usize << site_a;
    let mask_b = 1usize << site_b;
    for rest in 0..rest_count {
        let base = expand_rest(rest, lo, hi);
        let mut indices = [0usize; 4];
        for (pair, slot) in indices.iter_mut().enumerate() {
            let (ka, kb) = (pair >> 1, pair & 1);
            *slot = base | (ka * mask_a) | (kb * mask_b);
        }
        for r in 0..4 {
            for c in 0..4 {
                rho[(r, c)] += amps[indices[r]] * amps[indices[c]].conj() * weight;
            }
        }
    }
}

/// Reduced density matrix of the pair `(site_a, site_b)`, tracing out every
/// other site. In the 4-dimensional result `site_a` is the more significant
/// qubit: the basis order is `|00⟩, |01⟩, |10⟩, |11⟩` as `|a b⟩`.
pub fn pair_rdm<'a>(
    state: impl Into<StateInput<'a>>,
    site_a: usize,
    site_b: usize,
) -> Result<DensityMatrix> {
    let input = state.into();
    let n_sites = input.n_sites()?;
    check_pair_sites(n_sites, site_a, site_b)?;
    let mut rho = Array2::<C64>::zeros((4, 4));
    match input {
        StateInput::Pure(state) => accumulate_pure_rdm(&mut rho, 1.0, state, site_a, site_b),
        StateInput::Mixture(parts) => {
            for (w, state) in parts {
                accumulate_pure_rdm(&mut rho, *w, state, site_a, site_b);
            }
        }
        StateInput::Density(full) => {
            let (lo, hi) = (site_a.min(site_b), site_a.max(site_b));
            let mask_a = 1usize << site_a;
            let mask_b = 1usize << site_b;
            let rest_count = full.dim() >> 2;
            for rest in 0..rest_count {
                let base = expand_rest(rest, lo, hi);
                for r in 0..4 {
                    let row = base | ((r >> 1) * mask_a) | ((r & 1) * mask_b);
                    for c in 0..4 {
                        let col = base | ((c >> 1) * mask_a) | ((c & 1) * mask_b);
                        rho[(r, c)] += full.entry(row, col);
                    }
                }
            }
        }
    }
    Ok(DensityMatrix {
        n_sites: 2,
        matrix: rho,
    })
}

/// The five parameters of an X-form two-spin density matrix: diagonal
/// `(v, w, x, y)` over `|00⟩, |01⟩, |10⟩, |11⟩` and the `|01⟩⟨10|`
/// coherence `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XStateRDM {
    pub v: f64,
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: C64,
}

/// Reads the X-state parameters off a 4-dimensional density matrix.
///
/// Any entry outside the X pattern with magnitude at or above `tol` is a
/// structure error: for the star's `Fz`-symmetric states such an entry means
/// a symmetry was broken upstream, so it is never silently zeroed.
pub fn as_x_state(rdm: &DensityMatrix, tol: f64) -> Result<XStateRDM> {
    if rdm.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rdm.dim(),
        });
    }
    for (r, c) in [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)] {
        for (row, col) in [(r, c), (c, r)] {
            let magnitude = rdm.entry(row, col).norm();
            if magnitude >= tol {
                return Err(Error::Structure {
                    row,
                    col,
                    magnitude,
                    tol,
                });
            }
        }
    }
    let diag = |k: usize| -> Result<f64> {
        let e = rdm.entry(k, k);
        if e.im.abs() >= tol || e.re < -tol {
            return Err(Error::Domain(format!(
                "diagonal entry ({k},{k}) = {e} is not a probability"
            )));
        }
        Ok(e.re.max(0.0))
    };
    let (v, w, x, y) = (diag(0)?, diag(1)?, diag(2)?, diag(3)?);
    let z = rdm.entry(1, 2);
    if (v + w + x + y - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "X-state diagonal sums to {}, expected 1",
            v + w + x + y
        )));
    }
    if z.norm_sqr() > w * x + 1e-12 {
        return Err(Error::Domain(format!(
            "X-state coherence violates positivity: |z|^2 = {} > w*x = {}",
            z.norm_sqr(),
            w * x
        )));
    }
    Ok(XStateRDM { v, w, x, y, z })
}

/// Concurrence of an X-form state: `2 max(|z| - sqrt(v y), 0)`.
pub fn concurrence_x(x_state: &XStateRDM) -> f64 {
    (2.0 * (x_state.z.norm() - (x_state.v * x_state.y).sqrt())).max(0.0)
}

/// Eigenvalues of `rho` below this are treated as exact zeros when factoring
/// `rho = X X†`; without the cutoff, noise of order machine epsilon in a
/// zero eigenvalue enters the flip spectrum as its square root.
const RANK_CUTOFF: f64 = 1e-12;

/// Wootters concurrence of an arbitrary two-qubit density matrix.
///
/// The square roots of the eigenvalues of `rho rho_tilde`, with
/// `rho_tilde = (sy ⊗ sy) rho* (sy ⊗ sy)`, taken in decreasing order `l1..l4`
/// give `C = max(0, l1 - l2 - l3 - l4)`. They are computed as the singular
/// values of `S = X^T (sy ⊗ sy) X` for a factorization `rho = X X†`, which
/// carries no square-root amplification of rounding noise. This route is
/// independent of the X-state shortcut and is used to cross-check it.
pub fn concurrence_general(rdm: &DensityMatrix) -> Result<f64> {
    if rdm.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rdm.dim(),
        });
    }
    let op = DenseOperator::from_matrix(rdm.matrix().clone())?;
    let decomp = eig_hermitian(&op)?;
    if decomp.value(0) < -1e-10 {
        return Err(Error::Domain(format!(
            "density matrix is not positive semidefinite: lowest eigenvalue {:.3e}",
            decomp.value(0)
        )));
    }

    // rho = X X† over the numerically nonzero eigenvalues
    let columns: Vec<Array1<C64>> = (0..4)
        .filter(|&k| decomp.value(k) > RANK_CUTOFF)
        .map(|k| {
            let root = C64::new(decomp.value(k).sqrt(), 0.0);
            decomp.vector(k).mapv(|a| a * root)
        })
        .collect();
    if columns.is_empty() {
        return Ok(0.0);
    }

    // S = X^T (sy ⊗ sy) X, complex symmetric; the flip matrix is
    // antidiag(-1, 1, 1, -1).
    let flip_sign = [-1.0, 1.0, 1.0, -1.0];
    let rank = columns.len();
    let mut s = Array2::<C64>::zeros((rank, rank));
    for (a, col_a) in columns.iter().enumerate() {
        for (b, col_b) in columns.iter().enumerate() {
            let mut e = C64::new(0.0, 0.0);
            for r in 0..4 {
                e += col_a[r] * flip_sign[r] * col_b[3 - r];
            }
            s[(a, b)] = e;
        }
    }

    let (_, sigma, _) = s.svd(false, false)?;
    let mut lambdas = vec![0.0f64; 4];
    for (slot, value) in lambdas.iter_mut().zip(sigma.iter()) {
        *slot = *value;
    }
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

fn pure_correlation(
    state: &StateVector,
    op_a: &DenseOperator,
    op_b: &DenseOperator,
) -> Result<f64> {
    let applied = op_a.matrix().dot(&op_b.apply(state)?);
    let value: C64 = state
        .as_array()
        .iter()
        .zip(applied.iter())
        .map(|(p, q)| p.conj() * q)
        .sum();
    Ok(value.re)
}

/// Two-site correlation `Tr(rho a_axis b_axis)` along a Cartesian axis,
/// built from the oracle's dense Pauli operators.
pub fn correlation<'a>(
    state: impl Into<StateInput<'a>>,
    axis: PauliAxis,
    site_a: usize,
    site_b: usize,
) -> Result<f64> {
    if !matches!(axis, PauliAxis::X | PauliAxis::Y | PauliAxis::Z) {
        return Err(Error::Domain(
            "correlation axis must be x, y, or z".into(),
        ));
    }
    let input = state.into();
    let n_sites = input.n_sites()?;
    check_pair_sites(n_sites, site_a, site_b)?;
    let op_a = oracle::pauli_site_operator(axis, site_a, n_sites)?;
    let op_b = oracle::pauli_site_operator(axis, site_b, n_sites)?;
    match input {
        StateInput::Pure(state) => pure_correlation(state, &op_a, &op_b),
        StateInput::Mixture(parts) => {
            let mut total = 0.0;
            for (w, state) in parts {
                total += w * pure_correlation(state, &op_a, &op_b)?;
            }
            Ok(total)
        }
        StateInput::Density(rho) => {
            let product = op_a.matmul(&op_b)?;
            let mut total = C64::new(0.0, 0.0);
            for r in 0..rho.dim() {
                for c in 0..rho.dim() {
                    total += rho.entry(r, c) * product.matrix()[(c, r)];
                }
            }
            Ok(total.re)
        }
    }
}

/// Outcome of a projective measurement of the central spin.
#[derive(Debug, Clone)]
pub struct MeasurementResult {
    /// Probability of the requested outcome.
    pub probability: f64,
    /// Renormalized state of the outer spins after the measurement.
    pub post_state: StateVector,
}

/// Projects the central spin (the most significant site) onto `|outcome⟩`
/// and returns the outcome probability with the renormalized outer-spin
/// state. A (near-)zero-probability outcome is a measurement error.
pub fn measure_central(state: &StateVector, outcome: u8) -> Result<MeasurementResult> {
    if outcome > 1 {
        return Err(Error::Domain(format!("outcome must be 0 or 1, got {outcome}")));
    }
    if state.n_sites() < 2 {
        return Err(Error::Domain(
            "measuring the central spin needs at least one outer spin".into(),
        ));
    }
    let n_outer = state.n_sites() - 1;
    let outer_dim = 1usize << n_outer;
    let central = outer_dim;
    let offset = if outcome == 1 { central } else { 0 };

    let amps = state.amplitudes();
    let probability: f64 = (0..outer_dim).map(|b| amps[offset | b].norm_sqr()).sum();
    if probability < PROBABILITY_EPS {
        return Err(Error::Measurement {
            outcome,
            probability,
        });
    }
    let scale = C64::new(1.0 / probability.sqrt(), 0.0);
    let post: Vec<C64> = (0..outer_dim).map(|b| amps[offset | b] * scale).collect();
    Ok(MeasurementResult {
        probability,
        post_state: StateVector::new(n_outer, post)?,
    })
}

/// Fidelity with a pure state: `|⟨a|b⟩|^2` for a pure first argument,
/// `⟨b|rho|b⟩` for a mixed one.
pub fn fidelity<'a>(a: impl Into<StateInput<'a>>, b: &StateVector) -> Result<f64> {
    match a.into() {
        StateInput::Pure(a) => Ok(a.inner(b)?.norm_sqr()),
        StateInput::Mixture(parts) => {
            check_mixture(parts)?;
            let mut total = 0.0;
            for (w, state) in parts {
                total += w * state.inner(b)?.norm_sqr();
            }
            Ok(total)
        }
        StateInput::Density(rho) => {
            if rho.dim() != b.dim() {
                return Err(Error::DimensionMismatch {
                    expected: rho.dim(),
                    got: b.dim(),
                });
            }
            let applied: Array1<C64> = rho.matrix().dot(b.as_array());
            let value: C64 = b
                .as_array()
                .iter()
                .zip(applied.iter())
                .map(|(p, q)| p.conj() * q)
                .sum();
            Ok(value.re)
        }
    }
}
