//! Brute-force dense ground truth for small stars.
//!
//! Everything here is built to be obviously correct rather than fast: dense
//! single-site Pauli/ladder operators, bit-indexed Hamiltonian assembly, a
//! full Hermitian eigendecomposition, and eigenpair residual checks. The
//! analytic module is the fast path; this module exists to validate it.

use ndarray::{Array1, Array2};
use ndarray_linalg::{EigValsh, Eigh, UPLO};
use num_complex::Complex64 as C64;

use crate::analytic::ModelParams;
use crate::angular::StateVector;
use crate::error::{Error, Result};

/// Default cap on the outer-spin count for dense Hamiltonians (dim 8192).
pub const DENSE_CAP_DEFAULT: u32 = 12;

/// Cap on the total site count for dense operator constructions.
pub const OPERATOR_SITE_CAP: u32 = 13;

/// Inputs whose imaginary parts all stay below this are diagonalized with the
/// real-symmetric backend instead of the Hermitian one.
const REAL_INPUT_EPS: f64 = 1e-14;

/// Single-site operator selector: the Pauli matrices, or the normalized
/// spin-1/2 ladder operators `s± = (sigma_x ± i sigma_y)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliAxis {
    X,
    Y,
    Z,
    Plus,
    Minus,
}

/// A dense operator on a register of spin-1/2 sites.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    dim: usize,
    matrix: Array2<C64>,
}

impl DenseOperator {
    pub fn from_matrix(matrix: Array2<C64>) -> Result<Self> {
        let (rows, cols) = matrix.dim();
        if rows != cols || rows == 0 {
            return Err(Error::Domain(format!(
                "operator must be square and nonempty, got {rows}x{cols}"
            )));
        }
        Ok(DenseOperator { dim: rows, matrix })
    }

    pub fn zeros(dim: usize) -> Self {
        DenseOperator {
            dim,
            matrix: Array2::zeros((dim, dim)),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Array2<C64> {
        &self.matrix
    }

    /// Number of spin-1/2 sites, when the dimension is a power of two.
    pub fn n_sites(&self) -> Option<u32> {
        if self.dim.is_power_of_two() {
            Some(self.dim.trailing_zeros())
        } else {
            None
        }
    }

    /// Largest entrywise deviation from the adjoint, `max |A - A†|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..self.dim {
            for c in r..self.dim {
                worst = worst.max((self.matrix[(r, c)] - self.matrix[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() < tol
    }

    pub fn max_abs(&self) -> f64 {
        self.matrix.iter().fold(0.0f64, |m, a| m.max(a.norm()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.matrix.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> C64 {
        self.matrix.diag().sum()
    }

    pub fn adjoint(&self) -> Self {
        DenseOperator {
            dim: self.dim,
            matrix: self.matrix.t().mapv(|a| a.conj()),
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        DenseOperator {
            dim: self.dim,
            matrix: self.matrix.mapv(|a| a * factor),
        }
    }

    pub fn matmul(&self, other: &DenseOperator) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(DenseOperator {
            dim: self.dim,
            matrix: self.matrix.dot(&other.matrix),
        })
    }

    /// Applies the operator to a state; the result is not renormalized.
    pub fn apply(&self, state: &StateVector) -> Result<Array1<C64>> {
        if self.dim != state.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: state.dim(),
            });
        }
        Ok(self.matrix.dot(state.as_array()))
    }

    /// Expectation value `⟨psi|A|psi⟩`.
    pub fn expectation(&self, state: &StateVector) -> Result<C64> {
        let applied = self.apply(state)?;
        Ok(state
            .as_array()
            .iter()
            .zip(applied.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }
}

impl std::ops::Add for &DenseOperator {
    type Output = DenseOperator;
    fn add(self, rhs: &DenseOperator) -> DenseOperator {
        assert_eq!(self.dim, rhs.dim, "operator dimensions must match");
        DenseOperator {
            dim: self.dim,
            matrix: &self.matrix + &rhs.matrix,
        }
    }
}

impl std::ops::Sub for &DenseOperator {
    type Output = DenseOperator;
    fn sub(self, rhs: &DenseOperator) -> DenseOperator {
        assert_eq!(self.dim, rhs.dim, "operator dimensions must match");
        DenseOperator {
            dim: self.dim,
            matrix: &self.matrix - &rhs.matrix,
        }
    }
}

/// Commutator `[a, b] = ab - ba`.
pub fn commutator(a: &DenseOperator, b: &DenseOperator) -> Result<DenseOperator> {
    Ok(&a.matmul(b)? - &b.matmul(a)?)
}

fn check_sites(n_sites: u32) -> Result<()> {
    if n_sites == 0 {
        return Err(Error::Domain("operator needs at least one site".into()));
    }
    if n_sites > OPERATOR_SITE_CAP {
        return Err(Error::Resource {
            required_dim: 1usize << n_sites.min(63),
            cap_dim: 1usize << OPERATOR_SITE_CAP,
        });
    }
    Ok(())
}

/// The named single-site operator acting on `site`, identity elsewhere.
///
/// Site indices follow the crate-wide bit convention (site `k` is bit `k`;
/// for full-system operators the central spin is the most significant site).
pub fn pauli_site_operator(axis: PauliAxis, site: usize, n_sites: u32) -> Result<DenseOperator> {
    check_sites(n_sites)?;
    if site >= n_sites as usize {
        return Err(Error::Domain(format!(
            "site {site} out of range for {n_sites} sites"
        )));
    }
    let dim = 1usize << n_sites;
    let mask = 1usize << site;
    let mut matrix = Array2::<C64>::zeros((dim, dim));
    for col in 0..dim {
        let up = col & mask != 0;
        match axis {
            PauliAxis::X => matrix[(col ^ mask, col)] = C64::new(1.0, 0.0),
            // sigma_y |1⟩ = i|0⟩, sigma_y |0⟩ = -i|1⟩ in the bit convention
            PauliAxis::Y => {
                matrix[(col ^ mask, col)] = if up { C64::new(0.0, 1.0) } else { C64::new(0.0, -1.0) }
            }
            PauliAxis::Z => {
                matrix[(col, col)] = C64::new(if up { 1.0 } else { -1.0 }, 0.0);
            }
            PauliAxis::Plus => {
                if !up {
                    matrix[(col | mask, col)] = C64::new(1.0, 0.0);
                }
            }
            PauliAxis::Minus => {
                if up {
                    matrix[(col & !mask, col)] = C64::new(1.0, 0.0);
                }
            }
        }
    }
    Ok(DenseOperator { dim, matrix })
}

/// Sum of the named single-site operator over the given sites.
pub fn collective_pauli(axis: PauliAxis, sites: &[usize], n_sites: u32) -> Result<DenseOperator> {
    check_sites(n_sites)?;
    let mut acc = DenseOperator::zeros(1usize << n_sites);
    for &site in sites {
        acc = &acc + &pauli_site_operator(axis, site, n_sites)?;
    }
    Ok(acc)
}

/// The z component of the total angular momentum over all sites,
/// `Fz = sum_k sigma_kz / 2` (diagonal: half the net bit excess).
pub fn f_z(n_sites: u32) -> Result<DenseOperator> {
    check_sites(n_sites)?;
    let dim = 1usize << n_sites;
    let mut matrix = Array2::<C64>::zeros((dim, dim));
    for b in 0..dim {
        matrix[(b, b)] = C64::new(b.count_ones() as f64 - n_sites as f64 / 2.0, 0.0);
    }
    Ok(DenseOperator { dim, matrix })
}

/// The collective angular-momentum square `J^2 = J- J+ + Jz^2 + Jz` over the
/// given sites, assembled from the dense ladder and z operators.
pub fn j_squared(sites: &[usize], n_sites: u32) -> Result<DenseOperator> {
    let jp = collective_pauli(PauliAxis::Plus, sites, n_sites)?;
    let jm = collective_pauli(PauliAxis::Minus, sites, n_sites)?;
    let jz = collective_pauli(PauliAxis::Z, sites, n_sites)?.scaled(0.5);
    Ok(&(&jm.matmul(&jp)? + &jz.matmul(&jz)?) + &jz)
}

/// Dense star Hamiltonian `H = J (s0+ J- + s0- J+) + B Fz` under the default
/// size cap (`N <= 12`).
pub fn build_hamiltonian(params: &ModelParams) -> Result<DenseOperator> {
    build_hamiltonian_capped(params, DENSE_CAP_DEFAULT)
}

/// Dense star Hamiltonian with an explicit outer-spin cap override.
///
/// Assembly walks the basis once per coupling pattern (O(dim * N) work) and
/// never forms Kronecker products.
pub fn build_hamiltonian_capped(params: &ModelParams, n_cap: u32) -> Result<DenseOperator> {
    let n = params.n_outer();
    if n > n_cap {
        return Err(Error::Resource {
            required_dim: 1usize << (n + 1).min(63),
            cap_dim: 1usize << (n_cap + 1).min(63),
        });
    }
    let n_sites = n + 1;
    let dim = 1usize << n_sites;
    let central = 1usize << n;
    let coupling = C64::new(params.coupling(), 0.0);
    let mut matrix = Array2::<C64>::zeros((dim, dim));

    for col in 0..dim {
        // field term: B * (popcount - (N+1)/2) on the diagonal
        matrix[(col, col)] =
            C64::new(params.field() * (col.count_ones() as f64 - n_sites as f64 / 2.0), 0.0);
        if col & central == 0 {
            // s0+ J-: raise the central spin, lower one outer spin
            for i in 0..n as usize {
                if col & (1 << i) != 0 {
                    matrix[((col ^ (1 << i)) | central, col)] += coupling;
                }
            }
        } else {
            // s0- J+: lower the central spin, raise one outer spin
            for i in 0..n as usize {
                if col & (1 << i) == 0 {
                    matrix[((col | (1 << i)) & !central, col)] += coupling;
                }
            }
        }
    }
    Ok(DenseOperator { dim, matrix })
}

/// A full Hermitian eigendecomposition: ascending eigenvalues with an
/// orthonormal set of eigenvectors stored as matrix columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    values: Vec<f64>,
    vectors: Array2<C64>,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// Eigenvalues in ascending order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Eigenvectors as columns, matching [`Self::values`] by index.
    pub fn vectors(&self) -> &Array2<C64> {
        &self.vectors
    }

    pub fn value(&self, k: usize) -> f64 {
        self.values[k]
    }

    pub fn vector(&self, k: usize) -> ndarray::ArrayView1<'_, C64> {
        self.vectors.column(k)
    }

    /// Absolute tolerance for degeneracy ties: `1e-9 * max(1, |E|_max)`.
    pub fn degeneracy_tol(&self) -> f64 {
        let scale = self
            .values
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()))
            .max(1.0);
        1e-9 * scale
    }

    /// Orthonormal basis of the eigenspace within `tol` of the lowest
    /// eigenvalue, as normalized state vectors.
    pub fn ground_space(&self, tol: f64) -> Result<Vec<StateVector>> {
        let dim = self.dim();
        if !dim.is_power_of_two() {
            return Err(Error::Domain(format!(
                "ground space requires a spin register (power-of-two dimension), got {dim}"
            )));
        }
        let n_sites = dim.trailing_zeros();
        let lowest = self.values[0];
        let mut states = Vec::new();
        for (k, &v) in self.values.iter().enumerate() {
            if v - lowest >= tol {
                break;
            }
            states.push(StateVector::new(n_sites, self.vectors.column(k).to_vec())?);
        }
        Ok(states)
    }
}

fn real_part_if_negligible_imag(op: &DenseOperator) -> Option<Array2<f64>> {
    if op.matrix.iter().all(|a| a.im.abs() <= REAL_INPUT_EPS) {
        Some(op.matrix.mapv(|a| a.re))
    } else {
        None
    }
}

fn require_hermitian(op: &DenseOperator) -> Result<()> {
    let tol = 1e-12 * op.max_abs().max(1.0);
    let defect = op.hermiticity_defect();
    if defect >= tol {
        return Err(Error::Domain(format!(
            "operator is not Hermitian: max |A - A†| = {defect:.3e}"
        )));
    }
    Ok(())
}

/// Full Hermitian eigendecomposition. Matrices with negligible imaginary
/// parts are dispatched to the real-symmetric backend; the contract is the
/// same either way.
pub fn eig_hermitian(op: &DenseOperator) -> Result<EigenDecomposition> {
    require_hermitian(op)?;
    if let Some(real) = real_part_if_negligible_imag(op) {
        let (values, vectors) = real.eigh(UPLO::Lower)?;
        Ok(EigenDecomposition {
            values: values.to_vec(),
            vectors: vectors.mapv(|x| C64::new(x, 0.0)),
        })
    } else {
        let (values, vectors) = op.matrix.eigh(UPLO::Lower)?;
        Ok(EigenDecomposition {
            values: values.to_vec(),
            vectors,
        })
    }
}

/// Eigenvalues only, ascending.
pub fn eigenvalues_hermitian(op: &DenseOperator) -> Result<Vec<f64>> {
    require_hermitian(op)?;
    if let Some(real) = real_part_if_negligible_imag(op) {
        Ok(real.eigvalsh(UPLO::Lower)?.to_vec())
    } else {
        Ok(op.matrix.eigvalsh(UPLO::Lower)?.to_vec())
    }
}

/// Orthonormal basis of the lowest eigenspace of `op` within `tol`.
pub fn ground_space(op: &DenseOperator, tol: f64) -> Result<Vec<StateVector>> {
    eig_hermitian(op)?.ground_space(tol)
}

/// Whether `||op psi - energy psi||_2 < tol`.
pub fn check_eigenpair(
    op: &DenseOperator,
    state: &StateVector,
    energy: f64,
    tol: f64,
) -> Result<bool> {
    let applied = op.apply(state)?;
    let residual: f64 = applied
        .iter()
        .zip(state.as_array().iter())
        .map(|(hp, p)| (hp - p * energy).norm_sqr())
        .sum::<f64>()
        .sqrt();
    Ok(residual < tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{self, ModelParams};
    use approx::assert_abs_diff_eq;

    fn params(n: u32, coupling: f64, field: f64) -> ModelParams {
        ModelParams::new(n, coupling, field).unwrap()
    }

    #[test]
    fn pauli_z_diagonal() {
        let z = pauli_site_operator(PauliAxis::Z, 0, 1).unwrap();
        assert_eq!(z.matrix()[(0, 0)], C64::new(-1.0, 0.0));
        assert_eq!(z.matrix()[(1, 1)], C64::new(1.0, 0.0));
        assert_eq!(z.matrix()[(0, 1)], C64::new(0.0, 0.0));
    }

    #[test]
    fn pauli_x_flips_least_significant_site() {
        let x = pauli_site_operator(PauliAxis::X, 0, 2).unwrap();
        let b00 = StateVector::basis_state(2, 0).unwrap();
        let out = x.apply(&b00).unwrap();
        assert_eq!(out[1], C64::new(1.0, 0.0));
        assert_eq!(out[0], C64::new(0.0, 0.0));
    }

    #[test]
    fn ladder_plus_raises_with_unit_coefficient() {
        let p = pauli_site_operator(PauliAxis::Plus, 0, 1).unwrap();
        let b0 = StateVector::basis_state(1, 0).unwrap();
        let out = p.apply(&b0).unwrap();
        assert_eq!(out[1], C64::new(1.0, 0.0));
        // annihilates |1⟩
        let b1 = StateVector::basis_state(1, 1).unwrap();
        let out = p.apply(&b1).unwrap();
        assert_eq!(out.iter().map(|a| a.norm()).sum::<f64>(), 0.0);
    }

    #[test]
    fn pauli_y_phases() {
        let y = pauli_site_operator(PauliAxis::Y, 0, 1).unwrap();
        assert_eq!(y.matrix()[(1, 0)], C64::new(0.0, -1.0));
        assert_eq!(y.matrix()[(0, 1)], C64::new(0.0, 1.0));
        assert!(y.is_hermitian(1e-15));
    }

    #[test]
    fn pauli_rejects_bad_site() {
        assert!(pauli_site_operator(PauliAxis::X, 2, 2).is_err());
        assert!(matches!(
            pauli_site_operator(PauliAxis::X, 0, OPERATOR_SITE_CAP + 1),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn hamiltonian_single_outer_spin_eigenvalues() {
        let h = build_hamiltonian(&params(1, 1.0, 0.0)).unwrap();
        let vals = eigenvalues_hermitian(&h).unwrap();
        let expected = [-1.0, 0.0, 0.0, 1.0];
        for (v, x) in vals.iter().zip(expected) {
            assert_abs_diff_eq!(*v, x, epsilon = 1e-12);
        }
    }

    #[test]
    fn hamiltonian_matches_pauli_form() {
        // J (s0+ J- + s0- J+) + B Fz == (J/2)(x0 X + y0 Y) + B Fz built from
        // single-site operators.
        let p = params(3, 0.8, 0.4);
        let h = build_hamiltonian(&p).unwrap();
        let n_sites = 4;
        let central = 3usize;
        let outer = [0usize, 1, 2];
        let x0 = pauli_site_operator(PauliAxis::X, central, n_sites).unwrap();
        let y0 = pauli_site_operator(PauliAxis::Y, central, n_sites).unwrap();
        let sx = collective_pauli(PauliAxis::X, &outer, n_sites).unwrap();
        let sy = collective_pauli(PauliAxis::Y, &outer, n_sites).unwrap();
        let coupling = &x0.matmul(&sx).unwrap() + &y0.matmul(&sy).unwrap();
        let reference = &coupling.scaled(p.coupling() / 2.0)
            + &f_z(n_sites).unwrap().scaled(p.field());
        let diff = (&h - &reference).max_abs();
        assert!(diff < 1e-14, "assembly mismatch: {diff:.3e}");
    }

    #[test]
    fn hamiltonian_zeeman_dominated_edge() {
        // At J = 0 the lowest level is the fully aligned-down edge,
        // E = -(N+1)B/2.
        let h0 = build_hamiltonian(&params(2, 0.0, 10.0)).unwrap();
        let vals = eigenvalues_hermitian(&h0).unwrap();
        assert_abs_diff_eq!(vals[0], -15.0, epsilon = 1e-12);

        // With J = 1 the dense spectrum matches the analytic one elementwise.
        let p = params(2, 1.0, 10.0);
        let h = build_hamiltonian(&p).unwrap();
        let dense = eigenvalues_hermitian(&h).unwrap();
        let mut analytic: Vec<f64> = analytic::spectrum(&p)
            .unwrap()
            .iter()
            .flat_map(|l| std::iter::repeat(l.energy).take(l.degeneracy as usize))
            .collect();
        analytic.sort_by(f64::total_cmp);
        for (d, a) in dense.iter().zip(&analytic) {
            assert_abs_diff_eq!(*d, *a, epsilon = 1e-9);
        }
    }

    #[test]
    fn hamiltonian_is_hermitian_and_traceless() {
        for b in [0.0, 0.7] {
            let h = build_hamiltonian(&params(4, 1.0, b)).unwrap();
            assert!(h.is_hermitian(1e-12));
            assert!(h.trace().norm() < 1e-9);
        }
    }

    #[test]
    fn hamiltonian_cap() {
        let p = params(5, 1.0, 0.0);
        assert!(matches!(
            build_hamiltonian_capped(&p, 4),
            Err(Error::Resource { required_dim: 64, cap_dim: 32 })
        ));
        assert!(build_hamiltonian_capped(&p, 5).is_ok());
    }

    #[test]
    fn eig_diagonal_matrix() {
        let m = Array2::from_diag(&ndarray::arr1(&[
            C64::new(3.0, 0.0),
            C64::new(1.0, 0.0),
            C64::new(2.0, 0.0),
        ]));
        let d = eig_hermitian(&DenseOperator::from_matrix(m).unwrap()).unwrap();
        assert_abs_diff_eq!(d.value(0), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(d.value(1), 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(d.value(2), 3.0, epsilon = 1e-14);
    }

    #[test]
    fn eig_sigma_x_and_sigma_y() {
        for axis in [PauliAxis::X, PauliAxis::Y] {
            let op = pauli_site_operator(axis, 0, 1).unwrap();
            let vals = eigenvalues_hermitian(&op).unwrap();
            assert_abs_diff_eq!(vals[0], -1.0, epsilon = 1e-14);
            assert_abs_diff_eq!(vals[1], 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn eig_ground_of_three_outer_spins() {
        let h = build_hamiltonian(&params(3, 1.0, 0.0)).unwrap();
        let d = eig_hermitian(&h).unwrap();
        assert_abs_diff_eq!(d.value(0), -2.0, epsilon = 1e-12);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let mut m = Array2::<C64>::zeros((2, 2));
        m[(0, 1)] = C64::new(1.0, 0.0);
        let op = DenseOperator::from_matrix(m).unwrap();
        assert!(eig_hermitian(&op).is_err());
    }

    #[test]
    fn eig_residuals_and_orthonormality() {
        let h = build_hamiltonian(&params(5, 1.0, 0.3)).unwrap();
        let d = eig_hermitian(&h).unwrap();
        let scale = d.values().iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for k in 0..d.dim() {
            let v = d.vector(k).to_owned();
            let hv = h.matrix().dot(&v);
            let res: f64 = hv
                .iter()
                .zip(v.iter())
                .map(|(a, b)| (a - b * d.value(k)).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(res < 1e-9 * scale.max(1.0), "residual {res:.3e} at k = {k}");
        }
        // spot-check orthonormality on the lowest few vectors
        for a in 0..4 {
            for b in 0..4 {
                let dot: C64 = d
                    .vector(a)
                    .iter()
                    .zip(d.vector(b).iter())
                    .map(|(x, y)| x.conj() * y)
                    .sum();
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!((dot.norm() - expected).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn ground_space_counts_by_parity() {
        let h3 = build_hamiltonian(&params(3, 1.0, 0.0)).unwrap();
        let d3 = eig_hermitian(&h3).unwrap();
        assert_eq!(d3.ground_space(d3.degeneracy_tol()).unwrap().len(), 1);

        let h4 = build_hamiltonian(&params(4, 1.0, 0.0)).unwrap();
        let d4 = eig_hermitian(&h4).unwrap();
        assert_eq!(d4.ground_space(d4.degeneracy_tol()).unwrap().len(), 2);
    }

    #[test]
    fn ground_space_in_window_is_alpha() {
        let h = build_hamiltonian(&params(4, 1.0, 1.0)).unwrap();
        let states = ground_space(&h, 1e-9).unwrap();
        assert_eq!(states.len(), 1);
        let alpha = analytic::alpha_state(4).unwrap();
        let fid = states[0].inner(&alpha).unwrap().norm_sqr();
        assert!(fid > 1.0 - 1e-9, "fidelity {fid}");
    }

    #[test]
    fn check_eigenpair_examples() {
        let h = build_hamiltonian(&params(3, 1.0, 0.0)).unwrap();
        let ground = &analytic::ground_states_zero_field(3, 1.0).unwrap()[0];
        assert!(check_eigenpair(&h, ground, -2.0, 1e-10).unwrap());

        let beta = analytic::beta_state(3).unwrap();
        assert!(!check_eigenpair(&h, &beta, -2.0, 1e-10).unwrap());

        // eigenvectors from the decomposition pass at their own eigenvalue
        let d = eig_hermitian(&h).unwrap();
        for k in [0usize, 5, 15] {
            let psi = StateVector::new(4, d.vector(k).to_vec()).unwrap();
            assert!(check_eigenpair(&h, &psi, d.value(k), 1e-9).unwrap());
        }
    }

    #[test]
    fn check_eigenpair_dimension_mismatch() {
        let h = build_hamiltonian(&params(2, 1.0, 0.0)).unwrap();
        let s = StateVector::basis_state(2, 0).unwrap();
        assert!(matches!(
            check_eigenpair(&h, &s, 0.0, 1e-10),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn fz_and_j_squared_commute_with_h() {
        let p = params(4, 1.0, 0.6);
        let h = build_hamiltonian(&p).unwrap();
        let n_sites = 5;
        let fz = f_z(n_sites).unwrap();
        let outer: Vec<usize> = (0..4).collect();
        let j2 = j_squared(&outer, n_sites).unwrap();
        assert!(commutator(&h, &fz).unwrap().frobenius_norm() < 1e-10);
        assert!(commutator(&h, &j2).unwrap().frobenius_norm() < 1e-10);
        assert!(commutator(&j2, &fz).unwrap().frobenius_norm() < 1e-10);
    }
}
