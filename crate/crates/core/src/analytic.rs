//! Closed-form physics of the spin star.
//!
//! The Hamiltonian used throughout the crate is
//!
//! ```text
//! H = J (s0+ J- + s0- J+) + B Fz
//!   = (J/2) (sigma0x sum_i sigma_ix + sigma0y sum_i sigma_iy)
//!     + (B/2) (sigma0z + sum_i sigma_iz)
//! ```
//!
//! with `s0± = (sigma0x ± i sigma0y)/2` acting on the central spin,
//! `J± = sum_i s_i±` the collective ladder operators of the outer spins, and
//! `Fz` the z component of the total (central plus outer) angular momentum.
//!
//! Every eigenstate lives in one `j` sector and is labeled by `(j, m, sign)`:
//! the two-term combinations `(|0⟩|j,m⟩ ± |1⟩|j,m-1⟩)/sqrt(2)` for
//! `m = j .. -j+1` with energy `±J sqrt((j+m)(j-m+1)) + (m-1/2)B`, plus the
//! one-term edge states labeled `m = j+1` (the `|1⟩|j,j⟩` product) and
//! `m = -j` (the `|0⟩|j,-j⟩` product) whose coupling energy vanishes.
//! This module enumerates that spectrum with exact degeneracies, constructs
//! the explicit `j = N/2` eigenstates (ground states, `|alpha⟩`, `|beta⟩`),
//! and evaluates the closed-form entanglement and correlation expressions.

use crate::angular::{self, dicke, HalfInt, StateVector, DENSE_SITE_CAP};
use crate::error::{Error, Result};
use num_complex::Complex64 as C64;

/// Model parameters: outer-spin count `N`, coupling `J`, field `B` (+Z).
///
/// The field must be nonnegative; the `B < 0` case maps onto `B > 0` by a
/// global spin flip and is intentionally not handled here. The coupling may
/// be negative (the spectrum is invariant), but the explicit ground-state
/// constructors require `J > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    n_outer: u32,
    coupling: f64,
    field: f64,
}

impl ModelParams {
    pub fn new(n_outer: u32, coupling: f64, field: f64) -> Result<Self> {
        if n_outer < 1 || n_outer > angular::SECTOR_CAP {
            return Err(Error::Domain(format!(
                "n_outer must be in 1..={}, got {n_outer}",
                angular::SECTOR_CAP
            )));
        }
        if !coupling.is_finite() {
            return Err(Error::Domain("coupling must be finite".into()));
        }
        if !field.is_finite() || field < 0.0 {
            return Err(Error::Domain(format!(
                "field must be finite and >= 0 (+Z direction), got {field}"
            )));
        }
        Ok(ModelParams {
            n_outer,
            coupling,
            field,
        })
    }

    pub fn n_outer(&self) -> u32 {
        self.n_outer
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    pub fn field(&self) -> f64 {
        self.field
    }

    /// Total number of sites including the central spin.
    pub fn n_sites(&self) -> u32 {
        self.n_outer + 1
    }
}

/// One analytic energy level, labeled by `(j, m, sign)`.
///
/// `sign` is `+1` or `-1` for the paired two-term eigenstates and `0` for the
/// one-term edge states (`m = j + 1` or `m = -j`), whose coupling energy is
/// zero. `degeneracy` is the multiplicity of the `j` sector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenLevel {
    pub j: HalfInt,
    pub m: HalfInt,
    pub sign: i8,
    pub energy: f64,
    pub degeneracy: u64,
}

/// Classification of an `(j, m)` label within a sector.
fn is_edge(j: HalfInt, m: HalfInt) -> bool {
    m == -j || m == j + HalfInt::ONE
}

fn validate_level(j: HalfInt, m: HalfInt, sign: i8, n_outer: u32) -> Result<()> {
    let tj = j.twice();
    let tm = m.twice();
    if tj < 0 || tj > n_outer as i64 || (n_outer as i64 - tj) % 2 != 0 {
        return Err(Error::Domain(format!(
            "j = {j} does not occur for N = {n_outer} outer spins"
        )));
    }
    if (tm - tj) % 2 != 0 || tm < -tj || tm > tj + 2 {
        return Err(Error::Domain(format!(
            "m = {m} is out of range for j = {j} (levels run m = j+1 down to -j)"
        )));
    }
    let edge = is_edge(j, m);
    match (edge, sign) {
        (true, 0) | (false, 1) | (false, -1) => Ok(()),
        (true, _) => Err(Error::Domain(format!(
            "(j = {j}, m = {m}) is a one-term edge state and requires sign = 0"
        ))),
        (false, _) => Err(Error::Domain(format!(
            "(j = {j}, m = {m}) is a paired level and requires sign = +1 or -1, got {sign}"
        ))),
    }
}

/// Closed-form level energy `sign * J * sqrt((j+m)(j-m+1)) + (m - 1/2) B`.
pub fn level_energy(j: HalfInt, m: HalfInt, sign: i8, params: &ModelParams) -> Result<f64> {
    validate_level(j, m, sign, params.n_outer)?;
    let coupling_term = if sign == 0 {
        0.0
    } else {
        // (j+m)(j-m+1) = (2j+2m)(2j-2m+2)/4, exact in integers.
        let prod = (j.twice() + m.twice()) * (j.twice() - m.twice() + 2);
        sign as f64 * params.coupling * ((prod / 4) as f64).sqrt()
    };
    let field_term = (m.twice() - 1) as f64 / 2.0 * params.field;
    Ok(coupling_term + field_term)
}

/// Enumerates every analytic level of the star, sorted ascending by energy.
///
/// For each `j` sector this yields the `4j` paired levels plus the two edge
/// levels, each carrying the sector multiplicity as its degeneracy; the
/// degeneracy-weighted total is exactly `2^(N+1)`.
pub fn spectrum(params: &ModelParams) -> Result<Vec<EigenLevel>> {
    let table = angular::sectors(params.n_outer)?;
    let mut levels = Vec::with_capacity(angular::state_count(params.n_outer)? as usize / 2);
    for sector in table.entries() {
        let j = sector.j;
        for m in [j + HalfInt::ONE, -j] {
            levels.push(EigenLevel {
                j,
                m,
                sign: 0,
                energy: level_energy(j, m, 0, params)?,
                degeneracy: sector.multiplicity,
            });
        }
        let mut tm = j.twice();
        while tm >= -j.twice() + 2 {
            let m = HalfInt::from_twice(tm);
            for sign in [1i8, -1] {
                levels.push(EigenLevel {
                    j,
                    m,
                    sign,
                    energy: level_energy(j, m, sign, params)?,
                    degeneracy: sector.multiplicity,
                });
            }
            tm -= 2;
        }
    }
    levels.sort_by(|a, b| {
        a.energy
            .total_cmp(&b.energy)
            .then(a.j.twice().cmp(&b.j.twice()))
            .then(a.m.twice().cmp(&b.m.twice()))
            .then(a.sign.cmp(&b.sign))
    });
    Ok(levels)
}

/// Builds the explicit `j = N/2` eigenstate labeled `(m, sign)` as a dense
/// full-system vector: `(|0⟩|N/2,m⟩ + sign |1⟩|N/2,m-1⟩)/sqrt(2)` for paired
/// levels, or the corresponding one-term product for the edge labels.
pub fn top_sector_eigenstate(n_outer: u32, m: HalfInt, sign: i8) -> Result<StateVector> {
    let j = HalfInt::from_twice(n_outer as i64);
    validate_level(j, m, sign, n_outer)?;
    let n_sites = n_outer + 1;
    if n_sites > DENSE_SITE_CAP {
        return Err(Error::Resource {
            required_dim: 1usize << n_sites.min(63),
            cap_dim: 1usize << DENSE_SITE_CAP,
        });
    }
    let dim = 1usize << n_sites;
    let central = 1usize << n_outer;
    let mut amps = vec![C64::new(0.0, 0.0); dim];

    if sign == 0 {
        // Edge products: m = -j is |0⟩|0...0⟩, m = j+1 is |1⟩|1...1⟩.
        let index = if m == -j { 0 } else { central | (central - 1) };
        amps[index] = C64::new(1.0, 0.0);
    } else {
        // m = k - N/2 with k set bits, so k = m + N/2.
        let k = ((m.twice() + n_outer as i64) / 2) as u32;
        let upper = dicke(n_outer, k)?;
        let lower = dicke(n_outer, k - 1)?;
        let w = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let s = C64::new(sign as f64, 0.0);
        for b in 0..(1usize << n_outer) {
            amps[b] = w * upper.amplitude(b);
            amps[central | b] = w * s * lower.amplitude(b);
        }
    }
    StateVector::new(n_sites, amps)
}

fn require_positive_coupling(coupling: f64, what: &str) -> Result<()> {
    if coupling == 0.0 {
        return Err(Error::Domain(format!(
            "coupling = 0 makes the whole spectrum collapse; {what} is undefined"
        )));
    }
    if coupling < 0.0 || !coupling.is_finite() {
        return Err(Error::Domain(format!(
            "{what} requires coupling > 0; for negative coupling use the sign = +1 \
             partner states (map J -> -J)"
        )));
    }
    Ok(())
}

/// The zero-field ground energy: `-J (N+1)/2` for odd `N`,
/// `-J sqrt(N(N+2))/2` for even `N`.
pub fn ground_energy_zero_field(n_outer: u32, coupling: f64) -> Result<f64> {
    require_positive_coupling(coupling, "the zero-field ground energy")?;
    let n = n_outer as f64;
    if n_outer % 2 == 1 {
        Ok(-coupling * (n + 1.0) / 2.0)
    } else {
        Ok(-coupling * (n * (n + 2.0)).sqrt() / 2.0)
    }
}

/// Explicit zero-field ground states: one state for odd `N`
/// (`m = 1/2`, sign `-1`), the two degenerate `m = 0` and `m = 1` states for
/// even `N`.
pub fn ground_states_zero_field(n_outer: u32, coupling: f64) -> Result<Vec<StateVector>> {
    require_positive_coupling(coupling, "the zero-field ground state")?;
    if n_outer < 1 || n_outer > angular::SECTOR_CAP {
        return Err(Error::Domain(format!(
            "n_outer must be in 1..={}, got {n_outer}",
            angular::SECTOR_CAP
        )));
    }
    if n_outer % 2 == 1 {
        Ok(vec![top_sector_eigenstate(n_outer, HalfInt::HALF, -1)?])
    } else {
        Ok(vec![
            top_sector_eigenstate(n_outer, HalfInt::ZERO, -1)?,
            top_sector_eigenstate(n_outer, HalfInt::ONE, -1)?,
        ])
    }
}

/// The entanglement-distribution state
/// `|alpha⟩ = (|0⟩ W_N - |1⟩|0...0⟩)/sqrt(2)`, where `W_N` is the
/// single-excitation Dicke state. Its zero-field energy is `-J sqrt(N)`.
pub fn alpha_state(n_outer: u32) -> Result<StateVector> {
    top_sector_eigenstate(n_outer, HalfInt::from_twice(-(n_outer as i64) + 2), -1)
}

/// The fully polarized product state `|beta⟩ = |0⟩|0...0⟩` (basis index 0),
/// the edge state with `m = -N/2`. Zero-field energy 0; field energy
/// `-(N+1)B/2`.
pub fn beta_state(n_outer: u32) -> Result<StateVector> {
    top_sector_eigenstate(n_outer, HalfInt::from_twice(-(n_outer as i64)), 0)
}

/// The field window `(b_low, b_high)` in which `|alpha⟩` is the unique
/// ground state: `b_low = J sqrt(N) (sqrt(2(1 - 1/N)) - 1)`,
/// `b_high = J sqrt(N)`.
///
/// For `N = 1` the competing level behind `b_low` does not exist and the
/// window starts at zero: `(0, J)`.
pub fn alpha_field_window(n_outer: u32, coupling: f64) -> Result<(f64, f64)> {
    require_positive_coupling(coupling, "the alpha field window")?;
    if n_outer < 1 {
        return Err(Error::Domain("n_outer must be >= 1".into()));
    }
    let n = n_outer as f64;
    let b_high = coupling * n.sqrt();
    let b_low = if n_outer == 1 {
        0.0
    } else {
        coupling * n.sqrt() * ((2.0 * (1.0 - 1.0 / n)).sqrt() - 1.0)
    };
    Ok((b_low, b_high))
}

fn require_pair(n_outer: u32) -> Result<()> {
    if n_outer < 2 {
        return Err(Error::Domain(format!(
            "a pair of outer spins needs n_outer >= 2, got {n_outer}"
        )));
    }
    Ok(())
}

/// Zero-field, zero-temperature concurrence between any two outer spins:
/// `1/N` for odd `N`, `1/N - 1/(N(N-1))` for even `N`.
pub fn pair_concurrence_analytic(n_outer: u32) -> Result<f64> {
    require_pair(n_outer)?;
    let n = n_outer as f64;
    if n_outer % 2 == 1 {
        Ok(1.0 / n)
    } else {
        Ok(1.0 / n - 1.0 / (n * (n - 1.0)))
    }
}

/// Zero-field `⟨sigma_1x sigma_2x⟩` between any two outer spins:
/// `1/2 + 1/(2N)` for odd `N`, `1/2 + 1/(2N) - 1/(2N(N-1))` for even `N`.
/// Saturates at `1/2` as `N -> infinity`.
pub fn xx_correlation_analytic(n_outer: u32) -> Result<f64> {
    require_pair(n_outer)?;
    let n = n_outer as f64;
    if n_outer % 2 == 1 {
        Ok(0.5 + 1.0 / (2.0 * n))
    } else {
        Ok(0.5 + 1.0 / (2.0 * n) - 1.0 / (2.0 * n * (n - 1.0)))
    }
}

/// Amplitude of the even/odd concurrence oscillation,
/// `2/(N(N-1)(N+1))` for even `N`; equals
/// `pair_concurrence_analytic(N+1) - pair_concurrence_analytic(N)`.
pub fn oscillation_amplitude(n_outer: u32) -> Result<f64> {
    require_pair(n_outer)?;
    if n_outer % 2 != 0 {
        return Err(Error::Domain(format!(
            "oscillation amplitude is defined for even N, got {n_outer}"
        )));
    }
    let n = n_outer as f64;
    Ok(2.0 / (n * (n - 1.0) * (n + 1.0)))
}
