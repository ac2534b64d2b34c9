//! Exact angular-momentum bookkeeping for the collection of outer spins.
//!
//! The `N` outer spins of the star collectively behave as a single spin with
//! total angular momentum `J`. This module provides the exact combinatorics of
//! that decomposition (which `j` sectors occur and with what multiplicity),
//! half-integer `(j, m)` labels stored as doubled integers so no floating
//! comparison is ever needed, ladder coefficients, and dense symmetric Dicke
//! states in the product basis.
//!
//! Basis convention used by every dense vector in this crate: basis index `b`
//! has bit `N` (most significant) for the central spin and bits `0..N-1` for
//! outer spins `1..N`; bit value 1 is the `|+1/2⟩` spin state, bit value 0 is
//! `|-1/2⟩`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use ndarray::Array1;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Largest outer-spin count for which sector multiplicities fit in 64 bits.
pub const SECTOR_CAP: u32 = 62;

/// Largest total site count for which dense state vectors are constructed.
pub const DENSE_SITE_CAP: u32 = 24;

/// Amplitudes at or below this magnitude are treated as zero when fixing the
/// global phase of a state vector.
const PHASE_EPS: f64 = 1e-10;

/// A half-integer angular-momentum label, stored as its doubled value.
///
/// `HalfInt::from_twice(3)` is `3/2`; `HalfInt::from_int(2)` is `2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    /// Builds from the doubled value (`2j` or `2m`).
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    /// Builds from an integer value.
    pub const fn from_int(value: i64) -> Self {
        HalfInt { twice: 2 * value }
    }

    /// The doubled value `2j`.
    pub const fn twice(self) -> i64 {
        self.twice
    }

    /// The value as a float (exact for any representable half-integer).
    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// Whether this is a valid total-angular-momentum label (`j >= 0`).
    pub const fn is_valid_j(self) -> bool {
        self.twice >= 0
    }

    /// Whether `self` is a valid projection `m` for the given `j`:
    /// `|m| <= j` with matching integer/half-integer character.
    pub fn is_valid_m_for(self, j: HalfInt) -> bool {
        j.is_valid_j() && self.twice.abs() <= j.twice && (self.twice - j.twice) % 2 == 0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// One `j` sector of the outer-spin decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sector {
    pub j: HalfInt,
    pub multiplicity: u64,
}

/// The full decomposition of `N` outer spins into `j` sectors.
///
/// Entries run over `j = (N - 2r)/2` for `r = 0..=N/2`, strictly decreasing
/// in `j`, with multiplicity `C(N, r) - C(N, r - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorTable {
    n_outer: u32,
    entries: Vec<Sector>,
}

impl SectorTable {
    pub fn n_outer(&self) -> u32 {
        self.n_outer
    }

    pub fn entries(&self) -> &[Sector] {
        &self.entries
    }

    pub fn multiplicity_of(&self, j: HalfInt) -> Option<u64> {
        self.entries
            .iter()
            .find(|s| s.j == j)
            .map(|s| s.multiplicity)
    }

    /// `sum multiplicity * (2j + 1)`: dimension of the outer-spin space, `2^N`.
    pub fn outer_dimension(&self) -> u64 {
        self.entries
            .iter()
            .map(|s| s.multiplicity * (s.j.twice() as u64 + 1))
            .sum()
    }

    /// `sum multiplicity * (4j + 2)`: number of energy eigenstates, `2^(N+1)`.
    pub fn full_dimension(&self) -> u64 {
        self.entries
            .iter()
            .map(|s| s.multiplicity * (2 * s.j.twice() as u64 + 2))
            .sum()
    }
}

/// Exact binomial coefficient; zero for `k` outside `0..=n`.
fn binomial(n: u32, k: i64) -> u128 {
    if k < 0 || k > n as i64 {
        return 0;
    }
    let k = (k as u32).min(n - k as u32);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc * (n as u128 - k as u128 + i) / i;
    }
    acc
}

fn check_n_outer(n_outer: u32) -> Result<()> {
    if n_outer < 1 || n_outer > SECTOR_CAP {
        return Err(Error::Domain(format!(
            "n_outer must be in 1..={SECTOR_CAP}, got {n_outer}"
        )));
    }
    Ok(())
}

/// Decomposes `N` outer spins into `(j, multiplicity)` sectors.
///
/// `j` runs over `(N - 2r)/2` for `r = 0..=N/2` with multiplicity
/// `C(N, r) - C(N, r - 1)`, computed in exact integer arithmetic.
pub fn sectors(n_outer: u32) -> Result<SectorTable> {
    check_n_outer(n_outer)?;
    let mut entries = Vec::with_capacity(n_outer as usize / 2 + 1);
    for r in 0..=(n_outer / 2) {
        let mult = binomial(n_outer, r as i64) - binomial(n_outer, r as i64 - 1);
        entries.push(Sector {
            j: HalfInt::from_twice(n_outer as i64 - 2 * r as i64),
            multiplicity: mult as u64,
        });
    }
    Ok(SectorTable { n_outer, entries })
}

/// Counts the eigenstates accounted for by the sector decomposition,
/// evaluating `sum_r (C(N,r) - C(N,r-1)) * (4j + 2)` term by term.
///
/// The result always equals `2^(N+1)`, the full Hilbert-space dimension of
/// the star (central spin included).
pub fn state_count(n_outer: u32) -> Result<u64> {
    let table = sectors(n_outer)?;
    let mut total: u128 = 0;
    for sector in table.entries() {
        total += sector.multiplicity as u128 * (2 * sector.j.twice() as u128 + 2);
    }
    Ok(total as u64)
}

/// Coefficient in `J_-|j,m⟩ = c |j,m-1⟩`, i.e. `sqrt((j+m)(j-m+1))`.
pub fn lowering_coeff(j: HalfInt, m: HalfInt) -> Result<f64> {
    if !m.is_valid_m_for(j) {
        return Err(Error::Domain(format!(
            "invalid (j, m) pair: j = {j}, m = {m}"
        )));
    }
    // (j+m)(j-m+1) = (2j+2m)(2j-2m+2)/4, an exact integer for valid pairs.
    let prod = (j.twice() + m.twice()) * (j.twice() - m.twice() + 2);
    Ok(((prod / 4) as f64).sqrt())
}

/// A dense, normalized state vector over `n_sites` spin-1/2 sites.
///
/// Amplitudes are indexed by the basis convention documented at module level.
/// Every constructor fixes the global phase so that the first amplitude above
/// `1e-10` in magnitude is real and positive.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_sites: u32,
    amps: Array1<C64>,
}

impl StateVector {
    /// Wraps an amplitude vector, which must already be normalized to unit
    /// L2 norm within `1e-8`; the exact norm and global phase are then fixed.
    pub fn new(n_sites: u32, amps: Vec<C64>) -> Result<Self> {
        check_site_count(n_sites)?;
        let dim = 1usize << n_sites;
        if amps.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: amps.len(),
            });
        }
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-8 {
            return Err(Error::Domain(format!(
                "state vector is not normalized: |norm - 1| = {:.3e}",
                (norm - 1.0).abs()
            )));
        }
        let mut state = StateVector {
            n_sites,
            amps: Array1::from_vec(amps) / C64::from(norm),
        };
        state.fix_phase();
        Ok(state)
    }

    /// The product basis state with the given index.
    pub fn basis_state(n_sites: u32, index: usize) -> Result<Self> {
        check_site_count(n_sites)?;
        let dim = 1usize << n_sites;
        if index >= dim {
            return Err(Error::Domain(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut amps = vec![C64::new(0.0, 0.0); dim];
        amps[index] = C64::new(1.0, 0.0);
        Ok(StateVector {
            n_sites,
            amps: Array1::from_vec(amps),
        })
    }

    pub fn n_sites(&self) -> u32 {
        self.n_sites
    }

    pub fn dim(&self) -> usize {
        1usize << self.n_sites
    }

    pub fn amplitudes(&self) -> &[C64] {
        self.amps.as_slice().expect("contiguous amplitudes")
    }

    pub fn as_array(&self) -> &Array1<C64> {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> C64 {
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Rotates the global phase so the first amplitude with magnitude above
    /// `1e-10` is real and positive.
    fn fix_phase(&mut self) {
        if let Some(first) = self.amps.iter().find(|a| a.norm() > PHASE_EPS) {
            let phase = first / first.norm();
            if (phase - C64::new(1.0, 0.0)).norm() > 0.0 {
                self.amps.mapv_inplace(|a| a * phase.conj());
            }
        }
    }
}

fn check_site_count(n_sites: u32) -> Result<()> {
    if n_sites == 0 {
        return Err(Error::Domain("state needs at least one site".into()));
    }
    if n_sites > DENSE_SITE_CAP {
        return Err(Error::Resource {
            required_dim: 1usize << n_sites.min(63),
            cap_dim: 1usize << DENSE_SITE_CAP,
        });
    }
    Ok(())
}

/// The symmetric Dicke state of `n_outer` spins with `n_ones` up-spins:
/// the equal superposition of every basis state with `n_ones` set bits.
///
/// This is the `|j = N/2, m = n_ones - N/2⟩` eigenstate of the collective
/// outer-spin angular momentum.
pub fn dicke(n_outer: u32, n_ones: u32) -> Result<StateVector> {
    check_n_outer(n_outer)?;
    check_site_count(n_outer)?;
    if n_ones > n_outer {
        return Err(Error::Domain(format!(
            "n_ones = {n_ones} exceeds n_outer = {n_outer}"
        )));
    }
    let dim = 1usize << n_outer;
    let count = binomial(n_outer, n_ones as i64) as f64;
    let amp = C64::new(1.0 / count.sqrt(), 0.0);
    let mut amps = vec![C64::new(0.0, 0.0); dim];
    for (b, slot) in amps.iter_mut().enumerate() {
        if b.count_ones() == n_ones {
            *slot = amp;
        }
    }
    Ok(StateVector {
        n_sites: n_outer,
        amps: Array1::from_vec(amps),
    })
}
