//! Exact solver for the spin-star XX network.
//!
//! One central spin-1/2 couples with equal XX strength to `N` outer spins
//! that do not couple to each other:
//!
//! ```text
//! H = J (s0+ J- + s0- J+) + B Fz
//! ```
//!
//! where `s0±` are the central-spin ladder operators, `J±` the collective
//! ladder operators of the outer spins, and `Fz` the z component of the
//! total angular momentum in a `+Z` field `B`.
//!
//! The crate is organized as:
//!
//! - [`angular`] — exact sector combinatorics, half-integer labels, ladder
//!   coefficients, and dense Dicke states;
//! - [`analytic`] — the closed-form spectrum with degeneracies, explicit
//!   ground states, the `|alpha⟩`/`|beta⟩` states, the magnetic-field window
//!   in which `|alpha⟩` is the ground state, and closed-form
//!   entanglement/correlation expressions;
//! - [`oracle`] — dense brute-force diagonalization used to cross-validate
//!   every analytic result on small systems;
//! - [`qinfo`] — reduced density matrices, concurrence (X-state shortcut and
//!   the Wootters construction), correlation functions, fidelity, and
//!   central-spin measurement.
//!
//! Basis convention shared by all modules: basis index `b` of an
//! `n_sites`-spin register uses bit `n_sites - 1` for the central spin (when
//! the register is the full star) and bits `0..N-1` for outer spins `1..N`;
//! bit value 1 is the `|+1/2⟩` state.
//!
//! All operations are pure functions over immutable inputs and are safe to
//! call concurrently.

pub mod analytic;
pub mod angular;
pub mod error;
pub mod oracle;
pub mod qinfo;

pub use analytic::{EigenLevel, ModelParams};
pub use angular::{HalfInt, Sector, SectorTable, StateVector};
pub use error::{Error, Result};
pub use oracle::{DenseOperator, EigenDecomposition, PauliAxis};
pub use qinfo::{DensityMatrix, MeasurementResult, XStateRDM};
