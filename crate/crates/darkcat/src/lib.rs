//! Numerical toolkit for *dark spin-cat* qubits: atomic qubits encoded in the
//! two dark spin-coherent states of a laser-driven pair of spin manifolds
//! (`F_g` coupled to `F_e = F_g - 1`).
//!
//! The crate covers, at desk scale (dense linear algebra, single/two atoms):
//!
//! * exact angular-momentum algebra ([`spin`], [`cg`], [`scs`]),
//! * the rotating-frame driven Hamiltonian and its dark states ([`darkstates`]),
//! * vectorized Lindblad evolution and Ornstein-Uhlenbeck colored noise via
//!   marginal densities ([`liouville`], [`ou`], [`integrate`]),
//! * autonomous stabilization analysis: conserved quantities, dissipative gap,
//!   bit-flip suppression laws ([`stabilization`]),
//! * Pauli-transfer-matrix channel characterization ([`ptm`]),
//! * adiabatic single-qubit gates with counter-diabatic driving ([`gates`]),
//! * a Rydberg-blockade CX gate with control-decay monitoring ([`cx`]).
//!
//! # Conventions
//!
//! * Basis ordering is `m = +F, +F-1, ..., -F` within every spin manifold;
//!   combined spaces place the `F_g` block before the `F_e` block.
//! * Spin quantum numbers are stored as twice-values ([`HalfInt`]) so
//!   half-integer spins stay exact.
//! * Spin coherent states follow
//!   `|theta, phi> = exp(-i phi Fz) exp(-i theta Fy) |F, +F>`,
//!   which differs from Radcliffe's definition by a phase `exp(-i F phi)`.
//! * Liouville-space objects use column-stacked vectorization throughout.
//! * `hbar = 1`; all rates and detunings are angular frequencies.

pub mod cg;
pub mod cx;
pub mod darkstates;
pub mod gates;
pub mod halfint;
pub mod integrate;
pub mod linalg;
pub mod liouville;
pub mod ou;
pub mod ptm;
pub mod scs;
pub mod spin;
pub mod stabilization;

pub use halfint::HalfInt;
pub use linalg::{CMatrix, CVector, C64};

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("drive has zero total Rabi frequency")]
    ZeroDrive,
    #[error("dark-state solver internal inconsistency: {0}")]
    DarkStateInconsistency(String),
    #[error("dark-state residuals too large: |H ds1| = {res1:.3e}, |H ds2| = {res2:.3e}")]
    DarkStateResidual { res1: f64, res2: f64 },
    #[error("left null space has dimension {found}, expected {expected}")]
    NullSpaceDimension { found: usize, expected: usize },
    #[error("eigenvalue iteration failed to converge")]
    EigenFailure,
    #[error("integrator step size underflow at t = {t:.6e} (h = {h:.3e}, |y| = {norm:.3e})")]
    StepUnderflow { t: f64, h: f64, norm: f64 },
    #[error("requested times must be finite and non-decreasing")]
    BadTimeGrid,
    #[error("PTM imaginary residue {0:.3e} above threshold")]
    ImaginaryResidue(f64),
    #[error("no linear window found for rate estimation")]
    NoLinearWindow,
    #[error("{0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
