//! Vectorized Lindblad generators (column-stacked convention), their
//! spectra, and open-system evolution.

use crate::integrate::{expm_propagator, integrate_adaptive, RkOptions};
use crate::linalg::{
    self, cr, kron, matrix_of_vec, null_space, one_norm, vec_of_matrix, CMatrix, CVector, C64, I,
};
use crate::{Error, Result};

/// A Liouville-space generator or map: an `n^2 x n^2` matrix acting on
/// column-stacked `n x n` operators.
#[derive(Debug, Clone)]
pub struct Superoperator {
    pub matrix: CMatrix,
    /// Hilbert-space dimension `n`.
    pub dim: usize,
}

impl Superoperator {
    pub fn zeros(dim: usize) -> Self {
        Self { matrix: CMatrix::zeros(dim * dim, dim * dim), dim }
    }

    pub fn from_matrix(matrix: CMatrix, dim: usize) -> Result<Self> {
        if matrix.nrows() != dim * dim || matrix.ncols() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "superoperator must be {0}x{0} for n = {1}",
                dim * dim,
                dim
            )));
        }
        Ok(Self { matrix, dim })
    }

    pub fn apply(&self, v: &CVector) -> CVector {
        &self.matrix * v
    }

    pub fn apply_to_operator(&self, rho: &CMatrix) -> CMatrix {
        matrix_of_vec(&(&self.matrix * vec_of_matrix(rho)), self.dim)
    }

    /// Residual of trace preservation: `|1^T L| / |L|` with the vectorized
    /// identity as the left probe (zero for any Lindblad generator).
    pub fn trace_preservation_residual(&self) -> f64 {
        let id_vec = vec_of_matrix(&CMatrix::identity(self.dim, self.dim));
        let probe = self.matrix.adjoint() * id_vec;
        let scale = one_norm(&self.matrix);
        if scale == 0.0 {
            0.0
        } else {
            probe.norm() / scale
        }
    }
}

impl std::ops::Add<&Superoperator> for &Superoperator {
    type Output = Superoperator;
    fn add(self, rhs: &Superoperator) -> Superoperator {
        assert_eq!(self.dim, rhs.dim, "superoperator dimensions differ");
        Superoperator { matrix: &self.matrix + &rhs.matrix, dim: self.dim }
    }
}

/// A dissipation channel `rate * D[op]`.
#[derive(Debug, Clone)]
pub struct JumpChannel {
    pub op: CMatrix,
    pub rate: f64,
}

impl JumpChannel {
    pub fn new(op: CMatrix, rate: f64) -> Self {
        assert!(rate >= 0.0, "jump rates must be non-negative");
        Self { op, rate }
    }
}

/// `-i (1 (x) H - H^T (x) 1)`, the vectorized commutator `-i[H, .]`.
pub fn vectorize_hamiltonian(h: &CMatrix) -> Result<Superoperator> {
    if h.nrows() != h.ncols() {
        return Err(Error::DimensionMismatch("Hamiltonian must be square".into()));
    }
    let n = h.nrows();
    let id = CMatrix::identity(n, n);
    let m = (kron(&id, h) - kron(&h.transpose(), &id)) * (-I);
    Superoperator::from_matrix(m, n)
}

/// Vectorized commutator superoperator `(1 (x) O - O^T (x) 1)` of a noise
/// operator (no `-i` factor).
pub fn vectorize_commutator(op: &CMatrix) -> Result<Superoperator> {
    if op.nrows() != op.ncols() {
        return Err(Error::DimensionMismatch("operator must be square".into()));
    }
    let n = op.nrows();
    let id = CMatrix::identity(n, n);
    let m = kron(&id, op) - kron(&op.transpose(), &id);
    Superoperator::from_matrix(m, n)
}

/// `rate * [(a^dag)^T (x) a - 1/2 ((a^dag a)^T (x) 1 + 1 (x) a^dag a)]`,
/// the vectorized dissipator `rate * D[a]`.
pub fn vectorize_dissipator(ch: &JumpChannel) -> Result<Superoperator> {
    let a = &ch.op;
    if a.nrows() != a.ncols() {
        return Err(Error::DimensionMismatch("jump operator must be square".into()));
    }
    let n = a.nrows();
    let id = CMatrix::identity(n, n);
    let ad = a.adjoint();
    let ada = &ad * a;
    let m = (kron(&ad.transpose(), a)
        - (kron(&ada.transpose(), &id) + kron(&id, &ada)) * cr(0.5))
        * cr(ch.rate);
    Superoperator::from_matrix(m, n)
}

/// Full Lindblad generator `-i[H, .] + sum_k rate_k D[a_k]`.
pub fn lindblad_generator(h: &CMatrix, channels: &[JumpChannel]) -> Result<Superoperator> {
    let mut g = vectorize_hamiltonian(h)?;
    for ch in channels {
        g = &g + &vectorize_dissipator(ch)?;
    }
    Ok(g)
}

/// White-noise limit of an Ornstein-Uhlenbeck coupling: `L + kappa D[op]`.
pub fn white_noise_lindbladian(
    l: &Superoperator,
    noise_op: &CMatrix,
    kappa: f64,
) -> Result<Superoperator> {
    let d = vectorize_dissipator(&JumpChannel::new(noise_op.clone(), kappa))?;
    Ok(l + &d)
}

/// How [`evolve`] advances the state.
#[derive(Debug, Clone)]
pub enum EvolveMethod {
    /// Adaptive embedded Runge-Kutta (default tolerances 1e-10 / 1e-12).
    AdaptiveRk(RkOptions),
    /// Dense matrix exponential per distinct time step; exact for
    /// time-independent generators and cheap on uniform grids.
    MatrixExp,
}

impl Default for EvolveMethod {
    fn default() -> Self {
        EvolveMethod::AdaptiveRk(RkOptions::default())
    }
}

/// Evolve a vectorized state under a time-independent generator, returning
/// the state at each requested time (non-decreasing, starting at `t >= 0`).
pub fn evolve(
    g: &Superoperator,
    state0: &CVector,
    times: &[f64],
    method: &EvolveMethod,
) -> Result<Vec<CVector>> {
    if state0.len() != g.matrix.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "state length {} does not match generator dimension {}",
            state0.len(),
            g.matrix.nrows()
        )));
    }
    match method {
        EvolveMethod::AdaptiveRk(opts) => integrate_adaptive(
            |_t, y, dy| dy.gemv(cr(1.0), &g.matrix, y, cr(0.0)),
            0.0,
            state0,
            times,
            opts,
        ),
        EvolveMethod::MatrixExp => {
            if times.iter().any(|t| !t.is_finite() || *t < 0.0)
                || times.windows(2).any(|w| w[0] > w[1])
            {
                return Err(Error::BadTimeGrid);
            }
            let mut out = Vec::with_capacity(times.len());
            let mut state = state0.clone();
            let mut t = 0.0;
            let mut cached: Option<(f64, CMatrix)> = None;
            for &tt in times {
                let dt = tt - t;
                if dt > 0.0 {
                    let fresh = match &cached {
                        Some((d, _)) if (*d - dt).abs() <= 1e-12 * dt.abs() => false,
                        _ => true,
                    };
                    if fresh {
                        cached = Some((dt, expm_propagator(&g.matrix, dt)));
                    }
                    let (_, u) = cached.as_ref().unwrap();
                    state = u * &state;
                    t = tt;
                }
                out.push(state.clone());
            }
            Ok(out)
        }
    }
}

/// Full eigenvalue spectrum of a generator.
pub fn spectrum(l: &Superoperator) -> Result<Vec<C64>> {
    linalg::eigenvalues(&l.matrix)
}

/// Dissipative gap: smallest decay rate among nonzero eigenvalues,
/// `min { -Re(lambda) : Re(lambda) < -tol }` with `tol = 1e-9 |L|_1`.
pub fn dissipative_gap(l: &Superoperator) -> Result<f64> {
    let evs = spectrum(l)?;
    let tol = 1e-9 * one_norm(&l.matrix);
    evs.iter()
        .filter(|ev| ev.re < -tol)
        .map(|ev| -ev.re)
        .fold(None, |acc: Option<f64>, x| Some(acc.map_or(x, |a| a.min(x))))
        .ok_or_else(|| Error::Numerical("no decaying eigenvalues found".into()))
}

/// Orthonormal right zero modes (steady directions) of a generator, from
/// the SVD with relative threshold `rel_tol`.
pub fn right_zero_modes(l: &Superoperator, rel_tol: f64) -> Vec<CVector> {
    null_space(&l.matrix, rel_tol)
}

/// Orthonormal left zero modes (conserved quantities) of a generator.
pub fn left_zero_modes(l: &Superoperator, rel_tol: f64) -> Vec<CVector> {
    null_space(&l.matrix.adjoint(), rel_tol)
}

/// Matrix-form Lindblad right-hand side for fast time-dependent evolution:
/// applies `-i[H0 + H_t, rho] + sum rate D[a] rho` without materializing the
/// `n^2 x n^2` generator.
#[derive(Debug, Clone)]
pub struct MatrixFormLindblad {
    pub h_static: CMatrix,
    channels: Vec<(CMatrix, CMatrix, f64)>, // (a, a^dag a, rate)
}

impl MatrixFormLindblad {
    pub fn new(h_static: CMatrix, channels: &[JumpChannel]) -> Self {
        let channels = channels
            .iter()
            .map(|ch| (ch.op.clone(), ch.op.adjoint() * &ch.op, ch.rate))
            .collect();
        Self { h_static, channels }
    }

    /// `out = -i[H_static + h_extra, rho] + sum_k rate_k D[a_k] rho`.
    pub fn apply(&self, h_extra: Option<&CMatrix>, rho: &CMatrix, out: &mut CMatrix) {
        let mut h = self.h_static.clone();
        if let Some(ht) = h_extra {
            h += ht;
        }
        let hr = &h * rho;
        *out = (&hr - hr.adjoint()) * (-I);
        for (a, ada, rate) in &self.channels {
            if *rate == 0.0 {
                continue;
            }
            let ar = a * rho;
            *out += (&ar * a.adjoint()) * cr(*rate);
            let w = ada * rho;
            *out -= (&w + w.adjoint()) * cr(0.5 * rate);
        }
    }
}
