//! Multiplicative Ornstein-Uhlenbeck noise via the three-point marginal
//! density construction: the continuous OU process is discretized onto
//! `N_X = 3` field values, and the noise-averaged state is evolved exactly
//! (up to that discretization) as three stacked Liouville vectors.

use crate::linalg::{cr, kron, vec_of_matrix, CMatrix, CVector, I};
use crate::liouville::{vectorize_commutator, Superoperator};
use crate::Result;

/// Number of discrete field values in the marginal construction.
pub const N_X: usize = 3;

/// OU noise with white-noise-limit strength `kappa` and inverse correlation
/// time `lambda` (steady variance `kappa lambda / 2`).
#[derive(Debug, Clone, Copy)]
pub struct OUNoise {
    pub kappa: f64,
    pub lambda: f64,
}

impl OUNoise {
    pub fn new(kappa: f64, lambda: f64) -> Self {
        assert!(kappa > 0.0 && lambda > 0.0, "kappa and lambda must be positive");
        Self { kappa, lambda }
    }

    /// Discrete field values `sqrt(kappa lambda) (-1, 0, +1)`.
    pub fn field_values(&self) -> [f64; N_X] {
        let x = (self.kappa * self.lambda).sqrt();
        [-x, 0.0, x]
    }

    /// Three-point transition-rate generator of the discretized
    /// Fokker-Planck equation (acts on probability column vectors).
    pub fn generator3(&self) -> CMatrix {
        let l = self.lambda;
        CMatrix::from_row_slice(
            3,
            3,
            &[
                cr(-l),
                cr(0.5 * l),
                cr(0.0),
                cr(l),
                cr(-l),
                cr(l),
                cr(0.0),
                cr(0.5 * l),
                cr(-l),
            ],
        )
    }

    /// Steady-state distribution of the three-point chain.
    pub fn steady_distribution(&self) -> [f64; N_X] {
        [0.25, 0.5, 0.25]
    }

    /// Steady two-time covariance `<X(t) X(0)> = (kappa lambda / 2) e^{-lambda t}`
    /// of both the continuous process and its three-point discretization.
    pub fn steady_covariance(&self, t: f64) -> f64 {
        0.5 * self.kappa * self.lambda * (-self.lambda * t).exp()
    }
}

/// The three stacked marginal densities `u(X_-1), u(X_0), u(X_+1)`, each a
/// column-stacked `n x n` operator; their sum is the noise-averaged state.
#[derive(Debug, Clone)]
pub struct MarginalState {
    pub stacked: CVector,
    pub dim: usize,
}

impl MarginalState {
    /// Initialize as `u(X_a, 0) = P_ss(a) rho(0)`.
    pub fn from_initial(rho0: &CMatrix, noise: &OUNoise) -> Self {
        let n = rho0.nrows();
        let v = vec_of_matrix(rho0);
        let pss = noise.steady_distribution();
        let mut stacked = CVector::zeros(N_X * n * n);
        for (a, p) in pss.iter().enumerate() {
            stacked.rows_mut(a * n * n, n * n).copy_from(&(&v * cr(*p)));
        }
        Self { stacked, dim: n }
    }

    pub fn from_stacked(stacked: CVector, dim: usize) -> Self {
        assert_eq!(stacked.len(), N_X * dim * dim);
        Self { stacked, dim }
    }

    /// One marginal as a Liouville vector.
    pub fn marginal(&self, a: usize) -> CVector {
        let nn = self.dim * self.dim;
        self.stacked.rows(a * nn, nn).into_owned()
    }

    /// Noise-averaged state `sum_a u(X_a)` as a Liouville vector.
    pub fn average(&self) -> CVector {
        let nn = self.dim * self.dim;
        let mut v = CVector::zeros(nn);
        for a in 0..N_X {
            v += self.stacked.rows(a * nn, nn);
        }
        v
    }
}

/// Generator of the coupled marginal-density system,
/// `Lambda_3 (x) 1 - i sqrt(kappa lambda) diag(-1, 0, +1) (x) O_comm + 1_3 (x) L`,
/// a `3 n^2`-dimensional superoperator-like matrix. `noise_op` must be
/// Hermitian.
pub fn build_ou3_system(
    l: &Superoperator,
    noise_op: &CMatrix,
    noise: &OUNoise,
) -> Result<CMatrix> {
    let n = l.dim;
    let nn = n * n;
    let id_nn = CMatrix::identity(nn, nn);
    let id3 = CMatrix::identity(3, 3);
    let o_comm = vectorize_commutator(noise_op)?;
    let x = (noise.kappa * noise.lambda).sqrt();
    let diag = CMatrix::from_diagonal(&CVector::from_column_slice(&[cr(-1.0), cr(0.0), cr(1.0)]));
    let g = kron(&noise.generator3(), &id_nn) + kron(&(diag * (-I * x)), &o_comm.matrix)
        + kron(&id3, &l.matrix);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrate::expm_propagator;
    use crate::linalg::matrix_of_vec;
    use crate::liouville::{evolve, lindblad_generator, EvolveMethod, JumpChannel};
    use crate::linalg::{c, max_norm};

    #[test]
    fn steady_distribution_is_annihilated() {
        let noise = OUNoise::new(0.3, 1.7);
        let pss = CVector::from_column_slice(&[cr(0.25), cr(0.5), cr(0.25)]);
        assert!((noise.generator3() * pss).norm() < 1e-15);
    }

    #[test]
    fn chain_covariance_matches_ou_form() {
        // direct two-time computation on the three-state chain
        let noise = OUNoise::new(0.9, 0.63);
        let xs = noise.field_values();
        let pss = noise.steady_distribution();
        for t in [0.0, 0.3, 1.0, 4.0] {
            let prop = expm_propagator(&noise.generator3(), t);
            let mut cov = 0.0;
            for (a, xa) in xs.iter().enumerate() {
                for (b, xb) in xs.iter().enumerate() {
                    cov += xa * prop[(a, b)].re * xb * pss[b];
                }
            }
            assert!(
                (cov - noise.steady_covariance(t)).abs() < 1e-12,
                "t = {t}: {cov} vs {}",
                noise.steady_covariance(t)
            );
        }
    }

    #[test]
    fn tiny_kappa_reduces_to_bare_lindblad() {
        // two-level system with decay; OU noise on sigma_z with kappa -> 0
        let mut a = CMatrix::zeros(2, 2);
        a[(1, 0)] = cr(1.0);
        let mut h = CMatrix::zeros(2, 2);
        h[(0, 1)] = c(0.3, 0.0);
        h[(1, 0)] = c(0.3, 0.0);
        let l = lindblad_generator(&h, &[JumpChannel::new(a, 0.41)]).unwrap();
        let sz = CMatrix::from_diagonal(&CVector::from_column_slice(&[cr(1.0), cr(-1.0)]));

        let noise = OUNoise::new(1e-14, 1.0);
        let g = build_ou3_system(&l, &sz, &noise).unwrap();

        let mut rho0 = CMatrix::zeros(2, 2);
        rho0[(0, 0)] = cr(1.0);
        let marg = MarginalState::from_initial(&rho0, &noise);

        let t = 2.5;
        let u = expm_propagator(&g, t);
        let evolved = MarginalState::from_stacked(&u * &marg.stacked, 2);
        let avg = matrix_of_vec(&evolved.average(), 2);

        let bare = evolve(&l, &vec_of_matrix(&rho0), &[t], &EvolveMethod::MatrixExp).unwrap();
        let want = matrix_of_vec(&bare[0], 2);
        assert!(max_norm(&(avg - want)) < 1e-9);
    }

    #[test]
    fn average_trace_is_preserved() {
        let l = Superoperator::zeros(2);
        let sz = CMatrix::from_diagonal(&CVector::from_column_slice(&[cr(0.5), cr(-0.5)]));
        let noise = OUNoise::new(0.2, 0.8);
        let g = build_ou3_system(&l, &sz, &noise).unwrap();
        let mut rho0 = CMatrix::from_element(2, 2, cr(0.5));
        rho0[(1, 0)] = cr(0.5);
        let marg = MarginalState::from_initial(&rho0, &noise);
        let u = expm_propagator(&g, 7.0);
        let avg = matrix_of_vec(&MarginalState::from_stacked(&u * &marg.stacked, 2).average(), 2);
        let tr = avg[(0, 0)] + avg[(1, 1)];
        assert!((tr - cr(1.0)).norm() < 1e-10);
    }
}
