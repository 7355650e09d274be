//! Spin coherent states and their `(F_z)^n` matrix elements.
//!
//! Convention: `|theta, phi> = exp(-i phi Fz) exp(-i theta Fy) |F, +F>`.
//! This differs from Radcliffe's definition by a phase `exp(-i F phi)`.

use crate::halfint::HalfInt;
use crate::linalg::{CVector, C64};
use crate::spin::{rotation_operator, spin_operators, stretched_top};

/// Bloch-sphere direction of a spin coherent state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SCSAngles {
    /// Polar angle in `[0, pi]`.
    pub theta: f64,
    /// Azimuthal angle in `[0, 2 pi)`.
    pub phi: f64,
}

impl SCSAngles {
    /// Normalizes `phi` into `[0, 2 pi)`; `theta` must lie in `[0, pi]`.
    pub fn new(theta: f64, phi: f64) -> Self {
        assert!(
            (0.0..=std::f64::consts::PI + 1e-12).contains(&theta),
            "polar angle {theta} outside [0, pi]"
        );
        Self {
            theta: theta.min(std::f64::consts::PI),
            phi: phi.rem_euclid(std::f64::consts::TAU),
        }
    }

    /// The antipodal direction `(pi - theta, pi + phi)`.
    pub fn antipode(self) -> Self {
        Self::new(std::f64::consts::PI - self.theta, self.phi + std::f64::consts::PI)
    }

    /// Cartesian unit vector.
    pub fn bloch_vector(self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    /// Angle between two Bloch directions.
    pub fn angle_to(self, other: Self) -> f64 {
        let a = self.bloch_vector();
        let b = other.bloch_vector();
        let dot: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        dot.clamp(-1.0, 1.0).acos()
    }
}

/// Unit-norm spin coherent state `|theta, phi>` in the `m = +F ... -F` basis.
pub fn spin_coherent_state(angles: SCSAngles, f: HalfInt) -> CVector {
    let r = rotation_operator(angles.phi, angles.theta, 0.0, f);
    &r * stretched_top(f)
}

/// Exact matrix element `<a1| (F_z)^{n_z} |a2>` by dense algebra.
pub fn scs_fz_power_element(n_z: u32, a1: SCSAngles, a2: SCSAngles, f: HalfInt) -> C64 {
    let ops = spin_operators(f);
    let bra = spin_coherent_state(a1, f);
    let mut ket = spin_coherent_state(a2, f);
    for _ in 0..n_z {
        ket = &ops.fz * ket;
    }
    bra.dotc(&ket)
}

/// Which of the antipodal pair's angles carries the control error `epsilon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnglePerturbation {
    /// `(theta2, phi2) = (pi - theta1 + eps, pi + phi1)`
    Theta,
    /// `(theta2, phi2) = (pi - theta1, pi + phi1 + eps)`
    Phi,
}

/// Leading-order magnitude of the off-diagonal element
/// `<theta1, phi1| (F_z)^{n_z} |theta2, phi2>` for a near-antipodal pair with
/// angle error `epsilon`:
/// `|eps|^(2F - n) 2^(-2F) (2F)!/(2F - n)! |sin theta1|^k`,
/// with `k = n_z` for a polar error and `k = 2F` for an azimuthal one.
pub fn scs_fz_power_offdiag_asymptotic(
    n_z: u32,
    theta1: f64,
    epsilon: f64,
    kind: AnglePerturbation,
    f: HalfInt,
) -> f64 {
    let two_f = f.twice() as u32; // integer here: 2F
    assert!(n_z <= two_f, "asymptotic form needs n_z <= 2F");
    let falling: f64 = (0..n_z).map(|k| (two_f - k) as f64).product();
    let k = match kind {
        AnglePerturbation::Theta => n_z,
        AnglePerturbation::Phi => two_f,
    };
    epsilon.abs().powi((two_f - n_z) as i32)
        * 2f64.powi(-(two_f as i32))
        * falling
        * theta1.sin().abs().powi(k as i32)
}

/// Exact differential of diagonal elements across the antipodal pair,
/// `<a1|(F_z)^n|a1> - <a2|(F_z)^n|a2>` with `a2` the antipode of `a1`.
pub fn scs_fz_power_diag_differential(n_z: u32, a1: SCSAngles, f: HalfInt) -> f64 {
    let d1 = scs_fz_power_element(n_z, a1, a1, f);
    let a2 = a1.antipode();
    let d2 = scs_fz_power_element(n_z, a2, a2, f);
    debug_assert!(d1.im.abs() < 1e-10 && d2.im.abs() < 1e-10);
    d1.re - d2.re
}

/// Leading-order diagonal differential `2 (F cos theta1)^{n_z}`; vanishes on
/// the equator.
pub fn scs_fz_power_diag_differential_asymptotic(n_z: u32, theta1: f64, f: HalfInt) -> f64 {
    2.0 * (f.value() * theta1.cos()).powi(n_z as i32)
}
