//! Spin operator matrices and rotations on a single spin-`F` manifold.
//!
//! Basis ordering is fixed crate-wide as `m = +F, +F-1, ..., -F` (index 0 is
//! the maximally stretched state `|F, +F>`), with `hbar = 1`.

use crate::halfint::HalfInt;
use crate::linalg::{c, cr, expm, CMatrix, CVector, C64, I};

/// The five standard spin matrices on a `2F + 1` dimensional manifold.
#[derive(Debug, Clone)]
pub struct SpinOps {
    pub f: HalfInt,
    pub fx: CMatrix,
    pub fy: CMatrix,
    pub fz: CMatrix,
    pub fplus: CMatrix,
    pub fminus: CMatrix,
}

impl SpinOps {
    pub fn dim(&self) -> usize {
        self.f.dim()
    }
}

/// Ladder matrix element `sqrt(F(F+1) - m(m+1))` for `F_+ |F,m> = ... |F,m+1>`.
fn ladder_element(f: HalfInt, m: HalfInt) -> f64 {
    let fv = f.value();
    let mv = m.value();
    (fv * (fv + 1.0) - mv * (mv + 1.0)).max(0.0).sqrt()
}

/// Build the spin operators for a spin-`F` manifold.
pub fn spin_operators(f: HalfInt) -> SpinOps {
    assert!(f.twice() >= 0, "spin length must be non-negative");
    let n = f.dim();
    let mut fz = CMatrix::zeros(n, n);
    let mut fplus = CMatrix::zeros(n, n);
    for (i, m) in f.projections().enumerate() {
        fz[(i, i)] = cr(m.value());
        if let Some(j) = f.index_of_m(m + HalfInt::from_int(1)) {
            // F_+ takes m to m+1; with m = +F first, that is one row up.
            fplus[(j, i)] = cr(ladder_element(f, m));
        }
    }
    let fminus = fplus.adjoint();
    let fx = (&fplus + &fminus) * cr(0.5);
    let fy = (&fplus - &fminus) * c(0.0, -0.5);
    SpinOps { f, fx, fy, fz, fplus, fminus }
}

/// Rotation operator `exp(-i alpha Fz) exp(-i beta Fy) exp(-i gamma Fz)`
/// (extrinsic Euler angles) on a single manifold. The `Fz` factors are exact
/// diagonal phases; the `Fy` factor goes through the dense Padé exponential.
pub fn rotation_operator(alpha: f64, beta: f64, gamma: f64, f: HalfInt) -> CMatrix {
    let ops = spin_operators(f);
    rotation_operator_from(&ops, alpha, beta, gamma)
}

/// Same as [`rotation_operator`] but reusing prebuilt spin matrices.
pub fn rotation_operator_from(ops: &SpinOps, alpha: f64, beta: f64, gamma: f64) -> CMatrix {
    let n = ops.dim();
    let mid = expm(&(&ops.fy * c(0.0, -beta)));
    let mut out = CMatrix::zeros(n, n);
    for (i, mi) in ops.f.projections().enumerate() {
        let pa = (-I * alpha * mi.value()).exp();
        for (j, mj) in ops.f.projections().enumerate() {
            let pg = (-I * gamma * mj.value()).exp();
            out[(i, j)] = pa * mid[(i, j)] * pg;
        }
    }
    out
}

/// Stretched state `|F, +F>` as a basis vector.
pub fn stretched_top(f: HalfInt) -> CVector {
    let mut v = CVector::zeros(f.dim());
    v[0] = cr(1.0);
    v
}

/// Diagonal of `exp(i pi (Fz - F))`: the `z`-basis parity signs `(-1)^(F - m)`.
pub fn parity_signs(f: HalfInt) -> Vec<f64> {
    f.projections()
        .map(|m| if (f - m).twice() % 4 == 0 { 1.0 } else { -1.0 })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_norm;

    fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
        a * b - b * a
    }

    #[test]
    fn spin_half_is_half_pauli() {
        let ops = spin_operators(HalfInt::from_twice(1));
        let sx = CMatrix::from_row_slice(2, 2, &[cr(0.), cr(1.), cr(1.), cr(0.)]);
        let sy = CMatrix::from_row_slice(2, 2, &[cr(0.), c(0., -1.), c(0., 1.), cr(0.)]);
        let sz = CMatrix::from_row_slice(2, 2, &[cr(1.), cr(0.), cr(0.), cr(-1.)]);
        assert!(max_norm(&(&ops.fx - sx * cr(0.5))) < 1e-15);
        assert!(max_norm(&(&ops.fy - sy * cr(0.5))) < 1e-15);
        assert!(max_norm(&(&ops.fz - sz * cr(0.5))) < 1e-15);
    }

    #[test]
    fn spin_one_fz_is_diag() {
        let ops = spin_operators(HalfInt::from_int(1));
        for (i, want) in [1.0, 0.0, -1.0].iter().enumerate() {
            assert_eq!(ops.fz[(i, i)], cr(*want));
        }
    }

    #[test]
    fn casimir_and_commutators_up_to_f_15_2() {
        for twice in 1..=15 {
            let f = HalfInt::from_twice(twice);
            let ops = spin_operators(f);
            let n = f.dim();
            let casimir = &ops.fx * &ops.fx + &ops.fy * &ops.fy + &ops.fz * &ops.fz;
            let want = CMatrix::identity(n, n) * cr(f.value() * (f.value() + 1.0));
            assert!(max_norm(&(casimir - want)) < 1e-12);
            assert!(max_norm(&(commutator(&ops.fx, &ops.fy) - &ops.fz * I)) < 1e-12);
            assert!(max_norm(&(commutator(&ops.fy, &ops.fz) - &ops.fx * I)) < 1e-12);
            assert!(max_norm(&(commutator(&ops.fz, &ops.fx) - &ops.fy * I)) < 1e-12);
            assert!(max_norm(&(&ops.fplus - (&ops.fx + &ops.fy * I))) < 1e-13);
        }
    }

    #[test]
    fn rotation_identity_and_composition() {
        let f = HalfInt::from_twice(5);
        let r0 = rotation_operator(0.0, 0.0, 0.0, f);
        assert!(max_norm(&(r0 - CMatrix::identity(f.dim(), f.dim()))) < 1e-14);
        let r1 = rotation_operator(0.0, 0.7, 0.0, f);
        let r2 = rotation_operator(0.0, 1.1, 0.0, f);
        let r12 = rotation_operator(0.0, 1.8, 0.0, f);
        assert!(max_norm(&(r1 * r2 - r12)) < 1e-12);
    }

    #[test]
    fn rotation_f1_matches_small_wigner_d() {
        // d^(1)(beta) in the m = +1, 0, -1 ordering
        let beta: f64 = 0.8123;
        let (s, co) = beta.sin_cos();
        let d = CMatrix::from_row_slice(
            3,
            3,
            &[
                cr((1.0 + co) / 2.0),
                cr(-s / 2f64.sqrt()),
                cr((1.0 - co) / 2.0),
                cr(s / 2f64.sqrt()),
                cr(co),
                cr(-s / 2f64.sqrt()),
                cr((1.0 - co) / 2.0),
                cr(s / 2f64.sqrt()),
                cr((1.0 + co) / 2.0),
            ],
        );
        let r = rotation_operator(0.0, beta, 0.0, HalfInt::from_int(1));
        assert!(max_norm(&(r - d)) < 1e-13);
    }

    #[test]
    fn rotation_unitarity_random_angles() {
        let mut seed = 0x5eed_5eedu64;
        let mut next = move || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((seed >> 11) as f64) / (1u64 << 53) as f64
        };
        for twice in [1, 2, 4, 7, 11, 15] {
            let f = HalfInt::from_twice(twice);
            let n = f.dim();
            for _ in 0..100 {
                let r = rotation_operator(
                    next() * std::f64::consts::TAU,
                    next() * std::f64::consts::PI,
                    next() * std::f64::consts::TAU,
                    f,
                );
                let dev = &r.adjoint() * &r - CMatrix::identity(n, n);
                assert!(max_norm(&dev) < 1e-11);
            }
        }
    }
}
