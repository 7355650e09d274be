//! Dense complex linear algebra shared across the crate: matrix exponential,
//! null spaces, principal angles, spectra.

use crate::{Error, Result};
use nalgebra::{DMatrix, DVector};

pub type C64 = num_complex::Complex<f64>;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub const I: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn cr(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Maximum absolute column sum.
pub fn one_norm(a: &CMatrix) -> f64 {
    (0..a.ncols())
        .map(|j| a.column(j).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Largest entry magnitude.
pub fn max_norm(a: &CMatrix) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn pade_uv(a: &CMatrix, powers: &[&CMatrix], b: &[f64]) -> (CMatrix, CMatrix) {
    let n = a.nrows();
    let id = CMatrix::identity(n, n);
    let mut u_poly = &id * cr(b[1]);
    let mut v = &id * cr(b[0]);
    for (k, p) in powers.iter().enumerate() {
        u_poly += *p * cr(b[2 * k + 3]);
        v += *p * cr(b[2 * k + 2]);
    }
    (a * u_poly, v)
}

/// Matrix exponential by scaling and squaring with Padé approximants
/// (Higham 2005 order selection).
pub fn expm(a: &CMatrix) -> CMatrix {
    assert_eq!(a.nrows(), a.ncols(), "expm needs a square matrix");
    let n = a.nrows();
    let norm = one_norm(a);

    const THETA3: f64 = 1.495_585_217_958_292e-2;
    const THETA5: f64 = 2.539_398_330_063_23e-1;
    const THETA7: f64 = 9.504_178_996_162_932e-1;
    const THETA9: f64 = 2.097_847_961_257_068;
    const THETA13: f64 = 5.371_920_351_148_152;

    let a2 = a * a;
    let (u, v) = if norm <= THETA9 {
        if norm <= THETA3 {
            let b = [120.0, 60.0, 12.0, 1.0];
            pade_uv(a, &[&a2], &b)
        } else if norm <= THETA5 {
            let a4 = &a2 * &a2;
            let b = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
            pade_uv(a, &[&a2, &a4], &b)
        } else if norm <= THETA7 {
            let a4 = &a2 * &a2;
            let a6 = &a2 * &a4;
            let b = [
                17_297_280.0, 8_648_640.0, 1_995_840.0, 277_200.0, 25_200.0, 1_512.0, 56.0, 1.0,
            ];
            pade_uv(a, &[&a2, &a4, &a6], &b)
        } else {
            let a4 = &a2 * &a2;
            let a6 = &a2 * &a4;
            let a8 = &a4 * &a4;
            let b = [
                17_643_225_600.0,
                8_821_612_800.0,
                2_075_673_600.0,
                302_702_400.0,
                30_270_240.0,
                2_162_160.0,
                110_880.0,
                3_960.0,
                90.0,
                1.0,
            ];
            pade_uv(a, &[&a2, &a4, &a6, &a8], &b)
        }
    } else {
        let s = ((norm / THETA13).log2().ceil()).max(0.0) as u32;
        let a_scaled = a * cr((0.5f64).powi(s as i32));
        let a2 = &a_scaled * &a_scaled;
        let a4 = &a2 * &a2;
        let a6 = &a2 * &a4;
        let b: [f64; 14] = [
            64_764_752_532_480_000.0,
            32_382_376_266_240_000.0,
            7_771_770_303_897_600.0,
            1_187_353_796_428_800.0,
            129_060_195_264_000.0,
            10_559_470_521_600.0,
            670_442_572_800.0,
            33_522_128_640.0,
            1_323_241_920.0,
            40_840_800.0,
            960_960.0,
            16_380.0,
            182.0,
            1.0,
        ];
        let id = CMatrix::identity(n, n);
        let w1 = &a6 * cr(b[13]) + &a4 * cr(b[11]) + &a2 * cr(b[9]);
        let w2 = &a6 * cr(b[7]) + &a4 * cr(b[5]) + &a2 * cr(b[3]) + &id * cr(b[1]);
        let u = &a_scaled * (&a6 * w1 + w2);
        let z1 = &a6 * cr(b[12]) + &a4 * cr(b[10]) + &a2 * cr(b[8]);
        let v = &a6 * z1 + &a6 * cr(b[6]) + &a4 * cr(b[4]) + &a2 * cr(b[2]) + &id * cr(b[0]);
        let mut r = solve_pade(&v, &u);
        for _ in 0..s {
            r = &r * &r;
        }
        return r;
    };
    solve_pade(&v, &u)
}

/// Solve (V - U) X = (V + U).
fn solve_pade(v: &CMatrix, u: &CMatrix) -> CMatrix {
    let lhs = v - u;
    let rhs = v + u;
    lhs.lu().solve(&rhs).expect("Padé denominator is singular")
}

/// Right null space of `a`: orthonormal vectors with singular values
/// `sigma <= rel_tol * sigma_max` (all columns for a zero matrix).
pub fn null_space(a: &CMatrix, rel_tol: f64) -> Vec<CVector> {
    // Pad to square so the SVD carries a full right-singular basis.
    let n = a.ncols();
    let m = a.nrows();
    let sq = if m < n {
        let mut p = CMatrix::zeros(n, n);
        p.view_mut((0, 0), (m, n)).copy_from(a);
        p
    } else {
        a.clone()
    };
    let svd = sq.svd(false, true);
    let v_t = svd.v_t.as_ref().expect("SVD requested without V^H");
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let tol = rel_tol * smax.max(f64::MIN_POSITIVE);
    let mut out = Vec::new();
    for (k, s) in svd.singular_values.iter().enumerate() {
        if smax == 0.0 || *s <= tol {
            out.push(v_t.row(k).adjoint());
        }
    }
    out
}

/// Left null space of `a`: vectors `w` with `w^H a = 0`.
pub fn left_null_space(a: &CMatrix, rel_tol: f64) -> Vec<CVector> {
    null_space(&a.adjoint(), rel_tol)
}

/// Principal angles (radians, ascending) between the column spans of two
/// orthonormal sets.
pub fn principal_angles(u1: &[CVector], u2: &[CVector]) -> Vec<f64> {
    let k1 = u1.len();
    let k2 = u2.len();
    let mut overlap = CMatrix::zeros(k1, k2);
    for (i, a) in u1.iter().enumerate() {
        for (j, b) in u2.iter().enumerate() {
            overlap[(i, j)] = a.dotc(b);
        }
    }
    let svd = overlap.svd(false, false);
    let mut angles: Vec<f64> = svd
        .singular_values
        .iter()
        .map(|s| s.min(1.0).acos())
        .collect();
    angles.sort_by(|x, y| x.partial_cmp(y).unwrap());
    angles
}

/// Modified Gram-Schmidt orthonormalization; drops vectors with residual
/// norm below `tol`.
pub fn orthonormalize(vs: &[CVector], tol: f64) -> Vec<CVector> {
    let mut basis: Vec<CVector> = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for b in &basis {
            let ov = b.dotc(&w);
            w -= b * ov;
        }
        let nrm = w.norm();
        if nrm > tol {
            basis.push(w / cr(nrm));
        }
    }
    basis
}

/// Full eigenvalue spectrum of a general complex matrix (complex Schur
/// iteration).
pub fn eigenvalues(a: &CMatrix) -> Result<Vec<C64>> {
    for max_iter in [30_000usize, 300_000] {
        if let Some(schur) = nalgebra::linalg::Schur::try_new(a.clone(), 1.0e-13, max_iter) {
            if let Some(evs) = schur.eigenvalues() {
                return Ok(evs.iter().copied().collect());
            }
        }
    }
    Err(Error::EigenFailure)
}

/// Kronecker product (column-stacked convention: `vec(A X B) = (B^T (x) A) vec(X)`).
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Column-stacked vectorization of a matrix.
pub fn vec_of_matrix(a: &CMatrix) -> CVector {
    let (m, n) = a.shape();
    CVector::from_fn(m * n, |k, _| a[(k % m, k / m)])
}

/// Inverse of [`vec_of_matrix`] for square matrices.
pub fn matrix_of_vec(v: &CVector, n: usize) -> CMatrix {
    assert_eq!(v.len(), n * n, "vector length must be n^2");
    CMatrix::from_fn(n, n, |i, j| v[j * n + i])
}

/// Frobenius inner product `tr[a^H b]`.
pub fn frobenius_inner(a: &CMatrix, b: &CMatrix) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}
