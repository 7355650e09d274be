//! Clebsch-Gordan coefficients for rank-1 (dipole) couplings, in the
//! Condon-Shortley phase convention.

use crate::halfint::HalfInt;
use crate::{Error, Result};

/// `<F1, m1; 1, q | F2, m2>` for the rank-1 coupling `F1 (x) 1 -> F2`,
/// evaluated from the closed-form Condon-Shortley table.
///
/// Selection-rule violations return `0.0`. That covers `m2 != m1 + q`, the
/// triangle rule, and a target projection `m2` outside the `F2` manifold
/// (how stretched states decouple from pi light). A malformed *input* state
/// (`|m1| > F1`, wrong parity, `|q| > 1`) is an error instead.
pub fn clebsch_gordan(f1: HalfInt, m1: HalfInt, q: i32, f2: HalfInt, m2: HalfInt) -> Result<f64> {
    if q.abs() > 1 {
        return Err(Error::InvalidQuantumNumbers(format!(
            "polarization q = {q} outside rank-1 range"
        )));
    }
    if f1.twice() < 0 || f2.twice() < 0 {
        return Err(Error::InvalidQuantumNumbers("negative spin length".into()));
    }
    if m1.abs() > f1 || (f1 - m1).twice() % 2 != 0 {
        return Err(Error::InvalidQuantumNumbers(format!(
            "input projection m1 = {m1} invalid for F1 = {f1}"
        )));
    }
    // Selection rules: m conservation, manifold reach, triangle condition.
    if m2.twice() != m1.twice() + 2 * q || m2.abs() > f2 {
        return Ok(0.0);
    }
    let df = f2.twice() - f1.twice();
    if df.abs() > 2 || df % 2 != 0 {
        return Ok(0.0);
    }

    let j = f1.value();
    let m = m2.value();
    let val = match (df / 2, q) {
        // F2 = F1 + 1
        (1, 1) => ((j + m) * (j + m + 1.0) / ((2.0 * j + 1.0) * (2.0 * j + 2.0))).sqrt(),
        (1, 0) => ((j - m + 1.0) * (j + m + 1.0) / ((2.0 * j + 1.0) * (j + 1.0))).sqrt(),
        (1, -1) => ((j - m) * (j - m + 1.0) / ((2.0 * j + 1.0) * (2.0 * j + 2.0))).sqrt(),
        // F2 = F1
        (0, 1) => -((j + m) * (j - m + 1.0) / (2.0 * j * (j + 1.0))).sqrt(),
        (0, 0) => m / (j * (j + 1.0)).sqrt(),
        (0, -1) => ((j - m) * (j + m + 1.0) / (2.0 * j * (j + 1.0))).sqrt(),
        // F2 = F1 - 1
        (-1, 1) => ((j - m) * (j - m + 1.0) / (2.0 * j * (2.0 * j + 1.0))).sqrt(),
        (-1, 0) => -((j - m) * (j + m) / (j * (2.0 * j + 1.0))).sqrt(),
        (-1, -1) => ((j + m + 1.0) * (j + m) / (2.0 * j * (2.0 * j + 1.0))).sqrt(),
        _ => unreachable!("df and q are constrained above"),
    };
    Ok(val)
}
