//! Adaptive Dormand-Prince 5(4) integration for vectorized quantum states,
//! plus a dense matrix-exponential propagator for time-independent
//! generators.

use crate::linalg::{cr, expm, CMatrix, CVector};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct RkOptions {
    pub rtol: f64,
    pub atol: f64,
    /// Hard cap on accepted + rejected steps.
    pub max_steps: u64,
}

impl Default for RkOptions {
    fn default() -> Self {
        Self { rtol: 1e-10, atol: 1e-12, max_steps: 200_000_000 }
    }
}

impl RkOptions {
    pub fn with_tolerances(rtol: f64, atol: f64) -> Self {
        Self { rtol, atol, ..Self::default() }
    }
}

// Dormand-Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
// b5 - b4: weights of the embedded error estimate
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// Integrate `dy/dt = f(t, y)` from `t0`, emitting the state at each
/// requested time (which must be finite and non-decreasing, all `>= t0`).
///
/// `f(t, y, dydt)` writes the derivative into its third argument.
pub fn integrate_adaptive<F>(
    mut f: F,
    t0: f64,
    y0: &CVector,
    times: &[f64],
    opts: &RkOptions,
) -> Result<Vec<CVector>>
where
    F: FnMut(f64, &CVector, &mut CVector),
{
    if times.iter().any(|t| !t.is_finite() || *t < t0)
        || times.windows(2).any(|w| w[0] > w[1])
    {
        return Err(Error::BadTimeGrid);
    }
    let n = y0.len();
    let mut out = Vec::with_capacity(times.len());
    let mut y = y0.clone();
    let mut t = t0;

    let mut k: Vec<CVector> = (0..7).map(|_| CVector::zeros(n)).collect();
    let mut ytmp = CVector::zeros(n);
    let mut yerr = CVector::zeros(n);
    f(t, &y, &mut k[0]);

    // initial step from the derivative scale
    let f0 = k[0].norm();
    let span = times.last().copied().unwrap_or(t0) - t0;
    let mut h = if f0 > 0.0 {
        (0.01 * (y.norm() + opts.atol) / f0).min(span.max(1e-300))
    } else {
        span.max(1e-300) * 1e-3
    };
    if h == 0.0 {
        h = 1e-6;
    }

    let mut steps: u64 = 0;
    let mut k1_fresh = true;

    for &t_target in times {
        while t < t_target {
            if steps >= opts.max_steps {
                return Err(Error::Numerical(format!(
                    "step budget exhausted at t = {t:.6e}"
                )));
            }
            steps += 1;
            let h_step = h.min(t_target - t);
            if h_step < 1e-14 * t.abs().max(1.0) {
                return Err(Error::StepUnderflow { t, h: h_step, norm: y.norm() });
            }
            if !k1_fresh {
                f(t, &y, &mut k[0]);
                k1_fresh = true;
            }
            // stages 2..7
            for s in 1..7 {
                ytmp.copy_from(&y);
                for (j, kj) in k.iter().enumerate().take(s) {
                    let a = A[s - 1][j];
                    if a != 0.0 {
                        ytmp.axpy(cr(a * h_step), kj, cr(1.0));
                    }
                }
                let (head, tail) = k.split_at_mut(s);
                let _ = head;
                f(t + C[s] * h_step, &ytmp, &mut tail[0]);
            }
            // 5th-order solution and error estimate
            ytmp.copy_from(&y);
            yerr.fill(cr(0.0));
            for (j, kj) in k.iter().enumerate() {
                if B5[j] != 0.0 {
                    ytmp.axpy(cr(B5[j] * h_step), kj, cr(1.0));
                }
                if E[j] != 0.0 {
                    yerr.axpy(cr(E[j] * h_step), kj, cr(1.0));
                }
            }
            // weighted RMS error norm
            let mut acc = 0.0;
            for i in 0..n {
                let scale = opts.atol + opts.rtol * y[i].norm().max(ytmp[i].norm());
                let r = yerr[i].norm() / scale;
                acc += r * r;
            }
            let err = (acc / n as f64).sqrt();

            if err <= 1.0 {
                t += h_step;
                std::mem::swap(&mut y, &mut ytmp);
                // FSAL: stage 7 was evaluated at (t + h, y_new)
                let k7 = k.pop().expect("seven stages");
                k[0].copy_from(&k7);
                k.push(k7);
                k1_fresh = true;
                let grow = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).min(5.0) };
                h = h_step * grow.max(0.2);
            } else {
                // rejected: (t, y) unchanged, so k1 stays valid
                k1_fresh = true;
                h = h_step * (0.9 * err.powf(-0.2)).clamp(0.1, 0.9);
            }
        }
        out.push(y.clone());
    }
    Ok(out)
}

/// One-step dense propagator `exp(G dt)` for a time-independent generator.
pub fn expm_propagator(g: &CMatrix, dt: f64) -> CMatrix {
    expm(&(g * cr(dt)))
}
