//! The rotating-frame driven Hamiltonian on an `F_g (+) F_e` pair of spin
//! manifolds and its two dark states, found either from the coupling-block
//! null space or from the rotation construction.

use crate::cg::clebsch_gordan;
use crate::halfint::HalfInt;
use crate::linalg::{c, cr, null_space, CMatrix, CVector, C64, I};
use crate::scs::{spin_coherent_state, SCSAngles};
use crate::spin::rotation_operator;
use crate::{Error, Result};

/// Index bookkeeping for the combined space: the `F_g` block (dimension
/// `2 F_g + 1`) comes first, then the `F_e` block, each ordered
/// `m = +F ... -F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoManifold {
    pub fg: HalfInt,
    pub fe: HalfInt,
}

impl TwoManifold {
    /// The dark-state setting `F_e = F_g - 1`.
    pub fn dark_pair(fg: HalfInt) -> Result<Self> {
        let fe = fg - HalfInt::from_int(1);
        if fe.twice() < 0 {
            return Err(Error::InvalidConfig(format!(
                "F_g = {fg} leaves no excited manifold F_e = F_g - 1"
            )));
        }
        Ok(Self { fg, fe })
    }

    pub fn dim_g(&self) -> usize {
        self.fg.dim()
    }

    pub fn dim_e(&self) -> usize {
        self.fe.dim()
    }

    pub fn dim(&self) -> usize {
        self.dim_g() + self.dim_e()
    }

    pub fn g_index(&self, m: HalfInt) -> Option<usize> {
        self.fg.index_of_m(m)
    }

    pub fn e_index(&self, m: HalfInt) -> Option<usize> {
        self.fe.index_of_m(m).map(|i| i + self.dim_g())
    }

    /// Projector onto the excited manifold.
    pub fn projector_e(&self) -> CMatrix {
        let mut p = CMatrix::zeros(self.dim(), self.dim());
        for i in self.dim_g()..self.dim() {
            p[(i, i)] = cr(1.0);
        }
        p
    }

    /// `F_z` acting on the excited block only.
    pub fn fz_e(&self) -> CMatrix {
        let mut m = CMatrix::zeros(self.dim(), self.dim());
        for (i, mv) in self.fe.projections().enumerate() {
            m[(i + self.dim_g(), i + self.dim_g())] = cr(mv.value());
        }
        m
    }

    /// `F_z` acting on the ground block only.
    pub fn fz_g(&self) -> CMatrix {
        let mut m = CMatrix::zeros(self.dim(), self.dim());
        for (i, mv) in self.fg.projections().enumerate() {
            m[(i, i)] = cr(mv.value());
        }
        m
    }

    /// Embed a ground-manifold operator into the combined space.
    pub fn embed_g(&self, op: &CMatrix) -> CMatrix {
        let mut m = CMatrix::zeros(self.dim(), self.dim());
        m.view_mut((0, 0), (self.dim_g(), self.dim_g())).copy_from(op);
        m
    }

    /// Embed an excited-manifold operator into the combined space.
    pub fn embed_e(&self, op: &CMatrix) -> CMatrix {
        let mut m = CMatrix::zeros(self.dim(), self.dim());
        m.view_mut((self.dim_g(), self.dim_g()), (self.dim_e(), self.dim_e()))
            .copy_from(op);
        m
    }

    /// Embed a ground-manifold vector into the combined space.
    pub fn embed_g_vec(&self, v: &CVector) -> CVector {
        let mut w = CVector::zeros(self.dim());
        w.rows_mut(0, self.dim_g()).copy_from(v);
        w
    }

    /// Simultaneous rotation of both manifolds,
    /// `exp(-i alpha (F_gz + F_ez)) exp(-i beta (F_gy + F_ey)) exp(-i gamma (F_gz + F_ez))`.
    pub fn rotation(&self, alpha: f64, beta: f64, gamma: f64) -> CMatrix {
        let rg = rotation_operator(alpha, beta, gamma, self.fg);
        let re = rotation_operator(alpha, beta, gamma, self.fe);
        let mut r = CMatrix::zeros(self.dim(), self.dim());
        r.view_mut((0, 0), (self.dim_g(), self.dim_g())).copy_from(&rg);
        r.view_mut((self.dim_g(), self.dim_g()), (self.dim_e(), self.dim_e()))
            .copy_from(&re);
        r
    }

    /// The polarization-`q` coupling operator
    /// `C_q = sum_m <F_g,m;1,q|F_e,m+q> |F_e,m+q><F_g,m|` on the combined
    /// space.
    pub fn coupling_op(&self, q: i32) -> CMatrix {
        let mut m = CMatrix::zeros(self.dim(), self.dim());
        for mg in self.fg.projections() {
            let me = mg + HalfInt::from_twice(2 * q);
            if let (Some(col), Some(row)) = (self.g_index(mg), self.e_index(me)) {
                let cgv = clebsch_gordan(self.fg, mg, q, self.fe, me)
                    .expect("in-range quantum numbers by construction");
                m[(row, col)] = cr(cgv);
            }
        }
        m
    }

    /// Spontaneous-emission jump operator for polarization `q`: the decay
    /// partner `C_q^dagger` taking `|F_e, m+q>` back to `|F_g, m>` with the
    /// same Clebsch-Gordan weight.
    pub fn decay_op(&self, q: i32) -> CMatrix {
        self.coupling_op(q).adjoint()
    }
}

/// Rotating-frame model parameters: spherical Rabi amplitudes
/// `(Omega^{+1}, Omega^{0}, Omega^{-1})`, overall detuning `Delta`,
/// differential Zeeman `delta`, and spontaneous-emission rate `gamma`.
#[derive(Debug, Clone, Copy)]
pub struct DriveConfig {
    pub fg: HalfInt,
    /// Spherical components ordered `q = +1, 0, -1`.
    pub omega_sph: [C64; 3],
    pub delta_big: f64,
    pub delta_small: f64,
    pub gamma: f64,
}

impl DriveConfig {
    pub fn new(fg: HalfInt, omega_sph: [C64; 3]) -> Self {
        Self { fg, omega_sph, delta_big: 0.0, delta_small: 0.0, gamma: 0.0 }
    }

    pub fn with_detunings(mut self, delta_big: f64, delta_small: f64) -> Self {
        self.delta_big = delta_big;
        self.delta_small = delta_small;
        self
    }

    pub fn with_gamma(mut self, gamma: f64) -> Self {
        self.gamma = gamma;
        self
    }

    pub fn omega_q(&self, q: i32) -> C64 {
        match q {
            1 => self.omega_sph[0],
            0 => self.omega_sph[1],
            -1 => self.omega_sph[2],
            _ => panic!("polarization index must be -1, 0, or +1"),
        }
    }

    /// Total Rabi frequency `|Omega| = sqrt(sum_q |Omega^q|^2)`.
    pub fn total_rabi(&self) -> f64 {
        self.omega_sph.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn space(&self) -> Result<TwoManifold> {
        TwoManifold::dark_pair(self.fg)
    }
}

/// Spherical Rabi components of a drive pointing along Bloch direction
/// `(beta, alpha)` with total Rabi frequency `omega`:
/// `Omega^{+1} = -(omega/sqrt2) e^{-i alpha} sin(beta)`,
/// `Omega^0 = omega cos(beta)`,
/// `Omega^{-1} = (omega/sqrt2) e^{+i alpha} sin(beta)`.
///
/// With the Condon-Shortley couplings used throughout, the instantaneous
/// dark states of this drive are exactly the antipodal spin-coherent pair at
/// `(theta, phi) = (beta, alpha)` and `(pi - beta, pi + alpha)`.
pub fn drive_from_angles(alpha: f64, beta: f64, omega: f64) -> [C64; 3] {
    let sb = beta.sin();
    let cb = beta.cos();
    [
        -(-I * alpha).exp() * cr(omega * sb / 2f64.sqrt()),
        cr(omega * cb),
        (I * alpha).exp() * cr(omega * sb / 2f64.sqrt()),
    ]
}

/// Cartesian Rabi components from the covariant amplitudes
/// `Omega_q = (Omega^q)*`:
/// `(Om^x, Om^y, Om^z) = ((Om_-1 - Om_+1)/sqrt2, i (Om_-1 + Om_+1)/sqrt2, Om_0^*)`,
/// plus whether all three are real up to one global phase (relative
/// tolerance 1e-10). For a real-Cartesian drive the normalized vector is
/// the common axis of the two dark spin coherent states.
pub fn cartesian_rabi(omega_sph: &[C64; 3]) -> ([C64; 3], bool) {
    let op = omega_sph[0].conj();
    let oz = omega_sph[1].conj();
    let om = omega_sph[2].conj();
    let cart = [
        (om - op) / cr(2f64.sqrt()),
        (om + op) * I / cr(2f64.sqrt()),
        oz,
    ];
    let norm: f64 = cart.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let real = if norm == 0.0 {
        true
    } else {
        // v = e^{i phi} r with real r  <=>  e^{-i phi} v has no imaginary
        // part, where 2 phi = arg(v . v) (unconjugated dot).
        let vv: C64 = cart.iter().map(|z| z * z).sum();
        let phase = (I * (0.5 * vv.arg())).exp();
        cart.iter().map(|z| (z / phase).im.abs()).fold(0.0, f64::max) < 1e-10 * norm
    };
    (cart, real)
}

/// Normalized Bloch direction of a real-Cartesian drive, `None` when the
/// Cartesian components are not real up to a global phase.
pub fn drive_axis(omega_sph: &[C64; 3]) -> Option<SCSAngles> {
    let (cart, real) = cartesian_rabi(omega_sph);
    if !real {
        return None;
    }
    let vv: C64 = cart.iter().map(|z| z * z).sum();
    let phase = (I * (0.5 * vv.arg())).exp();
    let v: Vec<f64> = cart.iter().map(|z| (z / phase).re).collect();
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if n == 0.0 {
        return None;
    }
    let theta = (v[2] / n).clamp(-1.0, 1.0).acos();
    let phi = v[1].atan2(v[0]);
    Some(SCSAngles::new(theta, phi))
}

/// The driven Hamiltonian
/// `H = -Delta P_e - delta F_ez + (1/2) sum_q (Omega^q C_q + h.c.)`
/// (Hermitian; spontaneous emission not folded in).
pub fn build_hds(cfg: &DriveConfig) -> Result<CMatrix> {
    build_hds_inner(cfg, false)
}

/// Same with the non-Hermitian replacement `-Delta -> -Delta - i gamma/2`.
pub fn build_hds_nonhermitian(cfg: &DriveConfig) -> Result<CMatrix> {
    build_hds_inner(cfg, true)
}

fn build_hds_inner(cfg: &DriveConfig, include_gamma: bool) -> Result<CMatrix> {
    let space = cfg.space()?;
    let diag = -cr(cfg.delta_big)
        - if include_gamma { I * (0.5 * cfg.gamma) } else { cr(0.0) };
    let mut h = space.projector_e() * diag;
    h -= space.fz_e() * cr(cfg.delta_small);
    for q in [-1i32, 0, 1] {
        let cq = space.coupling_op(q);
        let half_omega = cfg.omega_q(q) * cr(0.5);
        h += &cq * half_omega + cq.adjoint() * half_omega.conj();
    }
    Ok(h)
}

/// The `F_g -> F_e` coupling block of the drive, `(1/2) sum_q Omega^q C_q`
/// restricted to e-rows and g-columns. Dark states are exactly its kernel.
pub fn coupling_block(cfg: &DriveConfig) -> Result<CMatrix> {
    let space = cfg.space()?;
    let mut b = CMatrix::zeros(space.dim_e(), space.dim_g());
    for q in [-1i32, 0, 1] {
        let half_omega = cfg.omega_q(q) * cr(0.5);
        if half_omega.norm() == 0.0 {
            continue;
        }
        for mg in cfg.fg.projections() {
            let me = mg + HalfInt::from_twice(2 * q);
            if let (Some(col), Some(row)) = (space.fg.index_of_m(mg), space.fe.index_of_m(me)) {
                let cgv = clebsch_gordan(space.fg, mg, q, space.fe, me)
                    .expect("in-range by construction");
                b[(row, col)] += half_omega * cr(cgv);
            }
        }
    }
    Ok(b)
}

/// The two dark states of a drive, as vectors on the `F_g` block.
#[derive(Debug, Clone)]
pub struct DarkStatePair {
    pub ds1: CVector,
    pub ds2: CVector,
    /// SCS angles when produced by the rotation method (`None` from the
    /// null-space method).
    pub angles1: Option<SCSAngles>,
    pub angles2: Option<SCSAngles>,
    /// The single-hyper-parameter case: the two SCS directions coincide and
    /// the pair is the rotated `{|F,F>, |F,F-1>}` instead.
    pub degenerate: bool,
    /// Whether the two SCS directions are antipodal (orthogonal dark states
    /// without Schmidt correction).
    pub orthogonal: bool,
}

impl DarkStatePair {
    /// Embed both states into the combined `F_g (+) F_e` space.
    pub fn embedded(&self, space: &TwoManifold) -> (CVector, CVector) {
        (space.embed_g_vec(&self.ds1), space.embed_g_vec(&self.ds2))
    }
}

/// A point on the Riemann sphere, stereographic coordinate
/// `z = tan(beta/2) e^{i alpha}` of the Bloch direction `(beta, alpha)`.
#[derive(Debug, Clone, Copy)]
enum SpherePoint {
    Finite(C64),
    Infinity,
}

impl SpherePoint {
    fn angles(self) -> SCSAngles {
        match self {
            // The south-pole SCS ray does not depend on the azimuth; fix
            // alpha = 0 there.
            SpherePoint::Infinity => SCSAngles::new(std::f64::consts::PI, 0.0),
            SpherePoint::Finite(z) => {
                let beta = 2.0 * z.norm().atan();
                let alpha = if z.norm() == 0.0 { 0.0 } else { z.arg() };
                SCSAngles::new(beta, alpha)
            }
        }
    }

    fn bloch(self) -> [f64; 3] {
        self.angles().bloch_vector()
    }
}

/// Roots of the dark-direction condition: rotating the drive so that the
/// sigma-minus component vanishes reduces to the quadratic
/// `Omega^{+1} z^2 - sqrt(2) Omega^0 z + Omega^{-1} = 0` in the
/// stereographic coordinate `z`.
fn dark_direction_roots(omega_sph: &[C64; 3]) -> Result<(SpherePoint, SpherePoint)> {
    let a = omega_sph[0];
    let b = -cr(2f64.sqrt()) * omega_sph[1];
    let cc = omega_sph[2];
    let scale = a.norm().max(b.norm()).max(cc.norm());
    if scale == 0.0 {
        return Err(Error::ZeroDrive);
    }
    let eps = 1e-13 * scale;
    if a.norm() <= eps {
        if b.norm() <= eps {
            // only sigma-minus light: double root at the south pole
            return Ok((SpherePoint::Infinity, SpherePoint::Infinity));
        }
        return Ok((SpherePoint::Finite(-cc / b), SpherePoint::Infinity));
    }
    let disc = b * b - cr(4.0) * a * cc;
    let sq = disc.sqrt();
    // pick the sign that avoids cancellation in b + sq
    let sq = if (b + sq).norm() >= (b - sq).norm() { sq } else { -sq };
    let q = -(b + sq) * cr(0.5);
    let z1 = q / a;
    let z2 = if q.norm() <= eps * eps { z1 } else { cc / q };
    Ok((SpherePoint::Finite(z1), SpherePoint::Finite(z2)))
}

fn bloch_distance(p1: SpherePoint, p2: SpherePoint) -> f64 {
    let a = p1.bloch();
    let b = p2.bloch();
    a.iter().zip(&b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

fn bloch_antipodal(p1: SpherePoint, p2: SpherePoint) -> bool {
    let a = p1.bloch();
    let b = p2.bloch();
    a.iter().zip(&b).map(|(x, y)| (x + y) * (x + y)).sum::<f64>().sqrt() < ANTIPODAL_BLOCH_TOL
}

const DEGENERATE_BLOCH_TOL: f64 = 1e-6;
const ANTIPODAL_BLOCH_TOL: f64 = 1e-8;

/// Fix the global phase so the largest-magnitude component is real positive.
pub fn fix_phase(v: &CVector) -> CVector {
    let mut best = 0usize;
    for (i, z) in v.iter().enumerate() {
        if z.norm() > v[best].norm() {
            best = i;
        }
    }
    if v[best].norm() == 0.0 {
        return v.clone();
    }
    let phase = v[best] / cr(v[best].norm());
    v / phase
}

/// Dark states from the numerical null space of the coupling block
/// (singular values below `1e-10 sigma_max`).
pub fn find_dark_states_null(cfg: &DriveConfig) -> Result<DarkStatePair> {
    if cfg.total_rabi() == 0.0 {
        return Err(Error::ZeroDrive);
    }
    let b = coupling_block(cfg)?;
    let kernel = null_space(&b, 1e-10);
    if kernel.len() != 2 {
        return Err(Error::DarkStateInconsistency(format!(
            "coupling-block kernel has dimension {} (expected 2) at F_g = {}",
            kernel.len(),
            cfg.fg
        )));
    }
    let (p1, p2) = dark_direction_roots(&cfg.omega_sph)?;
    Ok(DarkStatePair {
        ds1: fix_phase(&kernel[0]),
        ds2: fix_phase(&kernel[1]),
        angles1: None,
        angles2: None,
        degenerate: bloch_distance(p1, p2) < DEGENERATE_BLOCH_TOL,
        orthogonal: bloch_antipodal(p1, p2),
    })
}

/// Dark states from the rotation construction: solve for the directions with
/// vanishing rotated sigma-minus drive, take the two spin coherent states,
/// Schmidt-orthogonalize the second against the first. In the degenerate
/// (single-hyper-parameter) case returns the rotated `{|F,F>, |F,F-1>}`
/// pair instead.
pub fn find_dark_states_rotation(cfg: &DriveConfig) -> Result<DarkStatePair> {
    if cfg.total_rabi() == 0.0 {
        return Err(Error::ZeroDrive);
    }
    let (p1, p2) = dark_direction_roots(&cfg.omega_sph)?;
    let a1 = p1.angles();
    let a2 = p2.angles();
    let degenerate = bloch_distance(p1, p2) < DEGENERATE_BLOCH_TOL;
    let orthogonal = bloch_antipodal(p1, p2);

    let (ds1, ds2) = if degenerate {
        let r = rotation_operator(a1.phi, a1.theta, 0.0, cfg.fg);
        (r.column(0).into_owned(), r.column(1).into_owned())
    } else {
        let s1 = spin_coherent_state(a1, cfg.fg);
        let s2 = spin_coherent_state(a2, cfg.fg);
        let ov = s1.dotc(&s2);
        let ds2 = (&s2 - &s1 * ov) / cr((1.0 - ov.norm_sqr()).sqrt());
        (s1, ds2)
    };

    // Defensive residual check; carries the residuals out on failure.
    let b = coupling_block(cfg)?;
    let res1 = (&b * &ds1).norm();
    let res2 = (&b * &ds2).norm();
    if res1.max(res2) > 1e-8 * cfg.total_rabi() {
        return Err(Error::DarkStateResidual { res1, res2 });
    }

    Ok(DarkStatePair {
        ds1,
        ds2,
        angles1: Some(a1),
        angles2: Some(a2),
        degenerate,
        orthogonal,
    })
}

/// The logical `|0~>, |1~>` pair of the x-axis spin-cat encoding:
/// `|0~> = e^{-i (pi/2) F_y} |F, +F>`, `|1~> = e^{-i (pi/2) F_y} |F, -F>`,
/// as ground-manifold vectors.
pub fn logical_kets(fg: HalfInt) -> (CVector, CVector) {
    let u = x_basis(fg);
    let n = fg.dim();
    (u.column(0).into_owned(), u.column(n - 1).into_owned())
}

/// x-basis transform on one manifold: column `i` is `|F, m_i>_x` in the
/// usual `m = +F ... -F` ordering.
pub fn x_basis(f: HalfInt) -> CMatrix {
    rotation_operator(0.0, std::f64::consts::FRAC_PI_2, 0.0, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_norm;
    use std::f64::consts::PI;

    fn h(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn hds_zero_drive_zero_detuning_is_zero() {
        let cfg = DriveConfig::new(h(4), [cr(0.0); 3]);
        let hm = build_hds(&cfg).unwrap();
        assert_eq!(max_norm(&hm), 0.0);
    }

    #[test]
    fn hds_is_hermitian_without_gamma() {
        let cfg = DriveConfig::new(h(5), [c(0.3, 0.1), c(-0.2, 0.7), c(0.5, -0.4)])
            .with_detunings(0.8, -0.3)
            .with_gamma(2.0);
        let hm = build_hds(&cfg).unwrap();
        assert!(max_norm(&(hm.adjoint() - &hm)) < 1e-13);
        let hnh = build_hds_nonhermitian(&cfg).unwrap();
        assert!(max_norm(&(hnh.adjoint() - &hnh)) > 0.1);
    }

    #[test]
    fn pi_light_leaves_stretched_rows_empty() {
        // Omega^0 only: the |F, +-F> columns of the coupling block vanish
        for fg in [h(2), h(3), h(8)] {
            let cfg = DriveConfig::new(fg, [cr(0.0), cr(1.0), cr(0.0)]);
            let b = coupling_block(&cfg).unwrap();
            let n = fg.dim();
            assert!(b.column(0).norm() < 1e-15);
            assert!(b.column(n - 1).norm() < 1e-15);
        }
    }

    #[test]
    fn cartesian_examples() {
        // Omega^{+1} = -Omega^{-1} = -sqrt(2) Omega -> x-direction, strength 2 Omega
        let om = 0.7;
        let ([ox, oy, oz], real) =
            cartesian_rabi(&[cr(-2f64.sqrt() * om), cr(0.0), cr(2f64.sqrt() * om)]);
        assert!(real);
        assert!((ox - cr(2.0 * om)).norm() < 1e-14);
        assert!(oy.norm() < 1e-14 && oz.norm() < 1e-14);

        // pi light only -> z direction
        let (cart, real) = cartesian_rabi(&[cr(0.0), cr(1.3), cr(0.0)]);
        assert!(real);
        assert!(cart[0].norm() < 1e-15 && cart[1].norm() < 1e-15);

        // mixed phases break global-phase realness
        let (_, real) = cartesian_rabi(&[c(0.0, 0.4), cr(1.0), cr(0.3)]);
        assert!(!real);
        // a common phase on a real triple stays "real up to a phase"
        let ph = (I * 0.83).exp();
        let (_, real) = cartesian_rabi(&[cr(-0.5) * ph, cr(1.0) * ph, cr(0.5) * ph]);
        assert!(real);
    }

    #[test]
    fn pi_light_dark_states_are_stretched_pair() {
        let cfg = DriveConfig::new(h(6), [cr(0.0), cr(1.0), cr(0.0)]);
        let pair = find_dark_states_null(&cfg).unwrap();
        let n = cfg.fg.dim();
        // span{|F,F>, |F,-F>}: every kernel vector is supported on indices 0, n-1
        for v in [&pair.ds1, &pair.ds2] {
            let interior: f64 = (1..n - 1).map(|i| v[i].norm_sqr()).sum();
            assert!(interior < 1e-20);
        }
        assert!(pair.orthogonal);
        assert!(!pair.degenerate);
    }

    #[test]
    fn sigma_plus_only_is_degenerate_case() {
        let cfg = DriveConfig::new(h(5), [cr(1.0), cr(0.0), cr(0.0)]);
        let pair = find_dark_states_null(&cfg).unwrap();
        assert!(pair.degenerate);
        for v in [&pair.ds1, &pair.ds2] {
            let tail: f64 = (2..cfg.fg.dim()).map(|i| v[i].norm_sqr()).sum();
            assert!(tail < 1e-20, "support beyond {{|F,F>, |F,F-1>}}");
        }
        let rot = find_dark_states_rotation(&cfg).unwrap();
        assert!(rot.degenerate);
        // rotated pair at the north pole is exactly {|F,F>, |F,F-1>}
        assert!((rot.ds1[0].norm() - 1.0).abs() < 1e-12);
        assert!((rot.ds2[1].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sm_example_two_stretched_plus_schmidt() {
        // Omega^{-1} = 0, Omega^0 = Omega^{+1} = Omega/sqrt(2):
        // one dark state is |F, F>, the other a Schmidt-orthogonalized SCS.
        let om = 1.0 / 2f64.sqrt();
        let cfg = DriveConfig::new(h(4), [cr(om), cr(om), cr(0.0)]);
        let pair = find_dark_states_rotation(&cfg).unwrap();
        assert!(!pair.degenerate);
        assert!(!pair.orthogonal);
        let a1 = pair.angles1.unwrap();
        let a2 = pair.angles2.unwrap();
        let (north, tilted) = if a1.theta < 1e-12 { (a1, a2) } else { (a2, a1) };
        assert!(north.theta.abs() < 1e-12);
        assert!((tilted.theta - 2.0 * 2f64.sqrt().atan()).abs() < 1e-12);
        // returned vectors are orthonormal
        assert!(pair.ds1.dotc(&pair.ds2).norm() < 1e-12);
        assert!((pair.ds1.norm() - 1.0).abs() < 1e-12);
        assert!((pair.ds2.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn real_cartesian_drive_gives_antipodal_polar_angles() {
        let mut seed = 0xd00du64;
        let mut next = move || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((seed >> 11) as f64) / (1u64 << 53) as f64
        };
        for _ in 0..50 {
            let theta = next() * PI * 0.98 + 0.01;
            let phi = next() * 2.0 * PI;
            let omega_sph = drive_from_angles(phi, theta, 1.0);
            let cfg = DriveConfig::new(h(5), omega_sph);
            let pair = find_dark_states_rotation(&cfg).unwrap();
            assert!(pair.orthogonal);
            let a1 = pair.angles1.unwrap();
            let a2 = pair.angles2.unwrap();
            // one root at (theta, phi), the other antipodal
            let target = SCSAngles::new(theta, phi);
            let dist = |x: SCSAngles, y: SCSAngles, sign: f64| -> f64 {
                let a = x.bloch_vector();
                let b = y.bloch_vector();
                a.iter()
                    .zip(&b)
                    .map(|(p, q)| (p - sign * q) * (p - sign * q))
                    .sum::<f64>()
                    .sqrt()
            };
            let (same, anti) =
                if dist(a1, target, 1.0) < dist(a2, target, 1.0) { (a1, a2) } else { (a2, a1) };
            assert!(dist(same, target, 1.0) < 1e-9);
            assert!(dist(anti, target, -1.0) < 1e-9);
        }
    }

    #[test]
    fn dark_states_annihilate_drive_for_any_detuning() {
        let cfg = DriveConfig::new(h(7), [c(0.3, -0.2), c(0.1, 0.5), c(-0.6, 0.1)]);
        let pair = find_dark_states_rotation(&cfg).unwrap();
        let space = cfg.space().unwrap();
        let (v1, v2) = pair.embedded(&space);
        for (db, ds) in [(0.0, 0.0), (1.7, -0.4), (-3.0, 2.0)] {
            let hm = build_hds(&DriveConfig { delta_big: db, delta_small: ds, ..cfg }).unwrap();
            assert!((&hm * &v1).norm() < 1e-10);
            assert!((&hm * &v2).norm() < 1e-10);
        }
    }

    #[test]
    fn zero_drive_is_an_error() {
        let cfg = DriveConfig::new(h(4), [cr(0.0); 3]);
        assert!(matches!(find_dark_states_null(&cfg), Err(Error::ZeroDrive)));
        assert!(matches!(find_dark_states_rotation(&cfg), Err(Error::ZeroDrive)));
    }
}
