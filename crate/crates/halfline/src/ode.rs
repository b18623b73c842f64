//! Fixed-step RK4 integration of `-y'' + q(x) y = k^2 y` on `[0, 1]`.
//!
//! Three canonical solutions are provided. With `'` denoting `d/dx`:
//!
//! * `phi`: `phi(0) = 0`, `phi'(0) = 1`, integrated forward;
//! * `theta`: `theta(0) = 1`, `theta'(0) = 0`, integrated forward;
//! * `jost`: equals `e^{ikx}` for `x >= 1` (where `q = 0`), integrated
//!   backward from the matching values at `x = 1`.
//!
//! The step count is a caller choice (4096 is the conventional default used
//! by the higher-level modules); the classical RK4 scheme keeps global error
//! at `O(h^4)` and, being fixed-step, makes every downstream quantity
//! bit-reproducible. Potentials are sampled once per integration on the
//! half-step grid, so an integration costs no interpolation beyond that.

use crate::potential::Potential;
use num_complex::Complex64;

#[derive(Debug, thiserror::Error)]
pub enum OdeError {
    #[error("solution left the f64 range near x = {x}")]
    NonFinite { x: f64 },
    #[error("k = 0 rejected: the Jost normalization carries no phase there")]
    ZeroK,
}

/// Which canonical solution a [`WaveField`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionKind {
    Phi,
    Theta,
    Jost,
}

/// A solution sampled on the uniform integration grid over `[0, 1]`.
#[derive(Debug, Clone)]
pub struct WaveField {
    pub k: Complex64,
    /// Values `y(x_i)` at `x_i = i / steps`.
    pub y: Vec<Complex64>,
    /// Derivatives `y'(x_i)`.
    pub dy: Vec<Complex64>,
    pub kind: SolutionKind,
}

impl WaveField {
    /// Node abscissa for index `i`.
    pub fn x(&self, i: usize) -> f64 {
        i as f64 / (self.y.len() - 1) as f64
    }

    /// `(y(1), y'(1))`.
    pub fn boundary(&self) -> (Complex64, Complex64) {
        (*self.y.last().unwrap(), *self.dy.last().unwrap())
    }

    /// `(y(0), y'(0))`.
    pub fn origin(&self) -> (Complex64, Complex64) {
        (self.y[0], self.dy[0])
    }
}

/// Potential samples on the half-step grid `x_j = j h / 2`, `j = 0..=2*steps`.
fn sample_q(q: &Potential, steps: usize) -> Vec<f64> {
    let h2 = 0.5 / steps as f64;
    (0..=2 * steps).map(|j| q.eval(j as f64 * h2)).collect()
}

/// One RK4 step of `(y, v)' = (v, (q - k^2) y)` from node `i` to `i + 1`.
///
/// `qs` is the half-step sample table, `dir` is +1 forward or -1 backward
/// (with `i` the node being left in integration order).
#[inline]
fn rk4_step_complex(
    y: Complex64,
    v: Complex64,
    ksq: Complex64,
    qs: &[f64],
    j0: usize,
    dir: isize,
    h: f64,
) -> (Complex64, Complex64) {
    let h = h * dir as f64;
    let q0 = qs[j0];
    let qm = qs[(j0 as isize + dir) as usize];
    let q1 = qs[(j0 as isize + 2 * dir) as usize];
    let f = |q: f64, y: Complex64| (q - ksq) * y;

    let k1y = v;
    let k1v = f(q0, y);
    let k2y = v + 0.5 * h * k1v;
    let k2v = f(qm, y + 0.5 * h * k1y);
    let k3y = v + 0.5 * h * k2v;
    let k3v = f(qm, y + 0.5 * h * k2y);
    let k4y = v + h * k3v;
    let k4v = f(q1, y + h * k3y);

    (
        y + h / 6.0 * (k1y + 2.0 * (k2y + k3y) + k4y),
        v + h / 6.0 * (k1v + 2.0 * (k2v + k3v) + k4v),
    )
}

fn integrate_forward(
    q: &Potential,
    k: Complex64,
    steps: usize,
    y0: Complex64,
    v0: Complex64,
    kind: SolutionKind,
) -> Result<WaveField, OdeError> {
    assert!(steps >= 1, "need at least one step");
    let qs = sample_q(q, steps);
    let h = 1.0 / steps as f64;
    let ksq = k * k;
    let mut y = Vec::with_capacity(steps + 1);
    let mut dy = Vec::with_capacity(steps + 1);
    let (mut yc, mut vc) = (y0, v0);
    y.push(yc);
    dy.push(vc);
    for i in 0..steps {
        let (yn, vn) = rk4_step_complex(yc, vc, ksq, &qs, 2 * i, 1, h);
        if !(yn.is_finite() && vn.is_finite()) {
            return Err(OdeError::NonFinite {
                x: (i + 1) as f64 * h,
            });
        }
        yc = yn;
        vc = vn;
        y.push(yc);
        dy.push(vc);
    }
    Ok(WaveField { k, y, dy, kind })
}

/// The regular solution `phi` (`phi(0) = 0`, `phi'(0) = 1`).
pub fn integrate_phi(q: &Potential, k: Complex64, steps: usize) -> Result<WaveField, OdeError> {
    integrate_forward(
        q,
        k,
        steps,
        Complex64::ZERO,
        Complex64::ONE,
        SolutionKind::Phi,
    )
}

/// The complementary solution `theta` (`theta(0) = 1`, `theta'(0) = 0`).
pub fn integrate_theta(q: &Potential, k: Complex64, steps: usize) -> Result<WaveField, OdeError> {
    integrate_forward(
        q,
        k,
        steps,
        Complex64::ONE,
        Complex64::ZERO,
        SolutionKind::Theta,
    )
}

/// The Jost solution, integrated backward from `(e^{ik}, ik e^{ik})` at `x = 1`.
///
/// Rejects `k = 0`, where the outgoing normalization degenerates.
pub fn integrate_jost(q: &Potential, k: Complex64, steps: usize) -> Result<WaveField, OdeError> {
    if k == Complex64::ZERO {
        return Err(OdeError::ZeroK);
    }
    assert!(steps >= 1, "need at least one step");
    let qs = sample_q(q, steps);
    let h = 1.0 / steps as f64;
    let ksq = k * k;
    let e = (Complex64::I * k).exp();
    let mut y = vec![Complex64::ZERO; steps + 1];
    let mut dy = vec![Complex64::ZERO; steps + 1];
    let (mut yc, mut vc) = (e, Complex64::I * k * e);
    y[steps] = yc;
    dy[steps] = vc;
    for i in (0..steps).rev() {
        let (yn, vn) = rk4_step_complex(yc, vc, ksq, &qs, 2 * (i + 1), -1, h);
        if !(yn.is_finite() && vn.is_finite()) {
            return Err(OdeError::NonFinite { x: i as f64 * h });
        }
        yc = yn;
        vc = vn;
        y[i] = yc;
        dy[i] = vc;
    }
    Ok(WaveField {
        k,
        y,
        dy,
        kind: SolutionKind::Jost,
    })
}

/// `phi` together with its derivative in `k`, integrated as one system.
///
/// The second field solves `w'' = (q - k^2) w - 2 k phi` with zero initial
/// data; its entries are `d phi / dk` and `d phi' / dk` along the grid. Both
/// returned fields carry `kind = Phi`.
pub fn integrate_phi_dk(
    q: &Potential,
    k: Complex64,
    steps: usize,
) -> Result<(WaveField, WaveField), OdeError> {
    assert!(steps >= 1, "need at least one step");
    let qs = sample_q(q, steps);
    let h = 1.0 / steps as f64;
    let ksq = k * k;
    let two_k = 2.0 * k;

    let mut y = Vec::with_capacity(steps + 1);
    let mut dy = Vec::with_capacity(steps + 1);
    let mut w = Vec::with_capacity(steps + 1);
    let mut dw = Vec::with_capacity(steps + 1);

    // State (y, v, w, u): y'' = (q - k^2) y, w'' = (q - k^2) w - 2k y.
    let mut s = [Complex64::ZERO, Complex64::ONE, Complex64::ZERO, Complex64::ZERO];
    y.push(s[0]);
    dy.push(s[1]);
    w.push(s[2]);
    dw.push(s[3]);

    let deriv = |q: f64, s: &[Complex64; 4]| {
        [
            s[1],
            (q - ksq) * s[0],
            s[3],
            (q - ksq) * s[2] - two_k * s[0],
        ]
    };
    let add = |a: &[Complex64; 4], b: &[Complex64; 4], c: f64| {
        [
            a[0] + c * b[0],
            a[1] + c * b[1],
            a[2] + c * b[2],
            a[3] + c * b[3],
        ]
    };

    for i in 0..steps {
        let (q0, qm, q1) = (qs[2 * i], qs[2 * i + 1], qs[2 * i + 2]);
        let k1 = deriv(q0, &s);
        let k2 = deriv(qm, &add(&s, &k1, 0.5 * h));
        let k3 = deriv(qm, &add(&s, &k2, 0.5 * h));
        let k4 = deriv(q1, &add(&s, &k3, h));
        for j in 0..4 {
            s[j] += h / 6.0 * (k1[j] + 2.0 * (k2[j] + k3[j]) + k4[j]);
        }
        if !s.iter().all(|z| z.is_finite()) {
            return Err(OdeError::NonFinite {
                x: (i + 1) as f64 * h,
            });
        }
        y.push(s[0]);
        dy.push(s[1]);
        w.push(s[2]);
        dw.push(s[3]);
    }

    let phi = WaveField {
        k,
        y,
        dy,
        kind: SolutionKind::Phi,
    };
    let dk = WaveField {
        k,
        y: w,
        dy: dw,
        kind: SolutionKind::Phi,
    };
    Ok((phi, dk))
}

// Real fast paths in the spectral parameter lambda = k^2. Everything the
// eigenvalue and kernel machinery needs is real for real lambda, so these
// avoid complex arithmetic in the hot root-finding loops.

/// `(phi(1, lambda), phi'(1, lambda))` without storing the trajectory.
pub(crate) fn phi_boundary_lambda(
    q: &Potential,
    lambda: f64,
    steps: usize,
) -> Result<(f64, f64), OdeError> {
    let qs = sample_q(q, steps);
    let h = 1.0 / steps as f64;
    let (mut y, mut v) = (0.0f64, 1.0f64);
    for i in 0..steps {
        let (q0, qm, q1) = (qs[2 * i], qs[2 * i + 1], qs[2 * i + 2]);
        let k1y = v;
        let k1v = (q0 - lambda) * y;
        let k2y = v + 0.5 * h * k1v;
        let k2v = (qm - lambda) * (y + 0.5 * h * k1y);
        let k3y = v + 0.5 * h * k2v;
        let k3v = (qm - lambda) * (y + 0.5 * h * k2y);
        let k4y = v + h * k3v;
        let k4v = (q1 - lambda) * (y + h * k3y);
        y += h / 6.0 * (k1y + 2.0 * (k2y + k3y) + k4y);
        v += h / 6.0 * (k1v + 2.0 * (k2v + k3v) + k4v);
        if !(y.is_finite() && v.is_finite()) {
            return Err(OdeError::NonFinite {
                x: (i + 1) as f64 * h,
            });
        }
    }
    Ok((y, v))
}

/// Real `phi` trajectory: values and derivatives at the `steps + 1` nodes.
pub(crate) fn phi_trajectory_lambda(
    q: &Potential,
    lambda: f64,
    steps: usize,
) -> Result<(Vec<f64>, Vec<f64>), OdeError> {
    let traj = phi_sq_integral_lambda(q, lambda, steps)?;
    Ok((traj.0, traj.1))
}

/// Real `phi` trajectory plus the running integral `I(x) = int_0^x phi^2`.
///
/// The integral rides along in the RK4 state (`I' = phi^2`), so it carries
/// the same `O(h^4)` accuracy as the solution itself.
pub(crate) fn phi_sq_integral_lambda(
    q: &Potential,
    lambda: f64,
    steps: usize,
) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>), OdeError> {
    let qs = sample_q(q, steps);
    let h = 1.0 / steps as f64;
    let mut ys = Vec::with_capacity(steps + 1);
    let mut vs = Vec::with_capacity(steps + 1);
    let mut is = Vec::with_capacity(steps + 1);
    let (mut y, mut v, mut ii) = (0.0f64, 1.0f64, 0.0f64);
    ys.push(y);
    vs.push(v);
    is.push(ii);
    for i in 0..steps {
        let (q0, qm, q1) = (qs[2 * i], qs[2 * i + 1], qs[2 * i + 2]);
        let k1y = v;
        let k1v = (q0 - lambda) * y;
        let k1i = y * y;
        let (y2, v2) = (y + 0.5 * h * k1y, v + 0.5 * h * k1v);
        let k2y = v2;
        let k2v = (qm - lambda) * y2;
        let k2i = y2 * y2;
        let (y3, v3) = (y + 0.5 * h * k2y, v + 0.5 * h * k2v);
        let k3y = v3;
        let k3v = (qm - lambda) * y3;
        let k3i = y3 * y3;
        let (y4, v4) = (y + h * k3y, v + h * k3v);
        let k4y = v4;
        let k4v = (q1 - lambda) * y4;
        let k4i = y4 * y4;
        y += h / 6.0 * (k1y + 2.0 * (k2y + k3y) + k4y);
        v += h / 6.0 * (k1v + 2.0 * (k2v + k3v) + k4v);
        ii += h / 6.0 * (k1i + 2.0 * (k2i + k3i) + k4i);
        if !(y.is_finite() && v.is_finite() && ii.is_finite()) {
            return Err(OdeError::NonFinite {
                x: (i + 1) as f64 * h,
            });
        }
        ys.push(y);
        vs.push(v);
        is.push(ii);
    }
    Ok((ys, vs, is))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn free() -> Potential {
        Potential::zero(8)
    }

    fn well(c: f64) -> Potential {
        Potential::from_fn(8, |_| c).unwrap()
    }

    /// phi(1, k) for constant q = c: sin(w)/w with w = sqrt(k^2 - c).
    fn phi1_const(c: f64, k: Complex64) -> Complex64 {
        let w = (k * k - c).sqrt();
        if w.norm() < 1e-12 {
            Complex64::ONE
        } else {
            w.sin() / w
        }
    }

    #[test]
    fn phi_free_matches_sine() {
        let f = integrate_phi(&free(), Complex64::new(2.0, 0.0), 512).unwrap();
        let (y1, v1) = f.boundary();
        assert_relative_eq!(y1.re, (2.0f64).sin() / 2.0, max_relative = 1e-10);
        assert_relative_eq!(v1.re, (2.0f64).cos(), max_relative = 1e-10);
        assert!(y1.im.abs() < 1e-14);
        // Interior node check: phi(x) = sin(kx)/k.
        let i = 256;
        assert_relative_eq!(f.y[i].re, (2.0 * f.x(i)).sin() / 2.0, max_relative = 1e-9);
    }

    #[test]
    fn phi_constant_well_complex_k() {
        let c = -3.0;
        for &k in &[
            Complex64::new(1.3, 0.0),
            Complex64::new(0.4, 1.1),
            Complex64::new(0.0, 2.0),
        ] {
            let f = integrate_phi(&well(c), k, 1024).unwrap();
            let exact = phi1_const(c, k);
            assert!(
                (f.boundary().0 - exact).norm() < 1e-9 * exact.norm().max(1.0),
                "k = {k}"
            );
        }
    }

    #[test]
    fn theta_free_is_cosine() {
        let k = Complex64::new(3.0, 0.0);
        let f = integrate_theta(&free(), k, 512).unwrap();
        assert_relative_eq!(f.boundary().0.re, (3.0f64).cos(), max_relative = 1e-9);
        assert_relative_eq!(f.boundary().1.re, -3.0 * (3.0f64).sin(), max_relative = 1e-9);
    }

    #[test]
    fn jost_free_is_plane_wave() {
        let k = Complex64::new(1.7, 0.0);
        let f = integrate_jost(&free(), k, 512).unwrap();
        let (y0, v0) = f.origin();
        assert!((y0 - Complex64::ONE).norm() < 1e-11);
        assert!((v0 - Complex64::I * k).norm() < 1e-11);
    }

    #[test]
    fn jost_constant_well_closed_form() {
        // For q = c on [0,1]: f(0) = e^{ik} [cos w - (ik/w) sin w].
        let c = 2.5;
        let k = Complex64::new(1.9, 0.0);
        let w = (k * k - c).sqrt();
        let exact = (Complex64::I * k).exp() * (w.cos() - Complex64::I * k / w * w.sin());
        let f = integrate_jost(&well(c), k, 1024).unwrap();
        assert!((f.origin().0 - exact).norm() < 1e-10);
    }

    #[test]
    fn jost_rejects_zero_k() {
        assert!(matches!(
            integrate_jost(&free(), Complex64::ZERO, 64),
            Err(OdeError::ZeroK)
        ));
    }

    #[test]
    fn rk4_order_at_least_3_8() {
        // Constant potential so the grid interpolation is exact and the
        // observed convergence order is that of the scheme itself.
        let c = 2.0;
        let k = Complex64::new(1.5, 0.0);
        let exact = phi1_const(c, k);
        let err = |steps: usize| {
            (integrate_phi(&well(c), k, steps).unwrap().boundary().0 - exact).norm()
        };
        let (e1, e2) = (err(64), err(128));
        let order = (e1 / e2).log2();
        assert!(order >= 3.8, "observed order {order}");
    }

    #[test]
    fn phi_dk_matches_finite_difference() {
        let q = Potential::from_fn(33, |x| (2.0 * x).cos() - 0.5).unwrap();
        let k = Complex64::new(1.2, 0.0);
        let h = 1e-5;
        let (_, dk) = integrate_phi_dk(&q, k, 1024).unwrap();
        let hi = integrate_phi(&q, k + h, 1024).unwrap().boundary();
        let lo = integrate_phi(&q, k - h, 1024).unwrap().boundary();
        let fd_y = (hi.0 - lo.0) / (2.0 * h);
        let fd_v = (hi.1 - lo.1) / (2.0 * h);
        let (wy, wv) = dk.boundary();
        assert!((wy - fd_y).norm() < 1e-8);
        assert!((wv - fd_v).norm() < 1e-8);
    }

    #[test]
    fn real_lambda_path_agrees_with_complex() {
        let q = Potential::from_fn(17, |x| x - 0.3).unwrap();
        for &lam in &[-4.0, 0.0, 2.7, 60.0] {
            let (y, v) = phi_boundary_lambda(&q, lam, 512).unwrap();
            let k = if lam >= 0.0 {
                Complex64::new(lam.sqrt(), 0.0)
            } else {
                Complex64::new(0.0, (-lam).sqrt())
            };
            let f = integrate_phi(&q, k, 512).unwrap();
            assert_relative_eq!(y, f.boundary().0.re, max_relative = 1e-12);
            assert_relative_eq!(v, f.boundary().1.re, max_relative = 1e-12);
        }
    }

    #[test]
    fn phi_sq_integral_free_case() {
        // At lambda = 0, phi = x and int_0^x t^2 dt = x^3/3 exactly in RK4
        // (polynomial degree <= 4 per step).
        let (ys, vs, is) = phi_sq_integral_lambda(&free(), 0.0, 64).unwrap();
        assert!((ys[64] - 1.0).abs() < 1e-13);
        assert!((vs[64] - 1.0).abs() < 1e-13);
        assert!((is[64] - 1.0 / 3.0).abs() < 1e-13);
        assert!((is[32] - (0.5f64).powi(3) / 3.0).abs() < 1e-13);
    }

    #[test]
    fn non_finite_is_reported() {
        // A violently positive potential drives cosh-type growth past f64.
        let q = Potential::from_fn(4, |_| 4.0e6).unwrap();
        match phi_boundary_lambda(&q, 0.0, 256) {
            Err(OdeError::NonFinite { x }) => assert!(x > 0.0 && x <= 1.0),
            other => panic!("expected NonFinite, got {other:?}"),
        }
    }
}
