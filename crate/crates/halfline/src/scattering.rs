//! Jost function, scattering matrix, phase shift, and bound states.
//!
//! For `Im k >= 0` the Jost solution `f(x, k)` equals `e^{ikx}` for `x >= 1`;
//! its boundary value `psi(k) = f(0, k)` is the Jost function. Since `phi`
//! and the boundary data of `f` are computable by one forward integration,
//! `psi` is evaluated as
//!
//! ```text
//! psi(k) = e^{ik} ( phi'(1, k) - i k phi(1, k) )
//! ```
//!
//! (the Wronskian of `f` with `phi`), and its `k`-derivative rides along via
//! the augmented system in [`crate::ode::integrate_phi_dk`]. A backward
//! integration of `f` itself ([`jost_backward`]) provides an independent
//! route used for cross-checking.
//!
//! For real `k` the conjugation symmetry `psi(-k) = conj(psi(k))` makes the
//! scattering matrix `S(k) = psi(-k)/psi(k)` unimodular: `S = e^{-2 i xi}`
//! with the phase shift `xi(k) = arg psi(k)` unwrapped continuously and
//! anchored by `xi(+inf) = 0`. The unwrapping walks the auxiliary angle
//! `alpha(k) = k - xi(k) = arg [phi'(1,k) + i k phi(1,k)]`, which is what the
//! phase parameterization in [`crate::phase`] bisects.
//!
//! Bound states are the zeros of `psi` on the positive imaginary axis; each
//! carries a norming constant `n_j = -i psi_dot(k_j) / psi(-k_j)`, which
//! equals the squared L2 norm of the Jost solution at `k_j`.

use crate::ode::{self, OdeError};
use crate::potential::Potential;
use crate::util::refine_root;
use num_complex::Complex64;

#[derive(Debug, thiserror::Error)]
pub enum ScatteringError {
    #[error("Jost function too close to zero at k = {k}: |psi| = {abs:.3e}")]
    NearZeroJost { k: f64, abs: f64 },
    #[error(
        "phase unwrap ambiguous near k = {k}: branch jump {jump:.3} rad \
         persists after {refinements} refinements"
    )]
    UnwrapAmbiguity {
        k: f64,
        jump: f64,
        refinements: usize,
    },
    #[error(
        "bound-state scan found {found} zeros but the oscillation count \
         demands {expected}; the scan grid is too coarse for this potential"
    )]
    ScanTooCoarse { found: usize, expected: usize },
    #[error("Blaschke product evaluated at a pole k_j = {re}+{im}i")]
    PoleHit { re: f64, im: f64 },
    #[error("k grid must be strictly increasing and positive")]
    BadGrid,
    #[error(transparent)]
    Ode(#[from] OdeError),
}

/// The Jost function and its `k`-derivative at one complex `k`.
#[derive(Debug, Clone, Copy)]
pub struct JostValue {
    pub k: Complex64,
    pub psi: Complex64,
    pub dpsi_dk: Complex64,
}

/// `psi(k)` and `psi_dot(k)` by the forward (regular-solution) route.
pub fn jost(q: &Potential, k: Complex64, steps: usize) -> Result<JostValue, ScatteringError> {
    let (phi, dk) = ode::integrate_phi_dk(q, k, steps)?;
    let (b, db) = phi.boundary();
    let (w, dw) = dk.boundary();
    let e = (Complex64::I * k).exp();
    let i = Complex64::I;
    let psi = e * (db - i * k * b);
    let dpsi_dk = e * (i * (db - i * k * b) + (dw - i * b - i * k * w));
    Ok(JostValue { k, psi, dpsi_dk })
}

/// `psi(k)` by backward integration of the Jost solution itself.
///
/// Slightly less accurate than [`jost`] for strongly growing modes but fully
/// independent of it; the two routes are compared in tests.
pub fn jost_backward(
    q: &Potential,
    k: Complex64,
    steps: usize,
) -> Result<Complex64, ScatteringError> {
    Ok(ode::integrate_jost(q, k, steps)?.origin().0)
}

/// `psi(k)` for real `k` via the real integration path.
pub(crate) fn jost_real(q: &Potential, k: f64, steps: usize) -> Result<Complex64, ScatteringError> {
    let (b, db) = ode::phi_boundary_lambda(q, k * k, steps)?;
    let e = Complex64::from_polar(1.0, k);
    Ok(e * Complex64::new(db, -k * b))
}

/// `S(k) = psi(-k)/psi(k)` for real nonzero `k`.
pub fn smatrix(q: &Potential, k: f64, steps: usize) -> Result<Complex64, ScatteringError> {
    let psi = jost_real(q, k, steps)?;
    let abs = psi.norm();
    if abs < 1e-12 {
        return Err(ScatteringError::NearZeroJost { k, abs });
    }
    Ok(psi.conj() / psi)
}

/// Continuously unwrapped table of `alpha(k) = k - xi(k)` over a `k` range.
///
/// `alpha` is the argument of `z(k) = phi'(1,k) + i k phi(1,k)`, lifted to a
/// continuous branch. The table is built by walking down from a large anchor
/// `K` where `xi(K)` is pinned by the known `O(1/k)` tail, with steps refined
/// wherever the raw branch jump would be ambiguous.
pub(crate) struct PhaseTable {
    pub(crate) ks: Vec<f64>,
    pub(crate) alphas: Vec<f64>,
}

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Principal argument of `z(k)` together with `|z|`.
fn raw_alpha(q: &Potential, k: f64, steps: usize) -> Result<(f64, f64), ScatteringError> {
    let (b, db) = ode::phi_boundary_lambda(q, k * k, steps)?;
    let (re, im) = (db, k * b);
    let norm = re.hypot(im);
    if norm < 1e-12 {
        return Err(ScatteringError::NearZeroJost { k, abs: norm });
    }
    Ok((im.atan2(re), norm))
}

/// Nearest branch lift of `raw` to `target`.
fn lift(raw: f64, target: f64) -> f64 {
    raw + TAU * ((target - raw) / TAU).round()
}

impl PhaseTable {
    pub(crate) fn build(
        q: &Potential,
        k_lo: f64,
        k_hi: f64,
        steps: usize,
    ) -> Result<Self, ScatteringError> {
        let k_lo = k_lo.max(1e-3);
        let anchor = (1.5 * k_hi).max(30.0).max(8.0 * q.l1_norm());

        // At the anchor the phase is within a few hundredths of a radian of
        // its first-order tail, far inside the half-turn the lift tolerates.
        let xi_tail = (q.mean() - q.cosine_transform(anchor)) / (2.0 * anchor);
        let (raw, _) = raw_alpha(q, anchor, steps)?;
        let alpha_anchor = lift(raw, anchor - xi_tail);

        let h0 = 0.25 / (1.0 + q.linf_norm().sqrt());
        let mut ks = vec![anchor];
        let mut alphas = vec![alpha_anchor];
        let mut k = anchor;
        let mut alpha = alpha_anchor;
        let mut h = h0;
        while k > k_lo {
            let mut refinements = 0;
            loop {
                let k_next = (k - h).max(k_lo);
                // alpha has unit baseline slope (alpha = k - xi), so the
                // predictor follows k and the lift absorbs xi's variation.
                let predicted = alpha - (k - k_next);
                let (raw, _) = raw_alpha(q, k_next, steps)?;
                let candidate = lift(raw, predicted);
                let jump = (candidate - predicted).abs();
                if jump < std::f64::consts::FRAC_PI_2 {
                    k = k_next;
                    alpha = candidate;
                    ks.push(k);
                    alphas.push(alpha);
                    h = (h * 1.26).min(h0);
                    break;
                }
                if refinements == 2 {
                    return Err(ScatteringError::UnwrapAmbiguity {
                        k: k_next,
                        jump,
                        refinements,
                    });
                }
                refinements += 1;
                h *= 0.5;
            }
        }
        ks.reverse();
        alphas.reverse();
        Ok(Self { ks, alphas })
    }

    /// Continuous `alpha(k)` for any `k` inside the table range.
    pub(crate) fn alpha_at(
        &self,
        q: &Potential,
        k: f64,
        steps: usize,
    ) -> Result<f64, ScatteringError> {
        assert!(
            k >= self.ks[0] - 1e-12 && k <= *self.ks.last().unwrap() + 1e-12,
            "k = {k} outside the phase table range"
        );
        let i = match self.ks.binary_search_by(|x| x.partial_cmp(&k).unwrap()) {
            Ok(i) => return Ok(self.alphas[i]),
            Err(i) => i.clamp(1, self.ks.len() - 1),
        };
        let (k0, k1) = (self.ks[i - 1], self.ks[i]);
        let (a0, a1) = (self.alphas[i - 1], self.alphas[i]);
        let predicted = a0 + (a1 - a0) * (k - k0) / (k1 - k0);
        let (raw, _) = raw_alpha(q, k, steps)?;
        let candidate = lift(raw, predicted);
        let jump = (candidate - predicted).abs();
        // Between adjacent knots alpha moves by < pi, so the nearest lift is
        // unambiguous; a larger discrepancy means the table is unusable here.
        if jump >= std::f64::consts::PI {
            return Err(ScatteringError::UnwrapAmbiguity {
                k,
                jump,
                refinements: 0,
            });
        }
        Ok(candidate)
    }

    /// Phase shift `xi(k) = k - alpha(k)`.
    pub(crate) fn xi_at(&self, q: &Potential, k: f64, steps: usize) -> Result<f64, ScatteringError> {
        Ok(k - self.alpha_at(q, k, steps)?)
    }

    /// Largest `|xi|` seen among the table knots.
    pub(crate) fn xi_abs_max(&self) -> f64 {
        self.ks
            .iter()
            .zip(&self.alphas)
            .fold(0.0f64, |m, (k, a)| m.max((k - a).abs()))
    }
}

/// Unwrapped phase shift on a strictly increasing positive grid.
///
/// The branch is fixed by `xi(+inf) = 0`, carried down from a large anchor;
/// the returned values are continuous in `k` (no mod-pi jumps).
pub fn phase_shift(q: &Potential, ks: &[f64], steps: usize) -> Result<Vec<f64>, ScatteringError> {
    if ks.is_empty() || ks[0] <= 0.0 || ks.windows(2).any(|w| w[1] <= w[0]) {
        return Err(ScatteringError::BadGrid);
    }
    let table = PhaseTable::build(q, ks[0], *ks.last().unwrap(), steps)?;
    ks.iter().map(|&k| table.xi_at(q, k, steps)).collect()
}

/// Bound states `k_j = i r_j` (if any) with norming constants.
#[derive(Debug, Clone)]
pub struct BoundStateSet {
    /// Zeros of `psi` on the positive imaginary axis, ordered `|k_1| > |k_2| > ...`.
    pub ks: Vec<Complex64>,
    /// Norming constants `n_j = -i psi_dot(k_j)/psi(-k_j)` (positive).
    pub norming: Vec<f64>,
    /// Whether `psi` (numerically) vanishes at the origin.
    pub zero_at_origin: bool,
}

impl BoundStateSet {
    pub fn len(&self) -> usize {
        self.ks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ks.is_empty()
    }

    /// The imaginary parts `r_j = |k_j|`.
    pub fn rs(&self) -> Vec<f64> {
        self.ks.iter().map(|k| k.im).collect()
    }
}

/// `psi(i t) / e^{-t}` as a real function of `t`; its zeros are the `r_j`.
fn bound_state_fn(q: &Potential, t: f64, steps: usize) -> Result<f64, ScatteringError> {
    let (b, db) = ode::phi_boundary_lambda(q, -t * t, steps)?;
    Ok(db + t * b)
}

/// Locates all bound states by a sign scan on the imaginary axis.
///
/// The scan covers `(0, rmax]` with `rmax = sqrt(max(0, -min q)) + 0.5`
/// (energies cannot undershoot the potential minimum) at resolution
/// `1e-3 * rmax`. The count is cross-validated against the Sturm oscillation
/// count of `phi(x, 0)`; a mismatch means zeros slipped between scan nodes.
pub fn bound_states(q: &Potential, steps: usize) -> Result<BoundStateSet, ScatteringError> {
    let min_q = q.values().iter().cloned().fold(f64::INFINITY, f64::min);
    let rmax = (-min_q).max(0.0).sqrt() + 0.5;
    let step = 1e-3 * rmax;

    let mut rs = Vec::new();
    let mut prev_t = step;
    let mut prev_g = bound_state_fn(q, prev_t, steps)?;
    let count = (rmax / step).ceil() as usize;
    for i in 2..=count {
        let t = (i as f64) * step;
        let g = bound_state_fn(q, t, steps)?;
        if prev_g == 0.0 {
            rs.push(prev_t);
        } else if prev_g * g < 0.0 {
            let r = refine_root(
                |t| bound_state_fn(q, t, steps).unwrap_or(f64::NAN),
                prev_t,
                t,
                1e-12 * t.max(1.0),
            );
            rs.push(r);
        }
        prev_t = t;
        prev_g = g;
    }

    // Sturm count: zeros of phi(., 0) on (0, inf) = number of bound states.
    let (ys, vs) = ode::phi_trajectory_lambda(q, 0.0, steps)?;
    let mut expected = 0usize;
    let mut last_sign = 0i8;
    for &y in ys.iter().skip(1) {
        let s = if y > 0.0 {
            1
        } else if y < 0.0 {
            -1
        } else {
            0
        };
        if s != 0 {
            if last_sign != 0 && s != last_sign {
                expected += 1;
            }
            last_sign = s;
        }
    }
    // Beyond x = 1 the solution is linear; one more zero iff it crosses.
    if ys[ys.len() - 1] * vs[vs.len() - 1] < 0.0 {
        expected += 1;
    }
    if rs.len() != expected {
        return Err(ScatteringError::ScanTooCoarse {
            found: rs.len(),
            expected,
        });
    }

    rs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut ks = Vec::with_capacity(rs.len());
    let mut norming = Vec::with_capacity(rs.len());
    for &r in &rs {
        let kj = Complex64::new(0.0, r);
        let up = jost(q, kj, steps)?;
        let down = jost(q, -kj, steps)?;
        let n = (-Complex64::I * up.dpsi_dk / down.psi).re;
        ks.push(kj);
        norming.push(n);
    }

    let zero_at_origin = jost_real(q, 1e-4, steps)?.norm() < 1e-3;
    Ok(BoundStateSet {
        ks,
        norming,
        zero_at_origin,
    })
}

/// Finite Blaschke product `prod_j (k + k_j)/(k - k_j)`.
pub fn blaschke(bound_ks: &[Complex64], k: Complex64) -> Result<Complex64, ScatteringError> {
    let mut b = Complex64::ONE;
    for &kj in bound_ks {
        if (k - kj).norm() < 1e-12 {
            return Err(ScatteringError::PoleHit {
                re: kj.re,
                im: kj.im,
            });
        }
        b *= (k + kj) / (k - kj);
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const STEPS: usize = 2048;

    fn well(c: f64) -> Potential {
        Potential::from_fn(8, |_| c).unwrap()
    }

    /// Closed-form psi for constant q = c.
    fn psi_const(c: f64, k: Complex64) -> Complex64 {
        let w = (k * k - c).sqrt();
        let s = if w.norm() < 1e-12 { Complex64::ONE } else { w.sin() / w };
        (Complex64::I * k).exp() * (w.cos() - Complex64::I * k * s)
    }

    #[test]
    fn free_jost_is_one() {
        let q = Potential::zero(8);
        let j = jost(&q, Complex64::new(1.3, 0.0), STEPS).unwrap();
        assert!((j.psi - Complex64::ONE).norm() < 1e-11);
        assert!(j.dpsi_dk.norm() < 1e-11);
    }

    #[test]
    fn forward_route_matches_closed_form() {
        let c = -2.0;
        for &k in &[
            Complex64::new(0.7, 0.0),
            Complex64::new(3.0, 0.0),
            Complex64::new(0.5, 0.8),
            Complex64::new(0.0, 1.2),
        ] {
            let j = jost(&well(c), k, STEPS).unwrap();
            let exact = psi_const(c, k);
            assert!(
                (j.psi - exact).norm() < 1e-9 * exact.norm().max(1.0),
                "k = {k}: {} vs {exact}",
                j.psi
            );
        }
    }

    #[test]
    fn forward_and_backward_routes_agree() {
        let q = Potential::from_fn(33, |x| 2.0 * (3.0 * x).sin() - 0.7).unwrap();
        for &k in &[
            Complex64::new(0.9, 0.0),
            Complex64::new(4.0, 0.0),
            Complex64::new(1.0, 1.0),
        ] {
            let f = jost(&q, k, STEPS).unwrap().psi;
            let b = jost_backward(&q, k, STEPS).unwrap();
            assert!((f - b).norm() < 1e-9 * f.norm().max(1.0), "k = {k}");
        }
    }

    #[test]
    fn jost_dk_matches_finite_difference() {
        let q = Potential::from_fn(33, |x| (2.0 * x).cos()).unwrap();
        let k = Complex64::new(1.4, 0.3);
        let h = 1e-5;
        let j = jost(&q, k, STEPS).unwrap();
        let hi = jost(&q, k + h, STEPS).unwrap().psi;
        let lo = jost(&q, k - h, STEPS).unwrap().psi;
        assert!((j.dpsi_dk - (hi - lo) / (2.0 * h)).norm() < 1e-8);
    }

    #[test]
    fn smatrix_is_unimodular() {
        let q = Potential::from_fn(33, |x| -1.5 * (PI * x).sin()).unwrap();
        for &k in &[0.5, 1.0, 7.3, 40.0] {
            let s = smatrix(&q, k, STEPS).unwrap();
            assert!((s.norm() - 1.0).abs() < 1e-12, "k = {k}");
        }
    }

    #[test]
    fn free_phase_shift_vanishes() {
        let q = Potential::zero(8);
        let ks: Vec<f64> = (1..=20).map(|i| 0.5 * i as f64).collect();
        let xis = phase_shift(&q, &ks, STEPS).unwrap();
        for (k, xi) in ks.iter().zip(&xis) {
            assert!(xi.abs() < 1e-10, "xi({k}) = {xi}");
        }
    }

    #[test]
    fn weak_well_phase_matches_principal_branch() {
        // Weak coupling keeps |xi| << pi, so the continuous branch must agree
        // with the principal argument of the closed-form psi.
        let c = -0.3;
        let q = well(c);
        let ks: Vec<f64> = (1..=30).map(|i| 0.3 * i as f64).collect();
        let xis = phase_shift(&q, &ks, STEPS).unwrap();
        for (i, &k) in ks.iter().enumerate() {
            let exact = psi_const(c, Complex64::new(k, 0.0)).arg();
            assert!((xis[i] - exact).abs() < 1e-9, "k = {k}");
        }
    }

    #[test]
    fn phase_tail_matches_born_term() {
        let q = Potential::from_fn(65, |x| 1.2 * (PI * x).sin().powi(2) - 0.4).unwrap();
        let ks = [35.0, 50.0, 70.0];
        let xis = phase_shift(&q, &ks, STEPS).unwrap();
        for (i, &k) in ks.iter().enumerate() {
            let born = (q.mean() - q.cosine_transform(k)) / (2.0 * k);
            assert!(
                (xis[i] - born).abs() < 3.0 / (k * k),
                "k = {k}: xi = {} born = {born}",
                xis[i]
            );
        }
    }

    #[test]
    fn phase_shift_rejects_bad_grids() {
        let q = Potential::zero(8);
        assert!(matches!(
            phase_shift(&q, &[1.0, 1.0], STEPS),
            Err(ScatteringError::BadGrid)
        ));
        assert!(matches!(
            phase_shift(&q, &[-1.0, 2.0], STEPS),
            Err(ScatteringError::BadGrid)
        ));
    }

    #[test]
    fn constant_well_bound_state() {
        // q = -10: exactly one bound state, r solving w cot w = -r with
        // w = sqrt(10 - r^2).
        let q = well(-10.0);
        let set = bound_states(&q, STEPS).unwrap();
        assert_eq!(set.len(), 1);
        // Bracket inside the w < pi branch; w = pi is a cot pole, and the
        // ground state lives below it.
        let oracle = refine_root(
            |r| {
                let w = (10.0 - r * r).sqrt();
                w * (w.cos() / w.sin()) + r
            },
            (10.0 - PI * PI).sqrt() + 1e-3,
            (10.0f64).sqrt() - 1e-6,
            1e-13,
        );
        assert!(
            (set.ks[0].im - oracle).abs() < 1e-8,
            "r = {} vs oracle {oracle}",
            set.ks[0].im
        );
        assert!(set.norming[0] > 0.0);
        assert!(!set.zero_at_origin);
    }

    #[test]
    fn norming_equals_jost_l2_norm() {
        // Independent route: n_j = int_0^inf f(x, k_j)^2 dx, with the tail
        // int_1^inf e^{-2rx} dx = e^{-2r}/(2r) in closed form.
        let q = Potential::from_fn(65, |x| -8.0 - 2.0 * (PI * x).cos()).unwrap();
        let set = bound_states(&q, STEPS).unwrap();
        assert!(!set.is_empty());
        for (kj, &n) in set.ks.iter().zip(&set.norming) {
            let r = kj.im;
            let f = ode::integrate_jost(&q, *kj, STEPS).unwrap();
            let sq: Vec<f64> = f.y.iter().map(|z| (z * z).re).collect();
            let interior = crate::util::trapezoid(&sq, 1.0);
            let tail = (-2.0 * r).exp() / (2.0 * r);
            assert!(
                (n - (interior + tail)).abs() < 1e-6 * n.abs().max(1.0),
                "r = {r}: n = {n} vs integral {}",
                interior + tail
            );
        }
    }

    #[test]
    fn free_potential_has_no_bound_states() {
        let set = bound_states(&Potential::zero(8), STEPS).unwrap();
        assert!(set.is_empty());
        assert!(!set.zero_at_origin);
    }

    #[test]
    fn threshold_resonance_sets_origin_flag() {
        // q = -(pi/2)^2 has phi'(1, 0) = cos(pi/2) = 0: a zero-energy
        // resonance, no genuine bound state.
        let q = well(-(PI / 2.0) * (PI / 2.0));
        let set = bound_states(&q, STEPS).unwrap();
        assert!(set.is_empty());
        assert!(set.zero_at_origin);
    }

    #[test]
    fn barely_bound_state_defeats_the_scan() {
        // Just past the coupling threshold the zero sits below the scan
        // resolution, but the oscillation count already demands it.
        let c = -(PI / 2.0) * (PI / 2.0) - 1e-3;
        match bound_states(&well(c), STEPS) {
            Err(ScatteringError::ScanTooCoarse { found, expected }) => {
                assert_eq!((found, expected), (0, 1));
            }
            other => panic!("expected ScanTooCoarse, got {other:?}"),
        }
    }

    #[test]
    fn blaschke_unimodular_and_pole_guard() {
        let ks = [Complex64::new(0.0, 1.0), Complex64::new(0.0, 0.3)];
        for &k in &[0.4, 2.0, 9.0] {
            let b = blaschke(&ks, Complex64::new(k, 0.0)).unwrap();
            assert!((b.norm() - 1.0).abs() < 1e-12);
        }
        assert!(matches!(
            blaschke(&ks, Complex64::new(0.0, 0.3)),
            Err(ScatteringError::PoleHit { .. })
        ));
    }
}
