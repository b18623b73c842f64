//! The discretized S-matrix map and its inversion.
//!
//! Sampling the S-matrix on a near-half-integer lattice `r_n ~ pi n / 2`
//! (within `pi/8`) turns scattering data into a sequence
//!
//! ```text
//! s_n = q0 - i r_n (S(r_n) - 1),       s0 = q0 = int_0^1 q
//! ```
//!
//! whose leading part is the cosine transform of `q`: at `q = 0` the
//! Fréchet derivative of `s_n` is exactly `cos 2 r_n x`, and for small `q`
//! the map is a perturbed (still invertible) cosine analysis. This module
//! provides the forward map, its analytic gradient kernel
//! `1 - 2 r^2 phi^2(x, r) / psi^2(r)`, a least-squares inversion of the
//! linearization, and a Gauss-Newton iteration that inverts the full
//! nonlinear map for moderate potentials. The gradient kernel is complex
//! away from `q = 0` (its imaginary part is second order in `q`), so
//! residuals and kernels are handled with both parts throughout.

use crate::ode::{self, OdeError};
use crate::potential::{Potential, PotentialError};
use crate::scattering::{self, ScatteringError};
use crate::spectra::{self, SpectraError};
use crate::util::trapezoid;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, thiserror::Error)]
pub enum SmapError {
    #[error("sample point r_{n} = {r} violates |r_n - pi n/2| < pi/8")]
    SpacingViolation { n: usize, r: f64 },
    #[error("sample arrays disagree: {rs} points vs {svals} values")]
    LengthMismatch { rs: usize, svals: usize },
    #[error("|psi({r})| = {abs:.3e} too close to zero for a gradient kernel")]
    NearZeroJost { r: f64, abs: f64 },
    #[error("cosine-system Gram matrix condition {cond:.3e} exceeds 1e10")]
    IllConditioned { cond: f64 },
    #[error("Newton iteration stalled at residual {residual:.3e}")]
    NoConvergence { residual: f64, best: Box<Potential> },
    #[error("bad sample data: {detail}")]
    BadData { detail: String },
    #[error("sample JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Scattering(#[from] ScatteringError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Ode(#[from] OdeError),
    #[error(transparent)]
    Potential(#[from] PotentialError),
}

/// Checks the lattice condition `|r_n - pi n / 2| < pi / 8` (1-based `n`).
pub fn validate_spacing(rs: &[f64]) -> Result<(), SmapError> {
    for (i, &r) in rs.iter().enumerate() {
        let n = i + 1;
        if !r.is_finite() || (r - PI * n as f64 / 2.0).abs() >= PI / 8.0 {
            return Err(SmapError::SpacingViolation { n, r });
        }
    }
    Ok(())
}

/// S-matrix samples on a validated near-half-integer lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct SMatrixSamples {
    pub rs: Vec<f64>,
    pub svals: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct SamplesFile {
    rs: Vec<f64>,
    s_re: Vec<f64>,
    s_im: Vec<f64>,
    s0: f64,
}

impl SMatrixSamples {
    pub fn validate(&self) -> Result<(), SmapError> {
        if self.rs.len() != self.svals.len() {
            return Err(SmapError::LengthMismatch {
                rs: self.rs.len(),
                svals: self.svals.len(),
            });
        }
        validate_spacing(&self.rs)?;
        if let Some(s) = self.svals.iter().find(|s| !s.re.is_finite() || !s.im.is_finite()) {
            return Err(SmapError::BadData {
                detail: format!("non-finite S value {s}"),
            });
        }
        Ok(())
    }

    /// Serializes together with the mean value `s0` the file format carries.
    pub fn to_json(&self, s0: f64) -> String {
        let file = SamplesFile {
            rs: self.rs.clone(),
            s_re: self.svals.iter().map(|s| s.re).collect(),
            s_im: self.svals.iter().map(|s| s.im).collect(),
            s0,
        };
        serde_json::to_string_pretty(&file).expect("plain floats always serialize")
    }

    pub fn from_json(text: &str) -> Result<(Self, f64), SmapError> {
        let file: SamplesFile = serde_json::from_str(text)?;
        if file.s_re.len() != file.s_im.len() {
            return Err(SmapError::BadData {
                detail: format!(
                    "s_re has {} entries, s_im has {}",
                    file.s_re.len(),
                    file.s_im.len()
                ),
            });
        }
        let samples = SMatrixSamples {
            rs: file.rs,
            svals: file
                .s_re
                .iter()
                .zip(&file.s_im)
                .map(|(&re, &im)| Complex64::new(re, im))
                .collect(),
        };
        samples.validate()?;
        Ok((samples, file.s0))
    }
}

/// Forward map: `(s0, s_n)` with `s_n = s0 - i r_n (S(r_n) - 1)`.
pub fn psi_map(
    q: &Potential,
    rs: &[f64],
    steps: usize,
) -> Result<(f64, Vec<Complex64>), SmapError> {
    validate_spacing(rs)?;
    let s0 = q.mean();
    let mut svals = Vec::with_capacity(rs.len());
    for &r in rs {
        let s = scattering::smatrix(q, r, steps)?;
        svals.push(Complex64::new(s0, 0.0) - Complex64::I * r * (s - 1.0));
    }
    Ok((s0, svals))
}

/// Gradient kernel of `s_n` at `q`: `1 - 2 r^2 phi^2(x, r) / psi^2(r)`.
///
/// Sampled at the `grid_n` uniform nodes of `[0,1]`. Real when `q = 0`
/// (where it reduces to `cos 2rx`); its imaginary part is second order in
/// `q` and is kept because the Newton residual is complex.
pub fn psi_gradient(
    q: &Potential,
    r: f64,
    grid_n: usize,
    steps: usize,
) -> Result<Vec<Complex64>, SmapError> {
    let (ys, _) = ode::phi_trajectory_lambda(q, r * r, steps)?;
    let psi = scattering::jost_real(q, r, steps)?;
    if psi.norm() < 1e-8 {
        return Err(SmapError::NearZeroJost {
            r,
            abs: psi.norm(),
        });
    }
    let psi2 = psi * psi;
    let factor = 2.0 * r * r;
    let mut kernel = Vec::with_capacity(grid_n);
    for i in 0..grid_n {
        let x = i as f64 / (grid_n - 1) as f64;
        // phi at x from the integrator nodes (exact when grids align).
        let t = x * steps as f64;
        let j = (t.floor() as usize).min(steps - 1);
        let w = t - j as f64;
        let phi = ys[j] * (1.0 - w) + ys[j + 1] * w;
        kernel.push(1.0 - factor * phi * phi / psi2);
    }
    Ok(kernel)
}

/// Closed-form Gram matrix of the system `{1, cos 2 r_1 x, ..., cos 2 r_n x}`.
fn cosine_gram(rs: &[f64]) -> DMatrix<f64> {
    let sinc = |t: f64| if t.abs() < 1e-9 { 1.0 - t * t / 6.0 } else { t.sin() / t };
    let n = rs.len();
    let mut g = DMatrix::zeros(n + 1, n + 1);
    g[(0, 0)] = 1.0;
    for a in 0..n {
        let v = sinc(2.0 * rs[a]);
        g[(0, a + 1)] = v;
        g[(a + 1, 0)] = v;
        for b in 0..n {
            g[(a + 1, b + 1)] =
                0.5 * (sinc(2.0 * (rs[a] - rs[b])) + sinc(2.0 * (rs[a] + rs[b])));
        }
    }
    g
}

fn condition_of(g: &DMatrix<f64>) -> f64 {
    let eig = g.clone().symmetric_eigenvalues();
    let max = eig.iter().cloned().fold(f64::MIN, f64::max);
    let min = eig.iter().cloned().fold(f64::MAX, f64::min);
    if min <= 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Least-squares inversion of the linearized map at `q = 0`.
///
/// Finds the minimum-norm combination of `{1, cos 2 r_n x}` reproducing
/// `s0` and `Re s_n` for `n <= nmax`; the Gram matrix is assembled from
/// closed-form integrals and solved with a 1e-12 Tikhonov floor.
pub fn linearized_inverse(
    samples: &SMatrixSamples,
    s0: f64,
    nmax: usize,
    grid_n: usize,
) -> Result<Potential, SmapError> {
    samples.validate()?;
    let n = nmax.min(samples.rs.len());
    let rs = &samples.rs[..n];
    let g = cosine_gram(rs);
    let cond = condition_of(&g);
    if cond > 1e10 {
        return Err(SmapError::IllConditioned { cond });
    }
    let mut rhs = DVector::zeros(n + 1);
    rhs[0] = s0;
    for a in 0..n {
        rhs[a + 1] = samples.svals[a].re;
    }
    let reg = &g + DMatrix::identity(n + 1, n + 1) * 1e-12;
    let coef = reg
        .lu()
        .solve(&rhs)
        .ok_or(SmapError::IllConditioned { cond })?;
    Ok(Potential::from_fn(grid_n, |x| {
        let mut v = coef[0];
        for a in 0..n {
            v += coef[a + 1] * (2.0 * rs[a] * x).cos();
        }
        v
    })?)
}

/// Result of a converged Gauss-Newton inversion.
#[derive(Debug, Clone)]
pub struct NewtonOutcome {
    pub q: Potential,
    pub residual: f64,
    pub iterations: usize,
}

/// Inverts the sampled map by Gauss-Newton iteration.
///
/// Starts from [`linearized_inverse`], then repeatedly applies the
/// minimum-norm update `h = J^T (J J^T + eps I)^{-1} rho` where `rho`
/// stacks the `s0` defect with real and imaginary parts of the `s_n`
/// defects and `J` stacks the corresponding gradient kernels. Stops when
/// the Euclidean residual drops below 1e-8; otherwise returns
/// [`SmapError::NoConvergence`] carrying the best iterate.
pub fn newton_invert(
    samples: &SMatrixSamples,
    s0: f64,
    iters: usize,
    grid_n: usize,
    steps: usize,
) -> Result<NewtonOutcome, SmapError> {
    samples.validate()?;
    let n = samples.rs.len();
    let m = 2 * n + 1;
    let tol = 1e-8;

    // Trapezoid weights realize the L2 pairing of kernels on the grid.
    let h = 1.0 / (grid_n - 1) as f64;
    let mut w = vec![h; grid_n];
    w[0] *= 0.5;
    w[grid_n - 1] *= 0.5;

    let mut q = linearized_inverse(samples, s0, n, grid_n)?;
    let mut best: Option<(f64, Potential)> = None;

    for iter in 0..=iters {
        let (mean, svals) = psi_map(&q, &samples.rs, steps)?;
        let mut rho = DVector::zeros(m);
        rho[0] = s0 - mean;
        for a in 0..n {
            let d = samples.svals[a] - svals[a];
            rho[1 + a] = d.re;
            rho[1 + n + a] = d.im;
        }
        let residual = rho.norm();
        if best.as_ref().map_or(true, |(r, _)| residual < *r) {
            best = Some((residual, q.clone()));
        }
        if residual < tol {
            return Ok(NewtonOutcome {
                q,
                residual,
                iterations: iter,
            });
        }
        if iter == iters {
            break;
        }

        // Rows of J on the grid: d(s0)/dq = 1, then Re/Im gradient kernels.
        let mut rows: Vec<Vec<f64>> = Vec::with_capacity(m);
        rows.push(vec![1.0; grid_n]);
        let mut im_rows: Vec<Vec<f64>> = Vec::with_capacity(n);
        for &r in &samples.rs {
            let kernel = psi_gradient(&q, r, grid_n, steps)?;
            rows.push(kernel.iter().map(|c| c.re).collect());
            im_rows.push(kernel.iter().map(|c| c.im).collect());
        }
        rows.extend(im_rows);

        let mut a = DMatrix::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let mut acc = 0.0;
                for g in 0..grid_n {
                    acc += rows[i][g] * rows[j][g] * w[g];
                }
                a[(i, j)] = acc;
                a[(j, i)] = acc;
            }
        }
        let reg = a + DMatrix::identity(m, m) * 1e-12;
        let y = reg.lu().solve(&rho).ok_or_else(|| SmapError::NoConvergence {
            residual,
            best: Box::new(q.clone()),
        })?;

        let mut values = q.values().to_vec();
        for g in 0..grid_n {
            let mut acc = 0.0;
            for i in 0..m {
                acc += y[i] * rows[i][g];
            }
            values[g] += acc;
        }
        q = Potential::new(values)?;
    }

    let (residual, best_q) = best.expect("at least one iterate evaluated");
    Err(SmapError::NoConvergence {
        residual,
        best: Box::new(best_q),
    })
}

/// Condition number of the Gram matrix of L2-normalized grid functions.
pub(crate) fn gram_condition(funcs: &[Vec<f64>]) -> f64 {
    let n = funcs.len();
    let mut g = DMatrix::zeros(n, n);
    let prods: Vec<Vec<f64>> = funcs
        .iter()
        .map(|f| {
            let norm = trapezoid(&f.iter().map(|v| v * v).collect::<Vec<_>>(), 1.0).sqrt();
            f.iter().map(|v| v / norm).collect()
        })
        .collect();
    for i in 0..n {
        for j in i..n {
            let prod: Vec<f64> = prods[i].iter().zip(&prods[j]).map(|(a, b)| a * b).collect();
            let v = trapezoid(&prod, 1.0);
            g[(i, j)] = v;
            g[(j, i)] = v;
        }
    }
    condition_of(&g)
}

/// Conditioning of the squared-eigenfunction system.
///
/// Builds the Gram matrix of the normalized functions `phi^2(x, mu_n)` and
/// `phi^2(x, tau_n)` for `n <= nmax` and returns its condition number: a
/// finite-dimensional witness that the system is a basis (small condition)
/// or nearly degenerate (huge condition).
pub fn basis_gram(q: &Potential, nmax: usize, steps: usize) -> Result<f64, SmapError> {
    let mu = spectra::dirichlet_eigenvalues(q, nmax, steps)?;
    let tau = spectra::mixed_eigenvalues(q, nmax, steps)?;
    let mut funcs = Vec::with_capacity(2 * nmax);
    for lam in mu.iter().chain(tau.iter()) {
        let (ys, _) = ode::phi_trajectory_lambda(q, *lam, steps)?;
        funcs.push(ys.iter().map(|y| y * y).collect());
    }
    Ok(gram_condition(&funcs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bump(amp: f64) -> Potential {
        Potential::from_fn(257, |x| amp * (PI * x).sin().powi(2)).unwrap()
    }

    fn free_lattice(n: usize) -> Vec<f64> {
        (1..=n).map(|i| PI * i as f64 / 2.0).collect()
    }

    fn perturbed_lattice(n: usize) -> Vec<f64> {
        (1..=n)
            .map(|i| PI * i as f64 / 2.0 + 0.1 * if i % 2 == 0 { 1.0 } else { -1.0 })
            .collect()
    }

    #[test]
    fn spacing_is_enforced() {
        assert!(validate_spacing(&free_lattice(6)).is_ok());
        assert!(validate_spacing(&perturbed_lattice(6)).is_ok());
        let err = validate_spacing(&[PI / 2.0, PI + 0.5]);
        assert!(matches!(err, Err(SmapError::SpacingViolation { n: 2, .. })));
    }

    #[test]
    fn zero_potential_maps_to_zero() {
        let q = Potential::zero(8);
        let (s0, s) = psi_map(&q, &free_lattice(8), 4096).unwrap();
        assert_eq!(s0, 0.0);
        for v in s {
            // The floor is the RK4 phase error of psi at the largest r.
            assert!(v.norm() < 1e-9, "residual sample {v}");
        }
    }

    #[test]
    fn small_bump_error_is_quadratic() {
        // |Re s_n - qhat_c(r_n)| scales as eps^2 when the bump is eps-small.
        let r = PI / 2.0;
        let err_at = |eps: f64| {
            let q = bump(eps);
            let (_, s) = psi_map(&q, &[r], 2048).unwrap();
            let qhat = q.cosine_transform(r);
            ((s[0].re - qhat).abs(), s[0].im.abs())
        };
        let (re1, im1) = err_at(0.1);
        let (re2, im2) = err_at(0.2);
        assert!(re1 < 1e-3 && im1 < 1e-3);
        let ratio_re = re2 / re1;
        let ratio_im = im2 / im1;
        assert!(
            (3.0..5.5).contains(&ratio_re),
            "Re ratio {ratio_re} not quadratic"
        );
        assert!(
            (3.0..5.5).contains(&ratio_im),
            "Im ratio {ratio_im} not quadratic"
        );
    }

    #[test]
    fn free_gradient_kernel_is_double_cosine() {
        let q = Potential::zero(8);
        for &r in &[PI / 2.0, 3.3, 11.0] {
            let kernel = psi_gradient(&q, r, 513, 1024).unwrap();
            for (i, k) in kernel.iter().enumerate() {
                let x = i as f64 / 512.0;
                assert!((k.re - (2.0 * r * x).cos()).abs() < 1e-8);
                assert!(k.im.abs() < 1e-8, "imaginary residue {}", k.im);
            }
        }
    }

    #[test]
    fn gradient_matches_directional_derivative() {
        let q = bump(0.3);
        let dir = Potential::from_fn(257, |x| (3.0 * x).sin() + 0.5 * (7.0 * x).cos()).unwrap();
        // The pairing quadrature must outresolve the 1e-5 relative target.
        let grid_n = 2049;
        let steps = 4096;
        let eps = 1e-5;
        let r = PI; // n = 2, so the probe list needs n = 1 in front
        let shifted = |sign: f64| {
            let vals: Vec<f64> = q
                .values()
                .iter()
                .zip(dir.nodes())
                .map(|(&v, x)| v + sign * eps * dir.eval(x))
                .collect();
            let p = Potential::new(vals).unwrap();
            psi_map(&p, &[PI / 2.0, r], steps).unwrap().1[1]
        };
        let fd = (shifted(1.0) - shifted(-1.0)) / (2.0 * eps);
        let kernel = psi_gradient(&q, r, grid_n, steps).unwrap();
        let h: Vec<Complex64> = (0..grid_n)
            .map(|i| {
                let x = i as f64 / (grid_n - 1) as f64;
                Complex64::new(dir.eval(x), 0.0)
            })
            .collect();
        let mut ip = Complex64::ZERO;
        let hh = 1.0 / (grid_n - 1) as f64;
        for i in 0..grid_n {
            let w = if i == 0 || i == grid_n - 1 { 0.5 } else { 1.0 };
            ip += kernel[i] * h[i] * hh * w;
        }
        assert!(
            (fd - ip).norm() < 1e-5 * fd.norm(),
            "fd = {fd}, pairing = {ip}"
        );
    }

    #[test]
    fn gradient_approaches_cosine_for_large_r() {
        let q = bump(0.3);
        let deviation = |r: f64| {
            let kernel = psi_gradient(&q, r, 513, 4096).unwrap();
            kernel
                .iter()
                .enumerate()
                .map(|(i, k)| {
                    let x = i as f64 / 512.0;
                    (k - Complex64::new((2.0 * r * x).cos(), 0.0)).norm()
                })
                .fold(0.0f64, f64::max)
        };
        let d1 = deviation(10.2);
        let d2 = deviation(20.4);
        assert!(d1 < 1.5 * 0.3 / 10.2, "deviation {d1}");
        assert!(d2 < 1.5 * 0.3 / 20.4, "deviation {d2}");
        let rate = d2 / d1;
        assert!((0.35..0.65).contains(&rate), "rate {rate} not ~ 1/r");
    }

    #[test]
    fn linearized_inversion_is_exact_on_the_free_lattice() {
        // q = cos(pi x): orthogonal system, Fourier data (0, 1/2, 0, 0, ...).
        let rs = free_lattice(8);
        let mut svals = vec![Complex64::ZERO; 8];
        svals[0] = Complex64::new(0.5, 0.0);
        let samples = SMatrixSamples { rs, svals };
        let q = linearized_inverse(&samples, 0.0, 8, 257).unwrap();
        for (i, x) in q.nodes().enumerate() {
            assert!((q.values()[i] - (PI * x).cos()).abs() < 1e-8);
        }
    }

    #[test]
    fn linearized_inversion_handles_the_perturbed_lattice() {
        // In-span data: a known combination of the non-orthogonal system is
        // rebuilt from its exact moments.
        let rs = perturbed_lattice(8);
        let g = cosine_gram(&rs);
        let mut coef = DVector::zeros(9);
        coef[0] = 0.3;
        for a in 1..=8 {
            coef[a] = if a % 2 == 0 { 1.0 } else { -1.0 } / (a * a) as f64;
        }
        let data = &g * &coef;
        let samples = SMatrixSamples {
            rs: rs.clone(),
            svals: (1..=8).map(|a| Complex64::new(data[a], 0.0)).collect(),
        };
        let rec = linearized_inverse(&samples, data[0], 8, 513).unwrap();
        for (i, x) in rec.nodes().enumerate() {
            let mut want = coef[0];
            for a in 1..=8 {
                want += coef[a] * (2.0 * rs[a - 1] * x).cos();
            }
            assert!(
                (rec.values()[i] - want).abs() < 1e-6,
                "x = {x}: {} vs {want}",
                rec.values()[i]
            );
        }
    }

    #[test]
    fn linearized_truncation_error_decays() {
        // Out-of-span target: the projection error shrinks as nmax grows.
        let target = |x: f64| (PI * x).cos();
        let sup_err = |nmax: usize| {
            let rs = perturbed_lattice(nmax);
            let q = Potential::from_fn(8193, target).unwrap();
            let svals: Vec<Complex64> = rs
                .iter()
                .map(|&r| Complex64::new(q.cosine_transform(r), 0.0))
                .collect();
            let samples = SMatrixSamples { rs, svals };
            let rec = linearized_inverse(&samples, 0.0, nmax, 1025).unwrap();
            rec.nodes()
                .enumerate()
                .map(|(i, x)| (rec.values()[i] - target(x)).abs())
                .fold(0.0f64, f64::max)
        };
        let (e8, e16, e32) = (sup_err(8), sup_err(16), sup_err(32));
        assert!(e8 > e16 && e16 > e32, "no decay: {e8} {e16} {e32}");
        assert!(e32 < 6e-3, "e32 = {e32}");
    }

    #[test]
    fn newton_on_zero_data_returns_zero() {
        let samples = SMatrixSamples {
            rs: free_lattice(8),
            svals: vec![Complex64::ZERO; 8],
        };
        // Steps high enough that the forward noise sits below the 1e-8
        // convergence floor, so no correction step ever fires.
        let out = newton_invert(&samples, 0.0, 5, 257, 4096).unwrap();
        assert!(out.iterations <= 1);
        assert!(out.q.linf_norm() < 1e-9);
    }

    #[test]
    fn newton_recovers_a_moderate_bump() {
        let q_true = bump(0.3);
        let rs = perturbed_lattice(16);
        let (s0, svals) = psi_map(&q_true, &rs, 1024).unwrap();
        let samples = SMatrixSamples { rs, svals };
        let out = newton_invert(&samples, s0, 20, 513, 1024).unwrap();
        assert!(out.residual < 1e-8);
        let l2: f64 = {
            let diff: Vec<f64> = out
                .q
                .nodes()
                .enumerate()
                .map(|(i, x)| (out.q.values()[i] - q_true.eval(x)).powi(2))
                .collect();
            trapezoid(&diff, 1.0).sqrt()
        };
        assert!(l2 < 5e-3, "L2 error {l2}");
    }

    #[test]
    fn distinct_bumps_have_distinct_images() {
        let q1 = bump(0.3);
        let q2 = Potential::from_fn(257, |x| {
            0.3 * (PI * x).sin().powi(2) + 0.1 * (2.0 * PI * x).sin().powi(2)
        })
        .unwrap();
        let rs = free_lattice(16);
        let (a0, a) = psi_map(&q1, &rs, 1024).unwrap();
        let (b0, b) = psi_map(&q2, &rs, 1024).unwrap();
        let dist2: f64 = (a0 - b0).powi(2)
            + a.iter()
                .zip(&b)
                .map(|(x, y)| (x - y).norm_sqr())
                .sum::<f64>();
        assert!(dist2.sqrt() > 1e-6);
    }

    #[test]
    fn squared_eigenfunction_system_is_well_conditioned() {
        let free = basis_gram(&Potential::zero(8), 8, 1024).unwrap();
        assert!(free < 100.0, "free condition {free}");
        let bumped = basis_gram(&bump(2.0), 8, 1024).unwrap();
        assert!(bumped.is_finite() && bumped < 1e6, "bump condition {bumped}");
    }

    #[test]
    fn duplicated_function_is_detected_as_degenerate() {
        let f: Vec<f64> = (0..257)
            .map(|i| (PI * i as f64 / 256.0).sin().powi(2))
            .collect();
        let g: Vec<f64> = (0..257)
            .map(|i| (2.0 * PI * i as f64 / 256.0).sin().powi(2))
            .collect();
        let cond = gram_condition(&[f.clone(), g, f]);
        assert!(cond > 1e10, "condition {cond} should explode");
    }

    #[test]
    fn sample_json_roundtrips() {
        let samples = SMatrixSamples {
            rs: perturbed_lattice(3),
            svals: vec![
                Complex64::new(0.1, -0.02),
                Complex64::new(0.05, 0.01),
                Complex64::new(-0.01, 0.0),
            ],
        };
        let text = samples.to_json(0.25);
        let (back, s0) = SMatrixSamples::from_json(&text).unwrap();
        assert_eq!(back, samples);
        assert_eq!(s0, 0.25);
        assert!(SMatrixSamples::from_json("{\"rs\": [9.9], \"s_re\": [0], \"s_im\": [0], \"s0\": 0}").is_err());
    }
}

