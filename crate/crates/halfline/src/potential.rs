//! Grid potentials on `[0, 1]`.
//!
//! A [`Potential`] stores samples on the uniform grid `x_i = i/(grid_n - 1)`
//! and evaluates by linear interpolation between nodes; to the right of 1 it
//! is identically zero. The mean over `[0, 1]` (trapezoid on the grid, exact
//! for the piecewise-linear interpolant) is cached at construction because
//! nearly every downstream routine needs it as the leading spectral shift.

use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum PotentialError {
    #[error("potential grid needs at least 2 nodes, got {grid_n}")]
    TooFewNodes { grid_n: usize },
    #[error("grid_n is {grid_n} but {len} values were supplied")]
    LengthMismatch { grid_n: usize, len: usize },
    #[error("non-finite potential value at node {index}")]
    NonFinite { index: usize },
    #[error("malformed potential JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// A real potential sampled on a uniform grid over `[0, 1]`, zero beyond.
#[derive(Debug, Clone, PartialEq)]
pub struct Potential {
    values: Vec<f64>,
    mean: f64,
}

#[derive(Serialize, Deserialize)]
struct PotentialFile {
    grid_n: usize,
    values: Vec<f64>,
}

impl Potential {
    /// Wraps node values; the grid size is the number of values.
    pub fn new(values: Vec<f64>) -> Result<Self, PotentialError> {
        if values.len() < 2 {
            return Err(PotentialError::TooFewNodes {
                grid_n: values.len(),
            });
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(PotentialError::NonFinite { index });
        }
        let mean = crate::util::trapezoid(&values, 1.0);
        Ok(Self { values, mean })
    }

    /// Samples a function on `grid_n` uniform nodes.
    pub fn from_fn(grid_n: usize, f: impl Fn(f64) -> f64) -> Result<Self, PotentialError> {
        if grid_n < 2 {
            return Err(PotentialError::TooFewNodes { grid_n });
        }
        let values = (0..grid_n)
            .map(|i| f(i as f64 / (grid_n - 1) as f64))
            .collect();
        Self::new(values)
    }

    /// The zero potential (free half line).
    pub fn zero(grid_n: usize) -> Self {
        Self::from_fn(grid_n.max(2), |_| 0.0).expect("zero potential is always valid")
    }

    pub fn grid_n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Node abscissas `i/(grid_n - 1)`.
    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        let m = (self.values.len() - 1) as f64;
        (0..self.values.len()).map(move |i| i as f64 / m)
    }

    /// Piecewise-linear evaluation; zero for `x > 1`, clamped at the ends.
    pub fn eval(&self, x: f64) -> f64 {
        if x > 1.0 {
            return 0.0;
        }
        if x <= 0.0 {
            return self.values[0];
        }
        let m = (self.values.len() - 1) as f64;
        let t = x * m;
        let i = (t as usize).min(self.values.len() - 2);
        let frac = t - i as f64;
        self.values[i] * (1.0 - frac) + self.values[i + 1] * frac
    }

    /// Mean over `[0, 1]`, cached at construction.
    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// L1 norm of the samples over `[0, 1]` (trapezoid of `|q|`).
    pub fn l1_norm(&self) -> f64 {
        let abs: Vec<f64> = self.values.iter().map(|v| v.abs()).collect();
        crate::util::trapezoid(&abs, 1.0)
    }

    /// Largest absolute node value.
    pub fn linf_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |a, v| a.max(v.abs()))
    }

    /// `int_0^1 q(x) cos(2 k x) dx` for real `k`.
    ///
    /// The integrand is piecewise linear times a cosine, so each cell has a
    /// closed-form antiderivative; the result is exact for the stored
    /// representation and exactly linear in the node values. No quadrature
    /// parameter is involved.
    pub fn cosine_transform(&self, k: f64) -> f64 {
        let w = 2.0 * k;
        let m = self.values.len() - 1;
        let h = 1.0 / m as f64;
        let u = w * h;
        // Moments of cos/sin against {1, s} on one cell of width h.
        let i0c = h * sinc(u);
        let i1c = h * h * (sinc(u) - cos_defect(u));
        let i0s = h * u * cos_defect(u);
        let i1s = h * h * u * sine_moment(u);
        let mut sum = 0.0;
        for i in 0..m {
            let x0 = i as f64 * h;
            let v0 = self.values[i];
            let b = (self.values[i + 1] - v0) / h;
            let (s, c) = (w * x0).sin_cos();
            sum += c * (v0 * i0c + b * i1c) - s * (v0 * i0s + b * i1s);
        }
        sum
    }

    /// Serializes as `{"grid_n": ..., "values": [...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PotentialFile {
            grid_n: self.values.len(),
            values: self.values.clone(),
        })
        .expect("potential serialization cannot fail")
    }

    /// Parses and validates the JSON produced by [`Potential::to_json`].
    pub fn from_json(text: &str) -> Result<Self, PotentialError> {
        let file: PotentialFile = serde_json::from_str(text)?;
        if file.grid_n != file.values.len() {
            return Err(PotentialError::LengthMismatch {
                grid_n: file.grid_n,
                len: file.values.len(),
            });
        }
        Self::new(file.values)
    }
}

/// `sin(u)/u`, series branch below 1e-2 to dodge the 0/0.
fn sinc(u: f64) -> f64 {
    if u.abs() < 1e-2 {
        let u2 = u * u;
        1.0 - u2 / 6.0 + u2 * u2 / 120.0
    } else {
        u.sin() / u
    }
}

/// `(1 - cos(u))/u^2`; the cancellation is harmless above 1e-2.
fn cos_defect(u: f64) -> f64 {
    if u.abs() < 1e-2 {
        let u2 = u * u;
        0.5 - u2 / 24.0 + u2 * u2 / 720.0
    } else {
        (1.0 - u.cos()) / (u * u)
    }
}

/// `(sin(u) - u cos(u))/u^3`, the first moment of the cosine kernel.
fn sine_moment(u: f64) -> f64 {
    if u.abs() < 1e-2 {
        let u2 = u * u;
        1.0 / 3.0 - u2 / 30.0 + u2 * u2 / 840.0
    } else {
        (u.sin() - u * u.cos()) / (u * u * u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_interpolates_and_vanishes_beyond_one() {
        let q = Potential::new(vec![1.0, 3.0, 5.0]).unwrap();
        assert_eq!(q.eval(0.0), 1.0);
        assert_eq!(q.eval(0.25), 2.0);
        assert_eq!(q.eval(0.5), 3.0);
        assert_eq!(q.eval(1.0), 5.0);
        assert_eq!(q.eval(1.0 + 1e-12), 0.0);
        assert_eq!(q.eval(7.0), 0.0);
    }

    #[test]
    fn mean_matches_hand_integral() {
        // q(x) = 2x has mean 1 regardless of grid size.
        for n in [2, 5, 33, 2049] {
            let q = Potential::from_fn(n, |x| 2.0 * x).unwrap();
            assert!((q.mean() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn cosine_transform_of_constant() {
        // int_0^1 c cos(2kx) dx = c sin(2k)/(2k).
        let q = Potential::from_fn(9, |_| -1.5).unwrap();
        for &k in &[0.3f64, 1.0, 4.0, 17.5] {
            let exact = -1.5 * (2.0 * k).sin() / (2.0 * k);
            assert!(
                (q.cosine_transform(k) - exact).abs() < 1e-9,
                "k = {k}: {} vs {exact}",
                q.cosine_transform(k)
            );
        }
    }

    #[test]
    fn cosine_transform_at_zero_is_mean() {
        let q = Potential::from_fn(64, |x| x * x - 0.3).unwrap();
        assert!((q.cosine_transform(0.0) - q.mean()).abs() < 1e-10);
    }

    #[test]
    fn json_roundtrip() {
        let q = Potential::from_fn(17, |x| (3.0 * x).sin()).unwrap();
        let q2 = Potential::from_json(&q.to_json()).unwrap();
        assert_eq!(q, q2);
    }

    #[test]
    fn json_rejects_mismatched_length() {
        let text = r#"{"grid_n": 4, "values": [0.0, 1.0]}"#;
        assert!(matches!(
            Potential::from_json(text),
            Err(PotentialError::LengthMismatch { grid_n: 4, len: 2 })
        ));
    }

    #[test]
    fn rejects_non_finite() {
        assert!(matches!(
            Potential::new(vec![0.0, f64::NAN, 1.0]),
            Err(PotentialError::NonFinite { index: 1 })
        ));
    }

    #[test]
    fn rejects_tiny_grid() {
        assert!(matches!(
            Potential::new(vec![1.0]),
            Err(PotentialError::TooFewNodes { grid_n: 1 })
        ));
    }
}
