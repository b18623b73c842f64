//! Monotone phase parameterization of the two interval spectra.
//!
//! For admissible potentials (`tau_1 >= 0`, see [`crate::spectra::is_lplus`])
//! the angle `alpha(k) = k - xi(k)` is strictly increasing on `k > 0`, and
//! its level crossings
//!
//! ```text
//! alpha(p_n) = pi n / 2
//! ```
//!
//! interleave the two spectra: `p_{2n}^2 = mu_n` (Dirichlet) and
//! `p_{2n-1}^2 = tau_n` (mixed). A potential is therefore summarized by the
//! finitely many `p_n` that differ from the free values `pi n / 2`, plus its
//! mean. That package is [`SpectralData`]; it is what the reconstruction in
//! [`crate::recover`] consumes, and its JSON form is the interchange format
//! of the command-line tools.

use crate::potential::Potential;
use crate::scattering::{PhaseTable, ScatteringError};
use crate::spectra::{self, SpectraError};
use crate::util::{cg, refine_root, sg};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, thiserror::Error)]
pub enum PhaseError {
    #[error("potential is not in the admissible class (tau_1 < 0)")]
    NotLPlus,
    #[error("no bracket for p_{n}: alpha does not cross pi n/2 in the search window")]
    NoBracket { n: usize },
    #[error("even solvability sum is {sum}, exceeding 1")]
    EvenConditionViolated { sum: f64 },
    #[error("bad spectral data: {detail}")]
    BadData { detail: String },
    #[error(transparent)]
    Scattering(#[from] ScatteringError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error("malformed spectral-data JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// Whether a data set describes a general potential or an even one
/// (symmetric about x = 1/2), which is reconstructible from the Dirichlet
/// family alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Generic,
    Even,
}

/// One perturbed member of the `p_n` sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerturbedNode {
    pub n: usize,
    pub p: f64,
}

/// Finite spectral data: the mean and the `p_n` that moved off `pi n/2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralData {
    pub sigma0: f64,
    pub parity: Parity,
    pub nmax: usize,
    pub perturbed: Vec<PerturbedNode>,
}

impl SpectralData {
    /// Structural checks shared by every consumer.
    pub fn validate(&self) -> Result<(), PhaseError> {
        let mut last = 0usize;
        for node in &self.perturbed {
            if node.n == 0 || node.n > self.nmax {
                return Err(PhaseError::BadData {
                    detail: format!("index n = {} outside 1..={}", node.n, self.nmax),
                });
            }
            if node.n <= last {
                return Err(PhaseError::BadData {
                    detail: "perturbed indices must be strictly increasing".into(),
                });
            }
            if !node.p.is_finite() || node.p <= 0.0 {
                return Err(PhaseError::BadData {
                    detail: format!("p_{} = {} must be finite and positive", node.n, node.p),
                });
            }
            if self.parity == Parity::Even && node.n % 2 != 0 {
                return Err(PhaseError::BadData {
                    detail: format!("even data may only perturb even indices, got n = {}", node.n),
                });
            }
            last = node.n;
        }
        if !self.sigma0.is_finite() {
            return Err(PhaseError::BadData {
                detail: "sigma0 must be finite".into(),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spectral data serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, PhaseError> {
        let data: SpectralData = serde_json::from_str(text)?;
        data.validate()?;
        Ok(data)
    }
}

/// Builds a phase table whose range is guaranteed to bracket `alpha = pi n/2`
/// for all `n <= nmax`.
fn table_for(q: &Potential, nmax: usize, steps: usize) -> Result<(PhaseTable, f64), PhaseError> {
    let c_hi = PI * nmax as f64 / 2.0;
    let mut span = 1.0;
    loop {
        let lo = (PI / 2.0 - span).max(1e-3);
        let hi = c_hi + span;
        let table = PhaseTable::build(q, lo, hi, steps)?;
        let need = table.xi_abs_max() + 1.0;
        if need <= span {
            return Ok((table, need));
        }
        span = need;
    }
}

fn solve_with_table(
    q: &Potential,
    table: &PhaseTable,
    xi_bound: f64,
    n: usize,
    steps: usize,
) -> Result<f64, PhaseError> {
    let c = PI * n as f64 / 2.0;
    let lo = (c - xi_bound).max(table.ks[0]);
    let hi = (c + xi_bound).min(*table.ks.last().unwrap());
    let g_lo = table.alpha_at(q, lo, steps)? - c;
    let g_hi = table.alpha_at(q, hi, steps)? - c;
    if g_lo > 0.0 || g_hi < 0.0 {
        return Err(PhaseError::NoBracket { n });
    }
    let p = refine_root(
        |k| match table.alpha_at(q, k, steps) {
            Ok(a) => a - c,
            Err(_) => f64::NAN,
        },
        lo,
        hi,
        1e-13 * c.max(1.0),
    );
    Ok(p)
}

/// Solves `alpha(p_n) = pi n / 2` for one index.
pub fn solve_pn(q: &Potential, n: usize, steps: usize) -> Result<f64, PhaseError> {
    assert!(n >= 1, "indices are 1-based");
    if !spectra::is_lplus(q, steps)? {
        return Err(PhaseError::NotLPlus);
    }
    let (table, xi_bound) = table_for(q, n, steps)?;
    solve_with_table(q, &table, xi_bound, n, steps)
}

/// Extracts [`SpectralData`] up to `nmax`.
///
/// With `parity = Even` only even indices are solved (and reported); the
/// caller asserts by that choice that `q` is symmetric about 1/2, which makes
/// the odd half redundant. Indices whose `p_n` stays within 1e-8 of the free
/// value are treated as frozen and omitted.
pub fn extract_data(
    q: &Potential,
    nmax: usize,
    parity: Parity,
    steps: usize,
) -> Result<SpectralData, PhaseError> {
    assert!(nmax >= 1);
    if !spectra::is_lplus(q, steps)? {
        return Err(PhaseError::NotLPlus);
    }
    let (table, xi_bound) = table_for(q, nmax, steps)?;
    let indices: Vec<usize> = match parity {
        Parity::Generic => (1..=nmax).collect(),
        Parity::Even => (1..=nmax).filter(|n| n % 2 == 0).collect(),
    };
    let mut perturbed = Vec::new();
    for n in indices {
        let p = solve_with_table(q, &table, xi_bound, n, steps)?;
        if (p - PI * n as f64 / 2.0).abs() > 1e-8 {
            perturbed.push(PerturbedNode { n, p });
        }
    }
    Ok(SpectralData {
        sigma0: q.mean(),
        parity,
        nmax,
        perturbed,
    })
}

/// Solvability check for even data; returns the diagnostic sum.
///
/// Writing `m_n = p_{2n}^2 - sigma0` (the Dirichlet eigenvalues of the
/// mean-removed potential), evenness requires
///
/// ```text
/// sum_n [(-1)^n - cos sqrt(m_n)] / (m_n v'(m_n)) <= 1,
/// v(z) = prod_j (1 - z / m_j).
/// ```
///
/// Frozen indices contribute zero to the sum, and the frozen part of `v` is
/// summed in closed form through `prod_j (1 - z/(pi j)^2) = sin(sqrt z)/sqrt z`,
/// so the result is exact up to the perturbed set.
pub fn validate_even(data: &SpectralData) -> Result<f64, PhaseError> {
    data.validate()?;
    if data.parity != Parity::Even {
        return Err(PhaseError::BadData {
            detail: "validate_even needs parity = even".into(),
        });
    }
    // (global index 2m, shifted eigenvalue m_value)
    let ms: Vec<(usize, f64)> = data
        .perturbed
        .iter()
        .map(|node| (node.n / 2, node.p * node.p - data.sigma0))
        .collect();
    let mut sum = 0.0;
    for &(m, mv) in &ms {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let numer = sign - cg(mv, 1.0);
        // v'(m_v) = -(1/m_v) prod_{j != m} (1 - m_v/m_j): perturbed factors
        // explicitly, frozen tail = sg(m_v,1) with the perturbed free slots
        // divided back out.
        let mut prod = sg(mv, 1.0);
        for &(j, jv) in &ms {
            let free = (PI * j as f64).powi(2);
            prod /= 1.0 - mv / free;
            if j != m {
                prod *= 1.0 - mv / jv;
            }
        }
        let vprime = -prod / mv;
        sum += numer / (mv * vprime);
    }
    if sum <= 1.0 + 1e-9 {
        Ok(sum)
    } else {
        Err(PhaseError::EvenConditionViolated { sum })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const STEPS: usize = 2048;

    #[test]
    fn free_pn_are_half_integers() {
        let q = Potential::zero(8);
        for n in [1, 2, 5, 12] {
            let p = solve_pn(&q, n, 4096).unwrap();
            assert!(
                (p - PI * n as f64 / 2.0).abs() < 1e-10,
                "p_{n} = {p}"
            );
        }
    }

    #[test]
    fn constant_shift_pn_closed_form() {
        // For q = c every p_n = sqrt((pi n/2)^2 + c): the squares are exactly
        // the shifted free eigenvalues of both families.
        let c = 0.3;
        let q = Potential::from_fn(8, |_| c).unwrap();
        let data = extract_data(&q, 8, Parity::Generic, STEPS).unwrap();
        assert_eq!(data.perturbed.len(), 8);
        for node in &data.perturbed {
            let exact = ((PI * node.n as f64 / 2.0).powi(2) + c).sqrt();
            assert!(
                (node.p - exact).abs() < 1e-9,
                "p_{} = {} vs {exact}",
                node.n,
                node.p
            );
        }
        assert!((data.sigma0 - c).abs() < 1e-12);
    }

    #[test]
    fn free_extract_reports_nothing_perturbed() {
        let q = Potential::zero(8);
        let data = extract_data(&q, 10, Parity::Generic, STEPS).unwrap();
        assert!(data.perturbed.is_empty());
    }

    #[test]
    fn pn_squares_match_eigenvalues() {
        let q = Potential::from_fn(65, |x| (2.0 * PI * x).cos() + 0.4).unwrap();
        let data = extract_data(&q, 6, Parity::Generic, STEPS).unwrap();
        let mu = spectra::dirichlet_eigenvalues(&q, 3, STEPS).unwrap();
        let tau = spectra::mixed_eigenvalues(&q, 3, STEPS).unwrap();
        for node in &data.perturbed {
            let lam = node.p * node.p;
            let target = if node.n % 2 == 0 {
                mu[node.n / 2 - 1]
            } else {
                tau[(node.n + 1) / 2 - 1]
            };
            assert!(
                (lam - target).abs() < 1e-7 * target.abs().max(1.0),
                "n = {}: p^2 = {lam} vs {target}",
                node.n
            );
        }
    }

    #[test]
    fn not_lplus_is_refused() {
        let q = Potential::from_fn(8, |_| -3.0).unwrap();
        assert!(matches!(solve_pn(&q, 1, STEPS), Err(PhaseError::NotLPlus)));
        assert!(matches!(
            extract_data(&q, 4, Parity::Generic, STEPS),
            Err(PhaseError::NotLPlus)
        ));
    }

    #[test]
    fn validate_even_accepts_small_shift() {
        let data = SpectralData {
            sigma0: 0.0,
            parity: Parity::Even,
            nmax: 16,
            perturbed: vec![PerturbedNode {
                n: 2,
                p: (PI * PI + 0.5).sqrt(),
            }],
        };
        let sum = validate_even(&data).unwrap();
        assert!((sum - 0.0065).abs() < 5e-4, "sum = {sum}");
    }

    #[test]
    fn validate_even_rejects_deep_drop() {
        // Dragging mu_1 from pi^2 down to 0.5 overshoots the solvable range.
        let data = SpectralData {
            sigma0: 0.0,
            parity: Parity::Even,
            nmax: 16,
            perturbed: vec![PerturbedNode {
                n: 2,
                p: (0.5f64).sqrt(),
            }],
        };
        match validate_even(&data) {
            Err(PhaseError::EvenConditionViolated { sum }) => assert!(sum > 1.0),
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn validate_even_rejects_odd_indices() {
        let data = SpectralData {
            sigma0: 0.0,
            parity: Parity::Even,
            nmax: 8,
            perturbed: vec![PerturbedNode { n: 3, p: 4.8 }],
        };
        assert!(matches!(
            validate_even(&data),
            Err(PhaseError::BadData { .. })
        ));
    }

    #[test]
    fn json_roundtrip() {
        let data = SpectralData {
            sigma0: 0.25,
            parity: Parity::Generic,
            nmax: 16,
            perturbed: vec![
                PerturbedNode { n: 1, p: 1.9 },
                PerturbedNode { n: 2, p: 3.3 },
            ],
        };
        let back = SpectralData::from_json(&data.to_json()).unwrap();
        assert_eq!(data, back);
    }

    #[test]
    fn json_rejects_decreasing_indices() {
        let text = r#"{
            "sigma0": 0.0, "parity": "generic", "nmax": 8,
            "perturbed": [{"n": 3, "p": 4.0}, {"n": 2, "p": 3.0}]
        }"#;
        assert!(matches!(
            SpectralData::from_json(text),
            Err(PhaseError::BadData { .. })
        ));
    }
}
