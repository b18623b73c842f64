//! Small shared numerics: trigonometric basis functions of an eigenvalue
//! parameter, trapezoid sums, and safeguarded root refinement.

/// cos(sqrt(g) t), continued through g <= 0 as cosh(sqrt(-g) t).
///
/// Entire in g for fixed t, so the two branches join smoothly at g = 0.
pub(crate) fn cg(g: f64, t: f64) -> f64 {
    if g >= 0.0 {
        (g.sqrt() * t).cos()
    } else {
        ((-g).sqrt() * t).cosh()
    }
}

/// sin(sqrt(g) t)/sqrt(g), continued as t at g = 0 and sinh(sqrt(-g) t)/sqrt(-g)
/// below.
pub(crate) fn sg(g: f64, t: f64) -> f64 {
    if g == 0.0 {
        return t;
    }
    if g > 0.0 {
        let w = g.sqrt();
        (w * t).sin() / w
    } else {
        let w = (-g).sqrt();
        (w * t).sinh() / w
    }
}

/// d/dt of `cg`, which is -g * sg(g, t) on both branches.
pub(crate) fn cg_dt(g: f64, t: f64) -> f64 {
    -g * sg(g, t)
}

/// d/dt of `sg`, which is cg(g, t) on both branches.
pub(crate) fn sg_dt(g: f64, t: f64) -> f64 {
    cg(g, t)
}

/// Trapezoid sum of uniformly sampled values over an interval of length `len`.
pub(crate) fn trapezoid(values: &[f64], len: f64) -> f64 {
    let m = values.len() - 1;
    let h = len / m as f64;
    let inner: f64 = values[1..m].iter().sum();
    h * (0.5 * (values[0] + values[m]) + inner)
}

/// Bisection to `|hi - lo| <= width`, then a few safeguarded secant steps.
///
/// `f(lo)` and `f(hi)` must have opposite signs. The secant polish keeps the
/// bracket, so the result never escapes [lo, hi]; it typically lands within a
/// few ulps of the root even when `width` is loose.
pub(crate) fn refine_root(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, width: f64) -> f64 {
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    debug_assert!(fa * fb <= 0.0, "refine_root needs a sign change");
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    while b - a > width {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    for _ in 0..4 {
        let denom = fb - fa;
        if denom == 0.0 {
            break;
        }
        let s = a - fa * (b - a) / denom;
        if !(s > a && s < b) {
            break;
        }
        let fs = f(s);
        if fs == 0.0 {
            return s;
        }
        if fa * fs < 0.0 {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
    }
    // Weight the endpoints by the residuals for the final estimate.
    if fb != fa {
        a - fa * (b - a) / (fb - fa)
    } else {
        0.5 * (a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cg_sg_match_series_near_zero() {
        // Both functions are entire in g; crossing g = 0 must be seamless.
        for &t in &[0.3, 1.0, 2.0] {
            for &g in &[-1e-9, -1e-12, 0.0, 1e-12, 1e-9] {
                let c_series = 1.0 - g * t * t / 2.0;
                let s_series = t - g * t * t * t / 6.0;
                assert!((cg(g, t) - c_series).abs() < 1e-14);
                assert!((sg(g, t) - s_series).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn cg_sg_derivative_identities() {
        // Central differences in t against the closed-form derivatives.
        let h = 1e-6;
        for &g in &[-3.0, -0.4, 0.0, 0.7, 9.0, 40.0] {
            for &t in &[0.2, 1.0, 1.7] {
                let dc = (cg(g, t + h) - cg(g, t - h)) / (2.0 * h);
                let ds = (sg(g, t + h) - sg(g, t - h)) / (2.0 * h);
                assert!((dc - cg_dt(g, t)).abs() < 1e-7 * (1.0 + dc.abs()));
                assert!((ds - sg_dt(g, t)).abs() < 1e-7 * (1.0 + ds.abs()));
            }
        }
    }

    #[test]
    fn pythagorean_identity() {
        // cg^2 + g sg^2 = 1 on both branches.
        for &g in &[-5.0, -1.0, 0.0, 2.0, 30.0] {
            for &t in &[0.1, 0.9, 2.0] {
                let c = cg(g, t);
                let s = sg(g, t);
                assert!((c * c + g * s * s - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn trapezoid_is_exact_for_linear() {
        let vals: Vec<f64> = (0..=10).map(|i| 3.0 * i as f64 / 10.0 - 1.0).collect();
        assert!((trapezoid(&vals, 1.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn refine_root_finds_cosine_zero() {
        let r = refine_root(|x| x.cos(), 1.0, 2.0, 1e-6);
        assert!((r - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }
}
