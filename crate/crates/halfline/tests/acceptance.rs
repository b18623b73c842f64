//! End-to-end acceptance gate. Each test exercises one shipping criterion at
//! its stated tolerance and wall-clock budget and prints a single PASS/FAIL
//! line (visible with `--nocapture`); the assertions carry the same numbers.

use std::f64::consts::PI;
use std::time::Instant;

use halfline::dressing::{self, DressingMode, DressingParams};
use halfline::phase::{self, Parity, PerturbedNode, SpectralData};
use halfline::potential::Potential;
use halfline::smap::{self, SMatrixSamples};
use halfline::{ode, recover, scattering, spectra, Complex64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn trapezoid(values: &[f64]) -> f64 {
    let h = 1.0 / (values.len() - 1) as f64;
    let interior: f64 = values[1..values.len() - 1].iter().sum();
    h * (interior + 0.5 * (values[0] + values[values.len() - 1]))
}

fn report(tag: &str, ok: bool, detail: &str) {
    println!("{tag} {}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{tag}: {detail}");
}

fn smooth_bump(grid_n: usize, amp: f64) -> Potential {
    Potential::from_fn(grid_n, |x| amp * (PI * x).sin().powi(2)).unwrap()
}

#[test]
fn c01_free_theory_is_exact() {
    let t0 = Instant::now();
    let q = Potential::zero(33);
    let mut dev = 0.0f64;

    for &k in &[0.7, 2.3, 9.0, 15.0] {
        let jv = scattering::jost(&q, Complex64::new(k, 0.0), 4096).unwrap();
        dev = dev.max((jv.psi - Complex64::new(1.0, 0.0)).norm());
        let s = scattering::smatrix(&q, k, 4096).unwrap();
        dev = dev.max((s - Complex64::new(1.0, 0.0)).norm());
    }
    let ks: Vec<f64> = (1..=40).map(|i| 0.35 * i as f64).collect();
    for xi in scattering::phase_shift(&q, &ks, 4096).unwrap() {
        dev = dev.max(xi.abs());
    }
    let mu = spectra::dirichlet_eigenvalues(&q, 6, 16384).unwrap();
    let tau = spectra::mixed_eigenvalues(&q, 6, 16384).unwrap();
    for n in 1..=6 {
        dev = dev.max((mu[n - 1] - (PI * n as f64).powi(2)).abs());
        dev = dev.max((tau[n - 1] - (PI * (n as f64 - 0.5)).powi(2)).abs());
    }
    for n in 1..=6 {
        let p = phase::solve_pn(&q, n, 4096).unwrap();
        dev = dev.max((p - PI * n as f64 / 2.0).abs());
    }

    let dt = t0.elapsed().as_secs_f64();
    report(
        "C01",
        dev < 1e-10 && dt < 1.0,
        &format!("free theory: max deviation {dev:.2e} (tol 1e-10), {dt:.2} s (budget 1 s)"),
    );
}

#[test]
fn c02_phase_roots_square_to_eigenvalues() {
    let t0 = Instant::now();
    let q = smooth_bump(257, 1.2);
    let steps = 16384;
    let data = phase::extract_data(&q, 32, Parity::Generic, steps).unwrap();
    let p = |n: usize| {
        data.perturbed
            .iter()
            .find(|m| m.n == n)
            .map_or(PI * n as f64 / 2.0, |m| m.p)
    };
    let mu = spectra::dirichlet_eigenvalues(&q, 16, steps).unwrap();
    let tau = spectra::mixed_eigenvalues(&q, 16, steps).unwrap();
    let mut dev = 0.0f64;
    for n in 1..=16 {
        dev = dev.max((p(2 * n).powi(2) - mu[n - 1]).abs());
        dev = dev.max((p(2 * n - 1).powi(2) - tau[n - 1]).abs());
    }
    let dt = t0.elapsed().as_secs_f64();
    report(
        "C02",
        dev < 1e-7 && dt < 30.0,
        &format!("p_n^2 vs eigenvalues (n <= 16): max gap {dev:.2e} (tol 1e-7), {dt:.1} s (budget 30 s)"),
    );
}

#[test]
fn c03_single_node_matches_closed_form() {
    let t0 = Instant::now();
    let gamma1 = 4.0f64;
    let data = SpectralData {
        sigma0: 0.0,
        parity: Parity::Generic,
        nmax: 16,
        perturbed: vec![PerturbedNode { n: 1, p: gamma1.sqrt() }],
    };
    let q = recover::recover_generic(&data, 2049).unwrap();

    // Closed form: q = -2 (ln w)'' for the Wronskian w of the two explicit
    // trig solutions attached to gamma_1 and the free gamma_1.
    let a = gamma1.sqrt();
    let b = PI / 2.0;
    let mut sup = 0.0f64;
    for (i, x) in q.nodes().enumerate() {
        let u = (a * (1.0 - x)).sin() / a.sin();
        let du = -a * (a * (1.0 - x)).cos() / a.sin();
        let v = (b * x).sin() / b;
        let dv = (b * x).cos();
        let w = u * dv - du * v;
        let dw = (gamma1 - b * b) * u * v;
        let ddw = (gamma1 - b * b) * (du * v + u * dv);
        let want = -2.0 * (ddw * w - dw * dw) / (w * w);
        sup = sup.max((q.values()[i] - want).abs());
    }
    let dt = t0.elapsed().as_secs_f64();
    report(
        "C03",
        sup < 1e-8 && dt < 5.0,
        &format!("single-node reconstruction: sup error {sup:.2e} on 2049 nodes (tol 1e-8), {dt:.2} s (budget 5 s)"),
    );
}

#[test]
fn c04_data_roundtrip() {
    let t0 = Instant::now();
    let sigma0 = 0.3;
    let g1 = (PI / 2.0).powi(2) + 0.5;
    let g2 = PI.powi(2) + 0.3;
    let data = SpectralData {
        sigma0,
        parity: Parity::Generic,
        nmax: 16,
        perturbed: vec![
            PerturbedNode { n: 1, p: (g1 + sigma0).sqrt() },
            PerturbedNode { n: 2, p: (g2 + sigma0).sqrt() },
        ],
    };
    let q = recover::recover_generic(&data, 2049).unwrap();
    let mean_dev = (q.mean() - sigma0).abs();

    let back = phase::extract_data(&q, 8, Parity::Generic, 8192).unwrap();
    // A node left at the free lattice still shifts in p: adding the constant
    // sigma0 moves every eigenvalue by exactly sigma0, so p_n^2 = gamma_n + sigma0.
    let free_p = |n: usize| ((PI * n as f64 / 2.0).powi(2) + sigma0).sqrt();
    let p_out = |n: usize| {
        back.perturbed
            .iter()
            .find(|m| m.n == n)
            .map_or(free_p(n), |m| m.p)
    };
    let p_in = |n: usize| {
        data.perturbed
            .iter()
            .find(|m| m.n == n)
            .map_or(free_p(n), |m| m.p)
    };
    let mut dev = 0.0f64;
    for n in 1..=8 {
        dev = dev.max((p_out(n) - p_in(n)).abs());
    }
    let dt = t0.elapsed().as_secs_f64();
    report(
        "C04",
        dev < 1e-5 && mean_dev < 1e-5 && dt < 60.0,
        &format!(
            "recover -> re-extract: max |dp_n| {dev:.2e} (tol 1e-5), mean off by {mean_dev:.2e} (tol 1e-5), {dt:.1} s (budget 60 s)"
        ),
    );
}

#[test]
fn c05_unitarity_and_born_asymptotics() {
    let t0 = Instant::now();
    let pots = [
        smooth_bump(257, 1.2),
        Potential::from_fn(129, |_| -1.0).unwrap(),
        Potential::from_fn(257, |x| 0.8 * (2.0 * PI * x).sin() + 0.3).unwrap(),
    ];
    let steps = 16384;
    let mut uni_dev = 0.0f64;
    let mut c_low = 0.0f64;
    let mut c_high = 0.0f64;
    let mut bound_ok = true;

    for q in &pots {
        let q0 = q.mean();
        let born_defect = |k: f64| -> f64 {
            let s = scattering::smatrix(q, k, steps).unwrap();
            let born = (q0 - q.cosine_transform(k)) / (Complex64::I * k);
            (s - Complex64::new(1.0, 0.0) - born).norm()
        };
        for i in 0..150 {
            let k = 0.5 + 49.5 * i as f64 / 149.0;
            let s = scattering::smatrix(q, k, steps).unwrap();
            uni_dev = uni_dev.max((s.norm() - 1.0).abs());
        }
        let mut ca = 0.0f64;
        for i in 0..=50 {
            let k = 25.0 + 25.0 * i as f64 / 50.0;
            ca = ca.max(k * k * born_defect(k));
        }
        let mut cb = 0.0f64;
        for i in 0..=50 {
            let k = 50.0 + 50.0 * i as f64 / 50.0;
            let defect = born_defect(k);
            cb = cb.max(k * k * defect);
            // The constant fitted on [25,50] must keep bounding the defect
            // on the doubled range (with modest slack for the 1/k^3 term).
            if defect > 1.5 * ca / (k * k) + 1e-11 {
                bound_ok = false;
            }
        }
        c_low = c_low.max(ca);
        c_high = c_high.max(cb);
    }
    let stable = c_high <= 1.5 * c_low + 1e-10 && c_low <= 1.5 * c_high + 1e-10;
    let dt = t0.elapsed().as_secs_f64();
    report(
        "C05",
        uni_dev < 1e-9 && bound_ok && stable,
        &format!(
            "unitarity max ||S|-1| {uni_dev:.2e} (tol 1e-9); Born constant {c_low:.3} vs {c_high:.3} under range doubling, {dt:.1} s"
        ),
    );
}

#[test]
fn c06_gradient_kernels_match_finite_differences() {
    let t0 = Instant::now();
    let grid_n = 2049;
    let steps = 8192;
    let q = Potential::from_fn(grid_n, |x| 0.25 * (PI * x).sin() + 0.2 * x * (1.0 - x)).unwrap();
    let rs = [1.3, 2.9, 4.6];
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let eps = 1e-4;
    let h = 1.0 / (grid_n - 1) as f64;
    let mut worst = 0.0f64;

    let s_of = |values: &[f64], r: f64| -> Complex64 {
        let p = Potential::new(values.to_vec()).unwrap();
        let s = scattering::smatrix(&p, r, steps).unwrap();
        Complex64::new(p.mean(), 0.0) - Complex64::I * r * (s - Complex64::new(1.0, 0.0))
    };

    for dir in 0..10 {
        let coefs: Vec<f64> = (0..=8).map(|_| rng.random_range(-1.0..1.0)).collect();
        let d: Vec<f64> = (0..grid_n)
            .map(|i| {
                let x = i as f64 * h;
                coefs[0] / 2.0
                    + (1..=8)
                        .map(|m| coefs[m] * (m as f64 * PI * x).cos() / m as f64)
                        .sum::<f64>()
            })
            .collect();
        let r = rs[dir % rs.len()];

        let kernel = smap::psi_gradient(&q, r, grid_n, steps).unwrap();
        let mut pair = Complex64::new(0.0, 0.0);
        for i in 0..grid_n {
            let w = if i == 0 || i == grid_n - 1 { 0.5 * h } else { h };
            pair += kernel[i] * d[i] * w;
        }

        let plus: Vec<f64> = q.values().iter().zip(&d).map(|(v, di)| v + eps * di).collect();
        let minus: Vec<f64> = q.values().iter().zip(&d).map(|(v, di)| v - eps * di).collect();
        let fd = (s_of(&plus, r) - s_of(&minus, r)) / (2.0 * eps);

        let rel = (pair - fd).norm() / fd.norm();
        worst = worst.max(rel);
    }
    let dt = t0.elapsed().as_secs_f64();
    report(
        "C06",
        worst < 1e-5,
        &format!("gradient kernels vs central differences: worst relative error {worst:.2e} over 10 directions (tol 1e-5), {dt:.1} s"),
    );
}

#[test]
fn c07_resonance_identities_and_tail_control() {
    let t0 = Instant::now();
    let q = Potential::from_fn(257, |_| -1.0).unwrap();
    let r = 1.0;
    let steps = 16384;
    let kstar = Complex64::new(0.0, r);

    // Growing-mode identity at the zero: phi(x, ir) is pure e^{rx} past the
    // support, pinned by phi'(1) = r phi(1) and phi(1) = psi(ir) e^r / 2r
    // (the growing coefficient is (ik phi - phi') e^{-ik} / 2ik at x = 1).
    let phi = ode::integrate_phi(&q, kstar, steps).unwrap();
    let (phi1, dphi1) = phi.boundary();
    let psi_at = scattering::jost(&q, kstar, steps).unwrap().psi;
    let m2_a = (dphi1 - Complex64::new(r, 0.0) * phi1).norm() / dphi1.norm();
    let m2_b = (phi1 - psi_at * (r.exp() / (2.0 * r))).norm() / phi1.norm();

    // Derivative identity: phi^2(1) - 2r int phi^2 = i e^{-r} psi'(-ir) phi(1).
    let sq: Vec<f64> = phi.y.iter().map(|z| (z * z).re).collect();
    let lhs = (phi1 * phi1).re - 2.0 * r * trapezoid(&sq);
    let dpsi = scattering::jost(&q, -kstar, steps).unwrap().dpsi_dk;
    let rhs = (Complex64::I * (-r).exp() * dpsi * phi1).re;
    let j2 = (lhs - rhs).abs() / lhs.abs();

    // Support preservation with c = c*.
    let cstar = dressing::cstar(&q, r, steps).unwrap();
    let d = dressing::dress(
        &q,
        &DressingParams { r, mode: DressingMode::ExplicitC(cstar) },
        2.0,
        4096,
    )
    .unwrap();
    let mut leak = 0.0f64;
    for (i, &v) in d.values().iter().enumerate() {
        if i > 4096 {
            leak = leak.max(v.abs());
        }
    }

    // Tail rate with c = 2c*: log|q_o| decays at slope -2r on [5, 10].
    let d2 = dressing::dress(
        &q,
        &DressingParams { r, mode: DressingMode::ExplicitC(2.0 * cstar) },
        10.0,
        2048,
    )
    .unwrap();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (i, x) in d2.nodes().enumerate() {
        if (5.0..=10.0).contains(&x) && d2.values()[i].abs() > 1e-280 {
            xs.push(x);
            ys.push(d2.values()[i].abs().ln());
        }
    }
    let n = xs.len() as f64;
    let (sx, sy) = (xs.iter().sum::<f64>(), ys.iter().sum::<f64>());
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| x * y).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let rate_dev = (slope + 2.0 * r).abs() / (2.0 * r);

    let dt = t0.elapsed().as_secs_f64();
    let ids = m2_a.max(m2_b).max(j2);
    report(
        "C07",
        ids < 1e-7 && leak < 1e-6 && rate_dev < 0.02,
        &format!(
            "resonance identities rel {ids:.2e} (tol 1e-7); c* tail {leak:.2e} on (1,2] (tol 1e-6); 2c* decay slope {slope:.4} vs -2 ({:.2}%), {dt:.1} s",
            100.0 * rate_dev
        ),
    );
}

#[test]
fn c08_dressed_jost_factorizes() {
    let t0 = Instant::now();
    let q = Potential::from_fn(257, |_| -1.0).unwrap();
    let r = 1.0;
    let qs = dressing::dress_support_preserving(&q, r, 8192).unwrap();
    let kstar = Complex64::new(0.0, r);
    let mut dev = 0.0f64;
    for i in 0..20 {
        let k = Complex64::new(0.5 + 0.5 * i as f64, 0.0);
        let lhs = scattering::jost(&qs, k, 8192).unwrap().psi;
        let base = scattering::jost(&q, k, 8192).unwrap().psi;
        let rhs = base * (k - kstar) / (k + kstar);
        dev = dev.max((lhs - rhs).norm());
    }
    let dt = t0.elapsed().as_secs_f64();
    report(
        "C08",
        dev < 1e-5,
        &format!("dressed Jost factorization on 20 real k: max deviation {dev:.2e} (tol 1e-5), {dt:.1} s"),
    );
}

#[test]
fn c09_newton_inversion_at_depth_64() {
    let t0 = Instant::now();
    let grid_n = 2049;
    let steps = 8192;
    let q = smooth_bump(grid_n, 0.45);
    let rs: Vec<f64> = (1..=64)
        .map(|n| PI * n as f64 / 2.0 + 0.1 * if n % 2 == 0 { 1.0 } else { -1.0 })
        .collect();
    let (s0, svals) = smap::psi_map(&q, &rs, steps).unwrap();
    let samples = SMatrixSamples { rs, svals };

    let out = smap::newton_invert(&samples, s0, 20, grid_n, steps).unwrap();
    let diff_sq: Vec<f64> = q
        .values()
        .iter()
        .zip(out.q.values())
        .map(|(a, b)| (a - b) * (a - b))
        .collect();
    let l2 = trapezoid(&diff_sq).sqrt();
    let dt = t0.elapsed().as_secs_f64();
    report(
        "C09",
        l2 < 1e-4 && out.iterations <= 20 && dt < 300.0,
        &format!(
            "Newton inversion, 64 samples: L2 error {l2:.2e} (tol 1e-4) in {} iterations (residual {:.1e}), {dt:.1} s (budget 300 s)",
            out.iterations, out.residual
        ),
    );
}

#[test]
fn c10_even_pipeline() {
    let t0 = Instant::now();
    let p2 = 3.2;
    let data = SpectralData {
        sigma0: 0.0,
        parity: Parity::Even,
        nmax: 16,
        perturbed: vec![PerturbedNode { n: 2, p: p2 }],
    };
    phase::validate_even(&data).unwrap();
    let q = recover::recover_even(&data, 2049).unwrap();

    let mut asym = 0.0f64;
    let v = q.values();
    for i in 0..v.len() {
        asym = asym.max((v[i] - v[v.len() - 1 - i]).abs());
    }

    let mu = spectra::dirichlet_eigenvalues(&q, 6, 16384).unwrap();
    let mut spec_dev = (mu[0] - p2 * p2).abs();
    for n in 2..=6 {
        spec_dev = spec_dev.max((mu[n - 1] - (PI * n as f64).powi(2)).abs());
    }
    let dt = t0.elapsed().as_secs_f64();
    report(
        "C10",
        asym < 1e-6 && spec_dev < 1e-6,
        &format!(
            "even pipeline: asymmetry {asym:.2e} (tol 1e-6), Dirichlet spectrum off by {spec_dev:.2e} (tol 1e-6), {dt:.1} s"
        ),
    );
}

#[test]
fn c11_interlacing_and_interpolation() {
    let t0 = Instant::now();
    let pots = [
        smooth_bump(257, 1.2),
        Potential::from_fn(129, |_| -1.0).unwrap(),
        Potential::from_fn(257, |x| 0.8 * (2.0 * PI * x).sin() + 0.3).unwrap(),
    ];
    let mut interlaced = true;
    for q in &pots {
        let mu = spectra::dirichlet_eigenvalues(q, 32, 8192).unwrap();
        let tau = spectra::mixed_eigenvalues(q, 32, 8192).unwrap();
        for n in 0..32 {
            if !(tau[n] < mu[n]) || (n + 1 < 32 && !(mu[n] < tau[n + 1])) {
                interlaced = false;
            }
        }
    }

    let even = smooth_bump(257, 0.8);
    let steps = 8192;
    let mut series_dev = 0.0f64;
    for &lambda in &[-2.0, 0.37, 3.3, 7.9] {
        let series = recover::interpolate_phi_prime(&even, lambda, 64, steps).unwrap();
        let k = if lambda >= 0.0 {
            Complex64::new(lambda.sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (-lambda).sqrt())
        };
        let direct = ode::integrate_phi(&even, k, steps).unwrap().boundary().1.re;
        series_dev = series_dev.max((series - direct).abs() / direct.abs().max(1.0));
    }
    let dt = t0.elapsed().as_secs_f64();
    report(
        "C11",
        interlaced && series_dev < 1e-4,
        &format!(
            "interlacing exact to n = 32 on 3 potentials; interpolation series off by {series_dev:.2e} at nmax = 64 (tol 1e-4), {dt:.1} s"
        ),
    );
}
