//! Randomized structural invariants: conservation laws, symmetry relations,
//! analytic bounds, and serialization round trips that must hold for every
//! admissible input, not just the curated fixtures in the unit tests.

use std::f64::consts::PI;

use halfline::phase::{Parity, PerturbedNode, SpectralData};
use halfline::potential::Potential;
use halfline::{ode, phase, recover, scattering, smap, spectra, Complex64};
use proptest::prelude::*;

fn arb_values() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-3.0..3.0f64, 9..33)
}

fn arb_potential() -> impl Strategy<Value = Potential> {
    arb_values().prop_map(|v| Potential::new(v).unwrap())
}

/// Offsets that keep a perturbed node clearly away from the free lattice
/// (the reconstruction treats sub-1e-12 displacements as frozen).
fn arb_offset() -> impl Strategy<Value = f64> {
    (1e-3..0.3f64, proptest::bool::ANY).prop_map(|(d, neg)| if neg { -d } else { d })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The two canonical solutions keep unit Wronskian at every node.
    #[test]
    fn wronskian_is_one_at_every_node(
        q in arb_potential(),
        re in -8.0..8.0f64,
        im in -2.0..2.0f64,
    ) {
        let k = Complex64::new(re, im);
        let phi = ode::integrate_phi(&q, k, 2048).unwrap();
        let theta = ode::integrate_theta(&q, k, 2048).unwrap();
        prop_assert_eq!(phi.y[0], Complex64::new(0.0, 0.0));
        prop_assert_eq!(phi.dy[0], Complex64::new(1.0, 0.0));
        prop_assert_eq!(theta.y[0], Complex64::new(1.0, 0.0));
        prop_assert_eq!(theta.dy[0], Complex64::new(0.0, 0.0));
        for i in 0..phi.y.len() {
            let w = theta.y[i] * phi.dy[i] - theta.dy[i] * phi.y[i];
            let dev = (w - Complex64::new(1.0, 0.0)).norm();
            prop_assert!(dev < 1e-9, "node {i}: Wronskian off by {dev:e}");
        }
    }

    /// Regular solution obeys the standard growth bound in x and k.
    #[test]
    fn phi_respects_the_growth_bound(
        q in arb_potential(),
        re in -6.0..6.0f64,
        im in -3.0..3.0f64,
    ) {
        let k = Complex64::new(re, im);
        let omega = q.l1_norm().min(q.l1_norm() / k.norm().max(1e-12));
        let phi = ode::integrate_phi(&q, k, 2048).unwrap();
        let denom = k.norm().max(1.0);
        for i in (0..phi.y.len()).step_by(64) {
            let x = phi.x(i);
            let bound = (x * im.abs() + omega).exp() / denom;
            prop_assert!(
                phi.y[i].norm() <= bound * (1.0 + 1e-8) + 1e-12,
                "x = {x}: |phi| = {} exceeds {bound}",
                phi.y[i].norm()
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// S is unimodular for every real frequency and every real potential.
    #[test]
    fn smatrix_is_unimodular(q in arb_potential(), k in 0.3..25.0f64) {
        let s = scattering::smatrix(&q, k, 1024).unwrap();
        prop_assert!((s.norm() - 1.0).abs() < 1e-10);
    }

    /// conj(psi(k)) = psi(-conj(k)): reality of q seen in the Jost function.
    #[test]
    fn jost_conjugate_symmetry(
        q in arb_potential(),
        re in -8.0..8.0f64,
        im in -2.0..2.0f64,
    ) {
        let k = Complex64::new(re, im);
        let a = scattering::jost(&q, k, 512).unwrap().psi.conj();
        let b = scattering::jost(&q, -k.conj(), 512).unwrap().psi;
        prop_assert!((a - b).norm() < 1e-10);
    }

    /// psi is real on the imaginary axis.
    #[test]
    fn jost_is_real_on_the_imaginary_axis(q in arb_potential(), r in 0.05..4.0f64) {
        let psi = scattering::jost(&q, Complex64::new(0.0, r), 512).unwrap().psi;
        prop_assert!(psi.im.abs() < 1e-11, "Im psi(ir) = {:e}", psi.im);
    }

    /// |psi - 1| obeys the standard perturbative bound.
    #[test]
    fn jost_respects_the_defect_bound(
        q in arb_potential(),
        re in -6.0..6.0f64,
        im in -3.0..3.0f64,
    ) {
        let k = Complex64::new(re, im);
        if k.norm() < 0.05 {
            return Ok(());
        }
        let omega = q.l1_norm().min(q.l1_norm() / k.norm());
        let bound = omega * (im.abs() - im + omega).exp();
        let psi = scattering::jost(&q, k, 2048).unwrap().psi;
        prop_assert!(
            (psi - Complex64::new(1.0, 0.0)).norm() <= bound * (1.0 + 1e-8) + 1e-12,
            "|psi - 1| = {} exceeds {bound}",
            (psi - Complex64::new(1.0, 0.0)).norm()
        );
    }

    /// Gradient kernels of the sampled map are real at the free point.
    /// The imaginary residue is pure integrator phase noise (it grows like
    /// r^5 h^4), so the check runs at the production step count.
    #[test]
    fn free_gradient_kernel_is_real(r in 0.3..6.3f64) {
        let zero = Potential::zero(17);
        let kernel = smap::psi_gradient(&zero, r, 65, 4096).unwrap();
        for g in &kernel {
            prop_assert!(g.im.abs() < 1e-10);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Dirichlet and mixed eigenvalues interlace strictly as ordered reals.
    #[test]
    fn spectra_interlace_strictly(q in arb_potential()) {
        let mu = spectra::dirichlet_eigenvalues(&q, 6, 512).unwrap();
        let tau = spectra::mixed_eigenvalues(&q, 6, 512).unwrap();
        for n in 0..6 {
            prop_assert!(tau[n] < mu[n], "tau_{} >= mu_{}", n + 1, n + 1);
            if n + 1 < 6 {
                prop_assert!(mu[n] < tau[n + 1], "mu_{} >= tau_{}", n + 1, n + 2);
            }
        }
    }

    /// k - xi(k) is strictly increasing along a real frequency grid.
    #[test]
    fn alpha_increases_with_k(q in arb_potential()) {
        let ks: Vec<f64> = (2..=80).map(|i| 0.25 * i as f64).collect();
        let xi = scattering::phase_shift(&q, &ks, 1024).unwrap();
        for i in 1..ks.len() {
            let prev = ks[i - 1] - xi[i - 1];
            let next = ks[i] - xi[i];
            prop_assert!(next > prev, "alpha not increasing at k = {}", ks[i]);
        }
    }

    /// Bound states come with positive norming constants, polished zeros,
    /// and the alternating sign of psi(-k_j).
    #[test]
    fn bound_state_set_is_well_formed(
        shape in arb_values(),
        depth in 0.5..20.0f64,
    ) {
        let n = shape.len();
        let values: Vec<f64> = shape
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let x = i as f64 / (n - 1) as f64;
                -depth * (PI * x).sin().powi(2) + 0.1 * v
            })
            .collect();
        let q = Potential::new(values).unwrap();
        let bs = scattering::bound_states(&q, 2048).unwrap();
        for (j, k) in bs.ks.iter().enumerate() {
            prop_assert!(k.re == 0.0 && k.im > 0.0);
            let at_zero = scattering::jost(&q, *k, 2048).unwrap().psi;
            prop_assert!(at_zero.norm() < 1e-8, "unpolished zero: {:e}", at_zero.norm());
            prop_assert!(bs.norming[j] > 0.0);
            let mirrored = scattering::jost(&q, -*k, 2048).unwrap().psi;
            let sign = if (j + 1) % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert!(
                sign * mirrored.re > 0.0,
                "sign condition fails at j = {}: psi(-k_j) = {}",
                j + 1,
                mirrored.re
            );
        }
    }

    /// Enlarging nmax with nodes pinned at the free lattice is a no-op.
    #[test]
    fn frozen_tail_is_inert(d in arb_offset()) {
        let small = SpectralData {
            sigma0: 0.0,
            parity: Parity::Generic,
            nmax: 8,
            perturbed: vec![PerturbedNode { n: 1, p: PI / 2.0 + d }],
        };
        let large = SpectralData {
            sigma0: 0.0,
            parity: Parity::Generic,
            nmax: 16,
            perturbed: vec![
                PerturbedNode { n: 1, p: PI / 2.0 + d },
                PerturbedNode { n: 9, p: PI * 9.0 / 2.0 },
            ],
        };
        let qa = recover::recover_generic(&small, 129).unwrap();
        let qb = recover::recover_generic(&large, 129).unwrap();
        for (a, b) in qa.values().iter().zip(qb.values()) {
            prop_assert!((a - b).abs() < 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// The cosine transform is exactly linear in the potential.
    #[test]
    fn cosine_transform_is_linear(
        n in 9..33usize,
        seed in proptest::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 33),
        a in -2.0..2.0f64,
        b in -2.0..2.0f64,
        k in -20.0..20.0f64,
    ) {
        let v1: Vec<f64> = seed.iter().take(n).map(|p| p.0).collect();
        let v2: Vec<f64> = seed.iter().take(n).map(|p| p.1).collect();
        let combo: Vec<f64> = v1.iter().zip(&v2).map(|(x, y)| a * x + b * y).collect();
        let q1 = Potential::new(v1).unwrap();
        let q2 = Potential::new(v2).unwrap();
        let q12 = Potential::new(combo).unwrap();
        let lhs = a * q1.cosine_transform(k) + b * q2.cosine_transform(k);
        let rhs = q12.cosine_transform(k);
        prop_assert!((lhs - rhs).abs() < 1e-12, "lhs = {lhs}, rhs = {rhs}");
    }

    /// |q_hat_c(k)| <= ||q||_1, and evaluation past the support is exact zero.
    #[test]
    fn cosine_transform_bound_and_support(q in arb_potential(), k in -40.0..40.0f64, x in 1.0..50.0f64) {
        prop_assert!(q.cosine_transform(k).abs() <= q.l1_norm() + 1e-12);
        if x > 1.0 {
            prop_assert_eq!(q.eval(x), 0.0);
        }
    }

    /// Potential JSON round trip reproduces every node bit for bit.
    #[test]
    fn potential_json_roundtrip_is_exact(q in arb_potential()) {
        let back = Potential::from_json(&q.to_json()).unwrap();
        prop_assert_eq!(back.values(), q.values());
    }

    /// Spectral-data JSON round trip is exact, including the floats.
    #[test]
    fn spectral_data_json_roundtrip_is_exact(
        sigma0 in -3.0..3.0f64,
        n in 1..16usize,
        d in arb_offset(),
        even in proptest::bool::ANY,
    ) {
        let (parity, idx) = if even {
            (Parity::Even, 2 * n)
        } else {
            (Parity::Generic, n)
        };
        let data = SpectralData {
            sigma0,
            parity,
            nmax: 32,
            perturbed: vec![PerturbedNode { n: idx, p: PI * idx as f64 / 2.0 + d }],
        };
        let back = SpectralData::from_json(&data.to_json()).unwrap();
        prop_assert_eq!(back, data);
    }
}

/// For a smooth potential the Dirichlet asymptotics settle onto the free
/// lattice shifted by the mean: the defects decay visibly along n.
#[test]
fn dirichlet_defects_decay_for_smooth_bumps() {
    let q = Potential::from_fn(257, |x| 1.5 * (PI * x).sin().powi(2)).unwrap();
    let sigma0 = q.mean();
    let mu = spectra::dirichlet_eigenvalues(&q, 10, 4096).unwrap();
    let defect =
        |n: usize| (mu[n - 1] - (PI * n as f64).powi(2) - sigma0).abs();
    let head = defect(1).max(defect(2));
    let tail = defect(9).max(defect(10));
    assert!(
        tail < 0.05 * head,
        "defects do not decay: head {head:e}, tail {tail:e}"
    );
    let partial: f64 = (5..=10).map(|n| defect(n).powi(2)).sum();
    assert!(partial < 1e-6, "tail of squared defects is {partial:e}");
}

/// Round trip on the data side: extract -> recover -> extract.
#[test]
fn data_fixed_point_roundtrip() {
    let data = SpectralData {
        sigma0: 0.2,
        parity: Parity::Generic,
        nmax: 8,
        perturbed: vec![
            PerturbedNode { n: 1, p: (PI / 2.0f64).powi(2).sqrt() + 0.2 },
            PerturbedNode { n: 2, p: PI + 0.1 },
        ],
    };
    let q = recover::recover_generic(&data, 2049).unwrap();
    let back = phase::extract_data(&q, 8, Parity::Generic, 4096).unwrap();
    assert!((back.sigma0 - data.sigma0).abs() < 1e-5);
    for node in &data.perturbed {
        let found = back
            .perturbed
            .iter()
            .find(|m| m.n == node.n)
            .expect("perturbed index lost in the round trip");
        assert!(
            (found.p - node.p).abs() < 1e-5,
            "p_{} drifted: {} vs {}",
            node.n,
            found.p,
            node.p
        );
    }
}
