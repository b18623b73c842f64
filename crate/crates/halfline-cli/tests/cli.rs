//! End-to-end checks of the binary: every subcommand is driven through real
//! files, bad inputs must fail with a nonzero exit, and repeated runs must
//! produce byte-identical output.

use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use halfline::phase::{Parity, PerturbedNode, SpectralData};
use halfline::potential::Potential;
use halfline::smap::{self, SMatrixSamples};

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::create_dir_all(&dir).unwrap();
    dir
}

/// Binary invocation with a clean environment for the knobs under test.
fn halfline_cmd() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_halfline"));
    for var in [
        "HALFLINE_ODE_STEPS",
        "HALFLINE_GRID_N",
        "HALFLINE_NMAX",
        "HALFLINE_SEED",
    ] {
        cmd.env_remove(var);
    }
    cmd
}

fn run_ok(args: &[&str]) -> Output {
    let out = halfline_cmd().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "expected success for {args:?}\nstderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn run_err(args: &[&str]) -> String {
    let out = halfline_cmd().args(args).output().unwrap();
    assert!(!out.status.success(), "expected failure for {args:?}");
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(stderr.contains("error:"), "stderr was: {stderr}");
    stderr
}

fn write_bump(dir: &Path, amp: f64) -> PathBuf {
    let q = Potential::from_fn(257, |x| amp * (PI * x).sin().powi(2)).unwrap();
    let path = dir.join("bump.json");
    fs::write(&path, q.to_json()).unwrap();
    path
}

#[test]
fn forward_emits_csv_with_unimodular_s() {
    let dir = scratch("forward");
    let pot = write_bump(&dir, 0.8);
    let out_path = dir.join("fwd.csv");
    run_ok(&[
        "--steps",
        "1024",
        "forward",
        "--potential",
        pot.to_str().unwrap(),
        "--kmin",
        "1.0",
        "--kmax",
        "9.0",
        "--count",
        "5",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    let csv = fs::read_to_string(&out_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "k,re_psi,im_psi,re_s,im_s,xi");
    assert_eq!(lines.len(), 6);
    for line in &lines[1..] {
        let f: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(f.len(), 6);
        let s_norm = (f[3] * f[3] + f[4] * f[4]).sqrt();
        assert!((s_norm - 1.0).abs() < 1e-9, "|S| = {s_norm} at k = {}", f[0]);
    }
}

#[test]
fn spectrum_interlaces() {
    let dir = scratch("spectrum");
    let pot = write_bump(&dir, 0.8);
    let out = run_ok(&[
        "--steps",
        "1024",
        "--nmax",
        "4",
        "spectrum",
        "--potential",
        pot.to_str().unwrap(),
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,mu_n,tau_n");
    assert_eq!(lines.len(), 5);
    let mut prev_mu = f64::NEG_INFINITY;
    for line in &lines[1..] {
        let f: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        let (mu, tau) = (f[1], f[2]);
        assert!(tau < mu && prev_mu < tau, "interlacing broken: {line}");
        prev_mu = mu;
    }
}

#[test]
fn phase_map_then_invert_reproduces_files() {
    let dir = scratch("roundtrip_files");
    let pot = write_bump(&dir, 0.2);
    let data_path = dir.join("data.json");
    run_ok(&[
        "--steps",
        "1024",
        "--nmax",
        "6",
        "phase-map",
        "--potential",
        pot.to_str().unwrap(),
        "--out",
        data_path.to_str().unwrap(),
    ]);
    let data = SpectralData::from_json(&fs::read_to_string(&data_path).unwrap()).unwrap();
    assert_eq!(data.nmax, 6);
    assert!(!data.perturbed.is_empty());

    let q_path = dir.join("rec.json");
    run_ok(&[
        "--grid-n",
        "513",
        "invert",
        "--data",
        data_path.to_str().unwrap(),
        "--out",
        q_path.to_str().unwrap(),
    ]);
    let rec = Potential::from_json(&fs::read_to_string(&q_path).unwrap()).unwrap();
    assert_eq!(rec.grid_n(), 513);
    // Trapezoid mean on 513 nodes carries O(h^2) quadrature error.
    assert!((rec.mean() - data.sigma0).abs() < 1e-5);
}

#[test]
fn roundtrip_reports_and_respects_tolerance() {
    let dir = scratch("roundtrip_cmd");
    let pot = write_bump(&dir, 0.2);
    let out = run_ok(&[
        "--steps",
        "1024",
        "--nmax",
        "4",
        "--grid-n",
        "513",
        "roundtrip",
        "--potential",
        pot.to_str().unwrap(),
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("max |p_n(recovered) - p_n(input)|"));
    assert!(text.contains("roundtrip ok"), "stdout: {text}");

    // An unreachable tolerance must flip the exit code.
    let cfg = dir.join("tight.json");
    fs::write(&cfg, r#"{"tolerances":{"roundtrip":1e-15}}"#).unwrap();
    let stderr = run_err(&[
        "--config",
        cfg.to_str().unwrap(),
        "--steps",
        "1024",
        "--nmax",
        "4",
        "--grid-n",
        "513",
        "roundtrip",
        "--potential",
        pot.to_str().unwrap(),
    ]);
    assert!(stderr.contains("above tolerance"), "stderr: {stderr}");
}

#[test]
fn invert_even_requires_consistent_data() {
    let dir = scratch("invert_even");
    let good = SpectralData {
        sigma0: 0.0,
        parity: Parity::Even,
        nmax: 8,
        perturbed: vec![PerturbedNode { n: 2, p: 3.2 }],
    };
    let good_path = dir.join("even.json");
    fs::write(&good_path, good.to_json()).unwrap();
    let out = run_ok(&[
        "--grid-n",
        "257",
        "invert-even",
        "--data",
        good_path.to_str().unwrap(),
    ]);
    let q = Potential::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let v = q.values();
    for i in 0..v.len() {
        assert!((v[i] - v[v.len() - 1 - i]).abs() < 1e-9);
    }

    // A generic-parity node on the odd sublattice is not even data.
    let bad = SpectralData {
        sigma0: 0.0,
        parity: Parity::Even,
        nmax: 8,
        perturbed: vec![PerturbedNode { n: 1, p: 1.8 }],
    };
    let bad_path = dir.join("odd.json");
    fs::write(&bad_path, bad.to_json()).unwrap();
    run_err(&["invert-even", "--data", bad_path.to_str().unwrap()]);
}

#[test]
fn invert_rejects_lattice_collisions() {
    let dir = scratch("invert_bad");
    let data = SpectralData {
        sigma0: 0.0,
        parity: Parity::Generic,
        nmax: 8,
        perturbed: vec![PerturbedNode { n: 1, p: PI }],
    };
    let path = dir.join("collide.json");
    fs::write(&path, data.to_json()).unwrap();
    run_err(&["invert", "--data", path.to_str().unwrap()]);
}

#[test]
fn dress_tabulates_the_extended_potential() {
    let dir = scratch("dress");
    let well = Potential::from_fn(257, |_| -1.0).unwrap();
    let well_path = dir.join("well.json");
    fs::write(&well_path, well.to_json()).unwrap();

    let out = run_ok(&[
        "--steps",
        "1024",
        "dress",
        "--potential",
        well_path.to_str().unwrap(),
        "--kstar-r",
        "1.0",
        "--support-preserving",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,qstar");
    assert_eq!(lines.len(), 1024 + 2);

    let out = run_ok(&[
        "--steps",
        "512",
        "dress",
        "--potential",
        well_path.to_str().unwrap(),
        "--kstar-r",
        "1.0",
        "--c",
        "12.0",
        "--xmax",
        "3.0",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let last = text.lines().last().unwrap();
    let f: Vec<f64> = last.split(',').map(|v| v.parse().unwrap()).collect();
    assert!(f[0] >= 3.0 - 1e-9);

    // The two norming modes cannot be combined.
    let out = halfline_cmd()
        .args([
            "dress",
            "--potential",
            well_path.to_str().unwrap(),
            "--kstar-r",
            "1.0",
            "--c",
            "12.0",
            "--support-preserving",
        ])
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn linearize_and_newton_recover_a_small_bump() {
    let dir = scratch("newton");
    let q = Potential::from_fn(257, |x| 0.1 + 0.05 * (2.0 * PI * x).cos()).unwrap();
    let rs: Vec<f64> = (1..=6).map(|n| PI * n as f64 / 2.0 + 0.1).collect();
    let (s0, svals) = smap::psi_map(&q, &rs, 1024).unwrap();
    let samples = SMatrixSamples { rs, svals };
    let samples_path = dir.join("samples.json");
    fs::write(&samples_path, samples.to_json(s0)).unwrap();

    run_ok(&[
        "--grid-n",
        "257",
        "--nmax",
        "6",
        "linearize",
        "--samples",
        samples_path.to_str().unwrap(),
        "--out",
        dir.join("lin.json").to_str().unwrap(),
    ]);
    let lin = Potential::from_json(&fs::read_to_string(dir.join("lin.json")).unwrap()).unwrap();
    assert!((lin.mean() - q.mean()).abs() < 1e-6);

    let out = halfline_cmd()
        .args([
            "--grid-n",
            "257",
            "--steps",
            "1024",
            "newton-invert",
            "--samples",
            samples_path.to_str().unwrap(),
            "--iters",
            "8",
            "--out",
            dir.join("newton.json").to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("newton-invert: residual"), "stderr: {stderr}");
    let rec =
        Potential::from_json(&fs::read_to_string(dir.join("newton.json")).unwrap()).unwrap();
    // Six samples constrain the low modes tightly and the rest only weakly;
    // this is a plumbing check, accuracy at depth 64 is covered elsewhere.
    let err = rec
        .values()
        .iter()
        .zip(q.values())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    assert!(err < 1e-2, "sup error {err}");
}

#[test]
fn config_env_and_flags_layer_in_order() {
    let dir = scratch("layering");
    let pot = write_bump(&dir, 0.8);
    let cfg = dir.join("cfg.json");
    fs::write(&cfg, r#"{"nmax":3,"ode_steps":512}"#).unwrap();
    let pot_s = pot.to_str().unwrap().to_string();

    // Config file sets nmax = 3.
    let out = run_ok(&["--config", cfg.to_str().unwrap(), "spectrum", "--potential", &pot_s]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);

    // Environment beats the file.
    let out = halfline_cmd()
        .env("HALFLINE_NMAX", "2")
        .args(["--config", cfg.to_str().unwrap(), "spectrum", "--potential", &pot_s])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 3);

    // Explicit flag beats both.
    let out = halfline_cmd()
        .env("HALFLINE_NMAX", "2")
        .args([
            "--config",
            cfg.to_str().unwrap(),
            "--nmax",
            "1",
            "spectrum",
            "--potential",
            &pot_s,
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 2);

    // Unknown config keys and senseless values are rejected.
    fs::write(&cfg, r#"{"nmxa":3}"#).unwrap();
    run_err(&["--config", cfg.to_str().unwrap(), "spectrum", "--potential", &pot_s]);
    fs::write(&cfg, r#"{"tolerances":{"roundtrip":0.0}}"#).unwrap();
    let stderr =
        run_err(&["--config", cfg.to_str().unwrap(), "spectrum", "--potential", &pot_s]);
    assert!(stderr.contains("floor"), "stderr: {stderr}");
}

#[test]
fn missing_and_malformed_inputs_fail_cleanly() {
    let dir = scratch("bad_inputs");
    run_err(&["spectrum", "--potential", dir.join("absent.json").to_str().unwrap()]);

    let mangled = dir.join("mangled.json");
    fs::write(&mangled, r#"{"grid_n": 4, "values": [0.0, 0.0]}"#).unwrap();
    run_err(&["spectrum", "--potential", mangled.to_str().unwrap()]);

    let pot = write_bump(&dir, 0.5);
    run_err(&["phase-map", "--potential", pot.to_str().unwrap(), "--parity", "odd"]);
    run_err(&[
        "forward",
        "--potential",
        pot.to_str().unwrap(),
        "--kmin",
        "5.0",
        "--kmax",
        "1.0",
    ]);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = scratch("determinism");
    let pot = write_bump(&dir, 0.8);
    let pot_s = pot.to_str().unwrap().to_string();

    let spectrum_args = vec!["--steps", "1024", "--nmax", "4", "spectrum", "--potential", &pot_s];
    let a = run_ok(&spectrum_args);
    let b = run_ok(&spectrum_args);
    assert_eq!(a.stdout, b.stdout);

    let forward_args = vec![
        "--steps", "1024", "forward", "--potential", &pot_s, "--kmin", "1.0", "--kmax", "9.0",
        "--count", "5",
    ];
    let a = run_ok(&forward_args);
    let b = run_ok(&forward_args);
    assert_eq!(a.stdout, b.stdout);

    let phase_args =
        vec!["--steps", "1024", "--nmax", "4", "phase-map", "--potential", &pot_s];
    let a = run_ok(&phase_args);
    let b = run_ok(&phase_args);
    assert_eq!(a.stdout, b.stdout);
}
