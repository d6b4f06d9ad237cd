//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line. Run with
//!
//! ```bash
//! cargo test -p gginv --test acceptance -- --nocapture
//! ```
//!
//! Every expected value is either checked against an oracle computed here
//! (quadrature, central finite differences, normal equations) or frozen from
//! an independent evaluation.

use gginv::experiment::{
    build_psi_setup, invert_on_setup, psi_data_seed, run_heatmap_sweep, run_linefit, sweep_csv,
    Config,
};
use gginv::metrics::pearson_r;
use gginv::operators::{DenseOperator, LinearOperator};
use gginv::solver::{minimize, InversionProblem, SolverSettings};
use gginv::stats::{
    gaussian_pdf, influence_kernel, kaniadakis_constants, objective, objective_gradient, pdf,
};
use gginv::synthdata::{contaminate_seismic, SeismicNoiseSpec};
use gginv::{EntropicIndex, Family};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn report(criterion: &str, failures: &[String], detail: &str) {
    if failures.is_empty() {
        println!("PASS {criterion}: {detail}");
    } else {
        println!("FAIL {criterion}: {}", failures.join("; "));
    }
    assert!(failures.is_empty(), "{criterion}: {}", failures.join("; "));
}

// ---------------------------------------------------------------------------
// quadrature oracle
// ---------------------------------------------------------------------------

/// Adaptive Simpson with a forced minimum depth, so narrow central mass is
/// never missed by an early flat estimate.
#[allow(clippy::too_many_arguments)]
fn simpson<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    eps: f64,
    depth: u32,
    min_depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if depth == 0 || (min_depth == 0 && (left + right - whole).abs() < 15.0 * eps) {
        left + right + (left + right - whole) / 15.0
    } else {
        let md = min_depth.saturating_sub(1);
        simpson(f, a, m, fa, flm, fm, eps / 2.0, depth - 1, md)
            + simpson(f, m, b, fm, frm, fb, eps / 2.0, depth - 1, md)
    }
}

fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, eps: f64) -> f64 {
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    simpson(&f, a, b, fa, fm, fb, eps, 52, 10)
}

/// ∫ g(x) dx over the real line via x = sinh(t): power-law tails become
/// exponential in t. The window covers |x| up to sinh(80) ≈ 2.8e34, enough
/// for the slowest tails in the suite (x^(-4/3) decays like e^(-t/3)).
fn integrate_real_line<F: Fn(f64) -> f64 + Copy>(g: F, eps: f64) -> f64 {
    integrate(move |t: f64| g(t.sinh()) * t.cosh(), -80.0, 80.0, eps)
}

// ---------------------------------------------------------------------------
// criterion 1: analytic gradients against central finite differences
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_gradient_oracle() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let indices: Vec<EntropicIndex> = {
        let mut v = vec![EntropicIndex::gaussian()];
        for alpha in [0.3334, 0.5, 0.6667, 0.8334, 1.0] {
            v.push(EntropicIndex::renyi(alpha).unwrap());
        }
        for q in [1.0, 1.5, 2.0, 2.5, 2.9999] {
            v.push(EntropicIndex::tsallis(q).unwrap());
        }
        for kappa in [0.0, 0.1666, 0.3333, 0.5, 0.6666] {
            v.push(EntropicIndex::kaniadakis(kappa).unwrap());
        }
        v
    };
    let (n, m_cols) = (20, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for idx in &indices {
        for trial in 0..4 {
            let entries: Vec<f64> = (0..n * m_cols).map(|_| rng.random_range(-1.0..1.0)).collect();
            let op = DenseOperator::new(n, m_cols, entries).unwrap();
            let d: Vec<f64> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
            let m: Vec<f64> = (0..m_cols).map(|_| rng.random_range(-1.0..1.0)).collect();
            let phi = |mm: &[f64]| {
                let pred = op.forward(mm);
                let r: Vec<f64> = d.iter().zip(&pred).map(|(a, b)| a - b).collect();
                objective(&r, idx).unwrap()
            };
            let pred = op.forward(&m);
            let r: Vec<f64> = d.iter().zip(&pred).map(|(a, b)| a - b).collect();
            let analytic = objective_gradient(&r, &op, idx).unwrap();
            let g_norm = analytic.iter().map(|g| g * g).sum::<f64>().sqrt();
            for j in 0..m_cols {
                let h = 1e-6 * (1.0 + m[j].abs());
                let mut mp = m.clone();
                mp[j] += h;
                let mut mm2 = m.clone();
                mm2[j] -= h;
                let fd = (phi(&mp) - phi(&mm2)) / (2.0 * h);
                if (analytic[j] - fd).abs() > 1e-5 * g_norm.max(1e-10) {
                    failures.push(format!(
                        "{idx} trial {trial} component {j}: analytic {} vs fd {}",
                        analytic[j], fd
                    ));
                }
            }
        }
    }
    let elapsed = started.elapsed();
    if elapsed.as_secs_f64() >= 5.0 {
        failures.push(format!("runtime {elapsed:?} exceeds 5 s"));
    }
    report(
        "criterion 1 (gradient oracle)",
        &failures,
        &format!(
            "{} indices × 4 random problems (N=20, M=3) match finite differences to 1e-5 in {elapsed:.2?}",
            indices.len()
        ),
    );
}

// ---------------------------------------------------------------------------
// criterion 2: normalization quadrature and the kappa-constants verdict
// ---------------------------------------------------------------------------

#[test]
fn criterion_2_normalization_and_kappa_verdict() {
    let mut failures = Vec::new();

    // unbounded-support densities over the real line
    let heavy: Vec<(String, EntropicIndex)> = vec![
        ("renyi 0.5".into(), EntropicIndex::renyi(0.5).unwrap()),
        ("renyi 0.75".into(), EntropicIndex::renyi(0.75).unwrap()),
        ("renyi 0.9".into(), EntropicIndex::renyi(0.9).unwrap()),
        ("tsallis 1.5".into(), EntropicIndex::tsallis(1.5).unwrap()),
        ("tsallis 2.0".into(), EntropicIndex::tsallis(2.0).unwrap()),
        ("tsallis 2.5".into(), EntropicIndex::tsallis(2.5).unwrap()),
        ("kaniadakis 0.1".into(), EntropicIndex::kaniadakis(0.1).unwrap()),
        ("kaniadakis 0.3".into(), EntropicIndex::kaniadakis(0.3).unwrap()),
        ("kaniadakis 0.5".into(), EntropicIndex::kaniadakis(0.5).unwrap()),
    ];
    for (label, idx) in &heavy {
        let integral = integrate_real_line(|x| pdf(x, idx).unwrap(), 1e-9);
        if (integral - 1.0).abs() > 1e-4 {
            failures.push(format!("{label}: ∫pdf = {integral}"));
        }
    }
    // compact-support densities over their exact support
    let compact = [
        ("renyi 2.0", EntropicIndex::renyi(2.0).unwrap(), (5.0f64).sqrt()),
        ("tsallis 0.5", EntropicIndex::tsallis(0.5).unwrap(), (5.0f64).sqrt()),
        ("tsallis 0.0", EntropicIndex::tsallis(0.0).unwrap(), (3.0f64).sqrt()),
    ];
    for (label, idx, support) in &compact {
        let integral = integrate(|x| pdf(x, idx).unwrap(), -support, *support, 1e-9);
        if (integral - 1.0).abs() > 1e-4 {
            failures.push(format!("{label}: ∫pdf = {integral}"));
        }
    }

    // kappa-Gaussian over a fixed finite window: the tail mass beyond |x|=50
    // is below 1e-5 for kappa ≤ 0.5
    for kappa in [0.1, 0.3, 0.5] {
        let idx = EntropicIndex::kaniadakis(kappa).unwrap();
        let integral = integrate(|x| pdf(x, &idx).unwrap(), -50.0, 50.0, 1e-9);
        if (integral - 1.0).abs() > 1e-4 {
            failures.push(format!("kaniadakis {kappa} on [-50,50]: ∫pdf = {integral}"));
        }
    }

    // β_κ verdict: the implemented gamma-ratio arrangement must satisfy the
    // unit-variance constraint at every κ; the alternative arrangement (the
    // second ratio inverted) diverges like 1/(4κ) toward κ → 0, so its
    // variance collapses there — the two arrangements only merge near the
    // upper end of the range.
    println!("kappa-constants verdict (variance of exp_k(-beta x^2)/Z by quadrature):");
    for kappa in [0.1, 0.3, 0.5] {
        let beta = kaniadakis_constants(kappa).unwrap().beta;
        let z = 1.0 / (2.0 * kappa);
        let pre = (1.0 + kappa / 2.0) / (2.0 * kappa * (2.0 + 3.0 * kappa));
        let beta_alt = pre
            * (libm::lgamma(z - 0.75) - libm::lgamma(z + 0.25) + libm::lgamma(z + 0.75)
                - libm::lgamma(z - 0.25))
            .exp();
        let variance = |b: f64| {
            let exp_k = move |x: f64| (-(kappa * b * x * x).asinh() / kappa).exp();
            let mass = integrate_real_line(exp_k, 1e-10);
            integrate_real_line(move |x| x * x * exp_k(x), 1e-10) / mass
        };
        let v_impl = variance(beta);
        let v_alt = variance(beta_alt);
        println!(
            "  kappa={kappa}: beta={beta:.6} gives var={v_impl:.6}; alternative beta={beta_alt:.6} gives var={v_alt:.6}"
        );
        if (v_impl - 1.0).abs() > 1e-3 {
            failures.push(format!("kappa={kappa}: implemented beta variance {v_impl}"));
        }
        if kappa <= 0.3 && (v_alt - 1.0).abs() < 0.05 {
            failures.push(format!(
                "kappa={kappa}: alternative beta unexpectedly variance-matched ({v_alt})"
            ));
        }
    }

    report(
        "criterion 2 (normalization + kappa verdict)",
        &failures,
        "15 densities integrate to 1 ± 1e-4; implemented β_κ is the variance-matched arrangement",
    );
}

// ---------------------------------------------------------------------------
// criterion 3: conventional-limit recovery
// ---------------------------------------------------------------------------

#[test]
fn criterion_3_conventional_limit() {
    let started = Instant::now();
    let mut failures = Vec::new();
    // deviation tolerance 1e-3, relative for values above 1
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-3 * b.abs().max(1.0);

    let objective_indices = [
        EntropicIndex::renyi(1.0 - 1e-4).unwrap(),
        EntropicIndex::tsallis(1.0 + 1e-4).unwrap(),
        EntropicIndex::kaniadakis(1e-4).unwrap(),
    ];
    let density_indices = [
        EntropicIndex::renyi(1.0 - 1e-4).unwrap(),
        EntropicIndex::renyi(1.0 + 1e-4).unwrap(),
        EntropicIndex::tsallis(1.0 - 1e-4).unwrap(),
        EntropicIndex::tsallis(1.0 + 1e-4).unwrap(),
        EntropicIndex::kaniadakis(1e-4).unwrap(),
    ];
    let grid: Vec<f64> = (0..=200).map(|i| -5.0 + 10.0 * i as f64 / 200.0).collect();
    for &x in &grid {
        for idx in &objective_indices {
            let phi = objective(&[x], idx).unwrap();
            if !close(phi, 0.5 * x * x) {
                failures.push(format!("{idx} objective at x={x}: {phi} vs {}", 0.5 * x * x));
            }
        }
        for idx in &density_indices {
            let p = pdf(x, idx).unwrap();
            if (p - gaussian_pdf(x)).abs() > 1e-3 {
                failures.push(format!("{idx} density at x={x}: {p} vs {}", gaussian_pdf(x)));
            }
        }
    }
    let elapsed = started.elapsed();
    if elapsed.as_secs_f64() >= 1.0 {
        failures.push(format!("runtime {elapsed:?} exceeds 1 s"));
    }
    report(
        "criterion 3 (conventional limit)",
        &failures,
        &format!(
            "objective and density within 1e-3 of the Gaussian forms at index distance 1e-4 on [-5,5] in {elapsed:.2?}"
        ),
    );
}

// ---------------------------------------------------------------------------
// criterion 4: influence decay at the robust limits
// ---------------------------------------------------------------------------

#[test]
fn criterion_4_influence_decay() {
    let mut failures = Vec::new();
    let xs = [1e2, 1e3, 1e4];
    for idx in [
        EntropicIndex::renyi(0.3334).unwrap(),
        EntropicIndex::tsallis(2.9999).unwrap(),
        EntropicIndex::kaniadakis(0.6666).unwrap(),
    ] {
        let products: Vec<f64> = xs
            .iter()
            .map(|&x| influence_kernel(x, &idx).unwrap() * x)
            .collect();
        let (min, max) = products
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
                (lo.min(v), hi.max(v))
            });
        if !(min > 0.0 && max / min <= 1.02) {
            failures.push(format!("{idx}: kernel·x spans {min}..{max}"));
        }
    }
    // the Gaussian kernel keeps growing linearly on the same points
    let g = EntropicIndex::gaussian();
    for &x in &xs {
        if influence_kernel(x, &g).unwrap() != x {
            failures.push(format!("gaussian kernel at {x} is not linear"));
        }
    }
    report(
        "criterion 4 (influence decay)",
        &failures,
        "kernel·x constant within 2% across x ∈ {1e2,1e3,1e4} at the limit indices; Gaussian stays linear",
    );
}

// ---------------------------------------------------------------------------
// criterion 5: line-fit robustness
// ---------------------------------------------------------------------------

#[test]
fn criterion_5_linefit_robustness() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut config = Config::default();
    config.linefit.index_count = 200;
    config.linefit.seeds = (1..=10).collect();
    let result = run_linefit(&config).expect("linefit run");

    let mut detail = String::new();
    for family in [Family::Renyi, Family::Tsallis, Family::Kaniadakis] {
        let (best_index, best_mae) = result.best_index(family).expect("rows");
        let conventional = result.conventional_mae(family).expect("conventional row");
        detail.push_str(&format!(
            "{family}: best {best_mae:.4} @ {best_index:.4} vs conventional {conventional:.4}; "
        ));
        if best_mae > 0.1 {
            failures.push(format!("{family}: best MAE {best_mae} exceeds 0.1"));
        }
        if conventional < 0.5 {
            failures.push(format!("{family}: conventional MAE {conventional} below 0.5"));
        }
    }
    let elapsed = started.elapsed();
    if elapsed.as_secs_f64() >= 60.0 {
        failures.push(format!("runtime {elapsed:?} exceeds 60 s"));
    }
    detail.push_str(&format!("(10 seeds, 200 indices, {elapsed:.2?})"));
    report("criterion 5 (line-fit robustness)", &failures, &detail);
}

// ---------------------------------------------------------------------------
// criterion 6: desk-scale post-stack sweep
// ---------------------------------------------------------------------------

#[test]
fn criterion_6_psi_desk_sweep() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let config = Config::default();
    assert_eq!(config.sweep.index_count, 20);
    assert_eq!(config.sweep.contaminations.len(), 9);
    assert_eq!(config.sweep.seeds.len(), 3);
    let result = run_heatmap_sweep(&config).expect("sweep run");

    let mut detail = String::new();
    for family in [Family::Renyi, Family::Tsallis, Family::Kaniadakis] {
        let limit = family.limit_value();
        let conventional = family.conventional_value();
        let mut worst_limit = f64::INFINITY;
        for &c in &config.sweep.contaminations {
            let r = result.median_r(family, limit, c).expect("limit cell");
            worst_limit = worst_limit.min(r);
            if r < 0.9 {
                failures.push(format!("{family}: median R {r:.4} < 0.9 at contamination {c}"));
            }
        }
        let r_limit_80 = result.median_r(family, limit, 0.8).expect("limit cell");
        let r_conv_80 = result.median_r(family, conventional, 0.8).expect("conventional cell");
        if r_conv_80 > r_limit_80 - 0.05 {
            failures.push(format!(
                "{family}: conventional R {r_conv_80:.4} at 80% not ≤ limit {r_limit_80:.4} − 0.05"
            ));
        }
        // ordering spot check at 40% contamination
        let r_limit_40 = result.median_r(family, limit, 0.4).expect("limit cell");
        let r_conv_40 = result.median_r(family, conventional, 0.4).expect("conventional cell");
        if r_limit_40 < r_conv_40 {
            failures.push(format!(
                "{family}: limit R {r_limit_40:.4} below conventional {r_conv_40:.4} at 40%"
            ));
        }
        detail.push_str(&format!(
            "{family}: worst limit R {worst_limit:.3}, conventional@80% {r_conv_80:.3}; "
        ));
    }
    let elapsed = started.elapsed();
    if elapsed.as_secs_f64() >= 600.0 {
        failures.push(format!("runtime {elapsed:?} exceeds 10 min"));
    }
    detail.push_str(&format!("({} cells, {elapsed:.2?})", result.rows.len()));
    report("criterion 6 (desk-scale sweep)", &failures, &detail);
}

// ---------------------------------------------------------------------------
// criterion 7: equivalence of the three limits
// ---------------------------------------------------------------------------

#[test]
fn criterion_7_limit_equivalence() {
    let mut failures = Vec::new();
    let config = Config::default();
    let setup = build_psi_setup(&config.seismic).expect("setup");
    let limits = [
        EntropicIndex::renyi(0.3334).unwrap(),
        EntropicIndex::tsallis(2.9999).unwrap(),
        EntropicIndex::kaniadakis(0.6666).unwrap(),
    ];
    let mut min_pairwise = f64::INFINITY;
    for seed in [1u64, 2, 3] {
        let noise = SeismicNoiseSpec {
            spike_fraction: 0.4,
            ..SeismicNoiseSpec::default()
        };
        let d_obs = contaminate_seismic(
            &setup.d_clean,
            &noise,
            psi_data_seed(config.seed, seed, 0.4),
        )
        .expect("contamination");
        let models: Vec<Vec<f64>> = limits
            .iter()
            .map(|idx| {
                let (est, _) = invert_on_setup(&setup, &d_obs, idx, &config.solver).expect("inversion");
                est.model.iter().map(|m| m.exp()).collect()
            })
            .collect();
        for i in 0..models.len() {
            for j in (i + 1)..models.len() {
                let r = pearson_r(&models[i], &models[j]).expect("pearson");
                min_pairwise = min_pairwise.min(r);
                if r < 0.95 {
                    failures.push(format!(
                        "seed {seed}: pairwise R {r:.4} between {} and {}",
                        limits[i], limits[j]
                    ));
                }
            }
        }
    }
    report(
        "criterion 7 (limit equivalence)",
        &failures,
        &format!("pairwise R ≥ 0.95 at 40% contamination across 3 seeds (min {min_pairwise:.4})"),
    );
}

// ---------------------------------------------------------------------------
// criterion 8: Gaussian solver against the normal equations
// ---------------------------------------------------------------------------

/// Solve (GᵀG) m = Gᵀ d by Gauss-Jordan elimination with partial pivoting.
fn normal_equations(op: &DenseOperator, d: &[f64]) -> Option<Vec<f64>> {
    let m = op.cols();
    let gtd = op.adjoint(d);
    // GᵀG column by column
    let mut a = vec![0.0; m * m];
    let mut basis = vec![0.0; m];
    for j in 0..m {
        basis[j] = 1.0;
        let col = op.adjoint(&op.forward(&basis));
        for i in 0..m {
            a[i * m + j] = col[i];
        }
        basis[j] = 0.0;
    }
    let mut aug: Vec<f64> = (0..m)
        .flat_map(|i| {
            a[i * m..(i + 1) * m]
                .iter()
                .copied()
                .chain(std::iter::once(gtd[i]))
                .collect::<Vec<f64>>()
        })
        .collect();
    let w = m + 1;
    for col in 0..m {
        let pivot_row = (col..m)
            .max_by(|&r1, &r2| aug[r1 * w + col].abs().total_cmp(&aug[r2 * w + col].abs()))?;
        if aug[pivot_row * w + col].abs() < 1e-10 {
            return None; // numerically rank-deficient; caller regenerates
        }
        for k in 0..w {
            aug.swap(col * w + k, pivot_row * w + k);
        }
        let pivot = aug[col * w + col];
        for k in 0..w {
            aug[col * w + k] /= pivot;
        }
        for row in 0..m {
            if row != col {
                let factor = aug[row * w + col];
                for k in 0..w {
                    aug[row * w + k] -= factor * aug[col * w + k];
                }
            }
        }
    }
    Some((0..m).map(|i| aug[i * w + m]).collect())
}

#[test]
fn criterion_8_solver_oracle() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(777);
    let mut trials = 0;
    let mut worst = 0.0f64;
    while trials < 100 {
        let n = rng.random_range(8..32);
        let m = rng.random_range(2..6);
        let entries: Vec<f64> = (0..n * m).map(|_| rng.random_range(-1.0..1.0)).collect();
        let op = DenseOperator::new(n, m, entries).unwrap();
        let d: Vec<f64> = (0..n).map(|_| rng.random_range(-2.0..2.0)).collect();
        let Some(oracle) = normal_equations(&op, &d) else {
            continue; // rank-deficient draw
        };
        trials += 1;
        let problem = InversionProblem::new(
            &d,
            &op,
            EntropicIndex::gaussian(),
            vec![0.0; m],
            SolverSettings {
                max_iterations: 12 * m,
                tolerance: 1e-14,
                ..SolverSettings::default()
            },
        )
        .unwrap();
        let est = minimize(&problem).expect("solve");
        let err: f64 = est
            .model
            .iter()
            .zip(&oracle)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        let scale: f64 = oracle.iter().map(|v| v * v).sum::<f64>().sqrt();
        let rel = err / scale.max(1e-12);
        worst = worst.max(rel);
        if rel > 1e-6 {
            failures.push(format!(
                "trial {trials} (N={n}, M={m}): relative error {rel:.2e}"
            ));
        }
    }
    report(
        "criterion 8 (solver oracle)",
        &failures,
        &format!("100 random overdetermined systems match normal equations (worst relative error {worst:.2e})"),
    );
}

// ---------------------------------------------------------------------------
// criterion 9: byte-identical sweep tables, serial or concurrent
// ---------------------------------------------------------------------------

#[test]
fn criterion_9_determinism() {
    let mut failures = Vec::new();
    let mut config = Config::default();
    config.seismic.n_model = 128;
    config.sweep.index_count = 4;
    config.sweep.contaminations = vec![0.0, 0.4, 0.8];
    config.sweep.seeds = vec![1, 2];
    config.sweep.families = vec![Family::Renyi, Family::Kaniadakis];

    config.sweep.threads = 1;
    let serial_a = sweep_csv(&run_heatmap_sweep(&config).expect("serial run"));
    let serial_b = sweep_csv(&run_heatmap_sweep(&config).expect("serial rerun"));
    config.sweep.threads = 0;
    let parallel_a = sweep_csv(&run_heatmap_sweep(&config).expect("parallel run"));
    let parallel_b = sweep_csv(&run_heatmap_sweep(&config).expect("parallel rerun"));

    if serial_a != serial_b {
        failures.push("serial reruns differ".into());
    }
    if parallel_a != parallel_b {
        failures.push("parallel reruns differ".into());
    }
    if serial_a != parallel_a {
        failures.push("serial and parallel tables differ".into());
    }
    let dir = tempfile::tempdir().expect("tempdir");
    let p1 = dir.path().join("a.csv");
    let p2 = dir.path().join("b.csv");
    std::fs::write(&p1, &serial_a).unwrap();
    std::fs::write(&p2, &parallel_b).unwrap();
    if std::fs::read(&p1).unwrap() != std::fs::read(&p2).unwrap() {
        failures.push("files differ on disk".into());
    }
    report(
        "criterion 9 (determinism)",
        &failures,
        &format!(
            "sweep CSV is byte-identical across serial/concurrent reruns ({} bytes)",
            serial_a.len()
        ),
    );
}
