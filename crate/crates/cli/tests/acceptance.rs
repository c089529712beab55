//! End-to-end acceptance suite. Each criterion prints one PASS/FAIL line.

use std::f64::consts::PI;
use std::process::Command;

use cauchy_beta::sampling::QuasiRandom;
use cauchy_beta::{
    add1_coefficient, add2_beta, euler_beta_closed, euler_beta_integral, integrate_cube, log2_beta, log_gamma,
    mult_beta_closed, mult_beta_k_closed, pendant_closed, pendant_integral, Family, FamilySpec, FitProblem,
    PositiveReal, QuadConfig, QuotientClass,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn pairs(lo: f64, hi: f64, n: usize, seed: u64) -> Vec<(f64, f64)> {
    let mut q = QuasiRandom::new(2, seed);
    (0..n)
        .map(|_| {
            let p = q.next_in(lo, hi);
            (p[0], p[1])
        })
        .collect()
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn euler_identity() -> Outcome {
    let config = QuadConfig::default();
    let mut worst = 0.0f64;
    for (x, y) in pairs(0.5, 10.0, 100, 1) {
        let (px, py) = (PositiveReal::new(x).unwrap(), PositiveReal::new(y).unwrap());
        let closed = euler_beta_closed(px, py);
        let quad = euler_beta_integral(px, py, &config).map_err(|e| e.to_string())?.value;
        worst = worst.max(((quad - closed) / closed).abs());
    }
    check(worst <= 1e-8, format!("max rel deviation {worst:.3e}"))
}

fn mult_closed_form() -> Outcome {
    let config = QuadConfig::default();
    let spec = FamilySpec::pair(Family::Mult);
    let mut worst = 0.0f64;
    for (x, y) in pairs(1.1, 20.0, 50, 2) {
        let closed = mult_beta_closed(x, y).map_err(|e| e.to_string())?;
        let quad = pendant_integral(spec, &[x, y], &config)
            .map_err(|e| e.to_string())?
            .value;
        worst = worst.max((closed - quad).abs() / (1e-8 * closed.abs()).max(1e-9));
    }
    let mut diag = 0.0f64;
    for x in [1.5, 2.0, 5.0, 17.0] {
        let v = mult_beta_closed(x, x).map_err(|e| e.to_string())?;
        diag = diag.max(((v - (x - 1.0)) / (x - 1.0)).abs());
    }
    check(
        worst <= 1.0 && diag <= 1e-12,
        format!("worst error/tolerance {worst:.3e}, diagonal rel {diag:.3e}"),
    )
}

fn coefficient_table() -> Outcome {
    let expected = [1.0 / 6.0, -1.0 / 12.0, -1.0 / 8.0, -5.0 / 48.0];
    let mut worst = 0.0f64;
    for (k, want) in (2..=5).zip(expected) {
        let c = add1_coefficient(k).map_err(|e| e.to_string())?;
        worst = worst.max((c - want).abs());
    }
    check(worst <= 1e-10, format!("max abs deviation {worst:.3e}"))
}

fn arithmetic_mean() -> Outcome {
    let mut worst = 0.0f64;
    for i in 0..20 {
        for j in 0..20 {
            let x = -5.0 + 10.0 * i as f64 / 19.0;
            let y = -5.0 + 10.0 * j as f64 / 19.0;
            let v = add2_beta(x, y).map_err(|e| e.to_string())?;
            worst = worst.max((v - ((x + y) / 2.0 - 1.0)).abs());
        }
    }
    check(worst <= 1e-14, format!("max abs deviation {worst:.3e}"))
}

fn logarithmic_forms() -> Outcome {
    let config = QuadConfig::default();
    let mut worst = 0.0f64;
    let mut geo = 0.0f64;
    for (x, y) in pairs(1.1, 50.0, 50, 5) {
        for family in [Family::Log1, Family::Log2] {
            let spec = FamilySpec::pair(family);
            let closed = pendant_closed(spec, &[x, y]).map_err(|e| e.to_string())?;
            let quad = pendant_integral(spec, &[x, y], &config)
                .map_err(|e| e.to_string())?
                .value;
            worst = worst.max((closed - quad).abs());
        }
        let g = ((x - 1.0) * (y - 1.0)).sqrt();
        let v = log2_beta(x, y).map_err(|e| e.to_string())?.exp();
        geo = geo.max(((v - g) / g).abs());
    }
    check(
        worst <= 1e-10 && geo <= 1e-12,
        format!("max abs deviation {worst:.3e}, geometric mean rel {geo:.3e}"),
    )
}

fn mult3_closed_form() -> Outcome {
    let config = QuadConfig::default();
    let mut q = QuasiRandom::new(3, 6);
    let mut triples: Vec<[f64; 3]> = (0..19)
        .map(|_| {
            let p = q.next_in(1.5, 6.0);
            [p[0], p[1], p[2]]
        })
        .collect();
    triples.push([2.5, 4.0, 2.5]);
    let mut worst = 0.0f64;
    for p in &triples {
        let closed = mult_beta_k_closed(p).map_err(|e| e.to_string())?;
        let l: Vec<f64> = p.iter().map(|x| (x - 1.0).ln()).collect();
        let quad = integrate_cube(
            |t: &[f64]| (t[0] * l[0] + t[1] * l[1] + (1.0 - t[0] - t[1]) * l[2]).exp(),
            2,
            &config,
        )
        .map_err(|e| e.to_string())?
        .value;
        worst = worst.max(((closed - quad) / closed).abs());
    }
    check(
        worst <= 1e-7,
        format!("max rel deviation {worst:.3e} over {} triples", triples.len()),
    )
}

fn sine_pendant() -> Outcome {
    let config = QuadConfig::default();
    let spec = FamilySpec::pair(Family::SineAdd);
    let mut worst = 0.0f64;
    for (x, y) in pairs(-PI, PI, 50, 7) {
        let closed = pendant_closed(spec, &[x, y]).map_err(|e| e.to_string())?;
        let quad = pendant_integral(spec, &[x, y], &config)
            .map_err(|e| e.to_string())?
            .value;
        worst = worst.max((closed - quad).abs());
        if (closed - 0.5 * (x + y).sin()).abs() > 1e-15 {
            return Err(format!("closed form off at ({x}, {y})"));
        }
    }
    check(worst <= 1e-10, format!("max abs deviation {worst:.3e}"))
}

fn fitter_recovery() -> Outcome {
    let problem = FitProblem::new(
        FamilySpec::pair(Family::EulerExp),
        QuotientClass::ExpQuotient,
        1.0,
        2.0,
        16,
    );
    let report = cauchy_beta::fit_quotient(&problem).map_err(|e| e.to_string())?;
    // Least-squares affine gauge a + b x between the fit and log Γ on the grid nodes.
    let pts: Vec<(f64, f64)> = report
        .nodes
        .iter()
        .zip(&report.logf_values)
        .filter(|(x, _)| (1.0..=2.0).contains(*x))
        .map(|(&x, &v)| (x, v - log_gamma(PositiveReal::new(x).unwrap())))
        .collect();
    let n = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, d)| (a + x, b + d));
    let (mx, my) = (sx / n, sy / n);
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|(x, d)| (x - mx) * (d - my)).sum();
    let b = sxy / sxx;
    let a = my - b * mx;
    let dev = pts.iter().map(|(x, d)| (d - a - b * x).abs()).fold(0.0, f64::max);
    check(
        report.rms_residual <= 1e-6 && dev <= 1e-5 && pts.len() >= 16,
        format!(
            "rms {:.3e}, affine deviation {dev:.3e}, {} nodes",
            report.rms_residual,
            pts.len()
        ),
    )
}

fn mean_bounds() -> Outcome {
    let mut strict = 0;
    for (x, y) in pairs(1.0 + 1e-3, 100.0, 1000, 9) {
        let m = mult_beta_closed(x, y).map_err(|e| e.to_string())?;
        let (lo, hi) = (x.min(y) - 1.0, x.max(y) - 1.0);
        if !(lo <= m && m <= hi) {
            return Err(format!("bounds violated at ({x}, {y})"));
        }
        if (x - y).abs() > 1e-6 {
            if !(lo < m && m < hi) {
                return Err(format!("strict bounds violated at ({x}, {y})"));
            }
            strict += 1;
        }
    }
    check(true, format!("1000 pairs within bounds, {strict} strict"))
}

fn transcript() -> Vec<u8> {
    let runs: &[&[&str]] = &[
        &["verify", "--family", "euler", "--samples", "100", "--seed", "42"],
        &["verify", "--family", "mult", "--samples", "50", "--seed", "7"],
        &["verify", "--family", "log1", "--samples", "20", "--seed", "3"],
        &["verify", "--family", "log2", "--samples", "20", "--seed", "3"],
        &["verify", "--family", "sine", "--samples", "20", "--seed", "3"],
        &[
            "verify",
            "--family",
            "mult",
            "--arity",
            "3",
            "--samples",
            "5",
            "--seed",
            "1",
        ],
        &["coeff", "--k", "2"],
        &["coeff", "--k", "3"],
        &["coeff", "--k", "4"],
        &["coeff", "--k", "5"],
        &["coeff", "--k", "6"],
        &["eval", "--family", "mult", "--args", "3,3"],
        &["eval", "--family", "add1", "--args", "2,2,2", "--method", "quad"],
        &["eval", "--family", "mult", "--args", "1,2"],
        &[
            "tabulate",
            "--family",
            "mult",
            "--range",
            "x=2:3:0.5",
            "--range",
            "y=2:3:0.5",
        ],
        &["fit", "--target", "euler", "--class", "exp", "--grid", "1:2:16"],
    ];
    let mut log = Vec::new();
    for args in runs {
        let out = Command::new(env!("CARGO_BIN_EXE_cauchy-beta"))
            .args(*args)
            .output()
            .expect("spawn cli");
        log.extend_from_slice(format!("$ {}\n", args.join(" ")).as_bytes());
        log.extend_from_slice(&out.stdout);
        log.extend_from_slice(&out.stderr);
        log.extend_from_slice(format!("exit {:?}\n", out.status.code()).as_bytes());
    }
    log
}

fn determinism() -> Outcome {
    let first = transcript();
    let second = transcript();
    check(first == second, format!("{} transcript bytes", first.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("euler identity", euler_identity),
        ("multiplicative closed form", mult_closed_form),
        ("coefficient table", coefficient_table),
        ("arithmetic mean", arithmetic_mean),
        ("logarithmic closed forms", logarithmic_forms),
        ("three-variable multiplicative form", mult3_closed_form),
        ("sine pendant", sine_pendant),
        ("fitter recovery", fitter_recovery),
        ("mean bounds", mean_bounds),
        ("cli determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
