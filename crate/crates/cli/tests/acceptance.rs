//! Acceptance criteria 1 to 12, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always reach the output.

use std::process::Command;
use std::time::{Duration, Instant};

use qplane_cli::suites::{tasks, Bounds, Suite};
use qplane_core::intertwiners::{classical_limit_check, ClassicalLimit};
use qplane_core::verify::{Report, Verifier};
use rayon::prelude::*;

struct Outcome {
    passed: bool,
    detail: String,
}

fn run_suites(list: &[(Suite, Bounds)], v: &Verifier) -> Vec<Report> {
    let jobs: Vec<_> = list.iter().flat_map(|&(s, b)| tasks(s, b, ClassicalLimit::default())).collect();
    jobs.par_iter().flat_map_iter(|t| t.run(v)).collect()
}

fn all_hold(list: &[(Suite, Bounds)]) -> Outcome {
    let reports = run_suites(list, &Verifier::symbolic());
    let failed: Vec<&Report> = reports.iter().filter(|r| !r.passed()).collect();
    match failed.first() {
        None => Outcome {
            passed: true,
            detail: format!("{} {}", reports.len(), if reports.len() == 1 { "report holds" } else { "reports hold" }),
        },
        Some(r) => Outcome {
            passed: false,
            detail: format!("{} failed: {}", r.identity, serde_json::to_string(r).unwrap_or_default()),
        },
    }
}

fn bounds(max_n: u32, max_degree: u32, big_n: u32) -> Bounds {
    Bounds { max_n, max_degree, big_n }
}

fn classical() -> Outcome {
    let r = classical_limit_check(&ClassicalLimit::default(), false);
    let at = |q0: f64| {
        let r = classical_limit_check(&ClassicalLimit { q0, ..Default::default() }, false);
        r.params["max_relative_error"].as_f64().unwrap_or(f64::NAN)
    };
    let (e6, e5, e4) = (at(1.0 + 1e-6), at(1.0 + 1e-5), at(1.0 + 1e-4));
    Outcome {
        passed: r.passed() && (9.0..11.0).contains(&(e5 / e6)),
        detail: format!(
            "max rel. error {e6:.2e} at q0 = 1+1e-6, {e5:.2e} at 1+1e-5, {e4:.2e} at 1+1e-4 (first order in q0-1)"
        ),
    }
}

fn negative_controls() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_qplane");
    let mut bad = Vec::new();
    for s in Suite::EACH {
        let out = Command::new(exe)
            .args(["--max-n", "2", "--max-degree", "3", "--N", "2", "verify", "--poison", "--suite", &s.name()])
            .output();
        match out {
            Ok(o) if o.status.code() == Some(1) && !o.stderr.is_empty() => {}
            Ok(o) => bad.push(format!("{} exited {:?}", s.name(), o.status.code())),
            Err(e) => bad.push(format!("{}: {e}", s.name())),
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("all {} suites exit 1 under --poison", Suite::EACH.len())
        } else {
            bad.join("; ")
        },
    }
}

type Criterion = (u32, &'static str, Box<dyn Fn() -> Outcome>);

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "lowest-weight vectors, n <= 8", Box::new(|| all_hold(&[(Suite::LowestWeight, bounds(8, 10, 8))]))),
        (2, "phi bijection, degree <= 12", Box::new(|| all_hold(&[(Suite::Phi, bounds(8, 12, 8))]))),
        (3, "phi of t^{n+k} j_n, n <= 6, k <= 4", Box::new(|| all_hold(&[(Suite::PhiPsi, bounds(6, 10, 8))]))),
        (
            4,
            "little q-Jacobi forms and eigen-equation, n <= 10",
            Box::new(|| all_hold(&[(Suite::Jacobi, bounds(8, 10, 8))])),
        ),
        (
            5,
            "tx action by conjugation, Casimir on psi(n, k), n + k <= 8",
            Box::new(|| all_hold(&[(Suite::TxAction, bounds(8, 10, 8)), (Suite::Relations, bounds(8, 8, 8))])),
        ),
        (6, "Clebsch-Gordan expansions, k <= N <= 8", Box::new(|| all_hold(&[(Suite::Cg, bounds(8, 10, 8))]))),
        (
            7,
            "q-Hahn difference equation, recurrence, algebra, N <= 6",
            Box::new(|| all_hold(&[(Suite::Qhahn, bounds(8, 10, 6)), (Suite::QhahnAlgebra, bounds(8, 10, 6))])),
        ),
        (8, "Fischer adjoints on truncations, D <= 10", Box::new(|| all_hold(&[(Suite::Adjoint, bounds(8, 10, 8))]))),
        (
            9,
            "q-Rankin-Cohen brackets as adjoints, n <= 5, D <= 8",
            Box::new(|| all_hold(&[(Suite::Qrc, bounds(5, 8, 8))])),
        ),
        (
            10,
            "uniqueness of P_n (n <= 8), psi basis (D <= 10)",
            Box::new(|| all_hold(&[(Suite::Uniqueness, bounds(8, 10, 8))])),
        ),
        (11, "classical limit smoke test", Box::new(classical)),
        (12, "negative controls", Box::new(negative_controls)),
    ];

    let mut failures = 0;
    let mut total = Duration::ZERO;
    for (id, name, check) in &criteria {
        let start = Instant::now();
        let o = check();
        let dt = start.elapsed();
        total += dt;
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {tag} [{:>6.1}s] {name}: {}", dt.as_secs_f64(), o.detail);
        failures += usize::from(!o.passed);
    }
    println!(
        "acceptance: {} of {} criteria pass in {:.1}s",
        criteria.len() - failures,
        criteria.len(),
        total.as_secs_f64()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
