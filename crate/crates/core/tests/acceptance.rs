//! Acceptance criteria, one printed line per criterion. Runs without the
//! libtest harness so the lines always reach the terminal.

use std::time::Instant;

use neil_core::verify::{run_suite, run_suites, CheckReport, Suite};

const SEED: u64 = 20240917;

fn describe(c: &CheckReport) -> String {
    format!(
        "    {} [{}] cases={} failures={} worst={:.3e} tol={:.1e}",
        if c.passed { "ok  " } else { "FAIL" },
        c.name,
        c.cases,
        c.failures,
        c.worst,
        c.tolerance
    )
}

fn main() {
    let mut failed = Vec::new();
    for suite in Suite::ALL {
        let start = Instant::now();
        let report = run_suite(suite, SEED);
        println!(
            "criterion {:>2} ({}): {} in {:.1}s",
            report.criterion,
            suite,
            if report.passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for c in &report.checks {
            println!("{}", describe(c));
        }
        if !report.passed {
            failed.push(report.criterion);
        }
    }

    // Criterion 12: identical seeds give byte-identical reports.
    let subset = [Suite::Ineq, Suite::Inner, Suite::Monotone];
    let first = serde_json::to_string_pretty(&run_suites(&subset, SEED)).unwrap();
    let second = serde_json::to_string_pretty(&run_suites(&subset, SEED)).unwrap();
    let same = first == second;
    println!("criterion 12 (determinism): {}", if same { "PASS" } else { "FAIL" });
    if !same {
        failed.push(12);
    }

    if failed.is_empty() {
        println!("acceptance: all 12 criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
