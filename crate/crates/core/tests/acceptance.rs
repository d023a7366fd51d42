//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Built without the libtest harness so the lines always reach stdout:
//! `cargo test -p lrcommutor --test acceptance`.

use std::time::{Duration, Instant};

use lrcommutor::golden;
use lrcommutor::verify::{run_check, VerifyConfig, VerifyReport};

struct Line {
    n: usize,
    name: &'static str,
    ok: bool,
    detail: String,
}

fn report(n: usize, name: &'static str, r: &VerifyReport, budget: Option<Duration>) -> Line {
    let in_time = budget.is_none_or(|b| r.wall <= b);
    let mut detail = format!(
        "{} instances, {} failures, {:.2}s",
        r.instances,
        r.failures.len(),
        r.wall.as_secs_f64()
    );
    if !in_time {
        detail.push_str(&format!(" (budget {}s)", budget.unwrap().as_secs()));
    }
    if let Some(f) = r.failures.first() {
        detail.push_str(&format!(
            "\n    first failure:\n{}\n    expected: {}\n    actual: {}",
            f.input, f.expected, f.actual
        ));
    }
    Line {
        n,
        name,
        ok: r.passed() && r.instances > 0 && in_time,
        detail,
    }
}

fn check(name: &str, max_size: usize) -> VerifyReport {
    let cfg = VerifyConfig {
        max_size,
        ..VerifyConfig::default()
    };
    run_check(name, &cfg).expect("registered check")
}

fn main() {
    let mut lines = Vec::new();

    let start = Instant::now();
    let outcomes = golden::run(&[]).expect("fixtures load");
    let wall = start.elapsed();
    let checks: usize = outcomes.iter().map(|o| o.checks).sum();
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.passed())
        .map(|o| format!("{}: {}", o.id, o.failures.join("; ")))
        .collect();
    lines.push(Line {
        n: 1,
        name: "golden examples",
        ok: failed.is_empty() && wall < Duration::from_secs(1),
        detail: format!(
            "{} examples, {} checks, {:.2}s{}",
            outcomes.len(),
            checks,
            wall.as_secs_f64(),
            failed
                .iter()
                .map(|f| format!("\n    {f}"))
                .collect::<String>()
        ),
    });

    let minutes = |m: u64| Some(Duration::from_secs(60 * m));
    lines.push(report(2, "involution", &check("involution", 8), minutes(2)));
    lines.push(report(
        3,
        "commutor coincidence",
        &check("coincidence", 8),
        None,
    ));
    lines.push(report(
        4,
        "strategy confluence",
        &check("confluence", 8),
        None,
    ));
    lines.push(report(
        5,
        "Knuth-class commutativity",
        &check("knuth-commutativity", 8),
        None,
    ));
    lines.push(report(6, "skew RSK bijection", &check("skew-rsk", 6), None));
    lines.push(report(7, "route geometry", &check("routes", 8), None));
    lines.push(report(
        8,
        "LR rule vs polynomials",
        &check("lr-rule", 8),
        minutes(5),
    ));
    lines.push(report(9, "staged recursion", &check("staged", 8), None));

    for l in &lines {
        println!(
            "{} {}. {}: {}",
            if l.ok { "PASS" } else { "FAIL" },
            l.n,
            l.name,
            l.detail
        );
    }
    let failed: Vec<usize> = lines.iter().filter(|l| !l.ok).map(|l| l.n).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
