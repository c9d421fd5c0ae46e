//! Acceptance criteria 1 to 12, one line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use steenrod_core::chain::{Chain, Tensor};
use steenrod_core::exec::Exec;
use steenrod_core::ring::Ring;
use steenrod_core::simplex::Simplex;
use steenrod_core::steenrod::{xi_simplex, DiagonalTable};
use steenrod_core::bar::BarElement;
use steenrod_core::suite::{run_suite, SuiteConfig};

struct Verdict {
    passed: bool,
    detail: String,
}

/// Runs the named suite checks against a fresh table.
fn checks(names: &[&str], max_k: usize, slow: bool) -> Verdict {
    let config = SuiteConfig {
        only: Some(names.iter().map(|s| s.to_string()).collect()),
        max_k,
        max_level: 4,
        exec: Exec::default(),
        slow,
        seed: 0x5eed,
    };
    let report = run_suite(&config, &DiagonalTable::new()).expect("known check names");
    let detail: Vec<String> = report
        .results
        .iter()
        .map(|r| match &r.counterexample {
            Some(ce) => format!("{}: {} [{ce}]", r.name, r.detail),
            None => format!("{}: {}", r.name, r.detail),
        })
        .collect();
    Verdict { passed: report.all_passed(), detail: detail.join("; ") }
}

/// The level-0 diagonal of Δ² against its printed text, in canonical term order.
fn golden_text() -> Verdict {
    let z = Ring::Integers;
    let s = |v: &[u32]| Simplex(v.to_vec());
    let printed = Chain::from_terms(
        z,
        [
            (Tensor(s(&[0, 1, 2]), s(&[2])), z.one()),
            (Tensor(s(&[0, 1]), s(&[1, 2])), z.one()),
            (Tensor(s(&[0]), s(&[0, 1, 2])), z.one()),
        ],
    );
    let computed = xi_simplex(BarElement::e(0), &s(&[0, 1, 2]), &DiagonalTable::new()).expect("ordered");
    let (a, b) = (computed.to_string(), printed.to_string());
    let passed = a == b;
    let base = checks(&["golden-aw"], 5, false);
    Verdict { passed: passed && base.passed, detail: format!("text `{a}`; {}", base.detail) }
}

fn main() -> ExitCode {
    let criteria: Vec<(usize, &str, Option<Duration>, Box<dyn Fn() -> Verdict>)> = vec![
        (1, "golden AW diagonal", Some(Duration::from_secs(1)), Box::new(golden_text)),
        (2, "golden level-1 diagonal", None, Box::new(|| checks(&["golden-cup1-level"], 5, false))),
        (3, "degenerate-simplex displays", None, Box::new(|| checks(&["golden-degenerate"], 5, false))),
        (4, "top-diagonal signs, k <= 6", Some(Duration::from_secs(60)), Box::new(|| checks(&["top-sign"], 6, false))),
        (5, "chain map and equivariance", None, Box::new(|| checks(&["chain-map", "equivariance"], 5, false))),
        (6, "prime-3 identity, k <= 4", None, Box::new(|| checks(&["prime3"], 4, false))),
        (
            7,
            "Steenrod squares",
            Some(Duration::from_secs(600)),
            Box::new(|| checks(&["sq0-identity", "sq1-projective", "sq-rp4"], 5, true)),
        ),
        (8, "Dold-Kan", None, Box::new(|| checks(&["dold-kan-round-trip", "moore-pointed", "moore-homology"], 5, false))),
        (9, "Hurewicz then γ is the identity", None, Box::new(|| checks(&["hurewicz-identity"], 5, false))),
        (10, "Hurewicz morphism", None, Box::new(|| checks(&["hurewicz-morphism"], 5, false))),
        (11, "Vandermonde witness", None, Box::new(|| checks(&["vandermonde", "vandermonde-determinant"], 5, false))),
        (12, "degeneracy-freeness", None, Box::new(|| checks(&["degeneracy-free"], 5, false))),
    ];
    let mut failed = 0;
    for (n, title, bound, run) in &criteria {
        let start = Instant::now();
        let v = run();
        let elapsed = start.elapsed();
        let in_time = bound.is_none_or(|b| elapsed <= b);
        let passed = v.passed && in_time;
        if !passed {
            failed += 1;
        }
        let limit = bound.map_or(String::new(), |b| format!(", limit {} s", b.as_secs()));
        println!(
            "criterion {n}: {} {title} ({:.3} s{limit}) {}",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            v.detail
        );
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
