//! One line per acceptance criterion. Exits non-zero if any criterion fails.

use std::time::Instant;

use schubert_torus::oracle::suites::{exhaustive_check, SuiteParams};
use schubert_torus::report::{Report, Status};
use schubert_torus::schubert::{has_semistable, GrassmannElement};
use schubert_torus::Result;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn suite(name: &str, n: usize, r: Option<usize>, seed: u64) -> Result<Report> {
    exhaustive_check(name, &SuiteParams { n: Some(n), r, chi: None, seed })
}

/// Runs the suites and collects the names of failing checks.
fn all_pass<I>(runs: I) -> Outcome
where
    I: IntoIterator<Item = (String, Result<Report>)>,
{
    let mut bad = Vec::new();
    let mut count = 0;
    for (label, rep) in runs {
        count += 1;
        match rep {
            Ok(rep) => {
                for c in rep.checks.iter().filter(|c| c.status != Status::Pass) {
                    bad.push(format!("{label}: {} ({})", c.name, c.status.as_str()));
                }
            }
            Err(e) => bad.push(format!("{label}: {e}")),
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: if bad.is_empty() { format!("{count} runs") } else { bad.join("; ") },
    }
}

fn grid(name: &'static str, ns: std::ops::RangeInclusive<usize>, rs: impl Fn(usize) -> Vec<usize>) -> Outcome {
    let mut runs = Vec::new();
    for n in ns {
        for r in rs(n) {
            runs.push((format!("{name} n={n} r={r}"), suite(name, n, Some(r), 0)));
        }
    }
    all_pass(runs)
}

fn semistable_equivalence() -> Outcome {
    grid("lemma-2.7", 4..=7, |n| (2..=n - 2).collect())
}

fn r2_cell_count() -> Outcome {
    let mut bad = Vec::new();
    for n in 4..=9usize {
        let bound = n / 2; // ⌈(n-1)/2⌉
        let mut found = Vec::new();
        let mut expected = Vec::new();
        for g in GrassmannElement::all(n, 2).expect("valid n") {
            if has_semistable(&g).expect("valid cell") {
                found.push(g.a_seq().to_vec());
            }
            if g.start() == 1 && g.a(2) == n - 1 && g.a(1) >= bound {
                expected.push(g.a_seq().to_vec());
            }
        }
        if n == 5 && found.len() != 2 {
            bad.push(format!("n=5 has {} cells", found.len()));
        }
        if found != expected {
            bad.push(format!("n={n}: semistable {found:?}, formula {expected:?}"));
        }
    }
    Outcome { pass: bad.is_empty(), detail: if bad.is_empty() { "n = 4..9".into() } else { bad.join("; ") } }
}

fn order_reversal_and_rounding() -> Outcome {
    let mut runs = Vec::new();
    for n in 2..=6usize {
        for r in (1..=3).filter(|&r| r < n) {
            runs.push((format!("lemma-1.8 n={n} r={r}"), suite("lemma-1.8", n, Some(r), 0)));
        }
        for r in 1..n {
            runs.push((format!("lemma-1.6 n={n} r={r}"), suite("lemma-1.6", n, Some(r), 0)));
            runs.push((format!("lemma-1.7 n={n} r={r}"), suite("lemma-1.7", n, Some(r), 0)));
        }
    }
    all_pass(runs)
}

fn kernel_bases() -> Outcome {
    grid("prop-2.9", 2..=7, |n| (1..=3).filter(|&r| r < n).collect())
}

fn equivariance() -> Outcome {
    all_pass((2..=4).map(|m| (format!("cor-4.4 m={m}"), suite("cor-4.4", m, None, 0))))
}

fn cell_actions() -> Outcome {
    grid("prop-3.2", 4..=6, |n| (2..=n - 2).collect())
}

fn negative_elements() -> Outcome {
    all_pass((1..=5).map(|n| (format!("lemma-5.1 n={n}"), suite("lemma-5.1", n, None, 0))))
}

fn flag_quotient() -> Outcome {
    let runs: Vec<(String, Result<Report>)> =
        (2..=4).map(|n| (format!("thm-5.2 n={n}"), suite("thm-5.2", n, None, 0))).collect();
    let reading = runs
        .iter()
        .filter_map(|(_, r)| r.as_ref().ok())
        .map(|r| r.results["validating"].to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let mut out = all_pass(runs);
    out.detail = format!("{}; validating reading per n: {reading}", out.detail);
    out
}

fn strata() -> Outcome {
    let mut runs = Vec::new();
    let mut missing = Vec::new();
    for n in 4..=9 {
        let rep = suite("strata", n, None, 0);
        if let Ok(r) = &rep {
            let listed = r.results["divergences"].as_array().map_or(0, |v| v.len());
            let present = r.results["strata"]
                .as_array()
                .map_or(0, |v| v.iter().filter(|d| d["cell_parameter"] != d["printed_parameter"]).count());
            if listed != present {
                missing.push(format!("n={n}: {present} divergent strata, {listed} reported"));
            }
        }
        runs.push((format!("strata n={n}"), rep));
    }
    let mut out = all_pass(runs);
    if !missing.is_empty() {
        out.pass = false;
        out.detail = format!("{}; {}", out.detail, missing.join("; "));
    }
    out
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("semistable cells equal the oracle's verdict, n 4..7", semistable_equivalence),
        ("G(2,n) semistable cells: a_2 = n-1, a_1 >= ceil((n-1)/2), n 4..9", r2_cell_count),
        ("order reversal and rounding elements, n <= 6", order_reversal_and_rounding),
        ("invariant generators form a lattice basis, n <= 7, r <= 3", kernel_bases),
        ("Y-action equals the standard representation, m 2..4", equivariance),
        ("cell actions: involutions, invariance, closed forms, n <= 6", cell_actions),
        ("w(chi) <= 0 iff w in s_1...s_n W_I, n <= 5", negative_elements),
        ("flag quotient coordinates, n <= 4", flag_quotient),
        ("strata counts, dimensions and divergences, n 4..9", strata),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        if !out.pass {
            failed += 1;
        }
        println!(
            "{} criterion {}: {name} [{:.1}s] {}",
            if out.pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64(),
            out.detail
        );
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
