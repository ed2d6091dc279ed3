//! One check per acceptance criterion, each against its wall-clock budget.
//! Runs without the libtest harness so the result lines are always printed,
//! and sequentially so budgets are not shared with other work.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dickson_chern::chern::{total_conj_chern, verify_chern_parts, verify_top_chern, verify_vistoli, ChernContext};
use dickson_chern::cyclo::verify_representation;
use dickson_chern::dickson::{
    delta_full, delta_ni, dickson_all, dickson_c_from_f, f_n_product, gl_action, random_gl, DicksonContext,
};
use dickson_chern::relations::{verify_relations_suite, verify_signs};
use dickson_chern::report::{CheckStatus, VerificationReport};
use dickson_chern::steenrod::{milnor_q, r_closed, verify_jacobian_independence, verify_steenrod, x_class};
use serde_json::Value;

type Verdict = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Verdict);

const DICKSON_CASES: [(u64, usize); 6] = [(2, 2), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2)];
const CHERN_CASES: [(u64, usize); 3] = [(3, 1), (5, 1), (3, 2)];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every check in every report must pass; skips count as failures here.
fn all_pass(reports: &[VerificationReport]) -> Verdict {
    let mut count = 0;
    for r in reports {
        for c in &r.checks {
            ensure(c.status == CheckStatus::Pass, || {
                format!("{} {:?}: {:?} {}", r.suite, r.params, c.status, c.detail)
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} checks over {} reports", reports.len()))
}

fn criterion_1() -> Verdict {
    let mut cases = 0;
    for (p, n) in DICKSON_CASES {
        let ctx = DicksonContext::new(p, n).map_err(|e| e.to_string())?;
        let by_det = dickson_all(&ctx).map_err(|e| e.to_string())?;
        for (i, c) in by_det.iter().enumerate() {
            let from_f = dickson_c_from_f(&ctx, i).map_err(|e| e.to_string())?;
            ensure(&from_f == c, || format!("C_{{{n},{i}}} at p={p}: routes differ"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} invariants"))
}

fn criterion_2() -> Verdict {
    for (p, n) in DICKSON_CASES {
        let ctx = DicksonContext::new(p, n).map_err(|e| e.to_string())?;
        let f = f_n_product(&ctx).map_err(|e| e.to_string())?;
        let rhs = &ctx.embed(&delta_ni(&ctx, n).map_err(|e| e.to_string())?) * &f;
        ensure(delta_full(&ctx) == rhs, || format!("(p,n)=({p},{n})"))?;
    }
    Ok(format!("{} cases", DICKSON_CASES.len()))
}

fn criterion_3() -> Verdict {
    let mut actions = 0;
    for (p, n) in DICKSON_CASES {
        let ctx = DicksonContext::new(p, n).map_err(|e| e.to_string())?;
        let cs = dickson_all(&ctx).map_err(|e| e.to_string())?;
        for seed in 0..50 {
            let g = random_gl(n, p as u32, 1000 + seed);
            ensure(g.det() != 0, || "singular sample".into())?;
            for (i, c) in cs.iter().enumerate() {
                let moved = gl_action(c, &g).map_err(|e| e.to_string())?;
                ensure(&moved == c, || format!("C_{{{n},{i}}} moved at p={p}, seed {seed}"))?;
                actions += 1;
            }
        }
    }
    Ok(format!("{actions} matrix actions"))
}

fn criterion_4() -> Verdict {
    let reports = [
        verify_representation(3, 1),
        verify_representation(5, 1),
        verify_representation(3, 2),
    ];
    for r in &reports[..2] {
        ensure(r.checks.iter().any(|c| c.name.contains("determinant")), || {
            "basis determinant missing".into()
        })?;
    }
    ensure(reports[2].checks.iter().any(|c| c.detail.contains("81")), || {
        "81 Kronecker indices".into()
    })?;
    all_pass(&reports)
}

fn criterion_5() -> Verdict {
    let mut cases = 0;
    for (p, l) in [(3, 1), (3, 2), (5, 1), (5, 2)] {
        let x = x_class(p, l).map_err(|e| e.to_string())?;
        for i in 0..=4 {
            let q = milnor_q(i, &x).map_err(|e| e.to_string())?;
            let r = r_closed(p, i, l).map_err(|e| e.to_string())?;
            ensure(q == r, || format!("Q_{i} at (p,l)=({p},{l})"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn criterion_6() -> Verdict {
    let report = verify_steenrod(3, 2, 200, 2024);
    let wanted = ["β²", "derivation", "Q_iQ_j", "homomorphism"];
    for w in wanted {
        let c = report
            .checks
            .iter()
            .find(|c| c.name.contains(w))
            .ok_or(format!("no check {w}"))?;
        ensure(c.status == CheckStatus::Pass, || format!("{}: {}", c.name, c.detail))?;
        ensure(c.detail.starts_with(|ch: char| ch.is_ascii_digit()), || {
            c.detail.clone()
        })?;
        let n: usize = c.detail.split(' ').next().unwrap().parse().unwrap();
        ensure(n >= 200, || format!("{}: only {n} samples", c.name))?;
    }
    all_pass(&[report])
}

fn criterion_7() -> Verdict {
    let reports: Vec<_> = CHERN_CASES
        .iter()
        .map(|&(p, l)| verify_jacobian_independence(p, l))
        .collect();
    all_pass(&reports)
}

fn criterion_8() -> Verdict {
    let mut reports = Vec::new();
    for (p, l) in CHERN_CASES {
        let ctx = ChernContext::new(p, l).map_err(|e| e.to_string())?;
        reports.push(verify_chern_parts(&ctx));
    }
    let ctx = ChernContext::new(3, 2).unwrap();
    let top = total_conj_chern(&ctx).map_err(|e| e.to_string())?.degrees().max();
    ensure(top == Some(80), || format!("(3,2) product has top degree {top:?}"))?;
    all_pass(&reports)
}

fn criterion_9() -> Verdict {
    let mut reports = Vec::new();
    for (p, l) in CHERN_CASES {
        let ctx = ChernContext::new(p, l).map_err(|e| e.to_string())?;
        reports.push(verify_top_chern(&ctx));
    }
    all_pass(&reports)
}

fn criterion_10() -> Verdict {
    all_pass(&[verify_vistoli(3), verify_vistoli(5)])
}

fn criterion_11() -> Verdict {
    all_pass(&[verify_signs()])
}

fn criterion_12() -> Verdict {
    let report = verify_relations_suite(3, false);
    let identities = report.checks.iter().filter(|c| c.name.contains("= Δ_{4,")).count();
    let scaled = report.checks.iter().filter(|c| c.name.contains("R_4(r)")).count();
    let displays = report.checks.iter().filter(|c| c.name.starts_with("r_1")).count();
    ensure((identities, scaled, displays) == (5, 5, 4), || {
        format!("counts {identities}/{scaled}/{displays}")
    })?;
    all_pass(&[report])
}

fn check_schema(text: &str) -> Result<(), String> {
    let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let canonical = serde_json::to_string_pretty(&v).unwrap() + "\n";
    ensure(canonical == text, || {
        "not canonical (sorted keys, two-space indent, trailing LF)".into()
    })?;
    let top = v.as_object().ok_or("top level is not an object")?;
    let keys: BTreeSet<&str> = top.keys().map(String::as_str).collect();
    let expected: BTreeSet<&str> = ["checks", "overall", "params", "seed", "suite", "version"].into();
    ensure(keys == expected, || format!("top-level keys {keys:?}"))?;
    ensure(top["suite"].is_string() && top["version"].is_string(), || {
        "suite/version".into()
    })?;
    ensure(top["params"].is_object() && top["seed"].is_u64(), || {
        "params/seed".into()
    })?;
    ensure(top["overall"] == "pass", || format!("overall {}", top["overall"]))?;
    let checks = top["checks"].as_array().ok_or("checks is not an array")?;
    ensure(!checks.is_empty(), || "no checks".into())?;
    for c in checks {
        let c = c.as_object().ok_or("check is not an object")?;
        let keys: BTreeSet<&str> = c.keys().map(String::as_str).collect();
        ensure(keys == ["detail", "elapsed_ms", "name", "status"].into(), || {
            format!("check keys {keys:?}")
        })?;
        ensure(
            c["name"].is_string() && c["detail"].is_string() && c["elapsed_ms"].is_u64(),
            || "check field types".into(),
        )?;
        ensure(["pass", "fail", "skipped"].iter().any(|s| c["status"] == *s), || {
            "status".into()
        })?;
    }
    Ok(())
}

fn criterion_13() -> Verdict {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_verify"))
            .args([
                "--suite",
                "all",
                "--p",
                "3",
                "--l",
                "2",
                "--seed",
                "42",
                "--format",
                "json",
                "--threads",
                "1",
            ])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), || format!("exit {:?}", out.status.code()))?;
        String::from_utf8(out.stdout).map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    ensure(first == second, || "output differs between runs".into())?;
    check_schema(&first)?;
    Ok(format!("{} bytes, byte-identical", first.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        (1, "Dickson two-route agreement", 30, criterion_1),
        (2, "factorization Δ_n(X) = Δ_{n-1}(x_n) f_n(X)", 30, criterion_2),
        (3, "GL-invariance, 50 matrices per case", 60, criterion_3),
        (4, "representation relations and weights", 60, criterion_4),
        (5, "Milnor closed form Q_i(x̄) = r_i", 120, criterion_5),
        (6, "Steenrod structure on 200 samples", 60, criterion_6),
        (7, "Jacobian independence", 30, criterion_7),
        (8, "Chern product graded parts", 300, criterion_8),
        (9, "top Chern class identities", 60, criterion_9),
        (10, "rank-two relations", 60, criterion_10),
        (11, "sign identity", 1, criterion_11),
        (12, "R_j relations at p = 3", 600, criterion_12),
        (13, "CLI contract", 900, criterion_13),
    ];
    let mut failures = Vec::new();
    for (id, title, budget, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(d) if elapsed > Duration::from_secs(budget) => Err(format!("{d}; over budget {budget} s")),
            v => v,
        };
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!(
            "{tag} criterion {id:>2}: {title} [{:.2} s / {budget} s] {detail}",
            elapsed.as_secs_f64()
        );
        if verdict.is_err() {
            failures.push(id);
        }
    }
    if failures.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failures:?}");
        ExitCode::FAILURE
    }
}
