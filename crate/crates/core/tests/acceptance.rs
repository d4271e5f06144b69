//! Acceptance criteria 1 to 10, each reduced to verification records and
//! printed as one PASS/FAIL line.  Runs without the test harness so the
//! lines always show up in `cargo test` output.

use std::process::ExitCode;
use std::time::Instant;

use weylphi::fq::GroupKind;
use weylphi::verify::{self, Record, Status};
use weylphi::Result;

fn fq(instances: &[(GroupKind, u64)]) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for &(k, q) in instances {
        out.extend(verify::fq_suite(k, q)?);
    }
    Ok(out)
}

type Check = Box<dyn Fn() -> Result<Vec<Record>>>;

fn criteria() -> Vec<(u32, &'static str, Check)> {
    vec![
        (1, "excellent decompositions, n <= 9", Box::new(|| verify::excellent(9))),
        (2, "Jordan types of u_w, n <= 6", Box::new(|| verify::jordan(6))),
        (3, "psi, X = 2Y, injectivity, centralizer dimensions", Box::new(|| verify::identities(12, 14))),
        (4, "exceptional tables", Box::new(verify::tables_suite)),
        (
            5,
            "minimal meeting class in Sp4(F3), Coxeter cells of SL3(F2), SL3(F3)",
            Box::new(|| fq(&[(GroupKind::Sp4, 3), (GroupKind::Sl3, 2), (GroupKind::Sl3, 3)])),
        ),
        (
            6,
            "Sp4(F2): elliptic classes meet Phi(C)",
            Box::new(|| Ok(fq(&[(GroupKind::Sp4, 2)])?.into_iter().filter(|r| r.case.contains("contains phi")).collect())),
        ),
        (
            7,
            "isotropy in Sp4(F3) and SL3(F2)",
            Box::new(|| {
                let mut out = verify::isotropy(GroupKind::Sp4, 3)?;
                out.extend(verify::isotropy(GroupKind::Sl3, 2)?);
                Ok(out)
            }),
        ),
        (8, "Sp4 centralizer growth at q = 3, 5, 7", Box::new(|| verify::csmall(&[3, 5, 7]))),
        (
            9,
            "canonical basis and Lambda bounds",
            Box::new(|| {
                let mut out = verify::canonical_u_w(6)?;
                out.extend(verify::canonical_fq()?);
                Ok(out)
            }),
        ),
        (10, "label of u_w against Phi(C) (empirical)", Box::new(|| verify::conjecture(6))),
    ]
}

fn main() -> ExitCode {
    // `cargo test -- <filter>` passes arguments; run everything regardless,
    // but honor --list so test discovery stays quiet
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let mut failed = 0;
    for (k, name, run) in criteria() {
        let start = Instant::now();
        let line = match run() {
            Ok(records) => {
                let fails: Vec<&Record> = records.iter().filter(|r| r.status == Status::Fail).collect();
                let reports = records.iter().filter(|r| r.status != Status::Pass && r.status != Status::Fail).count();
                let verdict = if fails.is_empty() && !records.is_empty() { "PASS" } else { "FAIL" };
                if verdict == "FAIL" {
                    failed += 1;
                }
                let mut s = format!("criterion {k}: {verdict}  {name}  ({} checks", records.len());
                if reports > 0 {
                    s += &format!(", {reports} informational");
                }
                s += &format!(", {:.1}s)", start.elapsed().as_secs_f64());
                for f in fails.iter().take(3) {
                    s += &format!("\n    failed: {} {}", f.case, f.counterexample.as_ref().map(|v| v.to_string()).unwrap_or_default());
                }
                s
            }
            Err(e) => {
                failed += 1;
                format!("criterion {k}: FAIL  {name}  (error: {e})")
            }
        };
        println!("{line}");
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
