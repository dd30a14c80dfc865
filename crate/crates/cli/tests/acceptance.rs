//! Acceptance run: each criterion prints one PASS/FAIL line, and the process
//! exits nonzero if any fails. Drives the `ringlab` binary end to end.

use std::collections::BTreeSet;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

fn run(args: &[&str]) -> (Output, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(args)
        .env_remove("RINGLAB_THREADS")
        .output()
        .expect("ringlab runs");
    (out, start.elapsed())
}

fn json(out: &Output) -> Result<Value, String> {
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr).trim()
        ));
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn reports(v: &Value) -> &[Value] {
    v["reports"].as_array().map(Vec::as_slice).unwrap_or(&[])
}

fn checked(v: &Value) -> impl Iterator<Item = &Value> {
    reports(v).iter().filter(|r| r["skipped"] == false)
}

/// A suite passes with zero failures and at least `min` checks run.
fn clean_suite(v: &Value, min: usize) -> Result<String, String> {
    let failures = v["failures"].as_u64().unwrap_or(u64::MAX);
    let checks = checked(v).count();
    if failures != 0 || v["passed"] != true {
        return Err(format!("{failures} failures"));
    }
    if checks < min {
        return Err(format!("only {checks} checks ran"));
    }
    Ok(format!("{checks} checks, 0 failures"))
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn c1() -> Result<String, String> {
    let (out, t) = run(&["--threads", "1", "classify", "corpus:lambda-f3-3"]);
    let v = json(&out)?;
    ensure(v["size"] == 6561, format!("size {}", v["size"]))?;
    ensure(
        v["center_size"] == 243,
        format!("center {}", v["center_size"]),
    )?;
    ensure(v["predicates"]["commutative"] == false, "commutative")?;
    ensure(v["centrally_essential"] == true, "not centrally essential")?;
    ensure(t < Duration::from_secs(10), format!("took {t:?}"))?;
    Ok(format!(
        "|R| = 6561, |C| = 243, noncommutative, centrally essential, {t:.2?} single-threaded"
    ))
}

fn c2() -> Result<String, String> {
    let (out, t) = run(&["--slow", "verify", "remark12"]);
    let v = json(&out)?;
    let mut points = BTreeSet::new();
    for r in checked(&v) {
        let p: u64 = r["ring"].as_str().unwrap_or("")[1..]
            .parse()
            .map_err(|_| "ring name")?;
        let n = r["n"].as_u64().unwrap_or(0);
        let expect = p == 2 || n % 2 == 1;
        ensure(
            r["oracle"] == expect,
            format!("F_{p}, n = {n}: oracle {}", r["oracle"]),
        )?;
        ensure(
            r["agreement"] == true,
            format!("F_{p}, n = {n}: disagreement"),
        )?;
        points.insert((p, n));
    }
    // 2^8, 3^8 and 5^8 are within 10^6; all nine points run
    let want: BTreeSet<(u64, u64)> = [2, 3, 5]
        .iter()
        .flat_map(|&p| (1..=3).map(move |n| (p, n)))
        .collect();
    ensure(points == want, format!("grid covered {points:?}"))?;
    ensure(t < Duration::from_secs(300), format!("took {t:?}"))?;
    Ok(format!(
        "9 grid points incl. Λ(F_5^3), 0 mismatches, {t:.2?}"
    ))
}

fn c3() -> Result<String, String> {
    let v = json(&run(&["verify", "thm13"]).0)?;
    let bases: BTreeSet<&str> = checked(&v).filter_map(|r| r["ring"].as_str()).collect();
    let want: BTreeSet<&str> = [
        "z2", "z3", "z4", "z6", "z8", "gf4", "gf9", "t2-f2", "m2-f2", "z2xz4",
    ]
    .into();
    ensure(bases == want, format!("bases {bases:?}"))?;
    for r in checked(&v) {
        ensure(
            r["agreement"] == true,
            format!("{} n = {}", r["ring"], r["n"]),
        )?;
    }
    // the only grid points above 10^5 must be the skipped ones
    for r in reports(&v).iter().filter(|r| r["skipped"] == true) {
        ensure(
            r["note"]
                .as_str()
                .is_some_and(|n| n.contains("above the grid bound")),
            "unexpected skip",
        )?;
    }
    clean_suite(&v, 20)
}

fn suite(name: &str, min: usize) -> Result<String, String> {
    clean_suite(&json(&run(&["--slow", "verify", name]).0)?, min)
}

fn c6() -> Result<String, String> {
    let v = json(&run(&["--slow", "verify", "prop28"]).0)?;
    let t2 = reports(&v)
        .iter()
        .find(|r| r["theorem"] == "t2-center-semiprime")
        .ok_or("no upper triangular check")?;
    ensure(t2["passed"] == true, "upper triangular example")?;
    Ok(format!(
        "{}; T2(F2): semiprime false, center semiprime true",
        clean_suite(&v, 10)?
    ))
}

fn c8() -> Result<String, String> {
    let (one, _) = run(&["--threads", "1", "verify", "all"]);
    let (eight, _) = run(&["--threads", "8", "verify", "all"]);
    json(&one)?;
    json(&eight)?;
    ensure(
        one.stdout == eight.stdout,
        "reports differ between 1 and 8 threads",
    )?;
    Ok(format!("{} bytes identical", one.stdout.len()))
}

fn c9() -> Result<String, String> {
    let v = json(&run(&["verify", "laws"]).0)?;
    let count = |t: &str| checked(&v).filter(|r| r["theorem"] == t).count();
    ensure(
        count("sign-cocycle") == 5 && count("anticommutativity") == 5,
        "sign checks for n <= 5",
    )?;
    ensure(count("ring-laws") >= 20, "too few exhaustive ring checks")?;
    let g = checked(&v)
        .find(|r| r["theorem"] == "grading")
        .ok_or("no grading check")?;
    ensure(
        g["note"].as_str().is_some_and(|n| n.starts_with("1000 ")),
        "grading pair count",
    )?;
    clean_suite(&v, 30)
}

fn c10() -> Result<String, String> {
    let v = json(&run(&["probe", "corpus:lambda-f3-3"]).0)?;
    ensure(v["q4"]["holds"] == true, "R = C + J fails")?;
    Ok(format!(
        "completed; Q4 holds (|C+J| = {}), Q1 = {}, Q3 {}",
        v["q4"]["sum_size"], v["q1"]["commutative"], v["q3"]["status"]
    ))
}

type Check = fn() -> Result<String, String>;

fn main() {
    let criteria: [(&str, Check); 10] = [
        (
            "Λ(F_3^3): size, center, noncommutative, centrally essential",
            c1,
        ),
        ("parity sweep over F_p, p in {2,3,5}, n in {1,2,3}", c2),
        (
            "base-ring criterion equals the oracle on built exterior algebras",
            c3,
        ),
        (
            "Ann(2) essential iff characteristic is a power of two",
            || suite("lemma22", 30),
        ),
        (
            "idempotents of centrally essential rings are central",
            || suite("prop24", 20),
        ),
        ("five conditions agree on centrally essential rings", c6),
        ("R/J(R) commutative and regular", || suite("thm15", 20)),
        ("reports identical under 1 and 8 threads", c8),
        ("ring laws, sign cocycle, anticommutativity, grading", c9),
        ("open-question probes on Λ(F_3^3)", c10),
    ];
    let mut failed = 0;
    for (i, (what, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {what}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {what}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
