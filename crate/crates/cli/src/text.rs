//! Human-readable renderings of the JSON reports.

use std::fmt::Write;

use ringlab_core::criteria::{ClassificationReport, ProbeReport, SocleFinding, SuiteReport};

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn classification(r: &ClassificationReport) -> String {
    let p = &r.predicates;
    let mut s = String::new();
    let _ = writeln!(s, "ring                 {}", r.name);
    let _ = writeln!(s, "size                 {}", r.size);
    let _ = writeln!(s, "characteristic       {}", r.characteristic);
    let _ = writeln!(s, "center size          {}", r.center_size);
    let _ = writeln!(s, "centrally essential  {}", yn(r.centrally_essential));
    if let Some(w) = &r.witness {
        let _ = writeln!(s, "  witness            {w:?}");
    }
    let _ = writeln!(s, "idempotents          {}", r.idempotents);
    let _ = writeln!(s, "|J(R)|               {}", r.radical_size);
    let _ = writeln!(s, "commutative          {}", yn(p.commutative));
    let _ = writeln!(s, "zero divisors        {}", yn(p.has_zero_divisors));
    let _ = writeln!(s, "reduced              {}", yn(p.reduced));
    let _ = writeln!(s, "semiprime            {}", yn(p.semiprime));
    let _ = writeln!(s, "regular              {}", yn(p.regular));
    let _ = writeln!(s, "right nonsingular    {}", yn(p.right_nonsingular));
    s
}

pub fn exterior(
    base: &str,
    n: u32,
    size: u128,
    dims: &[u64],
    fast: bool,
    written: Option<&str>,
) -> String {
    let mut s = format!("Λ({base}^{n}): {size} elements, graded dimensions {dims:?}\n");
    let _ = writeln!(
        s,
        "centrally essential by the base-ring criterion: {}",
        yn(fast)
    );
    if let Some(p) = written {
        let _ = writeln!(s, "ring spec written to {p}");
    }
    s
}

pub fn suite(r: &SuiteReport) -> String {
    let mut s = String::new();
    for t in &r.reports {
        let status = match (t.skipped, t.passed) {
            (true, _) => "skip",
            (false, true) => "ok",
            (false, false) => "FAIL",
        };
        let n = t.n.map(|n| format!(" n={n}")).unwrap_or_default();
        let note = t
            .note
            .as_deref()
            .map(|x| format!("  ({x})"))
            .unwrap_or_default();
        let _ = writeln!(s, "{status:<5}{} {}{n}{note}", t.theorem, t.ring);
    }
    let _ = writeln!(
        s,
        "{}: {} checks, {} skipped, {} failures",
        r.suite, r.checks, r.skipped, r.failures
    );
    s
}

pub fn probe(r: &ProbeReport) -> String {
    let mut s = format!("probe {}\n", r.ring);
    let _ = writeln!(
        s,
        "Q1 R/J commutative: {} (|R/J| = {})",
        yn(r.q1.commutative),
        r.q1.quotient_size
    );
    let _ = writeln!(s, "Q2 collapses to Q1 since N(R) = J(R)");
    match &r.q3 {
        SocleFinding::Computed {
            socle_over_center,
            socle_right,
            equal,
        } => {
            let _ = writeln!(
                s,
                "Q3 Soc(R_C) = Soc(R_R): {} ({socle_over_center} vs {socle_right} elements)",
                yn(*equal)
            );
        }
        SocleFinding::Skipped { reason } => {
            let _ = writeln!(s, "Q3 skipped: {reason}");
        }
    }
    let q = &r.q4;
    let _ = writeln!(
        s,
        "Q4 R = C + J: {} (|C| = {}, |J| = {}, |C∩J| = {}, |C+J| = {})",
        yn(q.holds),
        q.center_size,
        q.radical_size,
        q.intersection_size,
        q.sum_size
    );
    s
}
