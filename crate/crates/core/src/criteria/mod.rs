//! Theorem-based classifiers cross-checked against the definitional test,
//! probes of open questions, and the verification suites.

mod probe;
mod report;
mod suites;
mod theorems;

pub use probe::{
    open_question_probe, CollapseFinding, CoverFinding, ProbeReport, QuotientFinding, SocleFinding,
};
pub use report::{classify, ClassificationReport, TheoremReport};
pub use suites::{
    run_suite, Suite, SuiteOptions, SuiteReport, EXHAUSTIVE_LAW_LIMIT, GRADING_PAIRS, GRADING_SEED,
    SCHEMA, SIGN_CHECK_RANK,
};
pub use theorems::{
    ann2_essential, is_power_of_two, lemma22_check, prop24_check, prop28_report, thm13_check,
    thm14_check, thm15_part1_check, Prop28Report, Thm14Verdict, Thm15Report,
};
