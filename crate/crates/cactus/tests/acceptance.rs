//! Acceptance report: one PASS/FAIL line per criterion, in order, at full size.
//!
//! Built without the libtest harness so the report is never captured.

use std::process::ExitCode;

use cactus::selftest::{run_one, Level, CHECK_IDS};

fn main() -> ExitCode {
    let mut failed = 0;
    for id in CHECK_IDS {
        let r = run_one(id, Level::Full);
        println!("{r}");
        failed += usize::from(!r.passed);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        CHECK_IDS.count() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
