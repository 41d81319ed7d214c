//! Running the built-in verification suites at small bounds.

use permpat::verify::{self, Suite, SuiteConfig};

fn main() {
    for suite in Suite::ALL {
        let config = SuiteConfig { max_n: suite.min_sound_n().max(6), seed: verify::DEFAULT_SEED };
        let report = verify::run_suite(suite, &config);
        println!("{suite} (rank <= {}): {}", report.max_n, if report.passed { "pass" } else { "FAIL" });
        for check in &report.checks {
            let note = check.note.as_deref().map(|n| format!("  [{n}]")).unwrap_or_default();
            println!("  {:<32} {:>7} cases{note}", check.name, check.checked);
        }
    }
}
