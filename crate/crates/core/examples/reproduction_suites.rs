//! Runs the fast reproduction suites and prints one line per check.

use nuinv::harness::{run_suite, Suite};

fn main() {
    for suite in [Suite::Examples5, Suite::Ziegler, Suite::OracleFreeNilpotent, Suite::Geometry] {
        let checks = run_suite(suite);
        let failed = checks.iter().filter(|c| !c.passed).count();
        println!("# {suite}: {} checks, {failed} failed", checks.len());
        for c in checks {
            println!("{c}");
        }
    }
}
