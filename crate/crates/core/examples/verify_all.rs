//! Run every verification suite up to its exhaustive ceiling, or up to a
//! smaller bound given on the command line.

use rsk_sign::verify::{run_suite, Suite};

fn main() -> rsk_sign::Result<()> {
    let bound: Option<usize> = std::env::args().nth(1).and_then(|s| s.parse().ok());
    let mut failed = false;
    for suite in Suite::ALL {
        let n_max = bound.map_or(suite.ceiling(), |b| b.min(suite.ceiling()));
        let report = run_suite(suite, n_max, None)?;
        println!("{}", report.summary_line());
        failed |= !report.passed();
    }
    if failed {
        std::process::exit(2);
    }
    Ok(())
}
