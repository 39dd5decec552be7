//! Step through Schensted insertion and invert it again.
//!
//! ```text
//! cargo run --example rsk_basics -- 2 9 1 5 6 4 8 3 7
//! ```

use rsk_sign::rsk::{lds, lis, RskStepper};
use rsk_sign::{rsk, rsk_inverse, Permutation};

fn main() -> rsk_sign::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pi: Permutation = if args.is_empty() {
        "2 9 1 5 6 4 8 3 7".parse()?
    } else {
        args.join(" ").parse()?
    };

    for step in RskStepper::new(&pi) {
        println!(
            "insert {} -> new square in row {}, bumped along {:?}",
            step.value,
            step.trace.stop_row(),
            step.trace.bump_path
        );
    }

    let pair = rsk(&pi);
    println!("P =\n{}\nQ =\n{}", pair.p(), pair.q());
    println!("shape {}  lis {}  lds {}", pair.shape(), lis(&pi), lds(&pi));

    let back = rsk_inverse(&pair);
    assert_eq!(back, pi);
    println!("inverse map recovers {back}");
    Ok(())
}
