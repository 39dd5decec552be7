//! Inversion generating functions of all shapes of size n, as a table or CSV.
//!
//! ```text
//! cargo run --example imbalances -- 6
//! cargo run --example imbalances -- 6 --csv
//! ```

use rsk_sign::imbalance::{hook_imbalance, imbalance_table, signed_square_sum, write_csv};
use rsk_sign::Partition;

fn main() -> rsk_sign::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let table = imbalance_table(n)?;

    if args.next().as_deref() == Some("--csv") {
        return write_csv(&table, std::io::stdout().lock());
    }

    for record in &table {
        println!("{}", record.table_line());
        if let Some(k) = record.shape.hook_arm() {
            assert_eq!(hook_imbalance(n, k)?, record.imbalance);
        }
    }
    println!("sum of (-1)^e I^2 = {}", signed_square_sum(n)?);

    let shape: Partition = "4,3,1,1".parse()?;
    let r = rsk_sign::imbalance::imbalance_polynomial(&shape)?;
    println!("\n{shape}: I(q) = {}", r.polynomial.pretty());
    Ok(())
}
