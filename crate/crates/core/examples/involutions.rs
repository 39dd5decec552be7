//! Build the tableau of an involution straight from its cycles.
//!
//! ```text
//! cargo run --example involutions -- "(1,4)(6)(3,7)(2,8)(5,9)"
//! ```

use rsk_sign::involutions::{
    all_involutions, beissinger_build, beissinger_trace, cycle_decomposition,
    involution_sign_via_shape, CycleDecomposition,
};
use rsk_sign::rsk::insertion_tableau;

fn main() -> rsk_sign::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(1,4)(6)(3,7)(2,8)(5,9)".to_string());
    let cycles: CycleDecomposition = text.parse()?;
    let pi = cycles.to_permutation();
    println!("{cycles} = {pi}");

    let trace = beissinger_trace(&pi)?;
    for (cycle, snapshot) in cycle_decomposition(&pi)?.cycles().iter().zip(&trace) {
        println!("after {cycle}:\n{snapshot}\n");
    }

    let t = beissinger_build(&pi)?;
    assert_eq!(t, insertion_tableau(&pi));
    println!(
        "shape {} gives sign {}, direct sign {}",
        t.shape(),
        involution_sign_via_shape(&t.shape()),
        pi.sign()
    );

    for n in 1..=8 {
        let all = all_involutions(n);
        let agree = all
            .iter()
            .all(|pi| beissinger_build(pi).is_ok_and(|t| t == insertion_tableau(pi)));
        println!(
            "n = {n}: {} involutions, all agree with RSK: {agree}",
            all.len()
        );
    }
    Ok(())
}
