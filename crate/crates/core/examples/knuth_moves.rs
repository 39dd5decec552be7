//! Walk a Knuth class by elementary moves and watch inv(Q) change.

use rsk_sign::knuth::{
    applicable_moves, apply_move, canonical_involution, canonical_tau, knuth_class,
};
use rsk_sign::rsk::insertion_tableau;
use rsk_sign::{rsk, Permutation};

fn main() -> rsk_sign::Result<()> {
    let pi: Permutation = "3 1 4 2 5".parse()?;
    let inv_q = rsk(&pi).q().inversions();
    println!("{pi}  P =\n{}\n", insertion_tableau(&pi));

    for m in applicable_moves(&pi) {
        let sigma = apply_move(&pi, m)?;
        println!(
            "{m:<20} {sigma}   inv(Q): {} -> {}",
            inv_q,
            rsk(&sigma).q().inversions()
        );
    }

    let class = knuth_class(&pi);
    println!("\nclass of {pi} has {} members:", class.len());
    for sigma in &class {
        println!("  {sigma}");
    }
    println!("involution in the class: {}", canonical_involution(&pi));
    println!("superstandard recording: {}", canonical_tau(&pi));
    Ok(())
}
