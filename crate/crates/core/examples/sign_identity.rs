//! Compare the sign of a permutation with the sign read off its tableaux,
//! then sweep all of S_n.

use rsk_sign::{rsk, Permutation};

fn main() -> rsk_sign::Result<()> {
    let pi: Permutation = "2 9 1 5 6 4 8 3 7".parse()?;
    let pair = rsk(&pi);
    let (p, q) = (pair.p(), pair.q());
    println!("pi = {pi}");
    println!("inv(P) = {}, inv(Q) = {}", p.inversions(), q.inversions());
    println!("e = {}", pair.shape().even_row_total());
    println!(
        "sign(P) sign(Q) (-1)^e = {}, sign(pi) = {}",
        pair.sign_from_tableaux(),
        pi.sign()
    );

    for n in 0..=7 {
        let mismatches = Permutation::all(n)
            .filter(|pi| rsk(pi).sign_from_tableaux() != pi.sign())
            .count();
        println!("n = {n}: {mismatches} mismatches");
    }
    Ok(())
}
