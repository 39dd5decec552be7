//! The {213, 231}-avoiders, their hook tableaux and signed lis counts.

use rsk_sign::patterns::{
    avoider_sign_lis_closed_form, descent_structure_check, enumerate_avoiders, hook_patterns,
    is_hook_identity_form, signed_lis_polynomial,
};
use rsk_sign::rsk::lis;

fn main() -> rsk_sign::Result<()> {
    let patterns = hook_patterns();

    for pi in enumerate_avoiders(4, &patterns) {
        let k = is_hook_identity_form(&pi).expect("avoiders have hook insertion tableaux");
        assert!(descent_structure_check(&pi, k));
        println!("{pi}  arm {k}  lis {}  sign {}", lis(&pi), pi.sign());
    }

    println!();
    for n in 1..=10 {
        let brute = signed_lis_polynomial(enumerate_avoiders(n, &patterns))?;
        let closed = avoider_sign_lis_closed_form(n)?;
        assert_eq!(brute, closed);
        println!("n = {n:>2}: {}", closed.pretty());
    }
    Ok(())
}
