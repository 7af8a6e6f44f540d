//! FG-sets: divisor- and lcm-closed sets of naturals, with their orders and
//! maximal FG-subsets.
//!
//! cargo run --example fgsets

use steinitz::fgset::{fg, MaximalSubsets};

fn main() -> steinitz::Result<()> {
    let t = fg("2^inf,3^2,5")?;
    let members: Vec<u64> = (1..=40).filter(|&n| t.member(n).unwrap()).collect();
    println!("T = {t}");
    println!("members up to 40: {members:?}");
    for q in [2, 3, 6, 7] {
        println!("o_T({q}) = {}", t.order(q)?);
    }
    let parts = t.parts();
    println!("T_f = {}, T_inf = {}", parts.finite, parts.infinite);

    if let MaximalSubsets::Finite(subs) = t.maximal_fg_subsets() {
        for s in subs {
            println!("  maximal: {s}");
        }
    }

    // exponent 1 at almost every prime: one maximal subset per prime
    let wide = fg("2^inf; rest=1")?;
    if let MaximalSubsets::Infinite(family) = wide.maximal_fg_subsets() {
        let first: Vec<u64> = family.finite_part_primes().take(6).collect();
        println!("{wide} has infinitely many maximal subsets, at primes {first:?}, ...");
        println!("  the one at 7: {}", family.subset_at(7).expect("7 is in T_f"));
    }
    Ok(())
}
