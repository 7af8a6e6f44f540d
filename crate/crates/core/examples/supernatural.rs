//! Steinitz numbers: parsing, divisibility, lcm/gcd and quotients.
//!
//! cargo run --example supernatural

use steinitz::{Exponent, SupernaturalNumber, Universe};

fn main() -> steinitz::Result<()> {
    let a: SupernaturalNumber = "2^inf,3^2".parse()?;
    let b: SupernaturalNumber = "2^3,5; rest=0".parse()?;
    let twelve = SupernaturalNumber::from_natural(12)?;

    println!("a = {a}");
    println!("b = {b}");
    println!("lcm(a, b) = {}", a.join(&b)?);
    println!("gcd(a, b) = {}", a.meet(&b)?);
    println!("12 | a ? {}", twelve.divides(&a)?);
    // ∞ - ∞ is taken to be 0
    println!("a / 12 = {}", a.quotient(&twelve)?);
    println!("a / 5 fails: {}", a.quotient(&SupernaturalNumber::from_natural(5)?).unwrap_err());

    let all = SupernaturalNumber::full();
    println!("every prime to infinity: {all}, exponent at 101 = {}", all.exponent(101));
    println!("gcd(a, b) as a natural: {:?}", a.meet(&b)?.natural_value());

    // restricted to the first five primes the default exponent is written out
    let small = Universe::first_primes(5);
    let c = SupernaturalNumber::new(Default::default(), Exponent::Finite(1), small)?;
    println!("squarefree over 2..11: {c} = {:?}", c.natural_value());
    Ok(())
}
