//! Maximal subrings of absolutely algebraic fields, read off the Steinitz
//! number.
//!
//! cargo run --example maximal_subrings

use steinitz::{Embedding, FieldDescriptor};

fn main() -> steinitz::Result<()> {
    let e: FieldDescriptor = "char=3; 2^inf,3^2,5".parse()?;
    println!("E = {e}");
    println!("|RgMax(E)| = {}", e.rgmax_count());
    for m in e.rgmax_list()? {
        println!("  {m}");
    }
    let l = e.largest_nonsubmaximal();
    println!("L(E) = {l}, [E : L(E)] = {}", e.degree(&l)?);

    let f12 = FieldDescriptor::finite(2, 12)?;
    let f2 = FieldDescriptor::finite(2, 1)?;
    println!("fields between F_2 and F_2^12: {}", f12.intermediate_count(&f2)?);

    let closure = FieldDescriptor::algebraic_closure(7)?;
    println!("{closure}: {} maximal subrings", closure.rgmax_count());
    println!("char=2; 1; rest=1: {} maximal subrings", "char=2; 1; rest=1".parse::<FieldDescriptor>()?.rgmax_count());

    // a proper subfield that no maximal subring contains
    let sub: FieldDescriptor = "char=3; 3^2,5".parse()?;
    match e.embed_in_maximal(&sub)? {
        Embedding::Maximal { subring, prime } => println!("{sub} lies in {subring} (prime {prime})"),
        Embedding::Blocked { witness } => println!("{sub} is in no maximal subring, blocked at {witness}"),
    }
    let sub: FieldDescriptor = "char=3; 2^inf".parse()?;
    if let Embedding::Maximal { subring, .. } = e.embed_in_maximal(&sub)? {
        println!("{sub} lies in {subring}");
    }
    Ok(())
}
