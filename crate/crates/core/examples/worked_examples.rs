//! Three fields with unusual maximal subrings.
//!
//! cargo run --example worked_examples

use std::collections::BTreeMap;

use steinitz::{Embedding, Exponent, FgSet, FieldDescriptor, SupernaturalNumber, Universe};

fn main() -> steinitz::Result<()> {
    // 2 free, 3 capped at 2: one maximal subring, which misses F_{q^9}
    let e: FieldDescriptor = "char=5; 2^inf,3^2".parse()?;
    let m = &e.rgmax_list()?[0];
    let sub: FieldDescriptor = "char=5; 3^2".parse()?;
    println!("{e}: only maximal subring {m}");
    println!("  {sub} inside it? {}", sub.is_subfield_of(m));
    if let Embedding::Blocked { witness } = e.embed_in_maximal(&sub)? {
        println!("  blocked at prime {witness}");
    }

    // one maximal subring over a subfield with countably many
    let e: FieldDescriptor = "char=11; 2^3,5^0; rest=inf".parse()?;
    let f: FieldDescriptor = "char=11; 2^3,5^0; rest=1".parse()?;
    println!("{e}: {} maximal subrings", e.rgmax_count());
    println!("{f}: {} maximal subrings, [E:F] = {}", f.rgmax_count(), e.degree(&f)?);

    // a two-sided chain of maximal subfields, truncated to the first ten primes
    let universe = Universe::first_primes(10);
    let ps = steinitz::primes::first_primes(10);
    let t = |indices: Vec<usize>| -> FgSet {
        let map: BTreeMap<u64, Exponent> = indices.into_iter().map(|i| (ps[i], Exponent::Finite(1))).collect();
        SupernaturalNumber::new(map, Exponent::ZERO, universe.clone()).unwrap().into()
    };
    let odd = |from: usize| (from..10).step_by(2).collect::<Vec<_>>();
    let window = [
        t(odd(5)),
        t(odd(3)),
        t(odd(1)),
        t([vec![2], odd(1)].concat()),
        t([vec![2, 4], odd(1)].concat()),
    ];
    for (n, pair) in (-2..).zip(window.windows(2)) {
        println!("T_{n} = {} is maximal in T_{} = {}: {}", pair[0], n + 1, pair[1], pair[0].is_maximal_fg_subset_of(&pair[1])?);
    }
    Ok(())
}
