//! Saturated chains of maximal subrings. They all have the same length and
//! all end at L(E).
//!
//! cargo run --example chains

use steinitz::FieldDescriptor;

fn main() -> steinitz::Result<()> {
    let e: FieldDescriptor = "char=5; 2^2,3,7^inf".parse()?;
    let report = e.chain_stats(true)?;
    println!("{e}: {} chains of length {} down to {}", report.chain_count, report.length, report.terminus);
    for chain in report.chains.unwrap_or_default() {
        let steps: Vec<String> = chain.iter().map(|f| f.content().to_string()).collect();
        println!("  {}", steps.join(" > "));
    }

    // counting without listing is memoized
    let big: FieldDescriptor = "char=2; 2^3,3^3,5^3,7^3".parse()?;
    println!("{big}: {} chains", big.chain_stats(false)?.chain_count);

    let mut longest = 0;
    let n = big.for_each_chain(|c| {
        longest = longest.max(c.len());
        Ok(())
    })?;
    println!("streamed {n} chains, each with {longest} fields");

    let too_many: FieldDescriptor = "char=2; 2^2,3^2,5^2,7^2,11^2,13^2,17^2".parse()?;
    println!("{too_many}: {}", too_many.chain_stats(true).unwrap_err());
    Ok(())
}
