//! Which affine algebras over described fields have finitely many maximal
//! subrings.
//!
//! cargo run --example affine

use steinitz::affine::{decide, decide_variety};
use steinitz::syntax::parse_variety;
use steinitz::AffineDescriptor;

fn main() -> steinitz::Result<()> {
    for text in [
        "affine: base=char=2; 1; gens=alg(4),alg(6); kind=domain",
        "affine: base=closed(2); gens=alg(5); kind=domain",
        "affine: base=char=3; 1; gens=transc; kind=field",
        "affine: base=char0; gens=; kind=domain",
        "affine: base=char=2; 1; rest=1; gens=alg(2); kind=field",
        "affine: base=char=2; 2,3^0; rest=inf; gens=; kind=reduced(char=2; 2^2,3^0; rest=inf | char=2; 2^2,3^0; rest=inf)",
        "affine: base=char=2; 1; gens=; kind=reduced(char=2; 2 | char=2; 3)",
    ] {
        let d: AffineDescriptor = text.parse()?;
        println!("{d}\n  -> {}", decide(&d)?);
    }
    for text in ["variety: base=char=2; 2; points=3", "variety: base=closed(3); points=1", "variety: base=closed(3); points=2"] {
        let (base, points) = parse_variety(text)?;
        println!("{text}\n  -> {}", decide_variety(&base, points)?);
    }
    Ok(())
}
