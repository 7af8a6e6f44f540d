//! Brute force: build small rings as tables, enumerate every unital subring
//! and compare the maximal ones with the predicted sets.
//!
//! cargo run --release --example ring_oracle

use steinitz::finring::{
    enumerate_subrings, make_dual, make_gf, maximal_subrings, predict_and_compare, saturated_chains, Family,
    RingBounds,
};

fn main() -> steinitz::Result<()> {
    let bounds = RingBounds::default();

    let f4 = make_gf(2, 2, bounds)?;
    let t = make_dual(&f4, bounds)?;
    let lattice = enumerate_subrings(&t, bounds)?;
    println!("F_4[x]/(x^2) has {} unital subrings", lattice.len());
    for s in &lattice.subrings {
        println!("  {:?}", t.set_labels(s));
    }
    for m in maximal_subrings(&lattice) {
        println!("maximal: {:?}", t.set_labels(&m));
    }

    let f64 = make_gf(2, 6, bounds)?;
    let l = enumerate_subrings(&f64, bounds)?;
    let chains = saturated_chains(&l, &f64);
    let sizes: Vec<Vec<usize>> = chains.chains.iter().map(|c| c.iter().map(|&i| l.subrings[i].len()).collect()).collect();
    println!("chains in F_64: {sizes:?}, uniform: {:?}", chains.uniform);

    for family in [Family::Gf { p: 2, n: 12 }, Family::Dual { p: 3, n: 2 }, Family::Product { p: 2, n: 3 }] {
        let c = predict_and_compare(family, bounds)?;
        println!(
            "{family}: {} elements, predicted {}, observed {}, sets equal: {}",
            c.ring_size,
            c.predicted_count(),
            c.observed_count(),
            c.sets_equal()
        );
    }
    Ok(())
}
