//! Restricted root data with `(m+, m-)` multiplicities and the invariants
//! derived from them: `Δ(n^{-σ})`, its independence, and the numbers
//! entering the flag-dimension inequality.
//!
//! Run with `cargo run --example restricted_datum`.

use realspher::families::{datum_of, PairSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in [
        "somn 3 2",
        "ugl spR 3",
        "oustar 2 2",
        "rank1 III 3",
        "exc7 e6(-14)/so(8,2)+iR",
    ] {
        let spec: PairSpec = text.parse()?;
        let d = datum_of(&spec)?;
        println!(
            "{spec}: rank a_H = {}, rank a_G = {}, h roots {}",
            d.rank_a_h(),
            d.rank_a_g(),
            d.h_root_system()
        );
        for r in d.positive_roots() {
            println!("  ({}) m+ = {}, m- = {}", r.weight, r.m_plus, r.m_minus);
        }
        let inv = d.derive()?;
        println!(
            "  #Δ = {}, independent = {}, n(G) = {}, n(H) = {}, m(G) = {}",
            inv.delta_n_minus_count,
            d.check_independence(),
            inv.n_g,
            inv.n_h,
            inv.m_g
        );
    }
    Ok(())
}
