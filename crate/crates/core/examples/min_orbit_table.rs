//! The min-orbit table: the smallest nonzero Weyl orbit `c(Δ)` of every
//! irreducible root system up to rank 8, with the fundamental weights
//! that realise it.
//!
//! Run with `cargo run --release --example min_orbit_table`.

use realspher::families::tables::min_orbit_table;
use realspher::rootsys::{self, RootSystemSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("system\tc\tclosed form\tminimal rays");
    for spec in RootSystemSpec::all_up_to_rank(8) {
        let rs = rootsys::cached(spec)?;
        println!(
            "{spec}\t{}\t{}\t{:?}",
            rs.min_orbit_size(),
            min_orbit_table(spec),
            rs.minimal_orbit_rays()
        );
    }
    Ok(())
}
