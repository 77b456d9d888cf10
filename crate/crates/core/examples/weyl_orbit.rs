//! Weyl-group orbit sizes: orbit-stabilizer formula against breadth-first
//! enumeration, for the fundamental weights of a few root systems.
//!
//! Run with `cargo run --example weyl_orbit`.

use realspher::rootsys::{self, RootSystemSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["A3", "B3", "C3", "D4", "G2", "F4"] {
        let spec: RootSystemSpec = name.parse()?;
        let rs = rootsys::cached(spec)?;
        println!("{spec}: #W = {}", rs.weyl_order());
        for (i, w) in rs.fundamental_weights().iter().enumerate() {
            let formula = rs.orbit_size(w)?;
            let bfs = rs.orbit_bfs(w).len();
            println!("  ω{} = ({w}): #W/#W_λ = {formula}, BFS = {bfs}", i + 1);
        }
    }
    Ok(())
}
