//! Checks the shipped catalog and all regression suites, printing a
//! summary per suite and every line that is not OK.
//!
//! Run with `cargo run --release --example verify_catalog`.

use realspher::catalog::Catalog;
use realspher::criteria::{verify_suites, LineOutcome};
use realspher::report::Summary;

fn main() {
    let mut suites: Vec<(String, Vec<_>)> = verify_suites(4)
        .into_iter()
        .map(|s| (s.suite.to_string(), s.lines))
        .collect();
    suites.push(("catalog".into(), Catalog::shipped().report()));
    for (name, lines) in &suites {
        let s = Summary::of(lines);
        println!("{name}: {} OK, {} MISMATCH, {} UNKNOWN", s.ok, s.mismatch, s.unknown);
        for l in lines.iter().filter(|l| l.outcome != LineOutcome::Ok) {
            println!(
                "  {} {} computed {} expected {}: {}",
                l.id, l.flag, l.computed, l.expected, l.witness
            );
        }
    }
}
