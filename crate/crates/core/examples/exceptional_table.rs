//! The exceptional table: for each exceptional rank-equal pair, compares
//! `m(G)·rank` with `n(G) − n(H)` and shows the printed relation next to
//! the recomputed one.
//!
//! Run with `cargo run --example exceptional_table`.

use realspher::families::tables::EXCEPTIONAL_TABLE;

fn main() {
    println!("pair\tm(G)*rank\tn(G)-n(H)\trecomputed\tprinted\tinequality");
    for r in &EXCEPTIONAL_TABLE {
        let (a, rel, b) = r.printed;
        println!(
            "{}\t{}\t{}\t{}\t{a}{rel}{b}\t{}",
            r.name(),
            r.bound(),
            r.gap(),
            r.recomputed(),
            if r.inequality_holds() { "holds" } else { "fails" }
        );
    }
}
