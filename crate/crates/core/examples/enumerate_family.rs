//! Enumerates a family up to a parameter bound and tabulates the verdicts
//! next to the matching items of the classification lists.
//!
//! Run with `cargo run --example enumerate_family [FAMILY]`, e.g.
//! `cargo run --example enumerate_family upq H`.

use realspher::criteria::{classify, theorem_lists};
use realspher::families::{enumerate, FamilyKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let kind: FamilyKind = if arg.is_empty() { "upq R".parse()? } else { arg.parse()? };
    println!("spec\tqp\tpp\tbb\tlist item");
    for spec in enumerate(kind, 3) {
        let v = classify(&spec)?;
        let lists = theorem_lists(&spec);
        let item = lists.pp.or(lists.qp_only).unwrap_or_else(|| "-".into());
        println!("{spec}\t{}\t{}\t{}\t{item}", v.qp, v.pp, v.bb);
    }
    Ok(())
}
