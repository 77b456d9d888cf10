//! Classifies a few symmetric pairs and prints each verdict with the rules
//! and generic tests that support it.
//!
//! Run with `cargo run --example classify_pair [SPEC]`.

use realspher::criteria::{classify, Flag};
use realspher::families::PairSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let specs = if arg.is_empty() {
        vec![
            "upq R 2 1 3 0",
            "rank1 Iw_O",
            "upq R 2 2 2 1",
            "sostar 2 2",
            "exc7 e6(-14)/so(8,2)+iR",
        ]
        .into_iter()
        .map(String::from)
        .collect()
    } else {
        vec![arg]
    };
    for text in specs {
        let spec: PairSpec = text.parse()?;
        let v = classify(&spec)?;
        let flags: Vec<String> = Flag::ALL.iter().map(|f| format!("{f}={}", v.get(*f))).collect();
        println!("{spec}: {}", flags.join(" "));
        for p in &v.provenance {
            let flag = p.flag.map(|f| f.as_str()).unwrap_or("*");
            println!("  [{flag}] {}: {}", p.rule_id, p.citation);
        }
        for t in &v.tests {
            println!("  test {} {}: {}", t.id, t.outcome, t.witness);
        }
    }
    Ok(())
}
