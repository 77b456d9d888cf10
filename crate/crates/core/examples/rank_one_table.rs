//! The rank-one table: multiplicity matrices of every row, the count of
//! weights with `m- > 0`, and the resulting (QP) and (PP) verdicts.
//!
//! Run with `cargo run --example rank_one_table`.

use realspher::criteria::classify;
use realspher::criteria::verify::rank_one_minus_count;
use realspher::families::tables::rank1_matrix;
use realspher::families::{enumerate, FamilyKind, PairSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("spec\tm+(λ),m+(2λ)\tm-(λ),m-(2λ)\t#m->0\tqp\tpp");
    for spec in enumerate(FamilyKind::Rank1, 3) {
        let PairSpec::Rank1 { row, p, q, .. } = spec else {
            continue;
        };
        let [plus, minus] = rank1_matrix(row, p, q);
        let v = classify(&spec)?;
        println!(
            "{spec}\t{},{}\t{},{}\t{}\t{}\t{}",
            plus[0],
            plus[1],
            minus[0],
            minus[1],
            rank_one_minus_count(row, p, q),
            v.qp,
            v.pp
        );
    }
    Ok(())
}
