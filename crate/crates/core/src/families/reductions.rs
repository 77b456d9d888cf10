//! Low-rank isomorphisms between presentations of the same symmetric pair.
//! Isomorphic presentations must receive identical verdicts.

use super::{Field, PairSpec, Rank1Row, RealForm};

/// Isomorphisms between fixed specs, as pairs of spec strings.
pub const FIXED_ISOMORPHISMS: [(&str, &str); 14] = [
    // (o(5,1), o(4)+o(1,1)) ≅ (su*(4), su(2)+su*(2)+R).
    ("upq R 1 4 1 0", "glgl H 1 1"),
    // (u(1,1), gl(1,C)) ≅ (o(2,1), o(1,1)) + (R, R).
    ("ugl C 1", "upq R 1 1 1 0"),
    // (sp(1,1), gl(1,H)) ≅ (o(4,1), o(3)+o(1,1)).
    ("ugl H 1", "upq R 1 3 1 0"),
    // (sp(1,R), gl(1,R)) ≅ (o(2,1), o(1,1)).
    ("ugl spR 1", "upq R 1 1 1 0"),
    // (o*(4), gl(1,H)) ≅ (o(2,1), o(1,1)) + (su(2), su(2)).
    ("ugl ostar 1", "upq R 1 1 1 0"),
    // (o(2,2), gl(2,R)) ≅ (o(2,1), o(1,1)) + (sl(2,R), sl(2,R)).
    ("ugl R 2", "upq R 1 1 1 0"),
    // (o(3,3), gl(3,R)) ≅ (sl(4,R), gl(3,R)).
    ("ugl R 3", "glgl R 3 1"),
    // (sp(2,R), sp(1,R)+sp(1,R)) ≅ (o(3,2), o(2,2)).
    ("sp R 1 1", "upq R 2 1 2 0"),
    // (sp(2,C), sp(1,C)+sp(1,C)) ≅ (o(5,C), o(4,C)).
    ("sp C 1 1", "somn 4 1"),
    // (o*(8), o*(4)+o*(4)) ≅ (o(2,6), o(2,2)+o(4)).
    ("sostar 2 2", "upq R 2 4 2 0"),
    // (o*(8), u(2,2)) ≅ (o(6,2), o(4,2)+o(2)).
    ("oustar 2 2", "upq R 4 2 2 0"),
    // (sl(2,R)+sl(2,R), diag) ≅ (o(2,2), o(2,1)).
    ("group so 2 1", "upq R 1 1 2 0"),
    // (sl(2,C)+sl(2,C), diag) ≅ (o(4,C), o(3,C)).
    ("group so 3 1", "somn 3 1"),
    ("e6so91", "exc7 e6(-26)/so(9,1)+R"),
];

/// Pairs outside the spec grammar that coincide with members of the
/// indefinite orthogonal or complex orthogonal families.
pub const NAMED_COINCIDENCES: [(&str, &str); 4] = [
    ("(sl(4,R), sp(2,R)) = (so(3,3), so(3,2))", "upq R 2 1 3 0"),
    ("(su(2,2), sp(2,R)) = (so(4,2), so(3,2))", "upq R 3 1 2 0"),
    ("(so(4,4), u(2,2)) = (so(4,4), so(4,2)+so(2))", "upq R 2 2 4 0"),
    ("(sl(4,C), sp(2,C)) = (so(6,C), so(5,C))", "somn 5 1"),
];

fn parse(s: &str) -> PairSpec {
    s.parse().expect("recorded isomorphism parses")
}

/// Specs recorded as isomorphic to `spec` (excluding `spec` itself).
pub fn isomorphic_reductions(spec: &PairSpec) -> Vec<PairSpec> {
    let mut out: Vec<PairSpec> = Vec::new();
    for (a, b) in FIXED_ISOMORPHISMS {
        let (a, b) = (parse(a), parse(b));
        if a == *spec {
            out.push(b);
        } else if b == *spec {
            out.push(a);
        }
    }
    let canon = |s: PairSpec| s.canonicalize().ok();
    match *spec {
        // (o*(2p+2), u(p,1)) is row III of the rank-one table with m = p−1.
        PairSpec::OuStar { p, q: 1 } if p >= 2 => {
            out.extend(canon(PairSpec::Rank1 {
                row: Rank1Row::III,
                dual: false,
                p: p - 1,
                q: 0,
            }));
        }
        PairSpec::Rank1 {
            row: Rank1Row::III,
            dual: false,
            p,
            ..
        } => {
            out.extend(canon(PairSpec::OuStar { p: p + 1, q: 1 }));
        }
        // Rows I_F and I_F^c are indefinite unitary pairs over F.
        PairSpec::Rank1 { row, dual, p, q } if matches!(row, Rank1Row::IR | Rank1Row::IC | Rank1Row::IH) => {
            let field = match row {
                Rank1Row::IR => Field::R,
                Rank1Row::IC => Field::C,
                _ => Field::H,
            };
            let upq = if dual {
                PairSpec::Upq {
                    field,
                    i: p + 1,
                    j: q,
                    k: 1,
                    l: 0,
                }
            } else {
                PairSpec::Upq {
                    field,
                    i: 1,
                    j: q,
                    k: p + 1,
                    l: 0,
                }
            };
            out.extend(canon(upq));
        }
        // II^c is the group case of so(m+1,1).
        PairSpec::Rank1 {
            row: Rank1Row::II,
            dual: true,
            p,
            ..
        } => {
            out.extend(canon(PairSpec::Group(RealForm::So(p + 1, 1))));
        }
        PairSpec::Group(RealForm::So(n, 1)) => {
            out.extend(canon(PairSpec::Rank1 {
                row: Rank1Row::II,
                dual: true,
                p: n - 1,
                q: 0,
            }));
        }
        PairSpec::Rank1 { row: Rank1Row::IO, .. } => {
            out.push(parse("exc7 f4(-20)/so(8,1)"));
        }
        PairSpec::Exc7 { .. } if *spec == parse("exc7 f4(-20)/so(8,1)") => {
            out.push(parse("rank1 I_O"));
        }
        PairSpec::Upq { .. } => {
            for row in [Rank1Row::IR, Rank1Row::IC, Rank1Row::IH] {
                // Inverse of the I_F embeddings above.
                if let PairSpec::Upq { field, i, j, k, l: 0 } = *spec {
                    let matches_row = matches!(
                        (row, field),
                        (Rank1Row::IR, Field::R) | (Rank1Row::IC, Field::C) | (Rank1Row::IH, Field::H)
                    );
                    if !matches_row || j == 0 {
                        continue;
                    }
                    if i == 1 && k >= 1 {
                        out.extend(canon(PairSpec::Rank1 {
                            row,
                            dual: false,
                            p: k - 1,
                            q: j,
                        }));
                    }
                    if k == 1 && i >= 1 {
                        out.extend(canon(PairSpec::Rank1 {
                            row,
                            dual: true,
                            p: i - 1,
                            q: j,
                        }));
                    }
                }
            }
        }
        _ => {}
    }
    out.retain(|s| s != spec);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recorded_examples() {
        let r = |s: &str| isomorphic_reductions(&s.parse().unwrap());
        assert!(r("sp R 1 1").contains(&"upq R 2 1 2 0".parse().unwrap()));
        assert!(r("sostar 2 2").contains(&"upq R 2 4 2 0".parse().unwrap()));
        assert!(r("ugl C 1").contains(&"upq R 1 1 1 0".parse().unwrap()));
        assert!(r("oustar 5 1").contains(&"rank1 III 4".parse().unwrap()));
        assert!(r("rank1 I_R 2 3").contains(&"upq R 1 3 3 0".parse().unwrap()));
        assert!(r("upq R 1 3 3 0").contains(&"rank1 I_R 2 3".parse().unwrap()));
        assert!(r("somn 7 2").is_empty());
    }

    #[test]
    fn named_coincidences_parse() {
        for (_, s) in NAMED_COINCIDENCES {
            assert_eq!(parse(s).to_string(), s);
        }
    }
}
