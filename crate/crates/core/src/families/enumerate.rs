//! Enumeration of canonical pair specs inside a parameter box.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{tables, FamilyError, Field, PairSpec, Rank1Params, Rank1Row, RealForm, UglVariant};
use crate::rootsys::{RootFamily, RootSystemSpec};

/// A family (with its field where the family has one) to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Upq(Field),
    Glgl(Field),
    Somn,
    SoStar,
    Ugl,
    OuStar,
    SpPq(Field),
    Rank1,
    Exc7,
    E6So91,
    Group,
    Riemannian,
}

impl FamilyKind {
    /// Every family, in a fixed order.
    pub fn all() -> Vec<FamilyKind> {
        use FamilyKind::*;
        let mut v = Vec::new();
        for f in [Field::R, Field::C, Field::H] {
            v.push(Upq(f));
        }
        for f in [Field::R, Field::C, Field::H] {
            v.push(Glgl(f));
        }
        v.extend([Somn, SoStar, Ugl, OuStar, SpPq(Field::R), SpPq(Field::C)]);
        v.extend([Rank1, Exc7, E6So91, Group, Riemannian]);
        v
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Upq(x) => write!(f, "upq {}", x.letter()),
            FamilyKind::Glgl(x) => write!(f, "glgl {}", x.letter()),
            FamilyKind::SpPq(x) => write!(f, "sp {}", x.letter()),
            FamilyKind::Somn => f.write_str("somn"),
            FamilyKind::SoStar => f.write_str("sostar"),
            FamilyKind::Ugl => f.write_str("ugl"),
            FamilyKind::OuStar => f.write_str("oustar"),
            FamilyKind::Rank1 => f.write_str("rank1"),
            FamilyKind::Exc7 => f.write_str("exc7"),
            FamilyKind::E6So91 => f.write_str("e6so91"),
            FamilyKind::Group => f.write_str("group"),
            FamilyKind::Riemannian => f.write_str("riemannian"),
        }
    }
}

impl FromStr for FamilyKind {
    type Err = FamilyError;

    /// Parses `upq R`, `glgl H`, `sp C`, `somn`, `rank1`, ...
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let bad = |position: usize, message: &str| FamilyError::Parse {
            position,
            token: toks.get(position - 1).copied().unwrap_or("").to_string(),
            message: message.into(),
        };
        let field = |allowed: &[Field]| -> Result<Field, FamilyError> {
            let f = match toks.get(1).copied() {
                Some("R") => Field::R,
                Some("C") => Field::C,
                Some("H") => Field::H,
                _ => return Err(bad(2, "expected a field letter R, C or H")),
            };
            if allowed.contains(&f) {
                Ok(f)
            } else {
                Err(bad(2, "field not allowed for this family"))
            }
        };
        let rch = [Field::R, Field::C, Field::H];
        let (kind, used) = match toks.first().copied() {
            Some("upq") => (FamilyKind::Upq(field(&rch)?), 2),
            Some("glgl") => (FamilyKind::Glgl(field(&rch)?), 2),
            Some("sp") => (FamilyKind::SpPq(field(&[Field::R, Field::C])?), 2),
            Some("somn") => (FamilyKind::Somn, 1),
            Some("sostar") => (FamilyKind::SoStar, 1),
            Some("ugl") => (FamilyKind::Ugl, 1),
            Some("oustar") => (FamilyKind::OuStar, 1),
            Some("rank1") => (FamilyKind::Rank1, 1),
            Some("exc7") => (FamilyKind::Exc7, 1),
            Some("e6so91") => (FamilyKind::E6So91, 1),
            Some("group") => (FamilyKind::Group, 1),
            Some("riemannian") => (FamilyKind::Riemannian, 1),
            _ => return Err(bad(1, "unknown family keyword")),
        };
        if toks.len() > used {
            return Err(bad(used + 1, "unexpected extra token"));
        }
        Ok(kind)
    }
}

fn real_forms(bound: u32) -> Vec<RealForm> {
    let mut v = Vec::new();
    for spec in RootSystemSpec::all_up_to_rank(bound as usize) {
        if spec.family() != RootFamily::BC {
            v.push(RealForm::Compact(spec));
        }
    }
    for p in 0..=bound {
        for q in 0..=bound {
            v.extend([RealForm::So(p, q), RealForm::Su(p, q), RealForm::Sp(p, q)]);
        }
        v.extend([RealForm::SlR(p), RealForm::SlC(p)]);
    }
    v
}

/// All canonical specs of `kind` whose integer parameters lie in
/// `0..=bound`, deduplicated and sorted. Exceptional rows ignore the bound.
pub fn enumerate(kind: FamilyKind, bound: u32) -> Vec<PairSpec> {
    let r = 0..=bound;
    let mut raw: Vec<PairSpec> = Vec::new();
    match kind {
        FamilyKind::Upq(field) => {
            for i in r.clone() {
                for j in r.clone() {
                    for k in r.clone() {
                        for l in r.clone() {
                            raw.push(PairSpec::Upq { field, i, j, k, l });
                        }
                    }
                }
            }
        }
        FamilyKind::Glgl(field) | FamilyKind::SpPq(field) => {
            for p in r.clone() {
                for q in r.clone() {
                    raw.push(match kind {
                        FamilyKind::Glgl(_) => PairSpec::Glgl { field, p, q },
                        _ => PairSpec::SpPq { field, p, q },
                    });
                }
            }
        }
        FamilyKind::Somn | FamilyKind::SoStar | FamilyKind::OuStar => {
            for p in r.clone() {
                for q in r.clone() {
                    raw.push(match kind {
                        FamilyKind::Somn => PairSpec::Somn { m: p, n: q },
                        FamilyKind::SoStar => PairSpec::SoStar { p, q },
                        _ => PairSpec::OuStar { p, q },
                    });
                }
            }
        }
        FamilyKind::Ugl => {
            for variant in [
                UglVariant::C,
                UglVariant::H,
                UglVariant::SpR,
                UglVariant::OStar,
                UglVariant::R,
            ] {
                for n in r.clone() {
                    raw.push(PairSpec::Ugl { variant, n });
                }
            }
        }
        FamilyKind::Rank1 => {
            for row in Rank1Row::ALL {
                for dual in [false, true] {
                    match row.params() {
                        Rank1Params::PQ => {
                            for p in r.clone() {
                                for q in r.clone() {
                                    raw.push(PairSpec::Rank1 { row, dual, p, q });
                                }
                            }
                        }
                        Rank1Params::M => {
                            for p in r.clone() {
                                raw.push(PairSpec::Rank1 { row, dual, p, q: 0 });
                            }
                        }
                        Rank1Params::Fixed => raw.push(PairSpec::Rank1 { row, dual, p: 0, q: 0 }),
                    }
                }
            }
        }
        FamilyKind::Exc7 => {
            raw.extend((0..tables::EXCEPTIONAL_TABLE.len()).map(|row| PairSpec::Exc7 { row }));
        }
        FamilyKind::E6So91 => raw.push(PairSpec::E6So91),
        FamilyKind::Group => raw.extend(real_forms(bound).into_iter().map(PairSpec::Group)),
        FamilyKind::Riemannian => raw.extend(real_forms(bound).into_iter().map(PairSpec::Riemannian)),
    }
    let set: BTreeSet<PairSpec> = raw.iter().filter_map(|s| s.canonicalize().ok()).collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_somn_point() {
        assert_eq!(enumerate(FamilyKind::Somn, 1), vec!["somn 1 1".parse().unwrap()]);
    }

    #[test]
    fn rank_one_rows_all_present() {
        let specs = enumerate(FamilyKind::Rank1, 3);
        for row in Rank1Row::ALL {
            assert!(specs
                .iter()
                .any(|s| matches!(s, PairSpec::Rank1 { row: r, .. } if *r == row)));
        }
    }

    #[test]
    fn kinds_round_trip() {
        for k in FamilyKind::all() {
            assert_eq!(k.to_string().parse::<FamilyKind>().unwrap(), k);
        }
        assert!("upq O".parse::<FamilyKind>().is_err());
    }
}
