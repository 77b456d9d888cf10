//! Membership in the published classification lists, transcribed item by
//! item and kept independent of the family rules so that the two can be
//! cross-checked:
//!
//! * the (PP) list: trivial (A), abelian (B), compact (C), Riemannian (D),
//!   split rank one (E1)–(E4), strong Gelfand pairs and real forms
//!   (F1)–(F5), group cases (G1)–(G2) and the other cases (H1)–(H5);
//! * the list of pairs with (QP) but not (PP): `I_R`, `I_C`, `I_H` (two
//!   parameters at least 2), `II` and `III` (`n ≥ 4`);
//! * the (BB) list: direct sums of (A), (B) and (F1)–(F5).
//!
//! Low-rank isomorphisms that move a pair into a list item are spelled out
//! in the item label (e.g. `so*(6) = su(3,1)`).

use serde::Serialize;

use crate::families::tables::EXCEPTIONAL_TABLE;
use crate::families::{Field, PairSpec, Rank1Row, RealForm, UglVariant};

/// The list items a pair belongs to (`None`: not on that list).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListMembership {
    /// Item of the (PP) list.
    pub pp: Option<String>,
    /// Item of the list of pairs with (QP) but not (PP).
    pub qp_only: Option<String>,
    /// Item(s) of the (BB) list.
    pub bb: Option<String>,
}

impl ListMembership {
    pub fn expected_qp(&self) -> bool {
        self.pp.is_some() || self.qp_only.is_some()
    }

    pub fn expected_pp(&self) -> bool {
        self.pp.is_some()
    }

    pub fn expected_bb(&self) -> bool {
        self.bb.is_some()
    }
}

fn item(s: impl Into<String>) -> Option<String> {
    Some(s.into())
}

fn when(cond: bool, s: impl Into<String>) -> Option<String> {
    cond.then(|| s.into())
}

/// Looks up the list items of a canonical spec.
pub fn theorem_lists(spec: &PairSpec) -> ListMembership {
    let (pp, qp_only, bb) = match *spec {
        PairSpec::Upq { field, i, j, k, l } => upq(field, i, j, k, l),
        PairSpec::Glgl { field, p, q } => {
            let pp = match (field, q == 1) {
                (_, false) => None,
                (Field::R, true) => item(format!("(F3) n = {p}")),
                (Field::C, true) => item(format!("(F1) n = {p}")),
                (Field::H, true) => item(format!("(H2) n = {p}")),
            };
            let bb = if field == Field::H { None } else { pp.clone() };
            (pp, None, bb)
        }
        PairSpec::Somn { m, n } => {
            let x = match (m, n) {
                (1, 1) => item("(B)+(B): o(2,C) is abelian"),
                (_, 1) => item(format!("(F2) n = {m}")),
                (2, 2) => item("(F1)+(F1) with n = 1: o(4,C) = sl(2,C)+sl(2,C)"),
                _ => None,
            };
            (x.clone(), None, x)
        }
        PairSpec::SoStar { p, q } => (
            when(q == 1, format!("(H3) n = {p}")),
            None,
            when((p, q) == (1, 1), "(F4)+(F5): o*(4) = su(2)+sl(2,R)"),
        ),
        PairSpec::Ugl { variant, n } => {
            let pp = match (variant, n) {
                (UglVariant::C, 1) => item("(E1)+(A): (o(2,1), o(1,1)) + (R, R)"),
                (UglVariant::H, 1) => item("(E1): (o(4,1), o(3)+o(1,1))"),
                (UglVariant::SpR, 1) => item("(F3) n = 1: sp(1,R) = sl(2,R)"),
                (UglVariant::OStar, 1) => item("(E1)+(A): (o(2,1), o(1,1)) + (su(2), su(2))"),
                (UglVariant::R, 2) => item("(E1)+(A): (o(2,1), o(1,1)) + (sl(2,R), sl(2,R))"),
                (UglVariant::R, 3) => item("(F3) n = 3: o(3,3) = sl(4,R)"),
                _ => None,
            };
            let bb = if variant == UglVariant::H { None } else { pp.clone() };
            (pp, None, bb)
        }
        PairSpec::OuStar { p, q } => {
            let pp = match (p, q) {
                (1, 1) => item("(C)+(A): o*(4) = su(2)+sl(2,R)"),
                (2, 1) => item("(F4): o*(6) = su(3,1)"),
                (3, 1) => item("(H1) n = 3: o*(8) = o(6,2)"),
                _ => None,
            };
            let qp_only = when(q == 1 && p >= 4, format!("III n = {p}"));
            (pp.clone(), qp_only, when(q == 1 && p <= 2, pp.unwrap_or_default()))
        }
        PairSpec::SpPq { field, p, q } => {
            let x = match ((p, q), field) {
                ((1, 1), Field::C) => item("(F2) n = 4: sp(2,C) = o(5,C)"),
                ((1, 1), _) => item("(F5): sp(2,R) = o(3,2)"),
                _ => None,
            };
            (x.clone(), None, x)
        }
        PairSpec::Rank1 { row, dual, p, q } => rank_one(row, dual, p, q),
        PairSpec::Exc7 { row } => {
            let r = &EXCEPTIONAL_TABLE[row];
            let pp = match (r.g, r.h) {
                ("f4(-20)", "so(8,1)") => item("(E4)"),
                ("e6(-26)", "so(9,1)+R") => item("(H5)"),
                _ => None,
            };
            (pp, None, None)
        }
        PairSpec::E6So91 => (item("(H5)"), None, None),
        PairSpec::Group(g) => {
            let pp = match g {
                RealForm::Compact(_) => item("(G1)"),
                RealForm::So(n, 1) => item(format!("(G2) n = {n}")),
                _ => None,
            };
            let bb = match g {
                RealForm::Compact(s) if s.to_string() == "A1" => item("(F5): (su(2)+su(2), su(2)) = (o(4), o(3))"),
                RealForm::So(2, 1) => item("(F5): (o(2,2), o(2,1))"),
                RealForm::So(3, 1) => item("(F2) n = 3: (o(4,C), o(3,C))"),
                _ => None,
            };
            (pp, None, bb)
        }
        PairSpec::Riemannian(g) => {
            let bb = match g {
                RealForm::So(p, 1) => item(format!("(F5): (o({p},1), o({p}))")),
                RealForm::Su(p, 1) => item(format!("(F4): (su({p},1), u({p}))")),
                _ => None,
            };
            (item("(D)"), None, bb)
        }
    };
    ListMembership { pp, qp_only, bb }
}

fn upq(field: Field, i: u32, j: u32, k: u32, l: u32) -> (Option<String>, Option<String>, Option<String>) {
    let letter = match field {
        Field::R => "R",
        Field::C => "C",
        Field::H => "H",
    };
    if (i, k) == (0, 0) || (j, l) == (0, 0) {
        return (item("(A)"), None, item("(A)"));
    }
    let pp = if l >= 1 {
        when(
            field == Field::R && (i, j, k, l) == (1, 1, 1, 1),
            "(E1)+(E1): two copies of (o(2,1), o(1,1))",
        )
    } else if k == 0 {
        item("(C)")
    } else if i == 0 {
        item("(D)")
    } else if k == 1 {
        item(match field {
            Field::R => "(E1)",
            Field::C => "(E2)",
            Field::H => "(E3)",
        })
    } else if j == 1 {
        item(match field {
            Field::R => "(F5)",
            Field::C => "(F4)",
            Field::H => "(H4)",
        })
    } else {
        None
    };
    let qp_only = when(
        l == 0 && i == 1 && j >= 2 && k >= 2,
        format!("I_{letter} p = {j}, q = {k}"),
    );
    let one_side = i + k == 1 || j + l == 1;
    let bb = match field {
        Field::R if one_side => item("(F5)"),
        Field::R if (i + k, j + l) == (2, 2) => item("(F1)+(F1) with n = 1: o(4,C) = sl(2,C)+sl(2,C)"),
        Field::C if one_side => item("(F4)"),
        Field::H if (i + k, j + l) == (1, 1) => item("(F5): sp(1,1) = o(4,1), sp(2) = o(5)"),
        _ => None,
    };
    (pp, qp_only, bb)
}

fn rank_one(row: Rank1Row, dual: bool, p: u32, q: u32) -> (Option<String>, Option<String>, Option<String>) {
    let m = p;
    let (e, f) = match row {
        Rank1Row::IR => ("(E1)", "(F5)"),
        Rank1Row::IC => ("(E2)", "(F4)"),
        _ => ("(E3)", "(H4)"),
    };
    match row {
        Rank1Row::IR | Rank1Row::IC | Rank1Row::IH => {
            let pp = if dual || p == 0 {
                item(e)
            } else if q == 1 {
                item(f)
            } else {
                None
            };
            let letter = &row.token()[2..];
            let qp_only = when(!dual && p >= 1 && q >= 2, format!("I_{letter} p = {q}, q = {}", p + 1));
            let bb = match row {
                Rank1Row::IR if q == 1 => item("(F5)"),
                Rank1Row::IR if (p, q) == (0, 2) => item("(F1)+(F1) with n = 1: o(4,C) = sl(2,C)+sl(2,C)"),
                Rank1Row::IC if q == 1 => item("(F4)"),
                _ => None,
            };
            (pp, qp_only, bb)
        }
        Rank1Row::IO => (item("(E4)"), None, None),
        Rank1Row::II => {
            let pp = match (dual, m) {
                (true, _) => item(format!("(G2) n = {}", m + 1)),
                (false, 1) => item("(F5): (o(3,C), o(2,1)) = (o(3,1), o(2,1))"),
                (false, 2) => item("(G2) n = 3: o(4,C) = o(3,1)+o(3,1)"),
                _ => None,
            };
            let qp_only = when(!dual && m >= 3, format!("II n = {}", m + 1));
            let bb = match m {
                1 => item("(F5): group case of sl(2,R) = o(2,1)"),
                2 => item("(F2) n = 3: group case of sl(2,C) = o(3,1)"),
                _ => None,
            };
            (pp, qp_only, bb)
        }
        Rank1Row::III => {
            let pp = match (dual, m) {
                (true, _) => item(format!("(H1) n = {}", m + 1)),
                (false, 1) => item("(F4): o*(6) = su(3,1)"),
                (false, 2) => item("(H1) n = 3: o*(8) = o(6,2)"),
                _ => None,
            };
            let qp_only = when(!dual && m >= 3, format!("III n = {}", m + 1));
            let bb = when(m == 1, "(F4): o*(6) = su(3,1), o(4,2) = su(2,2)");
            (pp, qp_only, bb)
        }
        _ => (None, None, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(s: &str) -> ListMembership {
        theorem_lists(&s.parse().unwrap())
    }

    #[test]
    fn headline_items() {
        assert_eq!(lists("upq R 2 1 3 0").pp.as_deref(), Some("(F5)"));
        assert!(lists("upq R 2 1 3 0").expected_bb());
        assert!(lists("rank1 I_R 1 2").qp_only.is_some());
        assert!(lists("rank1 I_R^c 1 2").qp_only.is_none());
        assert_eq!(lists("oustar 4 1").qp_only.as_deref(), Some("III n = 4"));
        assert_eq!(lists("e6so91").pp.as_deref(), Some("(H5)"));
        assert!(!lists("sostar 2 2").expected_qp());
    }
}
