//! Exact (QP), (PP) and (BB) rules for every family, evaluated from the
//! parameters of a canonical pair spec.

use serde::Serialize;

use super::complexify::complexify;
use super::{tables, Field, PairSpec, Rank1Row, UglVariant};

/// The evaluated family rule for one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyRule {
    pub qp: bool,
    pub pp: bool,
    pub bb: bool,
    /// Short identifier of the rule that decided (QP) and (PP).
    pub rule_id: &'static str,
    /// Human-readable statement of the rule.
    pub source: String,
    /// Human-readable reason for the (BB) value.
    pub bb_source: String,
}

fn rule(qp: bool, pp: bool, rule_id: &'static str, source: impl Into<String>) -> (bool, bool, &'static str, String) {
    (qp, pp, rule_id, source.into())
}

/// Evaluates the family rule of a canonical spec.
pub fn rule_of(spec: &PairSpec) -> FamilyRule {
    let (qp, pp, rule_id, source) = qp_pp_rule(spec);
    let complex = complexify(spec);
    let bb = complex.is_bb();
    let bb_source = format!(
        "complexification {complex} {} a sum of trivial and strong Gelfand pairs",
        if bb { "is" } else { "is not" }
    );
    FamilyRule {
        qp,
        pp,
        bb,
        rule_id,
        source,
        bb_source,
    }
}

fn qp_pp_rule(spec: &PairSpec) -> (bool, bool, &'static str, String) {
    match *spec {
        PairSpec::Upq { field, i, j, k, l } => {
            if (i, k) == (0, 0) || (j, l) == (0, 0) {
                return rule(true, true, "upq-trivial", "one summand of h is all of g");
            }
            if l >= 1 {
                if field == Field::R && (i, j, k, l) == (1, 1, 1, 1) {
                    return rule(
                        true,
                        true,
                        "upq-o22",
                        "(o(2,2), o(1,1)+o(1,1)) is two copies of (o(2,1), o(1,1))",
                    );
                }
                return rule(false, false, "upq-l", "indefinite unitary family: (QP) forces l = 0");
            }
            if k == 0 {
                return rule(true, true, "upq-compact", "g is compact");
            }
            if i == 0 {
                return rule(true, true, "upq-riemannian", "h is a maximal compact subalgebra");
            }
            rule(
                i.min(j).min(k) == 1,
                j.min(k) == 1,
                "upq",
                "indefinite unitary family: (QP) iff l = 0 and min(i,j,k) = 1; (PP) iff l = 0 and min(j,k) = 1",
            )
        }
        PairSpec::Glgl { q, .. } => rule(
            q == 1,
            q == 1,
            "glgl",
            "general linear family: (QP) iff (PP) iff min(p,q) = 1",
        ),
        PairSpec::Somn { m, n } => {
            let ok = n == 1 || (m, n) == (2, 2);
            rule(
                ok,
                ok,
                "somn",
                "complex orthogonal family: (QP) iff (PP) iff n = 1 or (m,n) = (2,2)",
            )
        }
        PairSpec::SoStar { q, .. } => rule(
            q == 1,
            q == 1,
            "sostar",
            "quaternionic orthogonal family: (QP) iff (PP) iff min(p,q) = 1",
        ),
        PairSpec::Ugl { variant, n } => {
            if variant == UglVariant::R {
                let ok = n <= 3;
                rule(ok, ok, "ugl-real", "(o(n,n), gl(n,R)): (QP) iff (PP) iff n = 2 or 3")
            } else {
                rule(n == 1, n == 1, "ugl", "(C_n, A_n) family: (QP) iff (PP) iff n = 1")
            }
        }
        PairSpec::OuStar { p, q } => rule(
            q == 1,
            matches!((p, q), (1, 1) | (2, 1) | (3, 1)),
            "oustar",
            "(o*(2p+2q), u(p,q)): (QP) iff q = 1; (PP) iff (p,q) is (1,1), (2,1) or (3,1)",
        ),
        PairSpec::SpPq { p, q, .. } => {
            let ok = (p, q) == (1, 1);
            rule(ok, ok, "sp", "symplectic family: (QP) iff (PP) iff (p,q) = (1,1)")
        }
        PairSpec::Rank1 { row, dual, p, q } => {
            let qp = row.is_labelled();
            let pp = match row {
                Rank1Row::IR | Rank1Row::IC | Rank1Row::IH => dual || p == 0 || q == 1,
                Rank1Row::IO => true,
                Rank1Row::II | Rank1Row::III => dual || p <= 2,
                _ => false,
            };
            rule(
                qp,
                pp,
                "rank-one",
                "rank-one table: (QP) iff the row is I_F, II or III or a c-dual of one; \
                 (PP) iff a c-dual, I_O, I_F with p = 0 or q = 1, or II, III with m <= 2",
            )
        }
        PairSpec::Exc7 { row } => {
            let r = &tables::EXCEPTIONAL_TABLE[row];
            let ok = matches!((r.g, r.h), ("e6(-26)", "so(9,1)+R") | ("f4(-20)", "so(8,1)"));
            rule(
                ok,
                ok,
                "exceptional",
                "exceptional equal-rank pairs: (QP) iff (PP) iff (e6(-26), so(9,1)+R) or (f4(-20), so(8,1))",
            )
        }
        PairSpec::E6So91 => rule(true, true, "e6so91", "(e6(-26), so(9,1)+R) satisfies (PP)"),
        PairSpec::Group(g) => {
            let ok = g.is_compact() || g.is_lorentz();
            rule(
                ok,
                ok,
                "group",
                "group case: (QP) iff (PP) iff g' is compact or so(n,1)",
            )
        }
        PairSpec::Riemannian(_) => rule(true, true, "riemannian", "Riemannian symmetric pairs satisfy (PP)"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> FamilyRule {
        rule_of(&s.parse().unwrap())
    }

    #[test]
    fn documented_examples() {
        let x = r("upq R 2 1 3 0");
        assert!(x.qp && x.pp && x.bb);
        let x = r("oustar 4 1");
        assert!(x.qp && !x.pp);
        assert!(r("sp R 1 1").pp);
        assert!(!r("upq R 2 2 2 1").qp);
        let x = r("rank1 Iw_O");
        assert!(x.qp && x.pp && !x.bb);
    }
}
