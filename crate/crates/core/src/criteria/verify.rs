//! Regression suites: each recomputes a published table or list and emits
//! one report line per checked value, in a deterministic order.

use std::fmt;

use serde::Serialize;

use super::{classify, lists::theorem_lists, Flag, Outcome, TestReport, Tri, Verdict};
use crate::families::tables::{self, EXCEPTIONAL_TABLE};
use crate::families::{datum_of, enumerate, FamilyKind, PairSpec, Rank1Row, UglVariant};
use crate::rootsys::{self, int, RootSystemSpec, Weight};

/// Outcome of one report line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum LineOutcome {
    Ok,
    Mismatch,
    Unknown,
}

impl fmt::Display for LineOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LineOutcome::Ok => "OK",
            LineOutcome::Mismatch => "MISMATCH",
            LineOutcome::Unknown => "UNKNOWN",
        })
    }
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportLine {
    pub id: String,
    pub flag: String,
    pub computed: String,
    pub expected: String,
    pub outcome: LineOutcome,
    pub witness: String,
}

impl ReportLine {
    /// A line comparing two values: OK when equal, MISMATCH otherwise, and
    /// UNKNOWN when the computed side is `unknown`.
    pub fn compare(
        id: impl Into<String>,
        flag: impl Into<String>,
        computed: impl fmt::Display,
        expected: impl fmt::Display,
        witness: impl Into<String>,
    ) -> Self {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        let outcome = if computed == "unknown" {
            LineOutcome::Unknown
        } else if computed == expected {
            LineOutcome::Ok
        } else {
            LineOutcome::Mismatch
        };
        ReportLine {
            id: id.into(),
            flag: flag.into(),
            computed,
            expected,
            outcome,
            witness: witness.into(),
        }
    }
}

/// The lines produced by one suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub lines: Vec<ReportLine>,
}

/// Minimum nonzero orbit sizes of every irreducible root system of rank at
/// most 8 against the closed-form table.
pub fn min_orbit_suite() -> Vec<ReportLine> {
    RootSystemSpec::all_up_to_rank(8)
        .into_iter()
        .filter(|s| s.family() != rootsys::RootFamily::BC)
        .map(|s| {
            let computed = match rootsys::cached(s) {
                Ok(rs) => rs.min_orbit_size().to_string(),
                Err(e) => format!("error: {e}"),
            };
            ReportLine::compare(format!("min-orbit:{s}"), "c", computed, tables::min_orbit_table(s), "")
        })
        .collect()
}

/// Orbit-stabilizer against breadth-first orbit enumeration for every
/// fundamental weight of every system of rank at most `max_rank`.
pub fn orbit_oracle_suite(max_rank: usize) -> Vec<ReportLine> {
    let mut lines = Vec::new();
    for s in RootSystemSpec::all_up_to_rank(max_rank) {
        let Ok(rs) = rootsys::cached(s) else {
            lines.push(ReportLine::compare(
                format!("orbit:{s}"),
                "build",
                "error",
                "ok",
                "construction failed",
            ));
            continue;
        };
        for (i, w) in rs.fundamental_weights().iter().enumerate() {
            let formula = rs
                .orbit_size(w)
                .map(|n| n.to_string())
                .unwrap_or_else(|e| e.to_string());
            let bfs = rs.orbit_bfs(w).len();
            lines.push(ReportLine::compare(
                format!("orbit:{s}:w{}", i + 1),
                "orbit",
                formula,
                bfs,
                "#W/#W_λ vs BFS",
            ));
        }
    }
    lines
}

/// One row of the `(C_n, A_n)` table: label, family variant and the
/// `(m+, m-)` of `e_i − e_j`, `e_i + e_j` and `2e_l`.
pub type CnAnRow = (&'static str, UglVariant, [(u32, u32); 3]);

/// The `(C_n, A_n)` multiplicity table: `(m+, m-)` of `e_i − e_j`,
/// `e_i + e_j` and `2e_l` for `u(n,n;F)` (`d = dim F`), `sp(n,R)` and
/// `so*(4n)`.
pub const CN_AN_TABLE: [CnAnRow; 5] = [
    ("u(n,n;R)", UglVariant::R, [(1, 0), (0, 1), (0, 0)]),
    ("u(n,n;C)", UglVariant::C, [(2, 0), (0, 2), (0, 1)]),
    ("u(n,n;H)", UglVariant::H, [(4, 0), (0, 4), (0, 3)]),
    ("sp(n,R)", UglVariant::SpR, [(1, 0), (0, 1), (0, 1)]),
    ("so*(4n)", UglVariant::OStar, [(4, 0), (0, 4), (0, 1)]),
];

/// Multiplicities and `#Δ(𝔫^{−σ}) = n(n+1)/2` (or `n(n−1)/2` when `2e_l`
/// is absent) of the `(C_n, A_n)` data for `2 ≤ n ≤ max_n`.
pub fn cn_an_suite(max_n: u32) -> Vec<ReportLine> {
    let mut lines = Vec::new();
    for (name, variant, mults) in CN_AN_TABLE {
        for n in 2..=max_n {
            let spec = PairSpec::Ugl { variant, n };
            let id = format!("cn-an:{name}:n={n}");
            let d = match datum_of(&spec) {
                Ok(d) => d,
                Err(e) => {
                    lines.push(ReportLine::compare(
                        id,
                        "datum",
                        "unavailable",
                        "available",
                        e.to_string(),
                    ));
                    continue;
                }
            };
            let e = |i: usize| Weight::unit(n as usize, i);
            let probes = [
                ("e1-e2", e(0).sub(&e(1))),
                ("e1+e2", e(0).add(&e(1))),
                ("2e1", e(0).scale(&int(2))),
            ];
            for ((label, w), expected) in probes.into_iter().zip(mults) {
                let got = d.multiplicity(&w).unwrap_or((0, 0));
                lines.push(ReportLine::compare(
                    id.clone(),
                    format!("m({label})"),
                    format!("{got:?}"),
                    format!("{expected:?}"),
                    "",
                ));
            }
            let n64 = u64::from(n);
            let count = if mults[2].1 > 0 {
                n64 * (n64 + 1) / 2
            } else {
                n64 * (n64 - 1) / 2
            };
            lines.push(ReportLine::compare(id, "#Δ", d.delta_n_minus().len(), count, ""));
        }
    }
    lines
}

/// Number of distinct weights with `m- > 0` in a rank-one row.
pub fn rank_one_minus_count(row: Rank1Row, p: u32, q: u32) -> usize {
    tables::rank1_matrix(row, p, q)[1].iter().filter(|&&m| m > 0).count()
}

/// Rank-one table: the count test `#{μ : m-(μ) > 0} ≤ 1` selects exactly
/// the labelled rows, and the classifier agrees row by row.
pub fn rank_one_suite(max_param: u32) -> Vec<ReportLine> {
    let mut lines = Vec::new();
    for spec in enumerate(FamilyKind::Rank1, max_param) {
        let PairSpec::Rank1 { row, p, q, .. } = spec else {
            continue;
        };
        let count = rank_one_minus_count(row, p, q);
        let witness = format!("#{{μ : m-(μ) > 0}} = {count}");
        lines.push(ReportLine::compare(
            spec.to_string(),
            "count-test",
            Tri::from_bool(count <= 1),
            Tri::from_bool(row.is_labelled()),
            witness.clone(),
        ));
        let qp = classify(&spec)
            .map(|v| v.qp.to_string())
            .unwrap_or_else(|e| e.to_string());
        lines.push(ReportLine::compare(
            spec.to_string(),
            "qp",
            qp,
            Tri::from_bool(count <= 1),
            witness,
        ));
    }
    lines
}

/// Exceptional table: recomputes `m(G)·rank` against `n(G) − n(H)` for
/// every row. The printed relation symbol is compared in the witness;
/// the flag line compares whether the inequality holds.
pub fn exceptional_suite() -> Vec<ReportLine> {
    EXCEPTIONAL_TABLE
        .iter()
        .map(|r| {
            let (a, rel, b) = r.printed;
            let printed_holds = !matches!(rel, tables::Relation::Less);
            let symbol = format!(
                "printed {a}{}{b}, recomputed {}{}{}",
                rel.symbol(),
                r.bound(),
                r.recomputed().symbol(),
                r.gap()
            );
            let note = if r.recomputed() == rel {
                symbol
            } else {
                format!("{symbol} (printed relation differs)")
            };
            ReportLine::compare(
                format!("exceptional:{}", r.name()),
                "ineq",
                Tri::from_bool(r.inequality_holds()),
                Tri::from_bool(printed_holds),
                note,
            )
        })
        .collect()
}

fn family_specs(bound: u32) -> Vec<PairSpec> {
    FamilyKind::all()
        .into_iter()
        .flat_map(|k| enumerate(k, bound))
        .collect()
}

fn list_check(spec: &PairSpec) -> (Result<Verdict, String>, super::ListMembership) {
    (classify(spec).map_err(|e| e.to_string()), theorem_lists(spec))
}

/// Classifies every enumerated spec with parameters up to `bound` and
/// checks it against the transcribed classification lists; one report per
/// spec.
pub fn verify_theorem_lists(bound: u32) -> Vec<TestReport> {
    family_specs(bound)
        .iter()
        .map(|spec| {
            let (verdict, lists) = list_check(spec);
            let id = spec.to_string();
            let items = format!(
                "pp item: {}; qp-only item: {}; bb item: {}",
                lists.pp.as_deref().unwrap_or("-"),
                lists.qp_only.as_deref().unwrap_or("-"),
                lists.bb.as_deref().unwrap_or("-")
            );
            match verdict {
                Err(e) => TestReport::new(&id, Outcome::Fail, e),
                Ok(v) => {
                    let expected = [lists.expected_qp(), lists.expected_pp(), lists.expected_bb()];
                    let bad: Vec<String> = Flag::ALL
                        .iter()
                        .zip(expected)
                        .filter(|(f, e)| v.get(**f) != Tri::from_bool(*e))
                        .map(|(f, e)| format!("{f}: computed {} expected {}", v.get(*f), Tri::from_bool(e)))
                        .collect();
                    if bad.is_empty() {
                        TestReport::new(&id, Outcome::Pass, items)
                    } else {
                        TestReport::new(&id, Outcome::Fail, format!("{}; {items}", bad.join(", ")))
                    }
                }
            }
        })
        .collect()
}

/// Per-flag report lines for the theorem-list check.
pub fn theorem_list_suite(bound: u32) -> Vec<ReportLine> {
    let mut lines = Vec::new();
    for spec in family_specs(bound) {
        let (verdict, lists) = list_check(&spec);
        let expected = [
            (
                Flag::Qp,
                lists.expected_qp(),
                lists.pp.clone().or(lists.qp_only.clone()),
            ),
            (Flag::Pp, lists.expected_pp(), lists.pp.clone()),
            (Flag::Bb, lists.expected_bb(), lists.bb.clone()),
        ];
        for (flag, exp, item) in expected {
            let computed = match &verdict {
                Ok(v) => v.get(flag).to_string(),
                Err(e) => format!("error: {e}"),
            };
            let witness = item.unwrap_or_else(|| "not listed".into());
            lines.push(ReportLine::compare(
                spec.to_string(),
                flag.as_str(),
                computed,
                Tri::from_bool(exp),
                witness,
            ));
        }
    }
    lines
}

/// Every regression suite at the given parameter bound.
pub fn verify_suites(bound: u32) -> Vec<SuiteReport> {
    vec![
        SuiteReport {
            suite: "min-orbit",
            lines: min_orbit_suite(),
        },
        SuiteReport {
            suite: "orbit-oracle",
            lines: orbit_oracle_suite(4),
        },
        SuiteReport {
            suite: "cn-an",
            lines: cn_an_suite(bound.max(2)),
        },
        SuiteReport {
            suite: "rank-one",
            lines: rank_one_suite(bound),
        },
        SuiteReport {
            suite: "exceptional",
            lines: exceptional_suite(),
        },
        SuiteReport {
            suite: "theorem-lists",
            lines: theorem_list_suite(bound),
        },
    ]
}
