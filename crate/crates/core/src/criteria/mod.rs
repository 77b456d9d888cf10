//! The decision engine: generic necessary tests for (QP) on restricted
//! data, the composite classifier that combines family rules with those
//! tests, and regression suites against the published classification lists.
//!
//! Verdicts are assembled rule-first: the family rule decides (QP), (PP)
//! and (BB), and every applicable generic test must corroborate it. A
//! generic test that rejects a pair the rule accepts is reported as
//! [`CriteriaError::ContradictionDetected`], never silently resolved.

pub mod lists;
pub mod verify;

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::families::{self, datum_of, flag_dimensions, isomorphic_reductions, rule_of, FamilyError, PairSpec};
use crate::pairdatum::{FlagDimensions, HRootSystem, RestrictedDatum};
use crate::rootsys::{self, coroot_pairing, RootSystem};

pub use lists::{theorem_lists, ListMembership};
pub use verify::{verify_suites, verify_theorem_lists, LineOutcome, ReportLine, SuiteReport};

/// Errors raised by the classifier.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CriteriaError {
    #[error("invalid pair spec: {0}")]
    InvalidSpec(#[from] FamilyError),
    #[error("contradiction for {spec}: {test} disagrees with the family rule ({witness})")]
    ContradictionDetected {
        spec: String,
        test: String,
        witness: String,
    },
}

/// A three-valued verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The three properties a verdict decides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    Qp,
    Pp,
    Bb,
}

impl Flag {
    pub const ALL: [Flag; 3] = [Flag::Qp, Flag::Pp, Flag::Bb];

    pub fn as_str(self) -> &'static str {
        match self {
            Flag::Qp => "qp",
            Flag::Pp => "pp",
            Flag::Bb => "bb",
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One piece of evidence behind a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    /// The flag this record supports, or `None` for corroborating evidence
    /// that bears on all of them.
    pub flag: Option<Flag>,
    pub rule_id: String,
    pub citation: String,
}

/// Outcome of a generic test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotApplicable => "n/a",
        })
    }
}

/// The result of one generic necessary test. Failing reports always carry
/// a nonempty witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TestReport {
    pub id: String,
    pub outcome: Outcome,
    pub witness: String,
}

impl TestReport {
    fn new(id: &str, outcome: Outcome, witness: impl Into<String>) -> Self {
        let mut witness = witness.into();
        if outcome == Outcome::Fail && witness.is_empty() {
            witness = "failed".into();
        }
        TestReport {
            id: id.into(),
            outcome,
            witness,
        }
    }
}

/// A classification verdict. `fm` and `bm` (finite and bounded branching
/// multiplicities) mirror `pp` and `bb`, to which they are equivalent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub qp: Tri,
    pub pp: Tri,
    pub bb: Tri,
    pub provenance: Vec<Provenance>,
    pub tests: Vec<TestReport>,
    pub fm: bool,
    pub bm: bool,
}

impl Verdict {
    fn new(qp: Tri, pp: Tri, bb: Tri, provenance: Vec<Provenance>, tests: Vec<TestReport>) -> Self {
        Verdict {
            qp,
            pp,
            bb,
            provenance,
            tests,
            fm: pp == Tri::Yes,
            bm: bb == Tri::Yes,
        }
    }

    pub fn get(&self, flag: Flag) -> Tri {
        match flag {
            Flag::Qp => self.qp,
            Flag::Pp => self.pp,
            Flag::Bb => self.bb,
        }
    }

    /// The outcome of the test with this id, if it ran.
    pub fn test(&self, id: &str) -> Option<&TestReport> {
        self.tests.iter().find(|t| t.id == id)
    }

    /// `(BB) ⇒ (PP) ⇒ (QP)`, and the (FM)/(BM) mirrors.
    pub fn chain_holds(&self) -> bool {
        !(self.bb == Tri::Yes && self.pp != Tri::Yes)
            && !(self.pp == Tri::Yes && self.qp != Tri::Yes)
            && self.fm == (self.pp == Tri::Yes)
            && self.bm == (self.bb == Tri::Yes)
    }
}

pub const QP_RANK: &str = "qp-rank";
pub const QP_INEQ: &str = "qp-ineq";
pub const WEYL_ORBIT: &str = "weyl-orbit";

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Linear independence of `Δ(𝔫^{−σ})`, a necessary condition for (QP).
/// A failure carries a minimal dependent subset and the counts.
pub fn test_qp_rank(d: &RestrictedDatum) -> TestReport {
    let delta = d.delta_n_minus();
    let counts = format!("#Δ = {}, rank = {}", delta.len(), d.rank_a_h());
    match d.dependent_delta_subset() {
        None => TestReport::new(QP_RANK, Outcome::Pass, format!("{counts}; independent")),
        Some(subset) => {
            let rel = if delta.len() > d.rank_a_h() { " > " } else { " <= " };
            TestReport::new(
                QP_RANK,
                Outcome::Fail,
                format!(
                    "#Δ = {}{rel}rank = {}; dependent subset {{{}}}",
                    delta.len(),
                    d.rank_a_h(),
                    subset.iter().map(|w| format!("({w})")).collect::<Vec<_>>().join(", ")
                ),
            )
        }
    }
}

/// `n(G) − n(H) ≤ m(G)·rank_R H`, necessary for (QP) when the real ranks
/// of `G` and `H` agree; not applicable otherwise.
pub fn test_qp_ineq(fd: &FlagDimensions) -> TestReport {
    if !fd.rank_equal {
        return TestReport::new(QP_INEQ, Outcome::NotApplicable, "real ranks differ");
    }
    let gap = i128::from(fd.n_g) - i128::from(fd.n_h);
    let bound = i128::from(fd.m_g) * fd.rank_h as i128;
    let rel = match gap.cmp(&bound) {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    };
    let witness = format!(
        "n(G) - n(H) = {gap} {rel} m(G)*rank = {} * {} = {bound}",
        fd.m_g, fd.rank_h
    );
    TestReport::new(
        QP_INEQ,
        if gap <= bound { Outcome::Pass } else { Outcome::Fail },
        witness,
    )
}

/// Whether `lambda` is a positive multiple of a fundamental weight whose
/// orbit has minimal size.
fn on_minimal_ray(rs: &RootSystem, lambda: &rootsys::Weight) -> bool {
    let Ok(mu) = rs.dominant(lambda) else { return false };
    let nonzero: Vec<usize> = rs
        .simple_roots()
        .iter()
        .enumerate()
        .filter(|(_, a)| !coroot_pairing(&mu, a).is_zero())
        .map(|(i, _)| i + 1)
        .collect();
    nonzero.len() == 1 && rs.minimal_orbit_rays().indices.contains(&nonzero[0])
}

/// `#(W_H·λ) ≤ 2·rank_R H` for every `λ ∈ Δ(𝔫^{−σ})`, a necessary condition
/// for (QP); an exceptional `Σ(𝔥, 𝔞_H)` forces `Δ(𝔫^{−σ})` to be empty.
/// Applies when the datum declares an irreducible root system for `𝔥`
/// realised by `rs` in the same coordinates.
pub fn test_weyl_orbit(d: &RestrictedDatum, rs: &RootSystem) -> TestReport {
    let declared = matches!(d.h_root_system(), HRootSystem::Declared(s) if *s == rs.spec());
    let delta = d.delta_n_minus();
    let dim_ok = delta.iter().all(|w| w.ambient_dim() == rs.ambient_dim());
    if !declared || !dim_ok {
        return TestReport::new(WEYL_ORBIT, Outcome::NotApplicable, "no matching root system for h");
    }
    if rs.spec().family().is_exceptional() && !delta.is_empty() {
        return TestReport::new(
            WEYL_ORBIT,
            Outcome::Fail,
            format!("Σ(h) of exceptional type {} with #Δ = {}", rs.spec(), delta.len()),
        );
    }
    let limit = 2 * d.rank_a_h() as u64;
    let mut notes = Vec::new();
    for lambda in &delta {
        let size = rs.orbit_size(lambda).expect("dimension checked");
        if size > limit {
            return TestReport::new(
                WEYL_ORBIT,
                Outcome::Fail,
                format!(
                    "orbit of ({lambda}) under W({}) has {size} > 2*rank = {limit} elements",
                    rs.spec()
                ),
            );
        }
        let ray = if on_minimal_ray(rs, lambda) {
            ", minimal ray"
        } else {
            ""
        };
        notes.push(format!("({lambda}): {size}{ray}"));
    }
    TestReport::new(
        WEYL_ORBIT,
        Outcome::Pass,
        format!("orbits within 2*rank = {limit} in W({}): {}", rs.spec(), join(notes)),
    )
}

/// Runs every generic test available for a datum.
fn datum_tests(d: &RestrictedDatum) -> Vec<TestReport> {
    let mut tests = vec![test_qp_rank(d)];
    if let HRootSystem::Declared(s) = d.h_root_system() {
        if let Ok(rs) = rootsys::cached(*s) {
            tests.push(test_weyl_orbit(d, &rs));
        }
    }
    tests
}

/// Classifies a pair spec: the family rule decides, generic tests and
/// recorded isomorphisms corroborate.
pub fn classify(spec: &PairSpec) -> Result<Verdict, CriteriaError> {
    let spec = spec.canonicalize()?;
    let rule = rule_of(&spec);
    let contradiction = |test: &str, witness: String| CriteriaError::ContradictionDetected {
        spec: spec.to_string(),
        test: test.to_string(),
        witness,
    };

    let mut provenance = vec![
        Provenance {
            flag: Some(Flag::Qp),
            rule_id: rule.rule_id.into(),
            citation: rule.source.clone(),
        },
        Provenance {
            flag: Some(Flag::Pp),
            rule_id: rule.rule_id.into(),
            citation: rule.source.clone(),
        },
        Provenance {
            flag: Some(Flag::Bb),
            rule_id: "complexification".into(),
            citation: rule.bb_source.clone(),
        },
    ];

    let mut tests = Vec::new();
    let datum = datum_of(&spec).ok();
    if let Some(d) = &datum {
        tests.extend(datum_tests(d));
    }
    let fd = flag_dimensions(&spec);
    if let Some(fd) = &fd {
        tests.push(test_qp_ineq(fd));
    }
    for t in &tests {
        if t.outcome == Outcome::Fail && rule.qp {
            return Err(contradiction(&t.id, t.witness.clone()));
        }
        if t.outcome != Outcome::NotApplicable {
            provenance.push(Provenance {
                flag: None,
                rule_id: t.id.clone(),
                citation: format!("{}: {}", t.outcome, t.witness),
            });
        }
    }

    if rule.bb && !rule.pp || rule.pp && !rule.qp {
        return Err(contradiction("chain", "(BB) => (PP) => (QP) violated".into()));
    }
    if fd.is_some_and(|fd| fd.rank_equal) && rule.pp != rule.qp {
        return Err(contradiction(
            "rank-equality",
            "equal real ranks but (PP) != (QP)".into(),
        ));
    }

    for other in isomorphic_reductions(&spec) {
        let r = rule_of(&other);
        if (r.qp, r.pp, r.bb) != (rule.qp, rule.pp, rule.bb) {
            return Err(contradiction(
                "isomorphism",
                format!(
                    "isomorphic presentation {other} has qp={} pp={} bb={}",
                    r.qp, r.pp, r.bb
                ),
            ));
        }
        provenance.push(Provenance {
            flag: None,
            rule_id: "isomorphism".into(),
            citation: format!("isomorphic to {other}, which has the same verdict"),
        });
    }

    Ok(Verdict::new(
        Tri::from_bool(rule.qp),
        Tri::from_bool(rule.pp),
        Tri::from_bool(rule.bb),
        provenance,
        tests,
    ))
}

/// Classifies a bare restricted datum that is not tied to a known family.
/// Only the generic necessary tests apply: a failure proves (QP), hence
/// (PP) and (BB), fail; otherwise every flag is unknown.
pub fn classify_datum(d: &RestrictedDatum) -> Verdict {
    let mut tests = datum_tests(d);
    if let Ok(inv) = d.derive() {
        tests.push(test_qp_ineq(&inv.flag_dimensions()));
    }
    let failed: Vec<&TestReport> = tests.iter().filter(|t| t.outcome == Outcome::Fail).collect();
    let mut provenance: Vec<Provenance> = tests
        .iter()
        .filter(|t| t.outcome != Outcome::NotApplicable)
        .map(|t| Provenance {
            flag: None,
            rule_id: t.id.clone(),
            citation: format!("{}: {}", t.outcome, t.witness),
        })
        .collect();
    if failed.is_empty() {
        provenance.push(Provenance {
            flag: None,
            rule_id: "no-rule".into(),
            citation: "the necessary tests pass but sufficiency needs a family rule".into(),
        });
        Verdict::new(Tri::Unknown, Tri::Unknown, Tri::Unknown, provenance, tests)
    } else {
        for flag in Flag::ALL {
            provenance.push(Provenance {
                flag: Some(flag),
                rule_id: failed[0].id.clone(),
                citation: "a necessary condition for (QP) fails".into(),
            });
        }
        Verdict::new(Tri::No, Tri::No, Tri::No, provenance, tests)
    }
}

/// Convenience wrapper for callers holding a spec string.
pub fn classify_str(s: &str) -> Result<Verdict, CriteriaError> {
    let spec: PairSpec = s.parse()?;
    classify(&spec)
}

/// Whether every generic test that ran on `spec` passed (or did not apply).
pub fn generic_tests_pass(spec: &PairSpec) -> bool {
    let mut tests = Vec::new();
    if let Ok(d) = families::datum_of(spec) {
        tests.extend(datum_tests(&d));
    }
    if let Some(fd) = flag_dimensions(spec) {
        tests.push(test_qp_ineq(&fd));
    }
    tests.iter().all(|t| t.outcome != Outcome::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::tables::{exceptional_row, EXCEPTIONAL_TABLE};
    use crate::pairdatum::MultRoot;
    use crate::rootsys::{RootFamily, RootSystemSpec, Weight};

    fn spec(s: &str) -> PairSpec {
        s.parse().unwrap()
    }

    fn exc(name: &str) -> PairSpec {
        PairSpec::Exc7 {
            row: exceptional_row(name).unwrap(),
        }
    }

    #[test]
    fn rank_test_examples() {
        let t = test_qp_rank(&datum_of(&exc("e6(-14)/so(8,2)+iR")).unwrap());
        assert_eq!(t.outcome, Outcome::Fail);
        assert!(t.witness.starts_with("#Δ = 4 > rank = 2"), "{}", t.witness);
        let t = test_qp_rank(&datum_of(&spec("sp R 2 1")).unwrap());
        assert_eq!(t.outcome, Outcome::Fail);
        assert!(t.witness.starts_with("#Δ = 4 > rank = 3"), "{}", t.witness);
        let riemannian = RestrictedDatum::new(
            1,
            1,
            vec![MultRoot::new(Weight::from_ints(&[1]), 3, 0)],
            HRootSystem::Other("A1".into()),
            None,
        )
        .unwrap();
        assert_eq!(test_qp_rank(&riemannian).outcome, Outcome::Pass);
    }

    #[test]
    fn inequality_examples() {
        let fd = |name: &str| flag_dimensions(&exc(name)).unwrap();
        let t = test_qp_ineq(&fd("e6(-26)/so(9,1)+R"));
        assert_eq!(t.outcome, Outcome::Pass);
        assert!(t.witness.contains("16 = "), "{}", t.witness);
        let t = test_qp_ineq(&fd("e8(8)/so(8,8)"));
        assert_eq!(t.outcome, Outcome::Fail);
        assert!(t.witness.contains("64 > m(G)*rank = 1 * 8 = 8"), "{}", t.witness);
        assert!(test_qp_ineq(&fd("e6(-14)/so(8,2)+iR")).witness.contains("16 = "));
        let unequal = FlagDimensions {
            n_g: 10,
            n_h: 0,
            m_g: 1,
            rank_h: 1,
            rank_equal: false,
        };
        assert_eq!(test_qp_ineq(&unequal).outcome, Outcome::NotApplicable);
        assert_eq!(EXCEPTIONAL_TABLE.iter().filter(|r| r.inequality_holds()).count(), 3);
    }

    /// All positive roots of a system with multiplicity `(1, 0)`, except
    /// that `lambda` also has `m- = 1`, so `Δ(𝔫^{−σ}) = {lambda}`.
    fn single_root_datum(family: RootFamily, rank: usize, lambda: &[i64]) -> (RestrictedDatum, RootSystem) {
        let s = RootSystemSpec::new(family, rank).unwrap();
        let rs = RootSystem::build(s).unwrap();
        let lambda = Weight::from_ints(lambda);
        let roots = rs
            .positive_roots()
            .iter()
            .map(|w| MultRoot::new(w.clone(), 1, u32::from(*w == lambda)))
            .collect();
        let dim = rs.ambient_dim();
        let d = RestrictedDatum::new(dim, dim, roots, HRootSystem::Declared(s), Some(1)).unwrap();
        assert_eq!(d.delta_n_minus().len(), 1);
        (d, rs)
    }

    #[test]
    fn weyl_orbit_examples() {
        // e1 - e3 in A3 has the orbit of a root: 12 elements > 2*3.
        let (d, rs) = single_root_datum(RootFamily::A, 3, &[1, 0, -1, 0]);
        let t = test_weyl_orbit(&d, &rs);
        assert_eq!(t.outcome, Outcome::Fail, "{}", t.witness);
        assert!(t.witness.contains("12 > 2*rank = 8"), "{}", t.witness);
        assert_eq!(rs.orbit_bfs(&Weight::from_ints(&[1, 0, -1, 0])).len(), 12);

        let (d, rs) = single_root_datum(RootFamily::B, 2, &[1, 0]);
        let t = test_weyl_orbit(&d, &rs);
        assert_eq!(t.outcome, Outcome::Pass, "{}", t.witness);
        assert!(t.witness.contains("(1,0): 4, minimal ray"), "{}", t.witness);

        let (d, rs) = single_root_datum(RootFamily::F, 4, &[1, 0, 0, 0]);
        assert_eq!(test_weyl_orbit(&d, &rs).outcome, Outcome::Fail);
        assert_eq!(rs.min_orbit_size(), 24);
    }

    #[test]
    fn classify_examples() {
        let v = classify(&spec("upq R 2 1 3 0")).unwrap();
        assert_eq!((v.qp, v.pp, v.bb), (Tri::Yes, Tri::Yes, Tri::Yes));
        let v = classify(&spec("rank1 I_R 2 3")).unwrap();
        assert_eq!((v.qp, v.pp), (Tri::Yes, Tri::No));
        for n in 2..6 {
            let v = classify(&PairSpec::Group(families::RealForm::So(n, 1))).unwrap();
            assert_eq!(v.pp, Tri::Yes);
        }
        let v = classify(&spec("sostar 2 2")).unwrap();
        assert_eq!(v.qp, Tri::No);
        assert_eq!(v.test(QP_RANK).unwrap().outcome, Outcome::Pass);
        assert!(v.chain_holds());
    }

    #[test]
    fn bare_datum_is_unknown_unless_a_test_fails() {
        let d = datum_of(&spec("ugl R 3")).unwrap();
        assert_eq!(classify_datum(&d).qp, Tri::Unknown);
        let d = datum_of(&exc("e6(-14)/so(8,2)+iR")).unwrap();
        let v = classify_datum(&d);
        assert_eq!((v.qp, v.pp, v.bb), (Tri::No, Tri::No, Tri::No));
    }
}
