//! Complexified symmetric pairs and the bounded-multiplicity condition
//! (BB): a real pair satisfies (BB) exactly when its complexification is a
//! direct sum of trivial pairs and strong Gelfand pairs
//! `(gl(n+1), gl(n)+gl(1))`, `(o(n+1), o(n))`.

use std::fmt;

use super::{Field, PairSpec, Rank1Row, RealForm, UglVariant};
use crate::rootsys::RootFamily;

/// A complex simple Lie algebra type with no rank bounds (so that low-rank
/// coincidences such as `D_2 = A_1 + A_1` can be written out explicitly).
pub type SimpleType = (RootFamily, u64);

/// A complex symmetric pair, up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexPair {
    /// `(o(a+b), o(a)+o(b))`.
    Orth(u64, u64),
    /// `(gl(a+b), gl(a)+gl(b))`.
    Lin(u64, u64),
    /// `(sp(a+b), sp(a)+sp(b))`.
    Symp(u64, u64),
    /// `(o(2n), gl(n))`.
    OrthGl(u64),
    /// `(sp(n), gl(n))`.
    SympGl(u64),
    /// `(sl(n), o(n))`.
    SlSo(u64),
    /// `(g+g, diag g)` for `g` the sum of the listed simple algebras.
    Group(Vec<SimpleType>),
    /// Any other pair (exceptional or outside the strong Gelfand list).
    Other(String),
    /// A direct sum of pairs.
    Sum(Vec<ComplexPair>),
}

impl ComplexPair {
    /// Whether the pair is a sum of trivial and strong Gelfand pairs.
    pub fn is_bb(&self) -> bool {
        match self {
            ComplexPair::Orth(a, b) => a.min(b) <= &1 || (*a, *b) == (2, 2),
            ComplexPair::Lin(a, b) => a.min(b) <= &1,
            ComplexPair::Symp(a, b) => a.min(b) == &0 || (*a, *b) == (1, 1),
            ComplexPair::OrthGl(n) => *n <= 3,
            ComplexPair::SympGl(n) => *n <= 1,
            ComplexPair::SlSo(n) => *n <= 2,
            ComplexPair::Group(factors) => factors.iter().all(|f| *f == (RootFamily::A, 1)),
            ComplexPair::Other(_) => false,
            ComplexPair::Sum(parts) => parts.iter().all(ComplexPair::is_bb),
        }
    }
}

impl fmt::Display for ComplexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexPair::Orth(a, b) => write!(f, "(o({}), o({a})+o({b}))", a + b),
            ComplexPair::Lin(a, b) => write!(f, "(gl({}), gl({a})+gl({b}))", a + b),
            ComplexPair::Symp(a, b) => write!(f, "(sp({}), sp({a})+sp({b}))", a + b),
            ComplexPair::OrthGl(n) => write!(f, "(o({}), gl({n}))", 2 * n),
            ComplexPair::SympGl(n) => write!(f, "(sp({n}), gl({n}))"),
            ComplexPair::SlSo(n) => write!(f, "(sl({n}), o({n}))"),
            ComplexPair::Group(fs) => {
                let names: Vec<String> = fs.iter().map(|(t, n)| format!("{t:?}{n}")).collect();
                write!(f, "group case of {}", names.join("+"))
            }
            ComplexPair::Other(s) => f.write_str(s),
            ComplexPair::Sum(parts) => {
                let names: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                f.write_str(&names.join(" + "))
            }
        }
    }
}

/// Simple factors of `o(n, C)`, using `o(3) = A1`, `o(4) = A1+A1`,
/// `o(5) = B2`, `o(6) = A3`.
pub fn orthogonal_type(n: u64) -> Vec<SimpleType> {
    match n {
        0..=2 => vec![],
        3 => vec![(RootFamily::A, 1)],
        4 => vec![(RootFamily::A, 1), (RootFamily::A, 1)],
        6 => vec![(RootFamily::A, 3)],
        n if n % 2 == 1 => vec![(RootFamily::B, (n - 1) / 2)],
        n => vec![(RootFamily::D, n / 2)],
    }
}

/// Simple factors of the complexification of a real simple algebra.
pub fn complex_type(g: RealForm) -> Vec<SimpleType> {
    match g {
        RealForm::Compact(s) => vec![(s.family(), s.rank() as u64)],
        RealForm::So(p, q) => orthogonal_type(u64::from(p + q)),
        RealForm::Su(p, q) => vec![(RootFamily::A, u64::from(p + q) - 1)],
        RealForm::Sp(p, q) => vec![(RootFamily::C, u64::from(p + q))],
        RealForm::SlR(n) => vec![(RootFamily::A, u64::from(n) - 1)],
        RealForm::SlC(n) => vec![(RootFamily::A, u64::from(n) - 1); 2],
    }
}

/// The complexification of a (canonical) pair.
pub fn complexify(spec: &PairSpec) -> ComplexPair {
    use ComplexPair::*;
    let w = u64::from;
    let by_field = |field: Field, a: u64, b: u64| match field {
        Field::R => Orth(a, b),
        Field::C => Lin(a, b),
        Field::H => Symp(a, b),
    };
    match *spec {
        PairSpec::Upq { field, i, j, k, l } => by_field(field, w(i + k), w(j + l)),
        PairSpec::Glgl { field, p, q } => match field {
            Field::R => Lin(w(p), w(q)),
            Field::C => Sum(vec![Lin(w(p), w(q)), Lin(w(p), w(q))]),
            Field::H => Lin(2 * w(p), 2 * w(q)),
        },
        PairSpec::Somn { m, n } => Sum(vec![Orth(w(m), w(n)), Orth(w(m), w(n))]),
        PairSpec::SoStar { p, q } => Orth(2 * w(p), 2 * w(q)),
        PairSpec::OuStar { p, q } => OrthGl(w(p + q)),
        PairSpec::Ugl { variant, n } => match variant {
            UglVariant::C => Lin(w(n), w(n)),
            UglVariant::H => SympGl(2 * w(n)),
            UglVariant::SpR => SympGl(w(n)),
            UglVariant::OStar => OrthGl(2 * w(n)),
            UglVariant::R => OrthGl(w(n)),
        },
        PairSpec::SpPq { field, p, q } => match field {
            Field::C => Sum(vec![Symp(w(p), w(q)), Symp(w(p), w(q))]),
            _ => Symp(w(p), w(q)),
        },
        PairSpec::Rank1 { row, p, q, .. } => {
            let (p, q, m) = (w(p), w(q), w(p));
            match row {
                Rank1Row::IR => Orth(q, p + 2),
                Rank1Row::IC => Lin(q, p + 2),
                Rank1Row::IH => Symp(q, p + 2),
                Rank1Row::II => Group(orthogonal_type(m + 2)),
                Rank1Row::III => OrthGl(m + 2),
                Rank1Row::SlR => SlSo(m + 2),
                Rank1Row::SpR => SympGl(m + 2),
                Rank1Row::SlC => Group(vec![(RootFamily::A, m + 1)]),
                Rank1Row::SpC => Group(vec![(RootFamily::C, m + 2)]),
                Rank1Row::F4C => Group(vec![(RootFamily::F, 4)]),
                Rank1Row::SlC3 => Sum(vec![SlSo(3), SlSo(3)]),
                Rank1Row::Su33 => SlSo(6),
                Rank1Row::SuStar => Other(format!("(sl({}), sp({}))", 2 * m + 4, m + 2)),
                Rank1Row::IO => Other("(f4, o(9))".into()),
                Rank1Row::F44 => Other("(f4, sp(3)+sl(2))".into()),
                Rank1Row::E626 => Other("(e6, f4)".into()),
                Rank1Row::E62 => Other("(e6, sp(4))".into()),
            }
        }
        PairSpec::Exc7 { row } => {
            let r = &super::tables::EXCEPTIONAL_TABLE[row];
            Other(format!("complexification of ({}, {})", r.g, r.h))
        }
        PairSpec::E6So91 => Other("(e6, o(10)+gl(1))".into()),
        PairSpec::Group(g) => Group(complex_type(g)),
        PairSpec::Riemannian(g) => match g {
            RealForm::So(p, q) => Orth(w(p), w(q)),
            RealForm::Su(p, q) => Lin(w(p), w(q)),
            RealForm::Sp(p, q) => Symp(w(p), w(q)),
            RealForm::SlR(n) => SlSo(w(n)),
            RealForm::SlC(n) => Group(vec![(RootFamily::A, w(n) - 1)]),
            RealForm::Compact(_) => Other("compact".into()),
        },
    }
}
