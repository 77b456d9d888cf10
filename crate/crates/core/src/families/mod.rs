//! Parameterized families of reductive symmetric pairs: a textual pair-spec
//! grammar with canonical forms, the exact (QP)/(PP)/(BB) rules of each
//! family, restricted-datum generators, the rank-one and exceptional tables,
//! enumeration, and recorded low-rank isomorphisms.
//!
//! Grammar (whitespace-separated tokens, family keyword first):
//!
//! | spec | pair |
//! |------|------|
//! | `upq F i j k l` | `(u(i+j,k+l;F), u(i,k;F)+u(j,l;F))`, `F ∈ {R,C,H}` |
//! | `glgl F p q` | `(gl(p+q,F), gl(p,F)+gl(q,F))` |
//! | `somn m n` | `(o(m+n,C), o(m,C)+o(n,C))` |
//! | `sostar p q` | `(o*(2p+2q), o*(2p)+o*(2q))` |
//! | `ugl C\|H n` | `(u(n,n;F), gl(n,F))` |
//! | `ugl spR n` | `(sp(n,R), gl(n,R))` |
//! | `ugl ostar n` | `(o*(4n), gl(n,H))` |
//! | `ugl R n` | `(o(n,n), gl(n,R))`, `n ≥ 2` |
//! | `oustar p q` | `(o*(2p+2q), u(p,q))` |
//! | `sp R\|C p q` | `(sp(p+q,F), sp(p,F)+sp(q,F))` |
//! | `rank1 ROW[^c] [params]` | a row of the rank-one table (`^c`: its c-dual) |
//! | `exc7 NAME` | a row of the exceptional table, e.g. `e6(-14)/so(8,2)+iR` |
//! | `e6so91` | `(e6(-26), so(9,1)+R)` |
//! | `group FORM` | `(g'+g', diag g')` |
//! | `riemannian FORM` | `(g, k)` with `k` maximal compact |
//!
//! `FORM` is one of `compact X n` (a compact simple algebra of Cartan type
//! `Xn`), `so p q`, `su p q`, `sp p q`, `slR n`, `slC n`.

pub mod complexify;
pub mod data;
pub mod enumerate;
pub mod reductions;
pub mod rules;
pub mod tables;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::rootsys::{RootFamily, RootSystemSpec};

pub use complexify::ComplexPair;
pub use data::{datum_of, flag_dimensions};
pub use enumerate::{enumerate, FamilyKind};
pub use reductions::isomorphic_reductions;
pub use rules::{rule_of, FamilyRule};

/// Errors raised while parsing, validating or expanding a pair spec.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("token {position} ({token:?}): {message}")]
    Parse {
        position: usize,
        token: String,
        message: String,
    },
    #[error("parameters out of range for {family}: {message}")]
    OutOfRange { family: &'static str, message: String },
    #[error("no restricted datum is available for {0}")]
    DatumUnavailable(String),
}

fn out_of_range(family: &'static str, message: impl Into<String>) -> FamilyError {
    FamilyError::OutOfRange {
        family,
        message: message.into(),
    }
}

/// Real division algebra underlying a classical family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    R,
    C,
    H,
}

impl Field {
    /// `dim_R F`.
    pub fn dim(self) -> u64 {
        match self {
            Field::R => 1,
            Field::C => 2,
            Field::H => 4,
        }
    }

    fn letter(self) -> &'static str {
        match self {
            Field::R => "R",
            Field::C => "C",
            Field::H => "H",
        }
    }
}

/// The members of the `(C_n, A_n)` family of rank-`n` subgroups `GL(n, ·)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UglVariant {
    /// `(u(n,n), gl(n,C))`.
    C,
    /// `(sp(n,n), gl(n,H))`.
    H,
    /// `(sp(n,R), gl(n,R))`.
    SpR,
    /// `(o*(4n), gl(n,H))`.
    OStar,
    /// `(o(n,n), gl(n,R))`, the degenerate real case.
    R,
}

impl UglVariant {
    fn token(self) -> &'static str {
        match self {
            UglVariant::C => "C",
            UglVariant::H => "H",
            UglVariant::SpR => "spR",
            UglVariant::OStar => "ostar",
            UglVariant::R => "R",
        }
    }
}

/// Rows of the rank-one table: irreducible symmetric pairs with
/// `rank_R h = 1`, each row shared with its c-dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank1Row {
    IR,
    IC,
    IH,
    IO,
    SlR,
    SpR,
    F44,
    II,
    SlC,
    SpC,
    F4C,
    III,
    SuStar,
    E626,
    SlC3,
    Su33,
    E62,
}

/// Shape of the parameters a rank-one row takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rank1Params {
    /// `(p, q)` with `p ≥ 0`, `q ≥ 1`.
    PQ,
    /// `m ≥ 1`.
    M,
    /// No parameters.
    Fixed,
}

impl Rank1Row {
    pub const ALL: [Rank1Row; 17] = [
        Rank1Row::IR,
        Rank1Row::IC,
        Rank1Row::IH,
        Rank1Row::IO,
        Rank1Row::SlR,
        Rank1Row::SpR,
        Rank1Row::F44,
        Rank1Row::II,
        Rank1Row::SlC,
        Rank1Row::SpC,
        Rank1Row::F4C,
        Rank1Row::III,
        Rank1Row::SuStar,
        Rank1Row::E626,
        Rank1Row::SlC3,
        Rank1Row::Su33,
        Rank1Row::E62,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Rank1Row::IR => "I_R",
            Rank1Row::IC => "I_C",
            Rank1Row::IH => "I_H",
            Rank1Row::IO => "I_O",
            Rank1Row::SlR => "SL_R",
            Rank1Row::SpR => "SP_R",
            Rank1Row::F44 => "F4_4",
            Rank1Row::II => "II",
            Rank1Row::SlC => "SL_C",
            Rank1Row::SpC => "SP_C",
            Rank1Row::F4C => "F4_C",
            Rank1Row::III => "III",
            Rank1Row::SuStar => "SU_STAR",
            Rank1Row::E626 => "E6_26",
            Rank1Row::SlC3 => "SL_C3",
            Rank1Row::Su33 => "SU33",
            Rank1Row::E62 => "E6_2",
        }
    }

    pub fn params(self) -> Rank1Params {
        match self {
            Rank1Row::IR | Rank1Row::IC | Rank1Row::IH => Rank1Params::PQ,
            Rank1Row::SlR
            | Rank1Row::SpR
            | Rank1Row::II
            | Rank1Row::SlC
            | Rank1Row::SpC
            | Rank1Row::III
            | Rank1Row::SuStar => Rank1Params::M,
            _ => Rank1Params::Fixed,
        }
    }

    /// Rows whose pair coincides with its own c-dual.
    pub fn is_self_dual(self) -> bool {
        matches!(self, Rank1Row::IO | Rank1Row::SlC3)
    }

    /// The rows named `I_F`, `II`, `III` (together with their c-duals these
    /// are exactly the rank-one pairs with (QP)).
    pub fn is_labelled(self) -> bool {
        matches!(
            self,
            Rank1Row::IR | Rank1Row::IC | Rank1Row::IH | Rank1Row::IO | Rank1Row::II | Rank1Row::III
        )
    }
}

/// Real simple Lie algebras used by the group and Riemannian cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealForm {
    /// The compact real form of the given complex type.
    Compact(RootSystemSpec),
    /// `so(p,q)`, `p ≥ q ≥ 1`, `p+q ≥ 3`, `(p,q) ≠ (2,2)`.
    So(u32, u32),
    /// `su(p,q)`, `p ≥ q ≥ 1`.
    Su(u32, u32),
    /// `sp(p,q)`, `p ≥ q ≥ 1`.
    Sp(u32, u32),
    /// `sl(n,R)`, `n ≥ 3`.
    SlR(u32),
    /// `sl(n,C)` as a real algebra, `n ≥ 3`.
    SlC(u32),
}

impl RealForm {
    /// Canonical representative: applies the low-dimensional isomorphisms
    /// `su(1,1) ≅ sl(2,R) ≅ so(2,1)`, `sp(1,1) ≅ so(4,1)`,
    /// `su(2,2) ≅ so(4,2)`, `sl(2,C) ≅ so(3,1)`, `so(3,3) ≅ sl(4,R)`.
    pub fn canonicalize(self) -> Result<RealForm, FamilyError> {
        use RealForm::*;
        let ordered = |a: u32, b: u32| if a >= b { (a, b) } else { (b, a) };
        let f = match self {
            Compact(s) => {
                if s.family() == RootFamily::BC {
                    return Err(out_of_range("compact", "BC is not a Lie algebra type"));
                }
                Compact(s)
            }
            So(p, q) => {
                let (p, q) = ordered(p, q);
                if q == 0 || p + q < 3 || (p, q) == (2, 2) {
                    return Err(out_of_range(
                        "so",
                        format!("so({p},{q}) is not a noncompact simple algebra"),
                    ));
                }
                if (p, q) == (3, 3) {
                    SlR(4)
                } else {
                    So(p, q)
                }
            }
            Su(p, q) => match ordered(p, q) {
                (_, 0) => return Err(out_of_range("su", "q must be positive")),
                (1, 1) => So(2, 1),
                (2, 2) => So(4, 2),
                (p, q) => Su(p, q),
            },
            Sp(p, q) => match ordered(p, q) {
                (_, 0) => return Err(out_of_range("sp", "q must be positive")),
                (1, 1) => So(4, 1),
                (p, q) => Sp(p, q),
            },
            SlR(n) => match n {
                0 | 1 => return Err(out_of_range("slR", "n must be at least 2")),
                2 => So(2, 1),
                n => SlR(n),
            },
            SlC(n) => match n {
                0 | 1 => return Err(out_of_range("slC", "n must be at least 2")),
                2 => So(3, 1),
                n => SlC(n),
            },
        };
        Ok(f)
    }

    /// `so(n,1)` with `n ≥ 2`.
    pub fn is_lorentz(self) -> bool {
        matches!(self, RealForm::So(_, 1))
    }

    pub fn is_compact(self) -> bool {
        matches!(self, RealForm::Compact(_))
    }
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealForm::Compact(s) => {
                let name = s.to_string();
                let (letters, digits) = name.split_at(name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len()));
                write!(f, "compact {letters} {digits}")
            }
            RealForm::So(p, q) => write!(f, "so {p} {q}"),
            RealForm::Su(p, q) => write!(f, "su {p} {q}"),
            RealForm::Sp(p, q) => write!(f, "sp {p} {q}"),
            RealForm::SlR(n) => write!(f, "slR {n}"),
            RealForm::SlC(n) => write!(f, "slC {n}"),
        }
    }
}

/// A symmetric pair named by family and parameters. Values produced by
/// parsing or [`PairSpec::canonicalize`] are in canonical form, so equal
/// pairs compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairSpec {
    Upq {
        field: Field,
        i: u32,
        j: u32,
        k: u32,
        l: u32,
    },
    Glgl {
        field: Field,
        p: u32,
        q: u32,
    },
    Somn {
        m: u32,
        n: u32,
    },
    SoStar {
        p: u32,
        q: u32,
    },
    Ugl {
        variant: UglVariant,
        n: u32,
    },
    OuStar {
        p: u32,
        q: u32,
    },
    SpPq {
        field: Field,
        p: u32,
        q: u32,
    },
    Rank1 {
        row: Rank1Row,
        dual: bool,
        p: u32,
        q: u32,
    },
    Exc7 {
        row: usize,
    },
    E6So91,
    Group(RealForm),
    Riemannian(RealForm),
}

fn ordered(a: u32, b: u32) -> (u32, u32) {
    if a >= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl PairSpec {
    /// Short family name, used in reports and enumeration.
    pub fn family_name(&self) -> &'static str {
        match self {
            PairSpec::Upq { .. } => "upq",
            PairSpec::Glgl { .. } => "glgl",
            PairSpec::Somn { .. } => "somn",
            PairSpec::SoStar { .. } => "sostar",
            PairSpec::Ugl { .. } => "ugl",
            PairSpec::OuStar { .. } => "oustar",
            PairSpec::SpPq { .. } => "sp",
            PairSpec::Rank1 { .. } => "rank1",
            PairSpec::Exc7 { .. } => "exc7",
            PairSpec::E6So91 => "e6so91",
            PairSpec::Group(_) => "group",
            PairSpec::Riemannian(_) => "riemannian",
        }
    }

    /// Validates parameter bounds and returns the canonical representative.
    pub fn canonicalize(&self) -> Result<PairSpec, FamilyError> {
        use PairSpec::*;
        let spec = match *self {
            Upq { field, i, j, k, l } => {
                if i + j + k + l == 0 {
                    return Err(out_of_range("upq", "all parameters are zero"));
                }
                let images = [(i, j, k, l), (k, l, i, j), (j, i, l, k), (l, k, j, i)];
                let (i, j, k, l) = images
                    .into_iter()
                    .filter(|&(a, b, c, d)| d <= a.min(b).min(c))
                    .min()
                    .expect("some image puts the minimum last");
                Upq { field, i, j, k, l }
            }
            Glgl { field, p, q } => {
                let (p, q) = ordered(p, q);
                if q == 0 {
                    return Err(out_of_range("glgl", "p and q must be positive"));
                }
                Glgl { field, p, q }
            }
            Somn { m, n } => {
                let (m, n) = ordered(m, n);
                if n == 0 {
                    return Err(out_of_range("somn", "m and n must be positive"));
                }
                Somn { m, n }
            }
            SoStar { p, q } => {
                let (p, q) = ordered(p, q);
                if q == 0 {
                    return Err(out_of_range("sostar", "p and q must be positive"));
                }
                SoStar { p, q }
            }
            Ugl { variant, n } => {
                let min = if variant == UglVariant::R { 2 } else { 1 };
                if n < min {
                    return Err(out_of_range("ugl", format!("n must be at least {min}")));
                }
                Ugl { variant, n }
            }
            OuStar { p, q } => {
                let (p, q) = ordered(p, q);
                if q == 0 {
                    return Err(out_of_range("oustar", "p and q must be positive"));
                }
                OuStar { p, q }
            }
            SpPq { field, p, q } => {
                if field == Field::H {
                    return Err(out_of_range("sp", "field must be R or C"));
                }
                let (p, q) = ordered(p, q);
                if q == 0 {
                    return Err(out_of_range("sp", "p and q must be positive"));
                }
                SpPq { field, p, q }
            }
            Rank1 { row, dual, p, q } => {
                let dual = dual && !row.is_self_dual();
                match row.params() {
                    Rank1Params::PQ if q == 0 => {
                        return Err(out_of_range("rank1", "q must be positive"));
                    }
                    Rank1Params::PQ => Rank1 { row, dual, p, q },
                    Rank1Params::M if p == 0 => {
                        return Err(out_of_range("rank1", "m must be positive"));
                    }
                    Rank1Params::M => Rank1 { row, dual, p, q: 0 },
                    Rank1Params::Fixed => Rank1 { row, dual, p: 0, q: 0 },
                }
            }
            Exc7 { row } => {
                if row >= tables::EXCEPTIONAL_TABLE.len() {
                    return Err(out_of_range("exc7", "no such row"));
                }
                Exc7 { row }
            }
            E6So91 => E6So91,
            Group(f) => Group(f.canonicalize()?),
            Riemannian(f) => {
                let f = f.canonicalize()?;
                if f.is_compact() {
                    return Err(out_of_range("riemannian", "the algebra must be noncompact"));
                }
                Riemannian(f)
            }
        };
        Ok(spec)
    }

    /// The c-dual pair, where the model records one: rank-one rows and
    /// the group case (whose c-dual is the complex case, not modelled).
    pub fn c_dual(&self) -> Option<PairSpec> {
        match *self {
            PairSpec::Rank1 { row, dual, p, q } if !row.is_self_dual() => {
                Some(PairSpec::Rank1 { row, dual: !dual, p, q })
            }
            _ => None,
        }
    }
}

impl fmt::Display for PairSpec {
    /// Canonical serialization in the pair-spec grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PairSpec::Upq { field, i, j, k, l } => write!(f, "upq {} {i} {j} {k} {l}", field.letter()),
            PairSpec::Glgl { field, p, q } => write!(f, "glgl {} {p} {q}", field.letter()),
            PairSpec::Somn { m, n } => write!(f, "somn {m} {n}"),
            PairSpec::SoStar { p, q } => write!(f, "sostar {p} {q}"),
            PairSpec::Ugl { variant, n } => write!(f, "ugl {} {n}", variant.token()),
            PairSpec::OuStar { p, q } => write!(f, "oustar {p} {q}"),
            PairSpec::SpPq { field, p, q } => write!(f, "sp {} {p} {q}", field.letter()),
            PairSpec::Rank1 { row, dual, p, q } => {
                write!(f, "rank1 {}{}", row.token(), if dual { "^c" } else { "" })?;
                match row.params() {
                    Rank1Params::PQ => write!(f, " {p} {q}"),
                    Rank1Params::M => write!(f, " {p}"),
                    Rank1Params::Fixed => Ok(()),
                }
            }
            PairSpec::Exc7 { row } => write!(f, "exc7 {}", tables::EXCEPTIONAL_TABLE[row].name()),
            PairSpec::E6So91 => write!(f, "e6so91"),
            PairSpec::Group(g) => write!(f, "group {g}"),
            PairSpec::Riemannian(g) => write!(f, "riemannian {g}"),
        }
    }
}

impl Serialize for PairSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

struct Tokens<'a> {
    items: Vec<&'a str>,
    next: usize,
}

impl<'a> Tokens<'a> {
    fn error(&self, position: usize, message: impl Into<String>) -> FamilyError {
        FamilyError::Parse {
            position,
            token: self.items.get(position - 1).copied().unwrap_or("").to_string(),
            message: message.into(),
        }
    }

    fn word(&mut self, what: &str) -> Result<(usize, &'a str), FamilyError> {
        self.next += 1;
        match self.items.get(self.next - 1) {
            Some(t) => Ok((self.next, *t)),
            None => Err(self.error(self.next, format!("missing {what}"))),
        }
    }

    fn int(&mut self, what: &str) -> Result<u32, FamilyError> {
        let (pos, t) = self.word(what)?;
        t.parse()
            .map_err(|_| self.error(pos, format!("expected a nonnegative integer for {what}")))
    }

    fn field(&mut self, allowed: &[Field]) -> Result<Field, FamilyError> {
        let (pos, t) = self.word("field letter")?;
        let f = match t {
            "R" => Field::R,
            "C" => Field::C,
            "H" => Field::H,
            _ => return Err(self.error(pos, "expected a field letter R, C or H")),
        };
        if !allowed.contains(&f) {
            return Err(self.error(pos, "field not allowed for this family"));
        }
        Ok(f)
    }

    fn finish(&self) -> Result<(), FamilyError> {
        if self.next < self.items.len() {
            return Err(self.error(self.next + 1, "unexpected extra token"));
        }
        Ok(())
    }

    fn real_form(&mut self) -> Result<RealForm, FamilyError> {
        let (pos, t) = self.word("real form")?;
        Ok(match t {
            "compact" => {
                let (lpos, letter) = self.word("Cartan type letter")?;
                let n = self.int("rank")?;
                let spec: RootSystemSpec = format!("{letter}{n}")
                    .parse()
                    .map_err(|_| self.error(lpos, "not a Cartan type"))?;
                RealForm::Compact(spec)
            }
            "so" => RealForm::So(self.int("p")?, self.int("q")?),
            "su" => RealForm::Su(self.int("p")?, self.int("q")?),
            "sp" => RealForm::Sp(self.int("p")?, self.int("q")?),
            "slR" => RealForm::SlR(self.int("n")?),
            "slC" => RealForm::SlC(self.int("n")?),
            _ => return Err(self.error(pos, "expected compact, so, su, sp, slR or slC")),
        })
    }
}

fn parse_rank1_row(token: &str) -> Option<(Rank1Row, bool)> {
    let (name, dual) = match token.strip_suffix("^c") {
        Some(n) => (n, true),
        None => (token, false),
    };
    // `Iw_X` is accepted as a spelling of `I_X`.
    let name = match name.strip_prefix("Iw_") {
        Some(rest) => format!("I_{rest}"),
        None => name.to_string(),
    };
    Rank1Row::ALL.into_iter().find(|r| r.token() == name).map(|r| (r, dual))
}

impl FromStr for PairSpec {
    type Err = FamilyError;

    /// Parses and canonicalizes a spec; parse errors name the 1-based token
    /// position.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut t = Tokens {
            items: s.split_whitespace().collect(),
            next: 0,
        };
        let (pos, family) = t.word("family keyword")?;
        let rc = [Field::R, Field::C];
        let rch = [Field::R, Field::C, Field::H];
        let spec = match family {
            "upq" => {
                let field = t.field(&rch)?;
                PairSpec::Upq {
                    field,
                    i: t.int("i")?,
                    j: t.int("j")?,
                    k: t.int("k")?,
                    l: t.int("l")?,
                }
            }
            "glgl" => {
                let field = t.field(&rch)?;
                PairSpec::Glgl {
                    field,
                    p: t.int("p")?,
                    q: t.int("q")?,
                }
            }
            "somn" => PairSpec::Somn {
                m: t.int("m")?,
                n: t.int("n")?,
            },
            "sostar" => PairSpec::SoStar {
                p: t.int("p")?,
                q: t.int("q")?,
            },
            "oustar" => PairSpec::OuStar {
                p: t.int("p")?,
                q: t.int("q")?,
            },
            "sp" => {
                let field = t.field(&rc)?;
                PairSpec::SpPq {
                    field,
                    p: t.int("p")?,
                    q: t.int("q")?,
                }
            }
            "ugl" => {
                let (vpos, v) = t.word("variant")?;
                let variant = match v {
                    "C" => UglVariant::C,
                    "H" => UglVariant::H,
                    "R" => UglVariant::R,
                    "spR" => UglVariant::SpR,
                    "ostar" => UglVariant::OStar,
                    _ => return Err(t.error(vpos, "expected C, H, R, spR or ostar")),
                };
                PairSpec::Ugl {
                    variant,
                    n: t.int("n")?,
                }
            }
            "rank1" => {
                let (rpos, r) = t.word("row")?;
                let (row, dual) = parse_rank1_row(r).ok_or_else(|| t.error(rpos, "unknown rank-one row"))?;
                let (p, q) = match row.params() {
                    Rank1Params::PQ => (t.int("p")?, t.int("q")?),
                    Rank1Params::M => (t.int("m")?, 0),
                    Rank1Params::Fixed => (0, 0),
                };
                PairSpec::Rank1 { row, dual, p, q }
            }
            "exc7" => {
                let (rpos, name) = t.word("row name")?;
                let row = tables::EXCEPTIONAL_TABLE
                    .iter()
                    .position(|r| r.name() == name)
                    .ok_or_else(|| t.error(rpos, "unknown exceptional-table row"))?;
                PairSpec::Exc7 { row }
            }
            "e6so91" => PairSpec::E6So91,
            "group" => PairSpec::Group(t.real_form()?),
            "riemannian" => PairSpec::Riemannian(t.real_form()?),
            _ => return Err(t.error(pos, "unknown family keyword")),
        };
        t.finish()?;
        spec.canonicalize()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PairSpec {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_round_trips() {
        for s in [
            "upq R 2 1 3 0",
            "glgl H 3 1",
            "somn 4 2",
            "sostar 3 1",
            "ugl ostar 2",
            "oustar 4 1",
            "sp C 1 1",
            "rank1 I_R^c 2 3",
            "rank1 III 4",
            "rank1 I_O",
            "exc7 e6(-14)/so(8,2)+iR",
            "e6so91",
            "group so 5 1",
            "riemannian compact E 8",
        ] {
            let spec: Result<PairSpec, _> = s.parse();
            if s.starts_with("riemannian compact") {
                assert!(spec.is_err());
                continue;
            }
            let spec = spec.unwrap();
            assert_eq!(p(&spec.to_string()), spec, "{s}");
        }
        assert_eq!(p("group compact E 8").to_string(), "group compact E 8");
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(p("upq R 0 1 2 3"), p("upq R 3 2 1 0"));
        assert_eq!(p("glgl R 1 4").to_string(), "glgl R 4 1");
        assert_eq!(p("rank1 I_O^c"), p("rank1 Iw_O"));
        assert_eq!(p("group su 1 1"), p("group slR 2"));
        assert_eq!(p("riemannian so 3 3"), p("riemannian slR 4"));
        assert_eq!(p("group slC 2"), p("group so 1 3"));
    }

    #[test]
    fn errors_name_positions() {
        match "upq X 1 1 1 0".parse::<PairSpec>() {
            Err(FamilyError::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
        match "somn 1".parse::<PairSpec>() {
            Err(FamilyError::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            "somn 1 2 3".parse::<PairSpec>(),
            Err(FamilyError::Parse { position: 4, .. })
        ));
        assert!(matches!(
            "ugl R 1".parse::<PairSpec>(),
            Err(FamilyError::OutOfRange { .. })
        ));
        assert!(matches!(
            "upq R 0 0 0 0".parse::<PairSpec>(),
            Err(FamilyError::OutOfRange { .. })
        ));
        assert!(matches!(
            "group so 2 2".parse::<PairSpec>(),
            Err(FamilyError::OutOfRange { .. })
        ));
    }
}
