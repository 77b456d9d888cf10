//! Fixed reference tables: the rank-one table (multiplicity matrices and
//! group metadata), the exceptional table of flag-dimension data, the
//! min-orbit table `c(Δ)`, and closed forms for classical real forms.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::{Field, Rank1Row};
use crate::rootsys::{RootFamily, RootSystemSpec};

/// Comparison symbol between two integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    Less,
    Equal,
    Greater,
}

impl Relation {
    pub fn of(a: u64, b: u64) -> Relation {
        match a.cmp(&b) {
            Ordering::Less => Relation::Less,
            Ordering::Equal => Relation::Equal,
            Ordering::Greater => Relation::Greater,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Equal => "=",
            Relation::Greater => ">",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Real rank of `u(a,b;F)` (any order of `a`, `b`).
pub fn classical_rank(a: u64, b: u64) -> u64 {
    a.min(b)
}

/// `n(G)` for `G = U(a,b;F)`: the sum of restricted root multiplicities
/// over a positive system, `b(a−1)`, `b(2a−1)`, `b(4a−1)` for `a ≥ b`.
pub fn classical_n_g(field: Field, a: u64, b: u64) -> u64 {
    let (a, b) = (a.max(b), a.min(b));
    match field {
        Field::R => b * a.saturating_sub(1),
        Field::C => b * (2 * a).saturating_sub(1),
        Field::H => b * (4 * a).saturating_sub(1),
    }
}

/// `m(G)` for `G = U(a,b;F)` with `b ≥ 1`: the largest restricted root
/// multiplicity (root system `B_b`/`BC_b`/`C_b`/`D_b`).
pub fn classical_m_g(field: Field, a: u64, b: u64) -> u64 {
    let (a, b) = (a.max(b), a.min(b));
    let d = field.dim();
    if b == 0 {
        return 0;
    }
    let long = d - 1; // multiplicity of 2e_i
    let middle = d * (a - b); // multiplicity of e_i
    let short = if b >= 2 { d } else { 0 }; // multiplicity of e_i ± e_j
    long.max(middle).max(short)
}

/// Metadata of one side (`g` or `g^c`) of a rank-one row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rank1Group {
    pub name: String,
    pub rank: u64,
    pub m_g: u64,
}

/// The multiplicity matrix `(m+(λ), m+(2λ); m-(λ), m-(2λ))` of a rank-one
/// row at parameters `(p, q)` (or `m = p`).
pub fn rank1_matrix(row: Rank1Row, p: u32, q: u32) -> [[u32; 2]; 2] {
    let m = p;
    match row {
        Rank1Row::IR => [[p, 0], [q, 0]],
        Rank1Row::IC => [[2 * p, 1], [2 * q, 0]],
        Rank1Row::IH => [[4 * p, 3], [4 * q, 0]],
        Rank1Row::IO => [[0, 7], [8, 0]],
        Rank1Row::SlR => [[m, 0], [m, 1]],
        Rank1Row::SpR => [[2 * m, 1], [2 * m, 2]],
        Rank1Row::F44 => [[4, 3], [4, 4]],
        Rank1Row::II => [[m, 0], [m, 0]],
        Rank1Row::SlC => [[2 * m, 1], [2 * m, 1]],
        Rank1Row::SpC => [[4 * m, 3], [4 * m, 3]],
        Rank1Row::F4C => [[8, 7], [8, 7]],
        Rank1Row::III => [[2 * m, 1], [2 * m, 0]],
        Rank1Row::SuStar => [[4 * m, 3], [4 * m, 1]],
        Rank1Row::E626 => [[8, 7], [8, 1]],
        Rank1Row::SlC3 => [[2, 0], [2, 2]],
        Rank1Row::Su33 => [[4, 1], [4, 3]],
        Rank1Row::E62 => [[8, 3], [8, 5]],
    }
}

fn grp(name: String, rank: u64, m_g: u64) -> Rank1Group {
    Rank1Group { name, rank, m_g }
}

/// Names of `𝔥` for each rank-one row.
pub fn rank1_h_name(row: Rank1Row, p: u32, q: u32) -> String {
    let m = p;
    match row {
        Rank1Row::IR => format!("so({q})+so({},1)", p + 1),
        Rank1Row::IC => format!("u({q})+u({},1)", p + 1),
        Rank1Row::IH => format!("sp({q})+sp({},1)", p + 1),
        Rank1Row::IO => "so(8,1)".into(),
        Rank1Row::SlR | Rank1Row::II => format!("so({},1)", m + 1),
        Rank1Row::SpR | Rank1Row::III => format!("u({},1)", m + 1),
        Rank1Row::F44 => "sp(2,1)+su(2)".into(),
        Rank1Row::SlC => format!("su({},1)", m + 1),
        Rank1Row::SpC | Rank1Row::SuStar => format!("sp({},1)", m + 1),
        Rank1Row::F4C | Rank1Row::E626 => "f4(-20)".into(),
        Rank1Row::SlC3 => "so(3,C)".into(),
        Rank1Row::Su33 => "so*(6)".into(),
        Rank1Row::E62 => "sp(3,1)".into(),
    }
}

/// Name, real rank and `m(G)` of `g` (or of the c-dual `g^c` when `dual`)
/// for a rank-one row.
pub fn rank1_group(row: Rank1Row, dual: bool, p: u32, q: u32) -> Rank1Group {
    let (p64, q64) = (u64::from(p), u64::from(q));
    let m = p64;
    let classical = |field: Field, name: &str, a: u64, b: u64| {
        grp(
            format!("{name}({a},{b})"),
            classical_rank(a, b),
            classical_m_g(field, a, b),
        )
    };
    match (row, dual || row.is_self_dual()) {
        (Rank1Row::IR, false) => classical(Field::R, "so", p64 + 1, q64 + 1),
        (Rank1Row::IR, true) => classical(Field::R, "so", p64 + q64 + 1, 1),
        (Rank1Row::IC, false) => classical(Field::C, "su", p64 + 1, q64 + 1),
        (Rank1Row::IC, true) => classical(Field::C, "su", p64 + q64 + 1, 1),
        (Rank1Row::IH, false) => classical(Field::H, "sp", p64 + 1, q64 + 1),
        (Rank1Row::IH, true) => classical(Field::H, "sp", p64 + q64 + 1, 1),
        (Rank1Row::IO, _) => grp("f4(-20)".into(), 1, 8),
        (Rank1Row::SlR, false) => grp(format!("sl({},R)", m + 2), m + 1, 1),
        (Rank1Row::SlR, true) => classical(Field::C, "su", m + 1, 1),
        (Rank1Row::SpR, false) => grp(format!("sp({},R)", m + 2), m + 2, 1),
        (Rank1Row::SpR, true) => classical(Field::H, "sp", m + 1, 1),
        (Rank1Row::F44, false) => grp("f4(4)".into(), 4, 1),
        (Rank1Row::F44, true) => grp("f4(-20)".into(), 1, 8),
        (Rank1Row::II, false) => grp(format!("so({},C)", m + 2), (m + 2) / 2, 2),
        (Rank1Row::II, true) => grp(
            format!("so({},1)+so({},1)", m + 1, m + 1),
            2,
            classical_m_g(Field::R, m + 1, 1),
        ),
        (Rank1Row::SlC, false) => grp(format!("sl({},C)", m + 2), m + 1, 2),
        (Rank1Row::SlC, true) => grp(
            format!("su({},1)+su({},1)", m + 1, m + 1),
            2,
            classical_m_g(Field::C, m + 1, 1),
        ),
        (Rank1Row::SpC, false) => grp(format!("sp({},C)", m + 2), m + 2, 2),
        (Rank1Row::SpC, true) => grp(
            format!("sp({},1)+sp({},1)", m + 1, m + 1),
            2,
            classical_m_g(Field::H, m + 1, 1),
        ),
        (Rank1Row::F4C, false) => grp("f4(C)".into(), 4, 2),
        (Rank1Row::F4C, true) => grp("f4(-20)+f4(-20)".into(), 2, 8),
        (Rank1Row::III, false) => grp(format!("so*({})", 2 * m + 4), (m + 2) / 2, 4),
        (Rank1Row::III, true) => classical(Field::R, "so", 2 * m + 2, 2),
        (Rank1Row::SuStar, false) => grp(format!("su*({})", 2 * m + 4), m + 1, 4),
        (Rank1Row::SuStar, true) => classical(Field::C, "su", 2 * m + 2, 2),
        (Rank1Row::E626, false) => grp("e6(-26)".into(), 2, 8),
        (Rank1Row::E626, true) => grp("e6(-14)".into(), 2, 8),
        (Rank1Row::SlC3, _) => grp("sl(3,C)".into(), 2, 2),
        (Rank1Row::Su33, false) => grp("su(3,3)".into(), 3, 2),
        (Rank1Row::Su33, true) => grp("su*(6)".into(), 2, 4),
        (Rank1Row::E62, false) => grp("e6(2)".into(), 4, 2),
        (Rank1Row::E62, true) => grp("e6(-26)".into(), 2, 8),
    }
}

/// One row of the exceptional table: an exceptional symmetric pair with
/// `rank_R G = rank_R H`, its flag-dimension data and the comparison
/// between `m(G)·rank` and `n(G) − n(H)` as printed in the source table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExceptionalRow {
    pub g: &'static str,
    pub h: &'static str,
    pub rank: u64,
    pub m_g: u64,
    pub n_g: u64,
    pub n_h: u64,
    /// The printed relation as `(left, symbol, right)`.
    pub printed: (u64, Relation, u64),
}

impl ExceptionalRow {
    /// Identifier without spaces, e.g. `e6(-14)/so(8,2)+iR`.
    pub fn name(&self) -> String {
        format!("{}/{}", self.g, self.h)
    }

    /// `m(G)·rank`.
    pub fn bound(&self) -> u64 {
        self.m_g * self.rank
    }

    /// `n(G) − n(H)`.
    pub fn gap(&self) -> u64 {
        self.n_g - self.n_h
    }

    /// Recomputed relation of `m(G)·rank` to `n(G) − n(H)`.
    pub fn recomputed(&self) -> Relation {
        Relation::of(self.bound(), self.gap())
    }

    /// Whether `n(G) − n(H) ≤ m(G)·rank` holds.
    pub fn inequality_holds(&self) -> bool {
        self.gap() <= self.bound()
    }
}

const fn row(
    g: &'static str,
    h: &'static str,
    rank: u64,
    m_g: u64,
    n_g: u64,
    n_h: u64,
    printed: (u64, Relation, u64),
) -> ExceptionalRow {
    ExceptionalRow {
        g,
        h,
        rank,
        m_g,
        n_g,
        n_h,
        printed,
    }
}

use Relation::{Equal as EQ, Greater as GT, Less as LT};

/// The exceptional table (22 rows), transcribed verbatim including the
/// printed relation column.
pub const EXCEPTIONAL_TABLE: [ExceptionalRow; 22] = [
    row("e6(6)", "sl(6,R)+sl(2,R)", 6, 1, 36, 16, (6, LT, 20)),
    row("e6(6)", "so(5,5)+R", 6, 1, 36, 20, (6, LT, 16)),
    row("e6(2)", "so(6,4)+iR", 4, 2, 36, 20, (8, LT, 16)),
    row("e6(2)", "su(3,3)+sl(2,R)", 4, 2, 36, 16, (8, LT, 20)),
    row("e6(-14)", "su(5,1)+sl(2,R)", 2, 8, 30, 10, (16, LT, 20)),
    row("e6(-14)", "so(8,2)+iR", 2, 8, 30, 14, (16, EQ, 16)),
    row("e6(-26)", "so(9,1)+R", 2, 8, 24, 8, (16, GT, 8)),
    row("e7(7)", "sl(8,R)", 7, 1, 63, 28, (7, LT, 35)),
    row("e7(7)", "so(6,6)+sl(2,R)", 7, 1, 63, 31, (7, LT, 32)),
    row("e7(7)", "e6(6)+R", 7, 1, 63, 36, (7, LT, 27)),
    row("e7(-5)", "so(8,4)+su(2)", 4, 4, 60, 28, (16, LT, 32)),
    row("e7(-5)", "so*(12)+sl(2,R)", 4, 4, 60, 28, (16, LT, 32)),
    row("e7(-25)", "e6(-26)+R", 3, 8, 51, 24, (24, LT, 27)),
    row("e7(-25)", "so(10,2)+sl(2,R)", 3, 8, 51, 19, (24, LT, 32)),
    row("e8(8)", "so(8,8)", 8, 1, 120, 56, (8, LT, 64)),
    row("e8(8)", "e7(7)+sl(2,R)", 8, 1, 120, 64, (8, LT, 56)),
    row("e8(-24)", "so(12,4)", 4, 8, 108, 44, (32, LT, 64)),
    row("e8(-24)", "e7(-25)+sl(2,R)", 4, 8, 108, 52, (32, LT, 56)),
    row("f4(4)", "so(5,4)", 4, 1, 24, 16, (4, LT, 8)),
    row("f4(4)", "sp(3,R)+sl(2,R)", 4, 1, 24, 10, (4, LT, 14)),
    row("f4(-20)", "so(8,1)", 1, 8, 15, 7, (8, EQ, 8)),
    row("g2(2)", "sl(2,R)+sl(2,R)", 2, 1, 6, 2, (2, LT, 4)),
];

/// Index of the exceptional-table row with the given name.
pub fn exceptional_row(name: &str) -> Option<usize> {
    EXCEPTIONAL_TABLE.iter().position(|r| r.name() == name)
}

/// Expected `c(Δ)` from the closed forms of the min-orbit table:
/// `n+1` for `A_n`, `2n` for `B_n`, `C_n`, `D_n` (and `BC_n`), 27, 56, 240
/// for `E_6`, `E_7`, `E_8`, 24 for `F_4` and 6 for `G_2`.
pub fn min_orbit_table(spec: RootSystemSpec) -> u64 {
    let n = spec.rank() as u64;
    match spec.family() {
        RootFamily::A => n + 1,
        RootFamily::B | RootFamily::C | RootFamily::D | RootFamily::BC => 2 * n,
        RootFamily::E => [27, 56, 240][spec.rank() - 6],
        RootFamily::F => 24,
        RootFamily::G => 6,
    }
}
