//! Restricted-datum generators for the families whose multiplicities are
//! known root by root, and aggregate flag-dimension data for the others.

use super::tables::{self, classical_m_g, classical_n_g, rank1_group, rank1_matrix};
use super::{FamilyError, Field, PairSpec, Rank1Row, UglVariant};
use crate::pairdatum::{FlagDimensions, HRootSystem, MultRoot, RestrictedDatum};
use crate::rootsys::{RootFamily, RootSystemSpec, Weight};

/// Accumulates multiplicities in `R^dim`, merging repeated weights.
struct Builder {
    dim: usize,
    roots: Vec<MultRoot>,
}

impl Builder {
    fn new(dim: usize) -> Self {
        Builder { dim, roots: Vec::new() }
    }

    fn e(&self, i: usize) -> Weight {
        Weight::unit(self.dim, i)
    }

    fn add(&mut self, weight: Weight, m_plus: u32, m_minus: u32) {
        if m_plus + m_minus == 0 {
            return;
        }
        if let Some(r) = self.roots.iter_mut().find(|r| r.weight == weight) {
            r.m_plus += m_plus;
            r.m_minus += m_minus;
        } else {
            self.roots.push(MultRoot::new(weight, m_plus, m_minus));
        }
    }

    /// Adds `e_a ± e_b` for `a < b` in `range` with the given multiplicities.
    fn add_pm_pairs(&mut self, range: &[usize], plus: (u32, u32), minus: (u32, u32)) {
        for (x, &a) in range.iter().enumerate() {
            for &b in &range[x + 1..] {
                self.add(self.e(a).sub(&self.e(b)), minus.0, minus.1);
                self.add(self.e(a).add(&self.e(b)), plus.0, plus.1);
            }
        }
    }

    fn finish(self, rank_a_g: usize, h: HRootSystem, m_g: Option<u32>) -> Result<RestrictedDatum, FamilyError> {
        RestrictedDatum::new(self.dim, rank_a_g, self.roots, h, m_g)
            .map_err(|e| FamilyError::DatumUnavailable(format!("generator produced an invalid datum: {e}")))
    }
}

fn declared(family: RootFamily, rank: usize) -> HRootSystem {
    match RootSystemSpec::new(family, rank) {
        Ok(s) => HRootSystem::Declared(s),
        Err(_) => HRootSystem::Other(format!("{family:?}{rank}")),
    }
}

fn small(n: u64) -> u32 {
    u32::try_from(n).expect("multiplicity fits in u32")
}

/// The restricted datum `Σ(𝔤, 𝔞_H)` with multiplicities, where the model
/// has it root by root: the `(C_n, A_n)` family, rank-one rows, `o*(2p+2q)`
/// over `u(p,q)`, the complex orthogonal, quaternionic orthogonal and
/// symplectic families, and three exceptional pairs.
pub fn datum_of(spec: &PairSpec) -> Result<RestrictedDatum, FamilyError> {
    match *spec {
        PairSpec::Ugl { variant, n } => ugl(variant, n as usize),
        PairSpec::Rank1 { row, dual, p, q } => rank_one(row, dual, p, q),
        PairSpec::OuStar { p, q } => ou_star(p as usize, q as usize),
        PairSpec::Somn { m, n } => somn(m as usize, n as usize),
        PairSpec::SoStar { p, q } => so_star(p as usize, q as usize),
        PairSpec::SpPq { field, p, q } => sp_pq(field, p as usize, q as usize),
        PairSpec::Exc7 { row } => match (tables::EXCEPTIONAL_TABLE[row].g, tables::EXCEPTIONAL_TABLE[row].h) {
            ("e6(-14)", "so(8,2)+iR") => e6_so82(),
            ("e6(-26)", "so(9,1)+R") => e6_so91(),
            ("f4(-20)", "so(8,1)") => rank_one(Rank1Row::IO, false, 0, 0),
            _ => Err(FamilyError::DatumUnavailable(spec.to_string())),
        },
        PairSpec::E6So91 => e6_so91(),
        _ => Err(FamilyError::DatumUnavailable(spec.to_string())),
    }
}

/// `(U(n,n;F), GL(n,F))`, `(Sp(n,R), GL(n,R))`, `(O*(4n), GL(n,H))` and
/// `(O(n,n), GL(n,R))`: multiplicities of `e_i − e_j`, `e_i + e_j`, `2e_l`.
fn ugl(variant: UglVariant, n: usize) -> Result<RestrictedDatum, FamilyError> {
    let (diff, sum, long) = match variant {
        UglVariant::C => ((2, 0), (0, 2), (0, 1)),
        UglVariant::H => ((4, 0), (0, 4), (0, 3)),
        UglVariant::SpR => ((1, 0), (0, 1), (0, 1)),
        UglVariant::OStar => ((4, 0), (0, 4), (0, 1)),
        UglVariant::R => ((1, 0), (0, 1), (0, 0)),
    };
    let mut b = Builder::new(n);
    let all: Vec<usize> = (0..n).collect();
    b.add_pm_pairs(&all, sum, diff);
    for l in 0..n {
        b.add(b.e(l).scale(&crate::rootsys::int(2)), long.0, long.1);
    }
    let h = if n >= 2 {
        declared(RootFamily::A, n - 1)
    } else {
        HRootSystem::Other("none".into())
    };
    b.finish(n, h, None)
}

/// A rank-one row: weights `λ = 1` and `2λ = 2` on `𝔞_H = R`.
fn rank_one(row: Rank1Row, dual: bool, p: u32, q: u32) -> Result<RestrictedDatum, FamilyError> {
    let [[p1, p2], [m1, m2]] = rank1_matrix(row, p, q);
    let mut b = Builder::new(1);
    b.add(Weight::from_ints(&[1]), p1, m1);
    b.add(Weight::from_ints(&[2]), p2, m2);
    let h = match (p1 > 0, p2 > 0) {
        (true, true) => declared(RootFamily::BC, 1),
        (false, false) => HRootSystem::Other("none".into()),
        _ => HRootSystem::Other("A1".into()),
    };
    let g = rank1_group(row, dual, p, q);
    b.finish(g.rank as usize, h, Some(small(g.m_g)))
}

/// `m(G)` of `o*(2n)`: 4 for `n ≥ 3`; `o*(4) = su(2) + sl(2,R)` gives 1.
fn o_star_m_g(n: usize) -> u32 {
    if n >= 3 {
        4
    } else {
        1
    }
}

/// `(o*(2p+2q), u(p,q))` with `p ≥ q` on `𝔞_H = R^q`: `e_i ± e_j` have
/// `(2, 2)`, `e_l` has `(2(p−q), 2(p−q))` when `p > q`, `2e_l` has `(1, 0)`.
fn ou_star(p: usize, q: usize) -> Result<RestrictedDatum, FamilyError> {
    let mut b = Builder::new(q);
    let all: Vec<usize> = (0..q).collect();
    b.add_pm_pairs(&all, (2, 2), (2, 2));
    let d = small(2 * (p - q) as u64);
    for l in 0..q {
        b.add(b.e(l), d, d);
        b.add(b.e(l).scale(&crate::rootsys::int(2)), 1, 0);
    }
    let h = if p > q {
        declared(RootFamily::BC, q)
    } else if q >= 3 {
        declared(RootFamily::C, q)
    } else if q == 2 {
        declared(RootFamily::B, 2)
    } else {
        HRootSystem::Other("A1".into())
    };
    b.finish((p + q) / 2, h, Some(o_star_m_g(p + q)))
}

/// `(o(m+n,C), o(m,C)+o(n,C))` on `𝔞_H = R^{⌊m/2⌋+⌊n/2⌋}` with coordinates
/// `f_1..f_a, g_1..g_b`.
fn somn(m: usize, n: usize) -> Result<RestrictedDatum, FamilyError> {
    let (a, bb) = (m / 2, n / 2);
    let mut b = Builder::new(a + bb);
    let fs: Vec<usize> = (0..a).collect();
    let gs: Vec<usize> = (a..a + bb).collect();
    b.add_pm_pairs(&fs, (2, 0), (2, 0));
    b.add_pm_pairs(&gs, (2, 0), (2, 0));
    for &f in &fs {
        for &g in &gs {
            b.add(b.e(f).sub(&b.e(g)), 0, 2);
            b.add(b.e(f).add(&b.e(g)), 0, 2);
        }
    }
    let (m_odd, n_odd) = (m % 2 == 1, n % 2 == 1);
    for &f in &fs {
        b.add(b.e(f), if m_odd { 2 } else { 0 }, if n_odd { 2 } else { 0 });
    }
    for &g in &gs {
        b.add(b.e(g), if n_odd { 2 } else { 0 }, if m_odd { 2 } else { 0 });
    }
    let rank_g = (m + n) / 2;
    b.finish(rank_g, HRootSystem::Other(format!("o({m},C)+o({n},C)")), Some(2))
}

/// `(o*(2p+2q), o*(2p)+o*(2q))` on `𝔞_H = R^{⌊p/2⌋+⌊q/2⌋}`.
fn so_star(p: usize, q: usize) -> Result<RestrictedDatum, FamilyError> {
    let (a, bb) = (p / 2, q / 2);
    let mut b = Builder::new(a + bb);
    let fs: Vec<usize> = (0..a).collect();
    let gs: Vec<usize> = (a..a + bb).collect();
    let two = crate::rootsys::int(2);
    for (block, odd) in [(&fs, p % 2 == 1), (&gs, q % 2 == 1)] {
        b.add_pm_pairs(block, (4, 0), (4, 0));
        for &x in block.iter() {
            b.add(b.e(x).scale(&two), 1, 0);
            if odd {
                b.add(b.e(x), 4, 0);
            }
        }
    }
    for &f in &fs {
        for &g in &gs {
            b.add(b.e(f).sub(&b.e(g)), 0, 4);
            b.add(b.e(f).add(&b.e(g)), 0, 4);
        }
    }
    if q % 2 == 1 {
        for &f in &fs {
            b.add(b.e(f), 0, 4);
        }
    }
    if p % 2 == 1 {
        for &g in &gs {
            b.add(b.e(g), 0, 4);
        }
    }
    b.finish(
        (p + q) / 2,
        HRootSystem::Other(format!("o*({})+o*({})", 2 * p, 2 * q)),
        Some(o_star_m_g(p + q)),
    )
}

/// `(sp(p+q,F), sp(p,F)+sp(q,F))`, `F = R` or `C`, on `𝔞_H = R^{p+q}`:
/// roots inside one block have `(d, 0)`, mixed roots `f_a ± f_b` have
/// `(0, d)`.
fn sp_pq(field: Field, p: usize, q: usize) -> Result<RestrictedDatum, FamilyError> {
    let d = if field == Field::C { 2 } else { 1 };
    let n = p + q;
    let mut b = Builder::new(n);
    let block = |x: usize| x < p;
    for x in 0..n {
        for y in x + 1..n {
            let m = if block(x) == block(y) { (d, 0) } else { (0, d) };
            b.add(b.e(x).sub(&b.e(y)), m.0, m.1);
            b.add(b.e(x).add(&b.e(y)), m.0, m.1);
        }
        b.add(b.e(x).scale(&crate::rootsys::int(2)), d, 0);
    }
    let name = match field {
        Field::C => format!("sp({p},C)+sp({q},C)"),
        _ => format!("sp({p},R)+sp({q},R)"),
    };
    b.finish(n, HRootSystem::Other(name), None)
}

/// `(e6(-14), so(8,2)+iR)`: `e_i` has `(6,0)`, `2e_i` has `(0,1)`,
/// `e_1 ± e_2` has `(1,7)`.
fn e6_so82() -> Result<RestrictedDatum, FamilyError> {
    let mut b = Builder::new(2);
    for i in 0..2 {
        b.add(b.e(i), 6, 0);
        b.add(b.e(i).scale(&crate::rootsys::int(2)), 0, 1);
    }
    b.add(b.e(0).add(&b.e(1)), 1, 7);
    b.add(b.e(0).sub(&b.e(1)), 1, 7);
    b.finish(2, declared(RootFamily::B, 2), None)
}

/// `(e6(-26), so(9,1)+R)`: `Σ(𝔤, 𝔞_G)` is `A_2` with every multiplicity 8
/// and `𝔞_H = 𝔞_G`; one positive root belongs to `so(9,1)`. Coordinates are
/// taken in the basis of simple roots `α_1, α_2`.
fn e6_so91() -> Result<RestrictedDatum, FamilyError> {
    let mut b = Builder::new(2);
    b.add(Weight::from_ints(&[1, 0]), 8, 0);
    b.add(Weight::from_ints(&[0, 1]), 0, 8);
    b.add(Weight::from_ints(&[1, 1]), 0, 8);
    b.finish(2, HRootSystem::Other("A1 (so(9,1)) + central R".into()), None)
}

/// Flag-variety data for the inequality test. Classical families without a
/// root-by-root datum use closed forms; exceptional rows use the table.
pub fn flag_dimensions(spec: &PairSpec) -> Option<FlagDimensions> {
    let w = u64::from;
    match *spec {
        PairSpec::Upq { field, i, j, k, l } => {
            let rank_g = (i + j).min(k + l) as usize;
            let rank_h = (i.min(k) + j.min(l)) as usize;
            Some(FlagDimensions {
                n_g: classical_n_g(field, w(i + j), w(k + l)),
                n_h: classical_n_g(field, w(i), w(k)) + classical_n_g(field, w(j), w(l)),
                m_g: classical_m_g(field, w(i + j), w(k + l)),
                rank_h,
                rank_equal: rank_g == rank_h,
            })
        }
        PairSpec::Glgl { field, p, q } => {
            let d = field.dim();
            let tri = |n: u64| n * n.saturating_sub(1) / 2;
            Some(FlagDimensions {
                n_g: d * tri(w(p + q)),
                n_h: d * (tri(w(p)) + tri(w(q))),
                m_g: d,
                rank_h: (p + q) as usize,
                rank_equal: true,
            })
        }
        PairSpec::Exc7 { row } => {
            let r = &tables::EXCEPTIONAL_TABLE[row];
            Some(FlagDimensions {
                n_g: r.n_g,
                n_h: r.n_h,
                m_g: r.m_g,
                rank_h: r.rank as usize,
                rank_equal: true,
            })
        }
        _ => datum_of(spec).ok()?.derive().ok().map(|d| d.flag_dimensions()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> RestrictedDatum {
        datum_of(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn ugl_counts() {
        for n in 1..=5u32 {
            for v in ["C", "H", "spR", "ostar"] {
                let d = datum(&format!("ugl {v} {n}"));
                let count = d.delta_n_minus().len() as u32;
                assert_eq!(count, n * (n + 1) / 2, "{v} {n}");
            }
        }
        let d = datum("ugl spR 3");
        assert!(d.delta_n_minus().contains(&Weight::from_ints(&[2, 0, 0])));
        assert_eq!(datum("ugl R 4").delta_n_minus().len(), 6);
    }

    #[test]
    fn rank_one_octonionic_row() {
        let d = datum("rank1 I_O");
        assert_eq!(d.multiplicity(&Weight::from_ints(&[1])), Some((0, 8)));
        assert_eq!(d.multiplicity(&Weight::from_ints(&[2])), Some((7, 0)));
        let inv = d.derive().unwrap();
        assert_eq!((inv.n_g, inv.n_h, inv.m_g), (15, 7, 8));
    }

    #[test]
    fn somn_even_counts() {
        for p in 1..=3usize {
            for q in 1..=p {
                let d = datum(&format!("somn {} {}", 2 * p, 2 * q));
                assert_eq!(d.rank_a_h(), p + q);
                assert_eq!(d.delta_n_minus().len(), 2 * p * q);
            }
        }
    }

    #[test]
    fn exceptional_data() {
        let d = datum("exc7 e6(-14)/so(8,2)+iR");
        let inv = d.derive().unwrap();
        assert_eq!(inv.delta_n_minus_count, 4);
        assert_eq!((inv.n_g, inv.n_h, inv.m_g), (30, 14, 8));
        let inv = datum("e6so91").derive().unwrap();
        assert_eq!((inv.n_g, inv.n_h, inv.m_g), (24, 8, 8));
        assert!(matches!(
            datum_of(&"exc7 e8(8)/so(8,8)".parse().unwrap()),
            Err(FamilyError::DatumUnavailable(_))
        ));
    }

    #[test]
    fn oustar_matches_rank_one_row() {
        for p in 2..=6u32 {
            let a = datum(&format!("oustar {p} 1"));
            let b = datum(&format!("rank1 III {}", p - 1));
            assert_eq!(a.positive_roots(), b.positive_roots());
        }
    }

    #[test]
    fn aggregates_agree_with_data_where_both_exist() {
        // sp(1,1) = so(4,1) rank-one row vs closed form.
        let f = flag_dimensions(&"upq H 1 1 1 0".parse().unwrap()).unwrap();
        assert_eq!((f.n_g, f.m_g), (3 + 4, 4));
    }
}
