//! Restricted root data `Σ(𝔤, 𝔞_H)` of a symmetric pair with signed
//! multiplicities `m±(λ)`, and the invariants derived from them: the weight
//! set `Δ(𝔫^{-σ})`, the flag-variety dimensions `n(G)`, `n(H)` and the
//! maximal root multiplicity `m(G)`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::linalg;
use crate::rootsys::{self, reflect, RootSystemSpec, Weight};

/// Errors raised when a restricted datum is malformed or incomplete.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DatumError {
    #[error("root {0} has zero total multiplicity")]
    ZeroMultiplicity(Weight),
    #[error("the zero weight cannot be a root")]
    ZeroWeight,
    #[error("root {0} is listed twice")]
    DuplicateRoot(Weight),
    #[error("root {weight} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        weight: Weight,
        expected: usize,
        found: usize,
    },
    #[error("the roots span a space of dimension {span}, larger than rank {rank}")]
    SpanExceedsRank { span: usize, rank: usize },
    #[error("rank of G ({rank_g}) is smaller than rank of H ({rank_h})")]
    RankOrder { rank_g: usize, rank_h: usize },
    #[error("the roots do not lie in a common open half-space")]
    NotPositiveSystem,
    #[error("the roots of 𝔥 are not closed under the Weyl group of {0}")]
    NotClosed(RootSystemSpec),
    #[error("m(G) must be supplied when rank G > rank H")]
    IncompleteDatum,
}

/// A positive restricted root with its multiplicity split
/// `m+(λ) = dim 𝔤^σ(𝔞_H; λ)` and `m-(λ) = dim 𝔤^{-σ}(𝔞_H; λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultRoot {
    pub weight: Weight,
    pub m_plus: u32,
    pub m_minus: u32,
}

impl MultRoot {
    pub fn new(weight: Weight, m_plus: u32, m_minus: u32) -> Self {
        MultRoot {
            weight,
            m_plus,
            m_minus,
        }
    }

    pub fn total(&self) -> u32 {
        self.m_plus + self.m_minus
    }
}

/// The root system `Σ(𝔥, 𝔞_H)` of the subalgebra: either a declared
/// irreducible system realized in the datum's coordinates, or a free-text
/// description (reducible, rank one inside a larger ambient, or empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HRootSystem {
    Declared(RootSystemSpec),
    Other(String),
}

impl fmt::Display for HRootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HRootSystem::Declared(s) => write!(f, "{s}"),
            HRootSystem::Other(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for HRootSystem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `Σ⁺(𝔤, 𝔞_H)` with multiplicities, plus the rank data needed by the
/// criteria. Only positive roots are stored; `λ` and `2λ` are distinct
/// entries. Immutable once validated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictedDatum {
    rank_a_h: usize,
    rank_a_g: usize,
    positive_roots: Vec<MultRoot>,
    h_root_system: HRootSystem,
    m_g_value: Option<u32>,
}

/// Quantities derived from a datum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedInvariants {
    pub delta_n_minus: BTreeSet<Weight>,
    pub delta_n_minus_count: usize,
    pub dim_n_minus: u64,
    pub n_g: u64,
    pub n_h: u64,
    pub m_g: u64,
    pub rank_h: usize,
    pub rank_equal: bool,
}

/// The numbers entering the flag-dimension inequality
/// `n(G) - n(H) ≤ m(G)·rank H`. They come either from a datum or from
/// aggregate table values when no root-by-root datum is available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FlagDimensions {
    pub n_g: u64,
    pub n_h: u64,
    pub m_g: u64,
    pub rank_h: usize,
    pub rank_equal: bool,
}

impl DerivedInvariants {
    pub fn flag_dimensions(&self) -> FlagDimensions {
        FlagDimensions {
            n_g: self.n_g,
            n_h: self.n_h,
            m_g: self.m_g,
            rank_h: self.rank_h,
            rank_equal: self.rank_equal,
        }
    }
}

fn coords(ws: &[&Weight]) -> Vec<Vec<rootsys::Rational>> {
    ws.iter().map(|w| w.coords().to_vec()).collect()
}

impl RestrictedDatum {
    /// Validates and builds a datum. Roots are stored sorted by weight.
    ///
    /// `rank_a_h` may be zero (a compact 𝔞_H, no roots). The weights must
    /// live in `R^{rank_a_h}`, lie in a common open half-space, and the
    /// `m+ > 0` part must be closed under the declared `h_root_system`.
    pub fn new(
        rank_a_h: usize,
        rank_a_g: usize,
        mut positive_roots: Vec<MultRoot>,
        h_root_system: HRootSystem,
        m_g_value: Option<u32>,
    ) -> Result<Self, DatumError> {
        if rank_a_g < rank_a_h {
            return Err(DatumError::RankOrder {
                rank_g: rank_a_g,
                rank_h: rank_a_h,
            });
        }
        positive_roots.sort();
        let mut seen = HashSet::new();
        for r in &positive_roots {
            if r.weight.ambient_dim() != rank_a_h {
                return Err(DatumError::DimensionMismatch {
                    weight: r.weight.clone(),
                    expected: rank_a_h,
                    found: r.weight.ambient_dim(),
                });
            }
            if r.weight.is_zero() {
                return Err(DatumError::ZeroWeight);
            }
            if r.total() == 0 {
                return Err(DatumError::ZeroMultiplicity(r.weight.clone()));
            }
            if !seen.insert(&r.weight) {
                return Err(DatumError::DuplicateRoot(r.weight.clone()));
            }
        }
        let ws: Vec<&Weight> = positive_roots.iter().map(|r| &r.weight).collect();
        let span = linalg::rank(&coords(&ws));
        if span > rank_a_h {
            return Err(DatumError::SpanExceedsRank { span, rank: rank_a_h });
        }
        let all_lex = ws.iter().all(|w| w.is_lex_positive());
        if !all_lex {
            let sum = ws.iter().fold(Weight::zero(rank_a_h), |acc, w| acc.add(w));
            if !ws.iter().all(|w| w.dot(&sum).is_positive()) {
                return Err(DatumError::NotPositiveSystem);
            }
        }
        let d = RestrictedDatum {
            rank_a_h,
            rank_a_g,
            positive_roots,
            h_root_system,
            m_g_value,
        };
        d.check_h_closure()?;
        Ok(d)
    }

    fn check_h_closure(&self) -> Result<(), DatumError> {
        let HRootSystem::Declared(spec) = self.h_root_system else {
            return Ok(());
        };
        if spec.ambient_dim() != self.rank_a_h {
            return Ok(());
        }
        let rs = rootsys::cached(spec).map_err(|_| DatumError::NotClosed(spec))?;
        let h_roots: HashSet<Weight> = self
            .positive_roots
            .iter()
            .filter(|r| r.m_plus > 0)
            .flat_map(|r| [r.weight.clone(), r.weight.neg()])
            .collect();
        for w in &h_roots {
            for a in rs.simple_roots() {
                if !h_roots.contains(&reflect(w, a)) {
                    return Err(DatumError::NotClosed(spec));
                }
            }
        }
        Ok(())
    }

    pub fn rank_a_h(&self) -> usize {
        self.rank_a_h
    }

    pub fn rank_a_g(&self) -> usize {
        self.rank_a_g
    }

    pub fn positive_roots(&self) -> &[MultRoot] {
        &self.positive_roots
    }

    pub fn h_root_system(&self) -> &HRootSystem {
        &self.h_root_system
    }

    pub fn m_g_value(&self) -> Option<u32> {
        self.m_g_value
    }

    pub fn rank_equal(&self) -> bool {
        self.rank_a_h == self.rank_a_g
    }

    /// Multiplicities of a given weight, if it is a stored positive root.
    pub fn multiplicity(&self, weight: &Weight) -> Option<(u32, u32)> {
        self.positive_roots
            .iter()
            .find(|r| &r.weight == weight)
            .map(|r| (r.m_plus, r.m_minus))
    }

    /// `Δ(𝔫^{-σ}) = {λ ∈ Σ⁺ : m-(λ) > 0}`, without multiplicity.
    pub fn delta_n_minus(&self) -> BTreeSet<Weight> {
        self.positive_roots
            .iter()
            .filter(|r| r.m_minus > 0)
            .map(|r| r.weight.clone())
            .collect()
    }

    /// True iff `Δ(𝔫^{-σ})` is linearly independent.
    pub fn check_independence(&self) -> bool {
        self.dependent_delta_subset().is_none()
    }

    /// A minimal linearly dependent subset of `Δ(𝔫^{-σ})`, if any.
    pub fn dependent_delta_subset(&self) -> Option<Vec<Weight>> {
        let delta: Vec<Weight> = self.delta_n_minus().into_iter().collect();
        let refs: Vec<&Weight> = delta.iter().collect();
        linalg::minimal_dependent_subset(&coords(&refs)).map(|idx| idx.into_iter().map(|i| delta[i].clone()).collect())
    }

    /// Derived invariants. `n(G)` is `dim 𝔫 = Σ (m+ + m-)`, which equals the
    /// dimension of the real flag variety of `G` when the ranks agree; `m(G)`
    /// is computed from the datum in that case and taken from `m_g_value`
    /// otherwise.
    pub fn derive(&self) -> Result<DerivedInvariants, DatumError> {
        let n_h: u64 = self.positive_roots.iter().map(|r| u64::from(r.m_plus)).sum();
        let dim_n_minus: u64 = self.positive_roots.iter().map(|r| u64::from(r.m_minus)).sum();
        let m_g = if self.rank_equal() {
            self.max_root_multiplicity().max(1)
        } else {
            u64::from(self.m_g_value.ok_or(DatumError::IncompleteDatum)?)
        };
        let delta = self.delta_n_minus();
        Ok(DerivedInvariants {
            delta_n_minus_count: delta.len(),
            delta_n_minus: delta,
            dim_n_minus,
            n_g: n_h + dim_n_minus,
            n_h,
            m_g,
            rank_h: self.rank_a_h,
            rank_equal: self.rank_equal(),
        })
    }

    /// `max_λ m+(λ) + m-(λ)` over the stored roots (0 for an empty datum).
    pub fn max_root_multiplicity(&self) -> u64 {
        self.positive_roots
            .iter()
            .map(|r| u64::from(r.total()))
            .max()
            .unwrap_or(0)
    }

    /// The c-dual datum: identical roots and multiplicities, with the rank
    /// of the dual group and its `m(G)` supplied from family metadata.
    pub fn c_dual(&self, rank_a_g: usize, m_g_value: Option<u32>) -> RestrictedDatum {
        RestrictedDatum {
            rank_a_g: rank_a_g.max(self.rank_a_h),
            m_g_value,
            ..self.clone()
        }
    }

    /// Multiplicities grouped by weight, handy for table displays.
    pub fn multiplicity_table(&self) -> BTreeMap<Weight, (u32, u32)> {
        self.positive_roots
            .iter()
            .map(|r| (r.weight.clone(), (r.m_plus, r.m_minus)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::from_ints(v)
    }

    fn datum(rank: usize, roots: &[(&[i64], u32, u32)]) -> Result<RestrictedDatum, DatumError> {
        RestrictedDatum::new(
            rank,
            rank,
            roots.iter().map(|(v, p, m)| MultRoot::new(w(v), *p, *m)).collect(),
            HRootSystem::Other("test".into()),
            None,
        )
    }

    #[test]
    fn independence_examples() {
        assert!(datum(2, &[(&[1, 0], 0, 1), (&[0, 1], 0, 1)])
            .unwrap()
            .check_independence());
        assert!(datum(2, &[(&[1, 1], 0, 1), (&[1, -1], 0, 1)])
            .unwrap()
            .check_independence());
        let d = datum(2, &[(&[1, 1], 0, 1), (&[1, -1], 0, 1), (&[1, 0], 0, 1)]).unwrap();
        assert!(!d.check_independence());
        assert_eq!(d.dependent_delta_subset().unwrap().len(), 3);
    }

    #[test]
    fn validation_rejects_bad_data() {
        assert!(matches!(
            datum(1, &[(&[1], 0, 0)]),
            Err(DatumError::ZeroMultiplicity(_))
        ));
        assert!(matches!(datum(1, &[(&[0], 1, 0)]), Err(DatumError::ZeroWeight)));
        assert!(matches!(
            datum(1, &[(&[1], 1, 0), (&[-1], 1, 0)]),
            Err(DatumError::NotPositiveSystem)
        ));
        assert!(matches!(
            datum(2, &[(&[1], 1, 0)]),
            Err(DatumError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            datum(1, &[(&[1], 1, 0), (&[1], 0, 1)]),
            Err(DatumError::DuplicateRoot(_))
        ));
        let not_closed = RestrictedDatum::new(
            2,
            2,
            vec![MultRoot::new(w(&[1, 0]), 1, 0)],
            HRootSystem::Declared("B2".parse().unwrap()),
            None,
        );
        assert!(matches!(not_closed, Err(DatumError::NotClosed(_))));
    }

    #[test]
    fn riemannian_datum_has_empty_delta() {
        let d = datum(1, &[(&[1], 3, 0), (&[2], 1, 0)]).unwrap();
        let inv = d.derive().unwrap();
        assert!(inv.delta_n_minus.is_empty());
        assert_eq!(inv.dim_n_minus, 0);
        assert_eq!(inv.n_g, inv.n_h);
    }

    #[test]
    fn rank_unequal_needs_m_g() {
        let d = RestrictedDatum::new(
            1,
            2,
            vec![MultRoot::new(w(&[1]), 1, 1)],
            HRootSystem::Other("A1".into()),
            None,
        )
        .unwrap();
        assert_eq!(d.derive(), Err(DatumError::IncompleteDatum));
        let dual = d.c_dual(2, Some(3));
        assert_eq!(dual.derive().unwrap().m_g, 3);
        assert_eq!(dual.c_dual(2, None), d);
    }
}
