//! Irreducible root systems with exact coordinates, Weyl-group orbit sizes
//! and the minimal nonzero orbit size `c(Δ)`.
//!
//! Realizations: `A_n` in the trace-zero hyperplane of `R^{n+1}`; `B_n`,
//! `C_n`, `D_n` and `BC_n` in `R^n` with simple roots `e_i - e_{i+1}` and
//! last simple root `e_n`, `2e_n`, `e_{n-1}+e_n`, `e_n` respectively; `E_6`,
//! `E_7`, `E_8` inside `R^8`, `F_4` in `R^4` and `G_2` in the plane
//! `x_1+x_2+x_3 = 0` of `R^3`, all in the standard Bourbaki coordinates.

pub mod dynkin;
mod weight;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{Signed, Zero};

use crate::linalg;
pub use weight::{frac, int, Rational, Weight, WeightParseError};

/// Errors raised by root-system construction and orbit queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSysError {
    #[error("invalid root system {0}")]
    InvalidSpec(String),
    #[error("weight has dimension {found}, ambient space has dimension {expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("Weyl group order check failed for {0}")]
    WeylOrderMismatch(String),
}

/// Cartan–Killing family of an irreducible (possibly non-reduced) system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl RootFamily {
    pub fn is_exceptional(self) -> bool {
        matches!(self, RootFamily::E | RootFamily::F | RootFamily::G)
    }

    fn letter(self) -> &'static str {
        match self {
            RootFamily::A => "A",
            RootFamily::B => "B",
            RootFamily::C => "C",
            RootFamily::D => "D",
            RootFamily::E => "E",
            RootFamily::F => "F",
            RootFamily::G => "G",
            RootFamily::BC => "BC",
        }
    }
}

/// A family letter together with a rank inside the admissible bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemSpec {
    family: RootFamily,
    rank: usize,
}

impl RootSystemSpec {
    /// Validates the rank bounds: `A` n≥1, `B` n≥2, `C` n≥3, `D` n≥4,
    /// `E` n∈{6,7,8}, `F` n=4, `G` n=2, `BC` n≥1.
    pub fn new(family: RootFamily, rank: usize) -> Result<Self, RootSysError> {
        let ok = match family {
            RootFamily::A | RootFamily::BC => rank >= 1,
            RootFamily::B => rank >= 2,
            RootFamily::C => rank >= 3,
            RootFamily::D => rank >= 4,
            RootFamily::E => (6..=8).contains(&rank),
            RootFamily::F => rank == 4,
            RootFamily::G => rank == 2,
        };
        if ok {
            Ok(RootSystemSpec { family, rank })
        } else {
            Err(RootSysError::InvalidSpec(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn family(&self) -> RootFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the coordinate space the system is realized in.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            RootFamily::A => self.rank + 1,
            RootFamily::E => 8,
            RootFamily::G => 3,
            _ => self.rank,
        }
    }

    /// Every irreducible system of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<RootSystemSpec> {
        let families = [
            RootFamily::A,
            RootFamily::B,
            RootFamily::C,
            RootFamily::D,
            RootFamily::E,
            RootFamily::F,
            RootFamily::G,
            RootFamily::BC,
        ];
        let mut out = Vec::new();
        for f in families {
            for n in 1..=max_rank {
                if let Ok(s) = RootSystemSpec::new(f, n) {
                    out.push(s);
                }
            }
        }
        out
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = RootSysError;

    /// Parses names such as `A3`, `E8`, `BC2` (case-insensitive letters).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let split = t.find(|c: char| c.is_ascii_digit()).unwrap_or(t.len());
        let (letters, digits) = t.split_at(split);
        let family = match letters.to_ascii_uppercase().as_str() {
            "A" => RootFamily::A,
            "B" => RootFamily::B,
            "C" => RootFamily::C,
            "D" => RootFamily::D,
            "E" => RootFamily::E,
            "F" => RootFamily::F,
            "G" => RootFamily::G,
            "BC" => RootFamily::BC,
            _ => return Err(RootSysError::InvalidSpec(t.to_string())),
        };
        let rank = digits.parse().map_err(|_| RootSysError::InvalidSpec(t.to_string()))?;
        RootSystemSpec::new(family, rank)
    }
}

/// An irreducible root system with its simple roots, fundamental weights and
/// Weyl group order. Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: RootSystemSpec,
    roots: BTreeSet<Weight>,
    simple_roots: Vec<Weight>,
    positive_roots: BTreeSet<Weight>,
    fundamental_weights: Vec<Weight>,
    cartan: Vec<Vec<i64>>,
    weyl_order: u64,
}

fn e(dim: usize, i: usize) -> Weight {
    Weight::unit(dim, i)
}

fn simple_roots(spec: RootSystemSpec) -> Vec<Weight> {
    let n = spec.rank;
    let d = spec.ambient_dim();
    let chain = |k: usize| -> Vec<Weight> { (0..k).map(|i| e(d, i).sub(&e(d, i + 1))).collect() };
    match spec.family {
        RootFamily::A => chain(n),
        RootFamily::B | RootFamily::BC => {
            let mut s = chain(n - 1);
            s.push(e(d, n - 1));
            s
        }
        RootFamily::C => {
            let mut s = chain(n - 1);
            s.push(e(d, n - 1).scale(&int(2)));
            s
        }
        RootFamily::D => {
            let mut s = chain(n - 1);
            s.push(e(d, n - 2).add(&e(d, n - 1)));
            s
        }
        RootFamily::E => {
            let h = frac(1, 2);
            let mut a1 = vec![-h.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut s = vec![Weight::new(a1), e(8, 0).add(&e(8, 1)), e(8, 1).sub(&e(8, 0))];
            for i in 2..7 {
                s.push(e(8, i).sub(&e(8, i - 1)));
            }
            s.truncate(n);
            s
        }
        RootFamily::F => {
            let h = frac(1, 2);
            vec![
                e(4, 1).sub(&e(4, 2)),
                e(4, 2).sub(&e(4, 3)),
                e(4, 3),
                Weight::new(vec![h.clone(), -h.clone(), -h.clone(), -h]),
            ]
        }
        RootFamily::G => vec![Weight::from_ints(&[1, -1, 0]), Weight::from_ints(&[-2, 1, 1])],
    }
}

/// `⟨λ, α∨⟩ = 2⟨λ, α⟩ / ⟨α, α⟩`.
pub fn coroot_pairing(lambda: &Weight, alpha: &Weight) -> Rational {
    int(2) * lambda.dot(alpha) / alpha.dot(alpha)
}

/// Reflection of `lambda` in the hyperplane orthogonal to `alpha`.
pub fn reflect(lambda: &Weight, alpha: &Weight) -> Weight {
    lambda.sub(&alpha.scale(&coroot_pairing(lambda, alpha)))
}

fn closed_root_count(spec: RootSystemSpec) -> usize {
    let n = spec.rank;
    match spec.family {
        RootFamily::A => n * (n + 1),
        RootFamily::B | RootFamily::C => 2 * n * n,
        RootFamily::D => 2 * n * (n - 1),
        RootFamily::BC => 2 * n * (n + 1),
        RootFamily::E => [72, 126, 240][n - 6],
        RootFamily::F => 48,
        RootFamily::G => 12,
    }
}

impl RootSystem {
    /// Constructs the system and checks its structural invariants, including
    /// the Weyl order: by the orbit of `ρ` for rank ≤ 4, and by
    /// orbit-stabilizer products for two fundamental weights above that.
    pub fn build(spec: RootSystemSpec) -> Result<RootSystem, RootSysError> {
        let simple = simple_roots(spec);
        let n = simple.len();
        let cartan: Vec<Vec<i64>> = simple
            .iter()
            .map(|a| {
                simple
                    .iter()
                    .map(|b| {
                        let c = coroot_pairing(a, b);
                        debug_assert!(c.is_integer());
                        i64::try_from(c.to_integer()).expect("small Cartan entry")
                    })
                    .collect()
            })
            .collect();
        // Roots are the Weyl orbit of the simple roots (plus 2e_n for BC).
        let mut seeds = simple.clone();
        if spec.family == RootFamily::BC {
            seeds.push(simple[n - 1].scale(&int(2)));
        }
        let mut roots = BTreeSet::new();
        for s in &seeds {
            roots.extend(orbit_points(&simple, s));
        }
        if roots.len() != closed_root_count(spec) {
            return Err(RootSysError::InvalidSpec(format!(
                "{spec}: generated {} roots",
                roots.len()
            )));
        }
        let cartan_q: Vec<Vec<Rational>> = cartan.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let inv = linalg::inverse(&cartan_q).expect("Cartan matrix is invertible");
        let fundamental_weights: Vec<Weight> = (0..n)
            .map(|i| {
                (0..n).fold(Weight::zero(spec.ambient_dim()), |acc, k| {
                    acc.add(&simple[k].scale(&inv[i][k]))
                })
            })
            .collect();
        let rho = fundamental_weights
            .iter()
            .fold(Weight::zero(spec.ambient_dim()), |acc, w| acc.add(w));
        let positive_roots: BTreeSet<Weight> = roots.iter().filter(|r| r.dot(&rho).is_positive()).cloned().collect();
        let rs = RootSystem {
            spec,
            roots,
            simple_roots: simple,
            positive_roots,
            fundamental_weights,
            cartan,
            weyl_order: dynkin::weyl_order(spec.family, spec.rank),
        };
        rs.check_weyl_order()?;
        Ok(rs)
    }

    fn check_weyl_order(&self) -> Result<(), RootSysError> {
        if self.rank() <= 4 {
            if self.orbit_bfs(&self.rho()).len() as u64 != self.weyl_order {
                return Err(RootSysError::WeylOrderMismatch(self.spec.to_string()));
            }
            return Ok(());
        }
        // Two fundamental weights with the smallest orbits.
        let mut idx: Vec<usize> = (0..self.rank()).collect();
        idx.sort_by_key(|&i| self.weyl_order / self.levi_order(i));
        for &i in idx.iter().take(2) {
            let orbit = self.orbit_bfs(&self.fundamental_weights[i]).len() as u64;
            if orbit * self.levi_order(i) != self.weyl_order {
                return Err(RootSysError::WeylOrderMismatch(self.spec.to_string()));
            }
        }
        Ok(())
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.spec.ambient_dim()
    }

    pub fn roots(&self) -> &BTreeSet<Weight> {
        &self.roots
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &BTreeSet<Weight> {
        &self.positive_roots
    }

    /// Fundamental weights `ω_1, …, ω_n` (stored 0-based).
    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    /// `ρ`, the sum of the fundamental weights.
    pub fn rho(&self) -> Weight {
        self.fundamental_weights
            .iter()
            .fold(Weight::zero(self.ambient_dim()), |acc, w| acc.add(w))
    }

    fn check_dim(&self, lambda: &Weight) -> Result<(), RootSysError> {
        if lambda.ambient_dim() != self.ambient_dim() {
            return Err(RootSysError::AmbientMismatch {
                expected: self.ambient_dim(),
                found: lambda.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Orthogonal projection onto the span of the roots; for `A_n` this is
    /// the projection to the trace-zero hyperplane.
    pub fn project(&self, lambda: &Weight) -> Result<Weight, RootSysError> {
        self.check_dim(lambda)?;
        Ok(self
            .simple_roots
            .iter()
            .zip(&self.fundamental_weights)
            .fold(Weight::zero(self.ambient_dim()), |acc, (a, w)| {
                acc.add(&w.scale(&coroot_pairing(lambda, a)))
            }))
    }

    /// Coefficients of `lambda` in the basis of simple roots, if it lies in
    /// their span.
    pub fn simple_root_coordinates(&self, lambda: &Weight) -> Option<Vec<Rational>> {
        let basis: Vec<Vec<Rational>> = self.simple_roots.iter().map(|w| w.coords().to_vec()).collect();
        linalg::coordinates(&basis, lambda.coords())
    }

    /// The dominant element of `W·λ`: repeatedly reflect in the simple root
    /// with the most negative pairing `⟨λ, α_i∨⟩`, lowest index on ties.
    pub fn dominant(&self, lambda: &Weight) -> Result<Weight, RootSysError> {
        self.check_dim(lambda)?;
        let mut mu = lambda.clone();
        loop {
            let pairings: Vec<Rational> = self.simple_roots.iter().map(|a| coroot_pairing(&mu, a)).collect();
            let mut worst: Option<usize> = None;
            for (i, c) in pairings.iter().enumerate() {
                if c.is_negative() && worst.is_none_or(|w| *c < pairings[w]) {
                    worst = Some(i);
                }
            }
            match worst {
                Some(i) => mu = reflect(&mu, &self.simple_roots[i]),
                None => return Ok(mu),
            }
        }
    }

    /// Simple-root indices (0-based) orthogonal to a dominant weight; they
    /// generate its stabilizer in `W`.
    fn stabilizer_nodes(&self, dominant: &Weight) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| coroot_pairing(dominant, &self.simple_roots[i]).is_zero())
            .collect()
    }

    /// Order of the Weyl group of the Levi subsystem obtained by deleting the
    /// simple root `α_i` (0-based `i`), i.e. the stabilizer of `ω_i`.
    pub fn levi_order(&self, i: usize) -> u64 {
        let rest: Vec<usize> = (0..self.rank()).filter(|&j| j != i).collect();
        dynkin::parabolic_order(&self.cartan, &rest)
    }

    /// Order of the stabilizer `W_λ`.
    pub fn stabilizer_order(&self, lambda: &Weight) -> Result<u64, RootSysError> {
        let mu = self.dominant(lambda)?;
        Ok(dynkin::parabolic_order(&self.cartan, &self.stabilizer_nodes(&mu)))
    }

    /// `#(W·λ) = #W / #W_λ`, computed through dominant reduction.
    pub fn orbit_size(&self, lambda: &Weight) -> Result<u64, RootSysError> {
        Ok(self.weyl_order / self.stabilizer_order(lambda)?)
    }

    /// The orbit `W·λ` by breadth-first search over simple reflections.
    pub fn orbit_bfs(&self, lambda: &Weight) -> HashSet<Weight> {
        orbit_points(&self.simple_roots, lambda)
    }

    /// `c(Δ)`: the least size of a nonzero orbit, `#W / max_i #W(l_i)`.
    pub fn min_orbit_size(&self) -> u64 {
        let max_levi = (0..self.rank()).map(|i| self.levi_order(i)).max().unwrap_or(1);
        self.weyl_order / max_levi
    }

    /// Fundamental-weight indices (1-based) whose orbit has at most
    /// `2·rank` elements. Empty for the exceptional families.
    pub fn minimal_orbit_rays(&self) -> MinimalRays {
        let n = self.rank();
        if self.spec.family.is_exceptional() {
            return MinimalRays {
                indices: BTreeSet::new(),
                coincidence: false,
            };
        }
        let indices: BTreeSet<usize> = (0..n)
            .filter(|&i| self.weyl_order / self.levi_order(i) <= 2 * n as u64)
            .map(|i| i + 1)
            .collect();
        let generic: BTreeSet<usize> = match self.spec.family {
            RootFamily::A => [1, n].into_iter().collect(),
            _ => [1].into_iter().collect(),
        };
        let coincidence = indices != generic;
        MinimalRays { indices, coincidence }
    }
}

/// Result of [`RootSystem::minimal_orbit_rays`]. `coincidence` is set when
/// more rays qualify than the generic answer (`{1, n}` for `A_n`, `{1}`
/// otherwise); this happens for `A_3`, `B_2` and `D_4`, where low-rank
/// isomorphisms or triality give extra orbits of size `2·rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalRays {
    pub indices: BTreeSet<usize>,
    pub coincidence: bool,
}

fn orbit_points(simple: &[Weight], start: &Weight) -> HashSet<Weight> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(w) = queue.pop_front() {
        for a in simple {
            let r = reflect(&w, a);
            if !seen.contains(&r) {
                seen.insert(r.clone());
                queue.push_back(r);
            }
        }
    }
    seen
}

/// Shared, lazily built root systems; construction of the large exceptional
/// systems runs their self-checks once per process.
pub fn cached(spec: RootSystemSpec) -> Result<Arc<RootSystem>, RootSysError> {
    type Cache = Mutex<Vec<(RootSystemSpec, Arc<RootSystem>)>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    if let Some((_, rs)) = cache.lock().expect("cache lock").iter().find(|(s, _)| *s == spec) {
        return Ok(rs.clone());
    }
    let rs = Arc::new(RootSystem::build(spec)?);
    cache.lock().expect("cache lock").push((spec, rs.clone()));
    Ok(rs)
}

/// Builds a system from its name, e.g. `"E8"`.
pub fn build(spec: RootSystemSpec) -> Result<RootSystem, RootSysError> {
    RootSystem::build(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn rank_bounds() {
        assert!(RootSystemSpec::new(RootFamily::C, 2).is_err());
        assert!(RootSystemSpec::new(RootFamily::D, 3).is_err());
        assert!(RootSystemSpec::new(RootFamily::E, 9).is_err());
        assert!(RootSystemSpec::new(RootFamily::BC, 1).is_ok());
        assert!("Q3".parse::<RootSystemSpec>().is_err());
        assert_eq!("bc2".parse::<RootSystemSpec>().unwrap().to_string(), "BC2");
    }

    #[test]
    fn small_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.roots().len(), 6);
        assert_eq!(a2.weyl_order(), 6);
        let g2 = rs("G2");
        assert_eq!(g2.roots().len(), 12);
        assert_eq!(g2.weyl_order(), 12);
        let d4 = rs("D4");
        assert_eq!(d4.roots().len(), 24);
        assert_eq!(d4.weyl_order(), 192);
        assert_eq!(rs("BC3").roots().len(), 24);
    }

    #[test]
    fn root_set_structure() {
        for name in ["A3", "B3", "C3", "D5", "BC2", "G2", "F4", "E6"] {
            let r = rs(name);
            let pos = r.positive_roots();
            assert_eq!(2 * pos.len(), r.roots().len(), "{name}");
            for a in pos {
                assert!(!pos.contains(&a.neg()));
                let c = r.simple_root_coordinates(a).unwrap();
                assert!(c.iter().all(|x| x.is_integer() && !x.is_negative()), "{name} {a}");
            }
            for (i, w) in r.fundamental_weights().iter().enumerate() {
                for (j, a) in r.simple_roots().iter().enumerate() {
                    let expect = if i == j { int(1) } else { int(0) };
                    assert_eq!(coroot_pairing(w, a), expect);
                }
            }
            for a in r.roots() {
                for s in r.simple_roots() {
                    assert!(r.roots().contains(&reflect(a, s)));
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let b2 = rs("B2");
        assert_eq!(b2.orbit_size(&Weight::from_ints(&[1, 0])).unwrap(), 4);
        assert_eq!(b2.orbit_size(&Weight::zero(2)).unwrap(), 1);
        assert!(matches!(
            b2.orbit_size(&Weight::zero(3)),
            Err(RootSysError::AmbientMismatch { expected: 2, found: 3 })
        ));
        let a3 = rs("A3");
        let e1 = Weight::from_ints(&[1, 0, 0, 0]);
        assert_eq!(a3.orbit_size(&e1).unwrap(), 4);
        assert_eq!(a3.orbit_bfs(&a3.project(&e1).unwrap()).len(), 4);
        assert_eq!(a3.orbit_size(&Weight::from_ints(&[1, 0, -1, 0])).unwrap(), 12);
    }

    #[test]
    fn e8_highest_root_orbit() {
        let e8 = rs("E8");
        let highest = e8
            .positive_roots()
            .iter()
            .max_by_key(|r| r.dot(&e8.rho()))
            .unwrap()
            .clone();
        assert_eq!(e8.orbit_size(&highest).unwrap(), 240);
        assert_eq!(e8.min_orbit_size(), 240);
    }

    #[test]
    fn min_orbit_examples() {
        assert_eq!(rs("A3").min_orbit_size(), 4);
        assert_eq!(rs("F4").min_orbit_size(), 24);
        assert_eq!(rs("C5").min_orbit_size(), 10);
    }

    #[test]
    fn minimal_rays() {
        let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(rs("A4").minimal_orbit_rays().indices, set(&[1, 4]));
        assert_eq!(rs("B3").minimal_orbit_rays().indices, set(&[1]));
        assert!(rs("E6").minimal_orbit_rays().indices.is_empty());
        let d4 = rs("D4").minimal_orbit_rays();
        assert!(d4.indices.contains(&1));
        assert_eq!(d4.indices, set(&[1, 3, 4]));
        assert!(d4.coincidence);
        assert!(!rs("D5").minimal_orbit_rays().coincidence);
    }
}
