//! Exact rational vectors in a Euclidean space of fixed dimension.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

/// Exact rational number used for every coordinate in the crate.
pub type Rational = BigRational;

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the fraction `n / d`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A vector with exact rational coordinates; its ambient dimension is the
/// number of coordinates. Equality is exact and includes the dimension.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight {
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight::new(v.iter().map(|&x| int(x)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Weight::new(vec![Rational::zero(); dim])
    }

    /// The standard basis vector `e_i` (0-based index).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut w = Weight::zero(dim);
        w.coords[i] = int(1);
        w
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Weight) -> Rational {
        debug_assert_eq!(self.ambient_dim(), other.ambient_dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight::new(self.coords.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight::new(self.coords.iter().map(|a| -a).collect())
    }

    /// True when the first nonzero coordinate is positive.
    pub fn is_lex_positive(&self) -> bool {
        self.coords
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_positive())
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Weight {
    /// Comma-separated coordinates, e.g. `1,0,-1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(fmt_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Error produced when a weight string cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid coordinate {token:?} at position {position}")]
pub struct WeightParseError {
    pub token: String,
    pub position: usize,
}

impl FromStr for Weight {
    type Err = WeightParseError;

    /// Parses comma-separated integers or fractions `p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut coords = Vec::new();
        for (position, token) in s.split(',').enumerate() {
            let t = token.trim();
            let bad = || WeightParseError {
                token: t.to_string(),
                position: position + 1,
            };
            let q = match t.split_once('/') {
                Some((n, d)) => {
                    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    Rational::new(n, d)
                }
                None => Rational::from_integer(t.parse().map_err(|_| bad())?),
            };
            coords.push(q);
        }
        Ok(Weight::new(coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let w: Weight = "1, -1/2,0,4/2".parse().unwrap();
        assert_eq!(w.to_string(), "1,-1/2,0,2");
        assert_eq!(w.ambient_dim(), 4);
        assert!("1,x".parse::<Weight>().is_err());
        assert!("1/0".parse::<Weight>().is_err());
    }

    #[test]
    fn equality_includes_dimension() {
        assert_ne!(Weight::zero(2), Weight::zero(3));
        assert_eq!(Weight::from_ints(&[1, 2]), "1,2".parse().unwrap());
    }

    #[test]
    fn arithmetic() {
        let a = Weight::from_ints(&[1, 2]);
        let b = Weight::from_ints(&[3, -1]);
        assert_eq!(a.dot(&b), int(1));
        assert_eq!(a.add(&b), Weight::from_ints(&[4, 1]));
        assert_eq!(a.sub(&b).neg(), Weight::from_ints(&[2, -3]));
        assert!(Weight::from_ints(&[0, 1, -5]).is_lex_positive());
        assert!(!Weight::from_ints(&[0, -1, 5]).is_lex_positive());
    }
}
