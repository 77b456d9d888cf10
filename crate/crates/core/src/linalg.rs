//! Exact linear algebra over the rationals for the small matrices that occur
//! in root-system work: rank, inversion and dependency witnesses.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Row-reduces `rows` in place and returns the pivot columns.
fn row_reduce(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of the span of `vectors`.
pub fn rank(vectors: &[Vec<BigRational>]) -> usize {
    let mut rows = vectors.to_vec();
    row_reduce(&mut rows).len()
}

/// True iff `vectors` are linearly independent (the empty family is).
pub fn is_independent(vectors: &[Vec<BigRational>]) -> bool {
    rank(vectors) == vectors.len()
}

/// Inverse of a square matrix, or `None` when it is singular.
pub fn inverse(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Coefficients expressing `v` in terms of `basis`, if `v` lies in its span.
/// `basis` must be linearly independent.
pub fn coordinates(basis: &[Vec<BigRational>], v: &[BigRational]) -> Option<Vec<BigRational>> {
    // Solve the transposed system: columns are basis vectors.
    let dim = v.len();
    let k = basis.len();
    let mut rows: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| {
            let mut row: Vec<BigRational> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut coeffs = vec![BigRational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        coeffs[c] = rows[r][k].clone();
    }
    Some(coeffs)
}

/// A minimal linearly dependent subset (a circuit) of `vectors`, returned as
/// indices in increasing order, or `None` when the family is independent.
///
/// Vectors are scanned in order; the first one lying in the span of the
/// independent prefix gives a dependency whose support, by uniqueness of
/// coordinates, is minimal.
pub fn minimal_dependent_subset(vectors: &[Vec<BigRational>]) -> Option<Vec<usize>> {
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    let mut basis_idx: Vec<usize> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if v.iter().all(Zero::is_zero) {
            return Some(vec![i]);
        }
        if let Some(c) = coordinates(&basis, v) {
            let mut support: Vec<usize> = c
                .iter()
                .zip(&basis_idx)
                .filter(|(x, _)| !x.is_zero())
                .map(|(_, &j)| j)
                .collect();
            support.push(i);
            support.sort_unstable();
            return Some(support);
        }
        basis.push(v.clone());
        basis_idx.push(i);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }

    #[test]
    fn rank_of_dependent_triple() {
        let vs = vec![q(&[1, 1]), q(&[1, -1]), q(&[1, 0])];
        assert_eq!(rank(&vs), 2);
        assert!(!is_independent(&vs));
        assert!(is_independent(&vs[..2]));
    }

    #[test]
    fn inverse_of_a2_cartan_matrix() {
        let a = vec![q(&[2, -1]), q(&[-1, 2])];
        let inv = inverse(&a).unwrap();
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(inv[0][0], &third * BigRational::from_integer(BigInt::from(2)));
        assert_eq!(inv[0][1], third);
        assert!(inverse(&[q(&[1, 2]), q(&[2, 4])]).is_none());
    }

    #[test]
    fn circuit_is_minimal() {
        let vs = vec![q(&[2, 0]), q(&[0, 2]), q(&[1, 1]), q(&[1, -1])];
        assert_eq!(minimal_dependent_subset(&vs), Some(vec![0, 1, 2]));
        let vs = vec![q(&[1, 0, 0]), q(&[0, 1, 0]), q(&[0, 2, 0])];
        assert_eq!(minimal_dependent_subset(&vs), Some(vec![1, 2]));
        assert_eq!(minimal_dependent_subset(&[q(&[1, 1]), q(&[1, -1])]), None);
    }

    #[test]
    fn coordinates_solve_in_span() {
        let basis = vec![q(&[1, 0, 0]), q(&[0, 1, 1])];
        assert_eq!(coordinates(&basis, &q(&[2, 3, 3])), Some(q(&[2, 3])));
        assert_eq!(coordinates(&basis, &q(&[0, 1, 0])), None);
    }
}
