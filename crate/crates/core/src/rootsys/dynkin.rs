//! Weyl group orders from invariant degrees, and identification of the
//! irreducible components of a Dynkin sub-diagram.

use super::RootFamily;

/// Degrees of the basic invariants of the Weyl group of an irreducible
/// system. `BC_n` shares the Weyl group of `B_n`.
pub fn invariant_degrees(family: RootFamily, rank: usize) -> Vec<u64> {
    let n = rank as u64;
    match family {
        RootFamily::A => (2..=n + 1).collect(),
        RootFamily::B | RootFamily::C | RootFamily::BC => (1..=n).map(|i| 2 * i).collect(),
        RootFamily::D => {
            let mut d: Vec<u64> = (1..n).map(|i| 2 * i).collect();
            d.push(n);
            d
        }
        RootFamily::E => match rank {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        RootFamily::F => vec![2, 6, 8, 12],
        RootFamily::G => vec![2, 6],
    }
}

/// Order of the Weyl group as the product of the invariant degrees.
pub fn weyl_order(family: RootFamily, rank: usize) -> u64 {
    invariant_degrees(family, rank).iter().product()
}

/// Type of one connected component of a Dynkin diagram. `B` also stands
/// for `C`, since both have the same Weyl group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Component {
    pub family: RootFamily,
    pub rank: usize,
}

impl Component {
    pub fn weyl_order(self) -> u64 {
        weyl_order(self.family, self.rank)
    }
}

/// Splits the nodes `subset` of the diagram with Cartan matrix `cartan` into
/// connected components and identifies the type of each.
pub fn components(cartan: &[Vec<i64>], subset: &[usize]) -> Vec<Component> {
    let mut seen = vec![false; cartan.len()];
    let in_subset = |i: usize| subset.contains(&i);
    let mut out = Vec::new();
    for &start in subset {
        if seen[start] {
            continue;
        }
        let mut nodes = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < nodes.len() {
            let i = nodes[k];
            for j in 0..cartan.len() {
                if j != i && in_subset(j) && !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    nodes.push(j);
                }
            }
            k += 1;
        }
        out.push(identify(cartan, &nodes));
    }
    out
}

/// Order of the Weyl group generated by the simple reflections in `subset`.
pub fn parabolic_order(cartan: &[Vec<i64>], subset: &[usize]) -> u64 {
    components(cartan, subset).iter().map(|c| c.weyl_order()).product()
}

fn identify(cartan: &[Vec<i64>], nodes: &[usize]) -> Component {
    let r = nodes.len();
    let bond = |i: usize, j: usize| cartan[i][j] * cartan[j][i];
    let neighbours = |i: usize| nodes.iter().filter(|&&j| j != i && cartan[i][j] != 0).count();
    let mut max_bond = 0;
    let mut double_edge = None;
    for &i in nodes {
        for &j in nodes {
            if i < j {
                let b = bond(i, j);
                max_bond = max_bond.max(b);
                if b == 2 {
                    double_edge = Some((i, j));
                }
            }
        }
    }
    let family = match max_bond {
        3 => RootFamily::G,
        2 => {
            let (i, j) = double_edge.expect("double edge recorded");
            if r == 4 && neighbours(i) == 2 && neighbours(j) == 2 {
                RootFamily::F
            } else {
                RootFamily::B
            }
        }
        _ => match nodes.iter().find(|&&i| neighbours(i) == 3) {
            None => RootFamily::A,
            Some(&centre) => {
                let mut arms: Vec<usize> = nodes
                    .iter()
                    .filter(|&&j| j != centre && cartan[centre][j] != 0)
                    .map(|&j| arm_length(cartan, nodes, centre, j))
                    .collect();
                arms.sort_unstable();
                if arms[0] == 1 && arms[1] == 1 {
                    RootFamily::D
                } else {
                    RootFamily::E
                }
            }
        },
    };
    if r == 1 {
        return Component {
            family: RootFamily::A,
            rank: 1,
        };
    }
    Component { family, rank: r }
}

fn arm_length(cartan: &[Vec<i64>], nodes: &[usize], from: usize, first: usize) -> usize {
    let mut prev = from;
    let mut cur = first;
    let mut len = 1;
    loop {
        let next = nodes
            .iter()
            .copied()
            .find(|&j| j != prev && j != cur && cartan[cur][j] != 0);
        match next {
            Some(j) => {
                prev = cur;
                cur = j;
                len += 1;
            }
            None => return len,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_orders_from_degrees() {
        assert_eq!(weyl_order(RootFamily::A, 2), 6);
        assert_eq!(weyl_order(RootFamily::D, 4), 192);
        assert_eq!(weyl_order(RootFamily::B, 3), 48);
        assert_eq!(weyl_order(RootFamily::E, 6), 51_840);
        assert_eq!(weyl_order(RootFamily::E, 7), 2_903_040);
        assert_eq!(weyl_order(RootFamily::E, 8), 696_729_600);
        assert_eq!(weyl_order(RootFamily::F, 4), 1152);
        assert_eq!(weyl_order(RootFamily::G, 2), 12);
    }

    fn chain(n: usize) -> Vec<Vec<i64>> {
        let mut c = vec![vec![0; n]; n];
        for i in 0..n {
            c[i][i] = 2;
            if i + 1 < n {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        c
    }

    #[test]
    fn identifies_components_of_a_chain() {
        let c = chain(5);
        let comps = components(&c, &[0, 1, 3, 4]);
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|k| k.family == RootFamily::A && k.rank == 2));
        assert_eq!(parabolic_order(&c, &[0, 1, 3, 4]), 36);
        assert_eq!(parabolic_order(&c, &[]), 1);
    }

    #[test]
    fn identifies_branched_and_multiple_bonds() {
        // D4: centre node 1.
        let mut d4 = chain(4);
        d4[2][3] = 0;
        d4[3][2] = 0;
        d4[1][3] = -1;
        d4[3][1] = -1;
        assert_eq!(components(&d4, &[0, 1, 2, 3])[0].family, RootFamily::D);
        // F4: double bond in the middle.
        let mut f4 = chain(4);
        f4[1][2] = -2;
        assert_eq!(components(&f4, &[0, 1, 2, 3])[0].family, RootFamily::F);
        // B3: double bond at the end.
        let mut b3 = chain(3);
        b3[1][2] = -2;
        assert_eq!(parabolic_order(&b3, &[0, 1, 2]), 48);
        let mut g2 = chain(2);
        g2[1][0] = -3;
        assert_eq!(parabolic_order(&g2, &[0, 1]), 12);
    }
}
