//! Cartan types, Cartan matrices and positive root systems.
//!
//! Cartan matrices follow the convention `A[i][j] = alpha_j(h_i) = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)`
//! with Bourbaki numbering of the simple roots.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

use super::LieError;

pub const MAX_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: char,
    pub rank: usize,
}

impl FromStr for CartanType {
    type Err = LieError;

    /// Parses names such as `A2`, `g2`, `E8`.
    fn from_str(s: &str) -> Result<Self, LieError> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(|| LieError::UnsupportedType(s.to_string()))?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| LieError::UnsupportedType(s.to_string()))?;
        let ok = match family {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if !ok || rank > MAX_RANK {
            return Err(LieError::UnsupportedType(s.to_string()));
        }
        Ok(CartanType { family, rank })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl CartanType {
    /// Squared lengths of the simple roots (shortest = 1) and the edges of the Dynkin diagram.
    fn diagram(&self) -> (Vec<i64>, Vec<(usize, usize)>) {
        let n = self.rank;
        let chain = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            'A' => (vec![1; n], chain(n)),
            'B' => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                (d, chain(n))
            }
            'C' => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                (d, chain(n))
            }
            'D' => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                (vec![1; n], e)
            }
            'E' => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                (vec![1; n], e)
            }
            'F' => (vec![2, 2, 1, 1], chain(4)),
            'G' => (vec![1, 3], chain(2)),
            _ => unreachable!("validated family"),
        }
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let (d, edges) = self.diagram();
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in edges {
            // (alpha_i, alpha_j) = -max(d_i, d_j)/2 for adjacent nodes
            let ip = -d[i].max(d[j]);
            a[i][j] = ip / d[i];
            a[j][i] = ip / d[j];
        }
        a
    }
}

/// Root data derived from a Cartan matrix of finite type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Squared lengths of simple roots, scaled to coprime positive integers.
    pub lengths: Vec<i64>,
    /// Positive roots in simple-root coordinates, sorted by height (simple roots first, in order).
    pub positive: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan_matrix.len()
    }

    pub fn from_cartan_matrix(a: &[Vec<i64>]) -> Result<Self, LieError> {
        let n = a.len();
        let bad = |msg: &str| LieError::InvalidCartanMatrix(msg.to_string());
        if n == 0 || n > MAX_RANK {
            return Err(bad("rank must be between 1 and 8"));
        }
        if a.iter().any(|r| r.len() != n) {
            return Err(bad("not square"));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(bad("diagonal entries must be 2"));
            }
            for j in 0..n {
                if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                    return Err(bad("off-diagonal sign pattern"));
                }
            }
        }
        // Symmetrize: d_i a_ij = d_j a_ji.
        let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some(Ratio::from_integer(1));
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if i != j && a[i][j] != 0 {
                        let dj = d[i].unwrap() * Ratio::new(a[i][j], a[j][i]);
                        match d[j] {
                            None => {
                                d[j] = Some(dj);
                                stack.push(j);
                            }
                            Some(old) if old != dj => return Err(bad("not symmetrizable")),
                            Some(_) => {}
                        }
                    }
                }
            }
        }
        let d: Vec<Ratio<i64>> = d.into_iter().map(Option::unwrap).collect();
        let den = d.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
        let mut lengths: Vec<i64> = d.iter().map(|x| (x * den).to_integer()).collect();
        let g = lengths.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        lengths.iter_mut().for_each(|x| *x /= g);
        // Positive definiteness of the symmetrized form.
        let mut s: Vec<Vec<Ratio<i64>>> =
            (0..n).map(|i| (0..n).map(|j| Ratio::from_integer(a[i][j] * lengths[i])).collect()).collect();
        for k in 0..n {
            let piv = s[k][k];
            if piv <= Ratio::from_integer(0) {
                return Err(bad("not of finite type"));
            }
            for i in k + 1..n {
                let f = s[i][k] / piv;
                for j in k..n {
                    let v = s[k][j];
                    s[i][j] -= f * v;
                }
            }
        }
        let positive = positive_roots(a)?;
        Ok(RootSystem { cartan_matrix: a.to_vec(), lengths, positive })
    }

    /// Twice the invariant form, (r, s) * 2, in simple-root coordinates.
    pub fn form(&self, r: &[i64], s: &[i64]) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if r[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += r[i] * s[j] * self.cartan_matrix[i][j] * self.lengths[i];
            }
        }
        acc
    }

    /// <r, alpha_i^vee> = sum_j r_j A[i][j].
    pub fn pairing(&self, r: &[i64], i: usize) -> i64 {
        r.iter().zip(&self.cartan_matrix[i]).map(|(x, y)| x * y).sum()
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive.last().expect("nonempty root system")
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive.len()
    }
}

fn positive_roots(a: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, LieError> {
    let n = a.len();
    let simple: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut known: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut all = simple.clone();
    let mut layer = simple;
    while !layer.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for r in &layer {
            for i in 0..n {
                let mut up = r.clone();
                up[i] += 1;
                if known.contains(&up) || next.contains(&up) {
                    continue;
                }
                let mut p = 0;
                let mut down = r.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = r.iter().zip(&a[i]).map(|(x, y)| x * y).sum();
                if p - pairing > 0 {
                    next.push(up);
                }
            }
        }
        if all.len() + next.len() > 1000 {
            return Err(LieError::InvalidCartanMatrix("root system does not close".into()));
        }
        known.extend(next.iter().cloned());
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|x, y| {
        let hx: i64 = x.iter().sum();
        let hy: i64 = y.iter().sum();
        hx.cmp(&hy).then_with(|| y.cmp(x))
    });
    Ok(all)
}

/// Index lookup for signed roots.
#[derive(Clone, Debug)]
pub struct RootIndex {
    map: HashMap<Vec<i64>, usize>,
    pub roots: Vec<Vec<i64>>,
    pub num_positive: usize,
}

impl RootIndex {
    pub fn new(sys: &RootSystem) -> Self {
        let mut roots = sys.positive.clone();
        roots.extend(sys.positive.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let map = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        RootIndex { map, roots, num_positive: sys.positive.len() }
    }

    pub fn index(&self, r: &[i64]) -> Option<usize> {
        self.map.get(r).copied()
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.num_positive {
            i + self.num_positive
        } else {
            i - self.num_positive
        }
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive
    }

    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[i].iter().zip(&self.roots[j]).map(|(a, b)| a + b).collect();
        self.index(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        let cases = [
            ("A1", 1),
            ("A2", 3),
            ("A4", 10),
            ("B2", 4),
            ("B4", 16),
            ("C3", 9),
            ("D4", 12),
            ("D5", 20),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ];
        for (name, count) in cases {
            let t: CartanType = name.parse().unwrap();
            let sys = RootSystem::from_cartan_matrix(&t.cartan_matrix()).unwrap();
            assert_eq!(sys.positive.len(), count, "{name}");
        }
    }

    #[test]
    fn highest_roots() {
        let marks = |name: &str| {
            let t: CartanType = name.parse().unwrap();
            RootSystem::from_cartan_matrix(&t.cartan_matrix()).unwrap().highest_root().to_vec()
        };
        assert_eq!(marks("A2"), vec![1, 1]);
        assert_eq!(marks("B3"), vec![1, 2, 2]);
        assert_eq!(marks("C3"), vec![2, 2, 1]);
        assert_eq!(marks("G2"), vec![3, 2]);
        assert_eq!(marks("F4"), vec![2, 3, 4, 2]);
        assert_eq!(marks("E8"), vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!("H3".parse::<CartanType>().is_err());
        assert!("D3".parse::<CartanType>().is_err());
        assert!("A9".parse::<CartanType>().is_err());
        assert!(RootSystem::from_cartan_matrix(&[vec![2, -2], vec![-2, 2]]).is_err());
        assert!(RootSystem::from_cartan_matrix(&[vec![2, 1], vec![1, 2]]).is_err());
        assert!(RootSystem::from_cartan_matrix(&[vec![2, -1], vec![0, 2]]).is_err());
    }
}
