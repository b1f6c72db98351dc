//! Finite groups with an involutive twisting automorphism.

use std::collections::{HashMap, VecDeque};

use crate::weyl::MatrixGroup;

use super::GaloisError;

/// Largest Cayley table accepted; associativity is checked on all triples.
pub const TABLE_CAP: usize = 512;

#[derive(Clone, Debug)]
enum Law {
    Table(Vec<Vec<usize>>),
    Matrices(MatrixGroup),
}

/// A finite group A with an involutive automorphism (the twist).
#[derive(Clone, Debug)]
pub struct GammaGroup {
    law: Law,
    identity: usize,
    inverses: Vec<usize>,
    generators: Vec<usize>,
    twist: Vec<usize>,
}

impl GammaGroup {
    /// Group from a multiplication table, `table[a][b] = a * b`.
    pub fn from_table(table: Vec<Vec<usize>>, twist: Option<Vec<usize>>) -> Result<Self, GaloisError> {
        let n = table.len();
        if n == 0 {
            return Err(GaloisError::Table("empty table".into()));
        }
        if n > TABLE_CAP {
            return Err(GaloisError::Table(format!("{n} elements; tables are limited to {TABLE_CAP}")));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GaloisError::Table(format!("row {a} has {} entries, expected {n}", row.len())));
            }
            if !is_permutation(row) {
                return Err(GaloisError::Table(format!("row {a} is not a permutation of 0..{n}")));
            }
        }
        for b in 0..n {
            let col: Vec<usize> = table.iter().map(|r| r[b]).collect();
            if !is_permutation(&col) {
                return Err(GaloisError::Table(format!("column {b} is not a permutation of 0..{n}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| GaloisError::Table("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GaloisError::Table(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let inverses = (0..n).map(|a| (0..n).find(|&b| table[a][b] == identity).expect("Latin square")).collect();
        let mut group = GammaGroup { law: Law::Table(table), identity, inverses, generators: Vec::new(), twist: (0..n).collect() };
        group.generators = group.greedy_generators();
        match twist {
            Some(t) => group.with_twist(t),
            None => Ok(group),
        }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1, false).expect("trivial group")
    }

    /// Z/n, with the twist x -> -x when `inversion` is set.
    pub fn cyclic(n: usize, inversion: bool) -> Result<Self, GaloisError> {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let twist = inversion.then(|| (0..n).map(|a| (n - a) % n).collect());
        Self::from_table(table, twist)
    }

    /// The group generated by permutations of 0..k, elements in lexicographic order.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Result<Self, GaloisError> {
        let k = generators.first().map_or(0, Vec::len);
        for (i, g) in generators.iter().enumerate() {
            if g.len() != k || !is_permutation(g) {
                return Err(GaloisError::Table(format!("generator {i} is not a permutation of 0..{k}")));
            }
        }
        let id: Vec<usize> = (0..k).collect();
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::from([(id.clone(), ())]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let q: Vec<usize> = g.iter().map(|&x| p[x]).collect();
                if seen.len() > TABLE_CAP {
                    return Err(GaloisError::Table(format!("more than {TABLE_CAP} elements")));
                }
                if seen.insert(q.clone(), ()).is_none() {
                    queue.push_back(q);
                }
            }
        }
        let mut elements: Vec<Vec<usize>> = seen.into_keys().collect();
        elements.sort();
        let index: HashMap<&Vec<usize>, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&b.iter().map(|&x| a[x]).collect::<Vec<usize>>()]).collect())
            .collect();
        Self::from_table(table, None)
    }

    /// The symmetric group on k letters with trivial twist.
    pub fn symmetric(k: usize) -> Result<Self, GaloisError> {
        if k <= 1 {
            return Ok(Self::trivial());
        }
        let swap: Vec<usize> = (0..k).map(|i| if i < 2 { 1 - i } else { i }).collect();
        let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
        Self::from_permutations(&[swap, cycle])
    }

    /// A matrix group with the given twist, as a permutation of element indices.
    pub fn from_matrix_group(group: MatrixGroup, twist: Vec<usize>) -> Result<Self, GaloisError> {
        let n = group.order();
        let inverses = (0..n).map(|i| group.inverse(i)).collect();
        let generators = group.generators().iter().map(|g| group.index_of(g).expect("generator")).collect();
        let out = GammaGroup { law: Law::Matrices(group), identity: 0, inverses, generators, twist: (0..n).collect() };
        out.with_twist(twist)
    }

    /// Replaces the twist after checking it is an involutive automorphism.
    pub fn with_twist(mut self, twist: Vec<usize>) -> Result<Self, GaloisError> {
        let n = self.order();
        if twist.len() != n || !is_permutation(&twist) {
            return Err(GaloisError::TwistNotAutomorphism("not a permutation of the elements".into()));
        }
        if let Some(a) = (0..n).find(|&a| twist[twist[a]] != a) {
            return Err(GaloisError::TwistNotInvolution(a));
        }
        // a homomorphism on (all elements) x (generators) is a homomorphism
        for a in 0..n {
            for &g in &self.generators {
                if twist[self.mul(a, g)] != self.mul(twist[a], twist[g]) {
                    return Err(GaloisError::TwistNotAutomorphism(format!("fails on ({a}, {g})")));
                }
            }
        }
        self.twist = twist;
        Ok(self)
    }

    /// The twist x -> c x c^-1, which must be involutive.
    pub fn conjugation_twist(self, c: usize) -> Result<Self, GaloisError> {
        if c >= self.order() {
            return Err(GaloisError::TwistNotAutomorphism(format!("element {c} out of range")));
        }
        let ci = self.inv(c);
        let twist = (0..self.order()).map(|x| self.mul(self.mul(c, x), ci)).collect();
        self.with_twist(twist)
    }

    pub fn order(&self) -> usize {
        self.inverses.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn twist(&self, a: usize) -> usize {
        self.twist[a]
    }

    pub fn twist_map(&self) -> &[usize] {
        &self.twist
    }

    pub fn is_twist_trivial(&self) -> bool {
        self.twist.iter().enumerate().all(|(i, &t)| i == t)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.law {
            Law::Table(t) => t[a][b],
            Law::Matrices(g) => g.product(a, b),
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn matrices(&self) -> Option<&MatrixGroup> {
        match &self.law {
            Law::Matrices(g) => Some(g),
            Law::Table(_) => None,
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Closure of `seeds` under multiplication, in BFS order from the identity.
    pub fn generated_by(&self, seeds: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[self.identity] = true;
        let mut out = vec![self.identity];
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for &s in seeds {
                let b = self.mul(a, s);
                if !inside[b] {
                    inside[b] = true;
                    out.push(b);
                    queue.push_back(b);
                }
            }
        }
        out
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order()];
        inside[self.identity] = true;
        for a in 0..self.order() {
            if !inside[a] {
                gens.push(a);
                for b in self.generated_by(&gens) {
                    inside[b] = true;
                }
            }
        }
        gens
    }

    /// The twist-stable subgroup on `indices`, with the embedding of its elements into self.
    pub fn subgroup(&self, indices: &[usize]) -> Result<(GammaGroup, Vec<usize>), GaloisError> {
        let mut members: Vec<usize> = indices.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&a| a >= self.order()) {
            return Err(GaloisError::NotSubgroup("index out of range".into()));
        }
        let position: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let mut sub_twist = Vec::with_capacity(members.len());
        for &a in &members {
            let t = position.get(&self.twist[a]).ok_or(GaloisError::NotTwistStable(a))?;
            sub_twist.push(*t);
        }
        let sub = match &self.law {
            Law::Table(_) => {
                let mut table = Vec::with_capacity(members.len());
                for &a in &members {
                    let mut row = Vec::with_capacity(members.len());
                    for &b in &members {
                        let p = position.get(&self.mul(a, b)).ok_or_else(|| GaloisError::NotSubgroup(format!("{a} * {b} leaves the subset")))?;
                        row.push(*p);
                    }
                    table.push(row);
                }
                GammaGroup::from_table(table, Some(sub_twist))?
            }
            Law::Matrices(g) => {
                let sub = g.subgroup(&members).map_err(|e| GaloisError::NotSubgroup(e.to_string()))?;
                if sub.order() != members.len() {
                    return Err(GaloisError::NotSubgroup("subset is not closed".into()));
                }
                let twist: Vec<usize> = (0..sub.order())
                    .map(|i| {
                        let outer = g.index_of(sub.element(i)).expect("element of the parent");
                        sub.index_of(g.element(self.twist[outer])).expect("twist-stable")
                    })
                    .collect();
                let embedding: Vec<usize> = (0..sub.order()).map(|i| g.index_of(sub.element(i)).expect("element")).collect();
                return Ok((GammaGroup::from_matrix_group(sub, twist)?, embedding));
            }
        };
        Ok((sub, members))
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}
