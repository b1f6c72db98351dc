//! Structure constants of a Chevalley basis.
//!
//! Signs are fixed by taking N(alpha_i, xi - alpha_i) = +(p+1) on extraspecial pairs (alpha_i the
//! first simple root with xi - alpha_i a root). Every other constant follows from the standard
//! identities for a Chevalley basis with N(-r,-s) = -N(r,s):
//! three roots summing to zero give N(r,s)/(t,t) = N(s,t)/(r,r) = N(t,r)/(s,s), and four roots
//! summing to zero (no opposite pair) give the quadratic relation used in `positive_constant`.

use std::collections::HashMap;

use num_rational::Ratio;

use super::cartan_type::{RootIndex, RootSystem};
use super::LieError;

type Q = Ratio<i64>;

pub struct StructureConstants {
    index: RootIndex,
    lengths: Vec<i64>,
    positive_table: HashMap<(usize, usize), i64>,
}

impl StructureConstants {
    pub fn new(sys: &RootSystem) -> Result<Self, LieError> {
        let index = RootIndex::new(sys);
        let lengths: Vec<i64> = index.roots.iter().map(|r| sys.form(r, r)).collect();
        let mut sc = StructureConstants { index, lengths, positive_table: HashMap::new() };
        let n = sys.rank();
        let np = sc.index.num_positive;
        for xi in 0..np {
            let root = sc.index.roots[xi].clone();
            if root.iter().sum::<i64>() < 2 {
                continue;
            }
            // extraspecial pair
            let (r1, s1) = (0..n)
                .find_map(|i| {
                    let mut s = root.clone();
                    s[i] -= 1;
                    sc.index.index(&s).filter(|&k| sc.index.is_positive(k)).map(|k| (i, k))
                })
                .ok_or_else(|| LieError::InvalidCartanMatrix("root without simple predecessor".into()))?;
            let mut p = 0;
            let mut down = sc.index.roots[s1].clone();
            loop {
                down[r1] -= 1;
                if sc.index.index(&down).is_some() {
                    p += 1;
                } else {
                    break;
                }
            }
            sc.positive_table.insert((r1, s1), p + 1);
            sc.positive_table.insert((s1, r1), -(p + 1));
            for r in 0..np {
                if r == r1 || r == s1 {
                    continue;
                }
                let Some(s) = sc.index.index(&sub(&root, &sc.index.roots[r])) else { continue };
                if !sc.index.is_positive(s) || r > s {
                    continue;
                }
                let v = sc.positive_constant(xi, r, s, r1, s1)?;
                sc.positive_table.insert((r, s), v);
                sc.positive_table.insert((s, r), -v);
            }
        }
        Ok(sc)
    }

    fn len(&self, i: usize) -> Q {
        Q::from_integer(self.lengths[i])
    }

    fn positive_constant(&self, xi: usize, r: usize, s: usize, r1: usize, s1: usize) -> Result<i64, LieError> {
        let neg = |i| self.index.negate(i);
        let mut bracket = Q::from_integer(0);
        if let Some(u) = self.index.sum(s, neg(r1)) {
            bracket += self.constant(s, neg(r1))? * self.constant(r, neg(s1))? / self.len(u);
        }
        if let Some(u) = self.index.sum(r, neg(r1)) {
            bracket += self.constant(neg(r1), r)? * self.constant(s, neg(s1))? / self.len(u);
        }
        let n1 = Q::from_integer(self.positive_table[&(r1, s1)]);
        let v = self.len(xi) / n1 * bracket;
        if !v.is_integer() {
            return Err(LieError::InvalidCartanMatrix("non-integral structure constant".into()));
        }
        Ok(v.to_integer())
    }

    /// N(a, b) for root indices a, b with a + b a root.
    pub fn constant(&self, a: usize, b: usize) -> Result<Q, LieError> {
        let ix = &self.index;
        let c = ix.sum(a, b).ok_or_else(|| LieError::InvalidCartanMatrix("constant requested for non-root sum".into()))?;
        let (pa, pb) = (ix.is_positive(a), ix.is_positive(b));
        match (pa, pb) {
            (true, true) => self
                .positive_table
                .get(&(a, b))
                .map(|&v| Q::from_integer(v))
                .ok_or_else(|| LieError::InvalidCartanMatrix("missing structure constant".into())),
            (false, false) => Ok(-self.constant(ix.negate(a), ix.negate(b))?),
            (false, true) => Ok(-self.constant(b, a)?),
            (true, false) => {
                if ix.is_positive(c) {
                    // N(a,b) = (c,c)/(a,a) * N(b,-c) = -(c,c)/(a,a) * N(-b, c)
                    Ok(-self.len(c) / self.len(a) * self.constant(ix.negate(b), c)?)
                } else {
                    // N(a,b) = (c,c)/(b,b) * N(-c, a)
                    Ok(self.len(c) / self.len(b) * self.constant(ix.negate(c), a)?)
                }
            }
        }
    }

    pub fn index(&self) -> &RootIndex {
        &self.index
    }
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}
