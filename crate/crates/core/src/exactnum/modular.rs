//! Reduction of cyclotomic scalars and matrices modulo a large prime p = 1 mod N.

use super::roots::{bigint_mod, invmod, mulmod, primes_one_mod, primitive_root_of_unity};
use super::{CycloField, CycloScalar, ExactMatrix};

/// The ring map Z[w, 1/d] -> F_p sending w to a fixed primitive N-th root of unity mod p.
#[derive(Clone, Debug)]
pub struct ModularReduction {
    p: u64,
    powers: Vec<u64>,
}

impl ModularReduction {
    pub fn new(field: &'static CycloField) -> Self {
        let n = field.order() as u64;
        let p = primes_one_mod(n, 1)[0];
        let zeta = primitive_root_of_unity(n, p);
        let mut powers = Vec::with_capacity(field.degree());
        let mut acc = 1u64;
        for _ in 0..field.degree() {
            powers.push(acc);
            acc = mulmod(acc, zeta, p);
        }
        ModularReduction { p, powers }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// None when a denominator is divisible by p.
    pub fn reduce(&self, x: &CycloScalar) -> Option<u64> {
        let mut acc = 0u64;
        for (c, &pw) in x.coeffs().iter().zip(&self.powers) {
            let den = bigint_mod(c.denom(), self.p);
            if den == 0 {
                return None;
            }
            let v = mulmod(bigint_mod(c.numer(), self.p), invmod(den, self.p), self.p);
            acc = (acc + mulmod(v, pw, self.p)) % self.p;
        }
        Some(acc)
    }

    /// Row-major reduction of a matrix.
    pub fn reduce_matrix(&self, m: &ExactMatrix) -> Option<Vec<u64>> {
        m.entries().iter().map(|x| self.reduce(x)).collect()
    }

    /// Product of two row-major n x n matrices mod p.
    pub fn mul(&self, a: &[u64], b: &[u64], n: usize) -> Vec<u64> {
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + mulmod(x, b[k * n + j], self.p)) % self.p;
                }
            }
        }
        out
    }
}

impl ModularReduction {
    /// Inverse of a row-major n x n matrix mod p, None if singular.
    pub fn inverse(&self, a: &[u64], n: usize) -> Option<Vec<u64>> {
        let p = self.p;
        let mut m: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row = a[i * n..(i + 1) * n].to_vec();
                row.extend((0..n).map(|j| u64::from(i == j)));
                row
            })
            .collect();
        for c in 0..n {
            let piv = (c..n).find(|&r| m[r][c] != 0)?;
            m.swap(c, piv);
            let inv = invmod(m[c][c], p);
            for v in m[c].iter_mut() {
                *v = mulmod(*v, inv, p);
            }
            let prow = m[c].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != c && row[c] != 0 {
                    let f = row[c];
                    for (x, y) in row.iter_mut().zip(&prow) {
                        *x = (*x + p - mulmod(f, *y, p)) % p;
                    }
                }
            }
        }
        Some(m.into_iter().flat_map(|r| r[n..].to_vec()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_a_ring_map() {
        let f = CycloField::get(3);
        let r = ModularReduction::new(f);
        let a = &f.omega_pow(1) + &f.frac(1, 2);
        let b = &f.omega_pow(2) - &f.int(3);
        let p = r.modulus();
        assert_eq!(r.reduce(&(&a * &b)).unwrap(), mulmod(r.reduce(&a).unwrap(), r.reduce(&b).unwrap(), p));
        assert_eq!(r.reduce(&(&a + &b)).unwrap(), (r.reduce(&a).unwrap() + r.reduce(&b).unwrap()) % p);
        // 1 + w + w^2 = 0
        assert_eq!(r.reduce(&(&(&f.one() + &f.omega_pow(1)) + &f.omega_pow(2))).unwrap(), 0);
    }
}
