//! Roots in Q(w_n) of polynomials over Q(w_n).
//!
//! After scaling to a monic polynomial with coefficients in Z[w], every root in the field is an
//! algebraic integer of Z[w]. For a prime p = 1 mod n the ring Z[w]/p splits into phi(n) copies
//! of F_p, one per embedding w -> zeta^u. Roots are found mod p in each embedding, candidate
//! tuples are lifted back to small integer coordinates, and each candidate is verified exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CycloScalar, ExactError, Poly, Rational};

/// Candidate tuples examined before giving up.
const COMBINATION_CAP: u128 = 4_000_000;
const PRIME_ATTEMPTS: usize = 3;

/// Distinct roots found, plus the monic factor of the squarefree part that has no roots left.
#[derive(Clone, Debug)]
pub struct RootSearch {
    pub roots: Vec<CycloScalar>,
    pub residual: Poly,
}

impl RootSearch {
    pub fn splits(&self) -> bool {
        self.residual.degree() == Some(0)
    }
}

pub(super) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(super) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(super) fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Primes p = 1 mod n, descending from just below 2^61.
pub(super) fn primes_one_mod(n: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = ((1u64 << 61) - 1) / n;
    while out.len() < count && k > 0 {
        let p = k * n + 1;
        if is_prime(p) {
            out.push(p);
        }
        k -= 1;
    }
    out
}

pub(super) fn primitive_root_of_unity(n: u64, p: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let factors = prime_factors(n);
    for g in 2..p {
        let z = powmod(g, (p - 1) / n, p);
        if factors.iter().all(|&q| powmod(z, n / q, p) != 1) {
            return z;
        }
    }
    unreachable!("p = 1 mod n has primitive n-th roots")
}

pub(super) fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("reduced below p")
}

// ---- polynomials over F_p, low degree first, trimmed ----

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

fn prem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let inv = invmod(*m.last().unwrap(), p);
    while r.len() > dm {
        let k = r.len() - 1 - dm;
        let c = mulmod(*r.last().unwrap(), inv, p);
        for (j, &mj) in m.iter().enumerate() {
            r[k + j] = (r[k + j] + p - mulmod(c, mj, p)) % p;
        }
        trim(&mut r);
    }
    r
}

fn pdiv(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let inv = invmod(*m.last().unwrap(), p);
    let mut q = vec![0u64; r.len().saturating_sub(dm)];
    while r.len() > dm {
        let k = r.len() - 1 - dm;
        let c = mulmod(*r.last().unwrap(), inv, p);
        q[k] = c;
        for (j, &mj) in m.iter().enumerate() {
            r[k + j] = (r[k + j] + p - mulmod(c, mj, p)) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    q
}

fn pmonic(a: &[u64], p: u64) -> Vec<u64> {
    let inv = invmod(*a.last().unwrap(), p);
    a.iter().map(|&x| mulmod(x, inv, p)).collect()
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = prem(&a, &b, p);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        pmonic(&a, p)
    }
}

fn ppowmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = prem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = prem(&pmul(&acc, &b, p), m, p);
        }
        e >>= 1;
        if e > 0 {
            b = prem(&pmul(&b, &b, p), m, p);
        }
    }
    acc
}

fn psub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect();
    trim(&mut out);
    out
}

/// Distinct roots of f in F_p (f monic, nonconstant).
fn roots_mod_p(f: &[u64], p: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let xp = ppowmod(&[0, 1], p, f, p);
    let h = pgcd(&psub(&xp, &[0, 1], p), f, p);
    let mut out = Vec::new();
    let mut stack = vec![h];
    while let Some(h) = stack.pop() {
        match h.len() {
            0 | 1 => continue,
            2 => {
                out.push((p - h[0]) % p);
                continue;
            }
            _ => {}
        }
        loop {
            let a = rng.gen_range(0..p);
            let t = ppowmod(&[a, 1], (p - 1) / 2, &h, p);
            let g = pgcd(&psub(&t, &[1], p), &h, p);
            if g.len() > 1 && g.len() < h.len() {
                let other = pdiv(&h, &g, p);
                stack.push(g);
                stack.push(other);
                break;
            }
        }
    }
    out.sort_unstable();
    out
}

fn invert_mod_matrix(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| a[r][c] != 0).expect("Vandermonde of distinct nodes is invertible");
        a.swap(c, piv);
        let inv = invmod(a[c][c], p);
        for v in a[c].iter_mut() {
            *v = mulmod(*v, inv, p);
        }
        for r in 0..n {
            if r != c && a[r][c] != 0 {
                let f = a[r][c];
                let prow = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(prow) {
                    *x = (*x + p - mulmod(f, y, p)) % p;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

struct ModularSetting {
    p: u64,
    /// Images of w under each embedding.
    nodes: Vec<u64>,
}

impl ModularSetting {
    fn new(order: u32, p: u64) -> Self {
        let n = order as u64;
        let zeta = primitive_root_of_unity(n, p);
        let nodes = (1..=n).filter(|u| u.gcd(&n) == 1).map(|u| powmod(zeta, u, p)).collect();
        ModularSetting { p, nodes }
    }

    /// Image of an integer-coordinate scalar under embedding j.
    fn embed(&self, coords: &[u64], j: usize) -> u64 {
        let z = self.nodes[j];
        let mut acc = 0u64;
        let mut pw = 1u64;
        for &c in coords {
            acc = (acc + mulmod(c, pw, self.p)) % self.p;
            pw = mulmod(pw, z, self.p);
        }
        acc
    }
}

fn symmetric_lift(x: u64, p: u64) -> i128 {
    if x > p / 2 {
        x as i128 - p as i128
    } else {
        x as i128
    }
}

/// Finds all roots of `f` lying in its coefficient field.
pub fn roots_in_field(f: &Poly) -> Result<RootSearch, ExactError> {
    let field = f.field();
    let g = f.squarefree_part();
    let Some(d) = g.degree() else {
        return Err(ExactError::ZeroPolynomial);
    };
    if d == 0 {
        return Ok(RootSearch { roots: Vec::new(), residual: g });
    }
    // Scale x = y / D so the polynomial becomes monic over Z[w].
    let den = g.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    let den_q = Rational::from_integer(den.clone());
    let mut scaled = Vec::with_capacity(d + 1);
    let mut factor = Rational::one();
    for i in (0..=d).rev() {
        scaled.push(g.coeffs()[i].scale(&factor));
        factor *= &den_q;
    }
    scaled.reverse();
    let scaled_poly = Poly::new(field, scaled.clone());
    let int_coeffs: Vec<Vec<BigInt>> = scaled
        .iter()
        .map(|c| c.coeffs().iter().map(|q| { debug_assert!(q.is_integer()); q.to_integer() }).collect())
        .collect();

    let primes = primes_one_mod(field.order() as u64, PRIME_ATTEMPTS + 1);
    let check_prime = primes[PRIME_ATTEMPTS];
    let check = ModularSetting::new(field.order(), check_prime);
    let check_polys: Vec<Vec<u64>> = (0..check.nodes.len())
        .map(|j| {
            int_coeffs
                .iter()
                .map(|c| {
                    let red: Vec<u64> = c.iter().map(|x| bigint_mod(x, check_prime)).collect();
                    check.embed(&red, j)
                })
                .collect()
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut found: Vec<CycloScalar> = Vec::new();
    for &p in primes.iter().take(PRIME_ATTEMPTS) {
        let setting = ModularSetting::new(field.order(), p);
        let phi = setting.nodes.len();
        let reduced: Vec<Vec<u64>> = int_coeffs.iter().map(|c| c.iter().map(|x| bigint_mod(x, p)).collect()).collect();
        let mut per_embedding = Vec::with_capacity(phi);
        for j in 0..phi {
            let fj: Vec<u64> = reduced.iter().map(|c| setting.embed(c, j)).collect();
            per_embedding.push(roots_mod_p(&fj, p, &mut rng));
        }
        if per_embedding.iter().any(Vec::is_empty) {
            break;
        }
        let total: u128 = per_embedding.iter().map(|r| r.len() as u128).product();
        if total > COMBINATION_CAP {
            return Err(ExactError::RootSearchCap(total as u64));
        }
        let vander: Vec<Vec<u64>> = setting.nodes.iter().map(|&z| (0..phi).map(|k| powmod(z, k as u64, p)).collect()).collect();
        let vinv = invert_mod_matrix(&vander, p);
        let mut idx = vec![0usize; phi];
        loop {
            let values: Vec<u64> = (0..phi).map(|j| per_embedding[j][idx[j]]).collect();
            let coords: Vec<i128> = vinv
                .iter()
                .map(|row| symmetric_lift(row.iter().zip(&values).fold(0u64, |acc, (&a, &b)| (acc + mulmod(a, b, p)) % p), p))
                .collect();
            let coords_q: Vec<u64> =
                coords.iter().map(|&c| (c.rem_euclid(check_prime as i128)) as u64).collect();
            let passes = (0..check.nodes.len()).all(|j| {
                let x = check.embed(&coords_q, j);
                let mut acc = 0u64;
                for &c in check_polys[j].iter().rev() {
                    acc = (mulmod(acc, x, check_prime) + c) % check_prime;
                }
                acc == 0
            });
            if passes {
                let r = field.from_coeffs(coords.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect());
                if scaled_poly.eval(&r).is_zero() {
                    let root = r.scale(&den_q.recip());
                    if !found.contains(&root) {
                        found.push(root);
                    }
                }
            }
            // odometer
            let mut k = 0;
            loop {
                if k == phi {
                    break;
                }
                idx[k] += 1;
                if idx[k] < per_embedding[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == phi {
                break;
            }
        }
        if found.len() == d {
            break;
        }
    }
    found.sort();
    let mut residual = g.clone();
    for r in &found {
        residual = residual.divrem(&Poly::linear(r)).0;
    }
    Ok(RootSearch { roots: found, residual: residual.monic() })
}
