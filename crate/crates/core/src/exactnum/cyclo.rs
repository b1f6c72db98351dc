//! The cyclotomic field Q(w_n) in the power basis modulo the n-th cyclotomic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational};

/// Shared data for one field Q(w_n). Instances are interned and live for the whole process.
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    degree: usize,
    /// Monic cyclotomic polynomial, low degree first.
    modulus: Vec<BigInt>,
    /// `powers[k]` is the reduced representation of w^k for k < order.
    powers: Vec<Vec<Rational>>,
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}
impl Eq for CycloField {}

impl std::hash::Hash for CycloField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
    }
}

static FIELDS: OnceLock<Mutex<HashMap<u32, &'static CycloField>>> = OnceLock::new();

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

impl CycloField {
    /// Returns the interned field Q(w_n). Panics if `n == 0`.
    pub fn get(n: u32) -> &'static CycloField {
        assert!(n > 0, "cyclotomic order must be positive");
        let map = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = map.lock().expect("field cache poisoned");
        if let Some(f) = guard.get(&n) {
            return f;
        }
        let modulus = cyclotomic_polynomial(n);
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![Rational::zero(); degree];
        cur[0] = Rational::one();
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce
            let top = cur[degree - 1].clone();
            let mut next = vec![Rational::zero(); degree];
            for k in (1..degree).rev() {
                next[k] = cur[k - 1].clone();
            }
            if !top.is_zero() {
                for (k, slot) in next.iter_mut().enumerate() {
                    *slot -= &top * Rational::from_integer(modulus[k].clone());
                }
            }
            cur = next;
        }
        let field: &'static CycloField = Box::leak(Box::new(CycloField { order: n, degree, modulus, powers }));
        guard.insert(n, field);
        field
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Dimension over Q, i.e. Euler phi of the order.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    pub fn zero(&'static self) -> CycloScalar {
        CycloScalar { field: self, coeffs: vec![Rational::zero(); self.degree] }
    }

    pub fn one(&'static self) -> CycloScalar {
        self.rational(Rational::one())
    }

    pub fn int(&'static self, n: i64) -> CycloScalar {
        self.rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn rational(&'static self, q: Rational) -> CycloScalar {
        let mut s = self.zero();
        s.coeffs[0] = q;
        s
    }

    pub fn frac(&'static self, n: i64, d: i64) -> CycloScalar {
        self.rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// w^k for any integer k.
    pub fn omega_pow(&'static self, k: i64) -> CycloScalar {
        let idx = k.rem_euclid(self.order as i64) as usize;
        CycloScalar { field: self, coeffs: self.powers[idx].clone() }
    }

    /// A primitive d-th root of unity inside this field (w^(n/d)); d must divide n.
    pub fn root_of_unity(&'static self, d: u32) -> Result<CycloScalar, ExactError> {
        if d == 0 || self.order % d != 0 {
            return Err(ExactError::OrderMismatch(d, self.order));
        }
        Ok(self.omega_pow((self.order / d) as i64))
    }

    /// Builds a scalar from power-basis coefficients (reducing if more than `degree` are given).
    pub fn from_coeffs(&'static self, coeffs: Vec<Rational>) -> CycloScalar {
        if coeffs.len() == self.degree {
            return CycloScalar { field: self, coeffs };
        }
        let mut acc = self.zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &self.powers[k % self.order as usize];
            for (slot, pc) in acc.coeffs.iter_mut().zip(p) {
                *slot += &c * pc;
            }
        }
        acc
    }
}

/// An element of Q(w_n), stored as its reduced residue in the power basis.
#[derive(Clone)]
pub struct CycloScalar {
    field: &'static CycloField,
    coeffs: Vec<Rational>,
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}
impl Eq for CycloScalar {}

impl std::hash::Hash for CycloScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

/// A canonical total order (lexicographic on coefficients), not a field ordering.
impl Ord for CycloScalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.field.order.cmp(&other.field.order).then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}
impl PartialOrd for CycloScalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl CycloScalar {
    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Some(q) if the scalar lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    fn check(&self, other: &Self) -> Result<(), ExactError> {
        if self.field.order != other.field.order {
            Err(ExactError::OrderMismatch(self.field.order, other.field.order))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CycloScalar { field: self.field, coeffs }
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        CycloScalar { field: self.field, coeffs }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = self.field.degree;
        if d == 1 {
            return CycloScalar { field: self.field, coeffs: vec![&self.coeffs[0] * &other.coeffs[0]] };
        }
        if self.is_zero() || other.is_zero() {
            return self.field.zero();
        }
        if let Some(q) = other.as_rational() {
            return self.scale(q);
        }
        if let Some(q) = self.as_rational() {
            return other.scale(q);
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let modulus = &self.field.modulus;
        for k in (d..prod.len()).rev() {
            let c = std::mem::replace(&mut prod[k], Rational::zero());
            if c.is_zero() {
                continue;
            }
            for (j, m) in modulus.iter().enumerate().take(d) {
                if !m.is_zero() {
                    prod[k - d + j] -= &c * Rational::from_integer(m.clone());
                }
            }
        }
        prod.truncate(d);
        CycloScalar { field: self.field, coeffs: prod }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycloScalar { field: self.field, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(self.field.rational(q.recip()));
        }
        // Solve (multiplication-by-self) * v = 1 over Q.
        let d = self.field.degree;
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(d);
        for k in 0..d {
            let basis = CycloScalar { field: self.field, coeffs: self.field.powers[k].clone() };
            cols.push(self.mul_unchecked(&basis).coeffs);
        }
        // augmented row-major d x (d+1)
        let mut a: Vec<Vec<Rational>> = (0..d)
            .map(|r| {
                let mut row: Vec<Rational> = (0..d).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !a[r][col].is_zero()).expect("nonzero field element is invertible");
            a.swap(col, piv);
            let p = a[col][col].clone();
            for v in a[col].iter_mut() {
                *v /= &p;
            }
            for r in 0..d {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    let pivot_row = a[col].clone();
                    for (x, y) in a[r].iter_mut().zip(pivot_row.iter()) {
                        *x -= &f * y;
                    }
                }
            }
        }
        Ok(CycloScalar { field: self.field, coeffs: a.into_iter().map(|row| row[d].clone()).collect() })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.check(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    /// Complex conjugation w -> w^(n-1).
    pub fn conj(&self) -> Self {
        let n = self.field.order as usize;
        let mut acc = self.field.zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &self.field.powers[(n - k % n) % n];
            for (slot, pc) in acc.coeffs.iter_mut().zip(p) {
                *slot += c * pc;
            }
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Moves the scalar into Q(w_N) for a multiple N of its order.
    pub fn lift_to(&self, target: &'static CycloField) -> Result<Self, ExactError> {
        let n = self.field.order;
        if target.order % n != 0 {
            return Err(ExactError::OrderMismatch(n, target.order));
        }
        let step = (target.order / n) as i64;
        let mut acc = target.zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add_unchecked(&target.omega_pow(step * k as i64).scale(c));
            }
        }
        Ok(acc)
    }
}

/// Checked product (order mismatch is an error).
pub fn cyclo_mul(a: &CycloScalar, b: &CycloScalar) -> Result<CycloScalar, ExactError> {
    a.try_mul(b)
}

pub fn cyclo_conj(a: &CycloScalar) -> CycloScalar {
    a.conj()
}

macro_rules! binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&CycloScalar> for &CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: &CycloScalar) -> CycloScalar {
                assert_eq!(self.field.order, rhs.field.order, "cyclotomic order mismatch");
                self.$inner(rhs)
            }
        }
        impl $tr<CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: CycloScalar) -> CycloScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycloScalar> for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: &CycloScalar) -> CycloScalar {
                (&self).$m(rhs)
            }
        }
    };
}
binop!(Add, add, add_unchecked);
binop!(Sub, sub, sub_unchecked);
binop!(Mul, mul, mul_unchecked);

impl Div<&CycloScalar> for &CycloScalar {
    type Output = CycloScalar;
    fn div(self, rhs: &CycloScalar) -> CycloScalar {
        self.try_div(rhs).expect("division failed")
    }
}

impl AddAssign<&CycloScalar> for CycloScalar {
    fn add_assign(&mut self, rhs: &CycloScalar) {
        assert_eq!(self.field.order, rhs.field.order, "cyclotomic order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&CycloScalar> for CycloScalar {
    fn sub_assign(&mut self, rhs: &CycloScalar) {
        assert_eq!(self.field.order, rhs.field.order, "cyclotomic order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}
impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        -&self
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Renders as a sum of terms `c*w^k`, lowest power first, e.g. `-1 - w` or `1/2*w^2`.
impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{k}"),
            };
            let body = if k == 0 {
                fmt_rational(&a)
            } else if a.is_one() {
                mono
            } else {
                format!("{}*{}", fmt_rational(&a), mono)
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[Q(w{})]", self, self.field.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let p = |n| cyclotomic_polynomial(n).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        assert_eq!(p(1), "-1,1");
        assert_eq!(p(2), "1,1");
        assert_eq!(p(3), "1,1,1");
        assert_eq!(p(4), "1,0,1");
        assert_eq!(p(6), "1,-1,1");
        assert_eq!(p(12), "1,0,-1,0,1");
    }

    #[test]
    fn omega_squared_mod_phi3() {
        let k = CycloField::get(3);
        let w = k.omega_pow(1);
        assert_eq!(&w * &w, -(k.one() + w.clone()));
        assert_eq!((&w * &w).to_string(), "-1 - w");
    }

    #[test]
    fn omega_times_inverse_power() {
        let k = CycloField::get(4);
        assert!((k.omega_pow(1) * k.omega_pow(3)).is_one());
        assert_eq!(k.omega_pow(1).conj(), -k.omega_pow(1));
    }

    #[test]
    fn one_plus_minus_omega_m5() {
        let k = CycloField::get(5);
        let w = k.omega_pow(1);
        let lhs = (k.one() + w.clone()) * (k.one() - w.clone());
        assert_eq!(lhs, k.one() - k.omega_pow(2));
    }

    #[test]
    fn inverse_and_lift() {
        let k = CycloField::get(5);
        let a = k.one() + k.omega_pow(2).scale(&Rational::new(3.into(), 2.into()));
        assert!((&a * &a.inv().unwrap()).is_one());
        let w3 = CycloField::get(3).omega_pow(1);
        let lifted = w3.lift_to(CycloField::get(6)).unwrap();
        assert_eq!(lifted, CycloField::get(6).omega_pow(2));
        assert!(w3.try_mul(&k.one()).is_err());
    }
}
