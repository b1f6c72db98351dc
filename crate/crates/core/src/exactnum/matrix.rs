//! Dense matrices over a cyclotomic field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{CycloField, CycloScalar, ExactError, Poly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    field: &'static CycloField,
    rows: usize,
    cols: usize,
    data: Vec<CycloScalar>,
}

/// Result of Gauss-Jordan elimination.
pub struct Echelon {
    pub matrix: ExactMatrix,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(field: &'static CycloField, rows: usize, cols: usize) -> Self {
        ExactMatrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &'static CycloField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn scalar(field: &'static CycloField, n: usize, s: &CycloScalar) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = s.clone();
        }
        m
    }

    pub fn diagonal(field: &'static CycloField, diag: &[CycloScalar]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(field, n, n);
        for (i, d) in diag.iter().enumerate() {
            m.data[i * n + i] = d.clone();
        }
        m
    }

    pub fn from_rows(field: &'static CycloField, rows: Vec<Vec<CycloScalar>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Shape("ragged rows".into()));
        }
        let data: Vec<CycloScalar> = rows.into_iter().flatten().collect();
        if data.iter().any(|x| x.order() != field.order()) {
            return Err(ExactError::OrderMismatch(field.order(), data.iter().find(|x| x.order() != field.order()).unwrap().order()));
        }
        Ok(ExactMatrix { field, rows: r, cols: c, data })
    }

    /// Integer matrix convenience constructor.
    pub fn from_ints(field: &'static CycloField, rows: &[Vec<i64>]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.int(x)).collect()).collect();
        Self::from_rows(field, rows).expect("well-formed integer rows")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &'static CycloField, n: usize, cols: &[Vec<CycloScalar>]) -> Self {
        let mut m = Self::zeros(field, n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), n, "column length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycloScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycloScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[CycloScalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> Vec<CycloScalar> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<CycloScalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<CycloScalar>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycloScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        m
    }

    /// Entrywise complex conjugation.
    pub fn conj(&self) -> Self {
        ExactMatrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(CycloScalar::conj).collect() }
    }

    pub fn scale(&self, s: &CycloScalar) -> Self {
        ExactMatrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::Shape(format!("{}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        let prod = a * b;
                        out.data[idx] += &prod;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycloScalar]) -> Vec<CycloScalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn trace(&self) -> CycloScalar {
        let mut acc = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let idx = r * m.cols + j;
                if !m.data[idx].is_zero() {
                    m.data[idx] = &m.data[idx] * &inv;
                }
            }
            let pivot_row: Vec<CycloScalar> = m.row(r);
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (j, pv) in pivot_row.iter().enumerate().skip(c) {
                    if !pv.is_zero() {
                        let idx = i * m.cols + j;
                        m.data[idx] -= &(&f * pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space {v : Mv = 0}, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<CycloScalar>> {
        let Echelon { matrix, pivots } = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -matrix.get(r, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Some x with Mx = b, if one exists.
    pub fn solve(&self, b: &[CycloScalar]) -> Option<Vec<CycloScalar>> {
        assert_eq!(b.len(), self.rows, "rhs length");
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.data[i * (self.cols + 1) + j] = self.get(i, j).clone();
            }
            aug.data[i * (self.cols + 1) + self.cols] = b[i].clone();
        }
        let Echelon { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = matrix.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j).clone();
            }
            aug.data[i * 2 * n + n + i] = self.field.one();
        }
        let Echelon { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = matrix.get(i, n + j).clone();
            }
        }
        Some(inv)
    }

    /// Minimal polynomial via linear dependence among I, M, M^2, ...
    pub fn minimal_polynomial(&self) -> Poly {
        assert!(self.is_square(), "minimal polynomial of a non-square matrix");
        let n = self.rows;
        let f = self.field;
        // Each stored entry: (pivot index, normalized vector, combination of powers).
        let mut basis: Vec<(usize, Vec<CycloScalar>, Vec<CycloScalar>)> = Vec::new();
        let mut power = Self::identity(f, n);
        for k in 0..=n {
            let mut v = power.data.clone();
            let mut combo = vec![f.zero(); k + 1];
            combo[k] = f.one();
            for (piv, bv, bc) in &basis {
                let c = v[*piv].clone();
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(bv) {
                    if !y.is_zero() {
                        *x -= &(&c * y);
                    }
                }
                for (x, y) in combo.iter_mut().zip(bc) {
                    if !y.is_zero() {
                        *x -= &(&c * y);
                    }
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => return Poly::new(f, combo),
                Some(piv) => {
                    let inv = v[piv].inv().expect("nonzero");
                    let v: Vec<CycloScalar> = v.iter().map(|x| x * &inv).collect();
                    let combo: Vec<CycloScalar> = combo.iter().map(|x| x * &inv).collect();
                    basis.push((piv, v, combo));
                }
            }
            power = &power * self;
        }
        unreachable!("Cayley-Hamilton bounds the degree by n")
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        &(self * other) == &(other * self)
    }

    /// Embeds the entries into a larger cyclotomic field.
    pub fn lift_to(&self, target: &'static CycloField) -> Result<Self, ExactError> {
        let data = self.data.iter().map(|x| x.lift_to(target)).collect::<Result<Vec<_>, _>>()?;
        Ok(ExactMatrix { field: target, rows: self.rows, cols: self.cols, data })
    }
}

impl Mul<&ExactMatrix> for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }
}

impl Add<&ExactMatrix> for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix shape mismatch");
        ExactMatrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub<&ExactMatrix> for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "matrix shape mismatch");
        ExactMatrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_solve() {
        let q = CycloField::get(1);
        let m = ExactMatrix::from_ints(q, &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(CycloScalar::is_zero));
        }
        assert!(m.solve(&[q.int(1), q.int(3)]).is_none());
        let x = m.solve(&[q.int(3), q.int(6)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q.int(3), q.int(6)]);
    }

    #[test]
    fn inverse_over_q_omega() {
        let k = CycloField::get(3);
        let w = k.omega_pow(1);
        let m = ExactMatrix::from_rows(k, vec![vec![k.one(), w.clone()], vec![w.clone(), k.int(2)]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
    }

    #[test]
    fn minimal_polynomial_of_diag() {
        let q = CycloField::get(1);
        let m = ExactMatrix::diagonal(q, &[q.int(1), q.int(1), q.int(2)]);
        let p = m.minimal_polynomial();
        // (x-1)(x-2) = x^2 - 3x + 2
        assert_eq!(p.coeffs(), &[q.int(2), q.int(-3), q.int(1)]);
        let nil = ExactMatrix::from_ints(q, &[vec![0, 1], vec![0, 0]]);
        assert_eq!(nil.minimal_polynomial().degree(), Some(2));
    }
}
