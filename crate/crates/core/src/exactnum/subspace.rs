//! Subspaces of K^n held as reduced row echelon bases, so equal subspaces compare equal.

use std::fmt;

use super::{CycloField, CycloScalar, ExactMatrix};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: &'static CycloField,
    ambient: usize,
    rows: Vec<Vec<CycloScalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &'static CycloField, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &'static CycloField, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        Subspace { field, ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn span(field: &'static CycloField, ambient: usize, vectors: &[Vec<CycloScalar>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = ExactMatrix::from_rows(field, vectors.to_vec()).expect("equal-length vectors");
        assert_eq!(m.cols(), ambient, "vector length");
        let e = m.rref();
        let rows = (0..e.pivots.len()).map(|r| e.matrix.row(r)).collect();
        Subspace { field, ambient, rows, pivots: e.pivots }
    }

    /// Span of the chosen standard basis vectors.
    pub fn coordinate(field: &'static CycloField, ambient: usize, indices: &[usize]) -> Self {
        let vecs: Vec<Vec<CycloScalar>> = indices
            .iter()
            .map(|&i| (0..ambient).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        Self::span(field, ambient, &vecs)
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }
    pub fn basis(&self) -> &[Vec<CycloScalar>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of v in the echelon basis, or None if v is not in the subspace.
    pub fn coordinates(&self, v: &[CycloScalar]) -> Option<Vec<CycloScalar>> {
        let c: Vec<CycloScalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (coef, row) in c.iter().zip(&self.rows) {
            if coef.is_zero() {
                continue;
            }
            for (x, y) in residual.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &(coef * y);
                }
            }
        }
        residual.iter().all(CycloScalar::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[CycloScalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn combine(&self, coords: &[CycloScalar]) -> Vec<CycloScalar> {
        let mut v = vec![self.field.zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x += &(c * y);
                }
            }
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vecs = self.rows.clone();
        vecs.extend(other.rows.iter().cloned());
        Subspace::span(self.field, self.ambient, &vecs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, self.ambient);
        }
        if self.contains_space(other) {
            return other.clone();
        }
        if other.contains_space(self) {
            return self.clone();
        }
        // Solve sum a_i u_i - sum b_j v_j = 0.
        let mut cols: Vec<Vec<CycloScalar>> = self.rows.clone();
        cols.extend(other.rows.iter().map(|v| v.iter().map(|x| -x).collect()));
        let m = ExactMatrix::from_columns(self.field, self.ambient, &cols);
        let vecs: Vec<Vec<CycloScalar>> = m.kernel().iter().map(|k| self.combine(&k[..self.dim()])).collect();
        Subspace::span(self.field, self.ambient, &vecs)
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image(&self, m: &ExactMatrix) -> Subspace {
        let vecs: Vec<Vec<CycloScalar>> = self.rows.iter().map(|r| m.mul_vec(r)).collect();
        Subspace::span(self.field, m.rows(), &vecs)
    }

    /// Kernel of the matrix, as a subspace.
    pub fn kernel_of(m: &ExactMatrix) -> Subspace {
        Subspace::span(m.field(), m.cols(), &m.kernel())
    }

    /// Points {v : f(v) = 0 for all f in functionals}.
    pub fn annihilator(field: &'static CycloField, ambient: usize, functionals: &[Vec<CycloScalar>]) -> Subspace {
        if functionals.is_empty() {
            return Subspace::full(field, ambient);
        }
        let m = ExactMatrix::from_rows(field, functionals.to_vec()).expect("equal-length functionals");
        Subspace::kernel_of(&m)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(", "))?;
        }
        write!(f, "}}")
    }
}

/// Solves for coordinates with respect to a fixed list of independent vectors.
#[derive(Clone, Debug)]
pub struct BasisSolver {
    vectors: Vec<Vec<CycloScalar>>,
    rows: Vec<usize>,
    inverse: ExactMatrix,
}

impl BasisSolver {
    /// None if the vectors are linearly dependent.
    pub fn new(field: &'static CycloField, ambient: usize, vectors: &[Vec<CycloScalar>]) -> Option<Self> {
        let k = vectors.len();
        if k == 0 {
            return Some(BasisSolver { vectors: Vec::new(), rows: Vec::new(), inverse: ExactMatrix::zeros(field, 0, 0) });
        }
        let a = ExactMatrix::from_columns(field, ambient, vectors);
        let e = a.transpose().rref();
        if e.pivots.len() < k {
            return None;
        }
        let rows = e.pivots.clone();
        let sub_rows: Vec<Vec<CycloScalar>> = rows.iter().map(|&r| a.row(r)).collect();
        let inverse = ExactMatrix::from_rows(field, sub_rows).ok()?.inverse()?;
        Some(BasisSolver { vectors: vectors.to_vec(), rows, inverse })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<CycloScalar>] {
        &self.vectors
    }

    pub fn coordinates(&self, v: &[CycloScalar]) -> Option<Vec<CycloScalar>> {
        if self.vectors.is_empty() {
            return v.iter().all(CycloScalar::is_zero).then(Vec::new);
        }
        let rhs: Vec<CycloScalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inverse.mul_vec(&rhs);
        let field = v[0].field();
        let mut back = vec![field.zero(); v.len()];
        for (ci, vec) in c.iter().zip(&self.vectors) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in back.iter_mut().zip(vec) {
                if !y.is_zero() {
                    *x += &(ci * y);
                }
            }
        }
        (back == v).then_some(c)
    }
}
