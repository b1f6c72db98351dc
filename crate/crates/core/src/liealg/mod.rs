//! Structure-constant Lie algebras over cyclotomic fields.

mod cartan_type;
mod chevalley;

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{BasisSolver, CycloField, CycloScalar, ExactError, ExactMatrix, Poly, Subspace};

pub use cartan_type::{CartanType, RootIndex, RootSystem, MAX_RANK};

/// Coordinates of an element in the basis of its algebra.
pub type Element = Vec<CycloScalar>;

pub const DEFAULT_DIMENSION_CAP: usize = 300;

/// Full triple scans of the Jacobi identity are done up to this dimension.
pub const EXHAUSTIVE_JACOBI_DIM: usize = 50;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("unsupported Cartan type {0:?}")]
    UnsupportedType(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartanMatrix(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("dimension {0} exceeds cap {1}")]
    DimensionCap(usize, usize),
    #[error("element has length {got}, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("antisymmetry fails for basis pair ({0}, {1})")]
    Antisymmetry(usize, usize),
    #[error("Jacobi identity fails for basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error("span is not closed under the bracket")]
    NotClosed,
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("adjoint operator has no preimage in the algebra")]
    PullbackFailed,
    #[error("algebra is not the direct sum of its center and derived algebra")]
    NotReductive,
}

/// Extra data carried by algebras built from a Cartan matrix.
#[derive(Clone, Debug)]
pub struct ChevalleyData {
    pub system: RootSystem,
    pub index: RootIndex,
}

impl ChevalleyData {
    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    /// Basis position of the root vector for root index `r` (positive roots first, then negatives).
    pub fn root_position(&self, r: usize) -> usize {
        self.rank() + r
    }
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    field: &'static CycloField,
    labels: Vec<String>,
    /// `table[i * dim + j]` lists the nonzero (k, c) with [b_i, b_j] = sum c b_k.
    table: Vec<Vec<(usize, CycloScalar)>>,
    chevalley: Option<ChevalleyData>,
}

impl LieAlgebra {
    /// Builds an algebra from the brackets of basis pairs i < j; the rest follows by antisymmetry.
    pub fn from_brackets(
        field: &'static CycloField,
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<(usize, CycloScalar)>)>,
    ) -> Result<Self, LieError> {
        let dim = labels.len();
        if dim > DEFAULT_DIMENSION_CAP {
            return Err(LieError::DimensionCap(dim, DEFAULT_DIMENSION_CAP));
        }
        let mut table = vec![Vec::new(); dim * dim];
        for ((i, j), terms) in brackets {
            if i >= dim || j >= dim || terms.iter().any(|(k, _)| *k >= dim) {
                return Err(LieError::DimensionMismatch { expected: dim, got: i.max(j) + 1 });
            }
            if i == j {
                if terms.iter().any(|(_, c)| !c.is_zero()) {
                    return Err(LieError::Antisymmetry(i, i));
                }
                continue;
            }
            let terms: Vec<(usize, CycloScalar)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            table[j * dim + i] = terms.iter().map(|(k, c)| (*k, -c)).collect();
            table[i * dim + j] = terms;
        }
        Ok(LieAlgebra { field, labels, table, chevalley: None })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn chevalley(&self) -> Option<&ChevalleyData> {
        self.chevalley.as_ref()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, CycloScalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn zero(&self) -> Element {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    fn check_len(&self, x: &[CycloScalar]) -> Result<(), LieError> {
        if x.len() != self.dim() {
            return Err(LieError::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[CycloScalar], y: &[CycloScalar]) -> Element {
        let n = self.dim();
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let terms = &self.table[i * n + j];
                if terms.is_empty() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in terms {
                    out[k.to_owned()] += &(&s * c);
                }
            }
        }
        out
    }

    /// Matrix of y -> [x, y].
    pub fn ad(&self, x: &[CycloScalar]) -> ExactMatrix {
        let n = self.dim();
        let mut m = ExactMatrix::zeros(self.field, n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.table[i * n + j] {
                    let v = m.get(*k, j) + &(xi * c);
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    pub fn check_antisymmetry(&self) -> Result<(), LieError> {
        let n = self.dim();
        for i in 0..n {
            if !self.table[i * n + i].is_empty() {
                return Err(LieError::Antisymmetry(i, i));
            }
            for j in i + 1..n {
                let mut a = self.table[i * n + j].clone();
                let mut b: Vec<(usize, CycloScalar)> = self.table[j * n + i].iter().map(|(k, c)| (*k, -c)).collect();
                a.sort();
                b.sort();
                if a != b {
                    return Err(LieError::Antisymmetry(i, j));
                }
            }
        }
        Ok(())
    }

    fn jacobi_triple(&self, i: usize, j: usize, k: usize) -> bool {
        let (bi, bj, bk) = (self.basis_element(i), self.basis_element(j), self.basis_element(k));
        let mut s = self.bracket(&bi, &self.bracket(&bj, &bk));
        for (x, y) in s.iter_mut().zip(self.bracket(&bj, &self.bracket(&bk, &bi))) {
            *x += &y;
        }
        for (x, y) in s.iter_mut().zip(self.bracket(&bk, &self.bracket(&bi, &bj))) {
            *x += &y;
        }
        s.iter().all(CycloScalar::is_zero)
    }

    /// Full scan over basis triples up to `EXHAUSTIVE_JACOBI_DIM`, seeded sampling above.
    pub fn check_jacobi(&self) -> Result<(), LieError> {
        let n = self.dim();
        if n <= EXHAUSTIVE_JACOBI_DIM {
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        if !self.jacobi_triple(i, j, k) {
                            return Err(LieError::Jacobi(i, j, k));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x4a41_434f_4249);
            for _ in 0..20_000 {
                let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !self.jacobi_triple(i, j, k) {
                    return Err(LieError::Jacobi(i, j, k));
                }
            }
        }
        Ok(())
    }

    /// Gram matrix of the Killing form tr(ad x ad y) on the basis.
    pub fn killing_form(&self) -> ExactMatrix {
        let n = self.dim();
        let f = self.field;
        let mut out = ExactMatrix::zeros(f, n, n);
        for i in 0..n {
            for j in i..n {
                // tr(ad b_i ad b_j) = sum_l sum_k c[i][k][l] c[j][l][k]
                let mut acc = f.zero();
                for l in 0..n {
                    for (k, c) in &self.table[j * n + l] {
                        for (l2, d) in &self.table[i * n + k] {
                            if *l2 == l {
                                acc += &(c * d);
                            }
                        }
                    }
                }
                out.set(i, j, acc.clone());
                out.set(j, i, acc);
            }
        }
        out
    }

    /// Kernel of y -> ([s, y])_s.
    pub fn centralizer(&self, elements: &[Element]) -> Subspace {
        self.centralizer_in(elements, &Subspace::full(self.field, self.dim()))
    }

    /// Elements of `within` commuting with every element listed.
    pub fn centralizer_in(&self, elements: &[Element], within: &Subspace) -> Subspace {
        let n = self.dim();
        if elements.is_empty() || within.is_zero() {
            return within.clone();
        }
        let basis = within.basis();
        // columns: ad(s) applied to each basis vector of `within`, stacked over s
        let mut rows: Vec<Vec<CycloScalar>> = vec![Vec::with_capacity(basis.len()); n * elements.len()];
        for b in basis {
            for (si, s) in elements.iter().enumerate() {
                let v = self.bracket(s, b);
                for (r, x) in v.into_iter().enumerate() {
                    rows[si * n + r].push(x);
                }
            }
        }
        let rows: Vec<Vec<CycloScalar>> = rows.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
        if rows.is_empty() {
            return within.clone();
        }
        let m = ExactMatrix::from_rows(self.field, rows).expect("rectangular");
        let ker = m.kernel();
        let vecs: Vec<Vec<CycloScalar>> = ker.iter().map(|c| within.combine(c)).collect();
        Subspace::span(self.field, n, &vecs)
    }

    /// Span of all [x, y] with x in `a`, y in `b`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                let v = self.bracket(x, y);
                if v.iter().any(|c| !c.is_zero()) {
                    vecs.push(v);
                }
            }
        }
        Subspace::span(self.field, self.dim(), &vecs)
    }

    pub fn is_closed(&self, s: &Subspace) -> bool {
        s.contains_space(&self.bracket_span(s, s))
    }

    /// True iff ad(x)^dim = 0.
    pub fn is_nilpotent_element(&self, x: &[CycloScalar]) -> bool {
        let mut a = self.ad(x);
        let n = self.dim();
        let mut p = 1;
        while p < n {
            if a.is_zero() {
                return true;
            }
            a = &a * &a;
            p *= 2;
        }
        a.is_zero()
    }

    /// True iff the minimal polynomial of ad(x) is squarefree.
    pub fn is_semisimple_element(&self, x: &[CycloScalar]) -> bool {
        self.ad(x).minimal_polynomial().is_squarefree()
    }

    /// Solves ad(y) = target.
    pub fn pull_back_ad(&self, target: &ExactMatrix) -> Result<Element, LieError> {
        let n = self.dim();
        if target.is_zero() {
            return Ok(self.zero());
        }
        // Unknowns y_i; equation for entry (k, j): sum_i y_i c[i][j][k] = target[k][j].
        let mut rows: Vec<Vec<CycloScalar>> = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![self.field.zero(); n];
                let mut any = false;
                for (i, slot) in row.iter_mut().enumerate() {
                    for (kk, c) in &self.table[i * n + j] {
                        if *kk == k {
                            *slot = c.clone();
                            any = true;
                        }
                    }
                }
                let t = target.get(k, j);
                if !any {
                    if !t.is_zero() {
                        return Err(LieError::PullbackFailed);
                    }
                    continue;
                }
                rows.push(row);
                rhs.push(t.clone());
            }
        }
        let m = ExactMatrix::from_rows(self.field, rows).map_err(LieError::from)?;
        let y = m.solve(&rhs).ok_or(LieError::PullbackFailed)?;
        if &self.ad(&y) != target {
            return Err(LieError::PullbackFailed);
        }
        Ok(y)
    }

    /// Returns (x_s, x_n). The semisimple part of ad(x) is found by Newton iteration on the
    /// squarefree part of its minimal polynomial, then pulled back through ad.
    pub fn jordan_decomposition(&self, x: &[CycloScalar]) -> Result<(Element, Element), LieError> {
        self.check_len(x)?;
        let a = self.ad(x);
        let s = semisimple_part(&a)?;
        if s == a {
            return Ok((x.to_vec(), self.zero()));
        }
        let mut xs = self.pull_back_ad(&s)?;
        if self.chevalley.is_none() {
            // ad only sees x_s modulo the center; in a reductive algebra x_n lies in [g, g].
            let basis: Vec<Element> = (0..self.dim()).map(|i| self.basis_element(i)).collect();
            let center = self.centralizer(&basis);
            if !center.is_zero() {
                let full = Subspace::full(self.field, self.dim());
                let derived = self.bracket_span(&full, &full);
                let mut vecs = center.basis().to_vec();
                vecs.extend(derived.basis().iter().cloned());
                if vecs.len() != self.dim() {
                    return Err(LieError::NotReductive);
                }
                let solver = BasisSolver::new(self.field, self.dim(), &vecs).ok_or(LieError::NotReductive)?;
                let rest: Element = x.iter().zip(&xs).map(|(p, q)| p - q).collect();
                let c = solver.coordinates(&rest).ok_or(LieError::NotReductive)?;
                let shift = center.combine(&c[..center.dim()]);
                xs.iter_mut().zip(&shift).for_each(|(a, b)| *a += b);
            }
        }
        let xn: Element = x.iter().zip(&xs).map(|(p, q)| p - q).collect();
        Ok((xs, xn))
    }

    /// Structure constants of the subalgebra spanned by `basis`, in that basis.
    pub fn from_subalgebra(&self, basis: &[Element]) -> Result<LieAlgebra, LieError> {
        let solver = BasisSolver::new(self.field, self.dim(), basis).ok_or(LieError::DependentBasis)?;
        let k = basis.len();
        let mut brackets = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let v = self.bracket(&basis[i], &basis[j]);
                let c = solver.coordinates(&v).ok_or(LieError::NotClosed)?;
                let terms: Vec<(usize, CycloScalar)> =
                    c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                brackets.push(((i, j), terms));
            }
        }
        let labels = basis.iter().map(|b| self.format_element(b)).collect();
        LieAlgebra::from_brackets(self.field, labels, brackets)
    }

    /// Same algebra with constants embedded in a larger cyclotomic field.
    pub fn lift_to(&self, target: &'static CycloField) -> Result<LieAlgebra, LieError> {
        let table = self
            .table
            .iter()
            .map(|t| t.iter().map(|(k, c)| Ok((*k, c.lift_to(target)?))).collect::<Result<Vec<_>, ExactError>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LieAlgebra { field: target, labels: self.labels.clone(), table, chevalley: self.chevalley.clone() })
    }

    pub fn has_rational_constants(&self) -> bool {
        self.table.iter().flatten().all(|(_, c)| c.is_rational())
    }

    pub fn format_element(&self, x: &[CycloScalar]) -> String {
        let mut out = String::new();
        for (c, label) in x.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(b) if !b.contains(' ') => (true, b.to_string()),
                _ => (false, cs.clone()),
            };
            if !out.is_empty() {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            let label = if label.contains(' ') { format!("({label})") } else { label.clone() };
            if body == "1" {
                out.push_str(&label);
            } else if body.contains(' ') {
                let _ = write!(out, "({body})*{label}");
            } else {
                let _ = write!(out, "{body}*{label}");
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Semisimple part of a square matrix, as a polynomial in it.
pub fn semisimple_part(a: &ExactMatrix) -> Result<ExactMatrix, LieError> {
    let p = a.minimal_polynomial().squarefree_part();
    let dp = p.derivative();
    let mut s = a.clone();
    loop {
        let ps = p.eval_matrix(&s);
        if ps.is_zero() {
            return Ok(s);
        }
        let inv = dp.eval_matrix(&s).inverse().ok_or(LieError::Exact(ExactError::DivisionByZero))?;
        s = &s - &(&ps * &inv);
    }
}

/// Squarefree-part polynomial of ad(x), exposed for tests and diagnostics.
pub fn ad_minimal_polynomial(g: &LieAlgebra, x: &[CycloScalar]) -> Poly {
    g.ad(x).minimal_polynomial()
}

/// Chevalley basis h_1..h_l, e_r (positive roots by height), f_r (same order).
pub fn chevalley_basis(cartan_matrix: &[Vec<i64>]) -> Result<LieAlgebra, LieError> {
    let sys = RootSystem::from_cartan_matrix(cartan_matrix)?;
    let sc = chevalley::StructureConstants::new(&sys)?;
    let index = sc.index().clone();
    let l = sys.rank();
    let np = index.num_positive;
    let dim = l + 2 * np;
    let f = CycloField::get(1);
    let mut labels: Vec<String> = (1..=l).map(|i| format!("h{i}")).collect();
    for (k, r) in index.roots.iter().enumerate() {
        let pos = if k < np { r.clone() } else { r.iter().map(|x| -x).collect() };
        let coords: Vec<String> = pos.iter().map(i64::to_string).collect();
        labels.push(format!("{}({})", if k < np { 'e' } else { 'f' }, coords.join(",")));
    }
    let int = |v: i64| f.int(v);
    let mut brackets = Vec::new();
    for i in 0..l {
        for r in 0..2 * np {
            let c = sys.pairing(&index.roots[r], i);
            brackets.push(((i, l + r), vec![(l + r, int(c))]));
        }
    }
    for a in 0..2 * np {
        for b in a + 1..2 * np {
            if b == index.negate(a) {
                // [e_r, e_-r] = h_r for positive r
                let r = &index.roots[a];
                let rr = sys.form(r, r);
                let terms = (0..l)
                    .filter(|&i| r[i] != 0)
                    .map(|i| {
                        let num = r[i] * 2 * sys.lengths[i];
                        debug_assert_eq!(num % rr, 0);
                        (i, int(num / rr))
                    })
                    .collect();
                brackets.push(((l + a, l + b), terms));
            } else if let Some(c) = index.sum(a, b) {
                let n = sc.constant(a, b)?;
                if !n.is_integer() {
                    return Err(LieError::InvalidCartanMatrix("non-integral structure constant".into()));
                }
                brackets.push(((l + a, l + b), vec![(l + c, int(n.to_integer()))]));
            }
        }
    }
    debug_assert_eq!(labels.len(), dim);
    let mut g = LieAlgebra::from_brackets(f, labels, brackets)?;
    g.chevalley = Some(ChevalleyData { system: sys, index });
    Ok(g)
}

impl CartanType {
    pub fn algebra(&self) -> Result<LieAlgebra, LieError> {
        chevalley_basis(&self.cartan_matrix())
    }
}

/// A subspace together with whether bracket closure was checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    pub space: Subspace,
    pub closed: bool,
}

impl Subalgebra {
    /// Verifies closure.
    pub fn new(g: &LieAlgebra, space: Subspace) -> Result<Self, LieError> {
        if !g.is_closed(&space) {
            return Err(LieError::NotClosed);
        }
        Ok(Subalgebra { space, closed: true })
    }

    pub fn whole(g: &LieAlgebra) -> Self {
        Subalgebra { space: Subspace::full(g.field(), g.dim()), closed: true }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_abelian(&self, g: &LieAlgebra) -> bool {
        g.bracket_span(&self.space, &self.space).is_zero()
    }
}

/// Centralizer as a bracket-closed subalgebra.
pub fn centralizer(g: &LieAlgebra, elements: &[Element]) -> Subalgebra {
    Subalgebra { space: g.centralizer(elements), closed: true }
}

/// (center, derived algebra) of a closed subalgebra.
pub fn center_and_derived(g: &LieAlgebra, a: &Subalgebra) -> (Subalgebra, Subalgebra) {
    let center = g.centralizer_in(a.space.basis(), &a.space);
    let derived = g.bracket_span(&a.space, &a.space);
    (Subalgebra { space: center, closed: true }, Subalgebra { space: derived, closed: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> LieAlgebra {
        "A1".parse::<CartanType>().unwrap().algebra().unwrap()
    }

    #[test]
    fn sl2_relations() {
        let g = sl2();
        assert_eq!(g.labels(), &["h1", "e(1)", "f(1)"]);
        let (h, e, f) = (g.basis_element(0), g.basis_element(1), g.basis_element(2));
        let two = |v: &Element| v.iter().map(|x| x.scale(&crate::exactnum::Rational::from_integer(2.into()))).collect::<Element>();
        assert_eq!(g.bracket(&h, &e), two(&e));
        assert_eq!(g.bracket(&h, &f), two(&f).iter().map(|x| -x).collect::<Element>());
        assert_eq!(g.bracket(&e, &f), h);
        let q = CycloField::get(1);
        assert_eq!(g.ad(&h), ExactMatrix::diagonal(q, &[q.int(0), q.int(2), q.int(-2)]));
        assert!(g.ad(&g.zero()).is_zero());
    }

    #[test]
    fn dimensions_and_jacobi() {
        for (name, dim) in [("A1", 3), ("A2", 8), ("B2", 10), ("G2", 14), ("C3", 21), ("B3", 21), ("A3", 15)] {
            let g = name.parse::<CartanType>().unwrap().algebra().unwrap();
            assert_eq!(g.dim(), dim, "{name}");
            g.check_antisymmetry().unwrap();
            g.check_jacobi().unwrap();
            assert_eq!(g.killing_form().rank(), dim, "{name}");
        }
    }

    #[test]
    fn jacobi_larger() {
        for name in ["F4", "D4"] {
            let g = name.parse::<CartanType>().unwrap().algebra().unwrap();
            g.check_jacobi().unwrap();
        }
    }

    #[test]
    fn structure_constants_are_bounded() {
        let g = "G2".parse::<CartanType>().unwrap().algebra().unwrap();
        let n = g.dim();
        let l = 2;
        for i in l..n {
            for j in l..n {
                for (_, c) in g.bracket_basis(i, j) {
                    let q = c.as_rational().unwrap();
                    assert!(q.is_integer() && q.numer().magnitude() <= &3u32.into(), "{c}");
                }
            }
        }
    }

    #[test]
    fn jordan_sl2() {
        let g = sl2();
        let (h, e) = (g.basis_element(0), g.basis_element(1));
        assert_eq!(g.jordan_decomposition(&e).unwrap(), (g.zero(), e.clone()));
        assert_eq!(g.jordan_decomposition(&h).unwrap(), (h.clone(), g.zero()));
        let he: Element = h.iter().zip(&e).map(|(a, b)| a + b).collect();
        assert_eq!(g.jordan_decomposition(&he).unwrap(), (he.clone(), g.zero()));
        assert!(g.is_semisimple_element(&he));
        assert!(!g.is_nilpotent_element(&he));
        assert!(g.is_nilpotent_element(&e));
        assert!(!g.is_semisimple_element(&e));
    }

    #[test]
    fn jordan_mixed_sl3() {
        // h1 + 2 h2 kills e(1,0), so x = h1 + 2 h2 + e(1,0) has both parts nonzero
        let g = "A2".parse::<CartanType>().unwrap().algebra().unwrap();
        let q = g.field();
        let mut x = g.zero();
        x[0] = q.int(1);
        x[1] = q.int(2);
        x[2] = q.int(1);
        let (xs, xn) = g.jordan_decomposition(&x).unwrap();
        let mut expect_s = x.clone();
        expect_s[2] = q.zero();
        assert_eq!(xs, expect_s);
        assert_eq!(xn, g.basis_element(2));
        assert!(g.bracket(&xs, &xn).iter().all(CycloScalar::is_zero));
        assert!(g.is_semisimple_element(&xs));
        assert!(g.is_nilpotent_element(&xn));
    }

    #[test]
    fn centralizers() {
        let g = sl2();
        let q = g.field();
        let (h, e) = (g.basis_element(0), g.basis_element(1));
        assert_eq!(g.centralizer(&[h.clone()]), Subspace::span(q, 3, &[h.clone()]));
        assert_eq!(g.centralizer(&[e.clone()]), Subspace::span(q, 3, &[e.clone()]));
        assert_eq!(g.centralizer(&[]).dim(), 3);
    }

    #[test]
    fn center_and_derived_of_reductive() {
        // z(h1 + 2 h2) in sl3 is gl2: alpha_1 vanishes on it, alpha_2 takes the value 3
        let g = "A2".parse::<CartanType>().unwrap().algebra().unwrap();
        let q = g.field();
        let mut x = g.zero();
        x[0] = q.int(1);
        x[1] = q.int(2);
        let z = centralizer(&g, &[x.clone()]);
        assert_eq!(z.dim(), 4);
        let (c, d) = center_and_derived(&g, &z);
        assert_eq!(c.dim(), 1);
        assert_eq!(d.dim(), 3);
        assert!(c.space.contains(&x));
        assert_eq!(c.space.sum(&d.space), z.space);
    }

    #[test]
    fn subalgebra_structure() {
        let g = "A2".parse::<CartanType>().unwrap().algebra().unwrap();
        // sl2 on the first simple root
        let basis = vec![g.basis_element(0), g.basis_element(2), g.basis_element(5)];
        let s = g.from_subalgebra(&basis).unwrap();
        assert_eq!(s.dim(), 3);
        s.check_jacobi().unwrap();
        assert_eq!(s.killing_form().rank(), 3);
        assert!(g.from_subalgebra(&[g.basis_element(2), g.basis_element(3)]).is_err());
    }

    #[test]
    fn jordan_in_reductive_subalgebra() {
        // gl2 inside sl3; x = c + e with c central in gl2
        let g = "A2".parse::<CartanType>().unwrap().algebra().unwrap();
        let q = g.field();
        let mut c = g.zero();
        c[0] = q.int(1);
        c[1] = q.int(2);
        let z = g.centralizer(&[c.clone()]);
        let gl2 = g.from_subalgebra(z.basis()).unwrap();
        let solver = BasisSolver::new(q, g.dim(), z.basis()).unwrap();
        let cz = solver.coordinates(&c).unwrap();
        let ez = solver.coordinates(&g.basis_element(2)).unwrap();
        let x: Element = cz.iter().zip(&ez).map(|(a, b)| a + b).collect();
        let (xs, xn) = gl2.jordan_decomposition(&x).unwrap();
        assert_eq!(xs, cz);
        assert_eq!(xn, ez);
    }

    #[test]
    fn formatting() {
        let g = sl2();
        let q = g.field();
        let x = vec![q.int(1), q.int(-2), q.frac(1, 2)];
        assert_eq!(g.format_element(&x), "h1 - 2*e(1) + 1/2*f(1)");
        assert_eq!(g.format_element(&g.zero()), "0");
    }
}
