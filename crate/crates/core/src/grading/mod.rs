//! Z/m-gradings: Kac coordinates, the automorphism theta, graded Jordan decomposition,
//! graded centralizers and degree shifting.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rand::Rng;

use crate::exactnum::{BasisSolver, CycloField, CycloScalar, ExactError, ExactMatrix, Subspace};
use crate::liealg::{center_and_derived, CartanType, Element, LieAlgebra, LieError, Subalgebra};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("Kac coordinates are all zero")]
    AllZero,
    #[error("expected {expected} Kac coordinates, got {got}")]
    CoordinateCount { expected: usize, got: usize },
    #[error("Kac coordinates give m = {computed}, but m = {declared} was declared")]
    OrderMismatch { computed: u32, declared: u32 },
    #[error("malformed Kac coordinates: {0}")]
    Parse(String),
    #[error("theta does not preserve the bracket on basis pair ({0}, {1})")]
    NotAutomorphism(usize, usize),
    #[error("theta^{0} is not the identity")]
    WrongOrder(u32),
    #[error("theta is not diagonalizable with eigenvalues among the m-th roots of unity")]
    NotDiagonalizable,
    #[error("components do not form a direct sum decomposition")]
    NotDirectSum,
    #[error("[g_{0}, g_{1}] is not contained in g_{2}")]
    NotGraded(usize, usize, usize),
    #[error("element is not homogeneous of degree {0}")]
    NotHomogeneous(usize),
    #[error("elements {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("element {0} is not semisimple")]
    NotSemisimple(usize),
    #[error("shift by a multiple of m")]
    ZeroShift,
    #[error("field Q(w_{field}) does not contain the {m}-th roots of unity")]
    FieldTooSmall { field: u32, m: u32 },
}

/// Inner automorphism of finite order given by Kac coordinates s_0, ..., s_l.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KacSpec {
    pub cartan_type: CartanType,
    pub coords: Vec<u32>,
}

impl KacSpec {
    pub fn new(cartan_type: CartanType, coords: Vec<u32>) -> Result<Self, GradingError> {
        let expected = cartan_type.rank + 1;
        if coords.len() != expected {
            return Err(GradingError::CoordinateCount { expected, got: coords.len() });
        }
        if coords.iter().all(|&s| s == 0) {
            return Err(GradingError::AllZero);
        }
        Ok(KacSpec { cartan_type, coords })
    }

    /// Parses coordinates such as `1,1,1` or `1 1 1`.
    pub fn parse(cartan_type: CartanType, coords: &str) -> Result<Self, GradingError> {
        let parsed = coords
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| GradingError::Parse(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if parsed.iter().any(|&s| s > 1000) {
            return Err(GradingError::Parse("coordinate too large".into()));
        }
        Self::new(cartan_type, parsed)
    }

    /// Labels of the affine diagram: 1 for the extra node, then the highest-root coefficients.
    pub fn marks(&self) -> Result<Vec<u32>, GradingError> {
        let sys = crate::liealg::RootSystem::from_cartan_matrix(&self.cartan_type.cartan_matrix())?;
        let mut marks = vec![1];
        marks.extend(sys.highest_root().iter().map(|&a| a as u32));
        Ok(marks)
    }

    pub fn order(&self) -> Result<u32, GradingError> {
        let m: u64 = self.marks()?.iter().zip(&self.coords).map(|(&a, &s)| a as u64 * s as u64).sum();
        u32::try_from(m).map_err(|_| GradingError::Parse(format!("order {m} is too large")))
    }
}

impl fmt::Display for KacSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(u32::to_string).collect();
        write!(f, "{} ({})", self.cartan_type, c.join(","))
    }
}

impl FromStr for KacSpec {
    type Err = GradingError;

    /// `A2 1,1,1`
    fn from_str(s: &str) -> Result<Self, GradingError> {
        let s = s.trim();
        let (ty, rest) = s.split_once(char::is_whitespace).ok_or_else(|| GradingError::Parse(s.to_string()))?;
        let ty: CartanType = ty.parse()?;
        KacSpec::parse(ty, rest.trim().trim_start_matches('(').trim_end_matches(')'))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAutomorphism {
    pub order: u32,
    pub matrix: ExactMatrix,
}

impl GradedAutomorphism {
    /// Checks bracket preservation on all basis pairs and theta^order = 1.
    pub fn validate(&self, g: &LieAlgebra) -> Result<(), GradingError> {
        let t = &self.matrix;
        if !t.pow(self.order as u64).is_identity() {
            return Err(GradingError::WrongOrder(self.order));
        }
        let n = g.dim();
        let cols: Vec<Element> = (0..n).map(|j| t.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = t.mul_vec(&g.bracket(&g.basis_element(i), &g.basis_element(j)));
                if lhs != g.bracket(&cols[i], &cols[j]) {
                    return Err(GradingError::NotAutomorphism(i, j));
                }
            }
        }
        Ok(())
    }
}

/// A Lie algebra with a Z/m-grading. Scalars live in Q(w_N) for a multiple N of m.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    algebra: LieAlgebra,
    m: u32,
    components: Vec<Subspace>,
    theta: GradedAutomorphism,
    /// Degree of each basis vector when the basis is homogeneous.
    basis_degrees: Option<Vec<usize>>,
    kac: Option<KacSpec>,
}

impl GradedAlgebra {
    /// Grading in which basis vector i has degree `degrees[i]` (mod m).
    pub fn from_basis_degrees(algebra: LieAlgebra, m: u32, degrees: Vec<usize>) -> Result<Self, GradingError> {
        let field = algebra.field();
        if m == 0 || field.order() % m != 0 {
            return Err(GradingError::FieldTooSmall { field: field.order(), m });
        }
        let n = algebra.dim();
        let degrees: Vec<usize> = degrees.into_iter().map(|d| d % m as usize).collect();
        for i in 0..n {
            for j in i + 1..n {
                let target = (degrees[i] + degrees[j]) % m as usize;
                if algebra.bracket_basis(i, j).iter().any(|(k, _)| degrees[*k] != target) {
                    return Err(GradingError::NotGraded(degrees[i], degrees[j], target));
                }
            }
        }
        let components = (0..m as usize)
            .map(|d| {
                let idx: Vec<usize> = (0..n).filter(|&i| degrees[i] == d).collect();
                Subspace::coordinate(field, n, &idx)
            })
            .collect();
        let omega = field.root_of_unity(m)?;
        let diag: Vec<CycloScalar> = degrees.iter().map(|&d| omega.pow(d as u64)).collect();
        let theta = GradedAutomorphism { order: m, matrix: ExactMatrix::diagonal(field, &diag) };
        Ok(GradedAlgebra { algebra, m, components, theta, basis_degrees: Some(degrees), kac: None })
    }

    /// Grading from arbitrary component subspaces; checks the direct sum and [g_i, g_j] in g_(i+j).
    pub fn from_components(algebra: LieAlgebra, m: u32, components: Vec<Subspace>) -> Result<Self, GradingError> {
        let field = algebra.field();
        if m == 0 || field.order() % m != 0 {
            return Err(GradingError::FieldTooSmall { field: field.order(), m });
        }
        if components.len() != m as usize {
            return Err(GradingError::NotDirectSum);
        }
        let n = algebra.dim();
        let mut all: Vec<Element> = Vec::new();
        for c in &components {
            all.extend(c.basis().iter().cloned());
        }
        if all.len() != n || BasisSolver::new(field, n, &all).is_none() {
            return Err(GradingError::NotDirectSum);
        }
        let omega = field.root_of_unity(m)?;
        let p = ExactMatrix::from_columns(field, n, &all);
        let diag: Vec<CycloScalar> = components
            .iter()
            .enumerate()
            .flat_map(|(d, c)| std::iter::repeat(omega.pow(d as u64)).take(c.dim()))
            .collect();
        let pinv = p.inverse().ok_or(GradingError::NotDirectSum)?;
        let matrix = &(&p * &ExactMatrix::diagonal(field, &diag)) * &pinv;
        let g = GradedAlgebra {
            algebra,
            m,
            components,
            theta: GradedAutomorphism { order: m, matrix },
            basis_degrees: None,
            kac: None,
        };
        g.check_closure()?;
        Ok(g)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn field(&self) -> &'static CycloField {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
    /// The primitive m-th root of unity w_N^(N/m).
    pub fn omega(&self) -> CycloScalar {
        self.field().root_of_unity(self.m).expect("checked at construction")
    }
    pub fn components(&self) -> &[Subspace] {
        &self.components
    }
    pub fn component(&self, d: i64) -> &Subspace {
        &self.components[self.wrap(d)]
    }
    pub fn theta(&self) -> &GradedAutomorphism {
        &self.theta
    }
    pub fn basis_degrees(&self) -> Option<&[usize]> {
        self.basis_degrees.as_deref()
    }
    pub fn kac(&self) -> Option<&KacSpec> {
        self.kac.as_ref()
    }
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(Subspace::dim).collect()
    }

    pub fn wrap(&self, d: i64) -> usize {
        d.rem_euclid(self.m as i64) as usize
    }

    /// Components of x, one per degree.
    pub fn project(&self, x: &[CycloScalar]) -> Vec<Element> {
        let f = self.field();
        let n = self.dim();
        if let Some(deg) = &self.basis_degrees {
            let mut out = vec![vec![f.zero(); n]; self.m as usize];
            for (i, c) in x.iter().enumerate() {
                out[deg[i]][i] = c.clone();
            }
            return out;
        }
        let mut all: Vec<Element> = Vec::new();
        for c in &self.components {
            all.extend(c.basis().iter().cloned());
        }
        let solver = BasisSolver::new(f, n, &all).expect("direct sum");
        let coords = solver.coordinates(x).expect("spanning");
        let mut start = 0;
        self.components
            .iter()
            .map(|c| {
                let part = c.combine(&coords[start..start + c.dim()]);
                start += c.dim();
                part
            })
            .collect()
    }

    /// The degree of a nonzero homogeneous element.
    pub fn homogeneous_degree(&self, x: &[CycloScalar]) -> Option<usize> {
        let nonzero: Vec<usize> = self
            .project(x)
            .iter()
            .enumerate()
            .filter(|(_, p)| p.iter().any(|c| !c.is_zero()))
            .map(|(d, _)| d)
            .collect();
        (nonzero.len() == 1).then(|| nonzero[0])
    }

    pub fn is_in_component(&self, x: &[CycloScalar], d: i64) -> bool {
        self.component(d).contains(x)
    }

    /// Exhaustive check of [g_i, g_j] in g_(i+j) on component bases.
    pub fn check_closure(&self) -> Result<(), GradingError> {
        let m = self.m as usize;
        for i in 0..m {
            for j in i..m {
                let target = &self.components[(i + j) % m];
                for x in self.components[i].basis() {
                    for y in self.components[j].basis() {
                        if !target.contains(&self.algebra.bracket(x, y)) {
                            return Err(GradingError::NotGraded(i, j, (i + j) % m));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Random element of g_d: each basis vector of the component gets a nonzero integer in
    /// [-range, range] with probability `density`.
    pub fn random_in_component<R: Rng>(&self, d: i64, rng: &mut R, range: i64, density: f64) -> Element {
        let f = self.field();
        let comp = self.component(d);
        let coords: Vec<CycloScalar> = (0..comp.dim())
            .map(|_| {
                if rng.gen_bool(density) {
                    let mut v = 0;
                    while v == 0 {
                        v = rng.gen_range(-range..=range);
                    }
                    f.int(v)
                } else {
                    f.zero()
                }
            })
            .collect();
        comp.combine(&coords)
    }

    /// The graded algebra on a subalgebra given by its graded pieces; piece p gets degree p
    /// modulo the number of pieces.
    /// Returns the algebra together with the basis (in this algebra) used for it.
    pub fn restrict(&self, pieces: &[Subspace]) -> Result<(GradedAlgebra, Vec<Element>), GradingError> {
        let mut basis = Vec::new();
        let mut degrees = Vec::new();
        for (d, p) in pieces.iter().enumerate() {
            basis.extend(p.basis().iter().cloned());
            degrees.extend(std::iter::repeat(d).take(p.dim()));
        }
        let sub = self.algebra.from_subalgebra(&basis)?;
        Ok((GradedAlgebra::from_basis_degrees(sub, pieces.len() as u32, degrees)?, basis))
    }
}

/// Inner grading from Kac coordinates: deg e_i = s_i, deg f_i = -s_i, Cartan part in degree 0.
pub fn grade_from_kac(spec: &KacSpec) -> Result<GradedAlgebra, GradingError> {
    grade_from_kac_in(spec, None)
}

/// As `grade_from_kac`, with scalars in Q(w_N) for a chosen multiple N of m.
pub fn grade_from_kac_in(spec: &KacSpec, field_order: Option<u32>) -> Result<GradedAlgebra, GradingError> {
    let m = spec.order()?;
    let n = field_order.unwrap_or(m);
    if n % m != 0 {
        return Err(GradingError::FieldTooSmall { field: n, m });
    }
    let base = spec.cartan_type.algebra()?;
    let algebra = base.lift_to(CycloField::get(n))?;
    let data = algebra.chevalley().expect("Chevalley algebra").clone();
    let l = data.rank();
    let s = &spec.coords[1..];
    let mut degrees = vec![0usize; algebra.dim()];
    for (k, r) in data.index.roots.iter().enumerate() {
        let d: i64 = r.iter().zip(s).map(|(a, b)| a * *b as i64).sum();
        degrees[l + k] = d.rem_euclid(m as i64) as usize;
    }
    let mut g = GradedAlgebra::from_basis_degrees(algebra, m, degrees)?;
    g.kac = Some(spec.clone());
    Ok(g)
}

/// Eigenspace decomposition of theta: component i is the w^i eigenspace.
pub fn grading_from_theta(g: &LieAlgebra, theta: &GradedAutomorphism) -> Result<GradedAlgebra, GradingError> {
    let field = g.field();
    let m = theta.order;
    if m == 0 || field.order() % m != 0 {
        return Err(GradingError::FieldTooSmall { field: field.order(), m });
    }
    theta.validate(g)?;
    let n = g.dim();
    let omega = field.root_of_unity(m)?;
    let mut components = Vec::with_capacity(m as usize);
    for i in 0..m {
        let shifted = &theta.matrix - &ExactMatrix::scalar(field, n, &omega.pow(i as u64));
        components.push(Subspace::kernel_of(&shifted));
    }
    if components.iter().map(Subspace::dim).sum::<usize>() != n {
        return Err(GradingError::NotDiagonalizable);
    }
    let mut out = GradedAlgebra::from_components(g.clone(), m, components)?;
    out.theta = theta.clone();
    Ok(out)
}

/// theta acting as w^i on component i, with the automorphism checks run.
pub fn theta_from_grading(g: &GradedAlgebra) -> Result<GradedAutomorphism, GradingError> {
    let theta = g.theta.clone();
    if g.basis_degrees.is_some() {
        // diagonal in a homogeneous basis: closure was checked on the structure constants
        if !theta.matrix.pow(theta.order as u64).is_identity() {
            return Err(GradingError::WrongOrder(theta.order));
        }
    } else {
        theta.validate(&g.algebra)?;
    }
    Ok(theta)
}

/// Jordan decomposition of a degree-one element; both parts are checked to be of degree one.
pub fn graded_jordan(g: &GradedAlgebra, x: &[CycloScalar]) -> Result<(Element, Element), GradingError> {
    if !g.is_in_component(x, 1) {
        return Err(GradingError::NotHomogeneous(1));
    }
    let (xs, xn) = g.algebra.jordan_decomposition(x)?;
    if !g.is_in_component(&xs, 1) || !g.is_in_component(&xn, 1) {
        return Err(GradingError::NotHomogeneous(1));
    }
    Ok((xs, xn))
}

/// z_g(h) with its graded pieces and the per-degree split into center and derived parts.
#[derive(Clone, Debug)]
pub struct GradedCentralizer {
    pub total: Subalgebra,
    pub pieces: Vec<Subspace>,
    pub center: Vec<Subspace>,
    pub derived: Vec<Subspace>,
}

impl GradedCentralizer {
    pub fn center_total(&self) -> Subspace {
        sum_all(&self.center, self.total.space.field(), self.total.space.ambient())
    }
    pub fn derived_total(&self) -> Subspace {
        sum_all(&self.derived, self.total.space.field(), self.total.space.ambient())
    }
}

fn sum_all(spaces: &[Subspace], field: &'static CycloField, ambient: usize) -> Subspace {
    spaces.iter().fold(Subspace::zero(field, ambient), |acc, s| acc.sum(s))
}

/// Checks that the listed degree-one elements commute and are semisimple.
pub fn check_toral_degree_one(g: &GradedAlgebra, h: &[Element]) -> Result<(), GradingError> {
    for (i, x) in h.iter().enumerate() {
        if x.len() != g.dim() {
            return Err(LieError::DimensionMismatch { expected: g.dim(), got: x.len() }.into());
        }
        if !g.is_in_component(x, 1) {
            return Err(GradingError::NotHomogeneous(1));
        }
        if !g.algebra.is_semisimple_element(x) {
            return Err(GradingError::NotSemisimple(i));
        }
        for (j, y) in h.iter().enumerate().skip(i + 1) {
            if g.algebra.bracket(x, y).iter().any(|c| !c.is_zero()) {
                return Err(GradingError::NotCommuting(i, j));
            }
        }
    }
    Ok(())
}

pub fn graded_centralizer(g: &GradedAlgebra, h: &[Element]) -> Result<GradedCentralizer, GradingError> {
    check_toral_degree_one(g, h)?;
    graded_centralizer_unchecked(g, h)
}

/// As `graded_centralizer` without the input checks (h must still be theta-homogeneous).
pub fn graded_centralizer_unchecked(g: &GradedAlgebra, h: &[Element]) -> Result<GradedCentralizer, GradingError> {
    let alg = &g.algebra;
    let pieces: Vec<Subspace> = g.components.iter().map(|c| alg.centralizer_in(h, c)).collect();
    let total = sum_all(&pieces, g.field(), g.dim());
    if total != alg.centralizer(h) {
        return Err(GradingError::NotDirectSum);
    }
    let total = Subalgebra { space: total, closed: true };
    let (z, d) = center_and_derived(alg, &total);
    let center: Vec<Subspace> = g.components.iter().map(|c| z.space.intersection(c)).collect();
    let derived: Vec<Subspace> = g.components.iter().map(|c| d.space.intersection(c)).collect();
    for ((p, zc), dc) in pieces.iter().zip(&center).zip(&derived) {
        if zc.dim() + dc.dim() != p.dim() || zc.sum(dc) != *p {
            return Err(GradingError::NotDirectSum);
        }
    }
    Ok(GradedCentralizer { total, pieces, center, derived })
}

/// The Z/m'-graded algebra with component p equal to g_(pj), m' = m / gcd(m, j).
pub fn shift_grading(g: &GradedAlgebra, j: i64) -> Result<GradedAlgebra, GradingError> {
    let m = g.m as i64;
    let jm = j.rem_euclid(m);
    if jm == 0 {
        return Err(GradingError::ZeroShift);
    }
    let gcd = m.gcd(&jm);
    let new_m = (m / gcd) as u32;
    if gcd == 1 {
        if let Some(deg) = &g.basis_degrees {
            // p j = d mod m, so p = d j^{-1}
            let inv = (1..m).find(|&p| (p * jm) % m == 1).expect("unit");
            let degrees: Vec<usize> = deg.iter().map(|&d| ((d as i64 * inv) % m) as usize).collect();
            return GradedAlgebra::from_basis_degrees(g.algebra.clone(), new_m, degrees);
        }
        let components: Vec<Subspace> = (0..m).map(|p| g.component(p * jm).clone()).collect();
        return GradedAlgebra::from_components(g.algebra.clone(), new_m, components);
    }
    let pieces: Vec<Subspace> = (0..new_m as i64).map(|p| g.component(p * jm).clone()).collect();
    Ok(g.restrict(&pieces)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn kac(s: &str) -> GradedAlgebra {
        grade_from_kac(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn kac_dimensions() {
        assert_eq!(kac("A1 1,1").dims(), vec![1, 2]);
        assert_eq!(kac("A2 1,1,1").dims(), vec![2, 3, 3]);
        assert_eq!(kac("A1 1,0").dims(), vec![3]);
        let g2 = kac("G2 1,1,1");
        assert_eq!(g2.m(), 1 + 3 + 2);
        assert_eq!(g2.dims().iter().sum::<usize>(), 14);
        g2.check_closure().unwrap();
    }

    #[test]
    fn kac_errors() {
        assert_eq!("A2 0,0,0".parse::<KacSpec>(), Err(GradingError::AllZero));
        assert!(matches!("A2 1,1".parse::<KacSpec>(), Err(GradingError::CoordinateCount { .. })));
        assert!("X2 1,1,1".parse::<KacSpec>().is_err());
    }

    #[test]
    fn theta_round_trip() {
        let g = kac("A2 1,1,1");
        let theta = theta_from_grading(&g).unwrap();
        let back = grading_from_theta(g.algebra(), &theta).unwrap();
        assert_eq!(back.components(), g.components());
        assert!(theta.matrix.pow(3).is_identity());
        let sl2 = kac("A1 1,1");
        let q = sl2.field();
        assert_eq!(theta_from_grading(&sl2).unwrap().matrix, ExactMatrix::diagonal(q, &[q.int(1), q.int(-1), q.int(-1)]));
    }

    #[test]
    fn graded_jordan_sl2() {
        let g = kac("A1 1,1");
        let q = g.field();
        let e = g.algebra().basis_element(1);
        assert_eq!(graded_jordan(&g, &e).unwrap(), (g.algebra().zero(), e.clone()));
        let ef = vec![q.zero(), q.one(), q.one()];
        assert_eq!(graded_jordan(&g, &ef).unwrap(), (ef.clone(), g.algebra().zero()));
        assert!(graded_jordan(&g, &g.algebra().basis_element(0)).is_err());
    }

    #[test]
    fn centralizer_sl3() {
        let g = kac("A2 1,1,1");
        let q = g.field();
        // e(1,0) + e(0,1) + f(1,1)
        let mut e = g.algebra().zero();
        e[2] = q.one();
        e[3] = q.one();
        e[7] = q.one();
        let z = graded_centralizer(&g, &[e.clone()]).unwrap();
        assert_eq!(z.total.dim(), 2);
        let dims: Vec<usize> = z.pieces.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![0, 1, 1]);
        assert!(z.pieces[1].contains(&e));
        assert!(z.derived.iter().all(Subspace::is_zero));
    }

    #[test]
    fn shifting() {
        let g = kac("A1 1,1");
        let same = shift_grading(&g, 1).unwrap();
        assert_eq!(same.components(), g.components());
        assert!(shift_grading(&g, 2).is_err());
        // C2 marks are 1,2,1
        let g4 = grade_from_kac(&KacSpec::new("C2".parse().unwrap(), vec![2, 1, 0]).unwrap()).unwrap();
        assert_eq!(g4.m(), 4);
        let half = shift_grading(&g4, 2).unwrap();
        assert_eq!(half.m(), 2);
        assert_eq!(half.component(1).dim(), g4.component(2).dim());
        assert_eq!(half.dim(), g4.component(0).dim() + g4.component(2).dim());
        half.check_closure().unwrap();
        let three = shift_grading(&g4, 3).unwrap();
        assert_eq!(three.component(1).dim(), g4.component(3).dim());
    }

    #[test]
    fn random_elements_are_homogeneous() {
        let g = kac("A2 1,1,1");
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let x = g.random_in_component(1, &mut rng, 3, 0.7);
            assert!(g.is_in_component(&x, 1));
        }
    }
}
