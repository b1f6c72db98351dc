//! Cartan subspaces of the degree-one component: the centralizer criterion, a seeded
//! constructive search, algebraic closures and the maximal-rank test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{roots_in_field, simultaneous_eigenspaces, CycloField, CycloScalar, ExactError, ExactMatrix, Subspace};
use crate::grading::{check_toral_degree_one, graded_centralizer_unchecked, graded_jordan, GradedAlgebra, GradingError};
use crate::liealg::{Element, LieAlgebra, LieError};

pub const DEFAULT_RETRY_CAP: usize = 64;

/// Random combinations tried against D(z)_1 before the Engel chain.
const NILPOTENCY_SAMPLES: usize = 8;

/// Largest grid tried when the Engel chain does not certify nilpotency.
pub const GRID_POINT_CAP: usize = 20_000;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CartanError {
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("no Cartan subspace after {0}")]
    RetryBudget(SearchStats),
    #[error("basis elements are linearly dependent")]
    DependentBasis,
}

/// Outcomes of rejected samples during the search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub attempts: usize,
    pub zero_semisimple_part: usize,
    pub already_in_span: usize,
    pub not_split: usize,
    pub inconclusive: usize,
    pub final_range: i64,
    /// Basis vectors and pairwise sums tried before random sampling; not counted as attempts.
    pub structured: usize,
}

impl std::fmt::Display for SearchStats {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} attempts (zero semisimple part {}, in span {}, eigenvalues outside the field {}, inconclusive {}; range up to {}; {} structured candidates)",
            self.attempts,
            self.zero_semisimple_part,
            self.already_in_span,
            self.not_split,
            self.inconclusive,
            self.final_range,
            self.structured
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CartanCertificate {
    /// Z(z)_1 = h and D(z)_1 is certified nilpotent by a vanishing Engel chain of this length.
    Verified { engel_length: usize },
    /// Z(z)_1 = h and ad is nilpotent at every point of a lattice large enough to force the
    /// characteristic polynomial of ad on D(z)_1 to be t^n identically.
    VerifiedByGrid { points: usize },
    /// Z(z)_1 differs from h.
    CenterMismatch { center_dim: usize, h_dim: usize },
    /// An element of D(z)_1 that is not nilpotent.
    NonNilpotent(Element),
    /// Every sample was nilpotent, the Engel chain did not reach zero and the grid was too large.
    EngelInconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanCheck {
    pub holds: bool,
    pub certificate: CartanCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanSubspace {
    pub basis: Vec<Element>,
    pub space: Subspace,
}

impl CartanSubspace {
    pub fn new(g: &GradedAlgebra, basis: Vec<Element>) -> Result<Self, CartanError> {
        let space = Subspace::span(g.field(), g.dim(), &basis);
        if space.dim() != basis.len() {
            return Err(CartanError::DependentBasis);
        }
        Ok(CartanSubspace { basis, space })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// Lemma-style criterion: h is a Cartan subspace iff Z(z_g(h))_1 = h and D(z_g(h))_1 is nilpotent.
pub fn is_cartan_subspace(g: &GradedAlgebra, h: &[Element]) -> Result<CartanCheck, CartanError> {
    check_toral_degree_one(g, h)?;
    let hspace = Subspace::span(g.field(), g.dim(), h);
    let z = graded_centralizer_unchecked(g, h)?;
    let center1 = &z.center[g.wrap(1)];
    if center1 != &hspace {
        return Ok(CartanCheck {
            holds: false,
            certificate: CartanCertificate::CenterMismatch { center_dim: center1.dim(), h_dim: hspace.dim() },
        });
    }
    let d1 = &z.derived[g.wrap(1)];
    let alg = g.algebra();
    for b in d1.basis() {
        if !alg.is_nilpotent_element(b) {
            return Ok(CartanCheck { holds: false, certificate: CartanCertificate::NonNilpotent(b.clone()) });
        }
    }
    if d1.dim() > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(d1.dim() as u64);
        for _ in 0..NILPOTENCY_SAMPLES {
            let x = sample_in(d1, &mut rng, 3, 0.5);
            if !alg.is_nilpotent_element(&x) {
                return Ok(CartanCheck { holds: false, certificate: CartanCertificate::NonNilpotent(x) });
            }
        }
    }
    if let Some(len) = engel_chain(alg, d1) {
        return Ok(CartanCheck { holds: true, certificate: CartanCertificate::Verified { engel_length: len } });
    }
    let certificate = match grid_nilpotency(alg, d1, GRID_POINT_CAP) {
        GridOutcome::AllNilpotent(points) => CartanCertificate::VerifiedByGrid { points },
        GridOutcome::Witness(x) => CartanCertificate::NonNilpotent(x),
        GridOutcome::TooLarge => CartanCertificate::EngelInconclusive,
    };
    Ok(CartanCheck { holds: matches!(certificate, CartanCertificate::VerifiedByGrid { .. }), certificate })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridOutcome {
    AllNilpotent(usize),
    Witness(Element),
    TooLarge,
}

/// Decides whether every element of `space` is ad-nilpotent.
///
/// ad(x) is nilpotent iff tr(ad(x)^k) = 0 for k = 1..n. With x = t_1 v_1 + .. + t_d v_d these
/// traces are homogeneous in t, so each vanishes iff it vanishes for t_1 = 1, where it has total
/// degree at most D = max rank of ad(x): n - rank(g) for a Chevalley algebra, n - 1 otherwise.
/// A polynomial of total degree at most D in d - 1 variables vanishing on the lattice
/// {s in N^(d-1) : |s| <= D} is zero, so those points suffice.
pub fn grid_nilpotency(alg: &LieAlgebra, space: &Subspace, cap: usize) -> GridOutcome {
    let d = space.dim();
    if d == 0 {
        return GridOutcome::AllNilpotent(0);
    }
    let n = alg.dim();
    let degree = n.saturating_sub(alg.chevalley().map_or(1, |c| c.rank().max(1)));
    let free = d - 1;
    // C(degree + free, free), the lattice size
    let mut total: usize = 1;
    for i in 1..=free {
        match total.checked_mul(degree + i) {
            Some(t) if t / i <= cap => total = t / i,
            _ => return GridOutcome::TooLarge,
        }
    }
    let field = alg.field();
    let mut digits = vec![0usize; free];
    let mut visited = 0usize;
    loop {
        visited += 1;
        let mut coords = vec![field.one(); 1];
        coords.extend(digits.iter().map(|&v| field.int(v as i64)));
        let x = space.combine(&coords);
        if !alg.is_nilpotent_element(&x) {
            return GridOutcome::Witness(x);
        }
        // next point with digit sum at most `degree`
        let mut sum: usize = digits.iter().sum();
        let mut i = 0;
        while i < free {
            if sum < degree {
                digits[i] += 1;
                break;
            }
            sum -= digits[i];
            digits[i] = 0;
            i += 1;
        }
        if i == free {
            break;
        }
    }
    debug_assert_eq!(visited, total);
    GridOutcome::AllNilpotent(total)
}

/// Length k at which V_0 = g, V_(i+1) = sum_v ad(v) V_i (v over a basis of `space`) reaches zero.
/// Reaching zero means every product of k operators ad(v) vanishes, so every element of the span
/// is ad-nilpotent.
pub fn engel_chain(alg: &LieAlgebra, space: &Subspace) -> Option<usize> {
    let n = alg.dim();
    let mut current = Subspace::full(alg.field(), n);
    let mut steps = 0;
    while !current.is_zero() {
        if space.is_zero() {
            return Some(steps + 1);
        }
        let mut vecs = Vec::new();
        for v in space.basis() {
            for w in current.basis() {
                let b = alg.bracket(v, w);
                if b.iter().any(|c| !c.is_zero()) {
                    vecs.push(b);
                }
            }
        }
        let next = Subspace::span(alg.field(), n, &vecs);
        if next.dim() == current.dim() {
            return None;
        }
        current = next;
        steps += 1;
    }
    Some(steps)
}

/// Sparse random element of a subspace; coordinates are nonzero integers in [-range, range].
fn sample_in<R: Rng>(space: &Subspace, rng: &mut R, range: i64, density: f64) -> Element {
    let f = space.field();
    let k = space.dim();
    loop {
        let coords: Vec<CycloScalar> = (0..k)
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
        if k == 0 || coords.iter().any(|c| !c.is_zero()) {
            return space.combine(&coords);
        }
    }
}

/// Whether every eigenvalue of ad(x) lies in the coefficient field.
fn adjoint_splits(alg: &LieAlgebra, x: &[CycloScalar]) -> Result<bool, CartanError> {
    let mp = alg.ad(x).minimal_polynomial();
    match roots_in_field(&mp) {
        Ok(search) => Ok(search.splits()),
        Err(ExactError::RootSearchCap(_)) => Ok(false),
        Err(e) => Err(e.into()),
    }
}

/// Largest pool for which pairwise sums of basis vectors are tried.
const PAIR_SUM_LIMIT: usize = 24;

/// The pool's canonical basis vectors, then their pairwise sums when the pool is small.
fn structured_candidates(pool: &Subspace) -> Vec<Element> {
    let basis = pool.basis();
    let mut out: Vec<Element> = basis.to_vec();
    if basis.len() <= PAIR_SUM_LIMIT {
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                out.push(basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect());
            }
        }
    }
    out
}

/// Semisimple part of x when it is nonzero, outside `span` and split.
fn usable_semisimple_part(g: &GradedAlgebra, span: &Subspace, x: &[CycloScalar]) -> Result<Option<Element>, CartanError> {
    if g.algebra().is_nilpotent_element(x) {
        return Ok(None);
    }
    let (xs, _) = graded_jordan(g, x)?;
    if xs.iter().all(CycloScalar::is_zero) || span.contains(&xs) || !adjoint_splits(g.algebra(), &xs)? {
        return Ok(None);
    }
    Ok(Some(xs))
}

pub fn cartan_subspace(g: &GradedAlgebra, seed: u64) -> Result<CartanSubspace, CartanError> {
    cartan_subspace_with_cap(g, seed, DEFAULT_RETRY_CAP)
}

/// Grows h one semisimple element at a time, sampling from the degree-one part of z_g(h).
/// Only elements whose adjoint spectrum lies in the coefficient field are accepted, so the
/// weights of the result can be computed exactly.
pub fn cartan_subspace_with_cap(g: &GradedAlgebra, seed: u64, retry_cap: usize) -> Result<CartanSubspace, CartanError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alg = g.algebra();
    let mut h: Vec<Element> = Vec::new();
    let mut stats = SearchStats { final_range: 1, ..SearchStats::default() };
    let mut failures = 0usize;
    loop {
        let check = is_cartan_subspace(g, &h)?;
        if check.holds {
            return CartanSubspace::new(g, h);
        }
        let z = graded_centralizer_unchecked(g, &h)?;
        let pool = &z.pieces[g.wrap(1)];
        let span = Subspace::span(g.field(), g.dim(), &h);
        if pool.dim() == span.dim() {
            stats.final_range = 1 + (failures / 16) as i64;
            return Err(CartanError::RetryBudget(stats));
        }
        let mut accepted = None;
        for x in structured_candidates(pool) {
            stats.structured += 1;
            if let Some(xs) = usable_semisimple_part(g, &span, &x)? {
                accepted = Some(xs);
                break;
            }
        }
        let accepted = match accepted {
            Some(xs) => xs,
            None => loop {
                if failures >= retry_cap {
                    stats.final_range = 1 + (failures / 16) as i64;
                    return Err(CartanError::RetryBudget(stats));
                }
                stats.attempts += 1;
                let range = 1 + (failures / 16) as i64;
                // alternate dense and sparse samples; dense +-1 vectors tend to have split spectra
                let density = if stats.attempts % 2 == 1 { 1.0 } else { 0.5 };
                let x = sample_in(pool, &mut rng, range, density);
                let (xs, _) = graded_jordan(g, &x)?;
                if xs.iter().all(CycloScalar::is_zero) {
                    stats.zero_semisimple_part += 1;
                } else if span.contains(&xs) {
                    stats.already_in_span += 1;
                } else if !adjoint_splits(alg, &xs)? {
                    stats.not_split += 1;
                } else {
                    break xs;
                }
                failures += 1;
            },
        };
        h.push(accepted);
        if check.certificate == CartanCertificate::EngelInconclusive {
            stats.inconclusive += 1;
        }
    }
}

/// Smallest algebraic subalgebra containing h, with its graded pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicClosure {
    pub space: Subspace,
    pub pieces: Vec<Subspace>,
    /// Degrees with a nonzero piece.
    pub support: Vec<usize>,
    /// Whether every supported degree is coprime to m.
    pub coprime_support: bool,
}

/// Joint weights of ad(h): one eigenvalue vector (over the basis of h) per joint eigenspace.
pub fn adjoint_weights(alg: &LieAlgebra, h: &[Element]) -> Result<Vec<(Vec<CycloScalar>, Subspace)>, ExactError> {
    let mats: Vec<ExactMatrix> = h.iter().map(|x| alg.ad(x)).collect();
    let blocks = simultaneous_eigenspaces(alg.field(), alg.dim(), &mats)?;
    Ok(blocks.into_iter().map(|b| (b.eigenvalues, b.space)).collect())
}

/// The hull: operators diagonal on the weight spaces of h whose eigenvalues satisfy every
/// integer relation among the weights, intersected with ad(g).
pub fn algebraic_closure(g: &GradedAlgebra, h: &[Element]) -> Result<AlgebraicClosure, CartanError> {
    let alg = g.algebra();
    let field = g.field();
    let n = g.dim();
    let weights = adjoint_weights(alg, h)?;
    let j = weights.len();
    // Rational relations sum n_j sigma_j = 0: expand each weight over Q.
    let q = CycloField::get(1);
    let phi = field.degree();
    let rows = h.len() * phi;
    let mut relation_matrix = ExactMatrix::zeros(q, rows.max(1), j);
    for (col, (sigma, _)) in weights.iter().enumerate() {
        for (k, s) in sigma.iter().enumerate() {
            for (t, c) in s.coeffs().iter().enumerate() {
                relation_matrix.set(k * phi + t, col, q.rational(c.clone()));
            }
        }
    }
    let relations = relation_matrix.kernel();
    // Allowed eigenvalue assignments d in K^J.
    let d_space = if relations.is_empty() {
        Subspace::full(field, j)
    } else {
        let lifted: Vec<Vec<CycloScalar>> = relations
            .iter()
            .map(|r| r.iter().map(|c| c.lift_to(field)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()?;
        Subspace::annihilator(field, j, &lifted)
    };
    // Unknowns (x, c): [x, v] = (sum_i c_i d^(i)_j) v for every basis vector v of V_j.
    let nd = d_space.dim();
    let mut system: Vec<Vec<CycloScalar>> = Vec::new();
    for (wj, (_, space)) in weights.iter().enumerate() {
        for v in space.basis() {
            let adv = alg.ad(v);
            for r in 0..n {
                let mut row = Vec::with_capacity(n + nd);
                let mut any = false;
                for col in 0..n {
                    let e = -adv.get(r, col);
                    any |= !e.is_zero();
                    row.push(e);
                }
                for d in d_space.basis() {
                    let e = -(&d[wj] * &v[r]);
                    any |= !e.is_zero();
                    row.push(e);
                }
                if any {
                    system.push(row);
                }
            }
        }
    }
    let solutions = if system.is_empty() {
        Vec::new()
    } else {
        ExactMatrix::from_rows(field, system).map_err(CartanError::from)?.kernel()
    };
    let xs: Vec<Element> = solutions.into_iter().map(|s| s[..n].to_vec()).collect();
    let space = Subspace::span(field, n, &xs);
    let pieces: Vec<Subspace> = g.components().iter().map(|c| space.intersection(c)).collect();
    let total = pieces.iter().fold(Subspace::zero(field, n), |acc, p| acc.sum(p));
    if total != space {
        return Err(GradingError::NotDirectSum.into());
    }
    let support: Vec<usize> = pieces.iter().enumerate().filter(|(_, p)| !p.is_zero()).map(|(d, _)| d).collect();
    let m = g.m() as usize;
    let coprime_support = support.iter().all(|&d| num_integer::gcd(d, m) == 1);
    Ok(AlgebraicClosure { space, pieces, support, coprime_support })
}

/// Whether `t` is a Cartan subalgebra: abelian, spanned by semisimple elements, self-centralizing.
pub fn is_toral_cartan(alg: &LieAlgebra, t: &Subspace) -> bool {
    if !alg.bracket_span(t, t).is_zero() {
        return false;
    }
    if alg.centralizer(t.basis()) != *t {
        return false;
    }
    t.basis().iter().all(|x| alg.is_semisimple_element(x))
}

/// Both forms of the maximal-rank condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalRank {
    /// z_g(h) is a Cartan subalgebra.
    pub centralizer_is_cartan: bool,
    /// The algebraic closure of h is a Cartan subalgebra.
    pub closure_is_cartan: bool,
}

pub fn maximal_rank_conditions(g: &GradedAlgebra, h: &[Element]) -> Result<MaximalRank, CartanError> {
    let alg = g.algebra();
    let z = alg.centralizer(h);
    let closure = algebraic_closure(g, h)?;
    Ok(MaximalRank {
        centralizer_is_cartan: is_toral_cartan(alg, &z),
        closure_is_cartan: is_toral_cartan(alg, &closure.space),
    })
}

pub fn is_maximal_rank(g: &GradedAlgebra, h: &[Element]) -> bool {
    is_toral_cartan(g.algebra(), &g.algebra().centralizer(h))
}
