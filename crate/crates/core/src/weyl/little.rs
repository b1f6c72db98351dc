//! Little Weyl group through the big Weyl group of t = z_g(h).

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::Signed;

use crate::cartan::{is_toral_cartan, CartanSubspace};
use crate::exactnum::{BasisSolver, CycloScalar, ExactMatrix, Rational, Subspace};
use crate::grading::{graded_centralizer_unchecked, GradedAlgebra};
use crate::liealg::Element;
use crate::weights::{hyperplane_arrangement, normalize_functional, weight_system, WeightSystem};

use super::{MatrixGroup, WeylError};

/// Root data of g with respect to the Cartan subalgebra t = z_g(h).
///
/// The basis of t is the basis of h followed by bases of the other graded pieces of t.
#[derive(Clone, Debug)]
pub struct TorusRoots {
    pub t_basis: Vec<Element>,
    pub degrees: Vec<usize>,
    /// Values of each root on the basis of t, in sorted order.
    pub roots: Vec<Vec<CycloScalar>>,
    /// Coroots in t coordinates.
    pub coroots: Vec<Vec<CycloScalar>>,
    pub simple: Vec<usize>,
    /// Common kernel of the roots, in t coordinates.
    pub center: Vec<Vec<CycloScalar>>,
    lookup: HashMap<Vec<CycloScalar>, usize>,
}

impl TorusRoots {
    pub fn rank(&self) -> usize {
        self.t_basis.len()
    }

    pub fn root_index(&self, f: &[CycloScalar]) -> Option<usize> {
        self.lookup.get(f).copied()
    }

    pub fn compute(g: &GradedAlgebra, h: &CartanSubspace) -> Result<Self, WeylError> {
        let alg = g.algebra();
        let field = g.field();
        let n = g.dim();
        let m = g.m() as usize;
        let gc = graded_centralizer_unchecked(g, &h.basis)?;
        if !is_toral_cartan(alg, &gc.total.space) {
            return Err(WeylError::NotMaximalRank);
        }
        let one = 1 % m;
        if gc.pieces[one] != h.space {
            return Err(WeylError::NotMaximalRank);
        }
        let mut t_basis = h.basis.clone();
        let mut degrees = vec![one; h.rank()];
        for (d, piece) in gc.pieces.iter().enumerate() {
            if d != one {
                t_basis.extend(piece.basis().iter().cloned());
                degrees.extend(std::iter::repeat(d).take(piece.dim()));
            }
        }
        let rank = t_basis.len();
        let sys = weight_system(alg, &t_basis)?;
        let solver = BasisSolver::new(field, n, &t_basis).ok_or(WeylError::NotMaximalRank)?;

        let mut roots = Vec::new();
        let mut spaces = Vec::new();
        for w in sys.nonzero() {
            if w.multiplicity != 1 {
                return Err(WeylError::NotARootSystem(format!("root space of dimension {}", w.multiplicity)));
            }
            roots.push(w.functional.clone());
            spaces.push(w.space.basis()[0].clone());
        }
        let lookup: HashMap<Vec<CycloScalar>, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

        let mut coroots = Vec::with_capacity(roots.len());
        for (i, r) in roots.iter().enumerate() {
            let neg: Vec<CycloScalar> = r.iter().map(|c| -c).collect();
            let j = *lookup.get(&neg).ok_or_else(|| WeylError::NotARootSystem("negative of a root is missing".into()))?;
            let c = alg.bracket(&spaces[i], &spaces[j]);
            let coords = solver.coordinates(&c).ok_or_else(|| WeylError::NotARootSystem("[x, y] outside t".into()))?;
            let value = WeightSystem::evaluate(r, &coords);
            let scale = field.int(2).try_div(&value).map_err(|_| WeylError::NotARootSystem("root vanishes on its coroot".into()))?;
            coroots.push(coords.iter().map(|x| x * &scale).collect());
        }
        let center = Subspace::annihilator(field, rank, &roots).basis().to_vec();
        let simple = simple_roots(field, rank, &roots, &lookup)?;
        Ok(TorusRoots { t_basis, degrees, roots, coroots, simple, center, lookup })
    }

    /// beta(coroot of alpha), checked to be an integer.
    fn cartan_integer(&self, beta: usize, alpha: usize) -> Result<i64, WeylError> {
        let v = WeightSystem::evaluate(&self.roots[beta], &self.coroots[alpha]);
        v.as_rational()
            .filter(|q| q.is_integer())
            .and_then(|q| num_traits::ToPrimitive::to_i64(&q.to_integer()))
            .ok_or_else(|| WeylError::NotARootSystem(format!("non-integral pairing {v}")))
    }

    /// Simple reflections as permutations of the roots.
    pub fn simple_reflections(&self) -> Result<Vec<Vec<u32>>, WeylError> {
        let mut out = Vec::new();
        for &a in &self.simple {
            let mut perm = Vec::with_capacity(self.roots.len());
            for b in 0..self.roots.len() {
                let k = self.cartan_integer(b, a)?;
                let img: Vec<CycloScalar> =
                    self.roots[b].iter().zip(&self.roots[a]).map(|(x, y)| x - &y.scale(&Rational::from_integer(k.into()))).collect();
                let j = self.root_index(&img).ok_or_else(|| WeylError::NotARootSystem("reflection leaves the roots".into()))?;
                perm.push(j as u32);
            }
            out.push(perm);
        }
        Ok(out)
    }

    /// The permutation of roots induced by theta: g_alpha goes to g_(alpha o theta^-1).
    pub fn theta_permutation(&self, g: &GradedAlgebra) -> Result<Vec<u32>, WeylError> {
        let field = g.field();
        let m = g.m() as i64;
        let factors: Vec<CycloScalar> = self.degrees.iter().map(|&d| field.omega_pow(-(d as i64) * (field.order() as i64 / m))).collect();
        self.roots
            .iter()
            .map(|r| {
                let img: Vec<CycloScalar> = r.iter().zip(&factors).map(|(x, f)| x * f).collect();
                self.root_index(&img).map(|j| j as u32).ok_or_else(|| WeylError::NotARootSystem("theta does not permute the roots".into()))
            })
            .collect()
    }

    /// Matrix on t (in t coordinates) of the Weyl element given as a root permutation.
    fn matrix_of(&self, perm: &[u32], basis_inv: &ExactMatrix) -> ExactMatrix {
        let field = basis_inv.field();
        let mut cols: Vec<Vec<CycloScalar>> = self.simple.iter().map(|&a| self.coroots[perm[a] as usize].clone()).collect();
        cols.extend(self.center.iter().cloned());
        &ExactMatrix::from_columns(field, self.rank(), &cols) * basis_inv
    }

    fn basis_inverse(&self, field: &'static crate::exactnum::CycloField) -> Result<ExactMatrix, WeylError> {
        let mut cols: Vec<Vec<CycloScalar>> = self.simple.iter().map(|&a| self.coroots[a].clone()).collect();
        cols.extend(self.center.iter().cloned());
        if cols.len() != self.rank() {
            return Err(WeylError::NotARootSystem("coroots and center do not span t".into()));
        }
        ExactMatrix::from_columns(field, self.rank(), &cols)
            .inverse()
            .ok_or_else(|| WeylError::NotARootSystem("coroots and center do not span t".into()))
    }
}

/// Simple roots for the lexicographic order on rational coordinates in a basis chosen among the roots.
fn simple_roots(
    field: &'static crate::exactnum::CycloField,
    rank: usize,
    roots: &[Vec<CycloScalar>],
    lookup: &HashMap<Vec<CycloScalar>, usize>,
) -> Result<Vec<usize>, WeylError> {
    let mut chosen: Vec<Vec<CycloScalar>> = Vec::new();
    let mut span = Subspace::zero(field, rank);
    for r in roots {
        if !span.contains(r) {
            chosen.push(r.clone());
            span = span.sum(&Subspace::span(field, rank, &[r.clone()]));
        }
    }
    let solver = BasisSolver::new(field, rank, &chosen).expect("independent by construction");
    let mut positive = Vec::new();
    for (i, r) in roots.iter().enumerate() {
        let coords = solver.coordinates(r).expect("root in its own span");
        let lead = coords.iter().find(|c| !c.is_zero()).expect("nonzero root");
        let q = lead.as_rational().ok_or_else(|| WeylError::NotARootSystem("irrational root coordinates".into()))?;
        if q.is_positive() {
            positive.push(i);
        }
    }
    let pos_set: HashSet<usize> = positive.iter().copied().collect();
    let simple: Vec<usize> = positive
        .iter()
        .copied()
        .filter(|&b| {
            !positive.iter().any(|&a| {
                let diff: Vec<CycloScalar> = roots[b].iter().zip(&roots[a]).map(|(x, y)| x - y).collect();
                lookup.get(&diff).is_some_and(|j| pos_set.contains(j))
            })
        })
        .collect();
    if simple.len() != chosen.len() {
        return Err(WeylError::NotARootSystem(format!("{} simple roots for a root span of dimension {}", simple.len(), chosen.len())));
    }
    Ok(simple)
}

/// Enumerates the group generated by root permutations.
fn permutation_closure(gens: &[Vec<u32>], size: usize, cap: usize) -> Result<Vec<Vec<u32>>, WeylError> {
    let id: Vec<u32> = (0..size as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.clone()]);
    let mut elems = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for s in gens {
            let p: Vec<u32> = elems[i].iter().map(|&b| s[b as usize]).collect();
            if !seen.contains(&p) {
                if elems.len() >= cap {
                    return Err(WeylError::GroupCap(cap));
                }
                seen.insert(p.clone());
                queue.push_back(elems.len());
                elems.push(p);
            }
        }
    }
    Ok(elems)
}

/// Outcome of the reflection validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionCheck {
    pub reflections: usize,
    pub hyperplanes: usize,
}

/// Little Weyl group with the data used to build it.
#[derive(Clone, Debug)]
pub struct LittleWeyl {
    pub group: MatrixGroup,
    pub big_weyl_order: usize,
    pub root_count: usize,
    pub reflections: ReflectionCheck,
}

pub fn little_weyl_maximal_rank(g: &GradedAlgebra, h: &CartanSubspace, cap: usize) -> Result<MatrixGroup, WeylError> {
    Ok(little_weyl_details(g, h, cap)?.group)
}

pub fn little_weyl_details(g: &GradedAlgebra, h: &CartanSubspace, cap: usize) -> Result<LittleWeyl, WeylError> {
    let field = g.field();
    let data = TorusRoots::compute(g, h)?;
    let r = h.rank();
    let ell = data.rank();
    let big = permutation_closure(&data.simple_reflections()?, data.roots.len(), cap)?;
    let pi = data.theta_permutation(g)?;
    let binv = data.basis_inverse(field)?;
    let theta_t = ExactMatrix::diagonal(
        field,
        &data.degrees.iter().map(|&d| field.omega_pow(d as i64 * (field.order() / g.m()) as i64)).collect::<Vec<_>>(),
    );
    let mut restricted = Vec::new();
    for w in &big {
        let commutes = (0..pi.len()).all(|b| w[pi[b] as usize] == pi[w[b] as usize]);
        if !commutes {
            continue;
        }
        let v = data.matrix_of(w, &binv);
        if !v.commutes_with(&theta_t) || (r..ell).any(|i| (0..r).any(|j| !v.get(i, j).is_zero())) {
            return Err(WeylError::LiftingObstruction("theta-compatible Weyl element does not preserve h".into()));
        }
        let block: Vec<Vec<CycloScalar>> = (0..r).map(|i| (0..r).map(|j| v.get(i, j).clone()).collect()).collect();
        restricted.push(ExactMatrix::from_rows(field, block).map_err(|_| WeylError::Shape("empty block".into()))?);
    }
    let group = if r == 0 { MatrixGroup::trivial(field, 0) } else { MatrixGroup::from_elements(field, r, &restricted)? };
    let sigma = weight_system(g.algebra(), &h.basis)?;
    let reflections = validate_reflections(&group, &sigma)?;
    Ok(LittleWeyl { group, big_weyl_order: big.len(), root_count: data.roots.len(), reflections })
}

/// Unit normal (first nonzero entry 1) of the reflecting hyperplane of a reflection.
pub fn reflection_normal(w: &ExactMatrix) -> Option<Vec<CycloScalar>> {
    let id = ExactMatrix::identity(w.field(), w.rows());
    let d = w - &id;
    (0..d.rows()).map(|i| d.row(i)).find(|row| row.iter().any(|c| !c.is_zero())).and_then(|row| normalize_functional(&row))
}

/// Checks that W is generated by reflections whose hyperplanes are kernels of weights of h.
pub fn validate_reflections(w: &MatrixGroup, sigma: &WeightSystem) -> Result<ReflectionCheck, WeylError> {
    let arrangement = hyperplane_arrangement(sigma);
    let reflections: Vec<ExactMatrix> = w.elements().iter().filter(|x| MatrixGroup::is_reflection(x)).cloned().collect();
    for x in &reflections {
        let normal = reflection_normal(x).expect("reflection has a normal");
        if !arrangement.contains(&normal) {
            return Err(WeylError::LiftingObstruction(format!(
                "reflecting hyperplane {} is not the kernel of a weight",
                normal.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
            )));
        }
    }
    let generated = MatrixGroup::generate(w.field(), w.dim(), &reflections, w.order().max(1))?;
    if generated.order() != w.order() {
        return Err(WeylError::LiftingObstruction(format!(
            "reflections generate a subgroup of order {} in a group of order {}",
            generated.order(),
            w.order()
        )));
    }
    let mut normals: Vec<Vec<CycloScalar>> = reflections.iter().filter_map(reflection_normal).collect();
    normals.sort();
    normals.dedup();
    Ok(ReflectionCheck { reflections: reflections.len(), hyperplanes: normals.len() })
}
