//! Weight systems of the adjoint action of commuting semisimple elements, their restrictions,
//! regularity and the hyperplane arrangement.

use std::collections::BTreeMap;

use crate::exactnum::{simultaneous_eigenspaces, BasisSolver, CycloField, CycloScalar, ExactError, ExactMatrix, Subspace};
use crate::liealg::{Element, LieAlgebra};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("base vectors are linearly dependent")]
    DependentBase,
    #[error("vector does not lie in the base subspace")]
    NotInBase,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    /// Values on the basis of the base subspace.
    pub functional: Vec<CycloScalar>,
    pub multiplicity: usize,
    pub space: Subspace,
}

impl Weight {
    pub fn is_zero(&self) -> bool {
        self.functional.iter().all(CycloScalar::is_zero)
    }
}

#[derive(Clone, Debug)]
pub struct WeightSystem {
    field: &'static CycloField,
    ambient: usize,
    base: Vec<Element>,
    solver: BasisSolver,
    /// Sorted by functional; the zero weight is always present.
    pub weights: Vec<Weight>,
}

impl WeightSystem {
    pub fn base(&self) -> &[Element] {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.base.len()
    }

    /// Coordinates of q in the base basis.
    pub fn coordinates(&self, q: &[CycloScalar]) -> Result<Vec<CycloScalar>, WeightError> {
        self.solver.coordinates(q).ok_or(WeightError::NotInBase)
    }

    pub fn zero_weight(&self) -> &Weight {
        self.weights.iter().find(|w| w.is_zero()).expect("zero weight present")
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &Weight> {
        self.weights.iter().filter(|w| !w.is_zero())
    }

    /// Value of a functional at a point given in base coordinates.
    pub fn evaluate(functional: &[CycloScalar], coords: &[CycloScalar]) -> CycloScalar {
        let f = coords.first().or(functional.first()).map(|c| c.field()).unwrap_or_else(|| CycloField::get(1));
        functional.iter().zip(coords).fold(f.zero(), |acc, (a, b)| acc + a * b)
    }

    fn from_groups(
        field: &'static CycloField,
        ambient: usize,
        base: Vec<Element>,
        groups: BTreeMap<Vec<CycloScalar>, Vec<Subspace>>,
    ) -> Result<Self, WeightError> {
        let solver = BasisSolver::new(field, ambient, &base).ok_or(WeightError::DependentBase)?;
        let rank = base.len();
        let mut weights: Vec<Weight> = groups
            .into_iter()
            .map(|(functional, spaces)| {
                let space = spaces.iter().fold(Subspace::zero(field, ambient), |acc, s| acc.sum(s));
                Weight { functional, multiplicity: space.dim(), space }
            })
            .collect();
        if !weights.iter().any(Weight::is_zero) {
            let functional = vec![field.zero(); rank];
            weights.push(Weight { functional, multiplicity: 0, space: Subspace::zero(field, ambient) });
            weights.sort_by(|a, b| a.functional.cmp(&b.functional));
        }
        Ok(WeightSystem { field, ambient, base, solver, weights })
    }
}

/// Joint eigenspace decomposition of ad on span(base).
pub fn weight_system(g: &LieAlgebra, base: &[Element]) -> Result<WeightSystem, WeightError> {
    let field = g.field();
    let n = g.dim();
    let mats: Vec<ExactMatrix> = base.iter().map(|x| g.ad(x)).collect();
    let blocks = simultaneous_eigenspaces(field, n, &mats)?;
    let mut groups: BTreeMap<Vec<CycloScalar>, Vec<Subspace>> = BTreeMap::new();
    for b in blocks {
        groups.entry(b.eigenvalues).or_default().push(b.space);
    }
    WeightSystem::from_groups(field, n, base.to_vec(), groups)
}

/// Restricts every weight to span(u), which must lie in the base, merging equal restrictions.
pub fn restrict_weights(sys: &WeightSystem, u: &[Element]) -> Result<WeightSystem, WeightError> {
    let coords: Vec<Vec<CycloScalar>> = u.iter().map(|x| sys.coordinates(x)).collect::<Result<_, _>>()?;
    let mut groups: BTreeMap<Vec<CycloScalar>, Vec<Subspace>> = BTreeMap::new();
    for w in &sys.weights {
        if w.multiplicity == 0 {
            continue;
        }
        let restricted: Vec<CycloScalar> = coords.iter().map(|c| WeightSystem::evaluate(&w.functional, c)).collect();
        groups.entry(restricted).or_default().push(w.space.clone());
    }
    WeightSystem::from_groups(sys.field, sys.ambient, u.to_vec(), groups)
}

/// True iff no nonzero weight vanishes at q.
pub fn is_regular(q: &[CycloScalar], sys: &WeightSystem) -> Result<bool, WeightError> {
    let c = sys.coordinates(q)?;
    Ok(sys.nonzero().all(|w| !WeightSystem::evaluate(&w.functional, &c).is_zero()))
}

/// Scales a nonzero functional so that its first nonzero entry is 1.
pub fn normalize_functional(f: &[CycloScalar]) -> Option<Vec<CycloScalar>> {
    let lead = f.iter().find(|c| !c.is_zero())?;
    let inv = lead.inv().ok()?;
    Some(f.iter().map(|c| c * &inv).collect())
}

/// Distinct kernels of the nonzero weights, as normalized functionals in base coordinates.
pub fn hyperplane_arrangement(sys: &WeightSystem) -> Vec<Vec<CycloScalar>> {
    let mut out: Vec<Vec<CycloScalar>> = sys.nonzero().filter_map(|w| normalize_functional(&w.functional)).collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::grade_from_kac;

    #[test]
    fn sl2_weights() {
        let g = grade_from_kac(&"A1 1,1".parse().unwrap()).unwrap();
        let q = g.field();
        let ef = vec![q.zero(), q.one(), q.one()];
        let sys = weight_system(g.algebra(), &[ef.clone()]).unwrap();
        let values: Vec<CycloScalar> = sys.weights.iter().map(|w| w.functional[0].clone()).collect();
        assert_eq!(values.len(), 3);
        for v in [-2, 0, 2] {
            assert!(values.contains(&q.int(v)));
        }
        assert!(sys.weights.iter().all(|w| w.multiplicity == 1));
        assert!(is_regular(&ef, &sys).unwrap());
        assert!(!is_regular(&g.algebra().zero(), &sys).unwrap());
        assert_eq!(hyperplane_arrangement(&sys), vec![vec![q.one()]]);
        let zero = restrict_weights(&sys, &[]).unwrap();
        assert_eq!(zero.weights.len(), 1);
        assert_eq!(zero.weights[0].multiplicity, 3);
        assert!(hyperplane_arrangement(&zero).is_empty());
    }

    #[test]
    fn empty_base() {
        let g = grade_from_kac(&"A2 1,1,1".parse().unwrap()).unwrap();
        let sys = weight_system(g.algebra(), &[]).unwrap();
        assert_eq!(sys.weights.len(), 1);
        assert_eq!(sys.weights[0].multiplicity, 8);
    }
}
