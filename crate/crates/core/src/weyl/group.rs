use std::collections::{HashMap, HashSet, VecDeque};

use crate::exactnum::{CycloField, ExactMatrix, ModularReduction, Subspace};

use super::WeylError;

pub const DEFAULT_GROUP_CAP: usize = 200_000;

/// A finite group of invertible matrices, fully enumerated. Element 0 is the identity.
///
/// Elements are also reduced modulo a large prime; the reduction is checked to be injective on
/// the group, so products and inverses are looked up through the reduced matrices.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    field: &'static CycloField,
    dim: usize,
    generators: Vec<ExactMatrix>,
    elements: Vec<ExactMatrix>,
    index: HashMap<ExactMatrix, usize>,
    modular: Option<ModularIndex>,
    inverses: Vec<usize>,
}

#[derive(Clone, Debug)]
struct ModularIndex {
    reduction: ModularReduction,
    keys: Vec<Vec<u64>>,
    index: HashMap<Vec<u64>, usize>,
}

impl ModularIndex {
    fn build(field: &'static CycloField, elements: &[ExactMatrix]) -> Option<Self> {
        let reduction = ModularReduction::new(field);
        let keys: Vec<Vec<u64>> = elements.iter().map(|e| reduction.reduce_matrix(e)).collect::<Option<_>>()?;
        let index: HashMap<Vec<u64>, usize> = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        (index.len() == keys.len()).then_some(ModularIndex { reduction, keys, index })
    }
}

impl PartialEq for MatrixGroup {
    /// Same set of matrices.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.order() == other.order() && self.elements.iter().all(|e| other.contains(e))
    }
}

impl MatrixGroup {
    pub fn trivial(field: &'static CycloField, dim: usize) -> Self {
        Self::generate(field, dim, &[], 1).expect("identity only")
    }

    /// Closure of the generators under multiplication, failing once more than `cap` elements appear.
    pub fn generate(field: &'static CycloField, dim: usize, gens: &[ExactMatrix], cap: usize) -> Result<Self, WeylError> {
        for (i, g) in gens.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(WeylError::Shape(format!("generator {i} is {}x{}, expected {dim}x{dim}", g.rows(), g.cols())));
            }
            if g.field() != field {
                return Err(WeylError::Shape(format!("generator {i} is over the wrong field")));
            }
            if dim > 0 && g.inverse().is_none() {
                return Err(WeylError::NotInvertible(i));
            }
        }
        let id = ExactMatrix::identity(field, dim);
        let mut generators: Vec<ExactMatrix> = Vec::new();
        for g in gens {
            if g != &id && !generators.contains(g) {
                generators.push(g.clone());
            }
        }
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let p = &elements[i] * g;
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(WeylError::GroupCap(cap));
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        Ok(Self::assemble(field, dim, generators, elements, index))
    }

    fn assemble(
        field: &'static CycloField,
        dim: usize,
        generators: Vec<ExactMatrix>,
        elements: Vec<ExactMatrix>,
        index: HashMap<ExactMatrix, usize>,
    ) -> Self {
        let modular = ModularIndex::build(field, &elements);
        let mut group = MatrixGroup { field, dim, generators, elements, index, modular, inverses: Vec::new() };
        group.inverses = (0..group.order()).map(|i| group.compute_inverse(i)).collect();
        group
    }

    /// Group from a complete, closed list of elements; a small generating set is chosen greedily.
    pub fn from_elements(field: &'static CycloField, dim: usize, elems: &[ExactMatrix]) -> Result<Self, WeylError> {
        let mut uniq: Vec<ExactMatrix> = Vec::new();
        let mut seen = HashSet::new();
        for e in elems {
            if seen.insert(e.clone()) {
                uniq.push(e.clone());
            }
        }
        let mut gens: Vec<ExactMatrix> = Vec::new();
        let mut current = Self::trivial(field, dim);
        for e in &uniq {
            if !current.contains(e) {
                gens.push(e.clone());
                current = Self::generate(field, dim, &gens, uniq.len().max(1)).map_err(|_| WeylError::NotClosed)?;
            }
        }
        if current.order() != uniq.len() {
            return Err(WeylError::NotClosed);
        }
        Ok(current)
    }

    pub fn field(&self) -> &'static CycloField {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn generators(&self) -> &[ExactMatrix] {
        &self.generators
    }
    pub fn elements(&self) -> &[ExactMatrix] {
        &self.elements
    }
    pub fn element(&self, i: usize) -> &ExactMatrix {
        &self.elements[i]
    }
    pub fn index_of(&self, m: &ExactMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }
    pub fn contains(&self, m: &ExactMatrix) -> bool {
        self.index.contains_key(m)
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        match &self.modular {
            Some(m) => m.index[&m.reduction.mul(&m.keys[i], &m.keys[j], self.dim)],
            None => self.index[&(&self.elements[i] * &self.elements[j])],
        }
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    fn compute_inverse(&self, i: usize) -> usize {
        if self.dim == 0 {
            return 0;
        }
        if let Some(m) = &self.modular {
            if let Some(k) = m.reduction.inverse(&m.keys[i], self.dim) {
                return m.index[&k];
            }
        }
        self.index[&self.elements[i].inverse().expect("group element")]
    }

    /// Indices of w s w^-1 for s in `subset`, sorted.
    pub fn conjugate_set(&self, w: usize, subset: &[usize]) -> Vec<usize> {
        let wi = self.inverse(w);
        let mut out: Vec<usize> = subset.iter().map(|&s| self.product(self.product(w, s), wi)).collect();
        out.sort_unstable();
        out
    }

    /// Sorted indices of the elements satisfying `pred`.
    pub fn select(&self, pred: impl Fn(&ExactMatrix) -> bool) -> Vec<usize> {
        (0..self.order()).filter(|&i| pred(&self.elements[i])).collect()
    }

    /// The subgroup on the given indices.
    pub fn subgroup(&self, indices: &[usize]) -> Result<MatrixGroup, WeylError> {
        let elems: Vec<ExactMatrix> = indices.iter().map(|&i| self.elements[i].clone()).collect();
        Self::from_elements(self.field, self.dim, &elems)
    }

    /// {w : w p = p}, as sorted indices.
    pub fn stabilizer_indices(&self, p: &[crate::exactnum::CycloScalar]) -> Vec<usize> {
        self.select(|w| w.mul_vec(p) == p)
    }

    /// Common fixed space of the generators.
    pub fn fixed_space(&self) -> Subspace {
        fixed_space_of(self.field, self.dim, &self.generators)
    }

    pub fn is_reflection(m: &ExactMatrix) -> bool {
        let id = ExactMatrix::identity(m.field(), m.rows());
        (m - &id).rank() == 1
    }
}

/// Solutions of (w_i - 1) q = 0 for all listed w_i.
pub fn fixed_space_of(field: &'static CycloField, dim: usize, ws: &[ExactMatrix]) -> Subspace {
    let id = ExactMatrix::identity(field, dim);
    let mut rows = Vec::new();
    for w in ws {
        rows.extend((w - &id).to_rows());
    }
    let rows: Vec<_> = rows.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())).collect();
    if rows.is_empty() {
        return Subspace::full(field, dim);
    }
    Subspace::kernel_of(&ExactMatrix::from_rows(field, rows).expect("rectangular"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let q = CycloField::get(1);
        assert_eq!(MatrixGroup::generate(q, 2, &[], 10).unwrap().order(), 1);
        let minus = ExactMatrix::scalar(q, 2, &q.int(-1));
        let g = MatrixGroup::generate(q, 2, &[minus.clone()], 10).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.fixed_space().is_zero());
        let swap = ExactMatrix::from_ints(q, &[vec![0, 1], vec![1, 0]]);
        let rot = ExactMatrix::from_ints(q, &[vec![0, -1], vec![1, -1]]);
        let s3 = MatrixGroup::generate(q, 2, &[swap.clone(), rot], 100).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(MatrixGroup::generate(q, 2, &[swap.clone()], 1).is_err());
        let sub = s3.subgroup(&s3.select(|w| w == &swap || w.is_identity())).unwrap();
        assert_eq!(sub.order(), 2);
        assert!(MatrixGroup::is_reflection(&swap));
        assert!(!MatrixGroup::is_reflection(&minus));
        let w3 = CycloField::get(3);
        let omega = ExactMatrix::scalar(w3, 1, &w3.omega_pow(1));
        let c3 = MatrixGroup::generate(w3, 1, &[omega], 10).unwrap();
        assert_eq!(c3.order(), 3);
        assert!(c3.fixed_space().is_zero());
    }
}
