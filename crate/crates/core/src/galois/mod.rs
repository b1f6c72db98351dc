//! Real structures on graded algebras, finite Gamma-groups and their first Galois cohomology,
//! and real-orbit counts at the level of the little Weyl group.
//!
//! Only finite groups get H^1. Kernels involving algebraic groups are available only through a
//! finite Gamma-group supplied by the caller in their place.

mod cohomology;
mod gamma;
mod parse;

pub use cohomology::{
    check_embedding, h1, induced_kernel, is_cocycle, real_orbit_count, twisted_action, H1Set, InducedKernel, RealOrbitCount,
    DEFAULT_H1_CAP, REAL_ORBIT_ASSUMPTION,
};
pub use gamma::{GammaGroup, TABLE_CAP};
pub use parse::{parse_gamma_group, GammaParseError};

use crate::cartan::{is_cartan_subspace, CartanError, CartanSubspace};
use crate::exactnum::{BasisSolver, CycloScalar, ExactMatrix, Subspace};
use crate::grading::GradedAlgebra;
use crate::liealg::Element;
use crate::weyl::{point_of_h, MatrixGroup};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GaloisError {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("structure constants are not rational")]
    NonRational,
    #[error("the algebra has no Chevalley basis")]
    NoChevalleyBasis,
    #[error("conjugation is not involutive")]
    NotInvolutive,
    #[error("conjugation does not preserve the bracket on basis pair ({0}, {1})")]
    NotBracketCompatible(usize, usize),
    #[error("conjugation is not compatible with the grading: {0}")]
    NotGradingCompatible(String),
    #[error("subspace is not stable under conjugation")]
    NotConjStable,
    #[error("element is not in the degree-one component")]
    NotDegreeOne,
    #[error("group of order {order} exceeds the cap of {cap}")]
    Cap { order: usize, cap: usize },
    #[error("invalid group table: {0}")]
    Table(String),
    #[error("twist is not an automorphism: {0}")]
    TwistNotAutomorphism(String),
    #[error("twist is not an involution at element {0}")]
    TwistNotInvolution(usize),
    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not stable under the twist at element {0}")]
    NotTwistStable(usize),
    #[error("embedding is not a twist-equivariant monomorphism: {0}")]
    NotEquivariant(String),
    #[error("conjugate of Weyl group element {0} is not in the group")]
    ConjugateNotInGroup(usize),
    #[error("{0}")]
    Shape(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealForm {
    Split,
    Compact,
}

impl std::fmt::Display for RealForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RealForm::Split => "split",
            RealForm::Compact => "compact",
        })
    }
}

/// An antilinear involution x -> M conj(x) of a graded algebra with rational structure constants,
/// M rational. Construction verifies involutivity, compatibility with the bracket, the relation
/// conj theta conj = theta^-1 and stability of every component.
#[derive(Clone, Debug)]
pub struct RealStructure<'a> {
    graded: &'a GradedAlgebra,
    form: RealForm,
    matrix: ExactMatrix,
}

impl<'a> RealStructure<'a> {
    pub fn split(g: &'a GradedAlgebra) -> Result<Self, GaloisError> {
        Self::new(g, RealForm::Split, ExactMatrix::identity(g.field(), g.dim()))
    }

    /// Split conjugation composed with the Chevalley involution e_a -> -e_-a, h -> -h.
    /// It reverses the grading, so it passes the checks only when m <= 2.
    pub fn compact(g: &'a GradedAlgebra) -> Result<Self, GaloisError> {
        let data = g.algebra().chevalley().ok_or(GaloisError::NoChevalleyBasis)?;
        let field = g.field();
        let mut m = ExactMatrix::zeros(field, g.dim(), g.dim());
        for i in 0..data.rank() {
            m.set(i, i, field.int(-1));
        }
        for r in 0..data.index.roots.len() {
            m.set(data.root_position(data.index.negate(r)), data.root_position(r), field.int(-1));
        }
        Self::new(g, RealForm::Compact, m)
    }

    fn new(g: &'a GradedAlgebra, form: RealForm, matrix: ExactMatrix) -> Result<Self, GaloisError> {
        let alg = g.algebra();
        if !alg.has_rational_constants() {
            return Err(GaloisError::NonRational);
        }
        let out = RealStructure { graded: g, form, matrix };
        out.verify()?;
        Ok(out)
    }

    /// Re-checks all invariants.
    pub fn verify(&self) -> Result<(), GaloisError> {
        let g = self.graded;
        let alg = g.algebra();
        let n = g.dim();
        if self.matrix.entries().iter().any(|c| !c.is_rational()) {
            return Err(GaloisError::NonRational);
        }
        if !(&self.matrix * &self.matrix).is_identity() {
            return Err(GaloisError::NotInvolutive);
        }
        let images: Vec<Element> = (0..n).map(|j| self.matrix.column(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.matrix.mul_vec(&alg.bracket(&alg.basis_element(i), &alg.basis_element(j)));
                if lhs != alg.bracket(&images[i], &images[j]) {
                    return Err(GaloisError::NotBracketCompatible(i, j));
                }
            }
        }
        let theta = &g.theta().matrix;
        let conjugated = &(&self.matrix * &theta.conj()) * &self.matrix;
        if &conjugated * theta != ExactMatrix::identity(g.field(), n) {
            return Err(GaloisError::NotGradingCompatible("conj theta conj is not theta^-1".into()));
        }
        for (d, c) in g.components().iter().enumerate() {
            if c.basis().iter().any(|b| !c.contains(&self.apply(b))) {
                return Err(GaloisError::NotGradingCompatible(format!("component {d} is not stable")));
            }
        }
        Ok(())
    }

    pub fn form(&self) -> RealForm {
        self.form
    }

    pub fn graded(&self) -> &'a GradedAlgebra {
        self.graded
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[CycloScalar]) -> Element {
        let conj: Element = x.iter().map(CycloScalar::conj).collect();
        self.matrix.mul_vec(&conj)
    }

    pub fn is_real(&self, x: &[CycloScalar]) -> bool {
        self.apply(x) == x
    }

    pub fn is_stable(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|b| s.contains(&self.apply(b)))
    }

    /// Real dimension of the real points of component d, which equals its complex dimension
    /// once the component is known to be stable.
    pub fn real_dimension(&self, d: i64) -> usize {
        self.graded.component(d).dim()
    }

    /// The matrix C with conj(sum p_i b_i) = sum (C conj(p))_i b_i on a stable basis b of h.
    pub fn on_cartan(&self, h: &CartanSubspace) -> Result<ExactMatrix, GaloisError> {
        let solver = BasisSolver::new(self.graded.field(), self.graded.dim(), &h.basis)
            .ok_or_else(|| GaloisError::Shape("dependent Cartan basis".into()))?;
        let cols: Vec<Element> =
            h.basis.iter().map(|b| solver.coordinates(&self.apply(b)).ok_or(GaloisError::NotConjStable)).collect::<Result<_, _>>()?;
        Ok(ExactMatrix::from_columns(self.graded.field(), h.rank(), &cols))
    }
}

/// Whether the complex span of a conj-stable family of degree-one elements is a Cartan subspace.
/// Families that are not commuting and semisimple are not Cartan subspaces.
pub fn real_cartan_check(r: &RealStructure, h_real: &[Element]) -> Result<bool, GaloisError> {
    let g = r.graded();
    if h_real.iter().any(|x| x.len() != g.dim()) {
        return Err(GaloisError::Shape(format!("elements must have {} coordinates", g.dim())));
    }
    if h_real.iter().any(|x| !g.is_in_component(x, 1)) {
        return Err(GaloisError::NotDegreeOne);
    }
    let span = Subspace::span(g.field(), g.dim(), h_real);
    if !r.is_stable(&span) {
        return Err(GaloisError::NotConjStable);
    }
    let alg = g.algebra();
    let basis = span.basis().to_vec();
    let toral = basis.iter().all(|x| alg.is_semisimple_element(x))
        && basis.iter().enumerate().all(|(i, x)| basis[i + 1..].iter().all(|y| alg.bracket(x, y).iter().all(CycloScalar::is_zero)));
    if !toral {
        return Ok(false);
    }
    Ok(is_cartan_subspace(g, &basis)?.holds)
}

/// The Galois action on W induced by the real structure: w -> C conj(w) C^-1, with C the
/// action of conj on h. With a real basis of h, C = 1 and this is entrywise conjugation.
pub fn gamma_action_on_weyl(w: &MatrixGroup, r: &RealStructure, h: &CartanSubspace) -> Result<GammaGroup, GaloisError> {
    if w.dim() != h.rank() {
        return Err(GaloisError::Shape(format!("W acts on dimension {}, h has rank {}", w.dim(), h.rank())));
    }
    let c = r.on_cartan(h)?;
    let cinv = if w.dim() == 0 { c.clone() } else { c.inverse().ok_or(GaloisError::NotConjStable)? };
    let mut twist = Vec::with_capacity(w.order());
    for (i, x) in w.elements().iter().enumerate() {
        let image = if w.dim() == 0 { x.clone() } else { &(&c * &x.conj()) * &cinv };
        twist.push(w.index_of(&image).ok_or(GaloisError::ConjugateNotInGroup(i))?);
    }
    GammaGroup::from_matrix_group(w.clone(), twist)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealPointDecision {
    pub class: usize,
    /// g_i . p when lifting data was supplied, for external verification.
    pub candidate: Option<Element>,
    pub candidate_is_real: Option<bool>,
}

/// First i with conj(p) = gamma_i^-1 p, for p in h coordinates and gamma_i acting on h.
pub fn real_point_decision(
    r: &RealStructure,
    h: &CartanSubspace,
    p: &[CycloScalar],
    gamma_classes: &[ExactMatrix],
    lifts: Option<&[ExactMatrix]>,
) -> Result<Option<RealPointDecision>, GaloisError> {
    if p.len() != h.rank() {
        return Err(GaloisError::Shape(format!("point has {} coordinates, h has rank {}", p.len(), h.rank())));
    }
    if let Some(l) = lifts {
        if l.len() != gamma_classes.len() {
            return Err(GaloisError::Shape("one lift per class is required".into()));
        }
    }
    let c = r.on_cartan(h)?;
    let conj_p = c.mul_vec(&p.iter().map(CycloScalar::conj).collect::<Vec<_>>());
    for (i, gamma) in gamma_classes.iter().enumerate() {
        if gamma.rows() != h.rank() || gamma.cols() != h.rank() {
            return Err(GaloisError::Shape(format!("class {i} is not a {0}x{0} matrix", h.rank())));
        }
        if gamma.mul_vec(&conj_p) == p {
            let candidate = lifts.map(|l| l[i].mul_vec(&point_of_h(h, p)));
            let candidate_is_real = candidate.as_ref().map(|x| r.is_real(x));
            return Ok(Some(RealPointDecision { class: i, candidate, candidate_is_real }));
        }
    }
    Ok(None)
}
