//! Little Weyl groups, stabilizers, strata, families and the checks that tie stabilizers to
//! centralizers.

mod families;
mod group;
mod little;
mod strata;

pub use families::{
    centralizer_of_point, hypothesis, point_of_h, random_open_point, same_gc_family, same_w_family, verify_central,
    weyl_of_centralizer, CentralReport, CentralizerWeyl, FamilyVerdict, Hypothesis, StratumVerdict,
};
pub use group::{fixed_space_of, MatrixGroup, DEFAULT_GROUP_CAP};
pub use little::{
    little_weyl_details, little_weyl_maximal_rank, reflection_normal, validate_reflections, LittleWeyl, ReflectionCheck,
    TorusRoots,
};
pub use strata::{
    circ_equals_reg, fixed_space, flats, gamma_p, in_open_part, is_sigma_regular_in, pointwise_stabilizer, stabilizer,
    strata, verify_conjugation_equivalence, CircCertificate, ConjugationCheck, Flat, GammaP, RegularityCertificate,
    StrataDecomposition, Stratum,
};

use crate::cartan::{CartanError, CartanSubspace};
use crate::exactnum::{CycloField, ExactError, ExactMatrix};
use crate::grading::{GradedAlgebra, GradingError};
use crate::liealg::LieError;
use crate::weights::WeightError;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("{0}")]
    Shape(String),
    #[error("generator {0} is not invertible")]
    NotInvertible(usize),
    #[error("group order exceeds the cap of {0} elements")]
    GroupCap(usize),
    #[error("element list is not closed under multiplication")]
    NotClosed,
    #[error("z_g(h) is not a Cartan subalgebra with degree-one part h")]
    NotMaximalRank,
    #[error("roots of t do not form a root system: {0}")]
    NotARootSystem(String),
    #[error("lifting obstruction: {0} (see README, little Weyl groups)")]
    LiftingObstruction(String),
    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),
    #[error("no open-part representative found in a fixed space of dimension {0}")]
    NoRepresentative(usize),
    #[error("stratum {stratum}: centralizer changes at point ({})", point.join(", "))]
    CentralFailure { stratum: usize, point: Vec<String> },
    #[error("little Weyl group of the centralizer has order {centralizer}, stabilizer has order {stabilizer}")]
    StabilizerMismatch { centralizer: usize, stabilizer: usize },
    #[error("stratum {stratum}, element {element}: image of the fixed space and conjugate stabilizer disagree")]
    ConjugationMismatch { stratum: usize, element: usize },
}

/// The group generated by user-supplied matrices.
pub fn little_weyl_user(field: &'static CycloField, dim: usize, generators: &[ExactMatrix], cap: usize) -> Result<MatrixGroup, WeylError> {
    MatrixGroup::generate(field, dim, generators, cap)
}

/// The little Weyl group from the grading alone: trivial on a zero Cartan subspace, otherwise
/// the maximal-rank construction. Other cases need user generators.
pub fn little_weyl(g: &GradedAlgebra, h: &CartanSubspace, cap: usize) -> Result<MatrixGroup, WeylError> {
    if h.rank() == 0 {
        return Ok(MatrixGroup::trivial(g.field(), 0));
    }
    little_weyl_maximal_rank(g, h, cap)
}
