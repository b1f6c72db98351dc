//! Families of points of h, the centralizer-constancy check on strata and the little Weyl
//! group of a graded centralizer.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cartan::{is_maximal_rank, CartanSubspace};
use crate::exactnum::{BasisSolver, CycloScalar, Subspace};
use crate::grading::{graded_centralizer_unchecked, GradedAlgebra};
use crate::liealg::Element;

use super::little_weyl;
use super::strata::{in_open_part, Flat, StrataDecomposition};
use super::{MatrixGroup, WeylError};

/// Pairs of open-part points compared per stratum.
const CENTRAL_PAIRS: usize = 10;

/// Which hypothesis makes the stabilizer theory available.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    MaximalRank,
    PrimeM,
    Unknown,
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Hypothesis::MaximalRank => "maximal_rank",
            Hypothesis::PrimeM => "prime_m",
            Hypothesis::Unknown => "unknown",
        })
    }
}

pub fn hypothesis(g: &GradedAlgebra, h: &CartanSubspace) -> Hypothesis {
    if is_maximal_rank(g, &h.basis) {
        Hypothesis::MaximalRank
    } else if is_prime(g.m()) {
        Hypothesis::PrimeM
    } else {
        Hypothesis::Unknown
    }
}

fn is_prime(m: u32) -> bool {
    m >= 2 && (2..m).take_while(|d| d * d <= m).all(|d| m % d != 0)
}

/// The element sum_i p_i h_i of g.
pub fn point_of_h(h: &CartanSubspace, p: &[CycloScalar]) -> Element {
    let n = h.space.ambient();
    let field = h.space.field();
    let mut out = vec![field.zero(); n];
    for (c, b) in p.iter().zip(&h.basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o += &(c * x);
        }
    }
    out
}

pub fn centralizer_of_point(g: &GradedAlgebra, h: &CartanSubspace, p: &[CycloScalar]) -> Subspace {
    g.algebra().centralizer(&[point_of_h(h, p)])
}

/// Some w with w W_p w^-1 = W_q.
pub fn same_w_family(w: &MatrixGroup, p: &[CycloScalar], q: &[CycloScalar]) -> bool {
    let sp = w.stabilizer_indices(p);
    let sq = w.stabilizer_indices(q);
    sp.len() == sq.len() && (0..w.order()).any(|k| w.conjugate_set(k, &sp) == sq)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyVerdict {
    True,
    False,
    Unknown,
}

impl std::fmt::Display for FamilyVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FamilyVerdict::True => "true",
            FamilyVerdict::False => "false",
            FamilyVerdict::Unknown => "unknown",
        })
    }
}

/// Same g^C-family test.
///
/// True when z(p) = z(wq) for some w in W (wq is conjugate to q, so z(wq) is conjugate to z(q)).
/// False when the centralizer dimensions differ, or when p and q are in different W-families
/// under a hypothesis where same g^C-family forces same W-family. Unknown otherwise.
pub fn same_gc_family(
    g: &GradedAlgebra,
    h: &CartanSubspace,
    w: &MatrixGroup,
    hyp: Hypothesis,
    p: &[CycloScalar],
    q: &[CycloScalar],
) -> FamilyVerdict {
    let zp = centralizer_of_point(g, h, p);
    let zq = centralizer_of_point(g, h, q);
    if zp.dim() != zq.dim() {
        return FamilyVerdict::False;
    }
    if zp == zq || w.elements().iter().any(|x| centralizer_of_point(g, h, &x.mul_vec(q)) == zp) {
        return FamilyVerdict::True;
    }
    if hyp != Hypothesis::Unknown && !same_w_family(w, p, q) {
        return FamilyVerdict::False;
    }
    FamilyVerdict::Unknown
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumVerdict {
    pub stratum: usize,
    pub pairs: usize,
    pub centralizer_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralReport {
    pub hypothesis: Hypothesis,
    pub strata: Vec<StratumVerdict>,
}

/// Samples pairs of open-part points in every stratum and checks that their centralizers agree.
pub fn verify_central(
    g: &GradedAlgebra,
    h: &CartanSubspace,
    w: &MatrixGroup,
    dec: &StrataDecomposition,
    seed: u64,
) -> Result<CentralReport, WeylError> {
    let hyp = hypothesis(g, h);
    if hyp == Hypothesis::Unknown {
        return Err(WeylError::HypothesisNotSatisfied(
            "m is not prime and h is not of maximal rank; use the family tools, which answer unknown when undecided".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut verdicts = Vec::new();
    for (i, s) in dec.strata.iter().enumerate() {
        let flat = Flat { space: s.fixed_space.clone(), stabilizer: s.stabilizer_indices.clone() };
        let reference = centralizer_of_point(g, h, &s.representative);
        let pairs = if flat.space.dim() == 0 { 1 } else { CENTRAL_PAIRS };
        for _ in 0..pairs {
            for _ in 0..2 {
                let q = random_open_point(w, &flat, &mut rng)?;
                let z = centralizer_of_point(g, h, &q);
                if z != reference {
                    return Err(WeylError::CentralFailure { stratum: i, point: q.iter().map(|c| c.to_string()).collect() });
                }
            }
        }
        verdicts.push(StratumVerdict { stratum: i, pairs, centralizer_dim: reference.dim() });
    }
    Ok(CentralReport { hypothesis: hyp, strata: verdicts })
}

/// Random integer combination of the flat's basis whose stabilizer is exactly W_F.
pub fn random_open_point<R: Rng>(w: &MatrixGroup, flat: &Flat, rng: &mut R) -> Result<Vec<CycloScalar>, WeylError> {
    let field = w.field();
    let k = flat.space.dim();
    for attempt in 0..256i64 {
        let range = 3 + attempt;
        let coeffs: Vec<CycloScalar> = (0..k).map(|_| field.int(rng.gen_range(-range..=range))).collect();
        let q = flat.space.combine(&coeffs);
        if in_open_part(w, flat, &q) {
            return Ok(q);
        }
    }
    Err(WeylError::NoRepresentative(k))
}

/// Little Weyl groups of (z_g(p), theta) and of the stabilizer, which must agree.
#[derive(Clone, Debug)]
pub struct CentralizerWeyl {
    pub from_centralizer: MatrixGroup,
    pub stabilizer: MatrixGroup,
    pub centralizer_dim: usize,
}

pub fn weyl_of_centralizer(
    g: &GradedAlgebra,
    h: &CartanSubspace,
    w: &MatrixGroup,
    p: &[CycloScalar],
    cap: usize,
) -> Result<CentralizerWeyl, WeylError> {
    let x = point_of_h(h, p);
    let gc = graded_centralizer_unchecked(g, &[x])?;
    let (sub, basis) = g.restrict(&gc.pieces)?;
    let solver = BasisSolver::new(g.field(), g.dim(), &basis).ok_or(WeylError::NotClosed)?;
    let local: Vec<Element> = h.basis.iter().map(|b| solver.coordinates(b).ok_or(WeylError::NotClosed)).collect::<Result<_, _>>()?;
    let local_h = CartanSubspace::new(&sub, local)?;
    let from_centralizer = little_weyl(&sub, &local_h, cap)?;
    let stabilizer = w.subgroup(&w.stabilizer_indices(p))?;
    if from_centralizer != stabilizer {
        return Err(WeylError::StabilizerMismatch { centralizer: from_centralizer.order(), stabilizer: stabilizer.order() });
    }
    Ok(CentralizerWeyl { from_centralizer, stabilizer, centralizer_dim: gc.total.dim() })
}
