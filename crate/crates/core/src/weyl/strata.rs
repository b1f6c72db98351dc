//! Stabilizers, fixed spaces, strata and the comparison of removed loci inside each stratum.

use std::collections::{HashMap, HashSet};

use crate::exactnum::{CycloField, CycloScalar, ExactMatrix, Subspace};
use crate::weights::WeightSystem;

use super::group::fixed_space_of;
use super::{MatrixGroup, WeylError};

/// Upper bound on the curve parameter tried when searching for a representative.
const REPRESENTATIVE_SEARCH_LIMIT: i64 = 4096;

pub fn stabilizer(w: &MatrixGroup, p: &[CycloScalar]) -> Result<MatrixGroup, WeylError> {
    w.subgroup(&w.stabilizer_indices(p))
}

/// Solutions of (w_i - 1) q = 0 over the generators of the group.
pub fn fixed_space(w: &MatrixGroup) -> Subspace {
    w.fixed_space()
}

/// Pointwise stabilizer of a subspace, as sorted indices.
pub fn pointwise_stabilizer(w: &MatrixGroup, f: &Subspace) -> Vec<usize> {
    w.select(|x| f.basis().iter().all(|b| x.mul_vec(b) == *b))
}

/// How the representative was certified to lie in the open part of its stratum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityCertificate {
    /// W_p equals the pointwise stabilizer of the fixed space.
    pub stabilizer_exact: bool,
    /// No nonzero restricted weight vanishes at p.
    pub sigma_regular: bool,
    /// Parameter t of the accepted point sum_i t^i b_i.
    pub curve_parameter: i64,
}

#[derive(Clone, Debug)]
pub struct Stratum {
    /// Coordinates in the basis of h.
    pub representative: Vec<CycloScalar>,
    pub stabilizer: MatrixGroup,
    /// W_p as sorted indices into the ambient little Weyl group.
    pub stabilizer_indices: Vec<usize>,
    pub fixed_space: Subspace,
    /// The W-conjugates of the fixed space, each with an element w carrying the fixed space onto it.
    pub conjugates: Vec<(Subspace, usize)>,
    pub regularity: RegularityCertificate,
}

/// A flat of the arrangement of fixed spaces, with its pointwise stabilizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub space: Subspace,
    pub stabilizer: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct StrataDecomposition {
    pub strata: Vec<Stratum>,
    pub flats: Vec<Flat>,
}

/// All subspaces Fix(w), closed under intersection, sorted by dimension then stabilizer.
pub fn flats(w: &MatrixGroup) -> Vec<Flat> {
    let field = w.field();
    let n = w.dim();
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut list: Vec<Subspace> = Vec::new();
    for x in w.elements() {
        let f = fixed_space_of(field, n, std::slice::from_ref(x));
        if seen.insert(f.clone()) {
            list.push(f);
        }
    }
    let mut start = 0;
    while start < list.len() {
        let end = list.len();
        for i in start..end {
            for j in 0..i {
                let f = list[i].intersection(&list[j]);
                if seen.insert(f.clone()) {
                    list.push(f);
                }
            }
        }
        start = end;
    }
    let mut out: Vec<Flat> = list.into_iter().map(|space| Flat { stabilizer: pointwise_stabilizer(w, &space), space }).collect();
    out.sort_by(|a, b| a.space.dim().cmp(&b.space.dim()).then_with(|| a.stabilizer.cmp(&b.stabilizer)));
    out
}

/// One stratum per W-orbit of flats, i.e. per conjugacy class of stabilizer subgroups.
pub fn strata(w: &MatrixGroup, sigma: &WeightSystem) -> Result<StrataDecomposition, WeylError> {
    let flats = flats(w);
    let position: HashMap<Subspace, usize> = flats.iter().enumerate().map(|(i, f)| (f.space.clone(), i)).collect();
    let mut assigned = vec![false; flats.len()];
    let mut strata = Vec::new();
    for (i, flat) in flats.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let mut conjugates: Vec<(Subspace, usize)> = Vec::new();
        for (k, x) in w.elements().iter().enumerate() {
            let img = flat.space.image(x);
            let j = position[&img];
            if !assigned[j] {
                assigned[j] = true;
                conjugates.push((img, k));
            }
        }
        let (representative, regularity) = open_point(w, sigma, flat)?;
        strata.push(Stratum {
            representative,
            stabilizer: w.subgroup(&flat.stabilizer)?,
            stabilizer_indices: flat.stabilizer.clone(),
            fixed_space: flat.space.clone(),
            conjugates,
            regularity,
        });
    }
    Ok(StrataDecomposition { strata, flats })
}

/// True iff q lies off every proper flat inside F, i.e. W_q is the pointwise stabilizer of F.
pub fn in_open_part(w: &MatrixGroup, flat: &Flat, q: &[CycloScalar]) -> bool {
    w.stabilizer_indices(q) == flat.stabilizer
}

/// Restrictions to F of the nonzero weights that do not vanish on F, as functionals on h coordinates.
fn weights_nonvanishing_on(sigma: &WeightSystem, f: &Subspace) -> Vec<Vec<CycloScalar>> {
    sigma
        .nonzero()
        .filter(|wt| f.basis().iter().any(|b| !WeightSystem::evaluate(&wt.functional, b).is_zero()))
        .map(|wt| wt.functional.clone())
        .collect()
}

pub fn is_sigma_regular_in(sigma: &WeightSystem, f: &Subspace, q: &[CycloScalar]) -> bool {
    weights_nonvanishing_on(sigma, f).iter().all(|l| !WeightSystem::evaluate(l, q).is_zero())
}

/// First point sum_i t^i b_i, t = 1, 2, ..., in the open part of F and Sigma(F)-regular.
///
/// A point on this curve lies in a proper subspace of F for at most dim F - 1 values of t,
/// so the search ends after finitely many steps.
fn open_point(w: &MatrixGroup, sigma: &WeightSystem, flat: &Flat) -> Result<(Vec<CycloScalar>, RegularityCertificate), WeylError> {
    let field = w.field();
    let f = &flat.space;
    if f.dim() == 0 {
        let cert = RegularityCertificate { stabilizer_exact: true, sigma_regular: true, curve_parameter: 0 };
        return Ok((vec![field.zero(); w.dim()], cert));
    }
    let functionals = weights_nonvanishing_on(sigma, f);
    for t in 1..=REPRESENTATIVE_SEARCH_LIMIT {
        let q = curve_point(field, f, t);
        if functionals.iter().all(|l| !WeightSystem::evaluate(l, &q).is_zero()) && in_open_part(w, flat, &q) {
            let cert = RegularityCertificate { stabilizer_exact: true, sigma_regular: true, curve_parameter: t };
            return Ok((q, cert));
        }
    }
    Err(WeylError::NoRepresentative(f.dim()))
}

fn curve_point(field: &'static CycloField, f: &Subspace, t: i64) -> Vec<CycloScalar> {
    let mut power = field.one();
    let tt = field.int(t);
    let mut coeffs = Vec::with_capacity(f.dim());
    for _ in 0..f.dim() {
        coeffs.push(power.clone());
        power = &power * &tt;
    }
    f.combine(&coeffs)
}

/// Number of (stratum, w) pairs checked for: w F_p is a flat F' iff w W_p w^-1 = W_F'.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationCheck {
    pub pairs: usize,
}

/// Checks both sides of the correspondence w h_p = h_p' iff w W_p w^-1 = W_p', for every stratum,
/// every w and every flat p'.
pub fn verify_conjugation_equivalence(w: &MatrixGroup, dec: &StrataDecomposition) -> Result<ConjugationCheck, WeylError> {
    let by_space: HashMap<&Subspace, usize> = dec.flats.iter().enumerate().map(|(i, f)| (&f.space, i)).collect();
    let by_group: HashMap<&[usize], usize> = dec.flats.iter().enumerate().map(|(i, f)| (f.stabilizer.as_slice(), i)).collect();
    let mut pairs = 0;
    for (si, s) in dec.strata.iter().enumerate() {
        for (k, x) in w.elements().iter().enumerate() {
            let img = s.fixed_space.image(x);
            let conj = w.conjugate_set(k, &s.stabilizer_indices);
            let lhs = by_space.get(&img).copied();
            let rhs = by_group.get(conj.as_slice()).copied();
            if lhs.is_none() || lhs != rhs {
                return Err(WeylError::ConjugationMismatch { stratum: si, element: k });
            }
            pairs += 1;
        }
    }
    Ok(ConjugationCheck { pairs })
}

/// The two removed loci inside a stratum's fixed space, and where they differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircCertificate {
    pub equal: bool,
    /// Maximal proper subspaces F cap Fix(w), w outside W_p.
    pub stabilizer_loci: Vec<Subspace>,
    /// Kernels in F of the nonzero weights restricted to F.
    pub weight_kernels: Vec<Subspace>,
    pub only_stabilizer: Vec<Subspace>,
    pub only_weight: Vec<Subspace>,
}

/// Compares the complement of the open part of F with the complement of its Sigma(F)-regular part.
pub fn circ_equals_reg(w: &MatrixGroup, sigma: &WeightSystem, stratum: &Stratum) -> CircCertificate {
    let f = &stratum.fixed_space;
    let inside: HashSet<usize> = stratum.stabilizer_indices.iter().copied().collect();
    let mut loci: Vec<Subspace> = Vec::new();
    for (k, x) in w.elements().iter().enumerate() {
        if inside.contains(&k) {
            continue;
        }
        let a = f.intersection(&fixed_space_of(w.field(), w.dim(), std::slice::from_ref(x)));
        if a.dim() < f.dim() && !loci.contains(&a) {
            loci.push(a);
        }
    }
    let maximal: Vec<Subspace> =
        loci.iter().filter(|a| !loci.iter().any(|b| b.dim() > a.dim() && b.contains_space(a))).cloned().collect();
    let mut kernels: Vec<Subspace> = Vec::new();
    for l in weights_nonvanishing_on(sigma, f) {
        let k = f.intersection(&Subspace::annihilator(w.field(), w.dim(), &[l]));
        if !kernels.contains(&k) {
            kernels.push(k);
        }
    }
    let only_stabilizer: Vec<Subspace> = maximal.iter().filter(|a| !kernels.contains(a)).cloned().collect();
    let only_weight: Vec<Subspace> = kernels.iter().filter(|k| !maximal.contains(k)).cloned().collect();
    CircCertificate {
        equal: only_stabilizer.is_empty() && only_weight.is_empty(),
        stabilizer_loci: maximal,
        weight_kernels: kernels,
        only_stabilizer,
        only_weight,
    }
}

/// Normalizer of W_p acting on the fixed space, with a freeness check at the representative.
#[derive(Clone, Debug)]
pub struct GammaP {
    pub group: MatrixGroup,
    pub normalizer_order: usize,
    pub stabilizer_order: usize,
    pub free_at_representative: bool,
}

pub fn gamma_p(w: &MatrixGroup, stratum: &Stratum) -> Result<GammaP, WeylError> {
    let f = &stratum.fixed_space;
    let field = w.field();
    let normalizer: Vec<usize> =
        (0..w.order()).filter(|&k| w.conjugate_set(k, &stratum.stabilizer_indices) == stratum.stabilizer_indices).collect();
    let mut images: Vec<ExactMatrix> = Vec::new();
    for &k in &normalizer {
        let x = w.element(k);
        let cols: Vec<Vec<CycloScalar>> = f
            .basis()
            .iter()
            .map(|b| f.coordinates(&x.mul_vec(b)).ok_or(WeylError::NotClosed))
            .collect::<Result<_, _>>()?;
        images.push(ExactMatrix::from_columns(field, f.dim(), &cols));
    }
    let group = MatrixGroup::from_elements(field, f.dim(), &images)?;
    let p = f.coordinates(&stratum.representative).ok_or(WeylError::NotClosed)?;
    let free_at_representative = group.elements().iter().skip(1).all(|g| g.mul_vec(&p) != p);
    Ok(GammaP {
        group,
        normalizer_order: normalizer.len(),
        stabilizer_order: stratum.stabilizer_indices.len(),
        free_at_representative,
    })
}
