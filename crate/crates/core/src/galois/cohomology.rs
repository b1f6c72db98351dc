//! First Galois cohomology of finite Gamma-groups by enumeration.

use std::collections::{HashMap, HashSet};

use super::{GaloisError, GammaGroup};

/// Default bound on the group order for cohomology computations.
pub const DEFAULT_H1_CAP: usize = 200_000;

/// H^1 of a Gamma-group: cocycles z with z * twist(z) = e up to z ~ a z twist(a)^-1.
///
/// Class 0 is the class of the identity; the others are ordered by their smallest element,
/// which is also the representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Set {
    pub representatives: Vec<usize>,
    pub cocycles: Vec<usize>,
    /// Class of each group element, None for non-cocycles.
    pub class_of: Vec<Option<usize>>,
    pub class_sizes: Vec<usize>,
}

impl H1Set {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

pub fn is_cocycle(a: &GammaGroup, z: usize) -> bool {
    a.mul(z, a.twist(z)) == a.identity()
}

/// The twisted action a . z = a z twist(a)^-1.
pub fn twisted_action(a: &GammaGroup, g: usize, z: usize) -> usize {
    a.mul(a.mul(g, z), a.inv(a.twist(g)))
}

/// Enumerates Z^1 and its classes. Orbits are taken under the generators, which give the same
/// partition as the whole group since the twisted action is a group action.
pub fn h1(a: &GammaGroup, cap: usize) -> Result<H1Set, GaloisError> {
    let n = a.order();
    if n > cap {
        return Err(GaloisError::Cap { order: n, cap });
    }
    let cocycles: Vec<usize> = (0..n).filter(|&z| is_cocycle(a, z)).collect();
    let mut uf = UnionFind((0..n).collect());
    for &z in &cocycles {
        for &g in a.generators() {
            uf.union(z, twisted_action(a, g, z));
        }
    }
    let mut roots: Vec<usize> = cocycles.iter().map(|&z| uf.find(z)).collect();
    roots.sort_unstable();
    roots.dedup();
    let identity_root = uf.find(a.identity());
    roots.sort_by_key(|&r| (r != identity_root, r));
    let position: HashMap<usize, usize> = roots.iter().enumerate().map(|(c, &r)| (r, c)).collect();
    let mut class_of = vec![None; n];
    let mut class_sizes = vec![0usize; roots.len()];
    for &z in &cocycles {
        let c = position[&uf.find(z)];
        class_of[z] = Some(c);
        class_sizes[c] += 1;
    }
    let mut representatives: Vec<usize> = roots.clone();
    representatives[0] = a.identity();
    Ok(H1Set { representatives, cocycles, class_of, class_sizes })
}

/// Classes of H^1(A) that become trivial in H^1(B) along `embedding`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedKernel {
    pub source: H1Set,
    pub kernel: Vec<usize>,
}

/// Checks that `embedding` is an injective, twist-equivariant homomorphism A -> B.
pub fn check_embedding(a: &GammaGroup, b: &GammaGroup, embedding: &[usize]) -> Result<(), GaloisError> {
    if embedding.len() != a.order() || embedding.iter().any(|&x| x >= b.order()) {
        return Err(GaloisError::NotEquivariant("embedding has the wrong size or range".into()));
    }
    if embedding.iter().collect::<HashSet<_>>().len() != embedding.len() {
        return Err(GaloisError::NotEquivariant("embedding is not injective".into()));
    }
    for x in 0..a.order() {
        if embedding[a.twist(x)] != b.twist(embedding[x]) {
            return Err(GaloisError::NotEquivariant(format!("twist does not commute with the embedding at {x}")));
        }
        for &g in a.generators() {
            if embedding[a.mul(x, g)] != b.mul(embedding[x], embedding[g]) {
                return Err(GaloisError::NotEquivariant(format!("embedding is not multiplicative at ({x}, {g})")));
            }
        }
    }
    Ok(())
}

pub fn induced_kernel(a: &GammaGroup, b: &GammaGroup, embedding: &[usize], cap: usize) -> Result<InducedKernel, GaloisError> {
    if b.order() > cap {
        return Err(GaloisError::Cap { order: b.order(), cap });
    }
    check_embedding(a, b, embedding)?;
    let source = h1(a, cap)?;
    // the class of e in H^1(B) is {b^-1 twist(b)}
    let trivial: HashSet<usize> = (0..b.order()).map(|x| b.mul(b.inv(x), b.twist(x))).collect();
    let kernel = source.representatives.iter().enumerate().filter(|(_, &z)| trivial.contains(&embedding[z])).map(|(c, _)| c).collect();
    Ok(InducedKernel { source, kernel })
}

/// The hypothesis under which the kernel counts real orbits.
pub const REAL_ORBIT_ASSUMPTION: &str = "all Cartan subspaces in g_1 are conjugate";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealOrbitCount {
    pub count: usize,
    pub kernel: InducedKernel,
    pub assumption: &'static str,
}

/// |ker[H^1 W_q -> H^1 W]| for the stabilizer W_q given by element indices of W.
pub fn real_orbit_count(w: &GammaGroup, stabilizer: &[usize], cap: usize) -> Result<RealOrbitCount, GaloisError> {
    let (sub, embedding) = w.subgroup(stabilizer)?;
    let kernel = induced_kernel(&sub, w, &embedding, cap)?;
    Ok(RealOrbitCount { count: kernel.kernel.len(), kernel, assumption: REAL_ORBIT_ASSUMPTION })
}
