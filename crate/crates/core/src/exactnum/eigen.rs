use super::{roots_in_field, CycloField, CycloScalar, ExactError, ExactMatrix, Subspace};

/// A joint eigenspace: `eigenvalues[k]` is the eigenvalue of the k-th input matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenBlock {
    pub eigenvalues: Vec<CycloScalar>,
    pub space: Subspace,
}

/// Matrix of `m` restricted to the invariant subspace `s`, in the echelon coordinates of `s`.
pub fn restrict_to(m: &ExactMatrix, s: &Subspace) -> Option<ExactMatrix> {
    let cols: Vec<Vec<CycloScalar>> = s.basis().iter().map(|b| s.coordinates(&m.mul_vec(b))).collect::<Option<_>>()?;
    Some(ExactMatrix::from_columns(m.field(), s.dim(), &cols))
}

/// Decomposes K^n into joint eigenspaces of pairwise commuting diagonalizable matrices.
///
/// Blocks are sorted by eigenvalue tuple in the canonical scalar order.
pub fn simultaneous_eigenspaces(
    field: &'static CycloField,
    n: usize,
    mats: &[ExactMatrix],
) -> Result<Vec<EigenBlock>, ExactError> {
    for m in mats {
        if m.rows() != n || m.cols() != n {
            return Err(ExactError::Shape(format!("expected {n}x{n}, got {}x{}", m.rows(), m.cols())));
        }
    }
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            if !mats[i].commutes_with(&mats[j]) {
                return Err(ExactError::NonCommuting(i, j));
            }
        }
    }
    let mut blocks = vec![EigenBlock { eigenvalues: Vec::new(), space: Subspace::full(field, n) }];
    for (idx, m) in mats.iter().enumerate() {
        let mut next = Vec::new();
        for block in blocks {
            let c = restrict_to(m, &block.space).ok_or(ExactError::NonCommuting(idx, idx))?;
            let k = c.rows();
            if k == 0 {
                continue;
            }
            let first = c.get(0, 0).clone();
            if c == ExactMatrix::scalar(field, k, &first) {
                let mut ev = block.eigenvalues.clone();
                ev.push(first);
                next.push(EigenBlock { eigenvalues: ev, space: block.space });
                continue;
            }
            let mp = c.minimal_polynomial();
            let search = roots_in_field(&mp)?;
            if !search.splits() {
                return Err(ExactError::EigenvalueOutsideField(search.residual.to_string()));
            }
            let mut total = 0;
            for lambda in &search.roots {
                let shifted = &c - &ExactMatrix::scalar(field, k, lambda);
                let vecs: Vec<Vec<CycloScalar>> = shifted.kernel().iter().map(|v| block.space.combine(v)).collect();
                total += vecs.len();
                let mut ev = block.eigenvalues.clone();
                ev.push(lambda.clone());
                next.push(EigenBlock { eigenvalues: ev, space: Subspace::span(field, n, &vecs) });
            }
            if total != k {
                return Err(ExactError::NotDiagonalizable(idx));
            }
        }
        blocks = next;
    }
    blocks.sort_by(|a, b| a.eigenvalues.cmp(&b.eigenvalues));
    Ok(blocks)
}
