//! Exterior-algebra cokernel invariants `Z_{i,j}` of the classifying map of
//! `G/G_3`, and the Ziegler invariant of a 2-arrangement.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::arrangement::{chi_transpose_matrix, LinkingMatrix};
use crate::linalg::{classify_relation_matrix, AbelianGroupClass, IntegerMatrix};
use crate::{Error, Result};

/// Largest `i + 2j` accepted by [`z_invariant`].
pub const MAX_Z_DEGREE: usize = 8;

/// The basis `{e_S : S a k-subset of {0..n-1}}` of `Λ^k Z^n`, ordered lexicographically.
#[derive(Clone, Debug)]
pub struct ExteriorBasis {
    n: usize,
    k: usize,
    subsets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl ExteriorBasis {
    pub fn new(n: usize, k: usize) -> Self {
        let subsets = k_subsets(n, k);
        let index = subsets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        ExteriorBasis { n, k, subsets, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subset(&self, i: usize) -> &[usize] {
        &self.subsets[i]
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s).copied()
    }
}

/// Strictly increasing `k`-subsets of `{0..n-1}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[pos] += 1;
        for i in pos + 1..k {
            cur[i] = cur[i - 1] + 1;
        }
    }
}

/// An element of `Λ^k Z^n` in coordinates of [`ExteriorBasis::new(n, k)`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorVector {
    pub n: usize,
    pub k: usize,
    pub coeffs: Vec<i64>,
}

impl ExteriorVector {
    pub fn zero(n: usize, k: usize) -> Self {
        ExteriorVector { n, k, coeffs: vec![0; binomial(n, k)] }
    }

    /// The basis vector `e_S`, with `S` given in any order (sign adjusted).
    pub fn basis(n: usize, s: &[usize]) -> Self {
        let mut v = Self::zero(n, s.len());
        let mut sorted = s.to_vec();
        let sign = sort_sign(&mut sorted);
        if sign != 0 {
            let basis = ExteriorBasis::new(n, s.len());
            v.coeffs[basis.index_of(&sorted).expect("indices below n")] = sign;
        }
        v
    }

    /// A degree-1 vector from its coordinates.
    pub fn from_degree_one(coords: &[i64]) -> Self {
        ExteriorVector { n: coords.len(), k: 1, coeffs: coords.to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Sorts `s` in place and returns the sign of the sorting permutation, or 0
/// if `s` has a repeated entry.
fn sort_sign(s: &mut [usize]) -> i64 {
    let mut sign = 1;
    for i in 1..s.len() {
        let mut j = i;
        while j > 0 && s[j - 1] > s[j] {
            s.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if s.windows(2).any(|w| w[0] == w[1]) {
        0
    } else {
        sign
    }
}

/// `a ∧ b` in `Λ^{i+j} Z^n`.
pub fn wedge_multiply(a: &ExteriorVector, b: &ExteriorVector) -> Result<ExteriorVector> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch { expected: a.n, got: b.n });
    }
    let n = a.n;
    if a.k + b.k > n {
        return Err(Error::DegreeOverflow { degree: a.k + b.k, bound: n });
    }
    let (ba, bb, bc) = (ExteriorBasis::new(n, a.k), ExteriorBasis::new(n, b.k), ExteriorBasis::new(n, a.k + b.k));
    let mut out = ExteriorVector::zero(n, a.k + b.k);
    let mut buf = Vec::with_capacity(a.k + b.k);
    for (ia, &ca) in a.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
        for (ib, &cb) in b.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            buf.clear();
            buf.extend_from_slice(ba.subset(ia));
            buf.extend_from_slice(bb.subset(ib));
            let sign = sort_sign(&mut buf);
            if sign != 0 {
                out.coeffs[bc.index_of(&buf).expect("sorted subset")] += sign * ca * cb;
            }
        }
    }
    Ok(out)
}

/// `Z_{i,j}`: the cokernel of `Λ^i H ⊗ Λ^j (G_2/G_3) → Λ^{i+2j} H`, where the
/// rows of `chi_t` are the images in `Λ^2 H` of a basis of `G_2/G_3`.
pub fn z_invariant(i: usize, j: usize, chi_t: &IntegerMatrix, n: usize) -> Result<AbelianGroupClass> {
    let degree = i + 2 * j;
    if degree > n || degree > MAX_Z_DEGREE {
        return Err(Error::DegreeOverflow { degree, bound: n.min(MAX_Z_DEGREE) });
    }
    if chi_t.cols() != binomial(n, 2) {
        return Err(Error::DimensionMismatch { expected: binomial(n, 2), got: chi_t.cols() });
    }
    let rows: Vec<ExteriorVector> = chi_t
        .row_iter()
        .map(|r| ExteriorVector { n, k: 2, coeffs: r.to_vec() })
        .collect();
    let row_sets = k_subsets(rows.len(), j);
    let left = ExteriorBasis::new(n, i);
    let images: Vec<Vec<i64>> = row_sets
        .par_iter()
        .map(|set| {
            let mut acc = ExteriorVector { n, k: 0, coeffs: vec![1] };
            for &r in set {
                acc = wedge_multiply(&acc, &rows[r]).expect("degree checked");
            }
            acc
        })
        .flat_map_iter(|w| {
            left.subsets()
                .iter()
                .map(move |s| wedge_multiply(&ExteriorVector::basis(n, s), &w).expect("degree checked").coeffs)
                .collect::<Vec<_>>()
        })
        .filter(|v| v.iter().any(|&c| c != 0))
        .collect();
    let m = IntegerMatrix::from_rows(binomial(n, degree), &images);
    Ok(classify_relation_matrix(&m))
}

/// The Ziegler invariant `Z_{0,2}` of the 2-arrangement with linking matrix `lk`.
///
/// The result always has the shape `Z^{C(n-1,3) - r} ⊕ Z_2^r`; anything else
/// is reported as [`Error::ShapeViolation`].
pub fn ziegler_invariant(lk: &LinkingMatrix) -> Result<AbelianGroupClass> {
    let n = lk.n();
    if n < 4 {
        return Err(Error::Unsupported(format!("Ziegler invariant needs at least 4 planes, got {n}")));
    }
    let class = z_invariant(0, 2, &chi_transpose_matrix(lk), n)?;
    let r = class.torsion.len();
    let expected_free = binomial(n - 1, 3).checked_sub(r);
    if class.torsion.iter().any(|d| *d != 2.into()) || expected_free != Some(class.free_rank) {
        return Err(Error::ShapeViolation(format!("Z_(0,2) = {class} is not of the form Z^(C(n-1,3)-r) + Z2^r")));
    }
    Ok(class)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, s: &[usize]) -> ExteriorVector {
        ExteriorVector::basis(n, s)
    }

    #[test]
    fn subsets_in_lex_order() {
        assert_eq!(k_subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(k_subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(k_subsets(2, 3).is_empty());
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(k_subsets(n, k).len(), binomial(n, k));
            }
        }
    }

    #[test]
    fn wedge_signs() {
        assert!(wedge_multiply(&e(4, &[0]), &e(4, &[0])).unwrap().is_zero());
        assert_eq!(wedge_multiply(&e(4, &[0]), &e(4, &[1])).unwrap(), e(4, &[0, 1]));
        let ba = wedge_multiply(&e(4, &[1]), &e(4, &[0])).unwrap();
        assert_eq!(ba.coeffs[0], -1);
        assert_eq!(wedge_multiply(&e(4, &[0, 1]), &e(4, &[2, 3])).unwrap().coeffs, vec![1]);
        assert_eq!(wedge_multiply(&e(4, &[0, 2]), &e(4, &[1, 3])).unwrap().coeffs, vec![-1]);
        assert!(matches!(
            wedge_multiply(&e(3, &[0, 1]), &e(3, &[1, 2])),
            Err(Error::DegreeOverflow { degree: 4, bound: 3 })
        ));
    }

    #[test]
    fn basis_with_unsorted_indices() {
        assert_eq!(e(3, &[2, 0]).coeffs, vec![0, -1, 0]);
        assert!(e(3, &[1, 1]).is_zero());
    }
}
