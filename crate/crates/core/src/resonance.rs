//! Stratification of `P(Z_p^n)` by the rank of the linearized Alexander matrix.

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;

use crate::linalg::{Prime, PrimeFieldMatrix, ProjectivePoint, ProjectiveSpace};

/// Points per parallel work unit.
const CHUNK: u64 = 4096;

/// Counts `ν_{p,d}(G/G_3)`: the number of `λ ∈ P(Z_p^n)` with
/// `rank M(λ) = n - 1 - d`, optionally with the points themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonanceProfile {
    pub p: Prime,
    pub n: usize,
    pub counts: Vec<u64>,
    pub strata: Option<Vec<Vec<ProjectivePoint>>>,
}

impl ResonanceProfile {
    pub fn count(&self, d: usize) -> u64 {
        self.counts.get(d).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Whether the counts add up to `|P(Z_p^n)|`.
    pub fn total_is_consistent(&self) -> bool {
        self.total() == self.p.projective_count(self.n)
    }

    /// Counts with trailing zeros removed (at least one entry).
    pub fn trimmed(&self) -> &[u64] {
        let len = self.counts.iter().rposition(|&c| c != 0).map_or(1, |i| i + 1);
        &self.counts[..len]
    }

    /// Collected points of stratum `d`, if collection was requested.
    pub fn stratum(&self, d: usize) -> Option<&[ProjectivePoint]> {
        self.strata.as_ref().map(|s| s.get(d).map_or(&[][..], |v| v.as_slice()))
    }

    /// Collected points of `P_d`, i.e. of all strata `d' >= d`.
    pub fn points_at_least(&self, d: usize) -> Vec<ProjectivePoint> {
        self.strata.iter().flat_map(|s| s.iter().skip(d).flatten().cloned()).collect()
    }
}

/// `d(λ) = n - 1 - rank M(λ)`.
pub fn torsion_dimension(n: usize, m: &PrimeFieldMatrix) -> usize {
    let rank = m.rank();
    assert!(rank < n, "linearized matrix of rank {rank} on {n} generators: λ must lie in its kernel");
    n - 1 - rank
}

/// Enumerates `P(Z_p^n)` (in parallel on the current rayon pool) and sorts
/// every point into its stratum.
pub fn stratify<F>(builder: F, n: usize, p: Prime, collect_points: bool) -> ResonanceProfile
where
    F: Fn(&[u64]) -> PrimeFieldMatrix + Sync,
{
    let space = ProjectiveSpace::new(n, p);
    let chunks = space.len().div_ceil(CHUNK);
    let partial: Vec<(Vec<u64>, Vec<Vec<ProjectivePoint>>)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut counts = vec![0u64; n];
            let mut pts: Vec<Vec<ProjectivePoint>> = vec![Vec::new(); if collect_points { n } else { 0 }];
            for pt in space.range(c * CHUNK, ((c + 1) * CHUNK).min(space.len())) {
                let d = torsion_dimension(n, &builder(pt.coords()));
                counts[d] += 1;
                if collect_points {
                    pts[d].push(pt);
                }
            }
            (counts, pts)
        })
        .collect();
    let mut counts = vec![0u64; n];
    let mut strata: Vec<Vec<ProjectivePoint>> = vec![Vec::new(); n];
    for (c, pts) in partial {
        counts.iter_mut().zip(&c).for_each(|(a, b)| *a += b);
        for (d, v) in pts.into_iter().enumerate() {
            strata[d].extend(v);
        }
    }
    ResonanceProfile { p, n, counts, strata: collect_points.then_some(strata) }
}

/// Stratifies an explicit list of points instead of the whole space.
pub fn stratify_points<F>(builder: F, n: usize, p: Prime, points: &[ProjectivePoint]) -> ResonanceProfile
where
    F: Fn(&[u64]) -> PrimeFieldMatrix + Sync,
{
    let dims: Vec<usize> = points.par_iter().map(|pt| torsion_dimension(n, &builder(pt.coords()))).collect();
    let mut counts = vec![0u64; n];
    let mut strata: Vec<Vec<ProjectivePoint>> = vec![Vec::new(); n];
    for (pt, d) in points.iter().zip(dims) {
        counts[d] += 1;
        strata[d].push(pt.clone());
    }
    ResonanceProfile { p, n, counts, strata: Some(strata) }
}

/// `λ ∈ R_d` iff `rank M(λ) < n - d`.
pub fn membership<F>(lambda: &[u64], d: usize, builder: F) -> bool
where
    F: Fn(&[u64]) -> PrimeFieldMatrix,
{
    let n = lambda.len();
    d == 0 || builder(lambda).rank() + d < n
}

/// Predicted counts when every component of `R_d` is a linear subspace and
/// distinct components meet only at 0: `ν_{p,d-1} = m_d (p^d - 1)/(p - 1)`,
/// where `m_d` is the number of components of dimension `d`.
pub fn expected_nu_from_components(components: &BTreeMap<usize, u64>, p: Prime) -> BTreeMap<usize, u64> {
    components
        .iter()
        .filter(|(&d, _)| d >= 1)
        .map(|(&d, &m)| (d - 1, m * p.projective_count(d)))
        .collect()
}

/// Points not annihilated by any of the linear `forms`; an empty result means
/// the points are covered by the union of the hyperplanes.
pub fn hyperplane_cover_check<'a>(
    points: impl IntoIterator<Item = &'a ProjectivePoint>,
    forms: &[Vec<i64>],
) -> Vec<ProjectivePoint> {
    points
        .into_iter()
        .filter(|pt| forms.iter().all(|f| pt.eval_form(f) != 0))
        .cloned()
        .collect()
}

/// `count` uniformly random points of `P(Z_p^n)`.
pub fn random_points(n: usize, p: Prime, count: usize, rng: &mut impl Rng) -> Vec<ProjectivePoint> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..p.get()) as i64).collect();
        if let Some(pt) = ProjectivePoint::new(p, &v) {
            out.push(pt);
        }
    }
    out
}

/// A polynomial with integer coefficients, as `(coefficient, exponents)` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    pub terms: Vec<(i64, Vec<u32>)>,
}

impl Polynomial {
    pub fn new(terms: Vec<(i64, Vec<u32>)>) -> Self {
        Polynomial { terms }
    }

    /// Linear form `Σ c_i λ_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (c, (0..n).map(|k| (k == i) as u32).collect()))
            .collect();
        Polynomial { terms }
    }

    /// Value at `x` in `Z_p`.
    pub fn eval_mod(&self, x: &[u64], p: Prime) -> u64 {
        self.terms.iter().fold(0, |acc, (c, e)| {
            let mono = e.iter().zip(x).fold(1, |m, (&k, &v)| m * p.pow(v % p.get(), k as u64) % p.get());
            (acc + p.reduce(*c) * mono) % p.get()
        })
    }

    pub fn vanishes_at(&self, x: &[u64], p: Prime) -> bool {
        self.eval_mod(x, p) == 0
    }
}
