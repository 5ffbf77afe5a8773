//! Twisted Alexander matrices of nilpotent quotients and the distribution of
//! index-`p` subgroups by the torsion of their abelianization.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::group::{nilpotent_presentation, GroupRingElt, Presentation, Representation};
use crate::linalg::{
    smith_normal_form_of_rows, torsion_p_dimension, AbelianGroupClass, IntegerMatrix, Prime, ProjectiveSpace,
};
use crate::{Error, Result};

/// Largest accepted row or column count of a twisted Alexander matrix.
pub const MAX_TWISTED_DIM: usize = 5000;

const CHUNK: u64 = 256;

/// The `p × p` matrix of multiplication by `e` on `Z[Z_p]`: column `j` holds
/// the coefficients of `ζ^j e`.
pub fn regular_rep(e: &GroupRingElt) -> IntegerMatrix {
    let p = e.order();
    let c = e.coeffs();
    IntegerMatrix::from_fn(p, p, |i, j| c[(i + p - j) % p])
}

/// `A_λ`: the Fox Jacobian of a presentation evaluated in `Z[Z_p]`, each entry
/// replaced by its regular representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedAlexander {
    pub base: IntegerMatrix,
    pub rep: Representation,
}

fn check_size(g: &Presentation, p: usize) -> Result<()> {
    let (rows, cols) = (g.relators().len() * p, g.n() * p);
    if rows > MAX_TWISTED_DIM || cols > MAX_TWISTED_DIM {
        return Err(Error::MatrixTooLarge { rows, cols, limit: MAX_TWISTED_DIM });
    }
    Ok(())
}

fn check_rep(g: &Presentation, rep: &Representation) -> Result<()> {
    if rep.n() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), got: rep.n() });
    }
    Ok(())
}

/// Rows of `A_λ` for one relator, computed in a single pass over the word.
fn relator_rows(w: &crate::group::Word, rep: &Representation, out: &mut Vec<Vec<i64>>) {
    let p = rep.modulus().as_usize();
    let n = rep.n();
    let lam = rep.lambda();
    // fox[i * p + e] = coefficient of ζ^e in the derivative by x_i
    let mut fox = vec![0i64; n * p];
    let mut e = 0usize;
    for l in w.letters() {
        let step = lam[l.generator] as usize;
        if l.inverse {
            e = (e + p - step) % p;
            fox[l.generator * p + e] -= 1;
        } else {
            fox[l.generator * p + e] += 1;
            e = (e + step) % p;
        }
    }
    for a in 0..p {
        let row: Vec<i64> = (0..n * p).map(|col| fox[(col / p) * p + (a + p - col % p) % p]).collect();
        if row.iter().any(|&x| x != 0) {
            out.push(row);
        }
    }
}

/// Nonzero rows of the twisted Alexander matrix.
fn twisted_rows(g: &Presentation, rep: &Representation) -> Vec<Vec<i64>> {
    let mut rows = Vec::new();
    for r in g.relators() {
        relator_rows(r, rep, &mut rows);
    }
    rows
}

pub fn twisted_alexander(g: &Presentation, rep: &Representation) -> Result<TwistedAlexander> {
    check_rep(g, rep)?;
    let p = rep.modulus().as_usize();
    check_size(g, p)?;
    let (m, n) = (g.relators().len(), g.n());
    let mut base = IntegerMatrix::zeros(m * p, n * p);
    for (k, r) in g.relators().iter().enumerate() {
        for i in 0..n {
            let block = regular_rep(&crate::group::fox_eval(r, i, rep));
            for a in 0..p {
                for b in 0..p {
                    base[(k * p + a, i * p + b)] = block[(a, b)];
                }
            }
        }
    }
    Ok(TwistedAlexander { base, rep: rep.clone() })
}

/// `H_1(K)` for the kernel `K` of `λ: G -> Z_p`, where `g` presents `G`.
///
/// The twisted Alexander matrix presents `H_1(K) ⊕ Z^{p-1}`; the free summand
/// is removed here.
pub fn kernel_abelianization(g: &Presentation, rep: &Representation) -> Result<AbelianGroupClass> {
    check_rep(g, rep)?;
    let p = rep.modulus().as_usize();
    check_size(g, p)?;
    let rows = twisted_rows(g, rep);
    let snf = smith_normal_form_of_rows(g.n() * p, &rows);
    let torsion: Vec<BigInt> = snf.diagonal.into_iter().filter(|d| *d > BigInt::from(1)).collect();
    let free_rank = snf
        .free_rank
        .checked_sub(p - 1)
        .ok_or(Error::MalformedPresentation { free_rank: snf.free_rank, expected: p - 1 })?;
    Ok(AbelianGroupClass { free_rank, torsion })
}

/// `(r, l)` with `r = ⌈(q-2)/(p-1)⌉` and `q - 2 = (r-1)(p-1) + l`.
pub fn stage_parameters(q: usize, p: u64) -> (u32, u64) {
    assert!(q >= 3, "stage must be at least 3");
    let p1 = p as usize - 1;
    let r = (q - 2).div_ceil(p1);
    let l = (q - 2) - (r - 1) * p1;
    (r as u32, l as u64)
}

/// Closed form of `H_1(K)` for an index-`p` subgroup of the free nilpotent
/// group `F(n)/F(n)_q`:
/// `Z^n ⊕ (Z/p^{r-1})^{(n-1)(p-l-1)} ⊕ (Z/p^r)^{(n-1)l}`.
pub fn free_nilpotent_oracle(n: usize, q: usize, p: Prime) -> AbelianGroupClass {
    let pp = p.get();
    let (r, l) = stage_parameters(q, pp);
    let mut torsion = Vec::new();
    let low = BigInt::from(pp).pow(r - 1);
    let high = BigInt::from(pp).pow(r);
    if r > 1 {
        torsion.extend(std::iter::repeat_n(low, (n - 1) * (pp - l - 1) as usize));
    }
    torsion.extend(std::iter::repeat_n(high, (n - 1) * l as usize));
    AbelianGroupClass { free_rank: n, torsion }
}

/// Whether `class` has the shape forced on `H_1(K)` at stage `q`: free rank
/// `n`, torsion divisors `p^i` with `1 <= i <= r`, at most `(n-1)(p-1)` of
/// them, and at most `l(n-1)` equal to `p^r`.
pub fn structure_check(class: &AbelianGroupClass, n: usize, q: usize, p: Prime) -> bool {
    let pp = p.get();
    let (r, l) = stage_parameters(q, pp);
    if class.free_rank != n || class.torsion.len() > (n - 1) * (pp as usize - 1) {
        return false;
    }
    let top = BigInt::from(pp).pow(r);
    let mut top_count = 0u64;
    for d in &class.torsion {
        let mut x = d.clone();
        let mut e = 0;
        while x > BigInt::from(1) && (&x % pp) == BigInt::from(0) {
            x /= pp;
            e += 1;
        }
        if x != BigInt::from(1) || e == 0 || e > r {
            return false;
        }
        top_count += (*d == top) as u64;
    }
    top_count <= l * (n as u64 - 1)
}

/// Distribution of `H_1(K)` over all index-`p` normal subgroups `K` of `G/G_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuTable {
    pub q: usize,
    pub p: Prime,
    pub n: usize,
    /// Full class of `H_1(K)` ↦ number of subgroups.
    pub classes: BTreeMap<AbelianGroupClass, u64>,
    /// Number of classes failing [`structure_check`].
    pub violations: u64,
}

impl NuTable {
    /// `ν_{p,d}` indexed by `d = dim Tors H_1(K) ⊗ Z_p`, trailing zeros trimmed.
    pub fn by_dimension(&self) -> Vec<u64> {
        let mut v = vec![0u64; self.n.max(1)];
        for (c, &k) in &self.classes {
            let d = torsion_p_dimension(c, self.p.get());
            if d >= v.len() {
                v.resize(d + 1, 0);
            }
            v[d] += k;
        }
        let len = v.iter().rposition(|&c| c != 0).map_or(1, |i| i + 1);
        v.truncate(len);
        v
    }

    pub fn total(&self) -> u64 {
        self.classes.values().sum()
    }

    pub fn total_is_consistent(&self) -> bool {
        self.total() == self.p.projective_count(self.n)
    }
}

impl fmt::Display for NuTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, k) in &self.classes {
            writeln!(f, "{}\t{c}\t{k}", torsion_p_dimension(c, self.p.get()))?;
        }
        Ok(())
    }
}

/// `H_1(K_λ)` for every `λ ∈ P(Z_p^n)` in enumeration order, where `gq`
/// presents the nilpotent quotient itself.
pub fn kernel_classes(gq: &Presentation, p: Prime) -> Result<Vec<AbelianGroupClass>> {
    check_size(gq, p.as_usize())?;
    let space = ProjectiveSpace::new(gq.n(), p);
    let chunks = space.len().div_ceil(CHUNK);
    let parts: Vec<Vec<AbelianGroupClass>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            space
                .range(c * CHUNK, ((c + 1) * CHUNK).min(space.len()))
                .map(|pt| {
                    let rep = Representation::from_residues(p, pt.coords())?;
                    kernel_abelianization(gq, &rep)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().flatten().collect())
}

/// `ν_{p,•}(G/G_q)` for a commutator-relators presentation `g` of `G`.
pub fn nu_table(g: &Presentation, q: usize, p: Prime) -> Result<NuTable> {
    g.check_commutator_relators()?;
    if q < 3 {
        return Err(Error::Unsupported(format!("stage q = {q}; need q >= 3")));
    }
    let gq = nilpotent_presentation(g, q);
    let mut classes = BTreeMap::new();
    let mut violations = 0;
    for c in kernel_classes(&gq, p)? {
        if !structure_check(&c, g.n(), q, p) {
            violations += 1;
        }
        *classes.entry(c).or_insert(0) += 1;
    }
    Ok(NuTable { q, p, n: g.n(), classes, violations })
}
