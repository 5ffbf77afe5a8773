use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{smith_normal_form, IntegerMatrix};

/// Isomorphism class of a finitely generated abelian group
/// `Z^free_rank + Z/d_1 + ... + Z/d_k` with `1 < d_1 | d_2 | ... | d_k`.
///
/// The representation is canonical, so derived equality is group isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianGroupClass {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupClass {
    pub fn free(rank: usize) -> Self {
        AbelianGroupClass { free_rank: rank, torsion: Vec::new() }
    }

    /// Canonical class of `Z^free_rank + Z/o_1 + ... + Z/o_k` for arbitrary
    /// cyclic orders (ones are dropped, zeros become free summands).
    pub fn from_cyclic_factors(free_rank: usize, orders: &[i64]) -> Self {
        let k = orders.len();
        let m = IntegerMatrix::diagonal(k, k, orders);
        let mut class = classify_relation_matrix(&m);
        class.free_rank += free_rank;
        class
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// The torsion divisors that are not divisible by `p`, if any.
    pub fn non_p_torsion(&self, p: u64) -> Vec<BigInt> {
        let p = BigInt::from(p);
        self.torsion.iter().filter(|d| !(*d % &p).is_zero()).cloned().collect()
    }
}

/// The abelian group presented by `m`: rows are relations on `m.cols()` generators.
pub fn classify_relation_matrix(m: &IntegerMatrix) -> AbelianGroupClass {
    let snf = smith_normal_form(m);
    let torsion = snf
        .diagonal
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();
    AbelianGroupClass { free_rank: snf.free_rank, torsion }
}

/// `dim_{Z_p} Tors(G) (x) Z_p`: the number of divisors divisible by `p`.
pub fn torsion_p_dimension(g: &AbelianGroupClass, p: u64) -> usize {
    let p = BigInt::from(p);
    g.torsion.iter().filter(|d| (*d % &p).is_zero()).count()
}

impl fmt::Display for AbelianGroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            parts.push(format!("Z{}^{}", d, run));
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
