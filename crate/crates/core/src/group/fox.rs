use std::ops::{Add, Mul, Neg, Sub};

use super::Word;
use crate::linalg::{IntegerMatrix, Prime};
use crate::{Error, Result};

/// An epimorphism `F(n) -> Z_p`, `x_i -> lambda_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    p: Prime,
    lambda: Vec<u64>,
}

impl Representation {
    pub fn new(p: Prime, lambda: &[i64]) -> Result<Self> {
        let lambda: Vec<u64> = lambda.iter().map(|&x| p.reduce(x)).collect();
        if lambda.iter().all(|&x| x == 0) {
            return Err(Error::TrivialRepresentation(p.get()));
        }
        Ok(Representation { p, lambda })
    }

    pub fn from_residues(p: Prime, lambda: &[u64]) -> Result<Self> {
        let signed: Vec<i64> = lambda.iter().map(|&x| (x % p.get()) as i64).collect();
        Self::new(p, &signed)
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn lambda(&self) -> &[u64] {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    /// Exponent `k` with `rho(w) = zeta^k`.
    pub fn exponent(&self, w: &Word) -> u64 {
        let p = self.p.get();
        w.letters().iter().fold(0, |acc, l| {
            let step = self.lambda.get(l.generator).copied().unwrap_or(0);
            if l.inverse {
                (acc + p - step) % p
            } else {
                (acc + step) % p
            }
        })
    }
}

/// Element of the group ring `Z[Z_p]`; `coeffs[j]` is the coefficient of `zeta^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElt {
    coeffs: Vec<i64>,
}

impl GroupRingElt {
    pub fn zero(p: Prime) -> Self {
        GroupRingElt { coeffs: vec![0; p.as_usize()] }
    }

    pub fn one(p: Prime) -> Self {
        Self::zeta_pow(p, 0)
    }

    pub fn zeta_pow(p: Prime, k: u64) -> Self {
        let mut e = Self::zero(p);
        e.coeffs[(k % p.get()) as usize] = 1;
        e
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty());
        GroupRingElt { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `zeta^k * self`
    pub fn shift(&self, k: u64) -> Self {
        let p = self.coeffs.len();
        let k = (k % p as u64) as usize;
        let mut out = vec![0; p];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[(j + k) % p] = c;
        }
        GroupRingElt { coeffs: out }
    }

    /// Augmentation: sum of coefficients.
    pub fn augmentation(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

impl Add for &GroupRingElt {
    type Output = GroupRingElt;
    fn add(self, o: &GroupRingElt) -> GroupRingElt {
        assert_eq!(self.order(), o.order());
        GroupRingElt { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &GroupRingElt {
    type Output = GroupRingElt;
    fn sub(self, o: &GroupRingElt) -> GroupRingElt {
        assert_eq!(self.order(), o.order());
        GroupRingElt { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &GroupRingElt {
    type Output = GroupRingElt;
    fn neg(self) -> GroupRingElt {
        GroupRingElt { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl Mul for &GroupRingElt {
    type Output = GroupRingElt;
    fn mul(self, o: &GroupRingElt) -> GroupRingElt {
        let p = self.order();
        assert_eq!(p, o.order());
        let mut out = vec![0; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[(i + j) % p] += a * b;
            }
        }
        GroupRingElt { coeffs: out }
    }
}

/// The Fox derivative `d_i(w)` pushed into `Z[Z_p]` by `rep`.
///
/// Computed in one pass from `D(uv) = D(u) + rho(u) D(v)`, with
/// `D(x_i) = 1` and `D(x_i^-1) = -zeta^(-lambda_i)`.
pub fn fox_eval(w: &Word, i: usize, rep: &Representation) -> GroupRingElt {
    let p = rep.p.get();
    let mut coeffs = vec![0i64; p as usize];
    let mut e = 0u64;
    for l in w.letters() {
        let step = rep.lambda.get(l.generator).copied().unwrap_or(0);
        if l.inverse {
            e = (e + p - step) % p;
            if l.generator == i {
                coeffs[e as usize] -= 1;
            }
        } else {
            if l.generator == i {
                coeffs[e as usize] += 1;
            }
            e = (e + step) % p;
        }
    }
    GroupRingElt { coeffs }
}

/// `epsilon_I(w)`: the coefficient of `X_{i_1} ... X_{i_k}` in the Magnus
/// expansion `x_j -> 1 + X_j` of `w`. For `|I| = 1` this is the exponent sum;
/// with this convention `epsilon_{1,2}([x1,x2]) = 1`.
pub fn epsilon(w: &Word, multi_index: &[usize]) -> i64 {
    let k = multi_index.len();
    // c[t] = coefficient of X_{i_1}..X_{i_t} in the expansion of the prefix read so far.
    let mut c = vec![0i64; k + 1];
    c[0] = 1;
    for l in w.letters() {
        let g = l.generator;
        // x_g = 1 + X_g; x_g^-1 = 1 - X_g + X_g^2 - ...
        for t in (1..=k).rev() {
            let mut acc = 0;
            let mut m = 1;
            while m <= t && multi_index[t - m] == g {
                let coef = if l.inverse { if m % 2 == 1 { -1 } else { 1 } } else if m == 1 { 1 } else { 0 };
                if coef == 0 {
                    break;
                }
                acc += c[t - m] * coef;
                m += 1;
            }
            c[t] += acc;
        }
    }
    c[k]
}

/// Coordinates of `w` modulo `F_3` in the basis `[x_i, x_j]`, `i < j`:
/// entry `(i, j)` of the returned `n x n` matrix is `epsilon_{i,j}(w)` for
/// `i < j`, zero elsewhere.
pub fn truncate_mod_f3(w: &Word, n: usize) -> Result<IntegerMatrix> {
    for g in 0..n.max(w.rank_hint()) {
        if w.exponent_sum(g) != 0 {
            return Err(Error::NonzeroExponentSum(g + 1));
        }
    }
    if w.rank_hint() > n {
        return Err(Error::GeneratorOutOfRange { generator: w.rank_hint(), n });
    }
    Ok(IntegerMatrix::from_fn(n, n, |i, j| if i < j { epsilon(w, &[i, j]) } else { 0 }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn p(x: u64) -> Prime {
        Prime::new(x).unwrap()
    }

    #[test]
    fn identity_has_zero_derivative() {
        let rep = Representation::new(p(5), &[1, 2]).unwrap();
        assert!(fox_eval(&Word::identity(), 0, &rep).is_zero());
    }

    #[test]
    fn commutator_derivatives() {
        let pr = p(5);
        let rep = Representation::new(pr, &[1, 2]).unwrap();
        let c = w("[x1,x2]");
        // d_1 = 1 - zeta^{lambda_2}
        let expected = &GroupRingElt::one(pr) - &GroupRingElt::zeta_pow(pr, 2);
        assert_eq!(fox_eval(&c, 0, &rep), expected);
        // d_2 = zeta^{lambda_1} - 1
        let expected = &GroupRingElt::zeta_pow(pr, 1) - &GroupRingElt::one(pr);
        assert_eq!(fox_eval(&c, 1, &rep), expected);
    }

    #[test]
    fn inverse_letter() {
        let pr = p(3);
        let rep = Representation::new(pr, &[1]).unwrap();
        // D(x^-1) = -zeta^{-1} = -zeta^2
        assert_eq!(fox_eval(&w("x1^-1"), 0, &rep).coeffs(), &[0, 0, -1]);
    }

    #[test]
    fn trivial_rep_rejected() {
        assert!(matches!(Representation::new(p(3), &[3, 0, -6]), Err(Error::TrivialRepresentation(3))));
    }

    #[test]
    fn epsilon_sign_convention() {
        assert_eq!(epsilon(&w("[x1,x2]"), &[0, 1]), 1);
        assert_eq!(epsilon(&w("[x1,x2]"), &[1, 0]), -1);
        assert_eq!(epsilon(&w("[x1,x2]^-1"), &[0, 1]), -1);
        assert_eq!(epsilon(&w("[x1,x2]"), &[0]), 0);
        assert_eq!(epsilon(&w("[x1,[x2,x3]]"), &[1, 2]), 0);
        assert_eq!(epsilon(&w("[x1,[x2,x3]]"), &[0, 1, 2]), 1);
    }

    #[test]
    fn epsilon_of_powers() {
        // x^-1 = 1 - X + X^2 - ...
        assert_eq!(epsilon(&w("x1^-1"), &[0, 0]), 1);
        assert_eq!(epsilon(&w("x1^-1"), &[0, 0, 0]), -1);
        // x^3 = 1 + 3X + 3X^2 + X^3
        assert_eq!(epsilon(&w("x1^3"), &[0, 0]), 3);
        assert_eq!(epsilon(&w("x1^3"), &[0, 0, 0]), 1);
        assert_eq!(epsilon(&w("x1 x2"), &[0, 1]), 1);
        assert_eq!(epsilon(&w("x1 x2"), &[1, 0]), 0);
    }

    #[test]
    fn truncation() {
        let m = truncate_mod_f3(&w("[x1,x2]"), 2).unwrap();
        assert_eq!(m[(0, 1)], 1);
        let m = truncate_mod_f3(&w("[x2,x1]"), 2).unwrap();
        assert_eq!(m[(0, 1)], -1);
        assert!(truncate_mod_f3(&w("[x1,[x2,x3]]"), 3).unwrap().is_zero());
        assert!(matches!(truncate_mod_f3(&w("x1 x2"), 2), Err(Error::NonzeroExponentSum(1))));
    }

    #[test]
    fn truncated_relator_derivative_matches_linear_formula() {
        // d_l of prod [x_i,x_j]^{e_ij} evaluates to sum_i e_{i,l} (zeta^{lambda_i} - 1).
        let pr = p(7);
        let r = w("[x1,x2]^2 [x1,x3]^-1 [x2,x3]^3");
        let rep = Representation::new(pr, &[1, 3, 5]).unwrap();
        for l in 0..3 {
            let mut expected = GroupRingElt::zero(pr);
            for i in 0..3 {
                let e = epsilon(&r, &[i, l]);
                let term = &GroupRingElt::zeta_pow(pr, rep.lambda()[i]) - &GroupRingElt::one(pr);
                for _ in 0..e.abs() {
                    expected = if e > 0 { &expected + &term } else { &expected - &term };
                }
            }
            assert_eq!(fox_eval(&r, l, &rep), expected, "l = {l}");
        }
    }
}
