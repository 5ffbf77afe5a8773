use std::fmt;

use crate::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A prime modulus small enough that products of residues fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) && p < (1 << 31) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn as_usize(self) -> usize {
        self.0 as usize
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce(self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }

    pub fn pow(self, base: u64, mut exp: u64) -> u64 {
        let p = self.0;
        let mut acc = 1 % p;
        let mut b = base % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, x: u64) -> u64 {
        debug_assert!(!x.is_multiple_of(self.0));
        self.pow(x, self.0 - 2)
    }

    /// `(p^n - 1) / (p - 1)`, the number of points of `P(Z_p^n)`.
    pub fn projective_count(self, n: usize) -> u64 {
        (0..n).map(|k| self.0.pow(k as u32)).sum()
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(101));
        assert!(!is_prime(91));
    }

    #[test]
    fn rejects_composites() {
        assert!(matches!(Prime::new(4), Err(Error::NotPrime(4))));
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(0).is_err());
    }

    #[test]
    fn inverses() {
        let p = Prime::new(101).unwrap();
        for x in 1..101 {
            assert_eq!(x * p.inv(x) % 101, 1);
        }
    }

    #[test]
    fn projective_counts() {
        let p = Prime::new(3).unwrap();
        assert_eq!(p.projective_count(4), 40);
        assert_eq!(p.projective_count(6), 364);
        assert_eq!(Prime::new(5).unwrap().projective_count(1), 1);
    }
}
