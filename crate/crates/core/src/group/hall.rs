use std::fmt;
use std::sync::Arc;

use super::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommutatorShape {
    Generator(usize),
    Bracket(Arc<BasicCommutator>, Arc<BasicCommutator>),
}

/// A Hall basic commutator together with its position in the Hall order.
///
/// Commutators are ordered by length; within a length, by the Hall indices
/// of their two entries, lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicCommutator {
    pub shape: CommutatorShape,
    pub length: usize,
    pub hall_index: usize,
}

impl fmt::Display for BasicCommutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            CommutatorShape::Generator(i) => write!(f, "x{}", i + 1),
            CommutatorShape::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// All basic commutators of length at most `max_len` on `n` generators, in Hall order.
fn hall_basis_upto(n: usize, max_len: usize) -> Vec<Vec<Arc<BasicCommutator>>> {
    let mut by_len: Vec<Vec<Arc<BasicCommutator>>> = vec![Vec::new(); max_len + 1];
    let mut next_index = 0;
    if max_len == 0 {
        return by_len;
    }
    for i in 0..n {
        by_len[1].push(Arc::new(BasicCommutator {
            shape: CommutatorShape::Generator(i),
            length: 1,
            hall_index: next_index,
        }));
        next_index += 1;
    }
    for q in 2..=max_len {
        let mut pairs: Vec<(Arc<BasicCommutator>, Arc<BasicCommutator>)> = Vec::new();
        for l1 in 1..q {
            let l2 = q - l1;
            for c1 in &by_len[l1] {
                for c2 in &by_len[l2] {
                    if c1.hall_index >= c2.hall_index {
                        continue;
                    }
                    if let CommutatorShape::Bracket(c2a, _) = &c2.shape {
                        if c1.hall_index < c2a.hall_index {
                            continue;
                        }
                    }
                    pairs.push((c1.clone(), c2.clone()));
                }
            }
        }
        pairs.sort_by_key(|(a, b)| (a.hall_index, b.hall_index));
        for (a, b) in pairs {
            by_len[q].push(Arc::new(BasicCommutator {
                shape: CommutatorShape::Bracket(a, b),
                length: q,
                hall_index: next_index,
            }));
            next_index += 1;
        }
    }
    by_len
}

/// Basic commutators of length exactly `q` on `n` generators, in Hall order.
pub fn hall_basis(n: usize, q: usize) -> Vec<BasicCommutator> {
    let mut all = hall_basis_upto(n, q);
    all.pop()
        .unwrap_or_default()
        .into_iter()
        .map(|c| Arc::try_unwrap(c).unwrap_or_else(|c| (*c).clone()))
        .collect()
}

/// The free-group word of an iterated commutator.
pub fn expand(c: &BasicCommutator) -> Word {
    match &c.shape {
        CommutatorShape::Generator(i) => Word::generator(*i),
        CommutatorShape::Bracket(a, b) => Word::commutator(&expand(a), &expand(b)),
    }
}

/// Rank of `F_q / F_{q+1}` for the free group of rank `n`:
/// `(1/q) sum_{d | q} mu(d) n^{q/d}`.
pub fn witt_number(n: usize, q: usize) -> u64 {
    fn mobius(mut d: usize) -> i64 {
        let mut sign = 1;
        let mut f = 2;
        while f * f <= d {
            if d.is_multiple_of(f) {
                d /= f;
                if d.is_multiple_of(f) {
                    return 0;
                }
                sign = -sign;
            }
            f += 1;
        }
        if d > 1 {
            sign = -sign;
        }
        sign
    }
    let total: i64 = (1..=q)
        .filter(|d| q.is_multiple_of(*d))
        .map(|d| mobius(d) * (n as i64).pow((q / d) as u32))
        .sum();
    (total / q as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_word;

    #[test]
    fn length_one_is_generators() {
        let b = hall_basis(4, 1);
        let names: Vec<String> = b.iter().map(|c| c.to_string()).collect();
        assert_eq!(names, ["x1", "x2", "x3", "x4"]);
    }

    #[test]
    fn length_two_is_ordered_pairs() {
        let b = hall_basis(4, 2);
        assert_eq!(b.len(), 6);
        assert_eq!(b[0].to_string(), "[x1,x2]");
        assert_eq!(b[5].to_string(), "[x3,x4]");
    }

    #[test]
    fn length_three_shape() {
        for n in 1..=6 {
            let b = hall_basis(n, 3);
            // 2 * C(n+1, 3)
            assert_eq!(b.len(), (n + 1) * n * (n - 1) / 3, "n = {n}");
            for c in &b {
                let CommutatorShape::Bracket(a, inner) = &c.shape else { panic!() };
                let CommutatorShape::Generator(i) = a.shape else { panic!("not simple: {c}") };
                let CommutatorShape::Bracket(j, k) = &inner.shape else { panic!() };
                let (CommutatorShape::Generator(j), CommutatorShape::Generator(k)) = (&j.shape, &k.shape) else {
                    panic!()
                };
                assert!(j < k && i >= *j, "{c}");
            }
        }
    }

    #[test]
    fn witt_counts() {
        for n in 1..=5 {
            for q in 1..=5 {
                assert_eq!(hall_basis(n, q).len() as u64, witt_number(n, q), "n={n} q={q}");
            }
        }
        assert_eq!(witt_number(2, 5), 6);
        assert_eq!(witt_number(3, 4), 18);
    }

    #[test]
    fn hall_indices_increase() {
        let all = hall_basis_upto(3, 4);
        let idx: Vec<usize> = all.iter().flatten().map(|c| c.hall_index).collect();
        assert_eq!(idx, (0..idx.len()).collect::<Vec<_>>());
    }

    #[test]
    fn expansions() {
        let b = hall_basis(2, 2);
        assert_eq!(expand(&b[0]), parse_word("x1 x2 x1^-1 x2^-1").unwrap());
        let b3 = hall_basis(2, 3);
        assert_eq!(b3[0].to_string(), "[x1,[x1,x2]]");
        let w = expand(&b3[0]);
        assert_eq!(w.len(), 10);
        assert_eq!(w, parse_word("x1 x1 x2 x1^-1 x2^-1 x1^-1 x2 x1 x2^-1 x1^-1").unwrap());
    }
}
