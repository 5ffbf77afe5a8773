//! Oracles shared by the integration tests.
#![allow(dead_code)]

use nuinv::group::{Letter, Presentation, Word};
use nuinv::linalg::{classify_relation_matrix, AbelianGroupClass, IntegerMatrix, Prime};
use rand::Rng;

/// A random word of length `len` over `n` generators; not necessarily reduced
/// as typed, but `Word` cancels adjacent inverse pairs.
pub fn random_word(rng: &mut impl Rng, n: usize, len: usize) -> Word {
    Word::from_letters((0..len).map(|_| Letter::new(rng.gen_range(0..n), rng.gen_bool(0.5))))
}

/// Product of `k` commutators of random words.
pub fn random_commutator_product(rng: &mut impl Rng, n: usize, k: usize, max_len: usize) -> Word {
    let mut w = Word::identity();
    for _ in 0..k {
        let (a, b) = (rng.gen_range(1..=max_len), rng.gen_range(1..=max_len));
        let u = random_word(rng, n, a);
        let v = random_word(rng, n, b);
        w = w.mul(&Word::commutator(&u, &v));
    }
    w
}

/// `H_1(K)` for the kernel of `x_i -> lambda_i` on `G = <x | relators>`, by
/// Reidemeister-Schreier rewriting.
///
/// The transversal is `t^m`, `m = 0..p-1`, for the first generator `t` with
/// nonzero image. The kernel generators are `y(k, i) = s_k x_i s_{k+λ_i}^-1`
/// indexed by coset `k` and generator `i`; the Schreier generators that are
/// freely trivial become unit relations.
pub fn reidemeister_schreier_h1(g: &Presentation, lambda: &[u64], p: Prime) -> AbelianGroupClass {
    let (n, pu) = (g.n(), p.get());
    let t = lambda.iter().position(|&x| x % pu != 0).expect("nontrivial lambda");
    let c = lambda[t] % pu;
    let cinv = p.inv(c);
    // exponent m with s_k = t^m
    let m_of = |k: u64| k * cinv % pu;
    let col = |k: u64, i: usize| (k as usize) * n + i;
    let cols = pu as usize * n;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for k in 0..pu {
        if m_of(k) + 1 < pu {
            let mut r = vec![0; cols];
            r[col(k, t)] = 1;
            rows.push(r);
        }
    }
    for rel in g.relators() {
        for start in 0..pu {
            let mut r = vec![0; cols];
            let mut cur = start;
            for l in rel.letters() {
                let step = lambda[l.generator] % pu;
                if l.inverse {
                    cur = (cur + pu - step) % pu;
                    r[col(cur, l.generator)] -= 1;
                } else {
                    r[col(cur, l.generator)] += 1;
                    cur = (cur + step) % pu;
                }
            }
            assert_eq!(cur, start, "relator not in the kernel of lambda");
            rows.push(r);
        }
    }
    classify_relation_matrix(&IntegerMatrix::from_rows(cols, &rows))
}

/// Rank over `Z_p` by counting the kernel: `|ker M| = p^(cols - rank)`.
/// Only for tiny matrices.
pub fn brute_force_rank(m: &IntegerMatrix, p: u64) -> usize {
    let cols = m.cols();
    let total = p.pow(cols as u32);
    let mut kernel = 0u64;
    for idx in 0..total {
        let mut v = vec![0i64; cols];
        let mut x = idx;
        for c in v.iter_mut() {
            *c = (x % p) as i64;
            x /= p;
        }
        let zero = m.row_iter().all(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum::<i64>().rem_euclid(p as i64) == 0);
        kernel += zero as u64;
    }
    let mut nullity = 0;
    let mut k = kernel;
    while k > 1 {
        k /= p;
        nullity += 1;
    }
    cols - nullity
}

/// Determinant by cofactor expansion in `i128`; for small matrices.
pub fn determinant(m: &IntegerMatrix) -> i128 {
    let n = m.rows();
    assert_eq!(n, m.cols());
    fn det(a: &[Vec<i128>]) -> i128 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    a[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * a[0][j] * det(&minor)
            })
            .sum()
    }
    let a: Vec<Vec<i128>> = m.row_iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    det(&a)
}
