use num_bigint::BigInt;
use num_integer::{ExtendedGcd, Integer};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, Zero};

use super::IntegerMatrix;

/// Smith normal form of an integer matrix read as a relation matrix.
///
/// `diagonal` has `min(rows, cols)` entries, nonnegative, with
/// `d_1 | d_2 | ...` among the nonzero ones and zeros trailing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    /// `cols - #nonzero diagonal entries`: the free rank of the cokernel.
    pub free_rank: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let rows: Vec<&[i64]> = m.row_iter().collect();
    smith_of_slices(m.cols(), &rows)
}

/// Smith normal form of the matrix whose rows are `rows`, each of length `cols`.
pub fn smith_normal_form_of_rows(cols: usize, rows: &[Vec<i64>]) -> SmithForm {
    let rows: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    smith_of_slices(cols, &rows)
}

fn smith_of_slices(cols: usize, rows: &[&[i64]]) -> SmithForm {
    let len = rows.len().min(cols);
    // Machine integers first; redo in arbitrary precision if anything overflows.
    let mut diagonal: Vec<BigInt> = match diagonalize::<i64>(cols, rows.iter().map(|r| r.to_vec())) {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => diagonalize::<BigInt>(
            cols,
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()),
        )
        .expect("arbitrary precision elimination cannot overflow"),
    };
    diagonal.resize(len, BigInt::zero());
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    SmithForm { diagonal, free_rank: cols - rank }
}

trait Entry: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul {
    /// Guard band keeping `i64` elimination clear of overflow in gcd steps.
    fn in_range(&self) -> bool;
}

impl Entry for i64 {
    fn in_range(&self) -> bool {
        self.unsigned_abs() < (1u64 << 62)
    }
}

impl Entry for BigInt {
    fn in_range(&self) -> bool {
        true
    }
}

fn guard<T: Entry>(x: Option<T>) -> Option<T> {
    x.filter(Entry::in_range)
}

/// `a - q*b`
fn sub_mul<T: Entry>(a: &T, q: &T, b: &T) -> Option<T> {
    guard(a.checked_sub(&guard(q.checked_mul(b))?))
}

/// `x*a + y*b`
fn lin<T: Entry>(x: &T, a: &T, y: &T, b: &T) -> Option<T> {
    guard(guard(x.checked_mul(a))?.checked_add(&guard(y.checked_mul(b))?))
}

fn diagonalize<T: Entry>(cols: usize, rows: impl Iterator<Item = Vec<T>>) -> Option<Vec<T>> {
    let mut reduced = echelon(cols, rows)?;
    smith_dense(&mut reduced, cols)
}

/// Row-reduces to echelon form by unimodular row operations, feeding rows one
/// at a time so tall inputs never materialize as a dense working matrix.
fn echelon<T: Entry>(cols: usize, rows: impl Iterator<Item = Vec<T>>) -> Option<Vec<Vec<T>>> {
    let mut basis: Vec<Option<Vec<T>>> = vec![None; cols];
    for row in rows {
        if !row.iter().all(Entry::in_range) {
            return None;
        }
        let mut r = row;
        for c in 0..cols {
            if r[c].is_zero() {
                continue;
            }
            let slot = &mut basis[c];
            let Some(b) = slot else {
                if r[c].is_negative() {
                    r.iter_mut().for_each(|x| *x = -x.clone());
                }
                *slot = Some(r);
                break;
            };
            let (q, rem) = r[c].div_rem(&b[c]);
            if rem.is_zero() {
                for j in c..cols {
                    r[j] = sub_mul(&r[j], &q, &b[j])?;
                }
            } else {
                let ExtendedGcd { gcd, x, y, .. } = b[c].extended_gcd(&r[c]);
                let bb = b[c].div_floor(&gcd);
                let rr = r[c].div_floor(&gcd);
                for j in c..cols {
                    let nb = lin(&x, &b[j], &y, &r[j])?;
                    let nr = guard(guard(bb.checked_mul(&r[j]))?.checked_sub(&guard(rr.checked_mul(&b[j]))?))?;
                    b[j] = nb;
                    r[j] = nr;
                }
            }
        }
    }
    Some(basis.into_iter().flatten().collect())
}

fn abs_min_nonzero<T: Entry>(a: &[Vec<T>], t: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().take(cols).skip(t) {
            if x.is_zero() {
                continue;
            }
            let v = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| v < *b) {
                let unit = v.is_one();
                best = Some((i, j, v));
                if unit {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn swap_cols<T>(a: &mut [Vec<T>], c1: usize, c2: usize) {
    if c1 != c2 {
        for row in a.iter_mut() {
            row.swap(c1, c2);
        }
    }
}

/// Smith normal form of a small dense matrix by pivoting on the entry of
/// least absolute value.
fn smith_dense<T: Entry>(a: &mut [Vec<T>], cols: usize) -> Option<Vec<T>> {
    let m = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(cols) {
        let Some((pi, pj)) = abs_min_nonzero(a, t, cols) else { break };
        a.swap(t, pi);
        swap_cols(a, t, pj);
        loop {
            // Clear column t below and row t to the right.
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                let (pivot_row, row) = (&head[t], &mut tail[0]);
                for j in t..cols {
                    row[j] = sub_mul(&row[j], &q, &pivot_row[j])?;
                }
                dirty |= !row[t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    row[j] = sub_mul(&row[j], &q, &row[t])?;
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                // A remainder is now smaller than the pivot; move it in.
                let mut best = (t, t, a[t][t].abs());
                for i in t + 1..m {
                    if !a[i][t].is_zero() && a[i][t].abs() < best.2 {
                        best = (i, t, a[i][t].abs());
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < best.2 {
                        best = (t, j, a[t][j].abs());
                    }
                }
                a.swap(t, best.0);
                swap_cols(a, t, best.1);
                continue;
            }
            // Divisibility: fold an offending row into the pivot row.
            let piv = a[t][t].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&piv)));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = guard(a[t][j].checked_add(&a[i][j]))?;
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    Some(diag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn diag(m: &IntegerMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .diagonal
            .iter()
            .map(|d| i64::try_from(d.clone()).unwrap())
            .collect()
    }

    #[test]
    fn identity() {
        assert_eq!(diag(&IntegerMatrix::identity(2)), vec![1, 1]);
    }

    #[test]
    fn coprime_diagonal_merges() {
        let m = IntegerMatrix::from_rows(2, &[vec![2, 0], vec![0, 3]]);
        assert_eq!(diag(&m), vec![1, 6]);
    }

    #[test]
    fn stacked_scalar_block() {
        for p in [2, 3, 5, 7] {
            let m = IntegerMatrix::from_rows(2, &[vec![1, 0], vec![p, 0], vec![0, p]]);
            let s = smith_normal_form(&m);
            assert_eq!(diag(&m), vec![1, p]);
            assert_eq!(s.free_rank, 0);
        }
    }

    #[test]
    fn empty_and_zero() {
        let s = smith_normal_form(&IntegerMatrix::zeros(0, 3));
        assert!(s.diagonal.is_empty());
        assert_eq!(s.free_rank, 3);
        let s = smith_normal_form(&IntegerMatrix::zeros(2, 3));
        assert_eq!(s.diagonal, vec![BigInt::zero(), BigInt::zero()]);
        assert_eq!(s.free_rank, 3);
    }

    #[test]
    fn needs_divisibility_fixup() {
        // diag(4, 6) -> (2, 12)
        let m = IntegerMatrix::from_rows(2, &[vec![4, 0], vec![0, 6]]);
        assert_eq!(diag(&m), vec![2, 12]);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = 1i64 << 61;
        let m = IntegerMatrix::from_rows(2, &[vec![big, 3], vec![5, big]]);
        let s = smith_normal_form(&m);
        let det = BigInt::from(big) * BigInt::from(big) - BigInt::from(15);
        assert_eq!(s.diagonal[0], BigInt::one());
        assert_eq!(s.diagonal[1], det);
    }

    #[test]
    fn wide_and_tall_agree_on_rank() {
        let m = IntegerMatrix::from_rows(4, &[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.free_rank, 2);
        let st = smith_normal_form(&m.transpose());
        assert_eq!(st.diagonal[..2], s.diagonal[..2]);
    }
}
