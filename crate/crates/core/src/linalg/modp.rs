use std::fmt;

use super::{IntegerMatrix, Prime};
use crate::Result;

/// Dense matrix over `Z_p` with entries kept reduced in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl PrimeFieldMatrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        PrimeFieldMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    /// Entries are given as signed integers and reduced mod `p`.
    pub fn from_fn(p: Prime, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(p.reduce(f(i, j)));
            }
        }
        PrimeFieldMatrix { p, rows, cols, data }
    }

    pub fn from_integer(m: &IntegerMatrix, p: Prime) -> Self {
        Self::from_fn(p, m.rows(), m.cols(), |i, j| m[(i, j)])
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = self.p.reduce(v);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// `M * v` over `Z_p`.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let p = self.p.get();
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(0, |acc, (a, b)| (acc + a * (b % p)) % p))
            .collect()
    }

    /// Rank by Gaussian elimination on a scratch copy.
    pub fn rank(&self) -> usize {
        let p = self.p.get();
        let cols = self.cols;
        let mut a = self.data.clone();
        let mut rank = 0;
        for c in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(piv) = (rank..self.rows).find(|&i| a[i * cols + c] != 0) else { continue };
            if piv != rank {
                for j in c..cols {
                    a.swap(piv * cols + j, rank * cols + j);
                }
            }
            let inv = self.p.inv(a[rank * cols + c]);
            for j in c..cols {
                a[rank * cols + j] = a[rank * cols + j] * inv % p;
            }
            for i in rank + 1..self.rows {
                let f = a[i * cols + c];
                if f == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = f * a[rank * cols + j] % p;
                    a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
                }
            }
            rank += 1;
        }
        rank
    }

    /// A basis of the right kernel `{v : M v = 0}`, from the reduced row echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let p = self.p.get();
        let cols = self.cols;
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..self.rows).find(|&i| a[i * cols + c] != 0) else { continue };
            for j in 0..cols {
                a.swap(piv * cols + j, r * cols + j);
            }
            let inv = self.p.inv(a[r * cols + c]);
            for j in 0..cols {
                a[r * cols + j] = a[r * cols + j] * inv % p;
            }
            for i in 0..self.rows {
                let f = a[i * cols + c];
                if i == r || f == 0 {
                    continue;
                }
                for j in 0..cols {
                    let sub = f * a[r * cols + j] % p;
                    a[i * cols + j] = (a[i * cols + j] + p - sub) % p;
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        (0..cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![0u64; cols];
                v[free] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - a[i * cols + free]) % p;
                }
                v
            })
            .collect()
    }
}

/// Rank of `m` reduced entrywise mod `p`.
pub fn rank_mod_p(m: &IntegerMatrix, p: u64) -> Result<usize> {
    let p = Prime::new(p)?;
    Ok(PrimeFieldMatrix::from_integer(m, p).rank())
}

impl fmt::Display for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn kernel_basis_annihilates() {
        let p = Prime::new(5).unwrap();
        let m = PrimeFieldMatrix::from_fn(p, 2, 4, |i, j| [[1, 2, 0, 1], [0, 1, 1, 3]][i][j]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).iter().all(|&x| x == 0));
        }
        assert_eq!(PrimeFieldMatrix::zeros(p, 0, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(rank_mod_p(&IntegerMatrix::zeros(3, 4), 5).unwrap(), 0);
        assert_eq!(rank_mod_p(&IntegerMatrix::zeros(0, 0), 2).unwrap(), 0);
    }

    #[test]
    fn all_ones_mod_two() {
        let m = IntegerMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(rank_mod_p(&m, 2).unwrap(), 1);
    }

    #[test]
    fn rank_depends_on_prime() {
        let m = IntegerMatrix::from_rows(2, &[vec![2, 1], vec![0, 2]]);
        assert_eq!(rank_mod_p(&m, 2).unwrap(), 1);
        assert_eq!(rank_mod_p(&m, 3).unwrap(), 2);
    }

    #[test]
    fn non_prime_rejected() {
        let m = IntegerMatrix::identity(2);
        assert!(matches!(rank_mod_p(&m, 6), Err(Error::NotPrime(6))));
    }

    #[test]
    fn negative_entries_reduce() {
        let p = Prime::new(5).unwrap();
        let m = PrimeFieldMatrix::from_fn(p, 1, 2, |_, j| if j == 0 { -1 } else { -6 });
        assert_eq!(m.row(0), &[4, 4]);
    }
}
