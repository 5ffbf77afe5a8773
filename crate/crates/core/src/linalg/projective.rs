use std::fmt;

use super::Prime;

/// A point of `P(Z_p^n)` in canonical form: the first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    p: Prime,
    coords: Vec<u64>,
}

impl ProjectivePoint {
    /// Canonicalizes a nonzero vector; `None` for the zero vector.
    pub fn new(p: Prime, coords: &[i64]) -> Option<Self> {
        let mut v: Vec<u64> = coords.iter().map(|&x| p.reduce(x)).collect();
        let lead = *v.iter().find(|&&x| x != 0)?;
        let inv = p.inv(lead);
        v.iter_mut().for_each(|x| *x = *x * inv % p.get());
        Some(ProjectivePoint { p, coords: v })
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// The representative `c * self`, generally not canonical.
    pub fn scaled(&self, c: u64) -> Vec<u64> {
        self.coords.iter().map(|x| x * (c % self.p.get()) % self.p.get()).collect()
    }

    /// Value of the integer linear form `coeffs` at this point.
    pub fn eval_form(&self, coeffs: &[i64]) -> u64 {
        let p = self.p.get();
        self.coords
            .iter()
            .zip(coeffs)
            .fold(0, |acc, (&x, &c)| (acc + x * self.p.reduce(c)) % p)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", cells.join(","))
    }
}

/// `P(Z_p^n)`, with points indexed by their rank in lexicographic order of
/// canonical representatives. Indexing lets callers split the space into
/// contiguous ranges for parallel work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectiveSpace {
    n: usize,
    p: Prime,
}

impl ProjectiveSpace {
    pub fn new(n: usize, p: Prime) -> Self {
        assert!(n >= 1, "projective space needs at least one coordinate");
        ProjectiveSpace { n, p }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn len(&self) -> u64 {
        self.p.projective_count(self.n)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The point of rank `index`; leading position `k` runs from `n-1` down
    /// to 0 and block `k` holds `p^(n-1-k)` points.
    pub fn point(&self, index: u64) -> ProjectivePoint {
        assert!(index < self.len(), "projective index out of range");
        let p = self.p.get();
        let mut rest = index;
        let mut lead = self.n - 1;
        let mut block = 1u64;
        while rest >= block {
            rest -= block;
            lead -= 1;
            block *= p;
        }
        let mut coords = vec![0u64; self.n];
        coords[lead] = 1;
        for pos in (lead + 1..self.n).rev() {
            coords[pos] = rest % p;
            rest /= p;
        }
        ProjectivePoint { p: self.p, coords }
    }

    pub fn index_of(&self, pt: &ProjectivePoint) -> u64 {
        let p = self.p.get();
        let lead = pt.coords.iter().position(|&x| x != 0).expect("canonical point");
        let offset: u64 = (0..self.n - 1 - lead).map(|j| p.pow(j as u32)).sum();
        let tail = pt.coords[lead + 1..].iter().fold(0, |acc, &x| acc * p + x);
        offset + tail
    }

    pub fn iter(self) -> impl Iterator<Item = ProjectivePoint> {
        self.range(0, self.len())
    }

    /// Points with rank in `[start, end)`, generated incrementally.
    pub fn range(self, start: u64, end: u64) -> impl Iterator<Item = ProjectivePoint> {
        let first = (start < end).then(|| self.point(start));
        let p = self.p.get();
        let count = end.saturating_sub(start);
        std::iter::successors(first, move |prev| {
            let mut c = prev.coords.clone();
            // Increment the tail after the leading 1 as a base-p counter.
            let lead = c.iter().position(|&x| x != 0)?;
            let mut pos = self.n;
            loop {
                if pos == lead + 1 {
                    // Tail exhausted: move to the next block.
                    if lead == 0 {
                        return None;
                    }
                    let mut next = vec![0; self.n];
                    next[lead - 1] = 1;
                    return Some(ProjectivePoint { p: self.p, coords: next });
                }
                pos -= 1;
                c[pos] += 1;
                if c[pos] < p {
                    return Some(ProjectivePoint { p: self.p, coords: c });
                }
                c[pos] = 0;
            }
        })
        .take(count as usize)
    }
}

/// All `(p^n - 1)/(p - 1)` canonical points of `P(Z_p^n)` in lexicographic order.
pub fn enumerate_projective(n: usize, p: Prime) -> impl Iterator<Item = ProjectivePoint> {
    ProjectiveSpace::new(n, p).iter()
}
