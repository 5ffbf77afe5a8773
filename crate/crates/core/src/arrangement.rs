//! Arrangement inputs and their linearized Alexander matrices.
//!
//! Indices in the public constructors and file formats are 1-based, as in the
//! usual notation for lattices and permutations; everything stored is 0-based.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::group::presentation::parse_header;
use crate::group::{truncate_mod_f3, Presentation, Word};
use crate::linalg::{IntegerMatrix, Prime, PrimeFieldMatrix};
use crate::ziegler::{binomial, ExteriorBasis};
use crate::{Error, Result};

/// Intersection lattice of a complex line arrangement: the multiple points,
/// each given by the set of lines through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineLattice {
    n: usize,
    flats: Vec<Vec<usize>>,
}

impl LineLattice {
    /// Builds the lattice from 1-based flats. Flats of size 2 may be listed
    /// but are not required: every pair of lines not on a common listed flat
    /// becomes a double point.
    pub fn new(n: usize, flats: &[Vec<usize>]) -> Result<Self> {
        let mut listed: Vec<Vec<usize>> = Vec::with_capacity(flats.len());
        for f in flats {
            let mut v: Vec<usize> = Vec::with_capacity(f.len());
            for &x in f {
                if x == 0 || x > n {
                    return Err(Error::InvalidLattice(format!("line {x} out of range 1..={n}")));
                }
                if v.contains(&(x - 1)) {
                    return Err(Error::InvalidLattice(format!("line {x} repeated in flat {f:?}")));
                }
                v.push(x - 1);
            }
            if v.len() < 2 {
                return Err(Error::InvalidLattice(format!("flat {f:?} has fewer than two lines")));
            }
            v.sort_unstable();
            listed.push(v);
        }
        for (a, fa) in listed.iter().enumerate() {
            for fb in &listed[a + 1..] {
                if fa.iter().filter(|x| fb.contains(x)).count() >= 2 {
                    return Err(Error::InvalidLattice(format!(
                        "flats {} and {} share two lines",
                        one_based(fa),
                        one_based(fb)
                    )));
                }
            }
        }
        let mut all: Vec<Vec<usize>> = listed.into_iter().filter(|f| f.len() >= 3).collect();
        for i in 0..n {
            for j in i + 1..n {
                if !all.iter().any(|f| f.contains(&i) && f.contains(&j)) {
                    all.push(vec![i, j]);
                }
            }
        }
        all.sort();
        Ok(LineLattice { n, flats: all })
    }

    /// Lattice with no multiple points of multiplicity above 2.
    pub fn generic(n: usize) -> Self {
        Self::new(n, &[]).expect("empty flat list is valid")
    }

    /// The pencil: all `n` lines through one point.
    pub fn pencil(n: usize) -> Self {
        Self::new(n, &[(1..=n).collect()]).expect("single flat is valid")
    }

    /// Parses a lattice file: `n <count>`, then one flat per line. A flat is a
    /// list of space-separated line numbers; for `n <= 9` the compact form
    /// `123` is also accepted. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut flats = Vec::new();
        for (idx, line) in content_lines(text) {
            let Some(n) = n else {
                n = Some(parse_header(line).ok_or_else(|| Error::parse(idx, "expected `n <count>` header"))?);
                continue;
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let flat: Vec<usize> = if tokens.len() == 1 && n <= 9 && tokens[0].len() > 1 {
                tokens[0]
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::parse(idx, format!("bad flat `{line}`")))?
            } else {
                tokens
                    .iter()
                    .map(|t| t.parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::parse(idx, format!("bad flat `{line}`")))?
            };
            let mut seen = flat.clone();
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::parse(idx, format!("repeated line in flat `{line}`")));
            }
            flats.push(flat);
        }
        let n = n.ok_or_else(|| Error::parse(1, "empty lattice file"))?;
        Self::new(n, &flats)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All flats, implicit double points included, 0-based and sorted.
    pub fn flats(&self) -> &[Vec<usize>] {
        &self.flats
    }

    /// Flats of multiplicity at least 3.
    pub fn multiple_points(&self) -> impl Iterator<Item = &[usize]> {
        self.flats.iter().filter(|f| f.len() >= 3).map(|f| f.as_slice())
    }

    pub fn b1(&self) -> usize {
        self.n
    }

    /// `b_2 = Σ (|V| - 1)` over all flats.
    pub fn b2(&self) -> usize {
        self.flats.iter().map(|f| f.len() - 1).sum()
    }

    /// The `b_2 × n` linearized Alexander matrix at `λ`, one block per flat.
    pub fn linearized_matrix(&self, lambda: &[u64], p: Prime) -> PrimeFieldMatrix {
        complex_linearized_matrix(self, lambda, p)
    }

    /// Presentation `<x_1..x_n | [x_i, x_V] : i ∈ V ∖ {max V}>` with
    /// `x_V` the product of the generators of `V` in increasing order. It has
    /// the same second nilpotent quotient as the arrangement group.
    pub fn presentation(&self) -> Presentation {
        let mut relators = Vec::with_capacity(self.b2());
        for f in &self.flats {
            let prod = f.iter().fold(Word::identity(), |w, &j| w.mul(&Word::generator(j)));
            for &i in &f[..f.len() - 1] {
                relators.push(Word::commutator(&Word::generator(i), &prod));
            }
        }
        Presentation::commutator_relators(self.n, relators).expect("commutators of generators")
    }
}

fn one_based(f: &[usize]) -> String {
    f.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn check_lambda(n: usize, lambda: &[u64]) {
    assert_eq!(lambda.len(), n, "λ must have one coordinate per generator");
}

/// Stacked blocks `M_V(λ)_{i,j} = [j ∈ V](λ_i - δ_{ij} Σ_{k∈V} λ_k)` for
/// `i ∈ V ∖ {max V}`, over every flat `V` of the lattice.
pub fn complex_linearized_matrix(l: &LineLattice, lambda: &[u64], p: Prime) -> PrimeFieldMatrix {
    check_lambda(l.n, lambda);
    let mut m = PrimeFieldMatrix::zeros(p, l.b2(), l.n);
    let mut row = 0;
    for f in &l.flats {
        let sum: u64 = f.iter().map(|&k| lambda[k] % p.get()).sum();
        for &i in &f[..f.len() - 1] {
            for &j in f {
                let v = lambda[i] as i64 - if i == j { sum as i64 } else { 0 };
                m.set(row, j, v);
            }
            row += 1;
        }
    }
    m
}

/// Linking numbers `l_{ij} = ±1` of a 2-arrangement (or any rigid link).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkingMatrix {
    n: usize,
    l: Vec<i8>,
}

impl LinkingMatrix {
    /// Builds the matrix from a full `n × n` array; checks symmetry, zero
    /// diagonal and `±1` off the diagonal.
    pub fn new(n: usize, entries: &[Vec<i64>]) -> Result<Self> {
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidLinking(format!("expected a {n}x{n} matrix")));
        }
        let mut l = vec![0i8; n * n];
        for i in 0..n {
            if entries[i][i] != 0 {
                return Err(Error::InvalidLinking(format!("nonzero diagonal entry at {}", i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let v = entries[i][j];
                if v != 1 && v != -1 {
                    return Err(Error::InvalidLinking(format!("entry ({},{}) = {v} is not ±1", i + 1, j + 1)));
                }
                if entries[j][i] != v {
                    return Err(Error::InvalidLinking(format!("entries ({0},{1}) and ({1},{0}) differ", i + 1, j + 1)));
                }
                l[i * n + j] = v as i8;
            }
        }
        Ok(LinkingMatrix { n, l })
    }

    /// Builds the matrix from its strictly upper-triangular part, row by row.
    pub fn from_upper(n: usize, upper: &[i64]) -> Result<Self> {
        if upper.len() != binomial(n, 2) {
            return Err(Error::InvalidLinking(format!(
                "expected {} upper-triangular entries, got {}",
                binomial(n, 2),
                upper.len()
            )));
        }
        let mut full = vec![vec![0; n]; n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = *it.next().expect("length checked");
                full[i][j] = v;
                full[j][i] = v;
            }
        }
        Self::new(n, &full)
    }

    /// All linking numbers `+1`: the link of `n` fibers of the Hopf fibration,
    /// i.e. the link of a pencil of complex lines.
    pub fn all_positive(n: usize) -> Self {
        LinkingMatrix { n, l: (0..n * n).map(|k| if k / n == k % n { 0 } else { 1 }).collect() }
    }

    /// Parses `n <count>` followed by the `C(n,2)` upper-triangular entries
    /// row by row (line breaks are not significant).
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut upper = Vec::new();
        for (idx, line) in content_lines(text) {
            if n.is_none() {
                n = Some(parse_header(line).ok_or_else(|| Error::parse(idx, "expected `n <count>` header"))?);
                continue;
            }
            for tok in line.split_whitespace() {
                let v: i64 = tok
                    .trim_start_matches('+')
                    .parse()
                    .map_err(|_| Error::parse(idx, format!("bad linking number `{tok}`")))?;
                upper.push(v);
            }
        }
        let n = n.ok_or_else(|| Error::parse(1, "empty linking file"))?;
        Self::from_upper(n, &upper)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `l_{ij}` for 0-based `i, j`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.l[i * self.n + j] as i64
    }

    /// The mirror image: every linking number negated.
    pub fn negated(&self) -> Self {
        LinkingMatrix { n: self.n, l: self.l.iter().map(|x| -x).collect() }
    }

    pub fn upper(&self) -> Vec<i64> {
        let mut v = Vec::with_capacity(binomial(self.n, 2));
        for i in 0..self.n {
            for j in i + 1..self.n {
                v.push(self.get(i, j));
            }
        }
        v
    }

    pub fn linearized_matrix(&self, lambda: &[u64], p: Prime) -> PrimeFieldMatrix {
        link_linearized_matrix(self, lambda, p)
    }

    /// Presentation `<x_1..x_n | Π_{j≠k} [x_k, x_j]^{l_kj}, k < n>`. Its second
    /// nilpotent quotient agrees with that of any link with these linking numbers.
    pub fn presentation(&self) -> Presentation {
        let n = self.n;
        let relators = (0..n.saturating_sub(1))
            .map(|k| {
                (0..n).filter(|&j| j != k).fold(Word::identity(), |w, j| {
                    let c = Word::commutator(&Word::generator(k), &Word::generator(j));
                    w.mul(&c.pow(self.get(k, j)))
                })
            })
            .collect();
        Presentation::commutator_relators(n, relators).expect("products of commutators")
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (i + 1..self.n).map(|j| format!("{:+}", self.get(i, j))).collect();
            if !row.is_empty() {
                writeln!(f, "{}", row.join(" "))?;
            }
        }
        Ok(())
    }
}

/// The `(n-1) × n` matrix with rows `k < n` and entries
/// `l_{kj} λ_k - δ_{kj} Σ_i l_{ki} λ_i`.
///
/// The full `n × n` matrix has rows summing to zero against `λ`, and its last
/// row is minus the sum of the others (by symmetry of `l`), so it can be
/// dropped without changing the rank. All columns are kept.
pub fn link_linearized_matrix(lk: &LinkingMatrix, lambda: &[u64], p: Prime) -> PrimeFieldMatrix {
    let n = lk.n;
    check_lambda(n, lambda);
    let lam: Vec<i64> = lambda.iter().map(|&x| (x % p.get()) as i64).collect();
    PrimeFieldMatrix::from_fn(p, n.saturating_sub(1), n, |k, j| {
        if k == j {
            -(0..n).map(|i| lk.get(k, i) * lam[i]).sum::<i64>()
        } else {
            lk.get(k, j) * lam[k]
        }
    })
}

/// A permutation of `{1..n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// From 1-based images `τ(1), ..., τ(n)`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &t in images {
            if t == 0 || t > n || std::mem::replace(&mut seen[t - 1], true) {
                return Err(Error::InvalidLinking(format!("{images:?} is not a permutation of 1..={n}")));
            }
        }
        Ok(Permutation(images.iter().map(|t| t - 1).collect()))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `τ(i)` for 0-based `i`, 0-based result.
    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn reversed(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `341256` (single digits) or a comma/space separated list.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let images: Option<Vec<usize>> = if s.contains([',', ' ']) {
            s.split([',', ' ']).filter(|t| !t.is_empty()).map(|t| t.parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let images = images.ok_or_else(|| Error::parse(1, format!("bad permutation `{s}`")))?;
        Permutation::new(&images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(|t| (t + 1).to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

/// Linking matrix of the horizontal arrangement `A(τ)`:
/// `l_{ij} = sgn((j - i)(τ^{-1}(j) - τ^{-1}(i)))`, so planes `i < j` link
/// negatively exactly when `τ` lists `j` before `i`.
pub fn linking_from_permutation(tau: &Permutation) -> LinkingMatrix {
    let n = tau.n();
    let mut pos = vec![0usize; n];
    for i in 0..n {
        pos[tau.image(i)] = i;
    }
    let mut l = vec![0i8; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let s = (j as i64 - i as i64) * (pos[j] as i64 - pos[i] as i64);
                l[i * n + j] = s.signum() as i8;
            }
        }
    }
    LinkingMatrix { n, l }
}

/// Real 2-planes `H_i = {α_i = α'_i = 0}` in `R^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningEquations {
    planes: Vec<[[BigRational; 4]; 2]>,
}

impl DefiningEquations {
    pub fn new(planes: Vec<[[BigRational; 4]; 2]>) -> Self {
        DefiningEquations { planes }
    }

    /// From integer coefficient pairs `(α_i, α'_i)`.
    pub fn from_integers(planes: &[([i64; 4], [i64; 4])]) -> Self {
        let q = |v: &[i64; 4]| v.map(|x| BigRational::from_integer(BigInt::from(x)));
        DefiningEquations { planes: planes.iter().map(|(a, b)| [q(a), q(b)]).collect() }
    }

    /// Horizontal planes `z + a w + b w̄ = 0` in `C^2 = R^4`, `z = x1 + i x2`,
    /// `w = x3 + i x4`, given as `((Re a, Im a), (Re b, Im b))`.
    pub fn horizontal(coeffs: &[((i64, i64), (i64, i64))]) -> Self {
        let planes: Vec<_> = coeffs
            .iter()
            .map(|&((ar, ai), (br, bi))| ([1, 0, ar + br, bi - ai], [0, 1, ai + bi, ar - br]))
            .collect();
        Self::from_integers(&planes)
    }

    /// Parses 8 rationals per line (`α_i` then `α'_i`); a `|` separator is allowed.
    pub fn parse(text: &str) -> Result<Self> {
        let mut planes = Vec::new();
        for (idx, line) in content_lines(text) {
            let vals: Vec<BigRational> = line
                .split(|c: char| c.is_whitespace() || c == '|' || c == ',')
                .filter(|t| !t.is_empty())
                .map(parse_rational)
                .collect::<Option<_>>()
                .ok_or_else(|| Error::parse(idx, "bad rational number"))?;
            if vals.len() != 8 {
                return Err(Error::parse(idx, format!("expected 8 coefficients, got {}", vals.len())));
            }
            let a: [BigRational; 4] = std::array::from_fn(|k| vals[k].clone());
            let b: [BigRational; 4] = std::array::from_fn(|k| vals[k + 4].clone());
            planes.push([a, b]);
        }
        Ok(DefiningEquations { planes })
    }

    pub fn n(&self) -> usize {
        self.planes.len()
    }

    pub fn planes(&self) -> &[[[BigRational; 4]; 2]] {
        &self.planes
    }
}

/// Integers, fractions `p/q` and finite decimals.
fn parse_rational(s: &str) -> Option<BigRational> {
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let num: BigInt = digits.parse().ok()?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(num, den);
        return Some(if neg { -r } else { r });
    }
    BigRational::from_str(s.trim_start_matches('+')).ok()
}

/// Exact determinant of a 4×4 rational matrix by fraction-exact elimination.
fn det4(rows: [&[BigRational; 4]; 4]) -> BigRational {
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| r.to_vec()).collect();
    let mut det = BigRational::from_integer(1.into());
    for c in 0..4 {
        let Some(piv) = (c..4).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if piv != c {
            m.swap(piv, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for r in c + 1..4 {
            let f = m[r][c].clone() / m[c][c].clone();
            for k in c..4 {
                let t = f.clone() * m[c][k].clone();
                m[r][k] -= t;
            }
        }
    }
    det
}

/// `l_{ij} = sgn det(α_i, α'_i, α_j, α'_j)`, computed exactly.
pub fn linking_from_equations(eq: &DefiningEquations) -> Result<LinkingMatrix> {
    let n = eq.n();
    let mut full = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let [a, b] = &eq.planes[i];
            let [c, d] = &eq.planes[j];
            let det = det4([a, b, c, d]);
            if det.is_zero() {
                return Err(Error::NotTransverse(i + 1, j + 1));
            }
            let s = if det.is_positive() { 1 } else { -1 };
            full[i][j] = s;
            full[j][i] = s;
        }
    }
    LinkingMatrix::new(n, &full)
}

/// `χ^⊤(x_ij) = (e_i - l_ij e_n) ∧ (e_j - l_ij e_n)` for `i < j < n`, as a
/// `C(n-1,2) × C(n,2)` matrix over the lexicographic basis of `Λ^2 Z^n`.
pub fn chi_transpose_matrix(lk: &LinkingMatrix) -> IntegerMatrix {
    let n = lk.n;
    let basis = ExteriorBasis::new(n, 2);
    let last = n - 1;
    let mut rows = Vec::with_capacity(binomial(n.saturating_sub(1), 2));
    for i in 0..last {
        for j in i + 1..last {
            let l = lk.get(i, j);
            let mut row = vec![0i64; basis.len()];
            // e_i∧e_j - l e_i∧e_n - l e_n∧e_j
            row[basis.index_of(&[i, j]).unwrap()] += 1;
            row[basis.index_of(&[i, last]).unwrap()] -= l;
            row[basis.index_of(&[j, last]).unwrap()] += l;
            rows.push(row);
        }
    }
    IntegerMatrix::from_rows(basis.len(), &rows)
}

/// Cup-product structure constants `μ_{i,j,k} = ε_{i,j}(r_k)` of a
/// commutator-relators presentation, one antisymmetric `n × n` matrix per relator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupConstants {
    n: usize,
    per_relator: Vec<IntegerMatrix>,
}

impl CupConstants {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relator_count(&self) -> usize {
        self.per_relator.len()
    }

    /// `μ_{i,j,k}` with 0-based indices.
    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        self.per_relator[k][(i, j)]
    }

    pub fn relator(&self, k: usize) -> &IntegerMatrix {
        &self.per_relator[k]
    }

    pub fn is_zero(&self) -> bool {
        self.per_relator.iter().all(|m| m.is_zero())
    }

    /// Linearized Alexander matrix: rows indexed by relators, entry
    /// `(k, j) = Σ_i μ_{i,j,k} λ_i`.
    pub fn linearized_matrix(&self, lambda: &[u64], p: Prime) -> PrimeFieldMatrix {
        check_lambda(self.n, lambda);
        let lam: Vec<i64> = lambda.iter().map(|&x| (x % p.get()) as i64).collect();
        PrimeFieldMatrix::from_fn(p, self.per_relator.len(), self.n, |k, j| {
            let m = &self.per_relator[k];
            (0..self.n).map(|i| m[(i, j)] * lam[i]).sum()
        })
    }
}

pub fn cup_structure_constants(g: &Presentation) -> Result<CupConstants> {
    g.check_commutator_relators()?;
    let n = g.n();
    let per_relator = g
        .relators()
        .iter()
        .map(|r| {
            let upper = truncate_mod_f3(r, n)?;
            Ok(IntegerMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
                std::cmp::Ordering::Less => upper[(i, j)],
                std::cmp::Ordering::Greater => -upper[(j, i)],
                std::cmp::Ordering::Equal => 0,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(CupConstants { n, per_relator })
}

/// Any of the supported descriptions of a group `G` with `H_1(G) = Z^n`.
#[derive(Clone, Debug)]
pub enum ArrangementInput {
    Lattice(LineLattice),
    Linking(LinkingMatrix),
    Presentation { presentation: Presentation, cup: CupConstants },
}

impl ArrangementInput {
    pub fn from_presentation(presentation: Presentation) -> Result<Self> {
        let cup = cup_structure_constants(&presentation)?;
        Ok(ArrangementInput::Presentation { presentation, cup })
    }

    pub fn n(&self) -> usize {
        match self {
            ArrangementInput::Lattice(l) => l.n(),
            ArrangementInput::Linking(lk) => lk.n(),
            ArrangementInput::Presentation { presentation, .. } => presentation.n(),
        }
    }

    /// Linearized Alexander matrix at `λ`; its corank minus one is the
    /// `p`-torsion dimension of the corresponding index-`p` subgroup of `G/G_3`.
    pub fn linearized_matrix(&self, lambda: &[u64], p: Prime) -> PrimeFieldMatrix {
        match self {
            ArrangementInput::Lattice(l) => complex_linearized_matrix(l, lambda, p),
            ArrangementInput::Linking(lk) => link_linearized_matrix(lk, lambda, p),
            ArrangementInput::Presentation { cup, .. } => cup.linearized_matrix(lambda, p),
        }
    }

    /// A presentation of a group with the right quotient at stage `q`.
    ///
    /// Lattices and linking matrices only determine `G/G_3`, so stages above 3
    /// need an explicit presentation.
    pub fn presentation_for_stage(&self, q: usize) -> Result<Presentation> {
        match self {
            ArrangementInput::Presentation { presentation, .. } => Ok(presentation.clone()),
            _ if q > 3 => Err(Error::Unsupported(format!(
                "G/G_{q} is not determined by a lattice or linking matrix; supply a presentation"
            ))),
            ArrangementInput::Lattice(l) => Ok(l.presentation()),
            ArrangementInput::Linking(lk) => Ok(lk.presentation()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: u64) -> Prime {
        Prime::new(x).unwrap()
    }

    fn lattice(n: usize, flats: &[&str]) -> LineLattice {
        let flats: Vec<Vec<usize>> = flats
            .iter()
            .map(|f| f.chars().map(|c| c.to_digit(10).unwrap() as usize).collect())
            .collect();
        LineLattice::new(n, &flats).unwrap()
    }

    #[test]
    fn betti_numbers() {
        let a3 = lattice(6, &["123", "145", "246", "356", "16", "25", "34"]);
        assert_eq!((a3.b1(), a3.b2()), (6, 11));
        assert_eq!(LineLattice::generic(4).b2(), 6);
        let nf = lattice(7, &["123", "147", "156", "257", "345", "367", "24", "26", "46"]);
        assert_eq!((nf.n(), nf.b2()), (7, 15));
        assert_eq!(lattice(6, &["123", "145", "246", "356"]), a3);
    }

    #[test]
    fn lattice_errors() {
        assert!(LineLattice::new(4, &[vec![1, 2, 3], vec![2, 3, 4]]).is_err());
        assert!(LineLattice::new(4, &[vec![1, 2, 3], vec![1, 2]]).is_err());
        assert!(LineLattice::new(4, &[vec![1, 1, 2]]).is_err());
        assert!(LineLattice::new(3, &[vec![1, 2, 4]]).is_err());
        assert!(LineLattice::parse("n 4\n1 1 2\n").is_err());
    }

    #[test]
    fn parse_lattice_file() {
        let text = "# MacLane\nn 8\n123\n456\n147\n267\n258\n348\n357\n168\n15\n24\n36\n78\n";
        let l = LineLattice::parse(text).unwrap();
        assert_eq!(l.n(), 8);
        assert_eq!(l.multiple_points().count(), 8);
        let spaced = LineLattice::parse("n 3\n1 2 3\n").unwrap();
        assert_eq!(spaced, LineLattice::pencil(3));
    }

    #[test]
    fn complex_block_by_hand() {
        let l = LineLattice::pencil(3);
        let m = complex_linearized_matrix(&l, &[1, 0, 0], p(3));
        assert_eq!(m.row(0), &[0, 1, 1]);
        assert_eq!(m.row(1), &[0, 2, 0]);
    }

    #[test]
    fn link_matrix_hopf() {
        let lk = LinkingMatrix::all_positive(2);
        let m = link_linearized_matrix(&lk, &[1, 0], p(5));
        assert_eq!((m.rows(), m.cols()), (1, 2));
        assert_eq!(m.rank(), 1);
        // the Hopf link group is Z^2, so no index-p subgroup has torsion
        let m = link_linearized_matrix(&lk, &[1, 4], p(5));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn permutation_linking() {
        let lk = linking_from_permutation(&"2134".parse().unwrap());
        assert_eq!(lk.get(0, 1), -1);
        assert_eq!(lk.upper().iter().filter(|&&x| x == -1).count(), 1);
        let id = linking_from_permutation(&"1234".parse().unwrap());
        assert_eq!(id, LinkingMatrix::all_positive(4));
        let tau: Permutation = "31425".parse().unwrap();
        assert_eq!(linking_from_permutation(&tau.reversed()), linking_from_permutation(&tau).negated());
        let lk = linking_from_permutation(&tau);
        assert_eq!(lk.upper(), vec![1, -1, 1, 1, -1, -1, 1, 1, 1, 1]);
        assert!("1224".parse::<Permutation>().is_err());
        assert_eq!("10,1,2,3,4,5,6,7,8,9".parse::<Permutation>().unwrap().n(), 10);
    }

    #[test]
    fn linking_file_roundtrip() {
        let lk = linking_from_permutation(&"31425".parse().unwrap());
        assert_eq!(LinkingMatrix::parse(&lk.to_string()).unwrap(), lk);
        assert!(LinkingMatrix::parse("n 3\n1 1\n").is_err());
        assert!(LinkingMatrix::parse("n 3\n1 2 1\n").is_err());
    }

    #[test]
    fn equation_signs() {
        let coord = DefiningEquations::from_integers(&[([1, 0, 0, 0], [0, 1, 0, 0]), ([0, 0, 1, 0], [0, 0, 0, 1])]);
        assert_eq!(linking_from_equations(&coord).unwrap().get(0, 1), 1);
        let swapped = DefiningEquations::from_integers(&[([1, 0, 0, 0], [0, 1, 0, 0]), ([0, 0, 0, 1], [0, 0, 1, 0])]);
        assert_eq!(linking_from_equations(&swapped).unwrap().get(0, 1), -1);
        let same = DefiningEquations::from_integers(&[([1, 0, 0, 0], [0, 1, 0, 0]), ([1, 1, 0, 0], [0, 1, 0, 0])]);
        assert!(matches!(linking_from_equations(&same), Err(Error::NotTransverse(1, 2))));
    }

    #[test]
    fn horizontal_equations_match_permutations() {
        let cases: [(&str, Vec<((i64, i64), (i64, i64))>); 5] = [
            ("12", vec![((0, 0), (0, 0)), ((1, 0), (0, 0))]),
            ("21", vec![((0, 0), (0, 0)), ((0, 0), (1, 0))]),
            ("132", vec![((0, 0), (0, 0)), ((10, 0), (0, 0)), ((11, 0), (5, 0))]),
            ("321", vec![((0, 0), (0, 0)), ((0, 0), (0, 10)), ((0, 0), (0, 20))]),
            ("231", vec![((0, 0), (0, 0)), ((10, 0), (20, 0)), ((11, 0), (20, 0))]),
        ];
        for (tau, coeffs) in cases {
            let eq = DefiningEquations::horizontal(&coeffs);
            let lk = linking_from_equations(&eq).unwrap();
            assert_eq!(lk, linking_from_permutation(&tau.parse().unwrap()), "{tau}");
        }
    }

    #[test]
    fn parse_equations() {
        let eq = DefiningEquations::parse("1 0 0 0 | 0 1 0 0\n0 0 1 0 0 0 0 1/2\n").unwrap();
        assert_eq!(eq.n(), 2);
        assert_eq!(linking_from_equations(&eq).unwrap().get(0, 1), 1);
        let dec = DefiningEquations::parse("1 0 0 0 0 1 0 0\n0 0 -0.5 0 0 0 0 1\n").unwrap();
        assert_eq!(linking_from_equations(&dec).unwrap().get(0, 1), -1);
        assert!(DefiningEquations::parse("1 0 0\n").is_err());
    }

    #[test]
    fn chi_transpose_three_planes() {
        let chi = chi_transpose_matrix(&LinkingMatrix::all_positive(3));
        assert_eq!(chi.shape(), (1, 3));
        assert_eq!(chi.row(0), &[1, -1, 1]);
        let lk = LinkingMatrix::from_upper(4, &[-1, 1, 1, 1, 1, 1]).unwrap();
        let chi = chi_transpose_matrix(&lk);
        assert_eq!(chi.shape(), (3, 6));
        for (r, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
            let col = ExteriorBasis::new(4, 2).index_of(&[i, j]).unwrap();
            assert_eq!(chi[(r, col)], 1);
        }
        assert_eq!(chi.row(0), &[1, 0, 1, 0, -1, 0]);
    }

    #[test]
    fn cup_constants() {
        let g = Presentation::commutator_relators(2, vec![Word::commutator(&Word::generator(0), &Word::generator(1))])
            .unwrap();
        let mu = cup_structure_constants(&g).unwrap();
        assert_eq!(mu.get(0, 1, 0), 1);
        assert_eq!(mu.get(1, 0, 0), -1);
        assert!(cup_structure_constants(&Presentation::free(3)).unwrap().is_zero());
    }

    #[test]
    fn presentations_match_builders() {
        let prime = p(3);
        let inputs = [
            ArrangementInput::Lattice(lattice(6, &["123", "145", "246", "356"])),
            ArrangementInput::Linking(linking_from_permutation(&"31425".parse().unwrap())),
        ];
        for input in &inputs {
            let cup = cup_structure_constants(&input.presentation_for_stage(3).unwrap()).unwrap();
            for pt in crate::linalg::enumerate_projective(input.n(), prime) {
                let a = input.linearized_matrix(pt.coords(), prime).rank();
                let b = cup.linearized_matrix(pt.coords(), prime).rank();
                assert_eq!(a, b, "{pt}");
            }
        }
        assert!(inputs[0].presentation_for_stage(4).is_err());
    }
}
