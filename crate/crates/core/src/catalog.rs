//! Named inputs used by the reproduction harness: example lattices, the
//! horizontal arrangements of at most six planes, and reference counts.

use crate::arrangement::{linking_from_permutation, LineLattice, LinkingMatrix, Permutation};
use crate::resonance::Polynomial;

/// A line arrangement lattice with reference counts `(p, d, ν_{p,d})`.
#[derive(Clone, Debug)]
pub struct LatticeExample {
    pub name: &'static str,
    pub n: usize,
    pub flats: &'static [&'static str],
    pub expected: Vec<(u64, usize, u64)>,
}

impl LatticeExample {
    pub fn lattice(&self) -> LineLattice {
        let flats: Vec<Vec<usize>> = self
            .flats
            .iter()
            .map(|f| f.chars().map(|c| c.to_digit(10).expect("digit") as usize).collect())
            .collect();
        LineLattice::new(self.n, &flats).expect("catalog lattice is valid")
    }

    /// The lattice in file format.
    pub fn to_file(&self) -> String {
        let mut s = format!("# {}\nn {}\n", self.name, self.n);
        for f in self.flats {
            s.push_str(f);
            s.push('\n');
        }
        s
    }

    pub fn primes(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.expected.iter().map(|e| e.0).collect();
        v.dedup();
        v
    }
}

fn per_prime(primes: &[u64], d: usize, f: impl Fn(u64) -> u64) -> Vec<(u64, usize, u64)> {
    primes.iter().map(|&p| (p, d, f(p))).collect()
}

/// The four line arrangements whose `ν_{p,d}` are known in closed form.
pub fn lattice_examples() -> Vec<LatticeExample> {
    vec![
        LatticeExample {
            name: "braid-A3",
            n: 6,
            flats: &["123", "145", "246", "356", "16", "25", "34"],
            expected: per_prime(&[2, 3, 5], 1, |p| 5 * (p + 1)),
        },
        LatticeExample {
            name: "non-Fano",
            n: 7,
            flats: &["123", "147", "156", "257", "345", "367", "24", "26", "46"],
            expected: [(2, 0, 102), (2, 1, 24), (2, 2, 1), (2, 3, 0)]
                .into_iter()
                .chain(per_prime(&[3, 5], 1, |p| 9 * (p + 1)))
                .collect(),
        },
        LatticeExample {
            name: "MacLane",
            n: 8,
            flats: &["123", "456", "147", "267", "258", "348", "357", "168", "15", "24", "36", "78"],
            expected: per_prime(&[2], 1, |p| 8 * (p + 1))
                .into_iter()
                .chain([(3, 1, 36), (3, 2, 0)])
                .chain(per_prime(&[5], 1, |p| 8 * (p + 1)))
                .collect(),
        },
        LatticeExample {
            name: "AG(2,3)",
            n: 9,
            flats: &["123", "456", "789", "147", "258", "369", "159", "357", "168", "249", "267", "348"],
            expected: per_prime(&[2], 1, |p| 16 * (p + 1))
                .into_iter()
                .chain([(3, 1, 48), (3, 2, 13), (3, 3, 0)])
                .chain(per_prime(&[5], 1, |p| 16 * (p + 1)))
                .collect(),
        },
    ]
}

pub fn lattice_example(name: &str) -> Option<LatticeExample> {
    lattice_examples().into_iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

/// A horizontal arrangement `A(τ)` with its reference `ν_{3,d}(G/G_3)`.
#[derive(Clone, Debug)]
pub struct Table1Row {
    pub label: &'static str,
    pub tau: &'static str,
    pub expected: &'static [u64],
}

impl Table1Row {
    pub fn permutation(&self) -> Permutation {
        self.tau.parse().expect("catalog permutation is valid")
    }

    pub fn linking(&self) -> LinkingMatrix {
        linking_from_permutation(&self.permutation())
    }
}

/// Horizontal arrangements of at most six planes. The last row, `L`, is a
/// configuration given by its linking numbers, which are those of `A(341256)`.
pub fn table1_rows() -> Vec<Table1Row> {
    let row = |label, tau, expected| Table1Row { label, tau, expected };
    vec![
        row("A(123)", "123", &[9, 4]),
        row("A(1234)", "1234", &[27, 0, 13]),
        row("A(2134)", "2134", &[18, 20, 2]),
        row("A(12345)", "12345", &[81, 0, 0, 40]),
        row("A(21345)", "21345", &[54, 27, 35, 5]),
        row("A(21435)", "21435", &[36, 66, 17, 2]),
        row("A(31425)", "31425", &[51, 60, 10, 0]),
        row("A(123456)", "123456", &[243, 0, 0, 0, 121]),
        row("A(213456)", "213456", &[162, 81, 0, 107, 14]),
        row("A(321456)", "321456", &[162, 0, 162, 32, 8]),
        row("A(215436)", "215436", &[108, 126, 87, 38, 5]),
        row("A(214356)", "214356", &[108, 108, 121, 24, 3]),
        row("A(312546)", "312546", &[72, 186, 90, 14, 2]),
        row("A(341256)", "341256", &[81, 162, 112, 6, 3]),
        row("A(314256)", "314256", &[117, 162, 74, 10, 1]),
        row("A(241536)", "241536", &[108, 200, 48, 8, 0]),
        row("L", "341256", &[81, 162, 112, 6, 3]),
    ]
}

/// The cubic cutting out `R_1(A(31425))` in characteristic 0.
pub fn cubic_31425() -> Polynomial {
    let t = |c: i64, e: [u32; 5]| (c, e.to_vec());
    Polynomial::new(vec![
        t(1, [3, 0, 0, 0, 0]),
        t(-1, [0, 3, 0, 0, 0]),
        t(-1, [0, 0, 3, 0, 0]),
        t(1, [0, 0, 0, 3, 0]),
        t(-1, [0, 0, 0, 0, 3]),
        t(1, [2, 1, 0, 0, 0]),
        t(-1, [1, 2, 0, 0, 0]),
        t(1, [2, 0, 1, 0, 0]),
        t(-1, [1, 0, 2, 0, 0]),
        t(-1, [2, 0, 0, 1, 0]),
        t(-1, [1, 0, 0, 2, 0]),
        t(1, [2, 0, 0, 0, 1]),
        t(-1, [1, 0, 0, 0, 2]),
        t(1, [0, 2, 1, 0, 0]),
        t(1, [0, 1, 2, 0, 0]),
        t(-1, [0, 2, 0, 1, 0]),
        t(1, [0, 1, 0, 2, 0]),
        t(1, [0, 2, 0, 0, 1]),
        t(1, [0, 1, 0, 0, 2]),
        t(-1, [0, 0, 2, 1, 0]),
        t(1, [0, 0, 1, 2, 0]),
        t(1, [0, 0, 2, 0, 1]),
        t(1, [0, 0, 1, 0, 2]),
        t(1, [0, 0, 0, 2, 1]),
        t(-1, [0, 0, 0, 1, 2]),
        t(2, [1, 1, 1, 0, 0]),
        t(-2, [1, 1, 0, 1, 0]),
        t(2, [1, 1, 0, 0, 1]),
        t(-2, [1, 0, 1, 1, 0]),
        t(2, [1, 0, 1, 0, 1]),
        t(-2, [1, 0, 0, 1, 1]),
        t(2, [0, 1, 1, 1, 0]),
        t(-2, [0, 1, 1, 0, 1]),
        t(2, [0, 1, 0, 1, 1]),
        t(2, [0, 0, 1, 1, 1]),
    ])
}

/// The ten planes making up `R_2(A(31425))`, each as a pair `(i, j, s)` meaning
/// `λ_i + s λ_j = 0` with every other coordinate zero (1-based).
pub const R2_PLANES_31425: [(usize, usize, i64); 10] = [
    (1, 2, 1),
    (1, 3, 1),
    (2, 4, 1),
    (3, 4, 1),
    (1, 5, 1),
    (4, 5, 1),
    (1, 4, -1),
    (2, 3, -1),
    (2, 5, -1),
    (3, 5, -1),
];
