//! Reproduction checks for the reference counts, invariants and resonance
//! geometry. Each suite returns one [`Check`] per named criterion.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{linking_from_permutation, ArrangementInput, LinkingMatrix};
use crate::catalog::{cubic_31425, lattice_examples, table1_rows, R2_PLANES_31425};
use crate::group::{nilpotent_presentation, Presentation};
use crate::linalg::{torsion_p_dimension, Prime, PrimeFieldMatrix, ProjectivePoint, ProjectiveSpace};
use crate::nilquot::{free_nilpotent_oracle, kernel_classes, nu_table, structure_check};
use crate::resonance::{random_points, stratify, torsion_dimension, Polynomial};
use crate::ziegler::ziegler_invariant;
use crate::{Error, Result};

/// Outcome of one named criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    fn from_result(name: impl Into<String>, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Check::new(name, passed, detail),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}\t{}\t{}", self.name, self.detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Examples5,
    Table1,
    CrossMethod,
    OracleFreeNilpotent,
    Structure,
    Ziegler,
    Geometry,
    Totals,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Examples5,
        Suite::Table1,
        Suite::CrossMethod,
        Suite::OracleFreeNilpotent,
        Suite::Structure,
        Suite::Ziegler,
        Suite::Geometry,
        Suite::Totals,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Examples5 => "examples5",
            Suite::Table1 => "table1",
            Suite::CrossMethod => "cross-method",
            Suite::OracleFreeNilpotent => "oracle-free-nilpotent",
            Suite::Structure => "structure",
            Suite::Ziegler => "ziegler",
            Suite::Geometry => "geometry",
            Suite::Totals => "totals",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn run_suite(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Examples5 => examples5(),
        Suite::Table1 => table1(),
        Suite::CrossMethod => cross_method(),
        Suite::OracleFreeNilpotent => oracle_free_nilpotent(),
        Suite::Structure => structure(),
        Suite::Ziegler => ziegler(),
        Suite::Geometry => geometry(),
        Suite::Totals => totals(),
        Suite::All => Suite::EACH.into_iter().flat_map(run_suite).collect(),
    }
}

fn prime(p: u64) -> Prime {
    Prime::new(p).expect("prime literal")
}

/// Equality of count vectors up to trailing zeros.
pub fn counts_match(got: &[u64], expected: &[u64]) -> bool {
    (0..got.len().max(expected.len())).all(|i| got.get(i).unwrap_or(&0) == expected.get(i).unwrap_or(&0))
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// `ν_{p,d}` of the lattice examples by rank stratification.
pub fn examples5() -> Vec<Check> {
    lattice_examples()
        .into_iter()
        .map(|e| {
            let l = e.lattice();
            let mut ok = true;
            let mut parts = Vec::new();
            for p in e.primes() {
                let pr = prime(p);
                let prof = stratify(|x| l.linearized_matrix(x, pr), l.n(), pr, false);
                let good = prof.total_is_consistent()
                    && e.expected.iter().filter(|x| x.0 == p).all(|&(_, d, c)| prof.count(d) == c);
                ok &= good;
                parts.push(format!("p={p}: nu=({})", join(prof.trimmed())));
            }
            Check::new(format!("examples5/{}", e.name), ok, parts.join("; "))
        })
        .collect()
}

/// One horizontal arrangement: the SNF pipeline at `q = 3, p = 3`, plus the rank counts
/// of the mirror linking matrix.
#[derive(Clone, Debug)]
pub struct Table1Result {
    pub label: &'static str,
    pub tau: &'static str,
    pub expected: &'static [u64],
    pub counts: Vec<u64>,
    pub mirror_counts: Vec<u64>,
    pub violations: u64,
    pub total_ok: bool,
}

impl Table1Result {
    pub fn matches(&self) -> bool {
        counts_match(&self.counts, self.expected)
    }
}

pub fn table1_results() -> Result<Vec<Table1Result>> {
    let p3 = prime(3);
    table1_rows()
        .into_iter()
        .map(|row| {
            let lk = row.linking();
            let nu = nu_table(&lk.presentation(), 3, p3)?;
            let mirror = lk.negated();
            let prof = stratify(|x| mirror.linearized_matrix(x, p3), lk.n(), p3, false);
            Ok(Table1Result {
                label: row.label,
                tau: row.tau,
                expected: row.expected,
                counts: nu.by_dimension(),
                mirror_counts: prof.trimmed().to_vec(),
                violations: nu.violations,
                total_ok: nu.total_is_consistent(),
            })
        })
        .collect()
}

pub fn table1() -> Vec<Check> {
    match table1_results() {
        Ok(rows) => rows
            .into_iter()
            .map(|r| {
                let mirror = if counts_match(&r.mirror_counts, r.expected) { "also matches" } else { "differs" };
                Check::new(
                    format!("table1/{}", r.label),
                    r.matches() && r.total_ok,
                    format!("nu=({}) expected=({}) mirror convention {mirror}", join(&r.counts), join(r.expected)),
                )
            })
            .collect(),
        Err(e) => vec![Check::new("table1", false, format!("error: {e}"))],
    }
}

/// Point-by-point comparison of the two ways of computing `d(λ)` at stage 3.
#[derive(Clone, Debug, Default)]
pub struct CrossMethodOutcome {
    pub points: usize,
    pub mismatches: usize,
    pub violations: usize,
    pub snf_counts: Vec<u64>,
    pub rank_counts: Vec<u64>,
}

pub fn cross_method_compare(input: &ArrangementInput, p: Prime) -> Result<CrossMethodOutcome> {
    let n = input.n();
    let gq = nilpotent_presentation(&input.presentation_for_stage(3)?, 3);
    let classes = kernel_classes(&gq, p)?;
    let mut out = CrossMethodOutcome { snf_counts: vec![0; n], rank_counts: vec![0; n], ..Default::default() };
    for (pt, class) in ProjectiveSpace::new(n, p).iter().zip(&classes) {
        let by_rank = torsion_dimension(n, &input.linearized_matrix(pt.coords(), p));
        let by_snf = torsion_p_dimension(class, p.get());
        out.points += 1;
        out.mismatches += (by_rank != by_snf) as usize;
        out.violations += !structure_check(class, n, 3, p) as usize;
        out.rank_counts[by_rank] += 1;
        if by_snf < n {
            out.snf_counts[by_snf] += 1;
        }
    }
    Ok(out)
}

/// Every lattice example and every horizontal arrangement of the catalog, at `p = 3`.
pub fn cross_method_inputs() -> Vec<(String, ArrangementInput)> {
    let lattices = lattice_examples().into_iter().map(|e| (e.name.to_string(), ArrangementInput::Lattice(e.lattice())));
    let links = table1_rows().into_iter().map(|r| (r.label.to_string(), ArrangementInput::Linking(r.linking())));
    lattices.chain(links).collect()
}

pub fn cross_method() -> Vec<Check> {
    cross_method_inputs()
        .into_iter()
        .map(|(name, input)| {
            let r = cross_method_compare(&input, prime(3)).map(|o| {
                let ok = o.mismatches == 0 && o.points as u64 == prime(3).projective_count(input.n());
                (ok, format!("{} points, {} mismatches, nu=({})", o.points, o.mismatches, join(&o.rank_counts)))
            });
            Check::from_result(format!("cross-method/{name}"), r)
        })
        .collect()
}

/// `(n, q, p)` combinations checked against the closed form.
pub const FREE_NILPOTENT_CASES: [(usize, usize, u64); 12] = [
    (2, 3, 2),
    (2, 3, 3),
    (2, 4, 2),
    (2, 4, 3),
    (2, 5, 2),
    (2, 5, 3),
    (3, 3, 2),
    (3, 3, 3),
    (3, 4, 2),
    (3, 4, 3),
    (3, 5, 2),
    (3, 5, 3),
];

/// Number of `λ` whose class differs from the closed form, and the number of
/// structure-theorem violations, for `F(n)/F(n)_q`.
pub fn free_nilpotent_compare(n: usize, q: usize, p: Prime) -> Result<(usize, usize, usize)> {
    let gq = nilpotent_presentation(&Presentation::free(n), q);
    let expected = free_nilpotent_oracle(n, q, p);
    let classes = kernel_classes(&gq, p)?;
    let mismatches = classes.iter().filter(|c| **c != expected).count();
    let violations = classes.iter().filter(|c| !structure_check(c, n, q, p)).count();
    Ok((classes.len(), mismatches, violations))
}

pub fn oracle_free_nilpotent() -> Vec<Check> {
    FREE_NILPOTENT_CASES
        .iter()
        .map(|&(n, q, p)| {
            let r = free_nilpotent_compare(n, q, prime(p)).map(|(pts, bad, _)| {
                let ok = bad == 0 && pts as u64 == prime(p).projective_count(n);
                (ok, format!("{pts} points, {bad} mismatches, H1(K) = {}", free_nilpotent_oracle(n, q, prime(p))))
            });
            Check::from_result(format!("oracle-free-nilpotent/n={n},q={q},p={p}"), r)
        })
        .collect()
}

pub fn structure() -> Vec<Check> {
    let mut checks = Vec::new();
    let (mut pts, mut bad) = (0, 0);
    let mut failed = None;
    for (name, input) in cross_method_inputs() {
        match cross_method_compare(&input, prime(3)) {
            Ok(o) => {
                pts += o.points;
                bad += o.violations;
            }
            Err(e) => failed = Some(format!("{name}: {e}")),
        }
    }
    checks.push(match failed {
        Some(e) => Check::new("structure/arrangements-q3-p3", false, format!("error: {e}")),
        None => Check::new("structure/arrangements-q3-p3", bad == 0, format!("{pts} classes, {bad} violations")),
    });
    let (mut pts, mut bad) = (0, 0);
    let mut failed = None;
    for &(n, q, p) in &FREE_NILPOTENT_CASES {
        match free_nilpotent_compare(n, q, prime(p)) {
            Ok((k, _, v)) => {
                pts += k;
                bad += v;
            }
            Err(e) => failed = Some(e.to_string()),
        }
    }
    checks.push(match failed {
        Some(e) => Check::new("structure/free-nilpotent", false, format!("error: {e}")),
        None => Check::new("structure/free-nilpotent", bad == 0, format!("{pts} classes, {bad} violations")),
    });
    checks
}

pub fn ziegler() -> Vec<Check> {
    [("1234", "Z^1"), ("2134", "Z2^1"), ("21435", "Z2^4"), ("31425", "Z2^4")]
        .into_iter()
        .map(|(tau, expected)| {
            let lk = linking_from_permutation(&tau.parse().expect("permutation literal"));
            let r = ziegler_invariant(&lk).map(|c| (c.to_string() == expected, format!("Z = {c}, expected {expected}")));
            Check::from_result(format!("ziegler/A({tau})"), r)
        })
        .collect()
}

/// Seeded sampler of points of `P(Z_p^n)` on prescribed loci.
pub struct Sampler {
    pub p: Prime,
    pub n: usize,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(n: usize, p: Prime, seed: u64) -> Self {
        Sampler { p, n, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn uniform(&mut self, count: usize) -> Vec<ProjectivePoint> {
        random_points(self.n, self.p, count, &mut self.rng)
    }

    /// Random points of the linear subspace cut out by `forms`.
    pub fn on_subspace(&mut self, forms: &[Vec<i64>], count: usize) -> Vec<ProjectivePoint> {
        let m = PrimeFieldMatrix::from_fn(self.p, forms.len(), self.n, |i, j| forms[i][j]);
        let basis = m.kernel_basis();
        if basis.is_empty() {
            return Vec::new();
        }
        let p = self.p.get();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count * 4 {
            if out.len() == count {
                break;
            }
            let mut v = vec![0i64; self.n];
            for b in &basis {
                let c = self.rng.gen_range(0..p);
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = ((*x as u64 + c * y) % p) as i64;
                }
            }
            out.extend(ProjectivePoint::new(self.p, &v));
        }
        out
    }

    /// Random points on the hypersurface `f = 0`, found by solving for the
    /// last coordinate.
    pub fn on_hypersurface(&mut self, f: &Polynomial, count: usize) -> Vec<ProjectivePoint> {
        let p = self.p.get();
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let mut v: Vec<u64> = (0..self.n).map(|_| self.rng.gen_range(0..p)).collect();
            let root = (0..p).find(|&x| {
                v[self.n - 1] = x;
                f.vanishes_at(&v, self.p)
            });
            if root.is_some() {
                let signed: Vec<i64> = v.iter().map(|&x| x as i64).collect();
                out.extend(ProjectivePoint::new(self.p, &signed));
            }
        }
        out
    }
}

/// A union of linear subspaces, each given by its defining forms.
type Locus = Vec<Vec<Vec<i64>>>;

fn on_locus(locus: &Locus, x: &[u64], p: Prime) -> bool {
    locus.iter().any(|forms| forms.iter().all(|f| Polynomial::linear(f).vanishes_at(x, p)))
}

fn coordinate_plane(n: usize, i: usize, j: usize, s: i64) -> Vec<Vec<i64>> {
    let mut forms = vec![{
        let mut f = vec![0; n];
        f[i - 1] = 1;
        f[j - 1] = s;
        f
    }];
    for k in (1..=n).filter(|&k| k != i && k != j) {
        let mut f = vec![0; n];
        f[k - 1] = 1;
        forms.push(f);
    }
    forms
}

/// Sample size of uniform points per arrangement in [`geometry`].
pub const GEOMETRY_UNIFORM_POINTS: usize = 10_000;
/// Points forced onto each sampled locus in [`geometry`].
pub const GEOMETRY_FORCED_POINTS: usize = 500;

struct VarietyClaim {
    name: &'static str,
    d: usize,
    locus: Locus,
    cubic: bool,
}

/// Resonance varieties of horizontal arrangements at `p = 101` against their
/// characteristic-0 descriptions, on seeded samples: uniform points plus
/// points forced onto every component.
pub fn geometry() -> Vec<Check> {
    let p = prime(101);
    let delta = |n: usize| vec![vec![1i64; n]];
    let h4 = vec![vec![1, 1, -1, -1]];
    let h6 = vec![vec![1, 1, -1, -1, -1, -1]];
    // A(321456) is symmetric in planes 1, 2, 3, so its second hyperplane is too
    let h6_sym = vec![vec![1, 1, 1, -1, -1, -1]];
    let lines_31425: Locus = R2_PLANES_31425.iter().map(|&(i, j, s)| coordinate_plane(5, i, j, s)).collect();
    let cases: Vec<(&str, Vec<VarietyClaim>, Locus)> = vec![
        (
            "1234",
            vec![VarietyClaim { name: "R1(A(1234)) = Delta4", d: 1, locus: vec![delta(4)], cubic: false }],
            vec![delta(4)],
        ),
        (
            "2134",
            vec![
                VarietyClaim { name: "R1(A(2134)) = Delta4 + H", d: 1, locus: vec![delta(4), h4.clone()], cubic: false },
                VarietyClaim {
                    name: "R2(A(2134)) = two lines",
                    d: 2,
                    locus: vec![
                        vec![vec![1, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
                        vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 1]],
                    ],
                    cubic: false,
                },
            ],
            vec![
                delta(4),
                h4.clone(),
                vec![vec![1, 1, 1, 1], vec![1, 1, -1, -1]],
                vec![vec![1, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
                vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 1]],
            ],
        ),
        (
            "321456",
            vec![
                VarietyClaim {
                    name: "R1(A(321456)) = Delta6 + H'",
                    d: 1,
                    locus: vec![delta(6), h6_sym.clone()],
                    cubic: false,
                },
                VarietyClaim { name: "R2(A(321456)) = R1", d: 2, locus: vec![delta(6), h6_sym.clone()], cubic: false },
            ],
            vec![delta(6), h6.clone(), h6_sym],
        ),
        (
            "213456",
            vec![
                VarietyClaim { name: "R1(A(213456)) = Delta6 + H", d: 1, locus: vec![delta(6), h6.clone()], cubic: false },
                VarietyClaim { name: "R2(A(213456)) = Delta6", d: 2, locus: vec![delta(6)], cubic: false },
            ],
            vec![delta(6), h6.clone()],
        ),
        (
            "31425",
            vec![
                VarietyClaim { name: "R1(A(31425)) = cubic", d: 1, locus: Vec::new(), cubic: true },
                VarietyClaim { name: "R2(A(31425)) = ten lines", d: 2, locus: lines_31425.clone(), cubic: false },
                VarietyClaim { name: "R3(A(31425)) = 0", d: 3, locus: Vec::new(), cubic: false },
            ],
            lines_31425,
        ),
    ];
    let cubic = cubic_31425();
    let mut checks = Vec::new();
    for (seed, (tau, claims, forced)) in cases.into_iter().enumerate() {
        let lk = linking_from_permutation(&tau.parse().expect("permutation literal"));
        let n = lk.n();
        let mut sampler = Sampler::new(n, p, 0x5eed + seed as u64);
        let mut pts = sampler.uniform(GEOMETRY_UNIFORM_POINTS);
        for forms in &forced {
            pts.extend(sampler.on_subspace(forms, GEOMETRY_FORCED_POINTS));
        }
        if tau == "31425" {
            pts.extend(sampler.on_hypersurface(&cubic, GEOMETRY_FORCED_POINTS));
        }
        let dims: Vec<usize> = pts.iter().map(|pt| torsion_dimension(n, &lk.linearized_matrix(pt.coords(), p))).collect();
        for claim in claims {
            let predicted = |x: &[u64]| {
                if claim.cubic {
                    cubic.vanishes_at(x, p)
                } else {
                    on_locus(&claim.locus, x, p)
                }
            };
            let mut members = 0;
            let mut mismatches = 0;
            for (pt, &d) in pts.iter().zip(&dims) {
                let member = d >= claim.d;
                members += member as usize;
                mismatches += (member != predicted(pt.coords())) as usize;
            }
            checks.push(Check::new(
                format!("geometry/{}", claim.name),
                mismatches == 0,
                format!("{} points at p=101, {members} in the variety, {mismatches} mismatches", pts.len()),
            ));
        }
    }
    checks
}

/// `Σ_d ν_{p,d} = (p^n - 1)/(p - 1)` for every table the other suites compute.
pub fn totals() -> Vec<Check> {
    let mut checks = Vec::new();
    for e in lattice_examples() {
        let l = e.lattice();
        let ok = e.primes().into_iter().all(|p| {
            let pr = prime(p);
            stratify(|x| l.linearized_matrix(x, pr), l.n(), pr, false).total_is_consistent()
        });
        checks.push(Check::new(format!("totals/{}", e.name), ok, "rank stratification at every listed prime"));
    }
    let p3 = prime(3);
    for row in table1_rows() {
        let lk: LinkingMatrix = row.linking();
        let r = nu_table(&lk.presentation(), 3, p3)
            .map(|t| (t.total_is_consistent(), format!("sum = {} of {}", t.total(), p3.projective_count(lk.n()))));
        checks.push(Check::from_result(format!("totals/{}", row.label), r));
    }
    for &(n, q, p) in &FREE_NILPOTENT_CASES {
        let r = nu_table(&Presentation::free(n), q, prime(p))
            .map(|t| (t.total_is_consistent(), format!("sum = {}", t.total())));
        checks.push(Check::from_result(format!("totals/F({n})/F_{q} p={p}"), r));
    }
    checks
}
