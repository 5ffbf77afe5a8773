//! Command-line front end: argument parsing, input loading and TSV output.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::arrangement::{
    linking_from_equations, linking_from_permutation, ArrangementInput, DefiningEquations, LineLattice,
    LinkingMatrix, Permutation,
};
use crate::catalog::lattice_example;
use crate::group::{braid_closure_presentation, parse_braid, Presentation};
use crate::harness::{run_suite, table1_results, Suite};
use crate::linalg::{Prime, ProjectivePoint};
use crate::nilquot::nu_table;
use crate::parallel::{threads_from_env, with_threads, THREADS_ENV};
use crate::resonance::{hyperplane_cover_check, stratify};
use crate::ziegler::ziegler_invariant;
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "nuinv", version, about = "Resonance varieties and index-p subgroup counts of arrangement groups")]
pub struct JobSpec {
    /// Worker threads (0 = one per core). Defaults to $NUINV_THREADS, else 1.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stratify P(Z_p^n) by the rank of the linearized Alexander matrix.
    Resonance {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 3)]
        p: u64,
        /// Also list the points of every stratum.
        #[arg(long)]
        points: bool,
        /// File of linear forms (n integers per line); reports the points of
        /// R_1 not on any of these hyperplanes.
        #[arg(long)]
        forms: Option<PathBuf>,
    },
    /// Distribution of H_1 of index-p subgroups of G/G_q.
    Nu {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 3)]
        q: usize,
        #[arg(long, default_value_t = 3)]
        p: u64,
    },
    /// Ziegler invariant Z_(0,2) of a 2-arrangement.
    Ziegler {
        #[command(flatten)]
        input: InputArgs,
    },
    /// nu_{3,d} of the horizontal arrangements of at most six planes.
    Table1,
    /// Run a reproduction suite: examples5, table1, cross-method,
    /// oracle-free-nilpotent, structure, ziegler, geometry, totals or all.
    Verify { suite: String },
}

/// Exactly one arrangement source.
#[derive(Debug, Default, Args)]
pub struct InputArgs {
    /// Permutation of a horizontal arrangement, e.g. 341256.
    #[arg(long)]
    pub tau: Option<String>,
    /// Lattice file, or the name of a built-in example (braid-A3, non-Fano, MacLane, AG(2,3)).
    #[arg(long)]
    pub lattice: Option<String>,
    /// Linking matrix file.
    #[arg(long)]
    pub linking: Option<PathBuf>,
    /// Presentation file (one relator per line).
    #[arg(long)]
    pub presentation: Option<PathBuf>,
    /// Defining equations file (8 rationals per line).
    #[arg(long)]
    pub equations: Option<PathBuf>,
    /// Pure braid word, e.g. "s1^2 s2^2"; needs --strands.
    #[arg(long, requires = "strands")]
    pub braid: Option<String>,
    #[arg(long)]
    pub strands: Option<usize>,
    /// Input file whose format is detected from its content.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

fn read(path: &PathBuf) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

/// Guesses the format of an input file: no `n` header means equations; a
/// header followed by only `±1` entries means a linking matrix; words
/// containing `x` mean a presentation; anything else is a lattice.
pub fn detect_input(text: &str) -> Result<ArrangementInput> {
    let lines: Vec<&str> = crate::arrangement::content_lines(text).map(|(_, l)| l).collect();
    if lines.first().is_none_or(|l| !l.starts_with('n')) {
        return Ok(ArrangementInput::Linking(linking_from_equations(&DefiningEquations::parse(text)?)?));
    }
    let body = &lines[1..];
    if body.iter().any(|l| l.contains('x')) {
        return ArrangementInput::from_presentation(Presentation::parse(text)?);
    }
    let tokens: Vec<&str> = body.iter().flat_map(|l| l.split_whitespace()).collect();
    if !tokens.is_empty() && tokens.iter().all(|t| matches!(*t, "1" | "-1" | "+1")) {
        return Ok(ArrangementInput::Linking(LinkingMatrix::parse(text)?));
    }
    Ok(ArrangementInput::Lattice(LineLattice::parse(text)?))
}

pub fn parse_arrangement(args: &InputArgs) -> Result<ArrangementInput> {
    let given = [
        args.tau.is_some(),
        args.lattice.is_some(),
        args.linking.is_some(),
        args.presentation.is_some(),
        args.equations.is_some(),
        args.braid.is_some(),
        args.input.is_some(),
    ];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(Error::Unsupported(
            "give exactly one of --tau, --lattice, --linking, --presentation, --equations, --braid, --input".into(),
        ));
    }
    if let Some(t) = &args.tau {
        return Ok(ArrangementInput::Linking(linking_from_permutation(&t.parse::<Permutation>()?)));
    }
    if let Some(l) = &args.lattice {
        let path = PathBuf::from(l);
        if !path.exists() {
            if let Some(e) = lattice_example(l) {
                return Ok(ArrangementInput::Lattice(e.lattice()));
            }
        }
        return Ok(ArrangementInput::Lattice(LineLattice::parse(&read(&path)?)?));
    }
    if let Some(path) = &args.linking {
        return Ok(ArrangementInput::Linking(LinkingMatrix::parse(&read(path)?)?));
    }
    if let Some(path) = &args.presentation {
        return ArrangementInput::from_presentation(Presentation::parse(&read(path)?)?);
    }
    if let Some(path) = &args.equations {
        return Ok(ArrangementInput::Linking(linking_from_equations(&DefiningEquations::parse(&read(path)?)?)?));
    }
    if let Some(b) = &args.braid {
        let n = args.strands.expect("clap enforces --strands");
        return ArrangementInput::from_presentation(braid_closure_presentation(&parse_braid(b)?, n)?);
    }
    let path = args.input.as_ref().expect("one source given");
    detect_input(&read(path)?)
}

fn parse_forms(text: &str, n: usize) -> Result<Vec<Vec<i64>>> {
    crate::arrangement::content_lines(text)
        .map(|(idx, line)| {
            let f: Vec<i64> = line
                .split_whitespace()
                .map(|t| t.parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(idx, "bad coefficient"))?;
            if f.len() != n {
                return Err(Error::parse(idx, format!("expected {n} coefficients, got {}", f.len())));
            }
            Ok(f)
        })
        .collect()
}

fn write_points(out: &mut impl Write, label: &str, pts: &[ProjectivePoint]) -> Result<()> {
    for pt in pts {
        writeln!(out, "{label}\t{pt}")?;
    }
    Ok(())
}

/// Runs a parsed job, writing results to `out`; returns the exit code.
pub fn execute(job: &JobSpec, out: &mut impl Write) -> Result<i32> {
    match &job.command {
        Command::Resonance { input, p, points, forms } => {
            let p = Prime::new(*p)?;
            let arr = parse_arrangement(input)?;
            let n = arr.n();
            let forms = forms.as_ref().map(|f| read(f).and_then(|t| parse_forms(&t, n))).transpose()?;
            let collect = *points || forms.is_some();
            let prof = stratify(|x| arr.linearized_matrix(x, p), n, p, collect);
            writeln!(out, "# nu_{{{p},d}}(G/G_3) from the rank of the linearized Alexander matrix, n={n}, p={p}", p = p.get())?;
            writeln!(out, "d\tcount")?;
            for (d, c) in prof.counts.iter().enumerate() {
                writeln!(out, "{d}\t{c}")?;
            }
            if *points {
                writeln!(out, "# points by stratum")?;
                writeln!(out, "d\tpoint")?;
                for d in 0..n {
                    write_points(out, &d.to_string(), prof.stratum(d).unwrap_or(&[]))?;
                }
            }
            if let Some(forms) = forms {
                let residual = hyperplane_cover_check(&prof.points_at_least(1), &forms);
                writeln!(out, "# points of R_1 off the given hyperplanes: {}", residual.len())?;
                write_points(out, "residual", &residual)?;
            }
            Ok(if prof.total_is_consistent() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Nu { input, q, p } => {
            let p = Prime::new(*p)?;
            let arr = parse_arrangement(input)?;
            let g = arr.presentation_for_stage(*q)?;
            let table = nu_table(&g, *q, p)?;
            writeln!(out, "# index-{p} subgroups K of G/G_{q} by H_1(K), n={n}", p = p.get(), n = g.n())?;
            if *q == 3 {
                writeln!(out, "d\tcount")?;
                for (d, c) in table.by_dimension().iter().enumerate() {
                    writeln!(out, "{d}\t{c}")?;
                }
            } else {
                writeln!(out, "H1(K)\tcount")?;
                for (class, c) in &table.classes {
                    writeln!(out, "{class}\t{c}")?;
                }
                writeln!(out, "# by d = dim Tors H_1(K) (x) Z_{}", p.get())?;
                writeln!(out, "d\tcount")?;
                for (d, c) in table.by_dimension().iter().enumerate() {
                    writeln!(out, "{d}\t{c}")?;
                }
            }
            if table.violations > 0 {
                eprintln!("{} classes violate the structure theorem", table.violations);
            }
            Ok(if table.violations == 0 && table.total_is_consistent() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Ziegler { input } => {
            let lk = match parse_arrangement(input)? {
                ArrangementInput::Linking(lk) => lk,
                _ => return Err(Error::Unsupported("ziegler needs --tau, --linking or --equations".into())),
            };
            match ziegler_invariant(&lk) {
                Ok(class) => {
                    writeln!(out, "{class}")?;
                    Ok(EXIT_OK)
                }
                Err(e @ Error::ShapeViolation(_)) => {
                    eprintln!("{e}");
                    Ok(EXIT_MISMATCH)
                }
                Err(e) => Err(e),
            }
        }
        Command::Table1 => {
            let rows = table1_results()?;
            writeln!(out, "# nu_{{3,d}}(G/G_3) of horizontal arrangements via twisted Alexander matrices")?;
            writeln!(out, "# linking convention: l_ij = -1 iff tau lists j before i (mirror image gives the same counts)")?;
            writeln!(out, "# configuration M omitted: its linking numbers are not determined by a permutation")?;
            writeln!(out, "arrangement\ttau\tnu\texpected\tstatus")?;
            let mut ok = true;
            for r in &rows {
                let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
                let status = if r.matches() { "ok" } else { "MISMATCH" };
                ok &= r.matches();
                writeln!(out, "{}\t{}\t{}\t{}\t{status}", r.label, r.tau, join(&r.counts), join(r.expected))?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let checks = run_suite(suite);
            writeln!(out, "# verify {suite}")?;
            writeln!(out, "status\tcheck\tdetail")?;
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(out, "# {} passed, {failed} failed", checks.len() - failed)?;
            Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

/// Entry point for the binary: parses arguments, runs the job on the
/// requested number of threads and maps errors to exit codes.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let job = match JobSpec::try_parse_from(args) {
        Ok(job) => job,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let threads = match job.threads.map_or_else(threads_from_env, Ok) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e} (set {THREADS_ENV} or --threads)");
            return EXIT_INPUT;
        }
    };
    let stdout = std::io::stdout();
    let result = with_threads(threads, || execute(&job, &mut stdout.lock()));
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}
