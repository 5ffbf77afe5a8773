//! Rank stratification of `P(Z_p^n)` for the built-in line arrangements.

use nuinv::catalog::lattice_examples;
use nuinv::linalg::Prime;
use nuinv::resonance::stratify;

fn main() -> nuinv::Result<()> {
    for e in lattice_examples() {
        let l = e.lattice();
        println!("{} (n = {}, b2 = {})", e.name, l.n(), l.b2());
        for p in [2, 3] {
            let p = Prime::new(p)?;
            let prof = stratify(|x| l.linearized_matrix(x, p), l.n(), p, true);
            println!("  p = {p}: nu = {:?}", prof.trimmed());
            if let Some(pts) = prof.stratum(2).filter(|s| !s.is_empty()) {
                let shown: Vec<String> = pts.iter().take(4).map(|pt| pt.to_string()).collect();
                println!("    some points with d = 2: {}", shown.join(" "));
            }
        }
    }
    Ok(())
}
