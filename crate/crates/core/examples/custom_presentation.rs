//! Working from an explicit commutator-relators presentation: cup-product
//! constants, resonance counts and `nu` at stage 3.

use nuinv::arrangement::ArrangementInput;
use nuinv::group::Presentation;
use nuinv::linalg::Prime;
use nuinv::nilquot::nu_table;
use nuinv::resonance::stratify;

const TEXT: &str = "\
n 4
# a central 3-fold point plus a transverse line
[x1,x2][x1,x3]
[x2,x1][x2,x3]
[x1,x4]
[x2,x4]
[x3,x4]
";

fn main() -> nuinv::Result<()> {
    let g = Presentation::parse(TEXT)?;
    println!("{g}");
    let input = ArrangementInput::from_presentation(g.clone())?;
    if let ArrangementInput::Presentation { cup, .. } = &input {
        for k in 0..cup.relator_count() {
            println!("mu for relator {}:\n{}", k + 1, cup.relator(k));
        }
    }
    for p in [2, 3, 5] {
        let p = Prime::new(p)?;
        let prof = stratify(|x| input.linearized_matrix(x, p), input.n(), p, false);
        let nu = nu_table(&g, 3, p)?;
        println!("p = {p}: rank counts {:?}, SNF counts {:?}", prof.trimmed(), nu.by_dimension());
    }
    Ok(())
}
