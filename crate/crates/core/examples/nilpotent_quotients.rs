//! Index-`p` subgroups of nilpotent quotients: `nu` tables from twisted
//! Alexander matrices, and the closed form for free nilpotent groups.

use nuinv::arrangement::linking_from_permutation;
use nuinv::group::{nilpotent_presentation, Presentation, Representation};
use nuinv::linalg::Prime;
use nuinv::nilquot::{free_nilpotent_oracle, kernel_abelianization, nu_table, stage_parameters};

fn main() -> nuinv::Result<()> {
    let p3 = Prime::new(3)?;
    for tau in ["1234", "2134", "21435"] {
        let lk = linking_from_permutation(&tau.parse()?);
        let t = nu_table(&lk.presentation(), 3, p3)?;
        println!("A({tau}): nu_(3,d)(G/G_3) = {:?}", t.by_dimension());
    }

    let f2 = Presentation::free(2);
    for q in 3..=5 {
        for p in [2, 3] {
            let p = Prime::new(p)?;
            let t = nu_table(&f2, q, p)?;
            let (r, l) = stage_parameters(q, p.get());
            println!("F(2)/F(2)_{q}, p = {p} (r = {r}, l = {l}):\n{t}  closed form: {}", free_nilpotent_oracle(2, q, p));
        }
    }

    let gq = nilpotent_presentation(&Presentation::free(2), 4);
    let rep = Representation::new(p3, &[1, 1])?;
    println!("H_1 of the kernel of (1,1) on F(2)/F(2)_4: {}", kernel_abelianization(&gq, &rep)?);
    Ok(())
}
