//! Cokernel invariants `Z_(i,j)` of the classifying map, and the Ziegler
//! invariant `Z_(0,2)` of horizontal arrangements.

use nuinv::arrangement::{chi_transpose_matrix, linking_from_permutation};
use nuinv::ziegler::{z_invariant, ziegler_invariant};

fn main() -> nuinv::Result<()> {
    for tau in ["1234", "2134", "12345", "21435", "31425", "213456"] {
        let lk = linking_from_permutation(&tau.parse()?);
        let chi = chi_transpose_matrix(&lk);
        let n = lk.n();
        println!(
            "A({tau}): Z_(0,1) = {}, Z_(1,1) = {}, Z_(0,2) = {}",
            z_invariant(0, 1, &chi, n)?,
            z_invariant(1, 1, &chi, n)?,
            ziegler_invariant(&lk)?
        );
    }
    Ok(())
}
