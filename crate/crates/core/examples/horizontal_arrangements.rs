//! Linking numbers of horizontal plane arrangements, from a permutation or from
//! defining equations, and their first resonance variety over `Z_101`.

use nuinv::arrangement::{linking_from_equations, linking_from_permutation, DefiningEquations, Permutation};
use nuinv::catalog::cubic_31425;
use nuinv::linalg::Prime;
use nuinv::resonance::{membership, random_points};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> nuinv::Result<()> {
    let tau: Permutation = "31425".parse()?;
    let lk = linking_from_permutation(&tau);
    println!("A({tau}) linking matrix:\n{lk}");

    // z + a w + b w̄ = 0 with pairwise transverse coefficients
    let eq = DefiningEquations::horizontal(&[((0, 0), (0, 0)), ((1, 0), (3, 1)), ((2, 5), (-1, 0)), ((-3, 1), (2, 2))]);
    println!("linking matrix from equations:\n{}", linking_from_equations(&eq)?);

    let p = Prime::new(101)?;
    let cubic = cubic_31425();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut members, mut agree) = (0, 0);
    let pts = random_points(5, p, 2000, &mut rng);
    for pt in &pts {
        let inside = membership(pt.coords(), 1, |x| lk.linearized_matrix(x, p));
        members += inside as usize;
        agree += (inside == cubic.vanishes_at(pt.coords(), p)) as usize;
    }
    println!("{} random points: {members} in R_1, cubic agrees on {agree}", pts.len());
    Ok(())
}
