//! Words, Fox derivatives under a `Z_p` representation, Magnus coefficients,
//! Hall basic commutators and the Artin action of braids.

use nuinv::group::{
    artin_images, braid_closure_presentation, epsilon, expand, fox_eval, hall_basis, parse_braid, parse_word,
    witt_number, Representation,
};
use nuinv::linalg::Prime;

fn main() -> nuinv::Result<()> {
    let w = parse_word("[x1,x2]^2 x3 [x2,x3] x3^-1")?;
    println!("w = {w}");
    let rep = Representation::new(Prime::new(5)?, &[1, 2, 0])?;
    for i in 0..3 {
        println!("  d w / d x{} at lambda = (1,2,0), p = 5: {:?}", i + 1, fox_eval(&w, i, &rep).coeffs());
    }
    println!("  epsilon_(1,2)(w) = {}, epsilon_(2,3)(w) = {}", epsilon(&w, &[0, 1]), epsilon(&w, &[1, 2]));

    for q in 1..=4 {
        let basis = hall_basis(2, q);
        let shown: Vec<String> = basis.iter().map(|c| c.to_string()).collect();
        println!("F_{q}/F_{} of F(2): rank {} = {}: {}", q + 1, basis.len(), witt_number(2, q), shown.join(" "));
    }
    if let Some(c) = hall_basis(2, 3).first() {
        println!("{c} expands to {}", expand(c));
    }

    let braid = parse_braid("s1^2 s2 s1^2 s2^-1")?;
    for (i, img) in artin_images(&braid, 3)?.iter().enumerate() {
        println!("x{} -> {img}", i + 1);
    }
    println!("closure presentation:\n{}", braid_closure_presentation(&braid, 3)?);
    Ok(())
}
