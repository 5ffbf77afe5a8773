//! Smith normal form, ranks over prime fields and projective point enumeration.

use nuinv::linalg::{
    classify_relation_matrix, enumerate_projective, rank_mod_p, smith_normal_form, IntegerMatrix, Prime,
};

fn main() -> nuinv::Result<()> {
    let m = IntegerMatrix::from_rows(3, &[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("matrix:\n{m}");
    println!("Smith diagonal: {:?}", snf.diagonal.iter().map(|d| d.to_string()).collect::<Vec<_>>());
    println!("cokernel: {}", classify_relation_matrix(&m));

    for p in [2, 3, 5, 7] {
        println!("rank mod {p}: {}", rank_mod_p(&m, p)?);
    }

    let p = Prime::new(3)?;
    let pts: Vec<String> = enumerate_projective(3, p).map(|pt| pt.to_string()).collect();
    println!("P(Z_3^3) has {} points ({} expected):", pts.len(), p.projective_count(3));
    println!("  {}", pts.join(" "));
    Ok(())
}
