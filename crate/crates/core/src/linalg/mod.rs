//! Exact linear algebra over `Z` and `Z_p`, projective point enumeration and
//! classification of finitely generated abelian groups.

mod abelian;
mod integer;
mod modp;
mod prime;
mod projective;
mod smith;

pub use abelian::{classify_relation_matrix, torsion_p_dimension, AbelianGroupClass};
pub use integer::IntegerMatrix;
pub use modp::{rank_mod_p, PrimeFieldMatrix};
pub use prime::{is_prime, Prime};
pub use projective::{enumerate_projective, ProjectivePoint, ProjectiveSpace};
pub use smith::{smith_normal_form, smith_normal_form_of_rows, SmithForm};
