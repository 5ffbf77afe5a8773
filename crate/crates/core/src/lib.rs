//! Resonance varieties over prime fields, index-`p` subgroup counts of nilpotent
//! quotients, and exterior cokernel invariants for commutator-relators groups.
//!
//! The groups of interest are fundamental groups of complements of complex line
//! arrangements and of arrangements of transverse real planes in `R^4`. From a
//! combinatorial description (intersection lattice, linking matrix, permutation
//! of a horizontal arrangement) or an explicit presentation, the crate computes
//!
//! * the stratification of `P(Z_p^n)` by the rank of the linearized Alexander
//!   matrix ([`resonance::stratify`]);
//! * the distribution `nu_{p,d}(G/G_q)` of index-`p` normal subgroups of a
//!   nilpotent quotient by the `p`-torsion of their abelianization, via twisted
//!   Alexander matrices and integer Smith normal form ([`nilquot::nu_table`]);
//! * the cokernel invariants `Z_{i,j}` of the classifying map of `G/G_3`,
//!   including the Ziegler invariant of a 2-arrangement ([`ziegler`]).

pub mod arrangement;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod group;
pub mod harness;
pub mod linalg;
pub mod nilquot;
pub mod parallel;
pub mod resonance;
pub mod ziegler;

pub use error::{Error, Result};
