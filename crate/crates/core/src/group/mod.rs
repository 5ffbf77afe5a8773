//! Free groups: reduced words, Hall basic commutators, Fox calculus under
//! `Z_p` representations, nilpotent-quotient presentations and the Artin
//! action of braids.

mod braid;
mod fox;
mod hall;
pub(crate) mod presentation;
mod word;

pub use braid::{artin_images, braid_closure_presentation, parse_braid, strand_permutation, BraidLetter};
pub use fox::{epsilon, fox_eval, truncate_mod_f3, GroupRingElt, Representation};
pub use hall::{expand, hall_basis, witt_number, BasicCommutator, CommutatorShape};
pub use presentation::{nilpotent_presentation, Presentation};
pub use word::{parse_word, Letter, Word};
