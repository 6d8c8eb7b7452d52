//! Shintani correspondence between Sz(q) and the outer classes of
//! B2(q)⋊⟨σ⟩, and Shintani descent of outer class functions.

mod descent;
mod lang;
mod norm;

pub use descent::{
    expected_coefficients, shintani_descent, verify_thm41, zeta0, Thm41Check, Thm41Report,
};
pub use lang::{descend, lang_solve_unipotent, lift, verify_witness, LangWitness, SerializedElement};
pub use norm::{norm_map, sz_unipotent_reps, Image, NormEntry, NormMap};

#[cfg(test)]
mod tests;
