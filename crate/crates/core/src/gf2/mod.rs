//! Arithmetic in the binary fields GF(2^m).
//!
//! Elements are bit vectors in the polynomial basis modulo a fixed modulus
//! per degree (see [`modulus`]). Artin-Schreier equations are solved by
//! Gaussian elimination over F2, which keeps the cost polynomial in m.

mod artin_schreier;
mod field;
mod tower;

pub use artin_schreier::{artin_schreier_solve, fixed_field_basis};
pub use field::{is_irreducible, modulus, FieldElement, MAX_DEGREE};
pub use tower::{FieldTower, BASE_DEGREES};
