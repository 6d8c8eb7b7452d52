//! Exact computations for the Suzuki groups Sz(q) inside Sp4(q), q = 2^(2n+1).

pub mod error;
pub mod chartab;
pub mod chevalley;
pub mod cli;
pub mod cyclotomic;
pub mod gf2;
pub mod groups;
pub mod lusztig;
pub mod par;
pub mod shintani;

pub use error::{Error, Result};
