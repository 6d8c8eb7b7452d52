//! Weyl group data, Deligne-Lusztig and almost characters of Sz(q), Frobenius
//! roots of the unipotent characters and their Fourier matrices.

mod almost;
mod fourier;
mod roots;
mod weyl;
#[cfg(test)]
mod tests;

pub use almost::{almost_characters, dl_characters, AlmostCharacter, AlmostCharacters, DlCharacter, DlCharacters};
pub use fourier::{
    derive_m3, family_data, fourier_matrix, latex_report, reference_m3, Family, FamilyData,
    FourierCheck, Matrix,
};
pub use roots::{
    roots_of_unity, tabulated_roots, verify_digne_michel, DmEntry, DmReport, Roots, UNIPOTENT,
};
pub use weyl::{ExtendedCharacter, FClass, IntMat, WeylData, WeylElement};
