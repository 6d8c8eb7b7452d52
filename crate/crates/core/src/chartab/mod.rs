//! Character tables of Sz(q), of B2(q) (the σ-relevant rows) and of the
//! extensions to B2(q)⋊⟨σ⟩, with scalar products and induction.

mod b2;
mod derive;
mod func;
mod induce;
mod ortho;
mod reciprocity;
mod roots;
mod table;
mod u0;

pub use b2::{
    b2_character_parameters, b2_value, pi0_exponents, restrict_to_sz, sigma_on_b2_class,
    sz_class_in_b2, table_b2_partial,
};
pub use derive::{derive_outer_table, induce_torus_character, torus_character, DerivationLog, DerivationStep, INNER_NORM_IND_B};
pub use func::{borel_outer_class_data, scalar_product, sum_all, ClassFunction, TableId};
pub use ortho::{column_orthogonality, row_orthogonality, OrthoReport};
pub use reciprocity::{check_frobenius_reciprocity, ReciprocityReport};
pub use induce::{induce, restrict, Route};
pub use roots::{alpha, beta, eps0_exponent, pair_sum, tau_sum, torus_sum};
pub use table::{table_outer, table_sz, GenericTable, Row};
pub use u0::{
    borel_unipotent_reps, check_u0_induction, induce_lambda_brute, induce_lambda_inner,
    induce_lambda_outer, lambda_value, BruteInduction, BOREL_OUTER_UNIPOTENT_LABELS,
    BOREL_UNIPOTENT_LABELS, LAMBDA_ORDER,
};

#[cfg(test)]
mod tests;
