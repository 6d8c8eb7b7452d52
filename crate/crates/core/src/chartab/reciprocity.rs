//! Frobenius reciprocity for induction from B̃ to G̃.

use serde::Serialize;

use super::derive::torus_character;
use super::func::{scalar_product, ClassFunction};
use super::induce::{induce, restrict, Route};
use super::table::table_outer;
use super::u0::induce_lambda_outer;
use crate::error::Result;
use crate::groups::Params;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReciprocityReport {
    pub n: u32,
    pub checked: usize,
    /// Outer rows that occur in some Ind μ̃_i.
    pub principal_series: Vec<String>,
    pub failures: Vec<String>,
}

/// ⟨Ind f, χ⟩_G̃ = ⟨f, Res χ⟩_B̃ for f among the torus characters μ̃_i and
/// the induced λ̃(k,k), and χ over every row of the outer table.
pub fn check_frobenius_reciprocity(n: u32) -> Result<ReciprocityReport> {
    let p = Params::new(n)?;
    let outer = table_outer(n)?;
    let rows = outer.functions();
    let restricted: Vec<(String, ClassFunction)> = rows
        .iter()
        .map(|(name, chi)| Ok((name.clone(), restrict(chi, Route::BTildeToGTilde)?)))
        .collect::<Result<_>>()?;
    let mut sources = Vec::new();
    for i in 0..p.q - 1 {
        sources.push((format!("mu{i}"), torus_character(n, i)?, true));
    }
    for k in [0, 1] {
        sources.push((format!("Ind lambda({k},{k})"), induce_lambda_outer(k, n)?, false));
    }
    let mut report = ReciprocityReport {
        n,
        checked: 0,
        principal_series: Vec::new(),
        failures: Vec::new(),
    };
    for (label, f, is_torus) in &sources {
        let ind = induce(f, Route::BTildeToGTilde)?;
        for ((name, chi), (_, res)) in rows.iter().zip(&restricted) {
            let left = scalar_product(&ind, chi)?;
            let right = scalar_product(f, res)?;
            report.checked += 1;
            if left != right {
                report.failures.push(format!("{label} vs {name}: {left} != {right}"));
            }
            if *is_torus && !left.is_zero() && !report.principal_series.contains(name) {
                report.principal_series.push(name.clone());
            }
        }
    }
    Ok(report)
}
