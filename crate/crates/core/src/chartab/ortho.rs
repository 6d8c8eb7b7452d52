//! Row and column orthogonality of a table, checked exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::func::{scalar_product, TableId};
use super::table::GenericTable;
use crate::cyclotomic::CycNum;
use crate::error::Result;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OrthoReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl OrthoReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: OrthoReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// ⟨χ, ψ⟩ = δ_χψ over all ordered pairs of rows.
pub fn row_orthogonality(t: &GenericTable) -> Result<OrthoReport> {
    let fs = t.functions();
    let mut r = OrthoReport::default();
    for (i, (a, f)) in fs.iter().enumerate() {
        for (j, (b, g)) in fs.iter().enumerate() {
            let s = scalar_product(f, g)?;
            r.checked += 1;
            let want = if i == j { CycNum::one() } else { CycNum::zero() };
            if s != want {
                r.failures.push(format!("<{a},{b}> = {s}"));
            }
        }
    }
    Ok(r)
}

/// k·Σ_χ χ(c)·conj χ(c') = δ_cc'·|C(c)|, with k = 2 on outer classes.
pub fn column_orthogonality(t: &GenericTable) -> Result<OrthoReport> {
    let k = match t.table {
        TableId::Outer | TableId::BorelOuter => 2,
        TableId::Sz | TableId::B2 => 1,
    };
    let mut r = OrthoReport::default();
    for (c, cc) in t.classes.iter().enumerate() {
        for (d, cd) in t.classes.iter().enumerate() {
            let mut s = CycNum::zero();
            for row in &t.rows {
                s = s.checked_add(&row.values[c].checked_mul(&row.values[d].conj())?)?;
            }
            let s = s.scale(&BigRational::from_integer(k.into()));
            let want = if c == d {
                CycNum::from_rational(BigRational::from_integer(BigInt::from(cc.centralizer_order)))
            } else {
                CycNum::zero()
            };
            r.checked += 1;
            if s != want {
                r.failures.push(format!("columns {}, {}: {s}", cc.label, cd.label));
            }
        }
    }
    Ok(r)
}
