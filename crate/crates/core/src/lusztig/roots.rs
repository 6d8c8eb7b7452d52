//! Frobenius roots ω_V of the unipotent characters and the Digne-Michel
//! identity Sh χ_ρ̃ = Σ_V ⟨R_ρ̃, V⟩·ω_V·V.

use serde::Serialize;

use super::almost::{almost_characters, combine, sz_row};
use crate::chartab::{scalar_product, table_outer, table_sz, ClassFunction};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::shintani::{norm_map, shintani_descent, zeta0};

pub const UNIPOTENT: [&str; 4] = ["1", "St", "W", "Wbar"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Roots {
    pub n: u32,
    /// √2·⟨Sh θ̃1, W⟩ and √2·⟨Sh θ̃1, W̄⟩.
    pub s: [CycNum; 2],
    /// ω_1, ω_St, ω_W, ω_W̄.
    pub omega: [CycNum; 4],
    /// The tabulated ω_W, ω_W̄ for this parity of n.
    pub expected: [CycNum; 2],
    pub matches_table: bool,
}

impl Roots {
    pub fn get(&self, v: &str) -> Option<&CycNum> {
        UNIPOTENT.iter().position(|&u| u == v).map(|i| &self.omega[i])
    }

    /// {ω_W, ω_W̄} = {ζ0, conj(ζ0)}.
    pub fn is_conjugate_pair(&self) -> bool {
        let (z, zb) = (zeta0(), zeta0().conj());
        let [w, wb] = [&self.omega[2], &self.omega[3]];
        (*w == z && *wb == zb) || (*w == zb && *wb == z)
    }
}

/// ω for s, choosing the sign that lands in {ζ0, conj(ζ0)}.
fn sign_rule(s: &CycNum) -> Result<CycNum> {
    let allowed = [zeta0(), zeta0().conj()];
    if allowed.contains(s) {
        Ok(s.clone())
    } else if allowed.contains(&-s) {
        Ok(-s)
    } else {
        Err(Error::SignRuleInconclusive(format!("s = {s}")))
    }
}

/// n odd: (ω_W, ω_W̄) = (ζ0, conj(ζ0)); n even: the reverse.
pub fn tabulated_roots(n: u32) -> [CycNum; 2] {
    let (z, zb) = (zeta0(), zeta0().conj());
    if n % 2 == 1 {
        [z, zb]
    } else {
        [zb, z]
    }
}

pub(crate) fn descent(n: u32, row: &str) -> Result<ClassFunction> {
    let nm = norm_map(n)?;
    let outer = table_outer(n)?;
    let f = outer
        .row(row)
        .ok_or_else(|| Error::InvalidParameter(format!("missing row {row}")))?;
    shintani_descent(&f, &nm)
}

pub fn roots_of_unity(n: u32) -> Result<Roots> {
    let sh = descent(n, "theta1")?;
    let sz = table_sz(n)?;
    let mut s = Vec::new();
    let mut omega = vec![CycNum::one(), CycNum::one()];
    for v in ["W", "Wbar"] {
        let x = scalar_product(&sh, &sz_row(&sz, v)?)?.checked_mul(&CycNum::sqrt2())?;
        omega.push(sign_rule(&x)?);
        s.push(x);
    }
    let expected = tabulated_roots(n);
    let matches_table = omega[2..] == expected[..];
    Ok(Roots {
        n,
        s: s.try_into().expect("two values"),
        omega: omega.try_into().expect("four values"),
        expected,
        matches_table,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DmEntry {
    pub rho: String,
    /// Outer character whose descent is compared.
    pub chi: String,
    /// Sign s with Sh(s·χ) equal to the right-hand side, if any.
    pub sign: Option<i8>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DmReport {
    pub n: u32,
    pub entries: Vec<DmEntry>,
}

impl DmReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

/// For χ_ρ̃1 = 1, χ_ρ̃2 = θ̃4 and χ_ρ̃3 = ±θ̃1, compares Sh χ_ρ̃ with
/// Σ_V ⟨R_ρ̃, V⟩·ω_V·V and records the sign that works for ρ̃3.
pub fn verify_digne_michel(n: u32) -> Result<DmReport> {
    let roots = roots_of_unity(n)?;
    let almost = almost_characters(n)?;
    let sz = table_sz(n)?;
    let mut entries = Vec::new();
    for (rho, chi, signs) in [
        ("rho1", "1", &[1i8][..]),
        ("rho2", "theta4", &[1][..]),
        ("rho3", "theta1", &[1, -1][..]),
    ] {
        let r = almost
            .get(rho)
            .ok_or_else(|| Error::InvalidParameter(format!("missing {rho}")))?;
        let mut coeffs = Vec::new();
        for (v, w) in UNIPOTENT.iter().zip(&roots.omega) {
            coeffs.push(scalar_product(r, &sz_row(&sz, v)?)?.checked_mul(w)?);
        }
        let rhs = combine(&sz, coeffs.try_into().expect("four"))?;
        let sh = descent(n, chi)?;
        let sign = signs
            .iter()
            .copied()
            .find(|&s| if s > 0 { sh == rhs } else { sh.neg() == rhs });
        entries.push(DmEntry {
            rho: rho.into(),
            chi: chi.into(),
            pass: sign.is_some(),
            sign,
        });
    }
    Ok(DmReport { n, entries })
}
