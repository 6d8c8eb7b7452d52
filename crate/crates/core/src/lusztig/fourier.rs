//! Families of unipotent characters and their Fourier matrices.

use std::fmt::Write as _;

use num_rational::BigRational;
use serde::Serialize;

use super::almost::sz_row;
use super::roots::{descent, roots_of_unity, Roots};
use crate::chartab::{scalar_product, table_sz};
use crate::cyclotomic::CycNum;
use crate::error::Result;

pub type Matrix = Vec<Vec<CycNum>>;

fn half_sqrt2() -> CycNum {
    CycNum::sqrt2().scale(&BigRational::new(1.into(), 2.into()))
}

/// [[√2/2, √2/2], [√2/2, -√2/2]].
pub fn reference_m3() -> Matrix {
    let h = half_sqrt2();
    vec![vec![h.clone(), h.clone()], vec![h.clone(), -h]]
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let k = b.len();
    a.iter()
        .map(|r| (0..b[0].len()).map(|j| (0..k).map(|t| &r[t] * &b[t][j]).sum()).collect())
        .collect()
}

fn conj_transpose(a: &Matrix) -> Matrix {
    (0..a[0].len())
        .map(|j| a.iter().map(|r| r[j].conj()).collect())
        .collect()
}

fn identity(k: usize) -> Matrix {
    (0..k)
        .map(|i| (0..k).map(|j| CycNum::from_int((i == j) as i64)).collect())
        .collect()
}

/// Rows of M3 at a given n: the coefficients a_V in u·Sh χ̃ = ±Σ a_V·ω_V·V
/// for (χ̃, u) = (θ̃1, 1) and (θ̃5, i). The free sign makes a_W > 0.
pub fn derive_m3(n: u32) -> Result<Matrix> {
    let roots = roots_of_unity(n)?;
    let sz = table_sz(n)?;
    let mut rows = Vec::new();
    for (chi, u) in [("theta1", CycNum::one()), ("theta5", CycNum::i())] {
        let sh = descent(n, chi)?.mul_scalar(&u)?;
        let mut row = Vec::new();
        for v in ["W", "Wbar"] {
            let c = scalar_product(&sh, &sz_row(&sz, v)?)?;
            let w = roots.get(v).expect("listed");
            row.push(c.checked_mul(&w.inv()?)?);
        }
        if row[0] == -half_sqrt2() {
            row = row.into_iter().map(|x| -x).collect();
        }
        rows.push(row);
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Family {
    pub name: String,
    pub members: Vec<String>,
    pub fourier: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourierCheck {
    pub derived_at: Vec<u32>,
    pub matches_reference: bool,
    pub symmetric: bool,
    pub unitary: bool,
    pub involution: bool,
}

impl FourierCheck {
    pub fn all_pass(&self) -> bool {
        self.matches_reference && self.symmetric && self.unitary && self.involution
    }
}

/// M1 = M2 = [1] and M3 derived at n = 1 and n = 2, which must agree.
pub fn fourier_matrix() -> Result<(Vec<Family>, FourierCheck)> {
    let m3 = derive_m3(1)?;
    let again = derive_m3(2)?;
    let t = conj_transpose(&m3);
    let check = FourierCheck {
        derived_at: vec![1, 2],
        matches_reference: m3 == reference_m3() && again == m3,
        symmetric: (0..2).all(|i| (0..2).all(|j| m3[i][j] == m3[j][i])),
        unitary: mat_mul(&m3, &t) == identity(2),
        involution: mat_mul(&m3, &m3) == identity(2),
    };
    let families = vec![
        Family { name: "F1".into(), members: vec!["1".into()], fourier: identity(1) },
        Family { name: "F2".into(), members: vec!["St".into()], fourier: identity(1) },
        Family { name: "F3".into(), members: vec!["W".into(), "Wbar".into()], fourier: m3 },
    ];
    Ok((families, check))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyData {
    pub n: u32,
    pub families: Vec<Family>,
    pub roots: Vec<(String, CycNum)>,
}

pub fn family_data(n: u32) -> Result<FamilyData> {
    let Roots { omega, .. } = roots_of_unity(n)?;
    let (families, _) = fourier_matrix()?;
    let roots = super::roots::UNIPOTENT
        .iter()
        .map(|v| v.to_string())
        .zip(omega)
        .collect();
    Ok(FamilyData { n, families, roots })
}

fn latex_value(z: &CycNum) -> String {
    let h = half_sqrt2();
    let z0 = crate::shintani::zeta0();
    let named = [
        (CycNum::one(), "1"),
        (h.clone(), r"\frac{\sqrt2}{2}"),
        (-h, r"-\frac{\sqrt2}{2}"),
        (z0.clone(), r"\zeta_0"),
        (z0.conj(), r"\bar\zeta_0"),
    ];
    named
        .iter()
        .find(|(v, _)| v == z)
        .map(|(_, s)| s.to_string())
        .unwrap_or_else(|| z.to_string())
}

/// The computed ω table at n = 1 and n = 2, and M3.
pub fn latex_report() -> Result<String> {
    let mut s = String::new();
    s.push_str("\\begin{tabular}{c|cc}\n & $\\omega_W$ & $\\omega_{\\bar W}$ \\\\\\hline\n");
    for (label, n) in [("$n$ odd", 1), ("$n$ even", 2)] {
        let r = roots_of_unity(n)?;
        let _ = writeln!(
            s,
            "{label} & ${}$ & ${}$ \\\\",
            latex_value(&r.omega[2]),
            latex_value(&r.omega[3])
        );
    }
    s.push_str("\\end{tabular}\n\n$$M_3 = \\begin{pmatrix}\n");
    let m3 = derive_m3(1)?;
    for (i, r) in m3.iter().enumerate() {
        let cells: Vec<String> = r.iter().map(latex_value).collect();
        let end = if i + 1 < m3.len() { " \\\\" } else { "" };
        let _ = writeln!(s, "{}{end}", cells.join(" & "));
    }
    s.push_str("\\end{pmatrix}$$\n");
    Ok(s)
}
