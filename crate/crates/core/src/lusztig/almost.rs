//! Deligne-Lusztig characters R_w of Sz(q) and the almost characters R_ρ̃.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::weyl::WeylData;
use crate::chartab::{scalar_product, table_sz, ClassFunction, GenericTable};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::groups::Params;

pub(crate) fn sz_row(t: &GenericTable, name: &str) -> Result<ClassFunction> {
    t.row(name)
        .ok_or_else(|| Error::InvalidParameter(format!("missing row {name}")))
}

/// Σ c_V·V over V ∈ {1, St, W, W̄}.
pub(crate) fn combine(t: &GenericTable, coeffs: [CycNum; 4]) -> Result<ClassFunction> {
    let mut acc = sz_row(t, "1")?.mul_scalar(&coeffs[0])?;
    for (name, c) in ["St", "W", "Wbar"].iter().zip(&coeffs[1..]) {
        acc = acc.try_add(&sz_row(t, name)?.mul_scalar(c)?)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DlCharacter {
    /// F-class label of w.
    pub w: String,
    pub function: ClassFunction,
    pub degree: CycNum,
    pub norm: CycNum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DlCharacters {
    pub n: u32,
    pub characters: Vec<DlCharacter>,
    /// The closed form (q-1)(q-r+1), r = 2θ, for the degree of R_{w_a}, kept for
    /// comparison only.
    pub closed_form_wa_degree: i128,
    pub wa_degree_matches_closed_form: bool,
}

impl DlCharacters {
    pub fn get(&self, w: &str) -> Option<&ClassFunction> {
        self.characters.iter().find(|c| c.w == w).map(|c| &c.function)
    }
}

/// R_1 = 1 + St, R_{w_a} = 1 - W - W̄ - St, R_{w_a w_b w_a} = 1 + W + W̄ - St.
pub fn dl_characters(n: u32) -> Result<DlCharacters> {
    let p = Params::new(n)?;
    let t = table_sz(n)?;
    let one = CycNum::one;
    let neg = || -CycNum::one();
    let rows = [
        ("1", [one(), one(), CycNum::zero(), CycNum::zero()]),
        ("w_a", [one(), neg(), neg(), neg()]),
        ("w_a w_b w_a", [one(), neg(), one(), one()]),
    ];
    let ident = t.column("1").ok_or_else(|| Error::InvalidParameter("no identity column".into()))?;
    let mut characters = Vec::new();
    for (w, c) in rows {
        let function = combine(&t, c)?;
        characters.push(DlCharacter {
            w: w.into(),
            degree: function.values[ident].clone(),
            norm: scalar_product(&function, &function)?,
            function,
        });
    }
    let (q, theta) = (p.q as i128, p.theta as i128);
    let closed_form_wa_degree = (q - 1) * (q - 2 * theta + 1);
    let wa_degree_matches_closed_form = characters[1].degree
        == CycNum::from_rational(BigRational::from_integer(BigInt::from(closed_form_wa_degree)));
    Ok(DlCharacters { n, characters, closed_form_wa_degree, wa_degree_matches_closed_form })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlmostCharacter {
    pub rho: String,
    pub function: ClassFunction,
    pub expected: ClassFunction,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlmostCharacters {
    pub n: u32,
    pub rows: Vec<AlmostCharacter>,
    pub orthonormal: bool,
}

impl AlmostCharacters {
    pub fn all_pass(&self) -> bool {
        self.orthonormal && self.rows.iter().all(|r| r.pass)
    }

    pub fn get(&self, rho: &str) -> Option<&ClassFunction> {
        self.rows.iter().find(|r| r.rho == rho).map(|r| &r.function)
    }
}

/// R_ρ̃ = (1/|W|)·Σ_{w∈W} ρ̃(w·F)·R_w, checked against 1, St and √2/2·(W + W̄).
pub fn almost_characters(n: u32) -> Result<AlmostCharacters> {
    let weyl = WeylData::new()?;
    let dl = dl_characters(n)?;
    let t = table_sz(n)?;
    let inv_order = BigRational::new(1.into(), BigInt::from(weyl.order()));
    let half_sqrt2 = CycNum::sqrt2().scale(&BigRational::new(1.into(), 2.into()));
    let zero = CycNum::zero;
    let expected = [
        combine(&t, [CycNum::one(), zero(), zero(), zero()])?,
        combine(&t, [zero(), CycNum::one(), zero(), zero()])?,
        combine(&t, [zero(), zero(), half_sqrt2.clone(), half_sqrt2])?,
    ];
    let mut rows = Vec::new();
    for (i, (ch, expected)) in weyl.characters.iter().zip(expected).enumerate() {
        let mut acc = ClassFunction::zero(crate::chartab::TableId::Sz, n)?;
        for w in 0..weyl.order() {
            let cls = &weyl.f_classes[weyl.class_of[w]];
            let r = dl.get(&cls.label).expect("one R_w per F-class");
            acc = acc.try_add(&r.mul_scalar(&weyl.characters[i].on_coset[w])?)?;
        }
        let function = acc.scale(&inv_order);
        rows.push(AlmostCharacter {
            rho: ch.name.clone(),
            pass: function == expected,
            function,
            expected,
        });
    }
    let mut orthonormal = true;
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate() {
            let want = if i == j { CycNum::one() } else { CycNum::zero() };
            orthonormal &= scalar_product(&a.function, &b.function)? == want;
        }
    }
    Ok(AlmostCharacters { n, rows, orthonormal })
}
