use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::groups::{b2_class_data, outer_class_data, sz_class_data, ClassData, Params};

/// The class list a class function lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TableId {
    /// Classes of Sz(q); also the outer classes (g,σ) of Sz(q)×⟨σ⟩.
    Sz,
    /// Classes of B2(q) = Sp4(q).
    B2,
    /// Outer classes of B2(q)⋊⟨σ⟩.
    Outer,
    /// Outer classes of B(q)⋊⟨σ⟩.
    BorelOuter,
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TableId::Sz => "Sz(q)",
            TableId::B2 => "B2(q)",
            TableId::Outer => "outer classes of B2(q)⋊⟨σ⟩",
            TableId::BorelOuter => "outer classes of B(q)⋊⟨σ⟩",
        };
        f.write_str(s)
    }
}

/// Outer classes of B⋊⟨σ⟩: (1,σ), (x_a,σ), (x_{a+b},σ), (x_a x_{a+b},σ), (π0^l,σ) for l = 1..q-2.
pub fn borel_outer_class_data(p: &Params) -> Vec<ClassData> {
    let q = p.q as u128;
    let mut out = vec![
        ("(1,σ)".to_string(), 2 * q * q * (q - 1)),
        ("(x_a,σ)".to_string(), 4 * q),
        ("(x_{a+b},σ)".to_string(), 2 * q * q),
        ("(x_a x_{a+b},σ)".to_string(), 4 * q),
    ];
    for l in 1..p.q - 1 {
        out.push((format!("(pi0^{l},σ)"), 2 * (q - 1)));
    }
    out.into_iter()
        .map(|(label, c)| ClassData {
            rep: label.clone(),
            label,
            centralizer_order: c,
        })
        .collect()
}

impl TableId {
    pub fn classes(&self, p: &Params) -> Vec<ClassData> {
        match self {
            TableId::Sz => sz_class_data(p),
            TableId::B2 => b2_class_data(p),
            TableId::Outer => outer_class_data(p),
            TableId::BorelOuter => borel_outer_class_data(p),
        }
    }

    /// Weight |class|/|inner group| of each class in the scalar product. For
    /// outer tables the inner group has index 2, so the weight is 2/|C(c)|.
    pub fn weights(&self, p: &Params) -> Vec<BigRational> {
        let factor: i64 = match self {
            TableId::Sz | TableId::B2 => 1,
            TableId::Outer | TableId::BorelOuter => 2,
        };
        self.classes(p)
            .iter()
            .map(|c| BigRational::new(factor.into(), BigInt::from(c.centralizer_order)))
            .collect()
    }
}

/// A class function with exact cyclotomic values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassFunction {
    pub table: TableId,
    pub n: u32,
    pub values: Vec<CycNum>,
}

impl ClassFunction {
    pub fn new(table: TableId, n: u32, values: Vec<CycNum>) -> Result<Self> {
        let p = Params::new(n)?;
        let expected = table.classes(&p).len();
        if values.len() != expected {
            return Err(Error::InvalidParameter(format!(
                "{} values given for {expected} classes of {table}",
                values.len()
            )));
        }
        Ok(ClassFunction { table, n, values })
    }

    pub fn zero(table: TableId, n: u32) -> Result<Self> {
        let p = Params::new(n)?;
        let len = table.classes(&p).len();
        Ok(ClassFunction {
            table,
            n,
            values: vec![CycNum::zero(); len],
        })
    }

    pub fn params(&self) -> Params {
        Params::new(self.n).expect("checked at construction")
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.table != other.table || self.n != other.n {
            return Err(Error::TableMismatch(
                format!("{} at n={}", self.table, self.n),
                format!("{} at n={}", other.table, other.n),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { values, ..*self })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ClassFunction {
            values: self.values.iter().map(|v| -v).collect(),
            ..*self
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        ClassFunction {
            values: self.values.iter().map(|v| v.scale(r)).collect(),
            ..*self
        }
    }

    pub fn mul_scalar(&self, c: &CycNum) -> Result<Self> {
        let values = self
            .values
            .iter()
            .map(|v| v.checked_mul(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassFunction { values, ..*self })
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(k.into()))
    }

    /// Product with ε, the linear character with kernel B2(q): negates outer values.
    pub fn times_epsilon(&self) -> Self {
        match self.table {
            TableId::Outer | TableId::BorelOuter => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn conj(&self) -> Self {
        ClassFunction {
            values: self.values.iter().map(|v| v.conj()).collect(),
            ..*self
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// True iff every value is an algebraic integer.
    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_algebraic_integer())
    }

    pub fn labels(&self) -> Vec<String> {
        self.table
            .classes(&self.params())
            .into_iter()
            .map(|c| c.label)
            .collect()
    }
}

/// Σ_c w(c)·f(c)·conj(g(c)) with the class weights of the table.
pub fn scalar_product(f: &ClassFunction, g: &ClassFunction) -> Result<CycNum> {
    f.check_same(g)?;
    let weights = f.table.weights(&f.params());
    let mut acc = CycNum::zero();
    for ((a, b), w) in f.values.iter().zip(&g.values).zip(&weights) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        acc = acc.checked_add(&a.checked_mul(&b.conj())?.scale(w))?;
    }
    Ok(acc)
}

/// Sums of class functions with a common table.
pub fn sum_all<'a, I: IntoIterator<Item = &'a ClassFunction>>(
    table: TableId,
    n: u32,
    items: I,
) -> Result<ClassFunction> {
    let mut acc = ClassFunction::zero(table, n)?;
    for f in items {
        acc = acc.try_add(f)?;
    }
    Ok(acc)
}
