//! Generic character tables instantiated at a parameter n.

use serde::Serialize;

use super::func::{ClassFunction, TableId};
use super::roots::{torus_sum, eps0_exponent};
use crate::cyclotomic::CycNum;
use crate::error::Result;
use crate::groups::{ClassData, OuterClass, Params, SzClass};

/// A named row of a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub name: String,
    pub values: Vec<CycNum>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericTable {
    pub title: String,
    pub n: u32,
    pub q: u64,
    pub theta: u64,
    pub table: TableId,
    pub classes: Vec<ClassData>,
    pub rows: Vec<Row>,
    /// Caveats attached to the data, e.g. ambiguous source entries.
    pub notes: Vec<String>,
}

impl GenericTable {
    pub fn row(&self, name: &str) -> Option<ClassFunction> {
        self.rows.iter().find(|r| r.name == name).map(|r| ClassFunction {
            table: self.table,
            n: self.n,
            values: r.values.clone(),
        })
    }

    pub fn functions(&self) -> Vec<(String, ClassFunction)> {
        self.rows
            .iter()
            .map(|r| {
                (
                    r.name.clone(),
                    ClassFunction {
                        table: self.table,
                        n: self.n,
                        values: r.values.clone(),
                    },
                )
            })
            .collect()
    }

    pub fn column(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    pub fn value(&self, row: &str, class: &str) -> Option<&CycNum> {
        let c = self.column(class)?;
        self.rows.iter().find(|r| r.name == row).map(|r| &r.values[c])
    }
}

fn int(k: i128) -> CycNum {
    CycNum::from_int(k as i64)
}

/// Character table of Sz(q).
pub fn table_sz(n: u32) -> Result<GenericTable> {
    let p = Params::new(n)?;
    eps0_exponent(&p)?;
    let (q, th) = (p.q as i128, p.theta as i128);
    let classes = SzClass::all(&p);
    let mut rows = Vec::new();
    let i = CycNum::i();
    let ti = i.scale(&num_rational::BigRational::from_integer(th.into()));
    let mut push = |name: String, f: &dyn Fn(&SzClass) -> CycNum| {
        rows.push(Row {
            name,
            values: classes.iter().map(f).collect(),
        });
    };
    push("1".into(), &|_| int(1));
    push("St".into(), &|c| match c {
        SzClass::One => int(q * q),
        SzClass::Torus(0, _) => int(1),
        SzClass::Torus(..) => int(-1),
        _ => int(0),
    });
    for (name, sign) in [("W", 1), ("Wbar", -1)] {
        let ti = ti.clone();
        push(name.into(), &move |c| match c {
            SzClass::One => int(th * (q - 1)),
            SzClass::Sigma0 => int(-th),
            SzClass::Rho0 => if sign > 0 { ti.clone() } else { -&ti },
            SzClass::Rho0Inv => if sign > 0 { -&ti } else { ti.clone() },
            SzClass::Torus(0, _) => int(0),
            SzClass::Torus(1, _) => int(1),
            SzClass::Torus(..) => int(-1),
        });
    }
    for j in p.index_set(0) {
        push(format!("X_{j}"), &|c| match c {
            SzClass::One => int(q * q + 1),
            SzClass::Torus(0, l) => torus_sum(&p, 0, j, *l),
            SzClass::Torus(..) => int(0),
            _ => int(1),
        });
    }
    for (t, name, deg, s0) in [
        (1usize, "Y", (q - 2 * th + 1) * (q - 1), 2 * th - 1),
        (2, "Z", (q + 2 * th + 1) * (q - 1), -2 * th - 1),
    ] {
        for j in p.index_set(t) {
            push(format!("{name}_{j}"), &|c| match c {
                SzClass::One => int(deg),
                SzClass::Sigma0 => int(s0),
                SzClass::Rho0 | SzClass::Rho0Inv => int(-1),
                SzClass::Torus(u, l) if *u == t => -torus_sum(&p, t, j, *l),
                SzClass::Torus(..) => int(0),
            });
        }
    }
    Ok(GenericTable {
        title: "Character table of Sz(q)".into(),
        n,
        q: p.q,
        theta: p.theta,
        table: TableId::Sz,
        classes: classes.iter().map(|c| c.data(&p)).collect(),
        rows,
        notes: vec!["W is normalized by W(rho0) = θ·i with rho0 = x_{a+b} x_b x_a".into()],
    })
}

/// Values of the extensions to B2(q)⋊⟨σ⟩ on the outer classes.
pub fn table_outer(n: u32) -> Result<GenericTable> {
    let p = Params::new(n)?;
    eps0_exponent(&p)?;
    let (q, th) = (p.q as i128, p.theta as i128);
    let classes = OuterClass::all(&p);
    let mut rows = Vec::new();
    let mut push = |name: String, f: &dyn Fn(&OuterClass) -> CycNum| {
        rows.push(Row {
            name,
            values: classes.iter().map(f).collect(),
        });
    };
    push("1".into(), &|_| int(1));
    push("theta4".into(), &|c| match c {
        OuterClass::One => int(q * q),
        OuterClass::Torus(0, _) => int(1),
        OuterClass::Torus(..) => int(-1),
        _ => int(0),
    });
    for (name, xa) in [("theta1", th), ("theta5", -th)] {
        push(name.into(), &|c| match c {
            OuterClass::One => int(th * (q - 1)),
            OuterClass::Xa => int(xa),
            OuterClass::Xab => int(-th),
            OuterClass::XaXab => int(-xa),
            OuterClass::Torus(0, _) => int(0),
            OuterClass::Torus(1, _) => int(1),
            OuterClass::Torus(..) => int(-1),
        });
    }
    for i in p.index_set(0) {
        push(format!("chi_pi0({i})"), &|c| match c {
            OuterClass::One => int(q * q + 1),
            OuterClass::Torus(0, l) => torus_sum(&p, 0, i, *l),
            OuterClass::Torus(..) => int(0),
            _ => int(1),
        });
    }
    for (t, deg, xab) in [
        (1usize, (q - 1) * (q - 2 * th + 1), 2 * th - 1),
        (2, (q - 1) * (q + 2 * th + 1), -2 * th - 1),
    ] {
        for j in p.index_set(t) {
            push(format!("chi_pi{t}({j})"), &|c| match c {
                OuterClass::One => int(deg),
                OuterClass::Xa | OuterClass::XaXab => int(-1),
                OuterClass::Xab => int(xab),
                OuterClass::Torus(u, l) if *u == t => -torus_sum(&p, t, j, *l),
                OuterClass::Torus(..) => int(0),
            });
        }
    }
    Ok(GenericTable {
        title: "Outer values of the extensions to B2(q)⋊⟨σ⟩".into(),
        n,
        q: p.q,
        theta: p.theta,
        table: TableId::Outer,
        classes: classes.iter().map(|c| c.data(&p)).collect(),
        rows,
        notes: vec![],
    })
}
