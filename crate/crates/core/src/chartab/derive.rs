//! Derivation of the outer values of the extensions to B2(q)⋊⟨σ⟩ from
//! characters induced from Sz(q)×⟨σ⟩, B̃ and Ũ0, compared against the
//! tabulated rows.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::func::{scalar_product, ClassFunction, TableId};
use super::induce::{induce, Route};
use super::table::{table_outer, table_sz, GenericTable, Row};
use super::u0::induce_lambda_outer;
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::groups::{OuterClass, Params};

/// Inner norm of Ind_B^G 1 for G = B2(q): |W| = 8 by Mackey.
pub const INNER_NORM_IND_B: i64 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivationStep {
    pub name: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct DerivationLog {
    pub n: u32,
    pub steps: Vec<DerivationStep>,
}

impl DerivationLog {
    fn push(&mut self, name: &str, detail: impl Into<String>) {
        self.steps.push(DerivationStep {
            name: name.into(),
            detail: detail.into(),
        });
    }

    pub fn find(&self, name: &str) -> Option<&DerivationStep> {
        self.steps.iter().find(|s| s.name == name)
    }
}

fn frac(a: i128, b: i128) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn int(k: i128) -> CycNum {
    CycNum::from_int(k as i64)
}

fn constant(table: TableId, n: u32, v: CycNum) -> Result<ClassFunction> {
    let p = Params::new(n)?;
    let k = table.classes(&p).len();
    ClassFunction::new(table, n, vec![v; k])
}

fn add_all(start: ClassFunction, items: &[ClassFunction]) -> Result<ClassFunction> {
    items.iter().try_fold(start, |acc, f| acc.try_add(f))
}

fn outer_index(p: &Params, c: OuterClass) -> usize {
    OuterClass::all(p)
        .iter()
        .position(|x| *x == c)
        .expect("listed")
}

/// Flips the sign so that the value on (1,σ) is positive.
fn normalize(f: ClassFunction) -> ClassFunction {
    let lead = f.values[0].as_rational();
    match lead {
        Some(r) if r < BigRational::from_integer(0.into()) => f.neg(),
        _ => f,
    }
}

fn show(f: &ClassFunction) -> String {
    f.values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Chooses between the two candidates c·(S + R) and c·(S - R) by integrality.
fn sign_rule(
    log: &mut DerivationLog,
    tag: &str,
    f1: ClassFunction,
    f2: ClassFunction,
) -> Result<(ClassFunction, bool)> {
    let (ok1, ok2) = (f1.is_integral(), f2.is_integral());
    let non_integral = |f: &ClassFunction| {
        f.labels()
            .into_iter()
            .zip(&f.values)
            .find(|(_, v)| !v.is_algebraic_integer())
            .map(|(l, v)| format!("{v} at {l}"))
            .unwrap_or_default()
    };
    match (ok1, ok2) {
        (true, false) => {
            log.push(&format!("{tag}: sign rule"), format!("f2 rejected: {}", non_integral(&f2)));
            Ok((f1, true))
        }
        (false, true) => {
            log.push(&format!("{tag}: sign rule"), format!("f1 rejected: {}", non_integral(&f1)));
            Ok((f2, false))
        }
        (true, true) if f1 == f2.neg() || f1 == f2 => {
            log.push(
                &format!("{tag}: sign rule"),
                "both candidates integral and differ by ε; taking f1",
            );
            Ok((f1, true))
        }
        (true, true) => Err(Error::SignRuleInconclusive(format!(
            "{tag}: both f1 and f2 are integral"
        ))),
        (false, false) => Err(Error::SignRuleInconclusive(format!(
            "{tag}: neither f1 nor f2 is integral"
        ))),
    }
}

/// μ̃_i on the outer classes of B̃: trivial on Ũ and ε0^(il) on (π0^l,σ).
pub fn torus_character(n: u32, i: u64) -> Result<ClassFunction> {
    let p = Params::new(n)?;
    let q = p.q;
    let mut values = vec![CycNum::one(); 4];
    for l in 1..q - 1 {
        let e = super::roots::eps0_exponent(&p)? * (i as i128) * (l as i128);
        let e = e.rem_euclid(q as i128 - 1) as i64;
        values.push(CycNum::root(q - 1, e)?);
    }
    ClassFunction::new(TableId::BorelOuter, n, values)
}

/// Outer values of Ind_{B̃}^{G̃} μ̃_i.
pub fn induce_torus_character(n: u32, i: u64) -> Result<ClassFunction> {
    induce(&torus_character(n, i)?, Route::BTildeToGTilde)
}

/// The pieces from which the table is assembled.
struct Induced {
    one_sz: ClassFunction,
    w: ClassFunction,
    y: Vec<ClassFunction>,
    z: Vec<ClassFunction>,
}

fn induced_from_sz(sz: &GenericTable) -> Result<Induced> {
    let ind = |name: &str| -> Result<ClassFunction> {
        induce(&sz.row(name).expect("Sz row"), Route::SzTildeToGTilde)
    };
    let p = Params::new(sz.n)?;
    Ok(Induced {
        one_sz: ind("1")?,
        w: ind("W")?,
        y: p.index_set(1).iter().map(|j| ind(&format!("Y_{j}"))).collect::<Result<_>>()?,
        z: p.index_set(2).iter().map(|k| ind(&format!("Z_{k}"))).collect::<Result<_>>()?,
    })
}

/// Derives the outer table and compares it with `table_outer(n)`.
pub fn derive_outer_table(n: u32) -> Result<(GenericTable, DerivationLog)> {
    let p = Params::new(n)?;
    let (q, th) = (p.q as i128, p.theta as i128);
    let mut log = DerivationLog { n, steps: vec![] };
    let sz = table_sz(n)?;
    let one = constant(TableId::Outer, n, CycNum::one())?;

    // θ̃4 from Ind_{B̃}^{G̃} 1
    let ind_b = induce_torus_character(n, 0)?;
    let outer_norm = scalar_product(&ind_b, &ind_b)?;
    let full = (CycNum::from_int(INNER_NORM_IND_B) + outer_norm.clone()).scale(&frac(1, 2));
    log.push(
        "Ind_B~^G~ 1",
        format!("values [{}]; outer norm {outer_norm}, full norm {full}", show(&ind_b)),
    );
    let theta4 = normalize(ind_b.try_sub(&one)?);
    if scalar_product(&theta4, &theta4)? != CycNum::one() {
        return Err(Error::DerivationMismatch {
            row: "theta4".into(),
            class: "norm".into(),
            derived: scalar_product(&theta4, &theta4)?.to_string(),
            expected: "1".into(),
        });
    }

    // χ̃π0(i)
    let chi0: Vec<ClassFunction> = p
        .index_set(0)
        .iter()
        .map(|&i| induce_torus_character(n, i).map(normalize))
        .collect::<Result<_>>()?;
    for (f, i) in chi0.iter().zip(p.index_set(0)) {
        let norm = scalar_product(f, f)?;
        if !norm.is_one() {
            return Err(Error::DerivationMismatch {
                row: format!("chi_pi0({i})"),
                class: "norm".into(),
                derived: norm.to_string(),
                expected: "1".into(),
            });
        }
    }
    log.push("chi_pi0", format!("{} rows induced from B~, each of norm 1", chi0.len()));

    let ind = induced_from_sz(&sz)?;
    let mut x0 = ind.one_sz.try_sub(&one)?.try_sub(&theta4)?;
    for f in &chi0 {
        x0 = x0.try_sub(f)?;
    }
    let w0 = ind
        .w
        .neg()
        .try_sub(&ind.one_sz.try_sub(&one)?.scale_int(th as i64))?;
    log.push("X0", show(&x0));
    log.push("W0", show(&w0));

    // χ̃π1 and χ̃π2
    let mut solve = |tag: &str, parts: &[ClassFunction], denom: i128, r: &ClassFunction| {
        let diffs: Vec<ClassFunction> = parts
            .iter()
            .map(|f| f.try_sub(&parts[0]))
            .collect::<Result<_>>()?;
        let s = add_all(ClassFunction::zero(TableId::Outer, n)?, &diffs[1..])?;
        let c = frac(4, denom);
        let f1 = s.try_add(&r.scale(&frac(1, 2)))?.scale(&c);
        let f2 = s.try_sub(&r.scale(&frac(1, 2)))?.scale(&c);
        let (chosen, pick_f1) = sign_rule(&mut log, tag, f1, f2)?;
        // χ(1) = ε·f, χ(j) = χ(1) ∓ φ_j
        let base = chosen.times_epsilon();
        let rows: Vec<ClassFunction> = diffs
            .iter()
            .map(|d| if pick_f1 { base.try_sub(d) } else { base.try_add(d) })
            .collect::<Result<_>>()?;
        Ok::<_, Error>(rows.into_iter().map(normalize).collect::<Vec<_>>())
    };
    let chi1 = solve("chi_pi1", &ind.y, q + 2 * th, &x0.try_sub(&w0)?)?;
    let chi2 = solve("chi_pi2", &ind.z, q - 2 * th, &x0.try_add(&w0)?)?;

    // θ̃5 on B̃-classes from Ind_{Ũ0}^{B̃} λ̃(1,1)
    let chi_u0 = induce_lambda_outer(1, n)?;
    let norm = scalar_product(&chi_u0, &chi_u0)?;
    let d = int(th);
    if norm != d.clone() * d.clone() {
        return Err(Error::DerivationMismatch {
            row: "Ind_U0~^B~ λ(1,1)".into(),
            class: "norm".into(),
            derived: norm.to_string(),
            expected: (th * th).to_string(),
        });
    }
    let (nn, ne) = ((q / 2 + th) / 2, (q / 2 - th) / 2);
    log.push(
        "Ind_U0~^B~ λ(1,1)",
        format!("outer norm {norm} = (n - nε)², n + nε = q/2; (n, nε) = ({nn}, {ne})"),
    );
    let xi = chi_u0.scale(&frac(1, th));
    log.push("xi", show(&xi));

    // θ̃1 + θ̃5 as the part of Ỹ_1 orthogonal to the rows found so far
    let mut known: Vec<ClassFunction> = vec![one.clone(), theta4.clone()];
    known.extend(chi0.iter().cloned());
    known.extend(chi1.iter().cloned());
    known.extend(chi2.iter().cloned());
    let s = theta_sum(&mut log, &p, &ind, &known)?;

    // assemble θ̃1, θ̃5
    let classes = OuterClass::all(&p);
    let mut t1 = Vec::with_capacity(classes.len());
    let mut t5 = Vec::with_capacity(classes.len());
    for (idx, c) in classes.iter().enumerate() {
        let b = match c {
            OuterClass::One => Some(0),
            OuterClass::Xa => Some(1),
            OuterClass::Xab => Some(2),
            OuterClass::XaXab => Some(3),
            OuterClass::Torus(0, _) => Some(4),
            _ => None,
        };
        match b {
            Some(bi) => {
                t5.push(xi.values[bi].clone());
                t1.push(s.values[idx].clone() - xi.values[bi].clone());
            }
            None => {
                let (a, b) = split_equal(&p, c, &s.values[idx], &known, idx)?;
                t1.push(a);
                t5.push(b);
            }
        }
    }
    log.push("alpha, beta", "α = β = S/2 on the classes of π1 and π2");
    let theta1 = ClassFunction::new(TableId::Outer, n, t1)?;
    let theta5 = ClassFunction::new(TableId::Outer, n, t5)?;

    let mut rows = vec![
        Row { name: "1".into(), values: one.values },
        Row { name: "theta4".into(), values: theta4.values },
        Row { name: "theta1".into(), values: theta1.values },
        Row { name: "theta5".into(), values: theta5.values },
    ];
    for (t, fs) in [(0, &chi0), (1, &chi1), (2, &chi2)] {
        for (j, f) in p.index_set(t).iter().zip(fs.iter()) {
            rows.push(Row {
                name: format!("chi_pi{t}({j})"),
                values: f.values.clone(),
            });
        }
    }
    let expected = table_outer(n)?;
    let derived = GenericTable {
        title: "Outer values derived from induced characters".into(),
        rows,
        notes: vec![],
        ..expected.clone()
    };
    compare(&derived, &expected)?;
    log.push("compare", "derived table equals the tabulated outer values");
    Ok((derived, log))
}

/// S = θ̃1 + θ̃5, as the remainder of Ỹ_1 after projecting out `known`,
/// divided by the common multiplicity a of θ̃1 and θ̃5.
fn theta_sum(
    log: &mut DerivationLog,
    p: &Params,
    ind: &Induced,
    known: &[ClassFunction],
) -> Result<ClassFunction> {
    let mut r = ind.y[0].clone();
    for k in known {
        let m = scalar_product(&ind.y[0], k)?;
        let m = m.as_rational().ok_or_else(|| Error::DerivationMismatch {
            row: "Y~_1".into(),
            class: "multiplicity".into(),
            derived: m.to_string(),
            expected: "a rational".into(),
        })?;
        r = r.try_sub(&k.scale(&m))?;
    }
    let xa = &r.values[outer_index(p, OuterClass::Xa)];
    let pi1 = &r.values[outer_index(p, OuterClass::Torus(1, p.index_set(1)[0]))];
    let norm = scalar_product(&r, &r)?;
    log.push("R = Y~_1 - projections", format!("[{}]; norm {norm}", show(&r)));
    // R = a θ̃1 + b θ̃5 with a - b = R(x_a,σ)/θ and a + b = R(π1,σ)
    if !xa.is_zero() || pi1.is_zero() {
        return Err(Error::DerivationMismatch {
            row: "theta1+theta5".into(),
            class: "(x_a,σ)".into(),
            derived: format!("R(x_a,σ) = {xa}, R(π1,σ) = {pi1}"),
            expected: "a = b ≠ 0".into(),
        });
    }
    let a = pi1.as_rational().expect("rational").clone() / BigRational::from_integer(2.into());
    if norm != CycNum::from_rational(a.clone() * a.clone() * BigRational::from_integer(2.into())) {
        return Err(Error::DerivationMismatch {
            row: "theta1+theta5".into(),
            class: "norm".into(),
            derived: norm.to_string(),
            expected: format!("2a² with a = {a}"),
        });
    }
    let s = r.scale(&(BigRational::from_integer(1.into()) / a.clone()));
    log.push("theta1+theta5", format!("a = b = {a}; S = [{}]", show(&s)));
    Ok(s)
}

/// Splits S(c) = α + β on a class of π1 or π2 using the column norm:
/// α² + β² = |C_G̃(c)|/2 - Σ_known |χ(c)|².
fn split_equal(
    p: &Params,
    c: &OuterClass,
    s: &CycNum,
    known: &[ClassFunction],
    idx: usize,
) -> Result<(CycNum, CycNum)> {
    let half = int(c.centralizer_order(p) as i128 / 2);
    let t = known
        .iter()
        .fold(half, |acc, f| acc - f.values[idx].clone() * f.values[idx].conj());
    let disc = t.scale(&frac(2, 1)) - s.clone() * s.clone();
    if !disc.is_zero() {
        return Err(Error::SignRuleInconclusive(format!(
            "α, β at {}: 2(α²+β²) - (α+β)² = {disc}",
            c.label()
        )));
    }
    let v = s.scale(&frac(1, 2));
    Ok((v.clone(), v))
}

fn compare(derived: &GenericTable, expected: &GenericTable) -> Result<()> {
    for (dr, er) in derived.rows.iter().zip(&expected.rows) {
        for ((dv, ev), c) in dr.values.iter().zip(&er.values).zip(&expected.classes) {
            if dv != ev || dr.name != er.name {
                return Err(Error::DerivationMismatch {
                    row: er.name.clone(),
                    class: c.label.clone(),
                    derived: dv.to_string(),
                    expected: ev.to_string(),
                });
            }
        }
    }
    Ok(())
}
