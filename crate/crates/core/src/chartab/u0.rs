//! Induction of the linear characters λ(k,l) of U0 = ⟨x_a⟩⟨x_b⟩X_{a+b}X_{2a+b}
//! to B and of their extensions λ̃(k,k) from Ũ0 to B̃, in closed form and by
//! brute force over the enumerated B.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::func::{ClassFunction, TableId};
use crate::chevalley::{GroupElement, Root, UnipotentCoords};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::gf2::FieldElement;
use crate::groups::Params;
use crate::par;

/// Unipotent B-classes of the induction table, in order.
pub const BOREL_UNIPOTENT_LABELS: [&str; 10] =
    ["A1", "A2", "A31", "A32", "A41", "A42", "A51", "A52", "A61", "A62"];

/// Outer unipotent classes of B̃, in order.
pub const BOREL_OUTER_UNIPOTENT_LABELS: [&str; 4] =
    ["(1,σ)", "(x_a,σ)", "(x_{a+b},σ)", "(x_a x_{a+b},σ)"];

/// λ(k,l)(g) for g in U0, None if g is not in U0.
pub fn lambda_value(k: u8, l: u8, g: &GroupElement) -> Option<i64> {
    let c = UnipotentCoords::of(g).ok()?;
    let bit = |x: FieldElement| -> Option<u8> {
        if x.is_zero() {
            Some(0)
        } else if x.is_one() {
            Some(1)
        } else {
            None
        }
    };
    let (ea, eb) = (bit(c.t_a)?, bit(c.t_b)?);
    let sign = if (k * ea + l * eb).is_multiple_of(2) { 1 } else { -1 };
    Some(sign * (c.t_ab + c.t_2ab).lambda() as i64)
}

fn coords(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> GroupElement {
    UnipotentCoords::new(a, b, c, d).compose().without_word()
}

/// Representatives of the unipotent B-classes A1, ..., A62.
pub fn borel_unipotent_reps(m: u32) -> Vec<GroupElement> {
    let (o, i) = (FieldElement::zero(m), FieldElement::one(m));
    vec![
        coords(o, o, o, o),
        coords(o, o, o, i),
        coords(o, o, i, o),
        coords(o, o, i, i),
        coords(o, i, o, o),
        coords(o, i, o, i),
        coords(i, o, o, o),
        coords(i, o, i, o),
        coords(i, i, o, o),
        coords(i, i, i, o),
    ]
}

fn rat(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Closed-form values of Ind_{U0}^B λ(k,l) on A1, ..., A62: each value is
/// |C_B(g)|/|U0| times the sum of λ over the B-class of g met with U0.
pub fn induce_lambda_inner(k: u8, l: u8, n: u32) -> Result<Vec<BigRational>> {
    let p = Params::new(n)?;
    let m = p.m();
    let q = p.q as i128;
    let field: Vec<FieldElement> = FieldElement::all(m).collect();
    let lam = |x: FieldElement| x.lambda() as i128;
    let sa = if k == 0 { 1 } else { -1 };
    let sb = if l == 0 { 1 } else { -1 };
    let sum = |f: &dyn Fn(FieldElement, FieldElement) -> Option<i128>| -> i128 {
        let mut s = 0;
        for &u in &field {
            for &v in &field {
                if let Some(x) = f(u, v) {
                    s += x;
                }
            }
        }
        s
    };
    let nz = |x: FieldElement| !x.is_zero();
    let values = [
        (rat(q * q * (q - 1) * (q - 1), 4), 1),
        (rat(q * q * (q - 1), 4), sum(&|u, v| (u.is_zero() && nz(v)).then(|| lam(v)))),
        (rat(q * q * (q - 1), 4), sum(&|u, v| (nz(u) && v.is_zero()).then(|| lam(u)))),
        (rat(q * q, 4), sum(&|u, v| (nz(u) && nz(v)).then(|| lam(u + v)))),
        (rat(q * (q - 1), 4), sum(&|u, v| (v == u.square()).then(|| sb * lam(u + v)))),
        (rat(q, 4), sum(&|u, v| (v != u.square()).then(|| sb * lam(u + v)))),
        (rat(q * (q - 1), 4), sum(&|u, v| (u == v).then(|| sa * lam(u + v)))),
        (rat(q, 4), sum(&|u, v| (u != v).then(|| sa * lam(u + v)))),
        (rat(1, 2), sum(&|u, v| (lam(u + v) == 1).then(|| sa * sb))),
        (rat(1, 2), sum(&|u, v| (lam(u + v) == -1).then(|| -sa * sb))),
    ];
    Ok(values
        .into_iter()
        .map(|(c, s)| c * BigRational::from_integer(s.into()))
        .collect())
}

/// Closed-form outer values of Ind_{Ũ0}^{B̃} λ̃(k,k) on the classes of B̃.
/// The extension is normalized by λ̃(1,σ) = 1.
pub fn induce_lambda_outer(k: u8, n: u32) -> Result<ClassFunction> {
    let p = Params::new(n)?;
    let q = p.q as i128;
    let sa: i128 = if k == 0 { 1 } else { -1 };
    let field: Vec<FieldElement> = FieldElement::all(p.m()).collect();
    let lam = |x: FieldElement| x.lambda() as i128;
    let with_lambda = |s: i128| -> i128 {
        field.iter().filter(|&&u| lam(u) == s).map(|&u| sa * lam(u)).sum()
    };
    let xab: i128 = field.iter().filter(|u| !u.is_zero()).map(|&u| lam(u)).sum();
    let mut values = vec![
        CycNum::from_rational(rat(q * (q - 1), 2)),
        CycNum::from_int(with_lambda(1) as i64),
        CycNum::from_rational(rat(q * xab, 2)),
        CycNum::from_int(with_lambda(-1) as i64),
    ];
    values.resize(TableId::BorelOuter.classes(&p).len(), CycNum::zero());
    ClassFunction::new(TableId::BorelOuter, n, values)
}

/// The same values computed as (1/|U0|)·Σ_{b∈B} λ°(b·g·b^(-1)), and
/// (1/|U0|)·Σ_{b∈B} λ°(b·g·σ(b)^(-1)) for outer classes when k = l.
pub struct BruteInduction {
    pub inner: Vec<[BigRational; 4]>,
    pub outer: Vec<[BigRational; 2]>,
}

/// λ(k,l) in the order (0,0), (0,1), (1,0), (1,1).
pub const LAMBDA_ORDER: [(u8, u8); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

pub fn induce_lambda_brute(n: u32, budget: u64) -> Result<BruteInduction> {
    let p = Params::new(n)?;
    let q = p.q as u128;
    let projected = q.pow(4) * (q - 1) * (q - 1);
    if projected > budget as u128 {
        return Err(Error::ScaleExceeded {
            projected: projected as u64,
            budget,
        });
    }
    let m = p.m();
    let field: Vec<FieldElement> = FieldElement::all(m).collect();
    let mut unipotents = Vec::with_capacity(field.len().pow(4));
    for &a in &field {
        for &b in &field {
            for &c in &field {
                for &d in &field {
                    unipotents.push(coords(a, b, c, d));
                }
            }
        }
    }
    let mut torus = Vec::new();
    for z1 in FieldElement::all_nonzero(m) {
        for z2 in FieldElement::all_nonzero(m) {
            torus.push(GroupElement::h(z1, z2)?.without_word());
        }
    }
    let one = FieldElement::one(m);
    let xa = GroupElement::x(Root::A, one).without_word();
    let xab = GroupElement::x(Root::AB, one).without_word();
    let inner_reps = borel_unipotent_reps(m);
    let outer_reps = [GroupElement::identity(m).without_word(), xa.clone(), xab.clone(), xa.mul(&xab)];
    let u0_order = BigRational::from_integer(BigInt::from(4 * q * q));

    // per torus element: inner sums [rep][λ], outer sums [rep][λ(0,0), λ(1,1)]
    let partial = par::map(&torus, |h| {
        let mut inner = vec![[0i64; 4]; inner_reps.len()];
        let mut outer = vec![[0i64; 2]; outer_reps.len()];
        for u in &unipotents {
            let b = u.mul(h);
            let bi = b.inverse();
            let sbi = b.sigma(p.n).inverse();
            for (r, g) in inner_reps.iter().enumerate() {
                let y = b.mul(g).mul(&bi);
                for (t, &(k, l)) in LAMBDA_ORDER.iter().enumerate() {
                    if let Some(v) = lambda_value(k, l, &y) {
                        inner[r][t] += v;
                    }
                }
            }
            for (r, g) in outer_reps.iter().enumerate() {
                let y = b.mul(g).mul(&sbi);
                for (t, k) in [0u8, 1].into_iter().enumerate() {
                    if let Some(v) = lambda_value(k, k, &y) {
                        outer[r][t] += v;
                    }
                }
            }
        }
        (inner, outer)
    });
    let mut inner = vec![[0i64; 4]; inner_reps.len()];
    let mut outer = vec![[0i64; 2]; outer_reps.len()];
    for (pi, po) in partial {
        for (acc, x) in inner.iter_mut().zip(pi) {
            for t in 0..4 {
                acc[t] += x[t];
            }
        }
        for (acc, x) in outer.iter_mut().zip(po) {
            for t in 0..2 {
                acc[t] += x[t];
            }
        }
    }
    let scale = |s: i64| BigRational::from_integer(s.into()) / &u0_order;
    Ok(BruteInduction {
        inner: inner.into_iter().map(|r| r.map(scale)).collect(),
        outer: outer.into_iter().map(|r| r.map(scale)).collect(),
    })
}

/// Compares closed forms with brute force for all four λ(k,l) (inner) and
/// λ̃(0,0), λ̃(1,1) (outer). Returns the mismatches.
pub fn check_u0_induction(n: u32, budget: u64) -> Result<Vec<String>> {
    let brute = induce_lambda_brute(n, budget)?;
    let mut bad = Vec::new();
    for (t, &(k, l)) in LAMBDA_ORDER.iter().enumerate() {
        let closed = induce_lambda_inner(k, l, n)?;
        for (r, label) in BOREL_UNIPOTENT_LABELS.iter().enumerate() {
            if closed[r] != brute.inner[r][t] {
                bad.push(format!(
                    "λ({k},{l}) at {label}: closed {} brute {}",
                    closed[r], brute.inner[r][t]
                ));
            }
        }
    }
    for (t, k) in [0u8, 1].into_iter().enumerate() {
        let closed = induce_lambda_outer(k, n)?;
        for (r, label) in BOREL_OUTER_UNIPOTENT_LABELS.iter().enumerate() {
            let b = CycNum::from_rational(brute.outer[r][t].clone());
            if closed.values[r] != b {
                bad.push(format!(
                    "λ̃({k},{k}) at {label}: closed {} brute {}",
                    closed.values[r], b
                ));
            }
        }
    }
    Ok(bad)
}
