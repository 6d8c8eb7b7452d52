//! The σ-relevant part of the character table of B2(q), the fusion of Sz(q)
//! classes into B2(q) classes, and the action of σ on B2(q) classes.

use super::func::{ClassFunction, TableId};
use super::roots::{alpha, beta, eps0_exponent, tau_sum};
use super::table::{GenericTable, Row};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::groups::{orbit_min, pair_classes, pair_orbit_min, B2Class, Params, SzClass};

fn int(k: i128) -> CycNum {
    CycNum::from_int(k as i64)
}

fn ri(k: i128) -> num_rational::BigRational {
    num_rational::BigRational::from_integer(k.into())
}

type Pairs = Vec<(u64, u64)>;

/// Parameters (k, l) of χ1, parameters of χ4, and parameters k of χ5.
pub fn b2_character_parameters(p: &Params) -> (Pairs, Pairs, Vec<u64>) {
    let q2p = p.q * p.q + 1;
    (
        pair_classes(p.q - 1),
        pair_classes(p.q + 1),
        (1..q2p).filter(|&i| orbit_min(i, q2p, &[1, p.q]) == i).collect(),
    )
}

fn theta_row(p: &Params, which: u8, c: &B2Class) -> CycNum {
    let q = p.q as i128;
    use B2Class::*;
    let v: i128 = match (which, c) {
        (1, A1) => q * (q + 1) * (q + 1) / 2,
        (1, A2 | A31) => q * (q + 1) / 2,
        (1, A32 | A41) => q / 2,
        (1, A42) => -q / 2,
        (1, B1(..)) => 2,
        (1, B5(_)) => -1,
        (1, C(1 | 2, _)) => q + 1,
        (1, D(1 | 2, _)) => 1,
        (1, _) => 0,
        (4, A1) => q.pow(4),
        (4, B1(..) | B4(..) | B5(_)) => 1,
        (4, B2(_) | B3(..)) => -1,
        (4, C(1 | 2, _)) => q,
        (4, C(..)) => -q,
        (4, _) => 0,
        (5, A1) => q * (q - 1) * (q - 1) / 2,
        (5, A2 | A31) => -q * (q - 1) / 2,
        (5, A32 | A41) => q / 2,
        (5, A42) => -q / 2,
        (5, B4(..)) => -2,
        (5, B5(_)) => 1,
        (5, C(3 | 4, _)) => q - 1,
        (5, D(3 | 4, _)) => -1,
        (5, _) => 0,
        _ => unreachable!("θ1, θ4, θ5"),
    };
    int(v)
}

fn chi1(p: &Params, k: u64, l: u64, c: &B2Class) -> CycNum {
    let q = p.q as i128;
    let (k, l) = (k as i128, l as i128);
    let a = |m: i128| alpha(p, m);
    use B2Class::*;
    match c {
        A1 => int((q + 1) * (q + 1) * (q * q + 1)),
        A2 | A31 => int((q + 1) * (q + 1)),
        A32 => int(2 * q + 1),
        A41 | A42 => int(1),
        B1(i, j) => {
            let (i, j) = (*i as i128, *j as i128);
            a(i * k) * a(j * l) + a(i * l) * a(j * k)
        }
        C(1, i) => (a(*i as i128 * k) + a(*i as i128 * l)).scale(&ri(q + 1)),
        C(2, i) => (a(*i as i128 * k) * a(*i as i128 * l)).scale(&ri(q + 1)),
        D(1, i) => a(*i as i128 * k) + a(*i as i128 * l),
        D(2, i) => a(*i as i128 * k) * a(*i as i128 * l),
        _ => int(0),
    }
}

fn chi4(p: &Params, k: u64, l: u64, c: &B2Class) -> CycNum {
    let q = p.q as i128;
    let (k, l) = (k as i128, l as i128);
    let b = |m: i128| beta(p, m);
    use B2Class::*;
    match c {
        A1 => int((q - 1) * (q - 1) * (q * q + 1)),
        A2 | A31 => int((q - 1) * (q - 1)),
        A32 => int(-(2 * q - 1)),
        A41 | A42 => int(1),
        B4(i, j) => {
            let (i, j) = (*i as i128, *j as i128);
            b(i * k) * b(j * l) + b(i * l) * b(j * k)
        }
        C(3, i) => (b(*i as i128 * k) + b(*i as i128 * l)).scale(&ri(-(q - 1))),
        C(4, i) => (b(*i as i128 * k) * b(*i as i128 * l)).scale(&ri(-(q - 1))),
        D(3, i) => b(*i as i128 * k) + b(*i as i128 * l),
        D(4, i) => b(*i as i128 * k) * b(*i as i128 * l),
        _ => int(0),
    }
}

fn chi5(p: &Params, k: u64, c: &B2Class) -> CycNum {
    let q = p.q as i128;
    use B2Class::*;
    match c {
        A1 => int((q * q - 1) * (q * q - 1)),
        A2 | A31 => int(-(q * q - 1)),
        A32 | A41 | A42 => int(1),
        B5(i) => tau_sum(p, *i as i128 * k as i128),
        _ => int(0),
    }
}

/// Value of a named B2(q) character at a class. Names: theta1, theta4,
/// theta5, chi1(k,l), chi4(k,l), chi5(k).
pub fn b2_value(p: &Params, name: &str, c: &B2Class) -> Result<CycNum> {
    let bad = || Error::InvalidParameter(format!("unknown B2(q) character {name}"));
    let args: Vec<u64> = name
        .split_once('(')
        .map(|(_, rest)| {
            rest.trim_end_matches(')')
                .split(',')
                .map(|s| s.trim().parse::<u64>())
                .collect::<std::result::Result<Vec<_>, _>>()
        })
        .transpose()
        .map_err(|_| bad())?
        .unwrap_or_default();
    Ok(match (name.split('(').next().unwrap_or(""), args.as_slice()) {
        ("theta1", []) => theta_row(p, 1, c),
        ("theta4", []) => theta_row(p, 4, c),
        ("theta5", []) => theta_row(p, 5, c),
        ("chi1", [k, l]) => chi1(p, *k, *l, c),
        ("chi4", [k, l]) => chi4(p, *k, *l, c),
        ("chi5", [k]) => chi5(p, *k, c),
        _ => return Err(bad()),
    })
}

/// The σ-relevant rows of the B2(q) table on all of its classes.
pub fn table_b2_partial(n: u32) -> Result<GenericTable> {
    let p = Params::new(n)?;
    let classes = B2Class::all(&p);
    let (p1, p4, p5) = b2_character_parameters(&p);
    let mut names: Vec<String> = vec!["theta1".into(), "theta4".into(), "theta5".into()];
    names.extend(p1.iter().map(|(k, l)| format!("chi1({k},{l})")));
    names.extend(p4.iter().map(|(k, l)| format!("chi4({k},{l})")));
    names.extend(p5.iter().map(|k| format!("chi5({k})")));
    let rows = names
        .into_iter()
        .map(|name| {
            let values = classes
                .iter()
                .map(|c| b2_value(&p, &name, c))
                .collect::<Result<Vec<_>>>()?;
            Ok(Row { name, values })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GenericTable {
        title: "Character table of B2(q), σ-relevant rows".into(),
        n,
        q: p.q,
        theta: p.theta,
        table: TableId::B2,
        classes: classes.iter().map(|c| c.data(&p)).collect(),
        rows,
        notes: vec![
            "B2(i) and B5(i) share the representative h(τ^i, τ^(qi)); they are kept as \
             distinct torus types with |τ| = q²-1 and q²+1"
                .into(),
            "β_i is read as ν0^i + ν0^(-i)".into(),
        ],
    })
}

/// The σ-fixed torus generator π0 = h(γ^a, γ^b) with φ_(1,2θ-1)(π0) = ε0.
pub fn pi0_exponents(p: &Params) -> Result<(u64, u64)> {
    let m = p.q - 1;
    let th = p.theta;
    let e = eps0_exponent(p)?.rem_euclid(m as i128) as u64;
    for b in 0..m {
        for a in 0..m {
            let fixed_a = (th * (a + b)) % m == a;
            let fixed_b = (th * ((a + m - b) % m)) % m == b;
            if fixed_a && fixed_b && (a + (2 * th - 1) * b) % m == e {
                return Ok((a, b));
            }
        }
    }
    Err(Error::InvalidParameter("no σ-fixed torus generator".into()))
}

/// The B2(q) class containing a class of Sz(q).
pub fn sz_class_in_b2(p: &Params, c: &SzClass) -> Result<B2Class> {
    let q = p.q as u128;
    let th = p.theta as u128;
    Ok(match c {
        SzClass::One => B2Class::A1,
        SzClass::Sigma0 => B2Class::A32,
        SzClass::Rho0 | SzClass::Rho0Inv => B2Class::A42,
        SzClass::Torus(0, l) => {
            let (a, b) = pi0_exponents(p)?;
            let m = p.q - 1;
            let (i, j) = pair_orbit_min((a * l) % m, (b * l) % m, m);
            if i == 0 || j == 0 || i == j || i + j == m {
                return Err(Error::InvalidParameter(format!("pi0^{l} is not regular")));
            }
            B2Class::B1(i, j)
        }
        SzClass::Torus(t, l) => {
            let base = if *t == 1 { q - 2 * th + 1 } else { q + 2 * th + 1 };
            let m = q * q + 1;
            let i = (base * *l as u128 % m) as u64;
            B2Class::B5(orbit_min(i, m as u64, &[1, p.q]))
        }
    })
}

/// Restriction of a B2(q) character to Sz(q).
pub fn restrict_to_sz(p: &Params, name: &str) -> Result<ClassFunction> {
    let values = SzClass::all(p)
        .iter()
        .map(|c| b2_value(p, name, &sz_class_in_b2(p, c)?))
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(TableId::Sz, p.n, values)
}

/// σ(c) for B2(q) classes whose representatives are torus elements or
/// torus elements times a root element; σ(h(z1,z2)) = h((z1z2)^θ, (z1/z2)^θ).
pub fn sigma_on_b2_class(p: &Params, c: &B2Class) -> Option<B2Class> {
    let th = p.theta;
    let (qm, qp) = (p.q - 1, p.q + 1);
    let pair = |i: u64, j: u64, m: u64| {
        let s = th * ((i + j) % m) % m;
        let d = th * ((i + m - j) % m) % m;
        pair_orbit_min(s, d, m)
    };
    let half = |i: u64, m: u64| orbit_min(i % m, m, &[1]);
    Some(match *c {
        B2Class::B1(i, j) => {
            let (a, b) = pair(i, j, qm);
            B2Class::B1(a, b)
        }
        B2Class::B4(i, j) => {
            let (a, b) = pair(i, j, qp);
            B2Class::B4(a, b)
        }
        B2Class::B2(i) => {
            let m = p.q * p.q - 1;
            B2Class::B2(orbit_min((th as u128 * qp as u128 * i as u128 % m as u128) as u64, m, &[1, p.q]))
        }
        B2Class::B5(i) => {
            let m = p.q * p.q + 1;
            B2Class::B5(orbit_min((th as u128 * qp as u128 * i as u128 % m as u128) as u64, m, &[1, p.q]))
        }
        B2Class::C(k, i) | B2Class::D(k, i) => {
            let m = if k <= 2 { qm } else { qp };
            // h(1,x) ↦ h(x^θ, x^-θ) and h(x,x^-1) ↦ h(1, x^(2θ))
            let (k2, i2) = match k {
                1 | 3 => (k + 1, half(th * i, m)),
                _ => (k - 1, half(2 * th * i, m)),
            };
            if matches!(c, B2Class::C(..)) {
                B2Class::C(k2, i2)
            } else {
                B2Class::D(k2, i2)
            }
        }
        _ => return None,
    })
}
