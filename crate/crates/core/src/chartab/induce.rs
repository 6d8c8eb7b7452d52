//! Induction by class fusion: Ind f(c) = Σ_{d ⊂ c} |C_T(c)|/|C_S(d)|·f(d).

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::b2::sz_class_in_b2;
use super::func::{ClassFunction, TableId};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::groups::{orbit_min, B2Class, OuterClass, Params, SzClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Route {
    /// Ũ0 = U0⋊⟨σ⟩ to B̃ = B⋊⟨σ⟩; see `u0::induce_lambda_outer`.
    U0TildeToBTilde,
    /// B̃ to G̃ = B2(q)⋊⟨σ⟩, outer classes.
    BTildeToGTilde,
    /// Sz(q)×⟨σ⟩ to G̃, outer classes.
    SzTildeToGTilde,
    /// Sz(q) to B2(q).
    SzToG,
    /// U0 to B; see `u0::induce_lambda_inner`.
    U0ToB,
}

impl Route {
    pub fn source(&self) -> Option<TableId> {
        match self {
            Route::BTildeToGTilde => Some(TableId::BorelOuter),
            Route::SzTildeToGTilde | Route::SzToG => Some(TableId::Sz),
            _ => None,
        }
    }

    pub fn target(&self) -> Option<TableId> {
        match self {
            Route::BTildeToGTilde | Route::SzTildeToGTilde => Some(TableId::Outer),
            Route::SzToG => Some(TableId::B2),
            _ => None,
        }
    }
}

/// Fusion of source classes into target classes, as target indices, and the
/// source centralizer orders used in the induction formula.
fn fusion(route: Route, p: &Params) -> Result<(Vec<usize>, Vec<u128>)> {
    match route {
        Route::BTildeToGTilde => {
            let outer = OuterClass::all(p);
            let idx = |c: OuterClass| outer.iter().position(|x| *x == c).expect("listed");
            let mut map = vec![
                idx(OuterClass::One),
                idx(OuterClass::Xa),
                idx(OuterClass::Xab),
                idx(OuterClass::XaXab),
            ];
            for l in 1..p.q - 1 {
                map.push(idx(OuterClass::Torus(0, orbit_min(l, p.q - 1, &[1]))));
            }
            let cents = TableId::BorelOuter
                .classes(p)
                .iter()
                .map(|c| c.centralizer_order)
                .collect();
            Ok((map, cents))
        }
        Route::SzTildeToGTilde => {
            let outer = OuterClass::all(p);
            let idx = |c: OuterClass| outer.iter().position(|x| *x == c).expect("listed");
            let sz = SzClass::all(p);
            let map = sz
                .iter()
                .map(|c| {
                    idx(match c {
                        // (σ0,σ) is B-conjugate to (1,σ); (ρ0^±1,σ) to (x_{a+b},σ)
                        SzClass::One | SzClass::Sigma0 => OuterClass::One,
                        SzClass::Rho0 | SzClass::Rho0Inv => OuterClass::Xab,
                        SzClass::Torus(t, l) => OuterClass::Torus(*t, *l),
                    })
                })
                .collect();
            let cents = sz.iter().map(|c| 2 * c.centralizer_order(p)).collect();
            Ok((map, cents))
        }
        Route::SzToG => {
            let g = B2Class::all(p);
            let sz = SzClass::all(p);
            let map = sz
                .iter()
                .map(|c| {
                    let t = sz_class_in_b2(p, c)?;
                    g.iter()
                        .position(|x| *x == t)
                        .ok_or_else(|| Error::InvalidParameter(format!("{} not listed", t.label())))
                })
                .collect::<Result<Vec<_>>>()?;
            let cents = sz.iter().map(|c| c.centralizer_order(p)).collect();
            Ok((map, cents))
        }
        Route::U0TildeToBTilde | Route::U0ToB => Err(Error::RouteUnsupported(format!(
            "{route:?} takes a linear character λ(k,l) of U0; use u0::induce_lambda_inner"
        ))),
    }
}

/// Induces `f` along `route` using the class fusion of the route.
pub fn induce(f: &ClassFunction, route: Route) -> Result<ClassFunction> {
    let (source, target) = match (route.source(), route.target()) {
        (Some(s), Some(t)) => (s, t),
        _ => {
            return Err(Error::RouteUnsupported(format!(
                "{route:?} takes a linear character λ(k,l) of U0; use u0::induce_lambda_inner"
            )))
        }
    };
    if f.table != source {
        return Err(Error::TableMismatch(f.table.to_string(), source.to_string()));
    }
    let p = f.params();
    let (map, source_cents) = fusion(route, &p)?;
    let target_cents: Vec<u128> = target.classes(&p).iter().map(|c| c.centralizer_order).collect();
    let mut values = vec![CycNum::zero(); target_cents.len()];
    for (d, &c) in map.iter().enumerate() {
        if f.values[d].is_zero() {
            continue;
        }
        let coeff = BigRational::new(
            BigInt::from(target_cents[c]),
            BigInt::from(source_cents[d]),
        );
        values[c] = values[c].checked_add(&f.values[d].scale(&coeff))?;
    }
    ClassFunction::new(target, f.n, values)
}

/// Restriction of a function on the target of `route` to its source.
pub fn restrict(f: &ClassFunction, route: Route) -> Result<ClassFunction> {
    let (source, target) = match (route.source(), route.target()) {
        (Some(s), Some(t)) => (s, t),
        _ => return Err(Error::RouteUnsupported(format!("{route:?}"))),
    };
    if f.table != target {
        return Err(Error::TableMismatch(f.table.to_string(), target.to_string()));
    }
    let (map, _) = fusion(route, &f.params())?;
    ClassFunction::new(source, f.n, map.iter().map(|&c| f.values[c].clone()).collect())
}
