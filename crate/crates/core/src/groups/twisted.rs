//! σ-twisted conjugacy of unipotent elements by the Borel subgroup B(q).
//!
//! For u, v in U we look for b = y·z·h with h in H^σ, y = x_a(t_a)x_b(t_b)
//! and z in Z = X_{a+b}X_{2a+b}. Z is central in U and σ-stable, and
//! z·σ(z)^(-1) runs exactly over the x_{a+b}(e)x_{2a+b}(f) with f = e^(2θ),
//! each hit q times. So only h, t_a, t_b need to be searched.

use super::classes::OuterClass;
use super::enumerate::sigma_fixed_torus;
use super::params::Params;
use crate::chevalley::{GroupElement, Root, UnipotentCoords};
use crate::error::{Error, Result};
use crate::gf2::FieldElement;
use crate::par;

fn check_unipotent(g: &GroupElement) -> Result<()> {
    if g.is_unipotent_upper() {
        Ok(())
    } else {
        Err(Error::NotInBorel)
    }
}

/// Number of (h, t_a, t_b) in H^σ × GF(q)² whose defect lands in the image
/// of z ↦ z·σ(z)^(-1).
fn count_partial_solutions(u: &GroupElement, v: &GroupElement, p: &Params, stop_at_first: bool) -> u64 {
    let m = p.m();
    let torus = sigma_fixed_torus(p);
    let field: Vec<FieldElement> = FieldElement::all(m).collect();
    let counts = par::map(&torus, |h| {
        let hu = u.conjugate_by(h);
        let mut count = 0u64;
        for &ta in &field {
            for &tb in &field {
                let y = GroupElement::x(Root::A, ta).mul(&GroupElement::x(Root::B, tb));
                let image = y.mul(&hu).mul(&y.sigma(p.n).inverse());
                let defect = image.inverse().mul(v);
                let c = UnipotentCoords::of(&defect).expect("U is a group");
                if c.t_a.is_zero() && c.t_b.is_zero() && c.t_2ab == c.t_ab.frobenius(p.n + 1) {
                    count += 1;
                    if stop_at_first {
                        return count;
                    }
                }
            }
        }
        count
    });
    counts.into_iter().sum()
}

/// True iff b·u·σ(b)^(-1) = v for some b in B(q).
pub fn twisted_conjugate_test(u: &GroupElement, v: &GroupElement, n: u32) -> Result<bool> {
    check_unipotent(u)?;
    check_unipotent(v)?;
    let p = Params::new(n)?;
    Ok(count_partial_solutions(u, v, &p, true) > 0)
}

/// |{b in B(q) : b·u·σ(b)^(-1) = u}|.
pub fn twisted_stabilizer_order(u: &GroupElement, n: u32) -> Result<u64> {
    check_unipotent(u)?;
    let p = Params::new(n)?;
    Ok(count_partial_solutions(u, u, &p, false) * p.q)
}

/// Representatives (1, x_a, x_{a+b}, x_a x_{a+b}) of the unipotent outer classes.
pub fn unipotent_outer_reps(m: u32) -> [(OuterClass, GroupElement); 4] {
    let one = FieldElement::one(m);
    let xa = GroupElement::x(Root::A, one);
    let xab = GroupElement::x(Root::AB, one);
    [
        (OuterClass::One, GroupElement::identity(m)),
        (OuterClass::Xa, xa.clone()),
        (OuterClass::Xab, xab.clone()),
        (OuterClass::XaXab, xa.mul(&xab)),
    ]
}

/// The outer class of (y, σ) for y in U(q).
pub fn unipotent_outer_class(y: &GroupElement, n: u32) -> Result<OuterClass> {
    for (class, rep) in unipotent_outer_reps(2 * n + 1) {
        if twisted_conjugate_test(y, &rep, n)? {
            return Ok(class);
        }
    }
    Err(Error::InvalidParameter(format!(
        "{y:?} is twisted-conjugate to no unipotent representative"
    )))
}

/// Exhaustive version over all of B(q); only sensible for q = 8.
pub fn twisted_conjugate_brute(u: &GroupElement, v: &GroupElement, n: u32, budget: u64) -> Result<bool> {
    check_unipotent(u)?;
    check_unipotent(v)?;
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
    let units: Vec<FieldElement> = FieldElement::all_nonzero(m).collect();
    let torus: Vec<GroupElement> = units
        .iter()
        .flat_map(|&z1| units.iter().map(move |&z2| GroupElement::h(z1, z2).expect("nonzero")))
        .collect();
    let hits = par::map(&torus, |h| {
        for &a in &field {
            for &b in &field {
                for &c in &field {
                    for &d in &field {
                        let g = UnipotentCoords::new(a, b, c, d).compose().mul(h);
                        if g.mul(u).mul(&g.sigma(n).inverse()) == *v {
                            return true;
                        }
                    }
                }
            }
        }
        false
    });
    Ok(hits.into_iter().any(|x| x))
}
