//! Solving the Lang equation x^(-1)·F²(x) = g for unipotent g ∈ Sz(q) over
//! an extension of GF(q), one root-subgroup layer at a time.

use serde::Serialize;

use crate::chevalley::{GroupElement, Matrix, UnipotentCoords};
use crate::error::{Error, Result};
use crate::gf2::{artin_schreier_solve, FieldElement, FieldTower};
use crate::groups::Params;

/// A solution x of x^(-1)·F²(x) = g together with the outer element
/// x·F(x)^(-1) of G(q), which represents the Shintani image of g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LangWitness {
    pub n: u32,
    /// Degree of the field the entries of `x` live in.
    pub degree: u32,
    pub x: GroupElement,
    pub outer: GroupElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SerializedElement {
    pub degree: u32,
    /// Matrix entries as bit patterns over the field of `degree`.
    pub matrix: Vec<Vec<u64>>,
}

impl From<&GroupElement> for SerializedElement {
    fn from(g: &GroupElement) -> Self {
        SerializedElement {
            degree: g.degree(),
            matrix: g
                .matrix()
                .iter()
                .map(|r| r.iter().map(|x| x.bits()).collect())
                .collect(),
        }
    }
}

fn map_entries(
    g: &GroupElement,
    f: impl Fn(FieldElement) -> Result<FieldElement>,
) -> Result<GroupElement> {
    let mut mat: Matrix = *g.matrix();
    for x in mat.iter_mut().flatten() {
        *x = f(*x)?;
    }
    GroupElement::new(mat)
}

/// g over GF(2^m) viewed over GF(2^big).
pub fn lift(g: &GroupElement, tower: &FieldTower, big: u32) -> Result<GroupElement> {
    map_entries(g, |x| tower.embed(x, big))
}

/// g over GF(2^big) with entries in GF(2^d), viewed over GF(2^d).
pub fn descend(g: &GroupElement, tower: &FieldTower, d: u32) -> Result<GroupElement> {
    map_entries(g, |x| {
        tower.descend(x, d)?.ok_or_else(|| {
            Error::InvalidParameter(format!("entry not in GF(2^{d})"))
        })
    })
}

fn solve_layer(q_exp: u32, c: FieldElement) -> Option<FieldElement> {
    artin_schreier_solve(q_exp, c).into_iter().next()
}

fn try_degree(g: &GroupElement, p: &Params, tower: &FieldTower, big: u32) -> Result<LangWitness> {
    let m = p.m();
    let gl = lift(g, tower, big)?;
    let zero = FieldElement::zero(big);
    let compose = |a, b, c, d| UnipotentCoords::new(a, b, c, d).compose().without_word();
    // residual r(y) = F²(y)^(-1)·y·g; F²(y·z) = y·z·g needs z^q - z = r(y) on each layer
    let residual = |y: &GroupElement| -> Result<UnipotentCoords> {
        UnipotentCoords::of(&y.frobenius(m).inverse().mul(y).mul(&gl))
    };
    let fail = || Error::NoSolutionInField(big);

    let r = residual(&GroupElement::identity(big))?;
    let ta = solve_layer(m, r.t_a).ok_or_else(fail)?;
    let tb = solve_layer(m, r.t_b).ok_or_else(fail)?;
    let y = compose(ta, tb, zero, zero);
    let r = residual(&y)?;
    let tab = solve_layer(m, r.t_ab).ok_or_else(fail)?;
    let y = y.mul(&compose(zero, zero, tab, zero));
    let r = residual(&y)?;
    let t2ab = solve_layer(m, r.t_2ab).ok_or_else(fail)?;
    let x = y.mul(&compose(zero, zero, zero, t2ab));

    if x.inverse().mul(&x.frobenius(m)) != gl {
        return Err(Error::InvalidParameter(
            "Lang solution failed substitution".into(),
        ));
    }
    let outer = x.mul(&x.sigma(p.n).inverse());
    let outer = descend(&outer, tower, m)?;
    Ok(LangWitness {
        n: p.n,
        degree: big,
        x,
        outer,
    })
}

/// Solves x^(-1)·F²(x) = g for g in U(q) ∩ Sz(q), first over GF(2^(4(2n+1)))
/// and then over GF(2^(8(2n+1))).
pub fn lang_solve_unipotent(g: &GroupElement, n: u32) -> Result<LangWitness> {
    let p = Params::new(n)?;
    let m = p.m();
    if !g.is_unipotent_upper() || g.degree() != m {
        return Err(Error::InvalidParameter("expected an element of U(q)".into()));
    }
    let mut last = Error::NoSolutionInField(4 * m);
    for big in [4 * m, 8 * m] {
        let tower = FieldTower::new(&[m, big])?;
        match try_degree(g, &p, &tower, big) {
            Ok(w) => return Ok(w),
            Err(e @ Error::NoSolutionInField(_)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

/// Checks x^(-1)·F²(x) = g and that x·F(x)^(-1) is F²-fixed.
pub fn verify_witness(g: &GroupElement, w: &LangWitness) -> Result<bool> {
    let p = Params::new(w.n)?;
    let m = p.m();
    let tower = FieldTower::new(&[m, w.degree])?;
    let gl = lift(g, &tower, w.degree)?;
    let lang = w.x.inverse().mul(&w.x.frobenius(m)) == gl;
    let outer = w.x.mul(&w.x.sigma(p.n).inverse());
    Ok(lang && outer == lift(&w.outer, &tower, w.degree)?)
}
