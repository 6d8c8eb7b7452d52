//! The Shintani correspondence N_{F/F²} on classes.

use serde::Serialize;

use super::lang::{lang_solve_unipotent, LangWitness, SerializedElement};
use crate::chevalley::GroupElement;
use crate::error::{Error, Result};
use crate::groups::{rho0, unipotent_outer_class, OuterClass, Params, SzClass};

/// Image of an Sz(q) class. Torus classes are matched by type only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Image {
    Class(OuterClass),
    TorusType(usize),
}

impl Image {
    pub fn label(&self) -> String {
        match self {
            Image::Class(c) => c.label(),
            Image::TorusType(t) => format!("(pi{t}^*,σ)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormEntry {
    pub sz_class: SzClass,
    pub image: Image,
    pub witness: Option<LangWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormMap {
    pub n: u32,
    pub entries: Vec<NormEntry>,
}

#[derive(Serialize)]
struct EntryJson {
    sz_class: String,
    outer_class: String,
    witness: Option<SerializedElement>,
}

#[derive(Serialize)]
struct NormMapJson {
    n: u32,
    entries: Vec<EntryJson>,
}

impl Serialize for NormMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        NormMapJson {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|e| EntryJson {
                    sz_class: e.sz_class.label(),
                    outer_class: e.image.label(),
                    witness: e.witness.as_ref().map(|w| SerializedElement::from(&w.x)),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// Unipotent class representatives of Sz(q): 1, σ0 = ρ0², ρ0, ρ0^(-1).
pub fn sz_unipotent_reps(m: u32) -> [(SzClass, GroupElement); 4] {
    let r = rho0(m).without_word();
    [
        (SzClass::One, GroupElement::identity(m).without_word()),
        (SzClass::Sigma0, r.mul(&r)),
        (SzClass::Rho0, r.clone()),
        (SzClass::Rho0Inv, r.inverse()),
    ]
}

/// The class map, with Lang witnesses for the unipotent classes.
pub fn norm_map(n: u32) -> Result<NormMap> {
    if n > 2 {
        return Err(Error::InvalidParameter(format!("norm_map needs n ≤ 2, got {n}")));
    }
    let p = Params::new(n)?;
    let mut entries = Vec::new();
    for (c, g) in sz_unipotent_reps(p.m()) {
        let w = lang_solve_unipotent(&g, n)?;
        let image = unipotent_outer_class(&w.outer, n)?;
        entries.push(NormEntry {
            sz_class: c,
            image: Image::Class(image),
            witness: Some(w),
        });
    }
    for c in SzClass::all(&p) {
        if let SzClass::Torus(t, _) = c {
            entries.push(NormEntry {
                sz_class: c,
                image: Image::TorusType(t),
                witness: None,
            });
        }
    }
    Ok(NormMap { n, entries })
}

impl NormMap {
    pub fn image(&self, c: &SzClass) -> Option<Image> {
        self.entries.iter().find(|e| e.sz_class == *c).map(|e| e.image)
    }

    /// Entries violating |C_G̃(N(c))| = 2·|C_Sz(c)|.
    pub fn centralizer_violations(&self) -> Result<Vec<String>> {
        let p = Params::new(self.n)?;
        let mut bad = Vec::new();
        for e in &self.entries {
            let target = match e.image {
                Image::Class(c) => c.centralizer_order(&p),
                Image::TorusType(t) => OuterClass::Torus(t, p.index_set(t)[0]).centralizer_order(&p),
            };
            let source = e.sz_class.centralizer_order(&p);
            if target != 2 * source {
                bad.push(format!(
                    "{} -> {}: {target} != 2·{source}",
                    e.sz_class.label(),
                    e.image.label()
                ));
            }
        }
        Ok(bad)
    }

    /// Injective on unipotent classes and type-preserving with equal class
    /// counts on tori, so a bijection onto the outer classes.
    pub fn is_bijective(&self) -> Result<bool> {
        let p = Params::new(self.n)?;
        let mut seen = Vec::new();
        let mut per_type = [0usize; 3];
        for e in &self.entries {
            match e.image {
                Image::Class(c) => {
                    if seen.contains(&c) {
                        return Ok(false);
                    }
                    seen.push(c);
                }
                Image::TorusType(t) => per_type[t] += 1,
            }
        }
        let outer = OuterClass::all(&p);
        let unipotent = outer
            .iter()
            .filter(|c| !matches!(c, OuterClass::Torus(..)))
            .count();
        Ok(seen.len() == unipotent
            && (0..3).all(|t| per_type[t] == p.index_set(t).len())
            && self.entries.len() == outer.len())
    }
}
