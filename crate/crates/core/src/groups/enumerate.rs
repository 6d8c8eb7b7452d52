//! Explicit enumeration of Sz(q) as σ-fixed points and its conjugacy classes.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::classes::{ClassData, SzClass};
use super::params::Params;
use crate::chevalley::{GroupElement, Root, Token, UnipotentCoords};
use crate::error::{Error, Result};
use crate::gf2::FieldElement;
use crate::par;

/// Default bound on the number of elements an enumeration may create.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// A conjugacy class of an enumerated group.
#[derive(Debug, Clone, Serialize)]
pub struct EnumClass {
    pub label: String,
    #[serde(skip)]
    pub rep_key: u128,
    pub rep: GroupElement,
    pub size: u64,
    pub centralizer_order: u64,
}

/// A finite matrix group held as sorted packed keys.
#[derive(Debug, Clone)]
pub struct EnumeratedGroup {
    pub m: u32,
    pub elements: Vec<u128>,
    pub generators: Vec<GroupElement>,
    pub classes: Vec<EnumClass>,
    class_of: HashMap<u128, usize>,
}

fn key_mul(a: u128, b: &GroupElement, m: u32) -> u128 {
    GroupElement::from_key(a, m).mul(b).key()
}

/// Keeps only generators that enlarge the group generated so far (small groups only).
fn prune_generators(candidates: &[GroupElement]) -> Vec<GroupElement> {
    let mut chosen: Vec<GroupElement> = Vec::new();
    let mut span: HashSet<u128> = HashSet::new();
    for g in candidates {
        let m = g.degree();
        if span.contains(&g.key()) {
            continue;
        }
        chosen.push(g.clone());
        span = closure_seq(&chosen, m);
    }
    chosen
}

fn closure_seq(gens: &[GroupElement], m: u32) -> HashSet<u128> {
    let id = GroupElement::identity(m).key();
    let mut seen: HashSet<u128> = [id].into_iter().collect();
    let mut frontier = vec![id];
    while let Some(k) = frontier.pop() {
        for g in gens {
            let next = key_mul(k, g, m);
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    seen
}

/// Closure of `gens` by breadth-first search; products of each frontier are
/// computed in parallel and merged in frontier order.
pub fn closure(gens: &[GroupElement], m: u32, budget: u64) -> Result<Vec<u128>> {
    let id = GroupElement::identity(m).key();
    let mut seen: HashSet<u128> = [id].into_iter().collect();
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let products: Vec<Vec<u128>> = par::map(&frontier, |&k| {
            let x = GroupElement::from_key(k, m);
            gens.iter().map(|g| x.mul(g).key()).collect()
        });
        let mut next = Vec::new();
        for k in products.into_iter().flatten() {
            if seen.insert(k) {
                next.push(k);
            }
        }
        if seen.len() as u64 > budget {
            return Err(Error::ScaleExceeded {
                projected: seen.len() as u64,
                budget,
            });
        }
        frontier = next;
    }
    let mut out: Vec<u128> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// σ-fixed elements of U(q).
pub fn sigma_fixed_unipotents(p: &Params) -> Vec<GroupElement> {
    let m = p.m();
    let field: Vec<FieldElement> = FieldElement::all(m).collect();
    let mut out = Vec::new();
    // σ-fixed elements satisfy t_a = t_b^θ; the remaining coordinates are searched
    for &tb in &field {
        let ta = tb.frobenius(p.n);
        for &tab in &field {
            for &t2ab in &field {
                let u = UnipotentCoords::new(ta, tb, tab, t2ab).compose();
                if u.sigma(p.n) == u {
                    out.push(u);
                }
            }
        }
    }
    out
}

/// σ-fixed elements of the diagonal torus H(q).
pub fn sigma_fixed_torus(p: &Params) -> Vec<GroupElement> {
    let m = p.m();
    let mut out = Vec::new();
    for z1 in FieldElement::all_nonzero(m) {
        for z2 in FieldElement::all_nonzero(m) {
            let h = GroupElement::h(z1, z2).expect("nonzero");
            if h.sigma(p.n) == h {
                out.push(h);
            }
        }
    }
    out
}

/// The first σ-fixed monomial matrix outside B, searching W × H in a fixed order.
pub fn sigma_fixed_monomial(p: &Params) -> Result<GroupElement> {
    let m = p.m();
    let weyl_words: [&[Token]; 8] = [
        &[],
        &[Token::Na],
        &[Token::Nb],
        &[Token::Na, Token::Nb],
        &[Token::Nb, Token::Na],
        &[Token::Na, Token::Nb, Token::Na],
        &[Token::Nb, Token::Na, Token::Nb],
        &[Token::Na, Token::Nb, Token::Na, Token::Nb],
    ];
    for word in weyl_words {
        let w = GroupElement::from_word(word, m)?;
        for z1 in FieldElement::all_nonzero(m) {
            for z2 in FieldElement::all_nonzero(m) {
                let g = w.mul(&GroupElement::h(z1, z2)?);
                if !g.is_upper_triangular() && g.sigma(p.n) == g {
                    return Ok(g);
                }
            }
        }
    }
    Err(Error::InvalidParameter("no σ-fixed monomial element".into()))
}

/// ρ0 = x_{a+b} x_b x_a = (x_a x_b x_{a+b})^(-1), a σ-fixed element of order 4.
/// This orientation fixes which cuspidal character is W.
pub fn rho0(m: u32) -> GroupElement {
    let one = FieldElement::one(m);
    GroupElement::x(Root::AB, one)
        .mul(&GroupElement::x(Root::B, one))
        .mul(&GroupElement::x(Root::A, one))
}

impl EnumeratedGroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(&g.key()).is_ok()
    }

    /// Index into `classes` of the class containing `g`.
    pub fn class_index(&self, g: &GroupElement) -> Option<usize> {
        self.class_of.get(&g.key()).copied()
    }

    pub fn class_data(&self) -> Vec<ClassData> {
        self.classes
            .iter()
            .map(|c| ClassData {
                label: c.label.clone(),
                rep: format!("{:?}", c.rep),
                centralizer_order: c.centralizer_order as u128,
            })
            .collect()
    }

    /// Builds the group from generators and splits it into conjugacy classes.
    pub fn generate(gens: Vec<GroupElement>, m: u32, budget: u64) -> Result<Self> {
        let elements = closure(&gens, m, budget)?;
        let order = elements.len() as u64;
        let mut class_of: HashMap<u128, usize> = HashMap::with_capacity(elements.len());
        let mut classes = Vec::new();
        let gen_invs: Vec<(GroupElement, GroupElement)> =
            gens.iter().map(|g| (g.clone(), g.inverse())).collect();
        for &k in &elements {
            if class_of.contains_key(&k) {
                continue;
            }
            let idx = classes.len();
            class_of.insert(k, idx);
            let mut stack = vec![k];
            let mut size = 1u64;
            while let Some(x) = stack.pop() {
                let xe = GroupElement::from_key(x, m);
                for (g, gi) in &gen_invs {
                    let y = g.mul(&xe).mul(gi).key();
                    if let std::collections::hash_map::Entry::Vacant(e) = class_of.entry(y) {
                        e.insert(idx);
                        size += 1;
                        stack.push(y);
                    }
                }
            }
            classes.push(EnumClass {
                label: format!("c{idx}"),
                rep_key: k,
                rep: GroupElement::from_key(k, m),
                size,
                centralizer_order: order / size,
            });
        }
        Ok(EnumeratedGroup {
            m,
            elements,
            generators: gens,
            classes,
            class_of,
        })
    }
}

/// Enumerates Sz(q) as the closure of σ-fixed generators and labels its classes.
pub fn enumerate_sz(n: u32, budget: u64) -> Result<EnumeratedGroup> {
    let p = Params::new(n)?;
    let projected = p.sz_order();
    if projected > budget as u128 {
        return Err(Error::ScaleExceeded {
            projected: projected as u64,
            budget,
        });
    }
    if p.m() > 8 {
        return Err(Error::UnsupportedDegree(p.m()));
    }
    let mut gens = prune_generators(&sigma_fixed_unipotents(&p));
    let torus = sigma_fixed_torus(&p);
    let torus_gen = torus
        .iter()
        .find(|h| h.order() == p.q - 1)
        .cloned()
        .ok_or_else(|| Error::InvalidParameter("no torus generator".into()))?;
    gens.push(torus_gen.without_word());
    gens.push(sigma_fixed_monomial(&p)?.without_word());
    let gens: Vec<GroupElement> = gens.into_iter().map(|g| g.without_word()).collect();
    let mut group = EnumeratedGroup::generate(gens, p.m(), budget)?;
    label_sz_classes(&mut group, &p)?;
    Ok(group)
}

fn label_sz_classes(group: &mut EnumeratedGroup, p: &Params) -> Result<()> {
    let m = p.m();
    let mut labels: Vec<Option<SzClass>> = vec![None; group.classes.len()];
    let id = GroupElement::identity(m);
    let r = rho0(m);
    let sigma0 = GroupElement::x(Root::AB, FieldElement::one(m))
        .mul(&GroupElement::x(Root::TwoAB, FieldElement::one(m)));
    for (g, c) in [
        (&id, SzClass::One),
        (&sigma0, SzClass::Sigma0),
        (&r, SzClass::Rho0),
        (&r.inverse(), SzClass::Rho0Inv),
    ] {
        let idx = group
            .class_index(g)
            .ok_or_else(|| Error::InvalidParameter(format!("{} not in Sz(q)", c.label())))?;
        labels[idx] = Some(c);
    }
    for (t, &order) in p.torus_orders().iter().enumerate() {
        let generator = group
            .elements
            .iter()
            .map(|&k| GroupElement::from_key(k, m))
            .find(|g| g.order() == order)
            .ok_or_else(|| Error::InvalidParameter(format!("no element of order {order}")))?;
        for l in p.index_set(t) {
            let idx = group.class_index(&generator.pow(l)).expect("closed");
            labels[idx] = Some(SzClass::Torus(t, l));
        }
    }
    for (c, label) in group.classes.iter_mut().zip(labels) {
        let label = label.ok_or_else(|| {
            Error::InvalidParameter(format!("unlabelled class with rep {:?}", c.rep))
        })?;
        c.label = label.label();
    }
    Ok(())
}
