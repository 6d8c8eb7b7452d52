//! Compatible subfield embeddings between the supported binary fields.

use std::collections::{BTreeMap, BTreeSet};

use super::artin_schreier::fixed_field_basis;
use super::field::{modulus, MAX_DEGREE};
use super::FieldElement;
use crate::error::{Error, Result};

/// Degrees every tower supports.
pub const BASE_DEGREES: [u32; 8] = [1, 2, 3, 4, 5, 10, 12, 20];

/// Subfield embeddings GF(2^d) -> GF(2^m) for all supported d | m.
///
/// Each embedding is stored as the image of the class of x. The images are
/// chosen so that embedding along any chain d | e | m agrees with the direct
/// embedding.
#[derive(Debug, Clone)]
pub struct FieldTower {
    degrees: BTreeSet<u32>,
    roots: BTreeMap<(u32, u32), FieldElement>,
}

fn eval_modulus(d: u32, x: FieldElement) -> FieldElement {
    let f = modulus(d);
    let mut acc = FieldElement::zero(x.degree());
    for i in (0..=d).rev() {
        acc *= x;
        if (f >> i) & 1 == 1 {
            acc += FieldElement::one(x.degree());
        }
    }
    acc
}

/// Roots of the degree-d modulus inside GF(2^m), sorted.
fn subfield_roots(d: u32, m: u32) -> Vec<FieldElement> {
    if d == 1 {
        return vec![FieldElement::generator(1).embed_trivially(m)];
    }
    let basis = fixed_field_basis(m, d);
    assert_eq!(basis.len() as u32, d);
    let mut roots: Vec<FieldElement> = (0..1u64 << d)
        .map(|mask| {
            basis
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> i) & 1 == 1)
                .fold(FieldElement::zero(m), |acc, (_, b)| acc + *b)
        })
        .filter(|x| eval_modulus(d, *x).is_zero())
        .collect();
    roots.sort();
    roots
}

impl FieldElement {
    fn embed_trivially(self, m: u32) -> FieldElement {
        // GF(2) elements have the same bit pattern in every field
        FieldElement::new(m, self.bits())
    }
}

impl FieldTower {
    /// Tower over the base degrees plus `extra` degrees.
    pub fn new(extra: &[u32]) -> Result<Self> {
        let mut degrees: BTreeSet<u32> = BASE_DEGREES.iter().copied().collect();
        for &d in extra {
            if d == 0 || d > MAX_DEGREE {
                return Err(Error::UnsupportedDegree(d));
            }
            degrees.insert(d);
        }
        let mut tower = FieldTower {
            degrees,
            roots: BTreeMap::new(),
        };
        let targets: Vec<u32> = tower.degrees.iter().copied().collect();
        for &m in &targets {
            tower.build_level(m)?;
        }
        Ok(tower)
    }

    /// Tower sized for the parameter n: adds 2n+1 and 4(2n+1).
    pub fn for_parameter(n: u32) -> Result<Self> {
        Self::new(&[2 * n + 1, 4 * (2 * n + 1)])
    }

    fn build_level(&mut self, m: u32) -> Result<()> {
        let mut subs: Vec<u32> = self
            .degrees
            .iter()
            .copied()
            .filter(|&d| d < m && m.is_multiple_of(d))
            .collect();
        subs.sort_unstable_by(|a, b| b.cmp(a));
        let domains: Vec<Vec<FieldElement>> =
            subs.iter().map(|&d| subfield_roots(d, m)).collect();
        let mut chosen: BTreeMap<u32, FieldElement> = BTreeMap::new();
        if !self.assign(&subs, &domains, 0, &mut chosen) {
            return Err(Error::NoEmbedding { sub: subs[0], ext: m });
        }
        for (d, r) in chosen {
            self.roots.insert((d, m), r);
        }
        Ok(())
    }

    fn assign(
        &self,
        subs: &[u32],
        domains: &[Vec<FieldElement>],
        idx: usize,
        chosen: &mut BTreeMap<u32, FieldElement>,
    ) -> bool {
        if idx == subs.len() {
            return true;
        }
        let d = subs[idx];
        for &r in &domains[idx] {
            // every already chosen intermediate e with d | e | m constrains r
            let consistent = chosen.iter().all(|(&e, &re)| {
                if e % d != 0 {
                    return true;
                }
                let inner = self.roots[&(d, e)];
                Self::embed_with_root(inner, re) == r
            });
            if consistent {
                chosen.insert(d, r);
                if self.assign(subs, domains, idx + 1, chosen) {
                    return true;
                }
                chosen.remove(&d);
            }
        }
        false
    }

    fn embed_with_root(a: FieldElement, root: FieldElement) -> FieldElement {
        let m = root.degree();
        let mut acc = FieldElement::zero(m);
        let mut p = FieldElement::one(m);
        for i in 0..a.degree() {
            if (a.bits() >> i) & 1 == 1 {
                acc += p;
            }
            p *= root;
        }
        acc
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.degrees.iter().copied()
    }

    /// Embeds `a` from its own field into GF(2^m).
    pub fn embed(&self, a: FieldElement, m: u32) -> Result<FieldElement> {
        let d = a.degree();
        if d == m {
            return Ok(a);
        }
        let root = self
            .roots
            .get(&(d, m))
            .ok_or(Error::NoEmbedding { sub: d, ext: m })?;
        Ok(Self::embed_with_root(a, *root))
    }

    /// The preimage of `a` under GF(2^d) -> GF(2^m), if `a` lies in the subfield.
    pub fn descend(&self, a: FieldElement, d: u32) -> Result<Option<FieldElement>> {
        let m = a.degree();
        if d == m {
            return Ok(Some(a));
        }
        if a.frobenius(d) != a {
            return Ok(None);
        }
        let root = *self.roots.get(&(d, m)).ok_or(Error::NoEmbedding { sub: d, ext: m })?;
        if d > 20 {
            return Err(Error::UnsupportedDegree(d));
        }
        Ok((0..1u64 << d)
            .map(|bits| FieldElement::new(d, bits))
            .find(|b| Self::embed_with_root(*b, root) == a))
    }

    /// Image of the class of x under GF(2^d) -> GF(2^m).
    pub fn root(&self, d: u32, m: u32) -> Option<FieldElement> {
        self.roots.get(&(d, m)).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn descend_inverts_embed() {
        let tower = FieldTower::for_parameter(1).unwrap();
        for a in FieldElement::all(3) {
            let e = tower.embed(a, 12).unwrap();
            assert_eq!(tower.descend(e, 3).unwrap(), Some(a));
        }
        let h = FieldElement::generator(12);
        assert_eq!(tower.descend(h, 3).unwrap(), None);
    }

    #[test]
    fn embeddings_are_ring_homomorphisms() {
        let tower = FieldTower::for_parameter(1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (d, m) in [(3, 12), (4, 12), (2, 4), (2, 20), (5, 20), (4, 20), (10, 20)] {
            for _ in 0..100 {
                let a = FieldElement::new(d, rng.gen_range(0..1u64 << d));
                let b = FieldElement::new(d, rng.gen_range(0..1u64 << d));
                let ea = tower.embed(a, m).unwrap();
                let eb = tower.embed(b, m).unwrap();
                assert_eq!(tower.embed(a + b, m).unwrap(), ea + eb);
                assert_eq!(tower.embed(a * b, m).unwrap(), ea * eb);
                assert_eq!(tower.embed(a.frobenius(1), m).unwrap(), ea.frobenius(1));
            }
        }
    }

    #[test]
    fn embeddings_are_injective() {
        let tower = FieldTower::new(&[]).unwrap();
        let images: BTreeSet<_> = FieldElement::all(4)
            .map(|a| tower.embed(a, 12).unwrap())
            .collect();
        assert_eq!(images.len(), 16);
    }

    #[test]
    fn chains_compose() {
        let tower = FieldTower::for_parameter(2).unwrap();
        for (d, e, m) in [(2, 4, 20), (2, 10, 20), (5, 10, 20), (2, 4, 12), (3, 12, 12)] {
            if e == m {
                continue;
            }
            for a in FieldElement::all(d) {
                let direct = tower.embed(a, m).unwrap();
                let via = tower.embed(tower.embed(a, e).unwrap(), m).unwrap();
                assert_eq!(direct, via, "{d}|{e}|{m}");
            }
        }
    }

    #[test]
    fn missing_embedding_is_an_error() {
        let tower = FieldTower::new(&[]).unwrap();
        assert!(tower.embed(FieldElement::one(3), 4).is_err());
    }
}
