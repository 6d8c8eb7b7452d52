use rand::Rng;
use serde::Serialize;

use super::{GroupElement, Root};
use crate::gf2::FieldElement;

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub relation: &'static str,
    pub trials: usize,
    pub passed: usize,
    pub witness: Option<String>,
}

impl RelationCheck {
    pub fn ok(&self) -> bool {
        self.passed == self.trials
    }
}

type Relation = (
    &'static str,
    fn(FieldElement, FieldElement, FieldElement, FieldElement) -> (GroupElement, GroupElement),
);

fn x(r: Root, t: FieldElement) -> GroupElement {
    GroupElement::x(r, t)
}

fn h(z1: FieldElement, z2: FieldElement) -> GroupElement {
    GroupElement::h(z1, z2).expect("nonzero torus parameters")
}

const RELATIONS: [Relation; 8] = [
    ("x_a(u)x_b(v) = x_b(v)x_a(u)x_{a+b}(uv)x_{2a+b}(u^2v)", |u, v, _, _| {
        (
            x(Root::A, u).mul(&x(Root::B, v)),
            x(Root::B, v)
                .mul(&x(Root::A, u))
                .mul(&x(Root::AB, u * v))
                .mul(&x(Root::TwoAB, u * u * v)),
        )
    }),
    ("x_{a+b}(u)x_{2a+b}(v) = x_{2a+b}(v)x_{a+b}(u)", |u, v, _, _| {
        (
            x(Root::AB, u).mul(&x(Root::TwoAB, v)),
            x(Root::TwoAB, v).mul(&x(Root::AB, u)),
        )
    }),
    ("h x_a(u) h^-1 = x_a(z1 u z2^-1)", |u, _, z1, z2| {
        (
            x(Root::A, u).conjugate_by(&h(z1, z2)),
            x(Root::A, z1 * u * z2.inv().unwrap()),
        )
    }),
    ("h x_b(u) h^-1 = x_b(z2^2 u)", |u, _, z1, z2| {
        (x(Root::B, u).conjugate_by(&h(z1, z2)), x(Root::B, z2 * z2 * u))
    }),
    ("h x_{a+b}(u) h^-1 = x_{a+b}(z1 u z2)", |u, _, z1, z2| {
        (x(Root::AB, u).conjugate_by(&h(z1, z2)), x(Root::AB, z1 * u * z2))
    }),
    ("h x_{2a+b}(u) h^-1 = x_{2a+b}(z1^2 u)", |u, _, z1, z2| {
        (
            x(Root::TwoAB, u).conjugate_by(&h(z1, z2)),
            x(Root::TwoAB, z1 * z1 * u),
        )
    }),
    ("n_a h(z1,z2) n_a^-1 = h(z2,z1)", |_, _, z1, z2| {
        let m = z1.degree();
        (h(z1, z2).conjugate_by(&GroupElement::n_a(m)), h(z2, z1))
    }),
    ("n_b h(z1,z2) n_b^-1 = h(z1,z2^-1)", |_, _, z1, z2| {
        let m = z1.degree();
        (
            h(z1, z2).conjugate_by(&GroupElement::n_b(m)),
            h(z1, z2.inv().unwrap()),
        )
    }),
];

fn random_element<R: Rng>(m: u32, rng: &mut R, nonzero: bool) -> FieldElement {
    loop {
        let x = FieldElement::new(m, rng.gen_range(0..1u64 << m));
        if !nonzero || !x.is_zero() {
            return x;
        }
    }
}

/// Checks the eight defining relations on random parameters in GF(2^m).
pub fn verify_chevalley_relations<R: Rng>(m: u32, trials: usize, rng: &mut R) -> Vec<RelationCheck> {
    RELATIONS
        .iter()
        .map(|(name, rel)| {
            let mut passed = 0;
            let mut witness = None;
            for _ in 0..trials {
                let u = random_element(m, rng, false);
                let v = random_element(m, rng, false);
                let z1 = random_element(m, rng, true);
                let z2 = random_element(m, rng, true);
                let (lhs, rhs) = rel(u, v, z1, z2);
                if lhs == rhs {
                    passed += 1;
                } else if witness.is_none() {
                    witness = Some(format!(
                        "u={} v={} z1={} z2={}",
                        u.bits(),
                        v.bits(),
                        z1.bits(),
                        z2.bits()
                    ));
                }
            }
            RelationCheck {
                relation: name,
                trials,
                passed,
                witness,
            }
        })
        .collect()
}
