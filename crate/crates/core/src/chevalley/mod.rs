//! Sp4 over binary fields: Chevalley generators, the graph endomorphism α,
//! the twisted Frobenius F = F_θ ∘ α and unipotent coordinates.

mod coords;
mod element;
mod relations;

pub use coords::{unipotent_decompose, UnipotentCoords};
pub use element::{GroupElement, Matrix, Root, Token};
pub use relations::{verify_chevalley_relations, RelationCheck};

use crate::gf2::FieldElement;

/// Compares the matrix-level α with the generator table at every t, z1, z2 in
/// GF(2^m). Returns (checks, failures).
pub fn verify_alpha_images(m: u32) -> (usize, Vec<String>) {
    let mut checks = 0;
    let mut failures = Vec::new();
    let mut check = |name: String, g: GroupElement| {
        checks += 1;
        let expected = g.alpha_by_word().expect("generator has a word").expect("valid word");
        if g.alpha() != expected {
            failures.push(name);
        }
    };
    for t in FieldElement::all(m) {
        for r in Root::ALL {
            check(format!("{}({})", r.name(), t.bits()), GroupElement::x(r, t));
        }
    }
    for z1 in FieldElement::all_nonzero(m) {
        for z2 in FieldElement::all_nonzero(m) {
            check(
                format!("h({},{})", z1.bits(), z2.bits()),
                GroupElement::h(z1, z2).expect("nonzero"),
            );
        }
    }
    check("na".into(), GroupElement::n_a(m));
    check("nb".into(), GroupElement::n_b(m));
    (checks, failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fe(m: u32, b: u64) -> FieldElement {
        FieldElement::new(m, b)
    }

    fn random_word<R: Rng>(m: u32, len: usize, rng: &mut R) -> GroupElement {
        let mut g = GroupElement::identity(m);
        for _ in 0..len {
            let t = fe(m, rng.gen_range(0..1u64 << m));
            let tok = match rng.gen_range(0..10) {
                0 => Token::Na,
                1 => Token::Nb,
                2 => Token::H(fe(m, rng.gen_range(1..1u64 << m)), fe(m, rng.gen_range(1..1u64 << m))),
                k => Token::X(Root::ALL[k - 2], t),
            };
            g = g.mul(&GroupElement::gen(tok, m).unwrap());
        }
        g
    }

    #[test]
    fn generators() {
        let m = 3;
        assert!(GroupElement::x(Root::A, FieldElement::zero(m)).is_identity());
        let (t, s) = (fe(m, 3), fe(m, 6));
        assert_eq!(
            GroupElement::x(Root::A, t).mul(&GroupElement::x(Root::A, s)),
            GroupElement::x(Root::A, t + s)
        );
        assert!(GroupElement::n_a(m).mul(&GroupElement::n_a(m)).is_identity());
        assert!(GroupElement::h(FieldElement::zero(m), fe(m, 1)).is_err());
        let neg = GroupElement::x(Root::NegAB, t);
        let pos = GroupElement::x(Root::AB, t);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(neg.matrix()[i][j], pos.matrix()[j][i]);
            }
        }
    }

    #[test]
    fn relations_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for m in [3, 5] {
            for rep in verify_chevalley_relations(m, 1000, &mut rng) {
                assert!(rep.ok(), "{} failed: {:?}", rep.relation, rep.witness);
            }
        }
    }

    #[test]
    fn alpha_matches_generator_table() {
        let (checks, failures) = verify_alpha_images(3);
        assert!(failures.is_empty(), "{failures:?}");
        assert_eq!(checks, 8 * 8 + 49 + 2);
        let t = fe(3, 5);
        assert_eq!(
            GroupElement::x(Root::AB, t).alpha(),
            GroupElement::x(Root::TwoAB, t.square())
        );
        let (z1, z2) = (fe(3, 3), fe(3, 6));
        assert_eq!(
            GroupElement::h(z1, z2).unwrap().alpha(),
            GroupElement::h(z1 * z2, z1 * z2.inv().unwrap()).unwrap()
        );
    }

    #[test]
    fn alpha_is_a_homomorphism_and_squares_to_frobenius() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..500 {
            let g = random_word(5, 6, &mut rng);
            let h = random_word(5, 6, &mut rng);
            assert_eq!(g.mul(&h).alpha(), g.alpha().mul(&h.alpha()));
            assert_eq!(g.alpha(), g.alpha_by_word().unwrap().unwrap());
        }
        for _ in 0..100 {
            let g = random_word(3, 8, &mut rng);
            assert_eq!(g.alpha().alpha(), g.frobenius(1));
        }
    }

    #[test]
    fn sigma_on_root_elements() {
        // n = 1: θ = 2, q = 8
        let u = fe(3, 3);
        assert_eq!(
            GroupElement::x(Root::A, u).sigma(1),
            GroupElement::x(Root::B, u.frobenius(2))
        );
        assert_eq!(
            GroupElement::x(Root::B, u).sigma(1),
            GroupElement::x(Root::A, u.frobenius(1))
        );
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let g = random_word(3, 8, &mut rng);
            assert_eq!(g.sigma(1).sigma(1), g);
            assert!(GroupElement::new(*g.sigma(1).matrix()).is_ok());
            let big = random_word(12, 5, &mut rng);
            assert_eq!(big.twisted_frobenius(1).twisted_frobenius(1), big.frobenius(3));
        }
    }

    #[test]
    fn fixed_unipotents_at_q8() {
        let mut count = 0;
        for a in FieldElement::all(3) {
            for b in FieldElement::all(3) {
                for c in FieldElement::all(3) {
                    for d in FieldElement::all(3) {
                        let u = UnipotentCoords::new(a, b, c, d).compose();
                        if u.sigma(1) == u {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(count, 64);
    }

    #[test]
    fn coordinates_round_trip() {
        let m = 3;
        let id = GroupElement::identity(m);
        let (c, z1, z2) = unipotent_decompose(&id).unwrap();
        assert_eq!(c, UnipotentCoords::zero(m));
        assert!(z1.is_one() && z2.is_one());
        let (t, z1, z2) = (fe(m, 5), fe(m, 3), fe(m, 7));
        let b = GroupElement::x(Root::A, t).mul(&GroupElement::h(z1, z2).unwrap());
        let (c, y1, y2) = unipotent_decompose(&b).unwrap();
        assert_eq!(c.t_a, t);
        assert_eq!((c.t_b, c.t_ab, c.t_2ab), (FieldElement::zero(m), FieldElement::zero(m), FieldElement::zero(m)));
        assert_eq!((y1, y2), (z1, z2));
        for u in FieldElement::all(m) {
            for v in FieldElement::all(m) {
                let s = fe(m, 6);
                let g = GroupElement::x(Root::A, u)
                    .mul(&GroupElement::x(Root::B, v))
                    .mul(&GroupElement::x(Root::A, s));
                let c = UnipotentCoords::of(&g).unwrap();
                assert_eq!(c, UnipotentCoords::new(u + s, v, s * v, s * s * v));
                assert_eq!(c.compose(), g);
            }
        }
        assert!(unipotent_decompose(&GroupElement::n_a(m)).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let g = GroupElement::x(Root::A, fe(3, 3)).mul(&GroupElement::n_b(3));
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.contains("\"word\":[\"xa(3)\",\"nb\"]"));
        let back: GroupElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
