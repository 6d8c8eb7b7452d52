//! Class data for Sz(q), B2(q) and the outer classes of B2(q)⋊⟨σ⟩, explicit
//! enumeration of Sz(q) at small q, and σ-twisted conjugacy in B(q).

mod classes;
mod enumerate;
mod params;
mod twisted;

pub use classes::{
    b2_class_data, b2_shape_counts, outer_class_data, pair_classes, pair_orbit_min, sz_class_data,
    B2Class, ClassData,
    OuterClass, SzClass,
};
pub use enumerate::{
    closure, enumerate_sz, rho0, sigma_fixed_monomial, sigma_fixed_torus,
    sigma_fixed_unipotents, EnumClass, EnumeratedGroup, DEFAULT_BUDGET,
};
pub use params::{orbit_min, orbit_representatives, Params};
pub use twisted::{
    twisted_conjugate_brute, twisted_conjugate_test, twisted_stabilizer_order,
    unipotent_outer_class, unipotent_outer_reps,
};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sz8_enumeration() {
        let g = enumerate_sz(1, DEFAULT_BUDGET).unwrap();
        assert_eq!(g.order(), 29120);
        assert_eq!(g.classes.len(), 11);
        let mut cents: Vec<u64> = g.classes.iter().map(|c| c.centralizer_order).collect();
        cents.sort_unstable();
        assert_eq!(cents, vec![5, 7, 7, 7, 13, 13, 13, 16, 16, 64, 29120]);
        let p = Params::new(1).unwrap();
        for c in &g.classes {
            assert_eq!(c.rep.sigma(1), c.rep);
            let sym = SzClass::all(&p)
                .into_iter()
                .find(|s| s.label() == c.label)
                .unwrap();
            assert_eq!(sym.centralizer_order(&p), c.centralizer_order as u128, "{}", c.label);
        }
        for &k in g.elements.iter().step_by(97) {
            let x = crate::chevalley::GroupElement::from_key(k, 3);
            assert_eq!(x.sigma(1), x);
        }
    }
}
