//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! Values are stored in a fixed Z-basis of Z[ζ_N] (see `conductor`) and
//! always at the smallest conductor that contains them, so structural
//! equality is value equality.

mod complex;
mod conductor;
mod num;
mod serde_impl;

pub use complex::ComplexInterval;
pub use num::{conductor_bound, set_conductor_bound, CycNum};

/// ζ_N^k.
pub fn cyc_root(n: u64, k: i64) -> crate::Result<CycNum> {
    CycNum::root(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn z(n: u64, k: i64) -> CycNum {
        cyc_root(n, k).unwrap()
    }

    fn zeta0() -> CycNum {
        (CycNum::from_int(-1) - CycNum::i()) * CycNum::sqrt2() * CycNum::from_frac(1, 2)
    }

    #[test]
    fn i_squared() {
        assert_eq!(z(4, 1) * z(4, 1), CycNum::from_int(-1));
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        assert!((z(3, 0) + z(3, 1) + z(3, 2)).is_zero());
    }

    #[test]
    fn sqrt2_squared() {
        assert_eq!(CycNum::sqrt2() * CycNum::sqrt2(), CycNum::from_int(2));
        assert_eq!(z(8, 1) + z(8, 7), CycNum::sqrt2());
    }

    #[test]
    fn zeta0_is_a_primitive_eighth_root() {
        let z0 = zeta0();
        assert_eq!(z0, z(8, 5));
        assert!((&z0 * &z0.conj()).is_one());
        assert_eq!(&z0.conj() + &z0, -CycNum::sqrt2());
    }

    #[test]
    fn algebraic_integers() {
        assert!(CycNum::sqrt2().is_algebraic_integer());
        assert!(!CycNum::from_frac(1, 2).is_algebraic_integer());
        assert!(!(CycNum::sqrt2() * CycNum::from_frac(1, 2)).is_algebraic_integer());
    }

    #[test]
    fn minimal_conductor() {
        // ζ_9^3 = ζ_3
        assert_eq!(z(9, 3).conductor(), 3);
        // ζ_6 = -ζ_3^2
        assert_eq!(z(6, 1), -z(3, 2));
        assert_eq!(z(5, 0).conductor(), 1);
        // (ζ_15 + ζ_15^-1) - (ζ_15 + ζ_15^-1) lands at 1
        let a = z(15, 1) + z(15, 14);
        assert!((&a - &a).is_zero());
        assert_eq!((z(15, 5) * z(15, 10)).conductor(), 1);
        // the real subfield of Q(ζ_5) needs conductor 5
        assert_eq!((z(5, 1) + z(5, 4)).conductor(), 5);
    }

    #[test]
    fn prime_root_sums_vanish() {
        for n in [7u64, 9, 13, 5, 65, 63, 8] {
            for (p, _) in conductor::factor(n) {
                let s: CycNum = (0..p).map(|j| z(n, (j * n / p) as i64)).sum();
                assert!(s.is_zero(), "N={n} p={p}");
            }
        }
    }

    #[test]
    fn galois_and_conj() {
        let a = z(7, 1) + z(7, 2) * CycNum::from_int(3);
        assert_eq!(a.conj().conj(), a);
        assert_eq!(a.galois(2).unwrap().galois(4).unwrap(), a);
        assert!(a.galois(7).is_err());
        let real = z(7, 1) + z(7, 6);
        assert_eq!(real.conj(), real);
    }

    #[test]
    fn inverse() {
        let a = CycNum::sqrt2() + CycNum::i();
        assert!((&a * &a.inv().unwrap()).is_one());
        assert!(CycNum::zero().inv().is_err());
    }

    #[test]
    fn conductor_bound_is_enforced() {
        assert!(cyc_root(2_000_003, 1).is_err());
        assert!(z(997, 1).checked_mul(&z(991, 1)).is_ok());
        assert!(z(1009, 1).checked_add(&z(1013, 1)).is_err());
    }

    #[test]
    fn complex_embeddings() {
        assert!(z(4, 1).to_complex(20).contains(0.0, 1.0));
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let z0 = zeta0().to_complex(20);
        assert!(z0.contains(-h, -h));
        assert!(z0.radius() < 1e-15);
        let (re, im) = z0.to_decimal(20);
        assert_eq!(re, "-0.70710678118654752441");
        assert_eq!(im, "-0.70710678118654752441");
        let real_sum = (z(7, 1) + z(7, 6)).to_complex(15);
        assert!(real_sum.im().abs() <= real_sum.radius());
    }

    #[test]
    fn serde_form() {
        let a = z(8, 1) * CycNum::from_frac(3, 2);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"N":8,"terms":[[1,3,2]]}"#);
        let back: CycNum = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        let zero: CycNum = serde_json::from_str(r#"{"N":5,"terms":[[0,1,1],[1,1,1],[2,1,1],[3,1,1],[4,1,1]]}"#).unwrap();
        assert!(zero.is_zero());
    }

    const CONDUCTORS: [u64; 8] = [7, 9, 13, 5, 65, 63, 8, 32760];

    fn element() -> impl Strategy<Value = CycNum> {
        (
            prop::sample::select(CONDUCTORS.to_vec()),
            prop::collection::vec((0i64..32760, -5i64..6, 1i64..4), 0..5),
        )
            .prop_map(|(n, terms)| {
                terms
                    .into_iter()
                    .map(|(k, a, b)| cyc_root(n, k).unwrap() * CycNum::from_frac(a, b))
                    .sum()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn ring_axioms(a in element(), b in element(), c in element()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            let back: CycNum = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
            prop_assert_eq!(back, a.clone());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn complex_compatibility(a in element(), b in element()) {
            let (ca, cb) = (a.to_complex(15), b.to_complex(15));
            let sum = (&a + &b).to_complex(15);
            prop_assert!(sum.contains(ca.re() + cb.re(), ca.im() + cb.im()));
            let prod = (&a * &b).to_complex(15);
            let (re, im) = (ca.re() * cb.re() - ca.im() * cb.im(), ca.re() * cb.im() + ca.im() * cb.re());
            prop_assert!((prod.re() - re).abs() < 1e-9 && (prod.im() - im).abs() < 1e-9);
            let norm = (&a * &a.conj()).to_complex(15);
            prop_assert!(norm.re() > -1e-9);
        }
    }

    #[test]
    fn rational_embedding() {
        let r = BigRational::new(7.into(), 3.into());
        let a = CycNum::from_rational(r.clone());
        assert_eq!(a.as_rational(), Some(r));
        assert_eq!(a.conductor(), 1);
    }
}
