use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;
use crate::cyclotomic::CycNum;
use crate::groups::{rho0, unipotent_outer_class, OuterClass, Params, SzClass, DEFAULT_BUDGET};

fn gram_is_identity(t: &GenericTable) {
    let fs = t.functions();
    for (i, (a, f)) in fs.iter().enumerate() {
        for (b, g) in &fs[i..] {
            let s = scalar_product(f, g).unwrap();
            let want = if a == b { CycNum::one() } else { CycNum::zero() };
            assert_eq!(s, want, "<{a},{b}> at n={}", t.n);
        }
    }
}

fn column_orthogonality(t: &GenericTable, scale: u128) {
    let k = t.classes.len();
    for c in 0..k {
        for d in c..k {
            let s: CycNum = t
                .rows
                .iter()
                .map(|r| &r.values[c] * &r.values[d].conj())
                .sum();
            let want = if c == d {
                CycNum::from_rational(BigRational::new(
                    BigInt::from(t.classes[c].centralizer_order),
                    BigInt::from(scale),
                ))
            } else {
                CycNum::zero()
            };
            assert_eq!(s, want, "columns {} {}", t.classes[c].label, t.classes[d].label);
        }
    }
}

#[test]
fn sz_orthogonality() {
    for n in [1, 2] {
        let t = table_sz(n).unwrap();
        assert_eq!(t.rows.len(), t.classes.len());
        gram_is_identity(&t);
        column_orthogonality(&t, 1);
    }
}

#[test]
fn outer_orthogonality() {
    for n in [1, 2] {
        let t = table_outer(n).unwrap();
        assert_eq!(t.rows.len(), t.classes.len());
        gram_is_identity(&t);
        column_orthogonality(&t, 2);
    }
}

#[test]
fn b2_rows_orthonormal() {
    let t = table_b2_partial(1).unwrap();
    gram_is_identity(&t);
}

#[test]
fn reference_values() {
    let sz = table_sz(1).unwrap();
    assert_eq!(sz.value("W", "1"), Some(&CycNum::from_int(14)));
    let outer = table_outer(1).unwrap();
    assert_eq!(outer.value("theta5", "(1,σ)"), Some(&CycNum::from_int(14)));
    assert_eq!(outer.value("chi_pi1(1)", "(x_{a+b},σ)"), Some(&CycNum::from_int(3)));
    let b2 = table_b2_partial(1).unwrap();
    assert_eq!(b2.value("theta1", "A1"), Some(&CycNum::from_int(324)));
}

#[test]
fn sz_fusion_in_outer_classes() {
    let n = 1;
    let r = rho0(3);
    let cases = [
        (r.mul(&r), OuterClass::One),
        (r.clone(), OuterClass::Xab),
        (r.inverse(), OuterClass::Xab),
    ];
    for (g, want) in cases {
        assert_eq!(unipotent_outer_class(&g, n).unwrap(), want);
    }
}

fn sz_coordinates(f: &ClassFunction, sz: &GenericTable) -> Vec<(String, CycNum)> {
    sz.functions()
        .into_iter()
        .map(|(name, g)| (name, scalar_product(f, &g).unwrap()))
        .collect()
}

#[test]
fn restrictions_to_sz_are_characters() {
    for n in [1, 2] {
        let p = Params::new(n).unwrap();
        let sz = table_sz(n).unwrap();
        let b2 = table_b2_partial(n).unwrap();
        for (name, _) in b2.functions() {
            let res = restrict_to_sz(&p, &name).unwrap();
            for (s, m) in sz_coordinates(&res, &sz) {
                let k = m.as_integer().unwrap_or_else(|| panic!("<{name},{s}> = {m}"));
                assert!(k >= 0.into(), "<{name},{s}> = {m}");
            }
        }
        // outer rows restrict to virtual characters of Sz(q)
        for (name, f) in table_outer(n).unwrap().functions() {
            let res = restrict(&f, Route::SzTildeToGTilde).unwrap();
            for (s, m) in sz_coordinates(&res, &sz) {
                assert!(m.as_integer().is_some(), "<{name},{s}> = {m}");
            }
        }
    }
}

#[test]
fn w_in_restriction_of_chi5() {
    let n = 1;
    let p = Params::new(n).unwrap();
    let sz = table_sz(n).unwrap();
    let w = sz.row("W").unwrap();
    let (_, _, ks) = b2_character_parameters(&p);
    let mults: Vec<CycNum> = ks
        .iter()
        .map(|k| scalar_product(&restrict_to_sz(&p, &format!("chi5({k})")).unwrap(), &w).unwrap())
        .collect();
    assert!(mults.contains(&CycNum::from_int(p.theta as i64 + 1)), "{mults:?}");
}

#[test]
fn sigma_stable_torus_classes() {
    let p = Params::new(1).unwrap();
    for c in SzClass::all(&p) {
        let b = sz_class_in_b2(&p, &c).unwrap();
        if let Some(s) = sigma_on_b2_class(&p, &b) {
            assert_eq!(s, b, "{}", c.label());
        }
    }
}

#[test]
fn induction_from_sz_is_integral() {
    let n = 1;
    let outer = table_outer(n).unwrap();
    for (a, f) in table_sz(n).unwrap().functions() {
        let ind = induce(&f, Route::SzTildeToGTilde).unwrap();
        for (b, g) in outer.functions() {
            let m = scalar_product(&ind, &g).unwrap();
            assert!(m.as_integer().is_some(), "<Ind {a},{b}> = {m}");
        }
    }
}

#[test]
fn u0_routes_need_lambda() {
    let f = table_sz(1).unwrap().row("1").unwrap();
    assert!(matches!(
        induce(&f, Route::U0ToB),
        Err(crate::error::Error::RouteUnsupported(_))
    ));
}

#[test]
fn u0_closed_forms_match_brute_force() {
    let bad = check_u0_induction(1, DEFAULT_BUDGET).unwrap();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn derivation_reproduces_outer_table() {
    for n in [1, 2] {
        let (derived, log) = derive_outer_table(n).unwrap_or_else(|e| panic!("n={n}: {e}"));
        assert_eq!(derived.rows, table_outer(n).unwrap().rows);
        let step = |name: &str| log.find(name).unwrap().detail.clone();
        assert!(step("Ind_B~^G~ 1").ends_with("outer norm 2, full norm 5"));
        assert!(step("chi_pi1: sign rule").starts_with("f1 rejected"));
        assert!(step("theta1+theta5").starts_with("a = b = 1;"));
    }
    let (_, log) = derive_outer_table(1).unwrap();
    assert!(log.find("Ind_U0~^B~ λ(1,1)").unwrap().detail.ends_with("(n, nε) = (3, 1)"));
}

#[test]
fn frobenius_reciprocity_from_borel() {
    for n in [1, 2] {
        let r = check_frobenius_reciprocity(n).unwrap();
        assert!(r.failures.is_empty(), "{:?}", r.failures);
        assert!(r.checked > 0);
        for row in ["1", "theta4"] {
            assert!(r.principal_series.iter().any(|x| x == row), "n={n}: {:?}", r.principal_series);
        }
    }
}
