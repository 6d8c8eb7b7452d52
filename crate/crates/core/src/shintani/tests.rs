use super::*;
use crate::chartab::{scalar_product, table_outer, table_sz};
use crate::error::Error;
use crate::groups::{OuterClass, SzClass};

#[test]
fn witnesses_substitute_back() {
    for n in [1, 2] {
        let nm = norm_map(n).unwrap();
        for (c, g) in sz_unipotent_reps(2 * n + 1) {
            let e = nm.entries.iter().find(|e| e.sz_class == c).unwrap();
            let w = e.witness.as_ref().unwrap();
            assert_eq!(w.degree, 4 * (2 * n + 1));
            assert!(verify_witness(&g, w).unwrap(), "n={n} {}", c.label());
        }
    }
}

#[test]
fn identity_has_trivial_witness() {
    let g = crate::chevalley::GroupElement::identity(3).without_word();
    let w = lang_solve_unipotent(&g, 1).unwrap();
    assert!(w.outer.is_identity());
}

#[test]
fn unipotent_images() {
    for (n, rho) in [(1, OuterClass::XaXab), (2, OuterClass::Xa)] {
        let nm = norm_map(n).unwrap();
        let img = |c| nm.image(&c).unwrap();
        assert_eq!(img(SzClass::One), Image::Class(OuterClass::One));
        assert_eq!(img(SzClass::Sigma0), Image::Class(OuterClass::Xab));
        assert_eq!(img(SzClass::Rho0), Image::Class(rho), "n={n}");
        // x_a x_b x_{a+b} itself goes to (x_a,σ) for odd n
        let other = if n == 1 { OuterClass::Xa } else { OuterClass::XaXab };
        assert_eq!(img(SzClass::Rho0Inv), Image::Class(other), "n={n}");
        assert!(nm.centralizer_violations().unwrap().is_empty());
        assert!(nm.is_bijective().unwrap());
    }
}

#[test]
fn descents_of_trivial_and_steinberg() {
    let nm = norm_map(1).unwrap();
    let outer = table_outer(1).unwrap();
    let sz = table_sz(1).unwrap();
    let sh = |name: &str| shintani_descent(&outer.row(name).unwrap(), &nm);
    assert_eq!(sh("1").unwrap(), sz.row("1").unwrap());
    assert_eq!(sh("theta4").unwrap(), sz.row("St").unwrap());
    assert!(matches!(sh("chi_pi0(1)"), Err(Error::TorusAmbiguity(_))));
}

#[test]
fn descent_is_linear_and_unit() {
    let nm = norm_map(1).unwrap();
    let outer = table_outer(1).unwrap();
    let t1 = outer.row("theta1").unwrap();
    let t5 = outer.row("theta5").unwrap();
    let s1 = shintani_descent(&t1, &nm).unwrap();
    let s5 = shintani_descent(&t5, &nm).unwrap();
    let sum = shintani_descent(&t1.try_add(&t5).unwrap(), &nm).unwrap();
    assert_eq!(sum, s1.try_add(&s5).unwrap());
    assert_eq!(shintani_descent(&t1.times_epsilon(), &nm).unwrap(), s1.neg());
    for s in [&s1, &s5] {
        assert!(scalar_product(s, s).unwrap().is_one());
    }
}

#[test]
fn theorem_coefficients() {
    for n in [1, 2] {
        let r = verify_thm41(n).unwrap();
        assert_eq!(r.checks.len(), 8);
        for c in &r.checks {
            assert!(c.pass, "n={n} <{},{}> = {} expected {}", c.descent, c.against, c.computed, c.expected);
        }
        assert!(r.all_pass());
    }
}
