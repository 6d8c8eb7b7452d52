use super::*;
use crate::chartab::{scalar_product, table_sz};
use crate::cyclotomic::CycNum;
use crate::shintani::zeta0;

fn r2(k: i64) -> CycNum {
    CycNum::sqrt2().scale(&num_rational::BigRational::from_integer(k.into()))
}

#[test]
fn weyl_group_and_extensions() {
    let w = WeylData::new().unwrap();
    assert_eq!(w.order(), 8);
    let labels: Vec<_> = w.f_classes.iter().map(|c| c.label.as_str()).collect();
    assert_eq!(labels, ["1", "w_a", "w_a w_b w_a"]);
    assert_eq!(w.f_classes.iter().map(|c| c.size).sum::<usize>(), 8);
    let one = CycNum::one;
    assert_eq!(w.class_values(0), vec![one(), one(), one()]);
    assert_eq!(w.class_values(1), vec![one(), -one(), -one()]);
    assert_eq!(w.class_values(2), vec![CycNum::zero(), r2(-1), r2(1)]);
    // reflection character: 2 at 1, -2 at w0, 0 elsewhere
    let w0 = w.elements.iter().position(|e| e.matrix == [[-1, 0], [0, -1]]).unwrap();
    for (i, v) in w.characters[2].on_w.iter().enumerate() {
        let want = if i == 0 { 2 } else if i == w0 { -2 } else { 0 };
        assert_eq!(*v, CycNum::from_int(want));
    }
}

#[test]
fn deligne_lusztig_characters() {
    let dl = dl_characters(1).unwrap();
    let sz = table_sz(1).unwrap();
    assert_eq!(dl.characters[0].degree, CycNum::from_int(65));
    assert_eq!(dl.characters[1].degree, CycNum::from_int(-91));
    assert!(!dl.wa_degree_matches_closed_form);
    let norms: Vec<_> = dl.characters.iter().map(|c| c.norm.clone()).collect();
    assert_eq!(norms, [2, 4, 4].map(CycNum::from_int));
    let rwa = dl.get("w_a").unwrap();
    assert_eq!(scalar_product(rwa, &sz.row("W").unwrap()).unwrap(), -CycNum::one());
}

#[test]
fn almost_characters_are_certified() {
    for n in [1, 2] {
        let a = almost_characters(n).unwrap();
        assert!(a.all_pass(), "n={n}");
    }
    let a = almost_characters(1).unwrap();
    let sz = table_sz(1).unwrap();
    let r3 = a.get("rho3").unwrap();
    let h = CycNum::sqrt2().scale(&num_rational::BigRational::new(1.into(), 2.into()));
    assert_eq!(scalar_product(r3, &sz.row("W").unwrap()).unwrap(), h);
    assert!(scalar_product(r3, &sz.row("St").unwrap()).unwrap().is_zero());
}

#[test]
fn roots_follow_the_parity_table() {
    let z = zeta0();
    for (n, w) in [(1, z.clone()), (2, z.conj())] {
        let r = roots_of_unity(n).unwrap();
        assert_eq!(r.get("W"), Some(&w), "n={n}");
        assert_eq!(r.get("Wbar"), Some(&w.conj()), "n={n}");
        assert!(r.matches_table && r.is_conjugate_pair());
        assert!(r.get("1").unwrap().is_one() && r.get("St").unwrap().is_one());
    }
}

#[test]
fn digne_michel_identity() {
    for n in [1, 2] {
        let r = verify_digne_michel(n).unwrap();
        assert!(r.all_pass(), "n={n}: {:?}", r.entries);
        assert_eq!(r.entries[2].sign, Some(-1));
    }
}

#[test]
fn fourier_matrices() {
    let (families, check) = fourier_matrix().unwrap();
    assert!(check.all_pass(), "{check:?}");
    assert_eq!(families[2].fourier, reference_m3());
    let data = family_data(1).unwrap();
    let json = serde_json::to_string(&data).unwrap();
    assert!(json.contains("\"F3\""));
    assert!(latex_report().unwrap().contains(r"\zeta_0"));
}
