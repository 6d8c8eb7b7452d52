//! Symbolic class lists for Sz(q), B2(q) and the outer classes of B2(q)⋊⟨σ⟩.

use serde::Serialize;

use super::params::{orbit_min, Params};

/// One conjugacy class with its centralizer order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassData {
    pub label: String,
    pub rep: String,
    pub centralizer_order: u128,
}

const TORUS_NAMES: [&str; 3] = ["pi0", "pi1", "pi2"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SzClass {
    One,
    Sigma0,
    Rho0,
    Rho0Inv,
    /// π_t^l for torus type t and l in E_t.
    Torus(usize, u64),
}

impl SzClass {
    pub fn all(p: &Params) -> Vec<SzClass> {
        let mut out = vec![SzClass::One, SzClass::Sigma0, SzClass::Rho0, SzClass::Rho0Inv];
        for t in 0..3 {
            out.extend(p.index_set(t).into_iter().map(|l| SzClass::Torus(t, l)));
        }
        out
    }

    pub fn label(&self) -> String {
        match self {
            SzClass::One => "1".into(),
            SzClass::Sigma0 => "sigma0".into(),
            SzClass::Rho0 => "rho0".into(),
            SzClass::Rho0Inv => "rho0^-1".into(),
            SzClass::Torus(t, l) => format!("{}^{}", TORUS_NAMES[*t], l),
        }
    }

    pub fn rep(&self) -> String {
        match self {
            SzClass::One => "1".into(),
            SzClass::Sigma0 => "x_{a+b} x_{2a+b}".into(),
            SzClass::Rho0 => "x_{a+b} x_b x_a".into(),
            SzClass::Rho0Inv => "x_a x_b x_{a+b}".into(),
            SzClass::Torus(..) => self.label(),
        }
    }

    pub fn centralizer_order(&self, p: &Params) -> u128 {
        let q = p.q as u128;
        match self {
            SzClass::One => p.sz_order(),
            SzClass::Sigma0 => q * q,
            SzClass::Rho0 | SzClass::Rho0Inv => 2 * q,
            SzClass::Torus(t, _) => p.torus_orders()[*t] as u128,
        }
    }

    pub fn data(&self, p: &Params) -> ClassData {
        ClassData {
            label: self.label(),
            rep: self.rep(),
            centralizer_order: self.centralizer_order(p),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OuterClass {
    One,
    Xa,
    Xab,
    XaXab,
    Torus(usize, u64),
}

impl OuterClass {
    pub fn all(p: &Params) -> Vec<OuterClass> {
        let mut out = vec![OuterClass::One, OuterClass::Xa, OuterClass::Xab, OuterClass::XaXab];
        for t in 0..3 {
            out.extend(p.index_set(t).into_iter().map(|l| OuterClass::Torus(t, l)));
        }
        out
    }

    pub fn label(&self) -> String {
        match self {
            OuterClass::One => "(1,σ)".into(),
            OuterClass::Xa => "(x_a,σ)".into(),
            OuterClass::Xab => "(x_{a+b},σ)".into(),
            OuterClass::XaXab => "(x_a x_{a+b},σ)".into(),
            OuterClass::Torus(t, l) => format!("({}^{},σ)", TORUS_NAMES[*t], l),
        }
    }

    pub fn centralizer_order(&self, p: &Params) -> u128 {
        let q = p.q as u128;
        match self {
            OuterClass::One => 2 * p.sz_order(),
            OuterClass::Xa | OuterClass::XaXab => 4 * q,
            OuterClass::Xab => 2 * q * q,
            OuterClass::Torus(t, _) => 2 * p.torus_orders()[*t] as u128,
        }
    }

    pub fn data(&self, p: &Params) -> ClassData {
        ClassData {
            label: self.label(),
            rep: self.label(),
            centralizer_order: self.centralizer_order(p),
        }
    }
}

/// Conjugacy classes of B2(q) in the shapes A, B, C, D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum B2Class {
    A1,
    A2,
    A31,
    A32,
    A41,
    A42,
    /// h(γ^i, γ^j)
    B1(u64, u64),
    /// h(τ^i, τ^(qi)), τ of order q²-1
    B2(u64),
    /// h(γ^i, ν^j)
    B3(u64, u64),
    /// h(ν^i, ν^j)
    B4(u64, u64),
    /// h(τ^i, τ^(qi)), τ of order q²+1
    B5(u64),
    /// semisimple C_k(i), k = 1..4
    C(u8, u64),
    /// C_k(i) times a root element, k = 1..4
    D(u8, u64),
}

pub fn pair_orbit_min(i: u64, j: u64, m: u64) -> (u64, u64) {
    let neg = |x: u64| (m - x) % m;
    let mut best = (i, j);
    for (a, b) in [(i, j), (j, i)] {
        for (x, y) in [(a, b), (neg(a), b), (a, neg(b)), (neg(a), neg(b))] {
            best = best.min((x, y));
        }
    }
    best
}

pub fn pair_classes(m: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for i in 1..m {
        for j in 1..m {
            if i == j || i + j == m {
                continue;
            }
            if pair_orbit_min(i, j, m) == (i, j) {
                out.push((i, j));
            }
        }
    }
    out
}

impl B2Class {
    pub fn all(p: &Params) -> Vec<B2Class> {
        let q = p.q;
        let (qm, qp, q2m, q2p) = (q - 1, q + 1, q * q - 1, q * q + 1);
        let mut out = vec![
            B2Class::A1,
            B2Class::A2,
            B2Class::A31,
            B2Class::A32,
            B2Class::A41,
            B2Class::A42,
        ];
        out.extend(pair_classes(qm).into_iter().map(|(i, j)| B2Class::B1(i, j)));
        out.extend(
            (1..q2m)
                .filter(|i| i % qm != 0 && i % qp != 0 && orbit_min(*i, q2m, &[1, q]) == *i)
                .map(B2Class::B2),
        );
        for i in (1..qm).filter(|&i| 2 * i <= qm) {
            for j in (1..qp).filter(|&j| 2 * j <= qp) {
                out.push(B2Class::B3(i, j));
            }
        }
        out.extend(pair_classes(qp).into_iter().map(|(i, j)| B2Class::B4(i, j)));
        out.extend(
            (1..q2p)
                .filter(|i| orbit_min(*i, q2p, &[1, q]) == *i)
                .map(B2Class::B5),
        );
        for shape in [B2Class::C as fn(u8, u64) -> B2Class, B2Class::D] {
            for k in 1..=4u8 {
                let m = if k <= 2 { qm } else { qp };
                out.extend((1..m).filter(|&i| 2 * i <= m).map(|i| shape(k, i)));
            }
        }
        out
    }

    pub fn label(&self) -> String {
        match self {
            B2Class::A1 => "A1".into(),
            B2Class::A2 => "A2".into(),
            B2Class::A31 => "A31".into(),
            B2Class::A32 => "A32".into(),
            B2Class::A41 => "A41".into(),
            B2Class::A42 => "A42".into(),
            B2Class::B1(i, j) => format!("B1({i},{j})"),
            B2Class::B2(i) => format!("B2({i})"),
            B2Class::B3(i, j) => format!("B3({i},{j})"),
            B2Class::B4(i, j) => format!("B4({i},{j})"),
            B2Class::B5(i) => format!("B5({i})"),
            B2Class::C(k, i) => format!("C{k}({i})"),
            B2Class::D(k, i) => format!("D{k}({i})"),
        }
    }

    pub fn rep(&self) -> String {
        match self {
            B2Class::A1 => "h(1,1)".into(),
            B2Class::A2 => "x_{2a+b}".into(),
            B2Class::A31 => "x_{a+b}".into(),
            B2Class::A32 => "x_{a+b} x_{2a+b}".into(),
            B2Class::A41 => "x_a x_b".into(),
            B2Class::A42 => "x_a x_b x_{2a+b}".into(),
            B2Class::B1(i, j) => format!("h(γ^{i},γ^{j})"),
            B2Class::B2(i) => format!("h(τ^{i},τ^{{q·{i}}}), |τ| = q²-1"),
            B2Class::B3(i, j) => format!("h(γ^{i},ν^{j})"),
            B2Class::B4(i, j) => format!("h(ν^{i},ν^{j})"),
            B2Class::B5(i) => format!("h(τ^{i},τ^{{q·{i}}}), |τ| = q²+1"),
            B2Class::C(k, i) | B2Class::D(k, i) => {
                let h = match k {
                    1 => format!("h(1,γ^{i})"),
                    2 => format!("h(γ^{i},γ^-{i})"),
                    3 => format!("h(1,ν^{i})"),
                    _ => format!("h(ν^{i},ν^-{i})"),
                };
                match (self, k) {
                    (B2Class::C(..), _) => h,
                    (_, 1 | 3) => format!("{h} x_{{2a+b}}"),
                    _ => format!("{h} x_{{a+b}}"),
                }
            }
        }
    }

    pub fn centralizer_order(&self, p: &Params) -> u128 {
        let q = p.q as u128;
        let (qm, qp) = (q - 1, q + 1);
        match self {
            B2Class::A1 => p.sp4_order(),
            B2Class::A2 | B2Class::A31 => q.pow(4) * (q * q - 1),
            B2Class::A32 => q.pow(4),
            B2Class::A41 | B2Class::A42 => 2 * q * q,
            B2Class::B1(..) => qm * qm,
            B2Class::B2(_) | B2Class::B3(..) => q * q - 1,
            B2Class::B4(..) => qp * qp,
            B2Class::B5(_) => q * q + 1,
            B2Class::C(k, _) => {
                if *k <= 2 {
                    q * qm * (q * q - 1)
                } else {
                    q * qp * (q * q - 1)
                }
            }
            B2Class::D(k, _) => {
                if *k <= 2 {
                    q * qm
                } else {
                    q * qp
                }
            }
        }
    }

    pub fn data(&self, p: &Params) -> ClassData {
        ClassData {
            label: self.label(),
            rep: self.rep(),
            centralizer_order: self.centralizer_order(p),
        }
    }
}

/// Class shapes of B2(q): (shape, number of classes, centralizer order).
pub fn b2_shape_counts(p: &Params) -> Vec<(String, u64, u128)> {
    let classes = B2Class::all(p);
    let mut out: Vec<(String, u64, u128)> = Vec::new();
    for c in &classes {
        let shape = c.label().split('(').next().unwrap_or_default().to_string();
        match out.iter_mut().find(|(s, _, _)| *s == shape) {
            Some(entry) => entry.1 += 1,
            None => out.push((shape, 1, c.centralizer_order(p))),
        }
    }
    out
}

pub fn sz_class_data(p: &Params) -> Vec<ClassData> {
    SzClass::all(p).iter().map(|c| c.data(p)).collect()
}

pub fn outer_class_data(p: &Params) -> Vec<ClassData> {
    OuterClass::all(p).iter().map(|c| c.data(p)).collect()
}

pub fn b2_class_data(p: &Params) -> Vec<ClassData> {
    B2Class::all(p).iter().map(|c| c.data(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_equation(classes: &[ClassData], order: u128) {
        let sum: u128 = classes.iter().map(|c| order / c.centralizer_order).sum();
        assert_eq!(sum, order);
        assert!(classes.iter().all(|c| order.is_multiple_of(c.centralizer_order)));
    }

    #[test]
    fn b2_class_equation() {
        for n in [1, 2] {
            let p = Params::new(n).unwrap();
            class_equation(&b2_class_data(&p), p.sp4_order());
        }
    }

    #[test]
    fn b2_shape_counts_match_formulas() {
        let p = Params::new(1).unwrap();
        let q = p.q;
        let expected = [
            ("B1", (q - 2) * (q - 4) / 8),
            ("B2", q * (q - 2) / 4),
            ("B3", q * (q - 2) / 4),
            ("B4", q * (q - 2) / 8),
            ("B5", q * q / 4),
            ("C1", (q - 2) / 2),
            ("C3", q / 2),
            ("D4", q / 2),
        ];
        let counts = b2_shape_counts(&p);
        for (shape, count) in expected {
            let got = counts.iter().find(|(s, _, _)| s == shape).unwrap().1;
            assert_eq!(got, count, "{shape}");
        }
        assert_eq!(
            B2Class::A32.centralizer_order(&p),
            4096
        );
    }

    #[test]
    fn sz_class_equation() {
        for n in [1, 2, 3] {
            let p = Params::new(n).unwrap();
            let classes = sz_class_data(&p);
            assert_eq!(classes.len() as u64, p.q + 3);
            class_equation(&classes, p.sz_order());
        }
    }

    #[test]
    fn outer_classes() {
        let p = Params::new(1).unwrap();
        let classes = outer_class_data(&p);
        assert_eq!(classes.len(), 11);
        assert_eq!(classes[0].centralizer_order, 58240);
        let pi1 = OuterClass::Torus(1, 1).centralizer_order(&p);
        assert_eq!(pi1, 26);
        let mut doubled: Vec<u128> = sz_class_data(&p).iter().map(|c| 2 * c.centralizer_order).collect();
        let mut outer: Vec<u128> = classes.iter().map(|c| c.centralizer_order).collect();
        doubled.sort_unstable();
        outer.sort_unstable();
        assert_eq!(doubled, outer);
    }
}
