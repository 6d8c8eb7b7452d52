//! Elements of GF(2^m) in a fixed polynomial basis.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest extension degree handled by [`FieldElement`].
pub const MAX_DEGREE: u32 = 48;

/// Published moduli, as bit patterns (bit i is the coefficient of x^i).
const PUBLISHED: &[(u32, u64)] = &[
    (2, 0b111),
    (3, 0b1011),
    (4, 0b1_0011),
    (5, 0b10_0101),
    (10, (1 << 10) | (1 << 3) | 1),
    (12, (1 << 12) | (1 << 6) | (1 << 4) | (1 << 1) | 1),
    (20, (1 << 20) | (1 << 3) | 1),
];

static MODULI: [OnceLock<u64>; MAX_DEGREE as usize + 1] =
    [const { OnceLock::new() }; MAX_DEGREE as usize + 1];

/// The modulus used for GF(2^m).
///
/// Degrees outside the published list use the smallest irreducible
/// polynomial of degree `m` when polynomials are ordered by their bit pattern.
pub fn modulus(m: u32) -> u64 {
    assert!(
        (1..=MAX_DEGREE).contains(&m),
        "field degree {m} out of range"
    );
    *MODULI[m as usize].get_or_init(|| {
        PUBLISHED
            .iter()
            .find(|(d, _)| *d == m)
            .map(|&(_, f)| f)
            .unwrap_or_else(|| smallest_irreducible(m))
    })
}

fn smallest_irreducible(m: u32) -> u64 {
    (1u64 << m..1u64 << (m + 1))
        .find(|&f| is_irreducible(f))
        .expect("irreducible polynomials exist in every degree")
}

fn poly_deg(f: u128) -> i32 {
    127 - f.leading_zeros() as i32
}

fn poly_mod(mut a: u128, f: u128) -> u128 {
    let df = poly_deg(f);
    while a != 0 && poly_deg(a) >= df {
        a ^= f << (poly_deg(a) - df);
    }
    a
}

fn poly_mulmod(a: u128, b: u128, f: u128) -> u128 {
    let mut acc = 0u128;
    let mut a = poly_mod(a, f);
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a = poly_mod(a << 1, f);
    }
    acc
}

fn poly_gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = poly_mod(a, b);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or irreducibility test over F2.
pub fn is_irreducible(f: u64) -> bool {
    let f = f as u128;
    let d = poly_deg(f);
    if d < 1 {
        return false;
    }
    if d == 1 {
        return true;
    }
    if f & 1 == 0 {
        return false;
    }
    let mut power = 0b10u128; // x
    for _ in 1..=d / 2 {
        power = poly_mulmod(power, power, f);
        if poly_gcd(f, power ^ 0b10) != 1 {
            return false;
        }
    }
    true
}

/// An element of GF(2^m).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    m: u32,
    bits: u64,
}

impl FieldElement {
    pub fn new(m: u32, bits: u64) -> Self {
        let _ = modulus(m);
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        FieldElement { m, bits: bits & mask }
    }

    pub fn zero(m: u32) -> Self {
        Self::new(m, 0)
    }

    pub fn one(m: u32) -> Self {
        Self::new(m, 1)
    }

    /// The class of x in GF(2)[x]/(f_m).
    pub fn generator(m: u32) -> Self {
        if m == 1 {
            // x is congruent to 0 modulo the degree-one modulus x
            return Self::new(1, modulus(1) & 1);
        }
        Self::new(m, 0b10)
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    pub fn from_bool(m: u32, b: bool) -> Self {
        Self::new(m, b as u64)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            Err(Error::DegreeMismatch(self.m, other.m))
        } else {
            Ok(())
        }
    }

    pub fn try_add(self, other: Self) -> Result<Self> {
        self.check(&other)?;
        Ok(self + other)
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        self.check(&other)?;
        Ok(self * other)
    }

    pub fn inv(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = (1u128 << self.m) - 1;
        Ok(self.pow(order - 1))
    }

    /// `self^k`; exponents are reduced modulo the order of the unit group.
    pub fn pow(self, k: u128) -> Self {
        if k == 0 {
            return Self::one(self.m);
        }
        if self.is_zero() {
            return self;
        }
        let order = (1u128 << self.m) - 1;
        let mut e = k % order;
        if e == 0 {
            e = order;
        }
        let mut base = self;
        let mut acc = Self::one(self.m);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    pub fn square(self) -> Self {
        self * self
    }

    /// `self^(2^k)`.
    pub fn frobenius(self, k: u32) -> Self {
        let mut x = self;
        for _ in 0..k % self.m {
            x = x.square();
        }
        x
    }

    /// Absolute trace to GF(2), returned as an element of GF(2).
    pub fn trace(self) -> FieldElement {
        let mut acc = self;
        let mut x = self;
        for _ in 1..self.m {
            x = x.square();
            acc += x;
        }
        debug_assert!(acc.bits <= 1);
        FieldElement::new(1, acc.bits)
    }

    /// +1 when X^2 + X + self has a root in the field, -1 otherwise.
    pub fn lambda(self) -> i32 {
        if self.trace().is_zero() {
            1
        } else {
            -1
        }
    }

    /// All elements of GF(2^m) in increasing bit order.
    pub fn all(m: u32) -> impl Iterator<Item = FieldElement> {
        assert!(m <= 24, "refusing to enumerate GF(2^{m})");
        (0..1u64 << m).map(move |b| FieldElement::new(m, b))
    }

    pub fn all_nonzero(m: u32) -> impl Iterator<Item = FieldElement> {
        Self::all(m).skip(1)
    }

    /// Smallest element (by bit pattern) generating the multiplicative group.
    pub fn primitive_element(m: u32) -> FieldElement {
        let order = (1u128 << m) - 1;
        let mut primes = Vec::new();
        let (mut rest, mut p) = (order, 2u128);
        while p * p <= rest {
            if rest % p == 0 {
                primes.push(p);
                while rest % p == 0 {
                    rest /= p;
                }
            }
            p += 1;
        }
        if rest > 1 {
            primes.push(rest);
        }
        (1..1u64 << m)
            .map(|b| FieldElement::new(m, b))
            .find(|g| primes.iter().all(|&p| !g.pow(order / p).is_one()))
            .expect("the multiplicative group is cyclic")
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.m, rhs.m, "field degree mismatch");
        FieldElement {
            m: self.m,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl std::ops::AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    // characteristic 2
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Self) -> Self {
        self + rhs
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        self
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.m, rhs.m, "field degree mismatch");
        let m = self.m;
        let f = modulus(m);
        let top = 1u64 << m;
        let mut a = self.bits;
        let mut b = rhs.bits;
        let mut acc = 0u64;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= f;
            }
        }
        FieldElement { m, bits: acc }
    }
}

impl std::ops::MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl std::ops::Div for FieldElement {
    type Output = FieldElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero")
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})[{:#x}]", self.m, self.bits)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.bits)
    }
}

#[derive(Serialize, Deserialize)]
struct FieldElementRepr {
    m: u32,
    bits: String,
    modulus: String,
}

impl Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FieldElementRepr {
            m: self.m,
            bits: format!("{:x}", self.bits),
            modulus: format!("{:x}", modulus(self.m)),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = FieldElementRepr::deserialize(d)?;
        if r.m == 0 || r.m > MAX_DEGREE {
            return Err(D::Error::custom(format!("unsupported degree {}", r.m)));
        }
        let f = u64::from_str_radix(&r.modulus, 16).map_err(D::Error::custom)?;
        if f != modulus(r.m) {
            return Err(D::Error::custom(format!(
                "modulus {} does not match the fixed modulus for degree {}",
                r.modulus, r.m
            )));
        }
        let bits = u64::from_str_radix(&r.bits, 16).map_err(D::Error::custom)?;
        if bits >> r.m != 0 {
            return Err(D::Error::custom("element not reduced"));
        }
        Ok(FieldElement::new(r.m, bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn published_moduli_are_irreducible() {
        for &(m, f) in PUBLISHED {
            assert!(is_irreducible(f), "degree {m}");
        }
        assert!(!is_irreducible(0b101)); // x^2 + 1
        assert!(!is_irreducible((1 << 4) | (1 << 2) | 1));
    }

    #[test]
    fn primitive_elements() {
        assert!(FieldElement::primitive_element(1).is_one());
        for m in [2u32, 3, 5, 7, 12] {
            let g = FieldElement::primitive_element(m);
            let mut x = g;
            let mut order = 1u64;
            while !x.is_one() {
                x *= g;
                order += 1;
            }
            assert_eq!(order, (1 << m) - 1, "m={m}");
        }
    }

    #[test]
    fn searched_moduli() {
        assert_eq!(modulus(1), 0b10);
        assert_eq!(modulus(6), 0b100_0011); // x^6 + x + 1
        assert_eq!(modulus(7), 0b1000_0011);
        assert!(is_irreducible(modulus(40)));
    }

    #[test]
    fn characteristic_two() {
        let one = FieldElement::one(1);
        assert!((one + one).is_zero());
    }

    #[test]
    fn cube_of_generator_in_gf8() {
        let g = FieldElement::generator(3);
        assert_eq!(g * g * g, g + FieldElement::one(3));
    }

    #[test]
    fn inverses_in_gf4096() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let a = FieldElement::new(12, rng.gen_range(1..4096));
            assert!((a * a.inv().unwrap()).is_one());
        }
        assert_eq!(FieldElement::zero(12).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn degree_mismatch() {
        let a = FieldElement::one(3);
        let b = FieldElement::one(4);
        assert_eq!(a.try_add(b), Err(Error::DegreeMismatch(3, 4)));
        assert_eq!(a.try_mul(b), Err(Error::DegreeMismatch(3, 4)));
    }

    #[test]
    fn pow_large_exponents() {
        let g = FieldElement::generator(5);
        assert!(g.pow(31).is_one());
        assert_eq!(g.pow(u128::MAX), g.pow(u128::MAX % 31));
        assert!(FieldElement::zero(5).pow(0).is_one());
    }

    #[test]
    fn frobenius_is_identity_after_m_steps() {
        for a in FieldElement::all(5) {
            assert_eq!(a.frobenius(5), a);
            assert_eq!(a.frobenius(2), a.pow(4));
        }
    }

    #[test]
    fn trace_values() {
        assert!(FieldElement::zero(3).trace().is_zero());
        assert!(FieldElement::one(3).trace().is_one());
        let kernel = FieldElement::all(3).filter(|a| a.trace().is_zero()).count();
        assert_eq!(kernel, 4);
    }

    #[test]
    fn lambda_values() {
        assert_eq!(FieldElement::zero(3).lambda(), 1);
        assert_eq!(FieldElement::one(3).lambda(), -1);
        let sum: i32 = FieldElement::all(3).map(|t| t.lambda()).sum();
        assert_eq!(sum, 0);
        let sum: i32 = FieldElement::all(5).map(|t| t.lambda()).sum();
        assert_eq!(sum, 0);
    }

    #[test]
    fn serde_roundtrip_and_validation() {
        let a = FieldElement::new(5, 0b10110);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"m":5,"bits":"16","modulus":"25"}"#);
        let b: FieldElement = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert!(serde_json::from_str::<FieldElement>(r#"{"m":5,"bits":"16","modulus":"29"}"#).is_err());
    }
}
