//! Rigorous decimal enclosures of the complex embedding ζ_N ↦ exp(2πi/N).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::CycNum;

/// A box centered at `re + i·im` with half-width `radius` in both coordinates.
/// All three are fixed-point integers scaled by 2^bits.
#[derive(Debug, Clone)]
pub struct ComplexInterval {
    bits: u32,
    re: BigInt,
    im: BigInt,
    radius: BigInt,
}

// Per-root error bound in ulps for the series evaluation below.
const ROOT_ERROR_ULPS: u32 = 1 << 10;

fn atan_inv(x: u64, bits: u32) -> BigInt {
    let one = BigInt::one() << bits;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = &one / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

fn pi(bits: u32) -> BigInt {
    atan_inv(5, bits) * 16 - atan_inv(239, bits) * 4
}

fn mul_fixed(a: &BigInt, b: &BigInt, bits: u32) -> BigInt {
    (a * b) >> bits
}

/// (cos t, sin t) in fixed point for |t| ≤ π.
fn cos_sin(t: &BigInt, bits: u32) -> (BigInt, BigInt) {
    let one = BigInt::one() << bits;
    let (mut c, mut s) = (BigInt::zero(), BigInt::zero());
    let mut term = one;
    let mut k = 0u64;
    // term = t^k / k!
    while !term.is_zero() {
        match k % 4 {
            0 => c += &term,
            1 => s += &term,
            2 => c -= &term,
            _ => s -= &term,
        }
        k += 1;
        term = mul_fixed(&term, t, bits) / BigInt::from(k);
    }
    (c, s)
}

fn rational_fixed(r: &BigRational, x: &BigInt) -> BigInt {
    (r.numer() * x).div_floor(r.denom())
}

impl ComplexInterval {
    pub fn of(z: &CycNum, digits: u32) -> Self {
        let digits = digits.max(15);
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 40;
        let n = z.conductor() as i64;
        let two_pi = pi(bits) * 2;
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        let mut radius = BigInt::zero();
        for (e, c) in z.terms() {
            let mut e = e as i64;
            if 2 * e > n {
                e -= n;
            }
            let t = (&two_pi * BigInt::from(e)) / BigInt::from(n);
            let (cs, sn) = cos_sin(&t, bits);
            re += rational_fixed(c, &cs);
            im += rational_fixed(c, &sn);
            let mag = c.abs().ceil().to_integer();
            radius += mag * ROOT_ERROR_ULPS + 2;
        }
        ComplexInterval {
            bits,
            re,
            im,
            radius,
        }
    }

    fn to_f64(&self, x: &BigInt) -> f64 {
        let shift = self.bits.saturating_sub(60);
        let scaled = (x >> shift).to_f64().unwrap_or(f64::NAN);
        scaled / 2f64.powi((self.bits - shift) as i32)
    }

    pub fn re(&self) -> f64 {
        self.to_f64(&self.re)
    }

    pub fn im(&self) -> f64 {
        self.to_f64(&self.im)
    }

    pub fn radius(&self) -> f64 {
        self.to_f64(&self.radius)
    }

    /// True if the real point (x, y) lies in the box.
    pub fn contains(&self, x: f64, y: f64) -> bool {
        let r = self.radius() + f64::EPSILON * 4.0 * (1.0 + x.abs() + y.abs());
        (self.re() - x).abs() <= r && (self.im() - y).abs() <= r
    }

    /// True if the boxes intersect.
    pub fn overlaps(&self, other: &ComplexInterval) -> bool {
        let r = self.radius() + other.radius() + 1e-12;
        (self.re() - other.re()).abs() <= r && (self.im() - other.im()).abs() <= r
    }

    fn decimal(&self, x: &BigInt, digits: u32) -> String {
        let scale = BigInt::from(10).pow(digits);
        let v = (x * &scale).div_floor(&(BigInt::one() << self.bits));
        let neg = v.is_negative();
        let v = v.abs();
        let (int, frac) = v.div_rem(&scale);
        format!(
            "{}{}.{:0>width$}",
            if neg { "-" } else { "" },
            int,
            frac.to_string(),
            width = digits as usize
        )
    }

    /// Real and imaginary centers with `digits` decimals.
    pub fn to_decimal(&self, digits: u32) -> (String, String) {
        (self.decimal(&self.re, digits), self.decimal(&self.im, digits))
    }
}

impl fmt::Display for ComplexInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_decimal(20);
        write!(f, "{re} + {im}i ± {:.1e}", self.radius())
    }
}

impl CycNum {
    /// Enclosure of the complex value with at least `digits` correct decimals.
    pub fn to_complex(&self, digits: u32) -> ComplexInterval {
        ComplexInterval::of(self, digits)
    }
}
