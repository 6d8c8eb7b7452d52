use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::conductor::Conductor;
use crate::error::{Error, Result};

static CONDUCTOR_BOUND: AtomicU64 = AtomicU64::new(1_000_000);

/// Largest conductor any operation may produce.
pub fn conductor_bound() -> u64 {
    CONDUCTOR_BOUND.load(Ordering::Relaxed)
}

pub fn set_conductor_bound(bound: u64) {
    CONDUCTOR_BOUND.store(bound, Ordering::Relaxed);
}

/// An element of Q(ζ_N), kept in the canonical basis at its minimal conductor.
///
/// Equality and hashing are structural, which is sound because the
/// representation is unique.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycNum {
    n: u64,
    terms: BTreeMap<u64, BigRational>,
}

fn check_bound(n: u64) -> Result<()> {
    if n > conductor_bound() {
        Err(Error::ConductorTooLarge(n))
    } else {
        Ok(())
    }
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum {
            n: 1,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(0, r);
        }
        CycNum { n: 1, terms }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(k.into()))
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// ζ_N^k.
    pub fn root(n: u64, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("conductor must be positive".into()));
        }
        check_bound(n)?;
        let e = k.rem_euclid(n as i64) as u64;
        let mut raw = HashMap::new();
        raw.insert(e, BigRational::one());
        Ok(Self::canonicalize(n, raw))
    }

    /// Σ_k ζ_N^k over the given exponents.
    pub fn root_sum<I: IntoIterator<Item = i64>>(n: u64, exps: I) -> Result<Self> {
        check_bound(n)?;
        let mut raw: HashMap<u64, BigRational> = HashMap::new();
        for k in exps {
            let e = k.rem_euclid(n as i64) as u64;
            *raw.entry(e).or_insert_with(BigRational::zero) += BigRational::one();
        }
        Ok(Self::canonicalize(n, raw))
    }

    /// A primitive fourth root of unity.
    pub fn i() -> Self {
        Self::root(4, 1).expect("small conductor")
    }

    /// √2 realized as ζ_8 + ζ_8^(-1).
    pub fn sqrt2() -> Self {
        Self::root_sum(8, [1, 7]).expect("small conductor")
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// Canonical terms as (exponent, coefficient), sorted by exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// The rational value, if this number is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.n {
            1 => Some(self.terms.get(&0).cloned().unwrap_or_else(BigRational::zero)),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn is_algebraic_integer(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Rewrites raw terms at conductor `n` and reduces to the minimal conductor.
    pub(crate) fn canonicalize(n: u64, raw: HashMap<u64, BigRational>) -> Self {
        let cond = Conductor::get(n);
        let mut acc: HashMap<u64, BigRational> = HashMap::with_capacity(raw.len());
        let mut buf = Vec::new();
        for (e, c) in raw {
            if c.is_zero() {
                continue;
            }
            cond.expand(e % n, &mut buf);
            for &(e2, sign) in &buf {
                let slot = acc.entry(e2).or_insert_with(BigRational::zero);
                if sign > 0 {
                    *slot += &c;
                } else {
                    *slot -= &c;
                }
            }
        }
        let terms: BTreeMap<u64, BigRational> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self::reduce(n, terms)
    }

    fn reduce(mut n: u64, mut terms: BTreeMap<u64, BigRational>) -> Self {
        if terms.is_empty() {
            return Self::zero();
        }
        'outer: loop {
            let cond = Conductor::get(n);
            for part in &cond.parts {
                let p = part.p;
                if part.a >= 2 || p == 2 {
                    if terms.keys().all(|e| e % p == 0) {
                        terms = terms.into_iter().map(|(e, c)| (e / p, c)).collect();
                        n /= p;
                        continue 'outer;
                    }
                } else if let Some(t) = Self::collapse_prime(&cond, part.cofactor, p, &terms) {
                    terms = t;
                    n /= p;
                    continue 'outer;
                }
            }
            break;
        }
        CycNum { n, terms }
    }

    /// For p || N with p odd: if the value lies in Q(ζ_{N/p}), its terms there.
    fn collapse_prime(
        cond: &Conductor,
        cofactor: u64,
        p: u64,
        terms: &BTreeMap<u64, BigRational>,
    ) -> Option<BTreeMap<u64, BigRational>> {
        let part = cond.parts.iter().find(|x| x.p == p)?;
        let mut groups: BTreeMap<u64, (usize, &BigRational)> = BTreeMap::new();
        for (&e, c) in terms {
            let k = cond.component(part, e);
            let base = (e + cond.n - (k * cofactor) % cond.n) % cond.n;
            match groups.get_mut(&base) {
                Some((count, c0)) => {
                    if *c0 != c {
                        return None;
                    }
                    *count += 1;
                }
                None => {
                    groups.insert(base, (1, c));
                }
            }
        }
        if groups.values().any(|(count, _)| *count as u64 != p - 1) {
            return None;
        }
        Some(
            groups
                .into_iter()
                .map(|(base, (_, c))| (base / p, -c.clone()))
                .collect(),
        )
    }

    fn lifted(&self, m: u64, raw: &mut HashMap<u64, BigRational>) {
        let f = m / self.n;
        for (e, c) in &self.terms {
            *raw.entry(e * f).or_insert_with(BigRational::zero) += c;
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let m = self.n.lcm(&other.n);
        check_bound(m)?;
        let mut raw = HashMap::new();
        self.lifted(m, &mut raw);
        other.lifted(m, &mut raw);
        Ok(Self::canonicalize(m, raw))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        if let Some(r) = self.as_rational() {
            return Ok(other.scale(&r));
        }
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(&r));
        }
        let m = self.n.lcm(&other.n);
        check_bound(m)?;
        let (fa, fb) = (m / self.n, m / other.n);
        let mut raw: HashMap<u64, BigRational> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = (ea * fa + eb * fb) % m;
                *raw.entry(e).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        Ok(Self::canonicalize(m, raw))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CycNum {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    /// Image under ζ ↦ ζ^k for k coprime to the conductor.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.n;
        let k = k.rem_euclid(n as i64) as u64;
        if k.gcd(&n) != 1 && n > 1 {
            return Err(Error::InvalidParameter(format!(
                "{k} is not a unit modulo {n}"
            )));
        }
        let raw = self
            .terms
            .iter()
            .map(|(e, c)| ((e * k) % n, c.clone()))
            .collect();
        Ok(Self::canonicalize(n, raw))
    }

    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the norm trick: z^(-1) = Π_{g≠1} g(z) / N(z).
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let n = self.n;
        let mut others = Self::one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = others.checked_mul(&self.galois(k as i64)?)?;
            }
        }
        let norm = self
            .checked_mul(&others)?
            .as_rational()
            .expect("norm is rational");
        Ok(others.scale(&norm.recip()))
    }
}

impl Default for CycNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycNum {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

impl From<BigRational> for CycNum {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).expect("cyclotomic conductor bound exceeded")
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl Sub<&CycNum> for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self + &(-rhs)
    }
}

impl Sub<CycNum> for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        &self - &rhs
    }
}

impl Sub<&CycNum> for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        &self - rhs
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        *self = &*self + rhs;
    }
}

impl AddAssign<CycNum> for CycNum {
    fn add_assign(&mut self, rhs: CycNum) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |a, b| a + b)
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if *e == 0 {
                write!(f, "{}", fmt_coeff(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", fmt_coeff(&mag))?;
                }
                write!(f, "z{}^{}", self.n, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}
