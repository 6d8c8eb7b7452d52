use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CycNum;

/// Integers that fit in i64 serialize as JSON numbers, larger ones as strings.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Int {
    Small(i64),
    Big(String),
}

impl Int {
    fn of(b: &BigInt) -> Self {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b.to_string()),
        }
    }

    fn value(&self) -> Result<BigInt, String> {
        match self {
            Int::Small(v) => Ok(BigInt::from(*v)),
            Int::Big(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    #[serde(rename = "N")]
    n: u64,
    terms: Vec<(u64, Int, Int)>,
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire {
            n: self.conductor(),
            terms: self
                .terms()
                .map(|(e, c)| (e, Int::of(c.numer()), Int::of(c.denom())))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        if w.n == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let mut raw: HashMap<u64, BigRational> = HashMap::new();
        for (e, num, den) in w.terms {
            let den = den.value().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            let c = BigRational::new(num.value().map_err(D::Error::custom)?, den);
            *raw.entry(e % w.n).or_insert_with(BigRational::zero) += c;
        }
        Ok(CycNum::canonicalize(w.n, raw))
    }
}
