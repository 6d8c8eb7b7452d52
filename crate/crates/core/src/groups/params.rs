use serde::Serialize;

use crate::error::{Error, Result};

/// q = 2^(2n+1) and θ = 2^n for a parameter n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    pub n: u32,
    pub theta: u64,
    pub q: u64,
}

impl Params {
    pub fn new(n: u32) -> Result<Self> {
        if n > 12 {
            return Err(Error::InvalidParameter(format!("n = {n} is out of range")));
        }
        let theta = 1u64 << n;
        Ok(Params {
            n,
            theta,
            q: 2 * theta * theta,
        })
    }

    /// Degree of GF(q) over GF(2).
    pub fn m(&self) -> u32 {
        2 * self.n + 1
    }

    /// q - 1, q + 2θ + 1, q - 2θ + 1.
    pub fn torus_orders(&self) -> [u64; 3] {
        let (q, t) = (self.q, self.theta);
        [q - 1, q + 2 * t + 1, q - 2 * t + 1]
    }

    pub fn sz_order(&self) -> u128 {
        let q = self.q as u128;
        q * q * (q - 1) * (q * q + 1)
    }

    pub fn sp4_order(&self) -> u128 {
        let q = self.q as u128;
        q.pow(4) * (q * q - 1) * (q.pow(4) - 1)
    }

    /// Index sets E_0, E_1, E_2.
    pub fn index_set(&self, torus: usize) -> Vec<u64> {
        let modulus = self.torus_orders()[torus];
        let mults: &[u64] = if torus == 0 { &[1] } else { &[1, self.q] };
        orbit_representatives(modulus, mults)
    }
}

/// Smallest element of the orbit of i under multiplication by ±m for m in `mults`.
pub fn orbit_min(i: u64, modulus: u64, mults: &[u64]) -> u64 {
    let i = i % modulus;
    mults
        .iter()
        .flat_map(|&m| {
            let x = ((i as u128 * m as u128) % modulus as u128) as u64;
            [x, (modulus - x) % modulus]
        })
        .min()
        .expect("nonempty")
}

/// Orbit minima of the nonzero residues mod `modulus`.
pub fn orbit_representatives(modulus: u64, mults: &[u64]) -> Vec<u64> {
    (1..modulus)
        .filter(|&i| orbit_min(i, modulus, mults) == i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_set_sizes() {
        let p = Params::new(1).unwrap();
        assert_eq!(p.q, 8);
        assert_eq!(p.index_set(0).len(), 3);
        assert_eq!(p.index_set(1).len(), 3);
        assert_eq!(p.index_set(2).len(), 1);
        let p = Params::new(2).unwrap();
        assert_eq!(p.index_set(0).len(), 15);
        assert_eq!(p.index_set(1).len(), 10);
        assert_eq!(p.index_set(2).len(), 6);
        assert_eq!(p.sz_order(), 32 * 32 * 31 * 1025);
    }
}
