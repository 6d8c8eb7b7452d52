//! Per-conductor CRT data and the canonical basis of Q(ζ_N).
//!
//! ζ_N^e is split as a product over the prime powers p^a || N. Within each
//! prime power the exponent is k = r + s·p^(a-1) with r < p^(a-1). The basis
//! keeps s in 1..p-1 for odd p and s = 0 for p = 2; other exponents are
//! rewritten with Σ_s ζ^(r + s·p^(a-1)) = 0.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

#[derive(Debug, Clone)]
pub(crate) struct PrimePart {
    pub p: u64,
    pub a: u32,
    pub q: u64,
    pub cofactor: u64,
    pub inv: u64,
}

#[derive(Debug)]
pub(crate) struct Conductor {
    pub n: u64,
    pub parts: Vec<PrimePart>,
}

pub(crate) fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i128) as u64
}

impl Conductor {
    fn build(n: u64) -> Self {
        let parts = factor(n)
            .into_iter()
            .map(|(p, a)| {
                let q = p.pow(a);
                let cofactor = n / q;
                PrimePart {
                    p,
                    a,
                    q,
                    cofactor,
                    inv: mod_inverse(cofactor % q, q),
                }
            })
            .collect();
        Conductor { n, parts }
    }

    pub fn get(n: u64) -> Arc<Conductor> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Conductor>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("conductor cache poisoned");
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(Conductor::build(n)))
            .clone()
    }

    /// Component of `e` in Z/p^a for the given prime part.
    pub fn component(&self, part: &PrimePart, e: u64) -> u64 {
        ((e % part.q) as u128 * part.inv as u128 % part.q as u128) as u64
    }

    /// Rewrites ζ_N^e in the canonical basis as signed basis exponents.
    pub fn expand(&self, e: u64, out: &mut Vec<(u64, i64)>) {
        out.clear();
        out.push((0, 1));
        let mut next = Vec::new();
        for part in &self.parts {
            let k = self.component(part, e);
            let step = part.q / part.p;
            let (r, s) = (k % step, k / step);
            next.clear();
            let c = part.cofactor as u128;
            let n = self.n as u128;
            let mut push = |k: u64, sign: i64| {
                for &(acc, sg) in out.iter() {
                    let e2 = ((acc as u128 + k as u128 * c) % n) as u64;
                    next.push((e2, sg * sign));
                }
            };
            if part.p == 2 {
                if s == 1 {
                    push(r, -1);
                } else {
                    push(k, 1);
                }
            } else if s == 0 {
                for s2 in 1..part.p {
                    push(r + s2 * step, -1);
                }
            } else {
                push(k, 1);
            }
            std::mem::swap(out, &mut next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization() {
        assert_eq!(factor(1), vec![]);
        assert_eq!(factor(1025), vec![(5, 2), (41, 1)]);
        assert_eq!(factor(8), vec![(2, 3)]);
    }

    #[test]
    fn components_recompose() {
        let c = Conductor::get(360);
        for e in 0..360 {
            let back = c
                .parts
                .iter()
                .map(|p| c.component(p, e) * p.cofactor)
                .sum::<u64>()
                % 360;
            assert_eq!(back, e);
        }
    }

    #[test]
    fn basis_size_is_euler_phi() {
        for n in [1u64, 2, 4, 5, 8, 9, 12, 15, 63, 65] {
            let c = Conductor::get(n);
            let mut buf = Vec::new();
            let basis = (0..n)
                .filter(|&e| {
                    c.expand(e, &mut buf);
                    buf.len() == 1 && buf[0] == (e, 1)
                })
                .count() as u64;
            let phi = factor(n)
                .iter()
                .fold(1, |acc, &(p, a)| acc * (p - 1) * p.pow(a - 1));
            assert_eq!(basis, phi, "N={n}");
        }
    }
}
