//! Root-of-unity sums used in the generic tables.
//!
//! γ0 = ζ_(q-1), ν0 = ζ_(q+1), τ0 = ζ_(q²+1); ε0 = γ0^(4-4θ),
//! ε1 = τ0^((q-2θ+1)²) of order q+2θ+1, ε2 = τ0^((q+2θ+1)²) of order q-2θ+1.

use num_integer::Integer;

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::groups::Params;

fn md(a: i128, n: u64) -> i64 {
    a.rem_euclid(n as i128) as i64
}

/// ζ_N^a + ζ_N^(-a).
pub fn pair_sum(n: u64, a: i128) -> CycNum {
    let e = md(a, n);
    CycNum::root_sum(n, [e, -e]).expect("conductor within bound")
}

/// α_m = γ0^m + γ0^(-m).
pub fn alpha(p: &Params, m: i128) -> CycNum {
    pair_sum(p.q - 1, m)
}

/// β_m = ν0^m + ν0^(-m).
pub fn beta(p: &Params, m: i128) -> CycNum {
    pair_sum(p.q + 1, m)
}

/// τ0^m + τ0^(-m) + τ0^(mq) + τ0^(-mq).
pub fn tau_sum(p: &Params, m: i128) -> CycNum {
    let n = p.q * p.q + 1;
    let e = md(m, n) as i128;
    let f = md(e * p.q as i128, n);
    let e = e as i64;
    CycNum::root_sum(n, [e, -e, f, -f]).expect("conductor within bound")
}

/// Exponent 4-4θ of ε0 relative to γ0, checked to be a unit mod q-1.
pub fn eps0_exponent(p: &Params) -> Result<i128> {
    let e = 4 - 4 * p.theta as i128;
    if e.gcd(&(p.q as i128 - 1)) != 1 {
        return Err(Error::InvalidParameter(format!(
            "ε0 = γ0^{e} is not primitive of order {}",
            p.q - 1
        )));
    }
    Ok(e)
}

/// ε_t^j(π_t^l): the sum of ε_t^(±jl) (t = 0) or ε_t^(±jl), ε_t^(±jlq) (t = 1, 2).
pub fn torus_sum(p: &Params, t: usize, j: u64, l: u64) -> CycNum {
    let (q, th) = (p.q as i128, p.theta as i128);
    let a = j as i128 * l as i128;
    match t {
        0 => {
            let e = eps0_exponent(p).expect("ε0 primitive for q = 2^(2n+1)");
            pair_sum(p.q - 1, e * a)
        }
        1 | 2 => {
            let (order, base) = if t == 1 {
                (q + 2 * th + 1, q - 2 * th + 1)
            } else {
                (q - 2 * th + 1, q + 2 * th + 1)
            };
            let n = order as u64;
            let e = md(base * a, n) as i128;
            let f = md(e * q, n);
            let e = e as i64;
            CycNum::root_sum(n, [e, -e, f, -f]).expect("conductor within bound")
        }
        _ => unreachable!("three tori"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_sums_are_minus_one() {
        for n in [1, 2] {
            let p = Params::new(n).unwrap();
            for t in 0..3 {
                let s: CycNum = p.index_set(t).into_iter().map(|j| torus_sum(&p, t, j, 1)).sum();
                assert_eq!(s, CycNum::from_int(-1), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn eps_relations() {
        let p = Params::new(1).unwrap();
        // ε1 = τ0^((q-2θ+1)²) as an element of order q+2θ+1
        let direct = tau_sum(&p, 25);
        assert_eq!(direct, torus_sum(&p, 1, 1, 1));
        let direct = tau_sum(&p, 169);
        assert_eq!(direct, torus_sum(&p, 2, 1, 1));
    }
}
