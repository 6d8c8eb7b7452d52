//! F2-linear solving of x^(2^k) + x = c.

use super::FieldElement;

/// Row-reduced F2 system `A x = b` with the columns of `A` given as bit masks.
struct LinearMap {
    m: u32,
    columns: Vec<u64>,
}

impl LinearMap {
    fn of<F: Fn(FieldElement) -> FieldElement>(m: u32, f: F) -> Self {
        let columns = (0..m)
            .map(|i| f(FieldElement::new(m, 1 << i)).bits())
            .collect();
        LinearMap { m, columns }
    }

    /// Particular solution and a kernel basis, or `None` if `b` is not in the image.
    fn solve(&self, b: u64) -> Option<(u64, Vec<u64>)> {
        let m = self.m as usize;
        // rows[r] = (coefficients over the unknowns, right-hand side bit)
        let mut rows: Vec<(u64, bool)> = (0..m)
            .map(|r| {
                let coeffs = self
                    .columns
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (c, col)| acc | (((col >> r) & 1) << c));
                (coeffs, (b >> r) & 1 == 1)
            })
            .collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m {
            let Some(p) = (rank..m).find(|&r| (rows[r].0 >> col) & 1 == 1) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && (row.0 >> col) & 1 == 1 {
                    row.0 ^= pivot.0;
                    row.1 ^= pivot.1;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        if rows[rank..].iter().any(|row| row.1) {
            return None;
        }
        let mut particular = 0u64;
        for (r, &col) in pivots.iter().enumerate() {
            if rows[r].1 {
                particular |= 1 << col;
            }
        }
        let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
        let kernel = free
            .iter()
            .map(|&f| {
                let mut v = 1u64 << f;
                for (r, &col) in pivots.iter().enumerate() {
                    if (rows[r].0 >> f) & 1 == 1 {
                        v |= 1 << col;
                    }
                }
                v
            })
            .collect();
        Some((particular, kernel))
    }
}

/// All solutions of `x^(2^k) + x = c` in the field of `c`, sorted by bit pattern.
pub fn artin_schreier_solve(k: u32, c: FieldElement) -> Vec<FieldElement> {
    let m = c.degree();
    let map = LinearMap::of(m, |x| x.frobenius(k) + x);
    let Some((particular, kernel)) = map.solve(c.bits()) else {
        return Vec::new();
    };
    let mut out: Vec<FieldElement> = (0..1u64 << kernel.len())
        .map(|mask| {
            let bits = kernel
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> i) & 1 == 1)
                .fold(particular, |acc, (_, v)| acc ^ v);
            FieldElement::new(m, bits)
        })
        .collect();
    out.sort();
    out
}

/// F2-basis of the kernel of `x -> x^(2^k) + x`, i.e. of the subfield GF(2^gcd(k, m)).
pub fn fixed_field_basis(m: u32, k: u32) -> Vec<FieldElement> {
    let map = LinearMap::of(m, |x| x.frobenius(k) + x);
    let (_, kernel) = map.solve(0).expect("zero is always in the image");
    kernel.into_iter().map(|b| FieldElement::new(m, b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_squaring_plus_identity() {
        let sols = artin_schreier_solve(1, FieldElement::zero(3));
        assert_eq!(sols, vec![FieldElement::zero(3), FieldElement::one(3)]);
    }

    #[test]
    fn frobenius_of_full_degree_has_no_solution() {
        assert!(artin_schreier_solve(3, FieldElement::one(3)).is_empty());
    }

    #[test]
    fn solutions_substitute_back() {
        // u^8 + u = 1 over GF(2^12)
        let c = FieldElement::one(12);
        let sols = artin_schreier_solve(3, c);
        assert_eq!(sols.len(), 8);
        for u in &sols {
            assert_eq!(u.frobenius(3) + *u, c);
        }
    }

    #[test]
    fn matches_enumeration_in_gf32() {
        for k in 1..=6 {
            for c in FieldElement::all(5) {
                let brute: Vec<_> = FieldElement::all(5)
                    .filter(|x| x.frobenius(k) + *x == c)
                    .collect();
                assert_eq!(artin_schreier_solve(k, c), brute, "k={k} c={c:?}");
            }
        }
    }

    #[test]
    fn lambda_agrees_with_solvability() {
        for x in FieldElement::all(5) {
            assert_eq!(x.lambda() == 1, !artin_schreier_solve(1, x).is_empty());
        }
    }

    #[test]
    fn subfield_dimensions() {
        assert_eq!(fixed_field_basis(12, 4).len(), 4);
        assert_eq!(fixed_field_basis(20, 5).len(), 5);
        assert_eq!(fixed_field_basis(12, 3).len(), 3);
    }
}
