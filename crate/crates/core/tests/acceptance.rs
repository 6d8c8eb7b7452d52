//! Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use suzuki_descent::chartab::{
    check_frobenius_reciprocity, check_u0_induction, column_orthogonality, derive_outer_table,
    row_orthogonality, table_outer, table_sz,
};
use suzuki_descent::chevalley::{verify_alpha_images, verify_chevalley_relations};
use suzuki_descent::cyclotomic::CycNum;
use suzuki_descent::groups::{enumerate_sz, sigma_fixed_unipotents, OuterClass, Params, DEFAULT_BUDGET};
use suzuki_descent::lusztig::{fourier_matrix, reference_m3, roots_of_unity, verify_digne_michel};
use suzuki_descent::shintani::{norm_map, sz_unipotent_reps, verify_thm41, verify_witness, zeta0};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn chevalley() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut draws = 0;
    for m in [3, 5] {
        let checks = verify_chevalley_relations(m, 1000, &mut rng);
        ensure(checks.len() == 8, format!("{} relations", checks.len()))?;
        for c in &checks {
            ensure(c.ok(), format!("{} failed at m={m}: {:?}", c.relation, c.witness))?;
            draws += c.trials;
        }
    }
    let (count, failures) = verify_alpha_images(3);
    ensure(failures.is_empty(), format!("alpha images: {failures:?}"))?;
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("{draws} relation draws at q=8,32; {count} generator images; {t}"))
}

fn enumeration() -> Outcome {
    let start = Instant::now();
    let g = enumerate_sz(1, DEFAULT_BUDGET).map_err(e)?;
    ensure(g.order() == 29120, format!("order {}", g.order()))?;
    let mut cents: Vec<u128> = g.class_data().iter().map(|c| c.centralizer_order).collect();
    cents.sort_unstable();
    let mut want = vec![29120, 64, 16, 16, 7, 7, 7, 13, 13, 13, 5];
    want.sort_unstable();
    ensure(cents == want, format!("centralizers {cents:?}"))?;
    let u = sigma_fixed_unipotents(&Params::new(1).map_err(e)?).len();
    ensure(u == 64, format!("|U ∩ Sz(8)| = {u}"))?;
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("order 29120, 11 classes, |U ∩ Sz(8)| = 64; {t}"))
}

fn sz_orthogonality() -> Outcome {
    let mut parts = Vec::new();
    for n in [1, 2] {
        let start = Instant::now();
        let t = table_sz(n).map_err(e)?;
        let r = row_orthogonality(&t).map_err(e)?;
        let q = Params::new(n).map_err(e)?.q as usize;
        ensure(r.checked == (q + 3) * (q + 3), format!("{} products at n={n}", r.checked))?;
        ensure(r.ok(), format!("n={n}: {:?}", r.failures))?;
        let time = within(start, Duration::from_secs(10))?;
        parts.push(format!("n={n}: {} products in {time}", r.checked));
    }
    Ok(parts.join("; "))
}

fn twisted_columns() -> Outcome {
    let mut parts = Vec::new();
    for n in [1, 2] {
        let p = Params::new(n).map_err(e)?;
        let t = table_outer(n).map_err(e)?;
        for (c, data) in OuterClass::all(&p).iter().zip(&t.classes) {
            ensure(
                c.centralizer_order(&p) == data.centralizer_order,
                format!("centralizer of {} at n={n}", c.label()),
            )?;
        }
        let r = column_orthogonality(&t).map_err(e)?;
        ensure(r.ok(), format!("n={n}: {:?}", r.failures))?;
        parts.push(format!("n={n}: {} column pairs", r.checked));
    }
    Ok(parts.join("; "))
}

fn derivation() -> Outcome {
    let (table, log) = derive_outer_table(1).map_err(e)?;
    ensure(table.rows == table_outer(1).map_err(e)?.rows, "derived rows differ")?;
    let step = |name: &str, needle: &str| -> Result<(), String> {
        let s = log.find(name).ok_or(format!("no step {name}"))?;
        ensure(s.detail.contains(needle), format!("{name}: {}", s.detail))
    };
    // q = 8, θ = 2: (¼(q+2θ), ¼(q-2θ)) = (3, 1)
    step("Ind_B~^G~ 1", "full norm 5")?;
    step("Ind_U0~^B~ λ(1,1)", "(n, nε) = (3, 1)")?;
    step("chi_pi1: sign rule", "f1 rejected")?;
    step("theta1+theta5", "a = b = 1")?;
    step("alpha, beta", "α = β")?;
    Ok(format!("{} rows reproduced; {} logged steps", table.rows.len(), log.steps.len()))
}

fn induction() -> Outcome {
    let start = Instant::now();
    let bad = check_u0_induction(1, DEFAULT_BUDGET).map_err(e)?;
    ensure(bad.is_empty(), format!("{bad:?}"))?;
    let r = check_frobenius_reciprocity(1).map_err(e)?;
    ensure(r.failures.is_empty(), format!("{:?}", r.failures))?;
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!(
        "all four λ(k,l) agree; {} reciprocity identities over {}; {t}",
        r.checked,
        r.principal_series.join(", ")
    ))
}

fn shintani() -> Outcome {
    for n in [1, 2] {
        let nm = norm_map(n).map_err(e)?;
        for (c, g) in sz_unipotent_reps(2 * n + 1) {
            let entry = nm.entries.iter().find(|x| x.sz_class == c).ok_or("missing entry")?;
            let w = entry.witness.as_ref().ok_or("missing witness")?;
            ensure(w.degree == 4 * (2 * n + 1), format!("degree {}", w.degree))?;
            ensure(verify_witness(&g, w).map_err(e)?, format!("{} at n={n}", c.label()))?;
        }
        let v = nm.centralizer_violations().map_err(e)?;
        ensure(v.is_empty(), format!("centralizer relation at n={n}: {v:?}"))?;
        ensure(nm.is_bijective().map_err(e)?, format!("not bijective at n={n}"))?;
        let r = verify_thm41(n).map_err(e)?;
        let bad: Vec<_> = r.checks.iter().filter(|c| !c.pass).collect();
        ensure(r.all_pass(), format!("n={n}: {bad:?}"))?;
    }
    Ok("witnesses over GF(2^12), GF(2^20); |C(N c)| = 2|C(c)| on all classes; 8 products at n=1 and n=2".into())
}

fn roots_and_fourier() -> Outcome {
    for n in [1, 2] {
        let r = roots_of_unity(n).map_err(e)?;
        ensure(r.matches_table, format!("n={n}: ω = {:?}, table {:?}", r.omega, r.expected))?;
        ensure(r.is_conjugate_pair(), "not {ζ0, conj ζ0}")?;
        let dm = verify_digne_michel(n).map_err(e)?;
        ensure(dm.all_pass(), format!("Digne-Michel at n={n}: {:?}", dm.entries))?;
    }
    let (families, check) = fourier_matrix().map_err(e)?;
    ensure(check.all_pass(), format!("{check:?}"))?;
    ensure(families[2].fourier == reference_m3(), "M3 differs")?;
    let sign = verify_digne_michel(1).map_err(e)?.entries[2].sign;
    Ok(format!("table reproduced at n=1,2; M3² = I; ρ̃3 realized by sign {sign:?}"))
}

fn cyclotomic() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    // conductors of the Sz tables at n = 1, 2 and their products with 8
    let conductors = [4u64, 5, 7, 8, 13, 25, 31, 41, 56, 104, 124, 164, 280];
    let trials = 10_000;
    for t in 0..trials {
        let n = conductors[t % conductors.len()];
        let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let z = coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| CycNum::root(n, k as i64).unwrap().scale(&BigRational::from_integer(c.into())))
            .sum::<CycNum>();
        let (mut re, mut im) = (0.0f64, 0.0f64);
        for (k, &c) in coeffs.iter().enumerate() {
            let a = std::f64::consts::TAU * k as f64 / n as f64;
            re += c as f64 * a.cos();
            im += c as f64 * a.sin();
        }
        let enc = z.to_complex(20);
        ensure((enc.re() - re).abs() < 1e-9 && (enc.im() - im).abs() < 1e-9, format!("numeric mismatch at N={n}"))?;
        let back: CycNum = serde_json::from_str(&serde_json::to_string(&z).map_err(e)?).map_err(e)?;
        ensure(back == z, format!("serde round trip at N={n}"))?;
        let u = [1i64, 3, 7, 9, 11].into_iter().find(|u| num_integer::gcd(*u, n as i64) == 1).unwrap();
        let inv = (1..n as i64).find(|v| (u * v) % n as i64 == 1).unwrap();
        ensure(z.galois(u).map_err(e)?.galois(inv).map_err(e)? == z, format!("Galois round trip at N={n}"))?;
    }
    let half = BigRational::new(1.into(), 2.into());
    let z0 = (-(CycNum::one() + CycNum::i())).checked_mul(&CycNum::sqrt2()).map_err(e)?.scale(&half);
    ensure(zeta0() == z0 && zeta0() == CycNum::root(8, 5).map_err(e)?, "ζ0 ≠ ζ8^5")?;
    let z8 = CycNum::root(8, 1).map_err(e)?;
    let s = &z8 + &z8.inv().map_err(e)?;
    ensure(s.pow(2) == CycNum::from_int(2), "(ζ8 + ζ8^-1)² ≠ 2")?;
    Ok(format!("{trials} round trips, zero mismatches"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Chevalley relations and α", chevalley),
        ("Sz(8) enumeration", enumeration),
        ("Sz table orthogonality", sz_orthogonality),
        ("twisted column orthogonality", twisted_columns),
        ("outer table derivation replay", derivation),
        ("induction oracles", induction),
        ("Shintani descent", shintani),
        ("roots and Fourier matrices", roots_and_fourier),
        ("cyclotomic kernel", cyclotomic),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let label = format!("criterion {}: {name}", i + 1);
        if !filter.is_empty() && !filter.iter().any(|x| label.contains(x.as_str())) {
            continue;
        }
        match f() {
            Ok(detail) => println!("PASS {label} ({detail})"),
            Err(why) => {
                failed += 1;
                println!("FAIL {label}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
