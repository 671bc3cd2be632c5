//! Independent routes to values the verifiers compute: word-sized modular
//! arithmetic, polynomial evaluation, brute-force search.

use num_bigint::BigInt;
use scv_core::arith::{mod_reduce, primes_in_range, PAdicContext, Rat};
use scv_core::congruences::{sun_sum, verify_rv};
use scv_core::sequences::{s_poly, RVFamily};
use scv_core::Witness;

fn inv_mod(a: u128, m: u128) -> u128 {
    (1..m).find(|&t| a * t % m == 1).expect("unit")
}

/// `sum_{k<p} (a)_k (1-a)_k / k!^2 mod p^2` with `a = 1/d`, using only
/// machine integers. Every factor is a unit mod p for k < p.
fn rv_sum_mod_p2(d: u128, p: u128) -> u128 {
    let m = p * p;
    let a = inv_mod(d % m, m);
    let b = (1 + m - a) % m;
    let mut term = 1u128;
    let mut total = 1u128;
    for i in 0..p - 1 {
        let num = (a + i) % m * ((b + i) % m) % m;
        let den = inv_mod((i + 1) * (i + 1) % m, m);
        term = term * num % m * den % m;
        total = (total + term) % m;
    }
    total
}

#[test]
fn rv_sums_agree_with_word_sized_arithmetic() {
    for p in primes_in_range(5, 60) {
        for (fam, d) in RVFamily::ALL.into_iter().zip([2u128, 3, 4, 6]) {
            let r = verify_rv(fam, p).unwrap();
            let expected = rv_sum_mod_p2(d, p as u128);
            assert_eq!(
                r.lhs_witness,
                Witness::Residue(BigInt::from(expected)),
                "{fam} p={p}"
            );
        }
    }
}

#[test]
fn sun_sum_agrees_with_polynomial_route() {
    for p in [5u64, 7, 11, 13] {
        for fam in RVFamily::ALL {
            let x = fam.sun_x();
            let via_poly: Rat = (0..p)
                .map(|k| {
                    let s = s_poly(k).eval(&x);
                    Rat::from(2 * k + 1) * &s * &s
                })
                .sum();
            assert_eq!(sun_sum(&x, p), via_poly, "{fam} p={p}");
        }
    }
    // s_k(0) = 1
    assert_eq!(sun_sum(&Rat::zero(), 7), Rat::int(49));
}

#[test]
fn mod_reduce_agrees_with_search() {
    for (p, k) in [(3u64, 3u32), (5, 2), (7, 2), (11, 1)] {
        let ctx = PAdicContext::new(p, k).unwrap();
        let m = ctx.modulus();
        let m_u = u64::try_from(&m).unwrap();
        for num in -30i64..30 {
            for den in 1i64..20 {
                if (den as u64).is_multiple_of(p) {
                    continue;
                }
                let q = Rat::frac(num, den);
                // brute force: the unique r in [0, m) with den * r ≡ num
                let r = (0..m_u)
                    .find(|&r| {
                        ((den as i128 * r as i128 - num as i128).rem_euclid(m_u as i128)) == 0
                    })
                    .unwrap();
                let reduced_num = q.numer().clone();
                let reduced_den = q.denom().clone();
                let got = mod_reduce(&q, &ctx).unwrap();
                assert_eq!(got, BigInt::from(r), "{num}/{den} mod {m}");
                assert!(((reduced_den * &got - reduced_num) % &m) == BigInt::from(0));
            }
        }
    }
}
