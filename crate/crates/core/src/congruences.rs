//! Verifiers for the supercongruences and the auxiliary congruences used in
//! their proof. Every sum is formed exactly and compared once through the
//! valuation-based [`congruent`]; nothing is reduced early.

use crate::arith::{binomial, congruent, is_prime, legendre, padic_valuation, PAdicContext, Rat};
use crate::check::{CheckResult, Witness};
use crate::error::{out_of_range, Error, Result};
use crate::sequences::{gen_binomial, jacobi_products, require_family_point, rv_terms, RVFamily};

fn require_prime_at_least_5(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p.to_string()));
    }
    if p < 5 {
        return Err(out_of_range("p", p, "p >= 5"));
    }
    Ok(())
}

fn ctx(p: u64, k: u32) -> PAdicContext {
    PAdicContext::new(p, k).expect("prime checked by caller")
}

fn congruence(check: CheckResult, lhs: &Rat, rhs: &Rat, ctx: &PAdicContext) -> CheckResult {
    check
        .passed(congruent(lhs, rhs, ctx))
        .witnesses(Witness::of_side(lhs, ctx), Witness::of_side(rhs, ctx))
        .modulus(ctx.label())
}

fn valuation_bound(check: CheckResult, value: &Rat, p: u64, bound: i64) -> CheckResult {
    let v = padic_valuation(value, p).expect("prime checked by caller");
    check
        .passed(v.at_least(bound))
        .witnesses(Witness::Valuation(v), Witness::AtLeast(bound))
        .modulus(format!("p^{bound}"))
}

fn p2(p: u64) -> Rat {
    Rat::from(p * p)
}

/// `sum_{k<p} (2k+1) s_k(x)^2`, with `s_k(x) = sum_j C(k,j) C(x,j) C(x+j,j)`.
pub fn sun_sum(x: &Rat, p: u64) -> Rat {
    let g = jacobi_products(x, p as usize);
    let mut total = Rat::zero();
    for k in 0..p {
        let s_k: Rat = (0..=k)
            .map(|j| Rat::from(binomial(k, j)) * &g[j as usize])
            .sum();
        total += Rat::from(2 * k + 1) * &s_k * &s_k;
    }
    total
}

/// `sum_{k=0}^{kmax} (-1)^k/(k+1) C(2k,s) C(s,k)`.
pub fn liu_inner_sum(s: u64, kmax: u64) -> Rat {
    (0..=kmax.min(s))
        .map(|k| {
            Rat::sign_power(k) * Rat::from(binomial(2 * k, s) * binomial(s, k)) / Rat::from(k + 1)
        })
        .sum()
}

fn family_check(name: &str, fam: RVFamily, p: u64) -> CheckResult {
    CheckResult::new(name)
        .param("family", fam.to_string())
        .param("p", p)
}

/// `sum_{k<p} (a)_k (1-a)_k / k!^2 ≡ (D/p) (mod p^2)`.
pub fn verify_rv(fam: RVFamily, p: u64) -> Result<CheckResult> {
    require_prime_at_least_5(p)?;
    let lhs: Rat = rv_terms(&fam.a(), p as usize).into_iter().sum();
    let rhs = Rat::from(legendre(fam.discriminant(), p)? as i64);
    Ok(congruence(
        family_check("rv", fam, p),
        &lhs,
        &rhs,
        &ctx(p, 2),
    ))
}

/// The same sum extended to `k = 2p - 1`, against `c (D/p)` with the family constant `c`.
pub fn verify_lemma_2p(fam: RVFamily, p: u64) -> Result<CheckResult> {
    require_prime_at_least_5(p)?;
    let lhs: Rat = rv_terms(&fam.a(), 2 * p as usize).into_iter().sum();
    let rhs = fam.lemma2_constant() * Rat::from(legendre(fam.discriminant(), p)? as i64);
    Ok(congruence(
        family_check("lemma2p", fam, p),
        &lhs,
        &rhs,
        &ctx(p, 2),
    ))
}

/// `sum_{k<p} (2k+1) s_k(-a)^2 ≡ c (D/p) p^2 (mod p^4)`.
pub fn verify_sun_p4(fam: RVFamily, p: u64) -> Result<CheckResult> {
    require_prime_at_least_5(p)?;
    let lhs = sun_sum(&fam.sun_x(), p);
    let rhs = fam.sun_constant() * Rat::from(legendre(fam.discriminant(), p)? as i64) * p2(p);
    Ok(congruence(
        family_check("sun-p4", fam, p),
        &lhs,
        &rhs,
        &ctx(p, 4),
    ))
}

/// Guo's reduction of the `s_k(x)^2` sum to a double sum, modulo `p^4`, for
/// any odd prime and any `x` with denominator prime to `p`.
pub fn verify_guo_bb1(x: &Rat, p: u64) -> Result<CheckResult> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidPrime(p.to_string()));
    }
    if padic_valuation(&Rat::from(x.denom()), p)? != crate::arith::Valuation::Finite(0) {
        return Err(Error::NotPAdicInteger(x.to_string(), p));
    }
    let lhs = sun_sum(x, p);
    let g = jacobi_products(x, p as usize);
    let mut inner_total = Rat::zero();
    for k in 0..p {
        let inner: Rat = (0..=k)
            .map(|j| &g[j as usize] * Rat::from(binomial(2 * k, j + k)))
            .sum();
        if inner.is_zero() {
            continue;
        }
        let outer =
            Rat::sign_power(k) / Rat::from(k + 1) * gen_binomial(&(x + Rat::from(k)), 2 * k);
        inner_total += outer * inner;
    }
    let rhs = p2(p) * inner_total;
    let check = CheckResult::new("guo-bb1").param("p", p).param("x", x);
    Ok(congruence(check, &lhs, &rhs, &ctx(p, 4)))
}

fn family_point(x: &Rat, p: u64) -> Result<RVFamily> {
    let fam = require_family_point(x)?;
    require_prime_at_least_5(p)?;
    Ok(fam)
}

fn point_check(name: &str, x: &Rat, p: u64) -> CheckResult {
    CheckResult::new(name).param("p", p).param("x", x)
}

/// The `s_k(x)^2` sum against `p^2 sum_{s<=2p-2} sum_{k<p} (-1)^k/(k+1) C(2k,s) C(s,k) C(x,s) C(x+s,s)`.
pub fn verify_cc5(x: &Rat, p: u64) -> Result<CheckResult> {
    family_point(x, p)?;
    let lhs = sun_sum(x, p);
    let g = jacobi_products(x, 2 * p as usize - 1);
    let rhs = p2(p)
        * g.iter()
            .enumerate()
            .map(|(s, gs)| liu_inner_sum(s as u64, p - 1) * gs)
            .sum::<Rat>();
    Ok(congruence(point_check("cc5", x, p), &lhs, &rhs, &ctx(p, 4)))
}

/// `sum_{k<p} (-1)^k/(k+1) C(2k,s) C(s,k) ≡ (-1)^s (-1 + 2p/(s+1)) (mod p^2)` for `p <= s <= 2p-2`.
pub fn verify_cc7(s: u64, p: u64) -> Result<CheckResult> {
    require_prime_at_least_5(p)?;
    if s < p || s > 2 * p - 2 {
        return Err(out_of_range("s", s, format!("{p} <= s <= {}", 2 * p - 2)));
    }
    let lhs = liu_inner_sum(s, p - 1);
    let rhs = Rat::sign_power(s) * (Rat::from(2 * p) / Rat::from(s + 1) - Rat::one());
    let check = CheckResult::new("cc7").param("p", p).param("s", s);
    Ok(congruence(check, &lhs, &rhs, &ctx(p, 2)))
}

/// `v_p(C(x, 2p-1) C(x+2p-1, 2p-1)) >= 2`.
pub fn verify_cc8_fact(x: &Rat, p: u64) -> Result<CheckResult> {
    family_point(x, p)?;
    let s = 2 * p - 1;
    let value = gen_binomial(x, s) * gen_binomial(&(x + Rat::from(s)), s);
    Ok(valuation_bound(point_check("cc8", x, p), &value, p, 2))
}

/// `v_p(sum_{s=p}^{2p-1} (-1)^s/(s+1) C(x,s) C(x+s,s)) >= 1`.
pub fn verify_cc9(x: &Rat, p: u64) -> Result<CheckResult> {
    family_point(x, p)?;
    let g = jacobi_products(x, 2 * p as usize);
    let value: Rat = (p..2 * p)
        .map(|s| Rat::sign_power(s) / Rat::from(s + 1) * &g[s as usize])
        .sum();
    Ok(valuation_bound(point_check("cc9", x, p), &value, p, 1))
}

/// The `s_k(x)^2` sum against `p^2 (2 sum_{s<p} - sum_{s<2p}) (-1)^s C(x,s) C(x+s,s)` mod `p^4`.
pub fn verify_cc10(x: &Rat, p: u64) -> Result<CheckResult> {
    family_point(x, p)?;
    let lhs = sun_sum(x, p);
    let signed: Vec<Rat> = jacobi_products(x, 2 * p as usize)
        .into_iter()
        .enumerate()
        .map(|(s, g)| Rat::sign_power(s as u64) * g)
        .collect();
    let short: Rat = signed[..p as usize].iter().sum();
    let long: Rat = signed.iter().sum();
    let rhs = p2(p) * (Rat::int(2) * short - long);
    Ok(congruence(
        point_check("cc10", x, p),
        &lhs,
        &rhs,
        &ctx(p, 4),
    ))
}

/// `2 - lemma2_constant = sun_constant`, exactly.
pub fn verify_constant_recombination(fam: RVFamily) -> CheckResult {
    let lhs = Rat::int(2) - fam.lemma2_constant();
    CheckResult::new("constant-recombination")
        .param("family", fam.to_string())
        .equality(lhs, fam.sun_constant())
}
