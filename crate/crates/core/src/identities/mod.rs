//! Exact checks of the binomial identities behind the supercongruence proof and
//! the `d_n s_n` expansion. Polynomial identities compare canonical coefficients.

mod recurrence;

pub use recurrence::RecurrenceOrder4;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{binomial, Rat};
use crate::check::{CheckResult, Witness};
use crate::congruences::liu_inner_sum;
use crate::error::{out_of_range, Result};
use crate::poly::{binomial_poly, binomial_poly_shifted, UniPoly};
use crate::sequences::{d_poly, f_poly, s_poly, schmidt_weight};

/// `C(x, s) C(x+s, s)` as a polynomial of degree `2s`.
pub fn jacobi_poly(s: u64) -> UniPoly {
    &binomial_poly(s) * &binomial_poly_shifted(&Rat::from(s), s)
}

fn degree_label(p: &UniPoly) -> Witness {
    Witness::Text(match p.degree() {
        Some(d) => format!("deg={d}"),
        None => "zero".to_string(),
    })
}

fn poly_identity(check: CheckResult, lhs: &UniPoly, rhs: &UniPoly) -> CheckResult {
    let pass = lhs == rhs;
    let (lw, rw) = if pass {
        (degree_label(lhs), degree_label(rhs))
    } else {
        let len = lhs.coeffs().len().max(rhs.coeffs().len());
        let i = (0..len)
            .find(|&i| lhs.coeff(i) != rhs.coeff(i))
            .unwrap_or(0);
        (
            Witness::Text(format!("[x^{i}] {}", lhs.coeff(i))),
            Witness::Text(format!("[x^{i}] {}", rhs.coeff(i))),
        )
    };
    check.passed(pass).witnesses(lw, rw).modulus("exact")
}

/// `C(x,k)C(x+k,k) C(x,j)C(x+j,j) = sum_s C(j+k,s) C(s,j) C(s,k) C(x,s) C(x+s,s)`.
pub fn check_cc1(j: u64, k: u64) -> CheckResult {
    let lhs = &jacobi_poly(k) * &jacobi_poly(j);
    let rhs: UniPoly = (0..=j + k)
        .filter_map(|s| {
            let w = binomial(j + k, s) * binomial(s, j) * binomial(s, k);
            (!w.is_zero()).then(|| jacobi_poly(s).scale(&Rat::from(w)))
        })
        .sum();
    poly_identity(
        CheckResult::new("cc1").param("j", j).param("k", k),
        &lhs,
        &rhs,
    )
}

/// Chu-Vandermonde collapse: `sum_{j<=k} C(2k,j+k) C(j+k,s) C(s,j) = C(2k,s) C(2k,k)`.
pub fn check_cc4(k: u64, s: u64) -> Result<CheckResult> {
    if s > 2 * k {
        return Err(out_of_range("s", s, format!("0 <= s <= {}", 2 * k)));
    }
    let lhs: BigInt = (0..=k)
        .map(|j| binomial(2 * k, j + k) * binomial(j + k, s) * binomial(s, j))
        .sum();
    let rhs = binomial(2 * k, s) * binomial(2 * k, k);
    Ok(CheckResult::new("cc4")
        .param("k", k)
        .param("s", s)
        .equality(Rat::from(lhs), Rat::from(rhs)))
}

/// `sum_{k<=s} (-1)^k/(k+1) C(2k,s) C(s,k) = (-1)^s`.
pub fn check_liu26(s: u64) -> CheckResult {
    CheckResult::new("liu26")
        .param("s", s)
        .equality(liu_inner_sum(s, s), Rat::sign_power(s))
}

/// `x(x+1) sum_{s<n} (-1)^s/(s+1) C(x,s)C(x+s,s) = n (-1)^{n+1} C(x,n) C(x+n,n)`,
/// after confirming the right side is divisible by `x` and by `x+1`.
pub fn check_telescope(n: u64) -> Result<CheckResult> {
    if n == 0 {
        return Err(out_of_range("n", n, "n >= 1"));
    }
    let check = CheckResult::new("telescope").param("n", n);
    let lhs: UniPoly = (0..n)
        .map(|s| jacobi_poly(s).scale(&(Rat::sign_power(s) / Rat::from(s + 1))))
        .sum();
    let product = jacobi_poly(n).scale(&(Rat::from(n) * Rat::sign_power(n + 1)));

    let zero = Rat::zero();
    let minus_one = -Rat::one();
    if !product.eval(&zero).is_zero() || !product.eval(&minus_one).is_zero() {
        return Ok(check
            .passed(false)
            .witnesses(
                degree_label(&lhs),
                Witness::Text("not divisible by x(x+1)".into()),
            )
            .modulus("exact"));
    }
    let (by_x, r0) = product.div_linear(&zero);
    let (quotient, r1) = by_x.div_linear(&minus_one);
    debug_assert!(r0.is_zero() && r1.is_zero());

    let cleared = &UniPoly::from_ints(&[0, 1, 1]) * &lhs;
    if cleared != product {
        return Ok(poly_identity(check, &cleared, &product));
    }
    Ok(poly_identity(check, &lhs, &quotient))
}

/// `d_n(x) s_n(x) = sum_k C(n+k,2k) C(2k,k) f_k(x)`.
pub fn check_bb2(n: u64) -> CheckResult {
    let lhs = &d_poly(n) * &s_poly(n);
    let rhs: UniPoly = (0..=n)
        .map(|k| f_poly(k).scale(&Rat::from(schmidt_weight(n, k))))
        .sum();
    poly_identity(CheckResult::new("bb2").param("n", n), &lhs, &rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Lhs,
    Rhs,
}

impl Side {
    pub fn label(self) -> &'static str {
        match self {
            Side::Lhs => "lhs",
            Side::Rhs => "rhs",
        }
    }
}

/// One side of the double-sum identity, `A_m^{(1)}(n)` or `A_m^{(2)}(n)`.
pub fn eval_bb4_side(side: Side, m: u64, n: u64) -> BigInt {
    match side {
        Side::Lhs => {
            let mut total = BigInt::zero();
            for i in 0..=m.min(n) {
                let left = (binomial(n, i) * binomial(m, i)) << i as usize;
                for j in 0..=m.min(n) {
                    total += &left * binomial(n, j) * binomial(m, j) * binomial(m + j, j);
                }
            }
            total
        }
        Side::Rhs => {
            // C(j, i) vanishes for i > j, and C(k, j) for j > k; the i-sum only
            // depends on (m, j).
            let inner: Vec<BigInt> = (0..=m)
                .map(|j| {
                    (0..=j)
                        .map(|i| (binomial(m, i) * binomial(j, i)) << i as usize)
                        .sum()
                })
                .collect();
            let mut total = BigInt::zero();
            for k in 0..=m.min(n) {
                let weight = schmidt_weight(n, k);
                if weight.is_zero() {
                    continue;
                }
                let mid: BigInt = (0..=k)
                    .map(|j| binomial(m + j, k + j) * binomial(k, j) * &inner[j as usize])
                    .sum();
                total += weight * mid;
            }
            total
        }
    }
}

/// `A_m^{(1)}(n) = A_m^{(2)}(n)` by direct evaluation.
pub fn check_bb4_direct(m: u64, n: u64) -> CheckResult {
    CheckResult::new("bb4-direct")
        .param("m", m)
        .param("n", n)
        .equality(
            Rat::from(eval_bb4_side(Side::Lhs, m, n)),
            Rat::from(eval_bb4_side(Side::Rhs, m, n)),
        )
}

fn residual_result(side: Side, m: u64, n: u64, residual: BigInt) -> CheckResult {
    CheckResult::new("bb4-recurrence")
        .param("side", side.label())
        .param("m", m)
        .param("n", n)
        .equality(Rat::from(residual), Rat::zero())
}

/// Residual of the order-4 recurrence at `(m, n)` on one side; passes iff exactly zero.
pub fn check_bb4_recurrence(
    rec: &RecurrenceOrder4,
    side: Side,
    m: u64,
    n: u64,
) -> Result<CheckResult> {
    rec.check_leading(m, n)?;
    let values: Vec<BigInt> = (m..m + 5).map(|mm| eval_bb4_side(side, mm, n)).collect();
    Ok(residual_result(side, m, n, rec.residual(m, n, &values)))
}

/// Table of `A_m(n)` for `m <= m_max + 4`, one row per `n <= n_max`, for sweeps.
pub fn bb4_recurrence_sweep(
    rec: &RecurrenceOrder4,
    side: Side,
    m_max: u64,
    n_max: u64,
) -> Result<Vec<CheckResult>> {
    rec.check_leading(m_max, n_max)?;
    let mut out = Vec::new();
    for n in 0..=n_max {
        let row: Vec<BigInt> = (0..=m_max + 4).map(|m| eval_bb4_side(side, m, n)).collect();
        for m in 0..=m_max {
            let window = &row[m as usize..m as usize + 5];
            out.push(residual_result(side, m, n, rec.residual(m, n, window)));
        }
    }
    Ok(out)
}

/// The four initial values shared by both sides.
pub fn check_bb4_initial(m: u64, n: u64) -> Result<CheckResult> {
    if m > 3 {
        return Err(out_of_range("m", m, "0 <= m <= 3"));
    }
    let mut r = check_bb4_direct(m, n);
    r.check_name = "bb4-initial".into();
    Ok(r)
}

/// Checks the transcription against the left-hand sequence and reports it.
pub fn check_recurrence_self_test(
    rec: &RecurrenceOrder4,
    samples: usize,
    seed: u64,
) -> CheckResult {
    let check = CheckResult::new("bb4-recurrence-self-test")
        .param("samples", samples as u64)
        .param("seed", seed)
        .modulus("exact");
    match rec.self_test(samples, seed) {
        Ok(points) => check.passed(true).witnesses(
            Witness::Text(format!("{} zero residuals", points.len())),
            Witness::Value(Rat::zero()),
        ),
        Err(e) => check
            .passed(false)
            .witnesses(Witness::Text(e.to_string()), Witness::Value(Rat::zero())),
    }
}
