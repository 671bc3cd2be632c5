//! Integer-valuedness of `(1/n) sum_{k<n} ε^k (2k+1) d_k(x)^m s_k(x)^m` and the
//! Schmidt-polynomial divisibility it is deduced from.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arith::Rat;
use crate::check::{CheckResult, Witness};
use crate::error::{out_of_range, Error, Result};
use crate::poly::{monomial_label, newton_coefficients, MultiPoly, UniPoly};
use crate::sequences::{d_poly, f_val, s_poly, schmidt_linear_form};

/// Monomial budget for expanding Schmidt powers.
pub const MAX_MONOMIALS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub const BOTH: [Epsilon; 2] = [Epsilon::Plus, Epsilon::Minus];

    /// `ε^k`.
    pub fn power(self, k: u64) -> Rat {
        match self {
            Epsilon::Plus => Rat::one(),
            Epsilon::Minus => Rat::sign_power(k),
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Epsilon::Plus => "+1",
            Epsilon::Minus => "-1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntegralityParams {
    n: u64,
    m: u32,
    epsilon: Epsilon,
}

impl IntegralityParams {
    pub fn new(n: u64, m: u32, epsilon: Epsilon) -> Result<Self> {
        if n == 0 {
            return Err(out_of_range("n", n, "n >= 1"));
        }
        if m == 0 {
            return Err(out_of_range("m", m, "m >= 1"));
        }
        Ok(Self { n, m, epsilon })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    fn tag(&self, name: &str) -> CheckResult {
        CheckResult::new(name)
            .param("n", self.n)
            .param("m", self.m as u64)
            .param("eps", self.epsilon.to_string())
    }
}

pub fn sun_guo_expr(params: &IntegralityParams) -> UniPoly {
    let total: UniPoly = (0..params.n)
        .map(|k| {
            let ds = &d_poly(k) * &s_poly(k);
            ds.pow(params.m)
                .scale(&(params.epsilon.power(k) * Rat::from(2 * k + 1)))
        })
        .sum();
    total.scale(&Rat::frac(1, params.n as i64))
}

/// Newton-criterion check; the witness lists the binomial-basis coefficients.
pub fn verify_integer_valued(params: &IntegralityParams) -> CheckResult {
    let expansion = newton_coefficients(&sun_guo_expr(params));
    let pass = expansion.is_integral();
    let degree = expansion.coeffs().len().saturating_sub(1);
    params
        .tag("integer-valued")
        .passed(pass)
        .witnesses(
            Witness::Values(expansion.into_coeffs()),
            Witness::Text(format!("deg={degree}")),
        )
        .modulus("Z")
}

/// `sum_{k<n} ε^k (2k+1) S_k(x_0..x_k)^m` in the variables `x_0..x_{n-1}`.
pub fn schmidt_power_sum(n: u64, m: u32, epsilon: Epsilon) -> Result<MultiPoly> {
    IntegralityParams::new(n, m, epsilon)?;
    let arity = n as usize;
    let mut total = MultiPoly::zero(arity);
    for k in 0..n {
        let form = schmidt_linear_form(k).widen(arity)?;
        let power = form.pow_bounded(m, MAX_MONOMIALS)?;
        total = total.add(&power.scale(&(epsilon.power(k) * Rat::from(2 * k + 1))))?;
        if total.len() > MAX_MONOMIALS {
            return Err(Error::ResourceLimit {
                limit: MAX_MONOMIALS,
            });
        }
    }
    Ok(total)
}

fn divisibility_violation(poly: &MultiPoly, n: u64) -> Option<(&[u32], &Rat)> {
    let modulus = BigInt::from(n);
    poly.terms().find(|(_, c)| match c.to_integer() {
        Some(v) => !v.is_multiple_of(&modulus),
        None => true,
    })
}

/// Every coefficient of the Schmidt power sum is an integer multiple of `n`.
pub fn verify_schmidt_divisibility(n: u64, m: u32, epsilon: Epsilon) -> Result<CheckResult> {
    let params = IntegralityParams::new(n, m, epsilon)?;
    let poly = schmidt_power_sum(n, m, epsilon)?;
    let check = params.tag("schmidt").modulus("n");
    Ok(match divisibility_violation(&poly, n) {
        None => check.passed(true).witnesses(
            Witness::Text(format!("{} monomials", poly.len())),
            Witness::Value(Rat::from(n)),
        ),
        Some((exps, c)) => check.passed(false).witnesses(
            Witness::Text(format!("{c}*{}", monomial_label(exps))),
            Witness::Value(Rat::from(n)),
        ),
    })
}

/// Substitutes `x_k := f_k(t)` into the Schmidt power sum and compares with
/// `n` times the expression at `t`.
pub fn crosscheck_specialization(n: u64, m: u32, epsilon: Epsilon, t: i64) -> Result<CheckResult> {
    let params = IntegralityParams::new(n, m, epsilon)?;
    let point = Rat::from(t);
    let values: Vec<Rat> = (0..n).map(|k| f_val(k, &point)).collect();
    let lhs = schmidt_power_sum(n, m, epsilon)?.eval(&values)?;
    let rhs = Rat::from(n) * sun_guo_expr(&params).eval(&point);
    Ok(params
        .tag("specialization")
        .param("t", t)
        .equality(lhs, rhs))
}
