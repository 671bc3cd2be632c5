use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{is_prime, Rat};
use crate::error::{Error, Result};

/// A prime `p` with exponent `k`: the congruence relation modulo `p^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PAdicContext {
    p: u64,
    k: u32,
}

impl PAdicContext {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidPrime(p.to_string()));
        }
        if k == 0 {
            return Err(crate::error::out_of_range("k", k, "k >= 1"));
        }
        Ok(Self { p, k })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.p), self.k as usize)
    }

    /// `"p^k"` label used in reports.
    pub fn label(&self) -> String {
        format!("p^{}", self.k)
    }
}

/// `v_p(q)`; zero has infinite valuation. `Finite` sorts below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn at_least(self, bound: i64) -> bool {
        self >= Valuation::Finite(bound)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

pub fn padic_valuation(q: &Rat, p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p.to_string()));
    }
    if q.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigInt::from(p);
    Ok(Valuation::Finite(
        int_valuation(q.numer(), &p) - int_valuation(q.denom(), &p),
    ))
}

/// `numer * denom^{-1} mod p^k`, in `[0, p^k)`.
pub fn mod_reduce(q: &Rat, ctx: &PAdicContext) -> Result<BigInt> {
    let p = BigInt::from(ctx.p);
    if q.denom().is_multiple_of(&p) {
        return Err(Error::NotPAdicInteger(q.to_string(), ctx.p));
    }
    let modulus = ctx.modulus();
    let den = q.denom().mod_floor(&modulus);
    let inv = den.extended_gcd(&modulus).x.mod_floor(&modulus);
    Ok((q.numer() * inv).mod_floor(&modulus))
}

/// Valuation-based congruence: `v_p(a - b) >= k`. Works when `a` or `b` carry
/// `p` in their denominators.
pub fn congruent(a: &Rat, b: &Rat, ctx: &PAdicContext) -> bool {
    let diff = a - b;
    padic_valuation(&diff, ctx.p)
        .expect("context prime was validated")
        .at_least(ctx.k as i64)
}

/// Legendre symbol by Euler's criterion; `a` is reduced mod `p` first.
pub fn legendre(a: impl Into<BigInt>, p: u64) -> Result<i8> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidPrime(p.to_string()));
    }
    let pb = BigInt::from(p);
    let a = a.into().mod_floor(&pb);
    if a.is_zero() {
        return Ok(0);
    }
    let r = a.modpow(&BigInt::from((p - 1) / 2), &pb);
    if r.is_one() {
        Ok(1)
    } else {
        debug_assert_eq!(r, &pb - 1u32);
        Ok(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, k: u32) -> PAdicContext {
        PAdicContext::new(p, k).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(
            padic_valuation(&Rat::frac(50, 3), 5),
            Ok(Valuation::Finite(2))
        );
        assert_eq!(padic_valuation(&Rat::zero(), 7), Ok(Valuation::Infinite));
        assert_eq!(
            padic_valuation(&Rat::frac(3, 125), 5),
            Ok(Valuation::Finite(-3))
        );
        assert!(matches!(
            padic_valuation(&Rat::one(), 4),
            Err(Error::InvalidPrime(_))
        ));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(
            mod_reduce(&Rat::frac(1, 3), &ctx(5, 2)).unwrap(),
            BigInt::from(17)
        );
        assert_eq!(
            mod_reduce(&Rat::int(7), &ctx(5, 2)).unwrap(),
            BigInt::from(7)
        );
        assert_eq!(
            mod_reduce(&Rat::int(-1), &ctx(5, 2)).unwrap(),
            BigInt::from(24)
        );
        assert!(matches!(
            mod_reduce(&Rat::frac(1, 5), &ctx(5, 1)),
            Err(Error::NotPAdicInteger(_, 5))
        ));
    }

    #[test]
    fn congruence_examples() {
        assert!(congruent(&Rat::int(26), &Rat::one(), &ctx(5, 2)));
        assert!(congruent(&Rat::frac(1, 2), &Rat::int(13), &ctx(5, 2)));
        assert!(!congruent(&Rat::frac(1, 5), &Rat::zero(), &ctx(5, 1)));
        assert!(congruent(&Rat::frac(3, 7), &Rat::frac(3, 7), &ctx(5, 9)));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(-1, 5), Ok(1));
        assert_eq!(legendre(-2, 5), Ok(-1));
        assert_eq!(legendre(-3, 7), Ok(1));
        assert_eq!(legendre(14, 7), Ok(0));
        assert!(legendre(1, 2).is_err());
        assert!(legendre(1, 9).is_err());
    }

    #[test]
    fn context_rejects_composites() {
        assert!(PAdicContext::new(1, 1).is_err());
        assert!(PAdicContext::new(15, 2).is_err());
        assert!(PAdicContext::new(5, 0).is_err());
        assert_eq!(ctx(5, 4).modulus(), BigInt::from(625));
    }
}
