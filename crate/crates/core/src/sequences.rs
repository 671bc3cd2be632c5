//! Number and polynomial families: Pochhammer symbols, generalized binomials,
//! the Delannoy-type `d_n` and `s_n`, Schmidt linear forms, `f_k`, and the
//! hypergeometric summands of the four Rodriguez-Villegas families.

use std::fmt;

use num_bigint::BigInt;

use crate::arith::{binomial, Rat};
use crate::error::Result;
use crate::poly::{binomial_poly, binomial_poly_shifted, MultiPoly, UniPoly};

/// One of the four hypergeometric families `a ∈ {1/2, 1/3, 1/4, 1/6}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RVFamily {
    Half,
    Third,
    Quarter,
    Sixth,
}

impl RVFamily {
    pub const ALL: [RVFamily; 4] = [Self::Half, Self::Third, Self::Quarter, Self::Sixth];

    fn denominator(self) -> i64 {
        match self {
            Self::Half => 2,
            Self::Third => 3,
            Self::Quarter => 4,
            Self::Sixth => 6,
        }
    }

    pub fn a(self) -> Rat {
        Rat::frac(1, self.denominator())
    }

    /// Argument of the Legendre symbol on the right-hand side.
    pub fn discriminant(self) -> i64 {
        match self {
            Self::Half | Self::Sixth => -1,
            Self::Third => -3,
            Self::Quarter => -2,
        }
    }

    /// Constant for the sum truncated at `2p - 1`.
    pub fn lemma2_constant(self) -> Rat {
        match self {
            Self::Half => Rat::frac(5, 4),
            Self::Third => Rat::frac(11, 9),
            Self::Quarter => Rat::frac(19, 16),
            Self::Sixth => Rat::frac(41, 36),
        }
    }

    /// The point `x = -a` at which `s_k(x)` is evaluated in the mod `p^4` sums.
    pub fn sun_x(self) -> Rat {
        -self.a()
    }

    /// Constant in front of `(D/p) p^2` for the mod `p^4` sums.
    pub fn sun_constant(self) -> Rat {
        match self {
            Self::Half => Rat::frac(3, 4),
            Self::Third => Rat::frac(7, 9),
            Self::Quarter => Rat::frac(13, 16),
            Self::Sixth => Rat::frac(31, 36),
        }
    }

    pub fn from_x(x: &Rat) -> Option<Self> {
        Self::ALL.into_iter().find(|f| &f.sun_x() == x)
    }
}

impl fmt::Display for RVFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a=1/{}", self.denominator())
    }
}

/// Rising factorial `x (x+1) ... (x+k-1)`.
pub fn pochhammer(x: &Rat, k: u64) -> Rat {
    (0..k).map(|i| x + Rat::from(i)).product()
}

fn factorial(k: u64) -> Rat {
    (1..=k).map(Rat::from).product()
}

/// `C(x, k) = x (x-1) ... (x-k+1) / k!` for rational `x`.
pub fn gen_binomial(x: &Rat, k: u64) -> Rat {
    let falling: Rat = (0..k).map(|i| x - Rat::from(i)).product();
    falling / factorial(k)
}

/// `C(x, s) C(x+s, s)`, for `s = 0..count`, built by the ratio
/// `(x-s)(x+s+1)/(s+1)^2` between consecutive terms.
pub fn jacobi_products(x: &Rat, count: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(count);
    let mut cur = Rat::one();
    for s in 0..count as u64 {
        out.push(cur.clone());
        let step = (x - Rat::from(s)) * (x + Rat::from(s + 1)) / Rat::from((s + 1) * (s + 1));
        cur *= step;
    }
    out
}

/// `d_n(x) = sum_k C(n,k) C(x,k) 2^k`.
pub fn d_poly(n: u64) -> UniPoly {
    (0..=n)
        .map(|k| binomial_poly(k).scale(&Rat::from(binomial(n, k) << k as usize)))
        .sum()
}

pub fn d_val(n: u64, x: &Rat) -> Rat {
    (0..=n)
        .map(|k| Rat::from(binomial(n, k) << k as usize) * gen_binomial(x, k))
        .sum()
}

/// `s_n(x) = sum_k C(n,k) C(x,k) C(x+k,k)`.
pub fn s_poly(n: u64) -> UniPoly {
    (0..=n)
        .map(|k| {
            let term = &binomial_poly(k) * &binomial_poly_shifted(&Rat::from(k), k);
            term.scale(&Rat::from(binomial(n, k)))
        })
        .sum()
}

pub fn s_val(n: u64, x: &Rat) -> Rat {
    jacobi_products(x, n as usize + 1)
        .into_iter()
        .enumerate()
        .map(|(k, g)| g * Rat::from(binomial(n, k as u64)))
        .sum()
}

/// Lattice paths from `(0,0)` to `(m,n)` with steps E, N and NE, counted by
/// dynamic programming.
pub fn delannoy_oracle(m: usize, n: usize) -> BigInt {
    let mut prev = vec![BigInt::from(1); n + 1];
    for _ in 1..=m {
        let mut row = vec![BigInt::from(1); n + 1];
        for j in 1..=n {
            row[j] = &prev[j] + &row[j - 1] + &prev[j - 1];
        }
        prev = row;
    }
    prev[n].clone()
}

/// `C(n+k, 2k) C(2k, k)`, the weight of `x_k` in the `n`-th Schmidt form.
pub fn schmidt_weight(n: u64, k: u64) -> BigInt {
    binomial(n + k, 2 * k) * binomial(2 * k, k)
}

/// `S_n(x_0, ..., x_n) = sum_k C(n+k,2k) C(2k,k) x_k`, in `n + 1` variables.
pub fn schmidt_linear_form(n: u64) -> MultiPoly {
    let arity = n as usize + 1;
    let terms = (0..=n).map(|k| {
        let mut exps = vec![0u32; arity];
        exps[k as usize] = 1;
        (exps, Rat::from(schmidt_weight(n, k)))
    });
    MultiPoly::from_terms(arity, terms).expect("exponent vectors have the declared arity")
}

/// `f_k(x) = sum_{j<=k} sum_{i<=j} C(x+j, k+j) C(x, i) C(k, j) C(j, i) 2^i`.
pub fn f_poly(k: u64) -> UniPoly {
    let mut total = UniPoly::zero();
    for j in 0..=k {
        let outer = binomial_poly_shifted(&Rat::from(j), k + j).scale(&Rat::from(binomial(k, j)));
        let inner: UniPoly = (0..=j)
            .map(|i| binomial_poly(i).scale(&Rat::from(binomial(j, i) << i as usize)))
            .sum();
        total = total + &outer * &inner;
    }
    total
}

pub fn f_val(k: u64, x: &Rat) -> Rat {
    let mut total = Rat::zero();
    for j in 0..=k {
        let inner: Rat = (0..=j)
            .map(|i| Rat::from(binomial(j, i) << i as usize) * gen_binomial(x, i))
            .sum();
        total += gen_binomial(&(x + Rat::from(j)), k + j) * Rat::from(binomial(k, j)) * inner;
    }
    total
}

/// `(a)_k (1-a)_k / (1)_k^2`.
pub fn rv_term(a: &Rat, k: u64) -> Rat {
    let kf = factorial(k);
    pochhammer(a, k) * pochhammer(&(Rat::one() - a), k) / (&kf * &kf)
}

/// `rv_term(a, k)` for `k = 0..count`, built incrementally.
pub fn rv_terms(a: &Rat, count: usize) -> Vec<Rat> {
    let b = Rat::one() - a;
    let mut out = Vec::with_capacity(count);
    let mut cur = Rat::one();
    for k in 0..count as u64 {
        out.push(cur.clone());
        let kr = Rat::from(k);
        cur = cur * (a + &kr) * (&b + &kr) / Rat::from((k + 1) * (k + 1));
    }
    out
}

/// `(-x)_s (1+x)_s / (1)_s^2`, which equals `(-1)^s C(x,s) C(x+s,s)`.
pub fn signed_jacobi_term(x: &Rat, s: u64) -> Rat {
    let sf = factorial(s);
    pochhammer(&-x, s) * pochhammer(&(Rat::one() + x), s) / (&sf * &sf)
}

/// Validates that `x` is one of the four points `-1/2, -1/3, -1/4, -1/6`.
pub fn require_family_point(x: &Rat) -> Result<RVFamily> {
    RVFamily::from_x(x)
        .ok_or_else(|| crate::error::out_of_range("x", x, "one of -1/2, -1/3, -1/4, -1/6"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&Rat::frac(1, 2), 2), Rat::frac(3, 4));
        assert_eq!(pochhammer(&Rat::frac(7, 3), 0), Rat::one());
        assert_eq!(pochhammer(&Rat::one(), 5), Rat::int(120));
    }

    #[test]
    fn gen_binomial_examples() {
        assert_eq!(gen_binomial(&Rat::frac(-1, 2), 1), Rat::frac(-1, 2));
        assert_eq!(gen_binomial(&Rat::frac(-1, 2), 2), Rat::frac(3, 8));
        assert_eq!(gen_binomial(&Rat::int(5), 2), Rat::int(10));
        assert_eq!(gen_binomial(&Rat::int(2), 3), Rat::zero());
    }

    #[test]
    fn d_and_s_examples() {
        assert_eq!(d_poly(1), UniPoly::from_ints(&[1, 2]));
        assert_eq!(d_val(2, &Rat::int(2)), Rat::int(13));
        assert_eq!(d_poly(0), UniPoly::one());
        assert_eq!(s_poly(1), UniPoly::from_ints(&[1, 1, 1]));
        assert_eq!(s_val(1, &Rat::frac(-1, 2)), Rat::frac(3, 4));
        assert_eq!(s_poly(0), UniPoly::one());
        for n in 0..8 {
            assert_eq!(d_poly(n).degree(), Some(n as usize));
            assert_eq!(s_poly(n).degree(), Some(2 * n as usize));
            let t = Rat::frac(-2, 7);
            assert_eq!(d_poly(n).eval(&t), d_val(n, &t));
            assert_eq!(s_poly(n).eval(&t), s_val(n, &t));
        }
    }

    #[test]
    fn delannoy_examples() {
        assert_eq!(delannoy_oracle(1, 1), BigInt::from(3));
        assert_eq!(delannoy_oracle(0, 6), BigInt::from(1));
        assert_eq!(delannoy_oracle(2, 2), BigInt::from(13));
        assert_eq!(delannoy_oracle(3, 5), delannoy_oracle(5, 3));
    }

    #[test]
    fn schmidt_examples() {
        let one = Rat::one();
        assert_eq!(schmidt_linear_form(0).coeff(&[1]), one);
        let s1 = schmidt_linear_form(1);
        assert_eq!(
            (s1.coeff(&[1, 0]), s1.coeff(&[0, 1])),
            (one.clone(), Rat::int(2))
        );
        let s2 = schmidt_linear_form(2);
        assert_eq!(s2.coeff(&[1, 0, 0]), one);
        assert_eq!(s2.coeff(&[0, 1, 0]), Rat::int(6));
        assert_eq!(s2.coeff(&[0, 0, 1]), Rat::int(6));
        assert_eq!(s2.len(), 3);
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_poly(0), UniPoly::one());
        assert_eq!(f_val(1, &Rat::zero()), Rat::zero());
        for k in 0..5 {
            let t = Rat::frac(3, 5);
            assert_eq!(f_poly(k).eval(&t), f_val(k, &t));
            assert_eq!(f_poly(k).degree(), Some(3 * k as usize));
        }
    }

    #[test]
    fn rv_examples() {
        assert_eq!(rv_term(&Rat::frac(1, 2), 1), Rat::frac(1, 4));
        assert_eq!(rv_term(&Rat::frac(1, 6), 0), Rat::one());
        assert_eq!(rv_term(&Rat::frac(1, 3), 1), Rat::frac(2, 9));
        for fam in RVFamily::ALL {
            let inc = rv_terms(&fam.a(), 12);
            for (k, t) in inc.iter().enumerate() {
                assert_eq!(t, &rv_term(&fam.a(), k as u64));
            }
        }
    }

    #[test]
    fn signed_jacobi_examples() {
        assert_eq!(signed_jacobi_term(&Rat::frac(4, 9), 0), Rat::one());
        assert_eq!(signed_jacobi_term(&Rat::frac(-1, 3), 1), Rat::frac(2, 9));
        for s in 0..=20 {
            assert_eq!(
                signed_jacobi_term(&Rat::frac(-1, 2), s),
                rv_term(&Rat::frac(1, 2), s)
            );
        }
        let x = Rat::frac(5, 3);
        for (s, g) in jacobi_products(&x, 10).iter().enumerate() {
            let s = s as u64;
            assert_eq!(
                g,
                &(gen_binomial(&x, s) * gen_binomial(&(&x + Rat::from(s)), s))
            );
            assert_eq!(signed_jacobi_term(&x, s), Rat::sign_power(s) * g);
        }
    }

    #[test]
    fn family_table() {
        let rows: Vec<_> = RVFamily::ALL
            .iter()
            .map(|f| {
                (
                    f.a(),
                    f.discriminant(),
                    f.lemma2_constant(),
                    f.sun_x(),
                    f.sun_constant(),
                )
            })
            .collect();
        assert_eq!(
            rows[0],
            (
                Rat::frac(1, 2),
                -1,
                Rat::frac(5, 4),
                Rat::frac(-1, 2),
                Rat::frac(3, 4)
            )
        );
        assert_eq!(
            rows[1],
            (
                Rat::frac(1, 3),
                -3,
                Rat::frac(11, 9),
                Rat::frac(-1, 3),
                Rat::frac(7, 9)
            )
        );
        assert_eq!(
            rows[2],
            (
                Rat::frac(1, 4),
                -2,
                Rat::frac(19, 16),
                Rat::frac(-1, 4),
                Rat::frac(13, 16)
            )
        );
        assert_eq!(
            rows[3],
            (
                Rat::frac(1, 6),
                -1,
                Rat::frac(41, 36),
                Rat::frac(-1, 6),
                Rat::frac(31, 36)
            )
        );
        assert!(require_family_point(&Rat::frac(-1, 5)).is_err());
    }
}
