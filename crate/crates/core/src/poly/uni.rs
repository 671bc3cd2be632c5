use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::Rat;

/// Dense polynomial in `x`; `coeffs[i]` multiplies `x^i`. No trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    /// `x + c`.
    pub fn linear(c: Rat) -> Self {
        Self::new(vec![c, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rat::is_integer)
    }

    /// Divides by `x - root`, returning quotient and remainder (synthetic division).
    pub fn div_linear(&self, root: &Rat) -> (Self, Rat) {
        let Some(deg) = self.degree() else {
            return (Self::zero(), Rat::zero());
        };
        let mut quot = vec![Rat::zero(); deg];
        let mut carry = Rat::zero();
        for i in (0..=deg).rev() {
            let cur = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return (Self::new(quot), cur);
            }
            quot[i - 1] = cur.clone();
            carry = cur;
        }
        unreachable!()
    }
}

/// `C(x + shift, k) = (x+shift)(x+shift-1)...(x+shift-k+1) / k!`.
pub fn binomial_poly_shifted(shift: &Rat, k: u64) -> UniPoly {
    let mut acc = UniPoly::one();
    for i in 0..k {
        acc = &acc * &UniPoly::linear(shift - Rat::from(i));
    }
    let fact: Rat = (1..=k).map(Rat::from).product();
    acc.scale(&fact.recip().expect("k! is nonzero"))
}

/// `C(x, s)` as a degree-`s` polynomial.
pub fn binomial_poly(s: u64) -> UniPoly {
    binomial_poly_shifted(&Rat::zero(), s)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                $tr::$m(&self, &rhs)
            }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: &UniPoly) -> UniPoly {
                $tr::$m(&self, rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_examples() {
        let a = UniPoly::from_ints(&[1, 2]);
        let b = UniPoly::from_ints(&[1, 1, 1]);
        assert_eq!(&a * &b, UniPoly::from_ints(&[1, 3, 3, 2]));
        assert_eq!(a.eval(&Rat::one()), Rat::int(3));
        assert!((&UniPoly::zero() * &b).is_zero());
        assert_eq!(
            UniPoly::new(vec![Rat::one(), Rat::zero()]).degree(),
            Some(0)
        );
        assert_eq!(UniPoly::zero().degree(), None);
    }

    #[test]
    fn binomial_poly_examples() {
        assert_eq!(binomial_poly(0), UniPoly::one());
        assert_eq!(
            binomial_poly(2),
            UniPoly::new(vec![Rat::zero(), Rat::frac(-1, 2), Rat::frac(1, 2)])
        );
        assert_eq!(binomial_poly(3).eval(&Rat::frac(-1, 2)), Rat::frac(-5, 16));
        // C(x+2, 2) at x = 3 is C(5, 2)
        assert_eq!(
            binomial_poly_shifted(&Rat::int(2), 2).eval(&Rat::int(3)),
            Rat::int(10)
        );
    }

    #[test]
    fn synthetic_division() {
        // x^2 + x = x (x + 1)
        let p = UniPoly::from_ints(&[0, 1, 1]);
        let (q, r) = p.div_linear(&Rat::zero());
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_ints(&[1, 1]));
        let (q, r) = q.div_linear(&Rat::int(-1));
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::one());
        let (_, r) = UniPoly::from_ints(&[3, 0, 1]).div_linear(&Rat::int(2));
        assert_eq!(r, Rat::int(7));
    }
}
