use std::collections::BTreeMap;
use std::fmt;

use crate::arith::Rat;
use crate::error::{Error, Result};

type Exponents = Vec<u32>;

/// Sparse polynomial in `x_0, ..., x_{arity-1}`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Exponents, Rat>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rat) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(vec![0; arity], c);
        p
    }

    /// The variable `x_index`.
    pub fn var(arity: usize, index: usize) -> Result<Self> {
        if index >= arity {
            return Err(Error::ArityError {
                expected: arity,
                got: index + 1,
            });
        }
        let mut exps = vec![0; arity];
        exps[index] = 1;
        let mut p = Self::zero(arity);
        p.add_term(exps, Rat::one());
        Ok(p)
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Exponents, Rat)>,
    ) -> Result<Self> {
        let mut p = Self::zero(arity);
        for (exps, c) in terms {
            if exps.len() != arity {
                return Err(Error::ArityError {
                    expected: arity,
                    got: exps.len(),
                });
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exps: Exponents, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Re-reads the polynomial in more variables; the new ones do not occur.
    pub fn widen(&self, arity: usize) -> Result<Self> {
        if arity < self.arity {
            return Err(Error::ArityError {
                expected: self.arity,
                got: arity,
            });
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            e.resize(arity, 0);
            (e, c.clone())
        });
        Ok(Self {
            arity,
            terms: terms.collect(),
        })
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityError {
                expected: self.arity,
                got: other.arity,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_bounded(other, usize::MAX)
    }

    /// Product that fails once more than `limit` monomials would be stored.
    pub fn mul_bounded(&self, other: &Self, limit: usize) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
                if out.terms.len() > limit {
                    return Err(Error::ResourceLimit { limit });
                }
            }
        }
        Ok(out)
    }

    pub fn pow_bounded(&self, exp: u32, limit: usize) -> Result<Self> {
        let mut acc = Self::constant(self.arity, Rat::one());
        for _ in 0..exp {
            acc = acc.mul_bounded(self, limit)?;
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.arity {
            return Err(Error::ArityError {
                expected: self.arity,
                got: point.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(exps, c)| {
                exps.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, v)| acc * v.pow(e))
            })
            .sum())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(exps, c)| format!("({c})*{}", monomial_label(exps)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Renders a monomial such as `x0^2*x1`.
pub(crate) fn monomial_label(exps: &[u32]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{i}")
            } else {
                format!("x{i}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}
