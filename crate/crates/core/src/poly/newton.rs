use super::uni::{binomial_poly, UniPoly};
use crate::arith::Rat;

/// Coordinates of a polynomial in the binomial basis `C(x, 0), C(x, 1), ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonExpansion {
    coeffs: Vec<Rat>,
}

impl NewtonExpansion {
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// `sum_j c_j C(x, j)`.
    pub fn reconstruct(&self) -> UniPoly {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| binomial_poly(j as u64).scale(c))
            .sum()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rat::is_integer)
    }
}

/// Forward differences of `P(0), ..., P(deg)` taken in place; `c_j = Δ^j P(0)`.
pub fn newton_coefficients(poly: &UniPoly) -> NewtonExpansion {
    let Some(deg) = poly.degree() else {
        return NewtonExpansion { coeffs: Vec::new() };
    };
    let mut table: Vec<Rat> = (0..=deg).map(|t| poly.eval(&Rat::from(t))).collect();
    for j in 1..=deg {
        for i in (j..=deg).rev() {
            table[i] = &table[i] - &table[i - 1];
        }
    }
    NewtonExpansion { coeffs: table }
}

/// True iff `poly` maps every integer to an integer.
pub fn is_integer_valued(poly: &UniPoly) -> bool {
    newton_coefficients(poly).is_integral()
}
