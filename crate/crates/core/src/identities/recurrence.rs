//! The order-4 recurrence in `m` shared by both sides of the `A_m(n)` double-sum
//! identity. Coefficients are stored as factored data and expanded once.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{eval_bb4_side, Side};
use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::poly::MultiPoly;

/// Polynomial in `(m, n)` as `(exponent of m, exponent of n, coefficient)` triples.
type Factor = &'static [(u32, u32, i64)];

struct CoefficientSpec {
    scalar: i64,
    /// Each factor with its multiplicity.
    factors: &'static [(Factor, u32)],
}

const M_PLUS_1: Factor = &[(1, 0, 1), (0, 0, 1)];
const M_PLUS_2: Factor = &[(1, 0, 1), (0, 0, 2)];
const M_PLUS_3: Factor = &[(1, 0, 1), (0, 0, 3)];
const M_PLUS_4: Factor = &[(1, 0, 1), (0, 0, 4)];

const Q0: Factor = &[(2, 0, 3), (1, 0, 18), (0, 0, 26)];

const Q1: Factor = &[
    (3, 2, 12),
    (3, 1, 12),
    (2, 2, 90),
    (3, 0, 3),
    (2, 1, 90),
    (1, 2, 212),
    (2, 0, 23),
    (1, 1, 212),
    (0, 2, 156),
    (1, 0, 55),
    (0, 1, 156),
    (0, 0, 41),
];

const Q2: Factor = &[
    (6, 0, 3),
    (4, 2, 30),
    (5, 0, 45),
    (4, 1, 30),
    (3, 2, 300),
    (4, 0, 287),
    (3, 1, 300),
    (2, 2, 1094),
    (3, 0, 995),
    (2, 1, 1094),
    (1, 2, 1720),
    (2, 0, 1964),
    (1, 1, 1720),
    (0, 2, 978),
    (1, 0, 2070),
    (0, 1, 978),
    (0, 0, 898),
];

const Q3: Factor = &[
    (3, 2, 12),
    (3, 1, 12),
    (2, 2, 90),
    (3, 0, 3),
    (2, 1, 90),
    (1, 2, 212),
    (2, 0, 22),
    (1, 1, 212),
    (0, 2, 154),
    (1, 0, 50),
    (0, 1, 154),
    (0, 0, 34),
];

const Q4: Factor = &[(2, 0, 3), (1, 0, 12), (0, 0, 11)];

const COEFFICIENTS: [CoefficientSpec; 5] = [
    CoefficientSpec {
        scalar: 1,
        factors: &[(M_PLUS_1, 3), (M_PLUS_2, 1), (Q0, 1)],
    },
    CoefficientSpec {
        scalar: -2,
        factors: &[(M_PLUS_2, 1), (Q1, 1)],
    },
    CoefficientSpec {
        scalar: -2,
        factors: &[(Q2, 1)],
    },
    CoefficientSpec {
        scalar: -2,
        factors: &[(M_PLUS_3, 1), (Q3, 1)],
    },
    CoefficientSpec {
        scalar: 1,
        factors: &[(M_PLUS_3, 1), (M_PLUS_4, 3), (Q4, 1)],
    },
];

fn expand(spec: &CoefficientSpec) -> MultiPoly {
    let mut acc = MultiPoly::constant(2, Rat::from(spec.scalar));
    for &(factor, mult) in spec.factors {
        let poly = MultiPoly::from_terms(
            2,
            factor
                .iter()
                .map(|&(em, en, c)| (vec![em, en], Rat::from(c))),
        )
        .expect("factor tables are bivariate");
        for _ in 0..mult {
            acc = acc.mul(&poly).expect("same arity");
        }
    }
    acc
}

/// `sum_{i=0}^{4} c_i(m, n) A_{m+i}(n) = 0`.
#[derive(Debug, Clone)]
pub struct RecurrenceOrder4 {
    coefficients: [MultiPoly; 5],
}

impl Default for RecurrenceOrder4 {
    fn default() -> Self {
        Self::new()
    }
}

impl RecurrenceOrder4 {
    pub fn new() -> Self {
        Self {
            coefficients: COEFFICIENTS.each_ref().map(expand),
        }
    }

    pub fn coefficients(&self) -> &[MultiPoly; 5] {
        &self.coefficients
    }

    pub fn eval_coefficients(&self, m: u64, n: u64) -> [BigInt; 5] {
        let point = [Rat::from(m), Rat::from(n)];
        self.coefficients.each_ref().map(|c| {
            c.eval(&point)
                .expect("bivariate")
                .to_integer()
                .expect("integer coefficients at integer points")
        })
    }

    /// The leading coefficient must not vanish anywhere the recurrence is used.
    pub fn check_leading(&self, m_max: u64, n_max: u64) -> Result<()> {
        for m in 0..=m_max {
            for n in 0..=n_max {
                let [.., lead] = self.eval_coefficients(m, n);
                if lead == BigInt::from(0) {
                    return Err(Error::CoefficientError(format!(
                        "leading coefficient vanishes at m={m}, n={n}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Residual of the recurrence on five consecutive values `A_m .. A_{m+4}`.
    pub fn residual(&self, m: u64, n: u64, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), 5, "order-4 recurrence needs five values");
        self.eval_coefficients(m, n)
            .iter()
            .zip(values)
            .map(|(c, a)| c * a)
            .sum()
    }

    /// Transcription self-test: the residual on the left-hand sequence must
    /// vanish at `samples` pseudo-random points. Deterministic for a given seed.
    pub fn self_test(&self, samples: usize, seed: u64) -> Result<Vec<(u64, u64)>> {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut points = Vec::with_capacity(samples);
        for _ in 0..samples {
            let m = rng.gen_range(0..=30u64);
            let n = rng.gen_range(0..=25u64);
            let values: Vec<BigInt> = (m..m + 5)
                .map(|mm| eval_bb4_side(Side::Lhs, mm, n))
                .collect();
            let r = self.residual(m, n, &values);
            if r != BigInt::from(0) {
                return Err(Error::CoefficientError(format!(
                    "nonzero residual {r} on the left-hand sequence at m={m}, n={n}"
                )));
            }
            points.push((m, n));
        }
        Ok(points)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expanded_coefficients_match_factored_forms() {
        let rec = RecurrenceOrder4::new();
        for (m, n) in [(0u64, 0u64), (3, 7), (10, 2)] {
            let mi = m as i64;
            let ni = n as i64;
            let c = rec.eval_coefficients(m, n);
            let c0 = (mi + 1).pow(3) * (mi + 2) * (3 * mi * mi + 18 * mi + 26);
            let c4 = (mi + 3) * (mi + 4).pow(3) * (3 * mi * mi + 12 * mi + 11);
            assert_eq!(c[0], BigInt::from(c0));
            assert_eq!(c[4], BigInt::from(c4));
            let q3 = 12 * mi.pow(3) * ni * ni
                + 12 * mi.pow(3) * ni
                + 90 * mi * mi * ni * ni
                + 3 * mi.pow(3)
                + 90 * mi * mi * ni
                + 212 * mi * ni * ni
                + 22 * mi * mi
                + 212 * mi * ni
                + 154 * ni * ni
                + 50 * mi
                + 154 * ni
                + 34;
            assert_eq!(c[3], BigInt::from(-2 * (mi + 3) * q3));
        }
    }

    #[test]
    fn leading_coefficient_never_vanishes() {
        RecurrenceOrder4::new().check_leading(60, 30).unwrap();
    }

    #[test]
    fn self_test_passes_and_detects_a_typo() {
        let rec = RecurrenceOrder4::new();
        assert_eq!(rec.self_test(20, 7).unwrap().len(), 20);

        let mut broken = rec.clone();
        // 41 -> 42 in the constant term of the second coefficient's quartic factor
        let bump = MultiPoly::constant(2, Rat::int(-2))
            .mul(
                &MultiPoly::from_terms(2, [(vec![1, 0], Rat::one()), (vec![0, 0], Rat::int(2))])
                    .unwrap(),
            )
            .unwrap();
        broken.coefficients[1] = broken.coefficients[1].add(&bump).unwrap();
        assert!(matches!(
            broken.self_test(20, 7),
            Err(Error::CoefficientError(_))
        ));
    }
}
