use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use scv_core::arith::{
    congruent, legendre, mod_reduce, padic_valuation, PAdicContext, Rat, Valuation,
};
use scv_core::poly::{
    binomial_poly, binomial_poly_shifted, is_integer_valued, newton_coefficients, MultiPoly,
    UniPoly,
};
use scv_core::sequences::{d_val, delannoy_oracle, gen_binomial, signed_jacobi_term};

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn rat() -> impl Strategy<Value = Rat> {
    (-10_000i64..10_000, 1i64..5_000).prop_map(|(n, d)| Rat::frac(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    rat().prop_filter("nonzero", |q| !q.is_zero())
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Rat::frac(n, d))
}

fn poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(small_rat(), 0..=max_deg + 1).prop_map(UniPoly::new)
}

/// Rational whose denominator avoids `p`.
fn padic_int(p: u64) -> impl Strategy<Value = Rat> {
    (-100_000i64..100_000, 1i64..1_000).prop_map(move |(n, d)| {
        let d = if (d as u64).is_multiple_of(p) {
            d + 1
        } else {
            d
        };
        Rat::frac(n, d)
    })
}

proptest! {
    #[test]
    fn rationals_are_canonical(n in -10_000i64..10_000, d in prop::sample::select(vec![-36i64, -7, -1, 1, 4, 90, 1024])) {
        let q = Rat::frac(n, d);
        prop_assert!(q.denom() > &BigInt::from(0));
        prop_assert_eq!(q.numer().gcd(q.denom()), BigInt::from(1));
    }

    #[test]
    fn valuation_is_additive(a in nonzero_rat(), b in nonzero_rat(), p in prop::sample::select(PRIMES.to_vec())) {
        let (Valuation::Finite(va), Valuation::Finite(vb)) = (padic_valuation(&a, p).unwrap(), padic_valuation(&b, p).unwrap()) else {
            unreachable!()
        };
        prop_assert_eq!(padic_valuation(&(&a * &b), p).unwrap(), Valuation::Finite(va + vb));
    }

    #[test]
    fn valuation_is_ultrametric(a in rat(), b in rat(), p in prop::sample::select(PRIMES.to_vec())) {
        let va = padic_valuation(&a, p).unwrap();
        let vb = padic_valuation(&b, p).unwrap();
        let vs = padic_valuation(&(&a + &b), p).unwrap();
        prop_assert!(vs >= va.min(vb));
        if va != vb {
            prop_assert_eq!(vs, va.min(vb));
        }
    }

    #[test]
    fn reduction_is_a_ring_homomorphism(
        (p, a, b) in prop::sample::select(PRIMES.to_vec()).prop_flat_map(|p| (Just(p), padic_int(p), padic_int(p))),
        k in 1u32..5,
    ) {
        let ctx = PAdicContext::new(p, k).unwrap();
        let m = ctx.modulus();
        let ra = mod_reduce(&a, &ctx).unwrap();
        let rb = mod_reduce(&b, &ctx).unwrap();
        prop_assert_eq!(mod_reduce(&(&a + &b), &ctx).unwrap(), (&ra + &rb).mod_floor(&m));
        prop_assert_eq!(mod_reduce(&(&a * &b), &ctx).unwrap(), (&ra * &rb).mod_floor(&m));
        // congruent agrees with equality of residues
        prop_assert_eq!(congruent(&a, &b, &ctx), ra == rb);
    }

    #[test]
    fn legendre_is_multiplicative(a in -5_000i64..5_000, b in -5_000i64..5_000, p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 97, 199])) {
        let pi = p as i64;
        prop_assume!(a.rem_euclid(pi) != 0 && b.rem_euclid(pi) != 0);
        let lab = legendre(a * b, p).unwrap();
        prop_assert_eq!(lab, legendre(a, p).unwrap() * legendre(b, p).unwrap());
        // against brute-force squares
        let is_square = (1..pi).any(|t| (t * t - a).rem_euclid(pi) == 0);
        prop_assert_eq!(legendre(a, p).unwrap() == 1, is_square);
    }

    #[test]
    fn newton_round_trip(p in poly(30)) {
        prop_assert_eq!(newton_coefficients(&p).reconstruct(), p);
    }

    #[test]
    fn newton_criterion_matches_sampling(p in poly(8), scale in 1i64..7) {
        // integer Newton coordinates scaled by 1/scale give both kinds of examples
        let integral = newton_coefficients(&p)
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| binomial_poly(j as u64).scale(&Rat::from(c.numer().clone())))
            .fold(UniPoly::zero(), |a, b| a + b)
            .scale(&Rat::frac(1, scale));
        for q in [&p, &integral] {
            let sampled = match q.degree() {
                None => true,
                Some(d) => (0..=d).all(|t| q.eval(&Rat::from(t)).is_integer()),
            };
            prop_assert_eq!(is_integer_valued(q), sampled);
        }
    }

    #[test]
    fn eval_is_a_homomorphism(a in poly(10), b in poly(10), t in small_rat()) {
        prop_assert_eq!((&a * &b).eval(&t), a.eval(&t) * b.eval(&t));
        prop_assert_eq!((&a + &b).eval(&t), a.eval(&t) + b.eval(&t));
    }

    #[test]
    fn multipoly_commutes_and_distributes(
        terms in prop::collection::vec((prop::collection::vec(0u32..3, 3), small_rat()), 0..6),
        terms2 in prop::collection::vec((prop::collection::vec(0u32..3, 3), small_rat()), 0..6),
        terms3 in prop::collection::vec((prop::collection::vec(0u32..3, 3), small_rat()), 0..6),
        point in prop::collection::vec(small_rat(), 3),
    ) {
        let a = MultiPoly::from_terms(3, terms).unwrap();
        let b = MultiPoly::from_terms(3, terms2).unwrap();
        let c = MultiPoly::from_terms(3, terms3).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().eval(&point).unwrap(), a.eval(&point).unwrap() * b.eval(&point).unwrap());
    }

    #[test]
    fn delannoy_is_symmetric(m in 0usize..30, n in 0usize..30) {
        prop_assert_eq!(delannoy_oracle(m, n), delannoy_oracle(n, m));
    }
}

#[test]
fn delannoy_matches_d_polynomial() {
    for m in 0..=8usize {
        for n in 0..=8u64 {
            assert_eq!(
                d_val(n, &Rat::from(m)),
                Rat::from(delannoy_oracle(m, n as usize)),
                "m={m} n={n}"
            );
        }
    }
}

#[test]
fn signed_jacobi_as_polynomial_identity() {
    // (-1)^s C(x,s) C(x+s,s) == (-x)_s (1+x)_s / s!^2, compared as polynomials in x.
    for s in 0..=15u64 {
        let lhs = (&binomial_poly(s) * &binomial_poly_shifted(&Rat::from(s), s))
            .scale(&Rat::sign_power(s));
        let mut rising = UniPoly::one();
        for i in 0..s {
            // (-x + i)(1 + x + i)
            rising = &rising * &UniPoly::new(vec![Rat::from(i), -Rat::one()]);
            rising = &rising * &UniPoly::linear(Rat::from(i + 1));
        }
        let fact: Rat = (1..=s).map(Rat::from).product();
        let rhs = rising.scale(&(&fact * &fact).recip().unwrap());
        assert_eq!(lhs, rhs, "s={s}");
        let t = Rat::frac(-2, 9);
        assert_eq!(signed_jacobi_term(&t, s), lhs.eval(&t));
        assert_eq!(
            signed_jacobi_term(&t, s),
            Rat::sign_power(s) * gen_binomial(&t, s) * gen_binomial(&(&t + Rat::from(s)), s)
        );
    }
}
