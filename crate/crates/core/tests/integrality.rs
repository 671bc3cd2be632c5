use scv_core::integrality::{crosscheck_specialization, schmidt_power_sum, Epsilon};
use scv_core::Error;

#[test]
fn specialization_reproduces_the_expression() {
    for n in 1..=5u64 {
        for m in 1..=2u32 {
            for e in Epsilon::BOTH {
                for t in -3..=3 {
                    let r = crosscheck_specialization(n, m, e, t).unwrap();
                    assert!(r.pass(), "{r}");
                }
            }
        }
    }
}

#[test]
fn schmidt_expansion_rejects_bad_parameters() {
    assert!(matches!(
        schmidt_power_sum(0, 1, Epsilon::Plus),
        Err(Error::OutOfRange { .. })
    ));
    assert!(matches!(
        crosscheck_specialization(2, 0, Epsilon::Minus, 1),
        Err(Error::OutOfRange { .. })
    ));
}

#[test]
fn schmidt_monomial_counts() {
    // m-th power of an n-variable linear form with all weights nonzero: C(n+m-1, m) monomials
    let p = schmidt_power_sum(4, 3, Epsilon::Plus).unwrap();
    assert_eq!(p.len(), 20);
}
