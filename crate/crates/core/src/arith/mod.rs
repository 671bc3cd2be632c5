//! Exact scalars and the p-adic toolkit every verifier is built on.

mod binomial;
mod padic;
mod primes;
mod rat;

pub use binomial::binomial;
pub use padic::{congruent, legendre, mod_reduce, padic_valuation, PAdicContext, Valuation};
pub use primes::{is_prime, primes_in_range};
pub use rat::Rat;
