use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

const TABLE_ROWS: usize = 256;

fn pascal() -> &'static Vec<Vec<BigInt>> {
    static TABLE: OnceLock<Vec<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(TABLE_ROWS);
        for n in 0..TABLE_ROWS {
            let mut row = vec![BigInt::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        rows
    })
}

/// Ordinary binomial coefficient C(n, k) for nonnegative integers; zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if (n as usize) < TABLE_ROWS {
        return pascal()[n as usize][k as usize].clone();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
