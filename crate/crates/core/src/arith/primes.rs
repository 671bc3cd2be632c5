/// Deterministic trial division; adequate for the desk-scale ranges we sweep.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Primes in `lo..=hi`, ascending, via a sieve of Eratosthenes.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let hi_us = hi as usize;
    let mut composite = vec![false; hi_us + 1];
    let mut i = 2usize;
    while i * i <= hi_us {
        if !composite[i] {
            let mut j = i * i;
            while j <= hi_us {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (lo.max(2)..=hi)
        .filter(|&n| !composite[n as usize])
        .collect()
}
