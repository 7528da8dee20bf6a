//! Prime sieve shared by factorization and the prime sums in [`crate::analysis`].

use std::sync::OnceLock;

/// Default sieve bound. Trial division covers every integer up to its square.
pub const DEFAULT_SIEVE_BOUND: u64 = 1_000_000;

/// Sieve of Eratosthenes up to a fixed bound, read-only once built.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    bound: u64,
    composite: Vec<bool>,
    primes: Vec<u64>,
}

impl PrimeSieve {
    pub fn new(bound: u64) -> Self {
        let n = bound as usize;
        let mut composite = vec![false; n + 1];
        composite[0] = true;
        if n >= 1 {
            composite[1] = true;
        }
        let mut i = 2usize;
        while i * i <= n {
            if !composite[i] {
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
            i += 1;
        }
        let primes = (2..=n)
            .filter(|&k| !composite[k])
            .map(|k| k as u64)
            .collect();
        PrimeSieve {
            bound,
            composite,
            primes,
        }
    }

    /// The process-wide sieve at [`DEFAULT_SIEVE_BOUND`].
    pub fn global() -> &'static PrimeSieve {
        static SIEVE: OnceLock<PrimeSieve> = OnceLock::new();
        SIEVE.get_or_init(|| PrimeSieve::new(DEFAULT_SIEVE_BOUND))
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Largest magnitude this sieve can factor completely by trial division.
    pub fn factor_limit(&self) -> u128 {
        let b = self.bound as u128;
        b * b
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Primes `p <= limit`; `limit` is clamped to the sieve bound.
    pub fn primes_up_to(&self, limit: u64) -> &[u64] {
        let end = self.primes.partition_point(|&p| p <= limit);
        &self.primes[..end]
    }

    /// Primality for `n <= bound`; falls back to trial division above it.
    pub fn is_prime(&self, n: u64) -> bool {
        if n <= self.bound {
            return !self.composite[n as usize];
        }
        if (n as u128) > self.factor_limit() {
            return is_prime_trial(n);
        }
        self.primes
            .iter()
            .take_while(|&&p| p * p <= n)
            .all(|&p| !n.is_multiple_of(p))
    }
}

fn is_prime_trial(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes up to `limit`, using the global sieve when it is large enough.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    let global = PrimeSieve::global();
    if limit <= global.bound() {
        global.primes_up_to(limit).to_vec()
    } else {
        PrimeSieve::new(limit).primes().to_vec()
    }
}

pub fn is_prime(n: u64) -> bool {
    PrimeSieve::global().is_prime(n)
}
