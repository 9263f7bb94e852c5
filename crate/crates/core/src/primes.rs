//! Prime tables, the Möbius function and the half-step prime counting function.

use crate::error::{Error, Result};

/// Largest sieve limit accepted.
pub const MAX_SIEVE_LIMIT: u64 = 1_000_000_000;

/// Above this limit the sieve runs segmented.
pub const SEGMENTED_THRESHOLD: u64 = 10_000_000;

const SEGMENT_BYTES: usize = 1 << 20;

/// Sorted primes up to `limit`, immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u32>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Number of primes p ≤ n.
    pub fn count_le(&self, n: u64) -> usize {
        self.primes.partition_point(|&p| u64::from(p) <= n)
    }

    pub fn contains(&self, n: u64) -> bool {
        n <= self.limit && u32::try_from(n).is_ok_and(|n| self.primes.binary_search(&n).is_ok())
    }

    /// Primes p ≤ x for real x.
    pub fn primes_up_to(&self, x: f64) -> &[u32] {
        let n = if x < 0.0 { 0 } else { x.floor() as u64 };
        &self.primes[..self.count_le(n)]
    }
}

fn check_limit(limit: u64, min: u64) -> Result<()> {
    if limit < min {
        return Err(Error::domain(format!(
            "sieve limit must be at least {min}, got {limit}"
        )));
    }
    if limit > MAX_SIEVE_LIMIT {
        return Err(Error::Capacity(format!(
            "sieve limit {limit} exceeds the ceiling {MAX_SIEVE_LIMIT}"
        )));
    }
    Ok(())
}

/// All primes ≤ `limit` by the sieve of Eratosthenes.
pub fn sieve(limit: u64) -> Result<PrimeTable> {
    check_limit(limit, 2)?;
    let primes = if limit > SEGMENTED_THRESHOLD {
        segmented(limit, SEGMENT_BYTES)
    } else {
        simple(limit)
    };
    Ok(PrimeTable { limit, primes })
}

fn simple(limit: u64) -> Vec<u32> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::with_capacity(estimate_count(limit));
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u32);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

fn segmented(limit: u64, block: usize) -> Vec<u32> {
    let root = (limit as f64).sqrt() as u64 + 1;
    let base = simple(root.min(limit));
    let mut out = Vec::with_capacity(estimate_count(limit));
    out.extend(base.iter().copied().filter(|&p| u64::from(p) <= limit));

    let mut marks = vec![false; block];
    let mut low = root + 1;
    while low <= limit {
        let high = (low + block as u64 - 1).min(limit);
        let span = (high - low + 1) as usize;
        marks[..span].fill(false);
        for &p in &base {
            let p = u64::from(p);
            if p * p > high {
                break;
            }
            let mut start = (low.div_ceil(p) * p).max(p * p);
            while start <= high {
                marks[(start - low) as usize] = true;
                start += p;
            }
        }
        out.extend(
            marks[..span]
                .iter()
                .enumerate()
                .filter(|(_, &m)| !m)
                .map(|(i, _)| (low + i as u64) as u32),
        );
        low = high + 1;
    }
    out
}

fn estimate_count(limit: u64) -> usize {
    let x = limit.max(3) as f64;
    (1.26 * x / x.ln()) as usize + 16
}

/// μ(n) for 1 ≤ n ≤ limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTable {
    limit: u64,
    mu: Vec<i8>,
}

impl MobiusTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// μ(n); panics if n is 0 or beyond the table.
    pub fn mu(&self, n: u64) -> i8 {
        assert!(
            n >= 1 && n <= self.limit,
            "μ({n}) outside table 1..={}",
            self.limit
        );
        self.mu[n as usize]
    }

    pub fn get(&self, n: u64) -> Option<i8> {
        (n >= 1 && n <= self.limit).then(|| self.mu[n as usize])
    }

    /// (n, μ(n)) for n = 1..=limit.
    pub fn iter(&self) -> impl Iterator<Item = (u64, i8)> + '_ {
        self.mu
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, &m)| (n as u64, m))
    }
}

/// Linear sieve for μ.
pub fn mobius_sieve(limit: u64) -> Result<MobiusTable> {
    check_limit(limit, 1)?;
    let n = limit as usize;
    let mut mu = vec![0i8; n + 1];
    let mut composite = vec![false; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    mu[1] = 1;
    for i in 2..=n {
        if !composite[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let m = i * p;
            if m > n {
                break;
            }
            composite[m] = true;
            if i % p == 0 {
                mu[m] = 0;
                break;
            }
            mu[m] = -mu[i];
        }
    }
    Ok(MobiusTable { limit, mu })
}

/// π(x) with the half-step convention: at a prime x the value is the mean of
/// the left and right limits, i.e. the integer count minus 1/2.
pub fn prime_count(x: f64, table: &PrimeTable) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("π(x) needs x > 0, got {x}")));
    }
    if x > table.limit as f64 {
        return Err(Error::Range(format!(
            "π({x}) requested from a table sieved to {}",
            table.limit
        )));
    }
    let n = x.floor() as u64;
    let count = table.count_le(n) as f64;
    if x == n as f64 && table.contains(n) {
        Ok(count - 0.5)
    } else {
        Ok(count)
    }
}
