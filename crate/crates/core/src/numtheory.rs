//! Elementary number theory on `u64`.
//!
//! Modular products go through `u128`, so nothing here wraps silently.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest input accepted by [`factorize`] and everything built on it.
pub const FACTORIZE_LIMIT: u64 = 1_000_000_000_000;

/// Returns the greatest common divisor, with the convention `gcd(0, m) = m`.
pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    Ok(gcd_unchecked(a, b))
}

/// Euclid without the `(0, 0)` check; returns 0 there.
pub(crate) fn gcd_unchecked(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple in `u128`, so the caller decides what "too large" means.
pub(crate) fn lcm_wide(a: u64, b: u64) -> u128 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd_unchecked(a, b)) as u128 * b as u128
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod m`; every value is 0 mod 1.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> u64 {
        self.primes().product()
    }
}

/// Exact factorization by trial division for `1 ≤ n ≤ 10^12`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero { op: "factorize" });
    }
    if n > FACTORIZE_LIMIT {
        return Err(Error::TooLarge {
            op: "factorize",
            value: n.to_string(),
            limit: FACTORIZE_LIMIT,
        });
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |rest: &mut u64, d: u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(d) {
            *rest /= d;
            e += 1;
        }
        if e > 0 {
            factors.push((d, e));
        }
    };
    push(&mut rest, 2);
    let mut d = 3;
    while d * d <= rest {
        push(&mut rest, d);
        d += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// Product of the distinct primes dividing `n`; `radical(1) = 1`.
pub fn radical(n: u64) -> Result<u64> {
    factorize(n).map(|f| f.radical())
}

/// Deterministic Miller–Rabin for all of `u64`.
///
/// The first twelve primes as bases are enough below 3.3·10^24.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let r = (n - 1).trailing_zeros();
    let d = (n - 1) >> r;
    'bases: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Ascending stream of primes `≥ start`; see [`primes_from`].
#[derive(Debug, Clone)]
pub struct PrimesFrom {
    next: Option<u64>,
}

impl Iterator for PrimesFrom {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let mut candidate = self.next?;
        loop {
            if is_prime(candidate) {
                self.next = candidate.checked_add(1);
                return Some(candidate);
            }
            candidate = candidate.checked_add(1)?;
        }
    }
}

/// Every prime `≥ start`, in order. Ends only at the top of `u64`.
pub fn primes_from(start: u64) -> PrimesFrom {
    PrimesFrom {
        next: Some(start.max(2)),
    }
}

/// Primes `p ≤ limit` in ascending order.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    primes_from(2).take_while(|&p| p <= limit).collect()
}

/// Least `T ≥ 1` with `a^T ≡ 1 (mod p)`.
pub fn multiplicative_order(a: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if a.is_multiple_of(p) {
        return Err(Error::NotInvertible { value: a, prime: p });
    }
    let mut order = p - 1;
    for q in factorize(p - 1)?.primes() {
        while order.is_multiple_of(q) && pow_mod(a, order / q, p) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

/// All primes `p ≤ limit` with `p ≡ offset (mod step)`, ascending.
///
/// Works for any offset; only coprime `(step, offset)` pairs are guaranteed to
/// keep producing primes as `limit` grows.
pub fn primes_in_progression(step: u64, offset: u64, limit: u64) -> Result<Vec<u64>> {
    if step == 0 {
        return Err(Error::Zero {
            op: "primes_in_progression",
        });
    }
    let mut out = Vec::new();
    let mut x = offset % step;
    while x <= limit {
        if is_prime(x) {
            out.push(x);
        }
        match x.checked_add(step) {
            Some(next) => x = next,
            None => break,
        }
    }
    Ok(out)
}
