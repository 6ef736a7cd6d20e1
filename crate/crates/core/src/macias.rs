//! Basic opens `σ_n`, and exact openness, density and closure decisions for
//! periodic sets.
//!
//! A set is open when every point has some `σ_k` around it inside the set,
//! and dense when it meets every nonempty `σ_k`. Both reduce to finite checks
//! on the canonical residues; the brute-force versions in [`crate::oracle`]
//! check the reduction.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{factorize, gcd_unchecked, is_prime, primes_from};
use crate::residue_set::{ResidueSet, MAX_TABLE};

/// `σ_n = { m ∈ ℕ : gcd(n, m) = 1 }`, canonical at modulus `rad(n)`.
pub fn sigma(n: u64) -> Result<ResidueSet> {
    let rad = factorize(n)?.radical();
    if rad > MAX_TABLE {
        return Err(Error::PeriodTooLarge {
            period: rad as u128,
            limit: MAX_TABLE,
        });
    }
    ResidueSet::new(rad, (0..rad).filter(|&r| gcd_unchecked(r, rad) == 1))
}

/// Outcome of [`is_open`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Openness {
    pub open: bool,
    /// Least residue class of the set with no basic neighbourhood inside it.
    pub failing_class: Option<u64>,
}

/// Decides whether a periodic set is open.
///
/// With canonical modulus `m`, the residues mod `m` reachable from `σ_k` are
/// those coprime to the primes shared by `k` and `m`. A point in class `r`
/// can only use `k` whose primes avoid `r`, and the best such choice takes
/// every prime of `m` not dividing `r`. So class `r` is interior iff all `s`
/// coprime to that product lie in the set.
pub fn is_open(set: &ResidueSet) -> Openness {
    let m = set.modulus();
    let primes: Vec<u64> = factorize(m)
        .expect("canonical modulus within the factorization bound")
        .primes()
        .collect();
    // classes sharing the same prime pattern share the verdict
    let mut seen: HashMap<u64, bool> = HashMap::new();
    for &r in set.residues() {
        let d: u64 = primes.iter().filter(|&&p| r % p != 0).product();
        let covered = *seen.entry(d).or_insert_with(|| {
            (0..m)
                .filter(|&s| gcd_unchecked(s, d) == 1)
                .all(|s| set.has_residue(s))
        });
        if !covered {
            return Openness {
                open: false,
                failing_class: Some(r),
            };
        }
    }
    Openness {
        open: true,
        failing_class: None,
    }
}

/// Outcome of [`is_dense`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Density {
    pub dense: bool,
    /// Least residue class coprime to the modulus, when one exists.
    pub witness_class: Option<u64>,
}

/// Decides whether a periodic set meets every nonempty basic open.
///
/// Dense iff some residue is coprime to the canonical modulus.
pub fn is_dense(set: &ResidueSet) -> Density {
    let m = set.modulus();
    let witness_class = set
        .residues()
        .iter()
        .copied()
        .find(|&r| gcd_unchecked(r, m) == 1);
    Density {
        dense: witness_class.is_some(),
        witness_class,
    }
}

/// Closure of `{n}`: the multiples of `rad(n)`.
pub fn closure_singleton(n: u64) -> Result<ResidueSet> {
    let rad = factorize(n)?.radical();
    ResidueSet::multiples_of(rad)
}

/// Closure of a finite set of points, as the union of the point closures.
pub fn closure_finite(points: &[u64]) -> Result<ResidueSet> {
    if points.is_empty() {
        return Err(Error::Empty {
            op: "closure_finite",
        });
    }
    points.iter().try_fold(ResidueSet::empty(), |acc, &p| {
        acc.union(&closure_singleton(p)?)
    })
}

/// Checks `cl{nm} = cl{n} ∩ cl{m}`.
pub fn closure_product_check(n: u64, m: u64) -> Result<bool> {
    let nm = n.checked_mul(m).ok_or_else(|| Error::TooLarge {
        op: "closure_product_check",
        value: format!("{n}·{m}"),
        limit: u64::MAX,
    })?;
    let lhs = closure_singleton(nm)?;
    let rhs = closure_singleton(n)?.intersect(&closure_singleton(m)?)?;
    Ok(lhs == rhs)
}

/// Least prime outside `primes`, i.e. the least prime in `σ` of their product.
pub fn fresh_prime_in_sigma(primes: &[u64]) -> Result<u64> {
    if primes.is_empty() {
        return Err(Error::Empty {
            op: "fresh_prime_in_sigma",
        });
    }
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(p));
    }
    Ok(primes_from(2)
        .find(|q| !primes.contains(q))
        .expect("there is a prime beyond any finite list"))
}
