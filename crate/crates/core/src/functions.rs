//! Polynomials with natural coefficients and exponential maps `a^x + b`:
//! preimages of basic opens, continuity verdicts with witness primes, and
//! the Golomb-topology comparison.
//!
//! A map `f: ℕ → ℕ` is continuous iff `f⁻¹(σ_p)` is open for every prime `p`,
//! because the `σ_n` form a basis closed under intersection and
//! `σ_n = ⋂_{p | n} σ_p`. Both families here have periodic preimages, so the
//! openness test of [`crate::macias::is_open`] applies directly.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::macias::{is_open, sigma};
use crate::numtheory::{
    factorize, gcd_unchecked, is_prime, mul_mod, multiplicative_order, primes_from, primes_up_to,
    FACTORIZE_LIMIT,
};
use crate::parse::{to_u64, Cursor, Kind};
use crate::residue_set::{ResidueSet, MAX_TABLE};

/// Prime bound used when the caller does not pick one.
pub const DEFAULT_PRIME_BOUND: u64 = 10_000;

/// Largest exponent the text grammar accepts.
pub const MAX_PARSED_DEGREE: u64 = 10_000;

fn big_as_string<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

fn bigs_as_strings<S: Serializer>(ns: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ns.iter().map(|n| n.to_string()))
}

/// `∑ a_k x^k` with natural coefficients, not identically zero.
///
/// `coefficients()[k]` is the coefficient of `x^k`; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Polynomial {
    #[serde(serialize_with = "bigs_as_strings")]
    coefficients: Vec<BigUint>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<BigUint>) -> Result<Self> {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Polynomial { coefficients })
    }

    pub fn from_coefficients(coefficients: &[u64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// `a·x^n`.
    pub fn monomial(a: u64, n: usize) -> Result<Self> {
        let mut coefficients = vec![BigUint::zero(); n + 1];
        coefficients[n] = BigUint::from(a);
        Self::new(coefficients)
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Exact value at `x`.
    pub fn eval(&self, x: u64) -> BigUint {
        let x = BigUint::from(x);
        self.coefficients
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * &x + c)
    }

    fn coefficients_mod(&self, m: u64) -> Vec<u64> {
        self.coefficients
            .iter()
            .map(|c| (c % m).to_u64().expect("residue below a u64 modulus"))
            .collect()
    }

    fn horner_mod(reduced: &[u64], x: u64, m: u64) -> u64 {
        let x = x % m;
        reduced.iter().rev().fold(0, |acc, &c| {
            ((mul_mod(acc, x, m) as u128 + c as u128) % m as u128) as u64
        })
    }

    /// `f(x) mod m` by Horner's rule.
    ///
    /// # Panics
    ///
    /// If `m` is 0.
    pub fn eval_mod(&self, x: u64, m: u64) -> u64 {
        assert!(m >= 1, "modulus must be at least 1");
        Self::horner_mod(&self.coefficients_mod(m), x, m)
    }

    /// Coefficient convolution.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BigUint::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial { coefficients: out }
    }

    /// `Some((a, n))` when the polynomial is `a·x^n`, constants included.
    pub fn as_monomial(&self) -> Option<(BigUint, usize)> {
        let mut nonzero = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero());
        let (n, a) = nonzero.next()?;
        match nonzero.next() {
            None => Some((a.clone(), n)),
            Some(_) => None,
        }
    }

    /// `{ x ∈ ℕ : gcd(f(x), n) = 1 }`.
    ///
    /// Whether a prime `p | n` divides `f(x)` depends only on `x mod p`, so
    /// the set has period `rad(n)`.
    pub fn preimage_sigma(&self, n: u64) -> Result<ResidueSet> {
        let rad = factorize(n)?.radical();
        if rad > MAX_TABLE {
            return Err(Error::PeriodTooLarge {
                period: rad as u128,
                limit: MAX_TABLE,
            });
        }
        let reduced = self.coefficients_mod(rad);
        ResidueSet::new(
            rad,
            (0..rad).filter(|&r| gcd_unchecked(Self::horner_mod(&reduced, r, rad), rad) == 1),
        )
    }

    /// Continuity verdict from a sequential search over primes `≤ prime_bound`.
    pub fn continuity(&self, prime_bound: u64) -> Result<ContinuityVerdict> {
        self.continuity_with(prime_bound, SearchMode::Sequential)
    }

    /// Monomials (and constants) are continuous outright; anything else is
    /// searched for the least prime whose preimage is not open.
    pub fn continuity_with(&self, prime_bound: u64, mode: SearchMode) -> Result<ContinuityVerdict> {
        if let Some((a, n)) = self.as_monomial() {
            let reason = if n == 0 {
                ContinuityReason::Constant { value: a }
            } else {
                ContinuityReason::Monomial {
                    coefficient: a,
                    degree: n,
                }
            };
            return Ok(ContinuityVerdict::Continuous { reason });
        }
        search_witness(prime_bound, mode, |p| self.preimage_sigma(p))
    }

    /// Continuity in the Golomb topology: constants, or no constant term.
    pub fn is_golomb_continuous(&self) -> bool {
        self.degree() == 0 || self.coefficients[0].is_zero()
    }

    /// Distinct primes dividing some `f(x)` with `1 ≤ x ≤ max`, ascending.
    pub fn prime_divisor_census(&self, max: u64) -> Result<Vec<u64>> {
        let mut primes = BTreeSet::new();
        for x in 1..=max {
            let value = self.eval(x);
            let small = value
                .to_u64()
                .filter(|&v| v <= FACTORIZE_LIMIT)
                .ok_or_else(|| Error::TooLarge {
                    op: "prime_divisor_census",
                    value: value.to_string(),
                    limit: FACTORIZE_LIMIT,
                })?;
            primes.extend(factorize(small)?.primes());
        }
        Ok(primes.into_iter().collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if k == 0 || !c.is_one() {
                write!(f, "{c}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Terms `c`, `x`, `cx`, `x^k`, `cx^k` joined by `+`; like terms add up.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s)?;
        let mut coefficients: Vec<BigUint> = Vec::new();
        loop {
            let (coefficient, has_coefficient) = match cur.peek().map(|t| &t.kind) {
                Some(Kind::Number(_)) => (cur.number("a coefficient")?.0, true),
                Some(Kind::X) => (BigUint::one(), false),
                _ => return Err(cur.error("expected a term")),
            };
            let degree = if cur.eat(&Kind::X) {
                if cur.eat(&Kind::Caret) {
                    let (k, tok) = cur.number("an exponent")?;
                    let k = to_u64(&k, &tok)?;
                    if k > MAX_PARSED_DEGREE {
                        return Err(Error::Parse {
                            column: tok.column,
                            token: tok.text,
                            message: format!("exponent exceeds {MAX_PARSED_DEGREE}"),
                        });
                    }
                    k as usize
                } else {
                    1
                }
            } else {
                debug_assert!(has_coefficient);
                0
            };
            if coefficients.len() <= degree {
                coefficients.resize(degree + 1, BigUint::zero());
            }
            coefficients[degree] += coefficient;
            if !cur.eat(&Kind::Plus) {
                break;
            }
        }
        cur.finish()?;
        Polynomial::new(coefficients)
    }
}

/// `a^x + b` with `a ≥ 1`; `b = 0` is the pure exponential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExpFunction {
    base: u64,
    shift: u64,
}

impl ExpFunction {
    pub fn new(base: u64, shift: u64) -> Result<Self> {
        if base == 0 {
            return Err(Error::ZeroBase);
        }
        Ok(ExpFunction { base, shift })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn shift(&self) -> u64 {
        self.shift
    }

    /// Exact value at `x`.
    pub fn eval(&self, x: u32) -> BigUint {
        BigUint::from(self.base).pow(x) + self.shift
    }

    /// `{ x ∈ ℕ : gcd(a^x + b, p) = 1 }` for a prime `p`.
    ///
    /// If `p | a` the value is `b mod p` at every `x ≥ 1`. Otherwise `a^x mod p`
    /// has period `ord_p(a)`, and class 0 stands for `x = ord_p(a)`.
    pub fn preimage_sigma(&self, p: u64) -> Result<ResidueSet> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let b = self.shift % p;
        if self.base.is_multiple_of(p) {
            return Ok(if b == 0 {
                ResidueSet::empty()
            } else {
                ResidueSet::all()
            });
        }
        let period = multiplicative_order(self.base, p)?;
        if period > MAX_TABLE {
            return Err(Error::PeriodTooLarge {
                period: period as u128,
                limit: MAX_TABLE,
            });
        }
        let a = self.base % p;
        let mut power = 1u64;
        let mut residues = Vec::new();
        for x in 1..=period {
            power = mul_mod(power, a, p);
            if !(power as u128 + b as u128).is_multiple_of(p as u128) {
                residues.push(x % period);
            }
        }
        ResidueSet::new(period, residues)
    }

    pub fn continuity(&self, prime_bound: u64) -> Result<ContinuityVerdict> {
        self.continuity_with(prime_bound, SearchMode::Sequential)
    }

    /// `a^x` and `1 + b` are continuous outright; otherwise search primes.
    pub fn continuity_with(&self, prime_bound: u64, mode: SearchMode) -> Result<ContinuityVerdict> {
        if self.shift == 0 {
            return Ok(ContinuityVerdict::Continuous {
                reason: ContinuityReason::PureExponential { base: self.base },
            });
        }
        if self.base == 1 {
            return Ok(ContinuityVerdict::Continuous {
                reason: ContinuityReason::Constant {
                    value: BigUint::from(self.shift) + 1u32,
                },
            });
        }
        search_witness(prime_bound, mode, |p| self.preimage_sigma(p))
    }
}

impl fmt::Display for ExpFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^x", self.base)?;
        if self.shift != 0 {
            write!(f, "+{}", self.shift)?;
        }
        Ok(())
    }
}

impl FromStr for ExpFunction {
    type Err = Error;

    /// `a^x` or `a^x+b`.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s)?;
        let (a, atok) = cur.number("a base")?;
        let base = to_u64(&a, &atok)?;
        if base == 0 {
            return Err(Error::Parse {
                column: atok.column,
                token: atok.text,
                message: "base must be at least 1".into(),
            });
        }
        cur.expect(&Kind::Caret, "`^`")?;
        cur.expect(&Kind::X, "`x`")?;
        let shift = if cur.eat(&Kind::Plus) {
            let (b, btok) = cur.number("a shift")?;
            to_u64(&b, &btok)?
        } else {
            0
        };
        cur.finish()?;
        ExpFunction::new(base, shift)
    }
}

/// Why a map was declared continuous without a search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ContinuityReason {
    Monomial {
        #[serde(serialize_with = "big_as_string")]
        coefficient: BigUint,
        degree: usize,
    },
    PureExponential {
        base: u64,
    },
    Constant {
        #[serde(serialize_with = "big_as_string")]
        value: BigUint,
    },
}

impl fmt::Display for ContinuityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContinuityReason::Monomial {
                coefficient,
                degree: 1,
            } => write!(f, "monomial {coefficient}·x"),
            ContinuityReason::Monomial {
                coefficient,
                degree,
            } => write!(f, "monomial {coefficient}·x^{degree}"),
            ContinuityReason::PureExponential { base } => write!(f, "pure exponential {base}^x"),
            ContinuityReason::Constant { value } => write!(f, "constant {value}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ContinuityVerdict {
    Continuous {
        reason: ContinuityReason,
    },
    /// `preimage = f⁻¹(σ_p)` for the least prime `p` where it is not open.
    Discontinuous {
        witness_prime: u64,
        preimage: ResidueSet,
        failing_class: u64,
    },
    /// No witness among the primes up to the bound.
    Inconclusive {
        primes_checked_up_to: u64,
    },
}

impl ContinuityVerdict {
    pub fn is_continuous(&self) -> bool {
        matches!(self, ContinuityVerdict::Continuous { .. })
    }

    pub fn witness_prime(&self) -> Option<u64> {
        match self {
            ContinuityVerdict::Discontinuous { witness_prime, .. } => Some(*witness_prime),
            _ => None,
        }
    }
}

impl fmt::Display for ContinuityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContinuityVerdict::Continuous { reason } => write!(f, "continuous ({reason})"),
            ContinuityVerdict::Discontinuous {
                witness_prime,
                preimage,
                failing_class,
            } => write!(
                f,
                "discontinuous: witness prime {witness_prime}, preimage {preimage} not open at class {failing_class}"
            ),
            ContinuityVerdict::Inconclusive {
                primes_checked_up_to,
            } => write!(
                f,
                "inconclusive: no witness among primes up to {primes_checked_up_to}"
            ),
        }
    }
}

/// How the witness search visits candidate primes. Both modes return the
/// least witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    #[default]
    Sequential,
    Parallel,
}

fn search_witness<F>(prime_bound: u64, mode: SearchMode, preimage: F) -> Result<ContinuityVerdict>
where
    F: Fn(u64) -> Result<ResidueSet> + Sync,
{
    let probe = |p: u64| -> Option<Result<ContinuityVerdict>> {
        let set = match preimage(p) {
            Ok(set) => set,
            Err(e) => return Some(Err(e)),
        };
        let openness = is_open(&set);
        let failing_class = openness.failing_class?;
        Some(Ok(ContinuityVerdict::Discontinuous {
            witness_prime: p,
            preimage: set,
            failing_class,
        }))
    };
    let found = match mode {
        SearchMode::Sequential => primes_from(2)
            .take_while(|&p| p <= prime_bound)
            .find_map(probe),
        SearchMode::Parallel => primes_up_to(prime_bound)
            .into_par_iter()
            .find_map_first(probe),
    };
    found.unwrap_or(Ok(ContinuityVerdict::Inconclusive {
        primes_checked_up_to: prime_bound,
    }))
}

/// Whether `set` is one of `∅`, `σ_p`, `ℕ`.
pub fn is_trichotomous(set: &ResidueSet, p: u64) -> Result<bool> {
    Ok(set.is_empty() || set.is_all() || *set == sigma(p)?)
}
