//! Brute-force checkers written straight from the definitions.
//!
//! Nothing here calls the criteria in [`crate::macias`]: basic opens are
//! rebuilt by gcd scans and openness, density and closure are tested point by
//! point against `σ_k` for every `k` up to a limit. Agreement between the two
//! sides is the evidence the criteria are right.
//!
//! Exactness: [`brute_is_open`] and [`brute_is_dense`] are exact once
//! `k_limit ≥ rad(modulus)` and `point_limit` reaches a representative of
//! every residue class.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::functions::{ExpFunction, Polynomial};
use crate::macias::{closure_singleton, is_dense, is_open};
use crate::numtheory::{gcd_unchecked, primes_up_to, radical};
use crate::residue_set::ResidueSet;

/// `σ_k` by scanning one period of `k`.
fn basic_open(k: u64) -> Result<ResidueSet> {
    ResidueSet::new(k, (0..k).filter(|&r| gcd_unchecked(r, k) == 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteOpen {
    pub open: bool,
    /// Least point of the set with no `σ_k` (k ≤ limit) inside the set.
    pub uncovered_point: Option<u64>,
    /// A point of `σ_k \ S` inside the window, for the largest admissible `k`.
    pub escape_point: Option<u64>,
}

/// Definitional openness: every `x ∈ S` with `x ≤ point_limit` needs some
/// `k ≤ k_limit` with `gcd(k, x) = 1` and `σ_k ⊆ S`.
pub fn brute_is_open(
    set: &ResidueSet,
    point_limit: u64,
    k_limit: u64,
    containment_window: u64,
) -> Result<BruteOpen> {
    let mut inside = Vec::new();
    for k in 1..=k_limit {
        if basic_open(k)?.is_subset(set)? {
            inside.push(k);
        }
    }
    for x in set.enumerate(1, point_limit) {
        if inside.iter().any(|&k| gcd_unchecked(k, x) == 1) {
            continue;
        }
        let k = (1..=k_limit)
            .rev()
            .find(|&k| gcd_unchecked(k, x) == 1)
            .unwrap_or(1);
        let escape_point = basic_open(k)?
            .difference(set)?
            .enumerate(1, containment_window)
            .first()
            .copied();
        return Ok(BruteOpen {
            open: false,
            uncovered_point: Some(x),
            escape_point,
        });
    }
    Ok(BruteOpen {
        open: true,
        uncovered_point: None,
        escape_point: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BruteDense {
    pub dense: bool,
    /// Least `k` with `σ_k ∩ S = ∅`.
    pub failing_k: Option<u64>,
}

/// Definitional density: `S ∩ σ_k ≠ ∅` for every `k ≤ k_limit`.
pub fn brute_is_dense(set: &ResidueSet, k_limit: u64) -> Result<BruteDense> {
    for k in 1..=k_limit {
        if basic_open(k)?.intersect(set)?.is_empty() {
            return Ok(BruteDense {
                dense: false,
                failing_k: Some(k),
            });
        }
    }
    Ok(BruteDense {
        dense: true,
        failing_k: None,
    })
}

/// Points `x ≤ point_limit` all of whose basic neighbourhoods `σ_k`
/// (`k ≤ k_limit`) contain `n`.
pub fn brute_closure_singleton(n: u64, point_limit: u64, k_limit: u64) -> Vec<u64> {
    (1..=point_limit)
        .filter(|&x| {
            (1..=k_limit)
                .filter(|&k| gcd_unchecked(k, x) == 1)
                .all(|k| gcd_unchecked(k, n) == 1)
        })
        .collect()
}

fn coprime_big(value: &BigUint, n: u64) -> bool {
    let r = (value % n).to_u64().expect("below a u64 modulus");
    gcd_unchecked(r, n) == 1
}

/// Compares the computed preimage of `σ_n` with `gcd(f(x), n) = 1` on `[1, window]`.
pub fn brute_preimage_check(f: &Polynomial, n: u64, window: u64) -> Result<bool> {
    let set = f.preimage_sigma(n)?;
    for x in 1..=window {
        if set.contains(x)? != coprime_big(&f.eval(x), n) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Same comparison for `a^x + b` and a prime `p`.
pub fn brute_exp_preimage_check(g: &ExpFunction, p: u64, window: u32) -> Result<bool> {
    let set = g.preimage_sigma(p)?;
    for x in 1..=window {
        if set.contains(x as u64)? != coprime_big(&g.eval(x), p) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub mod corpus {
    //! Deterministic test inputs.

    use super::*;

    /// Every subset of residues for every modulus `1..=max_modulus`, canonicalized.
    pub fn exhaustive_residue_sets(max_modulus: u64) -> Vec<ResidueSet> {
        let mut out = Vec::new();
        for m in 1..=max_modulus {
            for mask in 0u64..(1 << m) {
                let residues = (0..m).filter(|&r| mask >> r & 1 == 1);
                out.push(ResidueSet::new(m, residues).expect("small modulus"));
            }
        }
        out
    }

    /// `count` sets with modulus uniform in `1..=max_modulus`, each residue
    /// kept with probability 1/2.
    pub fn random_residue_sets(count: usize, max_modulus: u64, seed: u64) -> Vec<ResidueSet> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let m = rng.gen_range(1..=max_modulus);
                let residues: Vec<u64> = (0..m).filter(|_| rng.gen_bool(0.5)).collect();
                ResidueSet::new(m, residues).expect("small modulus")
            })
            .collect()
    }

    /// Every nonzero polynomial of degree `≤ max_degree` with coefficients in
    /// `0..=max_coefficient`.
    pub fn polynomials(max_degree: usize, max_coefficient: u64) -> Vec<Polynomial> {
        let base = max_coefficient + 1;
        let total = base.pow(max_degree as u32 + 1);
        (1..total)
            .map(|mut code| {
                let coefficients: Vec<u64> = (0..=max_degree)
                    .map(|_| {
                        let c = code % base;
                        code /= base;
                        c
                    })
                    .collect();
                Polynomial::from_coefficients(&coefficients).expect("nonzero code")
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub disagreements: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Seed for the random residue-set corpus.
pub const CORPUS_SEED: u64 = 0x5EED_0001;

struct Sizes {
    exhaustive_modulus: u64,
    random_count: usize,
    random_modulus: u64,
    closure_n: u64,
    closure_window: u64,
    poly_degree: usize,
    poly_coefficient: u64,
    preimage_n: u64,
    preimage_window: u64,
    exp_window: u32,
}

fn sizes(level: Level) -> Sizes {
    match level {
        Level::Quick => Sizes {
            exhaustive_modulus: 8,
            random_count: 100,
            random_modulus: 30,
            closure_n: 30,
            closure_window: 300,
            poly_degree: 2,
            poly_coefficient: 2,
            preimage_n: 20,
            preimage_window: 200,
            exp_window: 60,
        },
        Level::Full => Sizes {
            exhaustive_modulus: 12,
            random_count: 500,
            random_modulus: 60,
            closure_n: 100,
            closure_window: 1000,
            poly_degree: 2,
            poly_coefficient: 5,
            preimage_n: 50,
            preimage_window: 1000,
            exp_window: 200,
        },
    }
}

/// `k_limit` used against a set: at least `rad(m)`, with slack.
pub fn k_limit_for(set: &ResidueSet) -> u64 {
    let m = set.modulus();
    (2 * m).max(radical(m).expect("canonical modulus"))
}

/// Residue sets the openness and density suites run over.
pub fn residue_corpus(level: Level) -> Vec<ResidueSet> {
    let s = sizes(level);
    let mut sets = corpus::exhaustive_residue_sets(s.exhaustive_modulus);
    sets.extend(corpus::random_residue_sets(
        s.random_count,
        s.random_modulus,
        CORPUS_SEED,
    ));
    sets
}

pub fn openness_suite(sets: &[ResidueSet]) -> SuiteReport {
    let mut disagreements = Vec::new();
    for set in sets {
        let fast = is_open(set);
        let slow = brute_is_open(set, 3 * set.modulus(), k_limit_for(set), 1000);
        match slow {
            Ok(slow) if slow.open == fast.open => {}
            Ok(slow) => disagreements.push(format!(
                "{set}: criterion {:?}, definition {:?}",
                fast, slow
            )),
            Err(e) => disagreements.push(format!("{set}: oracle error {e}")),
        }
    }
    SuiteReport {
        name: "openness",
        checked: sets.len(),
        disagreements,
    }
}

pub fn density_suite(sets: &[ResidueSet]) -> SuiteReport {
    let mut disagreements = Vec::new();
    for set in sets {
        let fast = is_dense(set);
        match brute_is_dense(set, k_limit_for(set)) {
            Ok(slow) if slow.dense == fast.dense => {}
            Ok(slow) => disagreements.push(format!(
                "{set}: criterion {:?}, definition {:?}",
                fast, slow
            )),
            Err(e) => disagreements.push(format!("{set}: oracle error {e}")),
        }
    }
    SuiteReport {
        name: "density",
        checked: sets.len(),
        disagreements,
    }
}

pub fn closure_suite(max_n: u64, window: u64) -> SuiteReport {
    let mut disagreements = Vec::new();
    for n in 1..=max_n {
        let fast = closure_singleton(n).map(|s| s.enumerate(1, window));
        let slow = brute_closure_singleton(n, window, 200);
        if fast.as_ref() != Ok(&slow) {
            disagreements.push(format!("closure of {{{n}}}"));
        }
    }
    SuiteReport {
        name: "closure",
        checked: max_n as usize,
        disagreements,
    }
}

/// Polynomials the preimage suite runs over: an exhaustive small block plus a
/// few sparse higher-degree ones.
pub fn preimage_corpus(max_degree: usize, max_coefficient: u64) -> Vec<Polynomial> {
    let mut polys = corpus::polynomials(max_degree, max_coefficient);
    for s in ["x^2+4x+2", "x^5+x+1", "3x^7+2x^3", "x^6+1", "12x^4+30"] {
        polys.push(s.parse().expect("corpus literal"));
    }
    polys
}

pub fn preimage_suite(polys: &[Polynomial], max_n: u64, window: u64) -> SuiteReport {
    let mut disagreements = Vec::new();
    let mut checked = 0;
    for f in polys {
        for n in 1..=max_n {
            checked += 1;
            if brute_preimage_check(f, n, window) != Ok(true) {
                disagreements.push(format!("{f} at n = {n}"));
            }
        }
    }
    SuiteReport {
        name: "preimage",
        checked,
        disagreements,
    }
}

pub fn exp_preimage_suite(max_base: u64, max_shift: u64, window: u32) -> SuiteReport {
    let mut disagreements = Vec::new();
    let mut checked = 0;
    for a in 1..=max_base {
        for b in 0..=max_shift {
            let g = ExpFunction::new(a, b).expect("base ≥ 1");
            for p in primes_up_to(50) {
                checked += 1;
                if brute_exp_preimage_check(&g, p, window) != Ok(true) {
                    disagreements.push(format!("{g} at p = {p}"));
                }
            }
        }
    }
    SuiteReport {
        name: "exp-preimage",
        checked,
        disagreements,
    }
}

/// Every agreement suite at the given size.
pub fn run_suites(level: Level) -> Vec<SuiteReport> {
    let s = sizes(level);
    let sets = residue_corpus(level);
    let polys = preimage_corpus(s.poly_degree, s.poly_coefficient);
    vec![
        openness_suite(&sets),
        density_suite(&sets),
        closure_suite(s.closure_n, s.closure_window),
        preimage_suite(&polys, s.preimage_n, s.preimage_window),
        exp_preimage_suite(6, 6, s.exp_window),
    ]
}
