//! Periodic subsets of ℕ as canonical `(modulus, residues)` pairs.
//!
//! A [`ResidueSet`] with modulus `m` and residues `R` denotes
//! `{ x ≥ 1 : x mod m ∈ R }`. Every value is kept at its least period, so two
//! sets are equal exactly when their fields are equal. The empty set is
//! `1:{}` and ℕ is `1:{0}`.
//!
//! The text form is `m:{r1,r2,...}` with ascending residues.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numtheory::{factorize, lcm_wide};
use crate::parse::{to_u64, Cursor, Kind};

/// Largest modulus any residue set may carry.
pub const MAX_MODULUS: u64 = 1 << 32;

/// Largest number of residues an operation will materialize or scan.
pub const MAX_TABLE: u64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ResidueSet {
    modulus: u64,
    residues: Vec<u64>,
}

/// A residue set expanded to a larger modulus. Not canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lifted {
    pub modulus: u64,
    pub residues: Vec<u64>,
}

impl Lifted {
    pub fn canonicalize(&self) -> ResidueSet {
        ResidueSet::canonical(self.modulus, self.residues.clone())
    }
}

fn check_modulus(modulus: u128) -> Result<()> {
    if modulus > MAX_MODULUS as u128 {
        return Err(Error::ModulusTooLarge {
            modulus,
            limit: MAX_MODULUS,
        });
    }
    Ok(())
}

fn check_table(period: u128) -> Result<()> {
    if period > MAX_TABLE as u128 {
        return Err(Error::PeriodTooLarge {
            period,
            limit: MAX_TABLE,
        });
    }
    Ok(())
}

impl ResidueSet {
    /// Builds the canonical set `{ x ≥ 1 : x mod modulus ∈ residues }`.
    pub fn new(modulus: u64, residues: impl IntoIterator<Item = u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Zero {
                op: "residue set modulus",
            });
        }
        check_modulus(modulus as u128)?;
        let mut rs: Vec<u64> = residues.into_iter().collect();
        if let Some(&residue) = rs.iter().find(|&&r| r >= modulus) {
            return Err(Error::ResidueOutOfRange { residue, modulus });
        }
        rs.sort_unstable();
        rs.dedup();
        Ok(Self::canonical(modulus, rs))
    }

    pub fn empty() -> Self {
        ResidueSet {
            modulus: 1,
            residues: Vec::new(),
        }
    }

    /// All of ℕ.
    pub fn all() -> Self {
        ResidueSet {
            modulus: 1,
            residues: vec![0],
        }
    }

    /// Multiples of `m`.
    pub fn multiples_of(m: u64) -> Result<Self> {
        Self::new(m, [0])
    }

    /// Reduces a sorted, deduplicated, in-range residue list to its least period.
    ///
    /// The periods of a periodic set are exactly the multiples of its least
    /// period, so stripping one prime at a time while the shift still maps the
    /// set to itself reaches the minimum.
    fn canonical(modulus: u64, mut residues: Vec<u64>) -> Self {
        let mut period = modulus;
        let primes: Vec<u64> = factorize(modulus)
            .expect("modulus within the factorization bound")
            .primes()
            .collect();
        for p in primes {
            while period.is_multiple_of(p) {
                let smaller = period / p;
                let invariant = residues
                    .iter()
                    .all(|&r| residues.binary_search(&((r + smaller) % period)).is_ok());
                if !invariant {
                    break;
                }
                residues.retain(|&r| r < smaller);
                period = smaller;
            }
        }
        ResidueSet {
            modulus: period,
            residues,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub(crate) fn has_residue(&self, r: u64) -> bool {
        self.residues.binary_search(&r).is_ok()
    }

    /// Membership of a natural number; 0 is rejected.
    pub fn contains(&self, x: u64) -> Result<bool> {
        if x == 0 {
            return Err(Error::Zero { op: "contains" });
        }
        Ok(self.has_residue(x % self.modulus))
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn is_all(&self) -> bool {
        self.modulus == 1 && self.residues == [0]
    }

    /// Same set, written at modulus `target`.
    pub fn lift(&self, target: u64) -> Result<Lifted> {
        if target == 0 || !target.is_multiple_of(self.modulus) {
            return Err(Error::NotAMultiple {
                modulus: self.modulus,
                target,
            });
        }
        check_modulus(target as u128)?;
        let copies = target / self.modulus;
        check_table(copies as u128 * self.residues.len() as u128)?;
        let residues = (0..copies)
            .flat_map(|j| self.residues.iter().map(move |&r| r + j * self.modulus))
            .collect();
        Ok(Lifted {
            modulus: target,
            residues,
        })
    }

    fn membership_table(&self) -> Vec<bool> {
        let mut table = vec![false; self.modulus as usize];
        for &r in &self.residues {
            table[r as usize] = true;
        }
        table
    }

    /// Combines two sets pointwise over one common period.
    fn combine(&self, other: &Self, keep: impl Fn(bool, bool) -> bool) -> Result<Self> {
        let period = lcm_wide(self.modulus, other.modulus);
        check_modulus(period)?;
        check_table(period)?;
        let period = period as u64;
        let (a, b) = (self.membership_table(), other.membership_table());
        let residues = (0..period)
            .filter(|&r| {
                keep(
                    a[(r % self.modulus) as usize],
                    b[(r % other.modulus) as usize],
                )
            })
            .collect();
        Ok(Self::canonical(period, residues))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a || b)
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a && !b)
    }

    /// Complement relative to ℕ.
    pub fn complement(&self) -> Result<Self> {
        check_table(self.modulus as u128)?;
        let residues = (0..self.modulus)
            .filter(|&r| !self.has_residue(r))
            .collect();
        Ok(Self::canonical(self.modulus, residues))
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    /// Members in `[lo, hi]`, ascending. A window starting at 0 starts at 1.
    pub fn enumerate(&self, lo: u64, hi: u64) -> Vec<u64> {
        let lo = lo.max(1);
        let mut out = Vec::new();
        if lo > hi || self.is_empty() {
            return out;
        }
        let mut base = lo - lo % self.modulus;
        loop {
            for &r in &self.residues {
                match base.checked_add(r) {
                    Some(x) if x > hi => return out,
                    Some(x) if x >= lo => out.push(x),
                    Some(_) => {}
                    None => return out,
                }
            }
            match base.checked_add(self.modulus) {
                Some(next) if next <= hi => base = next,
                _ => return out,
            }
        }
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{{", self.modulus)?;
        for (i, r) in self.residues.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for ResidueSet {
    type Err = Error;

    /// Parses `m:{r1,...}`. Non-canonical input is accepted and canonicalized.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s)?;
        let (m, mtok) = cur.number("a modulus")?;
        let modulus = to_u64(&m, &mtok)?;
        if modulus == 0 {
            return Err(Error::Parse {
                column: mtok.column,
                token: mtok.text,
                message: "modulus must be at least 1".into(),
            });
        }
        cur.expect(&Kind::Colon, "`:`")?;
        cur.expect(&Kind::LBrace, "`{`")?;
        let mut residues = Vec::new();
        if !cur.eat(&Kind::RBrace) {
            loop {
                let (r, rtok) = cur.number("a residue")?;
                let r = to_u64(&r, &rtok)?;
                if r >= modulus {
                    return Err(Error::Parse {
                        column: rtok.column,
                        token: rtok.text,
                        message: format!("residue is not below modulus {modulus}"),
                    });
                }
                if residues.contains(&r) {
                    return Err(Error::Parse {
                        column: rtok.column,
                        token: rtok.text,
                        message: "duplicate residue".into(),
                    });
                }
                residues.push(r);
                if cur.eat(&Kind::RBrace) {
                    break;
                }
                cur.expect(&Kind::Comma, "`,` or `}`")?;
            }
        }
        cur.finish()?;
        ResidueSet::new(modulus, residues)
    }
}
