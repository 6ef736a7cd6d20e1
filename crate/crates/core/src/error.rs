use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("{op}: 0 is not a natural number")]
    Zero { op: &'static str },

    #[error("{op}: {value} exceeds the supported bound {limit}")]
    TooLarge {
        op: &'static str,
        value: String,
        limit: u64,
    },

    #[error("residue {residue} is not below modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },

    #[error("duplicate residue {residue}")]
    DuplicateResidue { residue: u64 },

    #[error("{target} is not a multiple of modulus {modulus}")]
    NotAMultiple { modulus: u64, target: u64 },

    #[error("modulus {modulus} exceeds the supported bound {limit}")]
    ModulusTooLarge { modulus: u128, limit: u64 },

    #[error("a period of {period} residues exceeds the table bound {limit}")]
    PeriodTooLarge { period: u128, limit: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{prime} divides {value}, so {value} has no multiplicative order mod {prime}")]
    NotInvertible { value: u64, prime: u64 },

    #[error("the zero polynomial does not map ℕ into ℕ")]
    ZeroPolynomial,

    #[error("exponential base must be at least 1")]
    ZeroBase,

    #[error("{op}: empty input")]
    Empty { op: &'static str },

    #[error("parse error at column {column} near `{token}`: {message}")]
    Parse {
        column: usize,
        token: String,
        message: String,
    },
}
