use thiserror::Error;

/// Errors raised by the workbench.
///
/// Decoder failures that are a normal outcome of decoding (too many errors,
/// inconsistent systems) are not errors; they are reported through the
/// `Detected` variants of the decoder result types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field too large: {p}^{n} exceeds 2^16 elements")]
    FieldTooLarge { p: u32, n: u32 },
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("invalid field polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("polynomial is reducible over GF({0})")]
    NotIrreducible(u32),
    #[error("polynomial is irreducible but not primitive")]
    NotPrimitive,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular")]
    Singular,
    #[error("elements are linearly dependent")]
    LinearlyDependent,
    #[error("no admissible value left for an erased position")]
    GuessExhausted,
    #[error("polynomial does not right-divide z^[n] - z")]
    NotADivisor,
    #[error("code is not invertible for these parameters")]
    NotInvertible,
    #[error("generator matrix does not define an LCD code")]
    NotLcd,
    #[error("{0} is not a unit in Z_{1}")]
    NotAUnit(u64, u64),
    #[error("check symbols have no unique completion")]
    NoUniqueCompletion,
    #[error("enumeration of {0} items exceeds the brute-force guard")]
    TooLarge(u128),
    #[error("code has no nonzero codeword")]
    NoNonzeroCodeword,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
