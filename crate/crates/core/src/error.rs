use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot add pi^{left} and pi^{right}: exponents differ")]
    PiExponentMismatch { left: i64, right: i64 },

    #[error("series has a zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("gamma ratio undefined for n = {n}, k = {k} (requires k >= n)")]
    InvalidGammaArgument { n: u32, k: u32 },

    #[error("{0}")]
    OutOfRange(String),

    #[error("ell = {0} is not supported; closed forms exist only for ell = 1 or 2")]
    UnsupportedEll(u32),

    #[error("m = {0} is odd; the tangent-secant sum with odd m has an alternating summand and is not supported")]
    OddModulus(u64),

    #[error("pole at k = {k}: the trigonometric factor vanishes")]
    Pole { k: u64 },

    #[error("polynomial division left a nonzero remainder")]
    NotDivisible,

    #[error("w = 0 gives an (m - 1) term, so there is no polynomial in m^2")]
    NoPolynomialForm,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
