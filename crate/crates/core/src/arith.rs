//! Exact rational scalars and the classical constants built on them.
//!
//! Everything here is exact. `Rational` is always in lowest terms with a
//! positive denominator, so structural equality is value equality.

use std::fmt;
use std::ops::{Mul, Neg};
use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction in lowest terms.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `"p/q"` or `"p"`; the result is normalized.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Serde adapter writing a `Rational` as its canonical `"p/q"` string.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n as u64).fold(BigInt::one(), |acc, i| acc * i)
}

/// C(n, k), zero outside `0 <= k <= n`.
pub fn binomial(n: u32, k: i64) -> BigInt {
    if k < 0 || k > n as i64 {
        return BigInt::zero();
    }
    let k = (k as u64).min(n as u64 - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n as u64 - i;
        acc /= i + 1;
    }
    acc
}

/// Rising factorial (x)_n = x (x+1) ... (x+n-1).
pub fn pochhammer_rising(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Falling factorial x (x-1) ... (x-n+1).
pub fn pochhammer_falling(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term -= Rational::one();
    }
    acc
}

/// Gamma(a) / Gamma(b) for positive integers.
pub fn gamma_ratio(a: u32, b: u32) -> Rational {
    assert!(a >= 1 && b >= 1, "gamma_ratio needs positive arguments");
    let span = |lo: u32, hi: u32| (lo..hi).fold(BigInt::one(), |acc, i| acc * i);
    if a >= b {
        int(span(b, a))
    } else {
        Rational::new(BigInt::one(), span(a, b))
    }
}

/// Gamma(a + 1/2) / sqrt(pi) = (2a)! / (4^a a!), exact for `a >= 0`.
pub fn gamma_half_over_sqrt_pi(a: u32) -> Rational {
    Rational::new(factorial(2 * a), (BigInt::one() << (2 * a)) * factorial(a))
}

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// B_n with B_1 = -1/2, from sum_{k=0}^{n} C(n+1, k) B_k = 0.
///
/// The table grows on demand; readers share it and a single writer extends it.
pub fn bernoulli_number(n: u32) -> Rational {
    let n = n as usize;
    if let Some(b) = BERNOULLI.read().expect("bernoulli table poisoned").get(n) {
        return b.clone();
    }
    let mut table = BERNOULLI.write().expect("bernoulli table poisoned");
    if table.is_empty() {
        table.push(Rational::one());
    }
    while table.len() <= n {
        let m = table.len();
        if m > 1 && m % 2 == 1 {
            table.push(Rational::zero());
            continue;
        }
        let sum = table
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, b)| {
                acc + b * int(binomial(m as u32 + 1, k as i64))
            });
        table.push(-sum / int(m as i64 + 1));
    }
    table[n].clone()
}

/// Z(k) = zeta(2k) / pi^(2k) = (-1)^(k+1) B_{2k} 2^(2k-1) / (2k)!.
pub fn zeta_even_ratio(k: u32) -> Rational {
    assert!(k >= 1, "zeta_even_ratio needs k >= 1");
    let b = bernoulli_number(2 * k);
    let scaled = b * int(BigInt::one() << (2 * k - 1)) / int(factorial(2 * k));
    if k.is_multiple_of(2) {
        -scaled
    } else {
        scaled
    }
}

/// zeta(2k) as an exact multiple of pi^(2k).
pub fn zeta_even(k: u32) -> PiScaled {
    PiScaled::new(zeta_even_ratio(k), 2 * k as i64)
}

/// B_k(x) = sum_j C(k, j) B_j x^(k-j).
pub fn bernoulli_poly(k: u32, x: &Rational) -> Rational {
    (0..=k).fold(Rational::zero(), |acc, j| {
        acc + int(binomial(k, j as i64)) * bernoulli_number(j) * pow(x, k - j)
    })
}

/// sum_{j=1}^{n} j^(-s), the rational value of zeta(s) - zeta(s, n+1).
pub fn harmonic(s: u32, n: u32) -> Rational {
    (1..=n as i64).fold(Rational::zero(), |acc, j| {
        acc + Rational::new(BigInt::one(), BigInt::from(j).pow(s))
    })
}

pub fn pow(x: &Rational, e: u32) -> Rational {
    num_traits::pow::pow(x.clone(), e as usize)
}

pub fn pow2(e: u32) -> Rational {
    int(BigInt::one() << e)
}

pub fn sign(n: u32) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// gcd of numerators over lcm of denominators, so that `values / result` are
/// coprime integers. Zero for an all-zero slice.
pub fn rational_content(values: &[Rational]) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for v in values.iter().filter(|v| !v.is_zero()) {
        num = num.gcd(v.numer());
        den = den.lcm(v.denom());
    }
    if num.is_zero() {
        Rational::zero()
    } else {
        Rational::new(num, den)
    }
}

/// Exact value `coeff * pi^pi_pow`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiScaled {
    coeff: Rational,
    pi_pow: i64,
}

impl PiScaled {
    pub fn new(coeff: Rational, pi_pow: i64) -> Self {
        let pi_pow = if coeff.is_zero() { 0 } else { pi_pow };
        PiScaled { coeff, pi_pow }
    }

    pub fn rational(coeff: Rational) -> Self {
        PiScaled::new(coeff, 0)
    }

    pub fn zero() -> Self {
        PiScaled::rational(Rational::zero())
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_pow(&self) -> i64 {
        self.pi_pow
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Sum of two values carrying the same power of pi. Zero is compatible
    /// with every exponent.
    pub fn checked_add(&self, other: &PiScaled) -> Result<PiScaled> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_pow != other.pi_pow {
            return Err(Error::PiExponentMismatch {
                left: self.pi_pow,
                right: other.pi_pow,
            });
        }
        Ok(PiScaled::new(&self.coeff + &other.coeff, self.pi_pow))
    }

    pub fn checked_sub(&self, other: &PiScaled) -> Result<PiScaled> {
        self.checked_add(&-other.clone())
    }

    pub fn scale(&self, r: &Rational) -> PiScaled {
        PiScaled::new(&self.coeff * r, self.pi_pow)
    }
}

impl Mul for &PiScaled {
    type Output = PiScaled;
    fn mul(self, rhs: &PiScaled) -> PiScaled {
        PiScaled::new(&self.coeff * &rhs.coeff, self.pi_pow + rhs.pi_pow)
    }
}

impl Neg for PiScaled {
    type Output = PiScaled;
    fn neg(self) -> PiScaled {
        PiScaled::new(-self.coeff, self.pi_pow)
    }
}

impl fmt::Display for PiScaled {
    /// `pi^2/8`, `67*pi^4/4860`, `-pi^2/6`, `8/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi_pow == 0 {
            return write!(f, "{}", self.coeff);
        }
        let pi = if self.pi_pow == 1 {
            "pi".to_string()
        } else {
            format!("pi^{}", self.pi_pow)
        };
        let num = self.coeff.numer();
        let den = self.coeff.denom();
        let head = if num.abs().is_one() {
            format!("{}{pi}", if num.is_negative() { "-" } else { "" })
        } else {
            format!("{num}*{pi}")
        };
        if den.is_one() {
            write!(f, "{head}")
        } else {
            write!(f, "{head}/{den}")
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PiScaledWire {
    coeff: String,
    pi_pow: i64,
}

impl Serialize for PiScaled {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PiScaledWire {
            coeff: self.coeff.to_string(),
            pi_pow: self.pi_pow,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PiScaled {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = PiScaledWire::deserialize(d)?;
        let coeff = parse_rational(&w.coeff).map_err(serde::de::Error::custom)?;
        Ok(PiScaled::new(coeff, w.pi_pow))
    }
}
