use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;

/// Binary working precision for `digits` significant decimal digits plus
/// ten guard digits.
pub fn bits_for_digits(digits: u32) -> u64 {
    ((digits as f64 + 10.0) * std::f64::consts::LOG2_10).ceil() as u64 + 8
}

/// `mant * 2^exp`, with `mant` rounded to at most `prec` bits.
#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u64,
}

impl BigFloat {
    pub fn zero(prec: u64) -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn from_int(n: impl Into<BigInt>, prec: u64) -> Self {
        BigFloat {
            mant: n.into(),
            exp: 0,
            prec,
        }
        .normalized()
    }

    /// `mant * 2^exp` rounded to `prec` bits.
    pub fn from_parts(mant: BigInt, exp: i64, prec: u64) -> Self {
        BigFloat { mant, exp, prec }.normalized()
    }

    pub fn from_rational(r: &Rational, prec: u64) -> Self {
        if r.is_zero() {
            return BigFloat::zero(prec);
        }
        let shift = prec as i64 + 2 + r.denom().bits() as i64 - r.numer().bits() as i64;
        let num = shl(r.numer(), shift);
        let q = round_div(&num, r.denom());
        BigFloat {
            mant: q,
            exp: -shift,
            prec,
        }
        .normalized()
    }

    pub fn prec(&self) -> u64 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn with_prec(&self, prec: u64) -> Self {
        BigFloat {
            mant: self.mant.clone(),
            exp: self.exp,
            prec,
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        let bits = self.mant.bits();
        if bits > self.prec {
            let drop = bits - self.prec;
            self.mant = round_shr(&self.mant, drop);
            self.exp += drop as i64;
        }
        if self.mant.is_zero() {
            self.exp = 0;
        }
        self
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            mant: -&self.mant,
            exp: self.exp,
            prec: self.prec,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
            prec: self.prec,
        }
    }

    pub fn add(&self, other: &BigFloat) -> Self {
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            return other.with_prec(prec);
        }
        if other.is_zero() {
            return self.with_prec(prec);
        }
        // Align to the smaller exponent, but never keep more bits than the
        // larger operand can see.
        let top = self.top().max(other.top());
        let floor = top - prec as i64 - 4;
        let lo = self.exp.min(other.exp).max(floor);
        let a = align(&self.mant, self.exp, lo);
        let b = align(&other.mant, other.exp, lo);
        BigFloat {
            mant: a + b,
            exp: lo,
            prec,
        }
        .normalized()
    }

    pub fn sub(&self, other: &BigFloat) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &BigFloat) -> Self {
        let prec = self.prec.max(other.prec);
        BigFloat {
            mant: &self.mant * &other.mant,
            exp: self.exp + other.exp,
            prec,
        }
        .normalized()
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &BigFloat) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        let prec = self.prec.max(other.prec);
        let shift = prec as i64 + 2 + other.mant.bits() as i64 - self.mant.bits() as i64;
        let num = shl(&self.mant, shift.max(0));
        let q = round_div(&num, &other.mant);
        BigFloat {
            mant: q,
            exp: self.exp - other.exp - shift.max(0),
            prec,
        }
        .normalized()
    }

    pub fn powi(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = BigFloat::from_int(1, self.prec);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exponent of the leading bit plus one: `|x| < 2^top`.
    fn top(&self) -> i64 {
        self.exp + self.mant.bits() as i64
    }

    /// The exact value as a fraction.
    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << self.exp as usize)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    /// Decimal rendering with `sig` significant digits, rounded half away
    /// from zero; positional for moderate magnitudes, scientific otherwise.
    pub fn to_decimal(&self, sig: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let sig = sig.max(1);
        let value = self.to_rational().abs();
        let mut e = decimal_exponent(&value);
        let mut digits = scaled_round(&value, sig as i64 - 1 - e);
        if digits.to_string().len() > sig as usize {
            e += 1;
            digits = scaled_round(&value, sig as i64 - 1 - e);
        }
        let s = digits.to_string();
        let sign = if self.mant.sign() == Sign::Minus {
            "-"
        } else {
            ""
        };
        if (-6..sig as i64).contains(&e) && e < 40 {
            if e >= 0 {
                let (int_part, frac) = s.split_at(e as usize + 1);
                if frac.is_empty() {
                    format!("{sign}{int_part}")
                } else {
                    format!("{sign}{int_part}.{frac}")
                }
            } else {
                format!("{sign}0.{}{s}", "0".repeat((-e - 1) as usize))
            }
        } else {
            let (head, tail) = s.split_at(1);
            if tail.is_empty() {
                format!("{sign}{head}e{e}")
            } else {
                format!("{sign}{head}.{tail}e{e}")
            }
        }
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.to_rational() == other.to_rational()
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.to_rational().cmp(&other.to_rational()))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec as f64) / std::f64::consts::LOG2_10).floor() as u32;
        f.write_str(&self.to_decimal(digits.saturating_sub(10).max(1)))
    }
}

fn shl(x: &BigInt, s: i64) -> BigInt {
    if s >= 0 {
        x << s as usize
    } else {
        x >> (-s) as usize
    }
}

fn align(m: &BigInt, exp: i64, lo: i64) -> BigInt {
    shl(m, exp - lo)
}

/// `x / 2^s` rounded to nearest, ties away from zero.
fn round_shr(x: &BigInt, s: u64) -> BigInt {
    let half = BigInt::one() << (s - 1) as usize;
    let mag = (x.abs() + half) >> s as usize;
    if x.is_negative() {
        -mag
    } else {
        mag
    }
}

/// `a / b` rounded to nearest, ties away from zero.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.abs().div_rem(&b.abs());
    let q = if (r << 1usize) >= b.abs() { q + 1 } else { q };
    if (a.is_negative()) != (b.is_negative()) {
        -q
    } else {
        q
    }
}

/// `floor(log10(v))` for positive `v`.
fn decimal_exponent(v: &Rational) -> i64 {
    let approx =
        (v.numer().bits() as i64 - v.denom().bits() as i64) as f64 / std::f64::consts::LOG2_10;
    let mut e = approx.floor() as i64;
    let ten = Rational::from_integer(BigInt::from(10));
    let pow10 = |e: i64| {
        if e >= 0 {
            num_traits::pow(ten.clone(), e as usize)
        } else {
            Rational::one() / num_traits::pow(ten.clone(), (-e) as usize)
        }
    };
    while &pow10(e) > v {
        e -= 1;
    }
    while &pow10(e + 1) <= v {
        e += 1;
    }
    e
}

/// `round(v * 10^s)` for positive `v`.
fn scaled_round(v: &Rational, s: i64) -> BigInt {
    let ten = BigInt::from(10);
    let scaled = if s >= 0 {
        v * Rational::from_integer(num_traits::pow(ten, s as usize))
    } else {
        v / Rational::from_integer(num_traits::pow(ten, (-s) as usize))
    };
    round_div(scaled.numer(), scaled.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    const P: u64 = 256;

    #[test]
    fn rational_round_trip_is_close() {
        let x = BigFloat::from_rational(&rat(1, 3), P);
        let err = (x.to_rational() - rat(1, 3)).abs();
        assert!(err < Rational::new(BigInt::one(), BigInt::one() << 250usize));
    }

    #[test]
    fn arithmetic() {
        let a = BigFloat::from_int(3, P);
        let b = BigFloat::from_int(4, P);
        assert_eq!(a.add(&b), BigFloat::from_int(7, P));
        assert_eq!(a.sub(&b), BigFloat::from_int(-1, P));
        assert_eq!(a.mul(&b), BigFloat::from_int(12, P));
        assert_eq!(b.div(&BigFloat::from_int(2, P)), BigFloat::from_int(2, P));
        assert_eq!(a.powi(4), BigFloat::from_int(81, P));
        assert_eq!(a.div(&b).to_decimal(5), "0.75000");
    }

    #[test]
    fn decimal_output() {
        let third = BigFloat::from_rational(&rat(8, 3), P);
        assert_eq!(third.to_decimal(10), "2.666666667");
        assert_eq!(BigFloat::from_int(1, P).to_decimal(5), "1.0000");
        assert_eq!(BigFloat::from_int(1, P).to_decimal(1), "1");
        assert_eq!(
            BigFloat::from_rational(&rat(-1, 8), P).to_decimal(3),
            "-0.125"
        );
        assert_eq!(
            BigFloat::from_rational(&rat(999999, 1000000), P).to_decimal(3),
            "1.00"
        );
        assert_eq!(
            BigFloat::from_rational(&rat(1, 1000000000), P).to_decimal(2),
            "1.0e-9"
        );
        assert_eq!(
            BigFloat::from_int(BigInt::from(10).pow(50), P).to_decimal(3),
            "1.00e50"
        );
    }

    #[test]
    fn cancellation_keeps_small_differences() {
        let a = BigFloat::from_rational(&rat(1, 3), P);
        let b = a.add(&BigFloat::from_rational(
            &Rational::new(BigInt::one(), BigInt::from(10).pow(40)),
            P,
        ));
        let d = b.sub(&a);
        assert_eq!(&d.to_decimal(5)[..5], "1.000");
    }
}
