//! pi and the sine/cosine of rational multiples of pi.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::bigfloat::{bits_for_digits, BigFloat};
use crate::arith::{rat, Rational};

const GUARD: u64 = 32;

/// `atan(1/n) * 2^bits`, truncated; error below one unit per term.
fn atan_inv_fixed(n: u64, bits: u64) -> BigInt {
    let n2 = BigInt::from(n) * n;
    let mut term = (BigInt::one() << bits as usize) / n;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !term.is_zero() {
        let t = &term / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += t;
        } else {
            sum -= t;
        }
        term /= &n2;
        k += 1;
    }
    sum
}

/// pi by Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi_machin(prec: u64) -> BigFloat {
    let bits = prec + GUARD;
    let fixed = atan_inv_fixed(5, bits) * 16 - atan_inv_fixed(239, bits) * 4;
    BigFloat::from_parts(fixed, -(bits as i64), prec)
}

/// pi by Gauss's formula `48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239)`.
pub fn pi_gauss(prec: u64) -> BigFloat {
    let bits = prec + GUARD;
    let fixed = atan_inv_fixed(18, bits) * 48 + atan_inv_fixed(57, bits) * 32
        - atan_inv_fixed(239, bits) * 20;
    BigFloat::from_parts(fixed, -(bits as i64), prec)
}

static PI_CACHE: Mutex<Option<BigFloat>> = Mutex::new(None);

/// pi at `prec` bits, cached at the highest precision seen so far.
pub fn pi_bits(prec: u64) -> BigFloat {
    let mut cache = PI_CACHE.lock().expect("pi cache poisoned");
    match cache.as_ref() {
        Some(p) if p.prec() >= prec => p.with_prec(prec),
        _ => {
            let p = pi_machin(prec);
            *cache = Some(p.clone());
            p
        }
    }
}

/// pi to `digits` significant digits (plus guard digits).
pub fn pi_value(digits: u32) -> BigFloat {
    pi_bits(bits_for_digits(digits))
}

/// Taylor series for `|x| <= pi/4`; returns `(sin x, cos x)`.
fn sin_cos_kernel(x: &BigFloat) -> (BigFloat, BigFloat) {
    let prec = x.prec();
    let work = prec + 16;
    let x = x.with_prec(work);
    let x2 = x.mul(&x);
    let eps = Rational::new(BigInt::one(), BigInt::one() << (work as usize + 8));
    let small = |t: &BigFloat| t.is_zero() || t.to_rational().abs() < eps;

    let mut sin = x.clone();
    let mut term = x.clone();
    let mut k = 1u64;
    loop {
        term = term
            .mul(&x2)
            .div(&BigFloat::from_int(-((2 * k * (2 * k + 1)) as i64), work));
        if small(&term) {
            break;
        }
        sin = sin.add(&term);
        k += 1;
    }

    let mut cos = BigFloat::from_int(1, work);
    let mut term = BigFloat::from_int(1, work);
    let mut k = 1u64;
    loop {
        term = term
            .mul(&x2)
            .div(&BigFloat::from_int(-(((2 * k - 1) * 2 * k) as i64), work));
        if small(&term) {
            break;
        }
        cos = cos.add(&term);
        k += 1;
    }
    (sin.with_prec(prec), cos.with_prec(prec))
}

/// `sin(r pi)`. Exact multiples of pi give an exact zero; the argument is
/// reduced exactly before any rounding happens.
pub fn sin_pi(r: &Rational, prec: u64) -> BigFloat {
    let two = Rational::from_integer(BigInt::from(2));
    let mut t = r - &two * (r / &two).floor();
    let mut negate = false;
    if t >= Rational::one() {
        t -= Rational::one();
        negate = true;
    }
    if t.is_zero() {
        return BigFloat::zero(prec);
    }
    if t > rat(1, 2) {
        t = Rational::one() - t;
    }
    let pi = pi_bits(prec + 16);
    let value = if t > rat(1, 4) {
        let arg = BigFloat::from_rational(&(rat(1, 2) - t), prec + 16).mul(&pi);
        sin_cos_kernel(&arg).1
    } else {
        let arg = BigFloat::from_rational(&t, prec + 16).mul(&pi);
        sin_cos_kernel(&arg).0
    };
    let value = value.with_prec(prec);
    if negate {
        value.neg()
    } else {
        value
    }
}

/// `cos(r pi) = sin((r + 1/2) pi)`.
pub fn cos_pi(r: &Rational, prec: u64) -> BigFloat {
    sin_pi(&(r + rat(1, 2)), prec)
}

/// True when `r` is an integer, i.e. `sin(r pi)` vanishes.
pub fn sin_pi_vanishes(r: &Rational) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_50: &str = "3.1415926535897932384626433832795028841971693993751";

    #[test]
    fn pi_formulas_agree() {
        for digits in [10u32, 20, 60, 200] {
            let prec = bits_for_digits(digits);
            assert_eq!(
                pi_machin(prec).to_decimal(digits),
                pi_gauss(prec).to_decimal(digits)
            );
        }
        assert_eq!(pi_value(20).to_decimal(20), "3.1415926535897932385");
        assert_eq!(pi_value(10).to_decimal(10), "3.141592654");
        assert_eq!(pi_value(50).to_decimal(50), PI_50);
    }

    #[test]
    fn pi_precision_is_consistent() {
        let short = pi_value(20).to_decimal(20);
        let long = pi_value(40).to_decimal(40);
        let reround = BigFloat::from_rational(&pi_value(40).to_rational(), bits_for_digits(20))
            .to_decimal(20);
        assert_eq!(short, reround);
        assert!(long.starts_with(&short[..19]));
    }

    fn close(x: &BigFloat, r: Rational, digits: i32) -> bool {
        let tol = Rational::new(BigInt::one(), BigInt::from(10).pow(digits as u32));
        (x.to_rational() - r).abs() < tol
    }

    #[test]
    fn special_angles() {
        let prec = bits_for_digits(40);
        assert!(sin_pi(&Rational::one(), prec).is_zero());
        assert!(sin_pi(&rat(-3, 1), prec).is_zero());
        assert!(cos_pi(&rat(1, 2), prec).is_zero());
        assert!(close(&sin_pi(&rat(1, 2), prec), Rational::one(), 45));
        assert!(close(&sin_pi(&rat(1, 6), prec), rat(1, 2), 45));
        assert!(close(&cos_pi(&rat(1, 3), prec), rat(1, 2), 45));
        assert!(close(&sin_pi(&rat(7, 6), prec), rat(-1, 2), 45));
        assert!(close(&cos_pi(&rat(5, 3), prec), rat(1, 2), 45));
        // sin(pi/4)^2 = 1/2
        let s = sin_pi(&rat(1, 4), prec);
        assert!(close(&s.mul(&s), rat(1, 2), 45));
        assert!(sin_pi_vanishes(&rat(4, 2)));
        assert!(!sin_pi_vanishes(&rat(1, 2)));
    }

    #[test]
    fn pythagoras() {
        let prec = bits_for_digits(60);
        for (p, q) in [(1, 7), (3, 11), (5, 13), (-2, 9), (17, 5)] {
            let r = rat(p, q);
            let s = sin_pi(&r, prec);
            let c = cos_pi(&r, prec);
            let one = s.mul(&s).add(&c.mul(&c));
            assert!(close(&one, Rational::one(), 65), "{r}");
        }
    }
}
