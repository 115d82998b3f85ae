//! High-precision numeric evaluation of the raw sums, used to cross-check
//! every closed form.

mod bigfloat;
mod trig;

use std::time::Instant;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

pub use bigfloat::{bits_for_digits, BigFloat};
pub use trig::{cos_pi, pi_bits, pi_gauss, pi_machin, pi_value, sin_pi, sin_pi_vanishes};

use crate::arith::{int, pow, PiScaled, Rational};
use crate::error::{Error, Result};
use crate::report::Check;
use crate::sums::{cc_sum, dowker, gardner_fisher};

pub const DEFAULT_DIGITS: u32 = 60;

/// Precision from `TRIGSUM_DIGITS`, else 60.
pub fn default_digits() -> u32 {
    std::env::var("TRIGSUM_DIGITS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&d| d >= 10)
        .unwrap_or(DEFAULT_DIGITS)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SumKind {
    /// `csc^(2v)`
    CscOnly,
    /// `cot^(2v) csc^(2w)`
    Cc,
    /// `tan^(2v) sec^(2w)`
    Ts,
}

/// Direct summation over `k = 1..m-1` of the chosen summand at angle
/// `k pi / (ell m)`. For `ts` with `ell = 1` and even `m` the term
/// `k = m/2` is skipped.
pub fn raw_trig_sum(
    m: u64,
    v: u32,
    w: u32,
    ell: u32,
    kind: SumKind,
    digits: u32,
) -> Result<BigFloat> {
    if ell == 0 {
        return Err(Error::OutOfRange("ell must be at least 1".into()));
    }
    let prec = bits_for_digits(digits);
    let work = prec + 16;
    let mut total = BigFloat::zero(work);
    for k in 1..m {
        let r = Rational::new(k.into(), (ell as u64 * m).into());
        let term = match kind {
            SumKind::CscOnly | SumKind::Cc => {
                if sin_pi_vanishes(&r) {
                    return Err(Error::Pole { k });
                }
                let s = sin_pi(&r, work);
                let (num_pow, den_pow) = if kind == SumKind::CscOnly {
                    (0, 2 * v)
                } else {
                    (2 * v, 2 * v + 2 * w)
                };
                let num = if num_pow == 0 {
                    BigFloat::from_int(1, work)
                } else {
                    cos_pi(&r, work).powi(num_pow)
                };
                num.div(&s.powi(den_pow))
            }
            SumKind::Ts => {
                if ell == 1 && 2 * k == m {
                    continue;
                }
                if sin_pi_vanishes(&(&r + crate::arith::rat(1, 2))) {
                    return Err(Error::Pole { k });
                }
                let c = cos_pi(&r, work);
                let num = if v == 0 {
                    BigFloat::from_int(1, work)
                } else {
                    sin_pi(&r, work).powi(2 * v)
                };
                num.div(&c.powi(2 * v + 2 * w))
            }
        };
        total = total.add(&term);
    }
    Ok(total.with_prec(prec))
}

/// `r pi^e` at the precision for `digits`.
pub fn eval_pi_scaled(x: &PiScaled, digits: u32) -> BigFloat {
    let prec = bits_for_digits(digits);
    let work = prec + 16;
    let c = BigFloat::from_rational(x.coeff(), work);
    let e = x.pi_pow();
    let value = if e == 0 {
        c
    } else if e > 0 {
        c.mul(&pi_bits(work).powi(e as u32))
    } else {
        c.div(&pi_bits(work).powi((-e) as u32))
    };
    value.with_prec(prec)
}

/// Outcome of one exact-versus-numeric comparison.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub pass: bool,
    pub exact: String,
    pub numeric: String,
    pub relative_difference: String,
}

/// Passes when `|exact - numeric| < 10^-(digits-10) |exact|` (absolute when
/// the exact value is zero).
pub fn check_exact_vs_numeric(exact: &PiScaled, numeric: &BigFloat, digits: u32) -> Verdict {
    let e = eval_pi_scaled(exact, digits + 10);
    let diff = (e.to_rational() - numeric.to_rational()).abs();
    let scale = if exact.is_zero() {
        Rational::from_integer(1.into())
    } else {
        e.to_rational().abs()
    };
    let tol = Rational::new(
        1.into(),
        num_bigint::BigInt::from(10).pow(digits.saturating_sub(10)),
    );
    let rel = &diff / &scale;
    let prec = bits_for_digits(digits);
    Verdict {
        pass: rel < tol,
        exact: e.with_prec(prec).to_decimal(digits),
        numeric: numeric.to_decimal(digits),
        relative_difference: BigFloat::from_rational(&rel, 64).to_decimal(3),
    }
}

fn verdict_check(
    id: String,
    anchor: &str,
    exact: &PiScaled,
    numeric: Result<BigFloat>,
    digits: u32,
    start: Instant,
) -> Check {
    match numeric {
        Ok(n) => {
            let v = check_exact_vs_numeric(exact, &n, digits);
            let ms = start.elapsed().as_secs_f64() * 1e3;
            Check::verdict(
                id,
                anchor,
                v.pass,
                v.exact,
                format!("{} (rel diff {})", v.numeric, v.relative_difference),
                ms,
            )
        }
        Err(err) => Check::verdict(id, anchor, false, exact.to_string(), err.to_string(), 0.0),
    }
}

/// Raw cosecant-power sums for `l = 1` against the Dowker closed form and
/// for `l = 2` against the Gardner-Fisher value times `(2m/pi)^(2v)`.
pub fn csc_crosscheck(ms: &[u64], v_max: u32, digits: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for &m in ms {
        for v in 1..=v_max {
            let start = Instant::now();
            let raw = raw_trig_sum(m, v, 0, 1, SumKind::CscOnly, digits);
            out.push(verdict_check(
                format!("csc l=1 m={m} v={v}"),
                "raw csc sum vs Dowker closed form",
                &PiScaled::rational(dowker(m, v)),
                raw,
                digits,
                start,
            ));
            let start = Instant::now();
            // sum csc^(2v)(k pi/2m) = (2m/pi)^(2v) S_{m,v}
            let exact =
                &gardner_fisher(m, v) * &PiScaled::new(pow(&int(2 * m), 2 * v), -2 * v as i64);
            let raw = raw_trig_sum(m, v, 0, 2, SumKind::CscOnly, digits);
            out.push(verdict_check(
                format!("csc l=2 m={m} v={v}"),
                "raw csc sum vs Gardner-Fisher closed form",
                &exact,
                raw,
                digits,
                start,
            ));
        }
    }
    out
}

/// Raw cotangent-cosecant sums against `cc_sum` for both `l`.
pub fn cc_crosscheck(ms: &[u64], pairs: &[(u32, u32)], digits: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for &m in ms {
        for &(v, w) in pairs {
            for ell in [1u32, 2] {
                let start = Instant::now();
                let id = format!("cc m={m} v={v} w={w} l={ell}");
                match cc_sum(m, v, w, ell) {
                    Ok(exact) => {
                        let raw = raw_trig_sum(m, v, w, ell, SumKind::Cc, digits);
                        out.push(verdict_check(
                            id,
                            "raw cot-csc sum vs closed form",
                            &PiScaled::rational(exact),
                            raw,
                            digits,
                            start,
                        ));
                    }
                    Err(e) => out.push(Check::verdict(
                        id,
                        "raw cot-csc sum vs closed form",
                        false,
                        e.to_string(),
                        String::new(),
                        0.0,
                    )),
                }
            }
        }
    }
    out
}

/// Raw tangent-secant sums for even `m` against `2 S^CC_{m/2,v,w,2}`.
pub fn ts_crosscheck(ns: &[u64], pairs: &[(u32, u32)], digits: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for &n in ns {
        for &(v, w) in pairs {
            let start = Instant::now();
            let id = format!("ts m={} v={v} w={w}", 2 * n);
            match crate::sums::ts_sum(2 * n, v, w) {
                Ok(exact) => {
                    let raw = raw_trig_sum(2 * n, v, w, 1, SumKind::Ts, digits);
                    out.push(verdict_check(
                        id,
                        "raw tan-sec sum vs reduction",
                        &PiScaled::rational(exact),
                        raw,
                        digits,
                        start,
                    ));
                }
                Err(e) => out.push(Check::verdict(
                    id,
                    "raw tan-sec sum vs reduction",
                    false,
                    e.to_string(),
                    String::new(),
                    0.0,
                )),
            }
        }
    }
    out
}

/// Absolute error of the raw `l = 1` cosecant sum at `digits`, measured
/// against the exact value.
pub fn raw_error(m: u64, v: u32, digits: u32) -> Rational {
    let raw = raw_trig_sum(m, v, 0, 1, SumKind::CscOnly, digits).expect("no poles for l = 1");
    let exact = dowker(m, v);
    (raw.to_rational() - exact).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use num_traits::Zero;

    #[test]
    fn raw_sum_values() {
        let s = raw_trig_sum(3, 1, 0, 1, SumKind::CscOnly, 60).unwrap();
        assert!(check_exact_vs_numeric(&PiScaled::rational(rat(8, 3)), &s, 60).pass);
        assert_eq!(&s.to_decimal(20), "2.6666666666666666667");
        let one = raw_trig_sum(2, 2, 0, 1, SumKind::CscOnly, 60).unwrap();
        assert!(check_exact_vs_numeric(&PiScaled::rational(int(1)), &one, 60).pass);
        // csc^2(pi/8) + csc^2(pi/4) + csc^2(3pi/8) = 10
        let ten = raw_trig_sum(4, 1, 0, 2, SumKind::CscOnly, 60).unwrap();
        assert!(check_exact_vs_numeric(&PiScaled::rational(int(10)), &ten, 60).pass);
    }

    #[test]
    fn gardner_fisher_numeric() {
        let raw = raw_trig_sum(2, 1, 0, 2, SumKind::CscOnly, 60).unwrap();
        // S_{2,1} = (pi/4)^2 csc^2(pi/4)
        let scaled = raw
            .mul(&pi_value(70).powi(2))
            .div(&BigFloat::from_int(16, raw.prec()));
        assert!(check_exact_vs_numeric(&PiScaled::new(rat(1, 8), 2), &scaled, 60).pass);
    }

    #[test]
    fn tolerance_catches_perturbation() {
        let exact = PiScaled::rational(rat(8, 3));
        let raw = raw_trig_sum(3, 1, 0, 1, SumKind::CscOnly, 60).unwrap();
        let bump = BigFloat::from_rational(
            &Rational::new(1.into(), num_bigint::BigInt::from(10).pow(20)),
            raw.prec(),
        );
        assert!(!check_exact_vs_numeric(&exact, &raw.add(&bump), 60).pass);
    }

    #[test]
    fn ts_skips_the_pole() {
        // tan^0 sec^2 over k = 1, 2, 4, 5 at pi/6 steps: 4/3 + 4 + 4 + 4/3
        let s = raw_trig_sum(6, 0, 1, 1, SumKind::Ts, 40).unwrap();
        assert!(check_exact_vs_numeric(&PiScaled::rational(rat(32, 3)), &s, 40).pass);
        assert_eq!(
            raw_trig_sum(3, 1, 0, 0, SumKind::Cc, 40).unwrap_err(),
            Error::OutOfRange("ell must be at least 1".into())
        );
    }

    #[test]
    fn pi_scaled_evaluation() {
        let v = eval_pi_scaled(&PiScaled::new(rat(1, 8), 2), 30);
        assert_eq!(v.to_decimal(30), "1.23370055013616982735431137498");
        let inv = eval_pi_scaled(&PiScaled::new(int(1), -1), 20);
        assert_eq!(inv.to_decimal(20), "0.31830988618379067154");
    }

    #[test]
    fn more_digits_shrink_the_error() {
        let coarse = raw_error(7, 3, 40);
        let fine = raw_error(7, 3, 80);
        assert!(fine * num_traits::pow(int(10), 30) < coarse || coarse.is_zero());
    }
}
