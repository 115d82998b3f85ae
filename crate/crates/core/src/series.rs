//! Truncated power series over `Rational`.
//!
//! These are the independent oracles for the closed forms: `(x/sin x)^rho`
//! coefficients and Nörlund polynomial values straight from their generating
//! functions.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{factorial, int, pow, Rational};
use crate::error::{Error, Result};

/// Default truncation order for cosecant-number work.
pub const DEFAULT_ORDER: usize = 40;

/// Coefficients `0..=order` of a power series; everything above `order` is
/// unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = Rational::one();
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn reciprocal(&self) -> Result<TruncatedSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = Rational::one() / a0;
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let s = (1..=n).fold(Rational::zero(), |acc, i| {
                acc + &self.coeffs[i] * &out[n - i]
            });
            out.push(-s * &inv0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn int_pow(&self, mut p: u32) -> TruncatedSeries {
        let mut base = self.clone();
        let mut acc = TruncatedSeries::one(self.order());
        while p > 0 {
            if p & 1 == 1 {
                acc = acc.mul(&base);
            }
            p >>= 1;
            if p > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// JSON array of rational strings, for debugging output.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Wire(Vec<String>);
        serde_json::to_value(Wire(self.coeffs.iter().map(|c| c.to_string()).collect())).unwrap()
    }
}

/// `x / sin x = sum_k g_k x^(2k)`, stored in `y = x^2` up to `y^order`.
pub fn xcsc_series(order: usize) -> TruncatedSeries {
    // sin x / x = sum (-1)^k x^(2k) / (2k+1)!
    let sinc: Vec<Rational> = (0..=order)
        .map(|k| {
            let c = Rational::new(One::one(), factorial(2 * k as u32 + 1));
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    TruncatedSeries::new(sinc, order)
        .reciprocal()
        .expect("sin x / x has constant term 1")
}

/// Coefficient of `x^(2k)` in `(x / sin x)^rho`.
pub fn gcn_by_series(rho: u32, k: usize) -> Rational {
    xcsc_series(k).int_pow(rho).coeff(k).clone()
}

/// Nörlund polynomial `B^(order)_degree(x)`, read off
/// `(t / (e^t - 1))^order * e^(x t)`.
pub fn norlund_poly_value(order: u32, degree: usize, x: &Rational) -> Rational {
    // (e^t - 1)/t = sum t^k / (k+1)!
    let shifted_exp: Vec<Rational> = (0..=degree)
        .map(|k| Rational::new(One::one(), factorial(k as u32 + 1)))
        .collect();
    let bernoulli_gf = TruncatedSeries::new(shifted_exp, degree)
        .reciprocal()
        .expect("(e^t - 1)/t has constant term 1");
    let exp_xt: Vec<Rational> = (0..=degree)
        .map(|k| pow(x, k as u32) / int(factorial(k as u32)))
        .collect();
    let gf = bernoulli_gf
        .int_pow(order)
        .mul(&TruncatedSeries::new(exp_xt, degree));
    gf.coeff(degree) * int(factorial(degree as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{bernoulli_poly, rat};
    use proptest::prelude::*;

    fn s(values: &[Rational]) -> TruncatedSeries {
        TruncatedSeries::new(values.to_vec(), values.len() - 1)
    }

    #[test]
    fn multiplication() {
        let a = s(&[int(1), int(1)]);
        assert_eq!(a.mul(&a), s(&[int(1), int(2)]));
        let b = s(&[int(3), rat(1, 2), int(-4)]);
        assert_eq!(TruncatedSeries::one(2).mul(&b), b);
        let c = s(&[int(1), int(0), rat(-1, 6)]);
        let d = s(&[int(1), int(0), rat(1, 6)]);
        assert_eq!(c.mul(&d), s(&[int(1), int(0), int(0)]));
        // truncation to the smaller order
        assert_eq!(a.mul(&b).order(), 1);
    }

    #[test]
    fn reciprocal_of_sinc() {
        assert_eq!(
            TruncatedSeries::one(4).reciprocal().unwrap(),
            TruncatedSeries::one(4)
        );
        let sinc = s(&[int(1), int(0), rat(-1, 6), int(0), rat(1, 120)]);
        assert_eq!(
            sinc.reciprocal().unwrap(),
            s(&[int(1), int(0), rat(1, 6), int(0), rat(7, 360)])
        );
        assert_eq!(
            s(&[int(0), int(1)]).reciprocal(),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn powers() {
        let a = s(&[int(1), int(1), int(0)]);
        assert_eq!(a.int_pow(0), TruncatedSeries::one(2));
        assert_eq!(a.int_pow(1), a);
        assert_eq!(a.int_pow(3), s(&[int(1), int(3), int(3)]));
    }

    #[test]
    fn x_over_sin_coefficients() {
        let g = xcsc_series(5);
        assert_eq!(g.coeff(0), &int(1));
        assert_eq!(g.coeff(1), &rat(1, 6));
        assert_eq!(g.coeff(2), &rat(7, 360));
    }

    #[test]
    fn cosecant_numbers_from_series() {
        assert_eq!(gcn_by_series(1, 2), rat(7, 360));
        assert_eq!(gcn_by_series(2, 1), rat(1, 3));
        assert_eq!(gcn_by_series(4, 2), rat(11, 45));
        assert_eq!(gcn_by_series(0, 3), int(0));
        assert_eq!(gcn_by_series(0, 0), int(1));
    }

    #[test]
    fn norlund_values() {
        for m in 1..5 {
            assert_eq!(norlund_poly_value(m, 0, &rat(3, 7)), int(1));
        }
        assert_eq!(norlund_poly_value(4, 2, &int(2)), rat(-1, 3));
        assert_eq!(norlund_poly_value(2, 1, &int(1)), int(0));
        assert_eq!(norlund_poly_value(4, 4, &int(2)), rat(11, 30));
    }

    #[test]
    fn first_order_norlund_is_bernoulli() {
        for k in 0..=8 {
            for x in [int(0), int(1), rat(1, 2), rat(-3, 5), int(4)] {
                assert_eq!(norlund_poly_value(1, k, &x), bernoulli_poly(k as u32, &x));
            }
        }
    }

    #[test]
    fn json_debug_output() {
        let g = xcsc_series(2);
        assert_eq!(g.to_json().to_string(), r#"["1","1/6","7/360"]"#);
    }

    fn small_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-9i64..10, 1i64..6), order + 1).prop_map(move |cs| {
            TruncatedSeries::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect(), order)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mul_commutes(a in small_series(8), b in small_series(8)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn mul_associates(a in small_series(6), b in small_series(6), c in small_series(6)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn reciprocal_is_involution(a in small_series(6)) {
            prop_assume!(!a.coeff(0).is_zero());
            let inv = a.reciprocal().unwrap();
            prop_assert_eq!(a.mul(&inv), TruncatedSeries::one(6));
            prop_assert_eq!(inv.reciprocal().unwrap(), a);
        }
    }
}
