use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{int, parse_rational, rational_content, Rational};
use crate::error::{Error, Result};

/// Dense polynomial over `Rational` in one named formal variable.
///
/// `coeffs[i]` multiplies `var^i`. Trailing zeros are trimmed, so the zero
/// polynomial has no coefficients and equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    var: String,
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(var: &str, coeffs: Vec<Rational>) -> Self {
        let mut p = RationalPolynomial {
            var: var.to_string(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn zero(var: &str) -> Self {
        RationalPolynomial::new(var, Vec::new())
    }

    pub fn constant(var: &str, c: Rational) -> Self {
        RationalPolynomial::new(var, vec![c])
    }

    /// `c * var^d`
    pub fn monomial(var: &str, c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        RationalPolynomial::new(var, coeffs)
    }

    /// Polynomial with small integer coefficients, ascending.
    pub fn from_ints(var: &str, coeffs: &[i64]) -> Self {
        RationalPolynomial::new(var, coeffs.iter().map(|&c| int(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `var^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        RationalPolynomial::new(&self.var, self.coeffs.iter().map(|c| c * r).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(
            RationalPolynomial::constant(&self.var, Rational::one()),
            |acc, _| &acc * self,
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RationalPolynomial) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len().saturating_sub(dd);
        let mut quot = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let q = &rem[i + dd] / &lead;
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * c;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (
            RationalPolynomial::new(&self.var, quot),
            RationalPolynomial::new(&self.var, rem),
        )
    }

    /// Quotient of an exact division.
    pub fn div_exact(&self, divisor: &RationalPolynomial) -> Result<Self> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Splits into a positive rational prefactor and a primitive integer
    /// polynomial: `self = prefactor * sum ints[i] var^i`.
    pub fn primitive_form(&self) -> (Rational, Vec<BigInt>) {
        let content = rational_content(&self.coeffs);
        if content.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| (c / &content).to_integer())
            .collect();
        (content, ints)
    }

    pub fn with_var(&self, var: &str) -> Self {
        RationalPolynomial {
            var: var.to_string(),
            coeffs: self.coeffs.clone(),
        }
    }

    /// Human-readable rendering, ascending powers, e.g. `2 + 5*rho^2`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, i),
            };
            if i == 0 {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new(
            &self.var,
            (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
        )
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new(
            &self.var,
            (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect(),
        )
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero(&self.var);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(&self.var, out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Lagrange-free exact interpolation: Newton divided differences through
/// `(xs[i], ys[i])`, converted back to the monomial basis.
pub fn interpolate(var: &str, xs: &[Rational], ys: &[Rational]) -> RationalPolynomial {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut table = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form.
    let mut acc = RationalPolynomial::zero(var);
    for i in (0..n).rev() {
        let factor = RationalPolynomial::new(var, vec![-xs[i].clone(), Rational::one()]);
        acc = &(&acc * &factor) + &RationalPolynomial::constant(var, table[i].clone());
    }
    acc
}

/// Polynomial in `var` for the rising factorial (var)_n.
pub fn rising_factorial_poly(var: &str, n: u32) -> RationalPolynomial {
    (0..n).fold(
        RationalPolynomial::constant(var, Rational::one()),
        |acc, i| &acc * &RationalPolynomial::new(var, vec![int(i), Rational::one()]),
    )
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    var: String,
    coeffs: Vec<String>,
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyWire {
            var: self.var.clone(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = PolyWire::deserialize(d)?;
        let coeffs = w
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(RationalPolynomial::new(&w.var, coeffs))
    }
}
