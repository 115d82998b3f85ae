//! Closed forms for the finite trigonometric power sums.
//!
//! Everything is stored divided by the natural power of pi, so all
//! coefficients are plain rationals; `x` below always stands for `m^2`.
//!
//! * Gardner-Fisher: `S_{m,v} = (pi/2m)^(2v) sum_{k<m} csc^(2v)(k pi/2m)`.
//! * Dowker: `sum_{k<m} csc^(2v)(k pi/m)`, a polynomial in `m^2`.
//! * `S^CC_{m,v,w,l} = sum_{k<m} cot^(2v) csc^(2w)(k pi/(l m))`, `l in {1,2}`.
//! * `S^TS_{2n,v,w,1} = sum tan^(2v) sec^(2w)(k pi/2n)`, skipping `k = n`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{
    bernoulli_number, binomial, factorial, gamma_half_over_sqrt_pi, gamma_ratio, int, pow, pow2,
    rat, sign, zeta_even_ratio, PiScaled, Rational,
};
use crate::cosecant::gcn_partition_method;
use crate::error::{Error, Result};
use crate::poly::RationalPolynomial;
use crate::report::Check;
use crate::series::norlund_poly_value;
use crate::symfun::sym_rat;

pub const MSQ: &str = "msq";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    /// `(2m^2)^v S_{m,v} / ((m^2 - 1) pi^(2v))`
    #[serde(rename = "gf_R")]
    GfR,
    /// `p_v = R_{v+1}`, built coefficient by coefficient.
    #[serde(rename = "gf_p")]
    GfP,
    /// Dowker sum as a polynomial in `m^2`.
    #[serde(rename = "dowker_q")]
    DowkerQ,
    /// Dowker sum divided by `m^2 - 1`.
    #[serde(rename = "dowker_T")]
    DowkerT,
}

/// A polynomial in `m^2` belonging to one of the sum families. Coefficients
/// already include the zeta ratios.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumPolynomial {
    pub family: Family,
    pub v: u32,
    #[serde(flatten)]
    pub poly: RationalPolynomial,
}

fn msq(m: u64) -> Rational {
    int(m) * int(m)
}

fn x_minus_one() -> RationalPolynomial {
    RationalPolynomial::from_ints(MSQ, &[-1, 1])
}

/// `c_{2v,i}` from the partition polynomial.
fn c_even(v: u32, i: u32) -> Rational {
    gcn_partition_method(i).eval(&int(2 * v))
}

/// `a_n = s(v,n) (2v-2n-1)! Z(v-n) / (2v-1)!`, the weight of
/// `m^(-2n) - m^(-2v)` in the normalized Gardner-Fisher sum.
fn gf_weight(v: u32, n: u32) -> Rational {
    sym_rat(v, n) * gamma_ratio(2 * v - 2 * n, 2 * v) * zeta_even_ratio(v - n)
}

/// `S_{m,v} / pi^(2v)`.
pub fn gardner_fisher_normalized(m: u64, v: u32) -> Rational {
    assert!(m >= 1 && v >= 1, "gardner_fisher needs m >= 1 and v >= 1");
    let x = msq(m);
    let tail = Rational::one() / pow(&x, v);
    (0..v).fold(Rational::zero(), |acc, n| {
        acc + gf_weight(v, n) * (Rational::one() / pow(&x, n) - &tail)
    })
}

/// `S_{m,v}` as an exact multiple of `pi^(2v)`. Panics if `m` or `v` is zero.
pub fn gardner_fisher(m: u64, v: u32) -> PiScaled {
    PiScaled::new(gardner_fisher_normalized(m, v), 2 * v as i64)
}

/// `R_v(x) = 2^v sum_n a_n (x^(v-n) - 1) / (x - 1)`.
pub fn gf_table_polynomial(v: u32) -> SumPolynomial {
    assert!(v >= 1);
    let mut num = RationalPolynomial::zero(MSQ);
    for n in 0..v {
        let term = &RationalPolynomial::monomial(MSQ, Rational::one(), (v - n) as usize)
            - &RationalPolynomial::constant(MSQ, Rational::one());
        num = &num + &term.scale(&gf_weight(v, n));
    }
    let poly = num
        .scale(&pow2(v))
        .div_exact(&x_minus_one())
        .expect("x - 1 divides the numerator");
    SumPolynomial {
        family: Family::GfR,
        v,
        poly,
    }
}

/// Coefficients of `p_v`, walking down from `p_{v,v} = 2^(v+1) Z(v+1)` by
/// `p_{v,j-1} = p_{v,j} + 2^(v+1)/(2v+1)! s(v+1, v+1-j) (2j-1)! Z(j)`.
pub fn gf_p_coeffs(v: u32) -> SumPolynomial {
    let scale = pow2(v + 1) / int(factorial(2 * v + 1));
    let mut coeffs = vec![Rational::zero(); v as usize + 1];
    coeffs[v as usize] = pow2(v + 1) * zeta_even_ratio(v + 1);
    for j in (1..=v).rev() {
        let step =
            &scale * sym_rat(v + 1, v + 1 - j) * int(factorial(2 * j - 1)) * zeta_even_ratio(j);
        coeffs[j as usize - 1] = &coeffs[j as usize] + step;
    }
    SumPolynomial {
        family: Family::GfP,
        v,
        poly: RationalPolynomial::new(MSQ, coeffs),
    }
}

/// The other characterizations of `p_v`: the table polynomial, the explicit
/// constant term, the explicit sub-leading term, and the sum itself.
pub fn gf_p_checks(v: u32) -> Vec<Check> {
    let p = gf_p_coeffs(v);
    let mut out = Vec::new();
    out.push(Check::exact(
        format!("p_{v} = R_{}", v + 1),
        "p_v equals the table polynomial R_(v+1)",
        || (p.poly.clone(), gf_table_polynomial(v + 1).poly),
    ));
    out.push(Check::exact(
        format!("p_{v},0"),
        "p_(v,0) explicit sum",
        || {
            let scale = pow2(v + 1) / int(factorial(2 * v + 1));
            let sum = (0..=v).fold(Rational::zero(), |acc, j| {
                acc + sym_rat(v + 1, j)
                    * int(factorial(2 * v + 1 - 2 * j))
                    * zeta_even_ratio(v + 1 - j)
            });
            (p.poly.coeff(0), scale * sum)
        },
    ));
    if v >= 1 {
        out.push(Check::exact(
            format!("p_{v},{}", v - 1),
            "p_(v,v-1) with the (v+1) factor",
            || {
                let rhs = pow2(v + 1) * zeta_even_ratio(v + 1)
                    + int(v + 1) * pow2(v - 1) * zeta_even_ratio(v) / int(3);
                (p.poly.coeff(v as usize - 1), rhs)
            },
        ));
    }
    for m in [2u64, 3, 7] {
        out.push(Check::exact(
            format!("p_{v} at m={m}"),
            "S_(m,v+1) = (2m^2)^-(v+1) (m^2-1) p_v(m^2)",
            || {
                let x = msq(m);
                let rhs = (&x - Rational::one()) * p.poly.eval(&x) / pow(&(int(2) * &x), v + 1);
                (gardner_fisher_normalized(m, v + 1), rhs)
            },
        ));
    }
    out
}

/// Coefficients `C^v_i` of `m^(-2i)` in `S_{m,v}`, `i = 0..=v`.
pub fn gf_c_coeffs(v: u32) -> Vec<PiScaled> {
    let pv = 2 * v as i64;
    let mut out: Vec<PiScaled> = (0..v)
        .map(|i| PiScaled::new(c_even(v, i) * zeta_even_ratio(v - i) / pow2(2 * i), pv))
        .collect();
    out.push(PiScaled::new(
        -(c_even(v, v) + Rational::one()) / int(2) / pow2(2 * v),
        pv,
    ));
    out
}

/// Agreement of the two final-coefficient forms, the identities tying
/// `c_{2v,i}` to `s(v,i)`, and the expansion against the sum.
pub fn gf_c_checks(v: u32) -> Vec<Check> {
    let c = gf_c_coeffs(v);
    let mut out = Vec::new();
    out.push(Check::exact(
        format!("C^{v}_{v} forms"),
        "final coefficient: cosecant form vs sum form",
        || {
            let sum_form = Rational::one() / pow2(v)
                - (0..v).fold(Rational::zero(), |acc, i| {
                    acc + pow2(2 * v - 2 * i) * c_even(v, i) * zeta_even_ratio(v - i) / pow2(2 * i)
                });
            (c[v as usize].coeff().clone(), sum_form)
        },
    ));
    out.push(Check::exact(
        format!("weighted c sum v={v}"),
        "sum (4^(v-i) c - 4^i s Gamma/(2v-1)!) ... = 2^v",
        || {
            let lhs = (0..v).fold(Rational::zero(), |acc, i| {
                let first = pow2(2 * v - 2 * i) * c_even(v, i);
                let second = pow2(2 * i) / int(factorial(2 * v - 1))
                    * sym_rat(v, i)
                    * int(factorial(2 * v - 2 * i - 1));
                acc + (first - second) * pow2(2 * v - 2 * i) * zeta_even_ratio(v - i)
            });
            (lhs, pow2(v))
        },
    ));
    out.push(Check::exact(
        format!("s-zeta sum v={v}"),
        "sum s(v,n) Gamma(2v-2n) Z(v-n) = Gamma(2v)(c+1)/2^(2v+1)",
        || {
            let lhs = (0..v).fold(Rational::zero(), |acc, n| {
                acc + sym_rat(v, n) * int(factorial(2 * v - 2 * n - 1)) * zeta_even_ratio(v - n)
            });
            let rhs =
                int(factorial(2 * v - 1)) * (c_even(v, v) + Rational::one()) / pow2(2 * v) / int(2);
            (lhs, rhs)
        },
    ));
    for m in [2u64, 3, 5, 11] {
        out.push(Check::exact(
            format!("C^{v} expansion m={m}"),
            "sum_i C^v_i m^(-2i) = S_(m,v)",
            || {
                let x = msq(m);
                let lhs = c.iter().enumerate().fold(Rational::zero(), |acc, (i, ci)| {
                    acc + ci.coeff() / pow(&x, i as u32)
                });
                (lhs, gardner_fisher_normalized(m, v))
            },
        ));
    }
    out
}

/// `2^(2n+1) a_n`: weight of `m^(2v-2n) - 1` in the Dowker sum.
fn dowker_weight(v: u32, n: u32) -> Rational {
    pow2(2 * n + 1) * gf_weight(v, n)
}

/// `sum_{k=1}^{m-1} csc^(2v)(k pi / m)`.
pub fn dowker(m: u64, v: u32) -> Rational {
    assert!(m >= 1 && v >= 1, "dowker needs m >= 1 and v >= 1");
    let x = msq(m);
    (0..v).fold(Rational::zero(), |acc, n| {
        acc + dowker_weight(v, n) * (pow(&x, v - n) - Rational::one())
    })
}

/// `q_v(x)` with `q_{v,i} = 2^(2v-2i+1) (2i-1)!/(2v-1)! s(v,v-i) Z(i)` for
/// `i >= 1` and `q_{v,0} = -sum_{i>=1} q_{v,i}`.
pub fn dowker_q_coeffs(v: u32) -> SumPolynomial {
    assert!(v >= 1);
    let mut coeffs = vec![Rational::zero(); v as usize + 1];
    for i in 1..=v {
        coeffs[i as usize] = dowker_weight(v, v - i);
    }
    coeffs[0] = -coeffs[1..].iter().fold(Rational::zero(), |acc, c| acc + c);
    SumPolynomial {
        family: Family::DowkerQ,
        v,
        poly: RationalPolynomial::new(MSQ, coeffs),
    }
}

/// `Gamma(v) Gamma(1/2) / Gamma(v + 1/2) / 6`.
fn q_linear_closed(v: u32) -> Rational {
    int(factorial(v - 1)) / gamma_half_over_sqrt_pi(v) / int(6)
}

/// The cosecant forms of `q_{v,i}`, the closed linear and top coefficients,
/// and agreement with the sum at sampled `m`.
pub fn dowker_q_checks(v: u32) -> Vec<Check> {
    let q = dowker_q_coeffs(v);
    let mut out = Vec::new();
    out.push(Check::exact(
        format!("q_{v},0 cosecant form"),
        "q_(v,0) = -2 sum c(2v,n) Z(v-n)",
        || {
            let rhs = -int(2)
                * (0..v).fold(Rational::zero(), |acc, n| {
                    acc + c_even(v, n) * zeta_even_ratio(v - n)
                });
            (q.poly.coeff(0), rhs)
        },
    ));
    for i in 1..=v {
        out.push(Check::exact(
            format!("q_{v},{i} cosecant form"),
            "q_(v,i) = 2 c(2v,v-i) Z(i)",
            || {
                (
                    q.poly.coeff(i as usize),
                    int(2) * c_even(v, v - i) * zeta_even_ratio(i),
                )
            },
        ));
    }
    out.push(Check::exact(
        format!("q_{v},1 gamma form"),
        "q_(v,1) = Gamma(v) Gamma(1/2) / (6 Gamma(v+1/2))",
        || (q.poly.coeff(1), q_linear_closed(v)),
    ));
    out.push(Check::exact(
        format!("q_{v},{v} top"),
        "q_(v,v) = 2 Z(v)",
        || (q.poly.coeff(v as usize), int(2) * zeta_even_ratio(v)),
    ));
    for m in [2u64, 3, 4, 9] {
        out.push(Check::exact(
            format!("q_{v} at m={m}"),
            "q_v(m^2) equals the Dowker sum",
            || (q.poly.eval(&msq(m)), dowker(m, v)),
        ));
    }
    out
}

/// `T_v = q_v / (x - 1)`.
pub fn dowker_table_polynomial(v: u32) -> SumPolynomial {
    let poly = dowker_q_coeffs(v)
        .poly
        .div_exact(&x_minus_one())
        .expect("x - 1 divides q_v");
    SumPolynomial {
        family: Family::DowkerT,
        v,
        poly,
    }
}

/// `q_v` rebuilt from Bernoulli numbers and Nörlund values:
/// `(-1)^(v-1) 4^v/(2v)! sum_n C(2v,2n) B_(2v-2n) B^(2v)_(2n)(v) x^(v-n)`.
pub fn norlund_reconstruction(v: u32) -> RationalPolynomial {
    let pre = sign(v - 1) * pow2(2 * v) / int(factorial(2 * v));
    let mut coeffs = vec![Rational::zero(); v as usize + 1];
    for n in 0..=v {
        let b = norlund_poly_value(2 * v, 2 * n as usize, &int(v));
        coeffs[(v - n) as usize] =
            &pre * int(binomial(2 * v, 2 * n as i64)) * bernoulli_number(2 * v - 2 * n) * b;
    }
    RationalPolynomial::new(MSQ, coeffs)
}

/// Nörlund values `B^(2v)_(2n)(v)` from the generating function against the
/// symmetric-polynomial and cosecant forms, and the reconstruction of `q_v`.
pub fn norlund_identity_check(v_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for v in 1..=v_max {
        for n in 0..=v {
            let gf = norlund_poly_value(2 * v, 2 * n as usize, &int(v));
            let fact = int(factorial(2 * n));
            if n < v {
                out.push(Check::exact(
                    format!("B^({})_{}({v}) symmetric", 2 * v, 2 * n),
                    "Norlund value from s(v,n)",
                    || {
                        (
                            gf.clone(),
                            sign(n) * &fact * gamma_ratio(2 * v - 2 * n, 2 * v) * sym_rat(v, n),
                        )
                    },
                ));
            } else {
                out.push(Check::exact(
                    format!("B^({})_{}({v}) top", 2 * v, 2 * v),
                    "top Norlund value as a zeta sum",
                    || {
                        let sum = (0..v).fold(Rational::zero(), |acc, k| {
                            acc + int(factorial(2 * v - 2 * k - 1))
                                * sym_rat(v, k)
                                * zeta_even_ratio(v - k)
                                / pow2(2 * v - 2 * k)
                        });
                        (gf.clone(), sign(v) * int(4 * v) * sum)
                    },
                ));
            }
            out.push(Check::exact(
                format!("B^({})_{}({v}) cosecant", 2 * v, 2 * n),
                "Norlund value from c(2v,n)",
                || (gf, sign(n) * fact / pow2(2 * n) * c_even(v, n)),
            ));
        }
        out.push(Check::exact(
            format!("q_{v} from Norlund"),
            "Bernoulli-Norlund reconstruction of q_v",
            || (norlund_reconstruction(v), dowker_q_coeffs(v).poly),
        ));
    }
    out
}

fn check_ell(ell: u32) -> Result<()> {
    if ell == 1 || ell == 2 {
        Ok(())
    } else {
        Err(Error::UnsupportedEll(ell))
    }
}

fn check_exponents(v: u32, w: u32) -> Result<()> {
    if v + w == 0 {
        return Err(Error::OutOfRange("v + w must be at least 1".into()));
    }
    Ok(())
}

/// `sum_{k<m} csc^(2u)(k pi/(l m))` as a polynomial in `m^2`, `u >= 1`.
fn csc_power_polynomial(u: u32, ell: u32) -> RationalPolynomial {
    match ell {
        1 => dowker_q_coeffs(u).poly,
        _ => &gf_table_polynomial(u).poly.scale(&pow2(u)) * &x_minus_one(),
    }
}

/// `S^CC_{m,v,w,l}` for `l in {1, 2}`.
pub fn cc_sum(m: u64, v: u32, w: u32, ell: u32) -> Result<Rational> {
    check_ell(ell)?;
    check_exponents(v, w)?;
    if m == 0 {
        return Err(Error::OutOfRange("m must be at least 1".into()));
    }
    let x = msq(m);
    let mut total = Rational::zero();
    for j in 0..=v {
        let u = w + j;
        let inner = if u == 0 {
            int(m - 1)
        } else {
            match ell {
                1 => dowker(m, u),
                _ => pow(&(int(4) * &x), u) * gardner_fisher_normalized(m, u),
            }
        };
        total += sign(v - j) * int(binomial(v, j as i64)) * inner;
    }
    Ok(total)
}

/// `S^CC` as a polynomial in `m^2`, from the table polynomials. `w = 0`
/// has no such form because of the `(m - 1)` term.
pub fn cc_polynomial(v: u32, w: u32, ell: u32) -> Result<RationalPolynomial> {
    check_ell(ell)?;
    check_exponents(v, w)?;
    if w == 0 {
        return Err(Error::NoPolynomialForm);
    }
    let mut total = RationalPolynomial::zero(MSQ);
    for j in 0..=v {
        let weight = sign(v - j) * int(binomial(v, j as i64));
        total = &total + &csc_power_polynomial(w + j, ell).scale(&weight);
    }
    Ok(total)
}

/// The same polynomial assembled from the coefficient families directly:
/// `C^u_i` for `l = 2` and `q_{u,i}` for `l = 1`.
pub fn cc_polynomial_by_coefficients(v: u32, w: u32, ell: u32) -> Result<RationalPolynomial> {
    check_ell(ell)?;
    check_exponents(v, w)?;
    if w == 0 {
        return Err(Error::NoPolynomialForm);
    }
    let mut total = RationalPolynomial::zero(MSQ);
    for j in 0..=v {
        let u = w + j;
        let weight = sign(v - j) * int(binomial(v, j as i64));
        let inner = match ell {
            1 => dowker_q_coeffs(u).poly,
            _ => {
                let c = gf_c_coeffs(u);
                let coeffs = (0..=u)
                    .map(|p| pow2(2 * u) * c[(u - p) as usize].coeff())
                    .collect();
                RationalPolynomial::new(MSQ, coeffs)
            }
        };
        total = &total + &inner.scale(&weight);
    }
    Ok(total)
}

/// `S^TS_{m,v,w,1}` for even `m = 2n`, equal to `2 S^CC_{n,v,w,2}`.
pub fn ts_sum(m: u64, v: u32, w: u32) -> Result<Rational> {
    if m % 2 == 1 {
        return Err(Error::OddModulus(m));
    }
    if m == 0 {
        return Err(Error::OutOfRange(
            "m must be a positive even integer".into(),
        ));
    }
    Ok(int(2) * cc_sum(m / 2, v, w, 2)?)
}

/// `(S_{m,v} - zeta(2v)) 12 m^2 / (v zeta(2v-2))`, exact. The leading
/// correction to `S_{m,v}` is `v pi^2 zeta(2v-2) / (12 m^2)`, so this tends
/// to `pi^2`.
pub fn asymptotic_ratio(m: u64, v: u32) -> PiScaled {
    PiScaled::new(asymptotic_ratio_normalized(m, v), 2)
}

/// `(S_{m,v}/pi^(2v) - Z(v)) 12 m^2 / (v Z(v-1))`, which tends to 1.
pub fn asymptotic_ratio_normalized(m: u64, v: u32) -> Rational {
    assert!(v >= 2);
    let diff = gardner_fisher_normalized(m, v) - zeta_even_ratio(v);
    diff * int(12) * msq(m) / (int(v) * zeta_even_ratio(v - 1))
}

/// `S_{m,1} = (pi^2/6)(1 - 1/m^2)` and
/// `S_{m,2} = (pi^4/90)(1 + 5/(2m^2) - 7/(2m^4))`.
pub fn low_order_checks(m_max: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=m_max {
        let x = msq(m);
        out.push(Check::exact(
            format!("S_({m},1)"),
            "S_(m,1) = (pi^2/6)(1 - 1/m^2)",
            || {
                (
                    gardner_fisher(m, 1),
                    PiScaled::new(rat(1, 6) * (Rational::one() - Rational::one() / &x), 2),
                )
            },
        ));
        out.push(Check::exact(
            format!("S_({m},2)"),
            "S_(m,2) = (pi^4/90)(1 + 5/2m^2 - 7/2m^4)",
            || {
                let r = Rational::one() + rat(5, 2) / &x - rat(7, 2) / (&x * &x);
                (gardner_fisher(m, 2), PiScaled::new(r / int(90), 4))
            },
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn all_pass(checks: Vec<Check>) {
        for c in checks {
            assert_eq!(c.status, Status::Pass, "{}: {} vs {}", c.id, c.lhs, c.rhs);
        }
    }

    #[test]
    fn gardner_fisher_values() {
        assert_eq!(gardner_fisher(2, 1), PiScaled::new(rat(1, 8), 2));
        assert_eq!(gardner_fisher(1, 3), PiScaled::zero());
        // (1/90)(1 + 5/18 - 7/162) = (1/90)(200/162)
        assert_eq!(
            gardner_fisher(3, 2),
            PiScaled::new(rat(1, 90) * rat(200, 162), 4)
        );
        assert_eq!(gardner_fisher(2, 1).to_string(), "pi^2/8");
    }

    #[test]
    fn gf_table_rows() {
        assert_eq!(
            gf_table_polynomial(1).poly,
            RationalPolynomial::constant(MSQ, rat(1, 3))
        );
        assert_eq!(
            gf_table_polynomial(2).poly,
            RationalPolynomial::new(MSQ, vec![rat(14, 90), rat(4, 90)])
        );
        let z6 = zeta_even_ratio(6);
        let printed =
            RationalPolynomial::from_ints(MSQ, &[5710469, 3253469, 1815032, 821182, 262624, 44224])
                .scale(&(z6 / int(691)));
        assert_eq!(gf_table_polynomial(6).poly, printed);
    }

    #[test]
    fn gf_table_matches_sum() {
        for v in 1..=15 {
            let r = gf_table_polynomial(v);
            assert_eq!(r.poly.degree(), Some(v as usize - 1));
            for m in 2..=12u64 {
                let x = msq(m);
                let lhs = gardner_fisher_normalized(m, v) * pow(&(int(2) * &x), v)
                    / (&x - Rational::one());
                assert_eq!(lhs, r.poly.eval(&x));
            }
        }
    }

    #[test]
    fn p_coefficients() {
        assert_eq!(
            gf_p_coeffs(0).poly,
            RationalPolynomial::constant(MSQ, rat(1, 3))
        );
        let p1 = gf_p_coeffs(1).poly;
        assert_eq!(p1.coeff(1), int(4) * zeta_even_ratio(2));
        assert_eq!(p1.coeff(0), int(14) * zeta_even_ratio(2));
        for v in 0..=12 {
            all_pass(gf_p_checks(v));
        }
    }

    #[test]
    fn c_coefficients() {
        assert_eq!(
            gf_c_coeffs(1),
            vec![PiScaled::new(rat(1, 6), 2), PiScaled::new(rat(-1, 6), 2)]
        );
        for v in 1..=12 {
            all_pass(gf_c_checks(v));
        }
    }

    #[test]
    fn dowker_values() {
        assert_eq!(dowker(3, 1), rat(8, 3));
        assert_eq!(dowker(2, 2), int(1));
        assert_eq!(dowker(1, 5), int(0));
    }

    #[test]
    fn q_coefficients() {
        let q = dowker_q_coeffs(2).poly;
        assert_eq!(q.coeff(1), rat(2, 9));
        assert_eq!(q.coeff(2), rat(1, 45));
        assert_eq!(q.coeff(0), rat(-11, 45));
        for v in 1..=15 {
            all_pass(dowker_q_checks(v));
        }
    }

    #[test]
    fn dowker_table_rows() {
        assert_eq!(
            dowker_table_polynomial(1).poly,
            RationalPolynomial::constant(MSQ, rat(1, 3))
        );
        let v3 = RationalPolynomial::from_ints(MSQ, &[191, 23, 2]).scale(&rat(1, 945));
        assert_eq!(dowker_table_polynomial(3).poly, v3);
        let v4 = &RationalPolynomial::from_ints(MSQ, &[11, 1])
            * &RationalPolynomial::from_ints(MSQ, &[227, 10, 3]);
        assert_eq!(
            dowker_table_polynomial(4).poly,
            v4.scale(&(int(2) * zeta_even_ratio(4) / int(3)))
        );
        for v in 1..=15 {
            let t = dowker_table_polynomial(v).poly;
            for m in 2..=12u64 {
                let x = msq(m);
                assert_eq!(dowker(m, v), t.eval(&x) * (&x - Rational::one()));
            }
        }
    }

    #[test]
    fn json_shape() {
        let t = dowker_table_polynomial(3);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"family":"dowker_T","v":3,"var":"msq","coeffs":["191/945","23/945","2/945"]}"#
        );
    }

    #[test]
    fn norlund_identities() {
        all_pass(norlund_identity_check(8));
        assert_eq!(norlund_poly_value(4, 4, &int(2)), rat(11, 30));
    }

    #[test]
    fn cc_small_cases() {
        for m in 1..8u64 {
            assert_eq!(
                cc_sum(m, 0, 1, 1).unwrap(),
                (msq(m) - Rational::one()) / int(3)
            );
        }
        assert_eq!(
            cc_polynomial(0, 1, 1).unwrap(),
            RationalPolynomial::from_ints(MSQ, &[-1, 1]).scale(&rat(1, 3))
        );
        assert_eq!(cc_sum(3, 1, 1, 5), Err(Error::UnsupportedEll(5)));
        assert_eq!(cc_polynomial(2, 0, 1), Err(Error::NoPolynomialForm));
        // cot^2(pi/3) + cot^2(2 pi/3) = 2/3
        assert_eq!(cc_sum(3, 1, 0, 1).unwrap(), rat(2, 3));
    }

    #[test]
    fn cc_routes_agree() {
        for ell in [1, 2] {
            for v in 0..=6 {
                for w in 1..=6 {
                    let a = cc_polynomial(v, w, ell).unwrap();
                    assert_eq!(a, cc_polynomial_by_coefficients(v, w, ell).unwrap());
                    for m in 1..=6u64 {
                        assert_eq!(a.eval(&msq(m)), cc_sum(m, v, w, ell).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn ts_reduction() {
        assert_eq!(ts_sum(6, 0, 1).unwrap(), rat(32, 3));
        assert_eq!(ts_sum(2, 3, 2).unwrap(), int(0));
        assert_eq!(ts_sum(7, 1, 1), Err(Error::OddModulus(7)));
    }

    #[test]
    fn low_order_closed_forms() {
        all_pass(low_order_checks(20));
    }
}
