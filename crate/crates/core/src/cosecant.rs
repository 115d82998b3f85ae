//! Generalized cosecant numbers `c_{rho,k}`, the coefficients of `x^(2k)` in
//! `(x / sin x)^rho`, as exact polynomials in `rho`.
//!
//! Three independent routes are provided: the partition method, series
//! sampling plus interpolation, and the even-index recurrence. A fourth
//! representation through the `C(n, j)` ladder gives `c_{2n,k}` for `k >= n`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{
    bernoulli_number, factorial, gamma_half_over_sqrt_pi, gamma_ratio, int, pochhammer_rising,
    pow2, rat, sign, zeta_even_ratio, Rational,
};
use crate::error::{Error, Result};
use crate::partitions::enumerate_partitions;
use crate::poly::{interpolate, rising_factorial_poly, RationalPolynomial};
use crate::report::Check;
use crate::series::xcsc_series;

pub const RHO: &str = "rho";

/// `c_{rho,k}` as a polynomial in `rho` of degree `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcnPolynomial {
    pub k: u32,
    pub poly: RationalPolynomial,
}

impl GcnPolynomial {
    pub fn eval(&self, rho: &Rational) -> Rational {
        self.poly.eval(rho)
    }

    /// Degree, constant term, leading coefficient and positivity.
    pub fn invariants_hold(&self) -> bool {
        let k = self.k;
        if k == 0 {
            return self.poly == RationalPolynomial::constant(RHO, Rational::one());
        }
        let leading = Rational::new(
            One::one(),
            num_bigint::BigInt::from(6u32).pow(k) * factorial(k),
        );
        self.poly.degree() == Some(k as usize)
            && self.poly.coeff(0).is_zero()
            && self.poly.leading() == leading
            && self.poly.coeffs()[1..].iter().all(|c| c.is_positive())
    }
}

/// Which route produced a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GcnMethod {
    Partition,
    Series,
    Recurrence,
}

pub fn gcn(k: u32, method: GcnMethod) -> GcnPolynomial {
    match method {
        GcnMethod::Partition => gcn_partition_method(k),
        GcnMethod::Series => gcn_by_interpolation(k),
        GcnMethod::Recurrence => gcn_by_even_recurrence(k),
    }
}

static PARTITION_CACHE: RwLock<Option<HashMap<u32, GcnPolynomial>>> = RwLock::new(None);

/// Sum over partitions of `k` of
/// `(-1)^(k+N) (rho)_N prod (1/(2i+1)!)^(n_i) / n_i!`.
pub fn gcn_partition_method(k: u32) -> GcnPolynomial {
    if let Some(p) = PARTITION_CACHE
        .read()
        .expect("gcn cache poisoned")
        .as_ref()
        .and_then(|m| m.get(&k))
    {
        return p.clone();
    }
    let p = partition_method_uncached(k);
    PARTITION_CACHE
        .write()
        .expect("gcn cache poisoned")
        .get_or_insert_with(HashMap::new)
        .insert(k, p.clone());
    p
}

/// Weight of each part size and of each count, with the sign folded in.
pub fn partition_contributions(k: u32) -> Vec<(u32, Rational)> {
    enumerate_partitions(k)
        .map(|p| {
            let n = p.total_parts();
            let weight = p.nonzero().fold(Rational::one(), |acc, (i, c)| {
                acc / int(factorial(2 * i + 1).pow(c)) / int(factorial(c))
            });
            (n, sign(k + n) * weight)
        })
        .collect()
}

fn partition_method_uncached(k: u32) -> GcnPolynomial {
    // Group by N first so each (rho)_N polynomial is built once.
    let mut by_n: Vec<Rational> = vec![Rational::zero(); k as usize + 1];
    for (n, w) in partition_contributions(k) {
        by_n[n as usize] += w;
    }
    let mut poly = RationalPolynomial::zero(RHO);
    for (n, w) in by_n.iter().enumerate().filter(|(_, w)| !w.is_zero()) {
        poly = &poly + &rising_factorial_poly(RHO, n as u32).scale(w);
    }
    GcnPolynomial { k, poly }
}

/// Interpolation through `rho = 0..=k` of the series coefficients.
pub fn gcn_by_interpolation(k: u32) -> GcnPolynomial {
    let base = xcsc_series(k as usize);
    let mut power = crate::series::TruncatedSeries::one(k as usize);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for rho in 0..=k {
        xs.push(int(rho));
        ys.push(power.coeff(k as usize).clone());
        power = power.mul(&base);
    }
    GcnPolynomial {
        k,
        poly: interpolate(RHO, &xs, &ys),
    }
}

/// Interpolation through `rho = 0, 2, ..., 2k` of the even recurrence.
pub fn gcn_by_even_recurrence(k: u32) -> GcnPolynomial {
    let table = gcn_even_recurrence(k.max(1), k);
    let mut xs = vec![Rational::zero()];
    let mut ys = vec![if k == 0 {
        Rational::one()
    } else {
        Rational::zero()
    }];
    for n in 1..=k {
        xs.push(int(2 * n));
        ys.push(table.get(n, k).clone());
    }
    GcnPolynomial {
        k,
        poly: interpolate(RHO, &xs, &ys),
    }
}

/// Table of `c_{2n,k}` for `1 <= n <= n_max`, `0 <= k <= k_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenTable {
    rows: Vec<Vec<Rational>>,
}

impl EvenTable {
    pub fn get(&self, n: u32, k: u32) -> &Rational {
        &self.rows[n as usize - 1][k as usize]
    }
}

/// Seeded with `c_{2,k} = 2(2k-1) Z(k)` and `c_{2n,0} = 1`, then advanced by
/// `c_{2n+2,k+1} = ((2k+2-2n)/(2n)) ((2k+1-2n)/(2n+1)) c_{2n,k+1}
///               + (2n/(2n+1)) c_{2n,k}`.
pub fn gcn_even_recurrence(n_max: u32, k_max: u32) -> EvenTable {
    let first: Vec<Rational> = (0..=k_max)
        .map(|k| {
            if k == 0 {
                Rational::one()
            } else {
                int(2 * (2 * k as i64 - 1)) * zeta_even_ratio(k)
            }
        })
        .collect();
    let mut rows = vec![first];
    for n in 1..n_max as i64 {
        let prev = &rows[n as usize - 1];
        let mut row = vec![Rational::one()];
        for k in 0..k_max as i64 {
            let a = rat(2 * k + 2 - 2 * n, 2 * n) * rat(2 * k + 1 - 2 * n, 2 * n + 1);
            row.push(a * &prev[k as usize + 1] + rat(2 * n, 2 * n + 1) * &prev[k as usize]);
        }
        rows.push(row);
    }
    EvenTable { rows }
}

/// `C(n, j)` for `1 <= n <= n_max`, `0 <= j <= n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CLadder {
    rows: Vec<Vec<Rational>>,
}

impl CLadder {
    /// `C(n, j)`, zero outside the stored triangle.
    pub fn get(&self, n: u32, j: i64) -> Rational {
        if n == 0 || j < 0 {
            return Rational::zero();
        }
        self.rows
            .get(n as usize - 1)
            .and_then(|r| r.get(j as usize))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn n_max(&self) -> u32 {
        self.rows.len() as u32
    }
}

/// `C(1,0) = 2`, `C(n,j) = C(n-1,j) + (n-1)^2/(j-1/2) C(n-1,j-1)`.
pub fn build_c_ladder(n_max: u32) -> CLadder {
    let mut ladder = CLadder {
        rows: vec![vec![int(2)]],
    };
    for n in 2..=n_max {
        let row = (0..n as i64)
            .map(|j| {
                let carry = ladder.get(n - 1, j);
                if j == 0 {
                    carry
                } else {
                    let sq = int((n as i64 - 1).pow(2));
                    carry + sq / rat(2 * j - 1, 2) * ladder.get(n - 1, j - 1)
                }
            })
            .collect();
        ladder.rows.push(row);
    }
    ladder
}

/// `c_{2n,k}` for `k >= n` as a finite sum over the ladder row `C(n, .)`
/// weighted by gamma ratios and `Z(k - j)`.
pub fn gcn_via_c_ladder(ladder: &CLadder, n: u32, k: u32) -> Result<Rational> {
    if n == 0 || k < n {
        return Err(Error::InvalidGammaArgument { n, k });
    }
    if n > ladder.n_max() {
        return Err(Error::OutOfRange(format!(
            "ladder holds n <= {}, asked for {n}",
            ladder.n_max()
        )));
    }
    let g = gamma_half_over_sqrt_pi;
    let mut total = Rational::zero();
    for j in 0..n {
        let term = gamma_ratio(k - j, k - n + 1)
            * (g(k - j) / g(k - n))
            * gamma_ratio(1, n)
            * (g(j) / g(n))
            * ladder.get(n, j as i64)
            * zeta_even_ratio(k - j);
        total += term;
    }
    Ok(total)
}

/// Ordinary cosecant number `c_k = c_{1,k}`, computed from the Bernoulli
/// form and, for `k >= 1`, checked against the zeta form.
pub fn cosecant_number(k: u32) -> Rational {
    let bern =
        sign(k + 1) * (pow2(2 * k) - int(2)) * bernoulli_number(2 * k) / int(factorial(2 * k));
    if k >= 1 {
        let zeta_form =
            int(2) * (Rational::one() - Rational::one() / pow2(2 * k - 1)) * zeta_even_ratio(k);
        assert_eq!(bern, zeta_form, "cosecant number forms disagree at k = {k}");
    }
    bern
}

/// Rising-factorial identities linking the ladder to `c_{2n,2}` and `c_{2n,3}`.
pub fn ladder_identity_checks(n_lo: u32, n_hi: u32) -> Vec<Check> {
    let ladder = build_c_ladder(n_hi);
    let c2 = gcn_partition_method(2);
    let c3 = gcn_partition_method(3);
    let mut out = Vec::new();
    for n in n_lo..=n_hi {
        let ni = n as i64;
        out.push(Check::exact(
            format!("C({n},2) product"),
            "C(n,2) closed product",
            || {
                let prod = rat(
                    ni * (ni - 1) * (ni - 2) * (2 * ni - 1) * (2 * ni - 3) * (5 * ni + 1),
                    135,
                );
                (ladder.get(n, 2), prod)
            },
        ));
        out.push(Check::exact(
            format!("C({n},2) via c(2n,2)"),
            "C(n,2) = (2n-4)_4 c(2n,2)/6",
            || {
                let rhs = pochhammer_rising(&int(2 * ni - 4), 4) * c2.eval(&int(2 * n)) / int(6);
                (ladder.get(n, 2), rhs)
            },
        ));
        out.push(Check::exact(
            format!("C({n},3) via c(2n,3)"),
            "C(n,3) = (2n-6)_6 c(2n,3)/60",
            || {
                let rhs = pochhammer_rising(&int(2 * ni - 6), 6) * c3.eval(&int(2 * n)) / int(60);
                (ladder.get(n, 3), rhs)
            },
        ));
        out.push(Check::exact(
            format!("C({n},1)"),
            "C(n,1) = 4 B_3(n)/3",
            || {
                (
                    ladder.get(n, 1),
                    rat(4, 3) * crate::arith::bernoulli_poly(3, &int(ni)),
                )
            },
        ));
    }
    out
}

/// Even recurrence and ladder against the partition polynomial at `rho = 2n`.
pub fn even_route_checks(n_max: u32, k_max: u32) -> Vec<Check> {
    let table = gcn_even_recurrence(n_max, k_max);
    let ladder = build_c_ladder(n_max);
    let mut out = Vec::new();
    for k in 0..=k_max {
        let p = gcn_partition_method(k);
        for n in 1..=n_max {
            out.push(Check::exact(
                format!("recurrence n={n} k={k}"),
                "even recurrence vs partition method",
                || (table.get(n, k).clone(), p.eval(&int(2 * n))),
            ));
            if k >= n {
                out.push(Check::exact(
                    format!("ladder n={n} k={k}"),
                    "C(n,j) sum vs partition method",
                    || {
                        (
                            gcn_via_c_ladder(&ladder, n, k).expect("k >= n"),
                            p.eval(&int(2 * n)),
                        )
                    },
                ));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use crate::series::gcn_by_series;

    fn poly(coeffs: &[i64], pre: Rational) -> RationalPolynomial {
        RationalPolynomial::from_ints(RHO, coeffs).scale(&pre)
    }

    #[test]
    fn partition_method_rows() {
        assert_eq!(
            gcn_partition_method(0).poly,
            RationalPolynomial::constant(RHO, int(1))
        );
        assert_eq!(gcn_partition_method(1).poly, poly(&[0, 1], rat(1, 6)));
        assert_eq!(gcn_partition_method(2).poly, poly(&[0, 2, 5], rat(2, 720)));
        let pre = rat(4, 3) / int(factorial(12));
        assert_eq!(
            gcn_partition_method(5).poly,
            poly(&[0, 768, 2288, 2684, 1540, 385], pre)
        );
    }

    #[test]
    fn interpolation_rows() {
        assert_eq!(
            gcn_by_interpolation(0).poly,
            RationalPolynomial::constant(RHO, int(1))
        );
        assert_eq!(gcn_by_interpolation(1).poly, poly(&[0, 1], rat(1, 6)));
        let pre = int(8) / int(factorial(9));
        assert_eq!(gcn_by_interpolation(3).poly, poly(&[0, 16, 42, 35], pre));
    }

    #[test]
    fn even_recurrence_values() {
        let t = gcn_even_recurrence(3, 4);
        assert_eq!(t.get(1, 1), &rat(1, 3));
        assert_eq!(t.get(2, 1), &rat(2, 3));
        assert_eq!(t.get(1, 0), &int(1));
        assert_eq!(t.get(2, 2), &rat(11, 45));
    }

    #[test]
    fn three_routes_agree() {
        for k in 0..=12 {
            let a = gcn_partition_method(k);
            assert_eq!(a, gcn_by_interpolation(k), "k={k}");
            assert_eq!(a, gcn_by_even_recurrence(k), "k={k}");
        }
    }

    #[test]
    fn series_matches_polynomial() {
        for k in 0..=12u32 {
            let p = gcn_partition_method(k);
            for rho in 1..=12u32 {
                assert_eq!(p.eval(&int(rho)), gcn_by_series(rho, k as usize));
            }
        }
    }

    #[test]
    fn polynomial_invariants() {
        for k in 0..=15 {
            assert!(gcn_partition_method(k).invariants_hold(), "k={k}");
        }
    }

    #[test]
    fn contribution_signs_follow_part_count() {
        for k in 1..=10 {
            for (n, w) in partition_contributions(k) {
                assert_eq!(w.is_positive(), (k + n) % 2 == 0);
            }
        }
    }

    #[test]
    fn ladder_values() {
        let l = build_c_ladder(10);
        assert_eq!(l.get(1, 0), int(2));
        assert_eq!(l.get(2, 0), int(2));
        assert_eq!(l.get(3, 1), int(20));
        assert_eq!(l.get(4, 2), rat(4 * 3 * 2 * 7 * 5 * 21, 135));
    }

    #[test]
    fn ladder_sum_values() {
        let l = build_c_ladder(6);
        assert_eq!(gcn_via_c_ladder(&l, 1, 2).unwrap(), rat(1, 15));
        assert_eq!(gcn_via_c_ladder(&l, 2, 2).unwrap(), rat(11, 45));
        assert_eq!(gcn_via_c_ladder(&l, 2, 3).unwrap(), rat(62, 945));
        assert_eq!(
            gcn_via_c_ladder(&l, 3, 2),
            Err(Error::InvalidGammaArgument { n: 3, k: 2 })
        );
    }

    #[test]
    fn ordinary_cosecant_numbers() {
        assert_eq!(cosecant_number(0), int(1));
        assert_eq!(cosecant_number(1), rat(1, 6));
        assert_eq!(cosecant_number(2), rat(7, 360));
        for k in 0..=12 {
            assert_eq!(cosecant_number(k), gcn_partition_method(k).eval(&int(1)));
        }
    }

    #[test]
    fn ladder_identities() {
        for c in ladder_identity_checks(4, 10) {
            assert_eq!(c.status, Status::Pass, "{}: {} vs {}", c.id, c.lhs, c.rhs);
        }
    }

    #[test]
    fn falling_reading_does_not_close() {
        let l = build_c_ladder(5);
        let c2 = gcn_partition_method(2).eval(&int(10));
        let falling = crate::arith::pochhammer_falling(&int(6), 4) * &c2 / int(6);
        let rising = pochhammer_rising(&int(6), 4) * &c2 / int(6);
        assert_eq!(l.get(5, 2), rising);
        assert_ne!(l.get(5, 2), falling);
    }

    #[test]
    fn even_routes() {
        for c in even_route_checks(6, 12) {
            assert_eq!(c.status, Status::Pass, "{}", c.id);
        }
    }
}
