//! Elementary symmetric polynomials `s(v, n)` of `{1^2, 2^2, ..., (v-1)^2}`.
//!
//! The defining index range runs up to `v - 1` inclusive; otherwise
//! `s(v, v-1) = ((v-1)!)^2` would not hold.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{
    factorial, gamma_ratio, harmonic, int, pochhammer_falling, pochhammer_rising, pow2, rat,
    Rational,
};
use crate::cosecant::gcn_partition_method;
use crate::error::{Error, Result};
use crate::report::Check;

/// Triangular table `s(v, n)`, `1 <= v <= v_max`, `0 <= n <= v - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTable {
    rows: Vec<Vec<BigInt>>,
}

impl SymTable {
    pub fn v_max(&self) -> u32 {
        self.rows.len() as u32
    }

    /// `s(v, n)`, zero outside `0 <= n <= v - 1`.
    pub fn get(&self, v: u32, n: u32) -> BigInt {
        if v == 0 {
            return BigInt::zero();
        }
        self.rows
            .get(v as usize - 1)
            .expect("v beyond table")
            .get(n as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn row(&self, v: u32) -> &[BigInt] {
        &self.rows[v as usize - 1]
    }

    fn extend_to(&mut self, v_max: u32) {
        if self.rows.is_empty() {
            self.rows.push(vec![BigInt::one()]);
        }
        while (self.rows.len() as u32) < v_max {
            // s(n+1, k) = s(n, k) + n^2 s(n, k-1)
            let n = self.rows.len();
            let prev = &self.rows[n - 1];
            let sq = BigInt::from(n * n);
            let row = (0..=n)
                .map(|k| {
                    let keep = prev.get(k).cloned().unwrap_or_else(BigInt::zero);
                    if k == 0 {
                        keep
                    } else {
                        keep + &sq * &prev[k - 1]
                    }
                })
                .collect();
            self.rows.push(row);
        }
    }
}

pub fn sym_table(v_max: u32) -> SymTable {
    let mut t = SymTable { rows: Vec::new() };
    t.extend_to(v_max.max(1));
    t
}

static SHARED: RwLock<SymTable> = RwLock::new(SymTable { rows: Vec::new() });

/// `s(v, n)` from a shared table that grows on demand.
pub fn sym(v: u32, n: u32) -> BigInt {
    if v == 0 {
        return BigInt::zero();
    }
    {
        let t = SHARED.read().expect("symmetric table poisoned");
        if t.v_max() >= v {
            return t.get(v, n);
        }
    }
    let mut t = SHARED.write().expect("symmetric table poisoned");
    t.extend_to(v);
    t.get(v, n)
}

/// `s(v, n)` as a `Rational`.
pub fn sym_rat(v: u32, n: u32) -> Rational {
    int(sym(v, n))
}

/// Brute force over all `n`-subsets of `{1^2, ..., (v-1)^2}`.
pub fn sym_direct(v: u32, n: u32) -> Result<BigInt> {
    if !(1..=14).contains(&v) {
        return Err(Error::OutOfRange(format!(
            "direct enumeration needs 1 <= v <= 14, got {v}"
        )));
    }
    if n >= v {
        return Err(Error::OutOfRange(format!("n = {n} must be below v = {v}")));
    }
    let elems = v - 1;
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << elems) {
        if mask.count_ones() != n {
            continue;
        }
        let prod = (0..elems)
            .filter(|b| mask >> b & 1 == 1)
            .fold(BigInt::one(), |acc, b| {
                let j = b + 1;
                acc * (j * j)
            });
        total += prod;
    }
    Ok(total)
}

/// `s(v, 2)` from the closed form with the rising factorial `(2v - 4)_5`.
pub fn sym_second_closed(v: u32) -> Rational {
    rat(5 * v as i64 + 1, 2880) * pochhammer_rising(&int(2 * v as i64 - 4), 5)
}

/// Closed forms checked against the recurrence table for `v <= v_max`.
pub fn sym_closed_form_checks(v_max: u32) -> Vec<Check> {
    let t = sym_table(v_max);
    let mut out = Vec::new();
    for v in 1..=v_max {
        let fsq = int(factorial(v - 1).pow(2));
        out.push(Check::exact(format!("s({v},0)"), "s(v,0) = 1", || {
            (int(t.get(v, 0)), Rational::one())
        }));
        out.push(Check::exact(
            format!("s({v},{})", v - 1),
            "s(v,v-1) = ((v-1)!)^2",
            || (int(t.get(v, v - 1)), fsq.clone()),
        ));
        if v >= 2 {
            out.push(Check::exact(
                format!("s({v},1)"),
                "s(v,1) = (v-1)v(2v-1)/6",
                || {
                    let v = v as i64;
                    (int(t.get(v as u32, 1)), rat((v - 1) * v * (2 * v - 1), 6))
                },
            ));
            out.push(Check::exact(
                format!("s({v},{})", v - 2),
                "s(v,v-2) = ((v-1)!)^2 H2(v-1)",
                || (int(t.get(v, v - 2)), &fsq * harmonic(2, v - 1)),
            ));
        }
        if v >= 3 {
            out.push(Check::exact(
                format!("s({v},2)"),
                "s(v,2) = (5v+1)/2880 (2v-4)_5 rising",
                || (int(t.get(v, 2)), sym_second_closed(v)),
            ));
            out.push(Check::exact(
                format!("s({v},{})", v - 3),
                "s(v,v-3) = ((v-1)!)^2 (H2^2 - H4)/2",
                || {
                    let h2 = harmonic(2, v - 1);
                    (
                        int(t.get(v, v - 3)),
                        &fsq * (&h2 * &h2 - harmonic(4, v - 1)) / int(2),
                    )
                },
            ));
        }
    }
    out
}

/// The falling-factorial reading of the `s(v, 2)` closed form, kept to show
/// that it does not hold.
pub fn sym_second_closed_falling(v: u32) -> Rational {
    rat(5 * v as i64 + 1, 2880) * pochhammer_falling(&int(2 * v as i64 - 4), 5)
}

/// `c_{2v,i} = 4^i Gamma(2v-2i)/Gamma(2v) s(v,i)` for `i < v`, with the left
/// side taken from the partition-method polynomial.
pub fn bridge_identity_check(v_max: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for v in 1..=v_max {
        for i in 0..v {
            out.push(Check::exact(
                format!("bridge v={v} i={i}"),
                "c(2v,i) from s(v,i)",
                || {
                    let lhs = gcn_partition_method(i).eval(&int(2 * v));
                    let rhs = pow2(2 * i) * gamma_ratio(2 * v - 2 * i, 2 * v) * sym_rat(v, i);
                    (lhs, rhs)
                },
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn table_values() {
        let t = sym_table(6);
        assert_eq!(t.get(3, 1), BigInt::from(5));
        assert_eq!(t.get(2, 1), BigInt::from(1));
        assert_eq!(t.get(4, 2), BigInt::from(49));
        assert_eq!(t.get(5, 2), BigInt::from(273));
        assert_eq!(t.get(4, 7), BigInt::zero());
        assert_eq!(sym(4, 2), BigInt::from(49));
    }

    #[test]
    fn direct_values() {
        assert_eq!(sym_direct(5, 4).unwrap(), BigInt::from(576));
        assert_eq!(sym_direct(5, 0).unwrap(), BigInt::from(1));
        assert_eq!(sym_direct(5, 3).unwrap(), BigInt::from(820));
        assert!(sym_direct(5, 5).is_err());
        assert!(sym_direct(15, 1).is_err());
    }

    #[test]
    fn recurrence_matches_enumeration() {
        let t = sym_table(12);
        for v in 1..=12 {
            for n in 0..v {
                assert_eq!(t.get(v, n), sym_direct(v, n).unwrap(), "s({v},{n})");
            }
        }
    }

    #[test]
    fn entries_grow_with_v() {
        let t = sym_table(21);
        for v in 2..=20 {
            for n in 1..v {
                assert!(t.get(v, n) < t.get(v + 1, n));
                assert!(t.get(v, n) > BigInt::zero());
            }
        }
    }

    #[test]
    fn closed_forms_hold() {
        for c in sym_closed_form_checks(15) {
            assert_eq!(c.status, Status::Pass, "{} {} vs {}", c.id, c.lhs, c.rhs);
        }
    }

    #[test]
    fn rising_reading_is_the_right_one() {
        assert_eq!(sym_second_closed(5), int(273));
        assert_ne!(sym_second_closed_falling(5), int(273));
    }

    #[test]
    fn bridge_identity() {
        for c in bridge_identity_check(12) {
            assert_eq!(c.status, Status::Pass, "{}", c.id);
        }
    }
}
